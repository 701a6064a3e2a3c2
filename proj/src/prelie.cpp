#include "plk/prelie.hpp"
#include <bit>

#include <algorithm>
#include <mutex>

#include "plk/free_operad.hpp"

namespace plk {

namespace {

std::mutex g_lie_mutex;
std::map<std::vector<Label>, std::vector<TreeTensor>> g_monomials;
std::map<std::vector<Label>, std::vector<SpeciesVector>> g_lie_basis;

std::vector<Label> sorted(const std::vector<Label>& labels) {
  std::vector<Label> ls = labels;
  std::sort(ls.begin(), ls.end());
  return ls;
}

// order isomorphism {1..k} -> target
std::map<Label, Label> order_iso(const std::vector<Label>& target) {
  std::map<Label, Label> m;
  for (std::size_t i = 0; i < target.size(); ++i) m[static_cast<Label>(i + 1)] = target[i];
  return m;
}

}  // namespace

const std::vector<TreeTensor>& left_normed_monomials(const std::vector<Label>& labels) {
  std::vector<Label> ls = sorted(labels);
  if (ls.empty()) throw std::invalid_argument("empty label set");

  std::lock_guard<std::mutex> lock(g_lie_mutex);
  auto it = g_monomials.find(ls);
  if (it != g_monomials.end()) return it->second;

  std::vector<TreeTensor> out;
  std::vector<Label> rest(ls.begin() + 1, ls.end());
  std::sort(rest.begin(), rest.end());
  do {
    TreeTensor t = TreeTensor::leaf(ls[0]);
    for (Label x : rest) {
      int sign = 1;
      t = TreeTensor::node(Gen::bracket, t, TreeTensor::leaf(x), sign);
      // t always holds the least label, so no swap ever happens
    }
    out.push_back(std::move(t));
  } while (std::next_permutation(rest.begin(), rest.end()));
  std::sort(out.begin(), out.end());
  return g_monomials.emplace(std::move(ls), std::move(out)).first->second;
}

const std::vector<SpeciesVector>& lie_basis(const std::vector<Label>& labels) {
  std::vector<Label> ls = sorted(labels);
  const std::vector<TreeTensor>& monos = left_normed_monomials(ls);

  std::lock_guard<std::mutex> lock(g_lie_mutex);
  auto it = g_lie_basis.find(ls);
  if (it != g_lie_basis.end()) return it->second;

  std::vector<SpeciesVector> out;
  Span rank_check(&tree_component(ls).space);
  for (const TreeTensor& m : monos) {
    SpeciesVector v = eval_tensor(m);
    if (rank_check.insert(v).zero())
      throw std::logic_error("left-normed monomials are not independent on the given labels");
    out.push_back(std::move(v));
  }
  return g_lie_basis.emplace(std::move(ls), std::move(out)).first->second;
}

namespace {

// Unordered 2-block splittings of `labels`, the first block holding the
// least label.
std::vector<std::pair<std::vector<Label>, std::vector<Label>>> two_block_splits(
    const std::vector<Label>& labels) {
  std::vector<std::pair<std::vector<Label>, std::vector<Label>>> out;
  const std::size_t n = labels.size();
  for (unsigned mask = 1; mask + 1 < (1u << n); ++mask) {
    if (!(mask & 1u)) continue;
    std::vector<Label> a, b;
    for (std::size_t i = 0; i < n; ++i)
      ((mask >> i) & 1u ? a : b).push_back(labels[i]);
    out.emplace_back(std::move(a), std::move(b));
  }
  return out;
}

void insert_y_generators(Span& span, const std::vector<Label>& labels) {
  for (const auto& [a, b] : two_block_splits(labels)) {
    for (const SpeciesVector& l : lie_basis(a)) {
      for (const SpeciesVector& lp : lie_basis(b)) {
        if (span.full()) return;
        span.insert(bullet_product(l, lp));
      }
    }
  }
}

// Rows spanning `s`, preferring the unit basis when the span is full; keeps
// downstream generators sparse.
std::vector<SpeciesVector> spanning_rows(const Span& s) {
  if (s.full()) {
    std::vector<SpeciesVector> rows;
    rows.reserve(s.ambient()->dim());
    for (KeyId id = 0; id < s.ambient()->dim(); ++id)
      rows.push_back(SpeciesVector::unit(s.ambient(), id, 1));
    return rows;
  }
  return s.rows();
}

}  // namespace

Span y_span(int n) {
  if (n < 2) throw std::invalid_argument("y_span needs arity >= 2");
  const TreeComponent& comp = tree_component(n);
  Span span(&comp.space);
  insert_y_generators(span, comp.labels);
  return span;
}

std::map<int, Span> suboperad_closure(int n_max) {
  if (n_max < 2) throw std::invalid_argument("suboperad closure needs n_max >= 2");
  std::map<int, Span> P;
  for (int n = 2; n <= n_max; ++n) {
    const TreeComponent& comp = tree_component(n);
    Span span(&comp.space);
    insert_y_generators(span, comp.labels);

    // compositions P(k) o_s P(m) over every m-subset B (the inner block) and
    // the slot s = min(B); the outer rows live on ([n] \ B) + {s}
    for (int m = 2; m <= n - 1; ++m) {
      int k = n - m + 1;
      if (k < 2) continue;
      std::vector<Label> full = comp.labels;
      for (unsigned mask = 0; mask < (1u << n); ++mask) {
        if (std::popcount(mask) != m) continue;
        std::vector<Label> inner, outer_rest;
        for (int i = 0; i < n; ++i)
          ((mask >> i) & 1u ? inner : outer_rest).push_back(full[i]);
        Label slot = inner.front();  // least label of the inner block
        std::vector<Label> outer = outer_rest;
        outer.push_back(slot);
        std::sort(outer.begin(), outer.end());

        std::map<Label, Label> iso_outer = order_iso(outer);
        std::map<Label, Label> iso_inner = order_iso(inner);
        std::vector<SpeciesVector> outer_rows, inner_rows;
        for (const auto& r : spanning_rows(P.at(k)))
          outer_rows.push_back(relabel_trees(iso_outer, r));
        for (const auto& r : spanning_rows(P.at(m)))
          inner_rows.push_back(relabel_trees(iso_inner, r));
        for (const auto& u : outer_rows) {
          for (const auto& v : inner_rows) {
            if (span.full()) break;
            span.insert(graft_compose_vec(u, slot, v));
          }
        }
      }
    }
    P.emplace(n, std::move(span));
  }
  return P;
}

std::map<int, Span> lie_module_closure(const std::map<int, Span>& suboperad, int n_max) {
  if (n_max < 1) throw std::invalid_argument("module closure needs n_max >= 1");
  std::map<int, Span> M;
  {
    const TreeComponent& c1 = tree_component(1);
    Span unit(&c1.space);
    unit.insert(c1.vec(RootedTree::singleton(1)));
    M.emplace(1, std::move(unit));
  }
  for (int n = 2; n <= n_max; ++n) {
    const TreeComponent& comp = tree_component(n);
    Span span(&comp.space);

    // brackets [M(a), M(b)] over all unordered 2-block splittings
    for (const auto& [a, b] : two_block_splits(comp.labels)) {
      std::map<Label, Label> iso_a = order_iso(a);
      std::map<Label, Label> iso_b = order_iso(b);
      std::vector<SpeciesVector> rows_a, rows_b;
      for (const auto& r : spanning_rows(M.at(static_cast<int>(a.size()))))
        rows_a.push_back(relabel_trees(iso_a, r));
      for (const auto& r : spanning_rows(M.at(static_cast<int>(b.size()))))
        rows_b.push_back(relabel_trees(iso_b, r));
      for (const auto& x : rows_a) {
        for (const auto& y : rows_b) {
          if (span.full()) break;
          span.insert(bracket_product(x, y));
        }
      }
    }

    // the suboperad sits inside the module
    auto it = suboperad.find(n);
    if (it == suboperad.end())
      throw std::invalid_argument("suboperad closure missing arity " + std::to_string(n));
    for (const auto& r : it->second.rows()) {
      if (span.full()) break;
      span.insert(r);
    }
    M.emplace(n, std::move(span));
  }
  return M;
}

Span filtration_span(int n, int level) {
  if (n < 1 || level < 1) throw std::invalid_argument("filtration_span needs n, level >= 1");
  const TreeComponent& target = tree_component(n);
  Span span(&target.space);
  const FreeComponent& free2 = free_component(Signature::lie_bullet(), n);
  for (const TreeTensor& t : free2.tensors)
    if (weight(t) >= level) span.insert(eval_tensor(t));
  return span;
}

bool gr_relation_check() {
  Span f2 = filtration_span(3, 2);
  Span f3 = filtration_span(3, 3);
  SpeciesVector lhs = eval_tensor(parse_tensor("{[1,2],3}").first);
  SpeciesVector rhs = eval_tensor(parse_tensor("{1,[2,3]}").first);
  bool diff_in_f3 = f3.contains(lhs - rhs);
  bool lhs_not_in_f3 = !f3.contains(lhs);
  bool lhs_in_f2 = f2.contains(lhs);
  return diff_in_f3 && lhs_not_in_f3 && lhs_in_f2;
}

}  // namespace plk
