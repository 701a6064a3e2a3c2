#include "plk/operad_quotient.hpp"

#include <map>
#include <mutex>

namespace plk {

SpeciesVector prelie_relator() {
  static const SpeciesVector r = parse_combination(
      "((1<2)<3) - (1<(2<3)) - ((1<3)<2) + (1<(3<2))", Signature::prelie());
  return r;
}

SpeciesVector jacobi_relator(const Signature& sig) {
  return parse_combination("[[1,2],3] - [[1,3],2] - [1,[2,3]]", sig);
}

SpeciesVector two_gen_relator() {
  // The pure-Lie terms are pinned by two requirements: the S3-orbit of the
  // relation is two-dimensional, and 1/3 (r - 2 r.(23)) reproduces the
  // bracket-through-bullet relation on the nose. Any Jacobi-orbit shift
  // breaks both while presenting the same quotient.
  static const SpeciesVector r = parse_combination(
      "{{1,2},3} - {1,{2,3}} - {1,[2,3]} - {[1,2],3} - 2 {[1,3],2}"
      " + [1,{2,3}] + [{1,2},3]"
      " + 1/3 [[1,2],3] + 2/3 [[1,3],2] - 1/3 [1,[2,3]]",
      Signature::lie_bullet());
  return r;
}

SpeciesVector bracket_through_bullet_relation() {
  static const SpeciesVector r = parse_combination(
      "{[1,2],3} - {1,[2,3]}"
      " + 1/3 {{1,2},3} + 1/3 {1,{2,3}} - 2/3 {{1,3},2}"
      " + 1/3 [{1,2},3] - 1/3 [1,{2,3}] - 2/3 [{1,3},2]"
      " - 1/3 [1,[2,3]] - 1/3 [[1,2],3]",
      Signature::lie_bullet());
  return r;
}

SpeciesVector symmetrized_two_gen_combination() {
  SpeciesVector r = two_gen_relator();
  SpeciesVector combo = r - act(Perm::transposition(3, 2, 3), r) * Rational(2);
  combo.scale(Rational(1, 3));
  return combo;
}

const Presentation& prelie_presentation() {
  static const Presentation p{"prelie", Signature::prelie(), {prelie_relator()}};
  return p;
}

const Presentation& two_gen_presentation() {
  static const Presentation p{
      "two-gen", Signature::lie_bullet(),
      {jacobi_relator(Signature::lie_bullet()), two_gen_relator()}};
  return p;
}

const Presentation& jacobi_presentation() {
  static const Presentation p{"jacobi", Signature::lie(), {jacobi_relator(Signature::lie())}};
  return p;
}

namespace {

std::vector<Perm> all_perms(int n) {
  std::vector<Label> line(n);
  for (int i = 0; i < n; ++i) line[i] = i + 1;
  std::vector<Perm> out;
  std::sort(line.begin(), line.end());
  do {
    out.push_back(Perm(line));
  } while (std::next_permutation(line.begin(), line.end()));
  return out;
}

// order isomorphism [k] -> target (target sorted)
std::map<Label, Label> order_iso(int k, const std::vector<Label>& target) {
  std::map<Label, Label> m;
  for (int i = 0; i < k; ++i) m[i + 1] = target[i];
  return m;
}

// composite of a relabelled ideal row with a single generator tensor at
// leaf `slot` of the row
SpeciesVector compose_row_into(const Signature& sig, const SpeciesVector& row, Label slot,
                               const TreeTensor& e) {
  const FreeComponent& src = free_component_of(row);
  SpeciesVector out;
  bool first = true;
  for (const auto& [id, c] : row.terms()) {
    auto [t, sign] = substitute_leaf(src.tensors[id], slot, e);
    const FreeComponent& target = free_component(sig, t.labels());
    if (first) {
      out = SpeciesVector(&target.space);
      first = false;
    }
    out.add_term(target.space.id_of(t.str()), c * sign);
  }
  return out;
}

// composite e o_slot row for a generator tensor e containing `slot`
SpeciesVector compose_into_gen(const Signature& sig, const TreeTensor& e, Label slot,
                               const SpeciesVector& row) {
  const FreeComponent& src = free_component_of(row);
  SpeciesVector out;
  bool first = true;
  for (const auto& [id, c] : row.terms()) {
    auto [t, sign] = substitute_leaf(e, slot, src.tensors[id]);
    const FreeComponent& target = free_component(sig, t.labels());
    if (first) {
      out = SpeciesVector(&target.space);
      first = false;
    }
    out.add_term(target.space.id_of(t.str()), c * sign);
  }
  return out;
}

void verify_stability(const Span& span, int n, const std::string& what) {
  for (int i = 1; i < n; ++i) {
    Perm tau = Perm::transposition(n, i, i + 1);
    for (const auto& row : span.rows())
      if (!span.contains(act(tau, row)))
        throw std::logic_error(what + " is not stable under the transposition (" +
                               std::to_string(i) + " " + std::to_string(i + 1) + ")");
  }
}

struct TowerKey {
  std::string presentation;
  int n;
  bool operator<(const TowerKey& o) const {
    return presentation < o.presentation || (presentation == o.presentation && n < o.n);
  }
};

std::mutex g_tower_mutex;
std::map<TowerKey, std::unique_ptr<Span>> g_tower;

const Span& ideal_component_locked(const Presentation& p, int n) {
  auto it = g_tower.find({p.name, n});
  if (it != g_tower.end()) return *it->second;

  const FreeComponent& comp = free_component(p.sig, n);
  auto span = std::make_unique<Span>(&comp.space);

  if (n == 3) {
    for (const SpeciesVector& r : p.relators)
      for (const Perm& sigma : all_perms(3)) span->insert(act(sigma, r));
  } else {
    const Span& prev = ideal_component_locked(p, n - 1);
    std::vector<Label> full(n);
    for (int i = 0; i < n; ++i) full[i] = i + 1;

    // row o_s e over every ordered pair (s, b) of [n]: the row is carried to
    // [n] \ {b} and a generator fills {s, b}
    for (Label s = 1; s <= n; ++s)
      for (Label b = 1; b <= n; ++b) {
        if (s == b) continue;
        std::vector<Label> g_labels;
        for (Label x : full)
          if (x != b) g_labels.push_back(x);
        std::map<Label, Label> iso = order_iso(n - 1, g_labels);
        const auto& pair_basis = enumerate_basis(p.sig, std::vector<Label>{s, b});
        for (const auto& row : prev.rows()) {
          SpeciesVector moved = relabel_vec(iso, row);
          for (const TreeTensor& e : pair_basis)
            span->insert(compose_row_into(p.sig, moved, s, e));
        }
      }

    // e o_slot row over every y in [n]: the row is carried to [n] \ {y} and
    // a generator on {slot, y} consumes it (slot = n+1 is a scratch label)
    const Label slot = n + 1;
    for (Label y = 1; y <= n; ++y) {
      std::vector<Label> g_labels;
      for (Label x : full)
        if (x != y) g_labels.push_back(x);
      std::map<Label, Label> iso = order_iso(n - 1, g_labels);
      const auto& pair_basis = enumerate_basis(p.sig, std::vector<Label>{slot, y});
      for (const auto& row : prev.rows()) {
        SpeciesVector moved = relabel_vec(iso, row);
        for (const TreeTensor& e : pair_basis)
          span->insert(compose_into_gen(p.sig, e, slot, moved));
      }
    }
  }

  verify_stability(*span, n, "ideal component " + p.name + "(" + std::to_string(n) + ")");
  const Span& ref = *span;
  g_tower.emplace(TowerKey{p.name, n}, std::move(span));
  return ref;
}

}  // namespace

const Span& ideal_component(const Presentation& p, int n) {
  if (n < 3) throw std::invalid_argument("ideal components start at arity 3");
  std::lock_guard<std::mutex> lock(g_tower_mutex);
  return ideal_component_locked(p, n);
}

int quotient_dim(const Presentation& p, int n) {
  if (n < 1) throw std::invalid_argument("arity must be positive");
  const FreeComponent& comp = free_component(p.sig, n);
  if (n <= 2) return static_cast<int>(comp.space.dim());
  return static_cast<int>(comp.space.dim() - ideal_component(p, n).dim());
}

SpeciesVector reduce_mod_ideal(const SpeciesVector& v, const Span& ideal) {
  return ideal.reduce(v);
}

int orbit_rank(const SpeciesVector& relator) {
  const FreeComponent& comp = free_component_of(relator);
  if (comp.labels.size() != 3)
    throw std::invalid_argument("orbit_rank expects an arity-3 relator");
  Span span(&comp.space);
  for (const Perm& sigma : all_perms(3)) span.insert(act(sigma, relator));
  return static_cast<int>(span.dim());
}

}  // namespace plk
