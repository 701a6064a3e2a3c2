#include "plk/cyclic_lie.hpp"

#include <algorithm>
#include <mutex>

#include "plk/operad_quotient.hpp"
#include "plk/prelie.hpp"

namespace plk {

LieCoords::LieCoords(std::vector<Label> ls, const FreeComponent* c, std::vector<TreeTensor> ms,
                     std::vector<std::string> keys)
    : labels(std::move(ls)),
      comp(c),
      monomials(std::move(ms)),
      coords("Lie(" + c->space.name() + ")", std::move(keys)),
      jacobi_(&c->space),
      solver_(&c->space) {
  // Jacobi ideal component, carried onto this label set
  const int k = static_cast<int>(labels.size());
  if (k >= 3) {
    const Span& ideal = ideal_component(jacobi_presentation(), k);
    std::map<Label, Label> iso;
    for (int i = 0; i < k; ++i) iso[i + 1] = labels[i];
    for (const auto& row : ideal.rows()) jacobi_.insert(relabel_vec(iso, row));
  }

  // residues of the monomials with coordinate tracking
  for (std::size_t m = 0; m < monomials.size(); ++m) {
    SpeciesVector raw = comp->vec(monomials[m]);
    std::vector<std::pair<std::size_t, Rational>> expr;
    SpeciesVector res = solver_.reduce(jacobi_.reduce(raw), &expr);
    if (res.zero())
      throw std::logic_error("left-normed monomials are dependent modulo Jacobi on " +
                             comp->space.name());
    std::vector<Rational> cs(monomials.size(), 0);
    cs[m] = 1;
    for (const auto& [j, c] : expr)
      for (std::size_t i = 0; i < cs.size(); ++i) cs[i] -= c * row_coords_[j][i];
    Rational lead = res.lead_coeff();
    for (auto& x : cs) x /= lead;
    solver_.insert(res);
    row_coords_.push_back(std::move(cs));
  }
}

SpeciesVector LieCoords::rewrite(const SpeciesVector& v) const {
  std::vector<std::pair<std::size_t, Rational>> expr;
  SpeciesVector rem = solver_.reduce(jacobi_.reduce(v), &expr);
  if (!rem.zero())
    throw std::logic_error("bracket expression is not a Lie combination on " +
                           comp->space.name());
  std::vector<Rational> cs(monomials.size(), 0);
  for (const auto& [j, c] : expr)
    for (std::size_t i = 0; i < cs.size(); ++i) cs[i] += c * row_coords_[j][i];
  SpeciesVector out(&coords);
  for (std::size_t i = 0; i < cs.size(); ++i)
    if (cs[i] != 0) out.add_term(static_cast<KeyId>(i), cs[i]);
  return out;
}

SpeciesVector LieCoords::rewrite_tensor(const TreeTensor& t, const Rational& c) const {
  return rewrite(comp->vec(t, c));
}

SpeciesVector LieCoords::expand(const SpeciesVector& coords_vec) const {
  SpeciesVector out(&comp->space);
  for (const auto& [id, c] : coords_vec.terms())
    out.add_term(comp->space.id_of(monomials[id].str()), c);
  return out;
}

namespace {

std::mutex g_lc_mutex;
std::map<std::vector<Label>, std::unique_ptr<LieCoords>> g_lc_cache;

}  // namespace

const LieCoords& lie_coords(const std::vector<Label>& labels) {
  std::vector<Label> ls = labels;
  std::sort(ls.begin(), ls.end());
  if (ls.empty()) throw std::invalid_argument("empty label set");

  std::lock_guard<std::mutex> lock(g_lc_mutex);
  auto it = g_lc_cache.find(ls);
  if (it != g_lc_cache.end()) return *it->second;

  const FreeComponent& comp = free_component(Signature::lie(), ls);
  std::vector<TreeTensor> monos = left_normed_monomials(ls);  // already sorted
  std::vector<std::string> keys;
  keys.reserve(monos.size());
  for (const auto& m : monos) keys.push_back(m.str());

  auto lc = std::make_unique<LieCoords>(ls, &comp, std::move(monos), std::move(keys));
  const LieCoords& ref = *lc;
  g_lc_cache.emplace(std::move(ls), std::move(lc));
  return ref;
}

namespace {

std::string symbol_key(const std::string& left, const std::string& right) {
  return "(" + left + "|" + right + ")";
}

// ordered splits of {1..n} into `parts` nonempty blocks
void block_splits(int n, int parts, std::vector<std::vector<std::vector<Label>>>& out) {
  std::vector<std::vector<Label>> blocks(parts);
  auto rec = [&](auto&& self, int v) -> void {
    if (v > n) {
      for (const auto& b : blocks)
        if (b.empty()) return;
      out.push_back(blocks);
      return;
    }
    for (int b = 0; b < parts; ++b) {
      blocks[b].push_back(v);
      self(self, v + 1);
      blocks[b].pop_back();
    }
  };
  rec(rec, 1);
}

}  // namespace

std::unique_ptr<BasisSpace> CLComponent::build_ambient(int n, std::vector<Symbol>& symbols) {
  if (n < 2) throw std::invalid_argument("cyclic Lie components start at arity 2");

  // ambient: symmetric pairs of Lie monomials over unordered 2-block splits
  std::vector<std::vector<std::vector<Label>>> splits2;
  block_splits(n, 2, splits2);
  std::vector<std::pair<std::string, Symbol>> keyed;
  for (const auto& blocks : splits2) {
    const auto& a = blocks[0];
    const auto& b = blocks[1];
    if (a[0] != 1) continue;  // orient: least label on the left
    const LieCoords& la = lie_coords(a);
    const LieCoords& lb = lie_coords(b);
    for (KeyId ia = 0; ia < la.coords.dim(); ++ia)
      for (KeyId ib = 0; ib < lb.coords.dim(); ++ib)
        keyed.emplace_back(symbol_key(la.coords.key(ia), lb.coords.key(ib)),
                           Symbol{a, b, ia, ib});
  }
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  std::vector<std::string> keys;
  keys.reserve(keyed.size());
  for (auto& [k, s] : keyed) {
    keys.push_back(k);
    symbols.push_back(std::move(s));
  }
  return std::make_unique<BasisSpace>("CL(" + std::to_string(n) + ")", std::move(keys));
}

CLComponent::CLComponent(int n)
    : n_(n), ambient_(build_ambient(n, symbols_)), relations_(ambient_.get()) {
  // invariance relation on Lie basis elements over ordered 3-block splits
  std::vector<std::vector<std::vector<Label>>> splits3;
  block_splits(n, 3, splits3);
  for (const auto& blocks : splits3) {
    const auto& a = blocks[0];
    const auto& b = blocks[1];
    const auto& c = blocks[2];
    std::vector<Label> ab = a, bc = b;
    ab.insert(ab.end(), b.begin(), b.end());
    std::sort(ab.begin(), ab.end());
    bc.insert(bc.end(), c.begin(), c.end());
    std::sort(bc.begin(), bc.end());
    const LieCoords& lab = lie_coords(ab);
    const LieCoords& lbc = lie_coords(bc);
    const LieCoords& la = lie_coords(a);
    const LieCoords& lb = lie_coords(b);
    const LieCoords& lc = lie_coords(c);

    for (const TreeTensor& m1 : la.monomials)
      for (const TreeTensor& m2 : lb.monomials)
        for (const TreeTensor& m3 : lc.monomials) {
          int s12 = 1, s23 = 1;
          TreeTensor t12 = TreeTensor::node(Gen::bracket, m1, m2, s12);
          TreeTensor t23 = TreeTensor::node(Gen::bracket, m2, m3, s23);
          SpeciesVector lhs = symbol_vec(ab, lab.rewrite_tensor(t12, s12), c,
                                         lc.rewrite_tensor(m3));
          SpeciesVector rhs = symbol_vec(a, la.rewrite_tensor(m1), bc,
                                         lbc.rewrite_tensor(t23, s23));
          relations_.insert(lhs - rhs);
        }
  }
}

SpeciesVector CLComponent::symbol_vec(const std::vector<Label>& block_a,
                                      const SpeciesVector& coords_a,
                                      const std::vector<Label>& block_b,
                                      const SpeciesVector& coords_b) const {
  const bool a_left = block_a[0] < block_b[0];
  const LieCoords& la = lie_coords(block_a);
  const LieCoords& lb = lie_coords(block_b);
  SpeciesVector out(ambient_.get());
  for (const auto& [ia, ca] : coords_a.terms())
    for (const auto& [ib, cb] : coords_b.terms()) {
      std::string key = a_left ? symbol_key(la.coords.key(ia), lb.coords.key(ib))
                               : symbol_key(lb.coords.key(ib), la.coords.key(ia));
      out.add_term(ambient_->id_of(key), ca * cb);
    }
  return out;
}

SpeciesVector CLComponent::key_image(KeyId id, const Perm& sigma) const {
  const Symbol& s = symbols_[id];
  std::map<Label, Label> images;
  for (int x = 1; x <= n_; ++x) images[x] = sigma(x);
  std::vector<Label> sa, sb;
  for (Label x : s.left_block) sa.push_back(sigma(x));
  for (Label x : s.right_block) sb.push_back(sigma(x));
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());

  const LieCoords& la = lie_coords(s.left_block);
  const LieCoords& lb = lie_coords(s.right_block);
  auto [ta, sign_a] = relabel(la.monomials[s.left_mono], images);
  auto [tb, sign_b] = relabel(lb.monomials[s.right_mono], images);
  SpeciesVector ca = lie_coords(sa).rewrite_tensor(ta, sign_a);
  SpeciesVector cb = lie_coords(sb).rewrite_tensor(tb, sign_b);
  return symbol_vec(sa, ca, sb, cb);
}

Rational CLComponent::character(const Perm& sigma) const {
  if (sigma.n() != n_) throw std::invalid_argument("permutation size mismatch");
  Rational ambient_trace = 0;
  for (KeyId id = 0; id < ambient_->dim(); ++id)
    ambient_trace += key_image(id, sigma).coeff(id);
  Rational relation_trace =
      relations_.character([&](KeyId id) { return key_image(id, sigma); });
  return ambient_trace - relation_trace;
}

namespace {

std::mutex g_cl_mutex;
std::map<int, std::unique_ptr<CLComponent>> g_cl_cache;

}  // namespace

const CLComponent& cl_component(int n) {
  std::lock_guard<std::mutex> lock(g_cl_mutex);
  auto it = g_cl_cache.find(n);
  if (it != g_cl_cache.end()) return *it->second;
  auto comp = std::make_unique<CLComponent>(n);
  const CLComponent& ref = *comp;
  g_cl_cache.emplace(n, std::move(comp));
  return ref;
}

}  // namespace plk
