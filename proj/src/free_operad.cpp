#include "plk/free_operad.hpp"

#include <algorithm>
#include <cctype>
#include <mutex>
#include <numeric>

namespace plk {

std::string FreeComponent::make_name(const Signature& s, const std::vector<Label>& ls) {
  std::string name = "T" + s.str() + "(";
  for (std::size_t i = 0; i < ls.size(); ++i) {
    if (i) name += ",";
    name += std::to_string(ls[i]);
  }
  return name + ")";
}

namespace {

// All nonempty proper subsets of `labels` as (subset, complement) pairs.
// When `fix_first` is set only subsets containing labels[0] are produced,
// which enumerates unordered splits once.
void splits(const std::vector<Label>& labels, bool fix_first,
            std::vector<std::pair<std::vector<Label>, std::vector<Label>>>& out) {
  const std::size_t n = labels.size();
  for (unsigned mask = 1; mask + 1 < (1u << n); ++mask) {
    if (fix_first && !(mask & 1u)) continue;
    std::vector<Label> a, b;
    for (std::size_t i = 0; i < n; ++i)
      ((mask >> i) & 1u ? a : b).push_back(labels[i]);
    out.emplace_back(std::move(a), std::move(b));
  }
}

std::vector<TreeTensor> enumerate_rec(const Signature& sig, const std::vector<Label>& labels) {
  if (labels.empty()) throw std::invalid_argument("empty label set");
  if (labels.size() == 1) return {TreeTensor::leaf(labels[0])};

  std::vector<TreeTensor> out;
  std::vector<std::pair<std::vector<Label>, std::vector<Label>>> unordered, ordered;
  splits(labels, true, unordered);
  for (Gen g : sig.generators()) {
    const bool sym = symmetry(g) != Sym::none;
    auto& ss = sym ? unordered : ordered;
    if (!sym && ordered.empty()) splits(labels, false, ordered);
    for (const auto& [a, b] : ss) {
      const auto ta = enumerate_rec(sig, a);
      const auto tb = enumerate_rec(sig, b);
      for (const auto& x : ta)
        for (const auto& y : tb) {
          int sign = 1;
          TreeTensor t = TreeTensor::node(g, x, y, sign);
          // x contains the least label (or the split is ordered), so the
          // constructor never swaps
          out.push_back(std::move(t));
        }
    }
  }
  return out;
}

std::mutex g_free_mutex;
std::map<std::pair<unsigned, std::vector<Label>>, std::unique_ptr<FreeComponent>> g_free_cache;
std::unordered_map<const BasisSpace*, const FreeComponent*> g_space_to_comp;

}  // namespace

const FreeComponent& free_component(const Signature& sig, const std::vector<Label>& labels) {
  std::vector<Label> ls = labels;
  std::sort(ls.begin(), ls.end());
  if (ls.empty()) throw std::invalid_argument("empty label set");
  if (std::adjacent_find(ls.begin(), ls.end()) != ls.end())
    throw std::invalid_argument("repeated label in component label set");

  std::lock_guard<std::mutex> lock(g_free_mutex);
  auto key = std::make_pair(sig.mask(), ls);
  auto it = g_free_cache.find(key);
  if (it != g_free_cache.end()) return *it->second;

  std::vector<TreeTensor> tensors = enumerate_rec(sig, ls);
  std::sort(tensors.begin(), tensors.end());
  std::vector<std::string> keys;
  keys.reserve(tensors.size());
  for (const auto& t : tensors) keys.push_back(t.str());

  auto comp = std::make_unique<FreeComponent>(sig, ls, std::move(tensors), std::move(keys));
  const FreeComponent& ref = *comp;
  g_space_to_comp.emplace(&ref.space, &ref);
  g_free_cache.emplace(std::move(key), std::move(comp));
  return ref;
}

const FreeComponent& free_component_of(const SpeciesVector& v) {
  std::lock_guard<std::mutex> lock(g_free_mutex);
  auto it = g_space_to_comp.find(v.space());
  if (it == g_space_to_comp.end())
    throw std::invalid_argument("vector does not live in a free-operad component");
  return *it->second;
}

namespace {

// Rebuilds T with leaf i replaced by S, accumulating canonicalization signs.
// Returns an empty tensor when i does not occur below this node.
TreeTensor substitute_rec(const TreeTensor& t, Label i, const TreeTensor& S, int& sign,
                          bool& found) {
  if (t.is_leaf()) {
    if (t.leaf_label() == i) {
      found = true;
      return S;
    }
    return t;
  }
  bool f_left = false, f_right = false;
  TreeTensor l = substitute_rec(t.left(), i, S, sign, f_left);
  TreeTensor r = f_left ? t.right() : substitute_rec(t.right(), i, S, sign, f_right);
  found = f_left || f_right;
  if (!found) return t;
  return TreeTensor::node(t.gen(), l, r, sign);
}

}  // namespace

std::pair<TreeTensor, int> substitute_leaf(const TreeTensor& T, Label i, const TreeTensor& S) {
  if (!T.has_label(i))
    throw std::invalid_argument("composition point " + std::to_string(i) +
                                " is not a leaf of " + T.str());
  // disjointness: labels of T minus {i} vs labels of S
  std::vector<Label> lt = T.labels(), ls = S.labels();
  for (Label l : lt)
    if (l != i && std::binary_search(ls.begin(), ls.end(), l))
      throw std::invalid_argument("label clash composing " + T.str() + " at " +
                                  std::to_string(i) + " with " + S.str());
  int sign = 1;
  bool found = false;
  TreeTensor out = substitute_rec(T, i, S, sign, found);
  return {out, sign};
}

std::pair<TreeTensor, int> relabel(const TreeTensor& T, const std::map<Label, Label>& images) {
  int sign = 1;
  auto rec = [&](auto&& self, const TreeTensor& t) -> TreeTensor {
    if (t.is_leaf()) {
      auto it = images.find(t.leaf_label());
      if (it == images.end())
        throw std::invalid_argument("relabelling map misses label " +
                                    std::to_string(t.leaf_label()));
      return TreeTensor::leaf(it->second);
    }
    TreeTensor l = self(self, t.left());
    TreeTensor r = self(self, t.right());
    return TreeTensor::node(t.gen(), l, r, sign);
  };
  TreeTensor out = rec(rec, T);
  std::vector<Label> check = out.labels();
  if (std::adjacent_find(check.begin(), check.end()) != check.end())
    throw std::invalid_argument("relabelling map is not injective on " + T.str());
  return {out, sign};
}

SpeciesVector partial_compose(const Signature& sig, const TreeTensor& T, Label i,
                              const TreeTensor& S) {
  auto [t, sign] = substitute_leaf(T, i, S);
  const FreeComponent& comp = free_component(sig, t.labels());
  return comp.vec(t, sign);
}

SpeciesVector full_compose(const Signature& sig, const TreeTensor& S,
                           const std::vector<SpeciesVector>& parts) {
  std::vector<Label> slots = S.labels();
  if (slots.size() != parts.size())
    throw std::invalid_argument("arity mismatch: " + S.str() + " has " +
                                std::to_string(slots.size()) + " slots, got " +
                                std::to_string(parts.size()) + " parts");

  std::vector<Label> target_labels;
  for (const auto& p : parts) {
    const FreeComponent& pc = free_component_of(p);
    target_labels.insert(target_labels.end(), pc.labels.begin(), pc.labels.end());
  }
  std::sort(target_labels.begin(), target_labels.end());
  if (std::adjacent_find(target_labels.begin(), target_labels.end()) != target_labels.end())
    throw std::invalid_argument("full_compose parts must have pairwise disjoint labels");
  const FreeComponent& target = free_component(sig, target_labels);

  // expand multilinearly, substituting one slot at a time
  std::vector<std::pair<TreeTensor, Rational>> terms{{S, Rational(1)}};
  for (std::size_t k = 0; k < parts.size(); ++k) {
    if (parts[k].zero()) return SpeciesVector(&target.space);
    const FreeComponent& pc = free_component_of(parts[k]);
    std::vector<std::pair<TreeTensor, Rational>> next;
    next.reserve(terms.size() * parts[k].size());
    for (const auto& [t, c] : terms)
      for (const auto& [id, d] : parts[k].terms()) {
        auto [u, sign] = substitute_leaf(t, slots[k], pc.tensors[id]);
        next.emplace_back(u, c * d * sign);
      }
    terms = std::move(next);
  }

  SpeciesVector out(&target.space);
  for (const auto& [t, c] : terms) out.add_term(target.space.id_of(t.str()), c);
  return out;
}

SpeciesVector relabel_vec(const std::map<Label, Label>& images, const SpeciesVector& v) {
  if (v.zero()) return v;
  const FreeComponent& src = free_component_of(v);
  std::vector<Label> target_labels;
  for (Label l : src.labels) {
    auto it = images.find(l);
    if (it == images.end())
      throw std::invalid_argument("relabelling map misses label " + std::to_string(l));
    target_labels.push_back(it->second);
  }
  const FreeComponent& dst = free_component(src.sig, target_labels);
  SpeciesVector out(&dst.space);
  for (const auto& [id, c] : v.terms()) {
    auto [t, sign] = relabel(src.tensors[id], images);
    out.add_term(dst.space.id_of(t.str()), c * sign);
  }
  return out;
}

SpeciesVector act(const Perm& sigma, const SpeciesVector& v) {
  if (v.zero()) return v;
  std::map<Label, Label> images;
  for (int x = 1; x <= sigma.n(); ++x) images[x] = sigma(x);
  return relabel_vec(images, v);
}

// --- factorizations ----------------------------------------------------------

namespace {

// Walks the maximal bracket-only subtree at the root; everything hanging off
// it (a leaf or a bullet/prelie-rooted subtree) becomes a part whose least
// label doubles as the slot label in S.
TreeTensor skeleton_rec(const TreeTensor& t, std::vector<TreeTensor>& parts, int& sign) {
  if (!t.is_leaf() && t.gen() == Gen::bracket) {
    TreeTensor l = skeleton_rec(t.left(), parts, sign);
    TreeTensor r = skeleton_rec(t.right(), parts, sign);
    return TreeTensor::node(Gen::bracket, l, r, sign);
  }
  parts.push_back(t);
  return TreeTensor::leaf(t.min_label());
}

}  // namespace

Factorization gamma_factorize(const TreeTensor& T) {
  Factorization f;
  int sign = 1;
  f.S = skeleton_rec(T, f.parts, sign);
  // slot labels are the parts' min labels, so rebuilding S never reorders
  // children relative to T and the sign stays +1
  std::sort(f.parts.begin(), f.parts.end(),
            [](const TreeTensor& a, const TreeTensor& b) { return a.min_label() < b.min_label(); });
  return f;
}

int weight(const TreeTensor& T) {
  int bullets = 0;
  auto count = [&](auto&& self, const TreeTensor& t) -> void {
    if (t.is_leaf()) return;
    if (t.gen() == Gen::bullet) ++bullets;
    self(self, t.left());
    self(self, t.right());
  };
  count(count, T);
  return gamma_factorize(T).p() + bullets;
}

namespace {

// Copies t downward, cutting at bullet vertices strictly below the piece
// root; each cut subtree is queued and replaced by a leaf with its least
// label.
TreeTensor cut_body(const TreeTensor& t, std::vector<TreeTensor>& queue, int& sign) {
  if (t.is_leaf()) return t;
  if (t.gen() == Gen::bullet) {
    queue.push_back(t);
    return TreeTensor::leaf(t.min_label());
  }
  TreeTensor l = cut_body(t.left(), queue, sign);
  TreeTensor r = cut_body(t.right(), queue, sign);
  return TreeTensor::node(t.gen(), l, r, sign);
}

}  // namespace

std::vector<TreeTensor> bullet_cut_factorize(const TreeTensor& T) {
  if (T.trivial()) return {};
  if (T.gen() != Gen::bullet)
    throw std::invalid_argument("bullet_cut_factorize expects a trivial or bullet-rooted "
                                "tensor, got " + T.str() + "; factorize first");
  std::vector<TreeTensor> pieces;
  std::vector<TreeTensor> queue{T};
  for (std::size_t k = 0; k < queue.size(); ++k) {
    TreeTensor root = queue[k];
    int sign = 1;
    TreeTensor l = cut_body(root.left(), queue, sign);
    TreeTensor r = cut_body(root.right(), queue, sign);
    TreeTensor piece = TreeTensor::node(Gen::bullet, l, r, sign);
    // replacing a subtree by a leaf with the same min label preserves the
    // canonical child order everywhere
    pieces.push_back(piece);
  }
  return pieces;
}

// --- linear-combination parsing ----------------------------------------------

SpeciesVector parse_combination(const std::string& text, const Signature& sig) {
  struct Tok {
    Rational coeff;
    std::string tree;
  };
  std::vector<Tok> toks;
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };

  bool first = true;
  while (true) {
    skip_ws();
    if (pos >= text.size()) break;
    Rational sign = 1;
    if (text[pos] == '+') {
      ++pos;
    } else if (text[pos] == '-') {
      sign = -1;
      ++pos;
    } else if (text.compare(pos, 3, "−") == 0) {  // typographic minus
      sign = -1;
      pos += 3;
    } else if (!first) {
      throw std::invalid_argument("expected '+' or '-' at position " + std::to_string(pos) +
                                  " in: " + text);
    }
    first = false;
    skip_ws();

    // optional rational coefficient: digits [/ digits] followed by a tree
    // opener; bare digits followed by anything else are a leaf tree
    Rational coeff = 1;
    std::size_t save = pos;
    if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      std::size_t q = pos;
      while (q < text.size() && std::isdigit(static_cast<unsigned char>(text[q]))) ++q;
      std::size_t num_end = q;
      std::size_t r = q;
      while (r < text.size() && std::isspace(static_cast<unsigned char>(text[r]))) ++r;
      bool has_den = false;
      if (r < text.size() && text[r] == '/') {
        ++r;
        while (r < text.size() && std::isspace(static_cast<unsigned char>(text[r]))) ++r;
        std::size_t d0 = r;
        while (r < text.size() && std::isdigit(static_cast<unsigned char>(text[r]))) ++r;
        if (r == d0) throw std::invalid_argument("malformed rational coefficient in: " + text);
        has_den = true;
        num_end = r;
      }
      std::size_t after = num_end;
      while (after < text.size() && std::isspace(static_cast<unsigned char>(text[after]))) ++after;
      if (after < text.size() &&
          (text[after] == '[' || text[after] == '{' || text[after] == '(')) {
        std::string lit = text.substr(pos, num_end - pos);
        lit.erase(std::remove_if(lit.begin(), lit.end(),
                                 [](unsigned char c) { return std::isspace(c); }),
                  lit.end());
        coeff = parse_rational(lit);
        pos = after;
      } else if (has_den) {
        throw std::invalid_argument("rational coefficient must be followed by a tree in: " +
                                    text);
      } else {
        pos = save;  // the digits are a leaf tree
      }
    }

    // scan one balanced tree expression
    skip_ws();
    std::size_t start = pos;
    int depth = 0;
    while (pos < text.size()) {
      char c = text[pos];
      if (c == '[' || c == '{' || c == '(') ++depth;
      if (c == ']' || c == '}' || c == ')') --depth;
      ++pos;
      if (depth == 0) {
        if (std::isdigit(static_cast<unsigned char>(c)) && pos < text.size() &&
            std::isdigit(static_cast<unsigned char>(text[pos])))
          continue;  // multi-digit leaf
        break;
      }
    }
    if (depth != 0) throw std::invalid_argument("unbalanced tree expression in: " + text);
    toks.push_back({sign * coeff, text.substr(start, pos - start)});
  }
  if (toks.empty()) throw std::invalid_argument("empty combination: " + text);

  auto [t0, s0] = parse_tensor(toks[0].tree, &sig);
  const FreeComponent& comp = free_component(sig, t0.labels());
  SpeciesVector out(&comp.space);
  out.add_term(comp.space.id_of(t0.str()), toks[0].coeff * s0);
  for (std::size_t k = 1; k < toks.size(); ++k) {
    auto [t, s] = parse_tensor(toks[k].tree, &sig);
    if (t.labels() != comp.labels)
      throw std::invalid_argument("terms of a combination must share one label set: " + text);
    out.add_term(comp.space.id_of(t.str()), toks[k].coeff * s);
  }
  return out;
}

}  // namespace plk
