#include "plk/rooted_tree.hpp"

#include <algorithm>
#include <cctype>
#include <mutex>

#include "plk/free_operad.hpp"

namespace plk {

RootedTree::RootedTree(const std::vector<Label>& vertices, const std::map<Label, Label>& parent) {
  verts_ = vertices;
  std::sort(verts_.begin(), verts_.end());
  if (verts_.empty()) throw std::invalid_argument("rooted tree needs at least one vertex");
  if (std::adjacent_find(verts_.begin(), verts_.end()) != verts_.end())
    throw std::invalid_argument("repeated vertex label");

  parent_.assign(verts_.size(), -1);
  int roots = 0;
  root_ = 0;
  for (std::size_t i = 0; i < verts_.size(); ++i) {
    auto it = parent.find(verts_[i]);
    if (it == parent.end()) {
      ++roots;
      root_ = verts_[i];
      continue;
    }
    parent_[i] = index_of(it->second);
  }
  if (roots != 1)
    throw std::invalid_argument("parent map must omit exactly one vertex (the root)");
  // every vertex must reach the root without cycles
  for (std::size_t i = 0; i < verts_.size(); ++i) {
    std::size_t steps = 0;
    int j = static_cast<int>(i);
    while (parent_[j] != -1) {
      j = parent_[j];
      if (++steps > verts_.size()) throw std::invalid_argument("parent map has a cycle");
    }
  }
  build_repr();
}

int RootedTree::index_of(Label v) const {
  auto it = std::lower_bound(verts_.begin(), verts_.end(), v);
  if (it == verts_.end() || *it != v)
    throw std::invalid_argument("vertex " + std::to_string(v) + " not in tree");
  return static_cast<int>(it - verts_.begin());
}

bool RootedTree::has_vertex(Label v) const {
  return std::binary_search(verts_.begin(), verts_.end(), v);
}

Label RootedTree::parent(Label v) const {
  int p = parent_[index_of(v)];
  if (p == -1) throw std::invalid_argument("root has no parent");
  return verts_[p];
}

std::vector<Label> RootedTree::children(Label v) const {
  int i = index_of(v);
  std::vector<Label> out;
  for (std::size_t j = 0; j < verts_.size(); ++j)
    if (parent_[j] == i) out.push_back(verts_[j]);
  return out;  // verts_ sorted, so children come out in increasing order
}

void RootedTree::build_repr() {
  auto rec = [&](auto&& self, Label v) -> std::string {
    std::string s = std::to_string(v);
    std::vector<Label> ch = children(v);
    if (!ch.empty()) {
      s += "(";
      for (std::size_t k = 0; k < ch.size(); ++k) {
        if (k) s += ",";
        s += self(self, ch[k]);
      }
      s += ")";
    }
    return s;
  };
  repr_ = rec(rec, root_);
}

RootedTree RootedTree::relabel(const std::map<Label, Label>& images) const {
  std::vector<Label> vs;
  std::map<Label, Label> par;
  for (std::size_t i = 0; i < verts_.size(); ++i) {
    auto it = images.find(verts_[i]);
    if (it == images.end())
      throw std::invalid_argument("relabelling map misses vertex " + std::to_string(verts_[i]));
    vs.push_back(it->second);
    if (parent_[i] != -1) par[it->second] = images.at(verts_[parent_[i]]);
  }
  return RootedTree(vs, par);
}

RootedTree parse_rooted_tree(const std::string& text) {
  std::size_t pos = 0;
  std::vector<Label> verts;
  std::map<Label, Label> parent;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto number = [&]() -> Label {
    skip_ws();
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
      throw std::invalid_argument("expected vertex label at position " + std::to_string(pos) +
                                  " in: " + text);
    long v = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      v = v * 10 + (text[pos] - '0');
      if (v > 1'000'000) throw std::invalid_argument("vertex label out of range");
      ++pos;
    }
    if (v == 0) throw std::invalid_argument("vertex labels are positive integers");
    return static_cast<Label>(v);
  };
  auto node = [&](auto&& self, int parent_label) -> void {
    Label v = number();
    verts.push_back(v);
    if (parent_label != 0) parent[v] = parent_label;
    skip_ws();
    if (pos < text.size() && text[pos] == '(') {
      ++pos;
      while (true) {
        self(self, v);
        skip_ws();
        if (pos < text.size() && text[pos] == ',') {
          ++pos;
          continue;
        }
        if (pos < text.size() && text[pos] == ')') {
          ++pos;
          break;
        }
        throw std::invalid_argument("expected ',' or ')' in: " + text);
      }
    }
  };
  node(node, 0);
  skip_ws();
  if (pos != text.size()) throw std::invalid_argument("trailing input in: " + text);
  return RootedTree(verts, parent);
}

TreeComponent::TreeComponent(std::vector<Label> ls, std::vector<RootedTree> ts,
                             std::vector<std::string> keys)
    : labels(std::move(ls)),
      space([&] {
        std::string name = "PL(";
        for (std::size_t i = 0; i < labels.size(); ++i) {
          if (i) name += ",";
          name += std::to_string(labels[i]);
        }
        return name + ")";
      }(), std::move(keys)),
      trees(std::move(ts)) {}

namespace {

std::mutex g_tree_mutex;
std::map<std::vector<Label>, std::unique_ptr<TreeComponent>> g_tree_cache;
std::unordered_map<const BasisSpace*, const TreeComponent*> g_space_to_tree_comp;

// Enumerates rooted trees as parent sequences: choose a root, then parents
// for the remaining vertices, keeping only acyclic assignments. Exhaustive
// by construction; n^(n-1) survivors.
std::vector<RootedTree> enumerate_trees(const std::vector<Label>& labels) {
  const int n = static_cast<int>(labels.size());
  std::vector<RootedTree> out;
  for (int r = 0; r < n; ++r) {
    std::vector<int> others;
    for (int i = 0; i < n; ++i)
      if (i != r) others.push_back(i);
    std::vector<int> choice(others.size(), 0);
    while (true) {
      std::map<Label, Label> parent;
      for (std::size_t k = 0; k < others.size(); ++k)
        parent[labels[others[k]]] = labels[choice[k]];
      try {
        out.emplace_back(labels, parent);
      } catch (const std::invalid_argument&) {
        // cyclic assignment; skip
      }
      // odometer
      std::size_t k = 0;
      for (; k < choice.size(); ++k) {
        if (++choice[k] < n) break;
        choice[k] = 0;
      }
      if (k == choice.size()) break;
    }
    if (others.empty()) break;  // n == 1: single tree, one root choice
  }
  return out;
}

}  // namespace

const TreeComponent& tree_component(const std::vector<Label>& labels) {
  std::vector<Label> ls = labels;
  std::sort(ls.begin(), ls.end());
  if (ls.empty()) throw std::invalid_argument("empty label set");
  if (std::adjacent_find(ls.begin(), ls.end()) != ls.end())
    throw std::invalid_argument("repeated label in component label set");

  std::lock_guard<std::mutex> lock(g_tree_mutex);
  auto it = g_tree_cache.find(ls);
  if (it != g_tree_cache.end()) return *it->second;

  std::vector<RootedTree> trees = enumerate_trees(ls);
  std::sort(trees.begin(), trees.end());
  std::vector<std::string> keys;
  keys.reserve(trees.size());
  for (const auto& t : trees) keys.push_back(t.str());

  auto comp = std::make_unique<TreeComponent>(ls, std::move(trees), std::move(keys));
  const TreeComponent& ref = *comp;
  g_space_to_tree_comp.emplace(&ref.space, &ref);
  g_tree_cache.emplace(std::move(ls), std::move(comp));
  return ref;
}

const TreeComponent& tree_component(int n) {
  std::vector<Label> ls(n);
  for (int i = 0; i < n; ++i) ls[i] = i + 1;
  return tree_component(ls);
}

namespace {

const TreeComponent& tree_component_for(const SpeciesVector& v) {
  std::lock_guard<std::mutex> lock(g_tree_mutex);
  auto it = g_space_to_tree_comp.find(v.space());
  if (it == g_space_to_tree_comp.end())
    throw std::invalid_argument("vector does not live in a rooted-tree component");
  return *it->second;
}

}  // namespace

SpeciesVector graft_compose(const RootedTree& T, Label i, const RootedTree& S) {
  if (!T.has_vertex(i))
    throw std::invalid_argument("composition point " + std::to_string(i) + " is not a vertex of " +
                                T.str());
  std::vector<Label> merged;
  for (Label v : T.vertices())
    if (v != i) merged.push_back(v);
  for (Label v : S.vertices()) {
    if (std::find(merged.begin(), merged.end(), v) != merged.end())
      throw std::invalid_argument("label clash composing " + T.str() + " at " + std::to_string(i) +
                                  " with " + S.str());
    merged.push_back(v);
  }
  const TreeComponent& target = tree_component(merged);

  const std::vector<Label> orphans = T.children(i);
  const std::vector<Label>& sv = S.vertices();

  // base edges: T without i (root edge of S replaces it), plus S itself
  std::map<Label, Label> base;
  for (Label v : T.vertices()) {
    if (v == i || v == T.root()) continue;
    Label p = T.parent(v);
    if (p == i) continue;  // reattached below
    base[v] = p;
  }
  if (i != T.root()) base[S.root()] = T.parent(i);
  for (Label v : sv)
    if (v != S.root()) base[v] = S.parent(v);

  SpeciesVector out(&target.space);
  std::vector<std::size_t> choice(orphans.size(), 0);
  while (true) {
    std::map<Label, Label> parent = base;
    for (std::size_t k = 0; k < orphans.size(); ++k) parent[orphans[k]] = sv[choice[k]];
    out.add_term(target.space.id_of(RootedTree(merged, parent).str()), 1);
    std::size_t k = 0;
    for (; k < choice.size(); ++k) {
      if (++choice[k] < sv.size()) break;
      choice[k] = 0;
    }
    if (k == choice.size()) break;
  }
  return out;
}

SpeciesVector graft_compose_vec(const SpeciesVector& u, Label i, const SpeciesVector& v) {
  const TreeComponent& cu = tree_component_for(u);
  const TreeComponent& cv = tree_component_for(v);
  SpeciesVector out;
  bool first = true;
  for (const auto& [iu, cu_coeff] : u.terms())
    for (const auto& [iv, cv_coeff] : v.terms()) {
      SpeciesVector term = graft_compose(cu.trees[iu], i, cv.trees[iv]);
      if (first) {
        out = SpeciesVector(term.space());
        first = false;
      }
      out.add_scaled(cu_coeff * cv_coeff, term);
    }
  if (first) {
    // one of the factors is zero; land in the merged component anyway
    std::vector<Label> merged;
    for (Label l : cu.labels)
      if (l != i) merged.push_back(l);
    merged.insert(merged.end(), cv.labels.begin(), cv.labels.end());
    out = SpeciesVector(&tree_component(merged).space);
  }
  return out;
}

SpeciesVector prelie_product(const SpeciesVector& u, const SpeciesVector& v) {
  const TreeComponent& cu = tree_component_for(u);
  const TreeComponent& cv = tree_component_for(v);
  std::vector<Label> merged = cu.labels;
  merged.insert(merged.end(), cv.labels.begin(), cv.labels.end());
  const TreeComponent& target = tree_component(merged);

  SpeciesVector out(&target.space);
  for (const auto& [iu, a] : u.terms()) {
    const RootedTree& tu = cu.trees[iu];
    for (const auto& [iv, b] : v.terms()) {
      const RootedTree& tv = cv.trees[iv];
      Rational c = a * b;
      for (Label w : tu.vertices()) {
        std::map<Label, Label> parent;
        for (Label x : tu.vertices())
          if (x != tu.root()) parent[x] = tu.parent(x);
        for (Label x : tv.vertices())
          if (x != tv.root()) parent[x] = tv.parent(x);
        parent[tv.root()] = w;
        out.add_term(target.space.id_of(RootedTree(target.labels, parent).str()), c);
      }
    }
  }
  return out;
}

SpeciesVector act_trees(const Perm& sigma, const SpeciesVector& v) {
  std::map<Label, Label> images;
  for (int x = 1; x <= sigma.n(); ++x) images[x] = sigma(x);
  return relabel_trees(images, v);
}

SpeciesVector relabel_trees(const std::map<Label, Label>& images, const SpeciesVector& v) {
  const TreeComponent& src = tree_component_for(v);
  std::vector<Label> target_labels;
  for (Label l : src.labels) {
    auto it = images.find(l);
    if (it == images.end())
      throw std::invalid_argument("relabelling map misses label " + std::to_string(l));
    target_labels.push_back(it->second);
  }
  const TreeComponent& dst = tree_component(target_labels);
  SpeciesVector out(&dst.space);
  for (const auto& [id, c] : v.terms())
    out.add_term(dst.space.id_of(src.trees[id].relabel(images).str()), c);
  return out;
}

SpeciesVector eval_tensor(const TreeTensor& t) {
  if (t.is_leaf()) {
    const TreeComponent& c = tree_component(std::vector<Label>{t.leaf_label()});
    return c.vec(RootedTree::singleton(t.leaf_label()));
  }
  SpeciesVector l = eval_tensor(t.left());
  SpeciesVector r = eval_tensor(t.right());
  switch (t.gen()) {
    case Gen::prelie: return prelie_product(l, r);
    case Gen::bracket: return bracket_product(l, r);
    case Gen::bullet: return bullet_product(l, r);
  }
  throw std::logic_error("bad generator");
}

SpeciesVector eval(const SpeciesVector& free_operad_vec) {
  const FreeComponent& src = free_component_of(free_operad_vec);
  const TreeComponent& target = tree_component(src.labels);
  SpeciesVector out(&target.space);
  for (const auto& [id, c] : free_operad_vec.terms())
    out.add_scaled(c, eval_tensor(src.tensors[id]));
  return out;
}

}  // namespace plk
