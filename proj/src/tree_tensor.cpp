#include "plk/tree_tensor.hpp"

#include <algorithm>
#include <cctype>

namespace plk {

namespace {

std::pair<TreeTensor, int> canonicalize_rec(const RawTree& raw) {
  if (raw.is_leaf) return {TreeTensor::leaf(raw.label), 1};
  auto [a, sa] = canonicalize_rec(*raw.left);
  auto [b, sb] = canonicalize_rec(*raw.right);
  int sign = sa * sb;
  TreeTensor t = TreeTensor::node(raw.gen, a, b, sign);
  return {t, sign};
}

}  // namespace

std::pair<TreeTensor, int> canonicalize(const RawTree& raw) {
  auto [t, sign] = canonicalize_rec(raw);
  std::vector<Label> ls = t.labels();
  if (std::adjacent_find(ls.begin(), ls.end()) != ls.end())
    throw std::invalid_argument("duplicate leaf label in tree " + t.str());
  return {t, sign};
}

namespace {

struct Parser {
  const std::string& s;
  std::size_t pos = 0;
  const Signature* sig;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }

  char peek() {
    skip_ws();
    if (pos >= s.size()) throw std::invalid_argument("unexpected end of tree expression: " + s);
    return s[pos];
  }

  void expect(char c) {
    if (peek() != c)
      throw std::invalid_argument(std::string("expected '") + c + "' at position " +
                                  std::to_string(pos) + " in: " + s);
    ++pos;
  }

  void check_gen(Gen g) {
    if (sig && !sig->contains(g))
      throw std::invalid_argument(std::string("generator ") + gen_name(g) +
                                  " not allowed by signature " + sig->str());
  }

  RawTree tree() {
    char c = peek();
    if (c == '[') {
      ++pos;
      check_gen(Gen::bracket);
      RawTree a = tree();
      expect(',');
      RawTree b = tree();
      expect(']');
      return RawTree::node(Gen::bracket, std::move(a), std::move(b));
    }
    if (c == '{') {
      ++pos;
      check_gen(Gen::bullet);
      RawTree a = tree();
      expect(',');
      RawTree b = tree();
      expect('}');
      return RawTree::node(Gen::bullet, std::move(a), std::move(b));
    }
    if (c == '(') {
      ++pos;
      check_gen(Gen::prelie);
      RawTree a = tree();
      expect('<');
      RawTree b = tree();
      expect(')');
      return RawTree::node(Gen::prelie, std::move(a), std::move(b));
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      long v = 0;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
        v = v * 10 + (s[pos] - '0');
        if (v > 1'000'000) throw std::invalid_argument("leaf label out of range in: " + s);
        ++pos;
      }
      if (v == 0) throw std::invalid_argument("leaf labels are positive integers: " + s);
      return RawTree::leaf(static_cast<Label>(v));
    }
    throw std::invalid_argument(std::string("unexpected character '") + c + "' in: " + s);
  }
};

}  // namespace

RawTree parse_raw_tree(const std::string& text, const Signature* sig) {
  Parser p{text, 0, sig};
  RawTree t = p.tree();
  p.skip_ws();
  if (p.pos != text.size())
    throw std::invalid_argument("trailing input after tree expression: " + text);
  return t;
}

}  // namespace plk
