#ifndef PLK_VEC_HPP
#define PLK_VEC_HPP

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

#include "plk/basis.hpp"
#include "plk/rational.hpp"

namespace plk {

// Finite rational linear combination of basis keys inside one component.
// Terms are kept sorted by key id with no explicit zeros, so equality is
// plain term-list equality.
class SpeciesVector {
 public:
  using Term = std::pair<KeyId, Rational>;

  SpeciesVector() : space_(nullptr) {}
  explicit SpeciesVector(const BasisSpace* space) : space_(space) {}

  static SpeciesVector unit(const BasisSpace* space, KeyId id, Rational c = 1) {
    SpeciesVector v(space);
    if (c != 0) v.terms_.emplace_back(id, std::move(c));
    return v;
  }

  const BasisSpace* space() const { return space_; }
  bool zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }

  // Least key id present; vector must be nonzero.
  KeyId lead() const { return terms_.front().first; }
  const Rational& lead_coeff() const { return terms_.front().second; }

  Rational coeff(KeyId id) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), id,
                               [](const Term& t, KeyId k) { return t.first < k; });
    if (it != terms_.end() && it->first == id) return it->second;
    return 0;
  }

  // Accumulates c * (single key). Used by construction code; keeps order.
  void add_term(KeyId id, const Rational& c) {
    if (c == 0) return;
    auto it = std::lower_bound(terms_.begin(), terms_.end(), id,
                               [](const Term& t, KeyId k) { return t.first < k; });
    if (it != terms_.end() && it->first == id) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    } else {
      terms_.insert(it, {id, c});
    }
  }

  // this += c * other, by sorted merge.
  void add_scaled(const Rational& c, const SpeciesVector& other) {
    require_same_space(other);
    if (c == 0 || other.terms_.empty()) return;
    std::vector<Term> out;
    out.reserve(terms_.size() + other.terms_.size());
    auto a = terms_.begin(), ae = terms_.end();
    auto b = other.terms_.begin(), be = other.terms_.end();
    while (a != ae && b != be) {
      if (a->first < b->first) {
        out.push_back(std::move(*a));
        ++a;
      } else if (b->first < a->first) {
        out.emplace_back(b->first, c * b->second);
        ++b;
      } else {
        Rational s = a->second + c * b->second;
        if (s != 0) out.emplace_back(a->first, std::move(s));
        ++a;
        ++b;
      }
    }
    for (; a != ae; ++a) out.push_back(std::move(*a));
    for (; b != be; ++b) out.emplace_back(b->first, c * b->second);
    terms_ = std::move(out);
  }

  void scale(const Rational& c) {
    if (c == 0) {
      terms_.clear();
      return;
    }
    for (auto& t : terms_) t.second *= c;
  }

  SpeciesVector operator+(const SpeciesVector& o) const {
    SpeciesVector r = *this;
    r.add_scaled(1, o);
    return r;
  }
  SpeciesVector operator-(const SpeciesVector& o) const {
    SpeciesVector r = *this;
    r.add_scaled(-1, o);
    return r;
  }
  SpeciesVector operator*(const Rational& c) const {
    SpeciesVector r = *this;
    r.scale(c);
    return r;
  }

  bool operator==(const SpeciesVector& o) const {
    return space_ == o.space_ && terms_ == o.terms_;
  }
  bool operator!=(const SpeciesVector& o) const { return !(*this == o); }

  // "2 key1 - 1/3 key2"; "0" for the zero vector.
  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [id, c] : terms_) {
      Rational a = c < 0 ? Rational(-c) : c;
      if (first) {
        if (c < 0) out += "-";
        first = false;
      } else {
        out += c < 0 ? " - " : " + ";
      }
      if (a != 1) out += to_string(a) + " ";
      out += space_->key(id);
    }
    return out;
  }

  void require_same_space(const SpeciesVector& other) const {
    if (space_ != other.space_)
      throw std::invalid_argument("species vectors live in different components: " +
                                  (space_ ? space_->name() : std::string("<null>")) + " vs " +
                                  (other.space_ ? other.space_->name() : std::string("<null>")));
  }

 private:
  const BasisSpace* space_;
  std::vector<Term> terms_;
};

}  // namespace plk

#endif
