#ifndef PLK_SPAN_HPP
#define PLK_SPAN_HPP

#include <functional>
#include <stdexcept>
#include <unordered_map>
#include <utility>
#include <vector>

#include "plk/vec.hpp"

namespace plk {

// Incremental row-echelon span of a component. Invariants:
//   - every row is nonzero with pivot coefficient 1,
//   - pivots (least key of each row) are pairwise distinct.
// Eliminating a pivot only introduces keys larger than it, so reduction of
// any vector is a single left-to-right sweep whatever the insertion order.
// Dimension is the number of rows; a vector lies in the span iff its
// reduction residue is zero. Queries are const and safe to share between
// threads; building is single-writer.
class Span {
 public:
  explicit Span(const BasisSpace* ambient) : ambient_(ambient) {}

  const BasisSpace* ambient() const { return ambient_; }
  std::size_t dim() const { return rows_.size(); }
  const std::vector<SpeciesVector>& rows() const { return rows_; }

  bool full() const { return rows_.size() == ambient_->dim(); }

  // Residue of v after eliminating every pivot of the span. The residue is
  // zero iff v is in the span. When `expr` is given, it receives the
  // coefficients c_j with  v = sum_j c_j * row_j + residue.
  SpeciesVector reduce(SpeciesVector v,
                       std::vector<std::pair<std::size_t, Rational>>* expr = nullptr) const {
    check_space(v);
    std::size_t i = 0;
    while (i < v.size()) {
      KeyId k = v.terms()[i].first;
      auto it = pivot_row_.find(k);
      if (it == pivot_row_.end()) {
        ++i;
        continue;
      }
      Rational c = v.terms()[i].second;  // pivot coeff of the row is 1
      v.add_scaled(-c, rows_[it->second]);
      if (expr) expr->emplace_back(it->second, std::move(c));
      // the eliminated key vanished; position i now holds a strictly
      // larger key (rows only contain keys >= their pivot), so rescan i
    }
    return v;
  }

  bool contains(const SpeciesVector& v) const { return reduce(v).zero(); }

  // Inserts v; returns the reduction residue (zero iff v was already in the
  // span). The span gains one row exactly when the residue is nonzero.
  SpeciesVector insert(const SpeciesVector& v) {
    SpeciesVector r = reduce(v);
    if (!r.zero()) {
      Rational inv = Rational(1) / r.lead_coeff();
      r.scale(inv);
      pivot_row_.emplace(r.lead(), rows_.size());
      rows_.push_back(r);
    }
    return r;
  }

  // Trace of a linear map that preserves the span, given by its action on
  // basis keys. Throws if some transformed row leaves the span; the message
  // names the offending row.
  Rational character(const std::function<SpeciesVector(KeyId)>& action) const {
    Rational tr = 0;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      SpeciesVector img(ambient_);
      for (const auto& [id, c] : rows_[i].terms()) img.add_scaled(c, action(id));
      std::vector<std::pair<std::size_t, Rational>> expr;
      SpeciesVector res = reduce(std::move(img), &expr);
      if (!res.zero())
        throw std::invalid_argument("span is not stable under the action: image of row " +
                                    std::to_string(i) + " (pivot " +
                                    ambient_->key(rows_[i].lead()) + ") leaves the span");
      for (const auto& [j, c] : expr)
        if (j == i) tr += c;
    }
    return tr;
  }

 private:
  void check_space(const SpeciesVector& v) const {
    if (v.space() != ambient_)
      throw std::invalid_argument("vector belongs to " +
                                  (v.space() ? v.space()->name() : std::string("<null>")) +
                                  ", span ambient is " + ambient_->name());
  }

  const BasisSpace* ambient_;
  std::vector<SpeciesVector> rows_;
  std::unordered_map<KeyId, std::size_t> pivot_row_;
};

}  // namespace plk

#endif
