#ifndef PLK_EGF_HPP
#define PLK_EGF_HPP

#include <vector>

#include "plk/rational.hpp"

namespace plk {

// Truncated exponential generating function with exact rational
// coefficients c_1..c_N (constant term identically zero: species with
// empty arity-0 component). c_n * n! is the dimension at arity n.
class EGFSeries {
 public:
  explicit EGFSeries(int order) : coeffs_(order + 1, 0) {
    if (order < 1) throw std::invalid_argument("truncation order must be >= 1");
  }

  static EGFSeries x(int order) {
    EGFSeries s(order);
    s.coeffs_[1] = 1;
    return s;
  }

  // dims[k] is the dimension at arity first_arity + k.
  static EGFSeries from_dims(const std::vector<Integer>& dims, int first_arity, int order);

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Rational& coeff(int n) const { return coeffs_.at(n); }
  void set_coeff(int n, const Rational& c) {
    if (n < 1) throw std::invalid_argument("coefficients start at order 1");
    coeffs_.at(n) = c;
  }
  Rational dim(int n) const;  // coeff(n) * n!

  int min_support() const;  // least n with c_n != 0; order()+1 when zero

  EGFSeries operator+(const EGFSeries& o) const;
  EGFSeries operator*(const EGFSeries& o) const;  // truncated product

  bool operator==(const EGFSeries& o) const { return coeffs_ == o.coeffs_; }

 private:
  std::vector<Rational> coeffs_;  // index 0..order, index 0 always zero
};

// f(g(x)) up to the common truncation order; g must be supported in
// orders >= 1 (guaranteed by the type).
EGFSeries compose(const EGFSeries& f, const EGFSeries& g);

// The unique t with t = x + c(t), solved order by order; requires c
// supported in orders >= 2.
EGFSeries free_operad_series(const EGFSeries& c);

// sum x^n / n: the generating series with dimensions (n-1)!.
EGFSeries lie_series(int order);

// Per-arity comparison of n! * [x^n] lie(t(x)) against n^(n-1), where t is
// the free-operad series over the given dimensions in arities >= 2.
// Dimensions beyond the provided list are extended by the pattern (n-2)!
// and flagged extrapolated.
struct EgfRow {
  int n;
  Integer expected;    // n^(n-1)
  Rational actual;     // n! * [x^n] lie(t)
  bool extrapolated;   // generator dimension beyond the computed range
  bool match;
};

struct EgfReport {
  bool ok;
  std::vector<EgfRow> rows;
};

EgfReport verify_dimension_identity(const std::vector<Integer>& generator_dims_from_2,
                                    int order);

}  // namespace plk

#endif
