#include "plk/egf.hpp"

#include <stdexcept>

namespace plk {

namespace {

Integer factorial(int n) {
  Integer f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

}  // namespace

EGFSeries EGFSeries::from_dims(const std::vector<Integer>& dims, int first_arity, int order) {
  EGFSeries s(order);
  for (std::size_t k = 0; k < dims.size(); ++k) {
    int n = first_arity + static_cast<int>(k);
    if (n < 1) throw std::invalid_argument("arities start at 1");
    if (n > order) break;
    s.coeffs_[n] = Rational(dims[k]) / Rational(factorial(n));
  }
  return s;
}

Rational EGFSeries::dim(int n) const { return coeff(n) * Rational(factorial(n)); }

int EGFSeries::min_support() const {
  for (int n = 1; n <= order(); ++n)
    if (coeffs_[n] != 0) return n;
  return order() + 1;
}

EGFSeries EGFSeries::operator+(const EGFSeries& o) const {
  if (order() != o.order()) throw std::invalid_argument("truncation order mismatch");
  EGFSeries out(order());
  for (int n = 1; n <= order(); ++n) out.coeffs_[n] = coeffs_[n] + o.coeffs_[n];
  return out;
}

EGFSeries EGFSeries::operator*(const EGFSeries& o) const {
  if (order() != o.order()) throw std::invalid_argument("truncation order mismatch");
  EGFSeries out(order());
  for (int i = 1; i <= order(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (int j = 1; i + j <= order(); ++j)
      out.coeffs_[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  return out;
}

EGFSeries compose(const EGFSeries& f, const EGFSeries& g) {
  if (f.order() != g.order()) throw std::invalid_argument("truncation order mismatch");
  const int N = f.order();
  // out = sum_k f_k g^k; g^k is supported in orders >= k, so the sum is
  // finite at each truncation order
  EGFSeries out(N);
  EGFSeries gk = g;
  for (int k = 1; k <= N; ++k) {
    if (f.coeff(k) != 0)
      for (int n = k; n <= N; ++n) out.set_coeff(n, out.coeff(n) + f.coeff(k) * gk.coeff(n));
    if (k < N) gk = gk * g;
  }
  return out;
}

EGFSeries free_operad_series(const EGFSeries& c) {
  if (c.min_support() < 2)
    throw std::invalid_argument("generator series must be supported in arities >= 2");
  const int N = c.order();
  EGFSeries t = EGFSeries::x(N);
  // each substitution pass fixes one more order since c starts at order 2
  for (int pass = 0; pass < N; ++pass) t = EGFSeries::x(N) + compose(c, t);
  return t;
}

EGFSeries lie_series(int order) {
  EGFSeries s(order);
  for (int n = 1; n <= order; ++n) s.set_coeff(n, Rational(1, n));
  return s;
}

EgfReport verify_dimension_identity(const std::vector<Integer>& generator_dims_from_2,
                                    int order) {
  std::vector<Integer> dims = generator_dims_from_2;
  std::size_t computed = dims.size();
  while (static_cast<int>(dims.size()) + 1 < order) {
    int n = static_cast<int>(dims.size()) + 2;
    dims.push_back(factorial(n - 2));  // expected pattern beyond the computed range
  }
  EGFSeries c = EGFSeries::from_dims(dims, 2, order);
  EGFSeries t = free_operad_series(c);
  EGFSeries full = compose(lie_series(order), t);

  EgfReport report{true, {}};
  for (int n = 1; n <= order; ++n) {
    EgfRow row;
    row.n = n;
    Integer e = 1;
    for (int k = 0; k < n - 1; ++k) e *= n;
    row.expected = e;
    row.actual = full.dim(n);
    row.extrapolated = n >= 2 && static_cast<std::size_t>(n - 2) >= computed;
    row.match = row.actual == Rational(row.expected);
    report.ok = report.ok && row.match;
    report.rows.push_back(row);
  }
  return report;
}

}  // namespace plk
