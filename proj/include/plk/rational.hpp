#ifndef PLK_RATIONAL_HPP
#define PLK_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace plk {

// Exact scalar field. cpp_rational keeps values reduced with positive
// denominator, which is exactly the invariant we need; no floating point
// exists anywhere in the kernel.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer num(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Integer den(const Rational& q) { return boost::multiprecision::denominator(q); }

inline std::string to_string(const Rational& q) { return q.str(); }

// Parses "p", "-p" or "p/q". Throws std::invalid_argument on malformed input.
inline Rational parse_rational(const std::string& s) {
  try {
    Rational q(s);
    return q;
  } catch (const std::exception&) {
    throw std::invalid_argument("not a rational: '" + s + "'");
  }
}

}  // namespace plk

#endif
