#pragma once

// Scalar and dense matrix types shared by every module. All lattice
// arithmetic is exact: GMP-backed integers and rationals inside Eigen
// containers.

#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>

#include <Eigen/Core>

#include <cstdint>
#include <string>
#include <vector>

namespace zariski {

namespace mp = boost::multiprecision;

using Integer = mp::number<mp::gmp_int, mp::et_off>;
using Rational = mp::number<mp::gmp_rational, mp::et_off>;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using IntMatrix = Matrix<Integer>;
using RatMatrix = Matrix<Rational>;
using IntVector = Vector<Integer>;
using RatVector = Vector<Rational>;

inline Integer numerator(const Rational& r) { return mp::numerator(r); }
inline Integer denominator(const Rational& r) { return mp::denominator(r); }
inline bool is_integral(const Rational& r) { return mp::denominator(r) == 1; }

template <typename Derived>
bool is_integral(const Eigen::MatrixBase<Derived>& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (!is_integral(Rational(m(i, j)))) return false;
  return true;
}

/// Floor division for exact integers (rounds toward negative infinity).
inline Integer floor_div(const Integer& a, const Integer& b) {
  Integer q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) q -= 1;
  return q;
}

/// Non-negative remainder of a modulo m (m > 0).
inline Integer mod(const Integer& a, const Integer& m) {
  Integer r = a % m;
  if (r < 0) r += m;
  return r;
}

inline std::int64_t mod(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

inline Integer floor(const Rational& r) { return floor_div(numerator(r), denominator(r)); }
inline Integer ceil(const Rational& r) { return -floor_div(-numerator(r), denominator(r)); }

inline std::int64_t to_int64(const Integer& z) { return z.convert_to<std::int64_t>(); }

/// Least common multiple of all denominators in a rational matrix.
template <typename Derived>
Integer common_denominator(const Eigen::MatrixBase<Derived>& m) {
  Integer l = 1;
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) l = mp::lcm(l, denominator(m(i, j)));
  return l;
}

inline IntMatrix to_integer(const RatMatrix& m) {
  IntMatrix out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = numerator(m(i, j));
  return out;
}

inline IntVector to_integer(const RatVector& v) {
  IntVector out(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) out(i) = numerator(v(i));
  return out;
}

/// Lexicographic order on coordinates.
template <typename Scalar>
bool lex_less(const Vector<Scalar>& a, const Vector<Scalar>& b) {
  for (Eigen::Index i = 0; i < std::min(a.size(), b.size()); ++i) {
    if (a(i) < b(i)) return true;
    if (b(i) < a(i)) return false;
  }
  return a.size() < b.size();
}

}  // namespace zariski
