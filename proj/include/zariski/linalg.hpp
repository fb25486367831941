#pragma once

// Exact integer/rational matrix kernel: Smith and Hermite normal forms,
// integral solving, rational LDL^T factorization, and exhaustive bounded-norm
// vector enumeration. Everything here is templated on the scalar so the same
// code runs on GMP integers and on machine integers.

#include "zariski/numeric.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace zariski {

class NotPositiveDefinite : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

namespace detail {

template <typename Scalar>
Scalar abs_value(const Scalar& x) {
  return x < 0 ? Scalar(-x) : x;
}

template <typename Scalar>
Scalar floor_quotient(const Scalar& a, const Scalar& b) {
  Scalar q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) q -= 1;
  return q;
}

}  // namespace detail

/// U * A * V == D with U, V unimodular and D diagonal with d1 | d2 | ...
/// and non-negative entries. v_inverse is V^{-1}, kept so callers can map
/// vectors back into the diagonal coordinates without a rational inverse.
template <typename Scalar>
struct SmithForm {
  Matrix<Scalar> U;
  Matrix<Scalar> D;
  Matrix<Scalar> V;
  Matrix<Scalar> v_inverse;

  std::vector<Scalar> invariant_factors() const {
    std::vector<Scalar> out;
    for (Eigen::Index i = 0; i < std::min(D.rows(), D.cols()); ++i) out.push_back(D(i, i));
    return out;
  }
};

template <typename Scalar>
SmithForm<Scalar> smith_normal_form(const Matrix<Scalar>& A) {
  using detail::abs_value;
  const Eigen::Index m = A.rows();
  const Eigen::Index n = A.cols();
  SmithForm<Scalar> s{Matrix<Scalar>::Identity(m, m), A, Matrix<Scalar>::Identity(n, n),
                      Matrix<Scalar>::Identity(n, n)};
  auto& D = s.D;

  for (Eigen::Index t = 0; t < std::min(m, n); ++t) {
    for (;;) {
      Eigen::Index pr = -1, pc = -1;
      for (Eigen::Index i = t; i < m; ++i)
        for (Eigen::Index j = t; j < n; ++j)
          if (D(i, j) != 0 && (pr < 0 || abs_value(D(i, j)) < abs_value(D(pr, pc)))) {
            pr = i;
            pc = j;
          }
      if (pr < 0) return s;  // remaining block is zero

      if (pr != t) {
        D.row(t).swap(D.row(pr));
        s.U.row(t).swap(s.U.row(pr));
      }
      if (pc != t) {
        D.col(t).swap(D.col(pc));
        s.V.col(t).swap(s.V.col(pc));
        s.v_inverse.row(t).swap(s.v_inverse.row(pc));
      }

      bool clean = true;
      for (Eigen::Index i = t + 1; i < m; ++i) {
        if (D(i, t) == 0) continue;
        const Scalar k = D(i, t) / D(t, t);
        D.row(i) -= k * D.row(t);
        s.U.row(i) -= k * s.U.row(t);
        if (D(i, t) != 0) clean = false;
      }
      for (Eigen::Index j = t + 1; j < n; ++j) {
        if (D(t, j) == 0) continue;
        const Scalar k = D(t, j) / D(t, t);
        D.col(j) -= k * D.col(t);
        s.V.col(j) -= k * s.V.col(t);
        s.v_inverse.row(t) += k * s.v_inverse.row(j);
        if (D(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Pivot must divide the rest of the block; otherwise fold an offending
      // row in and go again (the minimum strictly decreases).
      Eigen::Index bad = -1;
      for (Eigen::Index i = t + 1; i < m && bad < 0; ++i)
        for (Eigen::Index j = t + 1; j < n; ++j)
          if (D(i, j) % D(t, t) != 0) {
            bad = i;
            break;
          }
      if (bad >= 0) {
        D.row(t) += D.row(bad);
        s.U.row(t) += s.U.row(bad);
        continue;
      }
      break;
    }
    if (D(t, t) < 0) {
      D.row(t) = -D.row(t);
      s.U.row(t) = -s.U.row(t);
    }
  }
  return s;
}

/// Row-style Hermite normal form of the lattice spanned by the rows of A:
/// echelon, positive pivots, entries above each pivot reduced into
/// [0, pivot). Zero rows are dropped, so the result is canonical for the
/// row lattice.
template <typename Scalar>
Matrix<Scalar> hermite_normal_form(const Matrix<Scalar>& A) {
  using detail::abs_value;
  using detail::floor_quotient;
  Matrix<Scalar> H = A;
  const Eigen::Index m = H.rows();
  const Eigen::Index n = H.cols();
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < n && r < m; ++c) {
    for (;;) {
      Eigen::Index p = -1;
      for (Eigen::Index i = r; i < m; ++i)
        if (H(i, c) != 0 && (p < 0 || abs_value(H(i, c)) < abs_value(H(p, c)))) p = i;
      if (p < 0) break;
      if (p != r) H.row(r).swap(H.row(p));
      bool done = true;
      for (Eigen::Index i = r + 1; i < m; ++i) {
        if (H(i, c) == 0) continue;
        const Scalar q = floor_quotient(H(i, c), H(r, c));
        H.row(i) -= q * H.row(r);
        if (H(i, c) != 0) done = false;
      }
      if (done) break;
    }
    if (H(r, c) == 0) continue;
    if (H(r, c) < 0) H.row(r) = -H.row(r);
    for (Eigen::Index i = 0; i < r; ++i) {
      const Scalar q = floor_quotient(H(i, c), H(r, c));
      if (q != 0) H.row(i) -= q * H.row(r);
    }
    ++r;
  }
  return H.topRows(r);
}

/// Integer span of the columns of a full-column-rank matrix, with the Smith
/// decomposition cached for repeated membership queries.
class IntegerSpan {
 public:
  explicit IntegerSpan(const IntMatrix& basis) : snf_(smith_normal_form(basis)), cols_(basis.cols()) {
    for (Eigen::Index i = 0; i < cols_; ++i)
      if (snf_.D(i, i) == 0) throw std::invalid_argument("IntegerSpan: basis is not of full column rank");
  }

  /// x with B x == t, or nothing when t is outside the integer span.
  std::optional<IntVector> solve(const RatVector& t) const {
    const RatVector ut = snf_.U.cast<Rational>() * t;
    IntVector y(cols_);
    for (Eigen::Index i = 0; i < ut.size(); ++i) {
      if (i < cols_) {
        const Rational yi = ut(i) / Rational(snf_.D(i, i));
        if (!is_integral(yi)) return std::nullopt;
        y(i) = numerator(yi);
      } else if (ut(i) != 0) {
        return std::nullopt;
      }
    }
    return IntVector(snf_.V * y);
  }

  bool contains(const RatVector& t) const { return solve(t).has_value(); }

 private:
  SmithForm<Integer> snf_;
  Eigen::Index cols_;
};

inline std::optional<IntVector> hermite_solve(const IntMatrix& B, const RatVector& t) {
  return IntegerSpan(B).solve(t);
}

/// Exact LDL^T of a positive-definite matrix in diagonal-pivot form: the
/// result R has the pivots d_i on its diagonal and the unit-lower multipliers
/// L(i, j) strictly below it, so that
///   x^T G x = sum_i d_i (x_i + sum_{j>i} R(j, i) x_j)^2.
template <typename Scalar>
RatMatrix rational_cholesky(const Matrix<Scalar>& G) {
  const Eigen::Index n = G.rows();
  if (G.cols() != n) throw std::invalid_argument("rational_cholesky: matrix is not square");
  RatMatrix A = G.template cast<Rational>();
  RatMatrix R = RatMatrix::Zero(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    const Rational pivot = A(k, k);
    if (pivot <= 0) throw NotPositiveDefinite("rational_cholesky: non-positive pivot at index " + std::to_string(k));
    R(k, k) = pivot;
    for (Eigen::Index i = k + 1; i < n; ++i) R(i, k) = A(i, k) / pivot;
    for (Eigen::Index i = k + 1; i < n; ++i)
      for (Eigen::Index j = k + 1; j < n; ++j) A(i, j) -= R(i, k) * A(k, j);
  }
  return R;
}

namespace detail {

class NormEnumerator {
 public:
  NormEnumerator(RatMatrix factor, Rational target, RatVector shift)
      : r_(std::move(factor)), target_(std::move(target)), shift_(std::move(shift)), x_(shift_.size()) {}

  std::vector<RatVector> run() {
    const Eigen::Index n = r_.rows();
    if (n == 0) {
      if (target_ == 0) out_.emplace_back(0);
      return std::move(out_);
    }
    descend(n - 1, target_);
    return std::move(out_);
  }

 private:
  void descend(Eigen::Index i, const Rational& budget) {
    Rational center = 0;
    for (Eigen::Index j = i + 1; j < r_.rows(); ++j) center -= r_(j, i) * x_(j);
    // x_i = shift_i + k; admissible k satisfy d_i (k - k0)^2 <= budget.
    const Rational k0 = center - shift_(i);
    const Rational& d = r_(i, i);
    const Integer start = ceil(k0);
    for (Integer k = start;; ++k) {
      const Rational y = Rational(k) - k0;
      const Rational used = d * y * y;
      if (used > budget) break;
      visit(i, k, budget - used);
    }
    for (Integer k = start - 1;; --k) {
      const Rational y = Rational(k) - k0;
      const Rational used = d * y * y;
      if (used > budget) break;
      visit(i, k, budget - used);
    }
  }

  void visit(Eigen::Index i, const Integer& k, const Rational& rest) {
    x_(i) = shift_(i) + Rational(k);
    if (i == 0) {
      if (rest == 0) out_.push_back(x_);
      return;
    }
    descend(i - 1, rest);
  }

  RatMatrix r_;
  Rational target_;
  RatVector shift_;
  RatVector x_;
  std::vector<RatVector> out_;
};

}  // namespace detail

/// Every v in shift + Z^n with v^T G v == norm, for positive-definite G,
/// sorted lexicographically. Exact Fincke-Pohst tree over the rational LDL^T
/// pivots.
template <typename Scalar>
std::vector<RatVector> vectors_of_norm(const Matrix<Scalar>& G, const Rational& norm, const RatVector& shift) {
  if (shift.size() != G.rows()) throw std::invalid_argument("vectors_of_norm: shift has wrong dimension");
  if (norm < 0) return {};
  auto out = detail::NormEnumerator(rational_cholesky(G), norm, shift).run();
  std::sort(out.begin(), out.end(), [](const RatVector& a, const RatVector& b) { return lex_less(a, b); });
  return out;
}

template <typename Scalar>
std::vector<RatVector> vectors_of_norm(const Matrix<Scalar>& G, const Rational& norm) {
  return vectors_of_norm(G, norm, RatVector::Zero(G.rows()));
}

/// Exact determinant by fraction-free (Bareiss) elimination.
template <typename Scalar>
Scalar determinant(const Matrix<Scalar>& A) {
  const Eigen::Index n = A.rows();
  if (A.cols() != n) throw std::invalid_argument("determinant: matrix is not square");
  if (n == 0) return Scalar(1);
  Matrix<Scalar> M = A;
  Scalar sign = 1;
  Scalar prev = 1;
  for (Eigen::Index k = 0; k < n - 1; ++k) {
    if (M(k, k) == 0) {
      Eigen::Index p = k + 1;
      while (p < n && M(p, k) == 0) ++p;
      if (p == n) return Scalar(0);
      M.row(k).swap(M.row(p));
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i)
      for (Eigen::Index j = k + 1; j < n; ++j) M(i, j) = (M(i, j) * M(k, k) - M(i, k) * M(k, j)) / prev;
    prev = M(k, k);
  }
  return sign * M(n - 1, n - 1);
}

struct Signature {
  int positive = 0;
  int negative = 0;
  int zero = 0;
  bool operator==(const Signature&) const = default;
};

/// Sylvester signature of a symmetric matrix by exact congruence
/// diagonalization.
template <typename Scalar>
Signature signature(const Matrix<Scalar>& S) {
  RatMatrix A = S.template cast<Rational>();
  Signature sig;
  while (A.rows() > 0) {
    const Eigen::Index n = A.rows();
    Eigen::Index p = -1;
    for (Eigen::Index i = 0; i < n && p < 0; ++i)
      if (A(i, i) != 0) p = i;
    if (p < 0) {
      Eigen::Index oi = -1, oj = -1;
      for (Eigen::Index i = 0; i < n && oi < 0; ++i)
        for (Eigen::Index j = i + 1; j < n; ++j)
          if (A(i, j) != 0) {
            oi = i;
            oj = j;
            break;
          }
      if (oi < 0) {
        sig.zero += static_cast<int>(n);
        break;
      }
      // e_i -> e_i + e_j makes the diagonal entry 2 A(i, j) != 0.
      A.row(oi) += A.row(oj);
      A.col(oi) += A.col(oj);
      continue;
    }
    const Rational pivot = A(p, p);
    (pivot > 0 ? sig.positive : sig.negative) += 1;
    RatMatrix next(n - 1, n - 1);
    for (Eigen::Index i = 0, ii = 0; i < n; ++i) {
      if (i == p) continue;
      for (Eigen::Index j = 0, jj = 0; j < n; ++j) {
        if (j == p) continue;
        next(ii, jj) = A(i, j) - A(i, p) * A(p, j) / pivot;
        ++jj;
      }
      ++ii;
    }
    A = std::move(next);
  }
  return sig;
}

}  // namespace zariski
