#pragma once

// Binary quadratic forms in two conventions:
//  - BinaryEvenForm: even positive-definite Gram matrices [[a, b], [b, c]]
//    (rank-2 lattices), reduced under GL2(Z) or SL2(Z);
//  - ClassicalForm: a x^2 + b xy + c y^2 of negative discriminant
//    b^2 - 4ac, with Gauss composition.

#include "zariski/lattice.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace zariski {

struct BinaryEvenForm {
  std::int64_t a = 0, b = 0, c = 0;

  BinaryEvenForm() = default;
  /// Throws std::invalid_argument unless a, c are even, a > 0 and ac - b^2 > 0.
  BinaryEvenForm(std::int64_t a, std::int64_t b, std::int64_t c);

  std::int64_t determinant() const { return a * c - b * b; }
  IntMatrix gram() const;

  auto operator<=>(const BinaryEvenForm&) const = default;
};

/// SL2-reduced even form: -a < 2b <= a <= c, with b >= 0 when a == c.
struct OrientedClassRep {
  BinaryEvenForm form;
  bool reduced = true;

  auto operator<=>(const OrientedClassRep&) const = default;
};

/// Rendering as "Λ[a,b,c]" (lattice) and "Λ̃[a,b,c]" (oriented lattice).
std::string lattice_name(const BinaryEvenForm& f);
std::string oriented_lattice_name(const BinaryEvenForm& f);

/// Unique representative with 0 <= 2b <= a <= c.
BinaryEvenForm gl2_reduce(const BinaryEvenForm& f);
/// Unique representative in the oriented window.
OrientedClassRep sl2_reduce(const BinaryEvenForm& f);
bool is_gl2_reduced(const BinaryEvenForm& f);
bool is_sl2_reduced(const BinaryEvenForm& f);

/// All GL2-reduced even forms of determinant d, sorted by (a, b, c).
std::vector<BinaryEvenForm> enumerate_even_classes(std::int64_t d);

/// Number of SL2 classes over the GL2 class of a reduced form: 2 exactly
/// when 0 < 2b < a < c. Throws on non-reduced input.
int sl2_fiber_size(const BinaryEvenForm& f);

Lattice lattice_of(const BinaryEvenForm& f);

struct ClassicalForm {
  std::int64_t a = 0, b = 0, c = 0;

  ClassicalForm() = default;
  /// Throws unless a > 0, b^2 - 4ac < 0 and gcd(a, b, c) == 1.
  ClassicalForm(std::int64_t a, std::int64_t b, std::int64_t c);

  std::int64_t discriminant() const { return b * b - 4 * a * c; }
  bool is_reduced() const;

  auto operator<=>(const ClassicalForm&) const = default;
};

/// "(a,b,c)"
std::string to_string(const ClassicalForm& f);

ClassicalForm classical_reduce(const ClassicalForm& f);
/// Reduced Gauss composition; throws std::invalid_argument on a
/// discriminant mismatch.
ClassicalForm compose(const ClassicalForm& f, const ClassicalForm& g);
ClassicalForm inverse(const ClassicalForm& f);
ClassicalForm principal_form(std::int64_t discriminant);

bool is_fundamental_discriminant(std::int64_t d);

}  // namespace zariski
