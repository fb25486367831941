#pragma once

// Class groups of imaginary quadratic orders via reduced forms, the
// doubling map from ideal classes to oriented rank-2 lattices, and the
// Hilbert class polynomial from the q-expansion of j.

#include "zariski/binforms.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace zariski {

class PrecisionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ClassGroup {
  std::int64_t discriminant = 0;
  /// Reduced forms; forms[0] is the principal form. Ordered by a, then |b|,
  /// with b > 0 before -b.
  std::vector<ClassicalForm> forms;
  /// table[i][j] = index of forms[i] * forms[j].
  std::vector<std::vector<std::size_t>> table;
  /// Invariant factors, each dividing the next (empty for the trivial group).
  std::vector<std::int64_t> structure;
  /// Minimal generating set picked greedily in form order.
  std::vector<std::size_t> generators;

  std::size_t order() const { return forms.size(); }
  bool is_cyclic() const { return structure.size() <= 1; }
  std::size_t index_of(const ClassicalForm& f) const;
  std::size_t element_order(std::size_t i) const;
};

/// Throws std::invalid_argument unless d is a negative fundamental discriminant.
ClassGroup class_group(std::int64_t discriminant);

/// Form of the lattice Z + Z tau with tau = (p + sqrt(D)) / q, q > 0,
/// reduced. Throws std::invalid_argument if tau does not have discriminant D.
ClassicalForm ideal_to_form(std::int64_t p, std::int64_t q, std::int64_t discriminant);

/// (a, b, c) -> SL2 class of the even form [[2a, b], [b, 2c]].
OrientedClassRep shioda_mitani(const ClassicalForm& f);

struct EmbeddingRow {
  std::size_t index = 0;
  ClassicalForm ideal_class;
  ClassicalForm square;
  OrientedClassRep lattice;
};

struct CMEmbeddingReport {
  std::int64_t discriminant = 0;
  /// One row per class. For a cyclic group row i is the i-th power of the
  /// generator; otherwise the class-group order is used.
  std::vector<EmbeddingRow> rows;
};

CMEmbeddingReport embedding_lattices(std::int64_t discriminant);

struct HilbertPolynomial {
  std::int64_t discriminant = 0;
  /// Highest degree first, leading coefficient 1.
  std::vector<Integer> coefficients;
  /// Largest distance of a computed coefficient (real or imaginary part)
  /// from the chosen integer.
  double rounding_error = 0;
  unsigned precision_digits = 0;
  unsigned q_terms = 0;

  std::size_t degree() const { return coefficients.empty() ? 0 : coefficients.size() - 1; }
};

/// Coefficients c_{-1}, c_0, c_1, ... of j(q) = sum c_n q^n, n from -1.
std::vector<Integer> j_coefficients(unsigned terms);

/// Throws PrecisionError when the rounding error exceeds 0.25.
HilbertPolynomial hilbert_class_polynomial(std::int64_t discriminant, unsigned precision_digits = 80,
                                           unsigned q_terms = 60);

std::string render_polynomial(const std::vector<Integer>& coefficients, const std::string& variable = "t");

}  // namespace zariski
