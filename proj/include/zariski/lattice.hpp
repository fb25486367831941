#pragma once

#include "zariski/linalg.hpp"
#include "zariski/numeric.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace zariski {

enum class Family { A, D, E };

struct DynkinComponent {
  Family family;
  int index;
  int multiplicity = 1;

  bool operator==(const DynkinComponent&) const = default;
};

/// Finite formal sum of A/D/E symbols. Components are kept merged and in
/// canonical order: family A, D, E, and within a family by decreasing index.
class DynkinType {
 public:
  DynkinType() = default;
  explicit DynkinType(std::vector<DynkinComponent> components);

  /// Parses "A16+A2+A1", "2A7+D5", ... (case-insensitive, whitespace
  /// tolerant). Throws std::invalid_argument on malformed input.
  static DynkinType parse(std::string_view text);

  const std::vector<DynkinComponent>& components() const { return components_; }

  /// Components with multiplicities expanded, in basis order.
  std::vector<DynkinComponent> expanded() const;

  int rank() const;
  std::string to_string() const;
  bool empty() const { return components_.empty(); }

  bool operator==(const DynkinType&) const = default;

 private:
  std::vector<DynkinComponent> components_;
};

std::string family_name(Family f);

/// Nondegenerate integral symmetric bilinear form given by its Gram matrix.
/// basis_in_ambient, when present, holds the basis vectors as columns in the
/// coordinates of a reference lattice.
class Lattice {
 public:
  Lattice() = default;
  explicit Lattice(IntMatrix gram, std::optional<RatMatrix> basis_in_ambient = std::nullopt);

  const IntMatrix& gram() const { return gram_; }
  const std::optional<RatMatrix>& basis_in_ambient() const { return basis_; }
  Eigen::Index rank() const { return gram_.rows(); }
  bool is_even() const { return even_; }
  Integer determinant() const { return zariski::determinant(gram_); }
  Signature signature() const { return zariski::signature(gram_); }

  Rational norm(const RatVector& v) const;
  Rational pairing(const RatVector& v, const RatVector& w) const;

 private:
  IntMatrix gram_;
  std::optional<RatMatrix> basis_;
  bool even_ = true;
};

IntMatrix cartan_matrix(Family family, int index);

/// Negative-definite root lattice of the given type (negated Cartan matrix,
/// block diagonal, Bourbaki node order per component).
Lattice root_lattice(const DynkinType& type);

/// Number of roots of a single component.
Integer root_count(Family family, int index);

/// The polarized lattice M0 = (root lattice) + <h>, (h, h) = 2, with the
/// fundamental roots first and h as the last basis vector.
struct PolarizedRootData {
  DynkinType dynkin;
  Lattice m0;
  Integer root_count;

  Eigen::Index root_rank() const { return m0.rank() - 1; }
  Eigen::Index h_index() const { return m0.rank() - 1; }
  /// Positive-definite Gram of the root lattice (the Cartan matrix).
  IntMatrix positive_root_gram() const { return -m0.gram().topLeftCorner(root_rank(), root_rank()); }
};

PolarizedRootData polarized_m0(const DynkinType& type);

}  // namespace zariski
