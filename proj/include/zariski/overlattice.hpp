#pragma once

// Even overlattices M of M0 = (root lattice) + <h> and the admissibility
// conditions on them: no v with (v, h) = 1, (v, v) = 0 (check_m1), and no
// roots orthogonal to h beyond those of the root lattice (check_m2).

#include "zariski/fqm.hpp"
#include "zariski/lattice.hpp"

#include <memory>
#include <vector>

namespace zariski {

class Overlattice {
 public:
  /// The overlattice M0 + (lifts of H). H must be totally isotropic in the
  /// discriminant form of base.m0 (described by disc); throws
  /// std::invalid_argument if the resulting Gram is not integral and even.
  Overlattice(PolarizedRootData base, const DiscriminantGroup& disc, SubgroupData glue);

  const PolarizedRootData& base() const { return base_; }
  const SubgroupData& glue() const { return glue_; }
  /// Columns are a Z-basis of M in M0 coordinates.
  const RatMatrix& basis() const { return basis_; }
  const Integer& index() const { return index_; }
  /// One vector of M per coset of M0 in M (the lift of each glue element).
  const std::vector<RatVector>& coset_representatives() const { return cosets_; }

  /// M with its own Gram matrix; basis_in_ambient holds basis().
  const Lattice& lattice() const { return lattice_; }
  bool contains(const RatVector& v) const;
  /// Coordinates of an isometry of M0 (given on M0 coordinates) in the basis
  /// of M; throws if it does not preserve M.
  IntMatrix restrict_isometry(const IntMatrix& g) const;

 private:
  PolarizedRootData base_;
  SubgroupData glue_;
  RatMatrix basis_;
  Integer index_;
  std::vector<RatVector> cosets_;
  Lattice lattice_;
  Integer scale_;
  std::shared_ptr<const IntegerSpan> span_;  // span of scale_ * basis_
};

Overlattice overlattice_from_isotropic(const PolarizedRootData& base, const DiscriminantGroup& disc,
                                       const SubgroupData& glue);

/// Every v in M with (v, h) = 0 and (v, v) = -2, in M0 coordinates, sorted.
/// Enumerated coset by coset of the root lattice inside h^perp cap M.
std::vector<RatVector> roots_orthogonal_to_h(const Overlattice& m);

bool check_m1(const Overlattice& m);
bool check_m2(const Overlattice& m);

struct Admissibility {
  bool m1 = false;
  bool m2 = false;
  std::size_t roots = 0;  // roots orthogonal to h
  bool admissible() const { return m1 && m2; }
};

/// Both conditions from a single root enumeration.
Admissibility admissibility(const Overlattice& m);

}  // namespace zariski
