#pragma once

// Connected components of the moduli of lattice-polarized surfaces with a
// prescribed root configuration: overlattice classes M, complementary
// rank-2 lattices N, and orbits of gluing isomorphisms G_M -> G_N.

#include "zariski/binforms.hpp"
#include "zariski/fqm.hpp"
#include "zariski/overlattice.hpp"

#include <stdexcept>
#include <vector>

namespace zariski {

/// Raised for inputs the classification does not cover (rank other than 19).
class OutOfScope : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Node permutation: perm[i] is the image of fundamental root i.
using Permutation = std::vector<int>;

/// Symmetries of the Dynkin diagram (component automorphisms and swaps of
/// equal components), acting on M0 and fixing h. Only generators are kept.
struct DiagramSymmetryGroup {
  std::vector<Permutation> generators;
  std::vector<FqmMap> induced;  // on the discriminant form of M0, per generator
  std::size_t order = 1;
};

std::vector<Permutation> diagram_generators(const DynkinType& type);
DiagramSymmetryGroup diagram_symmetries(const DynkinType& type, const DiscriminantGroup& m0_disc);
/// Action on M0 coordinates (roots permuted, h fixed).
IntMatrix permutation_matrix(const Permutation& p);

struct MsEntry {
  Overlattice lattice;
  DiscriminantGroup discriminant;  // of M
  std::size_t orbit;               // class id among admissible overlattices
  bool representative;             // first member of its orbit
  std::size_t orbit_size;
  std::size_t stabilizer_order;
  std::vector<Permutation> stabilizer_generators;  // Schreier generators
  Admissibility checks;
};

struct MsEnumeration {
  PolarizedRootData base;
  DiscriminantGroup m0_discriminant;
  DiagramSymmetryGroup symmetries;
  /// Orbits of isotropic glue subgroups examined; the search does not extend
  /// past a non-admissible one.
  std::size_t examined_glue_orbits = 0;
  /// Admissible overlattices in canonical (index, Hermite form) order.
  std::vector<MsEntry> entries;

  /// Indices into entries of the orbit representatives.
  std::vector<std::size_t> class_representatives() const;
};

/// Throws OutOfScope unless rank(type) == 19.
MsEnumeration enumerate_ms(const DynkinType& type);
/// Same enumeration without the rank gate.
MsEnumeration enumerate_ms_any_rank(const DynkinType& type);

/// GL2-reduced even N of determinant |G_M| with (G_N, q_N) isomorphic to
/// (G_M, -q_M).
std::vector<BinaryEvenForm> enumerate_ns(const MsEntry& m);

/// Isomorphisms (G_M, -q_M) -> (G_N, q_N), sorted.
std::vector<FqmMap> enumerate_ls(const MsEntry& m, const BinaryEvenForm& n);

struct Rank2Isometry {
  IntMatrix matrix;  // columns are the images of the basis vectors
  int det = 1;
};

/// O(N) of a positive-definite binary even form.
std::vector<Rank2Isometry> rank2_orthogonal_group(const BinaryEvenForm& n);

struct GluingOrbit {
  std::size_t size = 0;   // number of (gamma, sign) pairs
  bool real = false;      // (gamma, +) and (gamma, -) lie in one orbit
  std::size_t gluing = 0; // representative: index into the sorted Ls
  int sign = 1;
  std::size_t conjugate = 0;  // orbit of (gluing, -sign); itself when real
};

struct OrbitReport {
  BinaryEvenForm n;
  std::size_t ls_size = 0;
  std::size_t stabilizer_order = 0;
  std::size_t orthogonal_order = 0;
  std::vector<GluingOrbit> orbits;

  std::size_t real_count() const;
};

/// Orbits of Stab(M) x O(N) on Ls x {+1, -1}.
OrbitReport fiber_orbits(const MsEntry& m, const BinaryEvenForm& n);

struct MsClassReport {
  std::size_t entry = 0;  // index of the representative in MsEnumeration::entries
  std::vector<BinaryEvenForm> ns;
  std::vector<OrbitReport> fibers;  // parallel to ns
};

struct CandidatePair {
  std::size_t ms_class = 0;  // index into ComponentReport::classes
  BinaryEvenForm first, second;
};

struct ComponentReport {
  MsEnumeration ms;
  std::vector<MsClassReport> classes;  // one per Ms class, including those with no N
  std::vector<CandidatePair> candidate_pairs;

  std::size_t component_count() const;
  std::size_t real_component_count() const;
  /// Classes with a nonempty list of N.
  std::size_t sharp_class_count() const;
};

/// Full pipeline for a rank-19 type; throws OutOfScope otherwise.
ComponentReport component_report(const DynkinType& type);

}  // namespace zariski
