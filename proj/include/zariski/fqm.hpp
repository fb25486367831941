#pragma once

// Finite quadratic forms (G, q): finite abelian groups in invariant-factor
// form with q: G -> Q/2Z and b: G x G -> Q/Z. Elements are coordinate tuples
// over the invariant factors.

#include "zariski/lattice.hpp"
#include "zariski/numeric.hpp"

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace zariski {

using Element = std::vector<std::int64_t>;

class FiniteQuadraticForm {
 public:
  /// The trivial form.
  FiniteQuadraticForm() = default;

  /// invariant_factors must be > 1 with each dividing the next; q_gen[i] is
  /// q of the i-th generator (mod 2), b(i, j) the pairing of generators
  /// (mod 1). Throws std::invalid_argument on inconsistent data.
  FiniteQuadraticForm(std::vector<std::int64_t> invariant_factors, const std::vector<Rational>& q_gen,
                      const RatMatrix& b);

  const std::vector<std::int64_t>& invariant_factors() const { return factors_; }
  std::size_t generator_count() const { return factors_.size(); }
  std::int64_t order() const;
  /// Largest invariant factor (1 for the trivial group). Every q value lies
  /// in (1/exponent) Z / 2Z and every b value in (1/exponent) Z / Z.
  std::int64_t exponent() const { return factors_.empty() ? 1 : factors_.back(); }

  Rational q(const Element& x) const;                    // in [0, 2)
  Rational b(const Element& x, const Element& y) const;  // in [0, 1)
  Rational q_generator(std::size_t i) const { return q(unit(i)); }
  Rational b_generator(std::size_t i, std::size_t j) const { return b(unit(i), unit(j)); }

  /// Numerators of q(x) mod 2 and b(x, y) mod 1 over the common denominator
  /// exponent(); exact and cheap, used by the search routines.
  std::int64_t q_numerator(const Element& x) const;
  std::int64_t b_numerator(const Element& x, const Element& y) const;

  Element zero() const { return Element(factors_.size(), 0); }
  Element unit(std::size_t i) const;
  Element add(const Element& x, const Element& y) const;
  Element scale(std::int64_t k, const Element& x) const;
  Element reduce(Element x) const;
  std::int64_t element_order(const Element& x) const;

  /// Mixed-radix enumeration of the group, 0 <= index < order().
  std::size_t index_of(const Element& x) const;
  Element element_at(std::size_t index) const;
  std::vector<Element> elements() const;

  bool is_nondegenerate() const;

  bool operator==(const FiniteQuadraticForm& o) const;

 private:
  friend FiniteQuadraticForm negate(const FiniteQuadraticForm& q);

  std::vector<std::int64_t> factors_;
  std::vector<std::int64_t> q_num_;   // mod 2 * exponent
  Matrix<std::int64_t> b_num_;        // mod exponent
};

/// Same group, q -> -q, b -> -b.
FiniteQuadraticForm negate(const FiniteQuadraticForm& q);

/// Homomorphism given by the images of the source generators.
struct FqmMap {
  std::vector<Element> images;

  bool operator==(const FqmMap&) const = default;
  auto operator<=>(const FqmMap&) const = default;
};

Element apply(const FqmMap& f, const FiniteQuadraticForm& target, const Element& x);
/// (f o g): first g, then f; dst is the target of f.
FqmMap compose(const FqmMap& f, const FqmMap& g, const FiniteQuadraticForm& dst);
FqmMap identity_map(const FiniteQuadraticForm& q);
/// Inverse of a bijective map src -> dst.
FqmMap inverse(const FqmMap& f, const FiniteQuadraticForm& src, const FiniteQuadraticForm& dst);
bool is_isometry(const FqmMap& f, const FiniteQuadraticForm& src, const FiniteQuadraticForm& dst);

/// A subgroup stored canonically: hnf is the row Hermite form of its
/// preimage lattice in Z^k (relations d_i e_i included), elements is the
/// sorted list of element indices.
struct SubgroupData {
  Matrix<std::int64_t> hnf;
  std::vector<std::size_t> elements;

  std::size_t order() const { return elements.size(); }
  /// Rows of hnf that are nonzero in the group.
  std::vector<Element> generators(const FiniteQuadraticForm& q) const;
  bool contains(std::size_t element_index) const;

  bool operator==(const SubgroupData& o) const { return elements == o.elements; }
};

SubgroupData make_subgroup(const FiniteQuadraticForm& q, std::vector<std::size_t> element_indices);
SubgroupData generated_subgroup(const FiniteQuadraticForm& q, const std::vector<Element>& generators);
/// Image of a subgroup under an endomorphism/automorphism of q.
SubgroupData image(const FqmMap& f, const FiniteQuadraticForm& q, const SubgroupData& h);
/// Canonical order: by subgroup order, then by Hermite form.
bool subgroup_less(const SubgroupData& a, const SubgroupData& b);

/// Every subgroup on which q vanishes identically (mod 2), trivial one
/// included, in canonical order.
std::vector<SubgroupData> isotropic_subgroups(const FiniteQuadraticForm& q);

/// All group isomorphisms src -> dst preserving q, ordered by generator
/// images.
std::vector<FqmMap> fqm_isomorphisms(const FiniteQuadraticForm& src, const FiniteQuadraticForm& dst);
std::vector<FqmMap> orthogonal_group(const FiniteQuadraticForm& q);

/// Signature mod 8 from the Gauss sum sum_x exp(pi i q(x)) = sqrt|G| e^{2 pi i s / 8}.
int milgram_signature(const FiniteQuadraticForm& q);

/// Discriminant group of an even lattice together with the data needed to
/// move between dual vectors (lattice coordinates) and group elements.
class DiscriminantGroup {
 public:
  explicit DiscriminantGroup(const Lattice& lattice);

  const FiniteQuadraticForm& form() const { return form_; }
  const Lattice& lattice() const { return lattice_; }
  /// Column i is a dual vector representing the i-th generator.
  const RatMatrix& generators() const { return generators_; }

  /// Class of a dual-lattice vector; throws if v is not in the dual.
  Element element_of(const RatVector& v) const;
  /// A dual vector in the class of x.
  RatVector lift(const Element& x) const;

 private:
  Lattice lattice_;
  FiniteQuadraticForm form_;
  RatMatrix generators_;
  IntMatrix coordinate_map_;  // V^{-1} of the Smith form of the Gram
  std::vector<Integer> diagonal_;
  std::vector<Eigen::Index> nontrivial_;
};

/// (G_L, q_L) of an even nondegenerate lattice.
FiniteQuadraticForm discriminant_form(const Lattice& lattice);

/// Automorphism of the discriminant form induced by an isometry g of the
/// lattice (matrix acting on lattice coordinates). Throws if g is not an
/// isometry.
FqmMap induced_map(const IntMatrix& g, const DiscriminantGroup& disc);

}  // namespace zariski
