#include "zariski/overlattice.hpp"

#include <algorithm>

namespace zariski {

Overlattice::Overlattice(PolarizedRootData base, const DiscriminantGroup& disc, SubgroupData glue)
    : base_(std::move(base)), glue_(std::move(glue)) {
  const IntMatrix& g0 = base_.m0.gram();
  const Eigen::Index n = g0.rows();
  const FiniteQuadraticForm& q = disc.form();

  for (auto idx : glue_.elements) cosets_.push_back(disc.lift(q.element_at(idx)));
  index_ = static_cast<long>(glue_.order());

  const auto gens = glue_.generators(q);
  RatMatrix spanning(n, n + static_cast<Eigen::Index>(gens.size()));
  spanning.leftCols(n) = RatMatrix::Identity(n, n);
  for (std::size_t i = 0; i < gens.size(); ++i) spanning.col(n + static_cast<Eigen::Index>(i)) = disc.lift(gens[i]);

  scale_ = common_denominator(spanning);
  const IntMatrix scaled = to_integer(RatMatrix(spanning * Rational(scale_)));
  const IntMatrix rows = hermite_normal_form(IntMatrix(scaled.transpose()));
  basis_ = rows.transpose().cast<Rational>() / Rational(scale_);
  span_ = std::make_shared<const IntegerSpan>(IntMatrix(rows.transpose()));

  const RatMatrix gram = basis_.transpose() * g0.cast<Rational>() * basis_;
  if (!is_integral(gram)) throw std::invalid_argument("overlattice: glue is not isotropic (non-integral Gram)");
  lattice_ = Lattice(to_integer(gram), basis_);
  if (!lattice_.is_even()) throw std::invalid_argument("overlattice: glue is not isotropic (odd Gram)");
  if (lattice_.determinant() * index_ * index_ != base_.m0.determinant())
    throw std::logic_error("overlattice: determinant does not match the glue order");
}

bool Overlattice::contains(const RatVector& v) const { return span_->contains(RatVector(v * Rational(scale_))); }

IntMatrix Overlattice::restrict_isometry(const IntMatrix& g) const {
  const RatMatrix image = g.cast<Rational>() * basis_;
  IntMatrix out(basis_.cols(), basis_.cols());
  for (Eigen::Index j = 0; j < basis_.cols(); ++j) {
    auto x = span_->solve(RatVector(image.col(j) * Rational(scale_)));
    if (!x) throw std::invalid_argument("restrict_isometry: isometry does not preserve the overlattice");
    out.col(j) = *x;
  }
  return out;
}

Overlattice overlattice_from_isotropic(const PolarizedRootData& base, const DiscriminantGroup& disc,
                                       const SubgroupData& glue) {
  return Overlattice(base, disc, glue);
}

std::vector<RatVector> roots_orthogonal_to_h(const Overlattice& m) {
  const auto& base = m.base();
  const Eigen::Index r = base.root_rank();
  const IntMatrix cartan = base.positive_root_gram();
  std::vector<RatVector> roots;
  for (const auto& rep : m.coset_representatives()) {
    // Only cosets meeting h^perp: integral h-coordinate, which can then be
    // subtracted off inside M0.
    if (!is_integral(rep(base.h_index()))) continue;
    const RatVector shift = rep.head(r);
    for (const auto& u : vectors_of_norm(cartan, Rational(2), shift)) {
      RatVector v = RatVector::Zero(r + 1);
      v.head(r) = u;
      roots.push_back(std::move(v));
    }
  }
  std::sort(roots.begin(), roots.end(), [](const RatVector& a, const RatVector& b) { return lex_less(a, b); });
  return roots;
}

namespace {

// v with (v, h) = 1, (v, v) = 0 exists iff u = 2v - h is a root of
// h^perp cap M with (u + h) / 2 in M.
bool m1_holds(const Overlattice& m, const std::vector<RatVector>& roots) {
  const Eigen::Index h = m.base().h_index();
  for (auto u : roots) {
    u(h) += 1;
    if (m.contains(RatVector(u / Rational(2)))) return false;
  }
  return true;
}

bool m2_holds(const Overlattice& m, const std::vector<RatVector>& roots) {
  if (Integer(static_cast<long>(roots.size())) != m.base().root_count) return false;
  return std::all_of(roots.begin(), roots.end(), [](const RatVector& v) { return is_integral(v); });
}

}  // namespace

bool check_m1(const Overlattice& m) { return m1_holds(m, roots_orthogonal_to_h(m)); }

bool check_m2(const Overlattice& m) { return m2_holds(m, roots_orthogonal_to_h(m)); }

Admissibility admissibility(const Overlattice& m) {
  const auto roots = roots_orthogonal_to_h(m);
  return {m1_holds(m, roots), m2_holds(m, roots), roots.size()};
}

}  // namespace zariski
