#include "zariski/fqm.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

namespace zariski {

namespace {

using i128 = __int128;

std::int64_t mod64(i128 a, std::int64_t m) {
  i128 r = a % m;
  if (r < 0) r += m;
  return static_cast<std::int64_t>(r);
}

std::int64_t integral_numerator(const Rational& r, const char* what) {
  if (!is_integral(r)) throw std::invalid_argument(std::string("FiniteQuadraticForm: ") + what);
  return to_int64(numerator(r));
}

}  // namespace

FiniteQuadraticForm::FiniteQuadraticForm(std::vector<std::int64_t> invariant_factors,
                                         const std::vector<Rational>& q_gen, const RatMatrix& b)
    : factors_(std::move(invariant_factors)) {
  const std::size_t k = factors_.size();
  if (q_gen.size() != k || static_cast<std::size_t>(b.rows()) != k || static_cast<std::size_t>(b.cols()) != k)
    throw std::invalid_argument("FiniteQuadraticForm: dimension mismatch");
  for (std::size_t i = 0; i < k; ++i) {
    if (factors_[i] < 2) throw std::invalid_argument("FiniteQuadraticForm: invariant factors must exceed 1");
    if (i > 0 && factors_[i] % factors_[i - 1] != 0)
      throw std::invalid_argument("FiniteQuadraticForm: invariant factors must form a divisibility chain");
  }
  const std::int64_t n = exponent();
  q_num_.resize(k);
  b_num_.resize(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(k));
  for (std::size_t i = 0; i < k; ++i) {
    q_num_[i] = mod64(integral_numerator(q_gen[i] * n, "q value has a denominator not dividing the exponent"), 2 * n);
    for (std::size_t j = 0; j < k; ++j) {
      const auto ii = static_cast<Eigen::Index>(i), jj = static_cast<Eigen::Index>(j);
      if (!is_integral((b(ii, jj) - b(jj, ii)))) throw std::invalid_argument("FiniteQuadraticForm: b is not symmetric");
      if (!is_integral(b(ii, jj) * factors_[i]))
        throw std::invalid_argument("FiniteQuadraticForm: b incompatible with the element orders");
      b_num_(ii, jj) = mod64(integral_numerator(b(ii, jj) * n, "b value has a bad denominator"), n);
    }
  }
  for (std::size_t i = 0; i < k; ++i) {
    const auto ii = static_cast<Eigen::Index>(i);
    if (mod64(q_num_[i] - b_num_(ii, ii), n) != 0) throw std::invalid_argument("FiniteQuadraticForm: q(x) != b(x, x) mod 1");
    // q(d x) = d^2 q(x) must vanish mod 2.
    if (mod64(static_cast<i128>(factors_[i]) * factors_[i] * q_num_[i], 2 * n) != 0)
      throw std::invalid_argument("FiniteQuadraticForm: q does not vanish on d_i * g_i");
  }
}

bool FiniteQuadraticForm::operator==(const FiniteQuadraticForm& o) const {
  return factors_ == o.factors_ && q_num_ == o.q_num_ && (factors_.empty() || b_num_ == o.b_num_);
}

std::int64_t FiniteQuadraticForm::order() const {
  std::int64_t n = 1;
  for (auto d : factors_) n *= d;
  return n;
}

std::int64_t FiniteQuadraticForm::q_numerator(const Element& x) const {
  const std::int64_t m = 2 * exponent();
  i128 acc = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    acc += static_cast<i128>(x[i]) * x[i] % m * q_num_[i];
    for (std::size_t j = i + 1; j < x.size(); ++j)
      acc += 2 * (static_cast<i128>(x[i]) * x[j] % m) * b_num_(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
    acc %= m;
  }
  return mod64(acc, m);
}

std::int64_t FiniteQuadraticForm::b_numerator(const Element& x, const Element& y) const {
  const std::int64_t n = exponent();
  i128 acc = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < y.size(); ++j)
      acc += static_cast<i128>(x[i]) * y[j] % n * b_num_(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
    acc %= n;
  }
  return mod64(acc, n);
}

Rational FiniteQuadraticForm::q(const Element& x) const {
  return Rational(Integer(q_numerator(x)), Integer(exponent()));
}

Rational FiniteQuadraticForm::b(const Element& x, const Element& y) const {
  return Rational(Integer(b_numerator(x, y)), Integer(exponent()));
}

Element FiniteQuadraticForm::unit(std::size_t i) const {
  Element e = zero();
  e.at(i) = 1;
  return e;
}

Element FiniteQuadraticForm::reduce(Element x) const {
  for (std::size_t i = 0; i < x.size(); ++i) x[i] = mod64(x[i], factors_[i]);
  return x;
}

Element FiniteQuadraticForm::add(const Element& x, const Element& y) const {
  Element z(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) z[i] = mod64(static_cast<i128>(x[i]) + y[i], factors_[i]);
  return z;
}

Element FiniteQuadraticForm::scale(std::int64_t k, const Element& x) const {
  Element z(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) z[i] = mod64(static_cast<i128>(k) * x[i], factors_[i]);
  return z;
}

std::int64_t FiniteQuadraticForm::element_order(const Element& x) const {
  std::int64_t ord = 1;
  for (std::size_t i = 0; i < x.size(); ++i) ord = std::lcm(ord, factors_[i] / std::gcd(x[i], factors_[i]));
  return ord;
}

std::size_t FiniteQuadraticForm::index_of(const Element& x) const {
  std::size_t idx = 0;
  for (std::size_t i = 0; i < x.size(); ++i) idx = idx * static_cast<std::size_t>(factors_[i]) + static_cast<std::size_t>(x[i]);
  return idx;
}

Element FiniteQuadraticForm::element_at(std::size_t index) const {
  Element x(factors_.size());
  for (std::size_t i = factors_.size(); i-- > 0;) {
    x[i] = static_cast<std::int64_t>(index % static_cast<std::size_t>(factors_[i]));
    index /= static_cast<std::size_t>(factors_[i]);
  }
  return x;
}

std::vector<Element> FiniteQuadraticForm::elements() const {
  std::vector<Element> out;
  const auto n = static_cast<std::size_t>(order());
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(element_at(i));
  return out;
}

bool FiniteQuadraticForm::is_nondegenerate() const {
  const auto n = static_cast<std::size_t>(order());
  for (std::size_t idx = 1; idx < n; ++idx) {
    const Element x = element_at(idx);
    bool radical = true;
    for (std::size_t i = 0; i < factors_.size() && radical; ++i)
      if (b_numerator(x, unit(i)) != 0) radical = false;
    if (radical) return false;
  }
  return true;
}

FiniteQuadraticForm negate(const FiniteQuadraticForm& q) {
  FiniteQuadraticForm r = q;
  const std::int64_t n = q.exponent();
  for (auto& v : r.q_num_) v = mod64(-static_cast<i128>(v), 2 * n);
  for (Eigen::Index i = 0; i < r.b_num_.rows(); ++i)
    for (Eigen::Index j = 0; j < r.b_num_.cols(); ++j) r.b_num_(i, j) = mod64(-static_cast<i128>(r.b_num_(i, j)), n);
  return r;
}

Element apply(const FqmMap& f, const FiniteQuadraticForm& target, const Element& x) {
  Element y = target.zero();
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] != 0) y = target.add(y, target.scale(x[i], f.images[i]));
  return y;
}

FqmMap compose(const FqmMap& f, const FqmMap& g, const FiniteQuadraticForm& dst) {
  FqmMap h;
  h.images.reserve(g.images.size());
  for (const auto& gi : g.images) h.images.push_back(apply(f, dst, gi));
  return h;
}

FqmMap identity_map(const FiniteQuadraticForm& q) {
  FqmMap id;
  for (std::size_t i = 0; i < q.generator_count(); ++i) id.images.push_back(q.unit(i));
  return id;
}

FqmMap inverse(const FqmMap& f, const FiniteQuadraticForm& src, const FiniteQuadraticForm& dst) {
  FqmMap inv;
  inv.images.assign(dst.generator_count(), Element{});
  std::vector<std::size_t> unit_index(dst.generator_count());
  for (std::size_t j = 0; j < dst.generator_count(); ++j) unit_index[j] = dst.index_of(dst.unit(j));
  std::size_t found = 0;
  const auto n = static_cast<std::size_t>(src.order());
  for (std::size_t idx = 0; idx < n && found < unit_index.size(); ++idx) {
    const Element x = src.element_at(idx);
    const std::size_t y = dst.index_of(apply(f, dst, x));
    for (std::size_t j = 0; j < unit_index.size(); ++j)
      if (unit_index[j] == y && inv.images[j].empty()) {
        inv.images[j] = x;
        ++found;
      }
  }
  if (found != unit_index.size()) throw std::invalid_argument("inverse: map is not surjective");
  return inv;
}

bool is_isometry(const FqmMap& f, const FiniteQuadraticForm& src, const FiniteQuadraticForm& dst) {
  if (src.invariant_factors() != dst.invariant_factors() || f.images.size() != src.generator_count()) return false;
  for (std::size_t i = 0; i < src.generator_count(); ++i) {
    if (dst.element_order(f.images[i]) != src.invariant_factors()[i]) return false;
    if (dst.q(f.images[i]) != src.q_generator(i)) return false;
    for (std::size_t j = 0; j < i; ++j)
      if (dst.b(f.images[i], f.images[j]) != src.b_generator(i, j)) return false;
  }
  std::vector<char> hit(static_cast<std::size_t>(dst.order()), 0);
  const auto n = static_cast<std::size_t>(src.order());
  for (std::size_t idx = 0; idx < n; ++idx) {
    const std::size_t y = dst.index_of(apply(f, dst, src.element_at(idx)));
    if (hit[y]) return false;
    hit[y] = 1;
  }
  return true;
}

std::vector<Element> SubgroupData::generators(const FiniteQuadraticForm& q) const {
  std::vector<Element> out;
  for (Eigen::Index i = 0; i < hnf.rows(); ++i) {
    Element x(static_cast<std::size_t>(hnf.cols()));
    for (Eigen::Index j = 0; j < hnf.cols(); ++j) x[static_cast<std::size_t>(j)] = hnf(i, j);
    x = q.reduce(x);
    if (std::any_of(x.begin(), x.end(), [](std::int64_t v) { return v != 0; })) out.push_back(x);
  }
  return out;
}

bool SubgroupData::contains(std::size_t element_index) const {
  return std::binary_search(elements.begin(), elements.end(), element_index);
}

SubgroupData make_subgroup(const FiniteQuadraticForm& q, std::vector<std::size_t> element_indices) {
  std::sort(element_indices.begin(), element_indices.end());
  element_indices.erase(std::unique(element_indices.begin(), element_indices.end()), element_indices.end());
  const auto k = static_cast<Eigen::Index>(q.generator_count());
  Matrix<std::int64_t> rows(static_cast<Eigen::Index>(element_indices.size()) + k, k);
  rows.setZero();
  Eigen::Index r = 0;
  for (auto idx : element_indices) {
    const Element x = q.element_at(idx);
    for (Eigen::Index j = 0; j < k; ++j) rows(r, j) = x[static_cast<std::size_t>(j)];
    ++r;
  }
  for (Eigen::Index j = 0; j < k; ++j) rows(r + j, j) = q.invariant_factors()[static_cast<std::size_t>(j)];
  return {hermite_normal_form(rows), std::move(element_indices)};
}

SubgroupData generated_subgroup(const FiniteQuadraticForm& q, const std::vector<Element>& generators) {
  std::set<std::size_t> members{q.index_of(q.zero())};
  std::deque<Element> frontier{q.zero()};
  while (!frontier.empty()) {
    const Element x = frontier.front();
    frontier.pop_front();
    for (const auto& g : generators) {
      Element y = q.add(x, q.reduce(g));
      if (members.insert(q.index_of(y)).second) frontier.push_back(std::move(y));
    }
  }
  return make_subgroup(q, {members.begin(), members.end()});
}

SubgroupData image(const FqmMap& f, const FiniteQuadraticForm& q, const SubgroupData& h) {
  std::vector<std::size_t> out;
  out.reserve(h.elements.size());
  for (auto idx : h.elements) out.push_back(q.index_of(apply(f, q, q.element_at(idx))));
  return make_subgroup(q, std::move(out));
}

bool subgroup_less(const SubgroupData& a, const SubgroupData& b) {
  if (a.order() != b.order()) return a.order() < b.order();
  if (a.hnf.rows() != b.hnf.rows()) return a.hnf.rows() < b.hnf.rows();
  for (Eigen::Index i = 0; i < a.hnf.rows(); ++i)
    for (Eigen::Index j = 0; j < a.hnf.cols(); ++j)
      if (a.hnf(i, j) != b.hnf(i, j)) return a.hnf(i, j) < b.hnf(i, j);
  return false;
}

std::vector<SubgroupData> isotropic_subgroups(const FiniteQuadraticForm& q) {
  const auto n = static_cast<std::size_t>(q.order());
  std::vector<std::size_t> isotropic;
  for (std::size_t idx = 1; idx < n; ++idx)
    if (q.q_numerator(q.element_at(idx)) == 0) isotropic.push_back(idx);

  std::vector<Element> iso_elements;
  for (auto idx : isotropic) iso_elements.push_back(q.element_at(idx));

  // Grow subgroups one isotropic element at a time; every isotropic subgroup
  // is reached through a chain of isotropic intermediate subgroups.
  struct Node {
    std::vector<std::size_t> elements;
    std::vector<Element> generators;
  };
  std::set<std::vector<std::size_t>> seen;
  std::deque<Node> queue;
  std::vector<std::size_t> trivial{q.index_of(q.zero())};
  seen.insert(trivial);
  queue.push_back({trivial, {}});
  std::vector<char> member(n), covered(n);
  while (!queue.empty()) {
    const Node current = std::move(queue.front());
    queue.pop_front();
    std::vector<Element> members;
    members.reserve(current.elements.size());
    std::fill(member.begin(), member.end(), 0);
    std::fill(covered.begin(), covered.end(), 0);
    for (auto idx : current.elements) {
      members.push_back(q.element_at(idx));
      member[idx] = 1;
    }
    for (std::size_t c = 0; c < isotropic.size(); ++c) {
      const std::size_t cand = isotropic[c];
      if (member[cand] || covered[cand]) continue;
      const Element& x = iso_elements[c];
      bool orthogonal = true;
      for (const auto& g : current.generators)
        if (q.b_numerator(x, g) != 0) {
          orthogonal = false;
          break;
        }
      if (!orthogonal) continue;
      // x + S, 2x + S, ... : the multiples kx with k prime to the order of x
      // modulo S give the same extension and are skipped later
      std::int64_t rel = 1;
      Element kx = x;
      while (!member[q.index_of(kx)]) {
        ++rel;
        kx = q.add(kx, x);
      }
      std::vector<std::size_t> grown;
      grown.reserve(current.elements.size() * static_cast<std::size_t>(rel));
      kx = q.zero();
      for (std::int64_t k = 0; k < rel; ++k) {
        const bool same = std::gcd(k, rel) == 1;
        for (const auto& m : members) {
          const std::size_t idx = q.index_of(q.add(m, kx));
          grown.push_back(idx);
          if (same) covered[idx] = 1;
        }
        kx = q.add(kx, x);
      }
      std::sort(grown.begin(), grown.end());
      if (seen.insert(grown).second) {
        Node next{std::move(grown), current.generators};
        next.generators.push_back(x);
        queue.push_back(std::move(next));
      }
    }
  }

  std::vector<SubgroupData> out;
  out.reserve(seen.size());
  for (const auto& key : seen) {
    SubgroupData h = make_subgroup(q, key);
    for (auto idx : h.elements)
      if (q.q_numerator(q.element_at(idx)) != 0) throw std::logic_error("isotropic_subgroups: non-isotropic element");
    const auto gens = h.generators(q);
    for (const auto& g1 : gens)
      for (const auto& g2 : gens)
        if (q.b_numerator(g1, g2) != 0) throw std::logic_error("isotropic_subgroups: bilinear form does not vanish");
    out.push_back(std::move(h));
  }
  std::sort(out.begin(), out.end(), subgroup_less);
  return out;
}

namespace {

class IsometrySearch {
 public:
  IsometrySearch(const FiniteQuadraticForm& src, const FiniteQuadraticForm& dst) : src_(src), dst_(dst) {}

  std::vector<FqmMap> run() {
    if (src_.invariant_factors() != dst_.invariant_factors()) return {};
    const std::size_t k = src_.generator_count();
    const auto n = static_cast<std::size_t>(dst_.order());
    candidates_.assign(k, {});
    for (std::size_t idx = 0; idx < n; ++idx) {
      const Element y = dst_.element_at(idx);
      const std::int64_t ord = dst_.element_order(y);
      const std::int64_t qy = dst_.q_numerator(y);
      for (std::size_t i = 0; i < k; ++i)
        if (ord == src_.invariant_factors()[i] && qy == src_.q_numerator(src_.unit(i))) candidates_[i].push_back(y);
    }
    current_.images.assign(k, Element{});
    extend(0);
    return std::move(out_);
  }

 private:
  void extend(std::size_t i) {
    if (i == src_.generator_count()) {
      if (injective()) out_.push_back(current_);
      return;
    }
    for (const auto& y : candidates_[i]) {
      bool ok = true;
      for (std::size_t j = 0; j < i && ok; ++j)
        ok = dst_.b_numerator(y, current_.images[j]) == src_.b_numerator(src_.unit(i), src_.unit(j));
      if (!ok) continue;
      current_.images[i] = y;
      extend(i + 1);
    }
  }

  bool injective() const {
    const auto n = static_cast<std::size_t>(src_.order());
    std::vector<char> hit(n, 0);
    for (std::size_t idx = 0; idx < n; ++idx) {
      const std::size_t y = dst_.index_of(apply(current_, dst_, src_.element_at(idx)));
      if (hit[y]) return false;
      hit[y] = 1;
    }
    return true;
  }

  const FiniteQuadraticForm& src_;
  const FiniteQuadraticForm& dst_;
  std::vector<std::vector<Element>> candidates_;
  FqmMap current_;
  std::vector<FqmMap> out_;
};

// Fixed-point reals with kBits fractional bits, used to locate the Gauss sum
// on the circle of radius sqrt|G|. All arithmetic is integer.
constexpr unsigned kBits = 192;

Integer fixed_one() { return Integer(1) << kBits; }

Integer fixed_atan_inverse(long x) {
  // atan(1/x) = sum_k (-1)^k / ((2k + 1) x^(2k + 1))
  Integer term = fixed_one() / x;
  const Integer x2 = Integer(x) * x;
  Integer sum = 0;
  for (long k = 0; term != 0; ++k) {
    sum += (k % 2 == 0 ? term : Integer(-term)) / (2 * k + 1);
    term /= x2;
  }
  return sum;
}

Integer fixed_pi() { return 16 * fixed_atan_inverse(5) - 4 * fixed_atan_inverse(239); }

// cos and sin of an angle |theta| <= 4 given in fixed point.
std::pair<Integer, Integer> fixed_cos_sin(const Integer& theta) {
  const Integer one = fixed_one();
  Integer c = 0, s = 0;
  Integer term = one;  // theta^n / n!
  for (long n = 0; term != 0; ++n) {
    switch (n % 4) {
      case 0: c += term; break;
      case 1: s += term; break;
      case 2: c -= term; break;
      case 3: s -= term; break;
    }
    term = term * theta / one / (n + 1);
  }
  return {c, s};
}

}  // namespace

std::vector<FqmMap> fqm_isomorphisms(const FiniteQuadraticForm& src, const FiniteQuadraticForm& dst) {
  return IsometrySearch(src, dst).run();
}

std::vector<FqmMap> orthogonal_group(const FiniteQuadraticForm& q) { return fqm_isomorphisms(q, q); }

int milgram_signature(const FiniteQuadraticForm& q) {
  if (!q.is_nondegenerate()) throw std::invalid_argument("milgram_signature: degenerate form");
  // sum over x of zeta^{k(x)} with zeta = exp(pi i / N), k(x) = N q(x) mod 2N
  const std::int64_t n = q.exponent();
  std::vector<std::int64_t> counts(static_cast<std::size_t>(2 * n), 0);
  const auto size = static_cast<std::size_t>(q.order());
  for (std::size_t idx = 0; idx < size; ++idx) ++counts[static_cast<std::size_t>(q.q_numerator(q.element_at(idx)))];

  const Integer pi = fixed_pi();
  Integer re = 0, im = 0;
  for (std::int64_t k = 0; k < 2 * n; ++k) {
    if (counts[static_cast<std::size_t>(k)] == 0) continue;
    const std::int64_t centered = k > n ? k - 2 * n : k;  // angle in (-pi, pi]
    const auto [c, s] = fixed_cos_sin(pi * centered / n);
    re += c * counts[static_cast<std::size_t>(k)];
    im += s * counts[static_cast<std::size_t>(k)];
  }
  // The sum is sqrt|G| times an 8th root of unity, so each coordinate is 0,
  // +-sqrt|G|/sqrt2 or +-sqrt|G|; a threshold at 1/2 separates them.
  const Integer half = fixed_one() / 2;
  const int sr = re > half ? 1 : re < -half ? -1 : 0;
  const int si = im > half ? 1 : im < -half ? -1 : 0;
  if (si == 0 && sr == 1) return 0;
  if (sr == 1 && si == 1) return 1;
  if (sr == 0 && si == 1) return 2;
  if (sr == -1 && si == 1) return 3;
  if (sr == -1 && si == 0) return 4;
  if (sr == -1 && si == -1) return 5;
  if (sr == 0 && si == -1) return 6;
  if (sr == 1 && si == -1) return 7;
  throw std::logic_error("milgram_signature: Gauss sum vanished");
}

DiscriminantGroup::DiscriminantGroup(const Lattice& lattice) : lattice_(lattice) {
  if (!lattice.is_even()) throw std::invalid_argument("discriminant form requires an even lattice");
  const IntMatrix& g = lattice.gram();
  const auto snf = smith_normal_form(g);
  coordinate_map_ = snf.v_inverse;
  const Eigen::Index n = g.rows();
  std::vector<std::int64_t> factors;
  for (Eigen::Index i = 0; i < n; ++i) {
    diagonal_.push_back(snf.D(i, i));
    if (snf.D(i, i) > 1) {
      nontrivial_.push_back(i);
      factors.push_back(to_int64(snf.D(i, i)));
    }
  }
  const auto k = static_cast<Eigen::Index>(nontrivial_.size());
  generators_.resize(n, k);
  for (Eigen::Index c = 0; c < k; ++c) {
    const Eigen::Index i = nontrivial_[static_cast<std::size_t>(c)];
    generators_.col(c) = snf.V.col(i).cast<Rational>() / Rational(snf.D(i, i));
  }
  const RatMatrix pair = generators_.transpose() * g.cast<Rational>() * generators_;
  std::vector<Rational> qv;
  RatMatrix bv(k, k);
  for (Eigen::Index i = 0; i < k; ++i) {
    qv.push_back(pair(i, i) - Rational(2 * floor_div(floor(pair(i, i)), 2)));
    for (Eigen::Index j = 0; j < k; ++j) bv(i, j) = pair(i, j) - Rational(floor(pair(i, j)));
  }
  form_ = FiniteQuadraticForm(std::move(factors), qv, bv);
}

Element DiscriminantGroup::element_of(const RatVector& v) const {
  const RatVector y = coordinate_map_.cast<Rational>() * v;
  Element x;
  std::size_t c = 0;
  for (Eigen::Index i = 0; i < y.size(); ++i) {
    const Rational scaled = y(i) * Rational(diagonal_[static_cast<std::size_t>(i)]);
    if (!is_integral(scaled)) throw std::invalid_argument("element_of: vector is not in the dual lattice");
    if (c < nontrivial_.size() && nontrivial_[c] == i) {
      x.push_back(to_int64(mod(numerator(scaled), diagonal_[static_cast<std::size_t>(i)])));
      ++c;
    }
  }
  return x;
}

RatVector DiscriminantGroup::lift(const Element& x) const {
  RatVector v = RatVector::Zero(lattice_.rank());
  for (std::size_t i = 0; i < x.size(); ++i) v += generators_.col(static_cast<Eigen::Index>(i)) * Rational(x[i]);
  return v;
}

FiniteQuadraticForm discriminant_form(const Lattice& lattice) { return DiscriminantGroup(lattice).form(); }

FqmMap induced_map(const IntMatrix& g, const DiscriminantGroup& disc) {
  const IntMatrix& gram = disc.lattice().gram();
  if (g.rows() != gram.rows() || g.cols() != gram.cols() || IntMatrix(g.transpose() * gram * g) != gram)
    throw std::invalid_argument("induced_map: matrix is not an isometry of the lattice");
  FqmMap f;
  const RatMatrix gr = g.cast<Rational>();
  for (Eigen::Index i = 0; i < disc.generators().cols(); ++i)
    f.images.push_back(disc.element_of(gr * disc.generators().col(i)));
  return f;
}

}  // namespace zariski
