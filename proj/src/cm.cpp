#include "zariski/cm.hpp"

#include <boost/multiprecision/mpfr.hpp>

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>

namespace zariski {

namespace {

using Real = mp::mpfr_float;

// Boost keeps the default mpfr precision in a process-wide variable.
std::mutex& precision_mutex() {
  static std::mutex m;
  return m;
}

class PrecisionScope {
 public:
  explicit PrecisionScope(unsigned digits) : lock_(precision_mutex()), saved_(Real::default_precision()) {
    Real::default_precision(digits);
  }
  ~PrecisionScope() { Real::default_precision(saved_); }
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

 private:
  std::lock_guard<std::mutex> lock_;
  unsigned saved_;
};

struct Complex {
  Real re, im;
};

Complex operator+(const Complex& x, const Complex& y) { return {x.re + y.re, x.im + y.im}; }
Complex operator-(const Complex& x, const Complex& y) { return {x.re - y.re, x.im - y.im}; }
Complex operator*(const Complex& x, const Complex& y) {
  return {x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re};
}
Complex inverse(const Complex& x) {
  const Real n = x.re * x.re + x.im * x.im;
  return {x.re / n, -x.im / n};
}

bool form_order(const ClassicalForm& x, const ClassicalForm& y) {
  auto key = [](const ClassicalForm& f) { return std::make_tuple(f.a, f.b < 0 ? -f.b : f.b, f.b < 0); };
  return key(x) < key(y);
}

std::vector<ClassicalForm> reduced_forms(std::int64_t d) {
  std::vector<ClassicalForm> out;
  for (std::int64_t a = 1; 3 * a * a <= -d; ++a) {
    for (std::int64_t b = -a + 1; b <= a; ++b) {
      const std::int64_t num = b * b - d;
      if (num % (4 * a) != 0) continue;
      const std::int64_t c = num / (4 * a);
      if (c < a || (a == c && b < 0)) continue;
      if (std::gcd(std::gcd(a, b), c) != 1) continue;
      out.emplace_back(a, b, c);
    }
  }
  std::sort(out.begin(), out.end(), form_order);
  return out;
}

std::vector<std::int64_t> prime_factors(std::int64_t n) {
  std::vector<std::int64_t> out;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    out.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::size_t power(const ClassGroup& g, std::size_t x, std::int64_t k) {
  std::size_t acc = 0;
  for (std::int64_t i = 0; i < k; ++i) acc = g.table[acc][x];
  return acc;
}

// Invariant factors from the sizes of the p^j-torsion subgroups.
std::vector<std::int64_t> structure_of(const ClassGroup& g) {
  const auto h = static_cast<std::int64_t>(g.order());
  std::vector<std::vector<int>> exponents;  // per prime, descending
  std::vector<std::int64_t> primes = prime_factors(h);
  std::size_t rank = 0;
  for (auto p : primes) {
    std::vector<int> at_least;  // number of cyclic factors of order >= p^j
    std::int64_t pj = 1, previous = 1;
    for (;;) {
      pj *= p;
      std::int64_t count = 0;
      for (std::size_t x = 0; x < g.order(); ++x)
        if (power(g, x, pj) == 0) ++count;
      if (count == previous) break;
      int e = 0;
      for (std::int64_t r = count / previous; r > 1; r /= p) ++e;
      at_least.push_back(e);
      previous = count;
    }
    std::vector<int> exps;
    for (int k = 1; !at_least.empty() && k <= at_least.front(); ++k)
      exps.push_back(static_cast<int>(std::count_if(at_least.begin(), at_least.end(), [k](int e) { return e >= k; })));
    rank = std::max(rank, exps.size());
    exponents.push_back(std::move(exps));
  }
  std::vector<std::int64_t> factors(rank, 1);
  for (std::size_t i = 0; i < primes.size(); ++i)
    for (std::size_t k = 0; k < exponents[i].size(); ++k)
      for (int e = 0; e < exponents[i][k]; ++e) factors[rank - 1 - k] *= primes[i];
  return factors;
}

std::vector<std::size_t> greedy_generators(const ClassGroup& g) {
  std::vector<std::size_t> gens;
  std::set<std::size_t> span{0};
  for (std::size_t x = 0; x < g.order() && span.size() < g.order(); ++x) {
    if (span.count(x)) continue;
    gens.push_back(x);
    // span * <x> = { y x^k }
    std::set<std::size_t> grown;
    for (auto y : span) {
      std::size_t z = y;
      do {
        grown.insert(z);
        z = g.table[z][x];
      } while (z != y);
    }
    span = std::move(grown);
  }
  return gens;
}

Real real_from(const Integer& z) { return Real(z); }

}  // namespace

std::size_t ClassGroup::index_of(const ClassicalForm& f) const {
  const ClassicalForm r = classical_reduce(f);
  const auto it = std::find(forms.begin(), forms.end(), r);
  if (it == forms.end()) throw std::invalid_argument("ClassGroup: form not in group");
  return static_cast<std::size_t>(it - forms.begin());
}

std::size_t ClassGroup::element_order(std::size_t i) const {
  std::size_t k = 1;
  for (std::size_t acc = i; acc != 0; acc = table[acc][i]) ++k;
  return k;
}

ClassGroup class_group(std::int64_t d) {
  if (d >= 0 || !is_fundamental_discriminant(d))
    throw std::invalid_argument("class_group: " + std::to_string(d) + " is not a negative fundamental discriminant");
  ClassGroup g;
  g.discriminant = d;
  g.forms = reduced_forms(d);
  g.table.assign(g.order(), std::vector<std::size_t>(g.order()));
  for (std::size_t i = 0; i < g.order(); ++i)
    for (std::size_t j = 0; j < g.order(); ++j) g.table[i][j] = g.index_of(compose(g.forms[i], g.forms[j]));
  g.structure = structure_of(g);
  g.generators = greedy_generators(g);
  if (g.is_cyclic() && g.order() > 1) {
    for (std::size_t x = 0; x < g.order(); ++x)
      if (g.element_order(x) == g.order()) {
        g.generators = {x};
        break;
      }
  }
  return g;
}

ClassicalForm ideal_to_form(std::int64_t p, std::int64_t q, std::int64_t d) {
  if (q <= 0) throw std::invalid_argument("ideal_to_form: denominator must be positive");
  // q^2 t^2 - 2pq t + (p^2 - D) = 0, divided by its content
  const std::int64_t a = q * q, b = -2 * p * q, c = p * p - d;
  const std::int64_t g = std::gcd(std::gcd(a, b), c);
  if (g != 2 * q) throw std::invalid_argument("ideal_to_form: tau does not have the requested discriminant");
  return classical_reduce(ClassicalForm(a / g, b / g, c / g));
}

OrientedClassRep shioda_mitani(const ClassicalForm& f) { return sl2_reduce(BinaryEvenForm(2 * f.a, f.b, 2 * f.c)); }

CMEmbeddingReport embedding_lattices(std::int64_t d) {
  const ClassGroup g = class_group(d);
  std::vector<std::size_t> order;
  if (g.is_cyclic() && g.order() > 1) {
    for (std::size_t x = 0, k = 0; k < g.order(); ++k, x = g.table[x][g.generators.front()]) order.push_back(x);
  } else {
    order.resize(g.order());
    std::iota(order.begin(), order.end(), 0);
  }
  CMEmbeddingReport report;
  report.discriminant = d;
  for (std::size_t i = 0; i < order.size(); ++i) {
    const ClassicalForm& cls = g.forms[order[i]];
    const ClassicalForm& sq = g.forms[g.table[order[i]][order[i]]];
    report.rows.push_back({i, cls, sq, shioda_mitani(sq)});
  }
  return report;
}

std::vector<Integer> j_coefficients(unsigned terms) {
  const std::size_t n = terms + 1;
  // E4 = 1 + 240 sum sigma_3(k) q^k
  std::vector<Integer> e4(n, 0);
  e4[0] = 1;
  for (std::size_t k = 1; k < n; ++k) {
    Integer s = 0;
    for (std::size_t t = 1; t <= k; ++t)
      if (k % t == 0) s += Integer(t) * t * t;
    e4[k] = 240 * s;
  }
  auto multiply = [n](const std::vector<Integer>& x, const std::vector<Integer>& y) {
    std::vector<Integer> z(n, 0);
    for (std::size_t i = 0; i < n; ++i)
      if (x[i] != 0)
        for (std::size_t j = 0; i + j < n; ++j) z[i + j] += x[i] * y[j];
    return z;
  };
  // prod (1 - q^k)^24
  std::vector<Integer> eta(n, 0);
  eta[0] = 1;
  for (std::size_t k = 1; k < n; ++k)
    for (int r = 0; r < 24; ++r)
      for (std::size_t i = n - 1; i >= k; --i) eta[i] -= eta[i - k];
  // inverse power series (constant term 1)
  std::vector<Integer> inv(n, 0);
  inv[0] = 1;
  for (std::size_t i = 1; i < n; ++i) {
    Integer s = 0;
    for (std::size_t j = 1; j <= i; ++j) s += eta[j] * inv[i - j];
    inv[i] = -s;
  }
  const std::vector<Integer> e4_cubed = multiply(multiply(e4, e4), e4);
  return multiply(e4_cubed, inv);  // index k holds c_{k-1}
}

HilbertPolynomial hilbert_class_polynomial(std::int64_t d, unsigned precision_digits, unsigned q_terms) {
  const ClassGroup g = class_group(d);
  if (precision_digits < 10) throw std::invalid_argument("hilbert_class_polynomial: precision below 10 digits");
  if (q_terms < 2) throw std::invalid_argument("hilbert_class_polynomial: at least two q-terms are needed");
  const std::vector<Integer> c = j_coefficients(q_terms);

  HilbertPolynomial out;
  out.discriminant = d;
  out.precision_digits = precision_digits;
  out.q_terms = q_terms;

  PrecisionScope scope(precision_digits);
  const Real pi = boost::math::constants::pi<Real>();
  const Real root = sqrt(Real(-d));
  std::vector<Complex> poly{{Real(1), Real(0)}};  // lowest degree first
  for (const auto& f : g.forms) {
    // tau = (-b + sqrt(D)) / 2a, q = exp(2 pi i tau)
    const Real modulus = exp(-pi * root / Real(f.a));
    const Real angle = -pi * Real(f.b) / Real(f.a);
    const Complex q{modulus * cos(angle), modulus * sin(angle)};
    Complex j = inverse(q);
    Complex qk{Real(1), Real(0)};
    for (std::size_t k = 1; k < c.size(); ++k) {
      j = j + Complex{real_from(c[k]) * qk.re, real_from(c[k]) * qk.im};
      qk = qk * q;
    }
    std::vector<Complex> next(poly.size() + 1, Complex{Real(0), Real(0)});
    for (std::size_t i = 0; i < poly.size(); ++i) {
      next[i + 1] = next[i + 1] + poly[i];
      next[i] = next[i] - poly[i] * j;
    }
    poly = std::move(next);
  }

  Real worst = 0;
  for (auto it = poly.rbegin(); it != poly.rend(); ++it) {
    const Real nearest = round(it->re);
    worst = std::max({worst, Real(abs(it->re - nearest)), Real(abs(it->im))});
    Integer z;
    mpfr_get_z(z.backend().data(), nearest.backend().data(), MPFR_RNDN);
    out.coefficients.push_back(z);
  }
  out.rounding_error = worst.convert_to<double>();
  if (!(out.rounding_error <= 0.25)) {
    std::ostringstream os;
    os << "hilbert_class_polynomial: rounding error " << out.rounding_error << " exceeds 0.25 at "
       << precision_digits << " digits and " << q_terms << " q-terms; increase --precision-digits or --q-terms";
    throw PrecisionError(os.str());
  }
  return out;
}

std::string render_polynomial(const std::vector<Integer>& coefficients, const std::string& variable) {
  std::ostringstream os;
  const std::size_t degree = coefficients.empty() ? 0 : coefficients.size() - 1;
  bool first = true;
  for (std::size_t i = 0; i < coefficients.size(); ++i) {
    const Integer& k = coefficients[i];
    if (k == 0) continue;
    const std::size_t power = degree - i;
    const Integer mag = k < 0 ? Integer(-k) : k;
    if (first) {
      if (k < 0) os << '-';
    } else {
      os << (k < 0 ? " - " : " + ");
    }
    first = false;
    if (mag != 1 || power == 0) os << mag;
    if (power >= 1) os << variable;
    if (power >= 2) os << '^' << power;
  }
  if (first) os << '0';
  return os.str();
}

}  // namespace zariski
