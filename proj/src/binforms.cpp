#include "zariski/binforms.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace zariski {

namespace {

std::int64_t ceil_div(std::int64_t p, std::int64_t q) {  // q > 0
  return p >= 0 ? (p + q - 1) / q : -((-p) / q);
}

// x -> x + k y : [[a, b], [b, c]] -> [[a, b + ka], [b + ka, c + 2kb + k^2 a]]
BinaryEvenForm translate(const BinaryEvenForm& f, std::int64_t k) {
  BinaryEvenForm g = f;
  g.c = f.c + 2 * k * f.b + k * k * f.a;
  g.b = f.b + k * f.a;
  return g;
}

// (x, y) -> (-y, x), an SL2 move swapping the diagonal.
BinaryEvenForm swap(const BinaryEvenForm& f) {
  BinaryEvenForm g = f;
  g.a = f.c;
  g.c = f.a;
  g.b = -f.b;
  return g;
}

std::tuple<std::int64_t, std::int64_t, std::int64_t> extended_gcd(std::int64_t a, std::int64_t b) {
  std::int64_t old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    std::tie(old_r, r) = std::make_tuple(r, old_r - q * r);
    std::tie(old_s, s) = std::make_tuple(s, old_s - q * s);
    std::tie(old_t, t) = std::make_tuple(t, old_t - q * t);
  }
  if (old_r < 0) return {-old_r, -old_s, -old_t};
  return {old_r, old_s, old_t};
}

}  // namespace

BinaryEvenForm::BinaryEvenForm(std::int64_t a_, std::int64_t b_, std::int64_t c_) : a(a_), b(b_), c(c_) {
  if (a % 2 != 0 || c % 2 != 0) throw std::invalid_argument("BinaryEvenForm: diagonal entries must be even");
  if (a <= 0 || a * c - b * b <= 0) throw std::invalid_argument("BinaryEvenForm: form is not positive definite");
}

IntMatrix BinaryEvenForm::gram() const {
  IntMatrix g(2, 2);
  g << Integer(a), Integer(b), Integer(b), Integer(c);
  return g;
}

std::string lattice_name(const BinaryEvenForm& f) {
  std::ostringstream os;
  os << "Λ[" << f.a << ',' << f.b << ',' << f.c << ']';
  return os.str();
}

std::string oriented_lattice_name(const BinaryEvenForm& f) {
  std::ostringstream os;
  os << "Λ̃[" << f.a << ',' << f.b << ',' << f.c << ']';
  return os.str();
}

bool is_sl2_reduced(const BinaryEvenForm& f) {
  return -f.a < 2 * f.b && 2 * f.b <= f.a && f.a <= f.c && (f.a != f.c || f.b >= 0);
}

bool is_gl2_reduced(const BinaryEvenForm& f) { return 0 <= 2 * f.b && 2 * f.b <= f.a && f.a <= f.c; }

OrientedClassRep sl2_reduce(const BinaryEvenForm& f) {
  BinaryEvenForm g = f;
  // Each pass centres b and swaps when a > c; a + c strictly decreases
  // until the window is reached.
  for (;;) {
    // b - k a lands in (-a/2, a/2]
    if (!(-g.a < 2 * g.b && 2 * g.b <= g.a)) g = translate(g, -ceil_div(2 * g.b - g.a, 2 * g.a));
    if (g.a > g.c) {
      g = swap(g);
      continue;
    }
    break;
  }
  if (g.a == g.c && g.b < 0) g = swap(g);
  return {g, true};
}

BinaryEvenForm gl2_reduce(const BinaryEvenForm& f) {
  BinaryEvenForm g = sl2_reduce(f).form;
  if (g.b < 0) g.b = -g.b;  // (x, y) -> (x, -y), determinant -1
  return g;
}

std::vector<BinaryEvenForm> enumerate_even_classes(std::int64_t d) {
  if (d < 1) throw std::invalid_argument("enumerate_even_classes: determinant must be positive");
  std::vector<BinaryEvenForm> out;
  for (std::int64_t b = 0; 3 * b * b <= d; ++b) {
    const std::int64_t n = d + b * b;
    for (std::int64_t a = std::max<std::int64_t>(2, 2 * b); a * a <= n; a += 2) {
      if (n % a != 0) continue;
      const std::int64_t c = n / a;
      if (c % 2 == 0 && a <= c) out.emplace_back(a, b, c);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

int sl2_fiber_size(const BinaryEvenForm& f) {
  if (!is_gl2_reduced(f)) throw std::invalid_argument("sl2_fiber_size: form is not GL2-reduced");
  return (0 < 2 * f.b && 2 * f.b < f.a && f.a < f.c) ? 2 : 1;
}

Lattice lattice_of(const BinaryEvenForm& f) { return Lattice(f.gram()); }

ClassicalForm::ClassicalForm(std::int64_t a_, std::int64_t b_, std::int64_t c_) : a(a_), b(b_), c(c_) {
  if (a <= 0) throw std::invalid_argument("ClassicalForm: leading coefficient must be positive");
  if (discriminant() >= 0) throw std::invalid_argument("ClassicalForm: discriminant must be negative");
  if (std::gcd(std::gcd(a, b), c) != 1) throw std::invalid_argument("ClassicalForm: form is not primitive");
}

bool ClassicalForm::is_reduced() const {
  const std::int64_t ab = b < 0 ? -b : b;
  if (!(ab <= a && a <= c)) return false;
  if ((ab == a || a == c) && b < 0) return false;
  return true;
}

std::string to_string(const ClassicalForm& f) {
  std::ostringstream os;
  os << '(' << f.a << ',' << f.b << ',' << f.c << ')';
  return os.str();
}

ClassicalForm classical_reduce(const ClassicalForm& f) {
  ClassicalForm g = f;
  const std::int64_t disc = f.discriminant();
  for (;;) {
    // b into (-a, a]
    if (!(-g.a < g.b && g.b <= g.a)) {
      g.b -= 2 * g.a * ceil_div(g.b - g.a, 2 * g.a);
      g.c = (g.b * g.b - disc) / (4 * g.a);
    }
    if (g.a > g.c) {
      std::swap(g.a, g.c);
      g.b = -g.b;
      continue;
    }
    break;
  }
  if (g.a == g.c && g.b < 0) g.b = -g.b;
  return g;
}

ClassicalForm compose(const ClassicalForm& f, const ClassicalForm& g) {
  const std::int64_t disc = f.discriminant();
  if (g.discriminant() != disc) throw std::invalid_argument("compose: discriminant mismatch");
  // e = gcd(a1, a2, (b1 + b2) / 2) = u a1 + v a2 + w (b1 + b2) / 2
  const std::int64_t beta = (f.b + g.b) / 2;
  const auto [g1, x, y] = extended_gcd(f.a, g.a);
  const auto [e, s, t] = extended_gcd(g1, beta);
  const std::int64_t u = s * x, v = s * y, w = t;
  const std::int64_t a3 = f.a * g.a / (e * e);
  const std::int64_t b3_raw = (u * f.a * g.b + v * g.a * f.b + w * (f.b * g.b + disc) / 2) / e;
  std::int64_t b3 = b3_raw % (2 * a3);
  if (b3 < 0) b3 += 2 * a3;
  const std::int64_t c3 = (b3 * b3 - disc) / (4 * a3);
  return classical_reduce(ClassicalForm(a3, b3, c3));
}

ClassicalForm inverse(const ClassicalForm& f) { return classical_reduce(ClassicalForm(f.a, -f.b, f.c)); }

ClassicalForm principal_form(std::int64_t discriminant) {
  if (discriminant >= 0 || (discriminant % 4 != 0 && mod(discriminant, 4) != 1))
    throw std::invalid_argument("principal_form: not a negative discriminant");
  const std::int64_t b = mod(discriminant, 4) == 0 ? 0 : 1;
  return ClassicalForm(1, b, (b * b - discriminant) / 4);
}

bool is_fundamental_discriminant(std::int64_t d) {
  auto squarefree = [](std::int64_t n) {
    if (n < 0) n = -n;
    for (std::int64_t p = 2; p * p <= n; ++p)
      if (n % (p * p) == 0) return false;
    return true;
  };
  if (d == 0 || d == 1) return false;
  if (mod(d, 4) == 1) return squarefree(d);
  if (mod(d, 4) == 0) {
    const std::int64_t m = d / 4;
    return (mod(m, 4) == 2 || mod(m, 4) == 3) && squarefree(m);
  }
  return false;
}

}  // namespace zariski
