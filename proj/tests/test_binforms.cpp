#include "zariski/binforms.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <numeric>
#include <random>
#include <set>

using namespace zariski;

namespace {

BinaryEvenForm transform(const BinaryEvenForm& f, std::int64_t p, std::int64_t q, std::int64_t r, std::int64_t s) {
  // M = [[p, q], [r, s]], returns M^T G M
  const std::int64_t a = f.a * p * p + 2 * f.b * p * r + f.c * r * r;
  const std::int64_t b = f.a * p * q + f.b * (p * s + q * r) + f.c * r * s;
  const std::int64_t c = f.a * q * q + 2 * f.b * q * s + f.c * s * s;
  return BinaryEvenForm(a, b, c);
}

std::array<std::int64_t, 4> random_sl2(std::mt19937& rng) {
  std::array<std::int64_t, 4> m{1, 0, 0, 1};
  std::uniform_int_distribution<int> kind(0, 2), step(-2, 2);
  for (int i = 0; i < 4; ++i) {
    const std::int64_t k = step(rng);
    std::array<std::int64_t, 4> e{1, 0, 0, 1};
    if (kind(rng) == 0) e = {1, k, 0, 1};
    else if (kind(rng) == 1) e = {1, 0, k, 1};
    else e = {0, -1, 1, 0};
    m = {m[0] * e[0] + m[1] * e[2], m[0] * e[1] + m[1] * e[3], m[2] * e[0] + m[3] * e[2], m[2] * e[1] + m[3] * e[3]};
  }
  return m;
}

}  // namespace

TEST_CASE("BinaryEvenForm: construction and names") {
  CHECK_THROWS_AS(BinaryEvenForm(3, 0, 2), std::invalid_argument);
  CHECK_THROWS_AS(BinaryEvenForm(2, 3, 4), std::invalid_argument);
  CHECK_THROWS_AS(BinaryEvenForm(-2, 0, -2), std::invalid_argument);
  const BinaryEvenForm f(10, 4, 22);
  CHECK_EQ(f.determinant(), 204);
  CHECK_EQ(lattice_name(f), "Λ[10,4,22]");
  CHECK_EQ(oriented_lattice_name(f), "Λ̃[10,4,22]");
  CHECK_EQ(lattice_of(f).determinant(), 204);
}

TEST_CASE("EvenClasses: match brute force equivalence") {
  for (std::int64_t d = 1; d <= 500; ++d) {
    const auto classes = enumerate_even_classes(d);
    for (std::size_t i = 0; i < classes.size(); ++i) {
      CHECK(is_gl2_reduced(classes[i]));
      if (i > 0) CHECK_LT(classes[i - 1], classes[i]);
    }
    {
      INFO(d);
      CHECK_EQ(oracle::check_even_classes(d, classes), "");
    }
  }
}

TEST_CASE("EvenClasses: reduction lands on listed class") {
  for (std::int64_t d : {20, 55, 204, 399}) {
    const auto classes = enumerate_even_classes(d);
    const std::set<BinaryEvenForm> listed(classes.begin(), classes.end());
    for (std::int64_t a = 2; a <= 40; a += 2)
      for (std::int64_t b = -12; b <= 12; ++b) {
        if ((d + b * b) % a != 0 || ((d + b * b) / a) % 2 != 0) continue;
        const BinaryEvenForm f(a, b, (d + b * b) / a);
        const BinaryEvenForm r = gl2_reduce(f);
        {
          INFO(lattice_name(f));
          CHECK(listed.count(r));
        }
        CHECK(oracle::forms_equivalent(f, r, 0));
      }
  }
}

TEST_CASE("EvenClasses: known lists") {
  CHECK_EQ(enumerate_even_classes(55),
            (std::vector<BinaryEvenForm>{{2, 1, 28}, {4, 1, 14}, {8, 3, 8}}));
  CHECK_EQ(enumerate_even_classes(204),
            (std::vector<BinaryEvenForm>{{2, 0, 102}, {4, 2, 52}, {6, 0, 34}, {8, 2, 26}, {10, 4, 22}, {12, 6, 20}}));
  CHECK(enumerate_even_classes(1).empty());  // no even form has odd determinant 1
  CHECK_EQ(enumerate_even_classes(3), (std::vector<BinaryEvenForm>{{2, 1, 2}}));
}

TEST_CASE("SlFiber: matches oriented search") {
  for (std::int64_t d = 1; d <= 500; ++d)
    for (const auto& f : enumerate_even_classes(d)) {
      {
        INFO(lattice_name(f));
        CHECK_EQ(sl2_fiber_size(f), oracle::sl2_fiber(f));
      }
    }
  CHECK_THROWS_AS(sl2_fiber_size(BinaryEvenForm(4, 3, 4)), std::invalid_argument);
}

TEST_CASE("Reduction: invariant under random transforms") {
  std::mt19937 rng(31);
  for (std::int64_t d : {3, 20, 55, 68, 204, 220, 399}) {
    for (const auto& f : enumerate_even_classes(d)) {
      const OrientedClassRep oriented = sl2_reduce(f);
      CHECK(is_sl2_reduced(oriented.form));
      for (int trial = 0; trial < 20; ++trial) {
        const auto m = random_sl2(rng);
        const BinaryEvenForm g = transform(f, m[0], m[1], m[2], m[3]);
        CHECK_EQ(gl2_reduce(g), f);
        CHECK_EQ(sl2_reduce(g), oriented);
        // an orientation-reversing change of basis lands on the mirror class
        const BinaryEvenForm h = transform(g, 0, 1, 1, 0);
        CHECK_EQ(gl2_reduce(h), f);
        CHECK_EQ(sl2_reduce(h), sl2_reduce(BinaryEvenForm(f.a, -f.b, f.c)));
      }
    }
  }
}

TEST_CASE("ClassicalForms: reduction and class numbers") {
  const std::vector<std::pair<std::int64_t, std::size_t>> known{
      {-3, 1}, {-4, 1}, {-7, 1}, {-23, 3}, {-47, 5}, {-55, 4}, {-71, 7}, {-84, 4}, {-420, 8}, {-163, 1}};
  for (auto [d, h] : known) {
    const auto forms = oracle::reduced_forms(d);
    {
      INFO(d);
      CHECK_EQ(forms.size(), h);
    }
    for (const auto& f : forms) {
      CHECK(f.is_reduced());
      CHECK_EQ(classical_reduce(f), f);
    }
  }
  CHECK_EQ(classical_reduce(ClassicalForm(2, 5, 10)), ClassicalForm(2, 1, 7));
  CHECK_EQ(to_string(ClassicalForm(2, 1, 7)), "(2,1,7)");
  CHECK_EQ(principal_form(-55), ClassicalForm(1, 1, 14));
  CHECK_EQ(principal_form(-84), ClassicalForm(1, 0, 21));
}

TEST_CASE("ClassicalForms: composition group axioms") {
  for (std::int64_t d : {-23, -55, -84, -420, -71})
    {
      INFO(d);
      CHECK_EQ(oracle::check_group_axioms(oracle::reduced_forms(d), d), "");
    }
  CHECK_THROWS_AS(compose(ClassicalForm(1, 1, 14), ClassicalForm(1, 1, 6)), std::invalid_argument);
}

TEST_CASE("ClassicalForms: composition matches known squares") {
  // (2,1,7) generates the class group of -55 (cyclic of order 4)
  const ClassicalForm g(2, 1, 7);
  const ClassicalForm g2 = compose(g, g);
  CHECK_EQ(g2, ClassicalForm(4, 3, 4));
  CHECK_EQ(compose(g2, g), ClassicalForm(2, -1, 7));
  CHECK_EQ(compose(g2, g2), principal_form(-55));
}

TEST_CASE("ClassicalForms: fundamental discriminants") {
  for (std::int64_t d : {-3, -4, -7, -8, -20, -23, -55, -84, -420, -163}) {
    INFO(d);
    CHECK(is_fundamental_discriminant(d));
  }
  for (std::int64_t d : {-12, -16, -27, -36, -45, -72, -1, -2, 0, 9}) {
    INFO(d);
    CHECK_FALSE(is_fundamental_discriminant(d));
  }
}
