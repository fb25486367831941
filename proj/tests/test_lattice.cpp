#include "zariski/lattice.hpp"

#include <doctest.h>

using namespace zariski;

TEST_CASE("DynkinType: parses and canonicalizes") {
  CHECK_EQ(DynkinType::parse("A16+A2+A1").to_string(), "A16+A2+A1");
  CHECK_EQ(DynkinType::parse("a1 + a16+A2").to_string(), "A16+A2+A1");
  CHECK_EQ(DynkinType::parse("2A7+D5").to_string(), "2A7+D5");
  CHECK_EQ(DynkinType::parse("A7+D5+A7").to_string(), "2A7+D5");
  CHECK_EQ(DynkinType::parse("E8+A2+D4+A3").to_string(), "A3+A2+D4+E8");
  CHECK_EQ(DynkinType::parse("A16+A3").rank(), 19);
  CHECK_EQ(DynkinType::parse("3A6+A1").rank(), 19);
}

TEST_CASE("DynkinType: rejects malformed input") {
  for (const char* bad : {"", "+", "A", "A0", "D3", "E9", "E5", "B3", "A1+", "2", "A-1", "A1++A2", "A1x"})
    {
      INFO(bad);
      CHECK_THROWS_AS(DynkinType::parse(bad), std::invalid_argument);
    }
}

TEST_CASE("DynkinType: expanded follows canonical order") {
  const auto parts = DynkinType::parse("D5+2A7").expanded();
  REQUIRE_EQ(parts.size(), 3u);
  CHECK_EQ(parts[0].family, Family::A);
  CHECK_EQ(parts[1].index, 7);
  CHECK_EQ(parts[2].family, Family::D);
}

TEST_CASE("CartanMatrix: determinants") {
  for (int n = 1; n <= 20; ++n) {
    INFO("A", n);
    CHECK_EQ(determinant(cartan_matrix(Family::A, n)), n + 1);
  }
  for (int n = 4; n <= 20; ++n) {
    INFO("D", n);
    CHECK_EQ(determinant(cartan_matrix(Family::D, n)), 4);
  }
  CHECK_EQ(determinant(cartan_matrix(Family::E, 6)), 3);
  CHECK_EQ(determinant(cartan_matrix(Family::E, 7)), 2);
  CHECK_EQ(determinant(cartan_matrix(Family::E, 8)), 1);
}

TEST_CASE("CartanMatrix: root counts match short vectors") {
  std::vector<std::pair<Family, int>> cases;
  for (int n = 1; n <= 9; ++n) cases.push_back({Family::A, n});
  for (int n = 4; n <= 8; ++n) cases.push_back({Family::D, n});
  for (int n = 6; n <= 8; ++n) cases.push_back({Family::E, n});
  for (auto [f, n] : cases) {
    const auto roots = vectors_of_norm(cartan_matrix(f, n), Rational(2));
    {
      INFO(family_name(f), n);
      CHECK_EQ(Integer(static_cast<long>(roots.size())), root_count(f, n));
    }
  }
}

TEST_CASE("CartanMatrix: symmetric positive definite") {
  for (auto [f, n] : std::vector<std::pair<Family, int>>{{Family::A, 5}, {Family::D, 6}, {Family::E, 7}}) {
    const IntMatrix c = cartan_matrix(f, n);
    CHECK_EQ(c, IntMatrix(c.transpose()));
    CHECK_EQ(signature(c).positive, n);
  }
}

TEST_CASE("Lattice: validation") {
  IntMatrix g(2, 2);
  g << 2, 1, 0, 2;
  CHECK_THROWS_AS(Lattice{g}, std::invalid_argument);
  g << 2, 1, 1, 2;
  CHECK(Lattice(g).is_even());
  g << 1, 0, 0, 2;
  CHECK_FALSE(Lattice(g).is_even());
  g << 1, 1, 1, 1;
  CHECK_THROWS_AS(Lattice{g}, std::invalid_argument);
}

TEST_CASE("Lattice: norm and pairing") {
  IntMatrix g(2, 2);
  g << 2, 1, 1, 4;
  const Lattice l(g);
  RatVector v(2), w(2);
  v << 1, -1;
  w << Rational(1, 2), 0;
  CHECK_EQ(l.norm(v), 4);
  CHECK_EQ(l.pairing(v, w), Rational(1, 2));
}

TEST_CASE("PolarizedRootData: shape and signature") {
  const auto data = polarized_m0(DynkinType::parse("A16+A2+A1"));
  CHECK_EQ(data.m0.rank(), 20);
  CHECK_EQ(data.root_rank(), 19);
  CHECK_EQ(data.m0.gram()(19, 19), 2);
  CHECK_EQ(data.m0.signature(), (Signature{1, 19, 0}));
  CHECK_EQ(data.root_count, 16 * 17 + 2 * 3 + 1 * 2);
  CHECK_EQ(abs(data.m0.determinant()), 2 * 17 * 3 * 2);
  CHECK_EQ(data.positive_root_gram(), IntMatrix(-data.m0.gram().topLeftCorner(19, 19)));
  for (Eigen::Index i = 0; i < 19; ++i) CHECK_EQ(data.m0.gram()(i, 19), 0);
}

TEST_CASE("RootLattice: negative definite blocks") {
  const Lattice l = root_lattice(DynkinType::parse("2A2+D4"));
  CHECK_EQ(l.rank(), 8);
  CHECK_EQ(l.signature().negative, 8);
  CHECK_EQ(l.determinant(), 3 * 3 * 4);
  CHECK_EQ(l.gram()(1, 2), 0);  // separate components
}
