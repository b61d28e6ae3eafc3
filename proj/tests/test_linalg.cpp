#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nkgeo/linalg.hpp"

using nkgeo::AffineSolutionSet;
using nkgeo::Rational;
using nkgeo::RMatrix;
using nkgeo::RVector;

TEST_CASE("rref identifies pivots and normalizes") {
  // rows: (1 2 | 3), (2 4 | 6), (0 1 | 1) -> rank 2, pivots {0, 1}
  RMatrix m = {{1, 2, 3}, {2, 4, 6}, {0, 1, 1}};
  std::vector<std::size_t> pivots = nkgeo::rref(m);
  REQUIRE(pivots == std::vector<std::size_t>{0, 1});
  CHECK(m[0] == RVector{1, 0, 1});
  CHECK(m[1] == RVector{0, 1, 1});
  CHECK(m[2] == RVector{0, 0, 0});
}

TEST_CASE("rref handles rational pivots exactly") {
  RMatrix m = {{Rational(1, 3), Rational(1, 6)}, {Rational(2, 5), Rational(1, 5)}};
  // second row = (6/5) * first row -> rank 1
  std::vector<std::size_t> pivots = nkgeo::rref(m);
  REQUIRE(pivots.size() == 1);
  CHECK(m[0] == RVector{1, Rational(1, 2)});
  CHECK(m[1] == RVector{0, 0});
}

TEST_CASE("nullspace of a rank-1 map") {
  RMatrix a = {{1, 2, 3}};
  std::vector<RVector> ns = nkgeo::nullspace(a);
  REQUIRE(ns.size() == 2);
  for (const RVector& v : ns) {
    Rational dot = v[0] + 2 * v[1] + 3 * v[2];
    CHECK(dot == 0);
  }
}

TEST_CASE("nullspace of an invertible map is empty") {
  RMatrix a = {{1, 0}, {1, 1}};
  CHECK(nkgeo::nullspace(a).empty());
}

TEST_CASE("solve_linear unique solution") {
  RMatrix a = {{2, 1}, {1, -1}};
  RVector b = {3, 0};
  AffineSolutionSet s = nkgeo::solve_linear(a, b);
  REQUIRE_FALSE(s.empty());
  CHECK(s.particular == RVector{1, 1});
  CHECK(s.freedom() == 0);
}

TEST_CASE("solve_linear underdetermined") {
  RMatrix a = {{1, 1, 0}};
  RVector b = {2};
  AffineSolutionSet s = nkgeo::solve_linear(a, b);
  REQUIRE_FALSE(s.empty());
  CHECK(s.freedom() == 2);
  // every basis direction stays inside the solution space
  for (const RVector& v : s.basis) CHECK(v[0] + v[1] == 0);
  CHECK(s.particular[0] + s.particular[1] == 2);
}

TEST_CASE("solve_linear inconsistent") {
  RMatrix a = {{1, 1}, {2, 2}};
  RVector b = {1, 3};
  AffineSolutionSet s = nkgeo::solve_linear(a, b);
  CHECK(s.empty());
}

TEST_CASE("all_satisfy quantifies over the whole affine set") {
  RMatrix a = {{1, -1, 0}};
  RVector b = {0};  // solutions: x = y, z free
  AffineSolutionSet s = nkgeo::solve_linear(a, b);
  REQUIRE_FALSE(s.empty());
  // x - y = 0 holds on every member
  CHECK(s.all_satisfy({1, -1, 0}, 0));
  // z = 0 does not (z is free)
  CHECK_FALSE(s.all_satisfy({0, 0, 1}, 0));
  // x = 1 does not
  CHECK_FALSE(s.all_satisfy({1, 0, 0}, -1));
}

TEST_CASE("all_satisfy is vacuously true on the empty set") {
  AffineSolutionSet s = nkgeo::solve_linear({{0, 0}}, {1});
  REQUIRE(s.empty());
  CHECK(s.all_satisfy({1, 0}, -5));
}
