#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nkgeo/star_ricci.hpp"

using nkgeo::Rational;
using nkgeo::Report;
using nkgeo::StandardExample;
using nkgeo::StarRicciData;

TEST_CASE("star ricci trace values across the family") {
  // Frozen from an independent evaluation of the trace definition:
  // Ric* = diag(0, -(1-d^2), -(1-d^2)) and r* = -2(1-d^2).
  for (const Rational& d : {Rational(0), Rational(1, 2), Rational(1), Rational(2)}) {
    StandardExample ex = nkgeo::build_standard_example(d);
    StarRicciData data = nkgeo::star_ricci_direct(ex.M, ex.R, ex.S);
    Rational k = 1 - d * d;
    CHECK(data.ric_star(0, 0) == 0);
    CHECK(data.ric_star(1, 1) == -k);
    CHECK(data.ric_star(2, 2) == -k);
    CHECK(data.ric_star(0, 1) == 0);
    CHECK(data.ric_star(1, 2) == 0);
    CHECK(data.r_star == -2 * k);
    // operator form in an orthonormal frame mirrors the bilinear form
    CHECK(data.q_star(1, 1) == -k);
    CHECK(data.q_star(0, 0) == 0);
  }
}

TEST_CASE("closed form k(eta (x) eta - g) matches the trace definition") {
  for (const Rational& d : {Rational(0), Rational(1, 2), Rational(2), Rational(5)}) {
    StandardExample ex = nkgeo::build_standard_example(d);
    StarRicciData data = nkgeo::star_ricci_direct(ex.M, ex.R, ex.S);
    CHECK(data.ric_star == nkgeo::star_ricci_closed_form(ex.M, ex.S));
    CHECK(data.r_star == nkgeo::star_scalar_closed_form(*ex.S.k, ex.M.m()));
  }
}

TEST_CASE("closed form checks all pass, including the flat member") {
  for (const Rational& d : {Rational(0), Rational(1, 2), Rational(1), Rational(2)}) {
    StandardExample ex = nkgeo::build_standard_example(d);
    StarRicciData data = nkgeo::star_ricci_direct(ex.M, ex.R, ex.S);
    Report rep = nkgeo::star_closed_form_checks(ex.M, ex.S, data);
    CHECK(rep.all_pass());
    CHECK(rep.find("Eq3.1") != nullptr);
    CHECK(rep.find("Eq3.2") != nullptr);
    CHECK(rep.find("Eq4.6") != nullptr);
    CHECK(rep.find("Ric*-symmetry") != nullptr);
    CHECK(rep.find("Ric*-zeta") != nullptr);
  }
}

TEST_CASE("covariant derivative closed forms") {
  for (const Rational& d : {Rational(0), Rational(1, 2), Rational(1), Rational(2)}) {
    StandardExample ex = nkgeo::build_standard_example(d);
    StarRicciData data = nkgeo::star_ricci_direct(ex.M, ex.R, ex.S);
    Report rep = nkgeo::nabla_star_ricci_check(ex.M, ex.conn, data, ex.S);
    CHECK(rep.all_pass());
    CHECK(rep.find("Eq3.5") != nullptr);
    CHECK(rep.find("Eq4.7") != nullptr);
    CHECK(rep.find("Eq4.8") != nullptr);
    CHECK(rep.find("Eq4.9") != nullptr);
  }
}

TEST_CASE("cyclic derivative combination matches its closed form") {
  for (const Rational& d : {Rational(1, 2), Rational(1), Rational(2)}) {
    StandardExample ex = nkgeo::build_standard_example(d);
    StarRicciData data = nkgeo::star_ricci_direct(ex.M, ex.R, ex.S);
    Report rep = nkgeo::lemma33_cyclic_residual(ex.M, ex.conn, data, ex.S);
    CHECK(rep.all_pass());
    REQUIRE(rep.find("Eq3.3") != nullptr);
  }
}

TEST_CASE("flat member has vanishing star ricci") {
  StandardExample ex = nkgeo::build_standard_example(1);
  StarRicciData data = nkgeo::star_ricci_direct(ex.M, ex.R, ex.S);
  CHECK(data.ric_star.is_zero());
  CHECK(data.q_star.is_zero());
  CHECK(data.r_star == 0);
}
