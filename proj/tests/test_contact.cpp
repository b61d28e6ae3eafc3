#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nkgeo/contact.hpp"

using nkgeo::ContactStructure;
using nkgeo::FrameManifold;
using nkgeo::Rational;
using nkgeo::Report;
using nkgeo::StandardExample;
using nkgeo::Tensor;

namespace {

ContactStructure family_structure() {
  // zeta = e1, phi: e2 -> e3, e3 -> -e2, eta = dual of zeta.
  Tensor phi(3, 1, 1);
  phi(1, 2) = 1;
  phi(2, 1) = -1;
  return ContactStructure(std::move(phi), Tensor::basis_vector(3, 0),
                          Tensor::basis_covector(3, 0));
}

}  // namespace

TEST_CASE("standard example self-validates across the family") {
  for (const Rational& d :
       {Rational(0), Rational(1, 2), Rational(1), Rational(2), Rational(-3, 7)}) {
    StandardExample ex = nkgeo::build_standard_example(d);
    CHECK(ex.delta == d);
    REQUIRE(ex.S.k.has_value());
    CHECK(*ex.S.k == 1 - d * d);
    CHECK(*ex.S.mu == 0);
    // h = diag(0, d, -d) in the frame.
    CHECK(ex.S.h(0, 0) == 0);
    CHECK(ex.S.h(1, 1) == d);
    CHECK(ex.S.h(2, 2) == -d);
    CHECK(ex.S.h(1, 2) == 0);
  }
}

TEST_CASE("structure axioms pass with the detected contact convention") {
  StandardExample ex = nkgeo::build_standard_example(Rational(1, 2));
  Report rep = nkgeo::validate_structure(ex.M, ex.S);
  CHECK(rep.all_pass());
  const nkgeo::Check* c = rep.find("Eq2.5");
  REQUIRE(c != nullptr);
  CHECK(c->note.find("alpha=1/2") != std::string::npos);
  CHECK(c->note.find("g(X,phiY)") != std::string::npos);
}

TEST_CASE("degenerate phi fails the axioms but reports cleanly") {
  Tensor c(3, 2, 1);  // abelian frame
  FrameManifold M(1, std::move(c));
  ContactStructure S(Tensor(3, 1, 1), Tensor::basis_vector(3, 0),
                     Tensor::basis_covector(3, 0));
  Report rep = nkgeo::validate_structure(M, S);
  CHECK_FALSE(rep.all_pass());
  const nkgeo::Check* c21 = rep.find("Eq2.1");
  REQUIRE(c21 != nullptr);
  CHECK_FALSE(c21->pass);  // phi^2 = -I + eta (x) zeta fails for phi = 0
}

TEST_CASE("h tensor from the characteristic lie derivative") {
  for (const Rational& d : {Rational(1, 2), Rational(2)}) {
    StandardExample ex = nkgeo::build_standard_example(d);
    Tensor h = nkgeo::compute_h(ex.M, ex.conn, ex.S);
    CHECK(h(1, 1) == d);
    CHECK(h(2, 2) == -d);
    CHECK(h(0, 0) == 0);
  }
}

TEST_CASE("compute_h rejects a non contact metric pairing") {
  // Same frame, but zeta pointing along e2: nabla_X zeta = -phi X - phi h X
  // cannot hold, so construction must fail.
  StandardExample ex = nkgeo::build_standard_example(Rational(1, 2));
  ContactStructure S = family_structure();
  S.zeta = Tensor::basis_vector(3, 1);
  S.eta = Tensor::basis_covector(3, 1);
  CHECK_THROWS_AS(nkgeo::compute_h(ex.M, ex.conn, S), nkgeo::ContactError);
}

TEST_CASE("nullity fit recovers k = 1 - d^2, mu = 0") {
  for (const Rational& d : {Rational(0), Rational(1, 2), Rational(1), Rational(2)}) {
    StandardExample ex = nkgeo::build_standard_example(d);
    nkgeo::NullityFit fit = nkgeo::nullity_fit(ex.M, ex.R, ex.S);
    REQUIRE(fit.is_nullity);
    CHECK(fit.k == 1 - d * d);
    CHECK(fit.mu == 0);
    CHECK(fit.is_nk());
  }
}

TEST_CASE("nullity fit on a flat abelian frame is k = 0") {
  Tensor c(3, 2, 1);
  FrameManifold M(1, std::move(c));
  nkgeo::Connection conn = nkgeo::levi_civita(M);
  nkgeo::CurvatureTensor R = nkgeo::riemann(M, conn);
  ContactStructure S = family_structure();
  nkgeo::NullityFit fit = nkgeo::nullity_fit(M, R, S);
  REQUIRE(fit.is_nullity);
  CHECK(fit.k == 0);
  CHECK(fit.mu == 0);
}

TEST_CASE("identity suite passes on certified instances") {
  for (const Rational& d : {Rational(1, 2), Rational(1), Rational(2)}) {
    StandardExample ex = nkgeo::build_standard_example(d);
    Report rep = nkgeo::identity_suite_nk(ex.M, ex.conn, ex.R, ex.S);
    CHECK(rep.all_pass());
    // Full tag range present.
    for (int q = 6; q <= 15; ++q)
      CHECK(rep.find("Eq2." + std::to_string(q)) != nullptr);
  }
}

TEST_CASE("build_standard_example rejects nothing in the family") {
  // Every rational delta yields a consistent instance; spot-check a few
  // awkward values.
  for (const Rational& d : {Rational(-1), Rational(7, 3), Rational(100)}) {
    CHECK_NOTHROW(nkgeo::build_standard_example(d));
  }
}
