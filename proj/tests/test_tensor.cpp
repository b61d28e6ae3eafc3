#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "nkgeo/tensor.hpp"

using nkgeo::Rational;
using nkgeo::Tensor;

namespace {

Rational rnd(std::mt19937& gen) {
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 9);
  return Rational(num(gen), den(gen));
}

Tensor random_tensor(std::size_t dim, std::size_t cov, std::size_t contra,
                     std::mt19937& gen) {
  Tensor t(dim, cov, contra);
  for (std::size_t i = 0; i < t.size(); ++i) t.flat(i) = rnd(gen);
  return t;
}

}  // namespace

TEST_CASE("constructors and accessors") {
  Tensor z = Tensor::zeros(3, 2, 1);
  CHECK(z.dim() == 3);
  CHECK(z.cov_rank() == 2);
  CHECK(z.contra_rank() == 1);
  CHECK(z.size() == 27);
  CHECK(z.is_zero());

  Tensor id = Tensor::identity(3);
  CHECK(id(0, 0) == 1);
  CHECK(id(0, 1) == 0);
  CHECK(id(2, 2) == 1);

  Tensor e1 = Tensor::basis_vector(3, 1);
  CHECK(e1(0) == 0);
  CHECK(e1(1) == 1);
  Tensor d1 = Tensor::basis_covector(3, 1);
  CHECK(d1.cov_rank() == 1);
  CHECK(d1(1) == 1);
}

TEST_CASE("row-major layout, covariant slots first") {
  Tensor t(2, 1, 1);
  t(0, 1) = Rational(5);
  CHECK(t.at({0, 1}) == 5);
  CHECK(t.flat(1) == 5);  // offset = i*dim + j
}

TEST_CASE("arithmetic laws on random tensors") {
  std::mt19937 gen(7);
  for (int trial = 0; trial < 10; ++trial) {
    Tensor a = random_tensor(3, 1, 1, gen);
    Tensor b = random_tensor(3, 1, 1, gen);
    Tensor c = random_tensor(3, 1, 1, gen);
    CHECK(a + b == b + a);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a - a == Tensor::zeros(3, 1, 1));
    CHECK(-(-a) == a);
    CHECK(a.scaled(Rational(2, 3)).scaled(Rational(3, 2)) == a);
  }
}

TEST_CASE("tensor product keeps left slots first within each group") {
  Tensor v = Tensor::basis_vector(2, 0);   // (0,1)
  Tensor w = Tensor::basis_vector(2, 1);   // (0,1)
  Tensor vw = v.tensor_product(w);         // (0,2)
  CHECK(vw.cov_rank() == 0);
  CHECK(vw.contra_rank() == 2);
  CHECK(vw(0, 1) == 1);
  CHECK(vw(1, 0) == 0);

  Tensor a = Tensor::basis_covector(2, 0);  // (1,0)
  Tensor av = a.tensor_product(v);          // (1,1): cov from a, contra from v
  CHECK(av(0, 0) == 1);
  CHECK(av(1, 0) == 0);
}

TEST_CASE("contraction realizes covector-vector pairing") {
  std::mt19937 gen(11);
  Tensor eta = random_tensor(3, 1, 0, gen);
  Tensor v = random_tensor(3, 0, 1, gen);
  Tensor paired = eta.tensor_product(v).contract(0, 0);
  CHECK(paired.rank() == 0);
  Rational expect = 0;
  for (std::size_t i = 0; i < 3; ++i) expect += eta(i) * v(i);
  CHECK(paired.at({}) == expect);
}

TEST_CASE("contraction of identity gives the dimension") {
  Tensor id = Tensor::identity(4);
  CHECK(id.contract(0, 0).at({}) == 4);
}

TEST_CASE("symmetrize plus antisymmetrize reconstructs") {
  std::mt19937 gen(13);
  for (int trial = 0; trial < 10; ++trial) {
    Tensor t = random_tensor(3, 2, 0, gen);
    CHECK(t.symmetrize() + t.antisymmetrize() == t);
    CHECK(t.symmetrize().swap_cov(0, 1) == t.symmetrize());
    CHECK(t.antisymmetrize().swap_cov(0, 1) == -t.antisymmetrize());
  }
}

TEST_CASE("max_abs residual norm") {
  Tensor t(2, 1, 0);
  t(0) = Rational(-7, 3);
  t(1) = Rational(1, 2);
  CHECK(t.max_abs() == Rational(7, 3));
  CHECK_FALSE(t.is_zero());
  CHECK(Tensor::zeros(2, 1, 0).max_abs() == 0);
}

TEST_CASE("dimension mismatches are rejected") {
  Tensor a(2, 1, 0), b(3, 1, 0);
  CHECK_THROWS(a + b);
  CHECK_THROWS(a.tensor_product(b));
}
