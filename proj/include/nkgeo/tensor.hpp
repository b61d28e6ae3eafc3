#ifndef NKGEO_TENSOR_HPP
#define NKGEO_TENSOR_HPP

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "nkgeo/rational.hpp"

namespace nkgeo {

/// Dense tensor of fixed valence (r covariant slots, s contravariant
/// slots) over an n-dimensional frame, components in Q. Immutable value
/// semantics: every operation returns a fresh tensor. Index convention:
/// covariant slots first, then contravariant; indices are 0-based
/// internally (external I/O is 1-based, handled at the boundary).
class Tensor {
 public:
  Tensor(std::size_t dim, std::size_t cov, std::size_t contra);

  static Tensor zeros(std::size_t dim, std::size_t cov, std::size_t contra) {
    return Tensor(dim, cov, contra);
  }
  /// Identity as a (1,1) tensor: delta_i^j.
  static Tensor identity(std::size_t dim);
  /// Basis vector e_i as a (0,1) tensor (0-based i).
  static Tensor basis_vector(std::size_t dim, std::size_t i);
  /// Dual covector of e_i (identity metric) as a (1,0) tensor.
  static Tensor basis_covector(std::size_t dim, std::size_t i);
  static Tensor from_vector(const std::vector<Rational>& comps);

  std::size_t dim() const { return dim_; }
  std::size_t cov_rank() const { return cov_; }
  std::size_t contra_rank() const { return contra_; }
  std::size_t rank() const { return cov_ + contra_; }
  std::size_t size() const { return comps_.size(); }

  const Rational& at(const std::vector<std::size_t>& idx) const;
  Rational& at(const std::vector<std::size_t>& idx);
  const Rational& flat(std::size_t i) const { return comps_[i]; }
  Rational& flat(std::size_t i) { return comps_[i]; }

  /// Convenience accessors for low ranks.
  const Rational& operator()(std::size_t i) const;
  const Rational& operator()(std::size_t i, std::size_t j) const;
  const Rational& operator()(std::size_t i, std::size_t j, std::size_t k) const;
  const Rational& operator()(std::size_t i, std::size_t j, std::size_t k,
                             std::size_t l) const;
  Rational& operator()(std::size_t i);
  Rational& operator()(std::size_t i, std::size_t j);
  Rational& operator()(std::size_t i, std::size_t j, std::size_t k);
  Rational& operator()(std::size_t i, std::size_t j, std::size_t k,
                       std::size_t l);

  bool is_zero() const;
  /// Largest |component|; the residual norm used by the report formats.
  Rational max_abs() const;

  Tensor operator+(const Tensor& o) const;
  Tensor operator-(const Tensor& o) const;
  Tensor operator-() const;
  Tensor scaled(const Rational& c) const;
  bool operator==(const Tensor& o) const;
  bool operator!=(const Tensor& o) const { return !(*this == o); }

  /// Outer product; result valence (r1+r2, s1+s2), this tensor's slots
  /// first within each group. Throws on dimension mismatch.
  Tensor tensor_product(const Tensor& o) const;

  /// Einstein contraction of one covariant slot against one contravariant
  /// slot (both 0-based within their groups). Throws on bad slots.
  Tensor contract(std::size_t cov_slot, std::size_t contra_slot) const;

  /// (2,0) only: 1/2 (t(X,Y) + t(Y,X)) resp. 1/2 (t(X,Y) - t(Y,X)).
  Tensor symmetrize() const;
  Tensor antisymmetrize() const;

  /// Swap two covariant slots.
  Tensor swap_cov(std::size_t a, std::size_t b) const;

 private:
  std::size_t offset(const std::vector<std::size_t>& idx) const;

  std::size_t dim_, cov_, contra_;
  std::vector<Rational> comps_;
};

}  // namespace nkgeo

#endif
