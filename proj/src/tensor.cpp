#include "nkgeo/tensor.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace nkgeo {

namespace {
std::size_t ipow(std::size_t b, std::size_t e) {
  std::size_t r = 1;
  while (e--) r *= b;
  return r;
}
}  // namespace

Tensor::Tensor(std::size_t dim, std::size_t cov, std::size_t contra)
    : dim_(dim), cov_(cov), contra_(contra), comps_(ipow(dim, cov + contra)) {
  if (dim == 0) throw std::invalid_argument("tensor dimension must be positive");
}

Tensor Tensor::identity(std::size_t dim) {
  Tensor t(dim, 1, 1);
  for (std::size_t i = 0; i < dim; ++i) t(i, i) = 1;
  return t;
}

Tensor Tensor::basis_vector(std::size_t dim, std::size_t i) {
  Tensor t(dim, 0, 1);
  t(i) = 1;
  return t;
}

Tensor Tensor::basis_covector(std::size_t dim, std::size_t i) {
  Tensor t(dim, 1, 0);
  t(i) = 1;
  return t;
}

Tensor Tensor::from_vector(const std::vector<Rational>& comps) {
  Tensor t(comps.size(), 0, 1);
  for (std::size_t i = 0; i < comps.size(); ++i) t(i) = comps[i];
  return t;
}

std::size_t Tensor::offset(const std::vector<std::size_t>& idx) const {
  if (idx.size() != rank()) throw std::invalid_argument("index rank mismatch");
  std::size_t off = 0;
  for (std::size_t v : idx) {
    if (v >= dim_) throw std::out_of_range("tensor index out of range");
    off = off * dim_ + v;
  }
  return off;
}

const Rational& Tensor::at(const std::vector<std::size_t>& idx) const {
  return comps_[offset(idx)];
}
Rational& Tensor::at(const std::vector<std::size_t>& idx) {
  return comps_[offset(idx)];
}

const Rational& Tensor::operator()(std::size_t i) const { return at({i}); }
const Rational& Tensor::operator()(std::size_t i, std::size_t j) const {
  return at({i, j});
}
const Rational& Tensor::operator()(std::size_t i, std::size_t j,
                                   std::size_t k) const {
  return at({i, j, k});
}
const Rational& Tensor::operator()(std::size_t i, std::size_t j, std::size_t k,
                                   std::size_t l) const {
  return at({i, j, k, l});
}
Rational& Tensor::operator()(std::size_t i) { return at({i}); }
Rational& Tensor::operator()(std::size_t i, std::size_t j) { return at({i, j}); }
Rational& Tensor::operator()(std::size_t i, std::size_t j, std::size_t k) {
  return at({i, j, k});
}
Rational& Tensor::operator()(std::size_t i, std::size_t j, std::size_t k,
                             std::size_t l) {
  return at({i, j, k, l});
}

bool Tensor::is_zero() const {
  return std::all_of(comps_.begin(), comps_.end(),
                     [](const Rational& r) { return r == 0; });
}

Rational Tensor::max_abs() const {
  Rational m = 0;
  for (const Rational& r : comps_) {
    Rational a = r < 0 ? Rational(-r) : r;
    if (a > m) m = a;
  }
  return m;
}

Tensor Tensor::operator+(const Tensor& o) const {
  if (dim_ != o.dim_ || cov_ != o.cov_ || contra_ != o.contra_)
    throw std::invalid_argument("tensor shape mismatch in +");
  Tensor t(dim_, cov_, contra_);
  for (std::size_t i = 0; i < comps_.size(); ++i)
    t.comps_[i] = comps_[i] + o.comps_[i];
  return t;
}

Tensor Tensor::operator-(const Tensor& o) const { return *this + (-o); }

Tensor Tensor::operator-() const {
  Tensor t(dim_, cov_, contra_);
  for (std::size_t i = 0; i < comps_.size(); ++i) t.comps_[i] = -comps_[i];
  return t;
}

Tensor Tensor::scaled(const Rational& c) const {
  Tensor t(dim_, cov_, contra_);
  for (std::size_t i = 0; i < comps_.size(); ++i) t.comps_[i] = c * comps_[i];
  return t;
}

bool Tensor::operator==(const Tensor& o) const {
  return dim_ == o.dim_ && cov_ == o.cov_ && contra_ == o.contra_ &&
         comps_ == o.comps_;
}

Tensor Tensor::tensor_product(const Tensor& o) const {
  if (dim_ != o.dim_)
    throw std::invalid_argument("tensor dimension mismatch in product");
  Tensor t(dim_, cov_ + o.cov_, contra_ + o.contra_);
  std::vector<std::size_t> idx(t.rank(), 0);
  std::vector<std::size_t> a(rank()), b(o.rank());
  for (std::size_t flat = 0; flat < t.size(); ++flat) {
    std::size_t rem = flat;
    for (std::size_t p = t.rank(); p-- > 0;) {
      idx[p] = rem % dim_;
      rem /= dim_;
    }
    // this covariant, other covariant, this contravariant, other contravariant
    for (std::size_t p = 0; p < cov_; ++p) a[p] = idx[p];
    for (std::size_t p = 0; p < o.cov_; ++p) b[p] = idx[cov_ + p];
    for (std::size_t p = 0; p < contra_; ++p)
      a[cov_ + p] = idx[cov_ + o.cov_ + p];
    for (std::size_t p = 0; p < o.contra_; ++p)
      b[o.cov_ + p] = idx[cov_ + o.cov_ + contra_ + p];
    t.comps_[flat] = at(a) * o.at(b);
  }
  return t;
}

Tensor Tensor::contract(std::size_t cov_slot, std::size_t contra_slot) const {
  if (cov_slot >= cov_ || contra_slot >= contra_)
    throw std::out_of_range("contraction slot out of range");
  Tensor t(dim_, cov_ - 1, contra_ - 1);
  std::vector<std::size_t> out(t.rank()), in(rank());
  for (std::size_t flat = 0; flat < t.size(); ++flat) {
    std::size_t rem = flat;
    for (std::size_t p = t.rank(); p-- > 0;) {
      out[p] = rem % dim_;
      rem /= dim_;
    }
    Rational sum = 0;
    for (std::size_t d = 0; d < dim_; ++d) {
      std::size_t q = 0;
      for (std::size_t p = 0; p < cov_; ++p)
        in[p] = (p == cov_slot) ? d : out[q++];
      for (std::size_t p = 0; p < contra_; ++p)
        in[cov_ + p] = (p == contra_slot) ? d : out[q++];
      sum += at(in);
    }
    t.comps_[flat] = sum;
  }
  return t;
}

Tensor Tensor::symmetrize() const {
  if (cov_ != 2 || contra_ != 0)
    throw std::invalid_argument("symmetrize requires a (2,0) tensor");
  return (*this + swap_cov(0, 1)).scaled(Rational(1, 2));
}

Tensor Tensor::antisymmetrize() const {
  if (cov_ != 2 || contra_ != 0)
    throw std::invalid_argument("antisymmetrize requires a (2,0) tensor");
  return (*this - swap_cov(0, 1)).scaled(Rational(1, 2));
}

Tensor Tensor::swap_cov(std::size_t a, std::size_t b) const {
  if (a >= cov_ || b >= cov_) throw std::out_of_range("swap slot out of range");
  Tensor t(dim_, cov_, contra_);
  std::vector<std::size_t> idx(rank());
  for (std::size_t flat = 0; flat < size(); ++flat) {
    std::size_t rem = flat;
    for (std::size_t p = rank(); p-- > 0;) {
      idx[p] = rem % dim_;
      rem /= dim_;
    }
    std::swap(idx[a], idx[b]);
    t.comps_[flat] = at(idx);
  }
  return t;
}

}  // namespace nkgeo
