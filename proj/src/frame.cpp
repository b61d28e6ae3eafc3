#include "nkgeo/frame.hpp"

#include <stdexcept>

namespace nkgeo {

namespace {

/// Components of [V, e_i] as a matrix b(i,k) = sum_p V^p c(p,i;k).
Tensor bracket_matrix(const Tensor& v, const FrameManifold& M) {
  const std::size_t n = M.dim();
  Tensor b(n, 1, 1);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      Rational s = 0;
      for (std::size_t p = 0; p < n; ++p) s += v(p) * M.c(p, i, k);
      b(i, k) = s;
    }
  return b;
}

}  // namespace

FrameManifold::FrameManifold(std::size_t m, Tensor structure)
    : m_(m), dim_(2 * m + 1), c_(std::move(structure)), g_(dim_, 2, 0) {
  if (m == 0) throw std::invalid_argument("m must be positive");
  if (c_.dim() != dim_ || c_.cov_rank() != 2 || c_.contra_rank() != 1)
    throw std::invalid_argument("structure coefficients must be a (2,1) tensor of dim 2m+1");
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j)
      for (std::size_t k = 0; k < dim_; ++k)
        if (c_(i, j, k) != -c_(j, i, k))
          throw std::invalid_argument("structure coefficients not antisymmetric");
  for (std::size_t i = 0; i < dim_; ++i) g_(i, i) = 1;
}

JacobiReport jacobi_check(const FrameManifold& M) {
  const std::size_t n = M.dim();
  JacobiReport rep;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t l = j + 1; l < n; ++l) {
        bool bad = false;
        for (std::size_t k = 0; k < n && !bad; ++k) {
          Rational s = 0;
          for (std::size_t a = 0; a < n; ++a)
            s += M.c(i, j, a) * M.c(a, l, k) + M.c(j, l, a) * M.c(a, i, k) +
                 M.c(l, i, a) * M.c(a, j, k);
          bad = (s != 0);
        }
        if (bad) {
          rep.ok = false;
          rep.violations.push_back({i + 1, j + 1, l + 1});
        }
      }
  return rep;
}

Tensor Connection::derive_vector(std::size_t i, const Tensor& v) const {
  const std::size_t n = gamma_.dim();
  Tensor out(n, 0, 1);
  for (std::size_t k = 0; k < n; ++k) {
    Rational s = 0;
    for (std::size_t a = 0; a < n; ++a) s += v(a) * gamma_(i, a, k);
    out(k) = s;
  }
  return out;
}

Tensor CurvatureTensor::apply(const Tensor& x, const Tensor& y,
                              const Tensor& z) const {
  const std::size_t n = r_.dim();
  Tensor out(n, 0, 1);
  for (std::size_t k = 0; k < n; ++k) {
    Rational s = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t l = 0; l < n; ++l)
          s += x(i) * y(j) * z(l) * r_(i, j, l, k);
    out(k) = s;
  }
  return out;
}

Connection levi_civita(const FrameManifold& M) {
  JacobiReport jac = jacobi_check(M);
  if (!jac.ok)
    throw std::invalid_argument("structure coefficients violate the Jacobi identity");
  const std::size_t n = M.dim();
  // 2 g(nabla_{e_i} e_j, e_k) = g([e_i,e_j],e_k) - g([e_j,e_k],e_i)
  //                           + g([e_k,e_i],e_j), identity metric.
  Tensor gamma(n, 2, 1);
  const Rational half(1, 2);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        gamma(i, j, k) = half * (M.c(i, j, k) - M.c(j, k, i) + M.c(k, i, j));
  return Connection(std::move(gamma));
}

CurvatureTensor riemann(const FrameManifold& M, const Connection& conn) {
  const std::size_t n = M.dim();
  Tensor r(n, 3, 1);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t l = 0; l < n; ++l)
        for (std::size_t k = 0; k < n; ++k) {
          Rational s = 0;
          for (std::size_t a = 0; a < n; ++a)
            s += conn.gamma(j, l, a) * conn.gamma(i, a, k) -
                 conn.gamma(i, l, a) * conn.gamma(j, a, k) -
                 M.c(i, j, a) * conn.gamma(a, l, k);
          r(i, j, l, k) = s;
        }
  return CurvatureTensor(std::move(r));
}

RicciData ricci(const CurvatureTensor& R, const FrameManifold& M) {
  const std::size_t n = M.dim();
  Tensor ric(n, 2, 0);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      Rational s = 0;
      for (std::size_t i = 0; i < n; ++i) s += R.at(i, x, y, i);
      ric(x, y) = s;
    }
  Rational scalar = 0;
  for (std::size_t i = 0; i < n; ++i) scalar += ric(i, i);
  return {std::move(ric), std::move(scalar)};
}

Tensor covariant_derivative(const Tensor& t, const Connection& conn) {
  const std::size_t n = t.dim();
  const std::size_t r = t.cov_rank(), s = t.contra_rank();
  Tensor out(n, r + 1, s);
  std::vector<std::size_t> oidx(r + 1 + s), tidx(r + s);
  for (std::size_t flat = 0; flat < out.size(); ++flat) {
    std::size_t rem = flat;
    for (std::size_t p = r + 1 + s; p-- > 0;) {
      oidx[p] = rem % n;
      rem /= n;
    }
    const std::size_t w = oidx[0];
    for (std::size_t p = 0; p < r + s; ++p) tidx[p] = oidx[p + 1];
    // Directional derivative of constant components vanishes; only
    // Gamma-corrections contribute.
    Rational acc = 0;
    for (std::size_t a = 0; a < r; ++a) {
      std::vector<std::size_t> jdx = tidx;
      for (std::size_t b = 0; b < n; ++b) {
        jdx[a] = b;
        acc -= conn.gamma(w, tidx[a], b) * t.at(jdx);
      }
    }
    for (std::size_t cslot = 0; cslot < s; ++cslot) {
      std::vector<std::size_t> jdx = tidx;
      for (std::size_t b = 0; b < n; ++b) {
        jdx[r + cslot] = b;
        acc += conn.gamma(w, b, tidx[r + cslot]) * t.at(jdx);
      }
    }
    out.flat(flat) = acc;
  }
  return out;
}

Tensor lie_bracket(const Tensor& v, const Tensor& w, const FrameManifold& M) {
  const std::size_t n = M.dim();
  if (v.dim() != n || w.dim() != n)
    throw std::invalid_argument("lie_bracket: dimension mismatch");
  Tensor out(n, 0, 1);
  for (std::size_t k = 0; k < n; ++k) {
    Rational s = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) s += v(i) * w(j) * M.c(i, j, k);
    out(k) = s;
  }
  return out;
}

Tensor lie_derivative_tensor(const Tensor& t, const Tensor& v,
                             const FrameManifold& M) {
  if (t.contra_rank() > 1)
    throw std::invalid_argument("lie_derivative_tensor supports s <= 1");
  const std::size_t n = t.dim();
  const std::size_t r = t.cov_rank(), s = t.contra_rank();
  const Tensor b = bracket_matrix(v, M);
  Tensor out(n, r, s);
  std::vector<std::size_t> idx(r + s);
  for (std::size_t flat = 0; flat < out.size(); ++flat) {
    std::size_t rem = flat;
    for (std::size_t p = r + s; p-- > 0;) {
      idx[p] = rem % n;
      rem /= n;
    }
    Rational acc = 0;
    if (s == 1) {
      std::vector<std::size_t> jdx = idx;
      for (std::size_t q = 0; q < n; ++q) {
        jdx[r] = q;
        acc += t.at(jdx) * b(q, idx[r]);
      }
    }
    for (std::size_t a = 0; a < r; ++a) {
      std::vector<std::size_t> jdx = idx;
      for (std::size_t q = 0; q < n; ++q) {
        jdx[a] = q;
        acc -= b(idx[a], q) * t.at(jdx);
      }
    }
    out.flat(flat) = acc;
  }
  return out;
}

Tensor lie_derivative_metric(const Tensor& v, const FrameManifold& M,
                             const Connection& conn) {
  const std::size_t n = M.dim();
  Tensor out(n, 2, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Rational s = 0;
      for (std::size_t a = 0; a < n; ++a)
        s += v(a) * (conn.gamma(i, a, j) + conn.gamma(j, a, i));
      out(i, j) = s;
    }
  return out;
}

Tensor lie_derivative_connection_direct(const Tensor& v, const FrameManifold& M,
                                        const Connection& conn) {
  const std::size_t n = M.dim();
  const Tensor b = bracket_matrix(v, M);
  Tensor out(n, 2, 1);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Rational s = 0;
        for (std::size_t a = 0; a < n; ++a)
          s += conn.gamma(i, j, a) * b(a, k) - b(i, a) * conn.gamma(a, j, k) -
               b(j, a) * conn.gamma(i, a, k);
        out(i, j, k) = s;
      }
  return out;
}

Tensor lie_derivative_connection_via_metric(const Tensor& v,
                                            const FrameManifold& M,
                                            const Connection& conn) {
  const std::size_t n = M.dim();
  const Tensor lg = lie_derivative_metric(v, M, conn);
  const Tensor d = covariant_derivative(lg, conn);  // d(w,i,j)
  Tensor out(n, 2, 1);
  const Rational half(1, 2);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t w = 0; w < n; ++w)
        out(x, y, w) = half * (d(x, y, w) + d(y, x, w) - d(w, x, y));
  return out;
}

LieCurvatureData lie_derivative_curvature(const Tensor& v,
                                          const FrameManifold& M,
                                          const Connection& conn,
                                          const CurvatureTensor& R) {
  const std::size_t n = M.dim();
  Tensor lie_r = lie_derivative_tensor(R.components(), v, M);
  const Tensor s = lie_derivative_connection_direct(v, M, conn);
  const Tensor ds = covariant_derivative(s, conn);  // ds(x,y,w;k)
  Tensor residual = lie_r;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t w = 0; w < n; ++w)
        for (std::size_t k = 0; k < n; ++k)
          residual(i, j, w, k) -= ds(i, j, w, k) - ds(j, i, w, k);
  return {std::move(lie_r), std::move(residual)};
}

SpecialFieldBasis find_special_fields(const FrameManifold& M,
                                      const Connection& conn,
                                      SpecialFieldMode mode) {
  const std::size_t n = M.dim();
  const bool conformal = (mode == SpecialFieldMode::kConformal);
  const std::size_t cols = conformal ? n + 1 : n;
  RMatrix rows;
  if (mode == SpecialFieldMode::kParallel) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) {
        RVector row(cols, Rational(0));
        for (std::size_t a = 0; a < n; ++a) row[a] = conn.gamma(i, a, k);
        rows.push_back(std::move(row));
      }
  } else {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) {
        RVector row(cols, Rational(0));
        for (std::size_t a = 0; a < n; ++a)
          row[a] = conn.gamma(i, a, j) + conn.gamma(j, a, i);
        if (conformal) row[n] = -2 * M.metric()(i, j);
        rows.push_back(std::move(row));
      }
  }
  SpecialFieldBasis out;
  for (const RVector& v : nullspace(rows)) {
    Tensor field(n, 0, 1);
    for (std::size_t a = 0; a < n; ++a) field(a) = v[a];
    out.fields.push_back(std::move(field));
    if (conformal) out.rhos.push_back(v[n]);
  }
  return out;
}

Tensor apply_op(const Tensor& op, const Tensor& v) {
  const std::size_t n = op.dim();
  Tensor out(n, 0, 1);
  for (std::size_t k = 0; k < n; ++k) {
    Rational s = 0;
    for (std::size_t i = 0; i < n; ++i) s += v(i) * op(i, k);
    out(k) = s;
  }
  return out;
}

Rational inner(const Tensor& v, const Tensor& w) {
  Rational s = 0;
  for (std::size_t i = 0; i < v.dim(); ++i) s += v(i) * w(i);
  return s;
}

Rational pair_covector(const Tensor& eta, const Tensor& v) {
  Rational s = 0;
  for (std::size_t i = 0; i < v.dim(); ++i) s += eta(i) * v(i);
  return s;
}

}  // namespace nkgeo
