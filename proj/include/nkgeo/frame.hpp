#ifndef NKGEO_FRAME_HPP
#define NKGEO_FRAME_HPP

#include <array>
#include <cstddef>
#include <vector>

#include "nkgeo/linalg.hpp"
#include "nkgeo/tensor.hpp"

namespace nkgeo {

/// Homogeneous frame of dimension 2m+1: constant structure coefficients
/// [e_i, e_j] = sum_k c(i,j;k) e_k and a constant frame metric. Only the
/// identity metric is accepted; an orthonormal frame keeps everything in Q.
class FrameManifold {
 public:
  /// structure holds c as a (2,1) tensor. Throws if c is not antisymmetric
  /// in its covariant slots or dim != 2m+1.
  FrameManifold(std::size_t m, Tensor structure);

  std::size_t m() const { return m_; }
  std::size_t dim() const { return dim_; }
  const Tensor& structure() const { return c_; }
  /// The metric as a (2,0) tensor (identity in v1).
  const Tensor& metric() const { return g_; }

  /// c(i,j;k), 0-based.
  const Rational& c(std::size_t i, std::size_t j, std::size_t k) const {
    return c_(i, j, k);
  }

 private:
  std::size_t m_, dim_;
  Tensor c_;
  Tensor g_;
};

struct JacobiReport {
  bool ok = true;
  /// Violating (i,j,l) triples, 1-based.
  std::vector<std::array<std::size_t, 3>> violations;
};

/// Checks the Jacobi identity exactly; required for a consistent frame.
JacobiReport jacobi_check(const FrameManifold& M);

/// Levi-Civita connection coefficients: nabla_{e_i} e_j = sum_k G(i,j;k) e_k.
class Connection {
 public:
  explicit Connection(Tensor gamma) : gamma_(std::move(gamma)) {}
  const Tensor& coeffs() const { return gamma_; }
  const Rational& gamma(std::size_t i, std::size_t j, std::size_t k) const {
    return gamma_(i, j, k);
  }
  /// nabla_{e_i} V for a constant-component vector field V.
  Tensor derive_vector(std::size_t i, const Tensor& v) const;

 private:
  Tensor gamma_;
};

/// Curvature components R(e_i,e_j)e_l = sum_k R(i,j,l;k) e_k, with the
/// convention R(X,Y) = [nabla_X, nabla_Y] - nabla_{[X,Y]}.
class CurvatureTensor {
 public:
  explicit CurvatureTensor(Tensor comps) : r_(std::move(comps)) {}
  const Tensor& components() const { return r_; }
  const Rational& at(std::size_t i, std::size_t j, std::size_t l,
                     std::size_t k) const {
    return r_(i, j, l, k);
  }
  /// R(X,Y)Z for constant-component fields.
  Tensor apply(const Tensor& x, const Tensor& y, const Tensor& z) const;

 private:
  Tensor r_;
};

/// Frame Koszul formula; valid because all frame inner products are
/// constant. Requires jacobi_check to pass (throws otherwise).
Connection levi_civita(const FrameManifold& M);

CurvatureTensor riemann(const FrameManifold& M, const Connection& conn);

struct RicciData {
  Tensor ric;          // (2,0), Ric(X,Y) = sum_i g(R(e_i,X)Y, e_i)
  Rational scalar;     // r = trace
};
RicciData ricci(const CurvatureTensor& R, const FrameManifold& M);

/// Covariant derivative of a constant-component tensor; the result gains
/// one covariant slot, placed first: (nabla t)(W; ...).
Tensor covariant_derivative(const Tensor& t, const Connection& conn);

/// [V, W] from the structure coefficients; bilinear in components.
Tensor lie_bracket(const Tensor& v, const Tensor& w, const FrameManifold& M);

/// Lie derivative of a constant-component tensor of valence (r, s) with
/// s <= 1, along a constant-component field V.
Tensor lie_derivative_tensor(const Tensor& t, const Tensor& v,
                             const FrameManifold& M);

/// (pounds_V g)(X,Y) = g(nabla_X V, Y) + g(X, nabla_Y V).
Tensor lie_derivative_metric(const Tensor& v, const FrameManifold& M,
                             const Connection& conn);

/// (pounds_V nabla)(X,Y) = [V, nabla_X Y] - nabla_{[V,X]}Y - nabla_X [V,Y].
Tensor lie_derivative_connection_direct(const Tensor& v, const FrameManifold& M,
                                        const Connection& conn);

/// Same tensor through the commutation route:
/// g((pounds_V nabla)(X,Y), W) = 1/2 [(nabla_X pounds_V g)(Y,W)
///   + (nabla_Y pounds_V g)(X,W) - (nabla_W pounds_V g)(X,Y)].
Tensor lie_derivative_connection_via_metric(const Tensor& v,
                                            const FrameManifold& M,
                                            const Connection& conn);

struct LieCurvatureData {
  Tensor lie_r;          // (3,1)
  Tensor yano_residual;  // (3,1); identically zero when the stack is sound
};
/// pounds_V R together with the residual of the commutation formula
/// (pounds_V R)(X,Y)W = (nabla_X pounds_V nabla)(Y,W)
///                    - (nabla_Y pounds_V nabla)(X,W).
LieCurvatureData lie_derivative_curvature(const Tensor& v,
                                          const FrameManifold& M,
                                          const Connection& conn,
                                          const CurvatureTensor& R);

enum class SpecialFieldMode { kKilling, kConformal, kParallel };

struct SpecialFieldBasis {
  std::vector<Tensor> fields;
  /// Conformal coefficient per basis field (conformal mode only).
  std::vector<Rational> rhos;
};

/// Exact basis of the space of constant-component fields V with
/// pounds_V g = 0 (killing), pounds_V g = 2 rho g (conformal, rho solved
/// jointly) or nabla V = 0 (parallel).
SpecialFieldBasis find_special_fields(const FrameManifold& M,
                                      const Connection& conn,
                                      SpecialFieldMode mode);

// Small helpers shared across the modules (identity metric throughout).

/// (1,1) operator applied to a vector: (A v)^k = sum_i v^i A(i;k).
Tensor apply_op(const Tensor& op, const Tensor& v);
/// g(v, w) for vectors in an orthonormal frame.
Rational inner(const Tensor& v, const Tensor& w);
/// Covector action eta(v).
Rational pair_covector(const Tensor& eta, const Tensor& v);

}  // namespace nkgeo

#endif
