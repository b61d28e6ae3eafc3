#ifndef NKGEO_SOLITON_HPP
#define NKGEO_SOLITON_HPP

#include <optional>
#include <string>

#include "nkgeo/contact.hpp"
#include "nkgeo/frame.hpp"
#include "nkgeo/report.hpp"
#include "nkgeo/star_ricci.hpp"

namespace nkgeo {

enum class SolitonKind {
  kEinstein,                       // Ric + 1/2 Lg + (W - r/2) g = 0
  kConformalEinstein,              // ... + (p/2 + 1/(2m+1)) g
  kStarRicci,                      // Ric* + 1/2 Lg + W g = 0
  kStarConformalEinstein,          // Ric* + 1/2 Lg + (W - r*/2 + p/2 + 1/(2m+1)) g
  kStarConformalGradientEinstein,  // Hessian of f instead of 1/2 Lg
};

std::string soliton_kind_name(SolitonKind kind);
std::optional<SolitonKind> parse_soliton_kind(const std::string& name);

struct SolitonSpec {
  SolitonKind kind = SolitonKind::kStarConformalEinstein;
  std::optional<Tensor> potential;  // V; nullopt = unknown
  std::optional<Rational> omega;    // nullopt = unknown
  Rational pressure = 0;            // conformal kinds only
};

/// Everything the soliton operations need about one instance.
struct GeometryBundle {
  const FrameManifold& M;
  const Connection& conn;
  const CurvatureTensor& R;
  const RicciData& ric;
  const ContactStructure& S;
  const StarRicciData& star;
};

GeometryBundle bundle(const StandardExample& ex, const StarRicciData& star);

enum class SolitonNature { kShrinking, kSteady, kExpanding };
std::string nature_name(SolitonNature n);

SolitonNature classify(const Rational& omega);
/// Applies when Omega = -p/2 - 1/(2m+1) (the k = 0 branch).
SolitonNature classify_by_pressure(const Rational& p, std::size_t m);

/// Left-hand side of the selected soliton equation on all frame pairs.
/// Requires V and Omega known; for the gradient kind V must be
/// gradient-certified. Throws std::invalid_argument otherwise.
Tensor soliton_residual(const SolitonSpec& spec, const GeometryBundle& geo);

/// Exact Omega from the trace of the soliton equation, then a full-tensor
/// consistency check; nullopt = infeasible. Requires V known.
std::optional<Rational> solve_soliton_constants(const SolitonSpec& spec,
                                                const GeometryBundle& geo);

/// Joint exact linear solve of the soliton equation over constant
/// components of V and the scalar Omega. Unknown layout: V^1..V^n, Omega.
/// For the gradient kind the symmetry of g(nabla_. V, .) is part of the
/// system, so every returned V is gradient-certified.
AffineSolutionSet solve_potential_field(const SolitonSpec& spec,
                                        const GeometryBundle& geo);

/// Exact fit of pounds_V g = 2 rho g; nullopt = not conformal.
std::optional<Rational> conformal_coefficient(const Tensor& v,
                                              const GeometryBundle& geo);

struct ContactTransformReport {
  std::optional<Rational> psi;  // pounds_V eta = psi eta; nullopt = no fit
  Rational eta_of_lie_zeta;     // eta(pounds_V zeta), cf. the soliton trace
  bool lie_zeta_orthogonal;     // pounds_V zeta orthogonal to zeta
};
ContactTransformReport contact_transformation_check(const Tensor& v,
                                                    const GeometryBundle& geo);

/// B(X,Y) = g(nabla_X V, Y); returned as the Hessian of a local potential
/// when symmetric (closed dual form), nullopt otherwise.
std::optional<Tensor> hessian_from_field(const Tensor& v,
                                         const GeometryBundle& geo);

/// Gradient-soliton curvature identities Eq4.5, the Lemma 4.1 closed
/// form, Eq4.12 and Eq4.17. Preconditions: V gradient-certified and
/// (V, Omega) solving the gradient soliton equation; throws otherwise.
Report lemma41_check(const SolitonSpec& spec, const GeometryBundle& geo);

struct PoissonTrace {
  Rational laplacian;          // trace of the Hessian
  bool harmonic;               // laplacian == 0
  Rational relation_residual;  // vs -(Omega + p/2 + 1/(2m+1))(2m+1)
};
/// Trace of the gradient soliton equation on a *-Ricci-flat instance.
PoissonTrace poisson_trace(const SolitonSpec& spec, const GeometryBundle& geo);

/// The Lie-derivative chain behind the main soliton theorem: agreement of
/// the two pounds_V nabla routes (Eq3.11), (pounds_V nabla)(X,zeta) = 2k phi X
/// (Eq3.15), (pounds_V R)(X,zeta)zeta = 0 (Eq3.19) and
/// eta(pounds_V zeta) = Omega + mk + p/2 + 1/(2m+1) (Eq3.21). The Eq3.14,
/// Eq3.15, Eq3.19 and Eq3.21 residuals presume (V, Omega) solves the
/// *-conformal Einstein soliton equation.
Report soliton_derivative_checks(const Tensor& v, const Rational& omega,
                                 const Rational& p, const GeometryBundle& geo);

}  // namespace nkgeo

#endif
