#include "nkgeo/soliton.hpp"

#include <stdexcept>

namespace nkgeo {

namespace {

Rational abs_max(const Rational& a, const Rational& b) {
  return a > b ? a : b;
}

bool uses_star(SolitonKind k) { return k != SolitonKind::kEinstein &&
                                       k != SolitonKind::kConformalEinstein; }

bool uses_pressure(SolitonKind k) {
  return k == SolitonKind::kConformalEinstein ||
         k == SolitonKind::kStarConformalEinstein ||
         k == SolitonKind::kStarConformalGradientEinstein;
}

/// Constant part of the g-coefficient, excluding Omega.
Rational coef_offset(const SolitonSpec& spec, const GeometryBundle& geo) {
  const std::size_t n = geo.M.dim();
  Rational c = 0;
  switch (spec.kind) {
    case SolitonKind::kEinstein:
    case SolitonKind::kConformalEinstein:
      c -= geo.ric.scalar / 2;
      break;
    case SolitonKind::kStarRicci:
      break;
    case SolitonKind::kStarConformalEinstein:
    case SolitonKind::kStarConformalGradientEinstein:
      c -= geo.star.r_star / 2;
      break;
  }
  if (uses_pressure(spec.kind))
    c += spec.pressure / 2 + Rational(1, n);
  return c;
}

const Tensor& base_tensor(const SolitonSpec& spec, const GeometryBundle& geo) {
  return uses_star(spec.kind) ? geo.star.ric_star : geo.ric.ric;
}

}  // namespace

std::string soliton_kind_name(SolitonKind kind) {
  switch (kind) {
    case SolitonKind::kEinstein: return "einstein";
    case SolitonKind::kConformalEinstein: return "conformal-einstein";
    case SolitonKind::kStarRicci: return "star-ricci";
    case SolitonKind::kStarConformalEinstein: return "star-conformal-einstein";
    case SolitonKind::kStarConformalGradientEinstein:
      return "star-conformal-gradient-einstein";
  }
  return "?";
}

std::optional<SolitonKind> parse_soliton_kind(const std::string& name) {
  for (SolitonKind k : {SolitonKind::kEinstein, SolitonKind::kConformalEinstein,
                        SolitonKind::kStarRicci,
                        SolitonKind::kStarConformalEinstein,
                        SolitonKind::kStarConformalGradientEinstein})
    if (soliton_kind_name(k) == name) return k;
  return std::nullopt;
}

GeometryBundle bundle(const StandardExample& ex, const StarRicciData& star) {
  return {ex.M, ex.conn, ex.R, ex.ric, ex.S, star};
}

std::string nature_name(SolitonNature n) {
  switch (n) {
    case SolitonNature::kShrinking: return "shrinking";
    case SolitonNature::kSteady: return "steady";
    case SolitonNature::kExpanding: return "expanding";
  }
  return "?";
}

SolitonNature classify(const Rational& omega) {
  if (omega < 0) return SolitonNature::kShrinking;
  if (omega == 0) return SolitonNature::kSteady;
  return SolitonNature::kExpanding;
}

SolitonNature classify_by_pressure(const Rational& p, std::size_t m) {
  const Rational threshold = Rational(-2) / Rational(2 * m + 1);
  if (p > threshold) return SolitonNature::kShrinking;
  if (p == threshold) return SolitonNature::kSteady;
  return SolitonNature::kExpanding;
}

Tensor soliton_residual(const SolitonSpec& spec, const GeometryBundle& geo) {
  if (!spec.potential) throw std::invalid_argument("potential field unknown");
  if (!spec.omega) throw std::invalid_argument("soliton constant unknown");
  const Tensor& v = *spec.potential;
  Tensor flow(geo.M.dim(), 2, 0);
  if (spec.kind == SolitonKind::kStarConformalGradientEinstein) {
    std::optional<Tensor> hess = hessian_from_field(v, geo);
    if (!hess)
      throw std::invalid_argument("potential field is not gradient-certified");
    flow = *hess;
  } else {
    flow = lie_derivative_metric(v, geo.M, geo.conn).scaled(Rational(1, 2));
  }
  Rational coef = *spec.omega + coef_offset(spec, geo);
  return base_tensor(spec, geo) + flow + geo.M.metric().scaled(coef);
}

std::optional<Rational> solve_soliton_constants(const SolitonSpec& spec,
                                                const GeometryBundle& geo) {
  if (!spec.potential) throw std::invalid_argument("potential field unknown");
  const std::size_t n = geo.M.dim();
  const Tensor& v = *spec.potential;
  Tensor flow(n, 2, 0);
  if (spec.kind == SolitonKind::kStarConformalGradientEinstein) {
    std::optional<Tensor> hess = hessian_from_field(v, geo);
    if (!hess) return std::nullopt;
    flow = *hess;
  } else {
    flow = lie_derivative_metric(v, geo.M, geo.conn).scaled(Rational(1, 2));
  }
  const Tensor& base = base_tensor(spec, geo);
  Rational trace = 0;
  for (std::size_t i = 0; i < n; ++i) trace += base(i, i) + flow(i, i);
  Rational omega = -trace / Rational(n) - coef_offset(spec, geo);
  SolitonSpec solved = spec;
  solved.omega = omega;
  if (!soliton_residual(solved, geo).is_zero()) return std::nullopt;
  return omega;
}

AffineSolutionSet solve_potential_field(const SolitonSpec& spec,
                                        const GeometryBundle& geo) {
  const std::size_t n = geo.M.dim();
  const bool gradient =
      spec.kind == SolitonKind::kStarConformalGradientEinstein;
  const Tensor& base = base_tensor(spec, geo);
  const Rational c0 = coef_offset(spec, geo);
  RMatrix a;
  RVector b;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      RVector row(n + 1, Rational(0));
      for (std::size_t w = 0; w < n; ++w)
        row[w] = gradient
                     ? geo.conn.gamma(i, w, j)
                     : (geo.conn.gamma(i, w, j) + geo.conn.gamma(j, w, i)) / 2;
      row[n] = geo.M.metric()(i, j);
      a.push_back(std::move(row));
      b.push_back(-base(i, j) - c0 * geo.M.metric()(i, j));
    }
  if (gradient) {
    // Gradient certification: g(nabla_. V, .) symmetric.
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        RVector row(n + 1, Rational(0));
        for (std::size_t w = 0; w < n; ++w)
          row[w] = geo.conn.gamma(i, w, j) - geo.conn.gamma(j, w, i);
        a.push_back(std::move(row));
        b.push_back(Rational(0));
      }
  }
  return solve_linear(a, b);
}

std::optional<Rational> conformal_coefficient(const Tensor& v,
                                              const GeometryBundle& geo) {
  const std::size_t n = geo.M.dim();
  Tensor lg = lie_derivative_metric(v, geo.M, geo.conn);
  RMatrix a;
  RVector b;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      a.push_back({Rational(2) * geo.M.metric()(i, j)});
      b.push_back(lg(i, j));
    }
  AffineSolutionSet sol = solve_linear(a, b);
  if (!sol.consistent) return std::nullopt;
  return sol.particular[0];
}

ContactTransformReport contact_transformation_check(
    const Tensor& v, const GeometryBundle& geo) {
  const std::size_t n = geo.M.dim();
  const ContactStructure& S = geo.S;
  // (pounds_V eta)(X) = -eta([V, X]) for constant components.
  RMatrix a;
  RVector b;
  for (std::size_t i = 0; i < n; ++i) {
    Rational lie_eta_i =
        -pair_covector(S.eta, lie_bracket(v, Tensor::basis_vector(n, i), geo.M));
    a.push_back({S.eta(i)});
    b.push_back(lie_eta_i);
  }
  AffineSolutionSet sol = solve_linear(a, b);
  ContactTransformReport out{std::nullopt, Rational(0), false};
  if (sol.consistent) out.psi = sol.particular[0];
  Tensor lie_zeta = lie_bracket(v, S.zeta, geo.M);
  out.eta_of_lie_zeta = pair_covector(S.eta, lie_zeta);
  out.lie_zeta_orthogonal = (inner(lie_zeta, S.zeta) == 0);
  return out;
}

std::optional<Tensor> hessian_from_field(const Tensor& v,
                                         const GeometryBundle& geo) {
  const std::size_t n = geo.M.dim();
  Tensor b(n, 2, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Rational s = 0;
      for (std::size_t w = 0; w < n; ++w) s += v(w) * geo.conn.gamma(i, w, j);
      b(i, j) = s;
    }
  if (b != b.swap_cov(0, 1)) return std::nullopt;
  return b;
}

Report lemma41_check(const SolitonSpec& spec, const GeometryBundle& geo) {
  if (spec.kind != SolitonKind::kStarConformalGradientEinstein)
    throw std::invalid_argument("lemma41_check requires the gradient kind");
  if (!spec.potential || !spec.omega)
    throw std::invalid_argument("lemma41_check requires V and Omega");
  if (!hessian_from_field(*spec.potential, geo))
    throw std::invalid_argument("potential field is not gradient-certified");
  if (!soliton_residual(spec, geo).is_zero())
    throw std::invalid_argument("(V, Omega) does not solve the gradient soliton equation");

  const std::size_t n = geo.M.dim();
  const ContactStructure& S = geo.S;
  const Rational k = S.k.value();
  const Tensor& v = *spec.potential;
  Tensor dq = covariant_derivative(geo.star.q_star, geo.conn);
  Report rep;

  // Eq4.5: R(X,Y) grad f = (nabla_Y Q*)X - (nabla_X Q*)Y.
  // Lemma 4.1 closed form: = k{2 g(phi X, Y) zeta - eta(X)(phi Y + phi h Y)
  //                            + eta(Y)(phi X + phi h X)}.
  Rational res45 = 0, res_closed = 0;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t c = 0; c < n; ++c) {
        Rational lhs = 0;
        for (std::size_t l = 0; l < n; ++l) lhs += v(l) * geo.R.at(x, y, l, c);
        res45 = abs_max(res45, abs(lhs - (dq(y, x, c) - dq(x, y, c))));
        Rational phiy = S.phi(y, c), phix = S.phi(x, c);
        for (std::size_t a = 0; a < n; ++a) {
          phiy += S.h(y, a) * S.phi(a, c);
          phix += S.h(x, a) * S.phi(a, c);
        }
        Rational want = k * (2 * S.phi(x, y) * S.zeta(c) - S.eta(x) * phiy +
                             S.eta(y) * phix);
        res_closed = abs_max(res_closed, abs(lhs - want));
      }
  rep.add("Eq4.5", res45);
  rep.add("Lem4.1", res_closed);

  // Eq4.12: R(zeta, Y) grad f = -k (phi Y + phi h Y).
  Rational res412 = 0;
  for (std::size_t y = 0; y < n; ++y)
    for (std::size_t c = 0; c < n; ++c) {
      Rational lhs = 0;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t l = 0; l < n; ++l)
          lhs += S.zeta(i) * v(l) * geo.R.at(i, y, l, c);
      Rational want = -k * S.phi(y, c);
      for (std::size_t a = 0; a < n; ++a)
        want -= k * S.h(y, a) * S.phi(a, c);
      res412 = abs_max(res412, abs(lhs - want));
    }
  rep.add("Eq4.12", res412);

  // Eq4.17: k{grad f - (zeta f) zeta} = 0 with zeta f = g(zeta, grad f).
  Rational zf = inner(S.zeta, v);
  Tensor e417 = (v - S.zeta.scaled(zf)).scaled(k);
  rep.add("Eq4.17", e417);
  return rep;
}

PoissonTrace poisson_trace(const SolitonSpec& spec, const GeometryBundle& geo) {
  if (spec.kind != SolitonKind::kStarConformalGradientEinstein)
    throw std::invalid_argument("poisson_trace requires the gradient kind");
  if (!spec.potential || !spec.omega)
    throw std::invalid_argument("poisson_trace requires V and Omega");
  if (!geo.star.ric_star.is_zero())
    throw std::invalid_argument("poisson_trace requires a *-Ricci-flat instance");
  std::optional<Tensor> hess = hessian_from_field(*spec.potential, geo);
  if (!hess)
    throw std::invalid_argument("potential field is not gradient-certified");
  const std::size_t n = geo.M.dim();
  Rational lap = 0;
  for (std::size_t i = 0; i < n; ++i) lap += (*hess)(i, i);
  Rational want =
      -(*spec.omega + spec.pressure / 2 + Rational(1, n)) * Rational(n);
  return {lap, lap == 0, lap - want};
}

Report soliton_derivative_checks(const Tensor& v, const Rational& omega,
                                 const Rational& p, const GeometryBundle& geo) {
  const std::size_t n = geo.M.dim();
  const ContactStructure& S = geo.S;
  const Rational k = S.k.value();
  Report rep;

  Tensor direct = lie_derivative_connection_direct(v, geo.M, geo.conn);
  Tensor via = lie_derivative_connection_via_metric(v, geo.M, geo.conn);
  rep.add("Eq3.11", direct - via, "two computation routes for pounds_V nabla");

  // Eq3.14: (pounds_V nabla)(X,Y) = 2k{eta(X) phi Y + eta(Y) phi X
  //                                    - g(hX, phi Y) zeta}.
  Rational res314 = 0;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t c = 0; c < n; ++c) {
        Rational ghphi = 0;
        for (std::size_t a = 0; a < n; ++a) ghphi += S.h(x, a) * S.phi(y, a);
        Rational want = 2 * k *
                        (S.eta(x) * S.phi(y, c) + S.eta(y) * S.phi(x, c) -
                         ghphi * S.zeta(c));
        res314 = abs_max(res314, abs(direct(x, y, c) - want));
      }
  rep.add("Eq3.14", res314);

  // Eq3.15: (pounds_V nabla)(X, zeta) = 2k phi X.
  Rational res315 = 0;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t c = 0; c < n; ++c) {
      Rational lhs = 0;
      for (std::size_t y = 0; y < n; ++y) lhs += S.zeta(y) * direct(x, y, c);
      res315 = abs_max(res315, abs(lhs - 2 * k * S.phi(x, c)));
    }
  rep.add("Eq3.15", res315);

  // Eq3.19: (pounds_V R)(X, zeta) zeta = 0, plus the Yano commutation
  // residual which must vanish for every V.
  LieCurvatureData lie = lie_derivative_curvature(v, geo.M, geo.conn, geo.R);
  rep.add("Yano", lie.yano_residual);
  Rational res319 = 0;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t c = 0; c < n; ++c) {
      Rational s = 0;
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t l = 0; l < n; ++l)
          s += S.zeta(j) * S.zeta(l) * lie.lie_r(x, j, l, c);
      res319 = abs_max(res319, abs(s));
    }
  rep.add("Eq3.19", res319);

  // Eq3.21: eta(pounds_V zeta) = Omega + mk + p/2 + 1/(2m+1).
  Rational lhs321 =
      pair_covector(S.eta, lie_bracket(v, S.zeta, geo.M));
  Rational want321 = omega + Rational(geo.M.m()) * k + p / 2 + Rational(1, n);
  rep.add("Eq3.21", abs(lhs321 - want321));
  return rep;
}

}  // namespace nkgeo
