#include "nkgeo/star_ricci.hpp"

namespace nkgeo {

namespace {
Rational abs_max(const Rational& a, const Rational& b) {
  return a > b ? a : b;
}
}  // namespace

StarRicciData star_ricci_direct(const FrameManifold& M,
                                const CurvatureTensor& R,
                                const ContactStructure& S) {
  const std::size_t n = M.dim();
  Tensor ric_star(n, 2, 0);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      Rational s = 0;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          for (std::size_t a = 0; a < n; ++a)
            s += S.phi(y, j) * R.at(x, j, i, a) * S.phi(a, i);
      ric_star(x, y) = s / 2;
    }
  Tensor q_star(n, 1, 1);
  Rational r_star = 0;
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t k = 0; k < n; ++k) q_star(x, k) = ric_star(x, k);
    r_star += q_star(x, x);
  }
  return {std::move(ric_star), std::move(q_star), std::move(r_star)};
}

Tensor star_ricci_closed_form(const FrameManifold& M,
                              const ContactStructure& S) {
  if (!S.k) throw ContactError("closed form requires the nullity constant k");
  const std::size_t n = M.dim();
  Tensor out(n, 2, 0);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      out(x, y) = *S.k * (S.eta(x) * S.eta(y) - M.metric()(x, y));
  return out;
}

Rational star_scalar_closed_form(const Rational& k, std::size_t m) {
  return Rational(-2) * Rational(m) * k;
}

Report star_closed_form_checks(const FrameManifold& M,
                               const ContactStructure& S,
                               const StarRicciData& data) {
  const std::size_t n = M.dim();
  const Rational k = S.k.value();
  Report rep;

  std::string note;
  if (k == 1)
    note = "k = 1: the nullity condition does not pin the full curvature; "
           "agreement is informational";
  rep.add("Eq3.1", data.ric_star - star_ricci_closed_form(M, S), note);
  rep.add("Eq3.2", abs(data.r_star - star_scalar_closed_form(k, M.m())), note);

  // Symmetry of Ric* (the hypothesis of the soliton definition) and
  // Ric*(X, zeta) = 0.
  Rational res = 0;
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y)
      res = abs_max(res, abs(data.ric_star(x, y) - data.ric_star(y, x)));
  }
  rep.add("Ric*-symmetry", res);
  res = 0;
  for (std::size_t x = 0; x < n; ++x) {
    Rational s = 0;
    for (std::size_t y = 0; y < n; ++y) s += data.ric_star(x, y) * S.zeta(y);
    res = abs_max(res, abs(s));
  }
  rep.add("Ric*-zeta", res);

  // Eq4.6: Q* X = k eta(X) zeta - k X.
  res = 0;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t c = 0; c < n; ++c) {
      Rational want = k * S.eta(x) * S.zeta(c) -
                      k * (x == c ? Rational(1) : Rational(0));
      res = abs_max(res, abs(data.q_star(x, c) - want));
    }
  rep.add("Eq4.6", res, note);
  return rep;
}

Report nabla_star_ricci_check(const FrameManifold& M, const Connection& conn,
                              const StarRicciData& data,
                              const ContactStructure& S) {
  const std::size_t n = M.dim();
  const Rational k = S.k.value();
  const Tensor& h = S.h;
  Report rep;

  auto g_plus_h_phi = [&](std::size_t w, std::size_t x) {
    // g(W + hW, phi X) on frame fields
    Rational s = 0;
    for (std::size_t c = 0; c < n; ++c)
      s += ((w == c ? Rational(1) : Rational(0)) + h(w, c)) * S.phi(x, c);
    return s;
  };

  // Eq3.5: (nabla_W Ric*)(X,Y) = k{g(W+hW,phiX)eta(Y) + g(W+hW,phiY)eta(X)}.
  {
    Tensor d = covariant_derivative(data.ric_star, conn);
    Rational res = 0;
    for (std::size_t w = 0; w < n; ++w)
      for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
          Rational want = k * (g_plus_h_phi(w, x) * S.eta(y) +
                               g_plus_h_phi(w, y) * S.eta(x));
          res = abs_max(res, abs(d(w, x, y) - want));
        }
    rep.add("Eq3.5", res);
  }

  Tensor dq = covariant_derivative(data.q_star, conn);  // dq(y, x; c)

  // Eq4.7: nabla_Y (Q* X) = k eta(X) nabla_Y zeta - k nabla_Y X for
  // constant frame fields X.
  {
    Rational res = 0;
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t x = 0; x < n; ++x)
        for (std::size_t c = 0; c < n; ++c) {
          Rational lhs = 0;
          for (std::size_t a = 0; a < n; ++a)
            lhs += data.q_star(x, a) * conn.gamma(y, a, c);
          Rational want = -k * conn.gamma(y, x, c);
          for (std::size_t a = 0; a < n; ++a)
            want += k * S.eta(x) * S.zeta(a) * conn.gamma(y, a, c);
          res = abs_max(res, abs(lhs - want));
        }
    rep.add("Eq4.7", res);
  }

  // Eq4.8 / Eq4.9: (nabla_Y Q*)X = k g(Y+hY, phi X) zeta
  //                              - k eta(X)(phi Y + phi h Y).
  {
    Rational res = 0;
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t x = 0; x < n; ++x)
        for (std::size_t c = 0; c < n; ++c) {
          Rational phi_plus_phih = S.phi(y, c);
          for (std::size_t a = 0; a < n; ++a)
            phi_plus_phih += h(y, a) * S.phi(a, c);
          Rational want = k * g_plus_h_phi(y, x) * S.zeta(c) -
                          k * S.eta(x) * phi_plus_phih;
          res = abs_max(res, abs(dq(y, x, c) - want));
        }
    rep.add("Eq4.8", res);
    // Eq4.9 is Eq4.8 with X and Y exchanged; over a full index sweep the
    // residual is the same quantity.
    rep.add("Eq4.9", res);
  }

  return rep;
}

Report lemma33_cyclic_residual(const FrameManifold& M, const Connection& conn,
                               const StarRicciData& data,
                               const ContactStructure& S) {
  const std::size_t n = M.dim();
  const Rational k = S.k.value();
  const Tensor& h = S.h;
  Tensor d = covariant_derivative(data.ric_star, conn);
  Rational res = 0;
  for (std::size_t w = 0; w < n; ++w)
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y) {
        Rational lhs = d(w, x, y) - d(x, y, w) - d(y, x, w);
        Rational g_hx_phiy = 0;
        for (std::size_t c = 0; c < n; ++c) g_hx_phiy += h(x, c) * S.phi(y, c);
        Rational want = 2 * k *
                        (S.phi(y, w) * S.eta(x) + S.phi(x, w) * S.eta(y) -
                         g_hx_phiy * S.eta(w));
        res = res > abs(lhs - want) ? res : abs(lhs - want);
      }
  Report rep;
  rep.add("Eq3.3", res);
  return rep;
}

}  // namespace nkgeo
