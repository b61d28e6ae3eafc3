#include "nkgeo/contact.hpp"

#include <utility>

namespace nkgeo {

namespace {

Rational abs_max(const Rational& a, const Rational& b) {
  return a > b ? a : b;
}

/// Composition (A o B)(X) = A(B(X)) in operator convention.
Tensor compose(const Tensor& outer, const Tensor& inner_op) {
  const std::size_t n = outer.dim();
  Tensor out(n, 1, 1);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      Rational s = 0;
      for (std::size_t a = 0; a < n; ++a) s += inner_op(i, a) * outer(a, k);
      out(i, k) = s;
    }
  return out;
}

Rational trace_op(const Tensor& op) {
  Rational s = 0;
  for (std::size_t i = 0; i < op.dim(); ++i) s += op(i, i);
  return s;
}

}  // namespace

Report validate_structure(const FrameManifold& M, const ContactStructure& S) {
  const std::size_t n = M.dim();
  Report rep;

  // phi^2 = -I + eta (x) zeta, eta(zeta) = 1
  Tensor phi2 = compose(S.phi, S.phi);
  Rational res = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      Rational want = S.eta(i) * S.zeta(k) - (i == k ? Rational(1) : Rational(0));
      res = abs_max(res, abs(phi2(i, k) - want));
    }
  res = abs_max(res, abs(pair_covector(S.eta, S.zeta) - 1));
  rep.add("Eq2.1", res);

  // phi zeta = 0, eta o phi = 0
  res = apply_op(S.phi, S.zeta).max_abs();
  for (std::size_t i = 0; i < n; ++i) {
    Rational s = 0;
    for (std::size_t k = 0; k < n; ++k) s += S.phi(i, k) * S.eta(k);
    res = abs_max(res, abs(s));
  }
  rep.add("Eq2.2", res);

  // g(phi X, phi Y) = g(X,Y) - eta(X) eta(Y); g(X, zeta) = eta(X)
  res = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Rational s = 0;
      for (std::size_t k = 0; k < n; ++k) s += S.phi(i, k) * S.phi(j, k);
      Rational want = (i == j ? Rational(1) : Rational(0)) - S.eta(i) * S.eta(j);
      res = abs_max(res, abs(s - want));
    }
    res = abs_max(res, abs(S.zeta(i) - S.eta(i)));
  }
  rep.add("Eq2.3", res);

  // g(phi X, Y) = -g(X, phi Y)  <=>  phi antisymmetric as a matrix
  res = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      res = abs_max(res, abs(S.phi(i, j) + S.phi(j, i)));
  rep.add("Eq2.4", res);

  // Contact condition: some (alpha, pairing) must satisfy it on every
  // index pair. dEta(e_i,e_j) = -alpha eta([e_i,e_j]) for constant data.
  Rational best = -1;
  std::string note = "no (alpha, pairing) satisfies the contact condition";
  for (int pairing = 0; pairing < 2; ++pairing) {
    for (int half = 0; half < 2; ++half) {
      Rational alpha = half ? Rational(1, 2) : Rational(1);
      Rational worst = 0;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          Rational lhs = pairing == 0 ? S.phi(i, j) : S.phi(j, i);
          Rational br = 0;
          for (std::size_t k = 0; k < n; ++k) br += S.eta(k) * M.c(i, j, k);
          worst = abs_max(worst, abs(lhs + alpha * br));
        }
      if (best < 0 || worst < best) {
        best = worst;
        if (worst == 0)
          note = std::string("alpha=") + to_string(alpha) + ", pairing=" +
                 (pairing == 0 ? "g(phiX,Y)" : "g(X,phiY)");
      }
    }
  }
  rep.add("Eq2.5", best, note);
  return rep;
}

Tensor compute_h(const FrameManifold& M, const Connection& conn,
                 const ContactStructure& S) {
  const std::size_t n = M.dim();
  Tensor h = lie_derivative_tensor(S.phi, S.zeta, M).scaled(Rational(1, 2));
  // nabla_X zeta = -phi X - phi h X must hold exactly.
  const Tensor phi_h = compose(S.phi, h);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      Rational lhs = 0;
      for (std::size_t a = 0; a < n; ++a) lhs += S.zeta(a) * conn.gamma(i, a, k);
      if (lhs + S.phi(i, k) + phi_h(i, k) != 0)
        throw ContactError("Eq2.7 violated: structure is not contact metric");
    }
  return h;
}

NullityFit nullity_fit(const FrameManifold& M, const CurvatureTensor& R,
                       const ContactStructure& S) {
  const std::size_t n = M.dim();
  RMatrix a;
  RVector b;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t l = 0; l < n; ++l) {
        RVector row(2, Rational(0));
        row[0] = S.eta(j) * (i == l ? Rational(1) : Rational(0)) -
                 S.eta(i) * (j == l ? Rational(1) : Rational(0));
        row[1] = S.eta(j) * S.h(i, l) - S.eta(i) * S.h(j, l);
        Rational lhs = 0;
        for (std::size_t w = 0; w < n; ++w) lhs += S.zeta(w) * R.at(i, j, w, l);
        a.push_back(std::move(row));
        b.push_back(lhs);
      }
  AffineSolutionSet sol = solve_linear(a, b);
  NullityFit fit;
  if (!sol.consistent) return fit;
  fit.is_nullity = true;
  fit.k = sol.particular[0];
  fit.mu = sol.particular[1];
  return fit;
}

Report identity_suite_nk(const FrameManifold& M, const Connection& conn,
                         const CurvatureTensor& R, const ContactStructure& S) {
  if (!S.k || !S.mu || *S.mu != 0)
    throw ContactError("identity suite requires a certified N(k) structure");
  const std::size_t n = M.dim();
  const std::size_t m = M.m();
  const Rational k = *S.k;
  const Tensor& h = S.h;
  const Tensor phi_h = compose(S.phi, h);
  Report rep;

  // Eq2.6: h phi + phi h = 0, trace(h) = trace(phi h) = 0, h zeta = 0,
  // plus symmetry of h.
  {
    Tensor anti = compose(h, S.phi) + phi_h;
    Rational res = anti.max_abs();
    res = abs_max(res, abs(trace_op(h)));
    res = abs_max(res, abs(trace_op(phi_h)));
    res = abs_max(res, apply_op(h, S.zeta).max_abs());
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        res = abs_max(res, abs(h(i, j) - h(j, i)));
    rep.add("Eq2.6", res);
  }

  // Eq2.7: nabla_X zeta = -phi X - phi h X.
  {
    Rational res = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t c = 0; c < n; ++c) {
        Rational lhs = 0;
        for (std::size_t w = 0; w < n; ++w) lhs += S.zeta(w) * conn.gamma(i, w, c);
        res = abs_max(res, abs(lhs + S.phi(i, c) + phi_h(i, c)));
      }
    rep.add("Eq2.7", res);
  }

  // Eq2.8: h^2 = (k - 1) phi^2.
  rep.add("Eq2.8",
          compose(h, h) - compose(S.phi, S.phi).scaled(k - 1));

  // Eq2.9: R(X,Y)zeta = k {eta(Y) X - eta(X) Y}.
  {
    Rational res = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t c = 0; c < n; ++c) {
          Rational lhs = 0;
          for (std::size_t w = 0; w < n; ++w) lhs += S.zeta(w) * R.at(i, j, w, c);
          Rational want = k * (S.eta(j) * (i == c ? Rational(1) : Rational(0)) -
                               S.eta(i) * (j == c ? Rational(1) : Rational(0)));
          res = abs_max(res, abs(lhs - want));
        }
    rep.add("Eq2.9", res);
  }

  // Eq2.10: R(zeta,X)Y = k {g(X,Y) zeta - eta(Y) X}.
  {
    Rational res = 0;
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        for (std::size_t c = 0; c < n; ++c) {
          Rational lhs = 0;
          for (std::size_t w = 0; w < n; ++w) lhs += S.zeta(w) * R.at(w, x, y, c);
          Rational want =
              k * ((x == y ? Rational(1) : Rational(0)) * S.zeta(c) -
                   S.eta(y) * (x == c ? Rational(1) : Rational(0)));
          res = abs_max(res, abs(lhs - want));
        }
    rep.add("Eq2.10", res);
  }

  // Eq2.11: (nabla_X eta)Y = g(X + hX, phi Y).
  {
    Tensor d_eta = covariant_derivative(S.eta, conn);
    Rational res = 0;
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y) {
        Rational want = 0;
        for (std::size_t c = 0; c < n; ++c)
          want += ((x == c ? Rational(1) : Rational(0)) + h(x, c)) * S.phi(y, c);
        res = abs_max(res, abs(d_eta(x, y) - want));
      }
    rep.add("Eq2.11", res);
  }

  // Eq2.12: (nabla_X phi)Y = g(X + hX, Y) zeta - eta(Y)(X + hX).
  {
    Tensor d_phi = covariant_derivative(S.phi, conn);
    Rational res = 0;
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        for (std::size_t c = 0; c < n; ++c) {
          Rational want =
              ((x == y ? Rational(1) : Rational(0)) + h(x, y)) * S.zeta(c) -
              S.eta(y) * ((x == c ? Rational(1) : Rational(0)) + h(x, c));
          res = abs_max(res, abs(d_phi(x, y, c) - want));
        }
    rep.add("Eq2.12", res);
  }

  // Eq2.13: (nabla_X phi h)Y = [g(X,hY) - (k-1) g(X, Y - eta(Y)zeta)] zeta
  //         + eta(Y)[hX - (k-1)(X - eta(X)zeta)].
  {
    Tensor d_ph = covariant_derivative(phi_h, conn);
    Rational res = 0;
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        for (std::size_t c = 0; c < n; ++c) {
          Rational gxhy = h(y, x);
          Rational gxy = (x == y ? Rational(1) : Rational(0)) -
                         S.eta(y) * S.zeta(x);
          Rational want = (gxhy - (k - 1) * gxy) * S.zeta(c) +
                          S.eta(y) * (h(x, c) -
                                      (k - 1) * ((x == c ? Rational(1)
                                                         : Rational(0)) -
                                                 S.eta(x) * S.zeta(c)));
          res = abs_max(res, abs(d_ph(x, y, c) - want));
        }
    rep.add("Eq2.13", res);
  }

  // Eq2.14 and Eq2.15: the Ricci closed forms.
  {
    RicciData rd = ricci(R, M);
    Rational res14 = 0, res15 = 0;
    const Rational c1 = Rational(2) * Rational(m - 1);
    const Rational c2 = Rational(2) * (Rational(m) * k - Rational(m) + 1);
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        Rational want = c1 * ((x == y ? Rational(1) : Rational(0)) + h(x, y)) +
                        c2 * S.eta(x) * S.eta(y);
        res14 = abs_max(res14, abs(rd.ric(x, y) - want));
      }
      Rational ric_x_zeta = 0;
      for (std::size_t y = 0; y < n; ++y) ric_x_zeta += rd.ric(x, y) * S.zeta(y);
      res15 = abs_max(res15,
                      abs(ric_x_zeta - Rational(2) * Rational(m) * k * S.eta(x)));
    }
    rep.add("Eq2.14", res14);
    rep.add("Eq2.15", res15);
  }

  return rep;
}

StandardExample build_standard_example(const Rational& delta) {
  const std::size_t n = 3;
  Tensor c(n, 2, 1);
  auto set_bracket = [&c](std::size_t i, std::size_t j, std::size_t k,
                          const Rational& v) {
    c(i, j, k) = v;
    c(j, i, k) = -v;
  };
  set_bracket(0, 1, 2, Rational(1) + delta);
  set_bracket(1, 2, 0, Rational(2));
  set_bracket(2, 0, 1, Rational(1) - delta);

  FrameManifold M(1, std::move(c));
  Connection conn = levi_civita(M);
  CurvatureTensor R = riemann(M, conn);
  RicciData rd = ricci(R, M);

  Tensor phi(n, 1, 1);
  phi(1, 2) = 1;
  phi(2, 1) = -1;
  ContactStructure S(std::move(phi), Tensor::basis_vector(n, 0),
                     Tensor::basis_covector(n, 0));

  Report structure = validate_structure(M, S);
  if (!structure.all_pass())
    throw ContactError("standard example failed structure validation");
  S.h = compute_h(M, conn, S);
  NullityFit fit = nullity_fit(M, R, S);
  if (!fit.is_nk() || fit.k != 1 - delta * delta)
    throw ContactError("standard example failed the nullity self-check");
  S.k = fit.k;
  S.mu = fit.mu;

  return {delta, std::move(M), std::move(conn), std::move(R), std::move(rd),
          std::move(S)};
}

}  // namespace nkgeo
