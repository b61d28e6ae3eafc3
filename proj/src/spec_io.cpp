#include "nkgeo/spec_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace nkgeo {

namespace {

using nlohmann::json;

Rational json_rational(const json& j, const std::string& where) {
  try {
    if (j.is_number_integer()) return Rational(j.get<long long>());
    if (j.is_string()) return parse_rational(j.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw SpecError(where + ": " + e.what());
  }
  throw SpecError(where + ": expected a rational string like \"-3/4\"");
}

Tensor json_vector(const json& j, std::size_t n, const std::string& where) {
  if (!j.is_array() || j.size() != n)
    throw SpecError(where + ": expected an array of " + std::to_string(n) +
                    " rationals");
  Tensor v(n, 0, 1);
  for (std::size_t i = 0; i < n; ++i) v(i) = json_rational(j[i], where);
  return v;
}

}  // namespace

Instance make_instance(FrameManifold M, ContactStructure S,
                       std::optional<SolitonSpec> soliton) {
  JacobiReport jac = jacobi_check(M);
  if (!jac.ok) {
    const auto& t = jac.violations.front();
    throw SpecError("brackets violate the Jacobi identity at triple (" +
                    std::to_string(t[0]) + "," + std::to_string(t[1]) + "," +
                    std::to_string(t[2]) + ")");
  }
  Connection conn = levi_civita(M);
  CurvatureTensor R = riemann(M, conn);
  RicciData rd = ricci(R, M);

  Report structure = validate_structure(M, S);
  bool contact_metric = structure.all_pass();
  if (contact_metric) {
    try {
      S.h = compute_h(M, conn, S);
    } catch (const ContactError&) {
      contact_metric = false;
    }
  }
  NullityFit fit = nullity_fit(M, R, S);
  if (fit.is_nullity) {
    S.k = fit.k;
    S.mu = fit.mu;
  }
  return {std::move(M),  std::move(conn),     std::move(R),
          std::move(rd), std::move(S),        std::move(structure),
          contact_metric, fit, std::move(soliton)};
}

Instance instance_from_standard_example(const Rational& delta,
                                        std::optional<SolitonSpec> soliton) {
  StandardExample ex = build_standard_example(delta);
  return make_instance(std::move(ex.M), std::move(ex.S), std::move(soliton));
}

Instance load_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SpecError("cannot open spec file: " + path);
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw SpecError(std::string("parse error in ") + path + ": " + e.what());
  }

  if (!doc.contains("m") || !doc["m"].is_number_unsigned())
    throw SpecError("spec: \"m\" must be a positive integer");
  const std::size_t m = doc["m"].get<std::size_t>();
  const std::size_t n = 2 * m + 1;
  if (doc.value("metric", std::string("identity")) != "identity")
    throw SpecError("spec: only the identity metric is supported");

  Tensor c(n, 2, 1);
  for (const json& entry : doc.value("brackets", json::array())) {
    const std::size_t i = entry.at("i").get<std::size_t>();
    const std::size_t j = entry.at("j").get<std::size_t>();
    const std::size_t k = entry.at("k").get<std::size_t>();
    if (i < 1 || j < 1 || k < 1 || i > n || j > n || k > n)
      throw SpecError("spec: bracket index out of range (indices are 1-based)");
    if (i >= j) throw SpecError("spec: bracket entries must have i < j");
    Rational v = json_rational(entry.at("c"), "bracket coefficient");
    c(i - 1, j - 1, k - 1) = v;
    c(j - 1, i - 1, k - 1) = -v;
  }
  FrameManifold M(m, std::move(c));

  if (!doc.contains("contact"))
    throw SpecError("spec: missing \"contact\" section");
  const json& cj = doc["contact"];
  Tensor zeta = json_vector(cj.at("zeta"), n, "contact.zeta");
  const json& pj = cj.at("phi");
  if (!pj.is_array() || pj.size() != n)
    throw SpecError("contact.phi: expected a row-major " + std::to_string(n) +
                    "x" + std::to_string(n) + " matrix");
  // Row-major matrix: phi(e_j) = sum_i phi[i][j] e_i.
  Tensor phi(n, 1, 1);
  for (std::size_t r = 0; r < n; ++r) {
    Tensor row = json_vector(pj[r], n, "contact.phi row");
    for (std::size_t col = 0; col < n; ++col) phi(col, r) = row(col);
  }
  Tensor eta = cj.contains("eta")
                   ? [&] {
                       Tensor v = json_vector(cj["eta"], n, "contact.eta");
                       Tensor cov(n, 1, 0);
                       for (std::size_t i = 0; i < n; ++i) cov(i) = v(i);
                       return cov;
                     }()
                   : [&] {
                       // metric dual of zeta (identity metric)
                       Tensor cov(n, 1, 0);
                       for (std::size_t i = 0; i < n; ++i) cov(i) = zeta(i);
                       return cov;
                     }();
  ContactStructure S(std::move(phi), std::move(zeta), std::move(eta));

  std::optional<SolitonSpec> soliton;
  if (doc.contains("soliton")) {
    const json& sj = doc["soliton"];
    SolitonSpec spec;
    std::optional<SolitonKind> kind =
        parse_soliton_kind(sj.value("kind", "star-conformal-einstein"));
    if (!kind) throw SpecError("soliton.kind: unknown kind");
    spec.kind = *kind;
    if (sj.contains("V") && sj["V"] != "unknown")
      spec.potential = json_vector(sj["V"], n, "soliton.V");
    if (sj.contains("omega") && sj["omega"] != "unknown")
      spec.omega = json_rational(sj["omega"], "soliton.omega");
    if (sj.contains("p")) spec.pressure = json_rational(sj["p"], "soliton.p");
    soliton = std::move(spec);
  }

  return make_instance(std::move(M), std::move(S), std::move(soliton));
}

std::string standard_example_spec_json(const Rational& delta) {
  using nlohmann::json;
  json doc;
  doc["m"] = 1;
  doc["metric"] = "identity";
  doc["brackets"] = json::array({
      {{"i", 1}, {"j", 2}, {"k", 3}, {"c", to_string(Rational(1) + delta)}},
      {{"i", 2}, {"j", 3}, {"k", 1}, {"c", "2"}},
      {{"i", 1}, {"j", 3}, {"k", 2}, {"c", to_string(-(Rational(1) - delta))}},
  });
  doc["contact"] = {
      {"zeta", {"1", "0", "0"}},
      {"phi", {{"0", "0", "0"}, {"0", "0", "-1"}, {"0", "1", "0"}}},
  };
  doc["soliton"] = {
      {"kind", "star-conformal-einstein"},
      {"V", "unknown"},
      {"omega", "unknown"},
      {"p", "0"},
  };
  return doc.dump(2) + "\n";
}

}  // namespace nkgeo
