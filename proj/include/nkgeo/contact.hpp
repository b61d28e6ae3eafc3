#ifndef NKGEO_CONTACT_HPP
#define NKGEO_CONTACT_HPP

#include <optional>
#include <stdexcept>

#include "nkgeo/frame.hpp"
#include "nkgeo/report.hpp"

namespace nkgeo {

/// Raised when contact-metric axioms fail during construction (e.g. the
/// computed h tensor does not satisfy nabla_X zeta = -phi X - phi h X).
class ContactError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Almost contact metric data (phi, zeta, eta) plus the derived h tensor
/// and nullity constants once certified. Operator tensors use the
/// convention A(e_i) = sum_k A(i;k) e_k.
struct ContactStructure {
  Tensor phi;   // (1,1)
  Tensor zeta;  // (0,1)
  Tensor eta;   // (1,0)
  Tensor h;     // (1,1); zero until compute_h fills it in
  std::optional<Rational> k;   // nullity constant, when certified
  std::optional<Rational> mu;  // companion constant; 0 certifies N(k)

  ContactStructure(Tensor phi_, Tensor zeta_, Tensor eta_)
      : phi(std::move(phi_)),
        zeta(std::move(zeta_)),
        eta(std::move(eta_)),
        h(phi.dim(), 1, 1) {}
};

/// Checks the almost contact metric axioms and the contact condition.
/// The exterior-derivative normalization dEta(X,Y) =
/// alpha (X eta(Y) - Y eta(X) - eta([X,Y])) carries an ambient factor
/// alpha in {1, 1/2} and a pairing choice g(phi X, Y) vs g(X, phi Y);
/// both are auto-detected and recorded in the Eq2.5 note.
Report validate_structure(const FrameManifold& M, const ContactStructure& S);

/// h = 1/2 pounds_zeta phi from the bracket definition. Throws
/// ContactError if nabla_X zeta = -phi X - phi h X fails (the structure
/// is then not contact metric).
Tensor compute_h(const FrameManifold& M, const Connection& conn,
                 const ContactStructure& S);

struct NullityFit {
  bool is_nullity = false;  // some (k, mu) fits every curvature component
  Rational k = 0;
  Rational mu = 0;
  bool is_nk() const { return is_nullity && mu == 0; }
};

/// Exact linear solve for (k, mu) from R(e_i,e_j)zeta over all pairs,
/// with consistency verified on every component. Undetermined unknowns
/// (flat instances) are canonically 0.
NullityFit nullity_fit(const FrameManifold& M, const CurvatureTensor& R,
                       const ContactStructure& S);

/// Residual checks of the structure identities that need h and k:
/// Eq2.6 through Eq2.15. Requires S.h computed and S.k certified.
Report identity_suite_nk(const FrameManifold& M, const Connection& conn,
                         const CurvatureTensor& R, const ContactStructure& S);

/// The delta-family instance: dim 3, identity metric, brackets
/// [e1,e2] = (1+delta) e3, [e2,e3] = 2 e1, [e3,e1] = (1-delta) e2,
/// zeta = e1, phi: e2 -> e3, e3 -> -e2. Self-validated on construction:
/// every structure axiom must pass and the nullity fit must return
/// k = 1 - delta^2, mu = 0.
struct StandardExample {
  Rational delta;
  FrameManifold M;
  Connection conn;
  CurvatureTensor R;
  RicciData ric;
  ContactStructure S;
};

StandardExample build_standard_example(const Rational& delta);

}  // namespace nkgeo

#endif
