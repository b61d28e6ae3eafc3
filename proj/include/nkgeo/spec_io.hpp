#ifndef NKGEO_SPEC_IO_HPP
#define NKGEO_SPEC_IO_HPP

#include <optional>
#include <stdexcept>
#include <string>

#include "nkgeo/contact.hpp"
#include "nkgeo/soliton.hpp"

namespace nkgeo {

class SpecError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// One fully loaded instance: frame geometry, contact data with derived
/// quantities, validation results and the optional soliton section.
struct Instance {
  FrameManifold M;
  Connection conn;
  CurvatureTensor R;
  RicciData ric;
  ContactStructure S;
  Report structure_report;  // validate_structure output from load time
  bool contact_metric;      // Eq2.5 holds and h satisfies Eq2.7
  NullityFit fit;
  std::optional<SolitonSpec> soliton;
};

/// Derives connection, curvature, h and the nullity fit from raw data.
/// Throws SpecError when the brackets violate the Jacobi identity (the
/// message names the violating triple).
Instance make_instance(FrameManifold M, ContactStructure S,
                       std::optional<SolitonSpec> soliton);

Instance instance_from_standard_example(const Rational& delta,
                                        std::optional<SolitonSpec> soliton);

/// Loads the JSON manifold spec file. Throws SpecError with a
/// position-annotated message on parse errors and named diagnostics on
/// validation failures.
Instance load_spec(const std::string& path);

/// Serializes the standard delta-family instance (with a default
/// *-conformal Einstein soliton section, V and Omega unknown) to the
/// JSON spec format.
std::string standard_example_spec_json(const Rational& delta);

}  // namespace nkgeo

#endif
