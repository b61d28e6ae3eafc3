#ifndef NKGEO_LINALG_HPP
#define NKGEO_LINALG_HPP

#include <optional>
#include <vector>

#include "nkgeo/rational.hpp"

namespace nkgeo {

using RVector = std::vector<Rational>;
using RMatrix = std::vector<RVector>;

/// Solution set of an exact linear system A x = b: either empty
/// (inconsistent) or the affine space particular + span(basis).
struct AffineSolutionSet {
  bool consistent = false;
  RVector particular;            // one solution, free variables set to 0
  std::vector<RVector> basis;    // nullspace basis of A

  bool empty() const { return !consistent; }
  std::size_t freedom() const { return basis.size(); }

  /// True iff the linear functional c.x + d vanishes on every member:
  /// c.particular + d = 0 and c.v = 0 for each basis vector v.
  bool all_satisfy(const RVector& c, const Rational& d) const;
};

/// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(RMatrix& m);

/// Exact nullspace basis of A (vectors of length = column count).
std::vector<RVector> nullspace(const RMatrix& a);

/// Exact solve of A x = b over Q. A is rows x cols, b has one entry per row.
AffineSolutionSet solve_linear(const RMatrix& a, const RVector& b);

}  // namespace nkgeo

#endif
