#ifndef EDGECASCADE_LINSOLVE_HPP
#define EDGECASCADE_LINSOLVE_HPP

#include <vector>

#include "edgecascade/ratfunc.hpp"

namespace edgecascade {

using PolyMatrix = std::vector<std::vector<ParamPoly>>;
using PolyVector = std::vector<ParamPoly>;

// Outcome of an exact solve.  When `consistent`, matrix * particular == rhs
// holds identically in the parameters, and every nullspace vector is
// annihilated by the matrix.  Free variables of the particular solution are
// pinned to zero, one nullspace vector per free column in column order.
struct LinearSolution {
    std::vector<RationalFn> particular;
    std::vector<std::vector<RationalFn>> nullspace;
    bool consistent = true;
    int certificate_row = -1; // row witnessing inconsistency
    std::vector<int> free_columns;
};

// Fraction-free Gaussian elimination (Bareiss) over the rational-function
// field in the formal parameters.  Entries must be params-only polynomials.
// Pivoting is deterministic: columns left to right, first unused row with a
// nonzero entry.
LinearSolution solve_exact(const PolyMatrix& matrix, const PolyVector& rhs);

// Convenience overload for purely rational systems.
LinearSolution solve_exact_rational(const std::vector<std::vector<Rational>>& matrix,
                                    const std::vector<Rational>& rhs);

} // namespace edgecascade

#endif
