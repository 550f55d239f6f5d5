#ifndef EDGECASCADE_OPERATORS_HPP
#define EDGECASCADE_OPERATORS_HPP

#include <string>
#include <vector>

#include "edgecascade/basis.hpp"

namespace edgecascade {

// Linear differential operator with polynomial coefficients,
//   sum_k coeff_k(y) d^k/dy^k            (plain form)
// or, after euler_normalize,
//   sum_k coeff_k(y) theta^k,  theta = y d/dy   (euler form).
struct DiffOperator {
    struct Term {
        ParamPoly coeff;
        int order = 0;
    };
    std::vector<Term> terms;
    std::string scale_note;   // free-text provenance of the grading
    bool euler_form = false;  // order means theta power when set

    static DiffOperator identity();
    // term list given as (coeff, order) pairs in plain form
    static DiffOperator plain(std::vector<Term> terms, std::string note = "");

    DiffOperator operator+(const DiffOperator& o) const;
    DiffOperator operator-() const;
    DiffOperator scaled(const Rational& c) const;
    DiffOperator scaled(const ParamPoly& p) const; // left-multiply by polynomial
    bool operator==(const DiffOperator& o) const;

    int max_order() const;
    // collected canonical coefficient of d^k (or theta^k)
    ParamPoly coeff_of_order(int k) const;
    DiffOperator collected() const; // one term per order, zero terms dropped

    DiffOperator substitute_param(Param p, const ParamPoly& value) const;

    std::string str() const;
};

// Operator composition in plain form: (a . b) f = a(b(f)).
DiffOperator compose(const DiffOperator& a, const DiffOperator& b);

// Every term of derivative order k must have coefficient divisible by y^k.
bool euler_compatible(const DiffOperator& op);
void require_euler_compatible(const DiffOperator& op);

// Rewrites a plain Euler-compatible operator as a polynomial in theta and
// back. Round-trips exactly.
DiffOperator euler_normalize(const DiffOperator& op);
DiffOperator euler_to_plain(const DiffOperator& op);

// Apply in the element's own derivation: PLAIN families receive the operator
// literally; EULER families route through y^k d^k = theta (theta-1) ... and
// theta = D_y - 1.
ModuleElement apply_operator(const DiffOperator& op, const ModuleElement& elem);

// Plain operator acting on a bare polynomial in the same variable (test
// oracle for euler_normalize and grading checks).
ParamPoly apply_to_poly(const DiffOperator& op, const ParamPoly& p);

} // namespace edgecascade

#endif
