#ifndef EDGECASCADE_RATFUNC_HPP
#define EDGECASCADE_RATFUNC_HPP

#include "edgecascade/parampoly.hpp"

namespace edgecascade {

// gcd of two polynomials in the parameter ring Q[A, T, AT] (variable ignored,
// both operands must be params-only). Returns a primitive polynomial with
// positive leading rational under the canonical monomial order.
ParamPoly param_gcd(const ParamPoly& a, const ParamPoly& b);

// Exact division; throws Error if the division leaves a remainder.
ParamPoly param_divide_exact(const ParamPoly& num, const ParamPoly& den);

// Reduced fraction of params-only polynomials.  Canonical form: gcd(num, den)
// is a unit, den is primitive with positive leading coefficient.
class RationalFn {
public:
    RationalFn() : num_(ParamPoly::constant(0)), den_(ParamPoly::constant(1)) {}
    RationalFn(const Rational& c) : num_(ParamPoly::constant(c)), den_(ParamPoly::constant(1)) {}
    RationalFn(ParamPoly num, ParamPoly den);
    static RationalFn of(const ParamPoly& p) { return RationalFn(p, ParamPoly::constant(1)); }

    const ParamPoly& num() const { return num_; }
    const ParamPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_constant(); }
    // Requires den constant; returns num/den as a polynomial.
    ParamPoly as_polynomial() const;

    RationalFn operator+(const RationalFn& o) const;
    RationalFn operator-(const RationalFn& o) const;
    RationalFn operator*(const RationalFn& o) const;
    RationalFn operator/(const RationalFn& o) const;
    RationalFn operator-() const;
    bool operator==(const RationalFn& o) const;
    bool operator!=(const RationalFn& o) const { return !(*this == o); }

    std::string str() const;

private:
    void reduce();
    ParamPoly num_, den_;
};

} // namespace edgecascade

#endif
