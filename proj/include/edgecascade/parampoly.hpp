#ifndef EDGECASCADE_PARAMPOLY_HPP
#define EDGECASCADE_PARAMPOLY_HPP

#include <map>
#include <array>
#include <string>
#include <vector>
#include <optional>
#include <initializer_list>

#include "edgecascade/rational.hpp"
#include "edgecascade/errors.hpp"

namespace edgecascade {

// Formal parameters of the coefficient ring.  A stands for a^2, T for the
// soft edge aspect parameter tau, AT for the hard edge combination a^2 - 1.
enum class Param : int { A = 0, T = 1, AT = 2 };
constexpr int kNumParams = 3;

const char* param_name(Param p);

using ParamMask = unsigned; // bit i set <=> Param(i) declared

constexpr ParamMask mask_of(Param p) { return 1u << static_cast<int>(p); }

// Variable of a polynomial.  NONE marks polynomials living purely in the
// parameter ring (matrix entries of exact linear systems).
enum class Var : int { NONE = 0, Y, GAMMA, U, X };

const char* var_name(Var v);

// Exponent vector of a parameter monomial, e.g. A^2*T.
struct ParamMono {
    std::array<int, kNumParams> e{0, 0, 0};

    bool operator<(const ParamMono& o) const { return e < o.e; }
    bool operator==(const ParamMono& o) const { return e == o.e; }
    bool is_one() const { return e[0] == 0 && e[1] == 0 && e[2] == 0; }
    int degree() const { return e[0] + e[1] + e[2]; }
    ParamMono operator*(const ParamMono& o) const {
        ParamMono r;
        for (int i = 0; i < kNumParams; ++i) r.e[i] = e[i] + o.e[i];
        return r;
    }
    std::string str() const;
};

// Sparse exact polynomial in one variable over Q[A, T, AT].
// Invariants: no zero coefficients are stored; exponents are >= 0;
// every parameter with a nonzero exponent is declared in `params`.
class ParamPoly {
public:
    struct Key {
        int var_exp = 0;
        ParamMono mono;
        bool operator<(const Key& o) const {
            if (var_exp != o.var_exp) return var_exp < o.var_exp;
            return mono < o.mono;
        }
        bool operator==(const Key& o) const {
            return var_exp == o.var_exp && mono == o.mono;
        }
    };
    using TermMap = std::map<Key, Rational>;

    ParamPoly() : var_(Var::NONE), params_(0) {}
    explicit ParamPoly(Var v, ParamMask params = 0) : var_(v), params_(params) {}

    static ParamPoly constant(const Rational& c, Var v = Var::NONE, ParamMask params = 0);
    static ParamPoly variable(Var v, int exp = 1, ParamMask params = 0);
    static ParamPoly parameter(Param p, Var v = Var::NONE);
    // c * var^ve * mono
    static ParamPoly term(const Rational& c, Var v, int ve, ParamMono mono = {});

    Var var() const { return var_; }
    ParamMask params() const { return params_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    int degree() const;           // degree in the variable (-1 for zero)
    int low_degree() const;       // least var exponent present (0 for zero)
    int param_degree(Param p) const;

    void add_term(const Rational& c, int var_exp, ParamMono mono = {});

    ParamPoly operator-() const;
    ParamPoly operator+(const ParamPoly& o) const;
    ParamPoly operator-(const ParamPoly& o) const;
    ParamPoly operator*(const ParamPoly& o) const;
    ParamPoly operator*(const Rational& c) const;
    bool operator==(const ParamPoly& o) const;
    bool operator!=(const ParamPoly& o) const { return !(*this == o); }

    // Strict variants throw ParamMismatchError when the declared parameter
    // sets differ instead of silently promoting to the union.
    ParamPoly add_strict(const ParamPoly& o) const;
    ParamPoly mul_strict(const ParamPoly& o) const;

    ParamPoly derivative() const;                    // d/d(var)
    ParamPoly evaluate(const Rational& point) const; // substitute variable, params stay formal
    Rational evaluate_rational(const Rational& point) const; // requires no params

    // Coefficient of var^k as a params-only polynomial.
    ParamPoly coeff_of(int var_exp) const;
    // Coefficient of (var^k, mono) as a rational.
    Rational coeff_of(int var_exp, const ParamMono& mono) const;

    // var -> c * var  and  var -> var + c
    ParamPoly scale_var(const Rational& c) const;
    ParamPoly shift_var(const Rational& c) const;
    // Divide by var^k; throws unless every term has var exponent >= k.
    ParamPoly divide_var_power(int k) const;
    bool divisible_by_var_power(int k) const;

    // Substitute a parameter by a params-only polynomial (e.g. AT -> A - 1).
    ParamPoly substitute_param(Param p, const ParamPoly& value) const;
    // Substitute a parameter by an exact rational.
    ParamPoly bind_param(Param p, const Rational& value) const;

    ParamPoly with_var(Var v) const;      // retag variable (NONE-poly promotion)
    ParamPoly with_params(ParamMask m) const;

    Rational leading_coeff_rational() const; // requires no params
    Rational content() const;                // gcd of |coefficients| (0 for zero)

    double evaluate_double(double point, const std::array<double, kNumParams>& pvals) const;

    std::string str() const;

private:
    void check_same_var(const ParamPoly& o) const;
    void enforce_guards() const;

    Var var_;
    ParamMask params_;
    TermMap terms_;
};

inline ParamPoly operator*(const Rational& c, const ParamPoly& p) { return p * c; }

// Maximum tracked degree per formal parameter; everything in scope sits far
// below this, so hitting it signals a runaway computation.
constexpr int kParamDegreeGuard = 16;

std::vector<ParamMono> param_monomials_up_to(ParamMask mask, int max_total_degree);

} // namespace edgecascade

#endif
