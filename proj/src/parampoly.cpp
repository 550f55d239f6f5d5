#include "edgecascade/parampoly.hpp"

#include <sstream>

namespace edgecascade {

const char* param_name(Param p) {
    switch (p) {
        case Param::A: return "A";
        case Param::T: return "T";
        case Param::AT: return "At";
    }
    return "?";
}

const char* var_name(Var v) {
    switch (v) {
        case Var::NONE: return "-";
        case Var::Y: return "y";
        case Var::GAMMA: return "g";
        case Var::U: return "u";
        case Var::X: return "x";
    }
    return "?";
}

std::string ParamMono::str() const {
    if (is_one()) return "1";
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < kNumParams; ++i) {
        if (e[i] == 0) continue;
        if (!first) os << "*";
        os << param_name(static_cast<Param>(i));
        if (e[i] > 1) os << "^" << e[i];
        first = false;
    }
    return os.str();
}

ParamPoly ParamPoly::constant(const Rational& c, Var v, ParamMask params) {
    ParamPoly p(v, params);
    p.add_term(c, 0);
    return p;
}

ParamPoly ParamPoly::variable(Var v, int exp, ParamMask params) {
    ParamPoly p(v, params);
    p.add_term(1, exp);
    return p;
}

ParamPoly ParamPoly::parameter(Param p, Var v) {
    ParamPoly q(v, mask_of(p));
    ParamMono m;
    m.e[static_cast<int>(p)] = 1;
    q.add_term(1, 0, m);
    return q;
}

ParamPoly ParamPoly::term(const Rational& c, Var v, int ve, ParamMono mono) {
    ParamMask m = 0;
    for (int i = 0; i < kNumParams; ++i)
        if (mono.e[i] > 0) m |= 1u << i;
    ParamPoly p(v, m);
    p.add_term(c, ve, mono);
    return p;
}

bool ParamPoly::is_constant() const {
    if (terms_.empty()) return true;
    return terms_.size() == 1 && terms_.begin()->first.var_exp == 0 &&
           terms_.begin()->first.mono.is_one();
}

int ParamPoly::degree() const {
    int d = -1;
    for (const auto& [k, c] : terms_) d = std::max(d, k.var_exp);
    return d;
}

int ParamPoly::low_degree() const {
    if (terms_.empty()) return 0;
    int d = terms_.begin()->first.var_exp;
    for (const auto& [k, c] : terms_) d = std::min(d, k.var_exp);
    return d;
}

int ParamPoly::param_degree(Param p) const {
    int d = 0;
    for (const auto& [k, c] : terms_) d = std::max(d, k.mono.e[static_cast<int>(p)]);
    return d;
}

void ParamPoly::add_term(const Rational& c, int var_exp, ParamMono mono) {
    if (c == 0) return;
    if (var_exp < 0) throw Error("ParamPoly: negative variable exponent");
    for (int i = 0; i < kNumParams; ++i) {
        if (mono.e[i] > 0) params_ |= 1u << i;
        if (mono.e[i] > kParamDegreeGuard)
            throw DegreeLimitError("parameter degree guard exceeded for " +
                                   std::string(param_name(static_cast<Param>(i))));
    }
    Key key{var_exp, mono};
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(key, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

void ParamPoly::check_same_var(const ParamPoly& o) const {
    if (var_ == o.var_ || is_zero() || o.is_zero()) return;
    if (var_ == Var::NONE || o.var_ == Var::NONE) return; // params-only promotes freely
    throw VariableMismatchError(std::string("variable mismatch: ") + var_name(var_) +
                                " vs " + var_name(o.var_));
}

ParamPoly ParamPoly::operator-() const {
    ParamPoly r(var_, params_);
    for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
    return r;
}

ParamPoly ParamPoly::operator+(const ParamPoly& o) const {
    check_same_var(o);
    ParamPoly r(var_ == Var::NONE ? o.var_ : var_, params_ | o.params_);
    r.terms_ = terms_;
    for (const auto& [k, c] : o.terms_) {
        auto it = r.terms_.find(k);
        if (it == r.terms_.end()) {
            r.terms_.emplace(k, c);
        } else {
            it->second += c;
            if (it->second == 0) r.terms_.erase(it);
        }
    }
    return r;
}

ParamPoly ParamPoly::operator-(const ParamPoly& o) const { return *this + (-o); }

ParamPoly ParamPoly::operator*(const ParamPoly& o) const {
    check_same_var(o);
    ParamPoly r(var_ == Var::NONE ? o.var_ : var_, params_ | o.params_);
    for (const auto& [ka, ca] : terms_)
        for (const auto& [kb, cb] : o.terms_)
            r.add_term(ca * cb, ka.var_exp + kb.var_exp, ka.mono * kb.mono);
    r.enforce_guards();
    return r;
}

ParamPoly ParamPoly::operator*(const Rational& c) const {
    if (c == 0) return ParamPoly(var_, params_);
    ParamPoly r(var_, params_);
    for (const auto& [k, t] : terms_) r.terms_.emplace(k, t * c);
    return r;
}

bool ParamPoly::operator==(const ParamPoly& o) const {
    if (is_zero() && o.is_zero()) return true;
    if (var_ != o.var_ && var_ != Var::NONE && o.var_ != Var::NONE) return false;
    return terms_ == o.terms_;
}

ParamPoly ParamPoly::add_strict(const ParamPoly& o) const {
    if (params_ != o.params_)
        throw ParamMismatchError("parameter sets differ and promotion is disabled");
    return *this + o;
}

ParamPoly ParamPoly::mul_strict(const ParamPoly& o) const {
    if (params_ != o.params_)
        throw ParamMismatchError("parameter sets differ and promotion is disabled");
    return *this * o;
}

void ParamPoly::enforce_guards() const {
    for (const auto& [k, c] : terms_)
        for (int i = 0; i < kNumParams; ++i)
            if (k.mono.e[i] > kParamDegreeGuard)
                throw DegreeLimitError("parameter degree guard exceeded for " +
                                       std::string(param_name(static_cast<Param>(i))));
}

ParamPoly ParamPoly::derivative() const {
    ParamPoly r(var_, params_);
    for (const auto& [k, c] : terms_) {
        if (k.var_exp == 0) continue;
        r.add_term(c * k.var_exp, k.var_exp - 1, k.mono);
    }
    return r;
}

ParamPoly ParamPoly::evaluate(const Rational& point) const {
    ParamPoly r(Var::NONE, params_);
    for (const auto& [k, c] : terms_) {
        Rational pw = 1;
        for (int i = 0; i < k.var_exp; ++i) pw *= point;
        r.add_term(c * pw, 0, k.mono);
    }
    return r;
}

Rational ParamPoly::evaluate_rational(const Rational& point) const {
    ParamPoly v = evaluate(point);
    Rational out = 0;
    for (const auto& [k, c] : v.terms_) {
        if (!k.mono.is_one())
            throw ParamMismatchError("evaluate_rational on polynomial with formal parameters");
        out += c;
    }
    return out;
}

ParamPoly ParamPoly::coeff_of(int var_exp) const {
    ParamPoly r(Var::NONE, params_);
    for (const auto& [k, c] : terms_)
        if (k.var_exp == var_exp) r.add_term(c, 0, k.mono);
    return r;
}

Rational ParamPoly::coeff_of(int var_exp, const ParamMono& mono) const {
    auto it = terms_.find(Key{var_exp, mono});
    return it == terms_.end() ? Rational(0) : it->second;
}

ParamPoly ParamPoly::scale_var(const Rational& c) const {
    ParamPoly r(var_, params_);
    for (const auto& [k, t] : terms_) {
        Rational pw = 1;
        for (int i = 0; i < k.var_exp; ++i) pw *= c;
        r.add_term(t * pw, k.var_exp, k.mono);
    }
    return r;
}

ParamPoly ParamPoly::shift_var(const Rational& c) const {
    ParamPoly r(var_, params_);
    for (const auto& [k, t] : terms_) {
        // (v + c)^n expanded by binomials
        Rational binom = 1, cpw = 1;
        for (int j = k.var_exp; j >= 0; --j) {
            r.add_term(t * binom * cpw, j, k.mono);
            binom = binom * j / (k.var_exp - j + 1);
            cpw *= c;
        }
    }
    return r;
}

bool ParamPoly::divisible_by_var_power(int k) const {
    for (const auto& [key, c] : terms_)
        if (key.var_exp < k) return false;
    return true;
}

ParamPoly ParamPoly::divide_var_power(int k) const {
    ParamPoly r(var_, params_);
    for (const auto& [key, c] : terms_) {
        if (key.var_exp < k)
            throw EulerCompatError("coefficient not divisible by " +
                                   std::string(var_name(var_)) + "^" + std::to_string(k));
        r.add_term(c, key.var_exp - k, key.mono);
    }
    return r;
}

ParamPoly ParamPoly::substitute_param(Param p, const ParamPoly& value) const {
    const int pi = static_cast<int>(p);
    ParamPoly r(var_, params_ & ~mask_of(p));
    for (const auto& [k, c] : terms_) {
        ParamMono rest = k.mono;
        int e = rest.e[pi];
        rest.e[pi] = 0;
        ParamPoly contrib = ParamPoly::term(c, var_, k.var_exp, rest);
        for (int i = 0; i < e; ++i) contrib = contrib * value.with_var(var_);
        r = r + contrib;
    }
    return r;
}

ParamPoly ParamPoly::bind_param(Param p, const Rational& value) const {
    return substitute_param(p, ParamPoly::constant(value));
}

ParamPoly ParamPoly::with_var(Var v) const {
    if (var_ == v) return *this;
    ParamPoly r(v, params_);
    r.terms_ = terms_;
    if (var_ != Var::NONE && v != Var::NONE && !is_zero()) {
        // retagging a genuine variable is only legal for params-only content
        for (const auto& [k, c] : terms_)
            if (k.var_exp != 0)
                throw VariableMismatchError("cannot retag nonconstant polynomial");
    }
    return r;
}

ParamPoly ParamPoly::with_params(ParamMask m) const {
    ParamPoly r(var_, params_ | m);
    r.terms_ = terms_;
    return r;
}

Rational ParamPoly::leading_coeff_rational() const {
    if (is_zero()) return 0;
    int d = degree();
    ParamPoly lead = coeff_of(d);
    Rational out = 0;
    for (const auto& [k, c] : lead.terms()) {
        if (!k.mono.is_one())
            throw ParamMismatchError("leading coefficient carries formal parameters");
        out += c;
    }
    return out;
}

Rational ParamPoly::content() const {
    Rational g = 0;
    for (const auto& [k, c] : terms_) {
        Rational a = abs(c);
        if (g == 0) {
            g = a;
        } else {
            mpz_class num, den;
            mpz_gcd(num.get_mpz_t(), g.get_num().get_mpz_t(), a.get_num().get_mpz_t());
            mpz_lcm(den.get_mpz_t(), g.get_den().get_mpz_t(), a.get_den().get_mpz_t());
            g = Rational(num, den);
            g.canonicalize();
        }
    }
    return g;
}

double ParamPoly::evaluate_double(double point, const std::array<double, kNumParams>& pvals) const {
    double out = 0;
    for (const auto& [k, c] : terms_) {
        double t = rat_double(c);
        for (int i = 0; i < k.var_exp; ++i) t *= point;
        for (int i = 0; i < kNumParams; ++i)
            for (int j = 0; j < k.mono.e[i]; ++j) t *= pvals[i];
        out += t;
    }
    return out;
}

std::string ParamPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    // print high degree first for readability
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [k, c] = *it;
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        Rational a = abs(c);
        bool need_coeff = (a != 1) || (k.var_exp == 0 && k.mono.is_one());
        if (need_coeff) os << rat_str(a);
        if (k.var_exp > 0) {
            if (need_coeff) os << "*";
            os << var_name(var_);
            if (k.var_exp > 1) os << "^" << k.var_exp;
        }
        if (!k.mono.is_one()) {
            if (need_coeff || k.var_exp > 0) os << "*";
            os << k.mono.str();
        }
        first = false;
    }
    return os.str();
}

std::vector<ParamMono> param_monomials_up_to(ParamMask mask, int max_total_degree) {
    std::vector<ParamMono> out;
    int la = (mask & mask_of(Param::A)) ? max_total_degree : 0;
    int lt = (mask & mask_of(Param::T)) ? max_total_degree : 0;
    int lat = (mask & mask_of(Param::AT)) ? max_total_degree : 0;
    for (int ea = 0; ea <= la; ++ea)
        for (int et = 0; et <= lt; ++et)
            for (int eat = 0; eat <= lat; ++eat) {
                if (ea + et + eat > max_total_degree) continue;
                ParamMono m;
                m.e = {ea, et, eat};
                out.push_back(m);
            }
    return out;
}

} // namespace edgecascade
