#include "edgecascade/ratfunc.hpp"

namespace edgecascade {

namespace {

// View a params-only polynomial as univariate in parameter `p` with
// params-only coefficients.
std::map<int, ParamPoly> as_univariate(const ParamPoly& f, Param p) {
    const int pi = static_cast<int>(p);
    std::map<int, ParamPoly> out;
    for (const auto& [k, c] : f.terms()) {
        ParamMono rest = k.mono;
        int e = rest.e[pi];
        rest.e[pi] = 0;
        auto it = out.find(e);
        if (it == out.end()) it = out.emplace(e, ParamPoly(Var::NONE)).first;
        it->second.add_term(c, 0, rest);
    }
    for (auto it = out.begin(); it != out.end();)
        it = it->second.is_zero() ? out.erase(it) : std::next(it);
    return out;
}

ParamPoly from_univariate(const std::map<int, ParamPoly>& coeffs, Param p) {
    const int pi = static_cast<int>(p);
    ParamPoly out(Var::NONE);
    for (const auto& [e, c] : coeffs)
        for (const auto& [k, q] : c.terms()) {
            ParamMono m = k.mono;
            m.e[pi] += e;
            out.add_term(q, 0, m);
        }
    return out;
}

std::optional<Param> highest_param(const ParamPoly& f) {
    for (int i = kNumParams - 1; i >= 0; --i)
        if (f.param_degree(static_cast<Param>(i)) > 0) return static_cast<Param>(i);
    return std::nullopt;
}

// Pseudo-remainder of univariate views: rem of lc(g)^(deg f - deg g + 1) * f by g.
std::map<int, ParamPoly> pseudo_rem(std::map<int, ParamPoly> f,
                                    const std::map<int, ParamPoly>& g, Param p) {
    const int dg = g.rbegin()->first;
    const ParamPoly& lg = g.rbegin()->second;
    auto deg = [](const std::map<int, ParamPoly>& h) {
        return h.empty() ? -1 : h.rbegin()->first;
    };
    while (deg(f) >= dg) {
        int df = deg(f);
        ParamPoly lf = f.rbegin()->second;
        // f <- lg * f - lf * x^(df-dg) * g
        std::map<int, ParamPoly> nf;
        for (const auto& [e, c] : f) nf[e] = c * lg;
        for (const auto& [e, c] : g) {
            auto it = nf.find(e + df - dg);
            if (it == nf.end())
                nf[e + df - dg] = -(c * lf);
            else
                it->second = it->second - c * lf;
        }
        for (auto it = nf.begin(); it != nf.end();)
            it = it->second.is_zero() ? nf.erase(it) : std::next(it);
        f = std::move(nf); // leading term cancels exactly

    }
    return f;
}

ParamPoly content_in(const std::map<int, ParamPoly>& f) {
    ParamPoly g = ParamPoly::constant(0);
    for (const auto& [e, c] : f) g = param_gcd(g, c);
    return g;
}

// canonical sign/scale normalization: primitive, positive leading rational
ParamPoly normalize_primitive(const ParamPoly& f) {
    if (f.is_zero()) return f;
    Rational c = f.content();
    ParamPoly out = f * (Rational(1) / c);
    // leading term under canonical (reverse) order
    const auto& last = std::prev(out.terms().end());
    if (last->second < 0) out = -out;
    return out;
}

} // namespace

ParamPoly param_gcd(const ParamPoly& a, const ParamPoly& b) {
    if (a.is_zero()) return normalize_primitive(b);
    if (b.is_zero()) return normalize_primitive(a);
    auto pa = highest_param(a);
    auto pb = highest_param(b);
    if (!pa && !pb) return ParamPoly::constant(1); // nonzero rationals
    Param p = pa ? *pa : *pb;
    if (pb && static_cast<int>(*pb) > static_cast<int>(p)) p = *pb;

    auto fa = as_univariate(a, p);
    auto fb = as_univariate(b, p);
    ParamPoly ca = content_in(fa), cb = content_in(fb);
    ParamPoly cont = param_gcd(ca, cb);
    // make both primitive in p
    for (auto& [e, c] : fa) c = param_divide_exact(c, ca);
    for (auto& [e, c] : fb) c = param_divide_exact(c, cb);

    // primitive Euclidean loop
    auto deg = [](const std::map<int, ParamPoly>& h) {
        return h.empty() ? -1 : h.rbegin()->first;
    };
    if (deg(fa) < deg(fb)) std::swap(fa, fb);
    while (!fb.empty()) {
        auto r = pseudo_rem(fa, fb, p);
        fa = std::move(fb);
        fb = std::move(r);
        if (!fb.empty()) {
            ParamPoly c = content_in(fb);
            for (auto& [e, q] : fb) q = param_divide_exact(q, c);
        }
    }
    ParamPoly g = from_univariate(fa, p);
    return normalize_primitive(cont * g);
}

ParamPoly param_divide_exact(const ParamPoly& num, const ParamPoly& den) {
    if (den.is_zero()) throw Error("division by zero polynomial");
    if (num.is_zero()) return num;
    if (den.is_constant()) {
        Rational c = den.coeff_of(0, ParamMono{});
        return num * (Rational(1) / c);
    }
    Param p = *highest_param(den);
    auto fn = as_univariate(num, p);
    auto fd = as_univariate(den, p);
    const int dd = fd.rbegin()->first;
    const ParamPoly& ld = fd.rbegin()->second;
    std::map<int, ParamPoly> q;
    while (!fn.empty() && fn.rbegin()->first >= dd) {
        int dn = fn.rbegin()->first;
        ParamPoly qc = param_divide_exact(fn.rbegin()->second, ld); // recursive exactness
        q[dn - dd] = qc;
        for (const auto& [e, c] : fd) {
            auto it = fn.find(e + dn - dd);
            if (it == fn.end())
                fn[e + dn - dd] = -(c * qc);
            else
                it->second = it->second - c * qc;
        }
        for (auto it = fn.begin(); it != fn.end();)
            it = it->second.is_zero() ? fn.erase(it) : std::next(it);
    }
    if (!fn.empty()) throw Error("inexact polynomial division");
    return from_univariate(q, p);
}

RationalFn::RationalFn(ParamPoly num, ParamPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw Error("RationalFn with zero denominator");
    reduce();
}

void RationalFn::reduce() {
    if (num_.is_zero()) {
        den_ = ParamPoly::constant(1);
        return;
    }
    ParamPoly g = param_gcd(num_, den_);
    if (!g.is_constant()) {
        num_ = param_divide_exact(num_, g);
        den_ = param_divide_exact(den_, g);
    }
    // scale so den is primitive with positive leading rational
    Rational c = den_.content();
    const auto& last = std::prev(den_.terms().end());
    if (last->second < 0) c = -c;
    num_ = num_ * (Rational(1) / c);
    den_ = den_ * (Rational(1) / c);
}

ParamPoly RationalFn::as_polynomial() const {
    if (!is_polynomial()) throw Error("rational function is not a polynomial: " + str());
    Rational c = den_.coeff_of(0, ParamMono{});
    return num_ * (Rational(1) / c);
}

RationalFn RationalFn::operator+(const RationalFn& o) const {
    return RationalFn(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}
RationalFn RationalFn::operator-(const RationalFn& o) const {
    return RationalFn(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}
RationalFn RationalFn::operator*(const RationalFn& o) const {
    return RationalFn(num_ * o.num_, den_ * o.den_);
}
RationalFn RationalFn::operator/(const RationalFn& o) const {
    if (o.is_zero()) throw Error("division by zero rational function");
    return RationalFn(num_ * o.den_, den_ * o.num_);
}
RationalFn RationalFn::operator-() const { return RationalFn(-num_, den_); }

bool RationalFn::operator==(const RationalFn& o) const {
    return (num_ * o.den_ - o.num_ * den_).is_zero();
}

std::string RationalFn::str() const {
    if (is_polynomial()) return as_polynomial().str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

} // namespace edgecascade
