#include "edgecascade/operators.hpp"

#include <map>
#include <sstream>

namespace edgecascade {

DiffOperator DiffOperator::identity() {
    return plain({{ParamPoly::constant(1, Var::Y), 0}});
}

DiffOperator DiffOperator::plain(std::vector<Term> terms, std::string note) {
    DiffOperator op;
    op.terms = std::move(terms);
    op.scale_note = std::move(note);
    for (auto& t : op.terms) {
        if (t.order < 0) throw Error("negative derivative order");
        t.coeff = t.coeff.with_var(Var::Y);
    }
    return op;
}

DiffOperator DiffOperator::operator+(const DiffOperator& o) const {
    if (euler_form != o.euler_form) throw Error("mixing plain and euler operator forms");
    DiffOperator r = *this;
    r.terms.insert(r.terms.end(), o.terms.begin(), o.terms.end());
    return r.collected();
}

DiffOperator DiffOperator::operator-() const {
    DiffOperator r = *this;
    for (auto& t : r.terms) t.coeff = -t.coeff;
    return r;
}

DiffOperator DiffOperator::scaled(const Rational& c) const {
    DiffOperator r = *this;
    for (auto& t : r.terms) t.coeff = t.coeff * c;
    return r.collected();
}

DiffOperator DiffOperator::scaled(const ParamPoly& p) const {
    DiffOperator r = *this;
    for (auto& t : r.terms) t.coeff = t.coeff * p.with_var(Var::Y);
    return r.collected();
}

bool DiffOperator::operator==(const DiffOperator& o) const {
    if (euler_form != o.euler_form) return false;
    int n = std::max(max_order(), o.max_order());
    for (int k = 0; k <= n; ++k)
        if (coeff_of_order(k) != o.coeff_of_order(k)) return false;
    return true;
}

int DiffOperator::max_order() const {
    int n = -1;
    for (const auto& t : terms)
        if (!t.coeff.is_zero()) n = std::max(n, t.order);
    return n;
}

ParamPoly DiffOperator::coeff_of_order(int k) const {
    ParamPoly p(Var::Y);
    for (const auto& t : terms)
        if (t.order == k) p = p + t.coeff;
    return p;
}

DiffOperator DiffOperator::collected() const {
    DiffOperator r;
    r.scale_note = scale_note;
    r.euler_form = euler_form;
    for (int k = 0; k <= max_order(); ++k) {
        ParamPoly c = coeff_of_order(k);
        if (!c.is_zero()) r.terms.push_back({c, k});
    }
    return r;
}

DiffOperator DiffOperator::substitute_param(Param p, const ParamPoly& value) const {
    DiffOperator r = *this;
    for (auto& t : r.terms) t.coeff = t.coeff.substitute_param(p, value);
    return r.collected();
}

std::string DiffOperator::str() const {
    std::ostringstream os;
    bool first = true;
    auto c = collected();
    for (auto it = c.terms.rbegin(); it != c.terms.rend(); ++it) {
        if (!first) os << " + ";
        os << "(" << it->coeff.str() << ")";
        if (it->order > 0) {
            os << (euler_form ? "*th" : "*d");
            if (it->order > 1) os << "^" << it->order;
        }
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

DiffOperator compose(const DiffOperator& a, const DiffOperator& b) {
    if (a.euler_form || b.euler_form) throw Error("compose expects plain form");
    // d^i (q f^(j)) = sum_k C(i,k) q^(k) f^(i-k+j)
    DiffOperator r;
    r.scale_note = a.scale_note;
    for (const auto& ta : a.terms) {
        for (const auto& tb : b.terms) {
            ParamPoly q = tb.coeff.with_var(Var::Y);
            Rational binom = 1;
            for (int k = 0; k <= ta.order; ++k) {
                if (!q.is_zero())
                    r.terms.push_back({ta.coeff * q * binom, ta.order - k + tb.order});
                q = q.derivative();
                binom = binom * (ta.order - k) / (k + 1);
            }
        }
    }
    return r.collected();
}

bool euler_compatible(const DiffOperator& op) {
    for (const auto& t : op.terms)
        if (!t.coeff.divisible_by_var_power(t.order)) return false;
    return true;
}

void require_euler_compatible(const DiffOperator& op) {
    for (const auto& t : op.terms)
        if (!t.coeff.divisible_by_var_power(t.order))
            throw EulerCompatError("operator term of order " + std::to_string(t.order) +
                                   " with coefficient " + t.coeff.str() +
                                   " is not divisible by y^" + std::to_string(t.order));
}

namespace {

// Signed Stirling numbers of the first kind: x(x-1)...(x-k+1) = sum s(k,m) x^m.
std::vector<std::vector<Rational>> stirling_first(int n) {
    std::vector<std::vector<Rational>> s(n + 1);
    s[0] = {1};
    for (int k = 1; k <= n; ++k) {
        s[k].assign(k + 1, 0);
        for (int m = 0; m < k; ++m) {
            // multiply by (x - (k-1))
            s[k][m + 1] += s[k - 1][m];
            s[k][m] -= s[k - 1][m] * (k - 1);
        }
    }
    return s;
}

// Stirling numbers of the second kind: theta^m = sum S(m,k) y^k d^k.
std::vector<std::vector<Rational>> stirling_second(int n) {
    std::vector<std::vector<Rational>> S(n + 1);
    S[0] = {1};
    for (int m = 1; m <= n; ++m) {
        S[m].assign(m + 1, 0);
        for (int k = 1; k <= m; ++k)
            S[m][k] = (k < static_cast<int>(S[m - 1].size()) ? S[m - 1][k] * k : Rational(0)) +
                      S[m - 1][k - 1];
    }
    return S;
}

} // namespace

DiffOperator euler_normalize(const DiffOperator& op) {
    if (op.euler_form) return op;
    require_euler_compatible(op);
    int n = std::max(op.max_order(), 0);
    auto s = stirling_first(n);
    DiffOperator r;
    r.scale_note = op.scale_note;
    r.euler_form = true;
    for (const auto& t : op.terms) {
        ParamPoly q = t.coeff.divide_var_power(t.order); // y^k d^k = FF_k(theta)
        for (int m = 0; m <= t.order; ++m)
            if (s[t.order][m] != 0) r.terms.push_back({q * s[t.order][m], m});
    }
    return r.collected();
}

DiffOperator euler_to_plain(const DiffOperator& op) {
    if (!op.euler_form) return op;
    int n = std::max(op.max_order(), 0);
    auto S = stirling_second(n);
    DiffOperator r;
    r.scale_note = op.scale_note;
    for (const auto& t : op.terms)
        for (int k = 0; k <= t.order; ++k)
            if (S[t.order][k] != 0)
                r.terms.push_back(
                    {t.coeff * S[t.order][k] * ParamPoly::variable(Var::Y, k), k});
    return r.collected();
}

ModuleElement apply_operator(const DiffOperator& op, const ModuleElement& elem) {
    ModuleElement out(elem.family());
    if (elem.family().derivation == Derivation::PLAIN) {
        if (op.euler_form) throw Error("euler-form operator on a PLAIN family");
        // cache repeated derivatives
        std::vector<ModuleElement> ders{elem};
        int n = std::max(op.max_order(), 0);
        for (int k = 1; k <= n; ++k) ders.push_back(differentiate(ders.back()));
        for (const auto& t : op.terms)
            out = out + ders[t.order].scaled(t.coeff);
        return out;
    }

    // EULER family: act through theta = D_y - 1.
    DiffOperator eop = op.euler_form ? op : euler_normalize(op);
    auto theta = [](const ModuleElement& f) { return differentiate(f) - f; };
    std::vector<ModuleElement> thetas{elem};
    int n = std::max(eop.max_order(), 0);
    for (int m = 1; m <= n; ++m) thetas.push_back(theta(thetas.back()));
    for (const auto& t : eop.terms)
        out = out + thetas[t.order].scaled(t.coeff);
    return out;
}

ParamPoly apply_to_poly(const DiffOperator& op, const ParamPoly& p) {
    DiffOperator plain = op.euler_form ? euler_to_plain(op) : op;
    ParamPoly out(p.var());
    for (const auto& t : plain.terms) {
        ParamPoly d = p;
        for (int k = 0; k < t.order; ++k) d = d.derivative();
        out = out + t.coeff.with_var(p.var()) * d;
    }
    return out;
}

} // namespace edgecascade
