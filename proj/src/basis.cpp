#include "edgecascade/basis.hpp"

#include <sstream>

namespace edgecascade {

const char* family_name(FamilyId id) {
    switch (id) {
        case FamilyId::AIRY3: return "airy3";
        case FamilyId::AIRY5: return "airy5";
        case FamilyId::BESSEL3: return "bessel3";
        case FamilyId::BESSEL5: return "bessel5";
    }
    return "?";
}

BasisFamily BasisFamily::airy3() {
    return BasisFamily{FamilyId::AIRY3, std::nullopt, Derivation::PLAIN, 0,
                       ParamPoly::constant(0)};
}

BasisFamily BasisFamily::airy5(int nu) {
    return BasisFamily{FamilyId::AIRY5, nu, Derivation::PLAIN, 0, ParamPoly::constant(0)};
}

BasisFamily BasisFamily::bessel3() {
    return BasisFamily{FamilyId::BESSEL3, std::nullopt, Derivation::EULER,
                       mask_of(Param::A), ParamPoly::parameter(Param::A)};
}

BasisFamily BasisFamily::bessel5(int nu) {
    ParamPoly asq = ParamPoly::parameter(Param::AT) + ParamPoly::constant(1);
    return BasisFamily{FamilyId::BESSEL5, nu, Derivation::EULER, mask_of(Param::AT), asq};
}

bool BasisFamily::operator==(const BasisFamily& o) const {
    return id == o.id && nu == o.nu && order_sq == o.order_sq;
}

ModuleElement ModuleElement::of(BasisFamily fam, std::initializer_list<ParamPoly> coeffs) {
    ModuleElement e(fam);
    int i = 0;
    for (const auto& p : coeffs) {
        if (i >= fam.size()) throw Error("too many coefficients for basis family");
        e.set_coeff(i++, p);
    }
    return e;
}

const ParamPoly& ModuleElement::coeff(int i) const {
    if (i < 0 || i >= family_.size()) throw Error("basis index out of range");
    return coeffs_[i];
}

void ModuleElement::set_coeff(int i, ParamPoly p) {
    if (i < 0 || i >= family_.size()) throw Error("basis index out of range");
    if (!p.is_zero() && p.var() != Var::Y && p.var() != Var::NONE)
        throw VariableMismatchError("module coefficients are polynomials in y");
    coeffs_[i] = p.with_var(Var::Y);
}

bool ModuleElement::is_zero() const {
    for (int i = 0; i < family_.size(); ++i)
        if (!coeffs_[i].is_zero()) return false;
    return true;
}

void ModuleElement::check_family(const ModuleElement& o) const {
    if (!(family_ == o.family_))
        throw Error("basis family mismatch: " + std::string(family_name(family_.id)) +
                    " vs " + family_name(o.family_.id));
}

ModuleElement ModuleElement::operator+(const ModuleElement& o) const {
    check_family(o);
    ModuleElement r(family_);
    for (int i = 0; i < family_.size(); ++i) r.coeffs_[i] = coeffs_[i] + o.coeffs_[i];
    return r;
}

ModuleElement ModuleElement::operator-(const ModuleElement& o) const {
    check_family(o);
    ModuleElement r(family_);
    for (int i = 0; i < family_.size(); ++i) r.coeffs_[i] = coeffs_[i] - o.coeffs_[i];
    return r;
}

ModuleElement ModuleElement::operator-() const {
    ModuleElement r(family_);
    for (int i = 0; i < family_.size(); ++i) r.coeffs_[i] = -coeffs_[i];
    return r;
}

ModuleElement ModuleElement::scaled(const Rational& c) const {
    ModuleElement r(family_);
    for (int i = 0; i < family_.size(); ++i) r.coeffs_[i] = coeffs_[i] * c;
    return r;
}

ModuleElement ModuleElement::scaled(const ParamPoly& p) const {
    ModuleElement r(family_);
    for (int i = 0; i < family_.size(); ++i) r.coeffs_[i] = coeffs_[i] * p;
    return r;
}

bool ModuleElement::operator==(const ModuleElement& o) const {
    if (!(family_ == o.family_)) return false;
    for (int i = 0; i < family_.size(); ++i)
        if (coeffs_[i] != o.coeffs_[i]) return false;
    return true;
}

ModuleElement ModuleElement::substitute_param(Param p, const ParamPoly& value) const {
    ModuleElement r(family_);
    for (int i = 0; i < family_.size(); ++i)
        r.coeffs_[i] = coeffs_[i].substitute_param(p, value);
    return r;
}

std::string ModuleElement::str() const {
    static const char* airy_names[5] = {"a1", "a2", "a3", "a4", "a5"};
    static const char* bessel_names[5] = {"b1", "b2", "b3", "b4", "b5"};
    bool airy = family_.derivation == Derivation::PLAIN;
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < family_.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        if (!first) os << " + ";
        os << "(" << coeffs_[i].str() << ")*" << (airy ? airy_names[i] : bessel_names[i]);
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

ModuleElement differentiate(const ModuleElement& elem) {
    const BasisFamily& fam = elem.family();
    ModuleElement out(fam);
    const ParamPoly y = ParamPoly::variable(Var::Y);
    const ParamPoly asq = fam.order_sq.with_var(Var::Y);
    const ParamPoly y_minus_asq = y - asq;
    const Rational half = rat(1, 2);

    auto add = [&](int i, const ParamPoly& p) { out.set_coeff(i, out.coeff(i) + p); };

    for (int i = 0; i < fam.size(); ++i) {
        const ParamPoly& p = elem.coeff(i);
        if (p.is_zero()) continue;
        if (fam.derivation == Derivation::PLAIN) {
            // Leibniz part
            add(i, p.derivative());
            // closure of the Airy products under d/dy
            switch (i) {
                case 0: add(2, p * 2); break;                      // a1' = 2 a3
                case 1: add(2, (p * 2) * y); break;                // a2' = 2 y a3
                case 2:                                            // a3' = a2 + y a1
                    add(1, p);
                    add(0, p * y);
                    break;
                case 3:                                            // a4' = a5 + a1
                    add(4, p);
                    add(0, p);
                    break;
                case 4:                                            // a5' = y a4 + a3
                    add(3, p * y);
                    add(2, p);
                    break;
            }
        } else {
            // D_y(p b) = y p' b + p D_y(b)
            add(i, p.derivative() * y);
            switch (i) {
                case 0: add(2, p); break;                          // D_y b1 = b3
                case 1: add(2, -(p * y_minus_asq)); break;         // D_y b2 = -(y-a^2) b3
                case 2:                                            // D_y b3 = ((a^2-y) b1 + b2)/2
                    add(0, -(p * y_minus_asq) * half);
                    add(1, p * half);
                    break;
                case 3:                                            // D_y b4 = (b4 + b5 - y b1)/2
                    add(3, p * half);
                    add(4, p * half);
                    add(0, -(p * y) * half);
                    break;
                case 4:                                            // D_y b5 = (b5 - (y-a^2) b4 - y b3)/2
                    add(4, p * half);
                    add(3, -(p * y_minus_asq) * half);
                    add(2, -(p * y) * half);
                    break;
            }
        }
    }
    return out;
}

} // namespace edgecascade
