#ifndef EDGECASCADE_BASIS_HPP
#define EDGECASCADE_BASIS_HPP

#include <array>
#include <optional>
#include <string>

#include "edgecascade/parampoly.hpp"

namespace edgecascade {

// The four transcendental basis families.
//   AIRY3   : a1 = Ai^2, a2 = Ai'^2, a3 = Ai*Ai'                    (d/dy)
//   AIRY5   : AIRY3 plus a4 = Ai*AInu, a5 = Ai'*AInu                (d/dy)
//   BESSEL3 : b1 = J_a(sqrt y)^2/y, b2 = J_a'(sqrt y)^2,
//             b3 = J_a(sqrt y) J_a'(sqrt y)/sqrt y                  (D_y = d/dy . y)
//   BESSEL5 : BESSEL3 plus b4 = J_a JI_a/sqrt y, b5 = J_a' JI_a     (D_y)
enum class FamilyId { AIRY3, AIRY5, BESSEL3, BESSEL5 };

enum class Derivation { PLAIN, EULER };

const char* family_name(FamilyId id);

struct BasisFamily {
    FamilyId id;
    std::optional<int> nu;  // 0 or 1, AIRY5/BESSEL5 only; numeric evaluation only
    Derivation derivation;
    ParamMask params;
    // The square of the Bessel order as an element of the coefficient ring:
    // A for the plain hard edge, At + 1 when the tables are kept in At = a^2-1.
    ParamPoly order_sq;

    static BasisFamily airy3();
    static BasisFamily airy5(int nu);
    static BasisFamily bessel3();             // order_sq = A
    static BasisFamily bessel5(int nu);       // order_sq = At + 1

    int size() const { return (id == FamilyId::AIRY3 || id == FamilyId::BESSEL3) ? 3 : 5; }
    bool operator==(const BasisFamily& o) const;
};

// Formal sum  sum_i p_i(y) * basis_i(y)  with exact polynomial coefficients.
class ModuleElement {
public:
    ModuleElement() = default;
    explicit ModuleElement(BasisFamily fam) : family_(fam) {}

    static ModuleElement zero(BasisFamily fam) { return ModuleElement(fam); }
    // coeffs listed in basis order, shorter lists padded with zero
    static ModuleElement of(BasisFamily fam, std::initializer_list<ParamPoly> coeffs);

    const BasisFamily& family() const { return family_; }
    const ParamPoly& coeff(int basis_index) const; // 0-based
    void set_coeff(int basis_index, ParamPoly p);
    bool is_zero() const;

    ModuleElement operator+(const ModuleElement& o) const;
    ModuleElement operator-(const ModuleElement& o) const;
    ModuleElement operator-() const;
    ModuleElement scaled(const Rational& c) const;
    ModuleElement scaled(const ParamPoly& p) const; // multiply by polynomial in y
    bool operator==(const ModuleElement& o) const;
    bool operator!=(const ModuleElement& o) const { return !(*this == o); }

    // Substitute a formal parameter in every coefficient.
    ModuleElement substitute_param(Param p, const ParamPoly& value) const;

    std::string str() const;

private:
    void check_family(const ModuleElement& o) const;
    BasisFamily family_ = BasisFamily::airy3();
    std::array<ParamPoly, 5> coeffs_{};
};

// d/dy for PLAIN families, D_y = d/dy . y for EULER families; stays in the
// family by the closure relations of the basis.
ModuleElement differentiate(const ModuleElement& elem);

} // namespace edgecascade

#endif
