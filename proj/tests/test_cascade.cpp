#include <doctest.h>

#include "edgecascade/cascade.hpp"

using namespace edgecascade;

namespace {

ParamPoly Y(int d = 1) { return ParamPoly::variable(Var::Y, d); }
ParamPoly C(long n, long den = 1) { return ParamPoly::constant(rat(n, den), Var::Y); }

void check_residuals(const EdgeCase& c, int jmax) {
    auto table = published_corrections(c);
    for (int j = 0; j <= jmax; ++j) {
        INFO(c.descriptor(), " order ", j);
        CHECK(residual(c, table, j).is_zero());
    }
}

} // namespace

TEST_CASE("published corrections annihilate the cascades exactly") {
    check_residuals(EdgeCase::gue_soft(), 2);
    check_residuals(EdgeCase::gbe_soft(1), 2);
    check_residuals(EdgeCase::gbe_soft(4), 2);
    check_residuals(EdgeCase::lue_soft_a(), 2);
    check_residuals(EdgeCase::lue_soft_right(), 2);
    check_residuals(EdgeCase::lue_soft_left(), 2);
    check_residuals(EdgeCase::lue_hard(), 2);
    check_residuals(EdgeCase::lbe_hard(1), 1);
    check_residuals(EdgeCase::lbe_hard(4), 1);
    check_residuals(EdgeCase::lbe_soft_right(1), 1);
    check_residuals(EdgeCase::lbe_soft_right(4), 1);
}

TEST_CASE("perturbing one coefficient breaks the identity") {
    auto c = EdgeCase::gue_soft();
    auto table = published_corrections(c);
    ModuleElement r1 = table.at(1);
    r1.set_coeff(2, r1.coeff(2) + C(1)); // bump the a3 coefficient
    table.set(1, r1, Provenance::PAPER_TABLE);
    CHECK_FALSE(residual(c, table, 1).is_zero());
}

TEST_CASE("solver reproduces the tabulated first and second corrections") {
    auto c = EdgeCase::gue_soft();
    auto table = published_corrections(c);
    for (int j = 1; j <= 2; ++j) {
        auto sol = solve_next(c, table, j);
        CHECK(sol.particular == table.at(j));
        CHECK(sol.nullspace.empty());
    }
}

TEST_CASE("third order solve has a one-dimensional homogeneous ambiguity") {
    auto c = EdgeCase::gue_soft();
    auto table = published_corrections(c);
    auto sol = solve_next(c, table, 3);
    REQUIRE(sol.nullspace.size() == 1);
    // spanned by the leading correction
    ModuleElement n = sol.nullspace[0];
    ModuleElement r0 = table.at(0);
    // proportionality: n = c * r0 with c the ratio of the a2 coefficients
    Rational ratio = n.coeff(1).coeff_of(0, ParamMono{}) /
                     r0.coeff(1).coeff_of(0, ParamMono{});
    CHECK(n == r0.scaled(ratio));
    // the solved particular solution still satisfies the cascade
    table.set(3, sol.particular, Provenance::SOLVED);
    CHECK(residual(c, table, 3).is_zero());
}

TEST_CASE("solver reproduces the fixed-order Laguerre second correction") {
    auto c = EdgeCase::lue_soft_a();
    auto table = published_corrections(c);
    auto sol1 = solve_next(c, table, 1);
    CHECK(sol1.particular == table.at(1));
    CHECK(sol1.nullspace.empty());
    auto sol2 = solve_next(c, table, 2);
    CHECK(sol2.particular == table.at(2));
    CHECK(sol2.nullspace.empty());
}

TEST_CASE("solver reproduces the aspect-ratio corrections as polynomials in tau") {
    auto c = EdgeCase::lue_soft_right();
    auto table = published_corrections(c);
    for (int j = 1; j <= 2; ++j) {
        auto sol = solve_next(c, table, j);
        CHECK(sol.particular == table.at(j));
        CHECK(sol.nullspace.empty());
    }
}

TEST_CASE("solver reproduces the hard edge corrections") {
    auto c = EdgeCase::lue_hard();
    auto table = published_corrections(c);
    for (int j = 1; j <= 2; ++j) {
        auto sol = solve_next(c, table, j);
        CHECK(sol.particular == table.at(j));
        CHECK(sol.nullspace.empty());
    }
}

TEST_CASE("solve followed by residual is exactly zero") {
    auto c = EdgeCase::lue_soft_right();
    auto table = published_corrections(c);
    auto sol = solve_next(c, table, 3); // one past the published table
    table.set(3, sol.particular, Provenance::SOLVED);
    CHECK(residual(c, table, 3).is_zero());
}

TEST_CASE("left edge corrections equal the right edge ones under T -> -T") {
    auto right = published_corrections(EdgeCase::lue_soft_right());
    auto left = published_corrections(EdgeCase::lue_soft_left());
    for (int j = 0; j <= 2; ++j) {
        ModuleElement mapped =
            right.at(j).substitute_param(Param::T, -ParamPoly::parameter(Param::T));
        CHECK(mapped == left.at(j));
    }
}

TEST_CASE("differential relations hold exactly") {
    for (const auto& id : relation_ids()) {
        INFO(id);
        CHECK(check_relation(id).is_zero());
    }
}

TEST_CASE("decomposition of the quintic hard edge first correction") {
    auto c = EdgeCase::lbe_hard(1);
    auto table = published_corrections(c);
    auto dec = decompose_homogeneous(c, table.at(1));
    // C = (1 - a^2)/4 = -At/4
    RationalFn expect(-ParamPoly::parameter(Param::AT) * rat(1, 4),
                      ParamPoly::constant(1));
    CHECK(dec.constant == expect);
    // remainder: the particular part with no homogeneous admixture
    ParamPoly at = ParamPoly::parameter(Param::AT, Var::Y);
    ModuleElement P = ModuleElement::of(
        c.family(),
        {-((Y() - at - C(1)) * (Y() - at - C(1)) + at * at - C(1)) * rat(1, 16),
         -(Y() - at * 3) * rat(1, 24), -Y() * rat(1, 12), Y() * rat(1, 48),
         -(Y() + at * 2) * rat(1, 48)});
    CHECK(dec.remainder == P);
    // the remainder solves the same inhomogeneous equation
    auto t2 = published_corrections(c);
    t2.set(1, dec.remainder, Provenance::SOLVED);
    CHECK(residual(c, t2, 1).is_zero());
}

TEST_CASE("decomposition edge cases") {
    auto c = EdgeCase::gue_soft();
    auto table = published_corrections(c);
    auto self = decompose_homogeneous(c, table.at(0));
    CHECK(self.constant == RationalFn(Rational(1)));
    CHECK(self.remainder.is_zero());
    auto first = decompose_homogeneous(c, table.at(1));
    CHECK(first.constant == RationalFn(Rational(0)));
    CHECK(first.remainder == table.at(1));
}

TEST_CASE("residual demands matching case and family") {
    auto gue = published_corrections(EdgeCase::gue_soft());
    CHECK_THROWS_AS((void)residual(EdgeCase::lue_hard(), gue, 0), Error);
}
