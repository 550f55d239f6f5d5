#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "edgecascade/linsolve.hpp"
#include "edgecascade/ratfunc.hpp"

using namespace edgecascade;

namespace {

ParamPoly Y(int d = 1) { return ParamPoly::variable(Var::Y, d); }
ParamPoly A() { return ParamPoly::parameter(Param::A); }
ParamPoly T() { return ParamPoly::parameter(Param::T); }
ParamPoly c(long n, long d = 1) { return ParamPoly::constant(rat(n, d)); }

ParamPoly random_poly(TestRng& rng, Var v, int maxdeg, ParamMask params) {
    ParamPoly p(v, params);
    int nterms = rng.small_int(1, 4);
    for (int i = 0; i < nterms; ++i) {
        ParamMono m;
        if (params & mask_of(Param::A)) m.e[0] = rng.small_int(0, 2);
        if (params & mask_of(Param::T)) m.e[1] = rng.small_int(0, 2);
        p.add_term(rng.small_rational(), rng.small_int(0, maxdeg), m);
    }
    return p;
}

} // namespace

TEST_CASE("rationals canonicalize") {
    CHECK(rat(2, 4) == rat(1, 2));
    CHECK(rat(-2, -4) == rat(1, 2));
    CHECK(rat_str(rat(-35, 16384)) == "-35/16384");
    CHECK(rat_parse("-35/16384") == rat(-35, 16384));
    CHECK(rat_str(rat(0, 7)) == "0");
}

TEST_CASE("polynomial arithmetic basics") {
    // derivative(-(3/5) y^2) = -(6/5) y
    ParamPoly p = Y(2) * rat(-3, 5);
    CHECK(p.derivative() == Y(1) * rat(-6, 5));

    // additive identity
    TestRng rng(7);
    ParamPoly q = random_poly(rng, Var::Y, 5, 0);
    CHECK(q + ParamPoly(Var::Y) == q);

    // (y - A)(y + A) = y^2 - A^2
    ParamPoly ya = Y(1) - A().with_var(Var::Y);
    ParamPoly yb = Y(1) + A().with_var(Var::Y);
    ParamPoly expect = Y(2) - (A() * A()).with_var(Var::Y);
    CHECK(ya * yb == expect);
}

TEST_CASE("variable and parameter mismatch raise typed errors") {
    ParamPoly y = Y();
    ParamPoly g = ParamPoly::variable(Var::GAMMA);
    CHECK_THROWS_AS((void)(y + g), VariableMismatchError);
    ParamPoly pa = A().with_var(Var::Y) + Y();
    CHECK_THROWS_AS((void)pa.add_strict(Y(2)), ParamMismatchError);
    CHECK_NOTHROW((void)(pa + Y(2))); // implicit promotion
}

TEST_CASE("evaluate substitutes the variable, parameters stay formal") {
    ParamPoly p = Y(2) * 3 + A().with_var(Var::Y) * Y(1);
    ParamPoly at2 = p.evaluate(rat(2));
    CHECK(at2.coeff_of(0, ParamMono{}) == 12);
    ParamMono a1;
    a1.e[0] = 1;
    CHECK(at2.coeff_of(0, a1) == 2);
    CHECK_THROWS_AS((void)p.evaluate_rational(rat(2)), ParamMismatchError);
    CHECK((Y(2) * 3).evaluate_rational(rat(2)) == 12);
}

TEST_CASE("ring axioms hold exactly on random inputs") {
    TestRng rng(42);
    for (int it = 0; it < 40; ++it) {
        ParamMask m = it % 2 ? mask_of(Param::A) : (mask_of(Param::A) | mask_of(Param::T));
        ParamPoly a = random_poly(rng, Var::Y, 4, m);
        ParamPoly b = random_poly(rng, Var::Y, 4, m);
        ParamPoly cc = random_poly(rng, Var::Y, 4, m);
        CHECK((a + b) + cc == a + (b + cc));
        CHECK((a * b) * cc == a * (b * cc));
        CHECK(a * (b + cc) == a * b + a * cc);
        CHECK(a * b == b * a);
        // derivative is a derivation
        CHECK((a * b).derivative() == a.derivative() * b + a * b.derivative());
    }
}

TEST_CASE("canonical form: equal values share representation") {
    ParamPoly a = (Y(1) + c(1).with_var(Var::Y)) * (Y(1) - c(1).with_var(Var::Y));
    ParamPoly b = Y(2) - c(1).with_var(Var::Y);
    CHECK(a == b);
    CHECK(a.str() == b.str());
    // zero has empty term map
    CHECK((a - b).terms().empty());
}

TEST_CASE("degree guard trips at the documented bound") {
    ParamPoly a = A();
    ParamPoly p = ParamPoly::constant(1);
    CHECK_THROWS_AS(
        [&] {
            for (int i = 0; i < 20; ++i) p = p * a;
        }(),
        DegreeLimitError);
}

TEST_CASE("param gcd and exact division") {
    ParamPoly a = A(), t = T();
    ParamPoly f = (a + t) * (a - t) * 6;
    ParamPoly g = (a + t) * (a * a + ParamPoly::constant(1)) * 4;
    ParamPoly d = param_gcd(f, g);
    CHECK(param_divide_exact(f, d) * d == f * (ParamPoly::constant(1)));
    CHECK(d == a + t);
    CHECK_THROWS_AS((void)param_divide_exact(a * a + ParamPoly::constant(1), a + t), Error);
}

TEST_CASE("rational functions reduce to canonical form") {
    ParamPoly a = A();
    RationalFn f(a * a - ParamPoly::constant(1), a - ParamPoly::constant(1));
    CHECK(f.is_polynomial());
    CHECK(f.as_polynomial() == a + ParamPoly::constant(1));
    RationalFn g(ParamPoly::constant(1), a);
    CHECK((g * RationalFn::of(a)) == RationalFn(Rational(1)));
    CHECK((f - f).is_zero());
}

TEST_CASE("solve_exact: identity and underdetermined systems") {
    auto I = solve_exact_rational({{1, 0}, {0, 1}}, {1, 0});
    REQUIRE(I.consistent);
    CHECK(I.particular[0] == RationalFn(Rational(1)));
    CHECK(I.particular[1] == RationalFn(Rational(0)));
    CHECK(I.nullspace.empty());

    auto U = solve_exact_rational({{1, 1}}, {0});
    REQUIRE(U.consistent);
    CHECK(U.nullspace.size() == 1);
    // free variable pinned to zero in the particular solution
    CHECK(U.particular[0].is_zero());
    CHECK(U.particular[1].is_zero());
    // nullspace vector: x0 = -x1, x1 = 1
    CHECK(U.nullspace[0][1] == RationalFn(Rational(1)));
    CHECK(U.nullspace[0][0] == RationalFn(Rational(-1)));
}

TEST_CASE("solve_exact returns an exact preimage for random systems") {
    TestRng rng(99);
    for (int it = 0; it < 25; ++it) {
        int n = rng.small_int(1, 4);
        int m = rng.small_int(1, 4);
        std::vector<std::vector<Rational>> M(m, std::vector<Rational>(n));
        std::vector<Rational> v(n);
        for (auto& row : M)
            for (auto& e : row) e = rng.small_rational(3);
        for (auto& e : v) e = rng.small_rational(3);
        std::vector<Rational> rhs(m, 0);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < n; ++j) rhs[i] += M[i][j] * v[j];
        auto sol = solve_exact_rational(M, rhs);
        REQUIRE(sol.consistent);
        for (int i = 0; i < m; ++i) {
            RationalFn acc{Rational(0)};
            for (int j = 0; j < n; ++j)
                acc = acc + RationalFn(Rational(M[i][j])) * sol.particular[j];
            CHECK(acc == RationalFn(Rational(rhs[i])));
        }
        for (const auto& nv : sol.nullspace)
            for (int i = 0; i < m; ++i) {
                RationalFn acc{Rational(0)};
                for (int j = 0; j < n; ++j)
                    acc = acc + RationalFn(Rational(M[i][j])) * nv[j];
                CHECK(acc.is_zero());
            }
    }
}

TEST_CASE("solve_exact over the parameter field") {
    // [[A, 1], [0, A]] x = [A^2 + 1, A] has the unique solution [A, 1]... check
    ParamPoly a = A();
    PolyMatrix M = {{a, ParamPoly::constant(1)}, {ParamPoly::constant(0), a}};
    PolyVector rhs = {a * a + ParamPoly::constant(1), a};
    auto sol = solve_exact(M, rhs);
    REQUIRE(sol.consistent);
    CHECK(sol.particular[0] == RationalFn::of(a));
    CHECK(sol.particular[1] == RationalFn(Rational(1)));

    // inconsistent system carries a certificate row
    PolyMatrix M2 = {{a}, {a}};
    PolyVector rhs2 = {ParamPoly::constant(1), ParamPoly::constant(2)};
    auto bad = solve_exact(M2, rhs2);
    CHECK_FALSE(bad.consistent);
    CHECK(bad.certificate_row >= 0);
}

TEST_CASE("parameter substitution") {
    // At -> A - 1 maps (y - At - 1) to (y - A)
    ParamPoly at = ParamPoly::parameter(Param::AT, Var::Y);
    ParamPoly expr = Y() - at - ParamPoly::constant(1, Var::Y);
    ParamPoly sub = expr.substitute_param(
        Param::AT, ParamPoly::parameter(Param::A) - ParamPoly::constant(1));
    CHECK(sub == Y() - ParamPoly::parameter(Param::A, Var::Y));
}
