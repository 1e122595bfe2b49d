#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include <monozeta/germ_zeta.hpp>

#include "oracles.hpp"

using namespace monozeta;

namespace {

Poly two_var(int a, int b) {
    return Poly::monomial({a, 0}) + Poly::monomial({0, b});
}

Poly three_var(int a, int b, int c) {
    return Poly::monomial({a, 0, 0}) + Poly::monomial({0, b, 0}) + Poly::monomial({0, 0, c});
}

} // namespace

TEST_CASE("single-germ zeta: pinned values", "[germ]") {
    REQUIRE(format_zeta(milnor_zeta(two_var(3, 2))) == "(1-t^2)(1-t^3)(1-t^6)^-1");
    REQUIRE(degree(milnor_zeta(two_var(3, 2))) == -1);
    REQUIRE(milnor_zeta(Poly::monomial({4})) == CycloProd::factor(4));
    REQUIRE(milnor_zeta(parse_poly("x + y", {"x", "y"})) == CycloProd::factor(1));

    SECTION("smooth points stay smooth after recentring") {
        // the example surface x1^4 + x2^3 + x3^2 at its smooth point (0,-1,1):
        // four subset contributions conspire to cancel down to 1 - t
        Poly f = three_var(4, 3, 2);
        REQUIRE(milnor_zeta(translate(f, {0, -1, 1})) == CycloProd::factor(1));
    }

    SECTION("preconditions") {
        REQUIRE_THROWS_AS(milnor_zeta(Poly::zero(2)), PreconditionError);
        REQUIRE_THROWS_AS(milnor_zeta(parse_poly("x + 1", {"x", "y"})), PreconditionError);
        REQUIRE_THROWS_AS(milnor_zeta(Poly::monomial(Exponent(17, 1))), PreconditionError);
    }
}

TEST_CASE("zeta degree matches the support-level Milnor number", "[germ]") {
    // chi of the local fibre is 1 + (-1)^(n-1) mu; the zeta degree must agree
    // with the Milnor number computed from the support alone.
    auto check = [](const Poly& f, long long mu_expected) {
        Int mu = kouchnirenko_mu(support(f));
        REQUIRE(mu == Int(mu_expected));
        long long sign = (f.nvars() % 2 == 1) ? 1 : -1;
        REQUIRE(degree(milnor_zeta(f)) == 1 + sign * mu_expected);
    };

    for (int a = 2; a <= 6; ++a)
        for (int b = 2; b <= 6; ++b) check(two_var(a, b), oracle::mu_two_vars(a, b));

    for (int a = 2; a <= 4; ++a)
        for (int b = 2; b <= 4; ++b)
            for (int c = 2; c <= 4; ++c)
                check(three_var(a, b, c), oracle::mu_three_vars(a, b, c));

    for (int n = 1; n <= 3; ++n)
        for (int d = 1; d <= 4; ++d)
            check(oracle::dense_form(n, d), oracle::mu_homogeneous(d, n));
}

TEST_CASE("cone germs expand to a single factor", "[germ]") {
    // dense degree-d support in n variables: (1 - t^d)^((1 + (-1)^(n-1)(d-1)^n)/d)
    for (int n = 1; n <= 4; ++n)
        for (int d = 1; d <= 5; ++d) {
            CycloProd z = milnor_zeta(oracle::dense_form(n, d));
            REQUIRE(z == CycloProd::factor(d, oracle::cone_exponent(d, n)));
        }
}

TEST_CASE("pair formula with a unit second part reduces to the single germ", "[germ]") {
    std::vector<Poly> corpus;
    for (int a = 2; a <= 5; ++a)
        for (int b = 2; b <= 5; ++b) corpus.push_back(two_var(a, b));
    corpus.push_back(three_var(2, 3, 4));
    corpus.push_back(three_var(2, 2, 2));
    corpus.push_back(Poly::monomial({5}));
    corpus.push_back(oracle::dense_form(2, 3));
    corpus.push_back(oracle::dense_form(3, 2));
    corpus.push_back(parse_poly("x^2*y + y^3 + x^4", {"x", "y"}));
    REQUIRE(corpus.size() >= 20);

    for (const Poly& f : corpus) {
        const int n = f.nvars();
        CycloProd expect = milnor_zeta(f);
        REQUIRE(pair_zeta0(f, Poly::constant(n, 1)) == expect);
        REQUIRE(pair_zeta0(f, Poly::constant(n, -3)) == expect);
        // any unit germ works, not just constants
        Poly unit = Poly::constant(n, 2) + Poly::monomial(Exponent(static_cast<std::size_t>(n), 1));
        REQUIRE(pair_zeta0(f, unit) == expect);
    }
}

TEST_CASE("pair formula: pinned values", "[germ]") {
    SECTION("the quintic-cubic pencil") {
        Poly f = Poly::monomial({5, 0});
        Poly g = two_var(3, 3);
        REQUIRE(format_zeta(pair_zeta0(f, g)) == "(1-t^2)^-2");
    }

    SECTION("subset contributions of the running example") {
        Poly f = parse_poly("x0^2 + x1^4 + x0*x2^3", {"x0", "x1", "x2"});
        Poly g = parse_poly("x2^4", {"x0", "x1", "x2"});
        REQUIRE(pair_subset_factor(f, g, {0}).is_one());
        REQUIRE(pair_subset_factor(f, g, {1}).is_one());
        REQUIRE(pair_subset_factor(f, g, {2}).is_one());
        REQUIRE(pair_subset_factor(f, g, {0, 2}) == CycloProd::factor(2, -1));
    }

    SECTION("preconditions") {
        Poly f = two_var(2, 2);
        REQUIRE_THROWS_AS(pair_zeta0(f, Poly::zero(2)), PreconditionError);
        REQUIRE_THROWS_AS(pair_zeta0(Poly::zero(2), f), PreconditionError);
        REQUIRE_THROWS_AS(pair_zeta0(parse_poly("x + 1", {"x", "y"}), f), PreconditionError);
        REQUIRE_THROWS_AS(pair_zeta0(f, Poly::constant(3, 1)), PreconditionError);
    }
}

TEST_CASE("local family zeta: the case analysis", "[germ]") {
    auto result = [](const char* ftext, const char* gtext) {
        return family_zeta_at_point(GermFamily(parse_poly(ftext, {"x", "y"}),
                                               parse_poly(gtext, {"x", "y"})));
    };

    SECTION("both parts zero: the family is identically zero near the point") {
        LocalZetaResult r = family_zeta_at_point(GermFamily(Poly::zero(2), Poly::zero(2)));
        REQUIRE(r.tag == CaseTag::constant_family);
        REQUIRE(r.zeta == CycloProd::factor(1));
        REQUIRE(r.chi == 1);
    }

    SECTION("one part zero: the zero set does not move") {
        LocalZetaResult r = result("0", "x");
        REQUIRE(r.tag == CaseTag::constant_family);
        REQUIRE(r.zeta == CycloProd::factor(1));

        r = result("0", "x + 1");
        REQUIRE(r.tag == CaseTag::constant_family);
        REQUIRE(r.zeta.is_one());

        r = result("y^2", "0");
        REQUIRE(r.tag == CaseTag::constant_family);
        REQUIRE(r.zeta == CycloProd::factor(1));

        r = result("y^2 + 1", "0");
        REQUIRE(r.tag == CaseTag::constant_family);
        REQUIRE(r.zeta.is_one());
    }

    SECTION("f does not vanish: the fibre misses the point") {
        LocalZetaResult r = result("x + 1", "y");
        REQUIRE(r.tag == CaseTag::empty);
        REQUIRE(r.zeta.is_one());
        REQUIRE(r.chi == 0);
    }

    SECTION("f vanishes, g does not: an ordinary germ") {
        LocalZetaResult r = result("x^3 + y^2", "1 + x");
        REQUIRE(r.tag == CaseTag::milnor);
        REQUIRE(r.zeta == milnor_zeta(parse_poly("x^3 + y^2", {"x", "y"})));
    }

    SECTION("both vanish: pair formula plus the indeterminacy factor") {
        LocalZetaResult r = result("x^5", "x^3 + y^3");
        REQUIRE(r.tag == CaseTag::pair_with_indeterminacy);
        REQUIRE(format_zeta(r.zeta) == "(1-t)(1-t^2)^-2");
        REQUIRE(r.chi == -3);
    }

    SECTION("chi always equals the zeta degree") {
        for (const char* f : {"0", "x", "x + 1", "x^5", "x^3 + y^2"})
            for (const char* g : {"0", "y", "y + 1", "x^3 + y^3", "1"}) {
                LocalZetaResult r = result(f, g);
                REQUIRE(r.chi == degree(r.zeta));
            }
    }
}

TEST_CASE("boundary-adjusted zeta", "[germ]") {
    SECTION("the running example at the distinguished point") {
        Poly f = parse_poly("x0^2 + x1^4 + x0*x2^3", {"x0", "x1", "x2"});
        Poly g = parse_poly("x2^4", {"x0", "x1", "x2"});
        LocalZetaResult r = hat_family_zeta(GermFamily(f, g), 0);
        REQUIRE(format_zeta(r.zeta) == "(1-t^2)^-1(1-t^4)^2");
        REQUIRE(r.chi == 6);
        REQUIRE(r.tag == CaseTag::pair_with_indeterminacy);
    }

    SECTION("a germ transversal to the boundary divides out to 1") {
        // f = u vanishes on a line transversal to {x0 = 0}; off the boundary
        // nothing remains
        Poly f = parse_poly("u", {"x0", "u"});
        Poly g = Poly::constant(2, 1);
        LocalZetaResult r = hat_family_zeta(GermFamily(f, g), 0);
        REQUIRE(r.zeta.is_one());
        REQUIRE(r.chi == 0);
    }

    SECTION("boundary variable out of range") {
        Poly f = parse_poly("u", {"x0", "u"});
        REQUIRE_THROWS_AS(hat_family_zeta(GermFamily(f, f), 2), PreconditionError);
    }
}

TEST_CASE("absent variables are reported", "[germ]") {
    REQUIRE(absent_variables(parse_poly("x^2 + x", {"x", "y"})) == std::vector<int>{1});
    REQUIRE(absent_variables(parse_poly("x*y", {"x", "y"})).empty());
    REQUIRE(absent_variables(Poly::zero(3)) == std::vector<int>{0, 1, 2});
    REQUIRE(absent_variables(Poly::constant(2, 5)) == std::vector<int>{0, 1});
}
