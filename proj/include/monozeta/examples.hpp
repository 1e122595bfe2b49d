#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "cyclo_prod.hpp"
#include "errors.hpp"
#include "germ_zeta.hpp"
#include "localize.hpp"
#include "poly.hpp"

namespace monozeta {

// The worked one-parameter families.  Each builder assembles a stratified
// problem whose local zetas all come from the germ engine: affine strata from
// plain local computations at rational representatives, strata at infinity
// from boundary-adjusted computations in a projective chart.  Where a stratum
// has no rational representative the germ is supplied directly with the
// support pattern of a recentred representative (a stand-in with the same
// Newton data, hence the same zeta).
struct ExampleReport {
    StratifiedProblem strata;

    CycloProd global() const { return assemble_global_zeta(strata); }
};

namespace detail {

inline Poly dense_homogeneous(int n, int deg) {
    Poly p(n);
    Exponent e(static_cast<std::size_t>(n), 0);
    auto rec = [&](auto&& self, int pos, int rem) -> void {
        if (pos == n - 1) {
            e[static_cast<std::size_t>(pos)] = rem;
            p.add_term(e, 1);
            return;
        }
        for (int k = 0; k <= rem; ++k) {
            e[static_cast<std::size_t>(pos)] = k;
            self(self, pos + 1, rem - k);
        }
    };
    rec(rec, 0, deg);
    return p;
}

inline void add_stratum(std::vector<Stratum>& v, std::string label, long long chi, CycloProd z) {
    v.push_back(Stratum{std::move(label), chi, std::move(z)});
}

// Local zeta at a smooth point of the zero set (germ u * unit, deformed by a
// generic nonvanishing part): always 1 - t.
inline CycloProd smooth_point_zeta() {
    GermFamily fam(Poly::monomial(Exponent{1, 0}), Poly::constant(2, 1));
    return family_zeta_at_point(fam).zeta;
}

} // namespace detail

// P_s = x^d0 + s*(x^d + y^d) in two variables.
inline ExampleReport example_family_1(long long d0, long long d) {
    if (d0 < 1 || d < 1 || d0 > 500 || d > 500)
        throw PreconditionError("unsupported parameters: need 1 <= d0, d <= 500");
    const int a = static_cast<int>(d0), b = static_cast<int>(d);

    Poly f = Poly::monomial(Exponent{a, 0});
    Poly g = Poly::monomial(Exponent{b, 0}) + Poly::monomial(Exponent{0, b});
    const int D = std::max(a, b);
    Poly fh = homogenize(f, D), gh = homogenize(g, D);  // variables (x0, x, y)

    ExampleReport rep;
    detail::add_stratum(rep.strata.affine, "origin", 1,
                        family_zeta_at_point(GermFamily(f, g)).zeta);
    // the line {x = 0} minus the origin, recentred at (0, 1)
    detail::add_stratum(
        rep.strata.affine, "zero_set_rest", 0,
        family_zeta_at_point(GermFamily(translate(f, {0, 1}), translate(g, {0, 1}))).zeta);

    // the point of {x = 0} at infinity, in the chart y = 1
    detail::add_stratum(rep.strata.infinity, "line_point_at_infinity", 1,
                        hat_family_zeta(GermFamily(chart(fh, 2), chart(gh, 2)), 0).zeta);

    if (b > a) {
        // The closure of the zero set swallows the whole line at infinity.
        // Chart x = 1, remaining variables (x0, y): f becomes x0^(d-d0).
        Poly fc = chart(fh, 1);
        Poly gc = chart(gh, 1);  // 1 + y^d
        // the d base points of the pencil: recentred stand-in (x0^(d-d0), (1+y)^d - 1)
        Poly gb = translate(Poly::monomial(Exponent{0, b}), {0, 1}) + Poly::constant(2, -1);
        detail::add_stratum(rep.strata.infinity, "pencil_base_points", d,
                            hat_family_zeta(GermFamily(fc, gb), 0).zeta);
        detail::add_stratum(rep.strata.infinity, "generic_infinity", 1 - d,
                            hat_family_zeta(GermFamily(fc, gc), 0).zeta);
    }
    return rep;
}

// P_s = x1^4 + x2^3 + x3^2 + s*x2^4: an equisingular deformation of the
// origin germ whose global zeta still jumps.
inline ExampleReport example_family_2() {
    Poly f = Poly::monomial(Exponent{4, 0, 0}) + Poly::monomial(Exponent{0, 3, 0}) +
             Poly::monomial(Exponent{0, 0, 2});
    Poly g = Poly::monomial(Exponent{0, 4, 0});
    Poly fh = homogenize(f, 4), gh = homogenize(g, 4);  // (x0, x1, x2, x3)

    ExampleReport rep;
    detail::add_stratum(rep.strata.affine, "origin", 1,
                        family_zeta_at_point(GermFamily(f, g)).zeta);
    // a smooth rational point of the zero set: (0, -1, 1)
    detail::add_stratum(
        rep.strata.affine, "zero_set_rest", 0,
        family_zeta_at_point(GermFamily(translate(f, {0, -1, 1}), translate(g, {0, -1, 1})))
            .zeta);

    // the distinguished point (0:0:0:1), in the chart x3 = 1
    detail::add_stratum(rep.strata.infinity, "distinguished_point", 1,
                        hat_family_zeta(GermFamily(chart(fh, 3), chart(gh, 3)), 0).zeta);
    // the rest of the line at infinity: chart x2 = 1, recentred at a generic
    // rational point of the line
    Poly fc = translate(chart(fh, 2), {0, 0, 1});
    Poly gc = translate(chart(gh, 2), {0, 0, 1});
    detail::add_stratum(rep.strata.infinity, "line_at_infinity_rest", 1,
                        hat_family_zeta(GermFamily(fc, gc), 0).zeta);
    return rep;
}

namespace detail {

inline void check_example_params(int n, long long d0, long long d) {
    if (n < 2 || n > 4 || d0 < 1 || d < 1 || d0 > 6 || d > 6)
        throw PreconditionError("unsupported parameters: need 2 <= n <= 4 and 1 <= d0, d <= 6");
}

} // namespace detail

// P_s = f + s*g for generic homogeneous forms f of degree d0 and g of degree
// d in n variables, transversal at infinity.  The generic forms stand in as
// dense supports with unit coefficients: the diagrams, and so the zetas, are
// those of the generic situation.
inline ExampleReport example_family_3(int n, long long d0, long long d) {
    detail::check_example_params(n, d0, d);
    Poly f = detail::dense_homogeneous(n, static_cast<int>(d0));
    Poly g = detail::dense_homogeneous(n, static_cast<int>(d));
    const int m = n - 1;  // dimension of the space at infinity
    const int e = static_cast<int>(d - d0);

    auto mono2 = [](int p, int q) { return Poly::monomial(Exponent{p, q}); };
    auto hat2 = [&](Poly fs, Poly gs) {
        return hat_family_zeta(GermFamily(std::move(fs), std::move(gs)), 0).zeta;
    };

    ExampleReport rep;
    if (d0 >= d) {
        detail::add_stratum(rep.strata.affine, "origin", 1,
                            family_zeta_at_point(GermFamily(f, g)).zeta);
        detail::add_stratum(rep.strata.affine, "zero_set_rest", 0, detail::smooth_point_zeta());
        // at infinity the closure meets {f = 0} only; stand-in germ at a
        // generic point of it: (u, x0^(d0-d)) resp. (u, unit) when d0 = d
        CycloProd zf = (d0 > d) ? hat2(mono2(0, 1), mono2(-e, 0))
                                : hat2(mono2(0, 1), Poly::constant(2, 1));
        detail::add_stratum(rep.strata.infinity, "f_at_infinity",
                            chi_smooth_hypersurface(d0, m), std::move(zf));
    } else {
        // the whole affine zero set has the same local zeta; computed at the origin
        detail::add_stratum(rep.strata.affine, "zero_set", 1,
                            family_zeta_at_point(GermFamily(f, g)).zeta);
        const long long ci = chi_complete_intersection(d0, d, m);
        detail::add_stratum(rep.strata.infinity, "f_only_at_infinity",
                            chi_smooth_hypersurface(d0, m) - ci,
                            hat2(mono2(e, 1), Poly::constant(2, 1)));
        detail::add_stratum(rep.strata.infinity, "g_only_at_infinity",
                            chi_smooth_hypersurface(d, m) - ci, hat2(mono2(e, 0), mono2(0, 1)));
        if (n >= 3)
            detail::add_stratum(
                rep.strata.infinity, "f_g_at_infinity", ci,
                hat2(Poly::monomial(Exponent{e, 1, 0}), Poly::monomial(Exponent{0, 0, 1})));
        detail::add_stratum(rep.strata.infinity, "generic_infinity",
                            chi_transversal_complement(d0, d, m),
                            hat2(mono2(e, 0), Poly::constant(2, 1)));
    }
    return rep;
}

// P_s = f + s*l^d for a generic homogeneous form f of degree d0 and a generic
// linear form l in n variables.  l^d stands in as x_n^d.
inline ExampleReport example_family_4(int n, long long d0, long long d) {
    detail::check_example_params(n, d0, d);
    Poly f = detail::dense_homogeneous(n, static_cast<int>(d0));
    Exponent ge(static_cast<std::size_t>(n), 0);
    ge[static_cast<std::size_t>(n - 1)] = static_cast<int>(d);
    Poly g = Poly::monomial(ge);
    const int m = n - 1;
    const int e = static_cast<int>(d - d0);
    const int dd = static_cast<int>(d);

    auto mono2 = [](int p, int q) { return Poly::monomial(Exponent{p, q}); };
    auto hat2 = [&](Poly fs, Poly gs) {
        return hat_family_zeta(GermFamily(std::move(fs), std::move(gs)), 0).zeta;
    };
    const long long ci = chi_complete_intersection(d0, 1, m);

    ExampleReport rep;
    if (d0 >= d) {
        detail::add_stratum(rep.strata.affine, "origin", 1,
                            family_zeta_at_point(GermFamily(f, g)).zeta);
        detail::add_stratum(rep.strata.affine, "zero_set_rest", 0, detail::smooth_point_zeta());
        CycloProd zf = (d0 > d) ? hat2(mono2(0, 1), mono2(-e, 0))
                                : hat2(mono2(0, 1), Poly::constant(2, 1));
        detail::add_stratum(rep.strata.infinity, "f_only_at_infinity",
                            chi_smooth_hypersurface(d0, m) - ci, std::move(zf));
        if (n >= 3) {
            CycloProd zfl = (d0 > d) ? hat2(Poly::monomial(Exponent{0, 1, 0}),
                                            Poly::monomial(Exponent{-e, 0, dd}))
                                     : hat2(Poly::monomial(Exponent{0, 1, 0}),
                                            Poly::monomial(Exponent{0, 0, dd}));
            detail::add_stratum(rep.strata.infinity, "f_l_at_infinity", ci, std::move(zfl));
        }
    } else {
        detail::add_stratum(rep.strata.affine, "zero_set", 1,
                            family_zeta_at_point(GermFamily(f, g)).zeta);
        detail::add_stratum(rep.strata.infinity, "f_only_at_infinity",
                            chi_smooth_hypersurface(d0, m) - ci,
                            hat2(mono2(e, 1), Poly::constant(2, 1)));
        detail::add_stratum(rep.strata.infinity, "l_only_at_infinity",
                            chi_smooth_hypersurface(1, m) - ci, hat2(mono2(e, 0), mono2(0, dd)));
        if (n >= 3)
            detail::add_stratum(
                rep.strata.infinity, "f_l_at_infinity", ci,
                hat2(Poly::monomial(Exponent{e, 1, 0}), Poly::monomial(Exponent{0, 0, dd})));
        detail::add_stratum(rep.strata.infinity, "generic_infinity",
                            chi_transversal_complement(d0, 1, m),
                            hat2(mono2(e, 0), Poly::constant(2, 1)));
    }
    return rep;
}

// Strata listing in the stratification file format, then the assembled global
// zeta as a final result line.
inline std::string format_report(const ExampleReport& rep) {
    CycloProd global = rep.global();
    return format_strata(rep.strata) + format_zeta(global) +
           "  chi=" + std::to_string(degree(global)) + "\n";
}

} // namespace monozeta
