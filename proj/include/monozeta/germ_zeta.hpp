#pragma once

#include <utility>
#include <vector>

#include "cyclo_prod.hpp"
#include "errors.hpp"
#include "newton.hpp"
#include "numeric.hpp"
#include "poly.hpp"

namespace monozeta {

// Which branch of the local case analysis produced a result.
enum class CaseTag {
    empty,                   // the family member misses the point entirely
    constant_family,         // f or g vanishes identically
    milnor,                  // generic member has an ordinary vanishing germ
    pair_with_indeterminacy  // both parts vanish at the point
};

inline const char* to_string(CaseTag t) {
    switch (t) {
        case CaseTag::empty: return "empty";
        case CaseTag::constant_family: return "constant_family";
        case CaseTag::milnor: return "milnor";
        case CaseTag::pair_with_indeterminacy: return "pair_with_indeterminacy";
    }
    return "?";
}

// A local zeta function in factored form together with its degree (the Euler
// characteristic of the corresponding fibre data) and the case that applied.
struct LocalZetaResult {
    CycloProd zeta;
    long long chi = 0;
    CaseTag tag = CaseTag::empty;
};

namespace detail {

inline LocalZetaResult finish_local(CycloProd z, CaseTag tag) {
    LocalZetaResult r;
    r.chi = degree(z);
    r.zeta = std::move(z);
    r.tag = tag;
    return r;
}

inline std::vector<int> bits_of(unsigned mask, int n) {
    std::vector<int> I;
    for (int j = 0; j < n; ++j)
        if (mask & (1u << j)) I.push_back(j);
    return I;
}

inline void check_var_count(int n) {
    if (n < 1 || n > 16) throw PreconditionError("unsupported variable count");
}

} // namespace detail

// Monodromy zeta function of a single germ vanishing at the origin, from its
// Newton diagram: the product over coordinate subsets I with nonvanishing
// restriction and over the top faces of the restricted diagram of
// (1 - t^m)^(sign * volume), with sign (-1)^(|I|-1).  Valid verbatim for
// diagram-nondegenerate germs; nondegeneracy is assumed, not checked.
inline CycloProd milnor_zeta(const Poly& f) {
    if (f.is_zero()) throw PreconditionError("zero germ");
    if (f.constant_term() != 0) throw PreconditionError("germ does not vanish at the origin");
    const int n = f.nvars();
    detail::check_var_count(n);

    Support A = support(f);
    CycloProd out;
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        std::vector<int> I = detail::bits_of(mask, n);
        if (support_in(A, I).empty()) continue;
        const long long sgn = (I.size() % 2 == 1) ? 1 : -1;
        for (const FaceData& fd : diagram_faces(A, I)) {
            long long nu = to_long(normalized_volume(fd.verticesF, fd.covector));
            if (nu != 0) out.mul_factor(to_long(fd.mF), sgn * nu);
        }
    }
    return out;
}

// One subset's contribution to the pair formula: the product over the joint
// top faces of (1 - t^(mF - mG))^(sign * mixed volume sum), restricted to
// faces where mF - mG is positive.  Subsets where either restriction
// vanishes contribute the empty product.
inline CycloProd pair_subset_factor(const Poly& f, const Poly& g, const std::vector<int>& I) {
    Support F = support(f);
    Support G = support(g);
    CycloProd out;
    if (support_in(F, I).empty() || support_in(G, I).empty()) return out;
    const std::vector<int> sub = detail::checked_subset(I, f.nvars());
    const long long sgn = (sub.size() % 2 == 1) ? 1 : -1;
    for (const FaceData& fd : pair_faces(F, G, I)) {
        Int D = fd.mF - *fd.mG;
        if (D <= 0) continue;
        long long w = to_long(mixed_volume_sum(fd.verticesF, fd.verticesG, fd.covector));
        if (w != 0) out.mul_factor(to_long(D), sgn * w);
    }
    return out;
}

// Zeta function of the generic-member germ of the pencil f + s*g at a point
// of indeterminacy, from the two Newton diagrams.  f must vanish at the
// origin; g may be anything nonzero, a unit included (the unit case is what
// the reduction to a single diagram rests on).
inline CycloProd pair_zeta0(const Poly& f, const Poly& g) {
    if (f.is_zero() || g.is_zero()) throw PreconditionError("zero germ");
    if (f.constant_term() != 0) throw PreconditionError("germ does not vanish at the origin");
    if (f.nvars() != g.nvars())
        throw PreconditionError("family parts use different variable sets");
    const int n = f.nvars();
    detail::check_var_count(n);

    CycloProd out;
    for (unsigned mask = 1; mask < (1u << n); ++mask)
        out = mul(out, pair_subset_factor(f, g, detail::bits_of(mask, n)));
    return out;
}

// Zeta function of the generic member P_s = f + s*g of the family at the
// origin, by cases on how the two parts meet the point.
inline LocalZetaResult family_zeta_at_point(const GermFamily& fam) {
    const Poly& f = fam.f;
    const Poly& g = fam.g;

    if (f.is_zero() && g.is_zero())
        return detail::finish_local(CycloProd::factor(1), CaseTag::constant_family);
    if (f.is_zero()) {
        // P_s = s*g: the germ is g up to the nonzero scalar s.
        CycloProd z;
        if (g.constant_term() == 0) z.mul_factor(1, 1);
        return detail::finish_local(std::move(z), CaseTag::constant_family);
    }
    if (g.is_zero()) {
        CycloProd z;
        if (f.constant_term() == 0) z.mul_factor(1, 1);
        return detail::finish_local(std::move(z), CaseTag::constant_family);
    }
    if (f.constant_term() != 0)
        return detail::finish_local(CycloProd::one(), CaseTag::empty);
    if (g.constant_term() != 0)
        return detail::finish_local(milnor_zeta(f), CaseTag::milnor);

    CycloProd z = pair_zeta0(f, g);
    z.mul_factor(1, 1);  // the indeterminacy point itself contributes 1 - t
    return detail::finish_local(std::move(z), CaseTag::pair_with_indeterminacy);
}

// Boundary-adjusted zeta at a point of a distinguished hypersurface
// {x_j = 0}: the full local zeta divided by the zeta of the family
// restricted to the hypersurface.  Its degree is the Euler characteristic
// of the fibre part lying off the hypersurface.
inline LocalZetaResult hat_family_zeta(const GermFamily& fam, int boundary_var) {
    LocalZetaResult full = family_zeta_at_point(fam);
    GermFamily restricted(set_var_zero(fam.f, boundary_var), set_var_zero(fam.g, boundary_var));
    LocalZetaResult part = family_zeta_at_point(restricted);

    LocalZetaResult r;
    r.zeta = div(full.zeta, part.zeta);
    r.chi = degree(r.zeta);
    r.tag = full.tag;
    return r;
}

// Variables that appear in no monomial of p.  A nonempty answer means the
// support sits inside a coordinate hyperplane section, where the diagram
// formulas are fragile: results then depend on the convention that the
// missing variables still count.
inline std::vector<int> absent_variables(const Poly& p) {
    std::vector<char> seen(static_cast<std::size_t>(p.nvars()), 0);
    for (const auto& [e, c] : p.terms())
        for (std::size_t v = 0; v < e.size(); ++v)
            if (e[v] != 0) seen[v] = 1;
    std::vector<int> out;
    for (int v = 0; v < p.nvars(); ++v)
        if (!seen[static_cast<std::size_t>(v)]) out.push_back(v);
    return out;
}

} // namespace monozeta
