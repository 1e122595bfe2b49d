#pragma once

#include <istream>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "cyclo_prod.hpp"
#include "errors.hpp"
#include "numeric.hpp"

namespace monozeta {

// One stratum of a partition of the zero set: its compactly-supported Euler
// characteristic and the (constant) local zeta function of the family along
// it.  Affine strata carry plain local zetas; strata at infinity carry
// boundary-adjusted ones.
struct Stratum {
    std::string label;
    long long chi = 0;
    CycloProd zeta;

    friend bool operator==(const Stratum& a, const Stratum& b) {
        return a.label == b.label && a.chi == b.chi && a.zeta == b.zeta;
    }
    friend bool operator!=(const Stratum& a, const Stratum& b) { return !(a == b); }
};

struct StratifiedProblem {
    std::vector<Stratum> affine;
    std::vector<Stratum> infinity;

    friend bool operator==(const StratifiedProblem& a, const StratifiedProblem& b) {
        return a.affine == b.affine && a.infinity == b.infinity;
    }
    friend bool operator!=(const StratifiedProblem& a, const StratifiedProblem& b) {
        return !(a == b);
    }
};

// Euler-characteristic integration over a stratified set: the product of the
// strata's zeta functions raised to their characteristics.
inline CycloProd integrate(const std::vector<Stratum>& strata) {
    CycloProd z;
    for (const Stratum& s : strata) z = mul(z, pow(s.zeta, s.chi));
    return z;
}

// Global zeta of the family at a generic parameter value: integrate the local
// zetas over the affine zero set and the boundary-adjusted ones over the part
// at infinity, then multiply.
inline CycloProd assemble_global_zeta(const StratifiedProblem& p) {
    return mul(integrate(p.affine), integrate(p.infinity));
}

// --- Euler characteristics of the standard projective strata ---------------

inline long long chi_projective_space(int m) {
    if (m < 0) throw PreconditionError("negative dimension");
    return m + 1;
}

// Smooth degree-d hypersurface in m-dimensional projective space.
inline long long chi_smooth_hypersurface(long long d, int m) {
    if (d < 1 || m < 1) throw PreconditionError("degree and dimension must be positive");
    Int p = pow(Int(1 - d), static_cast<unsigned>(m + 1));
    return to_long(Int(m + 1) + (p - 1) / d);
}

// Smooth transversal intersection of hypersurfaces of degrees d1, d2 in
// m-dimensional projective space.
inline long long chi_complete_intersection(long long d1, long long d2, int m) {
    if (d1 < 1 || d2 < 1 || m < 1)
        throw PreconditionError("degree and dimension must be positive");
    const Int a = d1, b = d2;
    switch (m) {
        case 1: return 0;  // generic point sets on a line are disjoint
        case 2: return to_long(a * b);
        case 3: return to_long(a * b * (4 - a - b));
        case 4: return to_long(a * b * (10 - 5 * (a + b) + a * a + a * b + b * b));
        default: throw PreconditionError("unsupported dimension");
    }
}

// Complement of a transversal union of two smooth hypersurfaces in
// m-dimensional projective space, by inclusion-exclusion.
inline long long chi_transversal_complement(long long d1, long long d2, int m) {
    return chi_projective_space(m) - chi_smooth_hypersurface(d1, m) -
           chi_smooth_hypersurface(d2, m) + chi_complete_intersection(d1, d2, m);
}

// ---------------------------------------------------------------------------
// Text form.  Two optional sections, each a header line followed by stratum
// lines; blank lines and '#' comments are skipped anywhere:
//
//   affine:
//   stratum <label> chi=<integer> zeta=<factored zeta, to end of line>
//   infinity:
//   stratum <label> chi=<integer> zeta=...

namespace detail {

inline std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

[[noreturn]] inline void strata_fail(std::size_t line_no, const std::string& what) {
    throw ParseError("line " + std::to_string(line_no) + ": " + what, line_no);
}

} // namespace detail

inline StratifiedProblem parse_strata(std::istream& in) {
    StratifiedProblem out;
    std::vector<Stratum>* section = nullptr;
    std::set<std::string> seen_affine, seen_infinity;
    std::set<std::string>* seen = nullptr;

    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string line = detail::trim(raw);
        if (line.empty() || line[0] == '#') continue;
        if (line == "affine:") {
            section = &out.affine;
            seen = &seen_affine;
            continue;
        }
        if (line == "infinity:") {
            section = &out.infinity;
            seen = &seen_infinity;
            continue;
        }

        std::istringstream ls(line);
        std::string kw;
        ls >> kw;
        if (kw != "stratum")
            detail::strata_fail(line_no, "expected 'affine:', 'infinity:' or a stratum line");
        if (!section) detail::strata_fail(line_no, "stratum line outside a section");

        Stratum s;
        std::string chitok;
        ls >> s.label >> chitok;
        if (s.label.empty() || chitok.empty())
            detail::strata_fail(line_no, "malformed stratum line");
        if (chitok.rfind("chi=", 0) != 0)
            detail::strata_fail(line_no, "expected 'chi=<integer>'");
        try {
            std::size_t used = 0;
            s.chi = std::stoll(chitok.substr(4), &used);
            if (used != chitok.size() - 4) throw std::invalid_argument("");
        } catch (const std::exception&) {
            detail::strata_fail(line_no, "invalid integer in 'chi='");
        }

        std::string rest;
        std::getline(ls, rest);
        rest = detail::trim(rest);
        if (rest.rfind("zeta=", 0) != 0)
            detail::strata_fail(line_no, "expected 'zeta=<factored zeta>'");
        try {
            s.zeta = parse_zeta(rest.substr(5));
        } catch (const ParseError& e) {
            detail::strata_fail(line_no, e.what());
        }

        if (!seen->insert(s.label).second)
            detail::strata_fail(line_no, "duplicate stratum label '" + s.label + "'");
        section->push_back(std::move(s));
    }
    return out;
}

inline StratifiedProblem parse_strata(const std::string& text) {
    std::istringstream in(text);
    return parse_strata(in);
}

inline std::string format_strata(const StratifiedProblem& p) {
    std::string out;
    auto emit = [&out](const char* header, const std::vector<Stratum>& strata) {
        if (strata.empty()) return;
        out += header;
        out += "\n";
        for (const Stratum& s : strata)
            out += "stratum " + s.label + " chi=" + std::to_string(s.chi) +
                   " zeta=" + format_zeta(s.zeta) + "\n";
    };
    emit("affine:", p.affine);
    emit("infinity:", p.infinity);
    return out;
}

} // namespace monozeta
