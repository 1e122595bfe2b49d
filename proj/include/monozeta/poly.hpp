#pragma once

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "numeric.hpp"

namespace monozeta {

// Exponent vector of a monomial; length = number of variables, entries >= 0.
using Exponent = std::vector<int>;

// Sparse multivariate polynomial with exact rational coefficients over a
// fixed, ordered variable set.  Terms are kept in a map keyed by exponent
// vector, so iteration order (and hence everything derived from it) is
// deterministic.  Zero coefficients are never stored.
class Poly {
public:
    explicit Poly(int nvars) : nvars_(nvars) {
        if (nvars < 0) throw PreconditionError("negative variable count");
    }

    static Poly zero(int nvars) { return Poly(nvars); }

    static Poly constant(int nvars, const Rat& c) {
        Poly p(nvars);
        p.add_term(Exponent(static_cast<std::size_t>(nvars), 0), c);
        return p;
    }

    static Poly monomial(const Exponent& e, const Rat& c = Rat(1)) {
        Poly p(static_cast<int>(e.size()));
        p.add_term(e, c);
        return p;
    }

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Exponent, Rat>& terms() const { return terms_; }

    void add_term(const Exponent& e, const Rat& c) {
        if (static_cast<int>(e.size()) != nvars_)
            throw PreconditionError("exponent length does not match variable count");
        for (int x : e)
            if (x < 0) throw PreconditionError("negative exponent");
        if (c == 0) return;
        auto [it, inserted] = terms_.emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Rat coeff(const Exponent& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Rat(0) : it->second;
    }

    // Value at the origin.
    Rat constant_term() const {
        return coeff(Exponent(static_cast<std::size_t>(nvars_), 0));
    }

    // Total degree; -1 for the zero polynomial.
    int total_degree() const {
        int d = -1;
        for (const auto& [e, c] : terms_) {
            int s = 0;
            for (int x : e) s += x;
            d = std::max(d, s);
        }
        return d;
    }

    bool is_homogeneous() const {
        int d = -1;
        for (const auto& [e, c] : terms_) {
            int s = 0;
            for (int x : e) s += x;
            if (d < 0)
                d = s;
            else if (s != d)
                return false;
        }
        return true;
    }

    Poly& operator+=(const Poly& o) {
        require_same_vars(o);
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        require_same_vars(o);
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }

    friend Poly operator-(const Poly& a) {
        Poly r(a.nvars_);
        for (const auto& [e, c] : a.terms_) r.terms_.emplace(e, -c);
        return r;
    }

    friend Poly operator*(const Poly& a, const Poly& b) {
        a.require_same_vars(b);
        Poly r(a.nvars_);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                Exponent e = ea;
                for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
                r.add_term(e, ca * cb);
            }
        return r;
    }

    friend Poly operator*(const Rat& c, const Poly& a) {
        Poly r(a.nvars_);
        if (c != 0)
            for (const auto& [e, ce] : a.terms_) r.terms_.emplace(e, c * ce);
        return r;
    }

    friend bool operator==(const Poly& a, const Poly& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

private:
    void require_same_vars(const Poly& o) const {
        if (nvars_ != o.nvars_)
            throw PreconditionError("polynomials over different variable sets");
    }

    int nvars_;
    std::map<Exponent, Rat> terms_;
};

inline std::set<Exponent> support(const Poly& p) {
    std::set<Exponent> s;
    for (const auto& [e, c] : p.terms()) s.insert(e);
    return s;
}

namespace detail {

// Sorted, deduplicated, range-checked copy of a variable subset (0-based).
inline std::vector<int> checked_subset(std::vector<int> subset, int nvars) {
    if (subset.empty()) throw PreconditionError("variable subset is empty");
    std::sort(subset.begin(), subset.end());
    subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
    if (subset.front() < 0 || subset.back() >= nvars)
        throw PreconditionError("variable index out of range");
    return subset;
}

} // namespace detail

// Keep only the monomials supported in the given variable subset (exponent
// zero outside it).  The variable set is unchanged.
inline Poly restrict_to_subset(const Poly& p, const std::vector<int>& subset) {
    std::vector<int> I = detail::checked_subset(subset, p.nvars());
    std::vector<char> in(static_cast<std::size_t>(p.nvars()), 0);
    for (int j : I) in[static_cast<std::size_t>(j)] = 1;
    Poly r(p.nvars());
    for (const auto& [e, c] : p.terms()) {
        bool keep = true;
        for (std::size_t j = 0; j < e.size(); ++j)
            if (!in[j] && e[j] != 0) {
                keep = false;
                break;
            }
        if (keep) r.add_term(e, c);
    }
    return r;
}

// Substitute x_j = 0 and remove the variable (result has n-1 variables).
inline Poly set_var_zero(const Poly& p, int j) {
    if (j < 0 || j >= p.nvars())
        throw PreconditionError("variable index out of range");
    Poly r(p.nvars() - 1);
    for (const auto& [e, c] : p.terms()) {
        if (e[static_cast<std::size_t>(j)] != 0) continue;
        Exponent f = e;
        f.erase(f.begin() + j);
        r.add_term(f, c);
    }
    return r;
}

// Degree-d homogenization: multiply each term by x_0^(d - deg term), with the
// new variable x_0 prepended as index 0.
inline Poly homogenize(const Poly& p, int d) {
    if (d < p.total_degree())
        throw PreconditionError("homogenization degree below the total degree");
    Poly r(p.nvars() + 1);
    for (const auto& [e, c] : p.terms()) {
        int s = 0;
        for (int x : e) s += x;
        Exponent f;
        f.reserve(e.size() + 1);
        f.push_back(d - s);
        f.insert(f.end(), e.begin(), e.end());
        r.add_term(f, c);
    }
    return r;
}

// Affine chart of a homogeneous polynomial: substitute x_i = 1 and remove the
// variable.
inline Poly chart(const Poly& p, int i) {
    if (i < 0 || i >= p.nvars())
        throw PreconditionError("variable index out of range");
    if (!p.is_homogeneous())
        throw PreconditionError("chart requires a homogeneous polynomial");
    Poly r(p.nvars() - 1);
    for (const auto& [e, c] : p.terms()) {
        Exponent f = e;
        f.erase(f.begin() + i);
        r.add_term(f, c);
    }
    return r;
}

// Recentre at a rational point: p(x_1 + c_1, ..., x_n + c_n), expanded
// exactly with binomial coefficients.
inline Poly translate(const Poly& p, const std::vector<Rat>& c) {
    if (static_cast<int>(c.size()) != p.nvars())
        throw PreconditionError("translation point has wrong length");
    const int n = p.nvars();
    Poly r(n);
    for (const auto& [e, ce] : p.terms()) {
        Poly term = Poly::constant(n, ce);
        for (int v = 0; v < n; ++v) {
            int k = e[static_cast<std::size_t>(v)];
            if (k == 0) continue;
            // (x_v + c_v)^k
            Poly binom(n);
            if (c[static_cast<std::size_t>(v)] == 0) {
                Exponent m(static_cast<std::size_t>(n), 0);
                m[static_cast<std::size_t>(v)] = k;
                binom.add_term(m, 1);
            } else {
                Rat cv = c[static_cast<std::size_t>(v)];
                Rat cpow = 1;
                for (int j = k; j >= 0; --j) {
                    // coefficient of x_v^j is C(k, j) * c_v^(k-j)
                    Exponent m(static_cast<std::size_t>(n), 0);
                    m[static_cast<std::size_t>(v)] = j;
                    binom.add_term(m, Rat(binomial(k, j)) * cpow);
                    cpow *= cv;
                }
            }
            term = term * binom;
        }
        r += term;
    }
    return r;
}

// ---------------------------------------------------------------------------
// Text form.
//
// expression := [sign] term { sign term }
// term       := rational ["*"]? monomial? | monomial
// monomial   := var ["^" posint] { ["*"] var ["^" posint] }
// rational   := uint ["/" posint]
//
// Variable names are identifiers; the caller supplies their order.

namespace detail {

inline bool ident_start(char ch) {
    return std::isalpha(static_cast<unsigned char>(ch)) || ch == '_';
}
inline bool ident_char(char ch) {
    return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_';
}

} // namespace detail

inline Poly parse_poly(const std::string& s, const std::vector<std::string>& vars) {
    const int n = static_cast<int>(vars.size());
    std::map<std::string, int> index;
    for (int v = 0; v < n; ++v) {
        if (vars[static_cast<std::size_t>(v)].empty() ||
            !detail::ident_start(vars[static_cast<std::size_t>(v)][0]))
            throw PreconditionError("invalid variable name '" +
                                    vars[static_cast<std::size_t>(v)] + "'");
        if (!index.emplace(vars[static_cast<std::size_t>(v)], v).second)
            throw PreconditionError("duplicate variable name '" +
                                    vars[static_cast<std::size_t>(v)] + "'");
    }

    std::size_t i = 0;
    auto fail = [&](const std::string& what) -> void {
        throw ParseError("polynomial syntax error at position " +
                             std::to_string(i) + ": " + what,
                         i);
    };
    auto skip_ws = [&] {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i])))
            ++i;
    };
    auto at_digit = [&] {
        return i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]));
    };
    auto parse_uint = [&]() -> Int {
        if (!at_digit()) fail("expected a digit");
        Int v = 0;
        while (at_digit()) {
            v = 10 * v + (s[i] - '0');
            ++i;
        }
        return v;
    };
    auto parse_small_uint = [&]() -> int {
        Int v = parse_uint();
        if (v > 1000000) fail("exponent too large");
        return v.convert_to<int>();
    };

    Poly out(n);
    bool first = true;
    while (true) {
        skip_ws();
        int sign = 1;
        if (first) {
            if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
                sign = (s[i] == '-') ? -1 : 1;
                ++i;
                skip_ws();
            }
            if (i >= s.size()) fail("expected a polynomial");
        } else {
            if (i >= s.size()) break;
            if (s[i] == '+')
                sign = 1;
            else if (s[i] == '-')
                sign = -1;
            else
                fail("expected '+' or '-'");
            ++i;
            skip_ws();
        }

        // term: optional rational coefficient, then variable factors
        Rat coef = 1;
        bool have_coef = false;
        if (at_digit()) {
            Int num = parse_uint();
            if (i < s.size() && s[i] == '/') {
                ++i;
                Int den = parse_uint();
                if (den == 0) fail("zero denominator");
                coef = Rat(num, den);
            } else {
                coef = Rat(num);
            }
            have_coef = true;
            skip_ws();
            if (i < s.size() && s[i] == '*') {
                ++i;
                skip_ws();
                if (!(i < s.size() && detail::ident_start(s[i])))
                    fail("expected a variable after '*'");
            }
        }

        Exponent e(static_cast<std::size_t>(n), 0);
        bool have_var = false;
        while (i < s.size() && detail::ident_start(s[i])) {
            std::size_t start = i;
            while (i < s.size() && detail::ident_char(s[i])) ++i;
            std::string name = s.substr(start, i - start);
            auto it = index.find(name);
            if (it == index.end()) {
                i = start;
                fail("unknown variable '" + name + "'");
            }
            int k = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                k = parse_small_uint();
                if (k < 1) fail("exponent must be positive");
            }
            e[static_cast<std::size_t>(it->second)] += k;
            have_var = true;
            skip_ws();
            if (i < s.size() && s[i] == '*') {
                ++i;
                skip_ws();
                if (!(i < s.size() && detail::ident_start(s[i])))
                    fail("expected a variable after '*'");
            }
        }

        if (!have_coef && !have_var) fail("expected a term");
        out.add_term(e, sign * coef);
        first = false;
    }
    return out;
}

// Inverse of parse_poly up to term order and redundant separators.  Terms are
// printed in graded lexicographic order, highest degree first.
inline std::string format_poly(const Poly& p, std::vector<std::string> vars = {}) {
    const int n = p.nvars();
    if (vars.empty())
        for (int v = 1; v <= n; ++v) vars.push_back("x" + std::to_string(v));
    if (static_cast<int>(vars.size()) != n)
        throw PreconditionError("variable name list has wrong length");
    if (p.is_zero()) return "0";

    std::vector<std::pair<Exponent, Rat>> terms(p.terms().begin(), p.terms().end());
    auto deg = [](const Exponent& e) {
        int s = 0;
        for (int x : e) s += x;
        return s;
    };
    std::sort(terms.begin(), terms.end(), [&](const auto& a, const auto& b) {
        int da = deg(a.first), db = deg(b.first);
        if (da != db) return da > db;
        return a.first > b.first;
    });

    auto rat_str = [](const Rat& r) {
        std::string t = numerator(r).str();
        if (denominator(r) != 1) t += "/" + denominator(r).str();
        return t;
    };

    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms) {
        Rat mag = c < 0 ? Rat(-c) : c;
        if (first)
            out += (c < 0) ? "-" : "";
        else
            out += (c < 0) ? " - " : " + ";
        first = false;

        std::vector<std::string> parts;
        for (int v = 0; v < n; ++v) {
            int k = e[static_cast<std::size_t>(v)];
            if (k == 0) continue;
            std::string f = vars[static_cast<std::size_t>(v)];
            if (k > 1) f += "^" + std::to_string(k);
            parts.push_back(f);
        }
        if (parts.empty()) {
            out += rat_str(mag);
        } else {
            std::string mono;
            for (std::size_t j = 0; j < parts.size(); ++j) {
                if (j) mono += "*";
                mono += parts[j];
            }
            out += (mag == 1) ? mono : rat_str(mag) + "*" + mono;
        }
    }
    return out;
}

// A one-parameter family f + s*g of germs at the origin; s is the deformation
// parameter, never one of the polynomial variables.
struct GermFamily {
    Poly f;
    Poly g;

    GermFamily(Poly f_, Poly g_) : f(std::move(f_)), g(std::move(g_)) {
        if (f.nvars() != g.nvars())
            throw PreconditionError("family parts use different variable sets");
    }
};

} // namespace monozeta
