#pragma once

#include <cctype>
#include <map>
#include <string>
#include <vector>

#include "errors.hpp"
#include "numeric.hpp"

namespace monozeta {

// Finite product of factors (1 - t^k) with integer exponents.  Every zeta
// function handled by this library is a rational function of this shape, so
// the factor table is an exact canonical form: multiplication adds exponents,
// division subtracts them, and zero exponents are dropped.  The empty table
// is the constant 1.
//
// Note that equality of CycloProd values is equality of factor tables.  This
// is exactly functional equality for products of the (1 - t^k) basis, but a
// rational function given in another basis must be rewritten before it can be
// compared.
class CycloProd {
public:
    CycloProd() = default;

    static CycloProd one() { return CycloProd(); }

    // (1 - t^k)^e
    static CycloProd factor(long long k, long long e = 1) {
        CycloProd z;
        z.mul_factor(k, e);
        return z;
    }

    const std::map<long long, long long>& factors() const { return factors_; }

    bool is_one() const { return factors_.empty(); }

    long long exponent_of(long long k) const {
        auto it = factors_.find(k);
        return it == factors_.end() ? 0 : it->second;
    }

    // Multiply by (1 - t^k)^e in place.
    void mul_factor(long long k, long long e) {
        if (k < 1) throw PreconditionError("factor index k must be >= 1");
        if (e == 0) return;
        auto [it, inserted] = factors_.emplace(k, e);
        if (!inserted) {
            it->second += e;
            if (it->second == 0) factors_.erase(it);
        }
    }

    friend bool operator==(const CycloProd& a, const CycloProd& b) {
        return a.factors_ == b.factors_;
    }
    friend bool operator!=(const CycloProd& a, const CycloProd& b) {
        return !(a == b);
    }

private:
    std::map<long long, long long> factors_; // k >= 1  ->  exponent != 0
};

inline CycloProd mul(const CycloProd& a, const CycloProd& b) {
    CycloProd z = a;
    for (const auto& [k, e] : b.factors()) z.mul_factor(k, e);
    return z;
}

inline CycloProd pow(const CycloProd& a, long long e) {
    CycloProd z;
    for (const auto& [k, ke] : a.factors()) z.mul_factor(k, ke * e);
    return z;
}

inline CycloProd div(const CycloProd& a, const CycloProd& b) {
    return mul(a, pow(b, -1));
}

// degree(1 - t^k) = k, so the degree of the product is sum k*e.  For a zeta
// function this equals the Euler characteristic it encodes.
inline long long degree(const CycloProd& a) {
    long long d = 0;
    for (const auto& [k, e] : a.factors()) d += k * e;
    return d;
}

// Canonical text form: factors in ascending k, "^e" omitted when e == 1,
// "(1-t)" for k == 1, "1" for the empty product.  No separators.
inline std::string format_zeta(const CycloProd& a) {
    if (a.is_one()) return "1";
    std::string out;
    for (const auto& [k, e] : a.factors()) {
        out += "(1-t";
        if (k != 1) out += "^" + std::to_string(k);
        out += ")";
        if (e != 1) out += "^" + std::to_string(e);
    }
    return out;
}

// Accepted grammar: a sequence of atoms "1" | "(1-t)" | "(1-t^K)", each with
// an optional "^E" exponent suffix (E a possibly negative decimal integer).
// Whitespace between atoms is ignored and a single "*" may separate atoms.
inline CycloProd parse_zeta(const std::string& s) {
    std::size_t i = 0;
    auto fail = [&](const std::string& what) -> void {
        throw ParseError("zeta syntax error at position " + std::to_string(i) +
                             ": " + what,
                         i);
    };
    auto skip_ws = [&] {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i])))
            ++i;
    };
    auto parse_uint = [&]() -> long long {
        if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
            fail("expected a digit");
        long long v = 0;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            if (v > (std::numeric_limits<long long>::max() - 9) / 10)
                fail("number too large");
            v = 10 * v + (s[i] - '0');
            ++i;
        }
        return v;
    };

    CycloProd z;
    bool any = false;
    while (true) {
        skip_ws();
        if (i >= s.size()) break;
        if (any && s[i] == '*') {
            ++i;
            skip_ws();
            if (i >= s.size()) fail("expected a factor after '*'");
        }
        // atom
        long long k = 0; // 0 encodes the neutral atom "1"
        if (s[i] == '1') {
            ++i;
        } else if (s[i] == '(') {
            ++i;
            if (i + 2 >= s.size() || s[i] != '1' || s[i + 1] != '-' ||
                s[i + 2] != 't')
                fail("expected \"1-t\" inside parentheses");
            i += 3;
            if (i < s.size() && s[i] == '^') {
                ++i;
                k = parse_uint();
                if (k < 1) fail("power of t must be positive");
            } else {
                k = 1;
            }
            if (i >= s.size() || s[i] != ')') fail("expected ')'");
            ++i;
        } else {
            fail("expected '1' or '('");
        }
        // optional exponent
        long long e = 1;
        if (i < s.size() && s[i] == '^') {
            ++i;
            bool neg = false;
            if (i < s.size() && s[i] == '-') {
                neg = true;
                ++i;
            }
            e = parse_uint();
            if (neg) e = -e;
        }
        if (k > 0) z.mul_factor(k, e);
        any = true;
    }
    if (!any) fail("expected a zeta expression");
    return z;
}

// First `order`+1 Taylor coefficients of the product at t = 0.  The result is
// exact; for these factor tables every coefficient is in fact an integer.
inline std::vector<Rat> expand_series(const CycloProd& a, int order) {
    if (order < 0) throw PreconditionError("series order must be >= 0");
    std::vector<Rat> c(static_cast<std::size_t>(order) + 1, Rat(0));
    c[0] = 1;
    for (const auto& [k, e] : a.factors()) {
        if (k > order) continue; // (1 - t^k) is 1 modulo t^(order+1)
        if (e > 0) {
            for (long long r = 0; r < e; ++r)
                for (long long j = order; j >= k; --j) c[j] -= c[j - k];
        } else {
            // multiply by 1/(1-t^k) = sum t^(j*k); forward pass accumulates
            for (long long r = 0; r < -e; ++r)
                for (long long j = k; j <= order; ++j) c[j] += c[j - k];
        }
    }
    return c;
}

} // namespace monozeta
