#pragma once

#include <algorithm>
#include <istream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "localize.hpp"
#include "poly.hpp"

namespace monozeta {

// A germ family read from a file:
//
//   vars <name> <name> ...
//   f = <polynomial>
//   g = <polynomial>
//   degree = <integer>        (optional)
//
// Blank lines and '#' comments may appear anywhere.  The optional degree
// records the projective degree the family is considered at; it must not be
// smaller than either part's total degree.
struct FamilyFile {
    std::vector<std::string> vars;
    Poly f{0};
    Poly g{0};
    std::optional<long long> degree;

    GermFamily family() const { return GermFamily(f, g); }
};

namespace detail {

inline bool valid_identifier(const std::string& name) {
    if (name.empty() || !ident_start(name[0])) return false;
    for (char ch : name)
        if (!ident_char(ch)) return false;
    return true;
}

} // namespace detail

inline FamilyFile parse_family_file(std::istream& in) {
    FamilyFile out;
    int got = 0;  // lines consumed: vars, f, g, degree
    std::string raw;
    std::size_t line_no = 0;
    std::size_t last_line = 0;

    auto fail = [](std::size_t n, const std::string& what) -> void {
        throw ParseError("line " + std::to_string(n) + ": " + what, n);
    };

    auto parse_part = [&](const std::string& line, const std::string& lhs) -> Poly {
        std::size_t eq = line.find('=');
        std::string head = detail::trim(line.substr(0, eq == std::string::npos ? line.size() : eq));
        if (eq == std::string::npos || head != lhs) fail(line_no, "expected '" + lhs + " = <polynomial>'");
        try {
            return parse_poly(line.substr(eq + 1), out.vars);
        } catch (const ParseError& e) {
            fail(line_no, e.what());
        }
        throw std::logic_error("unreachable");
    };

    while (std::getline(in, raw)) {
        ++line_no;
        std::string line = detail::trim(raw);
        if (line.empty() || line[0] == '#') continue;
        last_line = line_no;

        switch (got) {
            case 0: {
                std::istringstream ls(line);
                std::string kw;
                ls >> kw;
                if (kw != "vars") fail(line_no, "expected 'vars <names...>'");
                std::string name;
                while (ls >> name) {
                    if (!detail::valid_identifier(name))
                        fail(line_no, "invalid variable name '" + name + "'");
                    for (const std::string& prev : out.vars)
                        if (prev == name)
                            fail(line_no, "duplicate variable name '" + name + "'");
                    out.vars.push_back(name);
                }
                if (out.vars.empty()) fail(line_no, "no variables declared");
                break;
            }
            case 1:
                out.f = parse_part(line, "f");
                break;
            case 2:
                out.g = parse_part(line, "g");
                break;
            case 3: {
                std::size_t eq = line.find('=');
                std::string head =
                    detail::trim(line.substr(0, eq == std::string::npos ? line.size() : eq));
                if (eq == std::string::npos || head != "degree")
                    fail(line_no, "expected 'degree = <integer>'");
                std::string val = detail::trim(line.substr(eq + 1));
                try {
                    std::size_t used = 0;
                    out.degree = std::stoll(val, &used);
                    if (used != val.size()) throw std::invalid_argument("");
                } catch (const std::exception&) {
                    fail(line_no, "invalid integer in 'degree ='");
                }
                break;
            }
            default:
                fail(line_no, "unexpected extra line");
        }
        ++got;
    }

    if (got < 3) fail(line_no ? line_no : 1, "incomplete family file: need vars, f and g lines");
    if (out.degree) {
        long long need = std::max(out.f.total_degree(), out.g.total_degree());
        if (*out.degree < need)
            fail(last_line, "declared degree " + std::to_string(*out.degree) +
                                " is below the family's total degree " + std::to_string(need));
    }
    return out;
}

inline FamilyFile parse_family_file(const std::string& text) {
    std::istringstream in(text);
    return parse_family_file(in);
}

// Variable names of an inline expression in order of first appearance, for
// callers that do not declare them explicitly.
inline std::vector<std::string> infer_variables(const std::string& expr) {
    std::vector<std::string> vars;
    std::size_t i = 0;
    while (i < expr.size()) {
        if (detail::ident_start(expr[i])) {
            std::size_t start = i;
            while (i < expr.size() && detail::ident_char(expr[i])) ++i;
            std::string name = expr.substr(start, i - start);
            bool known = false;
            for (const std::string& v : vars)
                if (v == name) known = true;
            if (!known) vars.push_back(name);
        } else {
            ++i;
        }
    }
    return vars;
}

} // namespace monozeta
