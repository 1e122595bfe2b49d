#include <cctype>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "monozeta/cyclo_prod.hpp"
#include "monozeta/errors.hpp"
#include "monozeta/examples.hpp"
#include "monozeta/files.hpp"
#include "monozeta/germ_zeta.hpp"
#include "monozeta/localize.hpp"
#include "monozeta/poly.hpp"

namespace {

std::vector<std::string> split_names(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (ch == ',' || std::isspace(static_cast<unsigned char>(ch))) {
            if (!cur.empty()) out.push_back(std::move(cur));
            cur.clear();
        } else {
            cur += ch;
        }
    }
    if (!cur.empty()) out.push_back(std::move(cur));
    return out;
}

std::string rat_text(const monozeta::Rat& r) {
    std::string t = numerator(r).str();
    if (denominator(r) != 1) t += "/" + denominator(r).str();
    return t;
}

// series: 1 - t + 2*t^2 + O(t^N+1)
std::string series_line(const monozeta::CycloProd& z, int order) {
    std::vector<monozeta::Rat> c = monozeta::expand_series(z, order);
    std::string out = "series:";
    bool first = true;
    for (int k = 0; k <= order; ++k) {
        const monozeta::Rat& ck = c[static_cast<std::size_t>(k)];
        if (ck == 0) continue;
        monozeta::Rat mag = ck < 0 ? monozeta::Rat(-ck) : ck;
        out += first ? (ck < 0 ? " -" : " ") : (ck < 0 ? " - " : " + ");
        first = false;
        if (k == 0) {
            out += rat_text(mag);
        } else {
            std::string t = (k == 1) ? "t" : "t^" + std::to_string(k);
            out += (mag == 1) ? t : rat_text(mag) + "*" + t;
        }
    }
    if (first) out += " 0";
    out += " + O(t^" + std::to_string(order + 1) + ")";
    return out;
}

void warn_hyperplane_support(const char* part, const monozeta::Poly& p,
                             const std::vector<std::string>& vars) {
    if (p.is_zero()) return;
    std::vector<int> absent = monozeta::absent_variables(p);
    if (absent.empty()) return;
    std::string names;
    for (std::size_t i = 0; i < absent.size(); ++i) {
        if (i) names += ", ";
        names += vars[static_cast<std::size_t>(absent[i])];
    }
    std::cerr << "warning: " << part << " does not involve " << names
              << "; its support lies in a coordinate hyperplane section -- check that"
                 " the declared variables really are the intended ambient space\n";
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw monozeta::ParseError("cannot open file '" + path + "'", 0);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct SeriesOption {
    int order = -1;

    void attach(CLI::App* cmd) {
        cmd->add_option("--series", order, "also print the series expansion up to this order")
            ->check(CLI::Range(0, 10000));
    }
    void maybe_print(const monozeta::CycloProd& z) const {
        if (order >= 0) std::cout << series_line(z, order) << "\n";
    }
};

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact monodromy zeta functions of one-parameter polynomial families"};
    app.require_subcommand(1);

    // --- germ ---------------------------------------------------------------
    auto* germ = app.add_subcommand(
        "germ", "zeta function of a single germ at the origin from its Newton diagram");
    std::string germ_expr, germ_vars;
    SeriesOption germ_series;
    germ->add_option("expr", germ_expr,
                     "polynomial expression, or a path to a file containing one")
        ->required();
    germ->add_option("--vars", germ_vars,
                     "comma-separated variable names (default: order of first appearance)");
    germ_series.attach(germ);
    germ->callback([&] {
        std::string expr = germ_expr;
        std::error_code ec;
        if (std::filesystem::is_regular_file(germ_expr, ec)) expr = read_text_file(germ_expr);
        std::vector<std::string> vars =
            germ_vars.empty() ? monozeta::infer_variables(expr) : split_names(germ_vars);
        monozeta::Poly f = monozeta::parse_poly(expr, vars);
        warn_hyperplane_support("the germ", f, vars);
        monozeta::CycloProd z = monozeta::milnor_zeta(f);
        std::cout << monozeta::format_zeta(z) << "  chi=" << monozeta::degree(z) << "\n";
        germ_series.maybe_print(z);
    });

    // --- family -------------------------------------------------------------
    auto* family = app.add_subcommand(
        "family", "local zeta of the family f + s*g at the origin, from a family file");
    std::string family_path, hat_var;
    SeriesOption family_series;
    family->add_option("file", family_path, "family file: vars / f = ... / g = ... / [degree = ...]")
        ->required();
    family->add_option("--hat", hat_var,
                       "boundary-adjusted zeta at a point of the hyperplane {var = 0}");
    family_series.attach(family);
    family->callback([&] {
        std::ifstream in(family_path);
        if (!in) throw monozeta::ParseError("cannot open file '" + family_path + "'", 0);
        monozeta::FamilyFile ff = monozeta::parse_family_file(in);
        warn_hyperplane_support("f", ff.f, ff.vars);
        warn_hyperplane_support("g", ff.g, ff.vars);
        if (hat_var.empty()) {
            monozeta::LocalZetaResult r = monozeta::family_zeta_at_point(ff.family());
            std::cout << monozeta::format_zeta(r.zeta) << "  chi=" << r.chi
                      << "  case=" << monozeta::to_string(r.tag) << "\n";
            family_series.maybe_print(r.zeta);
        } else {
            int idx = -1;
            for (std::size_t v = 0; v < ff.vars.size(); ++v)
                if (ff.vars[v] == hat_var) idx = static_cast<int>(v);
            if (idx < 0)
                throw monozeta::ParseError("--hat: unknown variable '" + hat_var + "'", 0);
            monozeta::LocalZetaResult r = monozeta::hat_family_zeta(ff.family(), idx);
            std::cout << monozeta::format_zeta(r.zeta) << "  chi=" << r.chi << "\n";
            family_series.maybe_print(r.zeta);
        }
    });

    // --- integrate ----------------------------------------------------------
    auto* integrate = app.add_subcommand(
        "integrate", "assemble the global zeta from a stratification file");
    std::string strata_path;
    SeriesOption integrate_series;
    integrate->add_option("file", strata_path, "stratification file")->required();
    integrate_series.attach(integrate);
    integrate->callback([&] {
        std::ifstream in(strata_path);
        if (!in) throw monozeta::ParseError("cannot open file '" + strata_path + "'", 0);
        monozeta::StratifiedProblem p = monozeta::parse_strata(in);
        monozeta::CycloProd z = monozeta::assemble_global_zeta(p);
        std::cout << monozeta::format_zeta(z) << "  chi=" << monozeta::degree(z) << "\n";
        integrate_series.maybe_print(z);
    });

    // --- example ------------------------------------------------------------
    auto* example = app.add_subcommand(
        "example", "stratify and solve one of the built-in worked families (1-4)");
    int example_id = 0;
    long long ex_n = -1, ex_d0 = -1, ex_d = -1;
    SeriesOption example_series;
    example->add_option("id", example_id, "family number: 1..4")->required()
        ->check(CLI::Range(1, 4));
    example->add_option("--n", ex_n, "number of variables (families 3 and 4)");
    example->add_option("--d0", ex_d0, "degree of f (families 1, 3 and 4)");
    example->add_option("--d", ex_d, "degree of g resp. of l^d (families 1, 3 and 4)");
    example_series.attach(example);
    example->callback([&] {
        auto need = [&](bool n_used) {
            if (ex_d0 < 0 || ex_d < 0)
                throw monozeta::ParseError("example " + std::to_string(example_id) +
                                               " requires --d0 and --d",
                                           0);
            if (n_used && ex_n < 0)
                throw monozeta::ParseError(
                    "example " + std::to_string(example_id) + " requires --n", 0);
            if (!n_used && ex_n >= 0)
                throw monozeta::ParseError(
                    "example " + std::to_string(example_id) + " does not take --n", 0);
        };
        monozeta::ExampleReport rep;
        switch (example_id) {
            case 1:
                need(false);
                rep = monozeta::example_family_1(ex_d0, ex_d);
                break;
            case 2:
                if (ex_n >= 0 || ex_d0 >= 0 || ex_d >= 0)
                    throw monozeta::ParseError("example 2 takes no parameters", 0);
                rep = monozeta::example_family_2();
                break;
            case 3:
                need(true);
                rep = monozeta::example_family_3(static_cast<int>(ex_n), ex_d0, ex_d);
                break;
            default:
                need(true);
                rep = monozeta::example_family_4(static_cast<int>(ex_n), ex_d0, ex_d);
                break;
        }
        std::cout << monozeta::format_report(rep);
        example_series.maybe_print(rep.global());
    });

    // --- chi ----------------------------------------------------------------
    auto* chi = app.add_subcommand(
        "chi", "Euler characteristics of the standard projective strata");
    chi->require_subcommand(1);
    long long chi_d1 = 1, chi_d2 = 1;
    int chi_m = 0;

    auto* pspace = chi->add_subcommand("pspace", "chi of m-dimensional projective space");
    pspace->add_option("m", chi_m, "dimension")->required();
    pspace->callback([&] { std::cout << monozeta::chi_projective_space(chi_m) << "\n"; });

    auto* hyper = chi->add_subcommand(
        "hypersurface", "chi of a smooth degree-d hypersurface in m-dimensional space");
    hyper->add_option("d", chi_d1, "degree")->required();
    hyper->add_option("m", chi_m, "ambient dimension")->required();
    hyper->callback(
        [&] { std::cout << monozeta::chi_smooth_hypersurface(chi_d1, chi_m) << "\n"; });

    auto* compl_ = chi->add_subcommand(
        "complement",
        "chi of the complement of a transversal union of two smooth hypersurfaces");
    compl_->add_option("d1", chi_d1, "first degree")->required();
    compl_->add_option("d2", chi_d2, "second degree")->required();
    compl_->add_option("m", chi_m, "ambient dimension")->required();
    compl_->callback([&] {
        std::cout << monozeta::chi_transversal_complement(chi_d1, chi_d2, chi_m) << "\n";
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    } catch (const monozeta::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const monozeta::PreconditionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
