/*
  ssv.cpp

  Command-line surface. Subcommands: e, p, tu, limit, walks, verify.

  Exit codes: 0 success, 1 usage error, 2 verification failure,
  3 internal inconsistency.
*/
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ssv/formulas.hpp"
#include "ssv/io.hpp"
#include "ssv/verify.hpp"

namespace {

using namespace ssv;

std::vector<int> parse_int_list(const std::string& text, const char* what) {
    std::vector<int> out;
    std::stringstream stream(text);
    std::string item;
    while (std::getline(stream, item, ',')) {
        try {
            std::size_t pos = 0;
            int value = std::stoi(item, &pos);
            if (pos != item.size()) throw std::invalid_argument(item);
            out.push_back(value);
        } catch (const std::exception&) {
            throw malformed_error(std::string(what) + ": \"" + item +
                                  "\" is not an integer");
        }
    }
    if (out.empty()) throw malformed_error(std::string(what) + ": empty vector");
    return out;
}

struct Common {
    int r = 0;
    int n = 0;
    std::string mu_text;
    std::string format = "text";
    std::string normalization = "monic";
    bool no_reduce = false;
};

void add_common(CLI::App* cmd, Common& c) {
    cmd->add_option("--r", c.r, "rank")->required();
    cmd->add_option("--n", c.n, "metaplectic degree")->required();
    cmd->add_option("--mu", c.mu_text, "weight, comma separated")->required();
    cmd->add_flag("--no-reduce-ghalf", c.no_reduce,
                  "keep G_{n/2} powers unreduced for even n");
}

void add_format(CLI::App* cmd, Common& c, bool latex) {
    std::vector<std::string> allowed = {"text", "json"};
    if (latex) allowed.push_back("latex");
    cmd->add_option("--format", c.format, "output format")
        ->check(CLI::IsMember(allowed));
}

void add_normalization(CLI::App* cmd, Common& c) {
    cmd->add_option("--normalization", c.normalization, "monic or raw")
        ->check(CLI::IsMember({"monic", "raw"}));
}

MetaplecticContext make_context(const Common& c) {
    if (c.r < 1) throw malformed_error("rank must be positive");
    if (c.n < 1) throw malformed_error("metaplectic degree must be positive");
    return MetaplecticContext(c.r, c.n, !c.no_reduce);
}

Exponent parse_mu(const Common& c) {
    Exponent mu = parse_int_list(c.mu_text, "mu");
    if (static_cast<int>(mu.size()) != c.r)
        throw malformed_error("mu must have exactly r entries");
    return mu;
}

OutputFormat parse_output_format(const std::string& text) {
    if (text == "text") return OutputFormat::text;
    if (text == "json") return OutputFormat::json;
    return OutputFormat::latex;
}

PolynomialHeader make_header(const Common& c, const Exponent& mu, const std::string& object,
                             const std::string& normalization) {
    PolynomialHeader h;
    h.r = c.r;
    h.n = c.n;
    h.mu = mu;
    h.object = object;
    h.normalization = normalization;
    return h;
}

void emit(const LaurentPolynomial& f, const PolynomialHeader& h, const Common& c) {
    std::cout << format_polynomial(f, h, parse_output_format(c.format)) << "\n";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Exact calculator for the metaplectic polynomials: nonsymmetric E,\n"
        "permuted-start variants, the symmetrized P, their q -> 0 and\n"
        "q -> infinity degenerations, alcove walk tables, and batch\n"
        "verification suites."};
    app.require_subcommand(1);

    Common ce, cp, ctu, clim, cw;
    std::string u_text, direction, limit_object = "e";
    std::string suite;
    std::vector<int> verify_ranks, verify_degrees;
    int exit_code = 0;

    CLI::App* cmd_e = app.add_subcommand("e", "nonsymmetric polynomial E");
    add_common(cmd_e, ce);
    add_format(cmd_e, ce, true);
    add_normalization(cmd_e, ce);
    cmd_e->callback([&] {
        MetaplecticContext ctx = make_context(ce);
        Exponent mu = parse_mu(ce);
        Normalization norm =
            ce.normalization == "raw" ? Normalization::raw : Normalization::monic;
        emit(compute_E(mu, ctx, norm), make_header(ce, mu, "E", ce.normalization), ce);
    });

    CLI::App* cmd_p = app.add_subcommand("p", "symmetrized polynomial P, dominant mu");
    add_common(cmd_p, cp);
    add_format(cmd_p, cp, true);
    cmd_p->callback([&] {
        MetaplecticContext ctx = make_context(cp);
        Exponent mu = parse_mu(cp);
        emit(compute_P(mu, ctx), make_header(cp, mu, "P", "raw"), cp);
    });

    CLI::App* cmd_tu = app.add_subcommand("tu", "walk sum started from the permutation u");
    add_common(cmd_tu, ctu);
    add_format(cmd_tu, ctu, true);
    cmd_tu->add_option("--u", u_text, "permutation of 1..r, one-line, comma separated")
        ->required();
    cmd_tu->callback([&] {
        MetaplecticContext ctx = make_context(ctu);
        Exponent mu = parse_mu(ctu);
        std::vector<int> one_based = parse_int_list(u_text, "u");
        if (static_cast<int>(one_based.size()) != ctu.r)
            throw malformed_error("u must have exactly r entries");
        Perm u(ctu.r);
        std::vector<char> seen(ctu.r, 0);
        for (int i = 0; i < ctu.r; ++i) {
            int v = one_based[i] - 1;
            if (v < 0 || v >= ctu.r || seen[v])
                throw malformed_error("u must be a permutation of 1..r");
            seen[v] = 1;
            u[i] = v;
        }
        PolynomialHeader h = make_header(ctu, mu, "TuE", "raw");
        h.u = one_based;
        emit(compute_TuE(u, mu, ctx), h, ctu);
    });

    CLI::App* cmd_limit = app.add_subcommand("limit", "q -> 0 or q -> infinity degeneration");
    add_common(cmd_limit, clim);
    add_format(cmd_limit, clim, true);
    add_normalization(cmd_limit, clim);
    cmd_limit->add_option("--direction", direction, "q0 or qinf")
        ->required()
        ->check(CLI::IsMember({"q0", "qinf"}));
    cmd_limit->add_option("--object", limit_object, "e or p")
        ->check(CLI::IsMember({"e", "p"}));
    cmd_limit->callback([&] {
        MetaplecticContext ctx = make_context(clim);
        Exponent mu = parse_mu(clim);
        LimitDirection dir =
            direction == "q0" ? LimitDirection::zero : LimitDirection::infinity;
        const char* tag = direction == "q0" ? "_q0" : "_qinf";
        if (limit_object == "p") {
            emit(compute_P_limit(mu, ctx, dir),
                 make_header(clim, mu, std::string("P") + tag, "raw"), clim);
        } else {
            Normalization norm =
                clim.normalization == "raw" ? Normalization::raw : Normalization::monic;
            emit(compute_E_limit(mu, ctx, dir, norm),
                 make_header(clim, mu, std::string("E") + tag, clim.normalization), clim);
        }
    });

    CLI::App* cmd_walks = app.add_subcommand("walks", "alcove walk table for mu");
    add_common(cmd_walks, cw);
    add_format(cmd_walks, cw, false);
    cmd_walks->callback([&] {
        MetaplecticContext ctx = make_context(cw);
        Exponent mu = parse_mu(cw);
        WalkTable table = build_walk_table(mu, ctx);
        if (cw.format == "json")
            std::cout << format_walk_table_json(table) << "\n";
        else
            std::cout << format_walk_table_text(table);
    });

    CLI::App* cmd_verify = app.add_subcommand("verify", "run a batch check suite");
    cmd_verify->add_option("--suite", suite, "golden, relations, oracle, limits, order, or all")
        ->required()
        ->check(CLI::IsMember({"golden", "relations", "oracle", "limits", "order", "all"}));
    cmd_verify->add_option("--r", verify_ranks, "restrict the sweep ranks")
        ->delimiter(',');
    cmd_verify->add_option("--n", verify_degrees, "restrict the sweep degrees")
        ->delimiter(',');
    cmd_verify->callback([&] {
        SweepOptions options;
        options.ranks = verify_ranks;
        options.degrees = verify_degrees;
        SuiteReport report = run_suite(suite, options);
        for (const CheckResult& check : report.checks) {
            if (check.passed)
                std::cout << "ok " << check.name << "\n";
            else
                std::cout << "FAIL " << check.name << ": " << check.detail << "\n";
        }
        std::cout << "suite " << report.suite << ": " << report.passed_count() << "/"
                  << report.checks.size() << " checks passed\n";
        if (const CheckResult* failure = report.first_failure()) {
            std::cout << "first failure: " << failure->name << ": " << failure->detail
                      << "\n";
            exit_code = 2;
        }
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    } catch (const malformed_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const error& e) {
        std::cerr << "internal inconsistency: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "internal inconsistency: " << e.what() << "\n";
        return 3;
    }
    return exit_code;
}
