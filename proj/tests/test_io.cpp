/*
  test_io.cpp

  Serialization in the three formats, walk tables, golden-table
  loading, and the installed command-line binary driven as a
  subprocess: spec examples, exit codes, and data-directory override.
*/
#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sys/wait.h>

#include "ssv/formulas.hpp"
#include "ssv/io.hpp"

using namespace ssv;

namespace {

PolynomialHeader header_for(int r, int n, const Exponent& mu, const std::string& object,
                            const std::string& normalization) {
    PolynomialHeader h;
    h.r = r;
    h.n = n;
    h.mu = mu;
    h.object = object;
    h.normalization = normalization;
    return h;
}

struct CliResult {
    int code = -1;
    std::string out;
};

CliResult run_cli(const std::string& args, const std::string& env = "") {
    std::string cmd;
    if (!env.empty()) cmd += env + " ";
    cmd += std::string(SSV_BIN_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    CliResult res;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) res.out.append(buf, got);
    int status = pclose(pipe);
    res.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

} // namespace

TEST_CASE("io: text format matches the published presentation") {
    MetaplecticContext ctx(3, 1);
    CHECK(format_text(compute_E({0, 1, 0}, ctx)) == "x2 + ((k-1)(k+1)/(k^4 q - 1)) x1");
    CHECK(format_text(compute_P({0, 0, 0}, ctx)) == "k^6 + 2 k^4 + 2 k^2 + 1");
    CHECK(format_text(compute_E({0, 0, 0}, ctx)) == "1");
    CHECK(format_text(LaurentPolynomial::zero(3)) == "0");
    CHECK(format_text(compute_E_limit({0, 1, 0}, ctx, LimitDirection::zero)) ==
          "x2 + (-(k-1)(k+1)) x1");
}

TEST_CASE("io: coefficients are canceled and factored for display only") {
    MetaplecticContext ctx(3, 2);
    LaurentPolynomial f = compute_E({0, 0, 1}, ctx);
    std::string text = format_text(f);
    CHECK(text.find("(k-1)(k+1)") != std::string::npos);
    CHECK(text.find("--") == std::string::npos);
    LaurentPolynomial raw = compute_E({0, 0, 1}, ctx, Normalization::raw);
    CHECK(poly_equals(f * raw.coefficient({0, 0, 1}), raw, ctx.ghalf_rule()));
}

TEST_CASE("io: json round-trips exactly and is byte-stable") {
    for (auto [n, mu] : std::vector<std::pair<int, Exponent>>{
             {1, {0, 1, 0}}, {2, {0, 0, 1}}, {3, {-1, 0, 1}}}) {
        MetaplecticContext ctx(3, n);
        LaurentPolynomial f = compute_E(mu, ctx);
        std::string text = format_json(f, header_for(3, n, mu, "E", "monic"));
        ParsedPolynomial back = parse_polynomial_json(text);
        CHECK(back.poly == f);
        CHECK(back.header.r == 3);
        CHECK(back.header.n == n);
        CHECK(back.header.mu == mu);
        CHECK(back.header.object == "E");
        CHECK(back.header.normalization == "monic");
        CHECK(format_json(back.poly, back.header) == text);
    }

    MetaplecticContext ctx(3, 2);
    PolynomialHeader h = header_for(3, 2, {1, 1, 0}, "TuE", "raw");
    h.u = {2, 1, 3};
    LaurentPolynomial f = compute_TuE({1, 0, 2}, {1, 1, 0}, ctx);
    ParsedPolynomial back = parse_polynomial_json(format_json(f, h));
    CHECK(back.header.u == std::vector<int>{2, 1, 3});
    CHECK(back.poly == f);
}

TEST_CASE("io: malformed polynomial json is rejected") {
    CHECK_THROWS_AS(parse_polynomial_json("not json"), malformed_error);
    CHECK_THROWS_AS(parse_polynomial_json(R"({"r":2,"n":1,"mu":[0,1,0],"object":"E",)"
                                          R"("normalization":"monic","terms":[]})"),
                    malformed_error);
    CHECK_THROWS_AS(parse_polynomial_json(
                        R"({"r":2,"n":1,"mu":[0,1],"object":"E","normalization":"monic",)"
                        R"("terms":[{"exp":[1],"coeff":{"num":[],"den":[]}}]})"),
                    malformed_error);
}

TEST_CASE("io: latex mirrors the published table style") {
    MetaplecticContext ctx(3, 1);
    CHECK(format_latex(compute_E({0, 1, 0}, ctx), header_for(3, 1, {0, 1, 0}, "E", "monic")) ==
          "E_{(0,1,0)}^{(1)} = x_{2} + \\frac{x_{1}(k-1)(k+1)}{k^{4}q - 1}");
    LaurentPolynomial one = compute_E({0, 0, 0}, ctx);
    std::string p_limit =
        format_latex(one, header_for(3, 2, {0, 0, 0}, "P_qinf", "raw"));
    CHECK(p_limit.rfind("\\lim_{q \\to \\infty} P_{(0,0,0)}^{(2)} = ", 0) == 0);
    PolynomialHeader tu = header_for(3, 1, {0, 1, 0}, "TuE", "raw");
    tu.u = {2, 1, 3};
    CHECK(format_latex(one, tu).rfind("T_{(2,1,3)}E_{(0,1,0)}^{(1)} = ", 0) == 0);
}

TEST_CASE("io: walk tables enumerate every fold choice") {
    MetaplecticContext ctx(3, 1);
    WalkTable two = build_walk_table({0, 1, 0}, ctx);
    CHECK(two.rows.size() == 2);

    WalkTable four = build_walk_table({2, 0, 0}, ctx);
    CHECK(four.rows.size() == 4);
    CHECK(four.dec.word == std::vector<int>{0, 2});
    LaurentPolynomial sum(3);
    for (const WalkTableRow& row : four.rows) sum.add_term(row.exponent, row.coefficient);
    CHECK(poly_equals(sum, compute_E({2, 0, 0}, ctx, Normalization::raw), ctx.ghalf_rule()));

    std::string text = format_walk_table_text(four);
    CHECK(text.find("word = (0, 2)") != std::string::npos);
    CHECK(text.find("walks: 4") != std::string::npos);

    MetaplecticContext ctx2(3, 2);
    WalkTable trivial = build_walk_table({1, 0, 0}, ctx2);
    CHECK(trivial.rows.size() == 1);
    CHECK(trivial.dec.word.empty());
    CHECK(trivial.rows[0].exponent == Exponent{1, 0, 0});
    CHECK(scalar_equals(trivial.rows[0].coefficient, Scalar(1)));

    std::string json = format_walk_table_json(four);
    CHECK(json.find("\"steps\"") != std::string::npos);
    CHECK(json.find("\"fold-\"") != std::string::npos);
}

TEST_CASE("io: golden tables load and spot-match the computed polynomials") {
    GoldenTable e_table = load_golden_table(data_directory() / "golden_e.json");
    GoldenTable p_table = load_golden_table(data_directory() / "golden_p.json");
    CHECK(e_table.object == "E");
    CHECK(e_table.r == 3);
    CHECK(e_table.entries.size() == 50);
    CHECK(p_table.object == "P");
    CHECK(p_table.entries.size() == 20);

    for (const GoldenEntry& entry : e_table.entries) {
        if (!(entry.n == 4 && entry.mu == Exponent{0, 2, 0}) &&
            !(entry.n == 1 && entry.mu == Exponent{0, 1, 0}))
            continue;
        MetaplecticContext ctx(3, entry.n);
        CHECK(poly_equals(compute_E(entry.mu, ctx), golden_polynomial(entry, 3),
                          ctx.ghalf_rule()));
    }
    for (const GoldenEntry& entry : p_table.entries) {
        if (!(entry.n == 3 && entry.mu == Exponent{2, 0, 0})) continue;
        MetaplecticContext ctx(3, entry.n);
        CHECK(poly_equals(compute_P(entry.mu, ctx), golden_polynomial(entry, 3),
                          ctx.ghalf_rule()));
    }
}

TEST_CASE("cli: compute examples print the published texts") {
    CliResult e = run_cli("e --r 3 --n 1 --mu 0,1,0");
    CHECK(e.code == 0);
    CHECK(e.out == "x2 + ((k-1)(k+1)/(k^4 q - 1)) x1\n");

    CliResult p = run_cli("p --r 3 --n 1 --mu 0,0,0");
    CHECK(p.code == 0);
    CHECK(p.out == "k^6 + 2 k^4 + 2 k^2 + 1\n");

    CliResult j = run_cli("e --r 3 --n 2 --mu 2,0,0 --format json");
    CHECK(j.code == 0);
    ParsedPolynomial parsed = parse_polynomial_json(j.out);
    CHECK(parsed.header.object == "E");
    CHECK(parsed.header.n == 2);
    CHECK(parsed.poly == LaurentPolynomial::monomial({2, 0, 0}, Scalar(1)));

    CliResult l = run_cli("e --r 3 --n 1 --mu 0,1,0 --format latex");
    CHECK(l.code == 0);
    CHECK(l.out.rfind("E_{(0,1,0)}^{(1)} = ", 0) == 0);
}

TEST_CASE("cli: tu and limit round-trip through json") {
    CliResult tu = run_cli("tu --r 3 --n 1 --mu 0,1,0 --u 2,1,3 --format json");
    CHECK(tu.code == 0);
    ParsedPolynomial parsed = parse_polynomial_json(tu.out);
    CHECK(parsed.header.object == "TuE");
    CHECK(parsed.header.u == std::vector<int>{2, 1, 3});
    MetaplecticContext ctx(3, 1);
    CHECK(poly_equals(parsed.poly, compute_TuE({1, 0, 2}, {0, 1, 0}, ctx), ctx.ghalf_rule()));

    CliResult lim = run_cli("limit --r 3 --n 1 --mu 0,1,0 --direction q0");
    CHECK(lim.code == 0);
    CHECK(lim.out.find('q') == std::string::npos);

    CliResult plim = run_cli("limit --r 3 --n 2 --mu 1,1,0 --direction qinf --object p "
                             "--format json");
    CHECK(plim.code == 0);
    ParsedPolynomial pparsed = parse_polynomial_json(plim.out);
    CHECK(pparsed.header.object == "P_qinf");
    MetaplecticContext ctx2(3, 2);
    CHECK(poly_equals(pparsed.poly, compute_P_limit({1, 1, 0}, ctx2, LimitDirection::infinity),
                      ctx2.ghalf_rule()));
}

TEST_CASE("cli: walk tables list the decomposition and every walk") {
    CliResult w = run_cli("walks --r 3 --n 1 --mu 2,0,0");
    CHECK(w.code == 0);
    CHECK(w.out.find("word = (0, 2)") != std::string::npos);
    CHECK(w.out.find("walks: 4") != std::string::npos);

    CliResult j = run_cli("walks --r 3 --n 1 --mu 2,0,0 --format json");
    CHECK(j.code == 0);
    CHECK(j.out.find("\"walks\"") != std::string::npos);
}

TEST_CASE("cli: usage errors exit with code 1") {
    CHECK(run_cli("p --r 3 --n 1 --mu 0,1,0").code == 1);
    CHECK(run_cli("e --r 3 --n 1 --mu 0,1").code == 1);
    CHECK(run_cli("e --r 3 --n 1 --mu 0,1,x").code == 1);
    CHECK(run_cli("e --r 3 --n 1 --mu 0,1,0 --bogus").code == 1);
    CHECK(run_cli("walks --r 3 --n 1 --mu 2,0,0 --format latex").code == 1);
    CHECK(run_cli("tu --r 3 --n 1 --mu 0,1,0 --u 2,2,3").code == 1);
    CHECK(run_cli("").code == 1);
    CHECK(run_cli("--help").code == 0);
}

TEST_CASE("cli: verify reports per check and fails with exit 2 on a bad table") {
    CliResult ok = run_cli("verify --suite golden --n 1");
    CHECK(ok.code == 0);
    CHECK(ok.out.find("suite golden: 14/14 checks passed") != std::string::npos);

    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "ssv_doctored_data";
    fs::create_directories(dir);
    {
        std::ofstream e(dir / "golden_e.json");
        e << R"({"object":"E","r":3,"normalization":"monic","entries":[)"
          << R"({"mu":[0,1,0],"n":1,"terms":[{"exp":[0,1,0],"coeff":"1"},)"
          << R"({"exp":[1,0,0],"coeff":"k"}]}]})";
        std::ofstream p(dir / "golden_p.json");
        p << R"({"object":"P","r":3,"normalization":"raw","entries":[]})";
    }
    CliResult bad = run_cli("verify --suite golden", "SSV_DATA_DIR=" + dir.string());
    CHECK(bad.code == 2);
    CHECK(bad.out.find("FAIL golden E mu=(0,1,0) n=1") != std::string::npos);
    CHECK(bad.out.find("first failure:") != std::string::npos);
    fs::remove_all(dir);
}
