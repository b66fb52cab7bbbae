/*
  io.cpp

  Text rendering factors each coefficient for display only: the rational
  and monomial content come out of split_content, and factors of k-1 and
  k+1 are peeled off by exact division, detected by evaluating at
  k = 1 and k = -1. Arithmetic never depends on this factoring.

  JSON stores every coefficient as its literal numerator and denominator
  term lists, so parsing reproduces the exact internal representation.
*/
#include "ssv/io.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace ssv {

namespace {

using nlohmann::ordered_json;

// ------------------------------------------------------------ small strings

std::string int_list(const std::vector<int>& v, const char* sep) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += sep;
        out += std::to_string(v[i]);
    }
    return out;
}

std::string vector_text(const std::vector<int>& v) { return "(" + int_list(v, ", ") + ")"; }

std::vector<int> one_based(const Perm& u) {
    std::vector<int> v(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) v[i] = u[i] + 1;
    return v;
}

std::string x_power(int i, int e, bool latex) {
    std::string base = latex ? "x_{" + std::to_string(i + 1) + "}" : "x" + std::to_string(i + 1);
    if (e == 1) return base;
    if (latex) return base + "^{" + std::to_string(e) + "}";
    return base + "^" + std::to_string(e);
}

std::string x_monomial(const Exponent& e, bool latex) {
    std::string out;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!out.empty() && !latex) out += " ";
        out += x_power(static_cast<int>(i), e[i], latex);
    }
    return out;
}

// --------------------------------------------------------- display factoring

ParamPolynomial substitute_k_sign(const ParamPolynomial& p, int sign) {
    ParamPolynomial out;
    for (const auto& [m, c] : p.terms()) {
        std::vector<int> exps = m.e;
        int e = m.exponent(kVarK);
        if (e > 0) exps[kVarK] = 0;
        out.add_term(ParamMonomial(std::move(exps)), (sign < 0 && e % 2 != 0) ? Rational(-c) : c);
    }
    return out;
}

struct FactoredPoly {
    Rational content = 1;
    ParamMonomial mono;
    int km1 = 0;
    int kp1 = 0;
    ParamPolynomial rest = ParamPolynomial(1);
};

FactoredPoly factor_for_display(const ParamPolynomial& p) {
    FactoredPoly f;
    ContentSplit s = split_content(p);
    f.content = s.c;
    f.mono = s.m;
    ParamPolynomial cur = s.primitive;
    const ParamPolynomial km1 = ParamPolynomial::variable(kVarK) - ParamPolynomial(1);
    const ParamPolynomial kp1 = ParamPolynomial::variable(kVarK) + ParamPolynomial(1);
    while (!cur.is_constant() && substitute_k_sign(cur, 1).is_zero()) {
        cur = poly_divide_exact(cur, km1);
        ++f.km1;
    }
    while (!cur.is_constant() && substitute_k_sign(cur, -1).is_zero()) {
        cur = poly_divide_exact(cur, kp1);
        ++f.kp1;
    }
    ContentSplit again = split_content(cur);
    f.content *= again.c;
    f.mono = f.mono * again.m;
    f.rest = again.primitive;
    return f;
}

bool factoring_plain(const FactoredPoly& f) {
    return f.km1 == 0 && f.kp1 == 0 && f.rest.is_one();
}

std::string param_monomial_text(const ParamMonomial& m) {
    std::string out;
    for (std::size_t v = 0; v < m.e.size(); ++v) {
        if (m.e[v] == 0) continue;
        if (!out.empty()) out += " ";
        out += var_name(static_cast<int>(v));
        if (m.e[v] != 1) out += "^" + std::to_string(m.e[v]);
    }
    return out;
}

std::string power_text(const std::string& base, int e) {
    return e == 1 ? base : base + "^" + std::to_string(e);
}

// Product form with the sign stripped; "1" for an empty product.
std::string factored_body(const FactoredPoly& f) {
    std::string out;
    Rational ca = abs(f.content);
    if (ca != 1) out += ca.get_str();
    if (!f.mono.is_one()) {
        if (!out.empty()) out += " ";
        out += param_monomial_text(f.mono);
    }
    if (f.km1 > 0) out += power_text("(k-1)", f.km1);
    if (f.kp1 > 0) out += power_text("(k+1)", f.kp1);
    if (!f.rest.is_one()) out += "(" + to_string(f.rest) + ")";
    return out.empty() ? "1" : out;
}

// True when the body is a single parse factor, safe after a '/'.
bool body_is_atomic(const FactoredPoly& f) {
    if (!factoring_plain(f)) return false;
    int live = 0;
    for (int e : f.mono.e)
        if (e != 0) ++live;
    if (live > 1) return false;
    return live == 0 || abs(f.content) == 1;
}

// True when s is one parenthesized group, already safe after a '/'.
bool single_paren_group(const std::string& s) {
    if (s.size() < 2 || s.front() != '(' || s.back() != ')') return false;
    int depth = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '(') ++depth;
        else if (s[i] == ')' && --depth == 0) return i + 1 == s.size();
    }
    return false;
}

struct CoeffText {
    std::string standalone; // full expression, no outer parens
    std::string prefix;     // ready to sit in front of an x-monomial
};

CoeffText render_normalized(const Scalar& s) {
    FactoredPoly fn = factor_for_display(s.num());
    bool neg = fn.content < 0;
    std::string standalone = factored_body(fn);
    const bool fraction = !s.den().is_one();
    if (fraction) {
        FactoredPoly fd = factor_for_display(s.den());
        if (fd.content < 0) neg = !neg;
        std::string den = factored_body(fd);
        if (!body_is_atomic(fd) && !single_paren_group(den)) den = "(" + den + ")";
        standalone += "/" + den;
    }
    if (neg) standalone = "-" + standalone;

    CoeffText out;
    out.standalone = standalone;
    if (standalone == "1")
        out.prefix = "";
    else if (standalone == "-1")
        out.prefix = "-";
    else if (!neg && !fraction)
        out.prefix = standalone + " ";
    else
        out.prefix = "(" + standalone + ") ";
    return out;
}

CoeffText render_scalar(const Scalar& a) { return render_normalized(scalar_normalize(a)); }

// Catches the den == 1 case where the factored body is exactly the
// expanded rest: "k^6 + 2 k^4 + 2 k^2 + 1" standalone, parenthesized
// only when juxtaposed.
CoeffText render_scalar_full(const Scalar& a) {
    Scalar s = scalar_normalize(a);
    FactoredPoly fn = factor_for_display(s.num());
    if (s.den().is_one() && abs(fn.content) == 1 && fn.mono.is_one() && fn.km1 == 0 &&
        fn.kp1 == 0 && !fn.rest.is_one()) {
        CoeffText out;
        ParamPolynomial signed_rest = fn.content < 0 ? -fn.rest : fn.rest;
        out.standalone = to_string(signed_rest);
        out.prefix = "(" + out.standalone + ") ";
        return out;
    }
    return render_normalized(s);
}

// ------------------------------------------------------------------- LaTeX

std::string latex_var(int v) {
    if (v == kVarK) return "k";
    if (v == kVarQ) return "q";
    return "G_{" + std::to_string(v - 1) + "}";
}

std::string latex_param_monomial(const ParamMonomial& m, const Rational& cabs) {
    std::string out;
    if (cabs != 1 || m.is_one()) out += cabs.get_str();
    for (std::size_t v = 0; v < m.e.size(); ++v) {
        if (m.e[v] == 0) continue;
        out += latex_var(static_cast<int>(v));
        if (m.e[v] != 1) out += "^{" + std::to_string(m.e[v]) + "}";
    }
    return out;
}

std::string latex_param_poly(const ParamPolynomial& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto& [m, c] = *it;
        if (out.empty())
            out += (c < 0) ? "-" : "";
        else
            out += (c < 0) ? " - " : " + ";
        out += latex_param_monomial(m, abs(c));
    }
    return out;
}

std::string latex_power(const std::string& base, int e) {
    return e == 1 ? base : base + "^{" + std::to_string(e) + "}";
}

std::string latex_factored_body(const FactoredPoly& f) {
    std::string out;
    Rational ca = abs(f.content);
    if (ca != 1) out += ca.get_str();
    if (!f.mono.is_one()) out += latex_param_monomial(f.mono, 1);
    if (f.km1 > 0) out += latex_power("(k-1)", f.km1);
    if (f.kp1 > 0) out += latex_power("(k+1)", f.kp1);
    if (!f.rest.is_one()) out += "(" + latex_param_poly(f.rest) + ")";
    return out.empty() ? "1" : out;
}

std::string latex_tuple(const Exponent& mu) { return "(" + int_list(mu, ",") + ")"; }

std::string latex_label(const PolynomialHeader& h) {
    std::string base = "E_{" + latex_tuple(h.mu) + "}^{(" + std::to_string(h.n) + ")}";
    if (h.object == "P" || h.object == "P_q0" || h.object == "P_qinf")
        base = "P_{" + latex_tuple(h.mu) + "}^{(" + std::to_string(h.n) + ")}";
    if (h.object == "TuE") return "T_{" + latex_tuple(h.u) + "}" + base;
    if (h.object == "E_q0" || h.object == "P_q0") return "\\lim_{q \\to 0} " + base;
    if (h.object == "E_qinf" || h.object == "P_qinf") return "\\lim_{q \\to \\infty} " + base;
    return base;
}

// -------------------------------------------------------------------- JSON

int var_from_name(const std::string& name) {
    if (name == "k") return kVarK;
    if (name == "q") return kVarQ;
    if (name.size() > 1 && name[0] == 'G') {
        int j = std::stoi(name.substr(1));
        if (j >= 1) return g_var(j);
    }
    throw malformed_error("unknown parameter name \"" + name + "\"");
}

ordered_json param_poly_json(const ParamPolynomial& p) {
    ordered_json terms = ordered_json::array();
    for (const auto& [m, c] : p.terms()) {
        ordered_json pow = ordered_json::object();
        for (std::size_t v = 0; v < m.e.size(); ++v)
            if (m.e[v] != 0) pow[var_name(static_cast<int>(v))] = m.e[v];
        terms.push_back({{"c", c.get_str()}, {"pow", pow}});
    }
    return terms;
}

ParamPolynomial param_poly_from_json(const ordered_json& terms) {
    ParamPolynomial p;
    for (const auto& t : terms) {
        Rational c(t.at("c").get<std::string>());
        c.canonicalize();
        std::vector<int> exps;
        for (const auto& [name, e] : t.at("pow").items()) {
            int v = var_from_name(name);
            if (v >= static_cast<int>(exps.size())) exps.resize(v + 1, 0);
            exps[v] = e.get<int>();
        }
        p.add_term(ParamMonomial(std::move(exps)), c);
    }
    return p;
}

ordered_json scalar_json(const Scalar& a) {
    return {{"num", param_poly_json(a.num())}, {"den", param_poly_json(a.den())}};
}

Scalar scalar_from_json(const ordered_json& j) {
    return Scalar(param_poly_from_json(j.at("num")), param_poly_from_json(j.at("den")));
}

} // namespace

// --------------------------------------------------------------- text form

std::string format_text(const LaurentPolynomial& f) {
    if (f.is_zero()) return "0";
    std::string out;
    for (const auto& [e, c] : f.terms()) {
        std::string xs = x_monomial(e, false);
        std::string term;
        if (xs.empty()) {
            term = render_scalar_full(c).standalone;
        } else {
            term = render_scalar(c).prefix + xs;
        }
        out += out.empty() ? term : " + " + term;
    }
    return out;
}

// --------------------------------------------------------------- JSON form

std::string format_json(const LaurentPolynomial& f, const PolynomialHeader& header) {
    ordered_json root;
    root["r"] = header.r;
    root["n"] = header.n;
    root["mu"] = header.mu;
    root["object"] = header.object;
    root["normalization"] = header.normalization;
    if (!header.u.empty()) root["u"] = header.u;
    ordered_json terms = ordered_json::array();
    for (const auto& [e, c] : f.terms())
        terms.push_back({{"exp", e}, {"coeff", scalar_json(c)}});
    root["terms"] = terms;
    return root.dump(2);
}

ParsedPolynomial parse_polynomial_json(const std::string& text) {
    ordered_json root;
    try {
        root = ordered_json::parse(text);
    } catch (const std::exception& ex) {
        throw malformed_error(std::string("polynomial JSON: ") + ex.what());
    }
    ParsedPolynomial out{{}, LaurentPolynomial(1)};
    out.header.r = root.at("r").get<int>();
    out.header.n = root.at("n").get<int>();
    out.header.mu = root.at("mu").get<Exponent>();
    out.header.object = root.at("object").get<std::string>();
    out.header.normalization = root.at("normalization").get<std::string>();
    if (root.contains("u")) out.header.u = root.at("u").get<std::vector<int>>();
    if (out.header.r < 1 || static_cast<int>(out.header.mu.size()) != out.header.r)
        throw malformed_error("polynomial JSON: mu length disagrees with r");
    LaurentPolynomial poly(out.header.r);
    for (const auto& t : root.at("terms")) {
        Exponent e = t.at("exp").get<Exponent>();
        if (static_cast<int>(e.size()) != out.header.r)
            throw malformed_error("polynomial JSON: exponent length disagrees with r");
        poly.add_term(e, scalar_from_json(t.at("coeff")));
    }
    out.poly = poly;
    return out;
}

// -------------------------------------------------------------- LaTeX form

std::string format_latex(const LaurentPolynomial& f, const PolynomialHeader& header) {
    std::string body;
    if (f.is_zero()) body = "0";
    for (const auto& [e, c] : f.terms()) {
        const Scalar sc = scalar_normalize(c);
        FactoredPoly fn = factor_for_display(sc.num());
        bool neg = fn.content < 0;
        std::string xs = x_monomial(e, true);
        std::string piece;
        if (sc.den().is_one()) {
            std::string coeff = latex_factored_body(fn);
            if (coeff == "1" && !xs.empty())
                piece = xs;
            else
                piece = xs.empty() ? coeff : coeff + xs;
        } else {
            FactoredPoly fd = factor_for_display(sc.den());
            if (fd.content < 0) neg = !neg;
            std::string numbody = latex_factored_body(fn);
            if (!xs.empty()) numbody = (numbody == "1") ? xs : xs + numbody;
            const bool bare_rest = abs(fd.content) == 1 && fd.mono.is_one() && fd.km1 == 0 &&
                                   fd.kp1 == 0 && !fd.rest.is_one();
            std::string denbody = bare_rest ? latex_param_poly(fd.rest) : latex_factored_body(fd);
            piece = "\\frac{" + numbody + "}{" + denbody + "}";
        }
        if (body.empty())
            body = (neg ? "-" : "") + piece;
        else
            body += (neg ? " - " : " + ") + piece;
    }
    return latex_label(header) + " = " + body;
}

std::string format_polynomial(const LaurentPolynomial& f, const PolynomialHeader& header,
                              OutputFormat format) {
    switch (format) {
        case OutputFormat::text: return format_text(f);
        case OutputFormat::json: return format_json(f, header);
        case OutputFormat::latex: return format_latex(f, header);
    }
    throw malformed_error("unknown output format");
}

// -------------------------------------------------------------- walk tables

WalkTable build_walk_table(const Exponent& mu, const MetaplecticContext& ctx) {
    WalkTable table;
    table.r = ctx.rank();
    table.n = ctx.degree();
    table.mu = mu;
    table.dec = reduce_to_fundamental(mu, ctx);
    const AffineWeylElement start = AffineWeylElement::identity(ctx.rank());
    for (const AlcoveWalk& walk : enumerate_walks(start, table.dec.word, ctx)) {
        WalkTerm term = walk_coefficient(walk, table.dec, ctx);
        table.rows.push_back({walk, term.exponent, term.coefficient});
    }
    return table;
}

namespace {

std::string step_symbols(const AlcoveWalk& walk) {
    if (walk.word.empty()) return "-";
    std::string out;
    std::size_t pi = 0, ni = 0;
    for (std::size_t j = 0; j < walk.word.size(); ++j) {
        if (pi < walk.pos_folds.size() && walk.pos_folds[pi] == static_cast<int>(j)) {
            out += '+';
            ++pi;
        } else if (ni < walk.neg_folds.size() && walk.neg_folds[ni] == static_cast<int>(j)) {
            out += '-';
            ++ni;
        } else {
            out += '.';
        }
    }
    return out;
}

std::vector<std::string> step_words(const AlcoveWalk& walk) {
    std::vector<std::string> out;
    for (char c : step_symbols(walk)) {
        if (walk.word.empty()) break;
        out.push_back(c == '.' ? "cross" : (c == '+' ? "fold+" : "fold-"));
    }
    return out;
}

std::string affine_root_text(const AffineRoot& rho) {
    std::string out = vector_text(rho.finite);
    if (rho.level != 0) out += " + " + std::to_string(rho.level) + " delta";
    return out;
}

} // namespace

std::string format_walk_table_text(const WalkTable& table) {
    std::ostringstream out;
    out << "mu = " << vector_text(table.mu) << "  r = " << table.r << "  n = " << table.n
        << "\n";
    out << "lambda = " << vector_text(table.dec.lambda) << "\n";
    out << "word = " << vector_text(table.dec.word) << "\n";
    for (std::size_t j = 0; j < table.dec.betas.size(); ++j)
        out << "beta[" << j << "] = " << affine_root_text(table.dec.betas[j]) << "\n";
    out << "walks: " << table.rows.size() << "\n";
    for (std::size_t i = 0; i < table.rows.size(); ++i) {
        const WalkTableRow& row = table.rows[i];
        out << "  " << (i + 1) << ": steps = " << step_symbols(row.walk)
            << "  wt = " << vector_text(row.walk.wt)
            << "  phi = " << vector_text(one_based(row.walk.phi))
            << "  end = t" << vector_text(row.walk.end.translation)
            << vector_text(one_based(row.walk.end.perm))
            << "  exp = " << vector_text(row.exponent)
            << "  coeff = " << render_scalar_full(row.coefficient).standalone << "\n";
    }
    return out.str();
}

std::string format_walk_table_json(const WalkTable& table) {
    ordered_json root;
    root["r"] = table.r;
    root["n"] = table.n;
    root["mu"] = table.mu;
    root["lambda"] = table.dec.lambda;
    root["word"] = table.dec.word;
    ordered_json betas = ordered_json::array();
    for (const AffineRoot& beta : table.dec.betas)
        betas.push_back({{"finite", beta.finite}, {"level", beta.level}});
    root["betas"] = betas;
    ordered_json walks = ordered_json::array();
    for (const WalkTableRow& row : table.rows) {
        ordered_json w;
        w["steps"] = step_words(row.walk);
        w["wt"] = row.walk.wt;
        w["phi"] = one_based(row.walk.phi);
        w["end_translation"] = row.walk.end.translation;
        w["end_perm"] = one_based(row.walk.end.perm);
        w["exp"] = row.exponent;
        w["coeff"] = scalar_json(row.coefficient);
        walks.push_back(w);
    }
    root["walks"] = walks;
    return root.dump(2);
}

// ------------------------------------------------------------- golden data

std::filesystem::path data_directory() {
    if (const char* env = std::getenv("SSV_DATA_DIR")) return std::filesystem::path(env);
    return std::filesystem::path(SSV_DATA_DIR);
}

GoldenTable load_golden_table(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw malformed_error("cannot open golden table " + path.string());
    ordered_json root;
    try {
        root = ordered_json::parse(in);
    } catch (const std::exception& ex) {
        throw malformed_error("golden table " + path.string() + ": " + ex.what());
    }
    GoldenTable table;
    table.object = root.at("object").get<std::string>();
    table.r = root.at("r").get<int>();
    table.normalization = root.at("normalization").get<std::string>();
    for (const auto& e : root.at("entries")) {
        GoldenEntry entry;
        entry.mu = e.at("mu").get<Exponent>();
        entry.n = e.at("n").get<int>();
        if (static_cast<int>(entry.mu.size()) != table.r)
            throw malformed_error("golden table " + path.string() + ": mu length disagrees with r");
        for (const auto& t : e.at("terms")) {
            GoldenTerm term;
            term.exp = t.at("exp").get<Exponent>();
            term.coeff = t.at("coeff").get<std::string>();
            if (static_cast<int>(term.exp.size()) != table.r)
                throw malformed_error("golden table " + path.string() +
                                      ": exponent length disagrees with r");
            entry.terms.push_back(std::move(term));
        }
        table.entries.push_back(std::move(entry));
    }
    return table;
}

LaurentPolynomial golden_polynomial(const GoldenEntry& entry, int rank) {
    LaurentPolynomial out(rank);
    for (const GoldenTerm& term : entry.terms) out.add_term(term.exp, parse_scalar(term.coeff));
    return out;
}

} // namespace ssv
