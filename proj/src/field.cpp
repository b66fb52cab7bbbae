/*
  field.cpp

  Implementation of the coefficient field: sparse multivariate
  polynomials over Q, fractions, gcd normalization, q-limits,
  substitution, and the expression parser.
*/
#include "ssv/field.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace ssv {

std::string var_name(int var) {
    if (var == kVarK) return "k";
    if (var == kVarQ) return "q";
    return "G" + std::to_string(var - 1);
}

// ---------------------------------------------------------------- monomials

ParamMonomial::ParamMonomial(std::vector<int> exps) : e(std::move(exps)) {
    for (int x : e)
        if (x < 0) throw malformed_error("negative exponent in parameter monomial");
    while (!e.empty() && e.back() == 0) e.pop_back();
}

ParamMonomial ParamMonomial::var(int v, int exp) {
    if (v < 0) throw malformed_error("bad variable index");
    if (exp < 0) throw malformed_error("negative exponent in parameter monomial");
    ParamMonomial m;
    if (exp > 0) {
        m.e.assign(static_cast<std::size_t>(v) + 1, 0);
        m.e[v] = exp;
    }
    return m;
}

int ParamMonomial::total_degree() const {
    int d = 0;
    for (int x : e) d += x;
    return d;
}

ParamMonomial ParamMonomial::operator*(const ParamMonomial& o) const {
    ParamMonomial m;
    m.e.resize(std::max(e.size(), o.e.size()), 0);
    for (std::size_t i = 0; i < m.e.size(); ++i)
        m.e[i] = exponent(static_cast<int>(i)) + o.exponent(static_cast<int>(i));
    while (!m.e.empty() && m.e.back() == 0) m.e.pop_back();
    return m;
}

ParamMonomial ParamMonomial::lcm(const ParamMonomial& o) const {
    ParamMonomial m;
    m.e.resize(std::max(e.size(), o.e.size()), 0);
    for (std::size_t i = 0; i < m.e.size(); ++i)
        m.e[i] = std::max(exponent(static_cast<int>(i)), o.exponent(static_cast<int>(i)));
    while (!m.e.empty() && m.e.back() == 0) m.e.pop_back();
    return m;
}

bool ParamMonomial::divides(const ParamMonomial& o) const {
    for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i] > o.exponent(static_cast<int>(i))) return false;
    return true;
}

ParamMonomial ParamMonomial::divide_by(const ParamMonomial& o) const {
    if (!o.divides(*this)) throw malformed_error("monomial division with remainder");
    ParamMonomial m;
    m.e.resize(e.size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i)
        m.e[i] = e[i] - o.exponent(static_cast<int>(i));
    while (!m.e.empty() && m.e.back() == 0) m.e.pop_back();
    return m;
}

bool GradedLexLess::operator()(const ParamMonomial& a, const ParamMonomial& b) const {
    int da = a.total_degree(), db = b.total_degree();
    if (da != db) return da < db;
    std::size_t len = std::max(a.e.size(), b.e.size());
    for (std::size_t i = 0; i < len; ++i) {
        int xa = a.exponent(static_cast<int>(i)), xb = b.exponent(static_cast<int>(i));
        if (xa != xb) return xa < xb;
    }
    return false;
}

// -------------------------------------------------------------- polynomials

ParamPolynomial::ParamPolynomial(const Rational& c) {
    if (c != 0) terms_.emplace(ParamMonomial::one(), c);
}

ParamPolynomial ParamPolynomial::variable(int v, int exp) {
    return monomial(ParamMonomial::var(v, exp), Rational(1));
}

ParamPolynomial ParamPolynomial::monomial(const ParamMonomial& m, const Rational& c) {
    ParamPolynomial p;
    if (c != 0) p.terms_.emplace(m, c);
    return p;
}

bool ParamPolynomial::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first.is_one() && terms_.begin()->second == 1;
}

bool ParamPolynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

const std::pair<const ParamMonomial, Rational>& ParamPolynomial::leading() const {
    if (terms_.empty()) throw malformed_error("leading term of zero polynomial");
    return *terms_.rbegin();
}

int ParamPolynomial::degree_in(int v) const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.exponent(v));
    return d;
}

int ParamPolynomial::order_in(int v) const {
    if (terms_.empty()) return 0;
    int d = -1;
    for (const auto& [m, c] : terms_) {
        int x = m.exponent(v);
        if (d < 0 || x < d) d = x;
    }
    return d;
}

int ParamPolynomial::max_var() const {
    int v = -1;
    for (const auto& [m, c] : terms_)
        for (std::size_t i = 0; i < m.e.size(); ++i)
            if (m.e[i] > 0) v = std::max(v, static_cast<int>(i));
    return v;
}

void ParamPolynomial::add_term(const ParamMonomial& m, const Rational& c) {
    if (c == 0) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

ParamPolynomial ParamPolynomial::operator+(const ParamPolynomial& o) const {
    ParamPolynomial r = *this;
    r += o;
    return r;
}

ParamPolynomial& ParamPolynomial::operator+=(const ParamPolynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

ParamPolynomial ParamPolynomial::operator-(const ParamPolynomial& o) const {
    ParamPolynomial r = *this;
    r -= o;
    return r;
}

ParamPolynomial& ParamPolynomial::operator-=(const ParamPolynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

ParamPolynomial ParamPolynomial::operator-() const {
    ParamPolynomial r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

ParamPolynomial ParamPolynomial::operator*(const ParamPolynomial& o) const {
    ParamPolynomial r;
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_) r.add_term(ma * mb, ca * cb);
    return r;
}

ParamPolynomial ParamPolynomial::operator*(const Rational& c) const {
    ParamPolynomial r;
    if (c == 0) return r;
    for (const auto& [m, x] : terms_) r.terms_.emplace(m, x * c);
    return r;
}

ParamPolynomial ParamPolynomial::pow(int e) const {
    if (e < 0) throw malformed_error("negative power of a polynomial");
    ParamPolynomial r(Rational(1)), base = *this;
    while (e > 0) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

ParamPolynomial ParamPolynomial::reduce(const GHalfRule& rule) const {
    if (!rule.enabled()) return *this;
    ParamPolynomial r;
    for (const auto& [m, c] : terms_) {
        ParamMonomial mm = m;
        if (rule.var < static_cast<int>(mm.e.size())) {
            mm.e[rule.var] %= 2;
            while (!mm.e.empty() && mm.e.back() == 0) mm.e.pop_back();
        }
        r.add_term(mm, c);
    }
    return r;
}

ParamPolynomial ParamPolynomial::coefficient_of(int v, int e) const {
    ParamPolynomial r;
    for (const auto& [m, c] : terms_) {
        if (m.exponent(v) != e) continue;
        ParamMonomial mm = m;
        if (v < static_cast<int>(mm.e.size())) {
            mm.e[v] = 0;
            while (!mm.e.empty() && mm.e.back() == 0) mm.e.pop_back();
        }
        r.add_term(mm, c);
    }
    return r;
}

// ------------------------------------------------------------ gcd machinery

Rational poly_content(const ParamPolynomial& a) {
    if (a.is_zero()) return Rational(0);
    mpz_class num_gcd(0), den_lcm(1);
    for (const auto& [m, c] : a.terms()) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    }
    Rational content(num_gcd, den_lcm);
    content.canonicalize();
    if (a.leading().second < 0) content = -content;
    return content;
}

ContentSplit split_content(const ParamPolynomial& p) {
    if (p.is_zero()) return {Rational(0), ParamMonomial::one(), ParamPolynomial()};
    Rational c = poly_content(p);
    std::vector<int> mins;
    bool first = true;
    for (const auto& [m, x] : p.terms()) {
        if (first) {
            mins = m.e;
            first = false;
            continue;
        }
        if (m.e.size() < mins.size()) mins.resize(m.e.size());
        for (std::size_t v = 0; v < mins.size(); ++v)
            mins[v] = std::min(mins[v], m.e[v]);
    }
    ParamMonomial mono(std::move(mins));
    ParamPolynomial prim;
    for (const auto& [m, x] : p.terms()) prim.add_term(m.divide_by(mono), x / c);
    return {c, mono, prim};
}

namespace {

// View of p as a univariate polynomial in v with polynomial coefficients.
std::vector<ParamPolynomial> coeffs_in(const ParamPolynomial& p, int v) {
    std::vector<ParamPolynomial> c(static_cast<std::size_t>(p.degree_in(v)) + 1);
    for (const auto& [m, x] : p.terms()) {
        ParamMonomial mm = m;
        int e = mm.exponent(v);
        if (v < static_cast<int>(mm.e.size())) {
            mm.e[v] = 0;
            while (!mm.e.empty() && mm.e.back() == 0) mm.e.pop_back();
        }
        c[e].add_term(mm, x);
    }
    return c;
}

ParamPolynomial assemble(const std::vector<ParamPolynomial>& c, int v) {
    ParamPolynomial p;
    for (std::size_t e = 0; e < c.size(); ++e) {
        if (c[e].is_zero()) continue;
        p += c[e] * ParamPolynomial::variable(v, static_cast<int>(e));
    }
    return p;
}

int top_degree(const std::vector<ParamPolynomial>& c) {
    for (int e = static_cast<int>(c.size()) - 1; e >= 0; --e)
        if (!c[e].is_zero()) return e;
    return -1;
}

// Pseudo-remainder of a by b in the variable v (b nonzero in v).
ParamPolynomial pseudo_rem(ParamPolynomial a, const ParamPolynomial& b, int v) {
    int db = b.degree_in(v);
    ParamPolynomial lcb = b.coefficient_of(v, db);
    while (!a.is_zero() && a.degree_in(v) >= db) {
        int da = a.degree_in(v);
        ParamPolynomial lca = a.coefficient_of(v, da);
        a = a * lcb - b * (lca * ParamPolynomial::variable(v, da - db));
    }
    return a;
}

// Divides every coefficient (in v) by their gcd; returns the primitive part.
ParamPolynomial primitive_part(const ParamPolynomial& p, int v) {
    if (p.is_zero()) return p;
    auto c = coeffs_in(p, v);
    ParamPolynomial g;
    for (const auto& ci : c)
        if (!ci.is_zero()) g = poly_gcd(g, ci);
    return poly_divide_exact(p, g);
}

} // namespace

ParamPolynomial poly_divide_exact(const ParamPolynomial& a, const ParamPolynomial& b) {
    if (b.is_zero()) throw malformed_error("division by the zero polynomial");
    ParamPolynomial rem = a, q;
    const auto& [lm, lc] = b.leading();
    while (!rem.is_zero()) {
        const auto& [rm, rc] = rem.leading();
        if (!lm.divides(rm)) throw not_divisible_error("polynomial division left a remainder");
        ParamPolynomial t = ParamPolynomial::monomial(rm.divide_by(lm), rc / lc);
        q += t;
        rem -= t * b;
    }
    return q;
}

ParamPolynomial poly_gcd(const ParamPolynomial& a, const ParamPolynomial& b) {
    auto make_canonical = [](const ParamPolynomial& p) {
        if (p.is_zero()) return p;
        Rational c = poly_content(p);
        return p * (1 / c);
    };
    if (a.is_zero()) return make_canonical(b);
    if (b.is_zero()) return make_canonical(a);
    if (a.is_constant() || b.is_constant()) return ParamPolynomial(Rational(1));

    int v = std::max(a.max_var(), b.max_var());
    int da = a.degree_in(v), db = b.degree_in(v);
    if (da == 0 || db == 0) {
        // v is live in only one argument; gcd divides the other's content in v.
        auto ca = coeffs_in(a, v);
        auto cb = coeffs_in(b, v);
        ParamPolynomial g;
        for (const auto& ci : ca) if (!ci.is_zero()) g = poly_gcd(g, ci);
        ParamPolynomial h;
        for (const auto& ci : cb) if (!ci.is_zero()) h = poly_gcd(h, ci);
        return poly_gcd(g, h);
    }

    auto ca = coeffs_in(a, v);
    auto cb = coeffs_in(b, v);
    ParamPolynomial cont_a, cont_b;
    for (const auto& ci : ca) if (!ci.is_zero()) cont_a = poly_gcd(cont_a, ci);
    for (const auto& ci : cb) if (!ci.is_zero()) cont_b = poly_gcd(cont_b, ci);
    ParamPolynomial cont = poly_gcd(cont_a, cont_b);

    ParamPolynomial pa = poly_divide_exact(a, cont_a);
    ParamPolynomial pb = poly_divide_exact(b, cont_b);
    if (pa.degree_in(v) < pb.degree_in(v)) std::swap(pa, pb);

    while (true) {
        int deg_b = pb.degree_in(v);
        ParamPolynomial r = pseudo_rem(pa, pb, v);
        if (r.is_zero()) {
            ParamPolynomial g = primitive_part(pb, v);
            g = make_canonical(g * cont);
            return g.leading().second < 0 ? -g : g;
        }
        if (r.degree_in(v) == 0 || deg_b == 0) {
            ParamPolynomial g = make_canonical(cont);
            return g.leading().second < 0 ? -g : g;
        }
        pa = pb;
        pb = primitive_part(r, v);
    }
}

// ------------------------------------------------------------------ scalars

Scalar::Scalar(ParamPolynomial num, ParamPolynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw malformed_error("scalar with zero denominator");
}

Scalar Scalar::variable(int v, int exp) {
    if (exp >= 0) return Scalar(ParamPolynomial::variable(v, exp));
    return Scalar(ParamPolynomial(Rational(1)), ParamPolynomial::variable(v, -exp));
}

Scalar Scalar::operator+(const Scalar& o) const {
    if (num_.is_zero()) return o;
    if (o.num_.is_zero()) return *this;
    if (den_ == o.den_) return Scalar(num_ + o.num_, den_);
    return Scalar(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator-() const { return Scalar(-num_, den_); }

Scalar Scalar::operator*(const Scalar& o) const {
    if (num_.is_zero() || o.num_.is_zero()) return Scalar();
    return Scalar(num_ * o.num_, den_ * o.den_);
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

Scalar& Scalar::operator+=(const Scalar& o) {
    *this = *this + o;
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    *this = *this * o;
    return *this;
}

Scalar Scalar::inverse() const {
    if (num_.is_zero()) throw malformed_error("inverse of zero scalar");
    return Scalar(den_, num_);
}

Scalar Scalar::pow(int e) const {
    if (e < 0) return inverse().pow(-e);
    return Scalar(num_.pow(e), den_.pow(e));
}

bool scalar_equals(const Scalar& a, const Scalar& b, const GHalfRule& rule) {
    ParamPolynomial d = a.num() * b.den() - b.num() * a.den();
    return d.reduce(rule).is_zero();
}

Scalar scalar_normalize(const Scalar& a, const GHalfRule& rule) {
    ParamPolynomial num = a.num().reduce(rule);
    ParamPolynomial den = a.den().reduce(rule);
    if (den.is_zero()) throw malformed_error("scalar with zero denominator");
    if (num.is_zero()) return Scalar();
    ParamPolynomial g = poly_gcd(num, den);
    num = poly_divide_exact(num, g);
    den = poly_divide_exact(den, g);
    Rational c = poly_content(den);
    num = num * (1 / c);
    den = den * (1 / c);
    return Scalar(std::move(num), std::move(den));
}

Scalar scalar_limit_q(const Scalar& a, LimitDirection direction) {
    if (a.is_zero()) return Scalar();
    if (direction == LimitDirection::zero) {
        int on = a.num().order_in(kVarQ);
        int od = a.den().order_in(kVarQ);
        if (on < od) throw divergent_limit_error("pole at q=0");
        if (on > od) return Scalar();
        return Scalar(a.num().coefficient_of(kVarQ, on), a.den().coefficient_of(kVarQ, od));
    }
    int dn = a.num().degree_in(kVarQ);
    int dd = a.den().degree_in(kVarQ);
    if (dn > dd) throw divergent_limit_error("pole at q=infinity");
    if (dn < dd) return Scalar();
    return Scalar(a.num().coefficient_of(kVarQ, dn), a.den().coefficient_of(kVarQ, dd));
}

namespace {

Scalar substitute_poly(const ParamPolynomial& p, const std::map<int, Scalar>& bindings) {
    Scalar acc;
    for (const auto& [m, c] : p.terms()) {
        Scalar t{Rational(c)};
        for (std::size_t v = 0; v < m.e.size(); ++v) {
            if (m.e[v] == 0) continue;
            auto it = bindings.find(static_cast<int>(v));
            if (it == bindings.end())
                t *= Scalar::variable(static_cast<int>(v), m.e[v]);
            else
                t *= it->second.pow(m.e[v]);
        }
        acc += t;
    }
    return acc;
}

} // namespace

Scalar scalar_substitute(const Scalar& a, const std::map<int, Scalar>& bindings) {
    Scalar num = substitute_poly(a.num(), bindings);
    Scalar den = substitute_poly(a.den(), bindings);
    if (den.is_zero()) throw specialization_pole_error("substitution sent a denominator to zero");
    return num / den;
}

// ------------------------------------------------------------------- parser

namespace {

struct Parser {
    const std::string& s;
    std::size_t pos = 0;

    explicit Parser(const std::string& text) : s(text) {}

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }

    bool peek_primary() {
        skip_ws();
        if (pos >= s.size()) return false;
        char c = s[pos];
        return c == '(' || std::isdigit(static_cast<unsigned char>(c)) ||
               std::isalpha(static_cast<unsigned char>(c));
    }

    [[noreturn]] void fail(const std::string& what) {
        throw malformed_error("scalar expression: " + what + " at position " +
                              std::to_string(pos) + " in \"" + s + "\"");
    }

    Scalar parse_expr() {
        Scalar v = parse_term();
        while (true) {
            skip_ws();
            if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
                char op = s[pos++];
                Scalar t = parse_term();
                v = (op == '+') ? v + t : v - t;
            } else {
                return v;
            }
        }
    }

    Scalar parse_term() {
        Scalar v = parse_factor();
        while (true) {
            skip_ws();
            if (pos < s.size() && (s[pos] == '*' || s[pos] == '/')) {
                char op = s[pos++];
                Scalar f = parse_factor();
                v = (op == '*') ? v * f : v / f;
            } else if (peek_primary()) {
                v = v * parse_factor();
            } else {
                return v;
            }
        }
    }

    Scalar parse_factor() {
        skip_ws();
        if (pos < s.size() && s[pos] == '-') {
            ++pos;
            return -parse_factor();
        }
        Scalar base = parse_primary();
        skip_ws();
        if (pos < s.size() && s[pos] == '^') {
            ++pos;
            return base.pow(parse_int());
        }
        return base;
    }

    int parse_int() {
        skip_ws();
        bool neg = false;
        if (pos < s.size() && s[pos] == '-') {
            neg = true;
            ++pos;
        }
        if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
            fail("expected integer exponent");
        int v = 0;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
            v = v * 10 + (s[pos++] - '0');
        return neg ? -v : v;
    }

    Scalar parse_primary() {
        skip_ws();
        if (pos >= s.size()) fail("unexpected end of input");
        char c = s[pos];
        if (c == '(') {
            ++pos;
            Scalar v = parse_expr();
            skip_ws();
            if (pos >= s.size() || s[pos] != ')') fail("expected ')'");
            ++pos;
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string digits;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
                digits += s[pos++];
            return Scalar(Rational(mpz_class(digits)));
        }
        if (c == 'k') {
            ++pos;
            return Scalar::variable(kVarK);
        }
        if (c == 'q') {
            ++pos;
            return Scalar::variable(kVarQ);
        }
        if (c == 'G') {
            ++pos;
            if (pos < s.size() && s[pos] == '_') ++pos;
            if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
                fail("expected G-symbol index");
            int j = 0;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
                j = j * 10 + (s[pos++] - '0');
            if (j < 1) fail("G-symbol index must be positive");
            return Scalar::variable(g_var(j));
        }
        fail("unexpected character");
    }
};

} // namespace

Scalar parse_scalar(const std::string& text) {
    Parser p(text);
    Scalar v = p.parse_expr();
    p.skip_ws();
    if (p.pos != text.size()) p.fail("trailing input");
    return v;
}

// ----------------------------------------------------------------- printing

namespace {

std::string monomial_string(const ParamMonomial& m, const Rational& c) {
    std::string out;
    Rational ca = abs(c);
    bool coef = (ca != 1) || m.is_one();
    if (coef) out += ca.get_str();
    for (std::size_t v = 0; v < m.e.size(); ++v) {
        if (m.e[v] == 0) continue;
        if (!out.empty()) out += " ";
        out += var_name(static_cast<int>(v));
        if (m.e[v] != 1) out += "^" + std::to_string(m.e[v]);
    }
    return out;
}

} // namespace

std::string to_string(const ParamPolynomial& p) {
    if (p.is_zero()) return "0";
    std::string out;
    // Highest terms first reads like the published tables.
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto& [m, c] = *it;
        if (out.empty())
            out += (c < 0) ? "-" : "";
        else
            out += (c < 0) ? " - " : " + ";
        out += monomial_string(m, c);
    }
    return out;
}

std::string to_string(const Scalar& a) {
    if (a.num().is_zero()) return "0";
    std::string num = to_string(a.num());
    if (a.den().is_one()) return num;
    std::string den = to_string(a.den());
    std::string lhs = (a.num().term_count() > 1) ? "(" + num + ")" : num;
    std::string rhs = (a.den().term_count() > 1) ? "(" + den + ")" : den;
    return lhs + "/" + rhs;
}

} // namespace ssv
