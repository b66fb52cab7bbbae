/*
  laurent.cpp

  Sparse Laurent polynomial arithmetic and the special kernels.
*/
#include "ssv/laurent.hpp"

#include <algorithm>
#include <numeric>

namespace ssv {

namespace {

void check_rank(const LaurentPolynomial& p, const Exponent& e) {
    if (static_cast<int>(e.size()) != p.rank())
        throw malformed_error("exponent length does not match rank");
}

} // namespace

LaurentPolynomial LaurentPolynomial::constant(int rank, const Scalar& c) {
    LaurentPolynomial p(rank);
    p.add_term(Exponent(rank, 0), c);
    return p;
}

LaurentPolynomial LaurentPolynomial::monomial(const Exponent& e, const Scalar& c) {
    LaurentPolynomial p(static_cast<int>(e.size()));
    p.add_term(e, c);
    return p;
}

Scalar LaurentPolynomial::coefficient(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Scalar() : it->second;
}

std::vector<Exponent> LaurentPolynomial::support() const {
    std::vector<Exponent> s;
    s.reserve(terms_.size());
    for (const auto& [e, c] : terms_) s.push_back(e);
    return s;
}

void LaurentPolynomial::add_term(const Exponent& e, const Scalar& c) {
    check_rank(*this, e);
    if (c.is_zero()) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second.num().is_zero()) terms_.erase(it);
    }
}

LaurentPolynomial LaurentPolynomial::operator+(const LaurentPolynomial& o) const {
    if (rank_ != o.rank_) throw malformed_error("rank mismatch");
    LaurentPolynomial r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& o) {
    if (rank_ != o.rank_) throw malformed_error("rank mismatch");
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

LaurentPolynomial LaurentPolynomial::operator-(const LaurentPolynomial& o) const {
    if (rank_ != o.rank_) throw malformed_error("rank mismatch");
    LaurentPolynomial r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
}

LaurentPolynomial LaurentPolynomial::operator*(const LaurentPolynomial& o) const {
    if (rank_ != o.rank_) throw malformed_error("rank mismatch");
    LaurentPolynomial r(rank_);
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : o.terms_) {
            Exponent e(rank_);
            for (int i = 0; i < rank_; ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

LaurentPolynomial LaurentPolynomial::operator*(const Scalar& c) const {
    LaurentPolynomial r(rank_);
    if (c.is_zero()) return r;
    for (const auto& [e, x] : terms_) r.add_term(e, x * c);
    return r;
}

bool LaurentPolynomial::operator==(const LaurentPolynomial& o) const {
    if (rank_ != o.rank_ || terms_.size() != o.terms_.size()) return false;
    auto it = terms_.begin(), jt = o.terms_.begin();
    for (; it != terms_.end(); ++it, ++jt) {
        if (it->first != jt->first) return false;
        if (!(it->second.num() == jt->second.num() && it->second.den() == jt->second.den()))
            return false;
    }
    return true;
}

LaurentPolynomial LaurentPolynomial::pruned(const GHalfRule& rule) const {
    LaurentPolynomial r(rank_);
    for (const auto& [e, c] : terms_)
        if (!c.num().reduce(rule).is_zero()) r.terms_.emplace(e, c);
    return r;
}

LaurentPolynomial LaurentPolynomial::normalized(const GHalfRule& rule) const {
    LaurentPolynomial r(rank_);
    for (const auto& [e, c] : terms_) {
        Scalar nc = scalar_normalize(c, rule);
        if (!nc.is_zero()) r.terms_.emplace(e, nc);
    }
    return r;
}

LaurentPolynomial LaurentPolynomial::reduced(const GHalfRule& rule) const {
    if (!rule.enabled()) return pruned(rule);
    LaurentPolynomial r(rank_);
    for (const auto& [e, c] : terms_) {
        ParamPolynomial num = c.num().reduce(rule);
        if (num.is_zero()) continue;
        r.terms_.emplace(e, Scalar(std::move(num), c.den().reduce(rule)));
    }
    return r;
}

bool poly_equals(const LaurentPolynomial& a, const LaurentPolynomial& b, const GHalfRule& rule) {
    if (a.rank() != b.rank()) return false;
    for (const auto& [e, c] : a.terms())
        if (!scalar_equals(c, b.coefficient(e), rule)) return false;
    for (const auto& [e, c] : b.terms())
        if (a.terms().find(e) == a.terms().end() && !scalar_equals(c, Scalar(), rule))
            return false;
    return true;
}

LaurentPolynomial clear_denominators(const LaurentPolynomial& f) {
    std::vector<ContentSplit> splits;
    std::vector<std::size_t> which;
    std::vector<ParamPolynomial> prims;
    ParamMonomial mlcm = ParamMonomial::one();
    for (const auto& [e, c] : f.terms()) {
        ContentSplit s = split_content(c.den());
        mlcm = mlcm.lcm(s.m);
        std::size_t idx = prims.size();
        if (s.primitive.is_one()) {
            idx = static_cast<std::size_t>(-1);
        } else {
            for (std::size_t j = 0; j < prims.size(); ++j)
                if (prims[j] == s.primitive) {
                    idx = j;
                    break;
                }
            if (idx == prims.size()) prims.push_back(s.primitive);
        }
        which.push_back(idx);
        splits.push_back(std::move(s));
    }
    LaurentPolynomial out(f.rank());
    std::size_t t = 0;
    for (const auto& [e, c] : f.terms()) {
        const ContentSplit& s = splits[t];
        ParamPolynomial num =
            c.num() * ParamPolynomial::monomial(mlcm.divide_by(s.m), Rational(1) / s.c);
        for (std::size_t j = 0; j < prims.size(); ++j)
            if (j != which[t]) num = num * prims[j];
        out.add_term(e, Scalar(std::move(num)));
        ++t;
    }
    return out;
}

LaurentPolynomial geometric_ratio(int t, int step, const Exponent& ystep, const Scalar& ycoef) {
    if (step <= 0) throw malformed_error("geometric_ratio: step must be positive");
    if (t % step != 0) throw malformed_error("geometric_ratio: t must be a multiple of the step");
    int rank = static_cast<int>(ystep.size());
    LaurentPolynomial r(rank);
    int m = t / step;
    auto y_power = [&](int p) {
        Exponent e(rank);
        for (int i = 0; i < rank; ++i) e[i] = p * ystep[i];
        return e;
    };
    if (m > 0) {
        for (int p = 1; p <= m; ++p) r.add_term(y_power(-p), -ycoef.pow(-p));
    } else if (m < 0) {
        for (int p = 0; p < -m; ++p) r.add_term(y_power(p), ycoef.pow(p));
    }
    return r;
}

LaurentPolynomial poly_substitute_power(const LaurentPolynomial& a, int n) {
    if (n <= 0) throw malformed_error("power substitution needs a positive n");
    LaurentPolynomial r(a.rank());
    std::map<int, Scalar> qmap{{kVarQ, Scalar::variable(kVarQ, n)}};
    for (const auto& [e, c] : a.terms()) {
        Exponent ne(e);
        for (int& x : ne) x *= n;
        r.add_term(ne, scalar_substitute(c, qmap));
    }
    return r;
}

LaurentPolynomial exact_divide_linear(const LaurentPolynomial& a, const Scalar& c,
                                      const Exponent& alpha) {
    if (static_cast<int>(alpha.size()) != a.rank())
        throw malformed_error("exponent length does not match rank");
    long norm = 0;
    for (int x : alpha) norm += static_cast<long>(x) * x;
    if (norm == 0) throw malformed_error("exact_divide_linear: zero direction");
    if (a.is_zero()) return LaurentPolynomial(a.rank());
    if (c.is_zero()) return a;

    // Height along alpha; Q(e) = A(e) + c*Q(e - alpha) in increasing height,
    // with candidate exponents the alpha-shifts of the dividend's support.
    auto height = [&](const Exponent& e) {
        long h = 0;
        for (std::size_t i = 0; i < e.size(); ++i) h += static_cast<long>(e[i]) * alpha[i];
        return h;
    };
    long hmax = 0;
    bool first = true;
    for (const auto& [e, x] : a.terms()) {
        long h = height(e);
        if (first || h > hmax) hmax = h;
        first = false;
    }
    // The quotient's top height sits one alpha below the dividend's.
    long qmax = hmax - norm;

    std::map<Exponent, Scalar> q;
    std::map<long, std::vector<Exponent>> by_height;
    std::map<Exponent, bool> seen;
    for (const auto& [e, x] : a.terms()) {
        Exponent cur = e;
        long h = height(cur);
        while (h <= qmax) {
            if (!seen[cur]) {
                seen[cur] = true;
                by_height[h].push_back(cur);
            }
            for (std::size_t i = 0; i < cur.size(); ++i) cur[i] += alpha[i];
            h += norm;
        }
    }
    for (const auto& [h, exps] : by_height) {
        for (const Exponent& e : exps) {
            Scalar val = a.coefficient(e);
            Exponent prev(e);
            for (std::size_t i = 0; i < prev.size(); ++i) prev[i] -= alpha[i];
            auto it = q.find(prev);
            if (it != q.end()) val += c * it->second;
            if (!val.is_zero()) q.emplace(e, val);
        }
    }
    LaurentPolynomial quotient(a.rank());
    for (const auto& [e, x] : q) quotient.add_term(e, x);

    // Remultiply; any mismatch means the division was not exact.
    LaurentPolynomial check = quotient - (quotient * LaurentPolynomial::monomial(alpha, c));
    if (!poly_equals(check, a))
        throw not_divisible_error("exact_divide_linear left a remainder");
    return quotient;
}

} // namespace ssv
