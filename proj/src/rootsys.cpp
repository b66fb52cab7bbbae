/*
  rootsys.cpp

  Root data, Weyl group arithmetic, and the sigma/gamma parameter
  functions.
*/
#include "ssv/rootsys.hpp"

#include <algorithm>
#include <numeric>

namespace ssv {

// ------------------------------------------------------------ permutations

Perm perm_identity(int r) {
    Perm p(r);
    std::iota(p.begin(), p.end(), 0);
    return p;
}

Perm perm_compose(const Perm& u, const Perm& v) {
    if (u.size() != v.size()) throw malformed_error("permutation size mismatch");
    Perm p(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) p[i] = u[v[i]];
    return p;
}

Perm perm_inverse(const Perm& u) {
    Perm p(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) p[u[i]] = static_cast<int>(i);
    return p;
}

Perm perm_transposition(int r, int i, int j) {
    Perm p = perm_identity(r);
    std::swap(p[i], p[j]);
    return p;
}

int perm_length(const Perm& u) {
    int inv = 0;
    for (std::size_t i = 0; i < u.size(); ++i)
        for (std::size_t j = i + 1; j < u.size(); ++j)
            if (u[i] > u[j]) ++inv;
    return inv;
}

std::vector<Perm> all_permutations(int r) {
    std::vector<Perm> all;
    Perm p = perm_identity(r);
    do {
        all.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return all;
}

Exponent perm_apply(const Perm& u, const Exponent& v) {
    if (u.size() != v.size()) throw malformed_error("permutation size mismatch");
    Exponent w(v.size());
    for (std::size_t i = 0; i < u.size(); ++i) w[u[i]] = v[i];
    return w;
}

// ------------------------------------------------------------ affine roots

bool AffineRoot::is_zero() const {
    if (level != 0) return false;
    for (int x : finite)
        if (x != 0) return false;
    return true;
}

AffineRoot AffineRoot::operator-() const {
    AffineRoot r = *this;
    for (int& x : r.finite) x = -x;
    r.level = -level;
    return r;
}

AffineWeylElement AffineWeylElement::identity(int r) {
    return AffineWeylElement(Exponent(r, 0), perm_identity(r));
}

bool AffineWeylElement::is_identity() const {
    for (int x : translation)
        if (x != 0) return false;
    for (std::size_t i = 0; i < perm.size(); ++i)
        if (perm[i] != static_cast<int>(i)) return false;
    return true;
}

AffineWeylElement compose(const AffineWeylElement& a, const AffineWeylElement& b) {
    // tau(t1)v1 tau(t2)v2 = tau(t1 + v1 t2)(v1 v2)
    Exponent t = perm_apply(a.perm, b.translation);
    for (std::size_t i = 0; i < t.size(); ++i) t[i] += a.translation[i];
    return AffineWeylElement(std::move(t), perm_compose(a.perm, b.perm));
}

AffineWeylElement inverse(const AffineWeylElement& a) {
    Perm vinv = perm_inverse(a.perm);
    Exponent t = perm_apply(vinv, a.translation);
    for (int& x : t) x = -x;
    return AffineWeylElement(std::move(t), std::move(vinv));
}

Exponent weyl_act_affine(const AffineWeylElement& w, const Exponent& v) {
    Exponent x = perm_apply(w.perm, v);
    if (x.size() != w.translation.size()) throw malformed_error("rank mismatch");
    for (std::size_t i = 0; i < x.size(); ++i) x[i] += w.translation[i];
    return x;
}

AffineRoot weyl_act_linear(const AffineWeylElement& w, const AffineRoot& rho) {
    Exponent a = perm_apply(w.perm, rho.finite);
    long lvl = rho.level - dot(a, w.translation);
    return AffineRoot(std::move(a), lvl);
}

long dot(const Exponent& a, const Exponent& b) {
    if (a.size() != b.size()) throw malformed_error("rank mismatch");
    long s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += static_cast<long>(a[i]) * b[i];
    return s;
}

long pairing_eval(const AffineRoot& rho, const Exponent& v) {
    return dot(rho.finite, v) + rho.level;
}

Exponent reflect(const AffineRoot& rho, const Exponent& v) {
    long nn = dot(rho.finite, rho.finite);
    if (nn == 0) throw malformed_error("reflection in a root with zero finite part");
    long num = 2 * pairing_eval(rho, v);
    Exponent w = v;
    for (std::size_t i = 0; i < w.size(); ++i) {
        long m = num * rho.finite[i];
        if (m % nn != 0)
            throw malformed_error("reflection does not preserve the integer lattice");
        w[i] -= static_cast<int>(m / nn);
    }
    return w;
}

// ----------------------------------------------------------------- context

MetaplecticContext::MetaplecticContext(int r, int n, bool reduce_ghalf)
    : r_(r), n_(n), reduce_ghalf_(reduce_ghalf) {
    if (r < 2) throw malformed_error("rank must be at least 2");
    if (n < 1) throw malformed_error("metaplectic degree must be at least 1");
}

GHalfRule MetaplecticContext::ghalf_rule() const {
    if (reduce_ghalf_ && n_ % 2 == 0) return GHalfRule{g_var(n_ / 2)};
    return GHalfRule::none();
}

AffineRoot MetaplecticContext::alpha(int i) const {
    if (i < 1 || i >= r_) throw malformed_error("simple root index out of range");
    Exponent a(r_, 0);
    a[i - 1] = 1;
    a[i] = -1;
    return AffineRoot(std::move(a), 0);
}

AffineRoot MetaplecticContext::theta() const {
    Exponent a(r_, 0);
    a[0] = 1;
    a[r_ - 1] = -1;
    return AffineRoot(std::move(a), 0);
}

std::vector<AffineRoot> MetaplecticContext::positive_roots() const {
    std::vector<AffineRoot> roots;
    for (int i = 0; i < r_; ++i) {
        for (int j = i + 1; j < r_; ++j) {
            Exponent a(r_, 0);
            a[i] = 1;
            a[j] = -1;
            roots.emplace_back(std::move(a), 0);
        }
    }
    return roots;
}

AffineRoot MetaplecticContext::alpha_meta(int i) const {
    if (i == 0) {
        AffineRoot a = theta();
        for (int& x : a.finite) x *= -n_;
        a.level = static_cast<long>(n_) * n_;
        return a;
    }
    AffineRoot a = alpha(i);
    for (int& x : a.finite) x *= n_;
    return a;
}

AffineWeylElement MetaplecticContext::simple_reflection(int i, bool metaplectic) const {
    if (i < 0 || i >= r_) throw malformed_error("simple reflection index out of range");
    if (i >= 1)
        return AffineWeylElement(Exponent(r_, 0), perm_transposition(r_, i - 1, i));
    Exponent t(r_, 0);
    int step = metaplectic ? n_ : 1;
    t[0] = step;
    t[r_ - 1] = -step;
    return AffineWeylElement(std::move(t), perm_transposition(r_, 0, r_ - 1));
}

AffineWeylElement MetaplecticContext::omega() const {
    Exponent t(r_, 0);
    t[0] = n_;
    Perm c(r_);
    for (int i = 0; i < r_; ++i) c[i] = (i + 1) % r_;
    return AffineWeylElement(std::move(t), std::move(c));
}

bool MetaplecticContext::in_fundamental_domain(const Exponent& mu) const {
    if (!is_dominant(mu)) return false;
    return mu.front() - mu.back() <= n_;
}

bool MetaplecticContext::is_dominant(const Exponent& mu) const {
    if (static_cast<int>(mu.size()) != r_) throw malformed_error("rank mismatch");
    for (int i = 0; i + 1 < r_; ++i)
        if (mu[i] < mu[i + 1]) return false;
    return true;
}

Scalar MetaplecticContext::g_param(long a) const {
    long j = ((a % n_) + n_) % n_;
    if (j == 0) return Scalar::variable(kVarK);
    if (2 * j < n_ || 2 * j == n_) return Scalar::variable(g_var(static_cast<int>(j)));
    return Scalar::variable(g_var(static_cast<int>(n_ - j)), -1);
}

Scalar MetaplecticContext::sigma_eval(long a) const {
    if (a > 0 && a % n_ == 0) return Scalar::variable(kVarK, -1);
    return g_param(a);
}

std::pair<ParamPolynomial, ParamPolynomial>
MetaplecticContext::gamma_monomials(const AffineRoot& rho, const Exponent& lambda) const {
    if (static_cast<int>(rho.finite.size()) != r_ ||
        static_cast<int>(lambda.size()) != r_)
        throw malformed_error("rank mismatch");
    for (int x : rho.finite)
        if (x % n_ != 0)
            throw malformed_error("gamma of a non-metaplectic lattice element");
    long nsq = static_cast<long>(n_) * n_;
    if (rho.level % nsq != 0)
        throw malformed_error("gamma of a non-metaplectic lattice element");

    // Accumulate sigma powers as a pair of monomials num/den.
    ParamMonomial num, den;
    auto push = [&](const Scalar& s, long e) {
        if (e == 0) return;
        // sigma values are single monomials over single monomials.
        const ParamMonomial& mn = s.num().leading().first;
        const ParamMonomial& md = s.den().leading().first;
        if (e > 0) {
            for (long t = 0; t < e; ++t) { num = num * mn; den = den * md; }
        } else {
            for (long t = 0; t < -e; ++t) { num = num * md; den = den * mn; }
        }
    };
    long qe = -(dot(rho.finite, lambda) + rho.level);
    if (qe % n_ != 0) throw malformed_error("gamma exponent is not integral");
    qe /= n_;
    if (qe > 0)
        num = num * ParamMonomial::var(kVarQ, static_cast<int>(qe));
    else if (qe < 0)
        den = den * ParamMonomial::var(kVarQ, static_cast<int>(-qe));
    for (const AffineRoot& a : positive_roots()) {
        long e = dot(rho.finite, a.finite);
        if (e % n_ != 0) throw malformed_error("gamma exponent is not integral");
        push(sigma_eval(dot(lambda, a.finite)), e / n_);
    }
    GHalfRule rule = ghalf_rule();
    if (rule.enabled()) {
        std::vector<int> en = num.e, ed = den.e;
        if (rule.var < static_cast<int>(en.size())) en[rule.var] %= 2;
        if (rule.var < static_cast<int>(ed.size())) ed[rule.var] %= 2;
        num = ParamMonomial(en);
        den = ParamMonomial(ed);
    }
    // Cancel the common part so numerator and denominator are coprime.
    ParamMonomial common;
    {
        std::vector<int> ce(std::min(num.e.size(), den.e.size()), 0);
        for (std::size_t i = 0; i < ce.size(); ++i) ce[i] = std::min(num.e[i], den.e[i]);
        common = ParamMonomial(ce);
    }
    num = num.divide_by(common);
    den = den.divide_by(common);
    return {ParamPolynomial::monomial(num, 1), ParamPolynomial::monomial(den, 1)};
}

Scalar MetaplecticContext::gamma_eval(const AffineRoot& rho, const Exponent& lambda) const {
    auto [num, den] = gamma_monomials(rho, lambda);
    return Scalar(num, den);
}

AffineRoot psi_n(const AffineRoot& rho, const MetaplecticContext& ctx) {
    AffineRoot r = rho;
    for (int& x : r.finite) x *= ctx.degree();
    r.level *= static_cast<long>(ctx.degree()) * ctx.degree();
    return r;
}

AffineWeylElement psi_n(const AffineWeylElement& w, const MetaplecticContext& ctx) {
    AffineWeylElement x = w;
    for (int& t : x.translation) t *= ctx.degree();
    return x;
}

} // namespace ssv
