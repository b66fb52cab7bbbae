/*
  rootsys.hpp

  GL_r root data in type A_{r-1}: finite and affine roots, the extended
  affine Weyl group as translation-permutation pairs, the metaplectic
  rescaling, and the parameter functions sigma and gamma.

  Conventions fixed here and used everywhere:
    - permutations are one-line vectors over 0-based indices, composed
      right factor first: (u*v)(i) = u(v(i)); acting on weights by
      (w mu)_i = mu_{w^{-1}(i)};
    - an AffineWeylElement (t, w) is the map x -> w(x) + t, written
      tau(t) w, with composition tau(t1)v1 * tau(t2)v2
      = tau(t1 + v1 t2)(v1 v2);
    - an AffineRoot (a, s) is a + s*delta; its pairing with a weight v
      is (a, v) + s, and the linear Weyl action keeps that pairing
      contravariant: <z*rho, z v> = <rho, v>.
*/
#pragma once

#include <vector>

#include "ssv/field.hpp"
#include "ssv/laurent.hpp"

namespace ssv {

using Perm = std::vector<int>; // one-line, perm[i] = image of i

Perm perm_identity(int r);
Perm perm_compose(const Perm& u, const Perm& v); // apply v first
Perm perm_inverse(const Perm& u);
Perm perm_transposition(int r, int i, int j);
int perm_length(const Perm& u); // inversion count
std::vector<Perm> all_permutations(int r);
Exponent perm_apply(const Perm& u, const Exponent& v); // (u v)_i = v_{u^{-1}(i)}

struct AffineRoot {
    Exponent finite; // zero coordinate sum
    long level = 0;  // coefficient of delta

    AffineRoot() = default;
    AffineRoot(Exponent f, long s) : finite(std::move(f)), level(s) {}

    bool is_zero() const;
    AffineRoot operator-() const;
    bool operator==(const AffineRoot& o) const { return finite == o.finite && level == o.level; }
    bool operator<(const AffineRoot& o) const {
        return level != o.level ? level < o.level : finite < o.finite;
    }
};

struct AffineWeylElement {
    Exponent translation;
    Perm perm;

    AffineWeylElement() = default;
    AffineWeylElement(Exponent t, Perm w) : translation(std::move(t)), perm(std::move(w)) {}
    static AffineWeylElement identity(int r);

    bool is_identity() const;
    bool operator==(const AffineWeylElement& o) const {
        return translation == o.translation && perm == o.perm;
    }
};

AffineWeylElement compose(const AffineWeylElement& a, const AffineWeylElement& b);
AffineWeylElement inverse(const AffineWeylElement& a);

// Affine action on weights: v -> perm(v) + translation.
Exponent weyl_act_affine(const AffineWeylElement& w, const Exponent& v);
// Linear action on affine roots: w*(a + s delta) with
// tau(mu)*(a + s delta) = w a + (s - (w a, mu)) delta.
AffineRoot weyl_act_linear(const AffineWeylElement& w, const AffineRoot& rho);

// Pairing <a + s delta, v> = (a, v) + s.
long pairing_eval(const AffineRoot& rho, const Exponent& v);
// Standard inner product (a, b) on Z^r.
long dot(const Exponent& a, const Exponent& b);

// Reflection of a weight in the vanishing set of rho: for
// rho = n beta + s n^2 delta this is v -> s_beta v - s n beta; in
// general v -> v - (2<rho, v>/(a, a)) a with a the finite part.
Exponent reflect(const AffineRoot& rho, const Exponent& v);

class MetaplecticContext {
public:
    MetaplecticContext(int r, int n, bool reduce_ghalf = true);

    int rank() const { return r_; }
    int degree() const { return n_; }
    bool reduce_ghalf() const { return reduce_ghalf_; }
    // Reduction rule G_{n/2}^2 = 1, enabled for even n unless disabled.
    GHalfRule ghalf_rule() const;

    // Finite simple root alpha_i (1 <= i <= r-1), highest root theta,
    // and the affine simple root alpha_0 = -theta + delta.
    AffineRoot alpha(int i) const;
    AffineRoot theta() const;
    std::vector<AffineRoot> positive_roots() const; // finite, level 0

    // Metaplectic simple roots alpha_i^(n): n alpha_i for i >= 1 and
    // -n theta + n^2 delta for i = 0.
    AffineRoot alpha_meta(int i) const;

    // Simple reflections as group elements: s_i for i >= 1 permutes,
    // s_0 = tau(theta) s_theta; metaplectic=true scales the translation
    // by n (the image under the rescaling isomorphism).
    AffineWeylElement simple_reflection(int i, bool metaplectic) const;
    // tau(n e_1) c with c the rotation 1 -> 2 -> ... -> r -> 1.
    AffineWeylElement omega() const;

    // Fundamental domain: weakly decreasing with mu_1 - mu_r <= n.
    bool in_fundamental_domain(const Exponent& mu) const;
    bool is_dominant(const Exponent& mu) const;

    // Periodic parameter: G_a for the residue of a mod n, with G_0 = k,
    // G_j for 0 < j <= n/2, and G_{n-j}^{-1} above the midpoint.
    Scalar g_param(long a) const;
    // sigma(a): k^{-1} on positive multiples of n, G_a otherwise.
    Scalar sigma_eval(long a) const;
    // gamma(rho; lambda) = q^{-<rho,lambda>/n} prod_{alpha>0}
    // sigma((lambda, alpha))^{(mu, alpha)/n} for rho = mu + s n^2 delta
    // with mu in nZ^r; all exponent divisions must be integral.
    Scalar gamma_eval(const AffineRoot& rho, const Exponent& lambda) const;
    // gamma as a ratio of parameter monomials (A, B) with
    // gamma = A/B; the walk accumulator works on these directly.
    std::pair<ParamPolynomial, ParamPolynomial> gamma_monomials(const AffineRoot& rho,
                                                                const Exponent& lambda) const;

private:
    int r_, n_;
    bool reduce_ghalf_;
};

// The rescaling isomorphism: translations and finite root parts scale
// by n, delta levels by n^2.
AffineRoot psi_n(const AffineRoot& rho, const MetaplecticContext& ctx);
AffineWeylElement psi_n(const AffineWeylElement& w, const MetaplecticContext& ctx);

} // namespace ssv
