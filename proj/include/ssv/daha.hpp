/*
  daha.hpp

  The degree-n Hecke operators on Laurent polynomials: the generators
  T_0..T_{r-1} and omega, the commuting lattice operators Y, the
  polynomial intertwiners S_i, the Hecke symmetrizer, and the derived
  Weyl group action. Together these give a construction of the target
  polynomials that is independent of the walk formulas: the intertwiner
  recursion builds each polynomial from a monomial, and the Y operators
  certify it through its eigenvalues.

  Operators act monomialwise and extend linearly. Operator words are
  applied right to left.
*/
#pragma once

#include "ssv/laurent.hpp"
#include "ssv/rootsys.hpp"

namespace ssv {

// T_i for 1 <= i <= r-1:
//   T_i x^e = (k-k^-1) geometric_ratio(t_n((e,alpha_i)), x^{n alpha_i}) x^e
//             + G_{(e,alpha_i)} x^{s_i e}.
LaurentPolynomial apply_Ti(int i, const LaurentPolynomial& f, const MetaplecticContext& ctx);

// T_i^{-1} = T_i - k + k^{-1}.
LaurentPolynomial apply_Ti_inverse(int i, const LaurentPolynomial& f,
                                   const MetaplecticContext& ctx);

// The affine generator:
//   T_0 x^e = (k-k^-1) geometric_ratio(t_n(-(e,theta)), q^n x^{-n theta}) x^e
//             + G_{-(e,theta)} q^{(e,theta)} x^{s_theta e}.
LaurentPolynomial apply_T0(const LaurentPolynomial& f, const MetaplecticContext& ctx);
LaurentPolynomial apply_T0_inverse(const LaurentPolynomial& f, const MetaplecticContext& ctx);

// omega x^e = q^{-e_r} x^{c e} with c the left rotation; the inverse
// sends x^e to q^{e_1} x^{c^{-1} e}.
LaurentPolynomial apply_omega(const LaurentPolynomial& f, const MetaplecticContext& ctx,
                              bool inverse = false);

// Y^{Psi(mu + s delta)} = q^{-sn} (Y^{n e_1})^{mu_1} ... (Y^{n e_r})^{mu_r},
// each Y^{n e_i} = T_{i-1}^{-1}..T_1^{-1} omega T_{r-1}..T_i.
LaurentPolynomial apply_Y_lattice(const Exponent& mu, long s, const LaurentPolynomial& f,
                                  const MetaplecticContext& ctx);

// Polynomial intertwiner S_i = T_i^vee (1 - Y^{-alpha_i^(n)}) + (k^-1 - k),
// where T_i^vee = T_i for i >= 1 and T_0^vee is multiplication by
// x^{-n theta} followed by T_{s_theta}^{-1}.
LaurentPolynomial apply_S(int i, const LaurentPolynomial& f, const MetaplecticContext& ctx);

// Monic eigenfunction with leading exponent mu, built by the intertwiner
// recursion from the monomial at the fundamental-domain representative.
LaurentPolynomial intertwiner_E(const Exponent& mu, const MetaplecticContext& ctx);

// Hecke symmetrizer U = sum over u in S_r of k^{l(u)} T_u.
LaurentPolynomial apply_U(const LaurentPolynomial& f, const MetaplecticContext& ctx);

// True iff E is a simultaneous Y-eigenfunction with the eigenvalues
// gamma(n e_i; mu) prescribed for leading exponent mu.
bool eigenvalue_check(const LaurentPolynomial& E, const Exponent& mu,
                      const MetaplecticContext& ctx);

// The Weyl group action conjugate to the Demazure-Lusztig form of T_i:
//   s_i . f = f + k (1 - x^{n alpha_i})(T_i f - k f) / (1 - k^2 x^{n alpha_i}),
// an involution fixing the symmetrized polynomials.
LaurentPolynomial apply_CG(int i, const LaurentPolynomial& f, const MetaplecticContext& ctx);

} // namespace ssv
