#pragma once

#include "hopf/yd.hpp"

namespace hopf {

// Pre-bialgebra in the Yetter-Drinfeld category over H: a coaugmented
// coalgebra R in the category together with an H-linear multiplication
// m: R (x) R -> R that is a coalgebra map for the braided comultiplication
// on R (x) R and has the coaugmentation as a two-sided unit.  m need not be
// associative and need not be H-colinear.
struct PreBialgebra {
  YDCoalgebra R;
  Matrix mult;  // dim x dim^2

  int dim() const { return R.dim(); }
  const FieldSpec& field() const { return R.mod.field(); }
  const HopfPtr& hopf() const { return R.mod.H; }
  Matrix unit() const { return R.co->coaug; }
};

// Measuring map xi: R (x) R -> H controlling how far the multiplication of a
// pre-bialgebra is from making R (x) H a bialgebra on the nose.  Valid when
// the seven conditions of check_cocycle hold.
struct Cocycle {
  Matrix xi;  // dimH x dim^2
};

// A bialgebra A split by a Hopf algebra H: sigma a bialgebra section,
// pi an H-bilinear coalgebra retraction with pi . sigma = id_H.
struct SplittingDatum {
  Bialgebra A;
  HopfPtr H;
  Matrix pi;     // dimH x dimA
  Matrix sigma;  // dimA x dimH
};

// Degree and half of the coalgebra-cohomology differential: full computes
// d+(w) * d-(w^{-1}); plus and minus compute one convolution half of w itself.
enum class DiffSign { plus, minus, full };

struct CohomologyDegree {
  int t = 0;  // 0..3 on a bialgebra, 0..2 on a pre-bialgebra
  DiffSign sign = DiffSign::full;
};

// Which evaluation path partial_prebialgebra takes: through the smash
// product bialgebra, or by the closed formulas on R itself.
enum class DiffRoute { transport, direct };

// Itemized axioms: H-linearity of m, m comultiplicative for the braided
// structure, counit multiplicative, unit law; includes the underlying
// Yetter-Drinfeld coalgebra battery.
CheckReport check_prebialgebra(const PreBialgebra& r);

// The seven conditions on xi: adjoint H-linearity, the normalized dual
// Sweedler 1-cocycle identity (plus its counit half), compatibility of the
// coaction of m(z) with xi (checked in both equivalent forms), quasi-
// associativity of m through Phi(xi), the quasi-cocycle identity, unitality,
// and convolution invertibility.
CheckReport check_cocycle(const PreBialgebra& r, const Cocycle& xi);

// Bialgebra axioms for A, Hopf axioms for H, sigma a bialgebra map, pi a
// coalgebra map, pi H-bilinear through sigma, pi . sigma = id.
CheckReport check_splitting_datum(const SplittingDatum& d);

// Smash product A = R #_xi H: underlying space R (x) H, smash coproduct,
// and multiplication
//   (r # h)(s # l) = m(r{1} (x) r{2}(-1) h(1) s{1}) # xi(r{2}(0) (x) h(2) s{2}) h(3) l.
// Refuses (axiom_error) unless both input batteries pass; the result is
// verified to satisfy the bialgebra axioms.  pi(r#h) = eps(r) h and
// sigma(h) = 1 # h make (A, H, pi, sigma) a splitting datum.
struct Bosonization {
  Bialgebra A;
  HopfPtr H;
  Matrix pi;     // dimH x dimA
  Matrix sigma;  // dimA x dimH

  SplittingDatum datum() const { return {A, H, pi, sigma}; }
};
Bosonization bosonize_cocycle(const PreBialgebra& r, const Cocycle& xi);

// Structure constants of R #_xi H with shape validation only; useful when
// the multiplication is intentionally non-associative and the bialgebra
// axioms are not expected to hold.
Bialgebra smash_product_data(const PreBialgebra& r, const Cocycle& xi);

// Inverse construction: from a splitting datum, the coinvariant subspace
// R = {a : a(1) (x) pi(a(2)) = a (x) 1}, with structures
//   tau(a) = a(1) sigma(S(pi(a(2)))),   h.r = sigma(h(1)) r sigma(S(h(2))),
//   rho(r) = pi(r(1)) (x) r(2),         Delta_R(r) = tau(r(1)) (x) r(2),
//   m(r (x) s) = tau(r s),              xi(r (x) s) = pi(r s).
// inclusion holds the canonical (reduced-echelon) basis of R inside A;
// omega(r (x) h) = r sigma(h) is verified to be a bialgebra isomorphism
// R #_xi H -> A with inverse omega_inv(a) = tau(a(1)) (x) pi(a(2)).
struct Decomposition {
  PreBialgebra R;
  Cocycle xi;
  Matrix inclusion;  // dimA x dimR
  Matrix omega;      // dimA x (dimR*dimH)
  Matrix omega_inv;  // (dimR*dimH) x dimA
};
Decomposition extract_prebialgebra(const SplittingDatum& d);

// Transported functional, with any failed side conditions recorded rather
// than aborting (the transport itself is always well defined).
struct TransportResult {
  Functional value;
  bool preconditions_ok = true;
  std::vector<std::string> warnings;
};

// Mutually inverse monoid isomorphisms between functionals on the braided
// power R^{(x)n} and functionals on A^{(x)n} for A = R #_xi H, n <= 4:
//   omega_n(gamma)(c1 (x) ... (x) cn) = gamma(c1#1 (x) ... (x) cn#1),
//   mho_n(v)(c1#h1 (x) ... (x) cn#hn)
//       = v(c1 (x) h1(1) c2 (x) h1(2) h2(1) c3 (x) ...) eps(hn).
// They restrict to inverse bijections between H-linear functionals on
// R^{(x)n} and H-bilinear, multibalanced functionals on A^{(x)n}; the side
// conditions are checked and reported through TransportResult.
TransportResult omega_n(const PreBialgebra& r, const Cocycle& xi, int n,
                        const Functional& gamma);
TransportResult mho_n(const PreBialgebra& r, const Cocycle& xi, int n,
                      const Functional& v);

// Coalgebra-cohomology differential on a bialgebra-like datum E (the
// multiplication need not be associative): for w on the plain tensor power
// E^{(x)t}, the convolution product over the face maps
//   m_i: E^{(x)(t+1)} -> E^{(x)t}  (counit on an outer leg, or one product),
// even i for the plus half, odd i for the minus half, and
// d(w) = d+(w) * d-(w^{-1}) for the full differential.  t <= 3.
Functional partial_bialgebra(const Bialgebra& e, const Functional& w,
                             CohomologyDegree deg);

// The same differential for the braided setting, t <= 2, defined by
// transporting through A = R #_xi H:  d_R = omega_{t+1} . d_A . mho_t.
// DiffRoute::direct instead evaluates the closed formulas
//   t=0:  d+(w) = d-(w) = w eps_R,            d(w) = eps_R
//   t=1:  d+(w) = m_K(w (x) w),  d-(w) = w m_R
//   t=2:  d+(w) = [m_K(eps (x) w)] * [w (R (x) m_R)]
//         d-(w) = [w (m_R (x) R) Phi(xi)] * [m_K(w (x) eps)]
// with all convolutions on the braided tensor power; the two routes agree
// on H-linear functionals.
TransportResult partial_prebialgebra(const PreBialgebra& r, const Cocycle& xi,
                                     const Functional& w, CohomologyDegree deg,
                                     DiffRoute route);

// The four equivalent descriptions of "v is a braided 2-cocycle":
//   (1) (eps (x) v) * v(R (x) m) = (v (x) eps) * [v(m (x) R) Phi(xi)],
//   (2) d2(v) = eps on R^{(x)3},
//   (3) lambda . Psi(d2(v)) = eps,
//   (4) d2(v) = eps on the coinvariants of R^{(x)3},
// each evaluated independently, plus a consistency item asserting that all
// four agree.  lambda is the ad-invariant integral of H.
CheckReport check_z2_equivalences(const PreBialgebra& r, const Cocycle& xi,
                                  const Functional& v);

}  // namespace hopf
