#pragma once

#include <cstdint>
#include <optional>

#include "hopf/prebialgebra.hpp"

namespace hopf {

// Dual quasi-bialgebra over the base field: a coalgebra D with unital
// coalgebra maps m, u (m not necessarily associative) and an invertible
// reassociator alpha on the plain tensor cube controlling associativity:
//   m(D (x) m) * alpha = alpha * m(m (x) D).
struct DualQuasi {
  Bialgebra D;        // structure constants only; m need not be associative
  Functional reassoc; // on tensor_power_plain(D.co, 3)

  int dim() const { return D.dim(); }
  const FieldSpec& field() const { return D.co->field; }
};

// Dual quasi-bialgebra in the Yetter-Drinfeld category over H: the
// underlying data of a pre-bialgebra whose multiplication is additionally
// H-colinear, plus an invertible reassociator on the braided tensor cube
// that is both H-linear and H-colinear.
struct BraidedDualQuasi {
  PreBialgebra Q;
  Functional reassoc; // on the braided cube of Q

  int dim() const { return Q.dim(); }
  const FieldSpec& field() const { return Q.field(); }
  const HopfPtr& hopf() const { return Q.hopf(); }
};

// Unital convolution-invertible functional on D (x) D, with its inverse
// cached; the input to twist_dual_quasi.
struct Gauge {
  Functional v;
  Functional v_inv;
};

// Validates that v lives on the plain tensor square of D, is unital
// (v(x (x) 1) = v(1 (x) x) = eps(x)) and convolution invertible, and caches
// the inverse.  Shape problems raise input_error; a non-unital or
// non-invertible v raises axiom_error.
Gauge make_gauge(const DualQuasi& d, const Functional& v);

// The two mutually inverse bijections between measuring cocycles xi on a
// connected pre-bialgebra R and gauge-like functionals v on its braided
// square:
//   gauge_from_cocycle:  v = (lambda . xi)^{-1},
//   cocycle_from_gauge:  xi = u_H v^{-1} * Psi(v),
// where lambda is the ad-invariant integral of H.  gauge_from_cocycle
// requires xi to be an H-linear normalized dual Sweedler 1-cocycle with
// xi(1 (x) 1) = 1 and verifies that the result v is H-linear, takes 1 at
// 1 (x) 1, and satisfies lambda . Psi(v) = eps; cocycle_from_gauge requires
// exactly those three properties of v and verifies the three cocycle
// properties of the result.  Both raise axiom_error when a required or
// produced property fails and input_error on shape problems.
Functional gauge_from_cocycle(const PreBialgebra& r, const Cocycle& xi,
                              const Functional& lambda);
Cocycle cocycle_from_gauge(const PreBialgebra& r, const Functional& v);

// alpha(w) for an invertible functional w on the braided square: with
// m^w := w * m * w^{-1},
//   alpha(w) = [w(R (x) m^w) * (eps (x) w)] * [(w^{-1} (x) eps) * w^{-1}(m^w (x) R)],
// a convolution-invertible functional on the braided cube.  When
// xi = u_H w^{-1} * Psi(w) is a valid cocycle this equals the full braided
// differential of w in degree 2.
Functional twisted_reassociator(const PreBialgebra& r, const Functional& w);

// The four conditions making the twist of R by an invertible v a braided
// dual quasi-bialgebra, plus a cross-check:
//   twisted-multiplication-colinear       rho m^v = (H (x) m^v) rho
//   twisted-multiplication-quasi-associative
//                                         m^v(R (x) m^v) * a = a * m^v(m^v (x) R)
//   reassociator-colinear                 Psi(a) = u_H a,   a := alpha(v)
//   gauge-unital                          v(r (x) 1) = v(1 (x) r) = eps(r)
//   matches-untwisted-cocycle             each item above agrees pass/fail
//                                         with the corresponding condition
//                                         on xi := u_H v^{-1} * Psi(v)
//                                         (coaction twist, quasi-
//                                         associativity, quasi-cocycle,
//                                         unitality).
CheckReport check_gauge_conditions(const PreBialgebra& r, const Functional& v);

// Itemized braided dual quasi-bialgebra axioms: the pre-bialgebra battery,
// H-colinearity of the multiplication, and invertibility, H-linearity,
// H-colinearity, unitality, the 3-cocycle identity, and quasi-associativity
// for the reassociator.
CheckReport check_braided_dual_quasi(const BraidedDualQuasi& q);

// Itemized plain dual quasi-bialgebra axioms: m and u coalgebra maps,
// strict unit laws, and invertibility, unitality, the 3-cocycle identity,
// and quasi-associativity for the reassociator.
CheckReport check_dual_quasi(const DualQuasi& d);

// R^v: the pre-bialgebra R with multiplication m^v = v * m * v^{-1} and
// reassociator the full braided degree-2 differential of v (equal to
// alpha(v); both routes are computed and compared).  Requires R connected,
// v H-linear and invertible, and check_gauge_conditions to pass; the result
// is verified with check_braided_dual_quasi.  Failures raise axiom_error.
BraidedDualQuasi twist_prebialgebra(const PreBialgebra& r,
                                    const Functional& v);

// Bosonization B = Q # H: smash coproduct, multiplication
// (r # h)(s # l) = m(r (x) h(1) s) # h(2) l, unit 1 # 1, and reassociator
// alpha_B(r#h (x) s#l (x) t#k) = alpha(r (x) h(1) s (x) h(2) l t) eps(k).
// The input must pass check_braided_dual_quasi and the output
// check_dual_quasi.  When Q is connected, additionally verifies that
// 1 (x) H spans a subcoalgebra whose iterated wedge exhausts B (so the
// coradical of B lies in 1 (x) H).
DualQuasi bosonize_braided(const BraidedDualQuasi& q);

// D^v: multiplication v * m * v^{-1} and reassociator
//   (eps (x) v) * v(D (x) m) * alpha * v^{-1}(m (x) D) * (v^{-1} (x) eps).
// The output is verified with check_dual_quasi.  Twisting by the counit is
// the identity; twisting by v then by v^{-1} restores D.
DualQuasi twist_dual_quasi(const DualQuasi& d, const Gauge& g);

// One step of run_pipeline.  ran is false when an earlier failure made the
// stage's inputs unavailable; detail carries a witness on failure and a
// short summary on success.
struct PipelineStage {
  std::string name;
  bool ok = false;
  bool ran = false;
  std::string detail;
  std::int64_t microseconds = 0;
};

// Full deformation pipeline for a splitting datum (A, H, pi, sigma):
//   extract            (R, xi) with both axiom batteries
//   connectedness      the coradical filtration of R exhausts it from K
//   integral           the ad-invariant integral lambda of H exists
//   gauge-correspondence  v = (lambda xi)^{-1}, its four conditions, and
//                         u_H v^{-1} * Psi(v) = xi exactly
//   braided-twist      Q = R^v with reassociator the degree-2 differential
//   smash-gauge        zeta = v transported to the smash product A' = R # H,
//                      verified unital and invertible
//   twist-smash-product   A'^zeta with trivial initial reassociator
//   bosonize-braided   B = Q # H
//   structures-match   multiplication, unit, coalgebra, and reassociator of
//                      A'^zeta equal those of B, and the reassociator is
//                      the transported braided one, all as exact tensors
// Stops at the first failed stage unless keep_going is set, in which case
// later stages still run whenever their inputs exist.
struct PipelineReport {
  std::vector<PipelineStage> stages;
  bool ok = false;

  std::optional<Decomposition> decomposition;
  std::optional<Functional> gauge;        // v, on the braided square of R
  std::optional<BraidedDualQuasi> braided;    // Q = R^v
  std::optional<Functional> smash_gauge;      // zeta, on (R # H) (x) (R # H)
  std::optional<DualQuasi> twisted;           // (R # H)^zeta
  std::optional<DualQuasi> bosonized;         // Q # H

  const PipelineStage* find(const std::string& name) const;
  std::string summary() const;
};
PipelineReport run_pipeline(const SplittingDatum& d, bool keep_going = false);

}  // namespace hopf
