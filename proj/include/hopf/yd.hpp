#pragma once

#include "hopf/coalgebra.hpp"

namespace hopf {

// Left-left Yetter-Drinfeld module over a Hopf algebra H:
// an H-module (action) and H-comodule (coaction) satisfying
//   rho(h.v) = h(1) v(-1) S(h(3)) (x) h(2).v(0).
struct YDModule {
  HopfPtr H;
  int dim = 0;
  std::vector<std::string> labels;
  Matrix action;    // dim x (dimH * dim); column flat(h, v) = h . e_v
  Matrix coaction;  // (dimH * dim) x dim; column v = rho(e_v)

  const FieldSpec& field() const { return action.field(); }
  const std::string& label(int i) const { return labels[i]; }
};

// A coalgebra object in the Yetter-Drinfeld category: the underlying space
// carries a YD structure and a coalgebra whose comultiplication and counit
// are H-linear and H-colinear.
struct YDCoalgebra {
  YDModule mod;
  CoalgebraPtr co;

  int dim() const { return mod.dim; }
};

// Module axioms, comodule axioms, and the YD compatibility condition.
CheckReport check_yd(const YDModule& m);

// check_yd plus H-(co)linearity of Delta and counit; if the coalgebra is
// coaugmented, also h.1 = eps(h)1 and rho(1) = 1_H (x) 1.
CheckReport check_yd_coalgebra(const YDCoalgebra& c);

// The base field with trivial action and coaction.
YDModule trivial_yd_module(const HopfPtr& H);
YDCoalgebra trivial_yd_coalgebra(const HopfPtr& H);

// H itself with the adjoint action h.m = h(1) m S(h(2)) and coaction Delta.
YDModule adjoint_yd_module(const HopfPtr& H);

// Categorical braiding c(v (x) w) = v(-1).w (x) v(0) and its inverse
// c^{-1}(w (x) v) = v(0) (x) S^{-1}(v(-1)).w.  Requires the antipode of H
// to be invertible; both composites are verified to be the identity.
struct Braiding {
  Matrix c;      // (dimW*dimV) x (dimV*dimW)
  Matrix c_inv;  // (dimV*dimW) x (dimW*dimV)
};
Braiding braiding(const YDModule& v, const YDModule& w);

// Tensor product in the YD category: diagonal action h.(v (x) w) =
// h(1).v (x) h(2).w and codiagonal coaction v(-1)w(-1) (x) v(0) (x) w(0).
YDModule yd_tensor_module(const YDModule& v, const YDModule& w);

// Tensor product of YD coalgebras, with the braided comultiplication
//   Delta(x (x) y) = x{1} (x) x{2}(-1).y{1} (x) x{2}(0) (x) y{2}.
YDCoalgebra yd_tensor_coalgebra(const YDCoalgebra& c, const YDCoalgebra& d);

// Left-fold iterated tensor power; n = 0 gives the trivial YD coalgebra.
YDCoalgebra yd_tensor_power(const YDCoalgebra& c, int n);

// Smash coproduct on R (x) H for a YD coalgebra R:
//   Delta(r # h) = r{1} # r{2}(-1) h(1)  (x)  r{2}(0) # h(2),
// counit eps_R (x) eps_H, basis flat(r, h) = r*dimH + h, labels "r#h".
CoalgebraPtr smash_coproduct(const YDCoalgebra& r);

// Psi(alpha): M -> H, m |-> m(-1) alpha(m(0)), for a functional alpha on a
// comodule M.  Restricted to H-linear functionals it is a convolution-monoid
// isomorphism onto Hom_H(M, H); its inverse is eps_H composed with the map.
Matrix psi(const YDModule& m, const Functional& alpha);
Functional psi_inverse(const YDModule& m, const Matrix& beta,
                       const CoalgebraPtr& dom);

// Phi(beta): C (x) M -> C (x) M, c (x) m |-> c{1} (x) beta(c{2}).m, for
// beta: C -> H.  Turns convolution into composition.
Matrix phi(const Coalgebra& c, const YDModule& m, const Matrix& beta);

// Basis (as columns) of the functionals f on the module with
// f(h.v) = eps(h) f(v), resp. v(-1) f(v(0)) = 1_H f(v).
Matrix h_linear_functional_basis(const YDModule& m);
Matrix h_colinear_functional_basis(const YDModule& m);

}  // namespace hopf
