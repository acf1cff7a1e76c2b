#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hopf/examples.hpp"
#include "hopf/yd.hpp"
#include "testutil.hpp"

using namespace hopf;
using testutil::rand_matrix;
using testutil::rand_scalar;
using testutil::seeded_rng;

static const FieldSpec Q = FieldSpec::rationals();

static HopfPtr sweedler_ptr() {
  static HopfPtr p = make_hopf_ptr(sweedler_hopf());
  return p;
}

static HopfPtr kc2_ptr() {
  static HopfPtr p = make_hopf_ptr(cyclic_group_algebra(Q, 2));
  return p;
}

// Random linear combination of the columns of `basis`, as a functional.
static Functional rand_combo(std::mt19937_64& rng, const CoalgebraPtr& dom,
                             const Matrix& basis) {
  Matrix row(1, basis.rows(), basis.field());
  for (int k = 0; k < basis.cols(); ++k) {
    const Scalar c = rand_scalar(rng, basis.field());
    for (int i = 0; i < basis.rows(); ++i)
      row.at(0, i) = row.at(0, i) + c * basis.at(i, k);
  }
  return functional_from_row(dom, row);
}

TEST_CASE("trivial module and trivial coalgebra satisfy all axioms") {
  auto H = sweedler_ptr();
  CHECK(check_yd(trivial_yd_module(H)).ok());
  auto rep = check_yd_coalgebra(trivial_yd_coalgebra(H));
  CHECK(rep.ok());
}

TEST_CASE("adjoint module satisfies module, comodule, and compatibility axioms") {
  for (auto H : {make_hopf_ptr(sweedler_hopf()),
                 make_hopf_ptr(cyclic_group_algebra(Q, 3)),
                 make_hopf_ptr(lifted_quantum_line_hopf()),
                 make_hopf_ptr(taft_hopf(3, 0))}) {
    auto rep = check_yd(adjoint_yd_module(H));
    INFO(rep.summary());
    CHECK(rep.ok());
  }
}

TEST_CASE("trivializing the coaction of the adjoint module breaks compatibility") {
  auto H = sweedler_ptr();
  YDModule m = adjoint_yd_module(H);
  const int d = m.dim;
  Matrix triv(d * d, d, Q);
  for (int v = 0; v < d; ++v) triv.at(0 * d + v, v) = Scalar::one(Q);
  m.coaction = triv;
  auto rep = check_yd(m);
  CHECK_FALSE(rep.ok());
  auto* item = rep.find("yd-compatibility");
  REQUIRE(item != nullptr);
  CHECK_FALSE(item->ok);
  CHECK(item->witness.find("x") != std::string::npos);
}

TEST_CASE("braiding of the adjoint module matches hand values and inverts") {
  auto H = sweedler_ptr();
  YDModule m = adjoint_yd_module(H);
  Braiding b = braiding(m, m);
  const int d = m.dim;  // basis 1, x, g, gx

  // c(x (x) x) = -x (x) x:  rho(x) = x (x) 1 + g (x) x, x->w = 0, g->x = -x.
  Matrix in = basis_vector(d * d, 1 * d + 1, Q);
  CHECK(b.c * in == basis_vector(d * d, 1 * d + 1, Q).scaled(Scalar::from_int(-1, Q)));

  // c(g (x) g) = g (x) g: rho(g) = g (x) g and g->g = g.
  in = basis_vector(d * d, 2 * d + 2, Q);
  CHECK(b.c * in == in);

  CHECK(b.c_inv * b.c == Matrix::identity(d * d, Q));
  CHECK(b.c * b.c_inv == Matrix::identity(d * d, Q));
}

TEST_CASE("trivial coaction makes the braiding the plain transposition") {
  auto H = sweedler_ptr();
  const int dh = H->dim();
  const int dv = 2;
  Matrix action(dv, dh * dv, Q);
  for (int h = 0; h < dh; ++h)
    for (int v = 0; v < dv; ++v)
      action.at(v, h * dv + v) = H->co->counit.at(0, h);
  Matrix coaction(dh * dv, dv, Q);
  for (int v = 0; v < dv; ++v) coaction.at(0 * dv + v, v) = Scalar::one(Q);
  YDModule V{H, dv, {"a", "b"}, action, coaction};
  REQUIRE(check_yd(V).ok());

  YDModule W = adjoint_yd_module(H);
  Braiding b = braiding(V, W);
  const int dw = W.dim;
  Matrix perm(dw * dv, dv * dw, Q);
  for (int i = 0; i < dv; ++i)
    for (int j = 0; j < dw; ++j)
      perm.at(j * dv + i, i * dw + j) = Scalar::one(Q);
  CHECK(b.c == perm);
}

TEST_CASE("tensor of modules satisfies the axioms and both hexagon identities") {
  auto H = sweedler_ptr();
  YDModule V = adjoint_yd_module(H);
  YDModule W = trivial_yd_module(H);
  YDModule U = adjoint_yd_module(H);

  YDModule VW = yd_tensor_module(V, W);
  CHECK(check_yd(VW).ok());
  YDModule VV = yd_tensor_module(V, V);
  CHECK(check_yd(VV).ok());

  // c_{V(x)W,U} = (c_{V,U} (x) id_W) (id_V (x) c_{W,U})
  {
    Matrix lhs = braiding(VV, U).c;
    Matrix rhs = kronecker(braiding(V, U).c, Matrix::identity(V.dim, Q)) *
                 kronecker(Matrix::identity(V.dim, Q), braiding(V, U).c);
    CHECK(lhs == rhs);
  }
  // c_{V,W(x)U} = (id_W (x) c_{V,U}) (c_{V,W} (x) id_U)
  {
    Matrix lhs = braiding(V, VV).c;
    Matrix rhs = kronecker(Matrix::identity(V.dim, Q), braiding(V, V).c) *
                 kronecker(braiding(V, V).c, Matrix::identity(V.dim, Q));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("braided line over the cyclic group is a Yetter-Drinfeld coalgebra") {
  auto H = kc2_ptr();
  BraidedLine bl = braided_line(H, 2, Scalar::from_int(-1, Q));
  auto rep = check_yd_coalgebra(bl.R);
  INFO(rep.summary());
  CHECK(rep.ok());

  // x is primitive
  REQUIRE(bl.R.co->delta[1].size() == 2);
  CHECK(bl.R.co->delta[1][0].left == 0);
  CHECK(bl.R.co->delta[1][0].right == 1);
  CHECK(bl.R.co->delta[1][1].left == 1);
  CHECK(bl.R.co->delta[1][1].right == 0);

  // g.x = -x, rho(x) = g (x) x
  CHECK(bl.R.mod.action.at(1, 1 * 2 + 1) == Scalar::from_int(-1, Q));
  CHECK(bl.R.mod.coaction.at(1 * 2 + 1, 1).is_one());

  CHECK(is_connected(*bl.R.co).connected);
}

TEST_CASE("braided tensor square has the hand-computed comultiplication") {
  auto H = kc2_ptr();
  BraidedLine bl = braided_line(H, 2, Scalar::from_int(-1, Q));
  YDCoalgebra R2 = yd_tensor_coalgebra(bl.R, bl.R);
  REQUIRE(R2.dim() == 4);
  auto rep = check_yd_coalgebra(R2);
  INFO(rep.summary());
  CHECK(rep.ok());

  // Delta(x (x) x) = (x(x)x)(x)(1(x)1) + (x(x)1)(x)(1(x)x)
  //                - (1(x)x)(x)(x(x)1) + (1(x)1)(x)(x(x)x)
  // in flat indices (1=x): basis 0=1(x)1, 1=1(x)x, 2=x(x)1, 3=x(x)x.
  const auto& terms = R2.co->delta[3];
  REQUIRE(terms.size() == 4);
  CHECK(terms[0].left == 0);
  CHECK(terms[0].right == 3);
  CHECK(terms[0].coeff.is_one());
  CHECK(terms[1].left == 1);
  CHECK(terms[1].right == 2);
  CHECK(terms[1].coeff == Scalar::from_int(-1, Q));
  CHECK(terms[2].left == 2);
  CHECK(terms[2].right == 1);
  CHECK(terms[2].coeff.is_one());
  CHECK(terms[3].left == 3);
  CHECK(terms[3].right == 0);
  CHECK(terms[3].coeff.is_one());
}

TEST_CASE("iterated braided powers are associative under flattening") {
  auto H = kc2_ptr();
  BraidedLine bl = braided_line(H, 2, Scalar::from_int(-1, Q));
  YDCoalgebra left =
      yd_tensor_coalgebra(yd_tensor_coalgebra(bl.R, bl.R), bl.R);
  YDCoalgebra right =
      yd_tensor_coalgebra(bl.R, yd_tensor_coalgebra(bl.R, bl.R));
  CHECK(same_coalgebra(*left.co, *right.co));
  CHECK(left.mod.action == right.mod.action);
  CHECK(left.mod.coaction == right.mod.coaction);

  YDCoalgebra p3 = yd_tensor_power(bl.R, 3);
  CHECK(p3.dim() == 8);
  CHECK(same_coalgebra(*p3.co, *left.co));
  CHECK(check_yd_coalgebra(p3).ok());

  YDCoalgebra p0 = yd_tensor_power(bl.R, 0);
  CHECK(p0.dim() == 1);
  CHECK(same_coalgebra(*p0.co, *trivial_coalgebra(Q)));
}

TEST_CASE("tensoring with the trivial coalgebra changes nothing") {
  auto H = kc2_ptr();
  BraidedLine bl = braided_line(H, 2, Scalar::from_int(-1, Q));
  YDCoalgebra triv = trivial_yd_coalgebra(H);
  for (const auto& prod : {yd_tensor_coalgebra(bl.R, triv),
                           yd_tensor_coalgebra(triv, bl.R)}) {
    CHECK(same_coalgebra(*prod.co, *bl.R.co));
    CHECK(prod.mod.action == bl.R.mod.action);
    CHECK(prod.mod.coaction == bl.R.mod.coaction);
  }
}

TEST_CASE("smash coproduct of the trivial coalgebra is the Hopf coalgebra") {
  auto H = sweedler_ptr();
  CoalgebraPtr sm = smash_coproduct(trivial_yd_coalgebra(H));
  CHECK(same_coalgebra(*sm, *H->co));
}

TEST_CASE("smash coproduct of the braided line has the quantum line values") {
  auto H = kc2_ptr();
  BraidedLine bl = braided_line(H, 2, Scalar::from_int(-1, Q));
  CoalgebraPtr sm = smash_coproduct(bl.R);
  REQUIRE(sm->dim == 4);
  // basis: 0 = 1#1, 1 = 1#g, 2 = x#1, 3 = x#g
  CHECK(sm->labels[2] == "x#1");
  CHECK(check_coalgebra(*sm).ok());

  auto expect = [&](int i, std::vector<std::tuple<int, int, int>> want) {
    const auto& terms = sm->delta[i];
    REQUIRE(terms.size() == want.size());
    for (std::size_t k = 0; k < want.size(); ++k) {
      CHECK(terms[k].left == std::get<0>(want[k]));
      CHECK(terms[k].right == std::get<1>(want[k]));
      CHECK(terms[k].coeff == Scalar::from_int(std::get<2>(want[k]), Q));
    }
  };
  expect(0, {{0, 0, 1}});
  expect(1, {{1, 1, 1}});
  expect(2, {{1, 2, 1}, {2, 0, 1}});  // Delta(x#1) = 1#g (x) x#1 + x#1 (x) 1#1
  expect(3, {{0, 3, 1}, {3, 1, 1}});  // Delta(x#g) = 1#1 (x) x#g + x#g (x) 1#g

  Matrix eps(1, 4, Q);
  eps.at(0, 0) = Scalar::one(Q);
  eps.at(0, 1) = Scalar::one(Q);
  CHECK(sm->counit == eps);
  CHECK(sm->coaug == basis_vector(4, 0, Q));
}

TEST_CASE("equivariant functional spaces match hand-computed bases") {
  auto H = kc2_ptr();
  BraidedLine bl = braided_line(H, 2, Scalar::from_int(-1, Q));
  Matrix lin = h_linear_functional_basis(bl.R.mod);
  REQUIRE(lin.cols() == 1);  // only multiples of delta_1 survive g.x = -x
  CHECK(lin.col(0) == basis_vector(2, 0, Q));
  Matrix colin = h_colinear_functional_basis(bl.R.mod);
  REQUIRE(colin.cols() == 1);
  CHECK(colin.col(0) == basis_vector(2, 0, Q));

  YDCoalgebra R2 = yd_tensor_power(bl.R, 2);
  Matrix lin2 = h_linear_functional_basis(R2.mod);
  REQUIRE(lin2.cols() == 2);  // span{delta_{1(x)1}, delta_{x(x)x}}
  for (int k = 0; k < 2; ++k) {
    CHECK(lin2.at(1, k).is_zero());
    CHECK(lin2.at(2, k).is_zero());
  }
  Matrix colin2 = h_colinear_functional_basis(R2.mod);
  CHECK(colin2.cols() == 2);
}

TEST_CASE("comodule-to-map transform is a convolution isomorphism") {
  auto H = kc2_ptr();
  BraidedLine bl = braided_line(H, 2, Scalar::from_int(-1, Q));
  YDCoalgebra R2 = yd_tensor_power(bl.R, 2);
  auto rng = seeded_rng();

  // counit goes to the unit map
  CHECK(psi(R2.mod, counit_functional(R2.co)) ==
        H->alg.unit * R2.co->counit);

  // two-sided with its inverse on arbitrary functionals
  for (int trial = 0; trial < 8; ++trial) {
    Functional a = functional_from_row(R2.co, rand_matrix(rng, 1, 4, Q));
    Functional back = psi_inverse(R2.mod, psi(R2.mod, a), R2.co);
    CHECK(back.coeffs == a.coeffs);
  }

  // multiplicative on equivariant functionals
  Matrix basis = h_linear_functional_basis(R2.mod);
  for (int trial = 0; trial < 8; ++trial) {
    Functional a = rand_combo(rng, R2.co, basis);
    Functional b = rand_combo(rng, R2.co, basis);
    Matrix lhs = psi(R2.mod, convolve(a, b));
    Matrix rhs = convolve_maps(*R2.co, H->alg, psi(R2.mod, a), psi(R2.mod, b));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("map-to-endomorphism transform turns convolution into composition") {
  auto H = kc2_ptr();
  BraidedLine bl = braided_line(H, 2, Scalar::from_int(-1, Q));
  const Coalgebra& C = *bl.R.co;
  const YDModule& M = bl.R.mod;
  auto rng = seeded_rng(7);

  Matrix unit_map = H->alg.unit * C.counit;
  CHECK(phi(C, M, unit_map) == Matrix::identity(4, Q));

  for (int trial = 0; trial < 8; ++trial) {
    Matrix b1 = rand_matrix(rng, H->dim(), C.dim, Q);
    Matrix b2 = rand_matrix(rng, H->dim(), C.dim, Q);
    Matrix lhs = phi(C, M, convolve_maps(C, H->alg, b1, b2));
    Matrix rhs = phi(C, M, b1) * phi(C, M, b2);
    CHECK(lhs == rhs);
  }
}

// The three convolution-factorization identities on a smash-type tensor
// coalgebra C (x) C', with C an H-comodule coalgebra and C' an H-module
// coalgebra:
//   (u (x) u') * [a(f (x) g)] * (v (x) v')
//       = a((u*f*u^{-1}) (x) (u'*g*v')) Phi[u * Psi(v)]      (u invertible,
//                                                             u', v' equivariant)
//   (u (x) eps') * [a(f (x) id)] = a((u*f) (x) id)
//   [a(f (x) id)] * (v (x) eps') = a((f*v) (x) id)           (v coinvariant)
TEST_CASE("triple convolution factorization identities hold for random data") {
  auto H = kc2_ptr();
  BraidedLine bl = braided_line(H, 2, Scalar::from_int(-1, Q));
  YDCoalgebra Cyd = yd_tensor_power(bl.R, 2);
  YDCoalgebra Dyd = yd_tensor_power(bl.R, 2);
  YDCoalgebra Tyd = yd_tensor_coalgebra(Cyd, Dyd);
  const int dc = Cyd.dim(), dd = Dyd.dim();
  auto rng = seeded_rng(11);

  Matrix lin_basis = h_linear_functional_basis(Dyd.mod);
  Matrix colin_basis = h_colinear_functional_basis(Cyd.mod);
  const Matrix idc = Matrix::identity(dc, Q);
  const Matrix idd = Matrix::identity(dd, Q);

  for (int trial = 0; trial < 10; ++trial) {
    Matrix f = rand_matrix(rng, dc, dc, Q);
    Matrix g = rand_matrix(rng, dd, dd, Q);
    Matrix alpha = rand_matrix(rng, 1, dc * dd, Q);

    Matrix u_row = rand_matrix(rng, 1, dc, Q);
    u_row.at(0, 0) = Scalar::one(Q);  // value 1 on the coaugmentation
    Functional u = functional_from_row(Cyd.co, u_row);
    auto u_inv = convolution_inverse(u);
    REQUIRE(u_inv.has_value());
    Matrix v_row = rand_matrix(rng, 1, dc, Q);
    Functional uprime = rand_combo(rng, Dyd.co, lin_basis);
    Functional vprime = rand_combo(rng, Dyd.co, lin_basis);

    // first identity
    {
      Functional lhs = convolve(
          convolve(functional_from_row(Tyd.co, kronecker(u_row, uprime.coeffs)),
                   functional_from_row(Tyd.co, alpha * kronecker(f, g))),
          functional_from_row(Tyd.co, kronecker(v_row, vprime.coeffs)));

      Matrix f_u = convolve_map_scalar(
          *Cyd.co, convolve_scalar_map(*Cyd.co, u_row, f), u_inv->coeffs);
      Matrix mid = convolve_map_scalar(
          *Dyd.co, convolve_scalar_map(*Dyd.co, uprime.coeffs, g),
          vprime.coeffs);
      Matrix beta = convolve_scalar_map(*Cyd.co, u_row, psi(Cyd.mod,
                    functional_from_row(Cyd.co, v_row)));
      Matrix rhs = alpha * kronecker(f_u, mid) * phi(*Cyd.co, Dyd.mod, beta);
      CHECK(lhs.coeffs == rhs);
    }

    // second identity (no hypotheses on u beyond linearity)
    {
      Functional lhs = convolve(
          functional_from_row(Tyd.co,
                              kronecker(v_row, Dyd.co->counit)),
          functional_from_row(Tyd.co, alpha * kronecker(f, idd)));
      Matrix rhs = alpha * kronecker(convolve_scalar_map(*Cyd.co, v_row, f), idd);
      CHECK(lhs.coeffs == rhs);
    }

    // third identity (right factor must be coinvariant)
    {
      Functional w = rand_combo(rng, Cyd.co, colin_basis);
      Functional lhs = convolve(
          functional_from_row(Tyd.co, alpha * kronecker(f, idd)),
          functional_from_row(Tyd.co, kronecker(w.coeffs, Dyd.co->counit)));
      Matrix rhs =
          alpha * kronecker(convolve_map_scalar(*Cyd.co, f, w.coeffs), idd);
      CHECK(lhs.coeffs == rhs);
    }
  }
}

TEST_CASE("shape validation rejects inconsistent module data") {
  auto H = sweedler_ptr();
  YDModule m = adjoint_yd_module(H);
  m.action = Matrix(2, 3, Q);
  CHECK_THROWS_AS(check_yd(m), input_error);
}
