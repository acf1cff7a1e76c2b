#include "hopf/dualquasi.hpp"

#include <chrono>
#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace hopf {

namespace {

int first_diff_col(const Matrix& a, const Matrix& b) {
  for (int j = 0; j < a.cols(); ++j)
    for (int i = 0; i < a.rows(); ++i)
      if (a.at(i, j) != b.at(i, j)) return j;
  return -1;
}

using ColLabel = std::function<std::string(int)>;

ColLabel label_of(const std::vector<std::string>& labels) {
  return [&labels](int j) { return labels[j]; };
}

void add_equality(CheckReport& rep, std::string name, const Matrix& lhs,
                  const Matrix& rhs, const ColLabel& label) {
  const int j = first_diff_col(lhs, rhs);
  rep.add(std::move(name), j < 0, j < 0 ? "" : "at " + label(j));
}

// row . (I_left (x) M (x) I_right) without forming the Kronecker product.
Matrix row_middle(const Matrix& row, int left, const Matrix& M, int right) {
  const int mr = M.rows(), mc = M.cols();
  Matrix out(1, left * mc * right, row.field());
  for (int a = 0; a < left; ++a)
    for (int i = 0; i < mr; ++i)
      for (int b = 0; b < right; ++b) {
        const Scalar& c = row.at(0, (a * mr + i) * right + b);
        if (c.is_zero()) continue;
        for (int j = 0; j < mc; ++j) {
          if (M.at(i, j).is_zero()) continue;
          Scalar& slot = out.at(0, (a * mc + j) * right + b);
          slot = slot + c * M.at(i, j);
        }
      }
  return out;
}

bool h_linear_row(const YDModule& m, const Matrix& row) {
  return row * m.action == kronecker(m.H->co->counit, row);
}

Functional invert(const Functional& f, const std::string& what) {
  auto inv = convolution_inverse(f);
  if (!inv)
    throw input_error(what + ": functional is not convolution invertible");
  return *inv;
}

// v * m * v^{-1} as a map on the square coalgebra c2 (braided or plain).
Matrix twisted_mult(const Coalgebra& c2, const Matrix& mult,
                    const Functional& v, const Functional& v_inv) {
  return convolve_map_scalar(c2, convolve_scalar_map(c2, v.coeffs, mult),
                             v_inv.coeffs);
}

// xi = u_H v^{-1} * Psi(v) on the braided square of R.
Matrix raw_cocycle(const PreBialgebra& r, const YDCoalgebra& c2,
                   const Functional& v, const Functional& v_inv) {
  const Algebra& ha = r.hopf()->alg;
  return convolve_maps(*c2.co, ha, ha.unit * v_inv.coeffs, psi(c2.mod, v));
}

// Shared ingredients of the braided twist of R by an invertible w.
struct TwistParts {
  YDCoalgebra c2, c3;
  Functional w_inv;
  Matrix mw;         // w * m * w^{-1}
  Functional alpha;  // [w(R (x) mw) * (eps (x) w)] * [(winv (x) eps) * winv(mw (x) R)]
};

TwistParts twist_parts(const PreBialgebra& r, const Functional& w,
                       const std::string& what) {
  TwistParts p{yd_tensor_power(r.R, 2), yd_tensor_power(r.R, 3), {}, {}, {}};
  if (!w.dom || !same_coalgebra(*w.dom, *p.c2.co))
    throw input_error(what +
                      ": functional does not live on the braided square");
  p.w_inv = invert(w, what);
  p.mw = twisted_mult(*p.c2.co, r.mult, w, p.w_inv);

  const int d = r.dim();
  const Matrix& eps = r.R.co->counit;
  const Functional plus = convolve(
      functional_from_row(p.c3.co, row_middle(w.coeffs, d, p.mw, 1)),
      functional_from_row(p.c3.co, kronecker(eps, w.coeffs)));
  const Functional minus = convolve(
      functional_from_row(p.c3.co, kronecker(p.w_inv.coeffs, eps)),
      functional_from_row(p.c3.co, row_middle(p.w_inv.coeffs, 1, p.mw, d)));
  p.alpha = convolve(plus, minus);
  return p;
}

// The three defining properties of a normalized measuring 1-cocycle
// xi: R (x) R -> H (H-linearity for the adjoint action, the comultiplication
// identity through the coaction, and xi(1 (x) 1) = 1); the minimal gate for
// the cocycle <-> gauge correspondence.
CheckReport measuring_cocycle_report(const PreBialgebra& r, const Matrix& xi) {
  const HopfAlgebra& H = *r.hopf();
  const int dh = H.dim();
  const YDCoalgebra c2 = yd_tensor_power(r.R, 2);
  const ColLabel zlab = label_of(c2.co->labels);
  CheckReport rep;

  const YDModule adj = adjoint_yd_module(r.hopf());
  add_equality(rep, "cocycle-adjoint-linear", xi * c2.mod.action,
               adj.action * kronecker(Matrix::identity(dh, r.field()), xi),
               [&](int j) { return c2.co->labels[j % c2.co->dim]; });

  const Matrix lhs = delta_dense(*H.co) * xi;
  const Matrix rhs = kronecker(H.alg.mult, xi) *
                     kronecker(xi, c2.mod.coaction) * delta_dense(*c2.co);
  add_equality(rep, "cocycle-comultiplicative", lhs, rhs, zlab);
  add_equality(rep, "cocycle-counital", H.co->counit * xi, c2.co->counit,
               zlab);
  const bool normal = xi * c2.co->coaug == H.alg.unit;
  rep.add("cocycle-normal", normal, normal ? "" : "at 1⊗1");
  return rep;
}

// v(1 (x) 1) = 1, H-linearity, and lambda . Psi(v) = eps: membership in the
// domain of the gauge -> cocycle direction.
CheckReport gauge_domain_report(const YDCoalgebra& c2, const Functional& v,
                                const Functional& lambda) {
  CheckReport rep;
  const bool normal = v.apply(c2.co->coaug).is_one();
  rep.add("gauge-normal", normal, normal ? "" : "at 1⊗1");
  rep.add("gauge-h-linear", h_linear_row(c2.mod, v.coeffs), "");
  add_equality(rep, "gauge-integral-neutral", lambda.coeffs * psi(c2.mod, v),
               c2.co->counit, label_of(c2.co->labels));
  return rep;
}

void validate_dual_quasi(const DualQuasi& d, const std::string& what) {
  if (!d.D.co) throw input_error(what + ": missing coalgebra");
  const int n = d.D.co->dim;
  if (d.D.alg.dim != n || d.D.alg.mult.rows() != n ||
      d.D.alg.mult.cols() != n * n || d.D.alg.unit.rows() != n ||
      d.D.alg.unit.cols() != 1 || !(d.D.alg.field == d.D.co->field))
    throw input_error(
        what + ": multiplication/unit shapes do not match the coalgebra");
  if (!d.reassoc.dom ||
      !same_coalgebra(*d.reassoc.dom, *tensor_power_plain(d.D.co, 3)))
    throw input_error(what + ": reassociator must live on the tensor cube");
}

// alpha . (unit inserted in one of the three cube slots) = eps (x) eps,
// reported as one item with a witness naming the slot.
void add_reassociator_unital(CheckReport& rep, const Coalgebra& base,
                             const Matrix& unit, const Functional& alpha) {
  const int d = base.dim;
  const FieldSpec& f = base.field;
  const Matrix id = Matrix::identity(d, f);
  const Matrix eps2 = kronecker(base.counit, base.counit);
  const Matrix slot[3] = {kronecker(unit, Matrix::identity(d * d, f)),
                          kronecker(id, kronecker(unit, id)),
                          kronecker(Matrix::identity(d * d, f), unit)};
  bool ok = true;
  std::string wit;
  for (int s = 0; s < 3 && ok; ++s) {
    const Matrix got = alpha.coeffs * slot[s];
    const int j = first_diff_col(got, eps2);
    if (j < 0) continue;
    ok = false;
    const std::string &a = base.labels[j / d], &b = base.labels[j % d];
    wit = s == 0 ? "at 1⊗" + a + "⊗" + b
                 : s == 1 ? "at " + a + "⊗1⊗" + b : "at " + a + "⊗" + b + "⊗1";
  }
  rep.add("reassociator-unital", ok, wit);
}

// The pentagon-style identity
//   a(D (x) D (x) m) * a(m (x) D (x) D) = (eps (x) a) * a(D (x) m (x) D) * (a (x) eps)
// with all convolutions on the given 4th tensor power coalgebra.
void add_reassociator_3_cocycle(CheckReport& rep, const CoalgebraPtr& pow4,
                                const Matrix& counit, const Matrix& mult,
                                int d, const Functional& alpha) {
  const Matrix& a = alpha.coeffs;
  auto fn = [&](Matrix row) { return functional_from_row(pow4, std::move(row)); };
  const Functional lhs = convolve(fn(row_middle(a, d * d, mult, 1)),
                                  fn(row_middle(a, 1, mult, d * d)));
  const Functional rhs =
      convolve(convolve(fn(kronecker(counit, a)),
                        fn(row_middle(a, d, mult, d))),
               fn(kronecker(a, counit)));
  add_equality(rep, "reassociator-3-cocycle", lhs.coeffs, rhs.coeffs,
               label_of(pow4->labels));
}

// m(D (x) m) * alpha = alpha * m(m (x) D) on the given cube coalgebra.
void add_quasi_associativity(CheckReport& rep, const Coalgebra& cube,
                             const Matrix& mult, int d,
                             const Functional& alpha, const ColLabel& label) {
  const Matrix id = Matrix::identity(d, mult.field());
  const Matrix lhs = convolve_map_scalar(cube, mult * kronecker(id, mult),
                                         alpha.coeffs);
  const Matrix rhs = convolve_scalar_map(cube, alpha.coeffs,
                                         mult * kronecker(mult, id));
  add_equality(rep, "multiplication-quasi-associative", lhs, rhs, label);
}

void stage_time(std::chrono::steady_clock::time_point t0, std::int64_t& out) {
  out = std::chrono::duration_cast<std::chrono::microseconds>(
            std::chrono::steady_clock::now() - t0)
            .count();
}

}  // namespace

Gauge make_gauge(const DualQuasi& d, const Functional& v) {
  validate_dual_quasi(d, "make_gauge");
  const CoalgebraPtr sq = tensor_power_plain(d.D.co, 2);
  if (!v.dom || !same_coalgebra(*v.dom, *sq))
    throw input_error(
        "make_gauge: functional does not live on the tensor square");
  const int n = d.dim();
  const Matrix id = Matrix::identity(n, d.field());
  if (v.coeffs * kronecker(id, d.D.alg.unit) != d.D.co->counit ||
      v.coeffs * kronecker(d.D.alg.unit, id) != d.D.co->counit)
    throw axiom_error("make_gauge: functional is not unital");
  auto inv = convolution_inverse(v);
  if (!inv)
    throw axiom_error("make_gauge: functional is not convolution invertible");
  return {v, *inv};
}

Functional gauge_from_cocycle(const PreBialgebra& r, const Cocycle& xi,
                              const Functional& lambda) {
  const HopfAlgebra& H = *r.hopf();
  const int d = r.dim(), dh = H.dim();
  if (xi.xi.rows() != dh || xi.xi.cols() != d * d ||
      !(xi.xi.field() == r.field()))
    throw input_error(
        "gauge_from_cocycle: cocycle must be dimH x dim^2 over the base field");
  if (!lambda.dom || !same_coalgebra(*lambda.dom, *H.co))
    throw input_error("gauge_from_cocycle: lambda does not live on H");
  const IntegralResult ir = ad_invariant_integral(H);
  if (ir.status != IntegralStatus::found ||
      ir.lambda.coeffs != lambda.coeffs)
    throw input_error(
        "gauge_from_cocycle: lambda is not the ad-invariant integral of H");

  const CheckReport gate = measuring_cocycle_report(r, xi.xi);
  if (!gate.ok())
    throw axiom_error("gauge_from_cocycle: " + gate.first_failure());

  const YDCoalgebra c2 = yd_tensor_power(r.R, 2);
  const Functional lx = functional_from_row(c2.co, lambda.coeffs * xi.xi);
  auto v = convolution_inverse(lx);
  if (!v)
    throw axiom_error(
        "gauge_from_cocycle: lambda . xi is not convolution invertible "
        "(the pre-bialgebra cannot be connected)");

  const CheckReport post = gauge_domain_report(c2, *v, lambda);
  if (!post.ok())
    throw axiom_error("gauge_from_cocycle: produced functional fails " +
                      post.first_failure());
  return *v;
}

Cocycle cocycle_from_gauge(const PreBialgebra& r, const Functional& v) {
  const YDCoalgebra c2 = yd_tensor_power(r.R, 2);
  if (!v.dom || !same_coalgebra(*v.dom, *c2.co))
    throw input_error(
        "cocycle_from_gauge: functional does not live on the braided square");
  const IntegralResult ir = ad_invariant_integral(*r.hopf());
  if (ir.status != IntegralStatus::found)
    throw input_error(
        "cocycle_from_gauge: H has no ad-invariant integral (" + ir.detail +
        ")");
  const Functional v_inv = invert(v, "cocycle_from_gauge");
  const CheckReport gate = gauge_domain_report(c2, v, ir.lambda);
  if (!gate.ok())
    throw axiom_error("cocycle_from_gauge: " + gate.first_failure());

  const Matrix xi = raw_cocycle(r, c2, v, v_inv);
  const CheckReport post = measuring_cocycle_report(r, xi);
  if (!post.ok())
    throw axiom_error("cocycle_from_gauge: produced cocycle fails " +
                      post.first_failure());
  return {xi};
}

Functional twisted_reassociator(const PreBialgebra& r, const Functional& w) {
  return twist_parts(r, w, "twisted_reassociator").alpha;
}

CheckReport check_gauge_conditions(const PreBialgebra& r,
                                   const Functional& v) {
  const TwistParts p = twist_parts(r, v, "check_gauge_conditions");
  const HopfAlgebra& H = *r.hopf();
  const int d = r.dim(), dh = H.dim();
  const Matrix id = Matrix::identity(d, r.field());
  const ColLabel pair_lab = label_of(p.c2.co->labels);
  CheckReport rep;

  add_equality(rep, "twisted-multiplication-colinear",
               r.R.mod.coaction * p.mw,
               kronecker(Matrix::identity(dh, r.field()), p.mw) *
                   p.c2.mod.coaction,
               pair_lab);
  add_quasi_associativity(rep, *p.c3.co, p.mw, d, p.alpha,
                          label_of(p.c3.co->labels));
  rep.items.back().name = "twisted-multiplication-quasi-associative";
  add_equality(rep, "reassociator-colinear", psi(p.c3.mod, p.alpha),
               H.alg.unit * p.alpha.coeffs, label_of(p.c3.co->labels));

  {
    const Matrix right = v.coeffs * kronecker(id, r.unit());
    const Matrix left = v.coeffs * kronecker(r.unit(), id);
    const int jr = first_diff_col(right, r.R.co->counit);
    const int jl = first_diff_col(left, r.R.co->counit);
    std::string wit;
    if (jr >= 0)
      wit = "at " + r.R.co->labels[jr] + "⊗1";
    else if (jl >= 0)
      wit = "at 1⊗" + r.R.co->labels[jl];
    rep.add("gauge-unital", jr < 0 && jl < 0, wit);
  }

  {
    const Cocycle xi{raw_cocycle(r, p.c2, v, p.w_inv)};
    const CheckReport cc = check_cocycle(r, xi);
    const std::pair<const char*, const char*> pairs[4] = {
        {"twisted-multiplication-colinear", "multiplication-coaction-twist"},
        {"twisted-multiplication-quasi-associative",
         "multiplication-quasi-associative"},
        {"reassociator-colinear", "xi-quasi-cocycle"},
        {"gauge-unital", "xi-unital"}};
    bool ok = true;
    std::string wit;
    for (const auto& pr : pairs) {
      const CheckItem* mine = rep.find(pr.first);
      const CheckItem* theirs = cc.find(pr.second);
      if (mine && theirs && mine->ok != theirs->ok) {
        ok = false;
        wit = std::string(pr.first) + " disagrees with " + pr.second;
        break;
      }
    }
    rep.add("matches-untwisted-cocycle", ok, wit);
  }
  return rep;
}

CheckReport check_braided_dual_quasi(const BraidedDualQuasi& q) {
  CheckReport rep;
  rep.merge(check_prebialgebra(q.Q), "q: ");

  const PreBialgebra& r = q.Q;
  const HopfAlgebra& H = *r.hopf();
  const int d = r.dim(), dh = H.dim();
  const YDCoalgebra c2 = yd_tensor_power(r.R, 2);
  const YDCoalgebra c3 = yd_tensor_power(r.R, 3);
  if (!q.reassoc.dom || !same_coalgebra(*q.reassoc.dom, *c3.co))
    throw input_error(
        "check_braided_dual_quasi: reassociator must live on the braided cube");
  const Functional& a = q.reassoc;
  const ColLabel cube_lab = label_of(c3.co->labels);

  add_equality(rep, "multiplication-colinear", r.R.mod.coaction * r.mult,
               kronecker(Matrix::identity(dh, r.field()), r.mult) *
                   c2.mod.coaction,
               label_of(c2.co->labels));
  const bool inv = convolution_inverse(a).has_value();
  rep.add("reassociator-invertible", inv, inv ? "" : "no convolution inverse");
  rep.add("reassociator-h-linear", h_linear_row(c3.mod, a.coeffs), "");
  add_equality(rep, "reassociator-colinear", psi(c3.mod, a),
               H.alg.unit * a.coeffs, cube_lab);
  add_reassociator_unital(rep, *r.R.co, r.unit(), a);
  add_reassociator_3_cocycle(rep, yd_tensor_power(r.R, 4).co, r.R.co->counit,
                             r.mult, d, a);
  add_quasi_associativity(rep, *c3.co, r.mult, d, a, cube_lab);

  const Matrix id = Matrix::identity(d, r.field());
  const bool unital = r.mult * kronecker(r.unit(), id) == id &&
                      r.mult * kronecker(id, r.unit()) == id;
  rep.add("multiplication-unital", unital, "");
  return rep;
}

CheckReport check_dual_quasi(const DualQuasi& dq) {
  validate_dual_quasi(dq, "check_dual_quasi");
  const Coalgebra& co = *dq.D.co;
  const Algebra& alg = dq.D.alg;
  const int d = dq.dim();
  const FieldSpec& f = dq.field();
  const Matrix id = Matrix::identity(d, f);
  const CoalgebraPtr c3 = tensor_power_plain(dq.D.co, 3);
  CheckReport rep;

  {
    // Delta m = (m (x) m)(D (x) swap (x) D)(Delta (x) Delta), columnwise to
    // avoid the dim^4 x dim^4 shuffle.
    bool ok = true;
    std::string wit;
    for (int i = 0; i < d && ok; ++i)
      for (int j = 0; j < d && ok; ++j) {
        const Matrix lhs = apply_delta(co, alg.mult_col(i, j));
        Matrix rhs(d * d, 1, f);
        for (const DeltaTerm& ti : co.delta[i])
          for (const DeltaTerm& tj : co.delta[j]) {
            const Matrix add = kronecker(alg.mult_col(ti.left, tj.left),
                                         alg.mult_col(ti.right, tj.right))
                                   .scaled(ti.coeff * tj.coeff);
            rhs = rhs + add;
          }
        if (lhs != rhs) {
          ok = false;
          wit = "at " + co.labels[i] + "⊗" + co.labels[j];
        }
      }
    rep.add("multiplication-comultiplicative", ok, wit);
  }
  add_equality(rep, "multiplication-counital", co.counit * alg.mult,
               kronecker(co.counit, co.counit),
               [&](int j) { return co.labels[j / d] + "⊗" + co.labels[j % d]; });
  rep.add("unit-grouplike",
          apply_delta(co, alg.unit) == kronecker(alg.unit, alg.unit) &&
              (co.counit * alg.unit).at(0, 0).is_one(),
          "");
  add_equality(rep, "unit-law-left", alg.mult * kronecker(alg.unit, id), id,
               label_of(co.labels));
  add_equality(rep, "unit-law-right", alg.mult * kronecker(id, alg.unit), id,
               label_of(co.labels));

  const bool inv = convolution_inverse(dq.reassoc).has_value();
  rep.add("reassociator-invertible", inv, inv ? "" : "no convolution inverse");
  add_reassociator_unital(rep, co, alg.unit, dq.reassoc);
  add_reassociator_3_cocycle(rep, tensor_power_plain(dq.D.co, 4), co.counit,
                             alg.mult, d, dq.reassoc);
  add_quasi_associativity(rep, *c3, alg.mult, d, dq.reassoc,
                          label_of(c3->labels));
  return rep;
}

BraidedDualQuasi twist_prebialgebra(const PreBialgebra& r,
                                    const Functional& v) {
  const TwistParts p = twist_parts(r, v, "twist_prebialgebra");
  const Connectivity conn = is_connected(*r.R.co);
  if (!conn.connected)
    throw axiom_error("twist_prebialgebra: the pre-bialgebra is not connected");
  if (!h_linear_row(p.c2.mod, v.coeffs))
    throw axiom_error("twist_prebialgebra: the functional is not H-linear");
  const CheckReport gate = check_gauge_conditions(r, v);
  if (!gate.ok())
    throw axiom_error("twist_prebialgebra: gauge conditions fail: " +
                      gate.first_failure());

  const Cocycle xi{raw_cocycle(r, p.c2, v, p.w_inv)};
  const Functional differential =
      partial_prebialgebra(r, xi, v, {2, DiffSign::full}, DiffRoute::direct)
          .value;
  if (differential.coeffs != p.alpha.coeffs)
    throw axiom_error(
        "twist_prebialgebra: the degree-2 differential and the twisted "
        "reassociator disagree");

  BraidedDualQuasi q{{r.R, p.mw}, differential};
  const CheckReport post = check_braided_dual_quasi(q);
  if (!post.ok())
    throw axiom_error(
        "twist_prebialgebra: twisted structure fails the braided axioms: " +
        post.first_failure());
  return q;
}

DualQuasi bosonize_braided(const BraidedDualQuasi& q) {
  const CheckReport gate = check_braided_dual_quasi(q);
  if (!gate.ok())
    throw axiom_error("bosonize_braided: braided axioms fail: " +
                      gate.first_failure());

  const PreBialgebra& r = q.Q;
  const HopfAlgebra& H = *r.hopf();
  const Cocycle trivial{
      H.alg.unit * kronecker(r.R.co->counit, r.R.co->counit)};
  DualQuasi b{smash_product_data(r, trivial), {}};
  b.reassoc = mho_n(r, trivial, 3, q.reassoc).value;

  const CheckReport post = check_dual_quasi(b);
  if (!post.ok())
    throw axiom_error("bosonize_braided: smash product fails the dual quasi "
                      "axioms: " +
                      post.first_failure());

  if (is_connected(*r.R.co).connected) {
    const Matrix w0 =
        kronecker(r.unit(), Matrix::identity(H.dim(), r.field()));
    Matrix deltas(b.dim() * b.dim(), w0.cols(), r.field());
    for (int j = 0; j < w0.cols(); ++j) {
      const Matrix dj = apply_delta(*b.D.co, w0.col(j));
      for (int i = 0; i < dj.rows(); ++i) deltas.at(i, j) = dj.at(i, 0);
    }
    if (!solve_linear(kronecker(w0, w0), deltas))
      throw axiom_error(
          "bosonize_braided: 1 (x) H is not a subcoalgebra of the smash "
          "product");
    const std::vector<int> dims = wedge_filtration_dims(*b.D.co, w0);
    if (dims.empty() || dims.back() != b.dim())
      throw axiom_error(
          "bosonize_braided: the wedge filtration from 1 (x) H does not "
          "exhaust the smash product");
  }
  return b;
}

DualQuasi twist_dual_quasi(const DualQuasi& dq, const Gauge& g) {
  validate_dual_quasi(dq, "twist_dual_quasi");
  const CoalgebraPtr c2 = tensor_power_plain(dq.D.co, 2);
  if (!g.v.dom || !same_coalgebra(*g.v.dom, *c2))
    throw input_error(
        "twist_dual_quasi: gauge does not live on the tensor square");
  if (convolve(g.v, g.v_inv).coeffs != c2->counit)
    throw input_error("twist_dual_quasi: cached gauge inverse is wrong");

  const int d = dq.dim();
  const Matrix& m = dq.D.alg.mult;
  const Matrix& eps = dq.D.co->counit;
  const CoalgebraPtr c3 = tensor_power_plain(dq.D.co, 3);
  auto fn = [&](Matrix row) { return functional_from_row(c3, std::move(row)); };

  DualQuasi out{dq.D, {}};
  out.D.alg.mult = twisted_mult(*c2, m, g.v, g.v_inv);
  out.reassoc = convolve(
      convolve(convolve(fn(kronecker(eps, g.v.coeffs)),
                        fn(row_middle(g.v.coeffs, d, m, 1))),
               convolve(dq.reassoc,
                        fn(row_middle(g.v_inv.coeffs, 1, m, d)))),
      fn(kronecker(g.v_inv.coeffs, eps)));

  const CheckReport post = check_dual_quasi(out);
  if (!post.ok())
    throw axiom_error(
        "twist_dual_quasi: twisted structure fails the dual quasi axioms: " +
        post.first_failure());
  return out;
}

const PipelineStage* PipelineReport::find(const std::string& name) const {
  for (const auto& s : stages)
    if (s.name == name) return &s;
  return nullptr;
}

std::string PipelineReport::summary() const {
  std::string out;
  for (const auto& s : stages) {
    out += !s.ran ? "SKIP" : s.ok ? "PASS" : "FAIL";
    out += " " + s.name;
    if (!s.detail.empty()) out += ": " + s.detail;
    out += "\n";
  }
  return out;
}

PipelineReport run_pipeline(const SplittingDatum& datum, bool keep_going) {
  PipelineReport rep;
  bool failed = false;

  auto run = [&](const char* name, bool ready, const char* missing,
                 const std::function<std::pair<bool, std::string>()>& body) {
    if (failed && !keep_going) return;
    PipelineStage s;
    s.name = name;
    if (!ready) {
      s.detail = std::string("skipped: requires ") + missing;
      rep.stages.push_back(std::move(s));
      return;
    }
    s.ran = true;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      auto [ok, detail] = body();
      s.ok = ok;
      s.detail = std::move(detail);
    } catch (const std::exception& e) {
      s.ok = false;
      s.detail = e.what();
    }
    stage_time(t0, s.microseconds);
    if (!s.ok) failed = true;
    rep.stages.push_back(std::move(s));
  };

  std::optional<Functional> lambda;
  std::optional<Bosonization> smash;
  std::optional<DualQuasi> smash_dq;
  std::optional<Gauge> zeta;

  run("extract", true, "", [&]() -> std::pair<bool, std::string> {
    Decomposition dec = extract_prebialgebra(datum);
    const CheckReport pre = check_prebialgebra(dec.R);
    if (!pre.ok()) return {false, pre.first_failure()};
    const CheckReport cc = check_cocycle(dec.R, dec.xi);
    if (!cc.ok()) return {false, cc.first_failure()};
    const std::string detail =
        "dim R = " + std::to_string(dec.R.dim()) +
        ", dim H = " + std::to_string(dec.R.hopf()->dim());
    rep.decomposition = std::move(dec);
    return {true, detail};
  });

  run("connectedness", rep.decomposition.has_value(), "extract",
      [&]() -> std::pair<bool, std::string> {
        const Connectivity c = is_connected(*rep.decomposition->R.R.co);
        std::string dims;
        for (size_t i = 0; i < c.filtration_dims.size(); ++i)
          dims += (i ? "," : "") + std::to_string(c.filtration_dims[i]);
        return {c.connected,
                (c.connected ? "filtration dims " : "filtration stalls at ") +
                    dims};
      });

  run("integral", rep.decomposition.has_value(), "extract",
      [&]() -> std::pair<bool, std::string> {
        const IntegralResult ir =
            ad_invariant_integral(*rep.decomposition->R.hopf());
        if (ir.status != IntegralStatus::found)
          return {false, "no ad-invariant integral: " + ir.detail};
        lambda = ir.lambda;
        return {true, "ad-invariant integral found"};
      });

  run("gauge-correspondence",
      rep.decomposition.has_value() && lambda.has_value(),
      "extract and integral", [&]() -> std::pair<bool, std::string> {
        const PreBialgebra& r = rep.decomposition->R;
        Functional v = gauge_from_cocycle(r, rep.decomposition->xi, *lambda);
        const CheckReport gc = check_gauge_conditions(r, v);
        if (!gc.ok()) return {false, gc.first_failure()};
        const Cocycle back = cocycle_from_gauge(r, v);
        if (back.xi != rep.decomposition->xi.xi)
          return {false, "recovered cocycle differs from the extracted one"};
        const bool trivial = v.coeffs == v.dom->counit;
        rep.gauge = std::move(v);
        return {true, std::string("v ") + (trivial ? "=" : "!=") +
                          " eps; cocycle round trip exact"};
      });

  run("braided-twist", rep.decomposition.has_value() && rep.gauge.has_value(),
      "gauge-correspondence", [&]() -> std::pair<bool, std::string> {
        BraidedDualQuasi q =
            twist_prebialgebra(rep.decomposition->R, *rep.gauge);
        const bool trivial = q.reassoc.coeffs == q.reassoc.dom->counit;
        rep.braided = std::move(q);
        return {true, std::string(trivial ? "trivial" : "nontrivial") +
                          " braided reassociator"};
      });

  run("smash-gauge", rep.decomposition.has_value() && rep.gauge.has_value(),
      "gauge-correspondence", [&]() -> std::pair<bool, std::string> {
        const PreBialgebra& r = rep.decomposition->R;
        smash = bosonize_cocycle(r, rep.decomposition->xi);
        smash_dq = DualQuasi{
            smash->A,
            counit_functional(tensor_power_plain(smash->A.co, 3))};
        const TransportResult t =
            mho_n(r, rep.decomposition->xi, 2, *rep.gauge);
        if (!t.preconditions_ok)
          return {false, t.warnings.empty() ? "transport preconditions fail"
                                            : t.warnings.front()};
        zeta = make_gauge(*smash_dq, t.value);
        rep.smash_gauge = t.value;
        const bool trivial =
            t.value.coeffs == t.value.dom->counit;
        return {true, std::string("zeta ") + (trivial ? "=" : "!=") +
                          " eps, unital and invertible"};
      });

  run("twist-smash-product", smash_dq.has_value() && zeta.has_value(),
      "smash-gauge", [&]() -> std::pair<bool, std::string> {
        DualQuasi tw = twist_dual_quasi(*smash_dq, *zeta);
        const Functional diff =
            partial_bialgebra(smash->A, zeta->v, {2, DiffSign::full});
        if (tw.reassoc.coeffs != diff.coeffs)
          return {false,
                  "twisted reassociator differs from the degree-2 "
                  "differential of zeta"};
        rep.twisted = std::move(tw);
        return {true, "reassociator equals the degree-2 differential"};
      });

  run("bosonize-braided", rep.braided.has_value(), "braided-twist",
      [&]() -> std::pair<bool, std::string> {
        rep.bosonized = bosonize_braided(*rep.braided);
        return {true, "dual quasi axioms and coradical bound verified"};
      });

  run("structures-match",
      rep.twisted.has_value() && rep.bosonized.has_value() &&
          rep.decomposition.has_value() && rep.braided.has_value(),
      "twist-smash-product and bosonize-braided",
      [&]() -> std::pair<bool, std::string> {
        const DualQuasi& tw = *rep.twisted;
        const DualQuasi& bo = *rep.bosonized;
        if (!same_coalgebra(*tw.D.co, *bo.D.co))
          return {false, "coalgebras differ"};
        if (tw.D.alg.unit != bo.D.alg.unit) return {false, "units differ"};
        if (tw.D.alg.mult != bo.D.alg.mult) {
          const int j = first_diff_col(tw.D.alg.mult, bo.D.alg.mult);
          return {false, "multiplications differ at column " +
                             std::to_string(j)};
        }
        if (tw.reassoc.coeffs != bo.reassoc.coeffs)
          return {false, "reassociators differ"};
        const Functional transported =
            mho_n(rep.decomposition->R, rep.decomposition->xi, 3,
                  rep.braided->reassoc)
                .value;
        if (transported.coeffs != bo.reassoc.coeffs)
          return {false,
                  "transported braided reassociator differs from the smash "
                  "one"};
        return {true,
                "multiplication, unit, coalgebra, and reassociator agree"};
      });

  rep.ok = !rep.stages.empty() && rep.stages.size() == 9;
  for (const auto& s : rep.stages) rep.ok = rep.ok && s.ok;
  return rep;
}

}  // namespace hopf
