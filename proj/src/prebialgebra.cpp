#include "hopf/prebialgebra.hpp"

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hopf {

namespace {

void validate_prebialgebra(const PreBialgebra& r, const std::string& what) {
  if (!r.R.co || !r.R.mod.H)
    throw input_error(what + ": incomplete pre-bialgebra");
  if (r.R.mod.dim != r.R.co->dim)
    throw input_error(what + ": module/coalgebra dimension mismatch");
  if (!r.R.co->has_coaug())
    throw input_error(what + ": the underlying coalgebra must be coaugmented");
  const int d = r.dim();
  if (r.mult.rows() != d || r.mult.cols() != d * d ||
      !(r.mult.field() == r.field()))
    throw input_error(what +
                      ": multiplication must be dim x dim^2 over the base field");
}

void validate_cocycle(const PreBialgebra& r, const Cocycle& xi,
                      const std::string& what) {
  const int d = r.dim(), dh = r.hopf()->dim();
  if (xi.xi.rows() != dh || xi.xi.cols() != d * d ||
      !(xi.xi.field() == r.field()))
    throw input_error(what +
                      ": cocycle must be dimH x dim^2 over the base field");
}

int ipow(int b, int e) {
  int out = 1;
  while (e-- > 0) out *= b;
  return out;
}

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

ColLabel product_label(std::vector<const std::vector<std::string>*> parts) {
  std::vector<int> dims;
  dims.reserve(parts.size());
  for (const auto* p : parts) dims.push_back(static_cast<int>(p->size()));
  return [parts = std::move(parts), dims = std::move(dims)](int flat) {
    const auto ix = unflat_index(flat, dims);
    std::string out;
    for (size_t k = 0; k < parts.size(); ++k) {
      if (k) out += "⊗";
      out += (*parts[k])[ix[k]];
    }
    return out;
  };
}

void add_equality(CheckReport& rep, std::string name, const Matrix& lhs,
                  const Matrix& rhs, const ColLabel& label) {
  const int j = first_diff_col(lhs, rhs);
  rep.add(std::move(name), j < 0, j < 0 ? "" : "at " + label(j));
}

// dst.col(col) += c * (left (x) right)
void add_kron_into(Matrix& dst, int col, const Scalar& c, const Matrix& left,
                   const Matrix& right) {
  if (c.is_zero()) return;
  const int dr = right.rows();
  for (int p = 0; p < left.rows(); ++p) {
    if (left.at(p, 0).is_zero()) continue;
    const Scalar cp = c * left.at(p, 0);
    for (int q = 0; q < dr; ++q) {
      if (right.at(q, 0).is_zero()) continue;
      Scalar& slot = dst.at(p * dr + q, col);
      slot = slot + cp * right.at(q, 0);
    }
  }
}

// Left-fold power of a Yetter-Drinfeld module; n = 0 gives the base field.
YDModule yd_module_power(const YDModule& m, int n) {
  if (n == 0) return trivial_yd_module(m.H);
  YDModule out = m;
  for (int k = 1; k < n; ++k) out = yd_tensor_module(out, m);
  return out;
}

CoalgebraPtr braided_power(const PreBialgebra& r, int n) {
  return yd_tensor_power(r.R, n).co;
}

// Multiplication of the smash product R #_xi H:
//   (r # h)(s # l) = m(r{1} (x) (r{2}(-1) h(1)).s{1})
//                    # xi(r{2}(0) (x) h(2).s{2}) h(3) l.
Matrix smash_multiplication(const PreBialgebra& r, const Cocycle& xi) {
  const HopfAlgebra& H = *r.hopf();
  const Coalgebra& rc = *r.R.co;
  const Matrix& act = r.R.mod.action;
  const Matrix& coact = r.R.mod.coaction;
  const int d = r.dim(), dh = H.dim(), da = d * dh;
  const FieldSpec& f = r.field();
  Matrix out(da, da * da, f);
  for (int ri = 0; ri < d; ++ri)
    for (int h = 0; h < dh; ++h) {
      const auto htriples = delta_squared(*H.co, h);
      for (int s = 0; s < d; ++s)
        for (int l = 0; l < dh; ++l) {
          const int col = (ri * dh + h) * da + (s * dh + l);
          for (const auto& t1 : rc.delta[ri])
            for (int a = 0; a < dh; ++a)
              for (int r20 = 0; r20 < d; ++r20) {
                const Scalar& c1 = coact.at(a * d + r20, t1.right);
                if (c1.is_zero()) continue;
                for (const auto& th : htriples) {
                  const Matrix u = H.alg.mult_col(a, th.a);  // r{2}(-1) h(1)
                  for (const auto& t2 : rc.delta[s]) {
                    // left slot: m(r{1} (x) u.s{1})
                    Matrix left(d, 1, f);
                    for (int uu = 0; uu < dh; ++uu) {
                      if (u.at(uu, 0).is_zero()) continue;
                      for (int aa = 0; aa < d; ++aa) {
                        const Scalar w =
                            u.at(uu, 0) * act.at(aa, uu * d + t2.left);
                        if (w.is_zero()) continue;
                        for (int p = 0; p < d; ++p) {
                          Scalar& slot = left.at(p, 0);
                          slot = slot + w * r.mult.at(p, t1.left * d + aa);
                        }
                      }
                    }
                    // right slot: xi(r{2}(0) (x) h(2).s{2}) h(3) l
                    Matrix xv(dh, 1, f);
                    for (int bb = 0; bb < d; ++bb) {
                      const Scalar& cb = act.at(bb, th.b * d + t2.right);
                      if (cb.is_zero()) continue;
                      for (int p = 0; p < dh; ++p) {
                        Scalar& slot = xv.at(p, 0);
                        slot = slot + cb * xi.xi.at(p, r20 * d + bb);
                      }
                    }
                    Matrix right =
                        algebra_product(H.alg, xv, basis_vector(dh, th.c, f));
                    right =
                        algebra_product(H.alg, right, basis_vector(dh, l, f));
                    add_kron_into(out, col, t1.coeff * c1 * th.coeff * t2.coeff,
                                  left, right);
                  }
                }
              }
        }
    }
  return out;
}

Bialgebra build_smash_bialgebra(const PreBialgebra& r, const Cocycle& xi) {
  Bialgebra b;
  b.co = smash_coproduct(r.R);
  b.alg.field = r.field();
  b.alg.dim = b.co->dim;
  b.alg.labels = b.co->labels;
  b.alg.mult = smash_multiplication(r, xi);
  b.alg.unit = kronecker(r.unit(), r.hopf()->alg.unit);
  return b;
}

// Section c1 (x) ... (x) cn  ->  c1#1 (x) ... (x) cn#1 as a matrix.
Matrix embed_matrix(const PreBialgebra& r, int n) {
  const FieldSpec& f = r.field();
  const Matrix emb = kronecker(Matrix::identity(r.dim(), f),
                               r.hopf()->alg.unit);  // (d*dh) x d
  Matrix out = Matrix::identity(1, f);
  for (int k = 0; k < n; ++k) out = kronecker(out, emb);
  return out;
}

// The retraction A^{(x)n} -> R^{(x)n} realizing mho_n as a row composition:
//   Theta_1 = id_R (x) eps_H,
//   Theta_n = (id_R (x) action of R^{(x)(n-1)}) (id_A (x) Theta_{n-1}),
// folding each Hopf leg into a diagonal action on everything to its right.
Matrix theta_matrix(const PreBialgebra& r, int n) {
  const FieldSpec& f = r.field();
  if (n == 0) return Matrix::identity(1, f);
  const int d = r.dim(), da = d * r.hopf()->dim();
  const Matrix idr = Matrix::identity(d, f);
  Matrix theta = kronecker(idr, r.hopf()->co->counit);  // d x (d*dh)
  for (int k = 2; k <= n; ++k) {
    const YDModule pk = yd_module_power(r.R.mod, k - 1);
    theta = kronecker(idr, pk.action) *
            kronecker(Matrix::identity(da, f), theta);
  }
  return theta;
}

// Appends a warning unless v is H-linear for the diagonal action on the
// n-th power module.
void warn_unless_h_linear(const PreBialgebra& r, int n, const Functional& v,
                          TransportResult& out) {
  if (n == 0) return;
  const HopfAlgebra& H = *r.hopf();
  const YDModule pm = yd_module_power(r.R.mod, n);
  const Matrix vact = v.coeffs * pm.action;  // 1 x (dh * D)
  for (int h = 0; h < H.dim(); ++h)
    for (int x = 0; x < pm.dim; ++x)
      if (vact.at(0, h * pm.dim + x) !=
          H.co->counit.at(0, h) * v.coeffs.at(0, x)) {
        out.preconditions_ok = false;
        out.warnings.push_back("functional is not H-linear (h=" +
                               H.co->label(h) + ", at " + pm.label(x) + ")");
        return;
      }
}

// gamma . (op applied on tensor factor k of a d-dimensional space, power n).
Matrix row_on_factor(const Matrix& row, int n, int d, int k, const Matrix& op) {
  const int total = row.cols();
  Matrix out(1, total, row.field());
  const int stride = ipow(d, n - 1 - k);
  for (int j = 0; j < total; ++j) {
    const int b = (j / stride) % d;
    const int base = j - b * stride;
    Scalar v = Scalar::zero(row.field());
    for (int a = 0; a < d; ++a) {
      if (op.at(a, b).is_zero()) continue;
      v = v + row.at(0, base + a * stride) * op.at(a, b);
    }
    out.at(0, j) = v;
  }
  return out;
}

// Appends warnings unless gamma on A^{(x)n} is killed by the counit under
// multiplication by sigma(h) on the outer legs and is balanced over sigma
// between adjacent legs.
void warn_unless_bilinear_balanced(const PreBialgebra& r, const Bialgebra& a,
                                   int n, const Functional& gamma,
                                   TransportResult& out) {
  if (n == 0) return;
  const HopfAlgebra& H = *r.hopf();
  const FieldSpec& f = r.field();
  const int da = a.dim(), dh = H.dim();
  const Matrix ida = Matrix::identity(da, f);
  const Matrix sigma = kronecker(r.unit(), Matrix::identity(dh, f));
  for (int h = 0; h < dh; ++h) {
    const Matrix sh = sigma.col(h);
    const Matrix lmul = a.alg.mult * kronecker(sh, ida);  // x -> sigma(h) x
    const Matrix rmul = a.alg.mult * kronecker(ida, sh);  // x -> x sigma(h)
    const Scalar eh = H.co->counit.at(0, h);
    if (row_on_factor(gamma.coeffs, n, da, 0, lmul) !=
        gamma.coeffs.scaled(eh)) {
      out.preconditions_ok = false;
      out.warnings.push_back("functional is not left H-linear (h=" +
                             H.co->label(h) + ")");
    }
    if (row_on_factor(gamma.coeffs, n, da, n - 1, rmul) !=
        gamma.coeffs.scaled(eh)) {
      out.preconditions_ok = false;
      out.warnings.push_back("functional is not right H-linear (h=" +
                             H.co->label(h) + ")");
    }
    for (int i = 0; i + 1 < n; ++i)
      if (row_on_factor(gamma.coeffs, n, da, i, rmul) !=
          row_on_factor(gamma.coeffs, n, da, i + 1, lmul)) {
        out.preconditions_ok = false;
        out.warnings.push_back("functional is not H-balanced between legs " +
                               std::to_string(i + 1) + " and " +
                               std::to_string(i + 2) + " (h=" +
                               H.co->label(h) + ")");
      }
  }
}

void validate_transport_power(int n, const std::string& what) {
  if (n < 0 || n > 4)
    throw input_error(what + ": power must be between 0 and 4");
}

TransportResult omega_core(const PreBialgebra& r, const Bialgebra& a, int n,
                           const Functional& gamma) {
  const CoalgebraPtr apow = tensor_power_plain(a.co, n);
  if (!gamma.dom || !same_coalgebra(*gamma.dom, *apow))
    throw input_error(
        "omega_n: functional does not live on the n-th power of the smash "
        "product");
  TransportResult out;
  warn_unless_bilinear_balanced(r, a, n, gamma, out);
  out.value = functional_from_row(braided_power(r, n),
                                  gamma.coeffs * embed_matrix(r, n));
  return out;
}

TransportResult mho_core(const PreBialgebra& r, const Bialgebra& a, int n,
                         const Functional& v) {
  if (!v.dom || !same_coalgebra(*v.dom, *braided_power(r, n)))
    throw input_error(
        "mho_n: functional does not live on the n-th braided power");
  TransportResult out;
  warn_unless_h_linear(r, n, v, out);
  out.value = functional_from_row(tensor_power_plain(a.co, n),
                                  v.coeffs * theta_matrix(r, n));
  return out;
}

// w . m_i for the i-th face map E^{(x)(t+1)} -> E^{(x)t} (counit on an outer
// leg for i = 0 or t+1, one multiplication inside otherwise).
Matrix face_pullback(const Bialgebra& e, const Matrix& w, int t, int i) {
  const int d = e.dim();
  const FieldSpec& f = e.field();
  if (t == 0) return e.co->counit.scaled(w.at(0, 0));
  const int total = ipow(d, t + 1);
  const std::vector<int> dims_in(t + 1, d);
  const std::vector<int> dims_out(t, d);
  Matrix out(1, total, f);
  for (int x = 0; x < total; ++x) {
    const auto ix = unflat_index(x, dims_in);
    Scalar v = Scalar::zero(f);
    if (i == 0) {
      const std::vector<int> rest(ix.begin() + 1, ix.end());
      v = e.co->counit.at(0, ix[0]) * w.at(0, flat_index(rest, dims_out));
    } else if (i == t + 1) {
      const std::vector<int> rest(ix.begin(), ix.end() - 1);
      v = w.at(0, flat_index(rest, dims_out)) * e.co->counit.at(0, ix[t]);
    } else {
      std::vector<int> rest;
      rest.reserve(t);
      for (int k = 0; k < t + 1; ++k)
        if (k != i) rest.push_back(ix[k]);
      // rest[i-1] currently holds ix[i-1]; replace it with the product index
      for (int b = 0; b < d; ++b) {
        const Scalar& c = e.alg.mult.at(b, ix[i - 1] * d + ix[i]);
        if (c.is_zero()) continue;
        rest[i - 1] = b;
        v = v + c * w.at(0, flat_index(rest, dims_out));
      }
    }
    out.at(0, x) = v;
  }
  return out;
}

}  // namespace

CheckReport check_prebialgebra(const PreBialgebra& r) {
  validate_prebialgebra(r, "check_prebialgebra");
  CheckReport rep;
  rep.merge(check_yd_coalgebra(r.R));

  const HopfAlgebra& H = *r.hopf();
  const int d = r.dim(), dh = H.dim();
  const FieldSpec& f = r.field();
  const Matrix idr = Matrix::identity(d, f);
  const YDModule m2 = yd_tensor_module(r.R.mod, r.R.mod);
  const YDCoalgebra r2 = yd_tensor_coalgebra(r.R, r.R);
  const auto zlab = label_of(m2.labels);
  const auto rlab = label_of(r.R.mod.labels);

  add_equality(rep, "multiplication-h-linear", r.mult * m2.action,
               r.R.mod.action * kronecker(Matrix::identity(dh, f), r.mult),
               product_label({&H.co->labels, &m2.labels}));
  add_equality(rep, "multiplication-comultiplicative",
               delta_dense(*r.R.co) * r.mult,
               kronecker(r.mult, r.mult) * delta_dense(*r2.co), zlab);
  add_equality(rep, "multiplication-counital", r.R.co->counit * r.mult,
               kronecker(r.R.co->counit, r.R.co->counit), zlab);
  add_equality(rep, "unit-law-left", r.mult * kronecker(r.unit(), idr), idr,
               rlab);
  add_equality(rep, "unit-law-right", r.mult * kronecker(idr, r.unit()), idr,
               rlab);
  return rep;
}

CheckReport check_cocycle(const PreBialgebra& r, const Cocycle& xi) {
  validate_prebialgebra(r, "check_cocycle");
  validate_cocycle(r, xi, "check_cocycle");
  CheckReport rep;

  const HopfAlgebra& H = *r.hopf();
  const int d = r.dim(), dh = H.dim();
  const FieldSpec& f = r.field();
  const Matrix idr = Matrix::identity(d, f);
  const Matrix idh = Matrix::identity(dh, f);
  const YDModule m2 = yd_tensor_module(r.R.mod, r.R.mod);
  const YDCoalgebra r2 = yd_tensor_coalgebra(r.R, r.R);
  const Matrix d2 = delta_dense(*r2.co);
  const YDModule adj = adjoint_yd_module(r.hopf());
  const auto zlab = label_of(m2.labels);
  const auto z3lab =
      product_label({&r.R.mod.labels, &r.R.mod.labels, &r.R.mod.labels});
  const std::optional<Matrix> xi_inv =
      convolution_inverse_map(*r2.co, H.alg, xi.xi);

  // xi(h.z) = h(1) xi(z) S(h(2))
  add_equality(rep, "xi-adjoint-linear", xi.xi * m2.action,
               adj.action * kronecker(idh, xi.xi),
               product_label({&H.co->labels, &m2.labels}));

  {  // Delta_H xi = (m_H (x) xi)(xi (x) rho) Delta;  eps_H xi = eps (x) eps
    const Matrix lhs = delta_dense(*H.co) * xi.xi;
    const Matrix rhs = kronecker(H.alg.mult, xi.xi) *
                       kronecker(xi.xi, m2.coaction) * d2;
    int j = first_diff_col(lhs, rhs);
    std::string wit = j < 0 ? "" : "at " + zlab(j);
    if (j < 0) {
      j = first_diff_col(H.co->counit * xi.xi,
                         kronecker(r.R.co->counit, r.R.co->counit));
      if (j >= 0) wit = "counit part, at " + zlab(j);
    }
    rep.add("xi-sweedler-cocycle", wit.empty(), wit);
  }

  // c_{R,H}(m (x) xi) Delta = (m_H (x) m)(xi (x) rho) Delta, where the
  // braiding with H in the right slot multiplies: c(r (x) h) = r(-1)h (x) r(0)
  Matrix c_rh(dh * d, d * dh, f);
  for (int rr = 0; rr < d; ++rr)
    for (int h = 0; h < dh; ++h)
      for (int a = 0; a < dh; ++a)
        for (int p = 0; p < d; ++p) {
          const Scalar& cc = r.R.mod.coaction.at(a * d + p, rr);
          if (cc.is_zero()) continue;
          const Matrix prod = H.alg.mult_col(a, h);
          for (int u = 0; u < dh; ++u) {
            if (prod.at(u, 0).is_zero()) continue;
            Scalar& slot = c_rh.at(u * d + p, rr * dh + h);
            slot = slot + cc * prod.at(u, 0);
          }
        }
  const Matrix inner = kronecker(r.mult, xi.xi) * d2;  // z -> m(z{1}) (x) xi(z{2})
  add_equality(rep, "multiplication-coaction-twist", c_rh * inner,
               kronecker(H.alg.mult, r.mult) * kronecker(xi.xi, m2.coaction) *
                   d2,
               zlab);

  // rho(m(z)) = xi(z{1}) z{2}(-1) xi^{-1}(z{3}) (x) m(z{2}(0))
  if (!xi_inv) {
    rep.add("multiplication-coaction-twist-pointwise", false,
            "xi is not convolution invertible");
  } else {
    const Matrix lhs = r.R.mod.coaction * r.mult;
    Matrix rhs(dh * d, d * d, f);
    for (int z = 0; z < d * d; ++z)
      for (const auto& t : delta_squared(*r2.co, z)) {
        const Matrix xa = xi.xi.col(t.a);
        const Matrix xc = xi_inv->col(t.c);
        for (int u = 0; u < dh; ++u)
          for (int b0 = 0; b0 < d * d; ++b0) {
            const Scalar& cc = m2.coaction.at(u * d * d + b0, t.b);
            if (cc.is_zero()) continue;
            const Matrix hv = algebra_product(
                H.alg, algebra_product(H.alg, xa, basis_vector(dh, u, f)), xc);
            add_kron_into(rhs, z, t.coeff * cc, hv, r.mult.col(b0));
          }
      }
    add_equality(rep, "multiplication-coaction-twist-pointwise", lhs, rhs,
                 zlab);
  }

  // m(R (x) m) = m(m (x) R) Phi(xi)
  add_equality(rep, "multiplication-quasi-associative",
               r.mult * kronecker(idr, r.mult),
               r.mult * kronecker(r.mult, idr) * phi(*r2.co, r.R.mod, xi.xi),
               z3lab);

  // m_H(xi (x) H)[R (x) (m (x) xi) Delta]
  //   = m_H(xi (x) H)(R (x) c_{H,R})[(m (x) xi) Delta (x) R]
  {
    const Matrix head = H.alg.mult * kronecker(xi.xi, idh);
    add_equality(rep, "xi-quasi-cocycle", head * kronecker(idr, inner),
                 head * kronecker(idr, braiding(adj, r.R.mod).c) *
                     kronecker(inner, idr),
                 z3lab);
  }

  {  // xi(r (x) 1) = xi(1 (x) r) = eps(r) 1_H
    const Matrix expect = H.alg.unit * r.R.co->counit;
    const Matrix right = xi.xi * kronecker(idr, r.unit());
    const Matrix left = xi.xi * kronecker(r.unit(), idr);
    int j = first_diff_col(right, expect);
    std::string wit = j < 0 ? "" : "at " + r.R.mod.label(j) + "⊗1";
    if (j < 0) {
      j = first_diff_col(left, expect);
      if (j >= 0) wit = "at 1⊗" + r.R.mod.label(j);
    }
    rep.add("xi-unital", wit.empty(), wit);
  }

  rep.add("xi-convolution-invertible", xi_inv.has_value(),
          xi_inv ? "" : "no convolution inverse in Hom(R⊗R, H)");
  return rep;
}

CheckReport check_splitting_datum(const SplittingDatum& d) {
  if (!d.H || !d.A.co)
    throw input_error("check_splitting_datum: incomplete datum");
  const HopfAlgebra& H = *d.H;
  const int da = d.A.dim(), dh = H.dim();
  if (!(d.A.field() == H.field()))
    throw input_error("check_splitting_datum: field mismatch");
  if (d.pi.rows() != dh || d.pi.cols() != da || d.sigma.rows() != da ||
      d.sigma.cols() != dh || !(d.pi.field() == H.field()) ||
      !(d.sigma.field() == H.field()))
    throw input_error(
        "check_splitting_datum: pi must be dimH x dimA and sigma dimA x dimH");

  CheckReport rep;
  rep.merge(check_bialgebra(d.A), "a: ");
  rep.merge(check_hopf(H), "h: ");

  const FieldSpec& f = H.field();
  const Matrix ida = Matrix::identity(da, f);
  const Matrix idh = Matrix::identity(dh, f);
  const Matrix dda = delta_dense(*d.A.co);
  const auto hlab = label_of(H.co->labels);
  const auto alab = label_of(d.A.co->labels);

  add_equality(rep, "sigma-multiplicative", d.sigma * H.alg.mult,
               d.A.alg.mult * kronecker(d.sigma, d.sigma),
               product_label({&H.co->labels, &H.co->labels}));
  add_equality(rep, "sigma-unital", d.sigma * H.alg.unit, d.A.alg.unit,
               [](int) { return std::string("1"); });
  add_equality(rep, "sigma-comultiplicative", dda * d.sigma,
               kronecker(d.sigma, d.sigma) * delta_dense(*H.co), hlab);
  add_equality(rep, "sigma-counital", d.A.co->counit * d.sigma, H.co->counit,
               hlab);
  add_equality(rep, "pi-comultiplicative", delta_dense(*H.co) * d.pi,
               kronecker(d.pi, d.pi) * dda, alab);
  add_equality(rep, "pi-counital", H.co->counit * d.pi, d.A.co->counit, alab);

  {  // pi(sigma(h) x sigma(h')) = h pi(x) h'
    const Matrix lhs = d.pi * d.A.alg.mult * kronecker(d.A.alg.mult, ida) *
                       kronecker(kronecker(d.sigma, ida), d.sigma);
    const Matrix rhs = H.alg.mult * kronecker(H.alg.mult, idh) *
                       kronecker(kronecker(idh, d.pi), idh);
    add_equality(rep, "pi-h-bilinear", lhs, rhs,
                 product_label({&H.co->labels, &d.A.co->labels,
                                &H.co->labels}));
  }

  add_equality(rep, "pi-sigma-identity", d.pi * d.sigma, idh, hlab);
  return rep;
}

Bosonization bosonize_cocycle(const PreBialgebra& r, const Cocycle& xi) {
  const CheckReport pre = check_prebialgebra(r);
  if (!pre.ok())
    throw axiom_error("bosonize_cocycle: pre-bialgebra axioms fail: " +
                      pre.first_failure());
  const CheckReport cc = check_cocycle(r, xi);
  if (!cc.ok())
    throw axiom_error("bosonize_cocycle: cocycle conditions fail: " +
                      cc.first_failure());

  Bosonization b;
  b.A = build_smash_bialgebra(r, xi);
  b.H = r.hopf();
  const Matrix idh = Matrix::identity(b.H->dim(), r.field());
  b.pi = kronecker(r.R.co->counit, idh);
  b.sigma = kronecker(r.unit(), idh);

  const CheckReport post = check_bialgebra(b.A);
  if (!post.ok())
    throw axiom_error("bosonize_cocycle: smash product fails the bialgebra "
                      "axioms: " +
                      post.first_failure());
  return b;
}

Bialgebra smash_product_data(const PreBialgebra& r, const Cocycle& xi) {
  validate_prebialgebra(r, "smash_product_data");
  validate_cocycle(r, xi, "smash_product_data");
  return build_smash_bialgebra(r, xi);
}

Decomposition extract_prebialgebra(const SplittingDatum& d) {
  const CheckReport gate = check_splitting_datum(d);
  if (!gate.ok())
    throw axiom_error("extract_prebialgebra: splitting datum invalid: " +
                      gate.first_failure());

  const HopfAlgebra& H = *d.H;
  const Bialgebra& A = d.A;
  const int da = A.dim(), dh = H.dim();
  const FieldSpec& f = H.field();
  const Matrix ida = Matrix::identity(da, f);
  const Matrix idh = Matrix::identity(dh, f);
  const Matrix dda = delta_dense(*A.co);

  // R = {a : a(1) (x) pi(a(2)) = a (x) 1}
  const Matrix constraint =
      kronecker(ida, d.pi) * dda - kronecker(ida, H.alg.unit);
  const Matrix inclusion = nullspace(constraint);
  const int dr = inclusion.cols();
  if (dr == 0 || dr * dh != da)
    throw axiom_error(
        "extract_prebialgebra: coinvariants have the wrong dimension (" +
        std::to_string(dr) + " with dimH=" + std::to_string(dh) +
        ", dimA=" + std::to_string(da) + ")");

  // Left inverse of the inclusion (free coordinates zero, so deterministic).
  const auto ltrans =
      solve_linear(inclusion.transpose(), Matrix::identity(dr, f));
  if (!ltrans)
    throw axiom_error("extract_prebialgebra: coinvariant basis is degenerate");
  const Matrix proj = ltrans->transpose();  // dr x da, proj * inclusion = id

  auto to_r = [&](const Matrix& cols, const char* what) {
    const Matrix coords = proj * cols;
    if (inclusion * coords != cols)
      throw axiom_error(std::string("extract_prebialgebra: ") + what +
                        " does not land in the coinvariant subspace");
    return coords;
  };

  // tau = id * (sigma S pi)
  const Matrix tau = convolve_maps(*A.co, A.alg, ida,
                                   d.sigma * H.antipode * d.pi);

  std::vector<std::string> labels(dr);
  for (int j = 0; j < dr; ++j) {
    int hits = 0, where = -1;
    for (int i = 0; i < da; ++i)
      if (!inclusion.at(i, j).is_zero()) {
        ++hits;
        where = i;
      }
    labels[j] = (hits == 1 && inclusion.at(where, j).is_one())
                    ? A.co->label(where)
                    : "r" + std::to_string(j);
  }

  // h.r = sigma(h(1)) r sigma(S(h(2)))
  Matrix action_a(da, dh * dr, f);
  const Matrix sgs = d.sigma * H.antipode;
  for (int h = 0; h < dh; ++h)
    for (const auto& t : H.co->delta[h]) {
      const Matrix lft = d.sigma.col(t.left);
      const Matrix rgt = sgs.col(t.right);
      for (int j = 0; j < dr; ++j) {
        const Matrix v = algebra_product(
            A.alg, algebra_product(A.alg, lft, inclusion.col(j)), rgt);
        for (int i = 0; i < da; ++i) {
          Scalar& slot = action_a.at(i, h * dr + j);
          slot = slot + t.coeff * v.at(i, 0);
        }
      }
    }
  const Matrix action = to_r(action_a, "the induced action");

  // rho(r) = pi(r(1)) (x) r(2)
  const Matrix rho_a = kronecker(d.pi, ida) * dda * inclusion;
  const Matrix coaction = kronecker(idh, proj) * rho_a;
  if (kronecker(idh, inclusion) * coaction != rho_a)
    throw axiom_error(
        "extract_prebialgebra: the induced coaction does not land in the "
        "coinvariant subspace");

  // Delta_R(r) = tau(r(1)) (x) r(2)
  const Matrix delta_a = kronecker(tau, ida) * dda * inclusion;
  const Matrix delta_r = kronecker(proj, proj) * delta_a;
  if (kronecker(inclusion, inclusion) * delta_r != delta_a)
    throw axiom_error(
        "extract_prebialgebra: the induced comultiplication does not land in "
        "the coinvariant subspace");

  const Matrix counit_r = A.co->counit * inclusion;
  const Matrix coaug_r = to_r(A.alg.unit, "the unit");
  const CoalgebraPtr co =
      coalgebra_from_dense(f, dr, labels, delta_r, counit_r, coaug_r);

  // m(r (x) s) = tau(r s),  xi(r (x) s) = pi(r s)
  const Matrix pairs = A.alg.mult * kronecker(inclusion, inclusion);
  const Matrix mult_r = to_r(tau * pairs, "the induced product");
  const Matrix xi_m = d.pi * pairs;

  Decomposition out;
  out.R = PreBialgebra{
      YDCoalgebra{YDModule{d.H, dr, labels, action, coaction}, co}, mult_r};
  out.xi = Cocycle{xi_m};
  out.inclusion = inclusion;

  // omega(r (x) h) = r sigma(h), with inverse a -> tau(a(1)) (x) pi(a(2))
  out.omega = A.alg.mult * kronecker(inclusion, d.sigma);
  out.omega_inv = kronecker(proj * tau, d.pi) * dda;
  if (out.omega * out.omega_inv != ida ||
      out.omega_inv * out.omega != Matrix::identity(dr * dh, f))
    throw axiom_error(
        "extract_prebialgebra: r (x) h -> r sigma(h) is not invertible");

  const Bialgebra b = build_smash_bialgebra(out.R, out.xi);
  if (out.omega * b.alg.mult != A.alg.mult * kronecker(out.omega, out.omega) ||
      dda * out.omega != kronecker(out.omega, out.omega) * delta_dense(*b.co) ||
      A.co->counit * out.omega != b.co->counit ||
      out.omega * b.alg.unit != A.alg.unit)
    throw axiom_error(
        "extract_prebialgebra: r (x) h -> r sigma(h) is not a bialgebra "
        "isomorphism onto A");
  return out;
}

TransportResult omega_n(const PreBialgebra& r, const Cocycle& xi, int n,
                        const Functional& gamma) {
  validate_prebialgebra(r, "omega_n");
  validate_cocycle(r, xi, "omega_n");
  validate_transport_power(n, "omega_n");
  return omega_core(r, build_smash_bialgebra(r, xi), n, gamma);
}

TransportResult mho_n(const PreBialgebra& r, const Cocycle& xi, int n,
                      const Functional& v) {
  validate_prebialgebra(r, "mho_n");
  validate_cocycle(r, xi, "mho_n");
  validate_transport_power(n, "mho_n");
  return mho_core(r, build_smash_bialgebra(r, xi), n, v);
}

Functional partial_bialgebra(const Bialgebra& e, const Functional& w,
                             CohomologyDegree deg) {
  const int t = deg.t;
  if (t < 0 || t > 3)
    throw input_error("partial_bialgebra: degree must be between 0 and 3");
  const CoalgebraPtr dom_t = tensor_power_plain(e.co, t);
  if (!w.dom || !same_coalgebra(*w.dom, *dom_t))
    throw input_error(
        "partial_bialgebra: functional does not live on the t-th tensor "
        "power");
  const CoalgebraPtr dom = tensor_power_plain(e.co, t + 1);

  const auto half = [&](const Matrix& row, int parity) {
    Functional acc;
    for (int i = parity; i <= t + 1; i += 2) {
      Functional fi = functional_from_row(dom, face_pullback(e, row, t, i));
      acc = (i == parity) ? std::move(fi) : convolve(acc, fi);
    }
    return acc;
  };

  switch (deg.sign) {
    case DiffSign::plus:
      return half(w.coeffs, 0);
    case DiffSign::minus:
      return half(w.coeffs, 1);
    case DiffSign::full:
    default: {
      const auto winv = convolution_inverse(w);
      if (!winv)
        throw input_error(
            "partial_bialgebra: functional is not convolution invertible");
      return convolve(half(w.coeffs, 0), half(winv->coeffs, 1));
    }
  }
}

TransportResult partial_prebialgebra(const PreBialgebra& r, const Cocycle& xi,
                                     const Functional& w, CohomologyDegree deg,
                                     DiffRoute route) {
  validate_prebialgebra(r, "partial_prebialgebra");
  validate_cocycle(r, xi, "partial_prebialgebra");
  const int t = deg.t;
  if (t < 0 || t > 2)
    throw input_error(
        "partial_prebialgebra: degree must be between 0 and 2");
  if (!w.dom || !same_coalgebra(*w.dom, *braided_power(r, t)))
    throw input_error(
        "partial_prebialgebra: functional does not live on the t-th braided "
        "power");

  if (route == DiffRoute::transport) {
    const Bialgebra a = build_smash_bialgebra(r, xi);
    TransportResult up = mho_core(r, a, t, w);
    const Functional da = partial_bialgebra(a, up.value, deg);
    TransportResult down = omega_core(r, a, t + 1, da);
    down.preconditions_ok = down.preconditions_ok && up.preconditions_ok;
    down.warnings.insert(down.warnings.begin(), up.warnings.begin(),
                         up.warnings.end());
    return down;
  }

  TransportResult out;
  warn_unless_h_linear(r, t, w, out);
  const CoalgebraPtr dom = braided_power(r, t + 1);
  const auto mk = [&](Matrix row) {
    return functional_from_row(dom, std::move(row));
  };
  const auto invert = [&]() {
    const auto winv = convolution_inverse(w);
    if (!winv)
      throw input_error(
          "partial_prebialgebra: functional is not convolution invertible");
    return winv->coeffs;
  };
  const FieldSpec& f = r.field();
  const int d = r.dim();
  const Matrix idr = Matrix::identity(d, f);
  const Matrix& ec = r.R.co->counit;

  switch (t) {
    case 0: {
      const auto scaled = [&](const Matrix& row) {
        return mk(ec.scaled(row.at(0, 0)));
      };
      if (deg.sign == DiffSign::plus) out.value = scaled(w.coeffs);
      else if (deg.sign == DiffSign::minus) out.value = scaled(w.coeffs);
      else out.value = convolve(scaled(w.coeffs), scaled(invert()));
      return out;
    }
    case 1: {
      const auto plus = [&](const Matrix& row) {
        return mk(kronecker(row, row));
      };
      const auto minus = [&](const Matrix& row) { return mk(row * r.mult); };
      if (deg.sign == DiffSign::plus) out.value = plus(w.coeffs);
      else if (deg.sign == DiffSign::minus) out.value = minus(w.coeffs);
      else out.value = convolve(plus(w.coeffs), minus(invert()));
      return out;
    }
    case 2:
    default: {
      const YDCoalgebra r2 = yd_tensor_power(r.R, 2);
      const Matrix phi_xi = phi(*r2.co, r.R.mod, xi.xi);
      const auto plus = [&](const Matrix& row) {
        return convolve(mk(kronecker(ec, row)),
                        mk(row * kronecker(idr, r.mult)));
      };
      const auto minus = [&](const Matrix& row) {
        return convolve(mk(row * kronecker(r.mult, idr) * phi_xi),
                        mk(kronecker(row, ec)));
      };
      if (deg.sign == DiffSign::plus) out.value = plus(w.coeffs);
      else if (deg.sign == DiffSign::minus) out.value = minus(w.coeffs);
      else out.value = convolve(plus(w.coeffs), minus(invert()));
      return out;
    }
  }
}

CheckReport check_z2_equivalences(const PreBialgebra& r, const Cocycle& xi,
                                  const Functional& v) {
  validate_prebialgebra(r, "check_z2_equivalences");
  validate_cocycle(r, xi, "check_z2_equivalences");
  const YDCoalgebra r2 = yd_tensor_power(r.R, 2);
  if (!v.dom || !same_coalgebra(*v.dom, *r2.co))
    throw input_error(
        "check_z2_equivalences: functional does not live on the braided "
        "square");
  if (!convolution_inverse(v))
    throw input_error(
        "check_z2_equivalences: functional is not convolution invertible");

  const HopfAlgebra& H = *r.hopf();
  const FieldSpec& f = r.field();
  const int d = r.dim();
  const Matrix idr = Matrix::identity(d, f);
  const Matrix& ec = r.R.co->counit;
  const YDCoalgebra r3 = yd_tensor_power(r.R, 3);
  const auto mk = [&](Matrix row) {
    return functional_from_row(r3.co, std::move(row));
  };
  const auto z3lab = label_of(r3.mod.labels);
  CheckReport rep;

  // (eps (x) v) * v(R (x) m) = (v (x) eps) * [v(m (x) R) Phi(xi)]
  const Matrix lhs1 = convolve(mk(kronecker(ec, v.coeffs)),
                               mk(v.coeffs * kronecker(idr, r.mult)))
                          .coeffs;
  const Matrix rhs1 =
      convolve(mk(kronecker(v.coeffs, ec)),
               mk(v.coeffs * kronecker(r.mult, idr) *
                  phi(*r2.co, r.R.mod, xi.xi)))
          .coeffs;
  add_equality(rep, "cocycle-identity", lhs1, rhs1, z3lab);

  // d2(v) = eps on the braided cube
  const Functional d2v =
      partial_prebialgebra(r, xi, v, {2, DiffSign::full}, DiffRoute::direct)
          .value;
  add_equality(rep, "differential-trivial", d2v.coeffs, r3.co->counit, z3lab);

  // lambda . Psi(d2(v)) = eps
  const IntegralResult ir = ad_invariant_integral(H);
  if (ir.status != IntegralStatus::found)
    throw input_error(
        "check_z2_equivalences: H has no canonical ad-invariant integral: " +
        ir.detail);
  add_equality(rep, "integral-transport-trivial",
               ir.lambda.coeffs * psi(r3.mod, d2v), r3.co->counit, z3lab);

  // d2(v) = eps on the coinvariants {z : rho(z) = 1 (x) z}
  const Matrix coinv = nullspace(
      r3.mod.coaction -
      kronecker(H.alg.unit, Matrix::identity(r3.mod.dim, f)));
  add_equality(rep, "coinvariant-trivial", (d2v.coeffs - r3.co->counit) * coinv,
               Matrix(1, coinv.cols(), f),
               [](int j) { return "coinvariant #" + std::to_string(j); });

  bool all_same = true;
  for (const auto& it : rep.items) all_same = all_same && it.ok == rep.items[0].ok;
  rep.add("equivalences-consistent", all_same,
          all_same ? "" : "the four conditions disagree");
  return rep;
}

}  // namespace hopf
