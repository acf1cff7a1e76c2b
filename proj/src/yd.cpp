#include "hopf/yd.hpp"

#include <map>
#include <utility>

namespace hopf {

namespace {

// Sparse accumulator keyed by a flattened multi-index.
using Accum = std::map<long long, Scalar>;

void accum_add(Accum& a, long long key, const Scalar& c) {
  if (c.is_zero()) return;
  auto it = a.find(key);
  if (it == a.end()) {
    a.emplace(key, c);
  } else {
    it->second = it->second + c;
    if (it->second.is_zero()) a.erase(it);
  }
}

bool accum_equal(const Accum& a, const Accum& b) {
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (ia->first != ib->first || !(ia->second == ib->second)) return false;
    ++ia;
    ++ib;
  }
  return ia == a.end() && ib == b.end();
}

void require_same_hopf(const YDModule& v, const YDModule& w,
                       const char* what) {
  if (v.H.get() != w.H.get() && !same_hopf(*v.H, *w.H))
    throw input_error(std::string(what) +
                      ": modules live over different Hopf algebras");
}

void validate_shapes(const YDModule& m, const char* what) {
  if (!m.H) throw input_error(std::string(what) + ": missing Hopf algebra");
  const int dh = m.H->dim();
  if (!(m.H->field() == m.action.field()) ||
      !(m.action.field() == m.coaction.field()))
    throw input_error(std::string(what) + ": field mismatch");
  if (m.action.rows() != m.dim || m.action.cols() != dh * m.dim ||
      m.coaction.rows() != dh * m.dim || m.coaction.cols() != m.dim)
    throw input_error(std::string(what) + ": structure tensor shape mismatch");
  if ((int)m.labels.size() != m.dim)
    throw input_error(std::string(what) + ": label count mismatch");
}

std::string pair_witness(const YDModule& m, int h, int v) {
  return "h=" + m.H->co->label(h) + ", v=" + m.label(v);
}

}  // namespace

CheckReport check_yd(const YDModule& m) {
  validate_shapes(m, "check_yd");
  const HopfAlgebra& H = *m.H;
  const int dh = H.dim();
  const int dv = m.dim;
  const FieldSpec f = m.field();
  CheckReport rep;

  {  // 1_H . v = v
    bool ok = true;
    std::string wit;
    for (int v = 0; v < dv && ok; ++v) {
      Matrix got(dv, 1, f);
      for (int h = 0; h < dh; ++h) {
        const Scalar c = H.alg.unit.at(h, 0);
        if (!c.is_zero()) got = got + m.action.col(h * dv + v).scaled(c);
      }
      if (!(got == basis_vector(dv, v, f))) {
        ok = false;
        wit = "v=" + m.label(v);
      }
    }
    rep.add("action-unital", ok, wit);
  }

  {  // (e_a e_b) . v = e_a . (e_b . v)
    bool ok = true;
    std::string wit;
    for (int a = 0; a < dh && ok; ++a)
      for (int b = 0; b < dh && ok; ++b)
        for (int v = 0; v < dv && ok; ++v) {
          Matrix lhs(dv, 1, f);
          const Matrix prod = H.alg.mult_col(a, b);
          for (int h = 0; h < dh; ++h) {
            const Scalar c = prod.at(h, 0);
            if (!c.is_zero()) lhs = lhs + m.action.col(h * dv + v).scaled(c);
          }
          Matrix rhs(dv, 1, f);
          const Matrix bv = m.action.col(b * dv + v);
          for (int s = 0; s < dv; ++s) {
            const Scalar c = bv.at(s, 0);
            if (!c.is_zero()) rhs = rhs + m.action.col(a * dv + s).scaled(c);
          }
          if (!(lhs == rhs)) {
            ok = false;
            wit = "a=" + H.co->label(a) + ", b=" + H.co->label(b) +
                  ", v=" + m.label(v);
          }
        }
    rep.add("action-associative", ok, wit);
  }

  {  // (eps (x) id) rho = id
    bool ok = true;
    std::string wit;
    for (int v = 0; v < dv && ok; ++v) {
      Matrix got(dv, 1, f);
      for (int h = 0; h < dh; ++h) {
        const Scalar eh = H.co->counit.at(0, h);
        if (eh.is_zero()) continue;
        for (int w = 0; w < dv; ++w) {
          const Scalar c = m.coaction.at(h * dv + w, v);
          if (!c.is_zero()) got.at(w, 0) = got.at(w, 0) + eh * c;
        }
      }
      if (!(got == basis_vector(dv, v, f))) {
        ok = false;
        wit = "v=" + m.label(v);
      }
    }
    rep.add("coaction-counital", ok, wit);
  }

  {  // (Delta (x) id) rho = (id (x) rho) rho
    bool ok = true;
    std::string wit;
    for (int v = 0; v < dv && ok; ++v) {
      Accum lhs, rhs;
      for (int h = 0; h < dh; ++h)
        for (int w = 0; w < dv; ++w) {
          const Scalar c = m.coaction.at(h * dv + w, v);
          if (c.is_zero()) continue;
          for (const auto& t : H.co->delta[h])
            accum_add(lhs, ((long long)t.left * dh + t.right) * dv + w,
                      c * t.coeff);
          for (int h2 = 0; h2 < dh; ++h2)
            for (int w2 = 0; w2 < dv; ++w2) {
              const Scalar c2 = m.coaction.at(h2 * dv + w2, w);
              if (!c2.is_zero())
                accum_add(rhs, ((long long)h * dh + h2) * dv + w2, c * c2);
            }
        }
      if (!accum_equal(lhs, rhs)) {
        ok = false;
        wit = "v=" + m.label(v);
      }
    }
    rep.add("coaction-coassociative", ok, wit);
  }

  {  // rho(h.v) = h(1) v(-1) S(h(3)) (x) h(2).v(0)
    bool ok = true;
    std::string wit;
    for (int h = 0; h < dh && ok; ++h) {
      const auto triples = delta_squared(*H.co, h);
      for (int v = 0; v < dv && ok; ++v) {
        Accum lhs, rhs;
        const Matrix hv = m.action.col(h * dv + v);
        for (int w = 0; w < dv; ++w) {
          const Scalar cw = hv.at(w, 0);
          if (cw.is_zero()) continue;
          for (int k = 0; k < dh; ++k)
            for (int v0 = 0; v0 < dv; ++v0) {
              const Scalar c2 = m.coaction.at(k * dv + v0, w);
              if (!c2.is_zero()) accum_add(lhs, (long long)k * dv + v0, cw * c2);
            }
        }
        for (const auto& tr : triples)
          for (int k = 0; k < dh; ++k)
            for (int v0 = 0; v0 < dv; ++v0) {
              const Scalar c3 = m.coaction.at(k * dv + v0, v);
              if (c3.is_zero()) continue;
              const Matrix hpart = algebra_product(
                  H.alg, H.alg.mult_col(tr.a, k), H.antipode.col(tr.c));
              const Matrix vpart = m.action.col(tr.b * dv + v0);
              const Scalar base = tr.coeff * c3;
              for (int i = 0; i < dh; ++i) {
                const Scalar ci = hpart.at(i, 0);
                if (ci.is_zero()) continue;
                for (int s = 0; s < dv; ++s) {
                  const Scalar cs = vpart.at(s, 0);
                  if (!cs.is_zero())
                    accum_add(rhs, (long long)i * dv + s, base * ci * cs);
                }
              }
            }
        if (!accum_equal(lhs, rhs)) {
          ok = false;
          wit = pair_witness(m, h, v);
        }
      }
    }
    rep.add("yd-compatibility", ok, wit);
  }

  return rep;
}

CheckReport check_yd_coalgebra(const YDCoalgebra& c) {
  validate_shapes(c.mod, "check_yd_coalgebra");
  if (!c.co) throw input_error("check_yd_coalgebra: missing coalgebra");
  if (c.co->dim != c.mod.dim || !(c.co->field == c.mod.field()))
    throw input_error(
        "check_yd_coalgebra: coalgebra and module structure disagree");
  const HopfAlgebra& H = *c.mod.H;
  const Coalgebra& co = *c.co;
  const int dh = H.dim();
  const int dv = c.mod.dim;
  const FieldSpec f = co.field;

  CheckReport rep;
  rep.merge(check_yd(c.mod), "module: ");
  rep.merge(check_coalgebra(co), "coalgebra: ");

  {  // Delta(h.z) = h(1).z' (x) h(2).z''
    bool ok = true;
    std::string wit;
    for (int h = 0; h < dh && ok; ++h)
      for (int z = 0; z < dv && ok; ++z) {
        Accum lhs, rhs;
        const Matrix hz = c.mod.action.col(h * dv + z);
        for (int w = 0; w < dv; ++w) {
          const Scalar cw = hz.at(w, 0);
          if (cw.is_zero()) continue;
          for (const auto& t : co.delta[w])
            accum_add(lhs, (long long)t.left * dv + t.right, cw * t.coeff);
        }
        for (const auto& t : co.delta[z])
          for (const auto& u : H.co->delta[h]) {
            const Matrix va = c.mod.action.col(u.left * dv + t.left);
            const Matrix vb = c.mod.action.col(u.right * dv + t.right);
            const Scalar base = t.coeff * u.coeff;
            for (int s = 0; s < dv; ++s) {
              const Scalar cs = va.at(s, 0);
              if (cs.is_zero()) continue;
              for (int r = 0; r < dv; ++r) {
                const Scalar cr = vb.at(r, 0);
                if (!cr.is_zero())
                  accum_add(rhs, (long long)s * dv + r, base * cs * cr);
              }
            }
          }
        if (!accum_equal(lhs, rhs)) {
          ok = false;
          wit = pair_witness(c.mod, h, z);
        }
      }
    rep.add("comultiplication-h-linear", ok, wit);
  }

  {  // eps(h.z) = eps(h) eps(z)
    bool ok = true;
    std::string wit;
    for (int h = 0; h < dh && ok; ++h)
      for (int z = 0; z < dv && ok; ++z) {
        const Scalar lhs = (co.counit * c.mod.action.col(h * dv + z)).at(0, 0);
        const Scalar rhs = H.co->counit.at(0, h) * co.counit.at(0, z);
        if (!(lhs == rhs)) {
          ok = false;
          wit = pair_witness(c.mod, h, z);
        }
      }
    rep.add("counit-h-linear", ok, wit);
  }

  {  // z'(-1) z''(-1) (x) z'(0) (x) z''(0) = z(-1) (x) Delta(z(0))
    bool ok = true;
    std::string wit;
    for (int z = 0; z < dv && ok; ++z) {
      Accum lhs, rhs;
      for (const auto& t : co.delta[z])
        for (int a = 0; a < dh; ++a)
          for (int l0 = 0; l0 < dv; ++l0) {
            const Scalar c1 = c.mod.coaction.at(a * dv + l0, t.left);
            if (c1.is_zero()) continue;
            for (int b = 0; b < dh; ++b)
              for (int r0 = 0; r0 < dv; ++r0) {
                const Scalar c2 = c.mod.coaction.at(b * dv + r0, t.right);
                if (c2.is_zero()) continue;
                const Matrix p = H.alg.mult_col(a, b);
                const Scalar base = t.coeff * c1 * c2;
                for (int i = 0; i < dh; ++i) {
                  const Scalar ci = p.at(i, 0);
                  if (!ci.is_zero())
                    accum_add(lhs, ((long long)i * dv + l0) * dv + r0,
                              base * ci);
                }
              }
          }
      for (int k = 0; k < dh; ++k)
        for (int z0 = 0; z0 < dv; ++z0) {
          const Scalar cz = c.mod.coaction.at(k * dv + z0, z);
          if (cz.is_zero()) continue;
          for (const auto& t : co.delta[z0])
            accum_add(rhs, ((long long)k * dv + t.left) * dv + t.right,
                      cz * t.coeff);
        }
      if (!accum_equal(lhs, rhs)) {
        ok = false;
        wit = "z=" + co.label(z);
      }
    }
    rep.add("comultiplication-h-colinear", ok, wit);
  }

  {  // z(-1) eps(z(0)) = eps(z) 1_H
    bool ok = true;
    std::string wit;
    for (int z = 0; z < dv && ok; ++z) {
      Matrix got(dh, 1, f);
      for (int k = 0; k < dh; ++k)
        for (int z0 = 0; z0 < dv; ++z0) {
          const Scalar cz = c.mod.coaction.at(k * dv + z0, z);
          if (!cz.is_zero())
            got.at(k, 0) = got.at(k, 0) + cz * co.counit.at(0, z0);
        }
      if (!(got == H.alg.unit.scaled(co.counit.at(0, z)))) {
        ok = false;
        wit = "z=" + co.label(z);
      }
    }
    rep.add("counit-h-colinear", ok, wit);
  }

  if (co.has_coaug()) {
    {  // h . 1 = eps(h) 1
      bool ok = true;
      std::string wit;
      for (int h = 0; h < dh && ok; ++h) {
        Matrix got(dv, 1, f);
        for (int z = 0; z < dv; ++z) {
          const Scalar cz = co.coaug.at(z, 0);
          if (!cz.is_zero())
            got = got + c.mod.action.col(h * dv + z).scaled(cz);
        }
        if (!(got == co.coaug.scaled(H.co->counit.at(0, h)))) {
          ok = false;
          wit = "h=" + H.co->label(h);
        }
      }
      rep.add("coaugmentation-h-invariant", ok, wit);
    }
    {  // rho(1) = 1_H (x) 1
      Matrix got(dh * dv, 1, f);
      for (int z = 0; z < dv; ++z) {
        const Scalar cz = co.coaug.at(z, 0);
        if (!cz.is_zero()) got = got + c.mod.coaction.col(z).scaled(cz);
      }
      rep.add("coaugmentation-h-coinvariant",
              got == kronecker(H.alg.unit, co.coaug), "");
    }
  }

  return rep;
}

YDModule trivial_yd_module(const HopfPtr& H) {
  const FieldSpec f = H->field();
  const int dh = H->dim();
  Matrix action(1, dh, f);
  for (int h = 0; h < dh; ++h) action.at(0, h) = H->co->counit.at(0, h);
  Matrix coaction(dh, 1, f);
  for (int h = 0; h < dh; ++h) coaction.at(h, 0) = H->alg.unit.at(h, 0);
  return {H, 1, {"1"}, std::move(action), std::move(coaction)};
}

YDCoalgebra trivial_yd_coalgebra(const HopfPtr& H) {
  return {trivial_yd_module(H), trivial_coalgebra(H->field())};
}

YDModule adjoint_yd_module(const HopfPtr& H) {
  const FieldSpec f = H->field();
  const int d = H->dim();
  Matrix action(d, d * d, f);
  for (int h = 0; h < d; ++h)
    for (int mcol = 0; mcol < d; ++mcol) {
      Matrix acc(d, 1, f);
      for (const auto& t : H->co->delta[h]) {
        const Matrix left = H->alg.mult_col(t.left, mcol);
        acc = acc +
              algebra_product(H->alg, left, H->antipode.col(t.right))
                  .scaled(t.coeff);
      }
      for (int s = 0; s < d; ++s) action.at(s, h * d + mcol) = acc.at(s, 0);
    }
  return {H, d, H->co->labels, std::move(action), delta_dense(*H->co)};
}

Braiding braiding(const YDModule& v, const YDModule& w) {
  validate_shapes(v, "braiding");
  validate_shapes(w, "braiding");
  require_same_hopf(v, w, "braiding");
  const HopfAlgebra& H = *v.H;
  const int dh = H.dim();
  const int dv = v.dim;
  const int dw = w.dim;
  const FieldSpec f = v.field();

  const auto s_inv = solve_linear(H.antipode, Matrix::identity(dh, f));
  if (!s_inv) throw input_error("braiding: antipode is not invertible");

  Matrix c(dw * dv, dv * dw, f);
  Matrix c_inv(dv * dw, dw * dv, f);
  for (int i = 0; i < dv; ++i)
    for (int a = 0; a < dh; ++a)
      for (int v0 = 0; v0 < dv; ++v0) {
        const Scalar c1 = v.coaction.at(a * dv + v0, i);
        if (c1.is_zero()) continue;
        for (int j = 0; j < dw; ++j) {
          const Matrix wcol = w.action.col(a * dw + j);
          for (int s = 0; s < dw; ++s) {
            const Scalar cs = wcol.at(s, 0);
            if (!cs.is_zero())
              c.at(s * dv + v0, i * dw + j) =
                  c.at(s * dv + v0, i * dw + j) + c1 * cs;
          }
        }
        for (int b = 0; b < dh; ++b) {
          const Scalar sb = s_inv->at(b, a);
          if (sb.is_zero()) continue;
          for (int j = 0; j < dw; ++j) {
            const Matrix wcol = w.action.col(b * dw + j);
            for (int t = 0; t < dw; ++t) {
              const Scalar ct = wcol.at(t, 0);
              if (!ct.is_zero())
                c_inv.at(v0 * dw + t, j * dv + i) =
                    c_inv.at(v0 * dw + t, j * dv + i) + c1 * sb * ct;
            }
          }
        }
      }

  if (!(c_inv * c == Matrix::identity(dv * dw, f)) ||
      !(c * c_inv == Matrix::identity(dw * dv, f)))
    throw input_error(
        "braiding: inverse verification failed (not a Yetter-Drinfeld pair)");
  return {std::move(c), std::move(c_inv)};
}

YDModule yd_tensor_module(const YDModule& v, const YDModule& w) {
  validate_shapes(v, "yd_tensor_module");
  validate_shapes(w, "yd_tensor_module");
  require_same_hopf(v, w, "yd_tensor_module");
  const HopfAlgebra& H = *v.H;
  const int dh = H.dim();
  const int dv = v.dim;
  const int dw = w.dim;
  const int d = dv * dw;
  const FieldSpec f = v.field();

  std::vector<std::string> labels;
  labels.reserve(d);
  for (int i = 0; i < dv; ++i)
    for (int j = 0; j < dw; ++j) labels.push_back(v.label(i) + "⊗" + w.label(j));

  Matrix action(d, dh * d, f);
  for (int h = 0; h < dh; ++h)
    for (int i = 0; i < dv; ++i)
      for (int j = 0; j < dw; ++j) {
        const int col = h * d + i * dw + j;
        for (const auto& t : H.co->delta[h]) {
          const Matrix va = v.action.col(t.left * dv + i);
          const Matrix wb = w.action.col(t.right * dw + j);
          for (int s = 0; s < dv; ++s) {
            const Scalar cs = va.at(s, 0);
            if (cs.is_zero()) continue;
            for (int r = 0; r < dw; ++r) {
              const Scalar cr = wb.at(r, 0);
              if (!cr.is_zero())
                action.at(s * dw + r, col) =
                    action.at(s * dw + r, col) + t.coeff * cs * cr;
            }
          }
        }
      }

  Matrix coaction(dh * d, d, f);
  for (int i = 0; i < dv; ++i)
    for (int j = 0; j < dw; ++j) {
      const int col = i * dw + j;
      for (int a = 0; a < dh; ++a)
        for (int i0 = 0; i0 < dv; ++i0) {
          const Scalar c1 = v.coaction.at(a * dv + i0, i);
          if (c1.is_zero()) continue;
          for (int b = 0; b < dh; ++b)
            for (int j0 = 0; j0 < dw; ++j0) {
              const Scalar c2 = w.coaction.at(b * dw + j0, j);
              if (c2.is_zero()) continue;
              const Matrix p = H.alg.mult_col(a, b);
              for (int k = 0; k < dh; ++k) {
                const Scalar ck = p.at(k, 0);
                if (!ck.is_zero()) {
                  const int row = k * d + i0 * dw + j0;
                  coaction.at(row, col) =
                      coaction.at(row, col) + c1 * c2 * ck;
                }
              }
            }
        }
    }

  return {v.H, d, std::move(labels), std::move(action), std::move(coaction)};
}

YDCoalgebra yd_tensor_coalgebra(const YDCoalgebra& c, const YDCoalgebra& d) {
  YDModule mod = yd_tensor_module(c.mod, d.mod);
  const HopfAlgebra& H = *c.mod.H;
  const int dh = H.dim();
  const int dc = c.dim();
  const int dd = d.dim();
  const FieldSpec f = mod.field();

  std::vector<std::vector<DeltaTerm>> delta(dc * dd);
  for (int x = 0; x < dc; ++x)
    for (int y = 0; y < dd; ++y) {
      auto& out = delta[x * dd + y];
      for (const auto& t1 : c.co->delta[x])
        for (const auto& t2 : d.co->delta[y])
          for (int a = 0; a < dh; ++a)
            for (int r10 = 0; r10 < dc; ++r10) {
              const Scalar c3 = c.mod.coaction.at(a * dc + r10, t1.right);
              if (c3.is_zero()) continue;
              const Matrix moved = d.mod.action.col(a * dd + t2.left);
              const Scalar base = t1.coeff * t2.coeff * c3;
              for (int s = 0; s < dd; ++s) {
                const Scalar cs = moved.at(s, 0);
                if (!cs.is_zero())
                  out.push_back({t1.left * dd + s, r10 * dd + t2.right,
                                 base * cs});
              }
            }
    }

  Matrix counit = kronecker(c.co->counit, d.co->counit);
  Matrix coaug;
  if (c.co->has_coaug() && d.co->has_coaug())
    coaug = kronecker(c.co->coaug, d.co->coaug);
  CoalgebraPtr co = make_coalgebra(f, dc * dd, mod.labels, std::move(delta),
                                   std::move(counit), std::move(coaug));
  return {std::move(mod), std::move(co)};
}

YDCoalgebra yd_tensor_power(const YDCoalgebra& c, int n) {
  if (n < 0) throw input_error("yd_tensor_power: negative power");
  if (n == 0) return trivial_yd_coalgebra(c.mod.H);
  YDCoalgebra out = c;
  for (int k = 1; k < n; ++k) out = yd_tensor_coalgebra(out, c);
  return out;
}

CoalgebraPtr smash_coproduct(const YDCoalgebra& r) {
  validate_shapes(r.mod, "smash_coproduct");
  const HopfAlgebra& H = *r.mod.H;
  const int dh = H.dim();
  const int dr = r.dim();
  const int d = dr * dh;
  const FieldSpec f = r.mod.field();

  std::vector<std::string> labels;
  labels.reserve(d);
  for (int i = 0; i < dr; ++i)
    for (int h = 0; h < dh; ++h)
      labels.push_back(r.co->label(i) + "#" + H.co->label(h));

  std::vector<std::vector<DeltaTerm>> delta(d);
  for (int i = 0; i < dr; ++i)
    for (int h = 0; h < dh; ++h) {
      auto& out = delta[i * dh + h];
      for (const auto& t1 : r.co->delta[i])
        for (int a = 0; a < dh; ++a)
          for (int r10 = 0; r10 < dr; ++r10) {
            const Scalar c2 = r.mod.coaction.at(a * dr + r10, t1.right);
            if (c2.is_zero()) continue;
            for (const auto& t2 : H.co->delta[h]) {
              const Matrix p = H.alg.mult_col(a, t2.left);
              const Scalar base = t1.coeff * c2 * t2.coeff;
              for (int k = 0; k < dh; ++k) {
                const Scalar ck = p.at(k, 0);
                if (!ck.is_zero())
                  out.push_back(
                      {t1.left * dh + k, r10 * dh + t2.right, base * ck});
              }
            }
          }
    }

  Matrix counit = kronecker(r.co->counit, H.co->counit);
  Matrix coaug;
  if (r.co->has_coaug()) coaug = kronecker(r.co->coaug, H.alg.unit);
  return make_coalgebra(f, d, std::move(labels), std::move(delta),
                        std::move(counit), std::move(coaug));
}

Matrix psi(const YDModule& m, const Functional& alpha) {
  validate_shapes(m, "psi");
  if (alpha.coeffs.cols() != m.dim)
    throw input_error("psi: functional dimension mismatch");
  const int dh = m.H->dim();
  Matrix beta(dh, m.dim, m.field());
  for (int j = 0; j < m.dim; ++j)
    for (int a = 0; a < dh; ++a) {
      Scalar acc = Scalar::zero(m.field());
      for (int b = 0; b < m.dim; ++b)
        acc = acc + m.coaction.at(a * m.dim + b, j) * alpha(b);
      beta.at(a, j) = acc;
    }
  return beta;
}

Functional psi_inverse(const YDModule& m, const Matrix& beta,
                       const CoalgebraPtr& dom) {
  validate_shapes(m, "psi_inverse");
  if (beta.rows() != m.H->dim() || beta.cols() != m.dim)
    throw input_error("psi_inverse: map dimension mismatch");
  return functional_from_row(dom, m.H->co->counit * beta);
}

Matrix phi(const Coalgebra& c, const YDModule& m, const Matrix& beta) {
  validate_shapes(m, "phi");
  const int dh = m.H->dim();
  const int dc = c.dim;
  const int dm = m.dim;
  if (beta.rows() != dh || beta.cols() != dc)
    throw input_error("phi: map dimension mismatch");
  Matrix out(dc * dm, dc * dm, c.field);
  for (int i = 0; i < dc; ++i)
    for (int j = 0; j < dm; ++j) {
      const int col = i * dm + j;
      for (const auto& t : c.delta[i])
        for (int a = 0; a < dh; ++a) {
          const Scalar cb = beta.at(a, t.right);
          if (cb.is_zero()) continue;
          const Matrix moved = m.action.col(a * dm + j);
          const Scalar base = t.coeff * cb;
          for (int s = 0; s < dm; ++s) {
            const Scalar cs = moved.at(s, 0);
            if (!cs.is_zero())
              out.at(t.left * dm + s, col) =
                  out.at(t.left * dm + s, col) + base * cs;
          }
        }
    }
  return out;
}

Matrix h_linear_functional_basis(const YDModule& m) {
  validate_shapes(m, "h_linear_functional_basis");
  const int dh = m.H->dim();
  const int dm = m.dim;
  Matrix constraints(dh * dm, dm, m.field());
  for (int h = 0; h < dh; ++h)
    for (int v = 0; v < dm; ++v) {
      const int row = h * dm + v;
      for (int s = 0; s < dm; ++s)
        constraints.at(row, s) = m.action.at(s, h * dm + v);
      constraints.at(row, v) =
          constraints.at(row, v) - m.H->co->counit.at(0, h);
    }
  return nullspace(constraints);
}

Matrix h_colinear_functional_basis(const YDModule& m) {
  validate_shapes(m, "h_colinear_functional_basis");
  const int dh = m.H->dim();
  const int dm = m.dim;
  Matrix constraints(dm * dh, dm, m.field());
  for (int v = 0; v < dm; ++v)
    for (int a = 0; a < dh; ++a) {
      const int row = v * dh + a;
      for (int b = 0; b < dm; ++b)
        constraints.at(row, b) = m.coaction.at(a * dm + b, v);
      constraints.at(row, v) =
          constraints.at(row, v) - m.H->alg.unit.at(a, 0);
    }
  return nullspace(constraints);
}

}  // namespace hopf
