#include "hopf/coalgebra.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace hopf {

namespace {

std::vector<std::string> default_labels(int dim) {
  std::vector<std::string> l(dim);
  for (int i = 0; i < dim; ++i) l[i] = "e" + std::to_string(i);
  return l;
}

void canonicalize_terms(std::vector<DeltaTerm>& terms) {
  std::sort(terms.begin(), terms.end(), [](const DeltaTerm& a, const DeltaTerm& b) {
    return a.left != b.left ? a.left < b.left : a.right < b.right;
  });
  std::vector<DeltaTerm> out;
  for (auto& t : terms) {
    if (!out.empty() && out.back().left == t.left && out.back().right == t.right)
      out.back().coeff = out.back().coeff + t.coeff;
    else
      out.push_back(t);
  }
  std::erase_if(out, [](const DeltaTerm& t) { return t.coeff.is_zero(); });
  terms = std::move(out);
}

std::string pair_label(const Coalgebra& c, int l, int r) {
  return c.label(l) + "⊗" + c.label(r);
}

// Accumulator over basis indices with exact scalars.
class Accum {
 public:
  explicit Accum(const FieldSpec& f) : zero_(Scalar::zero(f)) {}
  void add(long long key, const Scalar& v) {
    auto [it, fresh] = m_.try_emplace(key, v);
    if (!fresh) it->second = it->second + v;
  }
  // first key with a nonzero value, if any
  std::optional<std::pair<long long, Scalar>> first_nonzero() const {
    for (const auto& [k, v] : m_)
      if (!v.is_zero()) return std::make_pair(k, v);
    return std::nullopt;
  }

 private:
  std::map<long long, Scalar> m_;
  Scalar zero_;
};

void check_shape(const Matrix& m, int rows, int cols, const FieldSpec& f,
                 const char* what) {
  if (m.rows() != rows || m.cols() != cols || m.field() != f)
    throw input_error(std::string(what) + ": expected " + std::to_string(rows) +
                      "x" + std::to_string(cols) + " over " + f.name());
}

}  // namespace

Matrix basis_vector(int dim, int i, const FieldSpec& f) {
  Matrix v(dim, 1, f);
  v.at(i, 0) = Scalar::one(f);
  return v;
}

CoalgebraPtr make_coalgebra(const FieldSpec& field, int dim,
                            std::vector<std::string> labels,
                            std::vector<std::vector<DeltaTerm>> delta,
                            Matrix counit, Matrix coaug) {
  if (dim < 0) throw input_error("coalgebra dimension must be nonnegative");
  if (labels.empty()) labels = default_labels(dim);
  if (static_cast<int>(labels.size()) != dim)
    throw input_error("coalgebra labels: expected " + std::to_string(dim) +
                      " entries");
  if (static_cast<int>(delta.size()) != dim)
    throw input_error("coalgebra delta: expected " + std::to_string(dim) +
                      " basis images");
  check_shape(counit, 1, dim, field, "coalgebra counit");
  if (coaug.rows() != 0 || coaug.cols() != 0)
    check_shape(coaug, dim, 1, field, "coalgebra coaugmentation");
  for (auto& terms : delta) {
    for (const auto& t : terms) {
      if (t.left < 0 || t.left >= dim || t.right < 0 || t.right >= dim)
        throw input_error("coalgebra delta: basis index out of range");
      if (t.coeff.field() != field)
        throw input_error("coalgebra delta: coefficient over wrong field");
    }
    canonicalize_terms(terms);
  }
  auto c = std::make_shared<Coalgebra>();
  c->field = field;
  c->dim = dim;
  c->labels = std::move(labels);
  c->delta = std::move(delta);
  c->counit = std::move(counit);
  c->coaug = std::move(coaug);
  return c;
}

CoalgebraPtr coalgebra_from_dense(const FieldSpec& field, int dim,
                                  std::vector<std::string> labels,
                                  const Matrix& dd, Matrix counit,
                                  Matrix coaug) {
  check_shape(dd, dim * dim, dim, field, "dense delta");
  std::vector<std::vector<DeltaTerm>> delta(dim);
  for (int i = 0; i < dim; ++i)
    for (int l = 0; l < dim; ++l)
      for (int r = 0; r < dim; ++r) {
        const Scalar& v = dd.at(l * dim + r, i);
        if (!v.is_zero()) delta[i].push_back({l, r, v});
      }
  return make_coalgebra(field, dim, std::move(labels), std::move(delta),
                        std::move(counit), std::move(coaug));
}

Matrix delta_dense(const Coalgebra& c) {
  Matrix dd(c.dim * c.dim, c.dim, c.field);
  for (int i = 0; i < c.dim; ++i)
    for (const auto& t : c.delta[i])
      dd.at(t.left * c.dim + t.right, i) = t.coeff;
  return dd;
}

Matrix apply_delta(const Coalgebra& c, const Matrix& v) {
  check_shape(v, c.dim, 1, c.field, "apply_delta argument");
  Matrix out(c.dim * c.dim, 1, c.field);
  for (int i = 0; i < c.dim; ++i) {
    const Scalar& vi = v.at(i, 0);
    if (vi.is_zero()) continue;
    for (const auto& t : c.delta[i]) {
      Scalar& slot = out.at(t.left * c.dim + t.right, 0);
      slot = slot + vi * t.coeff;
    }
  }
  return out;
}

std::vector<DeltaSquaredTerm> delta_squared(const Coalgebra& co, int i) {
  std::vector<DeltaSquaredTerm> out;
  for (const auto& t : co.delta[i])
    for (const auto& s : co.delta[t.left])
      out.push_back({s.left, s.right, t.right, t.coeff * s.coeff});
  return out;
}

bool same_coalgebra(const Coalgebra& a, const Coalgebra& b) {
  if (&a == &b) return true;
  if (a.field != b.field || a.dim != b.dim) return false;
  if (a.counit != b.counit) return false;
  if (a.has_coaug() != b.has_coaug()) return false;
  if (a.has_coaug() && a.coaug != b.coaug) return false;
  for (int i = 0; i < a.dim; ++i) {
    const auto& ta = a.delta[i];
    const auto& tb = b.delta[i];
    if (ta.size() != tb.size()) return false;
    for (std::size_t k = 0; k < ta.size(); ++k)
      if (ta[k].left != tb[k].left || ta[k].right != tb[k].right ||
          ta[k].coeff != tb[k].coeff)
        return false;
  }
  return true;
}

bool same_hopf(const HopfAlgebra& a, const HopfAlgebra& b) {
  if (&a == &b) return true;
  if (!same_coalgebra(*a.co, *b.co)) return false;
  return a.alg.mult == b.alg.mult && a.alg.unit == b.alg.unit &&
         a.antipode == b.antipode;
}

CoalgebraPtr trivial_coalgebra(const FieldSpec& field) {
  Matrix counit(1, 1, field);
  counit.at(0, 0) = Scalar::one(field);
  return make_coalgebra(field, 1, {"1"},
                        {{DeltaTerm{0, 0, Scalar::one(field)}}}, counit,
                        basis_vector(1, 0, field));
}

CoalgebraPtr tensor_power_plain(const CoalgebraPtr& base, int n) {
  if (n < 0) throw std::logic_error("tensor_power_plain: negative power");
  if (n == 0) return trivial_coalgebra(base->field);
  if (n == 1) return base;
  const Coalgebra& c = *base;
  const int d = c.dim;
  int dim = 1;
  for (int k = 0; k < n; ++k) dim *= d;

  std::vector<std::string> labels(dim);
  std::vector<std::vector<DeltaTerm>> delta(dim);
  std::vector<int> dims(n, d);
  for (int flat = 0; flat < dim; ++flat) {
    std::vector<int> idx = unflat_index(flat, dims);
    std::string lab = c.label(idx[0]);
    for (int k = 1; k < n; ++k) lab += "⊗" + c.label(idx[k]);
    labels[flat] = lab;
    // cartesian product of the factorwise terms, legs collated
    std::vector<DeltaTerm> acc{{0, 0, Scalar::one(c.field)}};
    for (int k = 0; k < n; ++k) {
      std::vector<DeltaTerm> next;
      next.reserve(acc.size() * c.delta[idx[k]].size());
      for (const auto& partial : acc)
        for (const auto& t : c.delta[idx[k]])
          next.push_back({partial.left * d + t.left, partial.right * d + t.right,
                          partial.coeff * t.coeff});
      acc = std::move(next);
    }
    delta[flat] = std::move(acc);
  }

  Matrix counit(1, dim, c.field);
  for (int flat = 0; flat < dim; ++flat) {
    std::vector<int> idx = unflat_index(flat, dims);
    Scalar v = Scalar::one(c.field);
    for (int k = 0; k < n; ++k) v = v * c.counit.at(0, idx[k]);
    counit.at(0, flat) = v;
  }

  Matrix coaug;
  if (c.has_coaug()) {
    coaug = c.coaug;
    for (int k = 1; k < n; ++k) coaug = kronecker(coaug, c.coaug);
  }
  return make_coalgebra(c.field, dim, std::move(labels), std::move(delta),
                        std::move(counit), std::move(coaug));
}

Algebra trivial_algebra(const FieldSpec& field) {
  Algebra a;
  a.field = field;
  a.dim = 1;
  a.labels = {"1"};
  a.mult = Matrix(1, 1, field);
  a.mult.at(0, 0) = Scalar::one(field);
  a.unit = basis_vector(1, 0, field);
  return a;
}

Matrix algebra_product(const Algebra& a, const Matrix& u, const Matrix& v) {
  Matrix out(a.dim, 1, a.field);
  for (int i = 0; i < a.dim; ++i) {
    const Scalar& ui = u.at(i, 0);
    if (ui.is_zero()) continue;
    for (int j = 0; j < a.dim; ++j) {
      const Scalar& vj = v.at(j, 0);
      if (vj.is_zero()) continue;
      Scalar c = ui * vj;
      for (int t = 0; t < a.dim; ++t) {
        const Scalar& m = a.mult.at(t, i * a.dim + j);
        if (!m.is_zero()) out.at(t, 0) = out.at(t, 0) + c * m;
      }
    }
  }
  return out;
}

CheckReport check_coalgebra(const Coalgebra& c) {
  CheckReport rep;
  const int d = c.dim;

  bool co_ok = true;
  std::string co_wit;
  for (int i = 0; i < d && co_ok; ++i) {
    Accum acc(c.field);
    for (const auto& t : c.delta[i]) {
      for (const auto& s : c.delta[t.left])
        acc.add((static_cast<long long>(s.left) * d + s.right) * d + t.right,
                t.coeff * s.coeff);
      for (const auto& s : c.delta[t.right])
        acc.add((static_cast<long long>(t.left) * d + s.left) * d + s.right,
                -(t.coeff * s.coeff));
    }
    if (auto bad = acc.first_nonzero()) {
      co_ok = false;
      long long k = bad->first;
      int cc = static_cast<int>(k % d), bb = static_cast<int>((k / d) % d),
          aa = static_cast<int>(k / d / d);
      co_wit = "at Δ(" + c.label(i) + "): coefficient of " + c.label(aa) + "⊗" +
               c.label(bb) + "⊗" + c.label(cc) + " differs by " +
               bad->second.str();
    }
  }
  rep.add("coassociativity", co_ok, co_wit);

  for (int side = 0; side < 2; ++side) {
    bool ok = true;
    std::string wit;
    for (int i = 0; i < d && ok; ++i) {
      Matrix v(d, 1, c.field);
      for (const auto& t : c.delta[i]) {
        int kept = side == 0 ? t.right : t.left;
        int eaten = side == 0 ? t.left : t.right;
        v.at(kept, 0) = v.at(kept, 0) + t.coeff * c.counit.at(0, eaten);
      }
      v.at(i, 0) = v.at(i, 0) - Scalar::one(c.field);
      for (int j = 0; j < d; ++j)
        if (!v.at(j, 0).is_zero()) {
          ok = false;
          wit = std::string(side == 0 ? "(ε⊗id)" : "(id⊗ε)") + "Δ(" + c.label(i) +
                ") ≠ " + c.label(i) + ": coefficient of " + c.label(j) +
                " off by " + v.at(j, 0).str();
          break;
        }
    }
    rep.add(side == 0 ? "counit-left" : "counit-right", ok, wit);
  }
  return rep;
}

CheckReport check_algebra(const Algebra& a) {
  CheckReport rep;
  const int d = a.dim;
  if (a.mult.rows() != d || a.mult.cols() != d * d || a.unit.rows() != d ||
      a.unit.cols() != 1)
    throw input_error("algebra structure tensors have wrong shapes");

  bool ok = true;
  std::string wit;
  for (int i = 0; i < d && ok; ++i)
    for (int j = 0; j < d && ok; ++j)
      for (int k = 0; k < d && ok; ++k) {
        Matrix lhs(d, 1, a.field), rhs(d, 1, a.field);
        // (e_i e_j) e_k
        for (int t = 0; t < d; ++t) {
          const Scalar& v = a.mult.at(t, i * d + j);
          if (v.is_zero()) continue;
          for (int s = 0; s < d; ++s)
            lhs.at(s, 0) = lhs.at(s, 0) + v * a.mult.at(s, t * d + k);
        }
        // e_i (e_j e_k)
        for (int t = 0; t < d; ++t) {
          const Scalar& v = a.mult.at(t, j * d + k);
          if (v.is_zero()) continue;
          for (int s = 0; s < d; ++s)
            rhs.at(s, 0) = rhs.at(s, 0) + v * a.mult.at(s, i * d + t);
        }
        if (lhs != rhs) {
          ok = false;
          wit = "(" + a.labels[i] + "·" + a.labels[j] + ")·" + a.labels[k] +
                " ≠ " + a.labels[i] + "·(" + a.labels[j] + "·" + a.labels[k] + ")";
        }
      }
  rep.add("associativity", ok, wit);

  for (int side = 0; side < 2; ++side) {
    bool uok = true;
    std::string uwit;
    for (int j = 0; j < d && uok; ++j) {
      Matrix v(d, 1, a.field);
      for (int t = 0; t < d; ++t) {
        const Scalar& ut = a.unit.at(t, 0);
        if (ut.is_zero()) continue;
        for (int s = 0; s < d; ++s)
          v.at(s, 0) = v.at(s, 0) + ut * a.mult.at(s, side == 0 ? t * d + j : j * d + t);
      }
      v.at(j, 0) = v.at(j, 0) - Scalar::one(a.field);
      if (!v.is_zero()) {
        uok = false;
        uwit = (side == 0 ? "1·" : "") + a.labels[j] + (side == 0 ? "" : "·1") +
               " ≠ " + a.labels[j];
      }
    }
    rep.add(side == 0 ? "unit-left" : "unit-right", uok, uwit);
  }
  return rep;
}

CheckReport check_bialgebra(const Bialgebra& b) {
  const Coalgebra& c = *b.co;
  const Algebra& a = b.alg;
  if (c.dim != a.dim || c.field != a.field)
    throw input_error("bialgebra: coalgebra and algebra shapes disagree");
  CheckReport rep;
  rep.merge(check_coalgebra(c));
  rep.merge(check_algebra(a));
  const int d = c.dim;

  bool mok = true;
  std::string mwit;
  for (int i = 0; i < d && mok; ++i)
    for (int j = 0; j < d && mok; ++j) {
      Accum acc(c.field);
      for (int t = 0; t < d; ++t) {
        const Scalar& v = a.mult.at(t, i * d + j);
        if (v.is_zero()) continue;
        for (const auto& s : c.delta[t])
          acc.add(static_cast<long long>(s.left) * d + s.right, v * s.coeff);
      }
      for (const auto& ti : c.delta[i])
        for (const auto& tj : c.delta[j]) {
          Scalar v = ti.coeff * tj.coeff;
          for (int p = 0; p < d; ++p) {
            const Scalar& mp = a.mult.at(p, ti.left * d + tj.left);
            if (mp.is_zero()) continue;
            for (int q = 0; q < d; ++q) {
              const Scalar& mq = a.mult.at(q, ti.right * d + tj.right);
              if (mq.is_zero()) continue;
              acc.add(static_cast<long long>(p) * d + q, -(v * mp * mq));
            }
          }
        }
      if (auto bad = acc.first_nonzero()) {
        mok = false;
        int q = static_cast<int>(bad->first % d), p = static_cast<int>(bad->first / d);
        mwit = "Δ(" + c.label(i) + "·" + c.label(j) + ") ≠ Δ(" + c.label(i) +
               ")Δ(" + c.label(j) + "): coefficient of " + pair_label(c, p, q) +
               " differs by " + bad->second.str();
      }
    }
  rep.add("comultiplication-multiplicative", mok, mwit);

  bool eok = true;
  std::string ewit;
  for (int i = 0; i < d && eok; ++i)
    for (int j = 0; j < d && eok; ++j) {
      Scalar lhs = Scalar::zero(c.field);
      for (int t = 0; t < d; ++t)
        lhs = lhs + a.mult.at(t, i * d + j) * c.counit.at(0, t);
      Scalar rhs = c.counit.at(0, i) * c.counit.at(0, j);
      if (lhs != rhs) {
        eok = false;
        ewit = "ε(" + c.label(i) + "·" + c.label(j) + ") = " + lhs.str() +
               " but ε(" + c.label(i) + ")ε(" + c.label(j) + ") = " + rhs.str();
      }
    }
  rep.add("counit-multiplicative", eok, ewit);

  rep.add("comultiplication-unital",
          apply_delta(c, a.unit) == kronecker(a.unit, a.unit),
          "Δ(1) ≠ 1⊗1");
  rep.add("counit-unital", (c.counit * a.unit).at(0, 0).is_one(), "ε(1) ≠ 1");
  return rep;
}

CheckReport check_hopf(const HopfAlgebra& h) {
  CheckReport rep = check_bialgebra(h.as_bialgebra());
  const Coalgebra& c = *h.co;
  const Algebra& a = h.alg;
  const int d = c.dim;
  if (h.antipode.rows() != d || h.antipode.cols() != d ||
      h.antipode.field() != c.field)
    throw input_error("antipode has wrong shape");

  for (int side = 0; side < 2; ++side) {
    bool ok = true;
    std::string wit;
    for (int i = 0; i < d && ok; ++i) {
      Matrix acc(d, 1, c.field);
      for (const auto& t : c.delta[i]) {
        if (side == 0) {
          // S(x') x''
          for (int b = 0; b < d; ++b) {
            const Scalar& sb = h.antipode.at(b, t.left);
            if (sb.is_zero()) continue;
            for (int s = 0; s < d; ++s)
              acc.at(s, 0) = acc.at(s, 0) + t.coeff * sb * a.mult.at(s, b * d + t.right);
          }
        } else {
          // x' S(x'')
          for (int b = 0; b < d; ++b) {
            const Scalar& sb = h.antipode.at(b, t.right);
            if (sb.is_zero()) continue;
            for (int s = 0; s < d; ++s)
              acc.at(s, 0) = acc.at(s, 0) + t.coeff * sb * a.mult.at(s, t.left * d + b);
          }
        }
      }
      Matrix expect = a.unit.scaled(c.counit.at(0, i));
      if (acc != expect) {
        ok = false;
        wit = std::string(side == 0 ? "S(x')x''" : "x'S(x'')") + " ≠ ε(x)1 at x = " +
              c.label(i);
      }
    }
    rep.add(side == 0 ? "antipode-left" : "antipode-right", ok, wit);
  }
  return rep;
}

Functional counit_functional(const CoalgebraPtr& c) { return {c, c->counit}; }

Functional functional_from_row(const CoalgebraPtr& c, Matrix row) {
  if (row.rows() != 1 || row.cols() != c->dim || row.field() != c->field)
    throw std::logic_error("functional row has wrong shape");
  return {c, std::move(row)};
}

namespace {
const Coalgebra& common_domain(const Functional& f, const Functional& g) {
  if (!f.dom || !g.dom) throw std::logic_error("functional without domain");
  if (f.dom.get() != g.dom.get() && !same_coalgebra(*f.dom, *g.dom))
    throw std::logic_error("convolution of functionals on different coalgebras");
  return *f.dom;
}
}  // namespace

Functional convolve(const Functional& f, const Functional& g) {
  const Coalgebra& c = common_domain(f, g);
  Matrix row(1, c.dim, c.field);
  for (int i = 0; i < c.dim; ++i) {
    Scalar acc = Scalar::zero(c.field);
    for (const auto& t : c.delta[i])
      acc = acc + t.coeff * f.coeffs.at(0, t.left) * g.coeffs.at(0, t.right);
    row.at(0, i) = acc;
  }
  return {f.dom, std::move(row)};
}

std::optional<Functional> convolution_inverse(const Functional& f) {
  const Coalgebra& c = *f.dom;
  const int d = c.dim;
  Matrix m(d, d, c.field);
  for (int i = 0; i < d; ++i)
    for (const auto& t : c.delta[i])
      m.at(i, t.right) = m.at(i, t.right) + t.coeff * f.coeffs.at(0, t.left);
  auto x = solve_linear(m, c.counit.transpose());
  if (!x) return std::nullopt;
  Functional g{f.dom, x->transpose()};
  Functional eps = counit_functional(f.dom);
  if (convolve(f, g).coeffs != eps.coeffs || convolve(g, f).coeffs != eps.coeffs)
    return std::nullopt;
  return g;
}

Matrix convolve_maps(const Coalgebra& c, const Algebra& a, const Matrix& f,
                     const Matrix& g) {
  if (f.rows() != a.dim || f.cols() != c.dim || g.rows() != a.dim ||
      g.cols() != c.dim || a.field != c.field)
    throw std::logic_error("convolve_maps: shape mismatch");
  Matrix out(a.dim, c.dim, c.field);
  for (int i = 0; i < c.dim; ++i)
    for (const auto& t : c.delta[i])
      for (int p = 0; p < a.dim; ++p) {
        const Scalar& fp = f.at(p, t.left);
        if (fp.is_zero()) continue;
        for (int q = 0; q < a.dim; ++q) {
          const Scalar& gq = g.at(q, t.right);
          if (gq.is_zero()) continue;
          Scalar v = t.coeff * fp * gq;
          for (int s = 0; s < a.dim; ++s) {
            const Scalar& ms = a.mult.at(s, p * a.dim + q);
            if (!ms.is_zero()) out.at(s, i) = out.at(s, i) + v * ms;
          }
        }
      }
  return out;
}

std::optional<Matrix> convolution_inverse_map(const Coalgebra& c,
                                              const Algebra& a,
                                              const Matrix& f) {
  const int dc = c.dim, da = a.dim;
  // unknown X(b, r) flattened as b*dc + r; equation rows (i, p)
  Matrix m(dc * da, dc * da, c.field);
  Matrix rhs(dc * da, 1, c.field);
  for (int i = 0; i < dc; ++i) {
    for (const auto& t : c.delta[i])
      for (int s = 0; s < da; ++s) {
        const Scalar& fs = f.at(s, t.left);
        if (fs.is_zero()) continue;
        for (int p = 0; p < da; ++p)
          for (int b = 0; b < da; ++b) {
            const Scalar& mp = a.mult.at(p, s * da + b);
            if (mp.is_zero()) continue;
            int row = i * da + p, col = b * dc + t.right;
            m.at(row, col) = m.at(row, col) + t.coeff * fs * mp;
          }
      }
    for (int p = 0; p < da; ++p)
      rhs.at(i * da + p, 0) = c.counit.at(0, i) * a.unit.at(p, 0);
  }
  auto x = solve_linear(m, rhs);
  if (!x) return std::nullopt;
  Matrix g(da, dc, c.field);
  for (int b = 0; b < da; ++b)
    for (int r = 0; r < dc; ++r) g.at(b, r) = x->at(b * dc + r, 0);
  Matrix ue = a.unit * c.counit;  // da x dc
  if (convolve_maps(c, a, f, g) != ue || convolve_maps(c, a, g, f) != ue)
    return std::nullopt;
  return g;
}

Matrix convolve_scalar_map(const Coalgebra& c, const Matrix& f, const Matrix& g) {
  if (f.rows() != 1 || f.cols() != c.dim || g.cols() != c.dim)
    throw std::logic_error("convolve_scalar_map: shape mismatch");
  Matrix out(g.rows(), c.dim, c.field);
  for (int i = 0; i < c.dim; ++i)
    for (const auto& t : c.delta[i]) {
      Scalar v = t.coeff * f.at(0, t.left);
      if (v.is_zero()) continue;
      for (int s = 0; s < g.rows(); ++s) {
        const Scalar& gs = g.at(s, t.right);
        if (!gs.is_zero()) out.at(s, i) = out.at(s, i) + v * gs;
      }
    }
  return out;
}

Matrix convolve_map_scalar(const Coalgebra& c, const Matrix& g, const Matrix& f) {
  if (f.rows() != 1 || f.cols() != c.dim || g.cols() != c.dim)
    throw std::logic_error("convolve_map_scalar: shape mismatch");
  Matrix out(g.rows(), c.dim, c.field);
  for (int i = 0; i < c.dim; ++i)
    for (const auto& t : c.delta[i]) {
      Scalar v = t.coeff * f.at(0, t.right);
      if (v.is_zero()) continue;
      for (int s = 0; s < g.rows(); ++s) {
        const Scalar& gs = g.at(s, t.left);
        if (!gs.is_zero()) out.at(s, i) = out.at(s, i) + v * gs;
      }
    }
  return out;
}

std::vector<int> wedge_filtration_dims(const Coalgebra& c, const Matrix& d0) {
  const int d = c.dim;
  Matrix dd = delta_dense(c);
  Matrix eye = Matrix::identity(d, c.field);
  Matrix left_block = kronecker(d0, eye);  // D0 (x) C
  Matrix basis = d0;
  std::vector<int> dims{rank(d0)};
  if (dims[0] == d) return dims;
  for (int guard = 0; guard <= d; ++guard) {
    Matrix span = left_block.hcat(kronecker(eye, basis));
    Matrix ann = nullspace(span.transpose());        // functionals killing the span
    Matrix cond = ann.transpose() * dd;              // x must satisfy cond * x = 0
    Matrix next = nullspace(cond);
    dims.push_back(next.cols());
    // stop at full dimension (terminal) or at stabilization below it
    if (next.cols() == d || next.cols() == dims[dims.size() - 2]) break;
    basis = next;
  }
  return dims;
}

Connectivity is_connected(const Coalgebra& c) {
  if (!c.has_coaug())
    throw input_error("connectedness requires a coaugmented coalgebra");
  if (apply_delta(c, c.coaug) != kronecker(c.coaug, c.coaug))
    throw input_error("coaugmentation is not grouplike");
  if (!(c.counit * c.coaug).at(0, 0).is_one())
    throw input_error("coaugmentation does not have counit 1");
  Connectivity out;
  out.filtration_dims = wedge_filtration_dims(c, c.coaug);
  out.connected = out.filtration_dims.back() == c.dim;
  return out;
}

IntegralResult ad_invariant_integral(const HopfAlgebra& h) {
  const Coalgebra& c = *h.co;
  const Algebra& a = h.alg;
  const int d = c.dim;
  Matrix m(4 * d * d, d, c.field);

  // x' lambda(x'') = lambda(x) 1   and   lambda(x') x'' = lambda(x) 1
  for (int i = 0; i < d; ++i) {
    for (const auto& t : c.delta[i]) {
      m.at(i * d + t.left, t.right) = m.at(i * d + t.left, t.right) + t.coeff;
      int base = d * d + i * d;
      m.at(base + t.right, t.left) = m.at(base + t.right, t.left) + t.coeff;
    }
    for (int p = 0; p < d; ++p) {
      m.at(i * d + p, i) = m.at(i * d + p, i) - a.unit.at(p, 0);
      m.at(d * d + i * d + p, i) = m.at(d * d + i * d + p, i) - a.unit.at(p, 0);
    }
  }

  // lambda(h' x S(h'')) = eps(h) lambda(x)  and  lambda(S(h') x h'') = eps(h) lambda(x)
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      Matrix w_left(d, 1, c.field), w_right(d, 1, c.field);
      for (const auto& t : c.delta[i]) {
        // h' x S(h'') with h = e_i, x = e_j
        Matrix u = a.mult_col(t.left, j);
        for (int b = 0; b < d; ++b) {
          const Scalar& sb = h.antipode.at(b, t.right);
          if (sb.is_zero()) continue;
          for (int p = 0; p < d; ++p) {
            const Scalar& up = u.at(p, 0);
            if (up.is_zero()) continue;
            Scalar v = t.coeff * up * sb;
            for (int s = 0; s < d; ++s) {
              const Scalar& ms = a.mult.at(s, p * d + b);
              if (!ms.is_zero()) w_left.at(s, 0) = w_left.at(s, 0) + v * ms;
            }
          }
        }
        // S(h') x h''
        Matrix v2 = a.mult_col(j, t.right);
        for (int b = 0; b < d; ++b) {
          const Scalar& sb = h.antipode.at(b, t.left);
          if (sb.is_zero()) continue;
          for (int p = 0; p < d; ++p) {
            const Scalar& vp = v2.at(p, 0);
            if (vp.is_zero()) continue;
            Scalar v = t.coeff * sb * vp;
            for (int s = 0; s < d; ++s) {
              const Scalar& ms = a.mult.at(s, b * d + p);
              if (!ms.is_zero()) w_right.at(s, 0) = w_right.at(s, 0) + v * ms;
            }
          }
        }
      }
      int row3 = 2 * d * d + i * d + j, row4 = 3 * d * d + i * d + j;
      for (int s = 0; s < d; ++s) {
        m.at(row3, s) = m.at(row3, s) + w_left.at(s, 0);
        m.at(row4, s) = m.at(row4, s) + w_right.at(s, 0);
      }
      m.at(row3, j) = m.at(row3, j) - c.counit.at(0, i);
      m.at(row4, j) = m.at(row4, j) - c.counit.at(0, i);
    }

  Matrix ns = nullspace(m);
  IntegralResult res;
  if (ns.cols() == 0) {
    res.status = IntegralStatus::none;
    res.detail = "the integral and ad-invariance constraints force lambda = 0";
    return res;
  }
  // values lambda_k(1)
  Matrix at_unit = ns.transpose() * a.unit;  // k x 1
  int nonzero = -1;
  for (int k = 0; k < ns.cols(); ++k)
    if (!at_unit.at(k, 0).is_zero()) {
      nonzero = k;
      break;
    }
  if (nonzero < 0) {
    res.status = IntegralStatus::none;
    res.detail = "every solution vanishes at 1, so none can be normalized";
    return res;
  }
  if (ns.cols() >= 2) {
    res.status = IntegralStatus::ambiguous;
    res.detail = "the solution space is " + std::to_string(ns.cols()) +
                 "-dimensional, so the normalization lambda(1) = 1 does not pin "
                 "down a unique form";
    return res;
  }
  res.status = IntegralStatus::found;
  Matrix row = ns.col(0).transpose().scaled(at_unit.at(nonzero, 0).inverse());
  res.lambda = Functional{h.co, row};
  res.detail = "unique normalized solution";
  return res;
}

}  // namespace hopf
