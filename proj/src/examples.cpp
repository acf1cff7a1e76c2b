#include "hopf/examples.hpp"

#include <array>
#include <stdexcept>

namespace hopf {

namespace {

HopfAlgebra group_algebra(const FieldSpec& field,
                          const std::vector<std::string>& labels,
                          const std::vector<std::vector<int>>& cayley,
                          const std::vector<int>& inverse, int identity) {
  const int d = static_cast<int>(labels.size());
  HopfAlgebra h;
  h.alg.field = field;
  h.alg.dim = d;
  h.alg.labels = labels;
  h.alg.mult = Matrix(d, d * d, field);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      h.alg.mult.at(cayley[i][j], i * d + j) = Scalar::one(field);
  h.alg.unit = basis_vector(d, identity, field);

  std::vector<std::vector<DeltaTerm>> delta(d);
  Matrix counit(1, d, field);
  for (int i = 0; i < d; ++i) {
    delta[i] = {{i, i, Scalar::one(field)}};
    counit.at(0, i) = Scalar::one(field);
  }
  h.co = make_coalgebra(field, d, labels, std::move(delta), std::move(counit),
                        h.alg.unit);

  h.antipode = Matrix(d, d, field);
  for (int i = 0; i < d; ++i) h.antipode.at(inverse[i], i) = Scalar::one(field);
  return h;
}

}  // namespace

HopfAlgebra cyclic_group_algebra(const FieldSpec& field, int n) {
  if (n < 1) throw input_error("cyclic group order must be positive");
  std::vector<std::string> labels(n);
  std::vector<std::vector<int>> cayley(n, std::vector<int>(n));
  std::vector<int> inverse(n);
  for (int i = 0; i < n; ++i) {
    labels[i] = i == 0 ? "1" : (i == 1 ? "g" : "g^" + std::to_string(i));
    inverse[i] = (n - i) % n;
    for (int j = 0; j < n; ++j) cayley[i][j] = (i + j) % n;
  }
  return group_algebra(field, labels, cayley, inverse, 0);
}

HopfAlgebra symmetric_group_algebra_s3(const FieldSpec& field) {
  // permutations of {0,1,2}; composition (p*q)(t) = p(q(t))
  const std::array<std::array<int, 3>, 6> perms = {{{0, 1, 2},
                                                    {1, 0, 2},
                                                    {2, 1, 0},
                                                    {0, 2, 1},
                                                    {1, 2, 0},
                                                    {2, 0, 1}}};
  const std::vector<std::string> labels = {"e",    "(12)",  "(13)",
                                           "(23)", "(123)", "(132)"};
  auto find = [&](const std::array<int, 3>& p) {
    for (int k = 0; k < 6; ++k)
      if (perms[k] == p) return k;
    throw std::logic_error("permutation lookup failed");
  };
  std::vector<std::vector<int>> cayley(6, std::vector<int>(6));
  std::vector<int> inverse(6);
  for (int i = 0; i < 6; ++i) {
    std::array<int, 3> inv{};
    for (int t = 0; t < 3; ++t) inv[perms[i][t]] = t;
    inverse[i] = find(inv);
    for (int j = 0; j < 6; ++j) {
      std::array<int, 3> comp{};
      for (int t = 0; t < 3; ++t) comp[t] = perms[i][perms[j][t]];
      cayley[i][j] = find(comp);
    }
  }
  return group_algebra(field, labels, cayley, inverse, 0);
}

HopfAlgebra quantum_line_hopf(const FieldSpec& field, int n_g, int n_x,
                              const Scalar& q, const Scalar& mu) {
  if (n_g < 1 || n_x < 1) throw input_error("quantum line: orders must be positive");
  if (q.is_zero()) throw input_error("quantum line: q must be nonzero");
  const int d = n_g * n_x;
  auto flat = [&](int i, int e) { return i * n_x + e; };

  std::vector<std::string> labels(d);
  for (int i = 0; i < n_g; ++i)
    for (int e = 0; e < n_x; ++e) {
      std::string s;
      if (i == 1) s += "g";
      if (i > 1) s += "g^" + std::to_string(i);
      if (e == 1) s += "x";
      if (e > 1) s += "x^" + std::to_string(e);
      labels[flat(i, e)] = s.empty() ? "1" : s;
    }

  HopfAlgebra h;
  h.alg.field = field;
  h.alg.dim = d;
  h.alg.labels = labels;
  h.alg.unit = basis_vector(d, flat(0, 0), field);
  h.alg.mult = Matrix(d, d * d, field);
  // (g^i x^e)(g^j x^f) = q^{e j} g^{i+j} x^{e+f}, with x^{n_x+s} reduced to
  // mu (x^s - g^{n_x} x^s)
  for (int i = 0; i < n_g; ++i)
    for (int e = 0; e < n_x; ++e)
      for (int j = 0; j < n_g; ++j)
        for (int f = 0; f < n_x; ++f) {
          int col = flat(i, e) * d + flat(j, f);
          Scalar coef = scalar_pow(q, static_cast<long>(e) * j);
          int gi = (i + j) % n_g, ef = e + f;
          if (ef < n_x) {
            h.alg.mult.at(flat(gi, ef), col) =
                h.alg.mult.at(flat(gi, ef), col) + coef;
          } else {
            int s = ef - n_x;
            Scalar v = coef * mu;
            h.alg.mult.at(flat(gi, s), col) = h.alg.mult.at(flat(gi, s), col) + v;
            int gi2 = (gi + n_x) % n_g;
            h.alg.mult.at(flat(gi2, s), col) =
                h.alg.mult.at(flat(gi2, s), col) - v;
          }
        }

  // comultiplication by induction: Delta(g^i) = g^i (x) g^i,
  // Delta(g^i x^e) = Delta(g^i x^{e-1}) * Delta(x) in A (x) A
  auto mult_pair_vectors = [&](const Matrix& u, const Matrix& v) {
    // u, v: d^2 x 1 vectors in A (x) A (componentwise product)
    Matrix out(d * d, 1, field);
    for (int a = 0; a < d * d; ++a) {
      const Scalar& ua = u.at(a, 0);
      if (ua.is_zero()) continue;
      int a1 = a / d, a2 = a % d;
      for (int b = 0; b < d * d; ++b) {
        const Scalar& vb = v.at(b, 0);
        if (vb.is_zero()) continue;
        int b1 = b / d, b2 = b % d;
        Scalar c = ua * vb;
        for (int t1 = 0; t1 < d; ++t1) {
          const Scalar& m1 = h.alg.mult.at(t1, a1 * d + b1);
          if (m1.is_zero()) continue;
          for (int t2 = 0; t2 < d; ++t2) {
            const Scalar& m2 = h.alg.mult.at(t2, a2 * d + b2);
            if (m2.is_zero()) continue;
            out.at(t1 * d + t2, 0) = out.at(t1 * d + t2, 0) + c * m1 * m2;
          }
        }
      }
    }
    return out;
  };
  Matrix delta_x(d * d, 1, field);  // x (x) 1 + g (x) x
  delta_x.at(flat(0, 1) * d + flat(0, 0), 0) = Scalar::one(field);
  delta_x.at(flat(1 % n_g, 0) * d + flat(0, 1), 0) = Scalar::one(field);
  std::vector<Matrix> delta_cols(d, Matrix(d * d, 1, field));
  for (int i = 0; i < n_g; ++i) {
    delta_cols[flat(i, 0)].at(flat(i, 0) * d + flat(i, 0), 0) = Scalar::one(field);
    for (int e = 1; e < n_x; ++e)
      delta_cols[flat(i, e)] = mult_pair_vectors(delta_cols[flat(i, e - 1)], delta_x);
  }
  std::vector<std::vector<DeltaTerm>> delta(d);
  Matrix counit(1, d, field);
  for (int i = 0; i < n_g; ++i)
    for (int e = 0; e < n_x; ++e) {
      int k = flat(i, e);
      for (int a = 0; a < d * d; ++a)
        if (!delta_cols[k].at(a, 0).is_zero())
          delta[k].push_back({a / d, a % d, delta_cols[k].at(a, 0)});
      counit.at(0, k) = e == 0 ? Scalar::one(field) : Scalar::zero(field);
    }
  h.co = make_coalgebra(field, d, labels, std::move(delta), std::move(counit),
                        h.alg.unit);

  // antipode by induction: S(g^i) = g^{-i}, S(g^i x^e) = S(x) S(g^i x^{e-1}),
  // with S(x) = -g^{-1} x
  Matrix s_x(d, 1, field);
  s_x.at(flat((n_g - 1) % n_g, 1), 0) = -Scalar::one(field);
  h.antipode = Matrix(d, d, field);
  for (int i = 0; i < n_g; ++i) {
    Matrix cur = basis_vector(d, flat((n_g - i) % n_g, 0), field);
    for (int p = 0; p < d; ++p) h.antipode.at(p, flat(i, 0)) = cur.at(p, 0);
    for (int e = 1; e < n_x; ++e) {
      cur = algebra_product(h.alg, s_x, cur);
      for (int p = 0; p < d; ++p) h.antipode.at(p, flat(i, e)) = cur.at(p, 0);
    }
  }
  return h;
}

HopfAlgebra sweedler_hopf() {
  const FieldSpec q_field = FieldSpec::rationals();
  return quantum_line_hopf(q_field, 2, 2, Scalar::from_int(-1, q_field),
                           Scalar::zero(q_field));
}

std::uint64_t smallest_prime_1_mod(int n) {
  for (std::uint64_t p = 2;; ++p)
    if (is_prime_u64(p) && (p - 1) % static_cast<std::uint64_t>(n) == 0) return p;
}

Scalar smallest_element_of_order(const FieldSpec& field, int n) {
  if (field.kind != FieldKind::prime) {
    if (n == 1) return Scalar::one(field);
    if (n == 2) return Scalar::from_int(-1, field);
    throw input_error("over Q only orders 1 and 2 are available");
  }
  for (std::uint64_t a = 1; a < field.p; ++a) {
    Scalar s = Scalar::from_int(static_cast<long>(a), field);
    // multiplicative order == n: s^n = 1 and s^m != 1 for 0 < m < n
    bool ok = scalar_pow(s, n).is_one();
    for (int m = 1; ok && m < n; ++m)
      if (scalar_pow(s, m).is_one()) ok = false;
    if (ok) return s;
  }
  throw input_error("no element of order " + std::to_string(n) + " in " +
                    field.name());
}

HopfAlgebra taft_hopf(int n, std::uint64_t p) {
  if (n < 2) throw input_error("taft: n must be at least 2");
  if (p == 0) p = smallest_prime_1_mod(n);
  FieldSpec f = FieldSpec::prime(p);
  Scalar q = smallest_element_of_order(f, n);
  return quantum_line_hopf(f, n, n, q, Scalar::zero(f));
}

HopfAlgebra lifted_quantum_line_hopf() {
  FieldSpec f = FieldSpec::prime(5);
  return quantum_line_hopf(f, 4, 2, Scalar::from_int(-1, f), Scalar::one(f));
}

BraidedLine braided_line(const HopfPtr& h_cyclic, int n, const Scalar& q) {
  if (!h_cyclic || n < 1) throw input_error("braided_line: bad parameters");
  const FieldSpec f = h_cyclic->field();
  const int ng = h_cyclic->dim();

  std::vector<std::string> labels;
  for (int e = 0; e < n; ++e)
    labels.push_back(e == 0 ? "1" : (e == 1 ? "x" : "x^" + std::to_string(e)));

  Matrix action(n, ng * n, f);
  for (int k = 0; k < ng; ++k)
    for (int e = 0; e < n; ++e)
      action.at(e, k * n + e) = scalar_pow(q, (long)k * e);

  Matrix coaction(ng * n, n, f);
  for (int e = 0; e < n; ++e) coaction.at((e % ng) * n + e, e) = Scalar::one(f);

  // Delta(x^e) = Delta(x^{e-1}) Delta(x) in the braided algebra R (x) R,
  // where (x^a (x) x^i)(x^j (x) x^d) = q^{ij} x^{a+j} (x) x^{i+d}.
  std::vector<std::vector<DeltaTerm>> delta(n);
  Matrix cur(n * n, 1, f);
  cur.at(0, 0) = Scalar::one(f);
  delta[0].push_back({0, 0, Scalar::one(f)});
  for (int e = 1; e < n; ++e) {
    Matrix next(n * n, 1, f);
    for (int a = 0; a < n; ++a)
      for (int i = 0; i < n; ++i) {
        const Scalar c = cur.at(a * n + i, 0);
        if (c.is_zero()) continue;
        if (a + 1 < n) {
          auto& tgt = next.at((a + 1) * n + i, 0);
          tgt = tgt + c * scalar_pow(q, i);
        }
        if (i + 1 < n) {
          auto& tgt = next.at(a * n + (i + 1), 0);
          tgt = tgt + c;
        }
      }
    cur = next;
    for (int a = 0; a < n; ++a)
      for (int i = 0; i < n; ++i)
        if (!cur.at(a * n + i, 0).is_zero())
          delta[e].push_back({a, i, cur.at(a * n + i, 0)});
  }

  Matrix counit(1, n, f);
  counit.at(0, 0) = Scalar::one(f);
  Matrix coaug = basis_vector(n, 0, f);
  CoalgebraPtr co =
      make_coalgebra(f, n, labels, std::move(delta), counit, coaug);

  Matrix mult(n, n * n, f);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (a + b < n) mult.at(a + b, a * n + b) = Scalar::one(f);

  YDModule mod{h_cyclic, n, labels, std::move(action), std::move(coaction)};
  return {{std::move(mod), std::move(co)}, std::move(mult),
          basis_vector(n, 0, f)};
}

SplittingDatum trivial_splitting_datum(const HopfPtr& h) {
  if (!h) throw input_error("trivial_splitting_datum: null Hopf algebra");
  const Matrix id = Matrix::identity(h->dim(), h->field());
  return {h->as_bialgebra(), h, id, id};
}

namespace {

// Splits a quantum_line_hopf (monomial basis g^i x^e, flat index i*n_x + e)
// by the group algebra of its grouplike: pi keeps the e = 0 part, sigma
// embeds g^i.
SplittingDatum quantum_line_splitting(HopfAlgebra a, int n_g, int n_x) {
  const FieldSpec f = a.field();
  const HopfPtr h =
      std::make_shared<const HopfAlgebra>(cyclic_group_algebra(f, n_g));
  Matrix pi(n_g, n_g * n_x, f);
  Matrix sigma(n_g * n_x, n_g, f);
  for (int i = 0; i < n_g; ++i) {
    pi.at(i, i * n_x) = Scalar::one(f);
    sigma.at(i * n_x, i) = Scalar::one(f);
  }
  return {a.as_bialgebra(), h, std::move(pi), std::move(sigma)};
}

}  // namespace

SplittingDatum sweedler_splitting_datum() {
  return quantum_line_splitting(sweedler_hopf(), 2, 2);
}

SplittingDatum lifted_quantum_line_splitting_datum() {
  return quantum_line_splitting(lifted_quantum_line_hopf(), 4, 2);
}

}  // namespace hopf
