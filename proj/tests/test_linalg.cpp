#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hopf/field.hpp"
#include "hopf/matrix.hpp"
#include "testutil.hpp"

using namespace hopf;
using testutil::rand_matrix;
using testutil::rand_scalar;
using testutil::seeded_rng;

static const FieldSpec Q = FieldSpec::rationals();
static const FieldSpec F7 = FieldSpec::prime(7);

TEST_CASE("rational scalars canonicalize on parse and print") {
  CHECK(Scalar::parse("2/4", Q).str() == "1/2");
  CHECK(Scalar::parse("-3/6", Q).str() == "-1/2");
  CHECK(Scalar::parse("0/5", Q).str() == "0");
  CHECK(Scalar::parse("7", Q).str() == "7");
  CHECK(Scalar::parse("-12/8", Q).str() == "-3/2");
  // round-trip on a value with a big numerator
  Scalar big = Scalar::parse("123456789123456789123456789/2", Q);
  CHECK(Scalar::parse(big.str(), Q) == big);
}

TEST_CASE("rational arithmetic matches hand values") {
  auto s = [](const char* t) { return Scalar::parse(t, Q); };
  CHECK((s("1/3") + s("2/5")).str() == "11/15");
  CHECK((s("2/3") * s("9/4")).str() == "3/2");
  CHECK((s("-2/7").inverse()).str() == "-7/2");
  CHECK((s("1/2") - s("1/2")).is_zero());
  CHECK((s("5") / s("10")).str() == "1/2");
  CHECK_THROWS_AS(s("0").inverse(), std::domain_error);
}

TEST_CASE("malformed scalar strings are rejected") {
  for (const char* bad : {"", "1/", "/2", "1/0", "a", "1 /2", "1/2/3", "+3", "0x2", "1.5"})
    CHECK_THROWS_AS(Scalar::parse(bad, Q), input_error);
  CHECK_THROWS_AS(Scalar::parse("1/-0", Q), input_error);
  CHECK_THROWS_AS(Scalar::parse("3/7", FieldSpec::prime(7)), input_error);
}

TEST_CASE("prime field scalars reduce into [0,p)") {
  CHECK(Scalar::from_int(-1, F7).str() == "6");
  CHECK(Scalar::parse("10", F7).str() == "3");
  CHECK(Scalar::parse("-0", F7).str() == "0");
  CHECK(Scalar::parse("3/2", F7).str() == "5");  // 3 * 2^-1 = 3*4 = 12 = 5
  // full inverse table for F_7
  const int inv[7] = {0, 1, 4, 5, 2, 3, 6};
  for (int a = 1; a < 7; ++a)
    CHECK(Scalar::from_int(a, F7).inverse() == Scalar::from_int(inv[a], F7));
}

TEST_CASE("field spec validation") {
  CHECK_THROWS_AS(FieldSpec::prime(1), input_error);
  CHECK_THROWS_AS(FieldSpec::prime(4), input_error);
  CHECK_THROWS_AS(FieldSpec::prime(1ull << 31), input_error);
  CHECK(FieldSpec::prime(2).name() == "F2");
  CHECK(Q.name() == "Q");
  CHECK_THROWS_AS(Scalar::one(Q) + Scalar::one(F7), std::logic_error);
}

TEST_CASE("matrix product matches hand value") {
  Matrix a = Matrix::from_ints(2, 2, {1, 2, 3, 4}, Q);
  Matrix b = Matrix::from_ints(2, 2, {5, 6, 7, 8}, Q);
  CHECK(a * b == Matrix::from_ints(2, 2, {19, 22, 43, 50}, Q));
  CHECK(a * Matrix::identity(2, Q) == a);
  CHECK((a - a).is_zero());
}

TEST_CASE("kronecker product layout") {
  CHECK(kronecker(Matrix::identity(2, Q), Matrix::identity(3, Q)) ==
        Matrix::identity(6, Q));
  Matrix a = Matrix::from_ints(2, 2, {1, 2, 3, 4}, Q);
  Matrix b = Matrix::from_ints(2, 2, {0, 1, 1, 0}, Q);
  Matrix expect = Matrix::from_ints(4, 4,
                                    {0, 1, 0, 2,
                                     1, 0, 2, 0,
                                     0, 3, 0, 4,
                                     3, 0, 4, 0},
                                    Q);
  CHECK(kronecker(a, b) == expect);
}

TEST_CASE("kronecker acts factorwise on flattened simple tensors") {
  auto rng = seeded_rng();
  Matrix a = rand_matrix(rng, 3, 2, Q), b = rand_matrix(rng, 2, 4, Q);
  Matrix u = rand_matrix(rng, 2, 1, Q), v = rand_matrix(rng, 4, 1, Q);
  // u (x) v flattens with the left factor slowest
  Matrix uv(2 * 4, 1, Q);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 4; ++j)
      uv.at(flat_index({i, j}, {2, 4}), 0) = u.at(i, 0) * v.at(j, 0);
  Matrix lhs = kronecker(a, b) * uv;
  Matrix au = a * u, bv = b * v;
  Matrix rhs(3 * 2, 1, Q);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 2; ++j)
      rhs.at(flat_index({i, j}, {3, 2}), 0) = au.at(i, 0) * bv.at(j, 0);
  CHECK(lhs == rhs);
}

TEST_CASE("kronecker mixed-product property") {
  auto rng = seeded_rng(7);
  for (int trial = 0; trial < 5; ++trial) {
    Matrix a = rand_matrix(rng, 2, 3, F7), c = rand_matrix(rng, 3, 2, F7);
    Matrix b = rand_matrix(rng, 3, 2, F7), d = rand_matrix(rng, 2, 3, F7);
    CHECK(kronecker(a, b) * kronecker(c, d) == kronecker(a * c, b * d));
  }
}

TEST_CASE("rref matches hand value and is idempotent") {
  Matrix a = Matrix::from_ints(3, 3, {1, 2, 3, 4, 5, 6, 7, 8, 9}, Q);
  RrefResult r = rref(a);
  CHECK(r.mat == Matrix::from_ints(3, 3, {1, 0, -1, 0, 1, 2, 0, 0, 0}, Q));
  CHECK(r.pivot_cols == std::vector<int>{0, 1});
  CHECK(rref(r.mat).mat == r.mat);
  CHECK(rank(a) == 2);
}

TEST_CASE("solve_linear hand oracles") {
  // unique solution
  Matrix a = Matrix::from_ints(2, 2, {2, 1, 1, 3}, Q);
  Matrix b = Matrix::from_ints(2, 1, {3, 5}, Q);
  auto x = solve_linear(a, b);
  REQUIRE(x.has_value());
  CHECK(x->at(0, 0) == Scalar::parse("4/5", Q));
  CHECK(x->at(1, 0) == Scalar::parse("7/5", Q));

  // underdetermined: free variables pinned to zero
  Matrix u = Matrix::from_ints(1, 2, {1, 1}, Q);
  auto xu = solve_linear(u, Matrix::from_ints(1, 1, {2}, Q));
  REQUIRE(xu.has_value());
  CHECK(*xu == Matrix::from_ints(2, 1, {2, 0}, Q));

  Matrix w = Matrix::from_ints(2, 3, {1, 0, 2, 0, 1, 3}, Q);
  auto xw = solve_linear(w, Matrix::from_ints(2, 1, {1, 1}, Q));
  REQUIRE(xw.has_value());
  CHECK(*xw == Matrix::from_ints(3, 1, {1, 1, 0}, Q));

  // inconsistent
  Matrix bad = Matrix::from_ints(2, 1, {1, 1}, Q);
  CHECK_FALSE(solve_linear(bad, Matrix::from_ints(2, 1, {1, 2}, Q)).has_value());
}

TEST_CASE("solve_linear on random consistent systems") {
  auto rng = seeded_rng(11);
  for (const FieldSpec& f : {Q, F7}) {
    for (int trial = 0; trial < 10; ++trial) {
      Matrix a = rand_matrix(rng, 5, 7, f);
      Matrix x0 = rand_matrix(rng, 7, 2, f);
      Matrix b = a * x0;
      auto x = solve_linear(a, b);
      REQUIRE(x.has_value());
      CHECK(a * *x == b);
    }
  }
}

TEST_CASE("solve_linear recovers the exact vector for invertible systems") {
  auto rng = seeded_rng(13);
  // unit lower-triangular times unit upper-triangular is invertible
  Matrix l = Matrix::identity(6, F7), u = Matrix::identity(6, F7);
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < i; ++j) {
      l.at(i, j) = rand_scalar(rng, F7);
      u.at(j, i) = rand_scalar(rng, F7);
    }
  Matrix a = l * u;
  Matrix x0 = rand_matrix(rng, 6, 1, F7);
  auto x = solve_linear(a, a * x0);
  REQUIRE(x.has_value());
  CHECK(*x == x0);
}

TEST_CASE("nullspace hand oracles") {
  CHECK(nullspace(Matrix::identity(4, Q)).cols() == 0);
  CHECK(nullspace(Matrix(3, 3, Q)) == Matrix::identity(3, Q));
  Matrix a = Matrix::from_ints(1, 3, {1, 2, 3}, Q);
  Matrix expect = Matrix::from_ints(3, 2, {-2, -3, 1, 0, 0, 1}, Q);
  CHECK(nullspace(a) == expect);
}

TEST_CASE("nullspace columns span the kernel exactly") {
  auto rng = seeded_rng(17);
  for (const FieldSpec& f : {Q, F7}) {
    Matrix a = rand_matrix(rng, 4, 8, f);
    Matrix ns = nullspace(a);
    CHECK((a * ns).is_zero());
    CHECK(rank(a) + ns.cols() == a.cols());
    CHECK(rank(ns) == ns.cols());  // columns independent
    // determinism
    CHECK(nullspace(a) == ns);
  }
}

TEST_CASE("tensor index flattening round-trips") {
  std::vector<int> dims{3, 4, 2};
  for (int f = 0; f < 24; ++f) {
    auto idx = unflat_index(f, dims);
    CHECK(flat_index(idx, dims) == f);
  }
  CHECK(flat_index({1, 2, 1}, dims) == 1 * 8 + 2 * 2 + 1);
  CHECK_THROWS_AS(flat_index({3, 0, 0}, dims), std::logic_error);
}
