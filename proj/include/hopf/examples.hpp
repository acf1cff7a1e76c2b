#pragma once

#include <cstdint>

#include "hopf/coalgebra.hpp"
#include "hopf/prebialgebra.hpp"
#include "hopf/yd.hpp"

namespace hopf {

// Group algebra of the cyclic group of order N; basis 1, g, ..., g^{N-1},
// grouplike comultiplication, antipode g -> g^{-1}.
HopfAlgebra cyclic_group_algebra(const FieldSpec& field, int n);

// Group algebra of the symmetric group on three letters.
HopfAlgebra symmetric_group_algebra_s3(const FieldSpec& field);

// Hopf algebra generated by a grouplike g of order N and a (1,g)-skew
// primitive x (Delta x = x (x) 1 + g (x) x) with relations
//   g^N = 1,  x g = q g x,  x^n = mu (1 - g^n),
// on the monomial basis g^i x^e (0 <= i < N, 0 <= e < n).  The structure
// tensors are computed from the relations; callers should machine-verify
// the result with check_hopf (parameter combinations that do not satisfy
// the axioms will fail there, not here).
HopfAlgebra quantum_line_hopf(const FieldSpec& field, int n_g, int n_x,
                              const Scalar& q, const Scalar& mu);

// Four-dimensional Hopf algebra over Q: quantum_line_hopf with
// N = n = 2, q = -1, mu = 0.
HopfAlgebra sweedler_hopf();

// Taft algebra of dimension n^2 over F_p with q the smallest element of
// multiplicative order exactly n.  p must satisfy p = 1 (mod n); pass p = 0
// to pick the smallest such prime.
HopfAlgebra taft_hopf(int n, std::uint64_t p);

// Dimension-8 quotient over F_5: N = 4, n = 2, q = -1, mu = 1, where the
// skew primitive squares to mu (1 - g^2) instead of 0.
HopfAlgebra lifted_quantum_line_hopf();

std::uint64_t smallest_prime_1_mod(int n);
Scalar smallest_element_of_order(const FieldSpec& field, int n);

// The braided line K[x]/(x^n) as a coalgebra in the Yetter-Drinfeld category
// over a cyclic group algebra H = K C_N: basis 1, x, ..., x^{n-1} with
//   g^k . x^e = q^{ke} x^e,   rho(x^e) = g^e (x) x^e,
// x primitive, and Delta extended multiplicatively with respect to the
// braided product on R (x) R.  mult/unit are the truncated polynomial
// algebra structure (x^a x^b = x^{a+b}, zero once the exponent reaches n).
struct BraidedLine {
  YDCoalgebra R;
  Matrix mult;  // n x n^2
  Matrix unit;  // n x 1
};
BraidedLine braided_line(const HopfPtr& h_cyclic, int n, const Scalar& q);

// The datum (A = H, H, pi = sigma = id): its coinvariant part is the base
// field with trivial structure.
SplittingDatum trivial_splitting_datum(const HopfPtr& h);

// sweedler_hopf() split by K C_2 along pi(g^i x^e) = eps-of-x part,
// sigma(g^i) = g^i.  The coinvariant part is the braided line with n = 2,
// q = -1, and the induced measuring map is trivial.
SplittingDatum sweedler_splitting_datum();

// lifted_quantum_line_hopf() split by F_5 C_4 the same way.  Because the
// skew primitive squares to 1 - g^2 rather than 0, the induced measuring
// map is nontrivial: xi(x (x) x) = 1 - g^2.
SplittingDatum lifted_quantum_line_splitting_datum();

}  // namespace hopf
