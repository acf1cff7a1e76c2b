#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hopf/matrix.hpp"
#include "hopf/report.hpp"

namespace hopf {

// One summand of a comultiplication: coeff * e_left (x) e_right.
struct DeltaTerm {
  int left = 0;
  int right = 0;
  Scalar coeff;
};

// Counital coalgebra with the comultiplication stored sparsely:
// delta[i] lists the terms of Delta(e_i).  Sparse storage keeps tensor
// powers of desk-size coalgebras tractable (a dense Delta on a dim-512
// tensor cube would need 2^27 entries).
//
// coaug is an optional distinguished grouplike (dim x 1); empty (0x0) when
// the coalgebra is not coaugmented.
struct Coalgebra {
  FieldSpec field;
  int dim = 0;
  std::vector<std::string> labels;
  std::vector<std::vector<DeltaTerm>> delta;
  Matrix counit;  // 1 x dim
  Matrix coaug;   // dim x 1, or 0x0 when absent

  bool has_coaug() const { return coaug.rows() == dim && coaug.cols() == 1; }
  const std::string& label(int i) const { return labels[i]; }
};

using CoalgebraPtr = std::shared_ptr<const Coalgebra>;

// Builds a coalgebra after validating shapes and index ranges, and
// canonicalizing the sparse terms (sorted by (left,right), merged, zero
// coefficients dropped).  Labels default to e0..e{dim-1} when empty.
CoalgebraPtr make_coalgebra(const FieldSpec& field, int dim,
                            std::vector<std::string> labels,
                            std::vector<std::vector<DeltaTerm>> delta,
                            Matrix counit, Matrix coaug = Matrix());

// Conversion between the sparse form and the dense (dim^2 x dim) matrix
// whose column i is Delta(e_i) flattened with the left leg slowest.
CoalgebraPtr coalgebra_from_dense(const FieldSpec& field, int dim,
                                  std::vector<std::string> labels,
                                  const Matrix& delta_dense, Matrix counit,
                                  Matrix coaug = Matrix());
Matrix delta_dense(const Coalgebra& c);

// Delta applied to a vector (dim x 1) -> dim^2 x 1.
Matrix apply_delta(const Coalgebra& c, const Matrix& v);

// (Delta (x) id) Delta(e_i) as a list of basis triples; by coassociativity
// this is the unique iterated comultiplication of a basis vector.
struct DeltaSquaredTerm {
  int a, b, c;
  Scalar coeff;
};
std::vector<DeltaSquaredTerm> delta_squared(const Coalgebra& co, int i);

// Structural equality (same field, dimension, counit, coaugmentation and
// comultiplication terms; labels ignored).
bool same_coalgebra(const Coalgebra& a, const Coalgebra& b);

// One-dimensional coalgebra K with Delta(1) = 1 (x) 1.
CoalgebraPtr trivial_coalgebra(const FieldSpec& field);

// Plain (unbraided) tensor power C^{(x) n}; n = 0 gives K.  The comultiplication
// is factorwise with legs collated: Delta(x1 (x) x2) = (x1' (x) x2') (x) (x1'' (x) x2'').
CoalgebraPtr tensor_power_plain(const CoalgebraPtr& base, int n);

// Associative unital algebra as structure constants.
// mult is dim x dim^2 with column i*dim+j the product e_i * e_j;
// unit is dim x 1.
struct Algebra {
  FieldSpec field;
  int dim = 0;
  std::vector<std::string> labels;
  Matrix mult;
  Matrix unit;

  Matrix mult_col(int i, int j) const { return mult.col(i * dim + j); }
};

Algebra trivial_algebra(const FieldSpec& field);

// Product of two vectors (dim x 1) in an algebra.
Matrix algebra_product(const Algebra& a, const Matrix& u, const Matrix& v);

struct Bialgebra {
  CoalgebraPtr co;   // never null
  Algebra alg;       // same dim and field

  const FieldSpec& field() const { return alg.field; }
  int dim() const { return alg.dim; }
};

struct HopfAlgebra {
  CoalgebraPtr co;
  Algebra alg;
  Matrix antipode;  // dim x dim

  const FieldSpec& field() const { return alg.field; }
  int dim() const { return alg.dim; }
  Bialgebra as_bialgebra() const { return {co, alg}; }
};

using HopfPtr = std::shared_ptr<const HopfAlgebra>;
inline HopfPtr make_hopf_ptr(HopfAlgebra h) {
  return std::make_shared<const HopfAlgebra>(std::move(h));
}
bool same_hopf(const HopfAlgebra& a, const HopfAlgebra& b);

// Axiom batteries.  Every item carries a counterexample witness on failure.
CheckReport check_coalgebra(const Coalgebra& c);
CheckReport check_algebra(const Algebra& a);
CheckReport check_bialgebra(const Bialgebra& b);
CheckReport check_hopf(const HopfAlgebra& h);

// Scalar-valued linear form on a coalgebra; the domain pointer identifies
// which coalgebra (and hence which convolution monoid) it lives in.
struct Functional {
  CoalgebraPtr dom;
  Matrix coeffs;  // 1 x dom->dim

  Scalar operator()(int i) const { return coeffs.at(0, i); }
  Scalar apply(const Matrix& v) const { return (coeffs * v).at(0, 0); }
};

Functional counit_functional(const CoalgebraPtr& c);
Functional functional_from_row(const CoalgebraPtr& c, Matrix row);

// Convolution product in C* : (f * g)(x) = f(x') g(x'').
// Throws std::logic_error if the domains differ structurally.
Functional convolve(const Functional& f, const Functional& g);

// Two-sided convolution inverse, or nullopt when f is not invertible.
std::optional<Functional> convolution_inverse(const Functional& f);

// Convolution of linear maps C -> A (stored dimA x dimC):
// (f * g)(x) = m_A(f(x') (x) g(x'')).
Matrix convolve_maps(const Coalgebra& c, const Algebra& a, const Matrix& f,
                     const Matrix& g);
std::optional<Matrix> convolution_inverse_map(const Coalgebra& c,
                                              const Algebra& a,
                                              const Matrix& f);

// Mixed convolutions with one scalar-valued factor: (f * g)(x) = f(x') g(x'')
// where f is 1 x dimC and g is dimA x dimC (and symmetrically).
Matrix convolve_scalar_map(const Coalgebra& c, const Matrix& f, const Matrix& g);
Matrix convolve_map_scalar(const Coalgebra& c, const Matrix& g, const Matrix& f);

// Wedge filtration from the coaugmentation: D_0 = K*coaug,
// D_{k+1} = Delta^{-1}(D_0 (x) C + C (x) D_k), iterated to stabilization.
// connected == true iff the filtration exhausts C (the coradical is K*coaug).
// Requires a coaugmented coalgebra whose coaug is grouplike with counit 1;
// throws input_error otherwise.
struct Connectivity {
  bool connected = false;
  std::vector<int> filtration_dims;  // starts at 1
};
Connectivity is_connected(const Coalgebra& c);

// Generalized wedge filtration from the span of the columns of d0:
// dims of D_0, D_1, ... iterated to stabilization.
std::vector<int> wedge_filtration_dims(const Coalgebra& c, const Matrix& d0);

// Two-sided integral on the dual that is invariant under both adjoint
// actions, normalized to lambda(1) = 1.
//   found:     unique normalized solution, returned in lambda
//   none:      the constraint space is zero or meets lambda(1) = 1 nowhere
//   ambiguous: several normalized solutions exist (reported as an error
//              by callers that need canonicity)
enum class IntegralStatus { found, none, ambiguous };
struct IntegralResult {
  IntegralStatus status = IntegralStatus::none;
  Functional lambda;  // meaningful only when status == found
  std::string detail;
};
IntegralResult ad_invariant_integral(const HopfAlgebra& h);

// Standard basis column e_i.
Matrix basis_vector(int dim, int i, const FieldSpec& f);

}  // namespace hopf
