#pragma once

#include <array>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "grlie/degree.hpp"
#include "grlie/freelie.hpp"
#include "grlie/scalar.hpp"

namespace grlie {

/// Evaluation result: a scalar multiple of the canonical basis element of
/// the stated homogeneous component.
struct EvalResult {
  Scalar value;
  Degree degree;
};

/// Graded algebra with homogeneous components of dimension at most one:
/// the bracket of basis elements e_g, e_h is c(g, h) * e_(g+h). By
/// convention c(g, h) = 0 whenever g, h or g + h lies outside the support.
struct ThinAlgebra {
  std::string name;
  FieldSpec field;
  GradingSpec grading;
  std::function<bool(const Degree&)> in_support;
  std::function<Scalar(const Degree&, const Degree&)> c_raw;

  /// Structure coefficient with the support convention applied.
  Scalar c(const Degree& g, const Degree& h) const;
  Scalar zero() const { return Scalar::zero(field); }
  Scalar one() const { return Scalar::one(field); }
};

/// Witt algebra on Laurent polynomials: basis e_n for all n in Z,
/// [e_i, e_j] = (j - i) e_(i+j).
ThinAlgebra make_u1(const FieldSpec& field);

/// Witt subalgebra on polynomials: support n >= -1, same coefficients.
ThinAlgebra make_w1(const FieldSpec& field);

/// sl_q with its Pauli Z_q x Z_q grading: one-dimensional components
/// spanned by A^i B^j, (i, j) != (0, 0), with
/// [A^i B^j, A^r B^s] = (eps^(-rj) - eps^(-is)) A^(i+r) B^(j+s).
/// Field: cyclotomic(q); or prime p with q | p - 1; or rationals when q = 2.
ThinAlgebra make_pauli(std::int64_t q, const FieldSpec& field);

/// Dispatcher: name is "u1", "w1" or "pauli" (q required for pauli).
ThinAlgebra make_thin(const std::string& name, const FieldSpec& field, std::int64_t q = 0);

/// Left-normed fold: value starts at 1 and the degree at the first variable;
/// each step multiplies by c(acc_degree, next_degree). If any variable degree
/// is outside the support the result is (0, total).
EvalResult eval_monomial_thin(const Monomial& m, const ThinAlgebra& A);
EvalResult eval_degrees_thin(const std::vector<Degree>& ds, const ThinAlgebra& A);

/// Canonical evaluation of a polynomial in N_sigma coordinates; zero iff
/// the polynomial is a graded identity of A (components have dim <= 1 and
/// the base field is infinite at char 0 / the verdict is basis-substitution
/// exact in general).
Scalar eval_poly_thin(const MultilinearPoly& p, const ThinAlgebra& A);

/// Direct recursive evaluation of a bracket tree under the canonical basis
/// substitution; independent of the N_sigma normal form.
EvalResult eval_tree_thin(const BracketExpr& e, const ThinAlgebra& A);

bool is_identity(const MultilinearPoly& p, const ThinAlgebra& A);

/// Finite-dimensional graded algebra given by an explicit bracket table
/// over a labeled basis.
struct StructureAlgebra {
  std::string name;
  FieldSpec field;
  GradingSpec grading;
  std::vector<std::string> labels;
  std::vector<Degree> degrees;
  /// table[i][j] = coordinates of [b_i, b_j] over the basis.
  std::vector<std::vector<std::map<int, Scalar>>> table;

  int dim() const { return static_cast<int>(labels.size()); }
  /// Basis indices spanning the homogeneous component of degree d.
  std::vector<int> component(const Degree& d) const;
  std::map<int, Scalar> bracket(const std::map<int, Scalar>& x,
                                const std::map<int, Scalar>& y) const;
  /// Validates antisymmetry, the Jacobi identity and grading compatibility
  /// over all basis elements; throws std::logic_error on violation.
  void check_structure() const;
};

/// A failing substitution: basis-element labels per variable and the
/// nonzero value it produced.
struct IdentityWitness {
  std::vector<std::string> assignment;
  std::string value;
};

bool is_identity(const MultilinearPoly& p, const StructureAlgebra& A);
std::optional<IdentityWitness> find_counterexample(const MultilinearPoly& p,
                                                   const StructureAlgebra& A);

/// lambda with [x1,x3,x2] - lambda*[x1,x2,x3] an identity at degrees
/// (g, h, k): eval([x1,x3,x2]) / eval([x1,x2,x3]); nullopt when the
/// reference monomial [x1,x2,x3] evaluates to zero.
std::optional<Scalar> derive_swap_lambda(const Degree& g, const Degree& h, const Degree& k,
                                         const ThinAlgebra& A);

/// lambda with [x4,x1,x2,x3] - lambda*[x4,x3,x2,x1] an identity at the
/// given degrees; nullopt when either monomial evaluates to zero.
std::optional<Scalar> derive_pauli_lambda(const std::array<Degree, 4>& g, const ThinAlgebra& A);

/// The same lambda derived from explicit matrix products in a structure
/// algebra (components of dimension one); cross-check for the thin route.
std::optional<Scalar> derive_pauli_lambda_structure(const std::array<Degree, 4>& g,
                                                    const StructureAlgebra& A);

/// sl_q as explicit q x q matrices: A = diag(eps^(q-1), ..., eps, 1), B the
/// cyclic shift. The bracket table is computed from matrix products and
/// expressed over the basis A^i B^j, (i, j) != (0, 0).
StructureAlgebra build_pauli_matrix_oracle(std::int64_t q, const FieldSpec& field);

}  // namespace grlie
