#pragma once
// Consequence engine for multilinear graded identities.
//
// Everything happens inside one multilinear component P_n^g: the variables
// x1..xn carry fixed degrees and the space has the left-normed N_sigma basis
// of dimension (n-1)!. Two subspaces are computed exactly and compared:
//
//   identity_kernel   all elements evaluating to zero on a thin algebra,
//                     the kernel of a single linear functional;
//   consequence_span  everything obtainable from a set of generator
//                     identities by substituting basis monomials for their
//                     variables and bracketing with the remaining variables
//                     in left-normed form.
//
// The basis theorems assert the two coincide. verify_tuple checks both
// inclusions for one degree tuple; sweep runs that over a grid of tuples.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "grlie/algebras.hpp"
#include "grlie/freelie.hpp"
#include "grlie/rowspace.hpp"
#include "grlie/tuples.hpp"

namespace grlie {

// Hard ceiling for exact computations in P_n^g; ambient dim (n-1)! = 120.
inline constexpr int kMaxTupleLength = 6;
// Default bound; n = 6 must be requested explicitly.
inline constexpr int kDefaultTupleLength = 5;

/// Subspace of P_n^g in N_sigma coordinates, stored as a canonical RREF
/// row space. Vectors are indexed by the lexicographic basis key order.
class Subspace {
 public:
  Subspace(std::vector<Degree> degrees, FieldSpec field);

  const std::vector<Variable>& vars() const { return vars_; }
  const FieldSpec& field() const { return field_; }
  const std::vector<Word>& keys() const { return keys_; }
  const RowSpace& rows() const { return rows_; }

  std::size_t ambient_dim() const { return keys_.size(); }
  std::size_t dim() const { return rows_.rank(); }

  /// Coordinate vector of p over the basis keys; p must live in the same
  /// ambient space (same variables, degrees and field).
  std::vector<Scalar> coords_of(const MultilinearPoly& p) const;
  bool contains(const MultilinearPoly& p) const;
  bool contains(const std::vector<Scalar>& coords) const { return rows_.contains(coords); }
  /// Returns true if p enlarged the subspace.
  bool insert(const MultilinearPoly& p);
  bool insert_coords(std::vector<Scalar> coords) { return rows_.insert(std::move(coords)); }

  bool operator==(const Subspace& o) const;
  bool operator!=(const Subspace& o) const { return !(*this == o); }

 private:
  std::vector<Variable> vars_;
  FieldSpec field_;
  std::vector<Word> keys_;
  RowSpace rows_;
};

/// Evaluations of the N_sigma basis monomials of P_n^g on A, in basis order.
std::vector<Scalar> basis_values(const std::vector<Degree>& g, const ThinAlgebra& A);

/// The identities of A inside P_n^g: kernel of the functional sending a
/// coordinate vector to its evaluation. Dimension (n-1)! for a bad tuple,
/// (n-1)! - 1 for a good one.
Subspace identity_kernel(const std::vector<Degree>& g, const ThinAlgebra& A,
                         int max_n = kDefaultTupleLength);

/// Which generator families feed the consequence span. Family instances are
/// parameterized by block degree sums; fixed generators are concrete graded
/// polynomials and instantiate only where block degrees match theirs exactly.
struct GeneratorSet {
  bool comm_pair = false;     ///< [x^r, x^s]; side condition r = s (char 0) or r == s mod p
  bool triple = false;        ///< alpha [x^a,x^b,x^c] - beta [x^a,x^c,x^b], any (a,b,c)
  bool support_zero = false;  ///< x^c for every c outside supp(A)
  std::vector<MultilinearPoly> fixed;

  std::string describe() const;
};

/// Side notes produced while building a span (boundary generator usage,
/// instance counts). Purely informational.
struct SpanBuildInfo {
  std::size_t rows_generated = 0;
  std::vector<std::string> notes;
};

/// Span of all normalize([f(m_1..m_k), x_j1, ..., x_jt]) where f runs over
/// the generator instances admitted by gens, S subset {1..n} is split into an
/// ordered partition of k nonempty blocks, each m_i runs over the left-normed
/// basis monomials of its block, and the variables outside S are appended in
/// every order.
Subspace consequence_span(const GeneratorSet& gens, const std::vector<Degree>& g,
                          const ThinAlgebra& A, SpanBuildInfo* info = nullptr,
                          int max_n = kDefaultTupleLength);

/// Membership of p in S; throws on ambient mismatch.
bool is_member(const MultilinearPoly& p, const Subspace& S);

/// Per-tuple comparison of kernel and span.
struct TupleVerdict {
  std::vector<Degree> tuple;
  TupleClass classification;
  std::size_t dim_ambient = 0;
  std::size_t dim_kernel = 0;
  std::size_t dim_span = 0;
  bool span_subset_kernel = false;
  bool kernel_subset_span = false;
  /// Good tuples only: kernel has codimension 1 and all non-identity basis
  /// monomials are pairwise equivalent modulo the span.
  std::optional<bool> good_structure;
  std::vector<std::string> notes;
  std::optional<std::string> counterexample;

  bool verified() const {
    return span_subset_kernel && kernel_subset_span && good_structure.value_or(true);
  }
  std::string to_string() const;
};

TupleVerdict verify_tuple(const std::vector<Degree>& g, const ThinAlgebra& A,
                          const GeneratorSet& gens, int max_n = kDefaultTupleLength);

/// Grid sweep over Z-degree tuples, one representative per multiset
/// (classification and both subspaces are permutation invariant).
struct SweepConfig {
  int n_min = 1;
  int n_max = 4;
  std::int64_t entry_min = -2;
  std::int64_t entry_max = 2;
  std::int64_t characteristic = 0;  ///< 0 or an odd prime
  std::string algebra = "u1";       ///< "u1" or "w1"
  GeneratorSet gens;
  int threads = 1;
  bool allow_n6 = false;  ///< ambient dim 120; explicit opt-in
};

struct SweepResult {
  std::vector<TupleVerdict> verdicts;  ///< canonical order: by n, then lex tuple
  std::size_t tuples_checked = 0;
  std::size_t failures = 0;
  std::vector<std::string> counterexamples;
  std::vector<std::string> notes;  ///< deduplicated

  bool all_verified() const { return failures == 0; }
};

SweepResult sweep(const SweepConfig& cfg);

}  // namespace grlie
