#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "grlie/algebras.hpp"
#include "grlie/degree.hpp"

namespace grlie {

/// Matched bad-tuple certificate. Over Z the base g is an actual entry and
/// every compact entry is g itself or a negative multiple -lambda*g; over
/// F_p entries are residues and lambda solves -lambda*g = entry. The count
/// condition is |entries equal to g| >= sum(lambdas) + 2 whenever any
/// negative multiple occurs.
struct BadPattern {
  enum class Kind { zero_residues, all_equal, negatives };
  Kind kind = Kind::zero_residues;
  std::int64_t base = 0;             // unused for zero_residues
  std::vector<std::int64_t> lambdas; // sorted, negatives only
  std::int64_t count_base = 0;

  /// Re-validates the certificate against a compact entry multiset.
  bool matches(const std::vector<std::int64_t>& compact_entries, std::int64_t p) const;
  std::string to_string() const;
};

/// Classification verdict. good = the degree tuple admits a non-identity
/// monomial (P_n^g is not contained in the identities); bad = every element
/// of P_n^g is an identity.
struct TupleClass {
  bool good = false;
  /// 0-based positions into the tuple giving a nonzero left-normed order.
  std::optional<std::vector<int>> witness;
  std::optional<BadPattern> pattern;
  /// Number of left-normed orders the exhaustive route rejected (oracle only).
  std::optional<std::int64_t> orders_rejected;
  std::string to_string() const;
};

/// Compact multiset: drops zero entries (char 0) or reduces to nonzero
/// residues in [1, p) (char p); sorted ascending.
std::vector<std::int64_t> compact(const std::vector<std::int64_t>& tuple, std::int64_t p);

/// Closed-form classification of a Z-degree tuple for the full Witt algebra,
/// from the compact-multiset pattern characterization. p = 0 means char 0.
/// Good verdicts carry a witness order found on the algebra itself.
TupleClass classify(const std::vector<std::int64_t>& tuple, std::int64_t p);

/// Brute-force classification on a thin algebra: good iff some left-normed
/// order of the variables evaluates to nonzero (those orders span P_n^g).
/// Bounded at n <= max_n (default 7).
TupleClass oracle_classify(const std::vector<Degree>& tuple, const ThinAlgebra& A, int max_n = 7);

/// Lexicographically first variable order (0-based positions) whose
/// left-normed monomial evaluates to nonzero; nullopt if all vanish.
std::optional<std::vector<int>> standard_order(const std::vector<Degree>& tuple,
                                               const ThinAlgebra& A);

/// Z-tuple to Degree list.
std::vector<Degree> z_degrees(const std::vector<std::int64_t>& tuple);

}  // namespace grlie
