#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace grlie {

/// Grading group descriptor: one entry per component, 0 = free (Z),
/// m > 0 = cyclic of order m. The Z-grading is {0}; the Pauli grading
/// of sl_q is {q, q}.
struct GradingSpec {
  std::vector<std::int64_t> moduli;

  static GradingSpec z() { return {{0}}; }
  static GradingSpec zq2(std::int64_t q) { return {{q, q}}; }

  std::size_t rank() const { return moduli.size(); }
  bool operator==(const GradingSpec&) const = default;
  std::string to_string() const;
};

/// Element of a grading group. Components with a modulus are kept reduced
/// to [0, m); free components are arbitrary integers. Mixed-grading
/// arithmetic is an error, never a silent coercion.
class Degree {
public:
  Degree() = default;
  Degree(std::vector<std::int64_t> comps, GradingSpec spec);

  /// Degree n in the Z-grading.
  static Degree z(std::int64_t n);
  /// Degree (i, j) in the Z_q x Z_q grading, reduced mod q.
  static Degree zq(std::int64_t i, std::int64_t j, std::int64_t q);

  const std::vector<std::int64_t>& comps() const { return comps_; }
  const GradingSpec& spec() const { return spec_; }
  bool is_zero() const;

  /// The integer value of a rank-1 free degree; throws on any other grading.
  std::int64_t z_value() const;

  Degree operator+(const Degree& o) const;
  Degree operator-() const;
  bool operator==(const Degree& o) const = default;
  bool operator<(const Degree& o) const;

  std::string to_string() const;

private:
  std::vector<std::int64_t> comps_;
  GradingSpec spec_;
};

/// Sum of a list of degrees (all over the same grading).
Degree degree_add(const std::vector<Degree>& ds);

/// Residue in [0, p) of a rank-1 free degree.
std::int64_t degree_residue(const Degree& d, std::int64_t p);

}  // namespace grlie
