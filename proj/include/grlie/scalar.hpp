#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace grlie {

/// Raised when scalars from different fields meet in one operation.
struct FieldMismatchError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

bool is_prime(std::int64_t n);

/// Coefficient field selector: Q, F_p with p an odd prime, or the cyclotomic
/// field Q(eps) with eps a primitive q-th root of unity, q prime. Cyclotomic
/// elements live on the power basis 1, eps, ..., eps^(q-2) with the relation
/// eps^(q-1) = -(1 + eps + ... + eps^(q-2)).
class FieldSpec {
public:
  enum class Kind { rational, prime, cyclotomic };

  FieldSpec() = default;  // rational; containers and aggregates only
  static FieldSpec rational();
  static FieldSpec prime(std::int64_t p);
  static FieldSpec cyclotomic(std::int64_t q);

  Kind kind() const { return kind_; }
  /// 0 for Q and Q(eps), p for F_p.
  std::int64_t characteristic() const;
  /// Root-of-unity order q for cyclotomic fields, 0 otherwise.
  std::int64_t cyclotomic_order() const;

  bool operator==(const FieldSpec&) const = default;
  std::string to_string() const;

private:
  FieldSpec(Kind k, std::int64_t n) : kind_(k), n_(n) {}
  Kind kind_ = Kind::rational;
  std::int64_t n_ = 0;
};

/// Exact field element tagged with its field. All arithmetic is exact and
/// canonical: fractions are reduced, residues lie in [0, p), cyclotomic
/// coordinates are reduced mod the q-th cyclotomic polynomial.
class Scalar {
public:
  /// Default-constructs rational 0; containers only, not a field value.
  Scalar() : field_(FieldSpec::rational()), rep_(mpq_class(0)) {}

  static Scalar zero(const FieldSpec& f);
  static Scalar one(const FieldSpec& f);
  static Scalar from_int(const FieldSpec& f, std::int64_t n);
  /// Embeds an exact fraction; in F_p the denominator must be invertible.
  static Scalar from_fraction(const FieldSpec& f, const mpq_class& q);
  /// The root of unity eps of a cyclotomic field.
  static Scalar cyclotomic_eps(const FieldSpec& f);
  /// Element with the given coordinates over 1, eps, ..., eps^(q-2).
  static Scalar from_cyclotomic_coords(const FieldSpec& f, std::vector<mpq_class> coords);

  const FieldSpec& field() const { return field_; }

  bool is_zero() const;
  bool is_one() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);

  /// Multiplicative inverse; throws std::domain_error on zero.
  Scalar inv() const;
  /// Integer power, negative exponents via inv().
  Scalar pow(std::int64_t e) const;

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  /// Exact human-readable form: "3/2", "4", "-1-e", "2+e^2".
  std::string to_string() const;

  /// Rational value; throws unless the field is Q.
  const mpq_class& rational_value() const;
  /// Residue in [0, p); throws unless the field is F_p.
  std::int64_t residue() const;
  /// Cyclotomic coordinates over 1, eps, ..., eps^(q-2); throws otherwise.
  const std::vector<mpq_class>& cyclotomic_coords() const;

private:
  struct Cyc {
    std::vector<mpq_class> c;
    bool operator==(const Cyc&) const = default;
  };
  Scalar(FieldSpec f, std::variant<mpq_class, std::int64_t, Cyc> rep)
      : field_(f), rep_(std::move(rep)) {}
  void check_same_field(const Scalar& o) const;

  FieldSpec field_;
  std::variant<mpq_class, std::int64_t, Cyc> rep_;
};

/// Canonical cyclotomic element from arbitrary integer powers of eps:
/// exps maps exponent -> rational coefficient; exponents may be negative.
Scalar cyclotomic_canonical(const FieldSpec& f, const std::map<std::int64_t, mpq_class>& exps);

/// A primitive q-th root of unity in F_p; requires q | p - 1.
std::int64_t find_root_of_unity(std::int64_t p, std::int64_t q);

/// Scalar arithmetic entry point used by generic code: the named operation
/// ("add", "sub", "mul", "div", "neg", "inv") applied exactly.
Scalar scalar_arith(const std::string& op, const Scalar& a, const Scalar& b);

}  // namespace grlie
