#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "grlie/degree.hpp"
#include "grlie/scalar.hpp"

namespace grlie {

/// Graded free-algebra variable x_index with a fixed homogeneous degree.
struct Variable {
  int index = 0;
  Degree degree;
  bool operator==(const Variable&) const = default;
};

/// Left-normed monomial: the ordered variable list of [v1, v2, ..., vn].
using Monomial = std::vector<Variable>;

/// Formal bracket expression over distinct variables. A node with k >= 2
/// children denotes the left-normed bracket [...[[c1, c2], c3], ..., ck].
class BracketExpr {
public:
  static BracketExpr var(Variable v);
  static BracketExpr bracket(std::vector<BracketExpr> children);
  /// Left-normed bracket of the given variables, [v1, ..., vn].
  static BracketExpr left_normed(const Monomial& vars);

  bool is_var() const { return kids_.empty(); }
  const Variable& variable() const;
  const std::vector<BracketExpr>& children() const { return kids_; }

  int leaf_count() const;
  void collect_variables(std::vector<Variable>& out) const;
  std::string to_string() const;

private:
  BracketExpr() = default;
  Variable var_;
  std::vector<BracketExpr> kids_;
};

/// The ordered degree sequence of a left-normed monomial.
std::vector<Degree> degree_sequence(const Monomial& m);

/// Associative word as a variable-index sequence, with signed multiplicity.
using Word = std::vector<int>;
struct SignedWord {
  int mult = 0;
  Word word;
};

/// Expansion of a bracket expression into the free associative algebra.
/// Duplicate words are merged with summed multiplicity; zero entries drop.
/// A left-normed monomial of length n expands to exactly 2^(n-1) words.
std::vector<SignedWord> assoc_expand(const BracketExpr& e);

/// One formal term: coefficient times bracket expression.
struct Term {
  Scalar coeff;
  BracketExpr expr;
};

/// Multilinear element of the free graded Lie algebra in the left-normed
/// basis N_sigma = [x_pivot, x_sigma(1), ..., x_sigma(n-1)] where pivot is
/// the variable of largest index. Coordinates are keyed by the explicit
/// (n-1)-tuple of variable indices after the pivot; the key order of the
/// map (lexicographic) is the canonical basis enumeration.
class MultilinearPoly {
public:
  MultilinearPoly(std::vector<Variable> vars, FieldSpec field);

  const std::vector<Variable>& vars() const { return vars_; }  // ascending index
  int n() const { return static_cast<int>(vars_.size()); }
  int pivot_index() const { return vars_.back().index; }
  const FieldSpec& field() const { return field_; }
  const std::map<Word, Scalar>& coords() const { return coords_; }

  const Degree& var_degree(int index) const;
  Degree total_degree() const;
  bool is_zero() const { return coords_.empty(); }

  void add_coord(const Word& key, const Scalar& c);
  MultilinearPoly& operator+=(const MultilinearPoly& o);
  MultilinearPoly scaled(const Scalar& c) const;

  /// All (n-1)! basis keys in lexicographic order.
  std::vector<Word> basis_keys() const;
  /// The polynomial as explicit left-normed terms (one per nonzero coord).
  std::vector<Term> terms() const;
  /// The left-normed monomial for one basis key.
  Monomial monomial_for(const Word& key) const;

  std::string to_string() const;

private:
  std::vector<Variable> vars_;
  FieldSpec field_;
  std::map<Word, Scalar> coords_;
};

/// Canonical form of a sum of bracket terms as coordinates in the N_sigma
/// basis, via associative expansion and pivot-initial word extraction.
/// All terms must cover the same variable set; variable indices are distinct
/// within each term (multilinearity).
MultilinearPoly normalize(const std::vector<Term>& terms, const FieldSpec& field);

/// Generator families for graded identity systems.
enum class GenFamily {
  comm_pair,       ///< [x1^r, x2^s], degree pair in Z
  triple,          ///< alpha*[x1^a,x2^b,x3^c] - beta*[x1^a,x3^c,x2^b]
  support_zero,    ///< x1^g with g outside the support
  commuting_pair,  ///< [x1^g, x2^h] with [L_g, L_h] = 0
  swap_lambda,     ///< [x1^g,x3^k,x2^h] - lambda*[x1^g,x2^h,x3^k]
  pauli_deg4,      ///< [x4,x1,x2,x3] - lambda*[x4,x3,x2,x1]
};

std::string family_name(GenFamily f);

struct GeneratorSpec {
  GenFamily family;
  std::vector<Degree> degrees;
  std::optional<Scalar> lambda;
};

/// A built generator: its polynomial plus instantiation metadata. A triple
/// instance with alpha = beta = 0 in the field is flagged degenerate (its
/// polynomial is identically zero), never silently dropped.
struct GeneratorInstance {
  MultilinearPoly poly;
  bool degenerate = false;
  std::string name;
};

GeneratorInstance make_generator(const GeneratorSpec& spec, const FieldSpec& field);

/// Coefficients of the triple family, computed in the field:
/// alpha = (c-a)(b-c-a), beta = (b-a)(c-b-a).
std::pair<Scalar, Scalar> triple_coefficients(std::int64_t a, std::int64_t b, std::int64_t c,
                                              const FieldSpec& field);

}  // namespace grlie
