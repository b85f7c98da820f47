#pragma once
// Exact row spaces in incremental reduced row echelon form.
//
// A RowSpace stores a basis of dense coordinate vectors over one field.
// Insertion reduces the new vector against the basis, normalizes the leading
// entry to 1 and back-substitutes, so the stored rows are always the canonical
// RREF of everything inserted so far: pivot columns strictly increasing, pivot
// entries 1, pivot columns zero in all other rows. Two spaces over the same
// field and width are equal iff their row lists compare equal entrywise.

#include <cstddef>
#include <vector>

#include "grlie/scalar.hpp"

namespace grlie {

class RowSpace {
 public:
  RowSpace(FieldSpec field, std::size_t width);

  const FieldSpec& field() const { return field_; }
  std::size_t width() const { return width_; }
  std::size_t rank() const { return rows_.size(); }
  const std::vector<std::vector<Scalar>>& rows() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  // Reduces v against the basis; the result is zero iff v is a member.
  std::vector<Scalar> reduce(std::vector<Scalar> v) const;
  bool contains(const std::vector<Scalar>& v) const;
  // Returns true if v enlarged the space.
  bool insert(std::vector<Scalar> v);

  bool operator==(const RowSpace& other) const;
  bool operator!=(const RowSpace& other) const { return !(*this == other); }

 private:
  FieldSpec field_;
  std::size_t width_;
  std::vector<std::vector<Scalar>> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace grlie
