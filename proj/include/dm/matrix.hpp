#pragma once
// Set-indexed dense matrices over the two- and four-element fields.
//
// SquareMatrix rows and columns are indexed by one ground set; principal
// submatrices, the principal pivot transform A*X, diagonal complementation
// A+X, and the alpha-symmetry / principal-unimodularity predicates follow
// the conventions:
//   A[empty] is nonsingular (det of the 0x0 matrix is 1),
//   negation is the identity (characteristic 2).
//
// RectMatrix holds representations: labelled rows, columns indexed by a
// ground set.  standard_form row-reduces onto a basis Z so that the Z
// columns form an identity block.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dm/gf4.hpp"
#include "dm/ground.hpp"

namespace dm {

using Vec = std::vector<Gf4>;  // coordinates follow a ground set's order

Mask support(const Vec& v);

class SquareMatrix {
 public:
  SquareMatrix(Field f, GroundSet ground);

  Field field() const { return field_; }
  const GroundSet& ground() const { return ground_; }
  size_t n() const { return ground_.size(); }

  Gf4 at(size_t i, size_t j) const { return a_[i * n() + j]; }
  void set(size_t i, size_t j, Gf4 v);

  // A[X]: rows and columns restricted to X, ground set shrinks to X.
  SquareMatrix principal(Mask X) const;
  // A \ X = A[V \ X].
  SquareMatrix drop(Mask X) const { return principal(~X & ground_.full()); }

  Gf4 det() const;
  size_t rank() const;
  size_t nullity() const { return n() - rank(); }
  // Deterministic null-space basis (reduced echelon form, one vector per
  // free column in ground order).  Vectors are indexed by the full ground.
  std::vector<Vec> null_space() const;

  bool nonsingular() const { return !det().is_zero(); }
  bool principal_nonsingular(Mask X) const { return !principal(X).det().is_zero(); }

  // Principal pivot transform A*X; requires A[X] nonsingular.
  SquareMatrix ppt(Mask X) const;

  // A+X: add 1 to the diagonal entries in X.
  SquareMatrix diag_complement(Mask X) const;

  bool is_symmetric() const { return is_alpha_symmetric(Aut::Id); }
  // alpha(-A^T) = A; negation is the identity here.
  bool is_alpha_symmetric(Aut a) const;

  // Every principal minor in {0, 1}; constant true over the two-element
  // field.  Enumerates all principal submatrices otherwise.
  bool is_pu() const;

  SquareMatrix apply_aut(Aut a) const;

  Vec mul(const Vec& v) const;

  // Reinterpret over the other field; widening is free, narrowing checks
  // every entry.
  SquareMatrix as_field(Field f) const;

  friend bool operator==(const SquareMatrix& x, const SquareMatrix& y) {
    return x.field_ == y.field_ && x.ground_ == y.ground_ && x.a_ == y.a_;
  }
  friend bool operator!=(const SquareMatrix& x, const SquareMatrix& y) {
    return !(x == y);
  }

  std::string to_string() const;

 private:
  Field field_;
  GroundSet ground_;
  std::vector<Gf4> a_;
};

class RectMatrix {
 public:
  RectMatrix(Field f, std::vector<std::string> row_labels, GroundSet cols);

  Field field() const { return field_; }
  const GroundSet& cols() const { return cols_; }
  const std::vector<std::string>& row_labels() const { return row_labels_; }
  size_t rows() const { return row_labels_.size(); }
  size_t ncols() const { return cols_.size(); }

  Gf4 at(size_t i, size_t j) const { return a_[i * ncols() + j]; }
  void set(size_t i, size_t j, Gf4 v);

  size_t rank() const;
  // Basis of the kernel {v : B v = 0}, reduced echelon form, deterministic.
  std::vector<Vec> null_space() const;
  // Reduced echelon basis of the row space.
  std::vector<Vec> row_space() const;

  Vec mul(const Vec& v) const;

  // Independence of a column subset: rank of those columns equals |X|.
  bool columns_independent(Mask X) const;

  // Row-reduce so that the columns in Z form an identity block, rows
  // relabelled by Z's labels in ground order.  Requires the Z columns to
  // be independent and spanning (Z a basis of the column matroid).
  RectMatrix standard_form(Mask Z) const;

  RectMatrix apply_aut(Aut a) const;
  RectMatrix as_field(Field f) const;

  friend bool operator==(const RectMatrix& x, const RectMatrix& y) {
    return x.field_ == y.field_ && x.row_labels_ == y.row_labels_ &&
           x.cols_ == y.cols_ && x.a_ == y.a_;
  }

  std::string to_string() const;

 private:
  Field field_;
  std::vector<std::string> row_labels_;
  GroundSet cols_;
  std::vector<Gf4> a_;
};

}  // namespace dm
