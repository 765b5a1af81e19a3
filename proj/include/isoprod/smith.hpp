#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

namespace isoprod {

using Integer = boost::multiprecision::cpp_int;

/// Dense exact-arithmetic integer matrix.
class IntegerMatrix {
 public:
  IntegerMatrix() = default;
  IntegerMatrix(int rows, int cols) : rows_(rows), cols_(cols),
      data_(static_cast<size_t>(rows) * cols) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Integer& at(int r, int c) { return data_[static_cast<size_t>(r) * cols_ + c]; }
  const Integer& at(int r, int c) const { return data_[static_cast<size_t>(r) * cols_ + c]; }

  static IntegerMatrix identity(int n);
  IntegerMatrix operator*(const IntegerMatrix& o) const;
  bool operator==(const IntegerMatrix&) const = default;

  /// Drop rows that are zero or exact duplicates of an earlier row.
  IntegerMatrix dedup_rows() const;

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<Integer> data_;
};

struct SmithResult {
  IntegerMatrix d;  // diagonal, d1 | d2 | ..., entries >= 0
  IntegerMatrix u;  // row transform (empty unless requested): u * m * v = d
  IntegerMatrix v;  // column transform, always produced
  std::vector<Integer> diagonal;  // the di, length min(rows, cols)
};

/// Smith normal form by smallest-pivot gcd reduction, exact arithmetic.
/// u and v are unimodular; set want_u = false to skip the (large) row
/// transform when only the cokernel is needed.
SmithResult smith_normal_form(const IntegerMatrix& m, bool want_u = true);

Integer determinant(const IntegerMatrix& m);  // square matrices only

/// Structure of the cokernel Z^cols / rowspace(M), in canonical coordinates.
struct AbelianInvariants {
  int rank = 0;                  // free rank
  std::vector<Integer> torsion;  // invariant factors d1 | d2 | ..., each >= 2

  // Coordinate data: canonical(w) = select rows of v^T w, free part first,
  // then torsion residues mod the invariant factors.
  IntegerMatrix vt;             // transpose of the SNF column transform
  std::vector<int> free_cols;   // rows of vt giving free coordinates
  std::vector<int> torsion_cols;  // rows of vt giving torsion coordinates

  /// Canonical coordinates of an exponent vector over the generators.
  std::vector<Integer> canonical(const std::vector<Integer>& w) const;
  bool is_trivial_class(const std::vector<Integer>& w) const;
};

/// Cokernel of the relation matrix (rows = relations, cols = generators).
AbelianInvariants abelian_invariants(const IntegerMatrix& relations);

}  // namespace isoprod
