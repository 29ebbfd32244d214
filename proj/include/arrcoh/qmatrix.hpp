#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "arrcoh/rational.hpp"

namespace arrcoh {

/// Sparse rational vector: entries sorted by index, no stored zeros.
class QVector {
 public:
  using Entry = std::pair<std::size_t, Rational>;

  QVector() = default;
  explicit QVector(std::vector<Entry> entries);  // any order; duplicates summed
  static QVector unit(std::size_t index, Rational value = 1);
  static QVector from_dense(const std::vector<Rational>& dense);

  const std::vector<Entry>& entries() const { return entries_; }
  bool is_zero() const { return entries_.empty(); }
  std::size_t nnz() const { return entries_.size(); }
  Rational get(std::size_t index) const;
  const Entry& leading() const { return entries_.front(); }

  /// this += factor * other
  void add_scaled(const QVector& other, const Rational& factor);
  void scale(const Rational& factor);
  std::vector<Rational> to_dense(std::size_t size) const;

  friend bool operator==(const QVector& a, const QVector& b) { return a.entries_ == b.entries_; }

 private:
  std::vector<Entry> entries_;
};

/// Sparse rational matrix stored row-major.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols);
  static QMatrix identity(std::size_t n);
  static QMatrix from_dense(const std::vector<std::vector<Rational>>& rows);
  /// Builds a rows x cols matrix whose j-th column is columns[j].
  static QMatrix from_columns(std::size_t rows, const std::vector<QVector>& columns);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational at(std::size_t r, std::size_t c) const { return data_[r].get(c); }
  void set(std::size_t r, std::size_t c, const Rational& v);
  const QVector& row(std::size_t r) const { return data_[r]; }
  void set_row(std::size_t r, QVector v);
  void append_row(QVector v);

  QMatrix transpose() const;
  QVector multiply(const QVector& x) const;
  QMatrix multiply(const QMatrix& other) const;
  std::vector<std::vector<Rational>> to_dense() const;

  friend bool operator==(const QMatrix& a, const QMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<QVector> data_;
};

struct RrefResult {
  QMatrix reduced;
  std::vector<std::size_t> pivots;  // pivot column of reduced row i
  std::size_t rank = 0;
};

/// Reduced row-echelon form. Among candidate rows for a pivot the shortest
/// one wins, ties broken by the smallest numerator magnitude, then row index.
RrefResult rref(const QMatrix& m);
std::size_t rank(const QMatrix& m);
/// Rows span the null space {x : m x = 0}.
QMatrix kernel_basis(const QMatrix& m);
/// Some x with m x = b, or nullopt when the system is inconsistent.
std::optional<QVector> solve(const QMatrix& m, const QVector& b);
/// Canonical (RREF, zero rows dropped) basis of rowspace(m1) + rowspace(m2).
QMatrix rowspace_sum(const QMatrix& m1, const QMatrix& m2);

/// Incrementally built echelon basis. Every stored row has a distinct pivot
/// equal to its leading index. Rows may carry a tag used for coordinate
/// bookkeeping by callers.
class EchelonBasis {
 public:
  struct Reduction {
    QVector remainder;
    std::map<std::size_t, Rational> used;  // tag -> multiple of that row subtracted
  };

  /// Reduces v and, if the remainder is nonzero, stores it under `tag`.
  /// Returns true when the rank grew.
  bool insert(QVector v, std::size_t tag = 0);
  Reduction reduce(QVector v) const;
  bool contains(const QVector& v) const { return reduce(v).remainder.is_zero(); }
  std::size_t rank() const { return rows_.size(); }
  std::vector<QVector> rows() const;

 private:
  struct Row {
    QVector vec;
    std::size_t tag;
  };
  std::map<std::size_t, Row> rows_;  // pivot -> row
};

}  // namespace arrcoh
