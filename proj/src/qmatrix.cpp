#include "arrcoh/qmatrix.hpp"

#include <algorithm>
#include <cassert>
#include <tuple>

namespace arrcoh {

// ---------------------------------------------------------------- QVector

QVector::QVector(std::vector<Entry> entries) {
  std::sort(entries.begin(), entries.end(),
            [](const Entry& a, const Entry& b) { return a.first < b.first; });
  for (auto& e : entries) {
    if (!entries_.empty() && entries_.back().first == e.first) {
      entries_.back().second += e.second;
      if (entries_.back().second == 0) entries_.pop_back();
    } else if (e.second != 0) {
      entries_.push_back(std::move(e));
    }
  }
}

QVector QVector::unit(std::size_t index, Rational value) {
  QVector v;
  if (value != 0) v.entries_.emplace_back(index, std::move(value));
  return v;
}

QVector QVector::from_dense(const std::vector<Rational>& dense) {
  QVector v;
  for (std::size_t i = 0; i < dense.size(); ++i)
    if (dense[i] != 0) v.entries_.emplace_back(i, dense[i]);
  return v;
}

Rational QVector::get(std::size_t index) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), index,
                             [](const Entry& e, std::size_t i) { return e.first < i; });
  if (it != entries_.end() && it->first == index) return it->second;
  return 0;
}

void QVector::add_scaled(const QVector& other, const Rational& factor) {
  if (factor == 0 || other.entries_.empty()) return;
  std::vector<Entry> out;
  out.reserve(entries_.size() + other.entries_.size());
  auto a = entries_.begin();
  auto b = other.entries_.begin();
  while (a != entries_.end() || b != other.entries_.end()) {
    if (b == other.entries_.end() || (a != entries_.end() && a->first < b->first)) {
      out.push_back(std::move(*a++));
    } else if (a == entries_.end() || b->first < a->first) {
      out.emplace_back(b->first, factor * b->second);
      ++b;
    } else {
      Rational v = a->second + factor * b->second;
      if (v != 0) out.emplace_back(a->first, std::move(v));
      ++a;
      ++b;
    }
  }
  entries_ = std::move(out);
}

void QVector::scale(const Rational& factor) {
  if (factor == 0) {
    entries_.clear();
    return;
  }
  for (auto& e : entries_) e.second *= factor;
}

std::vector<Rational> QVector::to_dense(std::size_t size) const {
  std::vector<Rational> out(size, Rational(0));
  for (const auto& [i, v] : entries_) out.at(i) = v;
  return out;
}

// ---------------------------------------------------------------- QMatrix

QMatrix::QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows) {}

QMatrix QMatrix::identity(std::size_t n) {
  QMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.data_[i] = QVector::unit(i);
  return m;
}

QMatrix QMatrix::from_dense(const std::vector<std::vector<Rational>>& rows) {
  QMatrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols_) throw ValidationError("ragged dense matrix");
    m.data_[r] = QVector::from_dense(rows[r]);
  }
  return m;
}

QMatrix QMatrix::from_columns(std::size_t rows, const std::vector<QVector>& columns) {
  std::vector<std::vector<QVector::Entry>> buf(rows);
  for (std::size_t c = 0; c < columns.size(); ++c)
    for (const auto& [r, v] : columns[c].entries()) {
      if (r >= rows) throw ValidationError("column entry out of range");
      buf[r].emplace_back(c, v);
    }
  QMatrix m(rows, columns.size());
  for (std::size_t r = 0; r < rows; ++r) m.data_[r] = QVector(std::move(buf[r]));
  return m;
}

void QMatrix::set(std::size_t r, std::size_t c, const Rational& v) {
  if (r >= rows_ || c >= cols_) throw ValidationError("matrix index out of range");
  QVector delta = QVector::unit(c, v - data_[r].get(c));
  data_[r].add_scaled(delta, 1);
}

void QMatrix::set_row(std::size_t r, QVector v) {
  if (!v.is_zero() && v.entries().back().first >= cols_) throw ValidationError("row entry out of range");
  data_.at(r) = std::move(v);
}

void QMatrix::append_row(QVector v) {
  if (!v.is_zero() && v.entries().back().first >= cols_) throw ValidationError("row entry out of range");
  data_.push_back(std::move(v));
  ++rows_;
}

QMatrix QMatrix::transpose() const { return from_columns(cols_, data_); }

QVector QMatrix::multiply(const QVector& x) const {
  if (!x.is_zero() && x.entries().back().first >= cols_) throw ValidationError("dimension mismatch in multiply");
  std::vector<QVector::Entry> out;
  for (std::size_t r = 0; r < rows_; ++r) {
    Rational acc = 0;
    const auto& row = data_[r].entries();
    auto a = row.begin();
    auto b = x.entries().begin();
    while (a != row.end() && b != x.entries().end()) {
      if (a->first < b->first) ++a;
      else if (b->first < a->first) ++b;
      else {
        acc += a->second * b->second;
        ++a;
        ++b;
      }
    }
    if (acc != 0) out.emplace_back(r, std::move(acc));
  }
  return QVector(std::move(out));
}

QMatrix QMatrix::multiply(const QMatrix& other) const {
  if (cols_ != other.rows_) throw ValidationError("dimension mismatch in matrix product");
  QMatrix out(rows_, other.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    QVector acc;
    for (const auto& [k, v] : data_[r].entries()) acc.add_scaled(other.data_[k], v);
    out.data_[r] = std::move(acc);
  }
  return out;
}

std::vector<std::vector<Rational>> QMatrix::to_dense() const {
  std::vector<std::vector<Rational>> out;
  out.reserve(rows_);
  for (const auto& row : data_) out.push_back(row.to_dense(cols_));
  return out;
}

// ---------------------------------------------------------------- elimination

namespace {

// Forward elimination shared by rref() and rank(). Returns pivot rows in
// increasing pivot-column order, each normalised to a leading 1.
std::vector<QVector> forward_eliminate(const QMatrix& m) {
  std::vector<QVector> work;
  work.reserve(m.rows());
  std::map<std::size_t, std::vector<std::size_t>> by_lead;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    work.push_back(m.row(r));
    if (!work.back().is_zero()) by_lead[work.back().leading().first].push_back(r);
  }

  std::vector<QVector> pivots;
  while (!by_lead.empty()) {
    auto node = by_lead.begin();
    std::vector<std::size_t> cand = std::move(node->second);
    by_lead.erase(node);

    auto better = [&](std::size_t a, std::size_t b) {
      const auto& va = work[a];
      const auto& vb = work[b];
      if (va.nnz() != vb.nnz()) return va.nnz() < vb.nnz();
      int cmp = mpz_cmpabs(va.leading().second.get_num_mpz_t(), vb.leading().second.get_num_mpz_t());
      if (cmp != 0) return cmp < 0;
      return a < b;
    };
    std::size_t best = *std::min_element(cand.begin(), cand.end(), better);

    QVector pivot = std::move(work[best]);
    pivot.scale(1 / Rational(pivot.leading().second));
    for (std::size_t r : cand) {
      if (r == best) continue;
      work[r].add_scaled(pivot, -work[r].leading().second);
      if (!work[r].is_zero()) by_lead[work[r].leading().first].push_back(r);
    }
    pivots.push_back(std::move(pivot));
  }
  return pivots;
}

}  // namespace

RrefResult rref(const QMatrix& m) {
  std::vector<QVector> rows = forward_eliminate(m);
  std::vector<std::size_t> piv;
  for (const auto& r : rows) piv.push_back(r.leading().first);
  for (std::size_t j = rows.size(); j-- > 0;) {
    for (std::size_t i = 0; i < j; ++i) {
      Rational f = rows[i].get(piv[j]);
      if (f != 0) rows[i].add_scaled(rows[j], -f);
    }
  }
  RrefResult out;
  out.rank = rows.size();
  out.pivots = piv;
  out.reduced = QMatrix(m.rows(), m.cols());
  for (std::size_t i = 0; i < rows.size(); ++i) out.reduced.set_row(i, std::move(rows[i]));
  return out;
}

std::size_t rank(const QMatrix& m) { return forward_eliminate(m).size(); }

QMatrix kernel_basis(const QMatrix& m) {
  RrefResult r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : r.pivots) is_pivot[p] = true;
  QMatrix out(0, m.cols());
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<QVector::Entry> e;
    e.emplace_back(f, Rational(1));
    for (std::size_t i = 0; i < r.rank; ++i) {
      Rational v = r.reduced.at(i, f);
      if (v != 0) e.emplace_back(r.pivots[i], -v);
    }
    out.append_row(QVector(std::move(e)));
  }
  return out;
}

std::optional<QVector> solve(const QMatrix& m, const QVector& b) {
  if (!b.is_zero() && b.entries().back().first >= m.rows()) throw ValidationError("dimension mismatch in solve");
  QMatrix aug(m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    QVector row = m.row(r);
    Rational br = b.get(r);
    if (br != 0) row.add_scaled(QVector::unit(m.cols(), br), 1);
    aug.set_row(r, std::move(row));
  }
  RrefResult red = rref(aug);
  std::vector<QVector::Entry> x;
  for (std::size_t i = 0; i < red.rank; ++i) {
    if (red.pivots[i] == m.cols()) return std::nullopt;
    Rational v = red.reduced.at(i, m.cols());
    if (v != 0) x.emplace_back(red.pivots[i], v);
  }
  return QVector(std::move(x));
}

QMatrix rowspace_sum(const QMatrix& m1, const QMatrix& m2) {
  if (m1.cols() != m2.cols()) throw ValidationError("dimension mismatch in rowspace_sum");
  QMatrix stacked(0, m1.cols());
  for (std::size_t r = 0; r < m1.rows(); ++r) stacked.append_row(m1.row(r));
  for (std::size_t r = 0; r < m2.rows(); ++r) stacked.append_row(m2.row(r));
  RrefResult red = rref(stacked);
  QMatrix out(0, m1.cols());
  for (std::size_t i = 0; i < red.rank; ++i) out.append_row(red.reduced.row(i));
  return out;
}

// ---------------------------------------------------------------- EchelonBasis

EchelonBasis::Reduction EchelonBasis::reduce(QVector v) const {
  Reduction out;
  std::size_t pos = 0;
  // Subtracting a row only touches indices >= its pivot, so entries before
  // `pos` are final once passed.
  while (pos < v.entries().size()) {
    const std::size_t idx = v.entries()[pos].first;
    auto it = rows_.find(idx);
    if (it == rows_.end()) {
      ++pos;
      continue;
    }
    Rational f = v.entries()[pos].second / it->second.vec.leading().second;
    v.add_scaled(it->second.vec, -f);
    out.used[it->second.tag] += f;
  }
  out.remainder = std::move(v);
  return out;
}

bool EchelonBasis::insert(QVector v, std::size_t tag) {
  Reduction red = reduce(std::move(v));
  if (red.remainder.is_zero()) return false;
  std::size_t pivot = red.remainder.leading().first;
  rows_.emplace(pivot, Row{std::move(red.remainder), tag});
  return true;
}

std::vector<QVector> EchelonBasis::rows() const {
  std::vector<QVector> out;
  for (const auto& [p, row] : rows_) out.push_back(row.vec);
  return out;
}

}  // namespace arrcoh
