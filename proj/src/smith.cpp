#include "arrcoh/smith.hpp"

#include <algorithm>
#include <set>

namespace arrcoh {

IntSparseMatrix IntSparseMatrix::from_dense(const std::vector<std::vector<Integer>>& dense) {
  IntSparseMatrix m(dense.size(), dense.empty() ? 0 : dense.front().size());
  for (std::size_t r = 0; r < dense.size(); ++r) {
    if (dense[r].size() != m.cols) throw ValidationError("ragged integer matrix");
    for (std::size_t c = 0; c < m.cols; ++c)
      if (dense[r][c] != 0) m.data[r][c] = dense[r][c];
  }
  return m;
}

namespace {

using Dense = std::vector<std::vector<Integer>>;

// Classical reduction on a dense block. Returns the nonzero diagonal.
std::vector<Integer> dense_smith(Dense a) {
  std::vector<Integer> diag;
  const std::size_t nr = a.size();
  const std::size_t nc = nr ? a.front().size() : 0;
  for (std::size_t t = 0; t < std::min(nr, nc); ++t) {
    for (;;) {
      // smallest nonzero magnitude in the trailing block
      std::size_t pr = nr, pc = nc;
      for (std::size_t r = t; r < nr; ++r)
        for (std::size_t c = t; c < nc; ++c)
          if (a[r][c] != 0 && (pr == nr || mpz_cmpabs(a[r][c].get_mpz_t(), a[pr][pc].get_mpz_t()) < 0)) {
            pr = r;
            pc = c;
          }
      if (pr == nr) return diag;
      std::swap(a[t], a[pr]);
      for (auto& row : a) std::swap(row[t], row[pc]);

      bool clean = true;
      for (std::size_t r = t + 1; r < nr; ++r) {
        if (a[r][t] == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), a[r][t].get_mpz_t(), a[t][t].get_mpz_t());
        for (std::size_t c = t; c < nc; ++c) a[r][c] -= q * a[t][c];
        if (a[r][t] != 0) clean = false;
      }
      for (std::size_t c = t + 1; c < nc; ++c) {
        if (a[t][c] == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), a[t][c].get_mpz_t(), a[t][t].get_mpz_t());
        for (std::size_t r = t; r < nr; ++r) a[r][c] -= q * a[r][t];
        if (a[t][c] != 0) clean = false;
      }
      if (!clean) continue;

      // divisibility of the trailing block by the pivot
      std::size_t bad = nr;
      for (std::size_t r = t + 1; r < nr && bad == nr; ++r)
        for (std::size_t c = t + 1; c < nc; ++c)
          if (a[r][c] % a[t][t] != 0) {
            bad = r;
            break;
          }
      if (bad == nr) break;
      for (std::size_t c = t; c < nc; ++c) a[t][c] += a[bad][c];
    }
    diag.push_back(abs(a[t][t]));
  }
  return diag;
}

}  // namespace

std::vector<Integer> smith_normal_form(const IntSparseMatrix& m) {
  std::vector<std::map<std::size_t, Integer>> rows = m.data;
  std::vector<std::set<std::size_t>> col_rows(m.cols);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (const auto& [c, v] : rows[r]) col_rows[c].insert(r);

  std::vector<bool> row_alive(m.rows, true), col_alive(m.cols, true);
  std::size_t units = 0;

  // Unit pivots: clearing the pivot column by row operations leaves the
  // pivot row removable by column operations, contributing a factor 1.
  bool progress = true;
  while (progress) {
    progress = false;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (!row_alive[r]) continue;
      auto unit = std::find_if(rows[r].begin(), rows[r].end(),
                               [](const auto& e) { return e.second == 1 || e.second == -1; });
      if (unit == rows[r].end()) continue;
      const std::size_t c = unit->first;
      const Integer piv = unit->second;
      std::vector<std::size_t> others(col_rows[c].begin(), col_rows[c].end());
      for (std::size_t i : others) {
        if (i == r) continue;
        Integer f = rows[i][c] * piv;  // piv = ±1 so a_ic / a_rc = a_ic * piv
        for (const auto& [cc, v] : rows[r]) {
          Integer nv = rows[i][cc] - f * v;
          if (nv == 0) {
            rows[i].erase(cc);
            col_rows[cc].erase(i);
          } else {
            rows[i][cc] = nv;
            col_rows[cc].insert(i);
          }
        }
      }
      for (const auto& [cc, v] : rows[r]) col_rows[cc].erase(r);
      rows[r].clear();
      row_alive[r] = false;
      col_alive[c] = false;
      ++units;
      progress = true;
    }
  }

  std::vector<std::size_t> live_rows, live_cols;
  for (std::size_t r = 0; r < m.rows; ++r)
    if (row_alive[r] && !rows[r].empty()) live_rows.push_back(r);
  for (std::size_t c = 0; c < m.cols; ++c)
    if (col_alive[c] && !col_rows[c].empty()) live_cols.push_back(c);

  std::vector<Integer> out(units, Integer(1));
  if (!live_rows.empty() && !live_cols.empty()) {
    std::map<std::size_t, std::size_t> col_pos;
    for (std::size_t j = 0; j < live_cols.size(); ++j) col_pos[live_cols[j]] = j;
    Dense block(live_rows.size(), std::vector<Integer>(live_cols.size(), Integer(0)));
    for (std::size_t i = 0; i < live_rows.size(); ++i)
      for (const auto& [c, v] : rows[live_rows[i]]) block[i][col_pos.at(c)] = v;
    auto rest = dense_smith(std::move(block));
    out.insert(out.end(), rest.begin(), rest.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Integer> smith_normal_form(const std::vector<std::vector<Integer>>& dense) {
  return smith_normal_form(IntSparseMatrix::from_dense(dense));
}

}  // namespace arrcoh
