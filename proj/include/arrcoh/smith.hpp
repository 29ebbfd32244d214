#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "arrcoh/rational.hpp"

namespace arrcoh {

/// Sparse integer matrix, row-major.
struct IntSparseMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::map<std::size_t, Integer>> data;

  IntSparseMatrix() = default;
  IntSparseMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r) {}
  static IntSparseMatrix from_dense(const std::vector<std::vector<Integer>>& dense);
};

/// Nonzero invariant factors d1 | d2 | ... (all positive). Unit pivots are
/// eliminated sparsely first; the leftover block goes through the classical
/// dense reduction with smallest-magnitude pivoting.
std::vector<Integer> smith_normal_form(const IntSparseMatrix& m);
std::vector<Integer> smith_normal_form(const std::vector<std::vector<Integer>>& dense);

}  // namespace arrcoh
