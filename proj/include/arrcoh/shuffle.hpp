#pragma once

#include <vector>

namespace arrcoh {

/// Visits every (p, q)-shuffle in lexicographic order of its word. In the
/// word, `false` is the next letter of the first sequence and `true` the next
/// letter of the second. `sign` is (-1)^(number of first/second pairs that the
/// shuffle puts out of order), i.e. the sign of the permutation taking the
/// concatenation to the shuffled sequence.
template <class Fn>
void for_each_shuffle(int p, int q, Fn&& fn) {
  std::vector<bool> word;
  word.reserve(p + q);
  auto rec = [&](auto&& self, int left_a, int left_b, int inversions) -> void {
    if (left_a == 0 && left_b == 0) {
      fn(static_cast<const std::vector<bool>&>(word), (inversions % 2) ? -1 : 1);
      return;
    }
    if (left_a > 0) {
      word.push_back(false);
      // every second-sequence letter already placed now precedes this one
      self(self, left_a - 1, left_b, inversions + (q - left_b));
      word.pop_back();
    }
    if (left_b > 0) {
      word.push_back(true);
      self(self, left_a, left_b - 1, inversions);
      word.pop_back();
    }
  };
  rec(rec, p, q, 0);
}

}  // namespace arrcoh
