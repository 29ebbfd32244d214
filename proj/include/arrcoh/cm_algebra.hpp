#pragma once

#include <map>
#include <vector>

#include "arrcoh/chains.hpp"

namespace arrcoh {

/// Sparse combination of critical monomials cμ(T), keyed by the flag T
/// (bottom to top). The empty flag is the unit.
struct CMElement {
  std::map<Flag, Rational> terms;

  void add(const Flag& t, const Rational& coeff);
  void add(const CMElement& other, const Rational& factor = 1);
  bool is_zero() const { return terms.empty(); }
  friend bool operator==(const CMElement&, const CMElement&) = default;
};

/// 2·dim(top) − |T|; 0 for the empty flag.
int cm_degree(const LabeledLattice& l, const Flag& t);
Element cm_top(const LabeledLattice& l, const Flag& t);

/// d cμ(A_1 < ... < A_k) = Σ_{i=1}^{k−1} (−1)^i cμ(T without A_i).
CMElement cm_differential(const LabeledLattice& l, const Flag& t);
CMElement cm_differential(const LabeledLattice& l, const CMElement& x);

/// Zero unless dim(A ∨ B) = dim A + dim B for the tops A, B; otherwise the
/// signed sum over shuffles of λπ(T1 ∪ T2).
CMElement cm_product(const LabeledLattice& l, const Flag& t1, const Flag& t2);
CMElement cm_element_product(const LabeledLattice& l, const CMElement& x, const CMElement& y);

/// All flags of non-bottom elements ending at a (a included).
std::vector<Flag> flags_with_top(const LabeledLattice& l, Element a);

/// CM_A as a chain complex: homological degree p = |T| − 2 holds the flags
/// with top a and |T| = p + 2, i.e. cohomological degree q = 2·dim a − p − 2.
/// The boundary is the CM differential itself.
ChainComplexQ cm_complex(const LabeledLattice& l, Element a);
inline int cm_q_of_p(const LabeledLattice& l, Element a, int p) { return 2 * l.dim(a) - p - 2; }
inline int cm_p_of_q(const LabeledLattice& l, Element a, int q) { return 2 * l.dim(a) - q - 2; }

QChain cm_to_chain(const CMElement& x, int p);
CMElement chain_to_cm(const QChain& c);

}  // namespace arrcoh
