#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "arrcoh/qmatrix.hpp"
#include "arrcoh/rational.hpp"

namespace arrcoh {

using Element = int;

/// Set partition of {1..n}; blocks sorted internally and by smallest point.
struct Partition {
  int n = 0;
  std::vector<std::vector<int>> blocks;

  static Partition canonical(int n, std::vector<std::vector<int>> blocks);
  std::vector<std::vector<int>> nontrivial_blocks() const;
  /// Every block of *this lies inside a block of `coarser`.
  bool refines(const Partition& coarser) const;
  std::string to_string() const;  // e.g. "123|4|5"

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;
};

/// Finite lattice with a dimension label per element. Element 0 is the
/// bottom. Immutable after construction.
class LabeledLattice {
 public:
  /// `leq_pairs` may be any generating set (e.g. covering pairs); the
  /// reflexive-transitive closure is taken. Throws ValidationError unless the
  /// result is a lattice with bottom 0, dim(0) = 0 and strictly monotone dims.
  static LabeledLattice from_pairs(std::vector<int> dims, const std::vector<std::pair<Element, Element>>& leq_pairs);
  static LabeledLattice from_relation(std::vector<int> dims, std::vector<std::vector<bool>> leq);

  std::size_t size() const { return dims_.size(); }
  int dim(Element a) const { return dims_.at(a); }
  const std::vector<int>& dims() const { return dims_; }
  bool leq(Element a, Element b) const { return leq_[a][b]; }
  bool less(Element a, Element b) const { return a != b && leq_[a][b]; }
  Element join(Element a, Element b) const { return join_[a][b]; }
  Element meet(Element a, Element b) const { return meet_[a][b]; }
  Element join_all(std::span<const Element> elems) const;
  Element bottom() const { return 0; }
  Element top() const { return top_; }

  /// Atoms in the fixed atom order (increasing element index).
  const std::vector<Element>& atoms() const { return atoms_; }
  bool is_atom(Element a) const;
  std::vector<Element> atoms_below(Element a) const;
  /// True when every element is the join of the atoms below it.
  bool is_atomic() const { return atomic_; }
  bool covers(Element upper, Element lower) const;
  /// Elements strictly between a and b, in index order.
  std::vector<Element> open_interval(Element a, Element b) const;
  std::vector<Element> closed_interval(Element a, Element b) const;
  std::vector<std::pair<Element, Element>> covering_pairs() const;

  /// Index of the corresponding element in the lattice this one was carved
  /// from (intervals, sublattices); identity for a root lattice.
  Element origin(Element a) const { return origin_.at(a); }
  const std::vector<Element>& origins() const { return origin_; }

  bool has_partitions() const { return !partitions_.empty(); }
  const Partition& partition(Element a) const { return partitions_.at(a); }
  bool has_subspaces() const { return !subspaces_.empty(); }
  const QMatrix& subspace(Element a) const { return subspaces_.at(a); }
  /// Set for lattices read from abstract order data: the CM model is still
  /// computed, but nothing guarantees an arrangement realizes the labels.
  bool abstract_input() const { return abstract_; }

  std::string element_name(Element a) const;

 private:
  friend class LatticeBuilder;
  LabeledLattice() = default;
  void finalize(bool require_zero_bottom);

  std::vector<int> dims_;
  std::vector<std::vector<bool>> leq_;
  std::vector<std::vector<Element>> join_;
  std::vector<std::vector<Element>> meet_;
  std::vector<Element> atoms_;
  std::vector<Element> origin_;
  std::vector<Partition> partitions_;
  std::vector<QMatrix> subspaces_;
  Element top_ = 0;
  bool atomic_ = false;
  bool abstract_ = false;
};

/// Central arrangement of rational subspaces, each stored as a canonical
/// full-rank RREF basis matrix.
class SubspaceArrangement {
 public:
  SubspaceArrangement(int ambient_dim, const std::vector<QMatrix>& subspaces);
  int ambient_dim() const { return ambient_dim_; }
  const std::vector<QMatrix>& subspaces() const { return subspaces_; }

 private:
  int ambient_dim_;
  std::vector<QMatrix> subspaces_;
};

/// Canonical basis (RREF, zero rows removed) of the row space of m.
QMatrix canonical_subspace(const QMatrix& m);
bool subspace_less(const QMatrix& a, const QMatrix& b);  // by rank, then entries lexicographically

LabeledLattice intersection_lattice(const SubspaceArrangement& arr);
/// Closed interval [a, b] re-indexed (order of original indices kept), b on top.
LabeledLattice interval(const LabeledLattice& l, Element a, Element b);
/// All joins of subsets of atoms(a) ∪ atoms(b), plus bottom. origin() maps
/// into l, recording the inclusion into [0, a ∨ b].
LabeledLattice sublattice_ab(const LabeledLattice& l, Element a, Element b);
/// Partitions of {1..n} whose blocks are singletons, of size >= k, or meet
/// {1..ell}; ordered by refinement, dim = n - #blocks.
LabeledLattice kequal_lattice(int n, int k, int ell = 0);
/// Rank function when l is atomic, graded and semimodular; nullopt otherwise.
std::optional<std::vector<int>> is_geometric(const LabeledLattice& l);
long moebius(const LabeledLattice& l, Element a, Element b);

/// The subspaces V(ω) ⊂ Q^n, ω a k-subset: sum over ω is 0, other coordinates 0.
SubspaceArrangement kequal_arrangement(int n, int k);

}  // namespace arrcoh
