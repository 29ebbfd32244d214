#pragma once

#include <map>
#include <optional>
#include <vector>

#include "arrcoh/lattice.hpp"
#include "arrcoh/qmatrix.hpp"

namespace arrcoh {

/// Basis label of a chain complex: a flag (listed bottom to top) or an atom
/// set (listed in atom order).
using Label = std::vector<Element>;
using Flag = std::vector<Element>;

/// Sparse rational chain of one homological degree.
struct QChain {
  int degree = -1;
  std::map<Label, Rational> terms;

  void add(const Label& label, const Rational& coeff);
  void add(const QChain& other, const Rational& factor = 1);
  bool is_zero() const { return terms.empty(); }
  friend bool operator==(const QChain&, const QChain&) = default;
};

/// Augmented chain complex over Q: degrees -1 .. max_degree(). The boundary
/// of a degree-p basis element is stored as a vector over the degree-(p-1)
/// basis. Construction asserts ∂∘∂ = 0.
class ChainComplexQ {
 public:
  ChainComplexQ() = default;
  /// basis[p + 1] lists degree-p labels; columns[p + 1][j] = ∂(basis[p + 1][j]).
  ChainComplexQ(std::vector<std::vector<Label>> basis, std::vector<std::vector<QVector>> columns);

  int max_degree() const { return static_cast<int>(basis_.size()) - 2; }
  std::size_t size(int p) const;
  const std::vector<Label>& basis(int p) const;
  std::optional<std::size_t> index_of(int p, const Label& label) const;
  const std::vector<QVector>& boundary_columns(int p) const;
  /// Matrix with rows indexed by degree p-1, columns by degree p.
  QMatrix boundary(int p) const;

  QVector to_vector(const QChain& c) const;
  QChain to_chain(int p, const QVector& v) const;
  QChain apply_boundary(const QChain& c) const;

 private:
  std::vector<std::vector<Label>> basis_;
  std::vector<std::vector<QVector>> columns_;
  std::vector<std::map<Label, std::size_t>> index_;
};

/// Strict order on a finite point set; ids are the labels used in flags.
struct FinitePoset {
  std::vector<Element> ids;
  std::vector<std::vector<bool>> less;

  static FinitePoset induced(const LabeledLattice& l, const std::vector<Element>& elems);
};

/// Simplicial complex given by all its nonempty faces, each listed in vertex
/// order; the empty simplex is adjoined. ∂ = Σ (-1)^i (delete i-th vertex).
ChainComplexQ simplicial_chain_complex(std::vector<Label> faces);

ChainComplexQ flag_complex(const FinitePoset& p);
/// Flag complex of the open interval (0, a).
ChainComplexQ lower_interval_flag_complex(const LabeledLattice& l, Element a);
/// Atom sets with join strictly below the top. Requires an atomic lattice.
ChainComplexQ atomic_complex(const LabeledLattice& l);

/// Reduced homology in one degree with explicit cycle representatives.
class Homology {
 public:
  Homology(const ChainComplexQ& c, int p);

  int degree() const { return degree_; }
  std::size_t betti() const { return reps_.size(); }
  const std::vector<QChain>& cycle_representatives() const { return reps_; }
  bool is_cycle(const QChain& z) const;
  /// Coordinates of the class of z in the representative basis. Throws
  /// ValidationError when z is not a cycle.
  std::vector<Rational> reduce(const QChain& z) const;

 private:
  static constexpr std::size_t kImageTag = static_cast<std::size_t>(-1);

  int degree_;
  std::vector<Label> labels_;
  std::map<Label, std::size_t> index_;
  std::vector<QVector> boundary_;  // ∂_p columns
  EchelonBasis span_;              // boundaries, then representatives
  std::vector<QChain> reps_;
};

/// Reduced Betti numbers from ranks only; entry p + 1 holds degree p.
std::vector<std::size_t> betti_numbers(const ChainComplexQ& c);

/// f(A_1..A_p) = Σ_δ sign(δ) (A_δ1 < A_δ1∨A_δ2 < ... ), flags with a
/// repeated element dropped. `atoms` must be listed in atom order.
QChain atoms_to_flags(const LabeledLattice& l, const std::vector<Element>& atoms);

/// Product of flags fa ⊂ (0,a) and fb ⊂ (0,b): augment by a and b, shuffle,
/// take joins of initial segments, drop flags with repetitions and delete the
/// final a ∨ b.
QChain shuffle_flag_product(const LabeledLattice& l, const Flag& fa, Element a, const Flag& fb, Element b);

}  // namespace arrcoh
