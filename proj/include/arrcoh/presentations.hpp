#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "arrcoh/ring.hpp"

namespace arrcoh {

using AtomSet = std::vector<Element>;  // atoms in atom order

/// No proper subset has the same join.
bool is_independent(const LabeledLattice& l, const AtomSet& sigma);
/// Join is the top.
bool is_essential(const LabeledLattice& l, const AtomSet& sigma);
/// Independent sets (nonempty, size ≤ max_size) among the given atoms, by
/// backtracking; independence is hereditary.
std::vector<AtomSet> independent_sets(const LabeledLattice& l, const std::vector<Element>& atoms, std::size_t max_size = 8);

/// Cycle ∂σ = Σ_{i=1}^p (−1)^i σ \ {A_i} pushed through atoms_to_flags into
/// the flag complex of (0, ⋁σ); nullopt when a face reaches ⋁σ (σ dependent).
std::optional<QChain> zeta_cycle(const LabeledLattice& l, const AtomSet& sigma);
/// Flag cycle of (0, u) as a CM element (u appended to every flag).
CMElement flag_cycle_to_cm(const QChain& c, Element u);

struct ZetaClass {
  AtomSet sigma;
  Element ambient = 0;
  int degree = -1;  // p = |σ| − 2
  bool dependent = false;
  QVector coords;  // in the homology basis of H̃_p((0, ambient))
  bool is_zero() const { return coords.is_zero(); }
};

/// ζ classes with cached homology of the open intervals (0, U).
class ZetaEvaluator {
 public:
  explicit ZetaEvaluator(const LabeledLattice& l) : l_(&l) {}
  ZetaClass zeta(const AtomSet& sigma);
  const Homology& homology(Element u, int p);

 private:
  const LabeledLattice* l_;
  std::map<std::pair<Element, int>, std::unique_ptr<Homology>> cache_;
};

/// Maximal number of members of σ with pairwise disjoint nontrivial blocks.
int rank_of(const LabeledLattice& l, const AtomSet& sigma);

struct PresentationReport {
  std::size_t generators = 0;
  std::size_t linear_relations = 0;
  std::size_t multiplicative_relations = 0;
  std::vector<std::size_t> betti_presentation;  // by q, unit included
  std::vector<std::size_t> betti_moebius;
  std::vector<std::size_t> betti_ring;
  bool independence_agrees = true;
  std::size_t failed_relations = 0;
  std::vector<std::string> failures;  // first few
  bool ok() const;
};

/// Generators ζ_σ over independent σ, the alternating sums over
/// dependent sets and the product rule, all evaluated on the classes of the
/// computed ring.
PresentationReport geometric_presentation(const LabeledLattice& l, std::size_t max_atoms = 8);
nlohmann::json presentation_to_json(const PresentationReport& r);

struct KequalOptions {
  std::vector<int> ells{0};
  bool full_report = false;  // also the ξ-surjectivity check
  int max_n = 7;
  std::size_t max_atoms = 8;  // cap on independent set size
  bool ring_checks = true;  // rank-1 generation needs the whole ring
};

struct KequalRow {
  int dim_u, size, p, rank, s, n_sigma, q;
  std::size_t dim;
  auto operator<=>(const KequalRow&) const = default;
};

struct KequalReport {
  int n = 0, k = 0;
  std::vector<std::size_t> betti;
  std::vector<KequalRow> table;
  std::vector<int> nonvanishing_p, expected_p;
  std::size_t independent_sets = 0;
  std::size_t violators = 0, violators_nonzero = 0;
  std::size_t components_spanned = 0, components_total = 0;
  struct Span {
    int ell, p;
    std::size_t span, betti;
  };
  std::vector<Span> spans;
  bool generation_checked = false;
  std::size_t generated_rank = 0, ring_rank = 0;
  struct Rank1 {
    std::string u;
    std::size_t expected, basis_rank, rank1_span;
  };
  std::vector<Rank1> rank1;
  struct Tensor {
    std::string u;
    int p;
    std::size_t direct, product;
  };
  std::vector<Tensor> tensor;
  struct Xi {
    int p;
    std::size_t image, betti;
  };
  std::vector<Xi> xi;

  bool nonvanishing_ok() const { return nonvanishing_p == expected_p; }
  bool vanishing_ok() const { return violators_nonzero == 0; }
  bool spanning_ok() const;
  bool generation_ok() const { return !generation_checked || generated_rank == ring_rank; }
  bool rank1_ok() const;
  bool tensor_ok() const;
  bool xi_ok() const;
  bool ok() const;
};

KequalReport kequal_analysis(int n, int k, const KequalOptions& opt = {});
nlohmann::json kequal_to_json(const KequalReport& r);
std::string kequal_to_tsv(const KequalReport& r);

}  // namespace arrcoh
