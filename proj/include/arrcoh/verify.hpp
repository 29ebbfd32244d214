#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "arrcoh/ring.hpp"

namespace arrcoh {

struct Check {
  std::string name;
  bool ok = true;
  std::size_t cases = 0;
  std::string detail;  // first failure
};

struct VerifyOptions {
  int dcp_degree = 0;             // run the DCP checks when ≥ 2
  std::size_t exhaustive_up_to = 30;  // lattice size for exhaustive pair/triple sweeps
  std::size_t samples = 2000;     // sampled pairs/triples above that size
  std::uint64_t seed = 1;
};

struct VerifyReport {
  std::vector<Check> checks;
  bool ok() const;
};

/// d² = 0, Leibniz, associativity and graded commutativity of the CM
/// product on critical monomials.
std::vector<Check> check_cm_dga(const LabeledLattice& l, const VerifyOptions& opt = {});
/// CM product against shuffle_flag_product under the delete-top
/// isomorphism, on all pairs of flags (sampled for large lattices).
Check check_shuffle_transport(const LabeledLattice& l, const VerifyOptions& opt = {});
/// Graded commutativity and associativity of the structure constants.
std::vector<Check> check_ring(const GradedRing& r);

/// Everything above plus GM ≡ CM per component, and the DCP checks when
/// requested.
VerifyReport verify_all(const LabeledLattice& l, const VerifyOptions& opt = {});
nlohmann::json verify_to_json(const VerifyReport& r);

/// Random lattice of at most max_elements elements: a union-closed family
/// of subsets of a small ground set (∅ included), with strictly monotone
/// dimension labels. With submodular = true the labels are sums of
/// positive point weights over the union, which are submodular.
LabeledLattice random_lattice(std::mt19937_64& rng, std::size_t max_elements, bool submodular = false);

}  // namespace arrcoh
