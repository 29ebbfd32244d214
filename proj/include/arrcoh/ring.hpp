#pragma once

#include <map>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include <json.hpp>

#include "arrcoh/cm_algebra.hpp"

namespace arrcoh {

/// dim H^q by q, from the local homology of the open intervals (0, A),
/// with H^0 = Q adjoined.
std::vector<std::size_t> betti_gm(const LabeledLattice& l);
/// dim H^q of the total CM complex (unit included).
std::vector<std::size_t> betti_cm(const LabeledLattice& l);
/// Component dimensions per (A, q) computed both ways; used by tests.
std::map<std::pair<Element, int>, std::size_t> component_dims_cm(const LabeledLattice& l);
std::map<std::pair<Element, int>, std::size_t> component_dims_gm(const LabeledLattice& l);

struct RingComponent {
  Element element;
  int q;
  std::size_t offset;  // global index of the first basis vector
  std::size_t dim;
};

/// H*(C(X), Q) with a basis of CM cycle representatives: index 0 is the
/// unit, then components sorted by (q, element).
class GradedRing {
 public:
  explicit GradedRing(const LabeledLattice& l);

  const LabeledLattice& lattice() const { return *l_; }
  std::size_t rank() const { return reps_.size(); }
  const std::vector<RingComponent>& components() const { return components_; }
  std::optional<std::size_t> component_index(Element a, int q) const;
  const CMElement& representative(std::size_t i) const { return reps_.at(i); }
  Element element_of(std::size_t i) const { return elem_.at(i); }
  int degree_of(std::size_t i) const { return deg_.at(i); }

  /// Global coordinates of the class of a CM cocycle (any mix of components).
  QVector reduce(const CMElement& x) const;
  /// Product of two classes given in global coordinates.
  QVector multiply(const QVector& x, const QVector& y) const;
  /// Structure constants: class of rep(i)·rep(j); zero vector when absent.
  QVector product(std::size_t i, std::size_t j) const;
  const std::map<std::pair<std::size_t, std::size_t>, QVector>& products() const { return products_; }

  std::vector<std::size_t> betti() const;

 private:
  struct Part {
    Element element;
    int q;
    std::shared_ptr<const Homology> homology;
    std::size_t offset;
  };

  const LabeledLattice* l_;
  std::vector<RingComponent> components_;
  std::map<std::pair<Element, int>, std::size_t> by_key_;  // (A, |T|) -> part index
  std::vector<Part> parts_;
  std::vector<CMElement> reps_;
  std::vector<Element> elem_;
  std::vector<int> deg_;
  std::map<std::pair<std::size_t, std::size_t>, QVector> products_;
};

/// Rank of the span of H^{q1} · H^{q2} for every pair 0 < q1 ≤ q2 with a
/// nonzero product.
std::map<std::pair<int, int>, std::size_t> product_image_ranks(const GradedRing& r);

/// Coefficients of the Poincaré polynomial (constant term 1).
std::vector<std::size_t> poincare_polynomial(const LabeledLattice& l);

struct IntegralDegree {
  int q;
  std::size_t free_rank;
  std::vector<Integer> torsion;
};
/// EXPERIMENTAL: homology of CM over Z through Smith normal forms.
std::vector<IntegralDegree> integral_betti_experimental(const LabeledLattice& l);

nlohmann::json betti_to_json(const std::vector<std::size_t>& betti);
nlohmann::json ring_to_json(const GradedRing& r);

}  // namespace arrcoh
