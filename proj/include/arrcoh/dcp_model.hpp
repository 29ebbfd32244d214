#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "arrcoh/cm_algebra.hpp"

namespace arrcoh {

/// Monomial of P ⊗ Λ over the non-bottom elements (variable v ↔ element
/// v + 1): entries [0, n) are the exterior exponents (0/1), entries [n, 2n)
/// the polynomial exponents. The exterior letters are read in increasing
/// variable order.
using FreeMonomial = std::vector<int>;
using FreePoly = std::map<FreeMonomial, Rational>;

/// μ(S, T, m) = Π_{B∈T} τ_B · Π_{A∈S} σ_A^{m(A)}; the flag S ∪ T is stored
/// bottom to top, with per-position membership in T and the exponent m
/// (0 for positions outside S).
struct BasicMonomial {
  Flag flag;
  std::vector<bool> in_t;
  std::vector<int> m;

  int degree() const;
  friend bool operator==(const BasicMonomial&, const BasicMonomial&) = default;
  friend auto operator<=>(const BasicMonomial&, const BasicMonomial&) = default;
};

struct RelationGenerator {
  std::vector<Element> x1;  // exterior letters, increasing
  std::vector<Element> x2;  // polynomial letters
  Element b;
  int exponent;  // d(Y, B) = dim B − dim ⋁Y
  FreePoly poly;
};

/// Generators r(X1, X2, B) of degree ≤ max_degree (all degrees when
/// max_degree < 0). X1, X2 disjoint; B strictly above every element of Y.
std::vector<RelationGenerator> relation_generators(const LabeledLattice& l, int max_degree = -1);

/// Basic monomials of the given degree: μ(S, T, m) with m(A) below the
/// gap of A in the flag.
std::vector<BasicMonomial> basic_monomials(const LabeledLattice& l, int degree);
/// Monomials e_{A1}···e_{Ak} Π c_B^{m(B)} with the same index data.
FreeMonomial lambda_monomial(const LabeledLattice& l, const BasicMonomial& b);
bool is_critical(const LabeledLattice& l, const BasicMonomial& b);
/// |μ| = |S ∪ T \ CT|
int homotopy_weight(const LabeledLattice& l, const BasicMonomial& b);
/// wt = Σ dim A_i over exterior letters + 2 Σ m_i dim B_i.
int monomial_weight(const LabeledLattice& l, const FreeMonomial& m);
/// h μ = Σ_{A∈S\T} (−1)^{#{B∈T : B < A}} μ(S, T ∪ {A}, m) / σ_A. Throws
/// ValidationError for critical μ.
std::vector<std::pair<BasicMonomial, Rational>> homotopy_h(const LabeledLattice& l, const BasicMonomial& b);
/// Critical monomial as a basic monomial.
BasicMonomial critical_basic(const LabeledLattice& l, const Flag& t);

/// M(X) truncated at degree D: per-degree monomial lists, the ideal slice
/// J_d and the quotient normal form.
class DcpModel {
 public:
  DcpModel(const LabeledLattice& l, int max_degree, std::size_t monomial_cap = 200000);

  const LabeledLattice& lattice() const { return *l_; }
  int max_degree() const { return max_degree_; }
  std::size_t num_variables() const { return n_; }
  std::size_t monomial_count(int d) const { return slices_.at(d).monomials.size(); }
  std::size_t ideal_rank(int d) const { return slices_.at(d).ideal.rank(); }
  std::size_t slice_dim(int d) const { return monomial_count(d) - ideal_rank(d); }

  FreePoly one() const;
  FreePoly e(Element a) const;
  FreePoly c(Element a) const;
  FreePoly sigma(Element a) const;
  FreePoly tau(Element a) const;
  FreePoly multiply(const FreePoly& x, const FreePoly& y) const;
  FreePoly power(const FreePoly& x, int k) const;
  FreePoly differential(const FreePoly& x) const;
  FreePoly expand(const BasicMonomial& b) const;
  /// f((T, m)) = τ_{A1}···τ_{Ap} Π σ_{Ai}^{m(Ai)}
  FreePoly expand_pair(const Flag& t, const std::vector<int>& m) const;
  FreePoly expand_cm(const CMElement& x) const;

  /// Normal form of a homogeneous polynomial of degree d ≤ D, as a vector
  /// over the degree-d monomial list whose support avoids ideal pivots.
  QVector normal_form(const FreePoly& x, int d) const;
  FreePoly to_poly(const QVector& v, int d) const;
  static int degree(const FreeMonomial& m, std::size_t n);

  /// dim H^q of the truncated quotient; requires q + 1 ≤ D.
  std::size_t cohomology_dim(int q) const;
  /// Normal forms of d(basis monomial) for the quotient basis in degree q.
  std::vector<QVector> differential_images(int q) const;

 private:
  struct Slice {
    std::vector<FreeMonomial> monomials;
    std::map<FreeMonomial, std::size_t> index;
    EchelonBasis ideal;
    std::vector<std::size_t> quotient_basis;  // monomial indices off the ideal pivots
  };

  FreePoly monomial_poly(const FreeMonomial& m) const;

  const LabeledLattice* l_;
  int max_degree_;
  std::size_t n_;
  std::vector<Slice> slices_;
};

/// Vectors with a tracked expression in terms of the inserted originals.
class CoordinateBasis {
 public:
  /// Returns false (and stores nothing) when v is dependent on earlier ones.
  bool insert(const QVector& v);
  /// Coordinates of v in the inserted vectors; nullopt if v is outside the span.
  std::optional<QVector> coordinates(QVector v) const;
  std::size_t rank() const { return count_; }

 private:
  struct Row {
    QVector vec;
    QVector combo;
  };
  std::map<std::size_t, Row> rows_;
  std::size_t count_ = 0;
};

struct DcpCheck {
  std::string name;
  bool ok = true;
  std::string detail;
};

struct DcpReport {
  int max_degree = 0;
  std::vector<std::size_t> slice_dims;     // degrees 0..D
  std::vector<std::size_t> basic_counts;   // degrees 0..D
  std::vector<std::size_t> m_cohomology;   // degrees 0..D−1
  std::vector<std::size_t> cm_cohomology;  // degrees 0..D−1
  std::vector<DcpCheck> checks;
  bool ok() const;
};

/// Basis counts and independence of the basic and e/c monomials, d(J) ⊆ J,
/// the CM differential, CM⊥ closure, hd + dh = |μ|μ, the quasi-isomorphism
/// and the product theorem sweep, all within degree D.
DcpReport dcp_check(const LabeledLattice& l, int max_degree, std::size_t monomial_cap = 200000);

}  // namespace arrcoh
