#include <doctest.h>

#include "arrcoh/lattice_io.hpp"
#include "arrcoh/presentations.hpp"
#include "oracles.hpp"

using namespace arrcoh;

namespace {

// Atom of Π_{n,k} whose single nontrivial block is given by its digits.
Element atom(const LabeledLattice& l, int digits) {
  std::vector<int> block;
  for (; digits; digits /= 10) block.insert(block.begin(), digits % 10);
  std::vector<std::vector<int>> blocks{block};
  for (int i = 1; i <= l.partition(0).n; ++i)
    if (std::find(block.begin(), block.end(), i) == block.end()) blocks.push_back({i});
  auto target = Partition::canonical(l.partition(0).n, blocks);
  for (Element a : l.atoms())
    if (l.partition(a) == target) return a;
  FAIL("atom not found");
  return -1;
}

AtomSet atoms(const LabeledLattice& l, std::initializer_list<int> digits) {
  AtomSet s;
  for (int d : digits) s.push_back(atom(l, d));
  std::sort(s.begin(), s.end());
  return s;
}

// Nonvanishing degrees {n − 3 − t(k − 2)} for 1 ≤ t ≤ ⌊n/k⌋, ascending.
std::vector<int> expected_degrees(int n, int k) {
  std::vector<int> out;
  for (int t = n / k; t >= 1; --t) out.push_back(n - 3 - t * (k - 2));
  return out;
}

}  // namespace

TEST_CASE("rank of atom sets in Π_{6,3}") {
  auto l = kequal_lattice(6, 3);
  CHECK(rank_of(l, atoms(l, {123, 145, 345})) == 1);
  CHECK(rank_of(l, atoms(l, {123, 456})) == 2);
  CHECK(rank_of(l, atoms(l, {123, 345, 356})) == 1);
  CHECK(rank_of(l, atoms(l, {123})) == 1);
}

TEST_CASE("independence") {
  auto l = kequal_lattice(6, 3);
  CHECK(is_independent(l, atoms(l, {123, 145})));
  CHECK(is_independent(l, atoms(l, {123, 456})));
  // 123 ∨ 124 = 1234 = 123 ∨ 124 ∨ 134
  CHECK_FALSE(is_independent(l, atoms(l, {123, 124, 134})));
  CHECK(is_essential(l, atoms(l, {123, 345, 456})));
  CHECK(is_independent(l, atoms(l, {123, 345, 456})));
  CHECK_FALSE(is_essential(l, atoms(l, {123, 456})));
}

TEST_CASE("vanishing ζ classes in Π_{6,3}") {
  auto l = kequal_lattice(6, 3);
  ZetaEvaluator z(l);
  auto a = z.zeta(atoms(l, {123, 145}));
  CHECK_FALSE(a.dependent);
  CHECK(a.is_zero());
  auto b = z.zeta(atoms(l, {123, 345, 356}));
  CHECK(b.is_zero());
  // the two disjoint blocks give a nonzero class
  CHECK_FALSE(z.zeta(atoms(l, {123, 456})).is_zero());
  // a single atom gives the generator of H̃_{-1}(∅)
  CHECK_FALSE(z.zeta(atoms(l, {123})).is_zero());
}

TEST_CASE("ζ cycles are cycles of the flag complex") {
  auto l = kequal_lattice(6, 3);
  for (const auto& s : independent_sets(l, l.atoms(), 3)) {
    auto c = zeta_cycle(l, s);
    if (!c) continue;
    Element u = l.bottom();
    for (Element a : s) u = l.join(u, a);
    auto cx = lower_interval_flag_complex(l, u);
    CHECK(cx.apply_boundary(*c).is_zero());
  }
}

TEST_CASE("independent sets are closed under subsets") {
  auto l = builtin_lattice("braid:4");
  auto sets = independent_sets(l, l.atoms());
  std::set<AtomSet> all(sets.begin(), sets.end());
  for (const auto& s : sets)
    for (std::size_t i = 0; i < s.size() && s.size() > 1; ++i) {
      AtomSet t = s;
      t.erase(t.begin() + static_cast<long>(i));
      CHECK(all.count(t) == 1);
    }
  // braid:4 has rank 3: no independent set of size 4
  for (const auto& s : sets) CHECK(s.size() <= 3);
}

TEST_CASE("the three lines relation in Π_3") {
  // ζ{1,2} − ζ{1,3} + ζ{2,3} = 0 in H^2 of the complement of three lines
  auto l = builtin_lattice("braid:3");
  GradedRing r(l);
  const auto& at = l.atoms();
  QVector sum;
  const int signs[3] = {1, -1, 1};
  const AtomSet pairs[3] = {{at[1], at[2]}, {at[0], at[2]}, {at[0], at[1]}};
  for (int i = 0; i < 3; ++i) {
    auto c = zeta_cycle(l, pairs[i]);
    REQUIRE(c.has_value());
    auto v = r.reduce(flag_cycle_to_cm(*c, l.top()));
    CHECK_FALSE(v.is_zero());
    sum.add_scaled(v, signs[i]);
  }
  CHECK(sum.is_zero());
}

TEST_CASE("geometric presentations") {
  for (const char* n : {"boolean:2", "boolean:3", "braid:3", "braid:4"}) {
    auto l = builtin_lattice(n);
    auto rep = geometric_presentation(l);
    INFO(n);
    for (const auto& f : rep.failures) INFO(f);
    CHECK(rep.ok());
    CHECK(rep.failed_relations == 0);
    CHECK(rep.independence_agrees);
    CHECK(rep.betti_presentation == rep.betti_moebius);
    CHECK(rep.betti_ring == rep.betti_moebius);
  }
  CHECK_THROWS_AS(geometric_presentation(kequal_lattice(6, 3)), ValidationError);
}

TEST_CASE("boolean presentation is the exterior algebra") {
  auto rep = geometric_presentation(builtin_lattice("boolean:3"));
  CHECK(rep.generators == 7);  // all nonempty subsets of three atoms
  CHECK(rep.betti_presentation[1] == 3);
  CHECK(rep.betti_presentation[2] == 3);
  CHECK(rep.betti_presentation[3] == 1);
}

TEST_CASE("k-equal analysis in Π_{4,3} and Π_{6,3}") {
  auto r4 = kequal_analysis(4, 3);
  CHECK(r4.ok());
  CHECK(r4.nonvanishing_p == std::vector<int>{0});
  KequalOptions opt;
  opt.ells = {0, 2};
  opt.full_report = true;
  auto r6 = kequal_analysis(6, 3, opt);
  CHECK(r6.ok());
  CHECK(r6.nonvanishing_ok());
  CHECK(r6.vanishing_ok());
  CHECK(r6.spanning_ok());
  CHECK(r6.generation_ok());
  CHECK(r6.rank1_ok());
  CHECK(r6.tensor_ok());
  CHECK(r6.xi_ok());
  CHECK(r6.violators_nonzero == 0);
  CHECK(r6.components_spanned == r6.components_total);
  CHECK(r6.generated_rank == 132);
  // q = 6 splits as 10 + 10 by rank
  std::map<int, std::size_t> by_rank;
  for (const auto& row : r6.table)
    if (row.q == 6) by_rank[row.rank] += row.dim;
  CHECK(by_rank == std::map<int, std::size_t>{{1, 10}, {2, 10}});
}

TEST_CASE("nonvanishing degrees of Π_{n,k}") {
  KequalOptions opt;
  opt.ring_checks = false;
  for (int n = 3; n <= 7; ++n)
    for (int k = 3; k <= n; ++k) {
      auto r = kequal_analysis(n, k, opt);
      INFO(n << " " << k);
      CHECK(r.expected_p == expected_degrees(n, k));
      CHECK(r.nonvanishing_p == r.expected_p);
    }
  CHECK_THROWS_AS(kequal_analysis(8, 3), ValidationError);
  CHECK_THROWS_AS(kequal_analysis(4, 2), ValidationError);
}

TEST_CASE("k-equal report serialisation") {
  auto r = kequal_analysis(5, 3);
  auto j = kequal_to_json(r);
  CHECK(j.contains("table"));
  auto tsv = kequal_to_tsv(r);
  CHECK(tsv.rfind("dim_u\tsize\tp\trank\ts\tn_sigma\tq\tdim\n", 0) == 0);
  CHECK(tsv.find("FAIL") == std::string::npos);
}
