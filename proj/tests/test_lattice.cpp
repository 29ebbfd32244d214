#include <doctest.h>

#include <random>

#include "arrcoh/lattice_io.hpp"
#include "oracles.hpp"

using namespace arrcoh;

namespace {

QMatrix row(std::vector<Rational> r) { return QMatrix::from_dense({std::move(r)}); }

// Number of set partitions of {1..n} with blocks of size 1 or ≥ k, by the
// recurrence on the block containing n.
long kequal_count(int n, int k) {
  std::vector<long> c(n + 1, 0);
  c[0] = 1;
  for (int m = 1; m <= n; ++m) {
    c[m] = c[m - 1];
    for (int s = k; s <= m; ++s) c[m] += oracle::binomial(m - 1, s - 1) * c[m - s];
  }
  return c[n];
}

Element find_partition(const LabeledLattice& l, const std::vector<std::vector<int>>& blocks) {
  auto target = Partition::canonical(l.partition(0).n, blocks);
  for (Element a = 0; a < static_cast<Element>(l.size()); ++a)
    if (l.partition(a) == target) return a;
  FAIL("partition not found");
  return -1;
}

}  // namespace

TEST_CASE("three lines in the plane") {
  SubspaceArrangement arr(2, {row({1, 0}), row({0, 1}), row({1, 1})});
  auto l = intersection_lattice(arr);
  CHECK(l.size() == 5);
  CHECK(l.atoms().size() == 3);
  CHECK(l.dim(l.top()) == 2);
  for (Element a : l.atoms()) CHECK(l.dim(a) == 1);
  CHECK(l.is_atomic());
}

TEST_CASE("single subspace gives a two-element lattice") {
  auto l = intersection_lattice(SubspaceArrangement(2, {row({1, 2})}));
  CHECK(l.size() == 2);
  CHECK(l.dim(l.top()) == 1);
}

TEST_CASE("arrangement validation") {
  CHECK_THROWS_AS(SubspaceArrangement(2, {row({0, 0})}), ValidationError);
  CHECK_THROWS_AS(SubspaceArrangement(2, {row({1, 1}), row({2, 2})}), ValidationError);
}

TEST_CASE("k-equal arrangement in four points is the lattice Π_{4,3}") {
  auto l = intersection_lattice(kequal_arrangement(4, 3));
  auto p = kequal_lattice(4, 3);
  CHECK(l.size() == 6);
  CHECK(l.atoms().size() == 4);
  for (Element a : l.atoms()) CHECK(l.dim(a) == 2);
  CHECK(l.dim(l.top()) == 3);
  CHECK(p.size() == l.size());
  CHECK(p.dims() == l.dims());
}

TEST_CASE("joins and meets") {
  auto l = kequal_lattice(4, 3);
  const Element a = find_partition(l, {{1, 2, 3}, {4}});
  const Element b = find_partition(l, {{1, 2, 4}, {3}});
  CHECK(l.join(a, a) == a);
  CHECK(l.join(a, b) == l.top());
  CHECK(l.meet(a, b) == l.bottom());
  CHECK(l.join(l.bottom(), a) == a);
}

TEST_CASE("k-equal lattice sizes match a counting recurrence") {
  for (int n = 3; n <= 7; ++n)
    for (int k = 2; k <= n; ++k) CHECK(static_cast<long>(kequal_lattice(n, k).size()) == kequal_count(n, k));
  CHECK_THROWS_AS(kequal_lattice(3, 4), ValidationError);
}

TEST_CASE("intervals") {
  auto l = kequal_lattice(4, 3);
  auto whole = interval(l, l.bottom(), l.top());
  CHECK(whole.size() == l.size());
  CHECK(whole.dims() == l.dims());
  auto atom = l.atoms().front();
  auto chain = interval(l, l.bottom(), atom);
  CHECK(chain.size() == 2);
  CHECK_THROWS_AS(interval(l, atom, l.atoms().back()), ValidationError);

  // above 123|4|5|6 the merged block may absorb any subset of {4,5,6}, or
  // 456 forms its own block: 1 + 3 + 3 + 1 + 1 elements
  auto big = kequal_lattice(6, 3);
  const Element a = find_partition(big, {{1, 2, 3}, {4}, {5}, {6}});
  auto upper = interval(big, a, big.top());
  CHECK(upper.size() == 9);
  // labels are unshifted
  std::vector<int> ref;
  for (Element x = 0; x < static_cast<Element>(big.size()); ++x)
    if (big.leq(a, x)) ref.push_back(big.dim(x));
  std::vector<int> got = upper.dims();
  std::sort(ref.begin(), ref.end());
  std::sort(got.begin(), got.end());
  CHECK(got == ref);
  CHECK(upper.dim(upper.bottom()) == big.dim(a));
}

TEST_CASE("sublattices L_{A,B}") {
  auto l = kequal_lattice(6, 3);
  const Element a = find_partition(l, {{1, 2, 3}, {4}, {5}, {6}});
  const Element b = find_partition(l, {{4, 5, 6}, {1}, {2}, {3}});
  auto s = sublattice_ab(l, a, b);
  CHECK(s.size() == 4);
  CHECK(s.origin(s.top()) == l.join(a, b));
  CHECK(sublattice_ab(l, a, a).size() == 2);
  CHECK_THROWS_AS(sublattice_ab(l, l.bottom(), a), ValidationError);
}

TEST_CASE("geometric lattices and rank functions") {
  CHECK(is_geometric(builtin_lattice("boolean:3")).has_value());
  CHECK(is_geometric(builtin_lattice("braid:4")).has_value());
  CHECK_FALSE(is_geometric(kequal_lattice(6, 3)).has_value());
  auto rk = is_geometric(builtin_lattice("braid:4"));
  auto l = builtin_lattice("braid:4");
  CHECK((*rk)[l.top()] == 3);
}

TEST_CASE("Möbius function agrees with the recursive definition") {
  for (const char* name : {"boolean:3", "braid:4", "kequal:5:3", "kequal:6:3"}) {
    auto l = builtin_lattice(name);
    for (Element a = 0; a < static_cast<Element>(l.size()); ++a)
      CHECK(moebius(l, l.bottom(), a) == oracle::moebius_from_bottom(l, a));
  }
  auto b4 = builtin_lattice("braid:4");
  CHECK(moebius(b4, b4.bottom(), b4.top()) == -6);  // (−1)^{n−1}(n−1)!
}

TEST_CASE("abstract input validation") {
  CHECK_THROWS_AS(LabeledLattice::from_pairs({0, 2, 1}, {{0, 1}, {1, 2}}), ValidationError);
  CHECK_THROWS_AS(LabeledLattice::from_pairs({1, 2}, {{0, 1}}), ValidationError);
  // two maximal elements: no top
  CHECK_THROWS_AS(LabeledLattice::from_pairs({0, 1, 1}, {{0, 1}, {0, 2}}), ValidationError);
  auto l = lattice_from_json(nlohmann::json::parse(R"({"lattice": {"dims": [0, 1, 1, 3], "leq_pairs": [[0,1],[0,2],[1,3],[2,3]]}})"));
  CHECK(l.abstract_input());
  CHECK(l.size() == 4);
}

TEST_CASE("lattice JSON round trip") {
  for (const char* name : {"boolean:2", "kequal:5:3", "braid:4"}) {
    auto l = builtin_lattice(name);
    auto back = lattice_from_json(lattice_to_json(l));
    CHECK(back.size() == l.size());
    CHECK(back.dims() == l.dims());
    for (Element a = 0; a < static_cast<Element>(l.size()); ++a)
      for (Element b = 0; b < static_cast<Element>(l.size()); ++b) CHECK(back.leq(a, b) == l.leq(a, b));
  }
}

TEST_CASE("random union-closed families are lattices with consistent joins") {
  std::mt19937 rng(2024);
  for (int t = 0; t < 100; ++t) {
    auto r = oracle::random_union_closed(rng, 10, false);
    auto l = r.build();
    for (Element a = 0; a < static_cast<Element>(l.size()); ++a)
      for (Element b = 0; b < static_cast<Element>(l.size()); ++b)
        CHECK(r.sets[l.join(a, b)] == (r.sets[a] | r.sets[b]));
  }
}

TEST_CASE("builtins") {
  CHECK(builtin_lattice("oneline").size() == 2);
  CHECK(builtin_lattice("boolean:3").size() == 8);
  CHECK(builtin_lattice("braid:4").size() == 15);
  CHECK_THROWS_AS(builtin_lattice("nonsense"), ValidationError);
  CHECK_THROWS_AS(builtin_lattice("kequal:3"), ValidationError);
}
