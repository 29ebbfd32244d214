#include <doctest.h>

#include "arrcoh/dcp_model.hpp"
#include "arrcoh/lattice_io.hpp"
#include "oracles.hpp"

using namespace arrcoh;

namespace {

std::vector<LabeledLattice> desk_corpus() {
  std::vector<LabeledLattice> out;
  for (const auto& s : oracle::small_shapes())
    for (auto& l : oracle::labelings(s, 3)) out.push_back(std::move(l));
  return out;
}

void require_report(const LabeledLattice& l, int d) {
  auto rep = dcp_check(l, d);
  for (const auto& c : rep.checks) {
    INFO(c.name << ": " << c.detail);
    CHECK(c.ok);
  }
  auto ref = oracle::gm_betti(l);
  ref.resize(std::max<std::size_t>(ref.size(), d), 0);
  for (int q = 0; q < d; ++q) CHECK(rep.m_cohomology[q] == ref[q]);
  CHECK(rep.slice_dims == rep.basic_counts);
}

}  // namespace

TEST_CASE("one subspace: M is spanned by 1 and e_A") {
  auto l = builtin_lattice("oneline");
  DcpModel m(l, 3);
  CHECK(m.slice_dim(0) == 1);
  CHECK(m.slice_dim(1) == 1);
  CHECK(m.slice_dim(2) == 0);
  CHECK(m.cohomology_dim(0) == 1);
  CHECK(m.cohomology_dim(1) == 1);
}

TEST_CASE("relation generators include sigma_B^dim B") {
  auto l = builtin_lattice("boolean:2");
  auto gens = relation_generators(l, 4);
  bool found = false;
  for (const auto& g : gens)
    if (g.x1.empty() && g.x2.empty() && g.b == l.top() && g.exponent == 2) found = true;
  CHECK(found);
}

TEST_CASE("free algebra signs: e_A e_B = -e_B e_A and d e_A = c_A") {
  auto l = builtin_lattice("boolean:2");
  DcpModel m(l, 3);
  const Element a = l.atoms()[0], b = l.atoms()[1];
  auto ab = m.multiply(m.e(a), m.e(b));
  auto ba = m.multiply(m.e(b), m.e(a));
  for (const auto& [mono, v] : ab) CHECK(ba.at(mono) == -v);
  CHECK(m.differential(m.e(a)) == m.c(a));
  CHECK(m.differential(m.c(a)).empty());
}

TEST_CASE("homotopy h on a non-critical monomial") {
  auto l = builtin_lattice("boolean:2");
  // σ_V^1 with the flag (V): gap 2, m = 1 < 2, not in T, not critical
  BasicMonomial b{{l.top()}, {false}, {1}};
  CHECK_FALSE(is_critical(l, b));
  auto h = homotopy_h(l, b);
  REQUIRE(h.size() == 1);
  CHECK(h[0].first.in_t[0]);
  CHECK(h[0].first.m[0] == 0);
  CHECK_THROWS_AS(homotopy_h(l, critical_basic(l, {l.top()})), ValidationError);
}

TEST_CASE("desk-scale DCP checks on lattices with at most five elements") {
  for (const auto& l : desk_corpus()) require_report(l, 4);
}

TEST_CASE("DCP checks on data files") {
  require_report(builtin_lattice("boolean:2"), 4);
  require_report(builtin_lattice("braid:3"), 4);
}

TEST_CASE("truncation degree validation") {
  CHECK_THROWS_AS(dcp_check(builtin_lattice("oneline"), 1), ValidationError);
}
