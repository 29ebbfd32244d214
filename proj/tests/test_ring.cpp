#include <doctest.h>

#include <random>

#include "arrcoh/lattice_io.hpp"
#include "arrcoh/verify.hpp"
#include "oracles.hpp"

using namespace arrcoh;

namespace {

std::vector<std::size_t> moebius_betti(const LabeledLattice& l) {
  auto rk = is_geometric(l);
  REQUIRE(rk.has_value());
  std::vector<std::size_t> out(std::max(1, 2 * l.dim(l.top())), 0);
  out[0] = 1;
  for (Element a = 1; a < static_cast<Element>(l.size()); ++a)
    out.at(2 * l.dim(a) - (*rk)[a]) += static_cast<std::size_t>(std::labs(oracle::moebius_from_bottom(l, a)));
  return out;
}

}  // namespace

TEST_CASE("Betti numbers of small arrangements") {
  CHECK(betti_cm(builtin_lattice("oneline")) == std::vector<std::size_t>{1, 1});
  auto b3 = betti_cm(builtin_lattice("boolean:3"));
  CHECK(std::vector<std::size_t>(b3.begin(), b3.begin() + 4) == std::vector<std::size_t>{1, 3, 3, 1});
  auto pi3 = betti_cm(builtin_lattice("braid:3"));
  CHECK(std::vector<std::size_t>(pi3.begin(), pi3.begin() + 3) == std::vector<std::size_t>{1, 3, 2});
  auto k43 = betti_cm(builtin_lattice("kequal:4:3"));
  CHECK(k43 == std::vector<std::size_t>{1, 0, 0, 4, 3, 0});
}

TEST_CASE("the k-equal lattice Π_{6,3}") {
  auto b = betti_cm(builtin_lattice("kequal:6:3"));
  CHECK(b == std::vector<std::size_t>{1, 0, 0, 20, 45, 36, 20, 10, 0, 0});
}

TEST_CASE("GM and CM agree with the brute-force oracle on random lattices") {
  std::mt19937 rng(4242);
  for (int t = 0; t < 120; ++t) {
    auto l = oracle::random_union_closed(rng, 10, t % 3 == 0).build();
    auto ref = oracle::gm_betti(l);
    CHECK(betti_gm(l) == ref);
    CHECK(betti_cm(l) == ref);
  }
}

TEST_CASE("geometric lattices: Betti numbers from the Möbius function") {
  for (const char* n : {"boolean:2", "boolean:3", "boolean:4", "braid:3", "braid:4", "braid:5"}) {
    auto l = builtin_lattice(n);
    CHECK(betti_cm(l) == moebius_betti(l));
  }
}

TEST_CASE("torus ring is an exterior algebra on two generators") {
  GradedRing r(builtin_lattice("boolean:2"));
  CHECK(r.betti() == std::vector<std::size_t>{1, 2, 1, 0});
  REQUIRE(r.rank() == 4);
  // x1 x2 = −x2 x1 ≠ 0, x_i² = 0
  auto p12 = r.product(1, 2), p21 = r.product(2, 1);
  CHECK_FALSE(p12.is_zero());
  p21.scale(-1);
  CHECK(p12 == p21);
  CHECK(r.product(1, 1).is_zero());
  CHECK(r.product(2, 2).is_zero());
  CHECK(r.product(0, 3) == QVector::unit(3));
}

TEST_CASE("structure constants respect the grading and the dimension condition") {
  for (const char* n : {"boolean:3", "braid:4", "kequal:5:3"}) {
    auto l = builtin_lattice(n);
    GradedRing r(l);
    for (const auto& [ij, v] : r.products()) {
      const Element a = r.element_of(ij.first), b = r.element_of(ij.second);
      CHECK(l.dim(l.join(a, b)) == l.dim(a) + l.dim(b));
      for (const auto& [k, x] : v.entries()) {
        CHECK(r.degree_of(k) == r.degree_of(ij.first) + r.degree_of(ij.second));
        CHECK(r.element_of(k) == l.join(a, b));
      }
    }
    for (const auto& c : check_ring(r)) {
      INFO(n << " " << c.name << ": " << c.detail);
      CHECK(c.ok);
    }
  }
}

TEST_CASE("products in the k-equal rings") {
  GradedRing r4(builtin_lattice("kequal:4:3"));
  CHECK(r4.products().empty());  // no two disjoint 3-blocks in 4 points

  GradedRing r6(builtin_lattice("kequal:6:3"));
  auto images = product_image_ranks(r6);
  CHECK(images.at({3, 3}) == 10);
  CHECK(images.at({3, 4}) == 10);
  CHECK(images.size() == 2);
}

TEST_CASE("ring reduce recovers basis coordinates") {
  GradedRing r(builtin_lattice("braid:4"));
  for (std::size_t i = 0; i < r.rank(); ++i) CHECK(r.reduce(r.representative(i)) == QVector::unit(i));
  CMElement bogus;
  auto l = builtin_lattice("braid:4");
  bogus.add({l.atoms()[0], l.top()}, 1);  // not a cocycle
  CHECK_THROWS(r.reduce(bogus));
}

TEST_CASE("integral experiment: free ranks equal rational Betti numbers") {
  for (const char* n : {"boolean:2", "braid:4", "kequal:4:3"}) {
    auto l = builtin_lattice(n);
    auto integ = integral_betti_experimental(l);
    auto b = betti_cm(l);
    for (std::size_t q = 0; q < b.size(); ++q) CHECK(integ[q].free_rank == b[q]);
  }
  auto k43 = integral_betti_experimental(builtin_lattice("kequal:4:3"));
  for (const auto& d : k43) CHECK(d.torsion.empty());
}

TEST_CASE("ring JSON lists components, basis and products") {
  GradedRing r(builtin_lattice("boolean:2"));
  auto j = ring_to_json(r);
  CHECK(j["betti"]["1"] == 2);
  CHECK(j["basis"].size() == 4);
  CHECK(j["products"].size() == 2);
  CHECK(j["components"].size() == 3);
}
