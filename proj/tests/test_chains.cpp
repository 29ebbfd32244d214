#include <doctest.h>

#include <random>

#include "arrcoh/chains.hpp"
#include "arrcoh/lattice_io.hpp"
#include "arrcoh/shuffle.hpp"
#include "oracles.hpp"

using namespace arrcoh;

namespace {

std::vector<std::size_t> trimmed(std::vector<std::size_t> b) {
  while (b.size() > 1 && b.back() == 0) b.pop_back();
  return b;
}

// Simplicial boundary of a chain of flags: Σ (−1)^i (delete the i-th element).
QChain boundary(const QChain& c) {
  QChain out;
  out.degree = c.degree - 1;
  for (const auto& [f, v] : c.terms)
    for (std::size_t i = 0; i < f.size(); ++i) {
      Flag g = f;
      g.erase(g.begin() + static_cast<long>(i));
      out.add(g, i % 2 ? -v : v);
    }
  return out;
}

QChain single(const Flag& f) {
  QChain c;
  c.degree = static_cast<int>(f.size()) - 1;
  c.add(f, 1);
  return c;
}

QChain product(const LabeledLattice& l, const QChain& x, Element a, const QChain& y, Element b) {
  QChain out;
  out.degree = x.degree + y.degree + 2;
  for (const auto& [f, v] : x.terms)
    for (const auto& [g, w] : y.terms) out.add(shuffle_flag_product(l, f, a, g, b), v * w);
  return out;
}

std::vector<Flag> flags_below(const LabeledLattice& l, Element a) {
  std::vector<Flag> out{Flag{}};
  auto pts = l.open_interval(l.bottom(), a);
  for (std::size_t i = 0; i < out.size(); ++i)
    for (Element x : pts)
      if (out[i].empty() || l.less(out[i].back(), x)) {
        Flag g = out[i];
        g.push_back(x);
        out.push_back(g);
      }
  return out;
}

std::vector<LabeledLattice> small_corpus() {
  std::vector<LabeledLattice> out;
  for (const char* n : {"oneline", "boolean:2", "boolean:3", "braid:3", "braid:4", "kequal:4:3", "kequal:5:3"})
    out.push_back(builtin_lattice(n));
  std::mt19937 rng(99);
  for (int i = 0; i < 40; ++i) out.push_back(oracle::random_union_closed(rng, 8, i % 2 == 0).build());
  return out;
}

}  // namespace

TEST_CASE("shuffle enumeration: count and signs against permutation parity") {
  for (int p = 0; p <= 4; ++p)
    for (int q = 0; q <= 4; ++q) {
      long count = 0;
      for_each_shuffle(p, q, [&](const std::vector<bool>& word, int sign) {
        ++count;
        std::vector<int> perm;
        int i = 0, j = p;
        for (bool second : word) perm.push_back(second ? j++ : i++);
        CHECK(sign == (oracle::parity(perm) ? -1 : 1));
      });
      CHECK(count == oracle::binomial(p + q, p));
    }
}

TEST_CASE("flag complex homology agrees with brute-force order complexes") {
  for (const auto& l : small_corpus())
    for (Element a = 1; a < static_cast<Element>(l.size()); ++a)
      CHECK(trimmed(betti_numbers(lower_interval_flag_complex(l, a))) ==
            trimmed(oracle::order_complex_betti(oracle::open_lower_interval(l, a))));
}

TEST_CASE("simplicial complex of a hollow triangle") {
  auto c = simplicial_chain_complex({{0}, {1}, {2}, {0, 1}, {0, 2}, {1, 2}});
  CHECK(trimmed(betti_numbers(c)) == std::vector<std::size_t>{0, 0, 1});
  Homology h(c, 1);
  REQUIRE(h.betti() == 1);
  CHECK(h.is_cycle(h.cycle_representatives()[0]));
  QChain z;
  z.degree = 1;
  z.add({0, 1}, 1);
  z.add({1, 2}, 1);
  z.add({0, 2}, -1);
  auto coords = h.reduce(z);
  CHECK(coords.size() == 1);
  CHECK(coords[0] != 0);
  QChain notcycle;
  notcycle.degree = 1;
  notcycle.add({0, 1}, 1);
  CHECK_THROWS_AS(h.reduce(notcycle), ValidationError);
}

TEST_CASE("empty complex has reduced homology in degree -1") {
  auto l = builtin_lattice("oneline");
  auto c = lower_interval_flag_complex(l, l.top());
  CHECK(trimmed(betti_numbers(c)) == std::vector<std::size_t>{1});
}

TEST_CASE("atomic complex and flag complex have the same homology") {
  for (const auto& l : small_corpus()) {
    if (!l.is_atomic()) continue;
    auto atomic = atomic_complex(l);
    auto flags = lower_interval_flag_complex(l, l.top());
    CHECK(trimmed(betti_numbers(atomic)) == trimmed(betti_numbers(flags)));
  }
}

TEST_CASE("atoms_to_flags maps cycles to cycles and is injective on homology") {
  for (const auto& l : small_corpus()) {
    if (!l.is_atomic() || l.atoms().size() > 8) continue;
    auto atomic = atomic_complex(l);
    auto flags = lower_interval_flag_complex(l, l.top());
    for (int p = -1; p <= atomic.max_degree(); ++p) {
      Homology ha(atomic, p);
      if (p > flags.max_degree()) {
        CHECK(ha.betti() == 0);
        continue;
      }
      Homology hf(flags, p);
      EchelonBasis images;
      for (const auto& z : ha.cycle_representatives()) {
        QChain mapped;
        mapped.degree = p;
        for (const auto& [s, v] : z.terms) mapped.add(atoms_to_flags(l, s), v);
        REQUIRE(hf.is_cycle(mapped));
        images.insert(QVector::from_dense(hf.reduce(mapped)));
      }
      CHECK(images.rank() == ha.betti());
      CHECK(hf.betti() == ha.betti());
    }
  }
}

TEST_CASE("atoms_to_flags on two atoms") {
  auto l = builtin_lattice("boolean:2");
  const Element a = l.atoms()[0], b = l.atoms()[1];
  auto c = atoms_to_flags(l, {a, b});
  CHECK(c.terms.size() == 2);
  CHECK(c.terms.at({a, l.top()}) == 1);
  CHECK(c.terms.at({b, l.top()}) == -1);
}

TEST_CASE("shuffle product examples") {
  auto l = builtin_lattice("boolean:2");
  const Element a = l.atoms()[0], b = l.atoms()[1];
  auto c = shuffle_flag_product(l, {}, a, {}, b);
  CHECK(c.terms.size() == 2);
  CHECK(c.terms.at({a}) == 1);
  CHECK(c.terms.at({b}) == -1);
  CHECK(shuffle_flag_product(l, {}, a, {}, a).is_zero());

  // (A1) below A, B an atom, dims adding: three 2-flags
  auto b3 = builtin_lattice("boolean:3");
  const Element x = b3.atoms()[0], y = b3.atoms()[1], z = b3.atoms()[2];
  const Element xy = b3.join(x, y);
  auto d = shuffle_flag_product(b3, {x}, xy, {}, z);
  CHECK(d.terms.size() == 3);
  for (const auto& [f, v] : d.terms) CHECK(f.size() == 2);
}

TEST_CASE("shuffle product satisfies the Leibniz rule and graded anticommutativity") {
  std::size_t tested = 0;
  for (const auto& l : small_corpus()) {
    if (l.size() > 8 || !oracle::subadditive(l)) continue;
    ++tested;
    for (Element a = 1; a < static_cast<Element>(l.size()); ++a)
      for (Element b = 1; b < static_cast<Element>(l.size()); ++b) {
        if (l.dim(l.join(a, b)) != l.dim(a) + l.dim(b)) continue;
        for (const auto& fa : flags_below(l, a))
          for (const auto& fb : flags_below(l, b)) {
            const QChain x = single(fa), y = single(fb);
            QChain lhs = boundary(product(l, x, a, y, b));
            QChain rhs = product(l, boundary(x), a, y, b);
            // x·y sits in CM degree parity |fa| + 1 (the top is appended)
            rhs.add(product(l, x, a, boundary(y), b), (fa.size() + 1) % 2 ? -1 : 1);
            lhs.add(rhs, -1);
            CHECK(lhs.is_zero());

            QChain sym = product(l, x, a, y, b);
            sym.add(product(l, y, b, x, a), ((fa.size() + 1) * (fb.size() + 1)) % 2 ? 1 : -1);
            CHECK(sym.is_zero());
          }
      }
  }
  CHECK(tested >= 10);
}

TEST_CASE("boundary of a constructed complex squares to zero") {
  auto l = builtin_lattice("braid:4");
  auto c = lower_interval_flag_complex(l, l.top());
  for (int p = 0; p <= c.max_degree(); ++p)
    for (const auto& label : c.basis(p)) {
      QChain x;
      x.degree = p;
      x.add(label, 1);
      CHECK(c.apply_boundary(c.apply_boundary(x)).is_zero());
    }
}
