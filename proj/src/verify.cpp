#include "arrcoh/verify.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "arrcoh/dcp_model.hpp"

namespace arrcoh {

namespace {

std::vector<Flag> all_critical(const LabeledLattice& l) {
  std::vector<Flag> out;
  for (Element a = 1; a < static_cast<Element>(l.size()); ++a) {
    auto f = flags_with_top(l, a);
    out.insert(out.end(), f.begin(), f.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

CMElement single(const Flag& t) {
  CMElement x;
  x.add(t, 1);
  return x;
}

std::string flag_text(const LabeledLattice& l, const Flag& f) {
  std::string s = "(";
  for (std::size_t i = 0; i < f.size(); ++i) s += (i ? "<" : "") + l.element_name(f[i]);
  return s + ")";
}

Check named(std::string name) {
  Check c;
  c.name = std::move(name);
  return c;
}

void record(Check& c, bool ok, const std::string& what) {
  ++c.cases;
  if (!ok && c.ok) {
    c.ok = false;
    c.detail = what;
  }
}

bool dims_add(const LabeledLattice& l, Element a, Element b) { return l.dim(l.join(a, b)) == l.dim(a) + l.dim(b); }

// Calls fn on every index pair (exhaustive) or on sampled pairs whose tops
// satisfy the dimension condition; other pairs multiply to zero on both sides
// of every identity checked here.
template <class Fn>
void sweep_pairs(const LabeledLattice& l, const std::vector<Flag>& flags, bool exhaustive, std::size_t samples,
                 std::mt19937_64& rng, Fn fn) {
  if (exhaustive) {
    for (std::size_t i = 0; i < flags.size(); ++i)
      for (std::size_t j = 0; j < flags.size(); ++j) fn(i, j);
    return;
  }
  std::map<Element, std::vector<std::size_t>> by_top;
  for (std::size_t i = 0; i < flags.size(); ++i) by_top[flags[i].back()].push_back(i);
  std::vector<std::pair<Element, Element>> tops;
  for (const auto& [a, fa] : by_top)
    for (const auto& [b, fb] : by_top)
      if (dims_add(l, a, b)) tops.emplace_back(a, b);
  if (tops.empty()) return;
  auto pick = [&](std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); };
  for (std::size_t s = 0; s < samples; ++s) {
    const auto& [a, b] = tops[pick(tops.size())];
    const auto &fa = by_top[a], &fb = by_top[b];
    fn(fa[pick(fa.size())], fb[pick(fb.size())]);
  }
}

}  // namespace

bool VerifyReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.ok; });
}

std::vector<Check> check_cm_dga(const LabeledLattice& l, const VerifyOptions& opt) {
  const auto flags = all_critical(l);
  const bool exhaustive = l.size() <= opt.exhaustive_up_to;
  std::mt19937_64 rng(opt.seed);
  Check d2 = named("cm d^2 = 0"), leibniz = named("cm Leibniz"), comm = named("cm graded commutativity"),
        assoc = named("cm associativity");

  for (const auto& t : flags) record(d2, cm_differential(l, cm_differential(l, t)).is_zero(), flag_text(l, t));

  sweep_pairs(l, flags, exhaustive, opt.samples, rng, [&](std::size_t i, std::size_t j) {
    const Flag &x = flags[i], &y = flags[j];
    const int qx = cm_degree(l, x), qy = cm_degree(l, y);
    const auto xy = cm_product(l, x, y);
    CMElement rhs = cm_element_product(l, cm_differential(l, x), single(y));
    rhs.add(cm_element_product(l, single(x), cm_differential(l, y)), qx % 2 ? -1 : 1);
    CMElement diff = cm_differential(l, xy);
    diff.add(rhs, -1);
    record(leibniz, diff.is_zero(), flag_text(l, x) + " " + flag_text(l, y));

    CMElement sym = xy;
    sym.add(cm_product(l, y, x), (qx * qy) % 2 ? 1 : -1);
    record(comm, sym.is_zero(), flag_text(l, x) + " " + flag_text(l, y));
  });

  // triples: only chains where the first product is nonzero can fail
  auto triple = [&](std::size_t i, std::size_t j, std::size_t k) {
    const auto xy = cm_product(l, flags[i], flags[j]);
    const auto yz = cm_product(l, flags[j], flags[k]);
    CMElement diff = cm_element_product(l, xy, single(flags[k]));
    diff.add(cm_element_product(l, single(flags[i]), yz), -1);
    record(assoc, diff.is_zero(), flag_text(l, flags[i]) + " " + flag_text(l, flags[j]) + " " + flag_text(l, flags[k]));
  };
  if (exhaustive) {
    for (std::size_t i = 0; i < flags.size(); ++i)
      for (std::size_t j = 0; j < flags.size(); ++j) {
        const Element a = flags[i].back(), b = flags[j].back();
        const bool ab = dims_add(l, a, b);
        for (std::size_t k = 0; k < flags.size(); ++k) {
          const Element c = flags[k].back();
          const bool bc = dims_add(l, b, c);
          if (!ab && !bc) continue;  // both sides vanish
          triple(i, j, k);
        }
      }
  } else {
    // triples built from a sampled nonzero pair and a third flag compatible with it
    std::mt19937_64 rng3(opt.seed + 2);
    std::vector<std::size_t> third;
    sweep_pairs(l, flags, false, opt.samples, rng, [&](std::size_t i, std::size_t j) {
      const Element ab = l.join(flags[i].back(), flags[j].back());
      third.clear();
      for (std::size_t k = 0; k < flags.size(); ++k)
        if (dims_add(l, ab, flags[k].back())) third.push_back(k);
      if (third.empty()) return;
      triple(i, j, third[std::uniform_int_distribution<std::size_t>(0, third.size() - 1)(rng3)]);
    });
  }
  return {d2, leibniz, comm, assoc};
}

Check check_shuffle_transport(const LabeledLattice& l, const VerifyOptions& opt) {
  const auto flags = all_critical(l);
  std::mt19937_64 rng(opt.seed + 1);
  Check c = named("shuffle transport");
  sweep_pairs(l, flags, l.size() <= opt.exhaustive_up_to, opt.samples, rng, [&](std::size_t i, std::size_t j) {
    const Flag &x = flags[i], &y = flags[j];
    const Element a = x.back(), b = y.back();
    if (!dims_add(l, a, b)) return;
    const auto via_cm = cm_product(l, x, y);
    const auto via_flags =
        shuffle_flag_product(l, Flag(x.begin(), x.end() - 1), a, Flag(y.begin(), y.end() - 1), b);
    CMElement lifted;
    for (const auto& [f, v] : via_flags.terms) {
      Flag t = f;
      t.push_back(l.join(a, b));
      lifted.add(t, v);
    }
    record(c, lifted == via_cm, flag_text(l, x) + " " + flag_text(l, y));
  });
  return c;
}

std::vector<Check> check_ring(const GradedRing& r) {
  Check comm = named("ring graded commutativity"), assoc = named("ring associativity");
  const std::size_t n = r.rank();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      QVector a = r.product(i, j), b = r.product(j, i);
      if ((r.degree_of(i) * r.degree_of(j)) % 2) b.scale(-1);
      record(comm, a == b, std::to_string(i) + "*" + std::to_string(j));
    }
  const int top_degree = static_cast<int>(r.betti().size()) - 1;
  for (std::size_t i = 1; i < n; ++i)
    for (std::size_t j = 1; j < n; ++j) {
      if (r.degree_of(i) + r.degree_of(j) > top_degree) continue;
      const QVector ij = r.product(i, j);
      for (std::size_t k = 1; k < n; ++k) {
        if (r.degree_of(i) + r.degree_of(j) + r.degree_of(k) > top_degree) continue;
        const QVector left = r.multiply(ij, QVector::unit(k));
        const QVector right = r.multiply(QVector::unit(i), r.product(j, k));
        record(assoc, left == right, std::to_string(i) + "*" + std::to_string(j) + "*" + std::to_string(k));
      }
    }
  return {comm, assoc};
}

VerifyReport verify_all(const LabeledLattice& l, const VerifyOptions& opt) {
  VerifyReport rep;
  // Subspace sums satisfy dim(A ∨ B) ≤ dim A + dim B; abstract labels may
  // not, and the Leibniz rule fails without it.
  Check sub = named("dim(A v B) <= dim A + dim B");
  for (Element a = 0; a < static_cast<Element>(l.size()); ++a)
    for (Element b = a + 1; b < static_cast<Element>(l.size()); ++b) {
      ++sub.cases;
      if (l.dim(l.join(a, b)) > l.dim(a) + l.dim(b))
        record(sub, false, l.element_name(a) + " v " + l.element_name(b) + " exceeds the sum of dims");
    }
  rep.checks.push_back(sub);
  auto dga = check_cm_dga(l, opt);
  rep.checks.insert(rep.checks.end(), dga.begin(), dga.end());
  rep.checks.push_back(check_shuffle_transport(l, opt));

  Check gm = named("GM = CM per component");
  const auto cm = component_dims_cm(l), gmd = component_dims_gm(l);
  record(gm, cm == gmd, "component dimensions differ");
  record(gm, betti_cm(l) == betti_gm(l), "Betti numbers differ");
  rep.checks.push_back(gm);

  GradedRing ring(l);
  Check rb = named("ring Betti = CM Betti");
  record(rb, ring.betti() == betti_cm(l), "ring basis size differs");
  rep.checks.push_back(rb);
  auto rc = check_ring(ring);
  rep.checks.insert(rep.checks.end(), rc.begin(), rc.end());

  if (opt.dcp_degree >= 2) {
    auto d = dcp_check(l, opt.dcp_degree);
    for (const auto& c : d.checks) rep.checks.push_back({"dcp: " + c.name, c.ok, 1, c.detail});
  }
  return rep;
}

nlohmann::json verify_to_json(const VerifyReport& r) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : r.checks)
    checks.push_back({{"name", c.name}, {"ok", c.ok}, {"cases", c.cases}, {"detail", c.detail}});
  return {{"checks", checks}, {"ok", r.ok()}};
}

LabeledLattice random_lattice(std::mt19937_64& rng, std::size_t max_elements, bool submodular) {
  if (max_elements < 2) throw ValidationError("random_lattice needs room for at least two elements");
  std::uniform_int_distribution<int> ground_size(1, 4);
  const int m = ground_size(rng);
  std::uniform_int_distribution<unsigned> subset(1, (1u << m) - 1);
  std::set<unsigned> family{0};
  const std::size_t target = std::uniform_int_distribution<std::size_t>(2, max_elements)(rng);
  for (int attempt = 0; attempt < 50 && family.size() < target; ++attempt) {
    std::set<unsigned> grown = family;
    const unsigned s = subset(rng);
    grown.insert(s);
    for (bool changed = true; changed;) {
      changed = false;
      for (unsigned x : std::vector<unsigned>(grown.begin(), grown.end()))
        for (unsigned y : std::vector<unsigned>(grown.begin(), grown.end()))
          if (grown.insert(x | y).second) changed = true;
    }
    if (grown.size() <= max_elements) family = std::move(grown);
  }
  std::vector<unsigned> sets(family.begin(), family.end());
  std::sort(sets.begin(), sets.end(), [](unsigned a, unsigned b) {
    return std::make_pair(__builtin_popcount(a), a) < std::make_pair(__builtin_popcount(b), b);
  });

  std::vector<int> dims(sets.size(), 0);
  std::vector<int> weight(m);
  std::uniform_int_distribution<int> w(1, 3);
  for (auto& x : weight) x = w(rng);
  for (std::size_t i = 1; i < sets.size(); ++i) {
    if (submodular) {
      for (int p = 0; p < m; ++p)
        if (sets[i] >> p & 1) dims[i] += weight[p];
    } else {
      int floor = 0;
      for (std::size_t j = 0; j < i; ++j)
        if ((sets[j] & sets[i]) == sets[j] && sets[j] != sets[i]) floor = std::max(floor, dims[j]);
      dims[i] = floor + w(rng);
    }
  }
  std::vector<std::pair<Element, Element>> pairs;
  for (std::size_t i = 0; i < sets.size(); ++i)
    for (std::size_t j = 0; j < sets.size(); ++j)
      if (i != j && (sets[i] & sets[j]) == sets[i]) pairs.emplace_back(static_cast<Element>(i), static_cast<Element>(j));
  return LabeledLattice::from_pairs(dims, pairs);
}

}  // namespace arrcoh
