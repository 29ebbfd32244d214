#include "arrcoh/presentations.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

namespace arrcoh {

namespace {

QVector dense_to_vector(const std::vector<Rational>& v) { return QVector::from_dense(v); }

std::size_t span_rank(const std::vector<QVector>& vs) {
  EchelonBasis b;
  for (const auto& v : vs) b.insert(v);
  return b.rank();
}

std::string atoms_name(const LabeledLattice& l, const AtomSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + l.element_name(s[i]);
  return out + "}";
}

long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Betti numbers of (0, u), entry p + 1 for degree p.
std::vector<std::size_t> interval_betti(const LabeledLattice& l, Element u) {
  return betti_numbers(lower_interval_flag_complex(l, u));
}

QVector ring_class(const GradedRing& ring, const LabeledLattice& l, const AtomSet& sigma) {
  auto z = zeta_cycle(l, sigma);
  if (!z) return {};
  return ring.reduce(flag_cycle_to_cm(*z, l.join_all(sigma)));
}

}  // namespace

bool is_independent(const LabeledLattice& l, const AtomSet& sigma) {
  const Element all = l.join_all(sigma);
  AtomSet rest;
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    rest.clear();
    for (std::size_t j = 0; j < sigma.size(); ++j)
      if (j != i) rest.push_back(sigma[j]);
    if (l.join_all(rest) == all) return false;
  }
  return true;
}

bool is_essential(const LabeledLattice& l, const AtomSet& sigma) { return l.join_all(sigma) == l.top(); }

std::vector<AtomSet> independent_sets(const LabeledLattice& l, const std::vector<Element>& atoms, std::size_t max_size) {
  std::vector<AtomSet> out;
  AtomSet cur;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    if (cur.size() == max_size) return;
    for (std::size_t i = start; i < atoms.size(); ++i) {
      cur.push_back(atoms[i]);
      if (is_independent(l, cur)) {
        out.push_back(cur);
        self(self, i + 1);
      }
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

std::optional<QChain> zeta_cycle(const LabeledLattice& l, const AtomSet& sigma) {
  const Element u = l.join_all(sigma);
  QChain out;
  out.degree = static_cast<int>(sigma.size()) - 2;
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    AtomSet face;
    for (std::size_t j = 0; j < sigma.size(); ++j)
      if (j != i) face.push_back(sigma[j]);
    if (l.join_all(face) == u) return std::nullopt;
    out.add(atoms_to_flags(l, face), (i + 1) % 2 ? Rational(-1) : Rational(1));
  }
  return out;
}

CMElement flag_cycle_to_cm(const QChain& c, Element u) {
  CMElement out;
  for (const auto& [f, v] : c.terms) {
    Flag t = f;
    t.push_back(u);
    out.add(t, v);
  }
  return out;
}

const Homology& ZetaEvaluator::homology(Element u, int p) {
  auto& slot = cache_[{u, p}];
  if (!slot) {
    auto cx = lower_interval_flag_complex(*l_, u);
    if (p > cx.max_degree()) throw InvariantError("zeta: degree beyond the interval complex");
    slot = std::make_unique<Homology>(cx, p);
  }
  return *slot;
}

ZetaClass ZetaEvaluator::zeta(const AtomSet& sigma) {
  ZetaClass z;
  z.sigma = sigma;
  z.ambient = l_->join_all(sigma);
  z.degree = static_cast<int>(sigma.size()) - 2;
  auto c = zeta_cycle(*l_, sigma);
  if (!c) {
    z.dependent = true;
    return z;
  }
  z.coords = dense_to_vector(homology(z.ambient, z.degree).reduce(*c));
  return z;
}

int rank_of(const LabeledLattice& l, const AtomSet& sigma) {
  if (!l.has_partitions()) throw ValidationError("rank_of requires a partition lattice");
  std::vector<std::vector<int>> blocks;
  for (Element a : sigma) {
    auto nb = l.partition(a).nontrivial_blocks();
    if (nb.size() != 1) throw ValidationError("rank_of: members must have one nontrivial block");
    blocks.push_back(nb.front());
  }
  const std::size_t m = blocks.size();
  if (m > 20) throw ValidationError("rank_of: set too large");
  int best = 0;
  for (unsigned long mask = 1; mask < (1UL << m); ++mask) {
    std::set<int> seen;
    bool ok = true;
    int count = 0;
    for (std::size_t i = 0; i < m && ok; ++i) {
      if (!(mask >> i & 1)) continue;
      ++count;
      for (int x : blocks[i])
        if (!seen.insert(x).second) ok = false;
    }
    if (ok) best = std::max(best, count);
  }
  return best;
}

// ---------------------------------------------------------------- geometric

bool PresentationReport::ok() const {
  return failed_relations == 0 && independence_agrees && betti_presentation == betti_moebius &&
         betti_presentation == betti_ring;
}

PresentationReport geometric_presentation(const LabeledLattice& l, std::size_t max_atoms) {
  auto rk = is_geometric(l);
  if (!rk) throw ValidationError("present geometric: lattice is not geometric");
  PresentationReport rep;
  GradedRing ring(l);
  const auto& atoms = l.atoms();

  auto sets = independent_sets(l, atoms, max_atoms);
  std::map<AtomSet, QVector> zeta;
  std::map<Element, std::vector<AtomSet>> by_join;
  for (const auto& s : sets) {
    zeta[s] = ring_class(ring, l, s);
    by_join[l.join_all(s)].push_back(s);
    if ((*rk)[l.join_all(s)] != static_cast<int>(s.size())) rep.independence_agrees = false;
  }
  // rank independence, counted separately
  std::size_t rank_indep = 0;
  {
    AtomSet cur;
    auto rec = [&](auto&& self, std::size_t start) -> void {
      if (cur.size() == max_atoms) return;
      for (std::size_t i = start; i < atoms.size(); ++i) {
        cur.push_back(atoms[i]);
        if ((*rk)[l.join_all(cur)] == static_cast<int>(cur.size())) {
          ++rank_indep;
          self(self, i + 1);
        }
        cur.pop_back();
      }
    };
    rec(rec, 0);
  }
  if (rank_indep != sets.size()) rep.independence_agrees = false;
  rep.generators = sets.size();

  auto fail = [&](const std::string& what) {
    ++rep.failed_relations;
    if (rep.failures.size() < 10) rep.failures.push_back(what);
  };
  auto class_of = [&](const AtomSet& s) -> QVector {
    auto it = zeta.find(s);
    return it == zeta.end() ? QVector() : it->second;
  };

  const std::size_t span = static_cast<std::size_t>(std::max(1, 2 * l.dim(l.top())));
  rep.betti_presentation.assign(span, 0);
  rep.betti_moebius.assign(span, 0);
  rep.betti_presentation[0] = rep.betti_moebius[0] = 1;

  for (Element a = 1; a < static_cast<Element>(l.size()); ++a) {
    const int p = (*rk)[a];
    const int q = 2 * l.dim(a) - p;
    rep.betti_moebius.at(q) += static_cast<std::size_t>(std::labs(moebius(l, l.bottom(), a)));

    const auto& gens = by_join[a];
    std::map<AtomSet, std::size_t> gidx;
    for (std::size_t i = 0; i < gens.size(); ++i) gidx[gens[i]] = i;
    EchelonBasis rel;
    auto below = l.atoms_below(a);
    AtomSet tau;
    auto rec = [&](auto&& self, std::size_t start) -> void {
      if (static_cast<int>(tau.size()) == p + 1) {
        ++rep.linear_relations;
        QVector value, row;
        for (std::size_t j = 0; j < tau.size(); ++j) {
          AtomSet face;
          for (std::size_t i = 0; i < tau.size(); ++i)
            if (i != j) face.push_back(tau[i]);
          const Rational sign = (j + 1) % 2 ? Rational(-1) : Rational(1);
          value.add_scaled(class_of(face), sign);
          auto it = gidx.find(face);
          if (it != gidx.end()) row.add_scaled(QVector::unit(it->second), sign);
        }
        if (!value.is_zero()) fail("linear relation " + atoms_name(l, tau));
        rel.insert(row);
        return;
      }
      for (std::size_t i = start; i < below.size(); ++i) {
        tau.push_back(below[i]);
        self(self, i + 1);
        tau.pop_back();
      }
    };
    rec(rec, 0);
    rep.betti_presentation.at(q) += gens.size() - rel.rank();
  }

  for (const auto& s : sets)
    for (const auto& t : sets) {
      ++rep.multiplicative_relations;
      const Element u = l.join_all(s), v = l.join_all(t);
      QVector expected;
      if (l.dim(l.join(u, v)) == l.dim(u) + l.dim(v)) {
        AtomSet both = s;
        both.insert(both.end(), t.begin(), t.end());
        std::sort(both.begin(), both.end());
        if (std::adjacent_find(both.begin(), both.end()) == both.end()) {
          std::size_t inversions = 0;
          for (Element x : s)
            for (Element y : t)
              if (y < x) ++inversions;
          expected = class_of(both);
          if (inversions % 2) expected.scale(-1);
        }
      }
      if (!(ring.multiply(zeta[s], zeta[t]) == expected))
        fail("product " + atoms_name(l, s) + "*" + atoms_name(l, t));
    }

  rep.betti_ring = ring.betti();
  return rep;
}

nlohmann::json presentation_to_json(const PresentationReport& r) {
  return {{"generators", r.generators},
          {"linear_relations", r.linear_relations},
          {"multiplicative_relations", r.multiplicative_relations},
          {"betti_presentation", betti_to_json(r.betti_presentation)},
          {"betti_moebius", betti_to_json(r.betti_moebius)},
          {"betti_ring", betti_to_json(r.betti_ring)},
          {"independence_agrees", r.independence_agrees},
          {"failed_relations", r.failed_relations},
          {"failures", r.failures},
          {"ok", r.ok()}};
}

// ---------------------------------------------------------------- k-equal

bool KequalReport::spanning_ok() const {
  return components_spanned == components_total &&
         std::all_of(spans.begin(), spans.end(), [](const Span& s) { return s.span == s.betti; });
}

bool KequalReport::rank1_ok() const {
  return std::all_of(rank1.begin(), rank1.end(),
                     [](const Rank1& r) { return r.basis_rank == r.expected && r.rank1_span == r.expected; });
}

bool KequalReport::tensor_ok() const {
  return std::all_of(tensor.begin(), tensor.end(), [](const Tensor& t) { return t.direct == t.product; });
}

bool KequalReport::xi_ok() const {
  return std::all_of(xi.begin(), xi.end(), [](const Xi& x) { return x.image == x.betti; });
}

bool KequalReport::ok() const {
  return nonvanishing_ok() && vanishing_ok() && spanning_ok() && generation_ok() && rank1_ok() && tensor_ok() &&
         xi_ok();
}

namespace {

void essential_spans(int n, int k, int ell, std::size_t cap, const LabeledLattice* given, KequalReport& rep) {
  std::optional<LabeledLattice> own;
  if (!given) own.emplace(kequal_lattice(n, k, ell));
  const LabeledLattice& l = given ? *given : *own;
  ZetaEvaluator ev(l);
  std::map<int, EchelonBasis> spans;
  for (const auto& s : independent_sets(l, l.atoms(), cap)) {
    if (!is_essential(l, s)) continue;
    auto z = ev.zeta(s);
    if (!z.dependent) spans[z.degree].insert(z.coords);
  }
  auto b = interval_betti(l, l.top());
  for (std::size_t i = 0; i < b.size(); ++i) {
    const int p = static_cast<int>(i) - 1;
    const std::size_t sp = spans.count(p) ? spans[p].rank() : 0;
    if (b[i] || sp) rep.spans.push_back({ell, p, sp, b[i]});
  }
}

}  // namespace

KequalReport kequal_analysis(int n, int k, const KequalOptions& opt) {
  if (k < 3 || k > n) throw ValidationError("kequal: requires 3 <= k <= n");
  if (n > opt.max_n) throw ValidationError("kequal: n exceeds the configured maximum " + std::to_string(opt.max_n));
  KequalReport rep;
  rep.n = n;
  rep.k = k;
  const LabeledLattice l = kequal_lattice(n, k, 0);
  const Element top = l.top();

  std::map<Partition, Element> by_partition;
  for (Element a = 0; a < static_cast<Element>(l.size()); ++a) by_partition[l.partition(a)] = a;
  std::map<Element, std::vector<std::size_t>> ibetti;
  auto betti_of = [&](Element u) -> const std::vector<std::size_t>& {
    auto it = ibetti.find(u);
    if (it == ibetti.end()) it = ibetti.emplace(u, interval_betti(l, u)).first;
    return it->second;
  };

  // nonvanishing degrees of H̃(Π_{n,k})
  const auto& tb = betti_of(top);
  for (std::size_t i = 0; i < tb.size(); ++i)
    if (tb[i]) rep.nonvanishing_p.push_back(static_cast<int>(i) - 1);
  for (int t = n / k; t >= 1; --t) rep.expected_p.push_back(n - 3 - t * (k - 2));

  // ζ classes of all independent sets
  ZetaEvaluator ev(l);
  auto sets = independent_sets(l, l.atoms(), opt.max_atoms);
  rep.independent_sets = sets.size();
  std::map<std::pair<Element, int>, std::map<int, EchelonBasis>> by_rank;
  std::map<std::pair<Element, int>, EchelonBasis> total;
  std::map<Element, EchelonBasis> rank1_all;
  for (const auto& s : sets) {
    auto z = ev.zeta(s);
    const auto nb = l.partition(z.ambient).nontrivial_blocks();
    int n_sigma = 0;
    for (const auto& b : nb) n_sigma += static_cast<int>(b.size());
    const int r = rank_of(l, s);
    const int size = static_cast<int>(s.size());
    if (size != n_sigma - r * (k - 2) - static_cast<int>(nb.size())) {
      ++rep.violators;
      if (!z.is_zero()) ++rep.violators_nonzero;
    }
    if (z.is_zero()) continue;
    by_rank[{z.ambient, z.degree}][r].insert(z.coords);
    total[{z.ambient, z.degree}].insert(z.coords);
    if (r == 1) rank1_all[z.ambient].insert(z.coords);
  }

  std::map<std::tuple<int, int, int, int, int, int, int>, std::size_t> rows;
  for (Element u = 1; u < static_cast<Element>(l.size()); ++u) {
    const auto& b = betti_of(u);
    const auto nb = l.partition(u).nontrivial_blocks();
    int n_sigma = 0;
    for (const auto& blk : nb) n_sigma += static_cast<int>(blk.size());
    for (std::size_t i = 0; i < b.size(); ++i) {
      if (!b[i]) continue;
      const int p = static_cast<int>(i) - 1;
      ++rep.components_total;
      if (total.count({u, p}) && total[{u, p}].rank() == b[i]) ++rep.components_spanned;
      for (auto& [r, basis] : by_rank[{u, p}])
        rows[{l.dim(u), p + 2, p, r, static_cast<int>(nb.size()), n_sigma, 2 * l.dim(u) - p - 2}] += basis.rank();
    }
  }
  for (const auto& [key, d] : rows) {
    const auto& [du, size, p, r, s, ns, q] = key;
    rep.table.push_back({du, size, p, r, s, ns, q, d});
  }
  std::sort(rep.table.begin(), rep.table.end(), [](const KequalRow& x, const KequalRow& y) {
    return std::tie(x.q, x.s, x.dim_u, x.p, x.rank) < std::tie(y.q, y.s, y.dim_u, y.p, y.rank);
  });

  // spanning by essential independent sets, per ℓ
  for (int ell : opt.ells) essential_spans(n, k, ell, opt.max_atoms, ell == 0 ? &l : nullptr, rep);

  // rank-1 bases σ(a) and the tensor formula
  for (Element u = 1; u < static_cast<Element>(l.size()); ++u) {
    const auto nb = l.partition(u).nontrivial_blocks();
    if (nb.size() == 1) {
      const auto& b = nb.front();
      const int m = static_cast<int>(b.size());
      std::vector<int> rest(b.begin() + 1, b.end());
      std::vector<QVector> basis;
      std::vector<int> pick;
      auto rec = [&](auto&& self, std::size_t start) -> void {
        if (static_cast<int>(pick.size()) == k - 1) {
          AtomSet sigma;
          for (int i : b) {
            if (std::find(pick.begin(), pick.end(), i) != pick.end()) continue;
            std::vector<int> blk = pick;
            blk.push_back(i);
            std::vector<std::vector<int>> blocks{blk};
            for (int x = 1; x <= n; ++x)
              if (std::find(blk.begin(), blk.end(), x) == blk.end()) blocks.push_back({x});
            sigma.push_back(by_partition.at(Partition::canonical(n, blocks)));
          }
          std::sort(sigma.begin(), sigma.end());
          auto z = ev.zeta(sigma);
          if (z.ambient != u || z.dependent) throw InvariantError("kequal: σ(a) is not an independent set for U");
          basis.push_back(z.coords);
          rank1_all[u].insert(z.coords);
          return;
        }
        for (std::size_t i = start; i < rest.size(); ++i) {
          pick.push_back(rest[i]);
          self(self, i + 1);
          pick.pop_back();
        }
      };
      rec(rec, 0);
      rep.rank1.push_back({l.element_name(u), static_cast<std::size_t>(binomial(m - 1, k - 1)), span_rank(basis),
                           rank1_all[u].rank()});
    } else if (nb.size() >= 2) {
      std::vector<std::vector<std::size_t>> factors;
      for (const auto& blk : nb) {
        std::vector<std::vector<int>> blocks{blk};
        for (int x = 1; x <= n; ++x)
          if (std::find(blk.begin(), blk.end(), x) == blk.end()) blocks.push_back({x});
        factors.push_back(betti_of(by_partition.at(Partition::canonical(n, blocks))));
      }
      // convolution over degrees p_i >= -1, shifted by 2 per extra factor
      std::map<int, std::size_t> conv{{0, 1}};
      for (const auto& f : factors) {
        std::map<int, std::size_t> next;
        for (const auto& [d, c] : conv)
          for (std::size_t i = 0; i < f.size(); ++i)
            if (f[i]) next[d + static_cast<int>(i) - 1] += c * f[i];
        conv = std::move(next);
      }
      const int shift = 2 * (static_cast<int>(nb.size()) - 1);
      const auto& direct = betti_of(u);
      std::set<int> degrees;
      for (const auto& [d, c] : conv) degrees.insert(d + shift);
      for (std::size_t i = 0; i < direct.size(); ++i)
        if (direct[i]) degrees.insert(static_cast<int>(i) - 1);
      for (int p : degrees) {
        const std::size_t di = p + 1 < static_cast<int>(direct.size()) && p >= -1 ? direct[p + 1] : 0;
        const std::size_t pr = conv.count(p - shift) ? conv[p - shift] : 0;
        rep.tensor.push_back({l.element_name(u), p, di, pr});
      }
    }
  }

  // multiplicative generation by rank-1 classes
  if (opt.ring_checks) {
    GradedRing ring(l);
    rep.generation_checked = true;
    rep.ring_rank = ring.rank();
    EchelonBasis gens_basis;
    std::vector<QVector> gens;
    for (const auto& s : sets) {
      if (rank_of(l, s) != 1) continue;
      QVector v = ring_class(ring, l, s);
      if (gens_basis.insert(v)) gens.push_back(v);
    }
    EchelonBasis alg;
    std::deque<QVector> queue{QVector::unit(0)};
    alg.insert(QVector::unit(0));
    while (!queue.empty()) {
      QVector b = std::move(queue.front());
      queue.pop_front();
      for (const auto& g : gens) {
        QVector v = ring.multiply(g, b);
        if (alg.insert(v)) queue.push_back(std::move(v));
      }
    }
    rep.generated_rank = alg.rank();
    rep.betti = ring.betti();
  } else {
    rep.betti = betti_cm(l);
  }

  // ξ: H̃_p(Π_{A,B}) → H̃_p(Π_{n,k}) is onto for p < n − k − 1
  if (opt.full_report) {
    std::vector<Element> one_block;
    for (Element a = 1; a < static_cast<Element>(l.size()); ++a)
      if (l.partition(a).nontrivial_blocks().size() == 1) one_block.push_back(a);
    std::map<int, EchelonBasis> image;
    for (std::size_t i = 0; i < one_block.size(); ++i)
      for (std::size_t j = i + 1; j < one_block.size(); ++j) {
        const auto ba = l.partition(one_block[i]).nontrivial_blocks().front();
        const auto bb = l.partition(one_block[j]).nontrivial_blocks().front();
        std::set<int> uni(ba.begin(), ba.end()), both;
        uni.insert(bb.begin(), bb.end());
        for (int x : ba)
          if (std::find(bb.begin(), bb.end(), x) != bb.end()) both.insert(x);
        if (static_cast<int>(uni.size()) != n || both.size() != 1) continue;
        auto sub = sublattice_ab(l, one_block[i], one_block[j]);
        auto cx = lower_interval_flag_complex(sub, sub.top());
        for (int p = -1; p < n - k - 1 && p <= cx.max_degree(); ++p) {
          if (p + 1 >= static_cast<int>(tb.size()) || !tb[p + 1]) continue;
          Homology hs(cx, p);
          for (const auto& z : hs.cycle_representatives()) {
            QChain mapped;
            mapped.degree = p;
            for (const auto& [f, v] : z.terms) {
              Flag g;
              for (Element e : f) g.push_back(sub.origin(e));
              mapped.add(g, v);
            }
            image[p].insert(dense_to_vector(ev.homology(top, p).reduce(mapped)));
          }
        }
      }
    for (int p = -1; p < n - k - 1; ++p)
      if (p + 1 < static_cast<int>(tb.size()) && tb[p + 1])
        rep.xi.push_back({p, image.count(p) ? image[p].rank() : 0, tb[p + 1]});
  }
  return rep;
}

nlohmann::json kequal_to_json(const KequalReport& r) {
  nlohmann::json table = nlohmann::json::array();
  for (const auto& row : r.table)
    table.push_back({{"dim_u", row.dim_u}, {"size", row.size}, {"p", row.p}, {"rank", row.rank}, {"s", row.s},
                     {"n_sigma", row.n_sigma}, {"q", row.q}, {"dim", row.dim}});
  nlohmann::json spans = nlohmann::json::array();
  for (const auto& s : r.spans) spans.push_back({{"ell", s.ell}, {"p", s.p}, {"span", s.span}, {"betti", s.betti}});
  nlohmann::json rank1 = nlohmann::json::array();
  for (const auto& x : r.rank1)
    rank1.push_back({{"u", x.u}, {"expected", x.expected}, {"basis_rank", x.basis_rank}, {"rank1_span", x.rank1_span}});
  nlohmann::json tensor = nlohmann::json::array();
  for (const auto& t : r.tensor) tensor.push_back({{"u", t.u}, {"p", t.p}, {"direct", t.direct}, {"product", t.product}});
  nlohmann::json xi = nlohmann::json::array();
  for (const auto& x : r.xi) xi.push_back({{"p", x.p}, {"image", x.image}, {"betti", x.betti}});
  nlohmann::json j = {{"n", r.n},
                      {"k", r.k},
                      {"betti", betti_to_json(r.betti)},
                      {"table", table},
                      {"nonvanishing_p", r.nonvanishing_p},
                      {"expected_p", r.expected_p},
                      {"independent_sets", r.independent_sets},
                      {"violators", r.violators},
                      {"violators_nonzero", r.violators_nonzero},
                      {"components_spanned", r.components_spanned},
                      {"components_total", r.components_total},
                      {"essential_spans", spans},
                      {"rank1_bases", rank1},
                      {"tensor", tensor},
                      {"xi", xi}};
  if (r.generation_checked) j["generation"] = {{"generated_rank", r.generated_rank}, {"ring_rank", r.ring_rank}};
  j["checks"] = {{"nonvanishing", r.nonvanishing_ok()}, {"vanishing", r.vanishing_ok()},
                 {"spanning", r.spanning_ok()},         {"generation", r.generation_ok()},
                 {"rank1_basis", r.rank1_ok()},         {"tensor", r.tensor_ok()},
                 {"xi", r.xi_ok()}};
  j["ok"] = r.ok();
  return j;
}

std::string kequal_to_tsv(const KequalReport& r) {
  std::ostringstream out;
  out << "dim_u\tsize\tp\trank\ts\tn_sigma\tq\tdim\n";
  for (const auto& row : r.table)
    out << row.dim_u << '\t' << row.size << '\t' << row.p << '\t' << row.rank << '\t' << row.s << '\t'
        << row.n_sigma << '\t' << row.q << '\t' << row.dim << '\n';
  auto flag = [&](const char* name, bool ok) { out << "check\t" << name << '\t' << (ok ? "ok" : "FAIL") << '\n'; };
  flag("nonvanishing", r.nonvanishing_ok());
  flag("vanishing", r.vanishing_ok());
  flag("spanning", r.spanning_ok());
  flag("generation", r.generation_ok());
  flag("rank1_basis", r.rank1_ok());
  flag("tensor", r.tensor_ok());
  flag("xi", r.xi_ok());
  return out.str();
}

}  // namespace arrcoh
