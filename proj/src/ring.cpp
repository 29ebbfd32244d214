#include "arrcoh/ring.hpp"

#include <algorithm>

#include "arrcoh/smith.hpp"

namespace arrcoh {

namespace {

std::size_t degree_span(const LabeledLattice& l) {
  return static_cast<std::size_t>(std::max(1, 2 * l.dim(l.top())));
}

std::string flag_key(const LabeledLattice& l, const Flag& f) {
  std::string s;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i) s += '<';
    s += l.element_name(f[i]);
  }
  return s;
}

}  // namespace

std::map<std::pair<Element, int>, std::size_t> component_dims_gm(const LabeledLattice& l) {
  std::map<std::pair<Element, int>, std::size_t> out;
  for (Element a = 1; a < static_cast<Element>(l.size()); ++a) {
    auto b = betti_numbers(lower_interval_flag_complex(l, a));
    for (std::size_t i = 0; i < b.size(); ++i)
      if (b[i]) out[{a, 2 * l.dim(a) - (static_cast<int>(i) - 1) - 2}] = b[i];
  }
  return out;
}

std::map<std::pair<Element, int>, std::size_t> component_dims_cm(const LabeledLattice& l) {
  std::map<std::pair<Element, int>, std::size_t> out;
  for (Element a = 1; a < static_cast<Element>(l.size()); ++a) {
    auto b = betti_numbers(cm_complex(l, a));
    for (std::size_t i = 0; i < b.size(); ++i)
      if (b[i]) out[{a, cm_q_of_p(l, a, static_cast<int>(i) - 1)}] = b[i];
  }
  return out;
}

static std::vector<std::size_t> fold(const LabeledLattice& l, const std::map<std::pair<Element, int>, std::size_t>& dims) {
  std::vector<std::size_t> out(degree_span(l), 0);
  out[0] = 1;
  for (const auto& [key, d] : dims) {
    const int q = key.second;
    if (q < 0 || static_cast<std::size_t>(q) >= out.size()) throw InvariantError("component degree out of range");
    out[q] += d;
  }
  return out;
}

std::vector<std::size_t> betti_gm(const LabeledLattice& l) { return fold(l, component_dims_gm(l)); }
std::vector<std::size_t> betti_cm(const LabeledLattice& l) { return fold(l, component_dims_cm(l)); }
std::vector<std::size_t> poincare_polynomial(const LabeledLattice& l) { return betti_cm(l); }

// ---------------------------------------------------------------- GradedRing

GradedRing::GradedRing(const LabeledLattice& l) : l_(&l) {
  reps_.push_back(CMElement{{{Flag{}, Rational(1)}}});
  elem_.push_back(l.bottom());
  deg_.push_back(0);

  struct Pending {
    int q;
    Element a;
    std::shared_ptr<const Homology> h;
  };
  std::vector<Pending> pending;
  for (Element a = 1; a < static_cast<Element>(l.size()); ++a) {
    auto cx = cm_complex(l, a);
    for (int p = -1; p <= cx.max_degree(); ++p) {
      auto h = std::make_shared<const Homology>(cx, p);
      if (h->betti()) pending.push_back({cm_q_of_p(l, a, p), a, std::move(h)});
    }
  }
  std::sort(pending.begin(), pending.end(),
            [](const Pending& x, const Pending& y) { return std::tie(x.q, x.a) < std::tie(y.q, y.a); });
  for (auto& pc : pending) {
    const std::size_t offset = reps_.size();
    components_.push_back({pc.a, pc.q, offset, pc.h->betti()});
    by_key_[{pc.a, 2 * l.dim(pc.a) - pc.q}] = parts_.size();
    for (const auto& z : pc.h->cycle_representatives()) {
      reps_.push_back(chain_to_cm(z));
      elem_.push_back(pc.a);
      deg_.push_back(pc.q);
    }
    parts_.push_back({pc.a, pc.q, std::move(pc.h), offset});
  }

  for (std::size_t i = 1; i < reps_.size(); ++i)
    for (std::size_t j = 1; j < reps_.size(); ++j) {
      const Element a = elem_[i], b = elem_[j];
      if (l.dim(l.join(a, b)) != l.dim(a) + l.dim(b)) continue;
      QVector v = reduce(cm_element_product(l, reps_[i], reps_[j]));
      for (const auto& [k, x] : v.entries())
        if (deg_[k] != deg_[i] + deg_[j] || elem_[k] != l.join(a, b))
          throw InvariantError("ring: product left its bigraded component");
      if (!v.is_zero()) products_.emplace(std::make_pair(i, j), std::move(v));
    }
}

std::optional<std::size_t> GradedRing::component_index(Element a, int q) const {
  for (std::size_t i = 0; i < components_.size(); ++i)
    if (components_[i].element == a && components_[i].q == q) return i;
  return std::nullopt;
}

QVector GradedRing::reduce(const CMElement& x) const {
  std::map<std::pair<Element, int>, QChain> split;
  Rational unit = 0;
  for (const auto& [t, v] : x.terms) {
    if (t.empty()) {
      unit += v;
      continue;
    }
    auto& c = split[{t.back(), static_cast<int>(t.size())}];
    c.degree = static_cast<int>(t.size()) - 2;
    c.add(t, v);
  }
  std::vector<QVector::Entry> out;
  if (unit != 0) out.emplace_back(0, unit);
  for (const auto& [key, c] : split) {
    auto it = by_key_.find(key);
    if (it == by_key_.end()) {
      // no homology in this component: the chain must still be a cycle
      auto cx = cm_complex(*l_, key.first);
      if (!cx.apply_boundary(c).is_zero()) throw ValidationError("ring reduce: element is not a cocycle");
      continue;
    }
    const auto& part = parts_[it->second];
    auto coords = part.homology->reduce(c);
    for (std::size_t k = 0; k < coords.size(); ++k)
      if (coords[k] != 0) out.emplace_back(part.offset + k, coords[k]);
  }
  return QVector(std::move(out));
}

QVector GradedRing::product(std::size_t i, std::size_t j) const {
  if (i == 0) return QVector::unit(j);
  if (j == 0) return QVector::unit(i);
  auto it = products_.find({i, j});
  return it == products_.end() ? QVector() : it->second;
}

QVector GradedRing::multiply(const QVector& x, const QVector& y) const {
  QVector out;
  for (const auto& [i, a] : x.entries())
    for (const auto& [j, b] : y.entries()) out.add_scaled(product(i, j), a * b);
  return out;
}

std::vector<std::size_t> GradedRing::betti() const {
  std::vector<std::size_t> out(degree_span(*l_), 0);
  out[0] = 1;
  for (const auto& c : components_) out[c.q] += c.dim;
  return out;
}

std::map<std::pair<int, int>, std::size_t> product_image_ranks(const GradedRing& r) {
  std::map<std::pair<int, int>, EchelonBasis> spans;
  for (const auto& [ij, v] : r.products()) {
    const int q1 = r.degree_of(ij.first), q2 = r.degree_of(ij.second);
    if (q1 <= q2) spans[{q1, q2}].insert(v);
  }
  std::map<std::pair<int, int>, std::size_t> out;
  for (const auto& [key, b] : spans) out[key] = b.rank();
  return out;
}

// ---------------------------------------------------------------- integral

std::vector<IntegralDegree> integral_betti_experimental(const LabeledLattice& l) {
  std::vector<IntegralDegree> out(degree_span(l));
  for (std::size_t q = 0; q < out.size(); ++q) out[q].q = static_cast<int>(q);
  out[0].free_rank = 1;
  for (Element a = 1; a < static_cast<Element>(l.size()); ++a) {
    auto cx = cm_complex(l, a);
    auto snf = [&](int p) {
      IntSparseMatrix m(cx.size(p - 1), cx.size(p));
      const auto& cols = cx.boundary_columns(p);
      for (std::size_t j = 0; j < cols.size(); ++j)
        for (const auto& [i, v] : cols[j].entries()) {
          if (v.get_den() != 1) throw InvariantError("integral check: non-integral boundary entry");
          m.data[i][j] = v.get_num();
        }
      return smith_normal_form(m);
    };
    std::vector<std::vector<Integer>> factors;  // index p + 1
    for (int p = -1; p <= cx.max_degree() + 1; ++p) factors.push_back(snf(p));
    for (int p = -1; p <= cx.max_degree(); ++p) {
      const std::size_t rank_out = factors[p + 1].size();
      const auto& in = factors[p + 2];
      const std::size_t free_rank = cx.size(p) - rank_out - in.size();
      auto& slot = out.at(cm_q_of_p(l, a, p));
      slot.free_rank += free_rank;
      for (const auto& f : in)
        if (f != 1) slot.torsion.push_back(f);
    }
  }
  for (auto& d : out) std::sort(d.torsion.begin(), d.torsion.end());
  return out;
}

// ---------------------------------------------------------------- JSON

nlohmann::json betti_to_json(const std::vector<std::size_t>& betti) {
  nlohmann::json j = nlohmann::json::object();
  for (std::size_t q = 0; q < betti.size(); ++q)
    if (betti[q]) j[std::to_string(q)] = betti[q];
  return j;
}

nlohmann::json ring_to_json(const GradedRing& r) {
  const auto& l = r.lattice();
  nlohmann::json comps = nlohmann::json::array();
  for (const auto& c : r.components())
    comps.push_back({{"element", c.element}, {"name", l.element_name(c.element)}, {"q", c.q}, {"dim", c.dim}});
  nlohmann::json basis = nlohmann::json::array();
  for (std::size_t i = 0; i < r.rank(); ++i) {
    nlohmann::json rep = nlohmann::json::object();
    for (const auto& [t, v] : r.representative(i).terms) rep[t.empty() ? "1" : flag_key(l, t)] = to_string(v);
    basis.push_back({{"index", i}, {"element", r.element_of(i)}, {"q", r.degree_of(i)}, {"representative", rep}});
  }
  nlohmann::json prods = nlohmann::json::array();
  for (const auto& [ij, v] : r.products()) {
    nlohmann::json coords = nlohmann::json::object();
    for (const auto& [k, x] : v.entries()) coords[std::to_string(k)] = to_string(x);
    prods.push_back({{"i", ij.first}, {"j", ij.second}, {"coords", coords}});
  }
  nlohmann::json images = nlohmann::json::array();
  for (const auto& [qq, rank] : product_image_ranks(r))
    images.push_back({{"q1", qq.first}, {"q2", qq.second}, {"rank", rank}});
  return {{"betti", betti_to_json(r.betti())},
          {"poincare", r.betti()},
          {"components", comps},
          {"basis", basis},
          {"products", prods},
          {"product_images", images}};
}

}  // namespace arrcoh
