#include "arrcoh/dcp_model.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "arrcoh/shuffle.hpp"

namespace arrcoh {

namespace {

void add_term(FreePoly& p, const FreeMonomial& m, const Rational& v) {
  if (v == 0) return;
  auto [it, inserted] = p.emplace(m, v);
  if (!inserted) {
    it->second += v;
    if (it->second == 0) p.erase(it);
  }
}

// Product of two monomials; 0 when exterior letters collide, else ±1.
int multiply_monomials(const FreeMonomial& a, const FreeMonomial& b, std::size_t n, FreeMonomial& out) {
  out.assign(2 * n, 0);
  int swaps = 0;
  int later_in_a = 0;  // exterior letters of a with larger index than the current one
  for (std::size_t v = n; v-- > 0;) {
    if (a[v] && b[v]) return 0;
    if (b[v]) swaps += later_in_a;
    if (a[v]) ++later_in_a;
  }
  for (std::size_t v = 0; v < 2 * n; ++v) out[v] = a[v] + b[v];
  return swaps % 2 ? -1 : 1;
}

FreePoly poly_multiply(const FreePoly& x, const FreePoly& y, std::size_t n) {
  FreePoly out;
  FreeMonomial m;
  for (const auto& [a, va] : x)
    for (const auto& [b, vb] : y) {
      int s = multiply_monomials(a, b, n, m);
      if (s) add_term(out, m, s * va * vb);
    }
  return out;
}

FreePoly poly_power(const FreePoly& x, int k, std::size_t n) {
  FreePoly out;
  out[FreeMonomial(2 * n, 0)] = 1;
  for (int i = 0; i < k; ++i) out = poly_multiply(out, x, n);
  return out;
}

FreePoly poly_sigma(const LabeledLattice& l, Element a) {
  const std::size_t n = l.size() - 1;
  FreePoly p;
  for (Element b = 1; b < static_cast<Element>(l.size()); ++b)
    if (l.leq(a, b)) {
      FreeMonomial m(2 * n, 0);
      m[n + b - 1] = 1;
      p[m] = 1;
    }
  return p;
}

std::vector<Flag> all_flags(const LabeledLattice& l) {
  std::vector<Flag> out{Flag{}};
  for (Element a = 1; a < static_cast<Element>(l.size()); ++a) {
    auto f = flags_with_top(l, a);
    out.insert(out.end(), f.begin(), f.end());
  }
  return out;
}

int gap(const LabeledLattice& l, const Flag& f, std::size_t i) {
  return l.dim(f[i]) - (i == 0 ? 0 : l.dim(f[i - 1]));
}

}  // namespace

// ---------------------------------------------------------------- basic monomials

int BasicMonomial::degree() const {
  int d = 0;
  for (std::size_t i = 0; i < flag.size(); ++i) d += (in_t[i] ? 1 : 0) + 2 * m[i];
  return d;
}

std::vector<BasicMonomial> basic_monomials(const LabeledLattice& l, int degree) {
  std::vector<BasicMonomial> out;
  for (const auto& f : all_flags(l)) {
    BasicMonomial b{f, std::vector<bool>(f.size(), false), std::vector<int>(f.size(), 0)};
    auto rec = [&](auto&& self, std::size_t i, int deg) -> void {
      if (deg > degree) return;
      if (i == f.size()) {
        if (deg == degree) out.push_back(b);
        return;
      }
      const int g = gap(l, f, i);
      for (int t = 0; t <= 1; ++t)
        for (int m = 0; m < g; ++m) {
          if (!t && m == 0) continue;  // every element of the flag lies in S ∪ T
          b.in_t[i] = t;
          b.m[i] = m;
          self(self, i + 1, deg + t + 2 * m);
        }
      b.in_t[i] = false;
      b.m[i] = 0;
    };
    rec(rec, 0, 0);
  }
  std::sort(out.begin(), out.end());
  return out;
}

FreeMonomial lambda_monomial(const LabeledLattice& l, const BasicMonomial& b) {
  const std::size_t n = l.size() - 1;
  FreeMonomial m(2 * n, 0);
  for (std::size_t i = 0; i < b.flag.size(); ++i) {
    const std::size_t v = static_cast<std::size_t>(b.flag[i] - 1);
    if (b.in_t[i]) m[v] = 1;
    m[n + v] = b.m[i];
  }
  return m;
}

bool is_critical(const LabeledLattice& l, const BasicMonomial& b) { return homotopy_weight(l, b) == 0; }

int homotopy_weight(const LabeledLattice& l, const BasicMonomial& b) {
  int w = 0;
  for (std::size_t i = 0; i < b.flag.size(); ++i)
    if (!(b.in_t[i] && b.m[i] == gap(l, b.flag, i) - 1)) ++w;
  return w;
}

int monomial_weight(const LabeledLattice& l, const FreeMonomial& m) {
  const std::size_t n = l.size() - 1;
  int w = 0;
  for (std::size_t v = 0; v < n; ++v) {
    const int d = l.dim(static_cast<Element>(v + 1));
    w += m[v] * d + 2 * m[n + v] * d;
  }
  return w;
}

std::vector<std::pair<BasicMonomial, Rational>> homotopy_h(const LabeledLattice& l, const BasicMonomial& b) {
  if (is_critical(l, b)) throw ValidationError("homotopy h is defined on non-critical basic monomials only");
  std::vector<std::pair<BasicMonomial, Rational>> out;
  int below_in_t = 0;
  for (std::size_t i = 0; i < b.flag.size(); ++i) {
    if (!b.in_t[i]) {
      BasicMonomial h = b;
      h.in_t[i] = true;
      h.m[i] -= 1;
      out.emplace_back(std::move(h), Rational(below_in_t % 2 ? -1 : 1));
    } else {
      ++below_in_t;
    }
  }
  return out;
}

BasicMonomial critical_basic(const LabeledLattice& l, const Flag& t) {
  BasicMonomial b{t, std::vector<bool>(t.size(), true), std::vector<int>(t.size(), 0)};
  for (std::size_t i = 0; i < t.size(); ++i) b.m[i] = gap(l, t, i) - 1;
  return b;
}

// ---------------------------------------------------------------- relations

std::vector<RelationGenerator> relation_generators(const LabeledLattice& l, int max_degree) {
  const std::size_t n = l.size() - 1;
  std::vector<RelationGenerator> out;
  for (Element b = 1; b < static_cast<Element>(l.size()); ++b) {
    std::vector<Element> below;
    for (Element a = 1; a < static_cast<Element>(l.size()); ++a)
      if (l.less(a, b)) below.push_back(a);
    if (below.size() > 20) throw ValidationError("relation_generators: too many elements below one element");
    const FreePoly sig = poly_sigma(l, b);
    for (std::uint32_t ymask = 0; ymask < (1u << below.size()); ++ymask) {
      std::vector<Element> y;
      for (std::size_t i = 0; i < below.size(); ++i)
        if (ymask >> i & 1) y.push_back(below[i]);
      const int k = l.dim(b) - l.dim(l.join_all(y));
      // split Y into exterior part X1 and polynomial part X2
      for (std::uint32_t x1 = ymask;; x1 = (x1 - 1) & ymask) {
        RelationGenerator r;
        r.b = b;
        r.exponent = k;
        for (std::size_t i = 0; i < below.size(); ++i) {
          if (!(ymask >> i & 1)) continue;
          (x1 >> i & 1 ? r.x1 : r.x2).push_back(below[i]);
        }
        const int deg = static_cast<int>(r.x1.size()) + 2 * static_cast<int>(r.x2.size()) + 2 * k;
        if (max_degree < 0 || deg <= max_degree) {
          FreeMonomial m(2 * n, 0);
          for (Element a : r.x1) m[a - 1] = 1;
          for (Element a : r.x2) m[n + a - 1] = 1;
          FreePoly mono;
          mono[m] = 1;
          r.poly = poly_multiply(mono, poly_power(sig, k, n), n);
          out.push_back(std::move(r));
        }
        if (x1 == 0) break;
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------- DcpModel

int DcpModel::degree(const FreeMonomial& m, std::size_t n) {
  int d = 0;
  for (std::size_t v = 0; v < n; ++v) d += m[v] + 2 * m[n + v];
  return d;
}

DcpModel::DcpModel(const LabeledLattice& l, int max_degree, std::size_t monomial_cap)
    : l_(&l), max_degree_(max_degree), n_(l.size() - 1) {
  if (max_degree < 0) throw ValidationError("dcp model: negative truncation degree");
  if (n_ > 20) throw ValidationError("dcp model: lattice too large for the reference model");
  slices_.resize(static_cast<std::size_t>(max_degree) + 1);

  // monomials by degree
  for (std::uint64_t emask = 0; emask < (std::uint64_t{1} << n_); ++emask) {
    const int k = std::popcount(emask);
    if (k > max_degree) continue;
    FreeMonomial m(2 * n_, 0);
    for (std::size_t v = 0; v < n_; ++v) m[v] = static_cast<int>(emask >> v & 1);
    auto rec = [&](auto&& self, std::size_t v, int deg) -> void {
      if (v == n_) {
        auto& s = slices_[deg];
        s.monomials.push_back(m);
        if (s.monomials.size() > monomial_cap)
          throw ValidationError("dcp model: monomial count in degree " + std::to_string(deg) + " exceeds the cap of " +
                                std::to_string(monomial_cap));
        return;
      }
      for (int e = 0; deg + 2 * e <= max_degree; ++e) {
        m[n_ + v] = e;
        self(self, v + 1, deg + 2 * e);
      }
      m[n_ + v] = 0;
    };
    rec(rec, 0, k);
  }
  for (auto& s : slices_) {
    std::sort(s.monomials.begin(), s.monomials.end());
    for (std::size_t i = 0; i < s.monomials.size(); ++i) s.index[s.monomials[i]] = i;
  }
  // ideal slices
  auto gens = relation_generators(l, max_degree);
  for (const auto& g : gens) {
    if (g.poly.empty()) continue;
    const int gd = degree(g.poly.begin()->first, n_);
    for (int d = gd; d <= max_degree; ++d) {
      for (const auto& m : slices_[d - gd].monomials) {
        FreePoly p = multiply(g.poly, monomial_poly(m));
        if (p.empty()) continue;
        std::vector<QVector::Entry> e;
        for (const auto& [mono, v] : p) e.emplace_back(slices_[d].index.at(mono), v);
        slices_[d].ideal.insert(QVector(std::move(e)));
      }
    }
  }
  for (auto& s : slices_) {
    std::vector<bool> pivot(s.monomials.size(), false);
    for (const auto& r : s.ideal.rows()) pivot[r.leading().first] = true;
    for (std::size_t i = 0; i < s.monomials.size(); ++i)
      if (!pivot[i]) s.quotient_basis.push_back(i);
  }
  // d(J) ⊆ J
  for (int d = 0; d < max_degree; ++d)
    for (const auto& r : slices_[d].ideal.rows())
      if (!normal_form(differential(to_poly(r, d)), d + 1).is_zero())
        throw InvariantError("dcp model: the differential does not preserve the ideal in degree " + std::to_string(d));
}

FreePoly DcpModel::monomial_poly(const FreeMonomial& m) const {
  FreePoly p;
  p[m] = 1;
  return p;
}

FreePoly DcpModel::one() const { return monomial_poly(FreeMonomial(2 * n_, 0)); }

FreePoly DcpModel::e(Element a) const {
  FreeMonomial m(2 * n_, 0);
  m.at(static_cast<std::size_t>(a - 1)) = 1;
  return monomial_poly(m);
}

FreePoly DcpModel::c(Element a) const {
  FreeMonomial m(2 * n_, 0);
  m.at(n_ + static_cast<std::size_t>(a - 1)) = 1;
  return monomial_poly(m);
}

FreePoly DcpModel::sigma(Element a) const { return poly_sigma(*l_, a); }

FreePoly DcpModel::tau(Element a) const {
  FreePoly p;
  for (Element b = 1; b < static_cast<Element>(l_->size()); ++b)
    if (l_->leq(a, b)) add_term(p, e(b).begin()->first, 1);
  return p;
}

FreePoly DcpModel::multiply(const FreePoly& x, const FreePoly& y) const { return poly_multiply(x, y, n_); }

FreePoly DcpModel::power(const FreePoly& x, int k) const { return poly_power(x, k, n_); }

FreePoly DcpModel::differential(const FreePoly& x) const {
  FreePoly out;
  for (const auto& [m, v] : x) {
    int before = 0;
    for (std::size_t a = 0; a < n_; ++a) {
      if (!m[a]) continue;
      FreeMonomial t = m;
      t[a] = 0;
      t[n_ + a] += 1;
      add_term(out, t, before % 2 ? -v : v);
      ++before;
    }
  }
  return out;
}

FreePoly DcpModel::expand(const BasicMonomial& b) const {
  FreePoly p = one();
  for (std::size_t i = 0; i < b.flag.size(); ++i)
    if (b.in_t[i]) p = multiply(p, tau(b.flag[i]));
  for (std::size_t i = 0; i < b.flag.size(); ++i)
    if (b.m[i]) p = multiply(p, power(sigma(b.flag[i]), b.m[i]));
  return p;
}

FreePoly DcpModel::expand_pair(const Flag& t, const std::vector<int>& m) const {
  FreePoly p = one();
  for (Element a : t) p = multiply(p, tau(a));
  for (std::size_t i = 0; i < t.size(); ++i)
    if (m[i]) p = multiply(p, power(sigma(t[i]), m[i]));
  return p;
}

FreePoly DcpModel::expand_cm(const CMElement& x) const {
  FreePoly out;
  for (const auto& [t, v] : x.terms)
    for (const auto& [mono, w] : expand(critical_basic(*l_, t))) add_term(out, mono, v * w);
  return out;
}

QVector DcpModel::normal_form(const FreePoly& x, int d) const {
  if (d < 0 || d > max_degree_) throw ValidationError("dcp model: degree outside the truncation");
  const auto& s = slices_[d];
  std::vector<QVector::Entry> e;
  for (const auto& [m, v] : x) {
    if (degree(m, n_) != d) throw ValidationError("dcp model: polynomial is not homogeneous of the stated degree");
    e.emplace_back(s.index.at(m), v);
  }
  return s.ideal.reduce(QVector(std::move(e))).remainder;
}

FreePoly DcpModel::to_poly(const QVector& v, int d) const {
  FreePoly p;
  for (const auto& [i, x] : v.entries()) add_term(p, slices_.at(d).monomials.at(i), x);
  return p;
}

std::vector<QVector> DcpModel::differential_images(int q) const {
  if (q < 0 || q + 1 > max_degree_) throw ValidationError("dcp model: differential leaves the truncation");
  std::vector<QVector> out;
  for (std::size_t i : slices_[q].quotient_basis)
    out.push_back(normal_form(differential(monomial_poly(slices_[q].monomials[i])), q + 1));
  return out;
}

std::size_t DcpModel::cohomology_dim(int q) const {
  if (q < 0 || q + 1 > max_degree_) throw ValidationError("dcp model: truncation too small for H^" + std::to_string(q));
  auto rank_of = [](const std::vector<QVector>& cols) {
    EchelonBasis e;
    for (const auto& c : cols) e.insert(c);
    return e.rank();
  };
  std::size_t out = slices_[q].quotient_basis.size() - rank_of(differential_images(q));
  if (q > 0) out -= rank_of(differential_images(q - 1));
  return out;
}

// ---------------------------------------------------------------- CoordinateBasis

bool CoordinateBasis::insert(const QVector& v) {
  QVector vec = v;
  QVector combo = QVector::unit(count_);
  std::size_t pos = 0;
  while (pos < vec.entries().size()) {
    auto it = rows_.find(vec.entries()[pos].first);
    if (it == rows_.end()) {
      ++pos;
      continue;
    }
    Rational f = vec.entries()[pos].second / it->second.vec.leading().second;
    vec.add_scaled(it->second.vec, -f);
    combo.add_scaled(it->second.combo, -f);
  }
  if (vec.is_zero()) return false;
  const std::size_t p = vec.leading().first;
  rows_.emplace(p, Row{std::move(vec), std::move(combo)});
  ++count_;
  return true;
}

std::optional<QVector> CoordinateBasis::coordinates(QVector v) const {
  QVector coords;
  std::size_t pos = 0;
  while (pos < v.entries().size()) {
    auto it = rows_.find(v.entries()[pos].first);
    if (it == rows_.end()) return std::nullopt;
    Rational f = v.entries()[pos].second / it->second.vec.leading().second;
    v.add_scaled(it->second.vec, -f);
    coords.add_scaled(it->second.combo, f);
  }
  return coords;
}

// ---------------------------------------------------------------- checks

bool DcpReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const DcpCheck& c) { return c.ok; });
}

namespace {

struct Checker {
  DcpReport& report;
  DcpCheck* cur = nullptr;

  void begin(std::string name) {
    report.checks.push_back({std::move(name), true, ""});
    cur = &report.checks.back();
  }
  void fail(const std::string& why) {
    if (cur->ok) cur->detail = why;
    cur->ok = false;
  }
  void note(const std::string& what) {
    if (cur->ok) cur->detail = what;
  }
};

std::string describe(const LabeledLattice& l, const BasicMonomial& b) {
  std::ostringstream os;
  os << "mu(";
  for (std::size_t i = 0; i < b.flag.size(); ++i) {
    if (i) os << ' ';
    os << l.element_name(b.flag[i]) << (b.in_t[i] ? "t" : "") << '^' << b.m[i];
  }
  os << ')';
  return os.str();
}

}  // namespace

DcpReport dcp_check(const LabeledLattice& l, int max_degree, std::size_t monomial_cap) {
  if (max_degree < 2) throw ValidationError("dcp-check needs a truncation degree of at least 2");
  DcpModel model(l, max_degree, monomial_cap);
  const int D = max_degree;
  DcpReport rep;
  rep.max_degree = D;
  Checker ck{rep};

  // Every subspace lattice satisfies this; the model is only claimed there.
  ck.begin("dim(A v B) + dim(A ^ B) <= dim A + dim B");
  for (Element a = 0; a < static_cast<Element>(l.size()); ++a)
    for (Element b = a + 1; b < static_cast<Element>(l.size()); ++b)
      if (l.dim(l.join(a, b)) + l.dim(l.meet(a, b)) > l.dim(a) + l.dim(b))
        ck.fail(l.element_name(a) + ", " + l.element_name(b) + " violate submodularity");

  std::vector<std::vector<BasicMonomial>> basic(D + 1);
  std::vector<CoordinateBasis> basic_coords(D + 1);
  std::vector<std::vector<QVector>> basic_nf(D + 1);

  ck.begin("basic monomials form a basis of each slice");
  for (int r = 0; r <= D; ++r) {
    basic[r] = basic_monomials(l, r);
    rep.slice_dims.push_back(model.slice_dim(r));
    rep.basic_counts.push_back(basic[r].size());
    for (const auto& b : basic[r]) {
      basic_nf[r].push_back(model.normal_form(model.expand(b), r));
      basic_coords[r].insert(basic_nf[r].back());
    }
    if (basic[r].size() != model.slice_dim(r) || basic_coords[r].rank() != basic[r].size())
      ck.fail("degree " + std::to_string(r) + ": " + std::to_string(basic[r].size()) + " basic monomials, rank " +
              std::to_string(basic_coords[r].rank()) + ", slice dimension " + std::to_string(model.slice_dim(r)));
  }

  ck.begin("e/c monomials with the same index data form a basis; weights do not decrease");
  std::size_t raised = 0, lowered = 0;
  for (int r = 0; r <= D; ++r) {
    CoordinateBasis lam;
    std::vector<int> lam_wt;
    for (const auto& b : basic[r]) {
      FreeMonomial m = lambda_monomial(l, b);
      FreePoly p;
      p[m] = 1;
      lam.insert(model.normal_form(p, r));
      lam_wt.push_back(monomial_weight(l, m));
    }
    if (lam.rank() != model.slice_dim(r)) {
      ck.fail("degree " + std::to_string(r) + ": e/c monomials span rank " + std::to_string(lam.rank()));
      continue;
    }
    for (std::size_t i = 0; i < model.monomial_count(r); ++i) {
      FreePoly p = model.to_poly(QVector::unit(i), r);
      auto coords = lam.coordinates(model.normal_form(p, r));
      if (!coords) {
        ck.fail("a monomial is outside the span of the e/c basis");
        continue;
      }
      const int w = monomial_weight(l, p.begin()->first);
      for (const auto& [j, v] : coords->entries()) {
        if (lam_wt[j] > w) ++raised;
        if (lam_wt[j] < w) ++lowered;
      }
    }
  }
  if (lowered) ck.fail(std::to_string(lowered) + " decomposition terms of lower weight");
  ck.note(std::to_string(raised) + " terms of higher weight, " + std::to_string(lowered) + " of lower weight");

  ck.begin("d cmu(T) agrees with the flag formula");
  for (const auto& t : all_flags(l)) {
    if (t.empty()) continue;
    const int q = cm_degree(l, t);
    if (q + 1 > D) continue;
    CMElement x;
    x.add(t, 1);
    QVector lhs = model.normal_form(model.differential(model.expand_cm(x)), q + 1);
    QVector rhs = model.normal_form(model.expand_cm(cm_differential(l, t)), q + 1);
    if (!(lhs == rhs)) ck.fail("flag ending at " + l.element_name(t.back()));
  }

  ck.begin("non-critical basic monomials span a subcomplex; hd + dh = |mu| mu");
  for (int r = 0; r + 1 <= D; ++r) {
    for (std::size_t i = 0; i < basic[r].size(); ++i) {
      const auto& mu = basic[r][i];
      const int w = homotopy_weight(l, mu);
      if (w == 0) continue;
      auto dmu = basic_coords[r + 1].coordinates(model.normal_form(model.differential(model.expand(mu)), r + 1));
      if (!dmu) throw InvariantError("dcp check: d mu outside the basic span");
      QVector total;
      for (const auto& [k, v] : dmu->entries()) {
        const auto& nu = basic[r + 1][k];
        if (is_critical(l, nu)) {
          ck.fail("d " + describe(l, mu) + " has a critical component");
          continue;
        }
        for (const auto& [h, s] : homotopy_h(l, nu)) {
          auto it = std::lower_bound(basic[r].begin(), basic[r].end(), h);
          if (it == basic[r].end() || !(*it == h)) throw InvariantError("dcp check: h leaves the basic monomials");
          total.add_scaled(basic_nf[r][static_cast<std::size_t>(it - basic[r].begin())], v * s);
        }
      }
      if (r >= 1) {
        FreePoly hmu;
        for (const auto& [h, s] : homotopy_h(l, mu))
          for (const auto& [m, v] : model.expand(h)) {
            auto [it, ins] = hmu.emplace(m, v * s);
            if (!ins) it->second += v * s;
          }
        std::erase_if(hmu, [](const auto& kv) { return kv.second == 0; });
        total.add_scaled(model.normal_form(model.differential(hmu), r), 1);
      }
      total.add_scaled(basic_nf[r][i], Rational(-w));
      if (!total.is_zero()) ck.fail("identity fails for " + describe(l, mu));
    }
  }

  ck.begin("CM -> M induces an isomorphism in degrees < D");
  std::vector<std::vector<FreePoly>> reps(D);
  reps[0].push_back(model.one());
  rep.cm_cohomology.assign(D, 0);
  rep.cm_cohomology[0] = 1;
  for (Element a = 1; a < static_cast<Element>(l.size()); ++a) {
    auto cx = cm_complex(l, a);
    for (int q = 1; q < D; ++q) {
      const int p = cm_p_of_q(l, a, q);
      if (p < -1 || p > cx.max_degree()) continue;
      Homology h(cx, p);
      rep.cm_cohomology[q] += h.betti();
      for (const auto& z : h.cycle_representatives()) reps[q].push_back(model.expand_cm(chain_to_cm(z)));
    }
  }
  for (int q = 0; q < D; ++q) {
    rep.m_cohomology.push_back(model.cohomology_dim(q));
    if (rep.m_cohomology[q] != rep.cm_cohomology[q])
      ck.fail("H^" + std::to_string(q) + ": M gives " + std::to_string(rep.m_cohomology[q]) + ", CM gives " +
              std::to_string(rep.cm_cohomology[q]));
    EchelonBasis span;
    if (q > 0)
      for (const auto& v : model.differential_images(q - 1)) span.insert(v);
    for (const auto& z : reps[q]) {
      QVector nf = model.normal_form(z, q);
      if (!model.normal_form(model.differential(z), q + 1).is_zero()) ck.fail("a CM cycle is not a cycle in M");
      if (!span.insert(nf)) ck.fail("CM classes in degree " + std::to_string(q) + " become dependent in M");
    }
  }

  ck.begin("f((T1,m1)) f((T2,m2)) = f((T1,m1) o (T2,m2))");
  {
    struct Pair {
      Flag t;
      std::vector<int> m;
      int deg;
    };
    std::vector<Pair> pairs;
    for (const auto& t : all_flags(l)) {
      std::vector<int> m(t.size(), 0);
      auto rec = [&](auto&& self, std::size_t i, int deg) -> void {
        if (deg > D) return;
        if (i == t.size()) {
          pairs.push_back({t, m, deg});
          return;
        }
        for (int k = 0; deg + 2 * k <= D; ++k) {
          m[i] = k;
          self(self, i + 1, deg + 2 * k);
        }
        m[i] = 0;
      };
      rec(rec, 0, static_cast<int>(t.size()));
    }
    for (const auto& x : pairs)
      for (const auto& y : pairs) {
        if (x.deg + y.deg > D) continue;
        FreePoly lhs = model.multiply(model.expand_pair(x.t, x.m), model.expand_pair(y.t, y.m));
        FreePoly rhs;
        for_each_shuffle(static_cast<int>(x.t.size()), static_cast<int>(y.t.size()),
                         [&](const std::vector<bool>& word, int sign) {
                           Flag f;
                           std::vector<int> m;
                           Element join = l.bottom();
                           std::size_t i = 0, j = 0;
                           for (bool second : word) {
                             const int exp = second ? y.m[j] : x.m[i];
                             Element next = l.join(join, second ? y.t[j++] : x.t[i++]);
                             if (next == join) return;
                             f.push_back(next);
                             m.push_back(exp);
                             join = next;
                           }
                           for (const auto& [mono, v] : model.expand_pair(f, m)) {
                             auto [it, ins] = rhs.emplace(mono, v * sign);
                             if (!ins) it->second += v * sign;
                           }
                         });
        std::erase_if(rhs, [](const auto& kv) { return kv.second == 0; });
        const int d = x.deg + y.deg;
        if (!(model.normal_form(lhs, d) == model.normal_form(rhs, d))) {
          ck.fail("product of pairs of degrees " + std::to_string(x.deg) + " and " + std::to_string(y.deg));
        }
      }
  }
  return rep;
}

}  // namespace arrcoh
