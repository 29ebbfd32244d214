#include "arrcoh/cm_algebra.hpp"

#include <algorithm>

#include "arrcoh/shuffle.hpp"

namespace arrcoh {

void CMElement::add(const Flag& t, const Rational& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms.emplace(t, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms.erase(it);
  }
}

void CMElement::add(const CMElement& other, const Rational& factor) {
  for (const auto& [t, v] : other.terms) add(t, factor * v);
}

Element cm_top(const LabeledLattice& l, const Flag& t) { return t.empty() ? l.bottom() : t.back(); }

int cm_degree(const LabeledLattice& l, const Flag& t) {
  if (t.empty()) return 0;
  return 2 * l.dim(t.back()) - static_cast<int>(t.size());
}

CMElement cm_differential(const LabeledLattice&, const Flag& t) {
  CMElement out;
  for (std::size_t i = 0; i + 1 < t.size(); ++i) {
    Flag f = t;
    f.erase(f.begin() + static_cast<std::ptrdiff_t>(i));
    out.add(f, Rational(i % 2 == 0 ? -1 : 1));  // 1-based index i + 1
  }
  return out;
}

CMElement cm_differential(const LabeledLattice& l, const CMElement& x) {
  CMElement out;
  for (const auto& [t, v] : x.terms) out.add(cm_differential(l, t), v);
  return out;
}

CMElement cm_product(const LabeledLattice& l, const Flag& t1, const Flag& t2) {
  CMElement out;
  if (t1.empty()) {
    out.add(t2, 1);
    return out;
  }
  if (t2.empty()) {
    out.add(t1, 1);
    return out;
  }
  const Element a = t1.back(), b = t2.back();
  if (l.dim(l.join(a, b)) != l.dim(a) + l.dim(b)) return out;
  for_each_shuffle(static_cast<int>(t1.size()), static_cast<int>(t2.size()),
                   [&](const std::vector<bool>& word, int sign) {
                     Flag f;
                     Element join = l.bottom();
                     std::size_t i = 0, j = 0;
                     for (bool second : word) {
                       Element next = l.join(join, second ? t2[j++] : t1[i++]);
                       if (next == join) return;
                       f.push_back(next);
                       join = next;
                     }
                     out.add(f, Rational(sign));
                   });
  return out;
}

CMElement cm_element_product(const LabeledLattice& l, const CMElement& x, const CMElement& y) {
  CMElement out;
  for (const auto& [t1, v1] : x.terms)
    for (const auto& [t2, v2] : y.terms) out.add(cm_product(l, t1, t2), v1 * v2);
  return out;
}

std::vector<Flag> flags_with_top(const LabeledLattice& l, Element a) {
  std::vector<Flag> out;
  auto below = l.open_interval(l.bottom(), a);
  // dims are strictly monotone, so sorting by dim gives a linear extension
  std::stable_sort(below.begin(), below.end(), [&](Element x, Element y) { return l.dim(x) < l.dim(y); });
  Flag cur;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    Flag f = cur;
    f.push_back(a);
    out.push_back(std::move(f));
    for (std::size_t i = start; i < below.size(); ++i) {
      if (!cur.empty() && !l.less(cur.back(), below[i])) continue;
      cur.push_back(below[i]);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

ChainComplexQ cm_complex(const LabeledLattice& l, Element a) {
  if (a == l.bottom()) throw ValidationError("cm_complex: the bottom element has no flags");
  auto flags = flags_with_top(l, a);
  std::size_t longest = 0;
  for (const auto& f : flags) longest = std::max(longest, f.size());
  std::vector<std::vector<Label>> basis(longest);  // |T| = 1 .. longest ↦ p = −1 .. longest − 2
  for (auto& f : flags) basis[f.size() - 1].push_back(std::move(f));
  for (auto& b : basis) std::sort(b.begin(), b.end());

  std::vector<std::map<Label, std::size_t>> index(basis.size());
  for (std::size_t d = 0; d < basis.size(); ++d)
    for (std::size_t j = 0; j < basis[d].size(); ++j) index[d][basis[d][j]] = j;
  std::vector<std::vector<QVector>> columns(basis.size());
  for (std::size_t d = 0; d < basis.size(); ++d)
    for (const auto& t : basis[d]) {
      std::vector<QVector::Entry> e;
      if (d > 0)
        for (const auto& [f, v] : cm_differential(l, t).terms) e.emplace_back(index[d - 1].at(f), v);
      columns[d].push_back(QVector(std::move(e)));
    }
  return ChainComplexQ(std::move(basis), std::move(columns));
}

QChain cm_to_chain(const CMElement& x, int p) {
  QChain c;
  c.degree = p;
  for (const auto& [t, v] : x.terms) {
    if (static_cast<int>(t.size()) != p + 2) throw ValidationError("cm_to_chain: term of the wrong length");
    c.add(t, v);
  }
  return c;
}

CMElement chain_to_cm(const QChain& c) {
  CMElement x;
  for (const auto& [t, v] : c.terms) x.add(t, v);
  return x;
}

}  // namespace arrcoh
