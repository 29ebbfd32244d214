#include "arrcoh/chains.hpp"

#include <algorithm>
#include <numeric>

#include "arrcoh/shuffle.hpp"

namespace arrcoh {

// ---------------------------------------------------------------- QChain

void QChain::add(const Label& label, const Rational& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms.emplace(label, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms.erase(it);
  }
}

void QChain::add(const QChain& other, const Rational& factor) {
  for (const auto& [l, v] : other.terms) add(l, factor * v);
}

// ---------------------------------------------------------------- ChainComplexQ

ChainComplexQ::ChainComplexQ(std::vector<std::vector<Label>> basis, std::vector<std::vector<QVector>> columns)
    : basis_(std::move(basis)), columns_(std::move(columns)) {
  if (basis_.size() != columns_.size()) throw ValidationError("chain complex: basis/boundary size mismatch");
  index_.resize(basis_.size());
  for (std::size_t d = 0; d < basis_.size(); ++d) {
    if (basis_[d].size() != columns_[d].size()) throw ValidationError("chain complex: missing boundary column");
    for (std::size_t j = 0; j < basis_[d].size(); ++j)
      if (!index_[d].emplace(basis_[d][j], j).second) throw ValidationError("chain complex: duplicate basis label");
  }
  for (int p = 0; p <= max_degree(); ++p) {
    const auto& lower = boundary_columns(p - 1);
    for (const auto& col : boundary_columns(p)) {
      QVector dd;
      for (const auto& [i, v] : col.entries()) {
        if (i >= size(p - 1)) throw ValidationError("chain complex: boundary entry out of range");
        dd.add_scaled(lower[i], v);
      }
      if (!dd.is_zero()) throw InvariantError("chain complex: boundary squared is nonzero");
    }
  }
}

std::size_t ChainComplexQ::size(int p) const {
  if (p < -1 || p > max_degree()) return 0;
  return basis_[p + 1].size();
}

const std::vector<Label>& ChainComplexQ::basis(int p) const {
  static const std::vector<Label> kEmpty;
  if (p < -1 || p > max_degree()) return kEmpty;
  return basis_[p + 1];
}

std::optional<std::size_t> ChainComplexQ::index_of(int p, const Label& label) const {
  if (p < -1 || p > max_degree()) return std::nullopt;
  auto it = index_[p + 1].find(label);
  if (it == index_[p + 1].end()) return std::nullopt;
  return it->second;
}

const std::vector<QVector>& ChainComplexQ::boundary_columns(int p) const {
  static const std::vector<QVector> kEmpty;
  if (p < -1 || p > max_degree()) return kEmpty;
  return columns_[p + 1];
}

QMatrix ChainComplexQ::boundary(int p) const { return QMatrix::from_columns(size(p - 1), boundary_columns(p)); }

QVector ChainComplexQ::to_vector(const QChain& c) const {
  std::vector<QVector::Entry> e;
  for (const auto& [label, v] : c.terms) {
    auto idx = index_of(c.degree, label);
    if (!idx) throw ValidationError("chain term is not a basis element of its degree");
    e.emplace_back(*idx, v);
  }
  return QVector(std::move(e));
}

QChain ChainComplexQ::to_chain(int p, const QVector& v) const {
  QChain c;
  c.degree = p;
  for (const auto& [i, x] : v.entries()) c.add(basis(p).at(i), x);
  return c;
}

QChain ChainComplexQ::apply_boundary(const QChain& c) const {
  QVector v = to_vector(c);
  QVector out;
  const auto& cols = boundary_columns(c.degree);
  for (const auto& [j, x] : v.entries()) out.add_scaled(cols[j], x);
  return to_chain(c.degree - 1, out);
}

// ---------------------------------------------------------------- complexes

FinitePoset FinitePoset::induced(const LabeledLattice& l, const std::vector<Element>& elems) {
  FinitePoset p;
  p.ids = elems;
  p.less.assign(elems.size(), std::vector<bool>(elems.size(), false));
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (std::size_t j = 0; j < elems.size(); ++j) p.less[i][j] = l.less(elems[i], elems[j]);
  return p;
}

ChainComplexQ simplicial_chain_complex(std::vector<Label> faces) {
  std::size_t top = 0;
  for (const auto& f : faces) top = std::max(top, f.size());
  std::vector<std::vector<Label>> basis(top + 1);
  basis[0].push_back({});
  for (auto& f : faces) {
    if (f.empty()) continue;
    basis[f.size()].push_back(std::move(f));
  }
  for (auto& b : basis) {
    std::sort(b.begin(), b.end());
    b.erase(std::unique(b.begin(), b.end()), b.end());
  }
  std::vector<std::map<Label, std::size_t>> index(basis.size());
  for (std::size_t d = 0; d < basis.size(); ++d)
    for (std::size_t j = 0; j < basis[d].size(); ++j) index[d][basis[d][j]] = j;

  std::vector<std::vector<QVector>> columns(basis.size());
  columns[0].assign(basis[0].size(), QVector());
  for (std::size_t d = 1; d < basis.size(); ++d) {
    for (const auto& s : basis[d]) {
      std::vector<QVector::Entry> e;
      for (std::size_t i = 0; i < s.size(); ++i) {
        Label face = s;
        face.erase(face.begin() + static_cast<std::ptrdiff_t>(i));
        auto it = index[d - 1].find(face);
        if (it == index[d - 1].end()) throw ValidationError("simplicial complex is not closed under faces");
        e.emplace_back(it->second, Rational(i % 2 ? -1 : 1));
      }
      columns[d].push_back(QVector(std::move(e)));
    }
  }
  return ChainComplexQ(std::move(basis), std::move(columns));
}

ChainComplexQ flag_complex(const FinitePoset& p) {
  const std::size_t n = p.ids.size();
  std::vector<Label> faces;
  std::vector<std::size_t> chain;
  auto extend = [&](auto&& self) -> void {
    Label f;
    for (auto i : chain) f.push_back(p.ids[i]);
    faces.push_back(std::move(f));
    for (std::size_t j = 0; j < n; ++j)
      if (p.less[chain.back()][j]) {
        chain.push_back(j);
        self(self);
        chain.pop_back();
      }
  };
  for (std::size_t i = 0; i < n; ++i) {
    chain.assign(1, i);
    extend(extend);
  }
  return simplicial_chain_complex(std::move(faces));
}

ChainComplexQ lower_interval_flag_complex(const LabeledLattice& l, Element a) {
  return flag_complex(FinitePoset::induced(l, l.open_interval(l.bottom(), a)));
}

ChainComplexQ atomic_complex(const LabeledLattice& l) {
  if (!l.is_atomic()) throw ValidationError("atomic complex requires an atomic lattice");
  const auto& atoms = l.atoms();
  std::vector<Label> faces;
  Label cur;
  auto rec = [&](auto&& self, std::size_t start, Element join) -> void {
    for (std::size_t i = start; i < atoms.size(); ++i) {
      Element j = l.join(join, atoms[i]);
      if (j == l.top()) continue;  // joins only grow, so supersets fail too
      cur.push_back(atoms[i]);
      faces.push_back(cur);
      self(self, i + 1, j);
      cur.pop_back();
    }
  };
  rec(rec, 0, l.bottom());
  return simplicial_chain_complex(std::move(faces));
}

// ---------------------------------------------------------------- homology

namespace {

struct TrackedRow {
  QVector vec;
  QVector combo;
};

// Kernel of the map whose j-th column is cols[j], by column elimination
// with the combination of original columns tracked.
std::vector<QVector> kernel_of_columns(const std::vector<QVector>& cols) {
  std::map<std::size_t, TrackedRow> piv;
  std::vector<QVector> kernel;
  for (std::size_t j = 0; j < cols.size(); ++j) {
    QVector v = cols[j];
    QVector combo = QVector::unit(j);
    std::size_t pos = 0;
    while (pos < v.entries().size()) {
      auto it = piv.find(v.entries()[pos].first);
      if (it == piv.end()) {
        ++pos;
        continue;
      }
      Rational f = v.entries()[pos].second / it->second.vec.leading().second;
      v.add_scaled(it->second.vec, -f);
      combo.add_scaled(it->second.combo, -f);
    }
    if (v.is_zero()) kernel.push_back(std::move(combo));
    else {
      std::size_t p = v.leading().first;
      piv.emplace(p, TrackedRow{std::move(v), std::move(combo)});
    }
  }
  return kernel;
}

std::size_t column_rank(const std::vector<QVector>& cols) {
  EchelonBasis e;
  for (const auto& c : cols) e.insert(c);
  return e.rank();
}

}  // namespace

Homology::Homology(const ChainComplexQ& c, int p)
    : degree_(p), labels_(c.basis(p)), boundary_(c.boundary_columns(p)) {
  for (std::size_t j = 0; j < labels_.size(); ++j) index_[labels_[j]] = j;
  for (const auto& col : c.boundary_columns(p + 1)) span_.insert(col, kImageTag);
  const std::size_t image_rank = span_.rank();
  auto kernel = kernel_of_columns(boundary_);
  for (auto& k : kernel) {
    auto red = span_.reduce(std::move(k));
    if (red.remainder.is_zero()) continue;
    QChain rep;
    rep.degree = p;
    for (const auto& [i, v] : red.remainder.entries()) rep.add(labels_[i], v);
    span_.insert(red.remainder, reps_.size());
    reps_.push_back(std::move(rep));
  }
  if (image_rank + reps_.size() != kernel.size())
    throw InvariantError("homology: representatives do not complete the boundary space to the cycle space");
}

bool Homology::is_cycle(const QChain& z) const {
  QVector out;
  for (const auto& [label, v] : z.terms) {
    auto it = index_.find(label);
    if (it == index_.end()) return false;
    out.add_scaled(boundary_[it->second], v);
  }
  return out.is_zero();
}

std::vector<Rational> Homology::reduce(const QChain& z) const {
  if (z.degree != degree_ && !z.is_zero()) throw ValidationError("homology reduce: chain has the wrong degree");
  if (!is_cycle(z)) throw ValidationError("homology reduce: chain is not a cycle");
  std::vector<QVector::Entry> e;
  for (const auto& [label, v] : z.terms) e.emplace_back(index_.at(label), v);
  auto red = span_.reduce(QVector(std::move(e)));
  if (!red.remainder.is_zero()) throw InvariantError("homology reduce: cycle outside the computed cycle space");
  std::vector<Rational> coords(reps_.size(), Rational(0));
  for (const auto& [tag, f] : red.used)
    if (tag != kImageTag) coords.at(tag) = f;
  return coords;
}

std::vector<std::size_t> betti_numbers(const ChainComplexQ& c) {
  const int top = c.max_degree();
  std::vector<std::size_t> rk(static_cast<std::size_t>(top + 3), 0);  // rk[p + 1] = rank ∂_p
  for (int p = 0; p <= top; ++p) rk[p + 1] = column_rank(c.boundary_columns(p));
  std::vector<std::size_t> out;
  for (int p = -1; p <= top; ++p) out.push_back(c.size(p) - rk[p + 1] - rk[p + 2]);
  return out;
}

// ---------------------------------------------------------------- chain maps

QChain atoms_to_flags(const LabeledLattice& l, const std::vector<Element>& atoms) {
  QChain out;
  out.degree = static_cast<int>(atoms.size()) - 1;
  std::vector<bool> used(atoms.size(), false);
  Flag flag;
  auto rec = [&](auto&& self, Element join, int inversions) -> void {
    if (flag.size() == atoms.size()) {
      out.add(flag, Rational(inversions % 2 ? -1 : 1));
      return;
    }
    int before = 0;  // unused atoms preceding the candidate in atom order
    for (std::size_t i = 0; i < atoms.size(); ++i) {
      if (used[i]) continue;
      Element j = l.join(join, atoms[i]);
      if (j != join) {  // a repeated element kills the flag
        used[i] = true;
        flag.push_back(j);
        self(self, j, inversions + before);
        flag.pop_back();
        used[i] = false;
      }
      ++before;
    }
  };
  rec(rec, l.bottom(), 0);
  return out;
}

QChain shuffle_flag_product(const LabeledLattice& l, const Flag& fa, Element a, const Flag& fb, Element b) {
  Flag ta = fa, tb = fb;
  ta.push_back(a);
  tb.push_back(b);
  QChain out;
  out.degree = static_cast<int>(fa.size() + fb.size());
  for_each_shuffle(static_cast<int>(ta.size()), static_cast<int>(tb.size()),
                   [&](const std::vector<bool>& word, int sign) {
                     Flag f;
                     Element join = l.bottom();
                     std::size_t i = 0, j = 0;
                     for (bool second : word) {
                       Element next = l.join(join, second ? tb[j++] : ta[i++]);
                       if (next == join) return;
                       f.push_back(next);
                       join = next;
                     }
                     f.pop_back();  // the final element is a ∨ b
                     out.add(f, Rational(sign));
                   });
  return out;
}

}  // namespace arrcoh
