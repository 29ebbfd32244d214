#include "arrcoh/lattice.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace arrcoh {

// ---------------------------------------------------------------- Partition

Partition Partition::canonical(int n, std::vector<std::vector<int>> blocks) {
  std::vector<int> seen(n + 1, 0);
  for (auto& b : blocks) {
    if (b.empty()) throw ValidationError("empty block in partition");
    std::sort(b.begin(), b.end());
    for (int x : b) {
      if (x < 1 || x > n || seen[x]++) throw ValidationError("blocks must partition {1..n}");
    }
  }
  for (int x = 1; x <= n; ++x)
    if (!seen[x]) throw ValidationError("blocks must cover {1..n}");
  std::sort(blocks.begin(), blocks.end());
  return Partition{n, std::move(blocks)};
}

std::vector<std::vector<int>> Partition::nontrivial_blocks() const {
  std::vector<std::vector<int>> out;
  for (const auto& b : blocks)
    if (b.size() >= 2) out.push_back(b);
  return out;
}

bool Partition::refines(const Partition& coarser) const {
  std::vector<int> owner(n + 1, -1);
  for (std::size_t i = 0; i < coarser.blocks.size(); ++i)
    for (int x : coarser.blocks[i]) owner[x] = static_cast<int>(i);
  for (const auto& b : blocks)
    for (int x : b)
      if (owner[x] != owner[b.front()]) return false;
  return true;
}

std::string Partition::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (i) out += '|';
    for (std::size_t j = 0; j < blocks[i].size(); ++j) {
      if (n >= 10 && j) out += ',';
      out += std::to_string(blocks[i][j]);
    }
  }
  return out;
}

// ---------------------------------------------------------------- LabeledLattice

class LatticeBuilder {
 public:
  static LabeledLattice make(std::vector<int> dims, std::vector<std::vector<bool>> leq, bool require_zero_bottom,
                             std::vector<Element> origin = {}, std::vector<Partition> partitions = {},
                             std::vector<QMatrix> subspaces = {}, bool abstract = false) {
    LabeledLattice l;
    l.dims_ = std::move(dims);
    l.leq_ = std::move(leq);
    l.origin_ = std::move(origin);
    l.partitions_ = std::move(partitions);
    l.subspaces_ = std::move(subspaces);
    l.abstract_ = abstract;
    l.finalize(require_zero_bottom);
    return l;
  }
};

LabeledLattice LabeledLattice::from_relation(std::vector<int> dims, std::vector<std::vector<bool>> leq) {
  return LatticeBuilder::make(std::move(dims), std::move(leq), true, {}, {}, {}, true);
}

LabeledLattice LabeledLattice::from_pairs(std::vector<int> dims, const std::vector<std::pair<Element, Element>>& pairs) {
  const std::size_t n = dims.size();
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  for (auto [a, b] : pairs) {
    if (a < 0 || b < 0 || static_cast<std::size_t>(a) >= n || static_cast<std::size_t>(b) >= n)
      throw ValidationError("leq pair references unknown element");
    leq[a][b] = true;
  }
  return from_relation(std::move(dims), std::move(leq));
}

void LabeledLattice::finalize(bool require_zero_bottom) {
  const std::size_t n = dims_.size();
  if (n == 0) throw ValidationError("lattice must have at least one element");
  if (leq_.size() != n) throw ValidationError("order relation size mismatch");
  for (auto& row : leq_)
    if (row.size() != n) throw ValidationError("order relation size mismatch");
  for (std::size_t i = 0; i < n; ++i) leq_[i][i] = true;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (leq_[i][k])
        for (std::size_t j = 0; j < n; ++j)
          if (leq_[k][j]) leq_[i][j] = true;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (leq_[i][j] && leq_[j][i]) throw ValidationError("order relation is not antisymmetric");
  for (std::size_t i = 0; i < n; ++i)
    if (!leq_[0][i]) throw ValidationError("element 0 must be the bottom element");

  if (require_zero_bottom && dims_[0] != 0) throw ValidationError("dim of the bottom element must be 0");
  for (std::size_t i = 0; i < n; ++i) {
    if (dims_[i] < 0) throw ValidationError("dimension labels must be nonnegative");
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && leq_[i][j] && dims_[i] >= dims_[j])
        throw ValidationError("dimension labels must be strictly monotone (element " + std::to_string(i) +
                              " < element " + std::to_string(j) + ")");
  }

  auto least_of = [&](const std::vector<Element>& cands, bool upper) -> Element {
    for (Element c : cands) {
      bool ok = true;
      for (Element d : cands)
        if (upper ? !leq_[c][d] : !leq_[d][c]) {
          ok = false;
          break;
        }
      if (ok) return c;
    }
    return -1;
  };
  join_.assign(n, std::vector<Element>(n, -1));
  meet_.assign(n, std::vector<Element>(n, -1));
  std::vector<Element> ub, lb;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a; b < n; ++b) {
      ub.clear();
      lb.clear();
      for (std::size_t c = 0; c < n; ++c) {
        if (leq_[a][c] && leq_[b][c]) ub.push_back(static_cast<Element>(c));
        if (leq_[c][a] && leq_[c][b]) lb.push_back(static_cast<Element>(c));
      }
      Element j = least_of(ub, true);
      Element m = least_of(lb, false);
      if (j < 0 || m < 0)
        throw ValidationError("not a lattice: elements " + std::to_string(a) + " and " + std::to_string(b) +
                              " lack a unique join or meet");
      join_[a][b] = join_[b][a] = j;
      meet_[a][b] = meet_[b][a] = m;
    }

  top_ = 0;
  for (std::size_t i = 0; i < n; ++i)
    if (join_[top_][i] != top_) top_ = join_[top_][i];

  atoms_.clear();
  for (std::size_t a = 1; a < n; ++a)
    if (covers(static_cast<Element>(a), 0)) atoms_.push_back(static_cast<Element>(a));

  atomic_ = true;
  for (std::size_t a = 1; a < n && atomic_; ++a) {
    auto below = atoms_below(static_cast<Element>(a));
    if (join_all(below) != static_cast<Element>(a)) atomic_ = false;
  }

  if (origin_.empty()) {
    origin_.resize(n);
    std::iota(origin_.begin(), origin_.end(), 0);
  }
  if (origin_.size() != n) throw ValidationError("origin map size mismatch");
  if (!partitions_.empty() && partitions_.size() != n) throw ValidationError("partition data size mismatch");
  if (!subspaces_.empty() && subspaces_.size() != n) throw ValidationError("subspace data size mismatch");
}

Element LabeledLattice::join_all(std::span<const Element> elems) const {
  Element acc = 0;
  for (Element e : elems) acc = join_[acc][e];
  return acc;
}

bool LabeledLattice::is_atom(Element a) const { return std::binary_search(atoms_.begin(), atoms_.end(), a); }

std::vector<Element> LabeledLattice::atoms_below(Element a) const {
  std::vector<Element> out;
  for (Element x : atoms_)
    if (leq_[x][a]) out.push_back(x);
  return out;
}

bool LabeledLattice::covers(Element upper, Element lower) const {
  if (!less(lower, upper)) return false;
  for (std::size_t c = 0; c < size(); ++c)
    if (less(lower, static_cast<Element>(c)) && less(static_cast<Element>(c), upper)) return false;
  return true;
}

std::vector<Element> LabeledLattice::open_interval(Element a, Element b) const {
  std::vector<Element> out;
  for (std::size_t c = 0; c < size(); ++c)
    if (less(a, static_cast<Element>(c)) && less(static_cast<Element>(c), b)) out.push_back(static_cast<Element>(c));
  return out;
}

std::vector<Element> LabeledLattice::closed_interval(Element a, Element b) const {
  std::vector<Element> out;
  for (std::size_t c = 0; c < size(); ++c)
    if (leq(a, static_cast<Element>(c)) && leq(static_cast<Element>(c), b)) out.push_back(static_cast<Element>(c));
  return out;
}

std::vector<std::pair<Element, Element>> LabeledLattice::covering_pairs() const {
  std::vector<std::pair<Element, Element>> out;
  for (std::size_t a = 0; a < size(); ++a)
    for (std::size_t b = 0; b < size(); ++b)
      if (covers(static_cast<Element>(b), static_cast<Element>(a)))
        out.emplace_back(static_cast<Element>(a), static_cast<Element>(b));
  return out;
}

std::string LabeledLattice::element_name(Element a) const {
  if (has_partitions()) return partition(a).to_string();
  return std::to_string(a);
}

// ---------------------------------------------------------------- subspaces

QMatrix canonical_subspace(const QMatrix& m) {
  RrefResult r = rref(m);
  QMatrix out(0, m.cols());
  for (std::size_t i = 0; i < r.rank; ++i) out.append_row(r.reduced.row(i));
  return out;
}

bool subspace_less(const QMatrix& a, const QMatrix& b) {
  if (a.rows() != b.rows()) return a.rows() < b.rows();
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) {
      Rational x = a.at(r, c), y = b.at(r, c);
      if (x != y) return x < y;
    }
  return false;
}

SubspaceArrangement::SubspaceArrangement(int ambient_dim, const std::vector<QMatrix>& subspaces)
    : ambient_dim_(ambient_dim) {
  if (ambient_dim <= 0) throw ValidationError("ambient dimension must be positive");
  for (const auto& m : subspaces) {
    if (m.cols() != static_cast<std::size_t>(ambient_dim))
      throw ValidationError("subspace matrix must have ambient_dim columns");
    QMatrix c = canonical_subspace(m);
    if (c.rows() == 0) throw ValidationError("zero subspace is not allowed in an arrangement");
    for (const auto& prev : subspaces_)
      if (prev == c) throw ValidationError("duplicate subspace in arrangement");
    subspaces_.push_back(std::move(c));
  }
}

LabeledLattice intersection_lattice(const SubspaceArrangement& arr) {
  const std::size_t cols = static_cast<std::size_t>(arr.ambient_dim());
  std::vector<QMatrix> elems{QMatrix(0, cols)};
  auto known = [&](const QMatrix& m) { return std::find(elems.begin(), elems.end(), m) != elems.end(); };
  for (const auto& s : arr.subspaces())
    if (!known(s)) elems.push_back(s);
  // closure under pairwise sums
  for (std::size_t i = 1; i < elems.size(); ++i)
    for (std::size_t j = 1; j < i; ++j) {
      QMatrix s = rowspace_sum(elems[i], elems[j]);
      if (!known(s)) elems.push_back(std::move(s));
    }
  std::sort(elems.begin(), elems.end(), subspace_less);

  const std::size_t n = elems.size();
  std::vector<int> dims(n);
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) {
    dims[i] = static_cast<int>(elems[i].rows());
    for (std::size_t j = 0; j < n; ++j)
      leq[i][j] = rowspace_sum(elems[i], elems[j]).rows() == elems[j].rows();
  }
  return LatticeBuilder::make(std::move(dims), std::move(leq), true, {}, {}, std::move(elems));
}

// ---------------------------------------------------------------- derived lattices

namespace {

LabeledLattice induced(const LabeledLattice& l, const std::vector<Element>& elems, bool zero_bottom) {
  const std::size_t n = elems.size();
  std::vector<int> dims(n);
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  std::vector<Element> origin(n);
  std::vector<Partition> parts;
  std::vector<QMatrix> subs;
  for (std::size_t i = 0; i < n; ++i) {
    dims[i] = l.dim(elems[i]);
    origin[i] = l.origin(elems[i]);
    if (l.has_partitions()) parts.push_back(l.partition(elems[i]));
    if (l.has_subspaces()) subs.push_back(l.subspace(elems[i]));
    for (std::size_t j = 0; j < n; ++j) leq[i][j] = l.leq(elems[i], elems[j]);
  }
  return LatticeBuilder::make(std::move(dims), std::move(leq), zero_bottom, std::move(origin), std::move(parts),
                              std::move(subs), l.abstract_input());
}

}  // namespace

LabeledLattice interval(const LabeledLattice& l, Element a, Element b) {
  if (!l.leq(a, b)) throw ValidationError("interval requires a <= b");
  return induced(l, l.closed_interval(a, b), false);
}

LabeledLattice sublattice_ab(const LabeledLattice& l, Element a, Element b) {
  if (a == l.bottom() || b == l.bottom()) throw ValidationError("sublattice_ab requires non-bottom elements");
  auto atoms_a = l.atoms_below(a);
  auto atoms_b = l.atoms_below(b);
  if (l.join_all(atoms_a) != a || l.join_all(atoms_b) != b)
    throw ValidationError("sublattice_ab requires the lattice to be atomic below a and b");
  std::vector<Element> gen = atoms_a;
  gen.insert(gen.end(), atoms_b.begin(), atoms_b.end());
  std::sort(gen.begin(), gen.end());
  gen.erase(std::unique(gen.begin(), gen.end()), gen.end());
  std::vector<Element> elems = gen;
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (Element g : gen) {
      Element j = l.join(elems[i], g);
      if (std::find(elems.begin(), elems.end(), j) == elems.end()) elems.push_back(j);
    }
  elems.push_back(l.bottom());
  std::sort(elems.begin(), elems.end());
  return induced(l, elems, true);
}

LabeledLattice kequal_lattice(int n, int k, int ell) {
  if (n < 2 || k < 2 || ell < 0 || (k > n && ell == 0))
    throw ValidationError("kequal_lattice requires n, k >= 2 and (k <= n or ell > 0)");
  if (n > 10) throw ValidationError("kequal_lattice: n > 10 is beyond the supported range");

  std::vector<Partition> parts;
  std::vector<int> rgs(n, 0);  // restricted growth string
  std::vector<int> maxprefix(n, 0);
  for (;;) {
    int nb = *std::max_element(rgs.begin(), rgs.end()) + 1;
    std::vector<std::vector<int>> blocks(nb);
    for (int i = 0; i < n; ++i) blocks[rgs[i]].push_back(i + 1);
    bool ok = std::all_of(blocks.begin(), blocks.end(), [&](const std::vector<int>& b) {
      return b.size() == 1 || static_cast<int>(b.size()) >= k || b.front() <= ell;
    });
    if (ok) parts.push_back(Partition::canonical(n, std::move(blocks)));
    // next restricted growth string
    int i = n - 1;
    while (i > 0 && rgs[i] == maxprefix[i - 1] + 1) --i;
    if (i == 0) break;
    ++rgs[i];
    maxprefix[i] = std::max(maxprefix[i - 1], rgs[i]);
    for (int j = i + 1; j < n; ++j) {
      rgs[j] = 0;
      maxprefix[j] = maxprefix[j - 1];
    }
  }
  auto dim_of = [&](const Partition& p) { return n - static_cast<int>(p.blocks.size()); };
  std::sort(parts.begin(), parts.end(), [&](const Partition& a, const Partition& b) {
    if (dim_of(a) != dim_of(b)) return dim_of(a) < dim_of(b);
    return a.blocks < b.blocks;
  });
  const std::size_t m = parts.size();
  std::vector<int> dims(m);
  std::vector<std::vector<bool>> leq(m, std::vector<bool>(m, false));
  for (std::size_t i = 0; i < m; ++i) {
    dims[i] = dim_of(parts[i]);
    for (std::size_t j = 0; j < m; ++j) leq[i][j] = parts[i].refines(parts[j]);
  }
  return LatticeBuilder::make(std::move(dims), std::move(leq), true, {}, std::move(parts));
}

SubspaceArrangement kequal_arrangement(int n, int k) {
  if (k < 2 || k > n) throw ValidationError("kequal_arrangement requires 2 <= k <= n");
  std::vector<QMatrix> subs;
  std::vector<int> pick(k);
  std::iota(pick.begin(), pick.end(), 0);
  for (;;) {
    QMatrix m(k - 1, n);
    for (int r = 1; r < k; ++r) {
      m.set(r - 1, pick[0], -1);
      m.set(r - 1, pick[r], 1);
    }
    subs.push_back(m);
    int i = k - 1;
    while (i >= 0 && pick[i] == n - k + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
  return SubspaceArrangement(n, subs);
}

std::optional<std::vector<int>> is_geometric(const LabeledLattice& l) {
  if (!l.is_atomic()) return std::nullopt;
  const std::size_t n = l.size();
  std::vector<Element> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](Element a, Element b) { return l.dim(a) < l.dim(b); });
  std::vector<int> longest(n, 0), shortest(n, 0);
  for (Element b : order) {
    if (b == l.bottom()) continue;
    int lo = -1, hi = -1;
    for (Element a : order) {
      if (!l.covers(b, a)) continue;
      lo = lo < 0 ? shortest[a] + 1 : std::min(lo, shortest[a] + 1);
      hi = std::max(hi, longest[a] + 1);
    }
    shortest[b] = lo;
    longest[b] = hi;
  }
  if (shortest != longest) return std::nullopt;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      Element j = l.join(static_cast<Element>(a), static_cast<Element>(b));
      Element m = l.meet(static_cast<Element>(a), static_cast<Element>(b));
      if (longest[j] + longest[m] > longest[a] + longest[b]) return std::nullopt;
    }
  return longest;
}

long moebius(const LabeledLattice& l, Element a, Element b) {
  if (!l.leq(a, b)) throw ValidationError("moebius requires a <= b");
  auto elems = l.closed_interval(a, b);
  std::sort(elems.begin(), elems.end(), [&](Element x, Element y) { return l.dim(x) < l.dim(y); });
  std::map<Element, long> mu;
  for (Element c : elems) {
    if (c == a) {
      mu[c] = 1;
      continue;
    }
    long s = 0;
    for (const auto& [d, v] : mu)
      if (l.less(d, c)) s += v;
    mu[c] = -s;
  }
  return mu.at(b);
}

}  // namespace arrcoh
