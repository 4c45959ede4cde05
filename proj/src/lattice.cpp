#include "stone/lattice.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <deque>
#include <string>

#include "stone/error.hpp"

namespace stone {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::not_a_poset: return "NotAPoset";
    case ErrorKind::not_a_lattice: return "NotALattice";
    case ErrorKind::not_a_frame: return "NotAFrame";
    case ErrorKind::not_monotone: return "NotMonotone";
    case ErrorKind::shape_mismatch: return "ShapeMismatch";
    case ErrorKind::adjunction_failure: return "AdjunctionFailure";
    case ErrorKind::not_locale_morphism: return "NotLocaleMorphism";
    case ErrorKind::jr_violated: return "JRViolated";
    case ErrorKind::mi_violated: return "MIViolated";
    case ErrorKind::condition_violated: return "ConditionViolated";
    case ErrorKind::j_not_admissible: return "JNotAdmissible";
    case ErrorKind::size_limit: return "SizeLimitExceeded";
    case ErrorKind::invalid_input: return "InvalidInput";
    case ErrorKind::sweep_failed: return "SweepFailed";
  }
  return "Error";
}

std::string format_set(const Bitset& s, const std::string& prefix, bool one_based) {
  std::string out = "{";
  bool first = true;
  s.for_each([&](std::size_t i) {
    if (!first) out += ',';
    first = false;
    out += prefix + std::to_string(one_based ? i + 1 : i);
  });
  return out + "}";
}

namespace {

std::atomic<std::size_t>& lattice_cap() {
  static std::atomic<std::size_t> cap = [] {
    std::size_t value = 4096;
    if (const char* env = std::getenv("STONE_MAX_LATTICE")) {
      char* end = nullptr;
      auto parsed = std::strtoull(env, &end, 10);
      if (end != env && *end == '\0' && parsed > 0) value = static_cast<std::size_t>(parsed);
    }
    return value;
  }();
  return cap;
}

void check_cap(std::size_t n) {
  if (n > max_lattice_size())
    throw Error(ErrorKind::size_limit,
                "lattice of " + std::to_string(n) + " elements exceeds cap " + std::to_string(max_lattice_size()));
}

}  // namespace

std::size_t max_lattice_size() { return lattice_cap().load(); }
void set_max_lattice_size(std::size_t n) { lattice_cap().store(n); }

// ---------------------------------------------------------------------------
// FinitePoset

FinitePoset FinitePoset::from_down_rows(std::vector<Bitset> down) {
  FinitePoset p;
  const auto n = down.size();
  p.up_.assign(n, Bitset(n));
  for (std::size_t x = 0; x < n; ++x) down[x].for_each([&](std::size_t y) { p.up_[y].set(x); });
  p.down_ = std::move(down);
  return p;
}

FinitePoset FinitePoset::from_covers(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& less) {
  std::vector<Bitset> down(n, Bitset(n));
  for (std::size_t x = 0; x < n; ++x) down[x].set(x);
  for (auto [a, b] : less) {
    if (a >= n || b >= n)
      throw Error(ErrorKind::not_a_poset, "relation index out of range (" + std::to_string(a) + "," +
                                              std::to_string(b) + ") for size " + std::to_string(n));
    down[b].set(a);
  }
  // Warshall closure on rows.
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t x = 0; x < n; ++x)
      if (down[x].test(k)) down[x] |= down[k];
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x + 1; y < n; ++y)
      if (down[x].test(y) && down[y].test(x))
        throw Error(ErrorKind::not_a_poset,
                    "cycle through " + std::to_string(x) + " and " + std::to_string(y) + " violates antisymmetry");
  return from_down_rows(std::move(down));
}

FinitePoset FinitePoset::from_matrix(const std::vector<std::vector<bool>>& leq) {
  const auto n = leq.size();
  std::vector<Bitset> down(n, Bitset(n));
  for (std::size_t x = 0; x < n; ++x) {
    if (leq[x].size() != n) throw Error(ErrorKind::not_a_poset, "relation matrix is not square");
    for (std::size_t y = 0; y < n; ++y)
      if (leq[x][y]) down[y].set(x);
  }
  for (std::size_t x = 0; x < n; ++x) {
    if (!down[x].test(x)) throw Error(ErrorKind::not_a_poset, "not reflexive at " + std::to_string(x));
    for (std::size_t y = 0; y < n; ++y) {
      if (x != y && down[x].test(y) && down[y].test(x))
        throw Error(ErrorKind::not_a_poset,
                    "not antisymmetric at (" + std::to_string(x) + "," + std::to_string(y) + ")");
      if (down[x].test(y) && !down[y].is_subset_of(down[x]))
        throw Error(ErrorKind::not_a_poset, "not transitive below " + std::to_string(x));
    }
  }
  return from_down_rows(std::move(down));
}

FinitePoset FinitePoset::chain(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> less;
  for (std::size_t i = 0; i + 1 < n; ++i) less.emplace_back(i, i + 1);
  return from_covers(n, less);
}

FinitePoset FinitePoset::antichain(std::size_t n) { return from_covers(n, {}); }

bool FinitePoset::is_downset(const Bitset& s) const {
  bool ok = true;
  s.for_each([&](std::size_t x) { ok = ok && down_[x].is_subset_of(s); });
  return ok;
}

bool FinitePoset::is_upset(const Bitset& s) const {
  bool ok = true;
  s.for_each([&](std::size_t x) { ok = ok && up_[x].is_subset_of(s); });
  return ok;
}

Bitset FinitePoset::down_closure(const Bitset& s) const {
  Bitset out(size());
  s.for_each([&](std::size_t x) { out |= down_[x]; });
  return out;
}

Bitset FinitePoset::up_closure(const Bitset& s) const {
  Bitset out(size());
  s.for_each([&](std::size_t x) { out |= up_[x]; });
  return out;
}

FinitePoset FinitePoset::induced(const std::vector<std::size_t>& keep) const {
  const auto m = keep.size();
  std::vector<Bitset> down(m, Bitset(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      if (leq(keep[j], keep[i])) down[i].set(j);
  return from_down_rows(std::move(down));
}

std::vector<std::pair<std::size_t, std::size_t>> FinitePoset::covers() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  const auto n = size();
  for (std::size_t b = 0; b < n; ++b)
    down_[b].for_each([&](std::size_t a) {
      if (a == b) return;
      // a < b is a cover iff no c with a < c < b
      Bitset between = up_[a] & down_[b];
      if (between.count() == 2) out.emplace_back(a, b);
    });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::size_t> FinitePoset::linear_extension() const {
  std::vector<std::size_t> order(size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return down_[a].count() < down_[b].count(); });
  return order;
}

// ---------------------------------------------------------------------------
// FiniteLattice

std::string FiniteLattice::label(Element e) const {
  if (e < labels_.size()) return labels_[e];
  return "e" + std::to_string(e);
}

FiniteLattice validate_lattice(const FinitePoset& order, std::vector<std::string> labels) {
  const auto n = order.size();
  if (n == 0) throw Error(ErrorKind::not_a_lattice, "empty poset has no top element");
  check_cap(n);
  if (!labels.empty() && labels.size() != n)
    throw Error(ErrorKind::invalid_input, "label count does not match lattice size");

  FiniteLattice l;
  l.order_ = order;
  l.labels_ = std::move(labels);
  l.meet_.assign(n * n, 0);
  l.join_.assign(n * n, 0);

  std::vector<std::size_t> below(n), above(n);
  for (std::size_t x = 0; x < n; ++x) {
    below[x] = order.down(x).count();
    above[x] = order.up(x).count();
  }

  bool has_top = false, has_bottom = false;
  for (std::size_t x = 0; x < n; ++x) {
    if (below[x] == n) l.top_ = static_cast<Element>(x), has_top = true;
    if (above[x] == n) l.bottom_ = static_cast<Element>(x), has_bottom = true;
  }
  if (!has_top) throw Error(ErrorKind::not_a_lattice, "no top element");
  if (!has_bottom) throw Error(ErrorKind::not_a_lattice, "no bottom element");

  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a; b < n; ++b) {
      Bitset lower = order.down(a) & order.down(b);
      std::size_t best = n;
      lower.for_each([&](std::size_t c) {
        if (best == n || below[c] > below[best]) best = c;
      });
      if (best == n || !lower.is_subset_of(order.down(best)))
        throw Error(ErrorKind::not_a_lattice,
                    "elements " + std::to_string(a) + " and " + std::to_string(b) + " have no greatest lower bound");
      Bitset upper = order.up(a) & order.up(b);
      std::size_t least = n;
      upper.for_each([&](std::size_t c) {
        if (least == n || above[c] > above[least]) least = c;
      });
      if (least == n || !upper.is_subset_of(order.up(least)))
        throw Error(ErrorKind::not_a_lattice,
                    "elements " + std::to_string(a) + " and " + std::to_string(b) + " have no least upper bound");
      l.meet_[a * n + b] = l.meet_[b * n + a] = static_cast<Element>(best);
      l.join_[a * n + b] = l.join_[b * n + a] = static_cast<Element>(least);
    }
  }
  return l;
}

LatticeRef make_lattice(const FinitePoset& order, std::vector<std::string> labels) {
  return std::make_shared<const FiniteLattice>(validate_lattice(order, std::move(labels)));
}

bool same_lattice(const FiniteLattice& a, const FiniteLattice& b) { return &a == &b || a.order() == b.order(); }

Element big_meet(const FiniteLattice& l, std::span<const Element> s) {
  Element acc = l.top();
  for (auto e : s) acc = l.meet(acc, e);
  return acc;
}

Element big_join(const FiniteLattice& l, std::span<const Element> s) {
  Element acc = l.bottom();
  for (auto e : s) acc = l.join(acc, e);
  return acc;
}

Element big_meet(const FiniteLattice& l, const Bitset& s) {
  Element acc = l.top();
  s.for_each([&](std::size_t e) { acc = l.meet(acc, static_cast<Element>(e)); });
  return acc;
}

Element big_join(const FiniteLattice& l, const Bitset& s) {
  Element acc = l.bottom();
  s.for_each([&](std::size_t e) { acc = l.join(acc, static_cast<Element>(e)); });
  return acc;
}

FrameWitness is_frame(const FiniteLattice& l, Exec exec) {
  const auto n = l.size();
  auto violates_at = [&](std::size_t x, Element& y_out, Element& z_out) {
    const auto ex = static_cast<Element>(x);
    for (Element y = 0; y < n; ++y)
      for (Element z = y + 1; z < n; ++z)
        if (l.meet(ex, l.join(y, z)) != l.join(l.meet(ex, y), l.meet(ex, z))) {
          y_out = y;
          z_out = z;
          return true;
        }
    return false;
  };
  auto bad = find_first(
      n,
      [&](std::size_t x) {
        Element y, z;
        return violates_at(x, y, z);
      },
      exec);
  FrameWitness w;
  w.distributive = !bad.has_value();
  if (bad) {
    Element y = 0, z = 0;
    violates_at(*bad, y, z);
    w.violation = std::array<Element, 3>{static_cast<Element>(*bad), y, z};
  }
  return w;
}

// ---------------------------------------------------------------------------
// SetLattice / Birkhoff construction

Element SetLattice::element_of(const Bitset& s) const {
  auto it = index.find(s);
  if (it == index.end()) throw Error(ErrorKind::invalid_input, "set is not an element of this lattice");
  return it->second;
}

SetLattice downset_lattice(const FinitePoset& p, const std::string& point_prefix) {
  const auto n = p.size();
  std::unordered_map<Bitset, bool, BitsetHash> seen;
  std::vector<Bitset> sets;
  std::deque<Bitset> queue;
  queue.emplace_back(n);
  seen.emplace(queue.front(), true);
  while (!queue.empty()) {
    Bitset d = std::move(queue.front());
    queue.pop_front();
    for (std::size_t x = 0; x < n; ++x) {
      if (d.test(x)) continue;
      // x can be added iff everything strictly below it is already in d
      Bitset strictly_below = p.down(x);
      strictly_below.reset(x);
      if (!strictly_below.is_subset_of(d)) continue;
      Bitset next = d;
      next.set(x);
      if (seen.emplace(next, true).second) {
        queue.push_back(next);
        if (seen.size() > max_lattice_size()) check_cap(seen.size());
      }
    }
    sets.push_back(std::move(d));
  }
  check_cap(sets.size());
  std::sort(sets.begin(), sets.end());

  SetLattice out;
  const auto m = sets.size();
  std::vector<Bitset> down(m, Bitset(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j <= i; ++j)
      if (sets[j].is_subset_of(sets[i])) down[i].set(j);
  std::vector<std::vector<bool>> leq(m, std::vector<bool>(m, false));
  for (std::size_t i = 0; i < m; ++i) down[i].for_each([&](std::size_t j) { leq[j][i] = true; });
  std::vector<std::string> labels;
  labels.reserve(m);
  for (const auto& s : sets) labels.push_back(format_set(s, point_prefix));
  out.lattice = make_lattice(FinitePoset::from_matrix(leq), std::move(labels));
  for (std::size_t i = 0; i < m; ++i) out.index.emplace(sets[i], static_cast<Element>(i));
  out.sets = std::move(sets);
  return out;
}

}  // namespace stone
