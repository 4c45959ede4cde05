#include "stone/enumerate.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <unordered_set>

#include "stone/error.hpp"

namespace stone {

std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t n) {
  if (n <= 1) return 0;
  const std::uint64_t threshold = (0 - n) % n;  // 2^64 mod n
  std::uint64_t x;
  do {
    x = rng();
  } while (x < threshold);
  return x % n;
}

bool draw_chance(std::mt19937_64& rng, std::uint32_t percent) { return draw_below(rng, 100) < percent; }

FinitePoset random_poset(std::mt19937_64& rng, std::size_t n, std::uint32_t edge_percent) {
  std::vector<std::pair<std::size_t, std::size_t>> less;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (draw_chance(rng, edge_percent)) less.emplace_back(a, b);
  return FinitePoset::from_covers(n, less);
}

std::vector<FinitePoset> unlabeled_posets(std::size_t n) {
  if (n > 6) throw Error(ErrorKind::size_limit, "poset enumeration supports at most 6 points");
  std::vector<std::pair<std::size_t, std::size_t>> slots;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) slots.emplace_back(a, b);
  std::vector<std::size_t> perm(n);
  std::vector<std::vector<std::size_t>> perms;
  std::iota(perm.begin(), perm.end(), 0);
  do perms.push_back(perm);
  while (std::next_permutation(perm.begin(), perm.end()));

  std::unordered_set<std::uint64_t> seen;
  std::vector<FinitePoset> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
    std::vector<std::vector<bool>> rel(n, std::vector<bool>(n, false));
    for (std::size_t s = 0; s < slots.size(); ++s)
      if ((mask >> s) & 1U) rel[slots[s].first][slots[s].second] = true;
    bool transitive = true;
    for (std::size_t a = 0; a < n && transitive; ++a)
      for (std::size_t b = a + 1; b < n && transitive; ++b)
        for (std::size_t c = b + 1; c < n; ++c)
          if (rel[a][b] && rel[b][c] && !rel[a][c]) {
            transitive = false;
            break;
          }
    if (!transitive) continue;
    std::uint64_t canonical = ~std::uint64_t{0};
    for (const auto& p : perms) {
      std::uint64_t code = 0;
      for (std::size_t s = 0; s < slots.size(); ++s)
        if ((mask >> s) & 1U) code |= std::uint64_t{1} << (p[slots[s].first] * n + p[slots[s].second]);
      canonical = std::min(canonical, code);
    }
    if (!seen.insert(canonical).second) continue;
    std::vector<std::pair<std::size_t, std::size_t>> less;
    for (std::size_t s = 0; s < slots.size(); ++s)
      if ((mask >> s) & 1U) less.push_back(slots[s]);
    out.push_back(FinitePoset::from_covers(n, less));
  }
  return out;
}

std::vector<Permutation> automorphisms(const FinitePoset& p) {
  const auto n = p.size();
  Permutation g(n);
  std::iota(g.begin(), g.end(), 0);
  std::vector<Permutation> out;
  do {
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a)
      for (std::size_t b = 0; b < n; ++b)
        if (p.leq(a, b) != p.leq(g[a], g[b])) {
          ok = false;
          break;
        }
    if (ok) out.push_back(g);
  } while (std::next_permutation(g.begin(), g.end()));
  return out;
}

std::vector<std::vector<Permutation>> small_subgroups(const FinitePoset& p, std::size_t max_order) {
  auto auts = automorphisms(p);
  const auto n = p.size();
  auto closure = [&](const std::vector<Permutation>& gens) -> std::optional<std::set<Permutation>> {
    Permutation id(n);
    std::iota(id.begin(), id.end(), 0);
    std::set<Permutation> group{id};
    std::vector<Permutation> frontier{id};
    while (!frontier.empty()) {
      auto h = frontier.back();
      frontier.pop_back();
      for (const auto& g : gens) {
        Permutation gh(n);
        for (std::size_t x = 0; x < n; ++x) gh[x] = g[h[x]];
        if (group.insert(gh).second) {
          if (group.size() > max_order) return std::nullopt;
          frontier.push_back(std::move(gh));
        }
      }
    }
    return group;
  };
  std::set<std::set<Permutation>> seen;
  std::vector<std::vector<Permutation>> out;
  for (std::size_t a = 0; a < auts.size(); ++a)
    for (std::size_t b = a; b < auts.size(); ++b) {
      std::vector<Permutation> gens{auts[a]};
      if (b != a) gens.push_back(auts[b]);
      auto group = closure(gens);
      if (!group || !seen.insert(*group).second) continue;
      out.push_back(std::move(gens));
    }
  return out;
}

void for_each_monotone_map(const FinitePoset& p, const FinitePoset& q,
                           const std::function<void(const std::vector<std::size_t>&)>& visit) {
  const auto order = p.linear_extension();
  std::vector<std::size_t> f(p.size(), 0);
  std::function<void(std::size_t)> step = [&](std::size_t k) {
    if (k == order.size()) {
      visit(f);
      return;
    }
    const auto x = order[k];
    for (std::size_t v = 0; v < q.size(); ++v) {
      bool ok = true;
      for (std::size_t j = 0; j < k && ok; ++j)
        if (p.leq(order[j], x) && !q.leq(f[order[j]], v)) ok = false;
      if (!ok) continue;
      f[x] = v;
      step(k + 1);
    }
  };
  if (q.size() == 0 && p.size() > 0) return;
  step(0);
}

std::vector<MonotoneMap> locale_morphisms(const LatticeRef& l, const LatticeRef& m, std::uint64_t cap,
                                          std::mt19937_64& rng, std::size_t samples) {
  std::vector<MonotoneMap> out;
  auto keep = [&](const std::vector<std::size_t>& f) {
    if (f[l->bottom()] != m->bottom() || f[l->top()] != m->top()) return;
    std::vector<Element> values(f.begin(), f.end());
    auto g = MonotoneMap::make(l, m, std::move(values));
    if (g.preserves_joins() && g.preserves_meets()) out.push_back(std::move(g));
  };
  double candidates = 1;
  for (std::size_t k = 0; k < l->size(); ++k) candidates *= static_cast<double>(m->size());
  if (candidates <= static_cast<double>(cap)) {
    for_each_monotone_map(l->order(), m->order(), keep);
    return out;
  }
  std::set<std::vector<Element>> seen;
  const auto order = l->order().linear_extension();
  for (std::size_t s = 0; s < samples; ++s) {
    std::vector<std::size_t> f(l->size(), 0);
    bool ok = true;
    for (std::size_t k = 0; k < order.size() && ok; ++k) {
      std::vector<std::size_t> allowed;
      for (std::size_t v = 0; v < m->size(); ++v) {
        bool fits = true;
        for (std::size_t j = 0; j < k; ++j)
          if (l->leq(static_cast<Element>(order[j]), static_cast<Element>(order[k])) &&
              !m->leq(static_cast<Element>(f[order[j]]), static_cast<Element>(v)))
            fits = false;
        if (fits) allowed.push_back(v);
      }
      if (allowed.empty()) ok = false;
      else f[order[k]] = allowed[draw_below(rng, allowed.size())];
    }
    if (!ok) continue;
    auto before = out.size();
    keep(f);
    if (out.size() > before && !seen.insert(out.back().values()).second) out.pop_back();
  }
  return out;
}

}  // namespace stone
