#include "stone/graph_pairs.hpp"

#include <algorithm>

#include "stone/error.hpp"

namespace stone {

namespace {
constexpr std::size_t kMaxVertices = 20;
}

FiniteGraph FiniteGraph::make(std::size_t vertices, std::vector<std::pair<std::size_t, std::size_t>> edges) {
  for (auto [s, r] : edges)
    if (s >= vertices || r >= vertices)
      throw Error(ErrorKind::invalid_input,
                  "edge (" + std::to_string(s) + "," + std::to_string(r) + ") outside " + std::to_string(vertices) +
                      " vertices");
  return FiniteGraph{vertices, std::move(edges)};
}

Bitset x_forward(const FiniteGraph& g, const Bitset& h) {
  Bitset out(g.vertices);
  for (auto [s, r] : g.edges)
    if (h.test(s)) out.set(r);
  return out;
}

Bitset x_inverse(const FiniteGraph& g, const Bitset& h) {
  Bitset out = Bitset::full(g.vertices);
  for (auto [s, r] : g.edges)
    if (!h.test(r)) out.reset(s);
  return out;
}

bool positively_invariant(const FiniteGraph& g, const Bitset& h) { return x_forward(g, h).is_subset_of(h); }

Bitset j_x(const FiniteGraph& g) {
  Bitset out(g.vertices);
  for (auto [s, r] : g.edges) out.set(s);
  return out;
}

Bitset j_x_of(const FiniteGraph& g, const Bitset& i) { return (x_inverse(g, i) - i).complement(); }

JPairLattice j_pairs(const FiniteGraph& g, const Bitset& j, Exec exec) {
  const auto n = g.vertices;
  if (j.size() != n) throw Error(ErrorKind::j_not_admissible, "J is not a subset of the vertex set");
  if (n > kMaxVertices)
    throw Error(ErrorKind::size_limit, "pair enumeration supports at most " + std::to_string(kMaxVertices) + " vertices");
  const std::uint64_t total = std::uint64_t{1} << n;
  std::vector<std::vector<JPair>> found(total);
  auto visit = [&](std::uint64_t mask) {
    Bitset i = Bitset::from_mask(n, mask);
    if (!positively_invariant(g, i)) return;
    Bitset upper = j_x_of(g, i);
    Bitset lower = j | i;
    if (!lower.is_subset_of(upper)) return;
    auto free = (upper - lower).indices();
    for (std::uint64_t sub = 0; sub < (std::uint64_t{1} << free.size()); ++sub) {
      Bitset ip = lower;
      for (std::size_t k = 0; k < free.size(); ++k)
        if ((sub >> k) & 1U) ip.set(free[k]);
      found[mask].push_back(JPair{i, ip});
    }
  };
  if (exec == Exec::parallel) {
    const auto count = static_cast<std::int64_t>(total);
#pragma omp parallel for schedule(dynamic, 64)
    for (std::int64_t m = 0; m < count; ++m) visit(static_cast<std::uint64_t>(m));
  } else {
    for (std::uint64_t m = 0; m < total; ++m) visit(m);
  }

  JPairLattice pl;
  for (auto& v : found)
    for (auto& p : v) pl.pairs.push_back(std::move(p));
  std::sort(pl.pairs.begin(), pl.pairs.end(), [](const JPair& a, const JPair& b) {
    auto ca = a.i.count() + a.iprime.count(), cb = b.i.count() + b.iprime.count();
    if (ca != cb) return ca < cb;
    if (!(a.i == b.i)) return a.i < b.i;
    return a.iprime < b.iprime;
  });
  const auto m = pl.pairs.size();
  if (m > max_lattice_size())
    throw Error(ErrorKind::size_limit, "pair lattice of " + std::to_string(m) + " elements exceeds the cap");
  std::vector<std::vector<bool>> leq(m, std::vector<bool>(m, false));
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b)
      leq[a][b] = pl.pairs[a].i.is_subset_of(pl.pairs[b].i) && pl.pairs[a].iprime.is_subset_of(pl.pairs[b].iprime);
    labels.push_back("(" + format_set(pl.pairs[a].i, "v") + "," + format_set(pl.pairs[a].iprime, "v") + ")");
  }
  pl.lattice = make_lattice(FinitePoset::from_matrix(leq), std::move(labels));
  return pl;
}

PrimeSpectrum pair_prime_space(const JPairLattice& pl) { return primes(pl.lattice); }

FiniteGraph ex_75() { return FiniteGraph::make(3, {{1, 0}, {1, 2}}); }

}  // namespace stone
