#pragma once

#include <utility>
#include <vector>

#include "stone/spectrum.hpp"

namespace stone {

/// Directed graph on vertices {0, ..., vertices-1}; parallel edges allowed.
struct FiniteGraph {
  std::size_t vertices = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // (source, range)

  /// Throws invalid_input for out-of-range endpoints.
  static FiniteGraph make(std::size_t vertices, std::vector<std::pair<std::size_t, std::size_t>> edges);
};

/// Ranges of edges whose source lies in h.
Bitset x_forward(const FiniteGraph& g, const Bitset& h);
/// Vertices all of whose outgoing edges land in h (sinks included).
Bitset x_inverse(const FiniteGraph& g, const Bitset& h);
bool positively_invariant(const FiniteGraph& g, const Bitset& h);
/// Vertices with at least one outgoing edge.
Bitset j_x(const FiniteGraph& g);
/// Complement of x_inverse(i) ∖ i.
Bitset j_x_of(const FiniteGraph& g, const Bitset& i);

struct JPair {
  Bitset i;
  Bitset iprime;
  friend bool operator==(const JPair& a, const JPair& b) { return a.i == b.i && a.iprime == b.iprime; }
};

struct JPairLattice {
  std::vector<JPair> pairs;
  LatticeRef lattice;  // componentwise inclusion on `pairs`
};

/// All (I, I') with I positively invariant and J ∪ I ⊆ I' ⊆ J_X(I).
/// Throws j_not_admissible if J is not a vertex subset, size_limit above 20
/// vertices.
JPairLattice j_pairs(const FiniteGraph& g, const Bitset& j, Exec exec = Exec::parallel);
PrimeSpectrum pair_prime_space(const JPairLattice& pl);

/// v1 <- v2 -> v3.
FiniteGraph ex_75();

}  // namespace stone
