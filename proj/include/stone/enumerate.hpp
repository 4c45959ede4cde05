#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "stone/galois.hpp"
#include "stone/lattice.hpp"
#include "stone/topo_models.hpp"

namespace stone {

/// One representative per isomorphism class of posets on n points, each
/// naturally labelled (x < y implies index x < index y).
std::vector<FinitePoset> unlabeled_posets(std::size_t n);

/// All order automorphisms.
std::vector<Permutation> automorphisms(const FinitePoset& p);

/// Subgroups of Aut(p) generated by at most two elements with order <= max_order,
/// each given by a generating set.
std::vector<std::vector<Permutation>> small_subgroups(const FinitePoset& p, std::size_t max_order);

/// Calls `visit` on every order-preserving map p -> q (as a point table).
void for_each_monotone_map(const FinitePoset& p, const FinitePoset& q,
                           const std::function<void(const std::vector<std::size_t>&)>& visit);

/// Locale morphisms l -> m: enumerated when |m|^|l| <= cap, otherwise
/// `samples` random monotone candidates are filtered.
std::vector<MonotoneMap> locale_morphisms(const LatticeRef& l, const LatticeRef& m, std::uint64_t cap,
                                          std::mt19937_64& rng, std::size_t samples);

/// Uniform draw from [0, n) by rejection sampling.
std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t n);
bool draw_chance(std::mt19937_64& rng, std::uint32_t percent);

/// Random poset on n points: each pair (a, b) with a < b is a relation with
/// the given percentage, then closed transitively.
FinitePoset random_poset(std::mt19937_64& rng, std::size_t n, std::uint32_t edge_percent);

}  // namespace stone
