#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "stone/galois.hpp"
#include "stone/lattice.hpp"

namespace stone {

/// Finite T0 space. The specialization order has p <= q iff q lies in the
/// closure of {p}; opens are exactly the down-sets of that order.
class FiniteT0Space {
 public:
  static FiniteT0Space from_order(FinitePoset points, std::vector<std::string> labels = {});
  /// Validates the family (contains ∅ and the full set, closed under union
  /// and intersection, points separated) and recovers the order.
  static FiniteT0Space from_opens(std::size_t n, const std::vector<Bitset>& opens, std::vector<std::string> labels = {});

  std::size_t size() const { return order_.size(); }
  const FinitePoset& order() const { return order_; }
  const SetLattice& opens() const { return opens_; }
  const LatticeRef& opens_lattice() const { return opens_.lattice; }
  bool is_open(const Bitset& s) const { return order_.is_downset(s); }
  Bitset closure(const Bitset& s) const { return order_.up_closure(s); }
  /// Largest open contained in `s`.
  Bitset interior(const Bitset& s) const;
  std::string label(std::size_t p) const;

 private:
  FinitePoset order_;
  SetLattice opens_;
  std::vector<std::string> labels_;
};

using SpaceRef = std::shared_ptr<const FiniteT0Space>;

SpaceRef make_space(FinitePoset points, std::vector<std::string> labels = {});

class PointMap {
 public:
  /// Throws invalid_input if the table is out of range or not continuous.
  static PointMap make(SpaceRef source, SpaceRef target, std::vector<std::size_t> values);
  static PointMap identity(SpaceRef x);

  const SpaceRef& source() const { return source_; }
  const SpaceRef& target() const { return target_; }
  const std::vector<std::size_t>& values() const { return values_; }
  std::size_t operator()(std::size_t p) const { return values_[p]; }

  Bitset image(const Bitset& s) const;
  Bitset preimage(const Bitset& t) const;

 private:
  PointMap(SpaceRef s, SpaceRef t, std::vector<std::size_t> v)
      : source_(std::move(s)), target_(std::move(t)), values_(std::move(v)) {}

  SpaceRef source_;
  SpaceRef target_;
  std::vector<std::size_t> values_;
};

bool is_continuous(const FiniteT0Space& source, const FiniteT0Space& target, const std::vector<std::size_t>& values);
bool is_open_map(const PointMap& f);
bool is_surjective(const PointMap& f);
bool is_homeomorphism(const PointMap& f);

/// Meet-prime elements of a frame and the hull-kernel point space on them.
struct PrimeSpectrum {
  LatticeRef locale;
  std::vector<Element> primes;
  /// element -> position in `primes`, or npos.
  std::vector<std::size_t> index_of;
  /// Points are the primes, ordered as in the lattice; opens are down-sets.
  SpaceRef space;
  /// I -> U_I = {p : I !<= p}, over point indices.
  std::vector<Bitset> open_of;

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  bool is_prime(Element e) const { return index_of[e] != npos; }
};

bool is_meet_prime(const FiniteLattice& l, Element p);
/// Throws not_a_frame for non-distributive input.
PrimeSpectrum primes(const LatticeRef& l);
/// Meet-primes with the hull-kernel topology, without the frame check.
PrimeSpectrum point_space(const LatticeRef& l);

bool is_spatial(const PrimeSpectrum& s);
bool is_spatial(const LatticeRef& l);
/// Every irreducible closed set is the closure of exactly one point.
bool is_sober(const FiniteT0Space& x);

/// Preserves all joins and all finite meets.
bool is_locale_morphism(const MonotoneMap& g);

/// For a locale morphism G: L -> O(X) (target must be X's open lattice),
/// x -> ⋁{I : x ∉ G(I)}, a point of `spec` = primes(L).
/// Throws not_a_locale_morphism.
PointMap adjunct_point_map(const MonotoneMap& g, const SpaceRef& x, const PrimeSpectrum& spec);
/// Same construction for G: L -> M, acting on the prime space of M:
/// q -> ⋁{I : G(I) <= q}.
PointMap spectral_map(const MonotoneMap& g, const PrimeSpectrum& source_spec, const PrimeSpectrum& target_spec);

struct Theorem33Report {
  bool has_lower_adjoint_F = false;
  bool eq32_holds = false;
  bool g_injective = false;
  bool pi_open = false;
  bool pi_surjective = false;
  bool equivalence_verified = false;
};

/// G: L -> O(X) a locale morphism. Throws not_a_locale_morphism.
Theorem33Report theorem33_check(const MonotoneMap& g, const SpaceRef& x);
Theorem33Report theorem33_check(const MonotoneMap& g, const SpaceRef& x, const PrimeSpectrum& spec);

/// x -> X ∖ cl{x}, from X to the prime space of O(X).
PointMap soberification(const SpaceRef& x, const PrimeSpectrum& opens_spec);
/// I -> U_I as a map L -> O(point space).
MonotoneMap spectrum_unit(const PrimeSpectrum& s);

/// X ≅ point_space(O(X)) via soberification.
bool point_space_round_trip(const SpaceRef& x);
/// L ≅ O(point_space(L)) via the unit.
bool opens_round_trip(const LatticeRef& l);

}  // namespace stone
