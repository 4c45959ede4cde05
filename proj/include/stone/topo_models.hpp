#pragma once

#include <vector>

#include "stone/quasiorbit.hpp"
#include "stone/spectrum.hpp"

namespace stone {

using Permutation = std::vector<std::size_t>;

/// Group of order automorphisms of a finite T0 space, stored as the full
/// closure of its generators.
class FiniteGroupAction {
 public:
  /// Throws invalid_input if a generator is not a permutation preserving the
  /// specialization order, size_limit if the closure exceeds 10^4 elements.
  static FiniteGroupAction make(SpaceRef space, std::vector<Permutation> generators);

  const SpaceRef& space() const { return space_; }
  const std::vector<Permutation>& generators() const { return generators_; }
  /// All group elements; the identity comes first.
  const std::vector<Permutation>& elements() const { return elements_; }
  std::size_t order() const { return elements_.size(); }
  Bitset orbit(std::size_t p) const;
  Bitset translate(const Permutation& g, const Bitset& s) const;

 private:
  SpaceRef space_;
  std::vector<Permutation> generators_;
  std::vector<Permutation> elements_;
};

struct Partition {
  std::vector<std::size_t> class_of;
  std::vector<Bitset> classes;  // numbered by smallest member

  static Partition from_labels(const std::vector<std::size_t>& key);
  friend bool operator==(const Partition& a, const Partition& b) { return a.class_of == b.class_of; }
};

struct InvariantOpens {
  LatticeRef lattice;
  std::vector<Element> embed;  // into O(space)
  MonotoneMap insertion;       // lattice -> O(space)
};

InvariantOpens invariant_opens(const FiniteGroupAction& a);
/// p ~ q iff the closures of their orbits agree.
Partition orbit_closure_relation(const FiniteGroupAction& a);
/// L_A = O(X), L_B = invariant opens, i = saturation, r = insertion.
InclusionData action_inclusion_data(const FiniteGroupAction& a);
/// π-fibres of the quasi-orbit construction, pulled back to points of X
/// through soberification, coincide with the orbit-closure classes.
bool action_quasi_orbit_agreement(const FiniteGroupAction& a);

/// Continuous map from a total space to a base space.
struct BundleMap {
  SpaceRef total;
  SpaceRef base;
  PointMap proj;

  /// Throws invalid_input if proj is not continuous.
  static BundleMap make(SpaceRef total, SpaceRef base, std::vector<std::size_t> proj);
};

/// L_A = O(base), L_B = O(total), i(U) = proj⁻¹(U),
/// r(V) = interior(base ∖ proj(total ∖ V)).
InclusionData bundle_inclusion_data(const BundleMap& b);

}  // namespace stone
