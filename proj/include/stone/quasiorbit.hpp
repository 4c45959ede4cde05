#pragma once

#include <optional>
#include <string>
#include <vector>

#include "stone/galois.hpp"
#include "stone/spectrum.hpp"

namespace stone {

/// A subset of an ambient lattice viewed as a lattice in its own right
/// (order inherited, meets and joins computed in the subset).
struct Sublattice {
  LatticeRef lattice;
  std::vector<Element> embed;       // sub element -> ambient element
  std::vector<std::size_t> index;   // ambient element -> sub element or npos

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  bool contains(Element ambient) const { return index[ambient] != npos; }
};

Sublattice make_sublattice(const FiniteLattice& ambient, const std::vector<Element>& elements);

/// Galois connection between two frames, with its fixed-point sublattices
/// and the prime spectra the condition checks work on.
struct InclusionData {
  GaloisConnection gc;
  FixedPointSublattices fixed;
  Sublattice restricted;
  Sublattice induced;
  PrimeSpectrum spec_a;
  PrimeSpectrum spec_b;
  /// Meet-primes of the restricted and induced sublattices. These need not
  /// be frames in general, so the spectra are taken without that check.
  PrimeSpectrum spec_restricted;
  PrimeSpectrum spec_induced;

  const FiniteLattice& a() const { return *gc.source(); }
  const FiniteLattice& b() const { return *gc.target(); }
};

/// Throws not_a_frame if either side is not distributive.
InclusionData make_inclusion_data(GaloisConnection gc);

bool check_JR(const InclusionData& d);
bool check_C1(const InclusionData& d);
/// Binary meets of induced elements are induced.
bool check_MIf(const InclusionData& d);
/// Every family of induced elements, including the empty one, has an induced
/// meet. Asserts agreement with check_MIf plus "top is induced".
bool check_MI(const InclusionData& d);
/// Top of L_B is induced.
bool check_nondegenerate(const InclusionData& d);

/// Prime(L_A) -> Prime(restricted), p -> largest restricted element below p.
/// Throws JRViolated.
PointMap pi_map(const InclusionData& d);

/// L_B -> induced sublattice, J -> least induced element above J.
/// Throws MIViolated with a family of induced elements whose meet escapes.
MonotoneMap F_map(const InclusionData& d);
/// Ambient version of F_map: J -> F(J) as an element of L_B.
std::vector<Element> F_table(const InclusionData& d);
/// Throws MIViolated.
bool check_C2(const InclusionData& d);

struct QuasiOrbitSpace {
  SpaceRef base;                 // Prime(L_A)
  PointMap pi;                   // base -> Prime(restricted)
  std::vector<Bitset> classes;   // fibers of pi, over base points
  std::vector<std::size_t> class_of;
  SpaceRef quotient;             // points are classes
  PointMap pi_star;              // quotient -> Prime(restricted)
};

/// Throws JRViolated.
QuasiOrbitSpace quasi_orbit_space(const InclusionData& d);

/// q -> r(q) from Prime(L_B) to Prime(restricted); nullopt if some r(q) is
/// not prime in the restricted sublattice.
std::optional<PointMap> r_on_primes(const InclusionData& d);
/// q -> i(r(q)) from Prime(L_B) to Prime(induced); nullopt if not prime.
std::optional<PointMap> ir_on_primes(const InclusionData& d);

/// ρ: Prime(L_B) -> quasi-orbit space. Throws ConditionViolated naming the
/// first failing precondition among JR, C1, MIf, nondegenerate.
PointMap quasi_orbit_map(const InclusionData& d, const QuasiOrbitSpace& q);
PointMap quasi_orbit_map(const InclusionData& d);

/// Outcome of one theorem check on one instance.
struct Verdict {
  bool applicable = false;
  bool holds = true;
  std::string detail;
};

/// With JR: C1 iff π open and surjective; when C1 holds π_* is a homeomorphism.
Verdict theorem42(const InclusionData& d);
/// MI and C2 iff r on primes is well defined, open and surjective.
Verdict theorem47(const InclusionData& d);
/// With MI: i∘r sends primes to primes of the induced sublattice, and
/// r = (induced -> restricted iso) ∘ (i∘r) on primes.
Verdict prop44(const InclusionData& d);
/// With ρ defined: ρ open and surjective iff MI and C2.
Verdict cor48(const InclusionData& d);
/// With JR and C1: ρ defined and a homeomorphism iff separates.
Verdict cor49(const InclusionData& d);

}  // namespace stone
