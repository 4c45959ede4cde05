#pragma once

#include <string>
#include <variant>
#include <vector>

#include "stone/bitset.hpp"
#include "stone/exec.hpp"
#include "stone/lattice.hpp"

namespace stone {

/// Order-preserving map between two finite lattices.
class MonotoneMap {
 public:
  /// Throws not_monotone if some x <= y has values[x] !<= values[y], and
  /// shape_mismatch if the table does not fit the lattices.
  static MonotoneMap make(LatticeRef source, LatticeRef target, std::vector<Element> values);
  static MonotoneMap identity(LatticeRef l);

  const LatticeRef& source() const { return source_; }
  const LatticeRef& target() const { return target_; }
  const std::vector<Element>& values() const { return values_; }
  Element operator()(Element x) const { return values_[x]; }

  bool preserves_joins() const;  // all joins, including the empty one
  bool preserves_meets() const;
  bool injective() const;

  friend bool operator==(const MonotoneMap& a, const MonotoneMap& b) {
    return a.values_ == b.values_ && same_lattice(*a.source_, *b.source_) && same_lattice(*a.target_, *b.target_);
  }

 private:
  MonotoneMap(LatticeRef s, LatticeRef t, std::vector<Element> v)
      : source_(std::move(s)), target_(std::move(t)), values_(std::move(v)) {}

  LatticeRef source_;
  LatticeRef target_;
  std::vector<Element> values_;
};

bool is_monotone(const FiniteLattice& source, const FiniteLattice& target, const std::vector<Element>& values);
MonotoneMap compose(const MonotoneMap& outer, const MonotoneMap& inner);

/// A pair (x, y) at which `x <= r(y)` and `i(x) <= y` disagree.
struct AbsenceWitness {
  Element x = 0;
  Element y = 0;
};

/// Throws shape_mismatch unless i: L -> M and r: M -> L.
bool is_adjoint_pair(const MonotoneMap& i, const MonotoneMap& r, Exec exec = Exec::parallel);
std::variant<MonotoneMap, AbsenceWitness> upper_adjoint(const MonotoneMap& i);
std::variant<MonotoneMap, AbsenceWitness> lower_adjoint(const MonotoneMap& r);

/// Certified adjoint pair i -| r with i: L_A -> L_B.
class GaloisConnection {
 public:
  /// Throws adjunction_failure (or shape_mismatch) when i -| r fails.
  static GaloisConnection make(MonotoneMap lower, MonotoneMap upper);
  /// Synthesizes the missing adjoint; adjunction_failure if none exists.
  static GaloisConnection from_lower(MonotoneMap lower);
  static GaloisConnection from_upper(MonotoneMap upper);
  static GaloisConnection identity(LatticeRef l);

  const MonotoneMap& lower() const { return lower_; }
  const MonotoneMap& upper() const { return upper_; }
  const LatticeRef& source() const { return lower_.source(); }
  const LatticeRef& target() const { return lower_.target(); }
  Element i(Element x) const { return lower_(x); }
  Element r(Element y) const { return upper_(y); }

 private:
  GaloisConnection(MonotoneMap lower, MonotoneMap upper) : lower_(std::move(lower)), upper_(std::move(upper)) {}

  MonotoneMap lower_;
  MonotoneMap upper_;
};

struct FixedPointSublattices {
  Bitset restricted;  // over L_A: r(i(x)) == x
  Bitset induced;     // over L_B: i(r(y)) == y
  std::vector<Element> restricted_elements;
  std::vector<Element> induced_elements;
  /// restricted_elements[k] <-> induced_elements[to_induced[k]] via i, and back via r.
  std::vector<std::size_t> to_induced;
  std::vector<std::size_t> to_restricted;
};

FixedPointSublattices fixed_points(const GaloisConnection& gc);

struct Prop26Report {
  bool monotone = false;
  bool unit_laws = false;           // r∘i >= id, i∘r∘i = i
  bool counit_laws = false;         // i∘r <= id, r∘i∘r = r
  bool fixed_point_iso = false;     // i, r mutually inverse isomorphisms on fixed points
  bool preserves_joins_meets = false;
  bool bounds = false;              // i(⊥) = ⊥, r(⊤) = ⊤
  bool closure = false;             // restricted meet-closed, induced join-closed
  bool insertions = false;          // r∘i and i∘r adjoint to the two insertions

  bool all() const {
    return monotone && unit_laws && counit_laws && fixed_point_iso && preserves_joins_meets && bounds && closure &&
           insertions;
  }
  std::vector<std::string> failed() const;
};

Prop26Report verify_prop26(const GaloisConnection& gc);
/// Evaluates the clauses on raw tables, which need not form an adjoint pair.
Prop26Report verify_prop26(const FiniteLattice& a, const FiniteLattice& b, const std::vector<Element>& lower,
                           const std::vector<Element>& upper);

/// r(y) == r(⊥) implies y == ⊥. Cross-checks the induced-element criterion.
bool detects(const GaloisConnection& gc);
/// r injective. Cross-checks against "every element is induced".
bool separates(const GaloisConnection& gc);

}  // namespace stone
