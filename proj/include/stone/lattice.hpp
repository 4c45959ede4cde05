#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "stone/bitset.hpp"
#include "stone/exec.hpp"

namespace stone {

using Element = std::uint32_t;

/// Finite partial order on {0, ..., size()-1}, stored as reachability-closed
/// down/up bit rows.
class FinitePoset {
 public:
  FinitePoset() = default;

  /// `less` lists pairs (a, b) with a < b; reflexive-transitive closure is
  /// taken. Throws not_a_poset on cycles or out-of-range indices.
  static FinitePoset from_covers(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& less);
  /// `leq[x][y]` is x <= y. Throws not_a_poset unless reflexive,
  /// antisymmetric and transitive.
  static FinitePoset from_matrix(const std::vector<std::vector<bool>>& leq);
  static FinitePoset chain(std::size_t n);
  static FinitePoset antichain(std::size_t n);

  std::size_t size() const { return down_.size(); }
  bool leq(std::size_t x, std::size_t y) const { return down_[y].test(x); }
  bool lt(std::size_t x, std::size_t y) const { return x != y && leq(x, y); }
  /// {y : y <= x}
  const Bitset& down(std::size_t x) const { return down_[x]; }
  /// {y : x <= y}
  const Bitset& up(std::size_t x) const { return up_[x]; }

  bool is_downset(const Bitset& s) const;
  bool is_upset(const Bitset& s) const;
  /// Smallest down-set containing `s`.
  Bitset down_closure(const Bitset& s) const;
  Bitset up_closure(const Bitset& s) const;

  /// Suborder on the listed points, renumbered in the given order.
  FinitePoset induced(const std::vector<std::size_t>& keep) const;
  /// Covering pairs (a, b): a < b with nothing strictly between.
  std::vector<std::pair<std::size_t, std::size_t>> covers() const;
  /// Points sorted so that x < y implies x comes first.
  std::vector<std::size_t> linear_extension() const;

  friend bool operator==(const FinitePoset& a, const FinitePoset& b) { return a.down_ == b.down_; }

 private:
  static FinitePoset from_down_rows(std::vector<Bitset> down);

  std::vector<Bitset> down_;
  std::vector<Bitset> up_;
};

/// Finite bounded lattice with precomputed meet and join tables.
/// Only validate_lattice() constructs one, so the tables are always exact.
class FiniteLattice {
 public:
  std::size_t size() const { return order_.size(); }
  const FinitePoset& order() const { return order_; }
  bool leq(Element a, Element b) const { return order_.leq(a, b); }
  Element meet(Element a, Element b) const { return meet_[index(a, b)]; }
  Element join(Element a, Element b) const { return join_[index(a, b)]; }
  Element bottom() const { return bottom_; }
  Element top() const { return top_; }

  /// Display label; defaults to "e<i>".
  std::string label(Element e) const;
  const std::vector<std::string>& labels() const { return labels_; }

  friend FiniteLattice validate_lattice(const FinitePoset& order, std::vector<std::string> labels);

 private:
  std::size_t index(Element a, Element b) const { return static_cast<std::size_t>(a) * size() + b; }

  FinitePoset order_;
  std::vector<Element> meet_;
  std::vector<Element> join_;
  Element bottom_ = 0;
  Element top_ = 0;
  std::vector<std::string> labels_;
};

using LatticeRef = std::shared_ptr<const FiniteLattice>;

/// Computes meet/join tables; throws not_a_lattice if some pair lacks a
/// unique glb or lub (or the poset is empty), size_limit above the cap.
FiniteLattice validate_lattice(const FinitePoset& order, std::vector<std::string> labels = {});
LatticeRef make_lattice(const FinitePoset& order, std::vector<std::string> labels = {});

/// Structural equality: same order (tables follow from it).
bool same_lattice(const FiniteLattice& a, const FiniteLattice& b);

Element big_meet(const FiniteLattice& l, std::span<const Element> s);
Element big_join(const FiniteLattice& l, std::span<const Element> s);
Element big_meet(const FiniteLattice& l, const Bitset& s);
Element big_join(const FiniteLattice& l, const Bitset& s);

struct FrameWitness {
  bool distributive = false;
  /// (x, y, z) with x∧(y∨z) != (x∧y)∨(x∧z), when not distributive.
  std::optional<std::array<Element, 3>> violation;
};

FrameWitness is_frame(const FiniteLattice& l, Exec exec = Exec::parallel);

/// A lattice whose elements are subsets of a ground set, ordered by inclusion.
struct SetLattice {
  LatticeRef lattice;
  std::vector<Bitset> sets;
  std::unordered_map<Bitset, Element, BitsetHash> index;

  /// Throws invalid_input when `s` is not an element.
  Element element_of(const Bitset& s) const;
  bool contains(const Bitset& s) const { return index.count(s) != 0; }
};

/// Lattice of down-sets of `p` (meet = intersection, join = union), elements
/// sorted by cardinality then bit pattern, so 0 is the empty set and the last
/// element is the full set. Labels are built from `point_prefix`.
SetLattice downset_lattice(const FinitePoset& p, const std::string& point_prefix = "p");

/// Current size cap for constructed lattices (default 4096, overridable with
/// the STONE_MAX_LATTICE environment variable or set_max_lattice_size()).
std::size_t max_lattice_size();
void set_max_lattice_size(std::size_t n);

}  // namespace stone
