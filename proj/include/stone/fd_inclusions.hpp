#pragma once

#include <string>
#include <vector>

#include "stone/quasiorbit.hpp"

namespace stone {

/// Support pattern of a finite-dimensional inclusion: mult[i][j] >= 1 when
/// A-summand i lands in B-summand j.
class MultiplicityInclusion {
 public:
  /// Throws invalid_input for ragged or empty matrices.
  static MultiplicityInclusion make(std::vector<std::vector<unsigned>> mult);

  std::size_t a_summands() const { return mult_.size(); }
  std::size_t b_summands() const { return mult_.empty() ? 0 : mult_[0].size(); }
  const std::vector<std::vector<unsigned>>& mult() const { return mult_; }
  bool hits(std::size_t i, std::size_t j) const { return mult_[i][j] != 0; }
  /// Every row nonzero.
  bool injective() const;

 private:
  std::vector<std::vector<unsigned>> mult_;
};

Bitset induce(const MultiplicityInclusion& m, const Bitset& s);
Bitset restrict(const MultiplicityInclusion& m, const Bitset& t);
/// Every column touched by `s` is touched only by rows of `s`.
bool is_symmetric(const MultiplicityInclusion& m, const Bitset& s);

struct CompiledMultiplicity {
  SetLattice a;  // subsets of A-summands, labelled {a1,..}
  SetLattice b;  // subsets of B-summands, labelled {b1,..}
  InclusionData data;
};

CompiledMultiplicity compile(const MultiplicityInclusion& m);
InclusionData to_inclusion_data(const MultiplicityInclusion& m);

MultiplicityInclusion ex_210();  // [[1,1]]
MultiplicityInclusion ex_211();  // [[1],[1]]
MultiplicityInclusion ex_213();  // [[1,0],[0,1],[1,1]]
MultiplicityInclusion ex_74();   // [[1,0,1,1],[0,1,1,1]]
/// Looks up EX_210, EX_211, EX_213 or EX_74; throws invalid_input otherwise.
MultiplicityInclusion fixture(const std::string& name);

}  // namespace stone
