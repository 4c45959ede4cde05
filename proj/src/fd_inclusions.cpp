#include "stone/fd_inclusions.hpp"

#include "stone/error.hpp"

namespace stone {

MultiplicityInclusion MultiplicityInclusion::make(std::vector<std::vector<unsigned>> mult) {
  if (mult.empty() || mult[0].empty()) throw Error(ErrorKind::invalid_input, "multiplicity matrix must be nonempty");
  for (const auto& row : mult)
    if (row.size() != mult[0].size()) throw Error(ErrorKind::invalid_input, "multiplicity matrix rows differ in length");
  MultiplicityInclusion m;
  m.mult_ = std::move(mult);
  return m;
}

bool MultiplicityInclusion::injective() const {
  for (const auto& row : mult_) {
    bool any = false;
    for (auto v : row) any = any || v != 0;
    if (!any) return false;
  }
  return true;
}

Bitset induce(const MultiplicityInclusion& m, const Bitset& s) {
  Bitset out(m.b_summands());
  s.for_each([&](std::size_t i) {
    for (std::size_t j = 0; j < m.b_summands(); ++j)
      if (m.hits(i, j)) out.set(j);
  });
  return out;
}

Bitset restrict(const MultiplicityInclusion& m, const Bitset& t) {
  Bitset out(m.a_summands());
  for (std::size_t i = 0; i < m.a_summands(); ++i) {
    bool inside = true;
    for (std::size_t j = 0; j < m.b_summands(); ++j)
      if (m.hits(i, j) && !t.test(j)) inside = false;
    if (inside) out.set(i);
  }
  return out;
}

bool is_symmetric(const MultiplicityInclusion& m, const Bitset& s) {
  Bitset columns = induce(m, s);
  bool ok = true;
  columns.for_each([&](std::size_t j) {
    for (std::size_t i = 0; i < m.a_summands(); ++i)
      if (m.hits(i, j) && !s.test(i)) ok = false;
  });
  return ok;
}

CompiledMultiplicity compile(const MultiplicityInclusion& m) {
  auto a = downset_lattice(FinitePoset::antichain(m.a_summands()), "a");
  auto b = downset_lattice(FinitePoset::antichain(m.b_summands()), "b");
  std::vector<Element> lower, upper;
  for (const auto& s : a.sets) lower.push_back(b.element_of(induce(m, s)));
  for (const auto& t : b.sets) upper.push_back(a.element_of(restrict(m, t)));
  auto gc = GaloisConnection::make(MonotoneMap::make(a.lattice, b.lattice, std::move(lower)),
                                   MonotoneMap::make(b.lattice, a.lattice, std::move(upper)));
  auto data = make_inclusion_data(std::move(gc));
  return CompiledMultiplicity{std::move(a), std::move(b), std::move(data)};
}

InclusionData to_inclusion_data(const MultiplicityInclusion& m) { return compile(m).data; }

MultiplicityInclusion ex_210() { return MultiplicityInclusion::make({{1, 1}}); }
MultiplicityInclusion ex_211() { return MultiplicityInclusion::make({{1}, {1}}); }
MultiplicityInclusion ex_213() { return MultiplicityInclusion::make({{1, 0}, {0, 1}, {1, 1}}); }
MultiplicityInclusion ex_74() { return MultiplicityInclusion::make({{1, 0, 1, 1}, {0, 1, 1, 1}}); }

MultiplicityInclusion fixture(const std::string& name) {
  if (name == "EX_210") return ex_210();
  if (name == "EX_211") return ex_211();
  if (name == "EX_213") return ex_213();
  if (name == "EX_74") return ex_74();
  throw Error(ErrorKind::invalid_input, "unknown multiplicity fixture '" + name + "'");
}

}  // namespace stone
