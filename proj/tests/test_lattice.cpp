#include <doctest.h>

#include <random>

#include "stone/enumerate.hpp"
#include "stone/error.hpp"
#include "stone/lattice.hpp"

using namespace stone;

namespace {

// lower bounds of {a, b} that dominate every other lower bound
std::vector<Element> glb_candidates(const FinitePoset& p, Element a, Element b) {
  std::vector<Element> out;
  for (Element c = 0; c < p.size(); ++c) {
    if (!p.leq(c, a) || !p.leq(c, b)) continue;
    bool greatest = true;
    for (Element d = 0; d < p.size(); ++d)
      if (p.leq(d, a) && p.leq(d, b) && !p.leq(d, c)) greatest = false;
    if (greatest) out.push_back(c);
  }
  return out;
}

FinitePoset diamond() { return FinitePoset::from_covers(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}); }
FinitePoset pentagon() { return FinitePoset::from_covers(5, {{0, 1}, {1, 2}, {2, 4}, {0, 3}, {3, 4}}); }
FinitePoset m3() { return FinitePoset::from_covers(5, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}}); }

FinitePoset powerset(std::size_t n) {
  std::vector<std::vector<bool>> leq(std::size_t{1} << n, std::vector<bool>(std::size_t{1} << n));
  for (std::size_t a = 0; a < leq.size(); ++a)
    for (std::size_t b = 0; b < leq.size(); ++b) leq[a][b] = (a & b) == a;
  return FinitePoset::from_matrix(leq);
}

}  // namespace

TEST_CASE("poset construction") {
  auto p = FinitePoset::from_covers(3, {{0, 1}, {1, 2}});
  CHECK(p.leq(0, 2));
  CHECK_FALSE(p.leq(2, 0));
  CHECK(p.covers().size() == 2);
  CHECK_THROWS_AS(FinitePoset::from_covers(2, {{0, 1}, {1, 0}}), Error);
  CHECK_THROWS_AS(FinitePoset::from_covers(2, {{0, 2}}), Error);
  std::vector<std::vector<bool>> not_transitive{{true, true, false}, {false, true, true}, {false, false, true}};
  CHECK_THROWS_AS(FinitePoset::from_matrix(not_transitive), Error);
  try {
    FinitePoset::from_covers(2, {{0, 1}, {1, 0}});
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::not_a_poset);
  }
}

TEST_CASE("validate_lattice examples") {
  auto chain = validate_lattice(FinitePoset::chain(3));
  for (Element a = 0; a < 3; ++a)
    for (Element b = 0; b < 3; ++b) {
      CHECK(chain.meet(a, b) == std::min(a, b));
      CHECK(chain.join(a, b) == std::max(a, b));
    }
  auto d = validate_lattice(diamond());
  CHECK(d.meet(1, 2) == 0);
  CHECK(d.join(1, 2) == 3);
  CHECK(d.bottom() == 0);
  CHECK(d.top() == 3);
  try {
    validate_lattice(FinitePoset::antichain(2));
    FAIL("antichain accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::not_a_lattice);
  }
  // bounded but x, y have two minimal upper bounds
  auto bowtie = FinitePoset::from_covers(6, {{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 5}, {4, 5}});
  CHECK_THROWS_AS(validate_lattice(bowtie), Error);
}

TEST_CASE("meet and join tables agree with brute-force bounds") {
  std::mt19937_64 rng(11);
  int lattices = 0;
  for (int trial = 0; trial < 300; ++trial) {
    auto p = random_poset(rng, 2 + draw_below(rng, 6), 50);
    std::optional<FiniteLattice> l;
    try {
      l = validate_lattice(p);
    } catch (const Error&) {
      continue;
    }
    ++lattices;
    for (Element a = 0; a < p.size(); ++a)
      for (Element b = 0; b < p.size(); ++b) {
        auto g = glb_candidates(p, a, b);
        REQUIRE(g.size() == 1);
        CHECK(l->meet(a, b) == g[0]);
        CHECK((l->leq(a, b) == (l->meet(a, b) == a)));
        CHECK((l->leq(a, b) == (l->join(a, b) == b)));
        CHECK(l->meet(a, l->join(a, b)) == a);
        CHECK(l->join(a, l->meet(a, b)) == a);
        CHECK(l->meet(a, b) == l->meet(b, a));
      }
  }
  CHECK(lattices > 20);
}

TEST_CASE("big meet and join") {
  auto d = validate_lattice(diamond());
  std::vector<Element> xy{1, 2};
  CHECK(big_join(d, xy) == 3);
  CHECK(big_meet(d, std::span<const Element>{}) == 3);
  CHECK(big_join(d, std::span<const Element>{}) == 0);
  std::vector<Element> single{2};
  CHECK(big_join(d, single) == 2);
  auto p = validate_lattice(powerset(3));
  std::vector<Element> family{0b011, 0b110};
  CHECK(big_meet(p, family) == 0b010);
  CHECK(big_meet(p, Bitset::from_indices(8, {0b011, 0b110})) == 0b010);
}

TEST_CASE("frame check") {
  CHECK(is_frame(validate_lattice(powerset(2))).distributive);
  auto n5 = validate_lattice(pentagon());
  auto w = is_frame(n5);
  CHECK_FALSE(w.distributive);
  REQUIRE(w.violation);
  auto [x, y, z] = *w.violation;
  CHECK(n5.meet(x, n5.join(y, z)) != n5.join(n5.meet(x, y), n5.meet(x, z)));
  CHECK_FALSE(is_frame(validate_lattice(m3())).distributive);
  CHECK(is_frame(validate_lattice(m3()), Exec::serial).violation == is_frame(validate_lattice(m3())).violation);
}

TEST_CASE("down-set lattices") {
  CHECK(downset_lattice(FinitePoset::chain(1)).sets.size() == 2);
  auto c2 = downset_lattice(FinitePoset::chain(2));
  REQUIRE(c2.sets.size() == 3);
  CHECK(c2.lattice->order() == FinitePoset::chain(3));
  auto a2 = downset_lattice(FinitePoset::antichain(2));
  CHECK(a2.sets.size() == 4);
  CHECK(a2.lattice->label(a2.lattice->top()) == "{p1,p2}");
  CHECK(a2.sets.front().none());
  for (std::size_t n = 1; n <= 5; ++n)
    for (const auto& p : unlabeled_posets(n)) {
      auto d = downset_lattice(p);
      CHECK(is_frame(*d.lattice).distributive);
      std::size_t count = 0;
      for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) count += p.is_downset(Bitset::from_mask(n, m));
      CHECK(d.sets.size() == count);
      for (Element a = 0; a < d.sets.size(); ++a)
        for (Element b = 0; b < d.sets.size(); ++b) {
          CHECK(d.sets[d.lattice->meet(a, b)] == (d.sets[a] & d.sets[b]));
          CHECK(d.sets[d.lattice->join(a, b)] == (d.sets[a] | d.sets[b]));
        }
    }
}

TEST_CASE("unlabeled poset counts") {
  const std::size_t expected[] = {1, 1, 2, 5, 16, 63};
  for (std::size_t n = 0; n <= 5; ++n) CHECK(unlabeled_posets(n).size() == expected[n]);
}

TEST_CASE("size cap") {
  auto before = max_lattice_size();
  set_max_lattice_size(8);
  CHECK_THROWS_AS(downset_lattice(FinitePoset::antichain(4)), Error);
  set_max_lattice_size(before);
  CHECK(downset_lattice(FinitePoset::antichain(4)).sets.size() == 16);
}
