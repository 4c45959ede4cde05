#include <doctest.h>

#include "stone/error.hpp"
#include "stone/fd_inclusions.hpp"
#include "stone/fuzz.hpp"
#include "stone/quasiorbit.hpp"
#include "stone/topo_models.hpp"

using namespace stone;

namespace {

SpaceRef discrete(std::size_t n) { return make_space(FinitePoset::antichain(n)); }
SpaceRef sierpinski() { return make_space(FinitePoset::chain(2), {"s", "t"}); }

InclusionData action_data(std::size_t n, std::vector<Permutation> gens) {
  return action_inclusion_data(FiniteGroupAction::make(discrete(n), std::move(gens)));
}

InclusionData sierpinski_bundle() { return bundle_inclusion_data(BundleMap::make(discrete(2), sierpinski(), {0, 1})); }

// the shrunk fuzz instance kept in data/pi_not_open.json
GaloisInstance pi_not_open() {
  return GaloisInstance{FinitePoset::antichain(2), FinitePoset::chain(2),
                        {Bitset::from_indices(2, {0, 1}), Bitset::from_indices(2, {0})}};
}

// π by its defining formula, as ambient elements
std::vector<Element> pi_oracle(const InclusionData& d) {
  std::vector<Element> out;
  for (auto p : d.spec_a.primes) {
    Element acc = d.a().bottom();
    for (auto x : d.restricted.embed)
      if (d.a().leq(x, p)) acc = d.a().join(acc, x);
    out.push_back(acc);
  }
  return out;
}

Element b_set(const CompiledMultiplicity& c, std::vector<std::size_t> idx) {
  return c.b.element_of(Bitset::from_indices(c.b.sets.front().size(), idx));
}

}  // namespace

TEST_CASE("JR") {
  CHECK_FALSE(check_JR(to_inclusion_data(ex_213())));
  CHECK(check_JR(to_inclusion_data(ex_210())));
  CHECK(check_JR(action_data(3, {{1, 2, 0}})));
  CHECK(check_JR(action_data(3, {{1, 0, 2}})));
}

TEST_CASE("pi") {
  auto swap = action_data(2, {{1, 0}});
  auto pi = pi_map(swap);
  CHECK(pi.values() == std::vector<std::size_t>{0, 0});

  auto l = downset_lattice(FinitePoset::from_covers(3, {{0, 1}})).lattice;
  auto id = make_inclusion_data(GaloisConnection::identity(l));
  auto pid = pi_map(id);
  for (std::size_t p = 0; p < pid.source()->size(); ++p) CHECK(pid(p) == p);

  auto e210 = to_inclusion_data(ex_210());
  CHECK(pi_map(e210).target()->size() == 1);

  try {
    pi_map(to_inclusion_data(ex_213()));
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::jr_violated);
  }

  for (std::uint64_t s = 0; s < 200; ++s) {
    auto d = gen_inclusion_data(mix_seed(3, s));
    if (!check_JR(d)) continue;
    auto p = pi_map(d);
    auto want = pi_oracle(d);
    for (std::size_t k = 0; k < want.size(); ++k) CHECK(d.restricted.embed[d.spec_restricted.primes[p(k)]] == want[k]);
  }
}

TEST_CASE("C1") {
  CHECK(check_C1(to_inclusion_data(MultiplicityInclusion::make({{1, 0}, {0, 1}}))));
  CHECK(check_C1(to_inclusion_data(ex_210())));
  auto d = build_inclusion_data(pi_not_open());
  CHECK(check_JR(d));
  CHECK_FALSE(check_C1(d));
  CHECK_FALSE(is_open_map(pi_map(d)));
}

TEST_CASE("MIf and MI") {
  auto e74 = to_inclusion_data(ex_74());
  CHECK_FALSE(check_MIf(e74));
  CHECK_FALSE(check_MI(e74));
  CHECK(check_MIf(to_inclusion_data(ex_211())));
  CHECK(check_MI(to_inclusion_data(ex_211())));
  auto e213 = to_inclusion_data(ex_213());
  CHECK(check_MIf(e213));
  CHECK(e213.fixed.induced.count() == 4);
  // binary meets close up but the empty meet (top) is not induced
  auto degenerate = to_inclusion_data(MultiplicityInclusion::make({{1, 0}}));
  CHECK(check_MIf(degenerate));
  CHECK_FALSE(check_nondegenerate(degenerate));
  CHECK_FALSE(check_MI(degenerate));
}

TEST_CASE("F") {
  auto e213 = to_inclusion_data(ex_213());
  auto f = F_table(e213);
  for (Element y = 0; y < f.size(); ++y) CHECK(f[y] == y);

  auto b = sierpinski_bundle();
  auto t = b.gc.target();
  // total points x1 (over s) and x2 (over t); F({x2}) is everything
  Element x2 = 2;
  REQUIRE(t->label(x2) == "{x2}");
  CHECK(F_table(b)[x2] == t->top());

  auto c = compile(ex_74());
  try {
    F_map(c.data);
    FAIL("accepted");
  } catch (const MIViolated& e) {
    std::vector<Element> want{b_set(c, {0, 2, 3}), b_set(c, {1, 2, 3})};
    auto got = e.witness();
    std::sort(got.begin(), got.end());
    std::sort(want.begin(), want.end());
    CHECK(got == want);
    CHECK(e.meet() == b_set(c, {2, 3}));
    CHECK(std::string(e.what()).find("{b3,b4}") != std::string::npos);
  }
}

TEST_CASE("C2") {
  auto b = sierpinski_bundle();
  CHECK_FALSE(check_C2(b));
  auto f = F_table(b);
  const auto& t = *b.gc.target();
  Element s = 1, x2 = 2;  // {x1} = preimage of {s}; {x2}
  CHECK(t.meet(s, f[x2]) == s);
  CHECK(f[t.meet(s, x2)] == t.bottom());
  CHECK(check_C2(to_inclusion_data(ex_213())));
  auto l = downset_lattice(FinitePoset::chain(2)).lattice;
  CHECK(check_C2(make_inclusion_data(GaloisConnection::identity(l))));
  CHECK_THROWS_AS(check_C2(to_inclusion_data(ex_74())), MIViolated);
}

TEST_CASE("quasi-orbit spaces") {
  CHECK(quasi_orbit_space(action_data(3, {{1, 2, 0}})).quotient->size() == 1);
  auto trivial = action_data(3, {});
  auto qt = quasi_orbit_space(trivial);
  CHECK(qt.quotient->size() == 3);
  CHECK(qt.quotient->order() == FinitePoset::antichain(3));
  auto q2 = quasi_orbit_space(action_data(3, {{1, 0, 2}}));
  CHECK(q2.quotient->size() == 2);
  CHECK(q2.quotient->order() == FinitePoset::antichain(2));

  // quotient opens are exactly the sets with open preimage
  for (std::uint64_t s = 0; s < 150; ++s) {
    auto d = gen_inclusion_data(mix_seed(5, s));
    if (!check_JR(d)) continue;
    auto q = quasi_orbit_space(d);
    const auto m = q.classes.size();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
      Bitset pre(q.base->size());
      for (std::size_t c = 0; c < m; ++c)
        if ((mask >> c) & 1U) pre |= q.classes[c];
      CHECK(q.base->is_open(pre) == q.quotient->is_open(Bitset::from_mask(m, mask)));
    }
    if (check_C1(d)) CHECK(is_homeomorphism(q.pi_star));
  }
}

TEST_CASE("quasi-orbit map") {
  auto e213 = to_inclusion_data(ex_213());
  try {
    quasi_orbit_map(e213);
    FAIL("accepted");
  } catch (const ConditionViolated& e) {
    CHECK(e.condition() == "JR");
  }
  auto r = r_on_primes(e213);
  REQUIRE(r);
  CHECK(is_homeomorphism(*r));
  CHECK(r->source()->size() == 2);

  auto b = sierpinski_bundle();
  auto rho = quasi_orbit_map(b);
  CHECK(is_surjective(rho));
  CHECK_FALSE(is_open_map(rho));

  auto l = downset_lattice(FinitePoset::from_covers(3, {{0, 2}})).lattice;
  auto id = make_inclusion_data(GaloisConnection::identity(l));
  auto rid = quasi_orbit_map(id);
  CHECK(is_homeomorphism(rid));
  for (std::size_t p = 0; p < rid.source()->size(); ++p) CHECK(rid(p) == p);

  try {
    quasi_orbit_map(to_inclusion_data(ex_74()));
    FAIL("accepted");
  } catch (const ConditionViolated& e) {
    CHECK(e.condition() == "MIf");
  }
  try {
    quasi_orbit_map(build_inclusion_data(pi_not_open()));
    FAIL("accepted");
  } catch (const ConditionViolated& e) {
    CHECK(e.condition() == "C1");
  }
}

TEST_CASE("verdicts on fixtures") {
  for (const auto& m : {ex_210(), ex_211(), ex_213(), ex_74()}) {
    auto d = to_inclusion_data(m);
    CHECK(theorem42(d).holds);
    CHECK(theorem47(d).holds);
    CHECK(prop44(d).holds);
    CHECK(cor48(d).holds);
    CHECK(cor49(d).holds);
  }
  auto e213 = to_inclusion_data(ex_213());
  CHECK_FALSE(theorem42(e213).applicable);
  CHECK_FALSE(cor49(e213).applicable);
  auto b = sierpinski_bundle();
  CHECK(cor48(b).applicable);
  CHECK(cor48(b).holds);
}

TEST_CASE("non-distributive fixed points") {
  // the restricted lattice here is M3, so its spectrum is taken without a frame check
  auto d = to_inclusion_data(MultiplicityInclusion::make({{1, 1, 0}, {0, 1, 1}, {1, 0, 1}}));
  CHECK(d.restricted.lattice->size() == 5);
  CHECK_FALSE(is_frame(*d.restricted.lattice).distributive);
  CHECK_FALSE(check_JR(d));
  CHECK_FALSE(check_MIf(d));
  CHECK(theorem47(d).holds);
}
