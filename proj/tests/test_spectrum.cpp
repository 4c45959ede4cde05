#include <doctest.h>

#include <algorithm>

#include "stone/enumerate.hpp"
#include "stone/error.hpp"
#include "stone/fd_inclusions.hpp"
#include "stone/spectrum.hpp"
#include "stone/topo_models.hpp"

using namespace stone;

namespace {

// Primes through characters: lattice homomorphisms onto {0,1}, each sent to
// the largest element it kills.
std::vector<Element> primes_by_characters(const FiniteLattice& l) {
  std::vector<Element> out;
  for (std::uint64_t chi = 0; chi < (std::uint64_t{1} << l.size()); ++chi) {
    auto v = [&](Element e) { return (chi >> e) & 1U; };
    if (v(l.bottom()) != 0 || v(l.top()) != 1) continue;
    bool hom = true;
    for (Element a = 0; a < l.size() && hom; ++a)
      for (Element b = 0; b < l.size(); ++b)
        if (v(l.meet(a, b)) != (v(a) & v(b)) || v(l.join(a, b)) != (v(a) | v(b))) {
          hom = false;
          break;
        }
    if (!hom) continue;
    Element p = l.bottom();
    for (Element e = 0; e < l.size(); ++e)
      if (!v(e)) p = l.join(p, e);
    out.push_back(p);
  }
  std::sort(out.begin(), out.end());
  return out;
}

SpaceRef sierpinski() { return make_space(FinitePoset::chain(2), {"s", "t"}); }
SpaceRef discrete(std::size_t n) { return make_space(FinitePoset::antichain(n)); }

std::vector<LatticeRef> small_frames(std::size_t max_points) {
  std::vector<LatticeRef> out;
  for (std::size_t n = 0; n <= max_points; ++n)
    for (const auto& p : unlabeled_posets(n)) out.push_back(downset_lattice(p).lattice);
  return out;
}

}  // namespace

TEST_CASE("spaces from open families") {
  auto x = FiniteT0Space::from_opens(2, {Bitset(2), Bitset::from_indices(2, {0}), Bitset::full(2)});
  CHECK(x.order().leq(0, 1));
  CHECK(x.is_open(Bitset::from_indices(2, {0})));
  CHECK(x.closure(Bitset::from_indices(2, {0})) == Bitset::full(2));
  CHECK(x.interior(Bitset::from_indices(2, {1})).none());
  // not T0
  CHECK_THROWS_AS(FiniteT0Space::from_opens(2, {Bitset(2), Bitset::full(2)}), Error);
  // not closed under union
  CHECK_THROWS_AS(FiniteT0Space::from_opens(3, {Bitset(3), Bitset::from_indices(3, {0}),
                                                 Bitset::from_indices(3, {1}), Bitset::full(3)}),
                  Error);
}

TEST_CASE("primes examples") {
  auto diamond = downset_lattice(FinitePoset::antichain(2));
  auto s = primes(diamond.lattice);
  std::vector<std::string> labels;
  for (auto p : s.primes) labels.push_back(diamond.lattice->label(p));
  CHECK(labels == std::vector<std::string>{"{p1}", "{p2}"});

  auto c3 = make_lattice(FinitePoset::chain(3));
  CHECK(primes(c3).primes == std::vector<Element>{0, 1});

  auto e = to_inclusion_data(ex_213());
  CHECK(e.spec_restricted.primes.size() == 2);
  for (auto p : e.spec_restricted.primes) CHECK(e.restricted.embed[p] != e.a().top());
  CHECK(e.spec_restricted.space->order() == FinitePoset::antichain(2));

  auto m3 = make_lattice(FinitePoset::from_covers(5, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}}));
  try {
    primes(m3);
    FAIL("non-frame accepted");
  } catch (const Error& err) {
    CHECK(err.kind() == ErrorKind::not_a_frame);
  }
  CHECK(primes(make_lattice(FinitePoset::chain(1))).primes.empty());
}

TEST_CASE("primes agree with characters") {
  for (const auto& l : small_frames(5)) {
    auto s = primes(l);
    if (l->size() <= 20) CHECK(s.primes == primes_by_characters(*l));
    CHECK(is_spatial(s));
    CHECK(is_sober(*s.space));
    for (Element a = 0; a < l->size(); ++a)
      for (Element b = 0; b < l->size(); ++b) {
        CHECK(s.open_of[l->join(a, b)] == (s.open_of[a] | s.open_of[b]));
        CHECK(s.open_of[l->meet(a, b)] == (s.open_of[a] & s.open_of[b]));
      }
  }
  CHECK(is_sober(*discrete(1)));
}

TEST_CASE("round trips") {
  for (const auto& l : small_frames(4)) CHECK(opens_round_trip(l));
  for (std::size_t n = 0; n <= 4; ++n)
    for (const auto& p : unlabeled_posets(n)) CHECK(point_space_round_trip(make_space(p)));
}

TEST_CASE("locale morphisms") {
  std::size_t checked = 0;
  for (std::size_t n = 1; n <= 3; ++n)
    for (const auto& p : unlabeled_posets(n))
      for (std::size_t m = 1; m <= 3; ++m)
        for (const auto& q : unlabeled_posets(m)) {
          auto x = make_space(p), y = make_space(q);
          for_each_monotone_map(p, q, [&](const std::vector<std::size_t>& f) {
            auto pm = PointMap::make(x, y, f);
            std::vector<Element> pre;
            for (const auto& u : y->opens().sets) pre.push_back(x->opens().element_of(pm.preimage(u)));
            CHECK(is_locale_morphism(MonotoneMap::make(y->opens_lattice(), x->opens_lattice(), pre)));
            ++checked;
          });
        }
  CHECK(checked > 100);

  auto e = to_inclusion_data(ex_213());
  auto insertion = MonotoneMap::make(e.restricted.lattice, e.gc.source(), e.restricted.embed);
  CHECK_FALSE(is_locale_morphism(insertion));

  auto swap = FiniteGroupAction::make(discrete(2), {{1, 0}});
  CHECK(is_locale_morphism(invariant_opens(swap).insertion));
}

TEST_CASE("adjunct point maps") {
  for (std::size_t n = 1; n <= 3; ++n)
    for (const auto& p : unlabeled_posets(n)) {
      auto x = make_space(p);
      auto spec = primes(x->opens_lattice());
      auto pi = adjunct_point_map(MonotoneMap::identity(x->opens_lattice()), x, spec);
      CHECK(pi.values() == soberification(x, spec).values());
    }

  auto swap = FiniteGroupAction::make(discrete(2), {{1, 0}});
  auto inv = invariant_opens(swap);
  auto spec = primes(inv.lattice);
  REQUIRE(spec.primes.size() == 1);
  auto pi = adjunct_point_map(inv.insertion, swap.space(), spec);
  CHECK(pi.values() == std::vector<std::size_t>{0, 0});

  auto b = BundleMap::make(discrete(2), sierpinski(), {0, 1});
  auto d = bundle_inclusion_data(b);
  auto base_spec = primes(b.base->opens_lattice());
  auto pb = adjunct_point_map(d.gc.lower(), b.total, base_spec);
  auto sob = soberification(b.base, base_spec);
  for (std::size_t t = 0; t < 2; ++t) CHECK(pb(t) == sob(b.proj(t)));

  auto m = MonotoneMap::make(swap.space()->opens_lattice(), swap.space()->opens_lattice(), {0, 0, 0, 3});
  CHECK_THROWS_AS(adjunct_point_map(m, swap.space(), primes(m.source())), Error);
}

TEST_CASE("open and surjective maps") {
  auto s = sierpinski();
  auto id = PointMap::identity(s);
  CHECK(is_open_map(id));
  CHECK(is_surjective(id));
  CHECK(is_homeomorphism(id));
  auto point = PointMap::make(discrete(1), s, {0});
  CHECK(is_open_map(point));
  CHECK_FALSE(is_surjective(point));
  auto collapse = PointMap::make(discrete(2), s, {0, 1});
  CHECK_FALSE(is_open_map(collapse));
  CHECK(is_surjective(collapse));
  CHECK_THROWS_AS(PointMap::make(s, discrete(2), {0, 1}), Error);
}

TEST_CASE("theorem33_check examples") {
  auto x = sierpinski();
  auto rep = theorem33_check(MonotoneMap::identity(x->opens_lattice()), x);
  CHECK(rep.has_lower_adjoint_F);
  CHECK(rep.eq32_holds);
  CHECK(rep.g_injective);
  CHECK(rep.pi_open);
  CHECK(rep.pi_surjective);
  CHECK(rep.equivalence_verified);

  auto z3 = FiniteGroupAction::make(discrete(3), {{1, 2, 0}});
  auto inv = invariant_opens(z3);
  auto r3 = theorem33_check(inv.insertion, z3.space());
  CHECK(r3.has_lower_adjoint_F);
  CHECK(r3.eq32_holds);
  CHECK(r3.pi_open);
  CHECK(r3.pi_surjective);
  CHECK(r3.equivalence_verified);

  auto b = BundleMap::make(discrete(2), sierpinski(), {0, 1});
  auto g = bundle_inclusion_data(b).gc.lower();
  auto rb = theorem33_check(g, b.total);
  CHECK(rb.has_lower_adjoint_F);
  CHECK_FALSE(rb.eq32_holds);
  CHECK_FALSE(rb.pi_open);
  CHECK(rb.equivalence_verified);
}

TEST_CASE("spectral maps of locale morphisms") {
  // G = preimage along a continuous map recovers the map on points
  for (const auto& p : unlabeled_posets(3))
    for (const auto& q : unlabeled_posets(2)) {
      auto x = make_space(p), y = make_space(q);
      auto sx = primes(x->opens_lattice()), sy = primes(y->opens_lattice());
      for_each_monotone_map(p, q, [&](const std::vector<std::size_t>& f) {
        auto pm = PointMap::make(x, y, f);
        std::vector<Element> pre;
        for (const auto& u : y->opens().sets) pre.push_back(x->opens().element_of(pm.preimage(u)));
        auto g = MonotoneMap::make(y->opens_lattice(), x->opens_lattice(), pre);
        auto star = spectral_map(g, sy, sx);
        auto sob_x = soberification(x, sx), sob_y = soberification(y, sy);
        for (std::size_t pt = 0; pt < x->size(); ++pt) CHECK(star(sob_x(pt)) == sob_y(f[pt]));
      });
    }
}
