// One line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "stone/enumerate.hpp"
#include "stone/error.hpp"
#include "stone/fd_inclusions.hpp"
#include "stone/fuzz.hpp"
#include "stone/graph_pairs.hpp"
#include "stone/spectrum.hpp"

using namespace stone;

namespace {

struct Outcome {
  bool ok = true;
  std::string why;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      why = what;
    }
  }
};

int failures = 0;

void criterion(int n, const char* name, double limit_s, const std::function<void(Outcome&)>& body) {
  Outcome o;
  auto t0 = std::chrono::steady_clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.ok = false;
    o.why = std::string("exception: ") + e.what();
  }
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (o.ok && limit_s > 0 && s > limit_s) {
    o.ok = false;
    o.why = "took " + std::to_string(s) + " s, limit " + std::to_string(limit_s) + " s";
  }
  if (!o.ok) ++failures;
  std::printf("%s %2d %-44s %8.3f s%s%s\n", o.ok ? "PASS" : "FAIL", n, name, s, o.ok ? "" : "  ", o.why.c_str());
  std::fflush(stdout);
}

Bitset set_of(std::size_t n, std::vector<std::size_t> idx) { return Bitset::from_indices(n, idx); }

void sweep(Outcome& o, const char* tag, std::uint64_t budget, std::uint64_t seed) {
  auto r = sweep_theorem(tag, budget, seed);
  o.require(r.violations == 0, std::string(tag) + " violations: " + r.counterexample.dump());
  o.require(r.instances > 0, std::string(tag) + " checked nothing");
  if (budget > 0 && std::string(tag) != "T33" && std::string(tag) != "T62")
    o.require(r.instances >= budget, std::string(tag) + " ran fewer instances than the budget");
  std::printf("     %s: %s\n", tag, r.to_json().dump().c_str());
}

}  // namespace

int main() {
  criterion(1, "restriction does not preserve joins", 1.0, [](Outcome& o) {
    auto c = compile(ex_210());
    auto m = ex_210();
    auto b1 = set_of(2, {0}), b2 = set_of(2, {1});
    o.require(restrict(m, b1).none() && restrict(m, b2).none(), "r({b1}) or r({b2}) nonempty");
    o.require(restrict(m, Bitset::full(2)) == Bitset::full(1), "r({b1,b2}) != {a}");
    const auto& gc = c.data.gc;
    Element e1 = c.b.element_of(b1), e2 = c.b.element_of(b2);
    o.require(gc.r(c.b.lattice->join(e1, e2)) != c.a.lattice->join(gc.r(e1), gc.r(e2)), "r preserved the join");
  });

  criterion(2, "induction does not preserve meets", 1.0, [](Outcome& o) {
    auto m = ex_211();
    auto a1 = set_of(2, {0}), a2 = set_of(2, {1});
    o.require(induce(m, a1) == Bitset::full(1) && induce(m, a2) == Bitset::full(1), "i({a1}) or i({a2}) != {b}");
    o.require(induce(m, Bitset(2)).none(), "i(0) != 0");
    o.require(induce(m, a1 & a2) != (induce(m, a1) & induce(m, a2)), "i preserved the meet");
  });

  criterion(3, "restricted ideals and separation, 3x2 inclusion", 1.0, [](Outcome& o) {
    auto c = compile(ex_213());
    const auto& d = c.data;
    std::vector<Bitset> restricted;
    for (auto x : d.fixed.restricted_elements) restricted.push_back(c.a.sets[x]);
    o.require(restricted == std::vector<Bitset>{Bitset(3), set_of(3, {0}), set_of(3, {1}), Bitset::full(3)},
              "restricted set differs");
    o.require(!check_JR(d), "JR holds");
    o.require(separates(d.gc), "does not separate");
    o.require(d.spec_restricted.primes.size() == 2, "Prime^B(A) does not have 2 points");
    o.require(d.spec_restricted.space->order() == FinitePoset::antichain(2), "Prime^B(A) not discrete");
    o.require(d.spec_b.space->order() == FinitePoset::antichain(2), "Prime(L_B) not a 2-point discrete space");
    auto rho = r_on_primes(d);
    o.require(rho.has_value(), "r does not send primes to primes");
    if (rho) o.require(is_homeomorphism(*rho), "r on primes is not a homeomorphism");
    bool refused = false;
    try {
      quasi_orbit_map(d);
    } catch (const ConditionViolated& e) {
      refused = e.condition() == "JR";
    }
    o.require(refused, "quasi-orbit map built without JR");
  });

  criterion(4, "skew fixture: symmetric ideals and meet witness", 1.0, [](Outcome& o) {
    auto m = ex_74();
    auto c = compile(m);
    o.require(c.data.fixed.restricted.count() == 4, "not all 4 ideals restricted");
    std::vector<Bitset> symmetric;
    for (std::uint64_t s = 0; s < 4; ++s)
      if (is_symmetric(m, Bitset::from_mask(2, s))) symmetric.push_back(Bitset::from_mask(2, s));
    o.require(symmetric == std::vector<Bitset>{Bitset(2), Bitset::full(2)}, "symmetric ideals differ");
    o.require(!check_MIf(c.data), "MIf holds");
    bool witnessed = false;
    try {
      F_map(c.data);
    } catch (const MIViolated& e) {
      witnessed = c.b.sets[e.meet()] == set_of(4, {2, 3});
    }
    o.require(witnessed, "witness meet is not {b3,b4}");
  });

  criterion(5, "adjunct maps of locale morphisms, exhaustive", 60.0, [](Outcome& o) { sweep(o, "T33", 0, 0); });
  criterion(6, "JR: C1 iff pi open and surjective, fuzz", 120.0, [](Outcome& o) { sweep(o, "T42", 1000, 1); });
  criterion(7, "MI and C2 iff r open and surjective, fuzz", 120.0, [](Outcome& o) { sweep(o, "T47", 1000, 1); });

  criterion(8, "adjunction laws on generated connections", 0, [](Outcome& o) {
    for (std::uint64_t s = 0; s < 1000; ++s) {
      auto rep = verify_prop26(gen_inclusion_data(mix_seed(26, s)).gc);
      o.require(rep.all(), "instance " + std::to_string(s) + " fails a law");
    }
    for (const auto& m : {ex_210(), ex_211(), ex_213(), ex_74()})
      o.require(verify_prop26(to_inclusion_data(m).gc).all(), "a fixture fails a law");
  });

  criterion(9, "symmetric ideals, exhaustive up to 3x3", 30.0, [](Outcome& o) {
    sweep(o, "L51", 1000, 1);
    sweep(o, "C54", 1000, 1);
  });

  criterion(10, "quasi-orbits equal orbit closures", 60.0, [](Outcome& o) { sweep(o, "T62", 0, 0); });

  criterion(11, "graph pairs: 4 pairs, 2 primes", 1.0, [](Outcome& o) {
    auto g = ex_75();
    auto pl = j_pairs(g, j_x(g));
    o.require(pl.pairs.size() == 4, std::to_string(pl.pairs.size()) + " pairs");
    std::vector<JPair> want{{Bitset(3), set_of(3, {1})},
                            {set_of(3, {0}), set_of(3, {0, 1})},
                            {set_of(3, {2}), set_of(3, {1, 2})},
                            {Bitset::full(3), Bitset::full(3)}};
    for (const auto& p : want)
      o.require(std::find(pl.pairs.begin(), pl.pairs.end(), p) != pl.pairs.end(), "a pair is missing");
    auto spec = pair_prime_space(pl);
    o.require(spec.primes.size() == 2, "prime space does not have 2 points");
  });

  criterion(12, "duality round trips", 0, [](Outcome& o) {
    std::size_t frames = 0, spaces = 0;
    for (std::size_t n = 0; n <= 5; ++n)
      for (const auto& p : unlabeled_posets(n)) {
        auto l = downset_lattice(p).lattice;
        if (l->size() > 6) continue;
        ++frames;
        o.require(opens_round_trip(l), "frame round trip fails");
      }
    for (std::size_t n = 0; n <= 4; ++n)
      for (const auto& p : unlabeled_posets(n)) {
        auto x = make_space(p);
        if (!is_sober(*x)) continue;
        ++spaces;
        o.require(point_space_round_trip(x), "space round trip fails");
      }
    std::printf("     frames %zu, spaces %zu\n", frames, spaces);
  });

  std::printf("%s: %d failing\n", failures ? "FAILED" : "ALL PASSED", failures);
  return failures ? 1 : 0;
}
