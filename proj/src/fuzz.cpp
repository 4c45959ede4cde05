#include "stone/fuzz.hpp"

#include <algorithm>
#include <optional>
#include <random>
#include <variant>

#include "stone/enumerate.hpp"
#include "stone/error.hpp"

namespace stone {

namespace {

Bitset project(const Bitset& s, const std::vector<std::size_t>& keep) {
  Bitset out(keep.size());
  for (std::size_t k = 0; k < keep.size(); ++k)
    if (s.test(keep[k])) out.set(k);
  return out;
}

std::vector<std::size_t> all_but(std::size_t n, std::size_t drop) {
  std::vector<std::size_t> keep;
  for (std::size_t k = 0; k < n; ++k)
    if (k != drop) keep.push_back(k);
  return keep;
}

std::size_t draw_size(std::mt19937_64& rng, std::size_t max) { return 1 + draw_below(rng, std::max<std::size_t>(max, 1)); }

}  // namespace

// ---------------------------------------------------------------------------
// Generators

GaloisInstance gen_galois_instance(std::uint64_t seed, const GenBounds& bounds) {
  std::mt19937_64 rng(seed);
  const auto na = draw_size(rng, bounds.max_points_a);
  const auto nb = draw_size(rng, bounds.max_points_b);
  GaloisInstance g;
  g.pa = random_poset(rng, na, static_cast<std::uint32_t>(draw_below(rng, 61)));
  g.pb = random_poset(rng, nb, static_cast<std::uint32_t>(draw_below(rng, 61)));
  const auto density = static_cast<std::uint32_t>(10 + draw_below(rng, 60));
  const auto empty_chance = static_cast<std::uint32_t>(draw_below(rng, 40));
  std::vector<Bitset> raw;
  for (std::size_t x = 0; x < na; ++x) {
    Bitset s(nb);
    if (!draw_chance(rng, empty_chance))
      for (std::size_t y = 0; y < nb; ++y)
        if (draw_chance(rng, density)) s.set(y);
    raw.push_back(g.pb.down_closure(s));
  }
  for (std::size_t x = 0; x < na; ++x) {
    Bitset img(nb);
    g.pa.down(x).for_each([&](std::size_t y) { img |= raw[y]; });
    g.images.push_back(std::move(img));
  }
  return g;
}

InclusionData build_inclusion_data(const GaloisInstance& g) {
  auto sa = downset_lattice(g.pa, "a");
  auto sb = downset_lattice(g.pb, "b");
  std::vector<Element> table;
  for (const auto& s : sa.sets) {
    Bitset t(g.pb.size());
    s.for_each([&](std::size_t x) { t |= g.images[x]; });
    table.push_back(sb.element_of(t));
  }
  return make_inclusion_data(GaloisConnection::from_lower(MonotoneMap::make(sa.lattice, sb.lattice, std::move(table))));
}

InclusionData gen_inclusion_data(std::uint64_t seed, const GenBounds& bounds) {
  return build_inclusion_data(gen_galois_instance(seed, bounds));
}

Json galois_instance_to_json(const GaloisInstance& g) {
  Json source = poset_to_json(g.pa);
  source["downsets"] = true;
  Json target = poset_to_json(g.pb);
  target["downsets"] = true;
  Json images = Json::array();
  for (const auto& s : g.images) images.push_back(s.indices());
  return {{"kind", "galois"}, {"source", source}, {"target", target}, {"point_images", images}};
}

MultiplicityInclusion gen_matrix(std::uint64_t seed, std::size_t max_rows, std::size_t max_cols) {
  std::mt19937_64 rng(seed);
  const auto rows = draw_size(rng, max_rows), cols = draw_size(rng, max_cols);
  const auto density = static_cast<std::uint32_t>(15 + draw_below(rng, 70));
  std::vector<std::vector<unsigned>> m(rows, std::vector<unsigned>(cols, 0));
  for (auto& row : m) {
    for (auto& e : row) e = draw_chance(rng, density) ? 1U : 0U;
    if (std::none_of(row.begin(), row.end(), [](unsigned e) { return e != 0; })) row[draw_below(rng, cols)] = 1;
  }
  return MultiplicityInclusion::make(std::move(m));
}

ActionInstance gen_action(std::uint64_t seed, std::size_t max_points) {
  std::mt19937_64 rng(seed);
  ActionInstance a;
  a.space = random_poset(rng, draw_size(rng, max_points), static_cast<std::uint32_t>(draw_below(rng, 40)));
  auto groups = small_subgroups(a.space, 6);
  a.generators = groups[draw_below(rng, groups.size())];
  return a;
}

FiniteGroupAction build_action(const ActionInstance& a) {
  return FiniteGroupAction::make(make_space(a.space), a.generators);
}

BundleInstance gen_bundle(std::uint64_t seed, std::size_t max_points) {
  std::mt19937_64 rng(seed);
  BundleInstance b;
  b.total = random_poset(rng, draw_size(rng, max_points), static_cast<std::uint32_t>(draw_below(rng, 60)));
  b.base = random_poset(rng, draw_size(rng, max_points), static_cast<std::uint32_t>(draw_below(rng, 60)));
  std::vector<std::vector<std::size_t>> maps;
  for_each_monotone_map(b.total, b.base, [&](const std::vector<std::size_t>& f) { maps.push_back(f); });
  b.proj = maps[draw_below(rng, maps.size())];
  return b;
}

BundleMap build_bundle(const BundleInstance& b) {
  return BundleMap::make(make_space(b.total), make_space(b.base), b.proj);
}

// ---------------------------------------------------------------------------
// Shrinking

std::vector<GaloisInstance> shrink_candidates(const GaloisInstance& g) {
  std::vector<GaloisInstance> out;
  if (g.pa.size() > 1)
    for (std::size_t x = 0; x < g.pa.size(); ++x) {
      auto keep = all_but(g.pa.size(), x);
      GaloisInstance c{g.pa.induced(keep), g.pb, {}};
      for (auto k : keep) c.images.push_back(g.images[k]);
      out.push_back(std::move(c));
    }
  if (g.pb.size() > 1)
    for (std::size_t y = 0; y < g.pb.size(); ++y) {
      auto keep = all_but(g.pb.size(), y);
      GaloisInstance c{g.pa, g.pb.induced(keep), {}};
      for (const auto& s : g.images) c.images.push_back(project(s, keep));
      out.push_back(std::move(c));
    }
  return out;
}

std::vector<MultiplicityInclusion> shrink_candidates(const MultiplicityInclusion& m) {
  std::vector<MultiplicityInclusion> out;
  const auto& mult = m.mult();
  const auto rows = mult.size(), cols = mult[0].size();
  if (rows > 1)
    for (std::size_t i = 0; i < rows; ++i) {
      auto c = mult;
      c.erase(c.begin() + static_cast<std::ptrdiff_t>(i));
      out.push_back(MultiplicityInclusion::make(std::move(c)));
    }
  if (cols > 1)
    for (std::size_t j = 0; j < cols; ++j) {
      auto c = mult;
      for (auto& row : c) row.erase(row.begin() + static_cast<std::ptrdiff_t>(j));
      out.push_back(MultiplicityInclusion::make(std::move(c)));
    }
  return out;
}

std::vector<ActionInstance> shrink_candidates(const ActionInstance& a) {
  std::vector<ActionInstance> out;
  for (std::size_t k = 0; k < a.generators.size(); ++k) {
    auto c = a;
    c.generators.erase(c.generators.begin() + static_cast<std::ptrdiff_t>(k));
    out.push_back(std::move(c));
  }
  auto act = build_action(a);
  Bitset seen(a.space.size());
  for (std::size_t p = 0; p < a.space.size(); ++p) {
    if (seen.test(p)) continue;
    auto orbit = act.orbit(p);
    seen |= orbit;
    if (orbit.count() == a.space.size()) continue;
    std::vector<std::size_t> keep, pos(a.space.size(), 0);
    for (std::size_t q = 0; q < a.space.size(); ++q)
      if (!orbit.test(q)) {
        pos[q] = keep.size();
        keep.push_back(q);
      }
    ActionInstance c{a.space.induced(keep), {}};
    for (const auto& g : a.generators) {
      Permutation h;
      for (auto q : keep) h.push_back(pos[g[q]]);
      c.generators.push_back(std::move(h));
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<BundleInstance> shrink_candidates(const BundleInstance& b) {
  std::vector<BundleInstance> out;
  if (b.total.size() > 1)
    for (std::size_t t = 0; t < b.total.size(); ++t) {
      auto keep = all_but(b.total.size(), t);
      BundleInstance c{b.total.induced(keep), b.base, {}};
      for (auto k : keep) c.proj.push_back(b.proj[k]);
      out.push_back(std::move(c));
    }
  if (b.base.size() > 1)
    for (std::size_t x = 0; x < b.base.size(); ++x) {
      if (std::find(b.proj.begin(), b.proj.end(), x) != b.proj.end()) continue;
      BundleInstance c{b.total, b.base.induced(all_but(b.base.size(), x)), b.proj};
      for (auto& v : c.proj)
        if (v > x) --v;
      out.push_back(std::move(c));
    }
  return out;
}

// ---------------------------------------------------------------------------
// Sweeps

Json SweepReport::to_json() const {
  return {{"tag", tag},
          {"seed", seed},
          {"budget", budget},
          {"instances", instances},
          {"applicable", applicable},
          {"violations", violations},
          {"counterexample", counterexample},
          {"detail", detail}};
}

const std::vector<std::string>& sweep_tags() {
  static const std::vector<std::string> tags{"T33", "T42", "T47", "C48", "C49", "L51", "C54", "T62"};
  return tags;
}

void enforce(const SweepReport& report) {
  if (report.violations != 0) throw SweepFailed(report.tag, report.counterexample.dump());
}

namespace {

/// Result of checking one population item. `flags` feeds the coverage tally.
struct Outcome {
  std::uint64_t instances = 1;
  std::uint64_t applicable = 0;
  bool violated = false;
  bool threw = false;
  std::uint32_t flags = 0;
  std::string detail;
  Json witness;  // set by items that serialize themselves
};

using Mixed = std::variant<GaloisInstance, MultiplicityInclusion, ActionInstance, BundleInstance>;

InclusionData data_of(const GaloisInstance& g) { return build_inclusion_data(g); }
InclusionData data_of(const MultiplicityInclusion& m) { return to_inclusion_data(m); }
InclusionData data_of(const ActionInstance& a) { return action_inclusion_data(build_action(a)); }
InclusionData data_of(const BundleInstance& b) { return bundle_inclusion_data(build_bundle(b)); }
InclusionData data_of(const Mixed& m) {
  return std::visit([](const auto& x) { return data_of(x); }, m);
}

Json serialize(const GaloisInstance& g) { return galois_instance_to_json(g); }
Json serialize(const MultiplicityInclusion& m) { return matrix_to_json(m); }
Json serialize(const ActionInstance& a) { return action_to_json(a.space, a.generators); }
Json serialize(const BundleInstance& b) { return bundle_to_json(b.total, b.base, b.proj); }
Json serialize(const Mixed& m) {
  return std::visit([](const auto& x) { return serialize(x); }, m);
}

std::vector<Mixed> shrink_candidates(const Mixed& m) {
  return std::visit(
      [](const auto& x) {
        std::vector<Mixed> out;
        for (auto& c : shrink_candidates(x)) out.emplace_back(std::move(c));
        return out;
      },
      m);
}

Outcome guarded(const std::function<Outcome()>& f) {
  try {
    return f();
  } catch (const std::exception& e) {
    Outcome o;
    o.violated = o.threw = true;
    o.detail = std::string("unexpected exception: ") + e.what();
    return o;
  }
}

/// Checks every item, then shrinks and serializes the smallest failing one.
template <class T, class Check>
void run_population(SweepReport& rep, const std::vector<T>& items, Exec exec, Check&& check,
                    const std::vector<std::string>& flag_names) {
  std::vector<Outcome> outs(items.size());
  auto body = [&](std::size_t k) { outs[k] = guarded([&] { return check(items[k]); }); };
  if (exec == Exec::parallel) {
    const auto count = static_cast<std::int64_t>(items.size());
#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t k = 0; k < count; ++k) body(static_cast<std::size_t>(k));
  } else {
    for (std::size_t k = 0; k < items.size(); ++k) body(k);
  }
  std::vector<std::uint64_t> tally(flag_names.size(), 0);
  std::optional<std::size_t> first;
  for (std::size_t k = 0; k < outs.size(); ++k) {
    rep.instances += outs[k].instances;
    rep.applicable += outs[k].applicable;
    if (outs[k].violated) {
      ++rep.violations;
      if (!first) first = k;
    }
    for (std::size_t b = 0; b < flag_names.size(); ++b)
      if ((outs[k].flags >> b) & 1U) ++tally[b];
  }
  std::string summary;
  for (std::size_t b = 0; b < flag_names.size(); ++b)
    summary += (b ? ", " : "") + flag_names[b] + " " + std::to_string(tally[b]);
  if (!first) {
    rep.detail = summary;
    return;
  }
  const auto& bad = outs[*first];
  rep.detail = bad.detail;
  if (!bad.witness.is_null()) {
    rep.counterexample = bad.witness;
    return;
  }
  if constexpr (requires(const T& t) { serialize(t); }) {
    auto fails = [&](const T& c) {
      auto o = guarded([&] { return check(c); });
      return o.violated && o.threw == bad.threw;
    };
    auto small = shrink(items[*first], [](const T& x) { return shrink_candidates(x); }, fails);
    rep.counterexample = serialize(small);
    rep.detail = guarded([&] { return check(small); }).detail;
  }
}

std::uint64_t count_budget(std::uint64_t budget) { return budget == 0 ? 1000 : budget; }

template <class T, class Gen>
std::vector<T> draw_population(std::uint64_t seed, std::uint64_t n, Gen&& gen) {
  std::vector<T> out;
  out.reserve(n);
  for (std::uint64_t k = 0; k < n; ++k) out.push_back(gen(mix_seed(seed, k)));
  return out;
}

std::vector<Mixed> mixed_population(std::uint64_t seed, std::uint64_t n) {
  return draw_population<Mixed>(seed, n, [k = std::uint64_t{0}](std::uint64_t s) mutable -> Mixed {
    switch (k++ % 4) {
      case 0: return gen_galois_instance(s);
      case 1: return gen_matrix(s, 4, 4);
      case 2: return gen_action(s, 5);
      default: return gen_bundle(s, 4);
    }
  });
}

/// Structural side checks folded into every random sweep.
void side_checks(const InclusionData& d, Outcome& o) {
  auto p26 = verify_prop26(d.gc);
  if (!p26.all()) {
    o.violated = true;
    o.detail = "adjunction laws fail:";
    for (const auto& f : p26.failed()) o.detail += " " + f;
  }
}

void append(Outcome& o, const Verdict& v) {
  if (v.applicable) o.applicable = 1;
  if (!v.holds) {
    o.violated = true;
    if (!o.detail.empty()) o.detail += "; ";
    o.detail += v.detail;
  }
}

Outcome check_t42(const InclusionData& d) {
  Outcome o;
  side_checks(d, o);
  append(o, theorem42(d));
  if (check_JR(d)) {
    o.flags |= 1U;
    if (check_C1(d)) o.flags |= 2U;
    auto pi = pi_map(d);
    if (is_open_map(pi) && is_surjective(pi)) o.flags |= 4U;
  }
  return o;
}

Outcome check_t47(const InclusionData& d) {
  Outcome o;
  side_checks(d, o);
  append(o, theorem47(d));
  auto p44 = prop44(d);
  if (!p44.holds) append(o, p44);
  const bool mi = check_MI(d);
  if (mi) o.flags |= 1U;
  if (mi && check_C2(d)) o.flags |= 2U;
  if (auto r = r_on_primes(d); r && is_open_map(*r) && is_surjective(*r)) o.flags |= 4U;
  return o;
}

Outcome check_c48(const InclusionData& d) {
  Outcome o;
  side_checks(d, o);
  auto v = cor48(d);
  append(o, v);
  auto p44 = prop44(d);
  if (!p44.holds) append(o, p44);
  if (v.applicable) {
    o.flags |= 1U;
    if (check_MI(d) && check_C2(d)) o.flags |= 2U;
  }
  return o;
}

Outcome check_c49(const InclusionData& d) {
  Outcome o;
  side_checks(d, o);
  auto v = cor49(d);
  append(o, v);
  if (v.applicable) {
    o.flags |= 1U;
    if (separates(d.gc)) o.flags |= 2U;
  }
  return o;
}

std::vector<MultiplicityInclusion> small_matrices(std::size_t max_side) {
  std::vector<MultiplicityInclusion> out;
  for (std::size_t rows = 1; rows <= max_side; ++rows)
    for (std::size_t cols = 1; cols <= max_side; ++cols)
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (rows * cols)); ++mask) {
        std::vector<std::vector<unsigned>> m(rows, std::vector<unsigned>(cols, 0));
        bool zero_row = false;
        for (std::size_t i = 0; i < rows; ++i) {
          bool any = false;
          for (std::size_t j = 0; j < cols; ++j)
            if ((mask >> (i * cols + j)) & 1U) m[i][j] = 1, any = true;
          zero_row |= !any;
        }
        if (!zero_row) out.push_back(MultiplicityInclusion::make(std::move(m)));
      }
  return out;
}

std::vector<MultiplicityInclusion> matrix_population(std::uint64_t seed, std::uint64_t budget) {
  auto out = small_matrices(3);
  auto extra = draw_population<MultiplicityInclusion>(seed, budget, [](std::uint64_t s) { return gen_matrix(s, 5, 5); });
  out.insert(out.end(), extra.begin(), extra.end());
  return out;
}

std::string set_text(const Bitset& s, const char* prefix) { return format_set(s, prefix); }

Outcome check_l51(const MultiplicityInclusion& m) {
  Outcome o;
  o.applicable = m.injective() ? 1 : 0;
  if (!m.injective()) return o;
  const auto k = m.a_summands();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
    auto s = Bitset::from_mask(k, mask);
    if (!is_symmetric(m, s)) continue;
    if (s.any() && s.count() < k) o.flags |= 1U;
    if (!(restrict(m, induce(m, s)) == s)) {
      o.violated = true;
      o.detail = "symmetric " + set_text(s, "a") + " is not restricted";
      return o;
    }
    for (std::uint64_t tm = 0; tm < (std::uint64_t{1} << k); ++tm) {
      auto t = Bitset::from_mask(k, tm);
      if (!(induce(m, s & t) == (induce(m, s) & induce(m, t)))) {
        o.violated = true;
        o.detail = "induce does not preserve the meet of symmetric " + set_text(s, "a") + " and " + set_text(t, "a");
        return o;
      }
    }
  }
  return o;
}

Outcome check_c54(const MultiplicityInclusion& m) {
  Outcome o;
  if (!m.injective()) return o;
  auto d = to_inclusion_data(m);
  side_checks(d, o);
  const auto k = m.a_summands();
  bool all_symmetric = true;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k) && all_symmetric; ++mask) {
    auto s = Bitset::from_mask(k, mask);
    if (restrict(m, induce(m, s)) == s && !is_symmetric(m, s)) all_symmetric = false;
  }
  if (!all_symmetric) return o;
  o.applicable = 1;
  o.flags |= 1U;
  if (!check_JR(d)) o.detail = "JR fails";
  else if (!check_C1(d)) o.detail = "C1 fails";
  else if (!check_MIf(d)) o.detail = "MIf fails";
  o.violated |= !o.detail.empty();
  return o;
}

std::vector<ActionInstance> all_small_actions(std::size_t max_points, std::size_t max_order) {
  std::vector<ActionInstance> out;
  for (std::size_t n = 1; n <= max_points; ++n)
    for (const auto& p : unlabeled_posets(n))
      for (auto& gens : small_subgroups(p, max_order)) out.push_back(ActionInstance{p, std::move(gens)});
  return out;
}

Outcome check_t62(const ActionInstance& a) {
  Outcome o;
  o.applicable = 1;
  auto act = build_action(a);
  if (act.order() > 1) o.flags |= 1U;
  if (!action_quasi_orbit_agreement(act)) {
    o.violated = true;
    o.detail = "quasi-orbit classes differ from orbit-closure classes";
    return o;
  }
  auto d = action_inclusion_data(act);
  if (!check_JR(d) || !check_C1(d)) {
    o.violated = true;
    o.detail = "invariant-open insertion fails JR or C1";
  }
  return o;
}

struct FramePair {
  FinitePoset frame;  // the frame is D(frame)
  FinitePoset space;
};

Outcome check_t33(const FramePair& fp) {
  Outcome o;
  o.instances = 0;
  auto l = downset_lattice(fp.frame, "j").lattice;
  auto x = make_space(fp.space);
  auto spec = primes(l);
  std::mt19937_64 unused(0);
  for (const auto& g : locale_morphisms(l, x->opens_lattice(), std::uint64_t{1} << 20, unused, 0)) {
    ++o.instances;
    ++o.applicable;
    auto rep = theorem33_check(g, x, spec);
    if (rep.pi_open && rep.pi_surjective) o.flags |= 1U;
    if (rep.equivalence_verified) continue;
    o.violated = true;
    o.detail = "equivalence fails (F exists " + std::to_string(rep.has_lower_adjoint_F) + ", identity " +
               std::to_string(rep.eq32_holds) + ", injective " + std::to_string(rep.g_injective) + ", open " +
               std::to_string(rep.pi_open) + ", surjective " + std::to_string(rep.pi_surjective) + ")";
    o.witness = {{"frame", poset_to_json(fp.frame)}, {"space", poset_to_json(fp.space)}, {"map", g.values()}};
    return o;
  }
  return o;
}

std::vector<FramePair> t33_population() {
  std::vector<FinitePoset> frames, spaces;
  for (std::size_t n = 0; n <= 4; ++n)
    for (auto& p : unlabeled_posets(n))
      if (downset_lattice(p).sets.size() <= 5) frames.push_back(p);
  for (std::size_t n = 0; n <= 3; ++n)
    for (auto& p : unlabeled_posets(n)) spaces.push_back(p);
  std::vector<FramePair> out;
  for (const auto& f : frames)
    for (const auto& s : spaces) out.push_back(FramePair{f, s});
  return out;
}

}  // namespace

SweepReport sweep_theorem(const std::string& tag, std::uint64_t budget, std::uint64_t seed, Exec exec) {
  SweepReport rep;
  rep.tag = tag;
  rep.seed = seed;
  rep.budget = budget;
  const auto n = count_budget(budget);
  auto galois = [&] {
    return draw_population<GaloisInstance>(seed, n, [](std::uint64_t s) { return gen_galois_instance(s); });
  };
  if (tag == "T33") {
    run_population(rep, t33_population(), exec, check_t33, {"open surjective"});
  } else if (tag == "T42") {
    run_population(rep, galois(), exec, [](const auto& g) { return check_t42(data_of(g)); },
                   {"JR", "JR and C1", "JR and pi open surjective"});
  } else if (tag == "T47") {
    run_population(rep, galois(), exec, [](const auto& g) { return check_t47(data_of(g)); },
                   {"MI", "MI and C2", "r open surjective"});
  } else if (tag == "C48") {
    run_population(rep, mixed_population(seed, n), exec, [](const Mixed& m) { return check_c48(data_of(m)); },
                   {"rho defined", "MI and C2"});
  } else if (tag == "C49") {
    run_population(rep, mixed_population(seed, n), exec, [](const Mixed& m) { return check_c49(data_of(m)); },
                   {"JR and C1", "separates"});
  } else if (tag == "L51") {
    run_population(rep, matrix_population(seed, n), exec, check_l51, {"nontrivial symmetric"});
  } else if (tag == "C54") {
    run_population(rep, matrix_population(seed, n), exec, check_c54, {"all restricted symmetric"});
  } else if (tag == "T62") {
    run_population(rep, all_small_actions(5, 6), exec, check_t62, {"nontrivial group"});
  } else {
    throw Error(ErrorKind::invalid_input, "unknown suite \"" + tag + "\"");
  }
  return rep;
}

}  // namespace stone
