#include "stone/quasiorbit.hpp"

#include <stdexcept>

#include "stone/error.hpp"

namespace stone {

Sublattice make_sublattice(const FiniteLattice& ambient, const std::vector<Element>& elements) {
  Sublattice s;
  s.embed = elements;
  s.index.assign(ambient.size(), Sublattice::npos);
  std::vector<std::size_t> keep;
  std::vector<std::string> labels;
  for (std::size_t k = 0; k < elements.size(); ++k) {
    s.index[elements[k]] = k;
    keep.push_back(elements[k]);
    labels.push_back(ambient.label(elements[k]));
  }
  s.lattice = make_lattice(ambient.order().induced(keep), std::move(labels));
  return s;
}

InclusionData make_inclusion_data(GaloisConnection gc) {
  InclusionData d{std::move(gc), {}, {}, {}, {}, {}, {}, {}};
  d.spec_a = primes(d.gc.source());
  d.spec_b = primes(d.gc.target());
  if (!verify_prop26(d.gc).all()) throw std::logic_error("certified connection fails a fixed-point law");
  d.fixed = fixed_points(d.gc);
  d.restricted = make_sublattice(d.a(), d.fixed.restricted_elements);
  d.induced = make_sublattice(d.b(), d.fixed.induced_elements);
  d.spec_restricted = point_space(d.restricted.lattice);
  d.spec_induced = point_space(d.induced.lattice);
  return d;
}

bool check_JR(const InclusionData& d) {
  const auto& a = d.a();
  const auto& r = d.fixed.restricted;
  if (!r.test(a.bottom())) return false;
  for (auto x : d.fixed.restricted_elements)
    for (auto y : d.fixed.restricted_elements)
      if (!r.test(a.join(x, y))) return false;
  return true;
}

bool check_C1(const InclusionData& d) {
  const auto& a = d.a();
  auto ri = [&](Element x) { return d.gc.r(d.gc.i(x)); };
  for (auto x : d.fixed.restricted_elements)
    for (Element j = 0; j < a.size(); ++j)
      if (a.meet(x, ri(j)) != ri(a.meet(x, j))) return false;
  return true;
}

bool check_MIf(const InclusionData& d) {
  const auto& b = d.b();
  for (auto x : d.fixed.induced_elements)
    for (auto y : d.fixed.induced_elements)
      if (!d.fixed.induced.test(b.meet(x, y))) return false;
  return true;
}

bool check_nondegenerate(const InclusionData& d) { return d.fixed.induced.test(d.b().top()); }

namespace {

// Meet of the induced elements above j; induced for every j iff every
// family of induced elements has an induced meet.
Element meet_of_induced_above(const InclusionData& d, Element j) {
  const auto& b = d.b();
  Element acc = b.top();
  for (auto y : d.fixed.induced_elements)
    if (b.leq(j, y)) acc = b.meet(acc, y);
  return acc;
}

[[noreturn]] void throw_mi(const InclusionData& d) {
  const auto& b = d.b();
  if (!check_nondegenerate(d))
    throw MIViolated({}, b.top(), "empty meet " + b.label(b.top()) + " is not induced");
  for (auto x : d.fixed.induced_elements)
    for (auto y : d.fixed.induced_elements) {
      auto m = b.meet(x, y);
      if (!d.fixed.induced.test(m))
        throw MIViolated({x, y}, m,
                         b.label(x) + " ∧ " + b.label(y) + " = " + b.label(m) + " is not induced");
    }
  throw std::logic_error("meet-closure failure without a witness");
}

}  // namespace

bool check_MI(const InclusionData& d) {
  bool all = true;
  for (Element j = 0; j < d.b().size(); ++j)
    if (!d.fixed.induced.test(meet_of_induced_above(d, j))) all = false;
  if (all != (check_MIf(d) && check_nondegenerate(d)))
    throw std::logic_error("arbitrary and finite meet-closure disagree");
  return all;
}

std::vector<Element> F_table(const InclusionData& d) {
  if (!check_MI(d)) throw_mi(d);
  std::vector<Element> f(d.b().size());
  for (Element j = 0; j < f.size(); ++j) f[j] = meet_of_induced_above(d, j);
  return f;
}

MonotoneMap F_map(const InclusionData& d) {
  auto f = F_table(d);
  std::vector<Element> values;
  for (auto e : f) values.push_back(static_cast<Element>(d.induced.index[e]));
  auto map = MonotoneMap::make(d.gc.target(), d.induced.lattice, std::move(values));
  auto insertion = MonotoneMap::make(d.induced.lattice, d.gc.target(), d.induced.embed);
  if (!is_adjoint_pair(map, insertion, Exec::serial)) throw std::logic_error("F is not lower adjoint to the insertion");
  return map;
}

bool check_C2(const InclusionData& d) {
  auto f = F_table(d);
  const auto& b = d.b();
  for (auto x : d.fixed.induced_elements)
    for (Element j = 0; j < b.size(); ++j)
      if (b.meet(x, f[j]) != f[b.meet(x, j)]) return false;
  return true;
}

PointMap pi_map(const InclusionData& d) {
  if (!check_JR(d)) throw Error(ErrorKind::jr_violated, "joins of restricted elements leave the restricted set");
  const auto& a = d.a();
  std::vector<std::size_t> values;
  for (auto p : d.spec_a.primes) {
    Element acc = a.bottom();
    for (auto x : d.fixed.restricted_elements)
      if (a.leq(x, p)) acc = a.join(acc, x);
    auto sub = static_cast<Element>(d.restricted.index[acc]);
    if (!d.spec_restricted.is_prime(sub)) throw std::logic_error("largest restricted element below a prime is not prime");
    values.push_back(d.spec_restricted.index_of[sub]);
  }
  auto pi = PointMap::make(d.spec_a.space, d.spec_restricted.space, std::move(values));
  auto insertion = MonotoneMap::make(d.restricted.lattice, d.gc.source(), d.restricted.embed);
  if (spectral_map(insertion, d.spec_restricted, d.spec_a).values() != pi.values())
    throw std::logic_error("pi differs from the adjunct of the insertion");
  return pi;
}

QuasiOrbitSpace quasi_orbit_space(const InclusionData& d) {
  auto pi = pi_map(d);
  auto base = d.spec_a.space;
  const auto n = base->size();
  std::vector<std::size_t> class_of(n);
  std::vector<Bitset> classes;
  std::vector<std::size_t> class_value;
  for (std::size_t p = 0; p < n; ++p) {
    std::size_t c = 0;
    while (c < classes.size() && class_value[c] != pi(p)) ++c;
    if (c == classes.size()) {
      classes.emplace_back(n);
      class_value.push_back(pi(p));
    }
    classes[c].set(p);
    class_of[p] = c;
  }
  auto saturate = [&](const Bitset& s) {
    Bitset out(n);
    s.for_each([&](std::size_t p) { out |= classes[class_of[p]]; });
    return out;
  };
  const auto m = classes.size();
  std::vector<Bitset> smallest_open(m);
  for (std::size_t c = 0; c < m; ++c) {
    Bitset s = classes[c];
    for (;;) {
      Bitset next = saturate(base->order().down_closure(s));
      if (next == s) break;
      s = next;
    }
    smallest_open[c] = s;
  }
  std::vector<std::vector<bool>> leq(m, std::vector<bool>(m, false));
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) leq[a][b] = classes[a].is_subset_of(smallest_open[b]);
  std::vector<std::string> labels;
  for (const auto& c : classes) {
    std::string text = "[";
    bool first = true;
    c.for_each([&](std::size_t p) {
      if (!first) text += ',';
      first = false;
      text += base->label(p);
    });
    labels.push_back(text + "]");
  }
  auto quotient = make_space(FinitePoset::from_matrix(leq), std::move(labels));
  auto pi_star = PointMap::make(quotient, d.spec_restricted.space, class_value);
  return QuasiOrbitSpace{base, std::move(pi), std::move(classes), std::move(class_of), quotient, std::move(pi_star)};
}

std::optional<PointMap> r_on_primes(const InclusionData& d) {
  std::vector<std::size_t> values;
  for (auto q : d.spec_b.primes) {
    auto sub = static_cast<Element>(d.restricted.index[d.gc.r(q)]);
    if (!d.spec_restricted.is_prime(sub)) return std::nullopt;
    values.push_back(d.spec_restricted.index_of[sub]);
  }
  return PointMap::make(d.spec_b.space, d.spec_restricted.space, std::move(values));
}

std::optional<PointMap> ir_on_primes(const InclusionData& d) {
  std::vector<std::size_t> values;
  for (auto q : d.spec_b.primes) {
    auto sub = static_cast<Element>(d.induced.index[d.gc.i(d.gc.r(q))]);
    if (!d.spec_induced.is_prime(sub)) return std::nullopt;
    values.push_back(d.spec_induced.index_of[sub]);
  }
  return PointMap::make(d.spec_b.space, d.spec_induced.space, std::move(values));
}

PointMap quasi_orbit_map(const InclusionData& d, const QuasiOrbitSpace& q) {
  if (!check_JR(d)) throw ConditionViolated("JR");
  if (!check_C1(d)) throw ConditionViolated("C1");
  if (!check_MIf(d)) throw ConditionViolated("MIf");
  if (!check_nondegenerate(d)) throw ConditionViolated("nondegenerate");
  auto r = r_on_primes(d);
  if (!r) throw std::logic_error("r does not send primes to primes although MI holds");
  std::vector<std::size_t> values;
  for (std::size_t p = 0; p < d.spec_b.primes.size(); ++p) {
    std::size_t c = 0;
    while (c < q.classes.size() && q.pi_star(c) != (*r)(p)) ++c;
    if (c == q.classes.size()) throw std::logic_error("pi_* misses a restricted prime although C1 holds");
    values.push_back(c);
  }
  return PointMap::make(d.spec_b.space, q.quotient, std::move(values));
}

PointMap quasi_orbit_map(const InclusionData& d) {
  if (!check_JR(d)) throw ConditionViolated("JR");
  return quasi_orbit_map(d, quasi_orbit_space(d));
}

Verdict theorem42(const InclusionData& d) {
  Verdict v;
  if (!check_JR(d)) return v;
  v.applicable = true;
  auto q = quasi_orbit_space(d);
  bool c1 = check_C1(d);
  bool open = is_open_map(q.pi), surj = is_surjective(q.pi);
  v.holds = c1 == (open && surj);
  if (c1 && !is_homeomorphism(q.pi_star)) v.holds = false;
  v.detail = std::string("C1=") + (c1 ? "1" : "0") + " open=" + (open ? "1" : "0") + " surjective=" +
             (surj ? "1" : "0");
  return v;
}

Verdict theorem47(const InclusionData& d) {
  Verdict v;
  v.applicable = true;
  bool mi = check_MI(d);
  bool c2 = mi && check_C2(d);
  auto r = r_on_primes(d);
  bool open = r && is_open_map(*r), surj = r && is_surjective(*r);
  v.holds = (mi && c2) == (r.has_value() && open && surj);
  v.detail = std::string("MI=") + (mi ? "1" : "0") + " C2=" + (c2 ? "1" : "0") + " defined=" +
             (r ? "1" : "0") + " open=" + (open ? "1" : "0") + " surjective=" + (surj ? "1" : "0");
  return v;
}

Verdict prop44(const InclusionData& d) {
  Verdict v;
  if (!check_MI(d)) return v;
  v.applicable = true;
  auto ir = ir_on_primes(d);
  auto r = r_on_primes(d);
  if (!ir || !r) {
    v.holds = false;
    v.detail = "primes not sent to primes";
    return v;
  }
  for (std::size_t q = 0; q < d.spec_b.primes.size(); ++q) {
    Element induced_prime = d.induced.embed[d.spec_induced.primes[(*ir)(q)]];
    Element via_iso = d.gc.r(induced_prime);
    Element direct = d.restricted.embed[d.spec_restricted.primes[(*r)(q)]];
    if (via_iso != direct) {
      v.holds = false;
      v.detail = "diagram does not commute at " + d.spec_b.space->label(q);
    }
  }
  return v;
}

Verdict cor48(const InclusionData& d) {
  Verdict v;
  if (!check_JR(d) || !check_C1(d) || !check_MIf(d) || !check_nondegenerate(d)) return v;
  v.applicable = true;
  auto rho = quasi_orbit_map(d);
  bool lhs = is_open_map(rho) && is_surjective(rho);
  bool rhs = check_MI(d) && check_C2(d);
  v.holds = lhs == rhs;
  v.detail = std::string("rho open+surjective=") + (lhs ? "1" : "0") + " MI&C2=" + (rhs ? "1" : "0");
  return v;
}

Verdict cor49(const InclusionData& d) {
  Verdict v;
  if (!check_JR(d) || !check_C1(d)) return v;
  v.applicable = true;
  bool defined = check_MIf(d) && check_nondegenerate(d);
  bool homeo = defined && is_homeomorphism(quasi_orbit_map(d));
  bool sep = separates(d.gc);
  v.holds = homeo == sep;
  v.detail = std::string("rho homeomorphism=") + (homeo ? "1" : "0") + " separates=" + (sep ? "1" : "0");
  return v;
}

}  // namespace stone
