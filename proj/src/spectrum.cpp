#include "stone/spectrum.hpp"

#include <stdexcept>
#include <unordered_set>

#include "stone/error.hpp"

namespace stone {

namespace {

SetLattice labelled_opens(const FinitePoset& order, const std::vector<std::string>& labels) {
  SetLattice opens = downset_lattice(order, "x");
  if (labels.empty()) return opens;
  std::vector<std::string> open_labels;
  for (const auto& s : opens.sets) {
    std::string text = "{";
    bool first = true;
    s.for_each([&](std::size_t p) {
      if (!first) text += ',';
      first = false;
      text += labels[p];
    });
    open_labels.push_back(text + "}");
  }
  opens.lattice = make_lattice(opens.lattice->order(), std::move(open_labels));
  return opens;
}

}  // namespace

// ---------------------------------------------------------------------------
// FiniteT0Space

FiniteT0Space FiniteT0Space::from_order(FinitePoset points, std::vector<std::string> labels) {
  if (!labels.empty() && labels.size() != points.size())
    throw Error(ErrorKind::invalid_input, "point label count does not match space size");
  FiniteT0Space x;
  x.opens_ = labelled_opens(points, labels);
  x.order_ = std::move(points);
  x.labels_ = std::move(labels);
  return x;
}

FiniteT0Space FiniteT0Space::from_opens(std::size_t n, const std::vector<Bitset>& opens,
                                        std::vector<std::string> labels) {
  std::unordered_set<Bitset, BitsetHash> family;
  for (const auto& u : opens) {
    if (u.size() != n) throw Error(ErrorKind::invalid_input, "open set over the wrong number of points");
    family.insert(u);
  }
  if (!family.count(Bitset(n)) || !family.count(Bitset::full(n)))
    throw Error(ErrorKind::invalid_input, "open family must contain the empty and the full set");
  for (const auto& u : family)
    for (const auto& v : family)
      if (!family.count(u | v) || !family.count(u & v))
        throw Error(ErrorKind::invalid_input, "open family is not closed under union and intersection");
  // p <= q iff every open containing q contains p
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, true));
  for (const auto& u : family)
    for (std::size_t q = 0; q < n; ++q)
      if (u.test(q))
        for (std::size_t p = 0; p < n; ++p)
          if (!u.test(p)) leq[p][q] = false;
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = p + 1; q < n; ++q)
      if (leq[p][q] && leq[q][p])
        throw Error(ErrorKind::invalid_input,
                    "points " + std::to_string(p) + " and " + std::to_string(q) + " are not separated (not T0)");
  return from_order(FinitePoset::from_matrix(leq), std::move(labels));
}

Bitset FiniteT0Space::interior(const Bitset& s) const {
  Bitset out(size());
  for (std::size_t x = 0; x < size(); ++x)
    if (order_.down(x).is_subset_of(s)) out.set(x);
  return out;
}

std::string FiniteT0Space::label(std::size_t p) const {
  if (p < labels_.size()) return labels_[p];
  return "x" + std::to_string(p + 1);
}

SpaceRef make_space(FinitePoset points, std::vector<std::string> labels) {
  return std::make_shared<const FiniteT0Space>(FiniteT0Space::from_order(std::move(points), std::move(labels)));
}

// ---------------------------------------------------------------------------
// PointMap

bool is_continuous(const FiniteT0Space& source, const FiniteT0Space& target, const std::vector<std::size_t>& values) {
  // For Alexandrov topologies continuity is monotonicity of the specialization order.
  for (std::size_t p = 0; p < source.size(); ++p) {
    bool ok = true;
    source.order().up(p).for_each([&](std::size_t q) { ok = ok && target.order().leq(values[p], values[q]); });
    if (!ok) return false;
  }
  return true;
}

PointMap PointMap::make(SpaceRef source, SpaceRef target, std::vector<std::size_t> values) {
  if (values.size() != source->size()) throw Error(ErrorKind::invalid_input, "point map table has the wrong size");
  for (auto v : values)
    if (v >= target->size()) throw Error(ErrorKind::invalid_input, "point map value out of range");
  if (!is_continuous(*source, *target, values)) throw Error(ErrorKind::invalid_input, "point map is not continuous");
  return PointMap(std::move(source), std::move(target), std::move(values));
}

PointMap PointMap::identity(SpaceRef x) {
  std::vector<std::size_t> v(x->size());
  for (std::size_t p = 0; p < v.size(); ++p) v[p] = p;
  return PointMap(x, x, std::move(v));
}

Bitset PointMap::image(const Bitset& s) const {
  Bitset out(target_->size());
  s.for_each([&](std::size_t p) { out.set(values_[p]); });
  return out;
}

Bitset PointMap::preimage(const Bitset& t) const {
  Bitset out(source_->size());
  for (std::size_t p = 0; p < values_.size(); ++p)
    if (t.test(values_[p])) out.set(p);
  return out;
}

bool is_open_map(const PointMap& f) {
  // Images commute with unions and the sets down(p) form a basis.
  for (std::size_t p = 0; p < f.source()->size(); ++p)
    if (!f.target()->is_open(f.image(f.source()->order().down(p)))) return false;
  return true;
}

bool is_surjective(const PointMap& f) { return f.image(Bitset::full(f.source()->size())).count() == f.target()->size(); }

bool is_homeomorphism(const PointMap& f) {
  return f.source()->size() == f.target()->size() && is_surjective(f) && is_open_map(f);
}

// ---------------------------------------------------------------------------
// Primes

bool is_meet_prime(const FiniteLattice& l, Element p) {
  if (p == l.top()) return false;
  for (Element a = 0; a < l.size(); ++a) {
    if (l.leq(a, p)) continue;
    for (Element b = a + 1; b < l.size(); ++b)
      if (!l.leq(b, p) && l.leq(l.meet(a, b), p)) return false;
  }
  return true;
}

PrimeSpectrum primes(const LatticeRef& l) {
  auto w = is_frame(*l);
  if (!w.distributive) {
    const auto& v = *w.violation;
    throw Error(ErrorKind::not_a_frame, "distributivity fails at (" + l->label(v[0]) + ", " + l->label(v[1]) + ", " +
                                            l->label(v[2]) + ")");
  }
  return point_space(l);
}

PrimeSpectrum point_space(const LatticeRef& l) {
  PrimeSpectrum s;
  s.locale = l;
  s.index_of.assign(l->size(), PrimeSpectrum::npos);
  for (Element e = 0; e < l->size(); ++e)
    if (is_meet_prime(*l, e)) {
      s.index_of[e] = s.primes.size();
      s.primes.push_back(e);
    }
  std::vector<std::size_t> keep(s.primes.begin(), s.primes.end());
  std::vector<std::string> labels;
  for (auto p : s.primes) labels.push_back(l->label(p));
  s.space = make_space(l->order().induced(keep), std::move(labels));
  s.open_of.assign(l->size(), Bitset(s.primes.size()));
  for (Element e = 0; e < l->size(); ++e)
    for (std::size_t k = 0; k < s.primes.size(); ++k)
      if (!l->leq(e, s.primes[k])) s.open_of[e].set(k);
  return s;
}

bool is_spatial(const PrimeSpectrum& s) {
  std::unordered_set<Bitset, BitsetHash> seen(s.open_of.begin(), s.open_of.end());
  return seen.size() == s.open_of.size();
}

bool is_spatial(const LatticeRef& l) { return is_spatial(primes(l)); }

bool is_sober(const FiniteT0Space& x) {
  const auto& opens = x.opens().sets;
  const auto full = Bitset::full(x.size());
  std::vector<Bitset> closed;
  for (const auto& u : opens) closed.push_back(full - u);
  for (const auto& c : closed) {
    if (c.none()) continue;
    std::vector<const Bitset*> proper;
    for (const auto& d : closed)
      if (d.is_subset_of(c) && !(d == c)) proper.push_back(&d);
    bool irreducible = true;
    for (std::size_t a = 0; a < proper.size() && irreducible; ++a)
      for (std::size_t b = a; b < proper.size(); ++b)
        if ((*proper[a] | *proper[b]) == c) {
          irreducible = false;
          break;
        }
    if (!irreducible) continue;
    std::size_t generic = 0;
    for (std::size_t p = 0; p < x.size(); ++p)
      if (x.order().up(p) == c) ++generic;
    if (generic != 1) return false;
  }
  return true;
}

bool is_locale_morphism(const MonotoneMap& g) { return g.preserves_joins() && g.preserves_meets(); }

PointMap spectral_map(const MonotoneMap& g, const PrimeSpectrum& source_spec, const PrimeSpectrum& target_spec) {
  if (!same_lattice(*g.source(), *source_spec.locale) || !same_lattice(*g.target(), *target_spec.locale))
    throw Error(ErrorKind::shape_mismatch, "spectra do not belong to the map's lattices");
  if (!is_locale_morphism(g)) throw Error(ErrorKind::not_locale_morphism, "map does not preserve joins and finite meets");
  const auto& l = *g.source();
  const auto& m = *g.target();
  std::vector<std::size_t> values;
  for (auto q : target_spec.primes) {
    Element acc = l.bottom();
    for (Element e = 0; e < l.size(); ++e)
      if (m.leq(g(e), q)) acc = l.join(acc, e);
    if (!source_spec.is_prime(acc)) throw std::logic_error("adjunct of a locale morphism produced a non-prime");
    values.push_back(source_spec.index_of[acc]);
  }
  return PointMap::make(target_spec.space, source_spec.space, std::move(values));
}

PointMap adjunct_point_map(const MonotoneMap& g, const SpaceRef& x, const PrimeSpectrum& spec) {
  if (!same_lattice(*g.target(), *x->opens_lattice()))
    throw Error(ErrorKind::shape_mismatch, "map does not land in the open sets of the space");
  if (!same_lattice(*g.source(), *spec.locale))
    throw Error(ErrorKind::shape_mismatch, "spectrum does not belong to the map's source");
  if (!is_locale_morphism(g)) throw Error(ErrorKind::not_locale_morphism, "map does not preserve joins and finite meets");
  const auto& l = *g.source();
  const auto& sets = x->opens().sets;
  std::vector<std::size_t> values;
  for (std::size_t p = 0; p < x->size(); ++p) {
    Element acc = l.bottom();
    for (Element e = 0; e < l.size(); ++e)
      if (!sets[g(e)].test(p)) acc = l.join(acc, e);
    if (!spec.is_prime(acc)) throw std::logic_error("adjunct of a locale morphism produced a non-prime");
    values.push_back(spec.index_of[acc]);
  }
  auto pi = PointMap::make(x, spec.space, std::move(values));
  for (Element e = 0; e < l.size(); ++e)
    if (!(pi.preimage(spec.open_of[e]) == sets[g(e)])) throw std::logic_error("G(I) differs from the preimage of U_I");
  return pi;
}

Theorem33Report theorem33_check(const MonotoneMap& g, const SpaceRef& x) {
  return theorem33_check(g, x, primes(g.source()));
}

Theorem33Report theorem33_check(const MonotoneMap& g, const SpaceRef& x, const PrimeSpectrum& spec) {
  auto pi = adjunct_point_map(g, x, spec);
  Theorem33Report rep;
  rep.g_injective = g.injective();
  rep.pi_open = is_open_map(pi);
  rep.pi_surjective = is_surjective(pi);
  auto f = lower_adjoint(g);
  if (auto* fmap = std::get_if<MonotoneMap>(&f)) {
    rep.has_lower_adjoint_F = true;
    const auto& l = *g.source();
    const auto& o = *g.target();
    rep.eq32_holds = true;
    for (Element i = 0; i < l.size() && rep.eq32_holds; ++i)
      for (Element v = 0; v < o.size(); ++v)
        if (l.meet(i, (*fmap)(v)) != (*fmap)(o.meet(g(i), v))) {
          rep.eq32_holds = false;
          break;
        }
  }
  bool lhs = rep.has_lower_adjoint_F && rep.eq32_holds && rep.g_injective;
  bool rhs = rep.pi_open && rep.pi_surjective;
  rep.equivalence_verified = lhs == rhs;
  return rep;
}

PointMap soberification(const SpaceRef& x, const PrimeSpectrum& opens_spec) {
  if (!same_lattice(*x->opens_lattice(), *opens_spec.locale))
    throw Error(ErrorKind::shape_mismatch, "spectrum is not that of the space's open sets");
  const auto full = Bitset::full(x->size());
  std::vector<std::size_t> values;
  for (std::size_t p = 0; p < x->size(); ++p) {
    Element e = x->opens().element_of(full - x->order().up(p));
    if (!opens_spec.is_prime(e)) throw std::logic_error("complement of a point closure is not prime");
    values.push_back(opens_spec.index_of[e]);
  }
  return PointMap::make(x, opens_spec.space, std::move(values));
}

MonotoneMap spectrum_unit(const PrimeSpectrum& s) {
  std::vector<Element> values;
  for (const auto& u : s.open_of) values.push_back(s.space->opens().element_of(u));
  return MonotoneMap::make(s.locale, s.space->opens_lattice(), std::move(values));
}

bool point_space_round_trip(const SpaceRef& x) {
  auto spec = primes(x->opens_lattice());
  return is_homeomorphism(soberification(x, spec));
}

bool opens_round_trip(const LatticeRef& l) {
  auto spec = primes(l);
  auto unit = spectrum_unit(spec);
  if (!unit.injective() || l->size() != unit.target()->size()) return false;
  // an order isomorphism must also reflect the order
  for (Element a = 0; a < l->size(); ++a)
    for (Element b = 0; b < l->size(); ++b)
      if (l->leq(a, b) != unit.target()->leq(unit(a), unit(b))) return false;
  return true;
}

}  // namespace stone
