#include "stone/galois.hpp"

#include <stdexcept>

#include "stone/error.hpp"

namespace stone {

bool is_monotone(const FiniteLattice& source, const FiniteLattice& target, const std::vector<Element>& values) {
  const auto n = source.size();
  for (std::size_t x = 0; x < n; ++x) {
    bool ok = true;
    source.order().up(x).for_each([&](std::size_t y) { ok = ok && target.leq(values[x], values[y]); });
    if (!ok) return false;
  }
  return true;
}

MonotoneMap MonotoneMap::make(LatticeRef source, LatticeRef target, std::vector<Element> values) {
  if (!source || !target) throw Error(ErrorKind::shape_mismatch, "map needs both a source and a target lattice");
  if (values.size() != source->size())
    throw Error(ErrorKind::shape_mismatch, "value table has " + std::to_string(values.size()) +
                                               " entries for a source of size " + std::to_string(source->size()));
  for (auto v : values)
    if (v >= target->size()) throw Error(ErrorKind::shape_mismatch, "value " + std::to_string(v) + " outside target");
  if (!is_monotone(*source, *target, values)) {
    for (std::size_t x = 0; x < values.size(); ++x)
      for (std::size_t y = 0; y < values.size(); ++y)
        if (source->leq(x, y) && !target->leq(values[x], values[y]))
          throw Error(ErrorKind::not_monotone, source->label(static_cast<Element>(x)) + " <= " +
                                                   source->label(static_cast<Element>(y)) +
                                                   " but images are not ordered");
  }
  return MonotoneMap(std::move(source), std::move(target), std::move(values));
}

MonotoneMap MonotoneMap::identity(LatticeRef l) {
  std::vector<Element> v(l->size());
  for (std::size_t x = 0; x < v.size(); ++x) v[x] = static_cast<Element>(x);
  return MonotoneMap(l, l, std::move(v));
}

bool MonotoneMap::preserves_joins() const {
  const auto& s = *source_;
  const auto& t = *target_;
  if (values_[s.bottom()] != t.bottom()) return false;
  for (Element a = 0; a < s.size(); ++a)
    for (Element b = a + 1; b < s.size(); ++b)
      if (values_[s.join(a, b)] != t.join(values_[a], values_[b])) return false;
  return true;
}

bool MonotoneMap::preserves_meets() const {
  const auto& s = *source_;
  const auto& t = *target_;
  if (values_[s.top()] != t.top()) return false;
  for (Element a = 0; a < s.size(); ++a)
    for (Element b = a + 1; b < s.size(); ++b)
      if (values_[s.meet(a, b)] != t.meet(values_[a], values_[b])) return false;
  return true;
}

bool MonotoneMap::injective() const {
  Bitset seen(target_->size());
  for (auto v : values_) {
    if (seen.test(v)) return false;
    seen.set(v);
  }
  return true;
}

MonotoneMap compose(const MonotoneMap& outer, const MonotoneMap& inner) {
  if (!same_lattice(*inner.target(), *outer.source()))
    throw Error(ErrorKind::shape_mismatch, "composition of maps whose lattices do not line up");
  std::vector<Element> v(inner.values().size());
  for (std::size_t x = 0; x < v.size(); ++x) v[x] = outer(inner(static_cast<Element>(x)));
  return MonotoneMap::make(inner.source(), outer.target(), std::move(v));
}

namespace {

void check_shape(const MonotoneMap& i, const MonotoneMap& r) {
  if (!same_lattice(*i.source(), *r.target()) || !same_lattice(*i.target(), *r.source()))
    throw Error(ErrorKind::shape_mismatch, "lower and upper maps do not run between the same two lattices");
}

std::optional<AbsenceWitness> adjunction_failure(const MonotoneMap& i, const MonotoneMap& r, Exec exec) {
  const auto& a = *i.source();
  const auto& b = *i.target();
  auto bad_y = [&](std::size_t x) {
    for (Element y = 0; y < b.size(); ++y)
      if (a.leq(static_cast<Element>(x), r(y)) != b.leq(i(static_cast<Element>(x)), y)) return y;
    return static_cast<Element>(b.size());
  };
  auto x = find_first(a.size(), [&](std::size_t x) { return bad_y(x) < b.size(); }, exec);
  if (!x) return std::nullopt;
  return AbsenceWitness{static_cast<Element>(*x), bad_y(*x)};
}

}  // namespace

bool is_adjoint_pair(const MonotoneMap& i, const MonotoneMap& r, Exec exec) {
  check_shape(i, r);
  return !adjunction_failure(i, r, exec).has_value();
}

std::variant<MonotoneMap, AbsenceWitness> upper_adjoint(const MonotoneMap& i) {
  const auto& a = *i.source();
  const auto& b = *i.target();
  std::vector<Element> r(b.size());
  for (Element y = 0; y < b.size(); ++y) {
    Element acc = a.bottom();
    for (Element x = 0; x < a.size(); ++x)
      if (b.leq(i(x), y)) acc = a.join(acc, x);
    r[y] = acc;
  }
  auto candidate = MonotoneMap::make(i.target(), i.source(), std::move(r));
  if (auto w = adjunction_failure(i, candidate, Exec::serial)) return *w;
  return candidate;
}

std::variant<MonotoneMap, AbsenceWitness> lower_adjoint(const MonotoneMap& r) {
  const auto& b = *r.source();
  const auto& a = *r.target();
  std::vector<Element> lower(a.size());
  for (Element x = 0; x < a.size(); ++x) {
    Element acc = b.top();
    for (Element y = 0; y < b.size(); ++y)
      if (a.leq(x, r(y))) acc = b.meet(acc, y);
    lower[x] = acc;
  }
  auto candidate = MonotoneMap::make(r.target(), r.source(), std::move(lower));
  if (auto w = adjunction_failure(candidate, r, Exec::serial)) return *w;
  return candidate;
}

GaloisConnection GaloisConnection::make(MonotoneMap lower, MonotoneMap upper) {
  check_shape(lower, upper);
  if (auto w = adjunction_failure(lower, upper, Exec::parallel))
    throw Error(ErrorKind::adjunction_failure,
                "adjunction fails at (" + lower.source()->label(w->x) + ", " + lower.target()->label(w->y) + ")");
  return GaloisConnection(std::move(lower), std::move(upper));
}

GaloisConnection GaloisConnection::from_lower(MonotoneMap lower) {
  auto r = upper_adjoint(lower);
  if (auto* w = std::get_if<AbsenceWitness>(&r))
    throw Error(ErrorKind::adjunction_failure, "map has no upper adjoint; fails at (" +
                                                   lower.source()->label(w->x) + ", " +
                                                   lower.target()->label(w->y) + ")");
  return GaloisConnection(std::move(lower), std::get<MonotoneMap>(std::move(r)));
}

GaloisConnection GaloisConnection::from_upper(MonotoneMap upper) {
  auto i = lower_adjoint(upper);
  if (auto* w = std::get_if<AbsenceWitness>(&i))
    throw Error(ErrorKind::adjunction_failure, "map has no lower adjoint; fails at (" +
                                                   upper.target()->label(w->x) + ", " +
                                                   upper.source()->label(w->y) + ")");
  return GaloisConnection(std::get<MonotoneMap>(std::move(i)), std::move(upper));
}

GaloisConnection GaloisConnection::identity(LatticeRef l) {
  return GaloisConnection(MonotoneMap::identity(l), MonotoneMap::identity(l));
}

FixedPointSublattices fixed_points(const GaloisConnection& gc) {
  const auto& a = *gc.source();
  const auto& b = *gc.target();
  FixedPointSublattices f;
  f.restricted = Bitset(a.size());
  f.induced = Bitset(b.size());
  for (Element x = 0; x < a.size(); ++x)
    if (gc.r(gc.i(x)) == x) f.restricted.set(x), f.restricted_elements.push_back(x);
  for (Element y = 0; y < b.size(); ++y)
    if (gc.i(gc.r(y)) == y) f.induced.set(y), f.induced_elements.push_back(y);
  std::vector<std::size_t> pos_r(a.size(), 0), pos_i(b.size(), 0);
  for (std::size_t k = 0; k < f.restricted_elements.size(); ++k) pos_r[f.restricted_elements[k]] = k;
  for (std::size_t k = 0; k < f.induced_elements.size(); ++k) pos_i[f.induced_elements[k]] = k;
  for (auto x : f.restricted_elements) f.to_induced.push_back(pos_i[gc.i(x)]);
  for (auto y : f.induced_elements) f.to_restricted.push_back(pos_r[gc.r(y)]);
  return f;
}

std::vector<std::string> Prop26Report::failed() const {
  std::vector<std::string> out;
  if (!monotone) out.emplace_back("monotone");
  if (!unit_laws) out.emplace_back("unit_laws");
  if (!counit_laws) out.emplace_back("counit_laws");
  if (!fixed_point_iso) out.emplace_back("fixed_point_iso");
  if (!preserves_joins_meets) out.emplace_back("preserves_joins_meets");
  if (!bounds) out.emplace_back("bounds");
  if (!closure) out.emplace_back("closure");
  if (!insertions) out.emplace_back("insertions");
  return out;
}

Prop26Report verify_prop26(const FiniteLattice& a, const FiniteLattice& b, const std::vector<Element>& i,
                           const std::vector<Element>& r) {
  Prop26Report rep;
  if (i.size() != a.size() || r.size() != b.size()) return rep;
  for (auto v : i)
    if (v >= b.size()) return rep;
  for (auto v : r)
    if (v >= a.size()) return rep;
  const auto na = static_cast<Element>(a.size());
  const auto nb = static_cast<Element>(b.size());

  rep.monotone = is_monotone(a, b, i) && is_monotone(b, a, r);

  rep.unit_laws = true;
  for (Element x = 0; x < na; ++x)
    if (!a.leq(x, r[i[x]]) || i[r[i[x]]] != i[x]) rep.unit_laws = false;
  rep.counit_laws = true;
  for (Element y = 0; y < nb; ++y)
    if (!b.leq(i[r[y]], y) || r[i[r[y]]] != r[y]) rep.counit_laws = false;

  Bitset restricted(na), induced(nb), image_r(na), image_i(nb);
  for (Element x = 0; x < na; ++x) {
    if (r[i[x]] == x) restricted.set(x);
    image_i.set(i[x]);
  }
  for (Element y = 0; y < nb; ++y) {
    if (i[r[y]] == y) induced.set(y);
    image_r.set(r[y]);
  }
  rep.fixed_point_iso = restricted == image_r && induced == image_i;
  restricted.for_each([&](std::size_t x) {
    if (!induced.test(i[x]) || r[i[x]] != x) rep.fixed_point_iso = false;
    restricted.for_each([&](std::size_t x2) {
      if (a.leq(static_cast<Element>(x), static_cast<Element>(x2)) != b.leq(i[x], i[x2])) rep.fixed_point_iso = false;
    });
  });
  induced.for_each([&](std::size_t y) {
    if (!restricted.test(r[y]) || i[r[y]] != y) rep.fixed_point_iso = false;
  });

  rep.bounds = i[a.bottom()] == b.bottom() && r[b.top()] == a.top();
  rep.preserves_joins_meets = rep.bounds;
  for (Element x = 0; x < na; ++x)
    for (Element x2 = x + 1; x2 < na; ++x2)
      if (i[a.join(x, x2)] != b.join(i[x], i[x2])) rep.preserves_joins_meets = false;
  for (Element y = 0; y < nb; ++y)
    for (Element y2 = y + 1; y2 < nb; ++y2)
      if (r[b.meet(y, y2)] != a.meet(r[y], r[y2])) rep.preserves_joins_meets = false;

  rep.closure = restricted.test(a.top()) && induced.test(b.bottom());
  restricted.for_each([&](std::size_t x) {
    restricted.for_each([&](std::size_t x2) {
      if (!restricted.test(a.meet(static_cast<Element>(x), static_cast<Element>(x2)))) rep.closure = false;
    });
  });
  induced.for_each([&](std::size_t y) {
    induced.for_each([&](std::size_t y2) {
      if (!induced.test(b.join(static_cast<Element>(y), static_cast<Element>(y2)))) rep.closure = false;
    });
  });

  // r∘i is left adjoint to the insertion of restricted elements, i∘r right
  // adjoint to the insertion of induced ones.
  rep.insertions = true;
  for (Element x = 0; x < na; ++x) {
    if (!restricted.test(r[i[x]])) rep.insertions = false;
    restricted.for_each([&](std::size_t k) {
      if (a.leq(r[i[x]], static_cast<Element>(k)) != a.leq(x, static_cast<Element>(k))) rep.insertions = false;
    });
  }
  for (Element y = 0; y < nb; ++y) {
    if (!induced.test(i[r[y]])) rep.insertions = false;
    induced.for_each([&](std::size_t d) {
      if (b.leq(static_cast<Element>(d), i[r[y]]) != b.leq(static_cast<Element>(d), y)) rep.insertions = false;
    });
  }
  return rep;
}

Prop26Report verify_prop26(const GaloisConnection& gc) {
  return verify_prop26(*gc.source(), *gc.target(), gc.lower().values(), gc.upper().values());
}

bool detects(const GaloisConnection& gc) {
  const auto& b = *gc.target();
  bool by_definition = true;
  for (Element y = 0; y < b.size(); ++y)
    if (y != b.bottom() && gc.r(y) == gc.r(b.bottom())) by_definition = false;
  auto fp = fixed_points(gc);
  bool by_induced = true;
  for (Element y = 0; y < b.size(); ++y) {
    if (y == b.bottom()) continue;
    bool found = false;
    for (auto d : fp.induced_elements)
      if (d != b.bottom() && b.leq(d, y)) found = true;
    if (!found) by_induced = false;
  }
  if (by_definition != by_induced) throw std::logic_error("detection criteria disagree");
  return by_definition;
}

bool separates(const GaloisConnection& gc) {
  bool injective = gc.upper().injective();
  bool all_induced = fixed_points(gc).induced.count() == gc.target()->size();
  if (injective != all_induced) throw std::logic_error("separation criteria disagree");
  return injective;
}

}  // namespace stone
