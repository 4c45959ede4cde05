#include "stone/topo_models.hpp"

#include <algorithm>
#include <set>

#include "stone/error.hpp"

namespace stone {

namespace {

constexpr std::size_t kMaxGroupOrder = 10000;

Permutation compose_perm(const Permutation& g, const Permutation& h) {
  Permutation out(h.size());
  for (std::size_t p = 0; p < h.size(); ++p) out[p] = g[h[p]];
  return out;
}

}  // namespace

FiniteGroupAction FiniteGroupAction::make(SpaceRef space, std::vector<Permutation> generators) {
  const auto n = space->size();
  for (const auto& g : generators) {
    if (g.size() != n) throw Error(ErrorKind::invalid_input, "generator length does not match the space");
    Bitset seen(n);
    for (auto v : g) {
      if (v >= n || seen.test(v)) throw Error(ErrorKind::invalid_input, "generator is not a permutation");
      seen.set(v);
    }
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = 0; q < n; ++q)
        if (space->order().leq(p, q) != space->order().leq(g[p], g[q]))
          throw Error(ErrorKind::invalid_input, "generator does not preserve the specialization order");
  }
  FiniteGroupAction a;
  a.space_ = std::move(space);
  Permutation id(n);
  for (std::size_t p = 0; p < n; ++p) id[p] = p;
  std::set<Permutation> seen{id};
  a.elements_.push_back(id);
  for (std::size_t k = 0; k < a.elements_.size(); ++k)
    for (const auto& g : generators) {
      auto h = compose_perm(g, a.elements_[k]);
      if (seen.insert(h).second) {
        if (seen.size() > kMaxGroupOrder)
          throw Error(ErrorKind::size_limit, "generated group exceeds " + std::to_string(kMaxGroupOrder) + " elements");
        a.elements_.push_back(std::move(h));
      }
    }
  a.generators_ = std::move(generators);
  return a;
}

Bitset FiniteGroupAction::orbit(std::size_t p) const {
  Bitset out(space_->size());
  for (const auto& g : elements_) out.set(g[p]);
  return out;
}

Bitset FiniteGroupAction::translate(const Permutation& g, const Bitset& s) const {
  Bitset out(s.size());
  s.for_each([&](std::size_t p) { out.set(g[p]); });
  return out;
}

Partition Partition::from_labels(const std::vector<std::size_t>& key) {
  Partition part;
  part.class_of.assign(key.size(), 0);
  std::vector<std::size_t> class_key;
  for (std::size_t p = 0; p < key.size(); ++p) {
    auto it = std::find(class_key.begin(), class_key.end(), key[p]);
    std::size_t c = static_cast<std::size_t>(it - class_key.begin());
    if (it == class_key.end()) {
      class_key.push_back(key[p]);
      part.classes.emplace_back(key.size());
    }
    part.classes[c].set(p);
    part.class_of[p] = c;
  }
  return part;
}

InvariantOpens invariant_opens(const FiniteGroupAction& a) {
  const auto& opens = a.space()->opens();
  std::vector<Element> embed;
  for (Element e = 0; e < opens.sets.size(); ++e) {
    bool invariant = true;
    for (const auto& g : a.generators())
      if (!(a.translate(g, opens.sets[e]) == opens.sets[e])) invariant = false;
    if (invariant) embed.push_back(e);
  }
  auto sub = make_sublattice(*opens.lattice, embed);
  auto insertion = MonotoneMap::make(sub.lattice, opens.lattice, embed);
  return InvariantOpens{sub.lattice, std::move(embed), std::move(insertion)};
}

Partition orbit_closure_relation(const FiniteGroupAction& a) {
  const auto n = a.space()->size();
  std::vector<Bitset> closures;
  for (std::size_t p = 0; p < n; ++p) closures.push_back(a.space()->closure(a.orbit(p)));
  std::vector<std::size_t> key(n);
  for (std::size_t p = 0; p < n; ++p) {
    key[p] = p;
    for (std::size_t q = 0; q < p; ++q)
      if (closures[q] == closures[p]) {
        key[p] = key[q];
        break;
      }
  }
  return Partition::from_labels(key);
}

InclusionData action_inclusion_data(const FiniteGroupAction& a) {
  auto inv = invariant_opens(a);
  const auto& opens = a.space()->opens();
  std::vector<std::size_t> position(opens.sets.size(), 0);
  for (std::size_t k = 0; k < inv.embed.size(); ++k) position[inv.embed[k]] = k;
  std::vector<Element> saturation;
  for (const auto& u : opens.sets) {
    Bitset s(u.size());
    for (const auto& g : a.elements()) s |= a.translate(g, u);
    saturation.push_back(static_cast<Element>(position[opens.element_of(s)]));
  }
  auto gc = GaloisConnection::make(MonotoneMap::make(opens.lattice, inv.lattice, std::move(saturation)), inv.insertion);
  return make_inclusion_data(std::move(gc));
}

bool action_quasi_orbit_agreement(const FiniteGroupAction& a) {
  auto d = action_inclusion_data(a);
  auto q = quasi_orbit_space(d);
  auto sob = soberification(a.space(), d.spec_a);
  std::vector<std::size_t> key;
  for (std::size_t p = 0; p < a.space()->size(); ++p) key.push_back(q.pi(sob(p)));
  return Partition::from_labels(key) == orbit_closure_relation(a);
}

BundleMap BundleMap::make(SpaceRef total, SpaceRef base, std::vector<std::size_t> proj) {
  auto p = PointMap::make(total, base, std::move(proj));
  return BundleMap{std::move(total), std::move(base), std::move(p)};
}

InclusionData bundle_inclusion_data(const BundleMap& b) {
  const auto& base_opens = b.base->opens();
  const auto& total_opens = b.total->opens();
  std::vector<Element> lower, upper;
  for (const auto& u : base_opens.sets) lower.push_back(total_opens.element_of(b.proj.preimage(u)));
  const auto full_total = Bitset::full(b.total->size());
  const auto full_base = Bitset::full(b.base->size());
  for (const auto& v : total_opens.sets)
    upper.push_back(base_opens.element_of(b.base->interior(full_base - b.proj.image(full_total - v))));
  auto gc = GaloisConnection::make(MonotoneMap::make(base_opens.lattice, total_opens.lattice, std::move(lower)),
                                   MonotoneMap::make(total_opens.lattice, base_opens.lattice, std::move(upper)));
  return make_inclusion_data(std::move(gc));
}

}  // namespace stone
