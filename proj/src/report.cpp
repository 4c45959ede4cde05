#include "stone/report.hpp"

#include <sstream>

#include "stone/error.hpp"

namespace stone {

namespace {

Json labels_of(const FiniteLattice& l, const std::vector<Element>& elems) {
  Json out = Json::array();
  for (auto e : elems) out.push_back(l.label(e));
  return out;
}

Json mif_witness(const InclusionData& d) {
  const auto& b = d.b();
  const auto& ind = d.induced.embed;
  for (std::size_t x = 0; x < ind.size(); ++x)
    for (std::size_t y = x + 1; y < ind.size(); ++y) {
      auto m = b.meet(ind[x], ind[y]);
      if (!d.induced.contains(m))
        return {{"family", {b.label(ind[x]), b.label(ind[y])}}, {"meet", b.label(m)}};
    }
  return nullptr;
}

Json conditions(const InclusionData& d) {
  Json r;
  r["size_a"] = d.a().size();
  r["size_b"] = d.b().size();
  r["restricted"] = labels_of(d.a(), d.restricted.embed);
  r["induced"] = labels_of(d.b(), d.induced.embed);
  r["primes_a"] = d.spec_a.primes.size();
  r["primes_b"] = d.spec_b.primes.size();
  r["primes_restricted"] = d.spec_restricted.primes.size();
  r["primes_induced"] = d.spec_induced.primes.size();
  const bool jr = check_JR(d);
  r["JR"] = jr;
  r["C1"] = jr ? Json(check_C1(d)) : Json(nullptr);
  const bool mif = check_MIf(d);
  r["MIf"] = mif;
  r["MIf_witness"] = mif ? Json(nullptr) : mif_witness(d);
  const bool mi = check_MI(d);
  r["MI"] = mi;
  r["C2"] = mi ? Json(check_C2(d)) : Json(nullptr);
  r["nondegenerate"] = check_nondegenerate(d);
  r["detects"] = detects(d.gc);
  r["separates"] = separates(d.gc);
  if (jr) {
    auto q = quasi_orbit_space(d);
    r["quasi_orbit_classes"] = q.classes.size();
    try {
      auto rho = quasi_orbit_map(d, q);
      r["rho"] = {{"open", is_open_map(rho)},
                  {"surjective", is_surjective(rho)},
                  {"homeomorphism", is_homeomorphism(rho)}};
    } catch (const ConditionViolated& e) {
      r["rho"] = {{"refused", e.condition()}};
    }
  } else {
    r["quasi_orbit_classes"] = nullptr;
    r["rho"] = {{"refused", "JR"}};
  }
  if (auto rp = r_on_primes(d))
    r["r_on_primes"] = {{"open", is_open_map(*rp)}, {"surjective", is_surjective(*rp)}};
  else
    r["r_on_primes"] = nullptr;
  return r;
}

Json symmetric_census(const CompiledMultiplicity& c, const MultiplicityInclusion& m) {
  Json sym = Json::array();
  std::size_t restricted = 0, restricted_symmetric = 0;
  for (std::size_t e = 0; e < c.a.sets.size(); ++e) {
    const auto& s = c.a.sets[e];
    const bool is_sym = is_symmetric(m, s);
    const bool is_res = restrict(m, induce(m, s)) == s;
    if (is_sym) sym.push_back(c.a.lattice->label(static_cast<Element>(e)));
    restricted += is_res;
    restricted_symmetric += is_res && is_sym;
  }
  return {{"symmetric", sym},
          {"restricted", restricted},
          {"restricted_symmetric", restricted_symmetric},
          {"all_restricted_symmetric", restricted == restricted_symmetric}};
}

Json graph_report(const GraphDocument& g) {
  auto pl = j_pairs(g.graph, g.j);
  Json pairs = Json::array();
  for (Element e = 0; e < pl.lattice->size(); ++e) pairs.push_back(pl.lattice->label(e));
  return {{"vertices", g.graph.vertices},
          {"J", format_set(g.j, "v")},
          {"J_X", format_set(j_x(g.graph), "v")},
          {"pairs", pairs},
          {"pair_primes", pair_prime_space(pl).primes.size()}};
}

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

void cluster(std::ostringstream& os, const std::string& id, const std::string& title, const FiniteT0Space& x) {
  os << "  subgraph cluster_" << id << " {\n    label=" << quote(title) << ";\n";
  for (std::size_t p = 0; p < x.size(); ++p) os << "    " << id << p << " [label=" << quote(x.label(p)) << "];\n";
  for (auto [p, q] : x.order().covers()) os << "    " << id << p << " -> " << id << q << ";\n";
  os << "  }\n";
}

void arrows(std::ostringstream& os, const std::string& from, const std::string& to, const PointMap& f,
            const std::string& name, const char* style) {
  for (std::size_t p = 0; p < f.source()->size(); ++p)
    os << "  " << from << p << " -> " << to << f(p) << " [style=" << style << ", label=" << quote(name) << "];\n";
}

}  // namespace

Json analyze_report(const Instance& inst) {
  Json r;
  r["kind"] = inst.kind;
  r["name"] = inst.name;
  if (inst.kind == "graph") {
    r["graph"] = graph_report(*inst.graph);
    return r;
  }
  r["conditions"] = conditions(*inst.data);
  if (inst.compiled) r["symmetric_census"] = symmetric_census(*inst.compiled, *inst.matrix);
  if (inst.action) {
    auto classes = orbit_closure_relation(*inst.action);
    Json cls = Json::array();
    for (const auto& c : classes.classes) cls.push_back(format_set(c, "x"));
    r["action"] = {{"group_order", inst.action->order()},
                   {"orbit_closure_classes", cls},
                   {"agreement", action_quasi_orbit_agreement(*inst.action)}};
  }
  if (inst.bundle)
    r["bundle"] = {{"proj_open", is_open_map(inst.bundle->proj)},
                   {"proj_surjective", is_surjective(inst.bundle->proj)}};
  return r;
}

std::string report_text(const Json& report) {
  std::ostringstream os;
  auto emit = [&](const std::string& key, const Json& v) {
    os << key << ": ";
    if (v.is_null()) os << "n/a";
    else if (v.is_string()) os << v.get<std::string>();
    else os << v.dump();
    os << '\n';
  };
  for (auto it = report.begin(); it != report.end(); ++it) {
    if (it.value().is_object())
      for (auto jt = it.value().begin(); jt != it.value().end(); ++jt) emit(it.key() + "." + jt.key(), jt.value());
    else
      emit(it.key(), it.value());
  }
  return os.str();
}

std::string spectrum_dot(const Instance& inst) {
  std::ostringstream os;
  os << "digraph spectrum {\n  rankdir=BT;\n";
  if (inst.kind == "graph") {
    auto pl = j_pairs(inst.graph->graph, inst.graph->j);
    cluster(os, "p", "Prime(pairs)", *pair_prime_space(pl).space);
  } else if (inst.kind == "lattice") {
    cluster(os, "a", "Prime(L)", *inst.data->spec_a.space);
  } else {
    const auto& d = *inst.data;
    cluster(os, "a", "Prime(L_A)", *d.spec_a.space);
    cluster(os, "r", "Prime^B(A)", *d.spec_restricted.space);
    cluster(os, "b", "Prime(L_B)", *d.spec_b.space);
    if (check_JR(d)) {
      auto q = quasi_orbit_space(d);
      cluster(os, "q", "quasi-orbits", *q.quotient);
      for (std::size_t p = 0; p < q.class_of.size(); ++p)
        os << "  a" << p << " -> q" << q.class_of[p] << " [style=dotted];\n";
      arrows(os, "q", "r", q.pi_star, "pi*", "dashed");
      try {
        arrows(os, "b", "q", quasi_orbit_map(d, q), "rho", "bold");
      } catch (const ConditionViolated&) {
      }
    } else if (auto rp = r_on_primes(d)) {
      arrows(os, "b", "r", *rp, "r", "bold");
    }
  }
  os << "}\n";
  return os.str();
}

}  // namespace stone
