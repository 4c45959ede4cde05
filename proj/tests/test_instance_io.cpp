#include <doctest.h>

#include <fstream>
#include <sstream>

#include "stone/error.hpp"
#include "stone/instance_io.hpp"

using namespace stone;

namespace {

std::string slurp(const std::string& name) {
  std::ifstream in(std::string(DATA_DIR) + "/" + name);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Instance load_file(const std::string& name) { return load_instance(parse_with_lines(slurp(name)).doc); }

// pointer reported for a document that fails to load
std::string failing_pointer(const Json& doc) {
  try {
    load_instance(doc);
  } catch (const DocumentError& e) {
    return e.pointer();
  }
  return "(loaded)";
}

}  // namespace

TEST_CASE("fixtures load") {
  auto e213 = load_file("ex_213.json");
  CHECK(e213.kind == "multiplicity");
  REQUIRE(e213.matrix);
  CHECK(e213.matrix->mult() == ex_213().mult());
  CHECK_FALSE(check_JR(*e213.data));
  CHECK(load_file("ex_74.json").matrix->mult() == ex_74().mult());
  CHECK(load_file("ex_210.json").matrix->mult() == ex_210().mult());
  CHECK(load_file("ex_211.json").matrix->mult() == ex_211().mult());

  auto g = load_file("ex_75.json");
  REQUIRE(g.graph);
  CHECK(g.graph->graph.edges == ex_75().edges);
  CHECK(g.graph->j == j_x(ex_75()));
  CHECK_FALSE(g.data);

  auto z3 = load_file("z3_action.json");
  REQUIRE(z3.action);
  CHECK(z3.action->order() == 3);
  CHECK(z3.name == "Z/3 rotation");

  auto diamond = load_file("diamond.json");
  CHECK(diamond.data->a().size() == 4);
  CHECK(diamond.data->a().label(1) == "{x}");

  auto b = load_file("sierpinski_bundle.json");
  REQUIRE(b.bundle);
  CHECK_FALSE(check_C2(*b.data));

  auto p = load_file("pi_not_open.json");
  CHECK(check_JR(*p.data));
  CHECK_FALSE(check_C1(*p.data));
  CHECK(load_file("one_point.json").data->a().size() == 2);
}

TEST_CASE("inline documents") {
  auto fx = load_instance(Json{{"kind", "multiplicity"}, {"fixture", "EX_74"}});
  CHECK_FALSE(check_MIf(*fx.data));
  auto gf = load_instance(Json{{"kind", "graph"}, {"fixture", "EX_75"}});
  CHECK(gf.graph->graph.vertices == 3);
  auto gj = load_instance(Json::parse(R"({"kind":"graph","vertices":2,"edges":[[0,1]],"J":[]})"));
  CHECK(gj.graph->j.none());

  auto chain = load_instance(Json::parse(R"({"kind":"lattice","poset":{"size":3,"covers":[[0,1],[1,2]]}})"));
  CHECK(chain.data->a().size() == 3);
  CHECK(chain.data->gc.lower() == MonotoneMap::identity(chain.data->gc.source()));

  auto upper_only = load_instance(Json::parse(
      R"({"kind":"galois","source":{"size":3,"covers":[[0,1],[1,2]]},"target":{"size":3,"covers":[[0,1],[1,2]]},"upper":[0,0,2]})"));
  CHECK(upper_only.data->gc.lower().values() == std::vector<Element>{0, 2, 2});
  auto lower_only = load_instance(Json::parse(
      R"({"kind":"galois","source":{"size":2,"covers":[[0,1]]},"target":{"size":2,"covers":[[0,1]]},"lower":[0,1]})"));
  CHECK(lower_only.data->gc.upper().values() == std::vector<Element>{0, 1});
}

TEST_CASE("validation pointers") {
  auto two = Json::parse(R"({"size":2,"covers":[[0,1]]})");
  CHECK(failing_pointer(Json::array()) == "");
  CHECK(failing_pointer(Json{{"name", "x"}}) == "");
  CHECK(failing_pointer(Json{{"kind", 3}}) == "/kind");
  CHECK(failing_pointer(Json{{"kind", "nope"}}) == "/kind");
  CHECK(failing_pointer(Json{{"kind", "galois"}, {"source", two}, {"target", two}, {"lower", {0, 5}}}) == "/lower/1");
  CHECK(failing_pointer(Json{{"kind", "galois"}, {"source", two}, {"target", two}}) == "");
  // top is not sent to top: no upper adjoint
  CHECK(failing_pointer(Json{{"kind", "galois"}, {"source", two}, {"target", two}, {"lower", {1, 1}}}) == "/lower");
  CHECK(failing_pointer(Json::parse(R"({"kind":"multiplicity","matrix":[[1,0],[1]]})")) == "/matrix/1");
  CHECK(failing_pointer(Json::parse(R"({"kind":"multiplicity","matrix":[[1,-1]]})")) == "/matrix/0/1");
  CHECK(failing_pointer(Json::parse(R"({"kind":"multiplicity","fixture":"EX_1"})")) == "/fixture");
  CHECK(failing_pointer(Json::parse(R"({"kind":"lattice","poset":{"size":2,"covers":[[0,1],[1,0]]}})")) ==
        "/poset/covers");
  CHECK(failing_pointer(Json::parse(R"({"kind":"lattice","poset":{"size":2,"covers":[[0,7]]}})")).starts_with(
      "/poset/covers"));
  CHECK(failing_pointer(Json::parse(R"({"kind":"lattice","poset":{"size":2}})")) == "/poset");
  CHECK(failing_pointer(Json::parse(R"({"kind":"action","space":{"size":2},"generators":[[0]]})")) ==
        "/generators/0");
  CHECK(failing_pointer(Json::parse(R"({"kind":"bundle","total":{"size":2},"base":{"size":1},"proj":[0]})")) ==
        "/proj");
  CHECK(failing_pointer(Json::parse(
            R"({"kind":"bundle","total":{"size":2,"covers":[[0,1]]},"base":{"size":2},"proj":[0,1]})")) == "/proj");
  CHECK(failing_pointer(Json::parse(R"({"kind":"graph","vertices":21,"edges":[]})")) == "/vertices");
  CHECK(failing_pointer(Json::parse(R"({"kind":"graph","vertices":2,"edges":[[0]]})")) == "/edges/0");
  CHECK(failing_pointer(Json::parse(
            R"({"kind":"galois","source":{"size":2,"covers":[[0,1]]},"target":{"size":2,"downsets":true},"point_images":[[0],[1]]})")) ==
        "/point_images");
}

TEST_CASE("line numbers") {
  auto parsed = parse_with_lines(slurp("bad_index.json"));
  CHECK(line_of(parsed, "/lower/1") == 5);
  CHECK(line_of(parsed, "/source/covers") == 3);
  CHECK(line_of(parsed, "/kind") == 2);
  CHECK(line_of(parsed, "") == 1);
  CHECK(line_of(parsed, "/target/labels/0") == 4);
  try {
    load_instance(parsed.doc);
    FAIL("accepted");
  } catch (const DocumentError& e) {
    CHECK(e.pointer() == "/lower/1");
    CHECK(line_of(parsed, e.pointer()) == 5);
  }

  try {
    parse_with_lines(slurp("bad_syntax.json"));
    FAIL("accepted");
  } catch (const DocumentError& e) {
    CHECK(e.line() == 5);
  }
  CHECK_THROWS_AS(parse_with_lines("{\"a\": }"), DocumentError);
  auto multi = parse_with_lines("{\n \"a\": [\n  1,\n  {\"b\": 2}\n ]\n}\n");
  CHECK(line_of(multi, "/a/1/b") == 4);
  CHECK(line_of(multi, "/a/0") == 3);
}

TEST_CASE("serializers round trip") {
  auto m = ex_74();
  CHECK(load_instance(matrix_to_json(m)).matrix->mult() == m.mult());

  auto c = compile(ex_213());
  auto back = load_instance(galois_to_json(c.data.gc));
  CHECK(back.data->gc.lower().values() == c.data.gc.lower().values());
  CHECK(back.data->gc.upper().values() == c.data.gc.upper().values());

  auto v = FinitePoset::from_covers(3, {{0, 1}, {0, 2}});
  auto act = load_instance(action_to_json(v, {{0, 2, 1}}));
  CHECK(act.action->order() == 2);
  CHECK(act.action->space()->order() == v);

  auto bundle = load_instance(bundle_to_json(FinitePoset::antichain(2), FinitePoset::chain(2), {0, 1}));
  CHECK(bundle.bundle->proj.values() == std::vector<std::size_t>{0, 1});

  auto g = load_instance(graph_to_json(ex_75(), Bitset::from_indices(3, {1})));
  CHECK(g.graph->graph.edges == ex_75().edges);
  CHECK(g.graph->j == Bitset::from_indices(3, {1}));

  auto p = poset_to_json(v, {"m", "l", "r"});
  CHECK(p["size"] == 3);
  CHECK(p["labels"][2] == "r");
  auto lat = load_instance(Json{{"kind", "lattice"}, {"poset", lattice_to_json(*c.a.lattice)}});
  CHECK(lat.data->a().order() == c.a.lattice->order());
}
