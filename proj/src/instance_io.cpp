#include "stone/instance_io.hpp"

#include <iterator>

#include "stone/error.hpp"

namespace stone {

// ---------------------------------------------------------------------------
// Serialization

Json poset_to_json(const FinitePoset& p, const std::vector<std::string>& labels) {
  Json covers = Json::array();
  for (auto [a, b] : p.covers()) covers.push_back({a, b});
  Json out = {{"size", p.size()}, {"covers", covers}};
  if (!labels.empty()) out["labels"] = labels;
  return out;
}

Json lattice_to_json(const FiniteLattice& l) { return poset_to_json(l.order(), l.labels()); }

Json galois_to_json(const GaloisConnection& gc) {
  return {{"kind", "galois"},
          {"source", lattice_to_json(*gc.source())},
          {"target", lattice_to_json(*gc.target())},
          {"lower", gc.lower().values()},
          {"upper", gc.upper().values()}};
}

Json matrix_to_json(const MultiplicityInclusion& m) { return {{"kind", "multiplicity"}, {"matrix", m.mult()}}; }

Json action_to_json(const FinitePoset& p, const std::vector<Permutation>& generators) {
  return {{"kind", "action"}, {"space", poset_to_json(p)}, {"generators", generators}};
}

Json bundle_to_json(const FinitePoset& total, const FinitePoset& base, const std::vector<std::size_t>& proj) {
  return {{"kind", "bundle"}, {"total", poset_to_json(total)}, {"base", poset_to_json(base)}, {"proj", proj}};
}

Json graph_to_json(const FiniteGraph& g, const Bitset& j) {
  Json edges = Json::array();
  for (auto [s, r] : g.edges) edges.push_back({s, r});
  return {{"kind", "graph"}, {"vertices", g.vertices}, {"edges", edges}, {"J", j.indices()}};
}

// ---------------------------------------------------------------------------
// Loading

namespace {

const Json& field(const Json& obj, const std::string& ptr, const char* key) {
  if (!obj.is_object()) throw DocumentError(ptr, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) throw DocumentError(ptr, std::string("missing field \"") + key + "\"");
  return *it;
}

std::size_t index_value(const Json& v, const std::string& ptr, std::size_t bound, const char* what) {
  if (!v.is_number_integer() || v.get<long long>() < 0)
    throw DocumentError(ptr, std::string(what) + " must be a non-negative integer");
  auto x = v.get<std::size_t>();
  if (x >= bound)
    throw DocumentError(ptr, std::string(what) + " " + std::to_string(x) + " out of range (size " +
                                 std::to_string(bound) + ")");
  return x;
}

std::vector<std::size_t> index_array(const Json& v, const std::string& ptr, std::size_t bound, const char* what) {
  if (!v.is_array()) throw DocumentError(ptr, "expected an array");
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < v.size(); ++k) out.push_back(index_value(v[k], ptr + "/" + std::to_string(k), bound, what));
  return out;
}

struct PosetSpec {
  FinitePoset poset;
  std::vector<std::string> labels;
  bool downsets = false;
};

PosetSpec parse_poset(const Json& obj, const std::string& ptr) {
  const auto& size_v = field(obj, ptr, "size");
  if (!size_v.is_number_integer() || size_v.get<long long>() < 0)
    throw DocumentError(ptr + "/size", "size must be a non-negative integer");
  auto n = size_v.get<std::size_t>();
  if (n > max_lattice_size()) throw DocumentError(ptr + "/size", "size exceeds the lattice cap");
  std::vector<std::pair<std::size_t, std::size_t>> less;
  if (obj.contains("covers")) {
    const auto& covers = obj["covers"];
    if (!covers.is_array()) throw DocumentError(ptr + "/covers", "expected an array of [a, b] pairs");
    for (std::size_t k = 0; k < covers.size(); ++k) {
      auto cp = ptr + "/covers/" + std::to_string(k);
      if (!covers[k].is_array() || covers[k].size() != 2) throw DocumentError(cp, "expected a pair [a, b]");
      less.emplace_back(index_value(covers[k][0], cp + "/0", n, "point"), index_value(covers[k][1], cp + "/1", n, "point"));
    }
  }
  PosetSpec spec;
  try {
    spec.poset = FinitePoset::from_covers(n, less);
  } catch (const Error& e) {
    throw DocumentError(ptr + "/covers", e.what());
  }
  if (obj.contains("labels")) {
    const auto& labels = obj["labels"];
    if (!labels.is_array() || labels.size() != n) throw DocumentError(ptr + "/labels", "expected one label per point");
    for (std::size_t k = 0; k < n; ++k) {
      if (!labels[k].is_string()) throw DocumentError(ptr + "/labels/" + std::to_string(k), "label must be a string");
      spec.labels.push_back(labels[k].get<std::string>());
    }
  }
  if (obj.contains("downsets")) {
    if (!obj["downsets"].is_boolean()) throw DocumentError(ptr + "/downsets", "expected a boolean");
    spec.downsets = obj["downsets"].get<bool>();
  }
  return spec;
}

SetLattice downsets_with_labels(const PosetSpec& spec, const std::string& prefix) {
  auto d = downset_lattice(spec.poset, prefix);
  if (spec.labels.empty()) return d;
  std::vector<std::string> labels;
  for (const auto& s : d.sets) {
    std::string text = "{";
    bool first = true;
    s.for_each([&](std::size_t p) {
      if (!first) text += ',';
      first = false;
      text += spec.labels[p];
    });
    labels.push_back(text + "}");
  }
  d.lattice = make_lattice(d.lattice->order(), std::move(labels));
  return d;
}

struct LatticeSpec {
  PosetSpec poset;
  LatticeRef lattice;
  std::optional<SetLattice> sets;
};

LatticeSpec parse_lattice(const Json& obj, const std::string& ptr, const std::string& prefix) {
  LatticeSpec out;
  out.poset = parse_poset(obj, ptr);
  try {
    if (out.poset.downsets) {
      out.sets = downsets_with_labels(out.poset, prefix);
      out.lattice = out.sets->lattice;
    } else {
      out.lattice = make_lattice(out.poset.poset, out.poset.labels);
    }
  } catch (const Error& e) {
    throw DocumentError(ptr, e.what());
  }
  return out;
}

std::vector<Element> element_table(const Json& v, const std::string& ptr, const FiniteLattice& source,
                                   const FiniteLattice& target) {
  auto raw = index_array(v, ptr, target.size(), "element");
  if (raw.size() != source.size())
    throw DocumentError(ptr, "table has " + std::to_string(raw.size()) + " entries, expected " +
                                 std::to_string(source.size()));
  return std::vector<Element>(raw.begin(), raw.end());
}

MonotoneMap checked_map(const LatticeRef& s, const LatticeRef& t, std::vector<Element> v, const std::string& ptr) {
  try {
    return MonotoneMap::make(s, t, std::move(v));
  } catch (const Error& e) {
    throw DocumentError(ptr, e.what());
  }
}

InclusionData checked_data(GaloisConnection gc, const std::string& ptr) {
  try {
    return make_inclusion_data(std::move(gc));
  } catch (const Error& e) {
    throw DocumentError(ptr, e.what());
  }
}

SpaceRef parse_space(const Json& obj, const std::string& ptr) {
  auto spec = parse_poset(obj, ptr);
  try {
    return make_space(spec.poset, spec.labels);
  } catch (const Error& e) {
    throw DocumentError(ptr, e.what());
  }
}

void load_lattice(Instance& inst, const Json& doc) {
  auto l = parse_lattice(field(doc, "", "poset"), "/poset", "x");
  inst.data = checked_data(GaloisConnection::identity(l.lattice), "/poset");
}

void load_galois(Instance& inst, const Json& doc) {
  auto a = parse_lattice(field(doc, "", "source"), "/source", "a");
  auto b = parse_lattice(field(doc, "", "target"), "/target", "b");
  std::optional<MonotoneMap> lower, upper;
  if (doc.contains("point_images")) {
    if (!a.sets || !b.sets) throw DocumentError("/point_images", "point images need \"downsets\": true on both sides");
    const auto& imgs = doc["point_images"];
    if (!imgs.is_array() || imgs.size() != a.poset.poset.size())
      throw DocumentError("/point_images", "expected one image per source point");
    std::vector<Bitset> images;
    for (std::size_t x = 0; x < imgs.size(); ++x) {
      auto pts = index_array(imgs[x], "/point_images/" + std::to_string(x), b.poset.poset.size(), "point");
      images.push_back(b.poset.poset.down_closure(Bitset::from_indices(b.poset.poset.size(), pts)));
    }
    std::vector<Element> table;
    for (const auto& s : a.sets->sets) {
      Bitset t(b.poset.poset.size());
      s.for_each([&](std::size_t x) { t |= images[x]; });
      table.push_back(b.sets->element_of(t));
    }
    lower = checked_map(a.lattice, b.lattice, std::move(table), "/point_images");
  } else if (doc.contains("lower")) {
    lower = checked_map(a.lattice, b.lattice, element_table(doc["lower"], "/lower", *a.lattice, *b.lattice), "/lower");
  }
  if (doc.contains("upper"))
    upper = checked_map(b.lattice, a.lattice, element_table(doc["upper"], "/upper", *b.lattice, *a.lattice), "/upper");
  if (!lower && !upper) throw DocumentError("", "galois document needs \"lower\", \"upper\" or \"point_images\"");
  std::optional<GaloisConnection> gc;
  try {
    if (lower && upper) gc = GaloisConnection::make(*lower, *upper);
    else if (lower) gc = GaloisConnection::from_lower(*lower);
    else gc = GaloisConnection::from_upper(*upper);
  } catch (const Error& e) {
    throw DocumentError(upper ? "/upper" : (doc.contains("lower") ? "/lower" : "/point_images"), e.what());
  }
  inst.data = checked_data(std::move(*gc), "");
}

void load_multiplicity(Instance& inst, const Json& doc) {
  if (doc.contains("fixture")) {
    if (!doc["fixture"].is_string()) throw DocumentError("/fixture", "fixture must be a string");
    try {
      inst.matrix = fixture(doc["fixture"].get<std::string>());
    } catch (const Error& e) {
      throw DocumentError("/fixture", e.what());
    }
    if (inst.name.empty()) inst.name = doc["fixture"].get<std::string>();
  } else {
    const auto& m = field(doc, "", "matrix");
    if (!m.is_array() || m.empty()) throw DocumentError("/matrix", "expected a nonempty array of rows");
    std::vector<std::vector<unsigned>> rows;
    for (std::size_t i = 0; i < m.size(); ++i) {
      auto rp = "/matrix/" + std::to_string(i);
      if (!m[i].is_array() || m[i].size() != m[0].size() || m[i].empty())
        throw DocumentError(rp, "rows must be nonempty and of equal length");
      std::vector<unsigned> row;
      for (std::size_t j = 0; j < m[i].size(); ++j) {
        if (!m[i][j].is_number_integer() || m[i][j].get<long long>() < 0)
          throw DocumentError(rp + "/" + std::to_string(j), "entries must be non-negative integers");
        row.push_back(m[i][j].get<unsigned>());
      }
      rows.push_back(std::move(row));
    }
    if (rows.size() > 12 || rows[0].size() > 12) throw DocumentError("/matrix", "at most 12 summands per side");
    inst.matrix = MultiplicityInclusion::make(std::move(rows));
  }
  inst.compiled = compile(*inst.matrix);
  inst.data = inst.compiled->data;
}

void load_bundle(Instance& inst, const Json& doc) {
  auto total = parse_space(field(doc, "", "total"), "/total");
  auto base = parse_space(field(doc, "", "base"), "/base");
  auto proj = index_array(field(doc, "", "proj"), "/proj", base->size(), "point");
  if (proj.size() != total->size()) throw DocumentError("/proj", "expected one image per total-space point");
  try {
    inst.bundle = BundleMap::make(total, base, proj);
  } catch (const Error& e) {
    throw DocumentError("/proj", e.what());
  }
  inst.data = bundle_inclusion_data(*inst.bundle);
}

void load_action(Instance& inst, const Json& doc) {
  auto space = parse_space(field(doc, "", "space"), "/space");
  const auto& gens = field(doc, "", "generators");
  if (!gens.is_array()) throw DocumentError("/generators", "expected an array of permutations");
  std::vector<Permutation> perms;
  for (std::size_t k = 0; k < gens.size(); ++k) {
    auto gp = "/generators/" + std::to_string(k);
    auto g = index_array(gens[k], gp, space->size(), "point");
    if (g.size() != space->size()) throw DocumentError(gp, "permutation has the wrong length");
    perms.push_back(std::move(g));
  }
  try {
    inst.action = FiniteGroupAction::make(space, perms);
  } catch (const Error& e) {
    throw DocumentError("/generators", e.what());
  }
  inst.data = action_inclusion_data(*inst.action);
}

void load_graph(Instance& inst, const Json& doc) {
  GraphDocument g;
  if (doc.contains("fixture")) {
    if (doc["fixture"] != "EX_75") throw DocumentError("/fixture", "unknown graph fixture");
    g.graph = ex_75();
    if (inst.name.empty()) inst.name = "EX_75";
  } else {
    const auto& nv = field(doc, "", "vertices");
    if (!nv.is_number_integer() || nv.get<long long>() < 0)
      throw DocumentError("/vertices", "vertices must be a non-negative integer");
    auto n = nv.get<std::size_t>();
    if (n > 20) throw DocumentError("/vertices", "at most 20 vertices are supported");
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    if (doc.contains("edges")) {
      const auto& e = doc["edges"];
      if (!e.is_array()) throw DocumentError("/edges", "expected an array of [source, range] pairs");
      for (std::size_t k = 0; k < e.size(); ++k) {
        auto ep = "/edges/" + std::to_string(k);
        if (!e[k].is_array() || e[k].size() != 2) throw DocumentError(ep, "expected a pair [source, range]");
        edges.emplace_back(index_value(e[k][0], ep + "/0", n, "vertex"), index_value(e[k][1], ep + "/1", n, "vertex"));
      }
    }
    g.graph = FiniteGraph::make(n, std::move(edges));
  }
  if (doc.contains("J")) {
    auto j = index_array(doc["J"], "/J", g.graph.vertices, "vertex");
    g.j = Bitset::from_indices(g.graph.vertices, j);
  } else {
    g.j = j_x(g.graph);
  }
  inst.graph = std::move(g);
}

}  // namespace

Instance load_instance(const Json& doc) {
  if (!doc.is_object()) throw DocumentError("", "document must be a JSON object");
  const auto& kind = field(doc, "", "kind");
  if (!kind.is_string()) throw DocumentError("/kind", "kind must be a string");
  Instance inst;
  inst.kind = kind.get<std::string>();
  if (doc.contains("name")) {
    if (!doc["name"].is_string()) throw DocumentError("/name", "name must be a string");
    inst.name = doc["name"].get<std::string>();
  }
  if (inst.kind == "lattice") load_lattice(inst, doc);
  else if (inst.kind == "galois") load_galois(inst, doc);
  else if (inst.kind == "multiplicity") load_multiplicity(inst, doc);
  else if (inst.kind == "bundle") load_bundle(inst, doc);
  else if (inst.kind == "action") load_action(inst, doc);
  else if (inst.kind == "graph") load_graph(inst, doc);
  else
    throw DocumentError("/kind", "unknown kind \"" + inst.kind +
                                     "\" (expected lattice, galois, multiplicity, bundle, action or graph)");
  return inst;
}

// ---------------------------------------------------------------------------
// Line-aware parsing

namespace {

struct LineState {
  std::size_t line = 1;
  std::size_t token_line = 1;  // line of the last non-blank character read
};

class LineCountingIterator {
 public:
  using iterator_category = std::forward_iterator_tag;
  using value_type = char;
  using difference_type = std::ptrdiff_t;
  using pointer = const char*;
  using reference = const char&;

  LineCountingIterator() = default;
  LineCountingIterator(const char* p, LineState* state) : p_(p), state_(state) {}
  reference operator*() const { return *p_; }
  LineCountingIterator& operator++() {
    if (*p_ == '\n') ++state_->line;
    else if (*p_ != ' ' && *p_ != '\t' && *p_ != '\r') state_->token_line = state_->line;
    ++p_;
    return *this;
  }
  LineCountingIterator operator++(int) {
    auto copy = *this;
    ++*this;
    return copy;
  }
  friend bool operator==(const LineCountingIterator& a, const LineCountingIterator& b) { return a.p_ == b.p_; }
  friend bool operator!=(const LineCountingIterator& a, const LineCountingIterator& b) { return a.p_ != b.p_; }

 private:
  const char* p_ = nullptr;
  LineState* state_ = nullptr;
};

std::string escape_token(const std::string& t) {
  std::string out;
  for (char c : t) {
    if (c == '~') out += "~0";
    else if (c == '/') out += "~1";
    else out += c;
  }
  return out;
}

class LineRecorder : public nlohmann::json_sax<Json> {
 public:
  LineRecorder(const LineState* state, std::map<std::string, std::size_t>* lines) : state_(state), lines_(lines) {}

  bool null() override { return value(); }
  bool boolean(bool) override { return value(); }
  bool number_integer(number_integer_t) override { return value(); }
  bool number_unsigned(number_unsigned_t) override { return value(); }
  bool number_float(number_float_t, const string_t&) override { return value(); }
  bool string(string_t&) override { return value(); }
  bool binary(binary_t&) override { return value(); }
  bool start_object(std::size_t) override { return open(false); }
  bool key(string_t& k) override {
    frames_.back().key = k;
    return true;
  }
  bool end_object() override { return close(); }
  bool start_array(std::size_t) override { return open(true); }
  bool end_array() override { return close(); }
  bool parse_error(std::size_t, const std::string&, const nlohmann::detail::exception&) override { return false; }

 private:
  struct Frame {
    bool array = false;
    std::size_t index = 0;
    std::string key;
  };

  std::string current() const {
    std::string p;
    for (const auto& f : frames_) p += "/" + (f.array ? std::to_string(f.index) : escape_token(f.key));
    return p;
  }
  void advance() {
    if (!frames_.empty() && frames_.back().array) ++frames_.back().index;
  }
  bool value() {
    (*lines_)[current()] = state_->token_line;
    advance();
    return true;
  }
  bool open(bool array) {
    (*lines_)[current()] = state_->token_line;
    frames_.push_back(Frame{array, 0, {}});
    return true;
  }
  bool close() {
    frames_.pop_back();
    advance();
    return true;
  }

  const LineState* state_;
  std::map<std::string, std::size_t>* lines_;
  std::vector<Frame> frames_;
};

}  // namespace

ParsedText parse_with_lines(const std::string& text) {
  ParsedText out;
  try {
    out.doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    std::size_t line = 1;
    for (std::size_t k = 0; k + 1 < e.byte && k < text.size(); ++k)
      if (text[k] == '\n') ++line;
    std::string msg = e.what();
    auto pos = msg.find("parse error");
    throw DocumentError("", pos == std::string::npos ? msg : msg.substr(pos), line);
  }
  LineState state;
  LineRecorder recorder(&state, &out.lines);
  LineCountingIterator first(text.data(), &state), last(text.data() + text.size(), &state);
  Json::sax_parse(first, last, &recorder);
  return out;
}

std::size_t line_of(const ParsedText& parsed, std::string pointer) {
  for (;;) {
    auto it = parsed.lines.find(pointer);
    if (it != parsed.lines.end()) return it->second;
    if (pointer.empty()) return 1;
    pointer.erase(pointer.rfind('/'));
  }
}

}  // namespace stone
