#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "stone/fd_inclusions.hpp"
#include "stone/graph_pairs.hpp"
#include "stone/quasiorbit.hpp"
#include "stone/topo_models.hpp"

namespace stone {

using Json = nlohmann::json;

/// Validation failure inside a document; `pointer` is a JSON pointer to the
/// offending value.
class DocumentError : public std::runtime_error {
 public:
  DocumentError(std::string pointer, const std::string& what, std::size_t line = 0)
      : std::runtime_error(what), pointer_(std::move(pointer)), line_(line) {}
  const std::string& pointer() const { return pointer_; }
  /// Known line (syntax errors), otherwise 0.
  std::size_t line() const { return line_; }

 private:
  std::string pointer_;
  std::size_t line_;
};

/// {"size": n, "covers": [[a, b], ...], "labels": [...]}
Json poset_to_json(const FinitePoset& p, const std::vector<std::string>& labels = {});
Json lattice_to_json(const FiniteLattice& l);
/// Galois document with both adjoints as element tables.
Json galois_to_json(const GaloisConnection& gc);
Json matrix_to_json(const MultiplicityInclusion& m);
Json action_to_json(const FinitePoset& p, const std::vector<Permutation>& generators);
Json bundle_to_json(const FinitePoset& total, const FinitePoset& base, const std::vector<std::size_t>& proj);
Json graph_to_json(const FiniteGraph& g, const Bitset& j);

struct GraphDocument {
  FiniteGraph graph;
  Bitset j;
};

/// A loaded instance. Everything except graphs compiles to InclusionData.
struct Instance {
  std::string kind;
  std::string name;
  std::optional<InclusionData> data;
  std::optional<MultiplicityInclusion> matrix;
  std::optional<CompiledMultiplicity> compiled;
  std::optional<FiniteGroupAction> action;
  std::optional<BundleMap> bundle;
  std::optional<GraphDocument> graph;
};

/// Builds an instance from a parsed document; throws DocumentError.
Instance load_instance(const Json& doc);

/// Parses text, mapping every value's JSON pointer to its 1-based line.
struct ParsedText {
  Json doc;
  std::map<std::string, std::size_t> lines;
};

/// Throws DocumentError carrying the line on syntax errors.
ParsedText parse_with_lines(const std::string& text);

/// Line of `pointer` or of its nearest recorded ancestor.
std::size_t line_of(const ParsedText& parsed, std::string pointer);

}  // namespace stone
