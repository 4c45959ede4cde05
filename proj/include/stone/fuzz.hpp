#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "stone/exec.hpp"
#include "stone/fd_inclusions.hpp"
#include "stone/instance_io.hpp"
#include "stone/quasiorbit.hpp"
#include "stone/topo_models.hpp"

namespace stone {

/// Size bounds for generated instances.
struct GenBounds {
  std::size_t max_points_a = 6;
  std::size_t max_points_b = 6;
};

/// Join-preserving map D(pa) -> D(pb), given by the image of each principal
/// down-set (images[x] is a down-set of pb, monotone in x).
struct GaloisInstance {
  FinitePoset pa;
  FinitePoset pb;
  std::vector<Bitset> images;
};

GaloisInstance gen_galois_instance(std::uint64_t seed, const GenBounds& bounds = {});
InclusionData build_inclusion_data(const GaloisInstance& g);
InclusionData gen_inclusion_data(std::uint64_t seed, const GenBounds& bounds = {});
/// Loadable "galois" document using point images.
Json galois_instance_to_json(const GaloisInstance& g);

/// Random 0/1 matrix, no zero row.
MultiplicityInclusion gen_matrix(std::uint64_t seed, std::size_t max_rows, std::size_t max_cols);

struct ActionInstance {
  FinitePoset space;
  std::vector<Permutation> generators;
};
ActionInstance gen_action(std::uint64_t seed, std::size_t max_points);
FiniteGroupAction build_action(const ActionInstance& a);

struct BundleInstance {
  FinitePoset total;
  FinitePoset base;
  std::vector<std::size_t> proj;
};
BundleInstance gen_bundle(std::uint64_t seed, std::size_t max_points);
BundleMap build_bundle(const BundleInstance& b);

/// Repeatedly replaces `x` by the first candidate that still fails, until no
/// candidate does.
template <class T, class Candidates, class Fails>
T shrink(T x, Candidates&& candidates, Fails&& fails) {
  for (bool progress = true; progress;) {
    progress = false;
    for (auto& c : candidates(x))
      if (fails(c)) {
        x = std::move(c);
        progress = true;
        break;
      }
  }
  return x;
}

/// One-point deletions of either poset.
std::vector<GaloisInstance> shrink_candidates(const GaloisInstance& g);
/// Row and column deletions that keep the matrix nonempty.
std::vector<MultiplicityInclusion> shrink_candidates(const MultiplicityInclusion& m);
/// Generator drops and orbit deletions.
std::vector<ActionInstance> shrink_candidates(const ActionInstance& a);
/// Deletions of total points and of base points outside the image.
std::vector<BundleInstance> shrink_candidates(const BundleInstance& b);

struct SweepReport {
  std::string tag;
  std::uint64_t seed = 0;
  std::uint64_t budget = 0;
  std::uint64_t instances = 0;
  std::uint64_t applicable = 0;
  std::uint64_t violations = 0;
  Json counterexample;  // null when clean
  std::string detail;

  Json to_json() const;
};

const std::vector<std::string>& sweep_tags();

/// Runs a conformance sweep. Random suites draw `budget` instances from
/// `seed`; exhaustive suites (T33, T62) ignore both. Throws invalid_input on
/// an unknown tag.
SweepReport sweep_theorem(const std::string& tag, std::uint64_t budget, std::uint64_t seed,
                          Exec exec = Exec::parallel);

/// Throws SweepFailed if the report has violations.
void enforce(const SweepReport& report);

}  // namespace stone
