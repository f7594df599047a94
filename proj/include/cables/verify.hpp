#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "cables/atlas.hpp"
#include "cables/ints.hpp"

namespace cables {

// Knobs for the verification suites. Defaults match the shipped
// acceptance bounds; the oracle bound override exists to prove the
// harness can fail (inject 0 and the Farey suite must report it).
struct VerifyOptions {
  Int farey_bound = 12;
  int atlas_count = 50;
  Int atlas_floor_depth = 12;
  std::uint32_t seed = 0x5eed5;
  std::optional<Int> oracle_bound_override;
};

struct SuiteResult {
  std::string name;
  long long cases = 0;
  long long failures = 0;
  std::vector<std::string> notes;  // first few failure details

  bool passed() const { return failures == 0; }
};

struct VerifyReport {
  std::vector<SuiteResult> suites;

  bool all_passed() const {
    for (const SuiteResult& s : suites)
      if (!s.passed()) return false;
    return true;
  }
};

// Mountain range computed the slow, obviously-correct way: breadth-first
// closure under the two stabilization moves, starting from the peaks.
MountainRange stabilization_closure_bfs(const KnotAtlas& a, const Int& floor);

// A random valid Legendrian-simple atlas with at most four peaks,
// assembled by rejection against the validator. Deterministic for a
// fixed generator state.
KnotAtlas random_simple_atlas(std::mt19937& rng);

// The four suites: bypass fast path against the enumeration oracle over
// all slope pairs within the bound; closed-form mountain ranges against
// BFS closures of random atlases; the torus-knot grids (positive formula,
// argument symmetry, negative formula, transverse maxima); and full grid
// coverage for an atlas with the uniform thickness property.
SuiteResult verify_farey_bypass(const VerifyOptions& opts);
SuiteResult verify_mountain_ranges(const VerifyOptions& opts);
SuiteResult verify_torus_grid(const VerifyOptions& opts);
SuiteResult verify_utp_coverage(const VerifyOptions& opts);

// Runs every suite. Deterministic: identical options give identical
// reports.
VerifyReport run_verify(const VerifyOptions& opts = {});

}  // namespace cables
