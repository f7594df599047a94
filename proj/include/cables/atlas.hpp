#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "cables/ints.hpp"

namespace cables {

// One non-destabilizable Legendrian class: a peak of the mountain range.
struct Peak {
  Int tb;
  Int rot;

  friend bool operator==(const Peak& a, const Peak& b) {
    return a.tb == b.tb && a.rot == b.rot;
  }
  friend bool operator!=(const Peak& a, const Peak& b) { return !(a == b); }
  friend bool operator<(const Peak& a, const Peak& b) {
    if (a.tb != b.tb) return a.tb < b.tb;
    return a.rot < b.rot;
  }
};

// Contact width: either a known integer or an unknown value pinned to the
// two-integer window [lower, upper] that the maximal tb forces.
class Width {
 public:
  static Width known(Int w);
  static Width unknown(Int lower, Int upper);

  bool is_known() const { return known_; }
  const Int& value() const;  // throws unless known
  const Int& lower() const { return lower_; }
  const Int& upper() const { return upper_; }

  friend bool operator==(const Width& a, const Width& b) {
    return a.known_ == b.known_ && a.lower_ == b.lower_ &&
           a.upper_ == b.upper_;
  }
  friend bool operator!=(const Width& a, const Width& b) { return !(a == b); }

 private:
  Width(bool known, Int lower, Int upper)
      : known_(known), lower_(std::move(lower)), upper_(std::move(upper)) {}

  bool known_;
  Int lower_, upper_;  // equal when known
};

// Lower width: a known integer, positive infinity (every solid torus
// thickens), or unknown with no bound at all.
class LowerWidth {
 public:
  static LowerWidth known(Int w);
  static LowerWidth infinite();
  static LowerWidth unknown();

  bool is_known() const { return state_ == State::Known; }
  bool is_infinite() const { return state_ == State::Infinite; }
  bool is_unknown() const { return state_ == State::Unknown; }
  const Int& value() const;  // throws unless known

  friend bool operator==(const LowerWidth& a, const LowerWidth& b) {
    return a.state_ == b.state_ && a.value_ == b.value_;
  }
  friend bool operator!=(const LowerWidth& a, const LowerWidth& b) {
    return !(a == b);
  }

 private:
  enum class State { Known, Infinite, Unknown };

  LowerWidth(State state, Int value)
      : state_(state), value_(std::move(value)) {}

  State state_;
  Int value_;  // 0 unless known
};

// Everything the tool knows about one knot type's Legendrian
// classification. Plain data; validate_atlas checks the invariants.
struct KnotAtlas {
  std::string name;
  std::vector<Peak> peaks;
  Width width = Width::unknown(0, 1);
  LowerWidth lower_width = LowerWidth::unknown();
  bool legendrian_simple = false;
  bool utp = false;

  // Largest tb over the peaks. Throws if there are none.
  Int max_tb() const;
  // Shared parity of tb + rot, as 0 or 1, read off the first peak.
  Int parity() const;
};

struct ValidationResult {
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
};

// Checks every atlas invariant and reports all violations, each naming the
// offending field.
ValidationResult validate_atlas(const KnotAtlas& a);

// Like validate_atlas but throws std::invalid_argument listing the
// violations instead of returning them.
void ensure_valid(const KnotAtlas& a);

// The downward stabilization closure of the peaks, truncated at a tb
// floor. Entries are (tb, rot) pairs, each present once.
struct MountainRange {
  std::set<std::pair<Int, Int>> entries;
  Int floor;

  // Entries with no entry one level up to either side; for a valid atlas
  // these are exactly its peaks at or above the floor.
  std::set<std::pair<Int, Int>> peak_entries() const;
};

// Union of the stabilization cones of all peaks, cut off below `floor`.
// Requires a valid, Legendrian-simple atlas and floor <= max_tb().
MountainRange mountain_range(const KnotAtlas& a, const Int& floor);

// Rotation numbers realized at one tb level: the cross-section of the
// mountain range. Empty above the maximal tb. Requires a valid,
// Legendrian-simple atlas.
std::set<Int> rot_values_at(const KnotAtlas& a, const Int& tb_level);

// Self-linking numbers of the transverse classes, truncated: negative
// stabilization walks sl down by 2 from the maximum.
struct TransverseClassification {
  Int sl_max;
  std::vector<Int> sl_values;
};

// sl_max = max(tb - rot) over peaks; sl_values lists sl_max, sl_max - 2,
// ..., down `depth` steps. Requires a valid, Legendrian-simple atlas and
// depth >= 0.
TransverseClassification transverse_classes(const KnotAtlas& a,
                                            const Int& depth);

// Equality of classifications: every field except the display name.
bool same_classification(const KnotAtlas& a, const KnotAtlas& b);

}  // namespace cables
