#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cables/atlas.hpp"
#include "cables/slope.hpp"

namespace cables {

// Why a cabling slope falls outside both classification regimes.
// WidthNotInteger and QTooSmall are reserved codes: the data model only
// stores integer widths and CableSpec already rejects q < 2, so neither
// can currently be produced, but downstream consumers treat the full set.
enum class UncoveredReason {
  SlopeInGap,
  WidthNotInteger,
  WidthUnknown,
  LevelMissing,
  QTooSmall,
};

// Machine-readable code for serialization and messages.
std::string reason_code(UncoveredReason reason);

// Which classification regime a cabling slope lands in. Uncovered always
// carries a reason.
class Regime {
 public:
  enum class Kind { SufficientlyPositive, SufficientlyNegative, Uncovered };

  static Regime positive() { return Regime(Kind::SufficientlyPositive, {}); }
  static Regime negative() { return Regime(Kind::SufficientlyNegative, {}); }
  static Regime uncovered(UncoveredReason reason) {
    return Regime(Kind::Uncovered, reason);
  }

  Kind kind() const { return kind_; }
  bool covered() const { return kind_ != Kind::Uncovered; }
  UncoveredReason reason() const;  // throws unless uncovered

  friend bool operator==(const Regime& a, const Regime& b) {
    return a.kind_ == b.kind_ && a.reason_ == b.reason_;
  }
  friend bool operator!=(const Regime& a, const Regime& b) {
    return !(a == b);
  }

 private:
  Regime(Kind kind, std::optional<UncoveredReason> reason)
      : kind_(kind), reason_(reason) {}

  Kind kind_;
  std::optional<UncoveredReason> reason_;
};

// Outcome of classifying one cable: the regime, plus the cable's atlas
// when covered and the level parameter n when sufficiently negative.
struct CableResult {
  Regime regime = Regime::uncovered(UncoveredReason::SlopeInGap);
  std::optional<KnotAtlas> atlas;
  std::optional<Int> level_n;

  bool covered() const { return regime.covered(); }
};

// The unique integer n with -n-1 < p/q < -n. Well defined because q >= 2
// and coprimality keep p/q away from the integers.
Int negative_level(const CableSpec& spec);

// Decides the regime of spec against the atlas:
//   - sufficiently positive when p/q is known to exceed the width, i.e.
//     width is known and p/q > width, or width is the unknown window
//     [max tb, max tb + 1] and p/q clears even its upper end;
//   - sufficiently negative when p/q < lower width (infinite lower width
//     admits every slope) and the level -n carries Legendrian classes;
//   - uncovered otherwise, with a reason.
// Requires a valid atlas. Errors if both regimes claim the slope, which
// no consistent atlas should allow.
Regime cable_regime(const KnotAtlas& a, const CableSpec& spec);

// The peak set of a sufficiently positive cable, from the input peaks
// grouped as tb level -> rot values at that level. Each input class
// (n, r) contributes the peak (pq - |q - n*p|, q*r). Exposed separately
// from positive_cable so the formula can be exercised on raw level data.
std::vector<Peak> positive_cable_peaks(
    const std::map<Int, std::set<Int>>& rot_by_level, const CableSpec& spec);

// Classification of a sufficiently positive cable. Requires a valid,
// Legendrian-simple atlas whose regime for spec is sufficiently positive.
// The output atlas is validated before it is returned; inconsistent
// output (possible only for unrealizable synthetic input) is an error,
// never a silently repaired atlas.
CableResult positive_cable(const KnotAtlas& a, const CableSpec& spec);

// Classification of a sufficiently negative cable: all peaks sit at
// tb = pq, which is also the exact width. Requires a valid,
// Legendrian-simple atlas whose regime for spec is sufficiently negative.
CableResult negative_cable(const KnotAtlas& a, const CableSpec& spec);

// Rotation number of a cabled class from the two framing curves:
// p * rot(disk boundary) + q * rot(Seifert surface boundary).
Int cable_rotation(const CableSpec& spec, const Int& rot_disk,
                   const Int& rot_seifert);

// Display name for a cable of the named knot, e.g. "unknot_(2,3)".
std::string cable_name(const std::string& base, const CableSpec& spec);

// Full dispatch: decide the regime and run the matching construction.
// Uncovered inputs yield a result with no atlas. Requires a valid,
// Legendrian-simple atlas.
CableResult classify_cable(const KnotAtlas& a, const CableSpec& spec);

// Left fold of classify_cable: each covered result feeds the next spec;
// the first uncovered result is reported and iteration stops there.
std::vector<CableResult> iterate_cables(const KnotAtlas& a,
                                        const std::vector<CableSpec>& specs);

// Grid coverage report for an atlas that claims the uniform thickness
// property: such a knot's cables must never be uncovered.
struct UtpReport {
  Int total = 0;
  Int positive = 0;
  Int negative = 0;
  std::vector<CableSpec> uncovered;

  bool fully_covered() const { return uncovered.empty(); }
};

// Runs cable_regime over every valid spec with |p| <= p_bound and
// 2 <= q <= q_bound. Requires a valid atlas with utp = true.
UtpReport utp_consistency_check(const KnotAtlas& a, const Int& p_bound = 10,
                                const Int& q_bound = 5);

}  // namespace cables
