#include "cables/cabling.hpp"

#include <algorithm>
#include <stdexcept>

namespace cables {

namespace {

void require_simple_and_valid(const KnotAtlas& a, const char* op) {
  ensure_valid(a);
  if (!a.legendrian_simple)
    throw std::invalid_argument(std::string(op) +
                                " requires a Legendrian-simple atlas");
}

// Slope comparisons against integers, kept exact: p/q > b iff p > b*q
// (q > 0 by construction).
bool slope_above(const CableSpec& spec, const Int& bound) {
  return spec.p() > bound * spec.q();
}

bool slope_below(const CableSpec& spec, const Int& bound) {
  return spec.p() < bound * spec.q();
}

// Output peaks read best from the top down.
void sort_peaks_for_output(std::vector<Peak>& peaks) {
  std::sort(peaks.begin(), peaks.end(), [](const Peak& a, const Peak& b) {
    if (a.tb != b.tb) return a.tb > b.tb;
    return a.rot < b.rot;
  });
}

}  // namespace

std::string reason_code(UncoveredReason reason) {
  switch (reason) {
    case UncoveredReason::SlopeInGap:
      return "slope_in_gap";
    case UncoveredReason::WidthNotInteger:
      return "width_not_integer";
    case UncoveredReason::WidthUnknown:
      return "width_unknown";
    case UncoveredReason::LevelMissing:
      return "level_missing";
    case UncoveredReason::QTooSmall:
      return "q_too_small";
  }
  throw std::logic_error("unhandled uncovered reason");
}

UncoveredReason Regime::reason() const {
  if (!reason_)
    throw std::logic_error("regime is covered and carries no reason");
  return *reason_;
}

Int negative_level(const CableSpec& spec) {
  return floor_div(-spec.p(), spec.q());
}

Regime cable_regime(const KnotAtlas& a, const CableSpec& spec) {
  ensure_valid(a);
  Int tb_bar = a.max_tb();

  bool positive_certain, positive_possible;
  if (a.width.is_known()) {
    positive_certain = slope_above(spec, a.width.value());
    positive_possible = positive_certain;
  } else {
    // Width only pinned to [max tb, max tb + 1]: commit when the decision
    // agrees at both ends of the window.
    positive_certain = slope_above(spec, a.width.upper());
    positive_possible = slope_above(spec, a.width.lower());
  }

  bool negative_slope_ok;
  if (a.lower_width.is_known())
    negative_slope_ok = slope_below(spec, a.lower_width.value());
  else
    negative_slope_ok = a.lower_width.is_infinite();
  // The cross-section at level -n is nonempty exactly when -n does not
  // exceed the maximal tb.
  Int n = negative_level(spec);
  bool level_ok = -n <= tb_bar;
  bool negative_certain = negative_slope_ok && level_ok;

  if (positive_certain && negative_certain)
    throw std::logic_error("slope " + spec.str() +
                           " claimed by both regimes; the atlas widths are "
                           "inconsistent");
  if (positive_certain) return Regime::positive();
  if (negative_certain) return Regime::negative();

  if (!a.width.is_known() && positive_possible)
    return Regime::uncovered(UncoveredReason::WidthUnknown);
  if (negative_slope_ok && !level_ok)
    return Regime::uncovered(UncoveredReason::LevelMissing);
  if (a.lower_width.is_unknown())
    return Regime::uncovered(UncoveredReason::WidthUnknown);
  return Regime::uncovered(UncoveredReason::SlopeInGap);
}

std::vector<Peak> positive_cable_peaks(
    const std::map<Int, std::set<Int>>& rot_by_level, const CableSpec& spec) {
  std::set<Peak> out;
  for (const auto& [level, rots] : rot_by_level) {
    // The class at tb = level twists against the cabling annulus
    // |q - level*p| times; level 0 is legitimate here (the dividing slope
    // degenerates but the intersection count does not).
    Int tb_out = spec.product() -
                 intersection_number(Slope(1, level), spec.slope());
    for (const Int& r : rots)
      out.insert(Peak{tb_out, cable_rotation(spec, 0, r)});
  }
  std::vector<Peak> peaks(out.begin(), out.end());
  sort_peaks_for_output(peaks);
  return peaks;
}

CableResult positive_cable(const KnotAtlas& a, const CableSpec& spec) {
  require_simple_and_valid(a, "positive_cable");
  Regime regime = cable_regime(a, spec);
  if (regime.kind() != Regime::Kind::SufficientlyPositive)
    throw std::invalid_argument("slope " + spec.str() +
                                " is not sufficiently positive for atlas \"" +
                                a.name + "\"");

  std::map<Int, std::set<Int>> rot_by_level;
  for (const Peak& p : a.peaks) rot_by_level[p.tb].insert(p.rot);

  KnotAtlas out;
  out.name = cable_name(a.name, spec);
  out.peaks = positive_cable_peaks(rot_by_level, spec);
  Int tb_out = out.max_tb();
  out.width = Width::unknown(tb_out, tb_out + 1);
  out.lower_width = LowerWidth::unknown();
  out.legendrian_simple = true;
  out.utp = false;

  // A dominated output peak means the input atlas was unrealizable; fail
  // loudly instead of shipping an inconsistent classification.
  ensure_valid(out);
  Int expected = spec.product() -
                 intersection_number(Slope(1, a.max_tb()), spec.slope());
  if (tb_out != expected)
    throw std::logic_error("positive cable max tb " + tb_out.str() +
                           " does not come from the input max tb level");

  CableResult result;
  result.regime = regime;
  result.atlas = std::move(out);
  return result;
}

CableResult negative_cable(const KnotAtlas& a, const CableSpec& spec) {
  require_simple_and_valid(a, "negative_cable");
  Regime regime = cable_regime(a, spec);
  if (regime.kind() != Regime::Kind::SufficientlyNegative)
    throw std::invalid_argument("slope " + spec.str() +
                                " is not sufficiently negative for atlas \"" +
                                a.name + "\"");

  Int n = negative_level(spec);
  std::set<Int> rots = rot_values_at(a, -n);
  if (rots.empty())
    throw std::logic_error("negative regime admitted level " + n.str() +
                           " with no classes at tb = " + Int(-n).str());

  Int tb_out = spec.product();
  std::set<Peak> out_set;
  for (const Int& r : rots) {
    Int v = spec.p() + spec.q() * (n + r);
    out_set.insert(Peak{tb_out, v});
    out_set.insert(Peak{tb_out, -v});
  }

  KnotAtlas out;
  out.name = cable_name(a.name, spec);
  out.peaks.assign(out_set.begin(), out_set.end());
  sort_peaks_for_output(out.peaks);
  out.width = Width::known(tb_out);
  out.lower_width = LowerWidth::unknown();
  out.legendrian_simple = true;
  out.utp = false;
  ensure_valid(out);

  CableResult result;
  result.regime = regime;
  result.atlas = std::move(out);
  result.level_n = std::move(n);
  return result;
}

Int cable_rotation(const CableSpec& spec, const Int& rot_disk,
                   const Int& rot_seifert) {
  return spec.p() * rot_disk + spec.q() * rot_seifert;
}

std::string cable_name(const std::string& base, const CableSpec& spec) {
  return base + "_(" + spec.p().str() + "," + spec.q().str() + ")";
}

CableResult classify_cable(const KnotAtlas& a, const CableSpec& spec) {
  require_simple_and_valid(a, "classify_cable");
  Regime regime = cable_regime(a, spec);
  switch (regime.kind()) {
    case Regime::Kind::SufficientlyPositive:
      return positive_cable(a, spec);
    case Regime::Kind::SufficientlyNegative:
      return negative_cable(a, spec);
    case Regime::Kind::Uncovered: {
      CableResult result;
      result.regime = regime;
      return result;
    }
  }
  throw std::logic_error("unhandled regime");
}

std::vector<CableResult> iterate_cables(const KnotAtlas& a,
                                        const std::vector<CableSpec>& specs) {
  require_simple_and_valid(a, "iterate_cables");
  std::vector<CableResult> results;
  KnotAtlas current = a;
  for (const CableSpec& spec : specs) {
    CableResult result = classify_cable(current, spec);
    bool covered = result.covered();
    if (covered) current = *result.atlas;
    results.push_back(std::move(result));
    if (!covered) break;
  }
  return results;
}

UtpReport utp_consistency_check(const KnotAtlas& a, const Int& p_bound,
                                const Int& q_bound) {
  ensure_valid(a);
  if (!a.utp)
    throw std::invalid_argument("atlas \"" + a.name +
                                "\" does not claim uniform thickness");
  UtpReport report;
  for (Int q = 2; q <= q_bound; ++q) {
    for (Int p = -p_bound; p <= p_bound; ++p) {
      Int p_abs = abs(p);
      if (gcd(p_abs, q) != 1) continue;  // also drops p = 0
      CableSpec spec(p, q);
      Regime regime = cable_regime(a, spec);
      ++report.total;
      switch (regime.kind()) {
        case Regime::Kind::SufficientlyPositive:
          ++report.positive;
          break;
        case Regime::Kind::SufficientlyNegative:
          ++report.negative;
          break;
        case Regime::Kind::Uncovered:
          report.uncovered.push_back(spec);
          break;
      }
    }
  }
  return report;
}

}  // namespace cables
