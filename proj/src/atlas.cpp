#include "cables/atlas.hpp"

#include <algorithm>
#include <stdexcept>

namespace cables {

namespace {

Int parity_of(const Peak& p) {
  Int m = (p.tb + p.rot) % 2;
  return m < 0 ? m + 2 : m;
}

// Is `low` inside the stabilization cone of `high` (strictly below it)?
// Cone membership needs |rot gap| <= tb gap with the difference even; for
// peaks of one atlas the parity condition is automatic, but checking it
// keeps the validator honest on mixed-parity input.
bool dominated_by(const Peak& low, const Peak& high) {
  if (low.tb >= high.tb) return false;
  Int depth = high.tb - low.tb;
  Int spread = abs(low.rot - high.rot);
  return spread <= depth && (depth - spread) % 2 == 0;
}

std::string peak_str(const Peak& p) {
  return "(" + p.tb.str() + ", " + p.rot.str() + ")";
}

void require_simple_and_valid(const KnotAtlas& a, const char* op) {
  ensure_valid(a);
  if (!a.legendrian_simple)
    throw std::invalid_argument(std::string(op) +
                                " requires a Legendrian-simple atlas");
}

}  // namespace

Width Width::known(Int w) { return Width(true, w, w); }

Width Width::unknown(Int lower, Int upper) {
  return Width(false, std::move(lower), std::move(upper));
}

const Int& Width::value() const {
  if (!known_) throw std::logic_error("width is unknown");
  return lower_;
}

LowerWidth LowerWidth::known(Int w) {
  return LowerWidth(State::Known, std::move(w));
}

LowerWidth LowerWidth::infinite() { return LowerWidth(State::Infinite, 0); }

LowerWidth LowerWidth::unknown() { return LowerWidth(State::Unknown, 0); }

const Int& LowerWidth::value() const {
  if (state_ != State::Known)
    throw std::logic_error("lower width is not a known integer");
  return value_;
}

Int KnotAtlas::max_tb() const {
  if (peaks.empty())
    throw std::invalid_argument("atlas \"" + name + "\" has no peaks");
  Int best = peaks.front().tb;
  for (const Peak& p : peaks) best = std::max(best, p.tb);
  return best;
}

Int KnotAtlas::parity() const {
  if (peaks.empty())
    throw std::invalid_argument("atlas \"" + name + "\" has no peaks");
  return parity_of(peaks.front());
}

ValidationResult validate_atlas(const KnotAtlas& a) {
  ValidationResult result;
  auto flag = [&result](std::string msg) {
    result.violations.push_back(std::move(msg));
  };

  if (a.peaks.empty()) {
    flag("peaks: must be nonempty");
    return result;  // everything below needs at least one peak
  }

  Int parity = parity_of(a.peaks.front());
  for (std::size_t i = 1; i < a.peaks.size(); ++i) {
    if (parity_of(a.peaks[i]) != parity)
      flag("peaks[" + std::to_string(i) + "]: tb + rot parity of " +
           peak_str(a.peaks[i]) + " differs from peaks[0]");
  }

  for (std::size_t i = 0; i < a.peaks.size(); ++i) {
    for (std::size_t j = 0; j < a.peaks.size(); ++j) {
      if (i == j) continue;
      if (j > i && a.peaks[i] == a.peaks[j])
        flag("peaks[" + std::to_string(j) + "]: duplicate of peaks[" +
             std::to_string(i) + "]");
      if (dominated_by(a.peaks[i], a.peaks[j]))
        flag("peaks[" + std::to_string(i) + "]: " + peak_str(a.peaks[i]) +
             " is a stabilization of " + peak_str(a.peaks[j]) +
             ", so it cannot be a peak");
    }
  }

  Int tb_bar = a.max_tb();
  if (a.width.is_known()) {
    const Int& w = a.width.value();
    if (w < tb_bar || w > tb_bar + 1)
      flag("width: " + w.str() + " lies outside [max tb, max tb + 1] = [" +
           tb_bar.str() + ", " + Int(tb_bar + 1).str() + "]");
  } else {
    if (a.width.lower() != tb_bar || a.width.upper() != tb_bar + 1)
      flag("width: unknown width must carry the window [" + tb_bar.str() +
           ", " + Int(tb_bar + 1).str() + "], got [" + a.width.lower().str() +
           ", " + a.width.upper().str() + "]");
  }

  if (a.utp) {
    if (!a.width.is_known() || a.width.value() != tb_bar)
      flag("utp: requires width = max tb = " + tb_bar.str());
    if (!a.lower_width.is_known() || a.lower_width.value() != tb_bar)
      flag("utp: requires lower_width = max tb = " + tb_bar.str());
  }

  return result;
}

void ensure_valid(const KnotAtlas& a) {
  ValidationResult result = validate_atlas(a);
  if (result.ok()) return;
  std::string msg = "invalid atlas";
  if (!a.name.empty()) msg += " \"" + a.name + "\"";
  msg += ":";
  for (const std::string& v : result.violations) msg += "\n  - " + v;
  throw std::invalid_argument(msg);
}

std::set<std::pair<Int, Int>> MountainRange::peak_entries() const {
  std::set<std::pair<Int, Int>> out;
  for (const auto& [t, r] : entries) {
    bool left = entries.count({t + 1, r - 1}) != 0;
    bool right = entries.count({t + 1, r + 1}) != 0;
    if (!left && !right) out.insert({t, r});
  }
  return out;
}

MountainRange mountain_range(const KnotAtlas& a, const Int& floor) {
  require_simple_and_valid(a, "mountain_range");
  Int tb_bar = a.max_tb();
  if (floor > tb_bar)
    throw std::invalid_argument("mountain range floor " + floor.str() +
                                " exceeds max tb " + tb_bar.str());
  MountainRange range;
  range.floor = floor;
  for (const Peak& p : a.peaks) {
    for (Int t = p.tb; t >= floor; --t) {
      Int k = p.tb - t;
      for (Int r = p.rot - k; r <= p.rot + k; r += 2)
        range.entries.insert({t, r});
    }
  }
  return range;
}

std::set<Int> rot_values_at(const KnotAtlas& a, const Int& tb_level) {
  require_simple_and_valid(a, "rot_values_at");
  std::set<Int> rots;
  for (const Peak& p : a.peaks) {
    if (p.tb < tb_level) continue;
    Int k = p.tb - tb_level;
    for (Int r = p.rot - k; r <= p.rot + k; r += 2) rots.insert(r);
  }
  return rots;
}

TransverseClassification transverse_classes(const KnotAtlas& a,
                                            const Int& depth) {
  require_simple_and_valid(a, "transverse_classes");
  if (depth < 0)
    throw std::invalid_argument("transverse depth must be >= 0, got " +
                                depth.str());
  TransverseClassification out;
  out.sl_max = a.peaks.front().tb - a.peaks.front().rot;
  for (const Peak& p : a.peaks)
    out.sl_max = std::max(out.sl_max, Int(p.tb - p.rot));
  for (Int k = 0; k <= depth; ++k) out.sl_values.push_back(out.sl_max - 2 * k);
  return out;
}

bool same_classification(const KnotAtlas& a, const KnotAtlas& b) {
  std::set<Peak> pa(a.peaks.begin(), a.peaks.end());
  std::set<Peak> pb(b.peaks.begin(), b.peaks.end());
  return pa == pb && a.width == b.width && a.lower_width == b.lower_width &&
         a.legendrian_simple == b.legendrian_simple && a.utp == b.utp;
}

}  // namespace cables
