#include "cables/verify.hpp"

#include <deque>
#include <exception>
#include <set>

#include "cables/cabling.hpp"
#include "cables/farey.hpp"
#include "cables/slope.hpp"

namespace cables {

namespace {

constexpr std::size_t kMaxNotes = 5;

void record_failure(SuiteResult& suite, std::string note) {
  ++suite.failures;
  if (suite.notes.size() < kMaxNotes) suite.notes.push_back(std::move(note));
}

// All reduced slopes with |numerator| and denominator within the bound,
// infinity included once.
std::vector<Slope> slopes_in_box(const Int& bound) {
  std::vector<Slope> out;
  out.push_back(Slope::infinity());
  for (Int d = 1; d <= bound; ++d) {
    for (Int n = -bound; n <= bound; ++n) {
      Int n_abs = abs(n);
      if (gcd(n_abs, d) != 1) continue;
      out.push_back(Slope(n, d));
    }
  }
  return out;
}

KnotAtlas unknot_atlas() {
  KnotAtlas a;
  a.name = "unknot";
  a.peaks = {Peak{-1, 0}};
  a.width = Width::known(0);
  a.lower_width = LowerWidth::infinite();
  a.legendrian_simple = true;
  a.utp = false;
  return a;
}

// The left-handed trefoil is the standard uniformly thick example: both
// widths equal the maximal tb of -6.
KnotAtlas utp_trefoil_atlas() {
  KnotAtlas a;
  a.name = "trefoil-left";
  a.peaks = {Peak{-6, -1}, Peak{-6, 1}};
  a.width = Width::known(-6);
  a.lower_width = LowerWidth::known(-6);
  a.legendrian_simple = true;
  a.utp = true;
  return a;
}

std::string side_name(AttachmentSide side) {
  return side == AttachmentSide::Front ? "front" : "back";
}

bool rot_symmetric(const std::vector<Peak>& peaks) {
  std::set<Peak> set(peaks.begin(), peaks.end());
  for (const Peak& p : peaks)
    if (set.count(Peak{p.tb, -p.rot}) == 0) return false;
  return true;
}

}  // namespace

MountainRange stabilization_closure_bfs(const KnotAtlas& a, const Int& floor) {
  ensure_valid(a);
  MountainRange range;
  range.floor = floor;
  std::deque<std::pair<Int, Int>> queue;
  for (const Peak& p : a.peaks) {
    if (p.tb < floor) continue;
    if (range.entries.insert({p.tb, p.rot}).second)
      queue.push_back({p.tb, p.rot});
  }
  while (!queue.empty()) {
    auto [t, r] = queue.front();
    queue.pop_front();
    if (t <= floor) continue;
    for (int dr : {-1, 1}) {
      std::pair<Int, Int> child{t - 1, r + dr};
      if (range.entries.insert(child).second) queue.push_back(child);
    }
  }
  return range;
}

KnotAtlas random_simple_atlas(std::mt19937& rng) {
  KnotAtlas a;
  a.name = "random";
  int target = 1 + static_cast<int>(rng() % 4);
  Int tb0 = Int(rng() % 13) - 6;
  Int rot0 = Int(rng() % 13) - 6;
  a.peaks.push_back(Peak{tb0, rot0});

  for (int attempt = 0;
       attempt < 40 && static_cast<int>(a.peaks.size()) < target; ++attempt) {
    Peak c{tb0 - Int(rng() % 7), rot0 - 8 + Int(rng() % 17)};
    if ((c.tb + c.rot - tb0 - rot0) % 2 != 0) c.rot += 1;
    bool clashes = false;
    for (const Peak& p : a.peaks) {
      Int depth = abs(c.tb - p.tb);
      Int spread = abs(c.rot - p.rot);
      if (spread <= depth || c == p) {  // one would dominate the other
        clashes = true;
        break;
      }
    }
    if (!clashes) a.peaks.push_back(c);
  }

  Int tb_bar = a.max_tb();
  switch (rng() % 3) {
    case 0:
      a.width = Width::known(tb_bar);
      break;
    case 1:
      a.width = Width::known(tb_bar + 1);
      break;
    default:
      a.width = Width::unknown(tb_bar, tb_bar + 1);
      break;
  }
  switch (rng() % 3) {
    case 0:
      a.lower_width = LowerWidth::unknown();
      break;
    case 1:
      a.lower_width = LowerWidth::infinite();
      break;
    default:
      a.lower_width = LowerWidth::known(tb_bar - Int(rng() % 4));
      break;
  }
  a.legendrian_simple = true;
  a.utp = false;
  ensure_valid(a);
  return a;
}

SuiteResult verify_farey_bypass(const VerifyOptions& opts) {
  SuiteResult suite;
  suite.name = "farey-bypass-oracle";
  std::vector<Slope> slopes = slopes_in_box(opts.farey_bound);
  try {
    for (const Slope& s : slopes) {
      for (const Slope& r : slopes) {
        if (r == s) continue;
        for (AttachmentSide side :
             {AttachmentSide::Front, AttachmentSide::Back}) {
          ++suite.cases;
          Int bound = opts.oracle_bound_override
                          ? *opts.oracle_bound_override
                          : Int(s.den() + r.den());
          Slope fast = bypass_slope(s, r, side);
          Slope slow = bypass_slope_oracle(s, r, side, bound);
          if (fast != slow)
            record_failure(suite, "s=" + s.str() + " r=" + r.str() + " " +
                                      side_name(side) + ": fast path " +
                                      fast.str() + " != oracle " + slow.str());
        }
      }
    }
  } catch (const std::exception& e) {
    // A throwing sweep is itself a failure (this is how the injected
    // zero bound surfaces).
    record_failure(suite, std::string("sweep aborted: ") + e.what());
  }
  return suite;
}

SuiteResult verify_mountain_ranges(const VerifyOptions& opts) {
  SuiteResult suite;
  suite.name = "mountain-range-bfs";
  std::mt19937 rng(opts.seed);
  for (int i = 0; i < opts.atlas_count; ++i) {
    ++suite.cases;
    KnotAtlas a = random_simple_atlas(rng);
    Int floor = a.max_tb() - opts.atlas_floor_depth;
    MountainRange closed = mountain_range(a, floor);
    MountainRange bfs = stabilization_closure_bfs(a, floor);
    if (closed.entries != bfs.entries) {
      record_failure(suite, "atlas " + std::to_string(i) +
                                ": closed form and BFS closure differ");
      continue;
    }
    std::set<std::pair<Int, Int>> expected_peaks;
    for (const Peak& p : a.peaks)
      if (p.tb >= floor) expected_peaks.insert({p.tb, p.rot});
    if (closed.peak_entries() != expected_peaks)
      record_failure(suite, "atlas " + std::to_string(i) +
                                ": recovered peaks differ from the source");
    if (rot_symmetric(a.peaks)) {
      bool symmetric = true;
      for (const auto& [t, r] : closed.entries)
        if (closed.entries.count({t, -r}) == 0) symmetric = false;
      if (!symmetric)
        record_failure(suite,
                       "atlas " + std::to_string(i) +
                           ": symmetric peaks gave an asymmetric range");
    }
  }
  return suite;
}

SuiteResult verify_torus_grid(const VerifyOptions& opts) {
  (void)opts;
  SuiteResult suite;
  suite.name = "torus-knot-grid";
  KnotAtlas unknot = unknot_atlas();

  // Positive side: tb = pq - p - q with the single rotation number 0,
  // symmetric in the two cabling parameters; sl follows as tb - rot.
  for (Int p = 2; p <= 10; ++p) {
    for (Int q = 2; q <= 10; ++q) {
      Int p_abs = p;
      if (gcd(p_abs, q) != 1) continue;
      ++suite.cases;
      CableResult res = positive_cable(unknot, CableSpec(p, q));
      const KnotAtlas& out = *res.atlas;
      Int expected = p * q - p - q;
      bool ok = out.max_tb() == expected && out.peaks.size() == 1 &&
                out.peaks.front().rot == 0;
      CableResult swapped = positive_cable(unknot, CableSpec(q, p));
      ok = ok && same_classification(out, *swapped.atlas);
      ok = ok && transverse_classes(out, 0).sl_max == expected;
      if (!ok)
        record_failure(suite, "positive cable " + p.str() + "/" + q.str() +
                                  " does not match the torus-knot values");
    }
  }

  // Negative side: tb = pq = width; spot rotation sets at the two
  // smallest left torus knots.
  for (Int q : {Int(2), Int(3), Int(5)}) {
    for (Int p = -q - 1; p >= -15; --p) {
      Int p_abs = abs(p);
      if (gcd(p_abs, q) != 1) continue;
      ++suite.cases;
      CableResult res = negative_cable(unknot, CableSpec(p, q));
      const KnotAtlas& out = *res.atlas;
      Int pq = p * q;
      bool ok = out.max_tb() == pq && out.width.is_known() &&
                out.width.value() == pq && rot_symmetric(out.peaks);
      if (!ok)
        record_failure(suite, "negative cable " + p.str() + "/" + q.str() +
                                  " does not match the torus-knot values");
    }
  }

  auto rot_set = [](const KnotAtlas& a) {
    std::set<Int> rots;
    for (const Peak& p : a.peaks) rots.insert(p.rot);
    return rots;
  };
  ++suite.cases;
  CableResult trefoil = negative_cable(unknot, CableSpec(-3, 2));
  if (rot_set(*trefoil.atlas) != std::set<Int>{-1, 1})
    record_failure(suite, "(-3,2) rotation set is not {-1, 1}");
  ++suite.cases;
  CableResult cinquefoil = negative_cable(unknot, CableSpec(-5, 2));
  if (rot_set(*cinquefoil.atlas) != std::set<Int>{-3, -1, 1, 3})
    record_failure(suite, "(-5,2) rotation set is not {-3, -1, 1, 3}");

  return suite;
}

SuiteResult verify_utp_coverage(const VerifyOptions& opts) {
  (void)opts;
  SuiteResult suite;
  suite.name = "utp-coverage";
  UtpReport report = utp_consistency_check(utp_trefoil_atlas());
  suite.cases = report.total.convert_to<long long>();
  if (!report.fully_covered()) {
    for (const CableSpec& spec : report.uncovered)
      record_failure(suite, "uncovered slope " + spec.str() +
                                " for a uniformly thick atlas");
  }
  return suite;
}

VerifyReport run_verify(const VerifyOptions& opts) {
  VerifyReport report;
  report.suites.push_back(verify_farey_bypass(opts));
  report.suites.push_back(verify_mountain_ranges(opts));
  report.suites.push_back(verify_torus_grid(opts));
  report.suites.push_back(verify_utp_coverage(opts));
  return report;
}

}  // namespace cables
