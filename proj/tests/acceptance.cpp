// Acceptance harness: one pass/fail line per shipped criterion, exit code
// equal to the number of failures. Runs the installed CLI binary through
// popen for the end-to-end criteria and the library directly for the
// grid and oracle sweeps.
//
//   cables_acceptance --cli PATH_TO_CLI --data PATH_TO_DATA_DIR

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <exception>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "cables/atlas.hpp"
#include "cables/atlas_io.hpp"
#include "cables/cabling.hpp"
#include "cables/ints.hpp"
#include "cables/verify.hpp"

namespace {

using cables::Int;
using cables::KnotAtlas;
using nlohmann::json;

void require(bool ok, const std::string& message) {
  if (!ok) throw std::runtime_error(message);
}

std::string shell_quote(const std::string& path) { return "\"" + path + "\""; }

struct RunResult {
  int exit_code;
  std::string output;
};

// Runs a shell command, capturing stdout; stderr passes through so a
// failing criterion stays debuggable.
RunResult run_command(const std::string& command) {
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) throw std::runtime_error("could not start: " + command);
  std::string output;
  char buffer[4096];
  std::size_t got;
  while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0)
    output.append(buffer, got);
  int status = pclose(pipe);
  int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return {code, output};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  require(static_cast<bool>(in), "cannot read " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

struct Criterion {
  std::string name;
  long long budget_ms;
  std::function<std::string()> run;  // returns a detail string, throws to fail
};

std::set<Int> rot_set(const KnotAtlas& a) {
  std::set<Int> rots;
  for (const auto& p : a.peaks) rots.insert(p.rot);
  return rots;
}

}  // namespace

int main(int argc, char** argv) {
  std::string cli, data;
  for (int i = 1; i + 1 < argc; i += 2) {
    std::string flag = argv[i];
    if (flag == "--cli")
      cli = argv[i + 1];
    else if (flag == "--data")
      data = argv[i + 1];
  }
  if (cli.empty() || data.empty()) {
    std::cerr << "usage: cables_acceptance --cli PATH --data DIR\n";
    return 64;
  }

  KnotAtlas unknot = cables::builtin_atlas("unknot");

  std::vector<Criterion> criteria;

  criteria.push_back({"cli-unknot-positive-cable", 100, [&cli] {
    RunResult r = run_command(shell_quote(cli) +
                              " classify --builtin unknot --cable 2/3");
    require(r.exit_code == 0,
            "exit code " + std::to_string(r.exit_code) + ", expected 0");
    json j = json::parse(r.output);
    require(j["regime"] == "sufficiently_positive",
            "regime " + j["regime"].dump());
    require(j["peaks"].is_array() && j["peaks"].size() == 1,
            "expected exactly one peak, got " + j["peaks"].dump());
    require(j["peaks"][0]["tb"] == 1 && j["peaks"][0]["rot"] == 0,
            "peak " + j["peaks"][0].dump() + ", expected tb 1, rot 0");
    return std::string("regime sufficiently_positive, peak (1, 0), exit 0");
  }});

  criteria.push_back({"positive-torus-grid", 1000, [&unknot] {
    int cases = 0;
    for (Int p = 2; p <= 10; ++p)
      for (Int q = 2; q <= 10; ++q) {
        if (gcd(p, q) != 1) continue;
        ++cases;
        auto res = cables::positive_cable(unknot, cables::CableSpec(p, q));
        const KnotAtlas& out = *res.atlas;
        Int expected = p * q - p - q;
        require(out.max_tb() == expected,
                "(" + p.str() + "," + q.str() + "): max tb " +
                    out.max_tb().str() + " != " + expected.str());
        require(out.peaks.size() == 1 && out.peaks[0].rot == 0,
                "(" + p.str() + "," + q.str() + "): peak set is not {(tb, 0)}");
        auto swapped = cables::positive_cable(unknot, cables::CableSpec(q, p));
        require(cables::same_classification(out, *swapped.atlas),
                "(" + p.str() + "," + q.str() +
                    "): swapping the parameters changed the classification");
      }
    return std::to_string(cases) + " coprime pairs, tb = pq - p - q, rot 0";
  }});

  criteria.push_back({"negative-torus-grid", 1000, [&unknot] {
    int cases = 0;
    for (Int q : {Int(2), Int(3), Int(5)})
      for (Int p = -q - 1; p >= -25; --p) {
        Int p_abs = abs(p);
        if (gcd(p_abs, q) != 1) continue;
        ++cases;
        auto res = cables::negative_cable(unknot, cables::CableSpec(p, q));
        const KnotAtlas& out = *res.atlas;
        Int pq = p * q;
        require(out.max_tb() == pq, "(" + p.str() + "," + q.str() +
                                        "): max tb " + out.max_tb().str() +
                                        " != pq = " + pq.str());
        require(out.width.is_known() && out.width.value() == pq,
                "(" + p.str() + "," + q.str() + "): width is not pq");
      }
    auto trefoil = cables::negative_cable(unknot, cables::CableSpec(-3, 2));
    require(rot_set(*trefoil.atlas) == std::set<Int>{Int(-1), Int(1)},
            "(-3,2): rotation numbers are not {-1, 1}");
    auto cinq = cables::negative_cable(unknot, cables::CableSpec(-5, 2));
    require(rot_set(*cinq.atlas) ==
                std::set<Int>{Int(-3), Int(-1), Int(1), Int(3)},
            "(-5,2): rotation numbers are not {-3, -1, 1, 3}");
    return std::to_string(cases) + " slopes, tb = width = pq, spot rots ok";
  }});

  criteria.push_back({"cli-uncovered-exit-code", 1000, [&cli, &data] {
    RunResult r = run_command(shell_quote(cli) + " classify --atlas " +
                              shell_quote(data + "/trefoil-right.json") +
                              " --cable 2/3");
    require(r.exit_code == 1,
            "exit code " + std::to_string(r.exit_code) + ", expected 1");
    json j = json::parse(r.output);
    require(j["regime"] == "uncovered", "regime " + j["regime"].dump());
    return std::string("regime uncovered, exit 1, reason ") +
           j["reason"].get<std::string>();
  }});

  criteria.push_back({"bypass-oracle-sweep", 30000, [] {
    auto suite = cables::verify_farey_bypass(cables::VerifyOptions{});
    require(suite.cases > 0, "sweep ran no cases");
    std::string notes;
    for (const auto& n : suite.notes) notes += "\n    " + n;
    require(suite.passed(), std::to_string(suite.failures) +
                                " disagreements with the oracle" + notes);
    return std::to_string(suite.cases) + " slope pairs agree with the oracle";
  }});

  criteria.push_back({"mountain-range-bfs-sweep", 5000, [] {
    auto suite = cables::verify_mountain_ranges(cables::VerifyOptions{});
    require(suite.cases > 0, "sweep ran no cases");
    std::string notes;
    for (const auto& n : suite.notes) notes += "\n    " + n;
    require(suite.passed(),
            std::to_string(suite.failures) + " range mismatches" + notes);
    return std::to_string(suite.cases) + " random atlases match the closure";
  }});

  criteria.push_back({"utp-grid-coverage", 1000, [] {
    auto suite = cables::verify_utp_coverage(cables::VerifyOptions{});
    require(suite.cases > 0, "grid was empty");
    std::string notes;
    for (const auto& n : suite.notes) notes += "\n    " + n;
    require(suite.passed(),
            std::to_string(suite.failures) + " uncovered slopes" + notes);
    return std::to_string(suite.cases) + " grid slopes all covered";
  }});

  criteria.push_back({"transverse-torus-grid", 1000, [&unknot] {
    int cases = 0;
    for (Int p = 2; p <= 10; ++p)
      for (Int q = 2; q <= 10; ++q) {
        if (gcd(p, q) != 1) continue;
        ++cases;
        auto res = cables::positive_cable(unknot, cables::CableSpec(p, q));
        Int sl = cables::transverse_classes(*res.atlas, Int(0)).sl_max;
        Int expected = p * q - p - q;
        require(sl == expected, "(" + p.str() + "," + q.str() + "): sl_max " +
                                    sl.str() + " != " + expected.str());
      }
    return std::to_string(cases) + " coprime pairs, sl_max = pq - p - q";
  }});

  criteria.push_back({"round-trip-and-determinism", 5000, [&cli, &data] {
    int files = 0;
    for (const std::string& name :
         {std::string("unknot"), std::string("trefoil-right"),
          std::string("trefoil-left"), std::string("torus-neg-5-2")}) {
      ++files;
      std::string bytes = read_file(data + "/" + name + ".json");
      KnotAtlas first = cables::parse_atlas_file(bytes);
      std::string serialized = cables::serialize_atlas(first);
      KnotAtlas second = cables::parse_atlas_file(serialized);
      require(cables::same_classification(first, second) &&
                  first.name == second.name,
              name + ": parse(serialize(parse)) changed the atlas");
      require(cables::serialize_atlas(second) == serialized,
              name + ": reserialization is not byte-identical");
    }

    std::string classify_cmd =
        shell_quote(cli) + " classify --builtin unknot --cable 2/3";
    RunResult c1 = run_command(classify_cmd);
    RunResult c2 = run_command(classify_cmd);
    require(c1.exit_code == 0 && c1.output == c2.output,
            "classify is not byte-deterministic");

    std::string svg1 = "acceptance-range-1.svg";
    std::string svg2 = "acceptance-range-2.svg";
    std::string range_cmd = shell_quote(cli) +
                            " range --builtin unknot --floor=-4 --svg ";
    RunResult r1 = run_command(range_cmd + shell_quote(svg1));
    RunResult r2 = run_command(range_cmd + shell_quote(svg2));
    require(r1.exit_code == 0 && r1.output == r2.output,
            "range output is not byte-deterministic");
    require(read_file(svg1) == read_file(svg2),
            "rendered SVG is not byte-deterministic");
    std::remove(svg1.c_str());
    std::remove(svg2.c_str());

    return std::to_string(files) +
           " fixtures round-trip; classify and range deterministic";
  }});

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const Criterion& c = criteria[i];
    auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = true;
    try {
      detail = c.run();
    } catch (const std::exception& e) {
      ok = false;
      detail = e.what();
    }
    auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - start)
                       .count();
    if (ok && elapsed > c.budget_ms) {
      ok = false;
      detail = "took " + std::to_string(elapsed) + " ms, budget " +
               std::to_string(c.budget_ms) + " ms";
    }
    if (!ok) ++failures;
    std::cout << (ok ? "PASS" : "FAIL") << "  " << (i + 1) << "/"
              << criteria.size() << " " << c.name << ": " << detail << " ("
              << elapsed << " ms)\n";
  }

  if (failures == 0)
    std::cout << "all " << criteria.size() << " criteria passed\n";
  else
    std::cout << failures << " of " << criteria.size()
              << " criteria FAILED\n";
  return failures;
}
