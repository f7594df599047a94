#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "cables/atlas.hpp"
#include "cables/atlas_io.hpp"
#include "cables/cabling.hpp"
#include "cables/farey.hpp"
#include "cables/svg.hpp"
#include "cables/verify.hpp"

namespace {

using cables::Int;
using cables::KnotAtlas;

// Exit codes: 0 success, 1 uncovered classification, 2 bad input,
// 3 broken internal invariant.
constexpr int kOk = 0;
constexpr int kUncovered = 1;
constexpr int kInputError = 2;
constexpr int kInternalError = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw std::invalid_argument("cannot read atlas file \"" + path + "\"");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot write file \"" + path + "\"");
  out << content;
  if (!out) throw std::invalid_argument("failed writing file \"" + path + "\"");
}

// Shared --atlas/--builtin source selection.
struct AtlasSource {
  std::string file;
  std::string builtin;

  void add_options(CLI::App* cmd) {
    auto* file_opt =
        cmd->add_option("--atlas", file, "Atlas file to load (JSON)");
    auto* builtin_opt =
        cmd->add_option("--builtin", builtin, "Built-in atlas name");
    file_opt->excludes(builtin_opt);
    builtin_opt->excludes(file_opt);
  }

  KnotAtlas load() const {
    if (!builtin.empty()) return cables::builtin_atlas(builtin);
    if (!file.empty()) return cables::parse_atlas_file(read_file(file));
    throw std::invalid_argument("provide --atlas FILE or --builtin NAME");
  }
};

Int parse_int_option(const std::string& text, const char* what) {
  try {
    return cables::parse_int(text);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument(std::string(what) + " must be an integer, "
                                "got \"" + text + "\"");
  }
}

nlohmann::json peak_list_json(const std::set<std::pair<Int, Int>>& entries) {
  nlohmann::json list = nlohmann::json::array();
  for (const auto& [t, r] : entries) {
    nlohmann::json entry;
    entry["tb"] = cables::fits_int64(t) ? nlohmann::json(t.convert_to<long long>())
                                        : nlohmann::json(t.str());
    entry["rot"] = cables::fits_int64(r)
                       ? nlohmann::json(r.convert_to<long long>())
                       : nlohmann::json(r.str());
    list.push_back(std::move(entry));
  }
  return list;
}

int run_classify(const AtlasSource& source, const std::string& cable,
                 const std::string& out_path) {
  KnotAtlas atlas = source.load();
  cables::CableResult result =
      cables::classify_cable(atlas, cables::CableSpec::parse(cable));
  std::string text = cables::serialize_cable_result(result);
  std::cout << text;
  if (!out_path.empty()) write_file(out_path, text);
  return result.covered() ? kOk : kUncovered;
}

int run_iterate(const AtlasSource& source,
                const std::vector<std::string>& cables_arg) {
  KnotAtlas atlas = source.load();
  std::vector<cables::CableSpec> specs;
  for (const std::string& c : cables_arg)
    specs.push_back(cables::CableSpec::parse(c));
  std::vector<cables::CableResult> results =
      cables::iterate_cables(atlas, specs);
  nlohmann::json list = nlohmann::json::array();
  for (const cables::CableResult& r : results)
    list.push_back(nlohmann::json::parse(cables::serialize_cable_result(r)));
  std::cout << list.dump(2) << "\n";
  if (!results.empty() && !results.back().covered()) return kUncovered;
  return kOk;
}

int run_range(const AtlasSource& source, const std::string& floor_text,
              const std::string& svg_path) {
  KnotAtlas atlas = source.load();
  Int floor = floor_text.empty() ? Int(atlas.max_tb() - 8)
                                 : parse_int_option(floor_text, "--floor");
  cables::MountainRange range = cables::mountain_range(atlas, floor);
  nlohmann::json j;
  j["schema_version"] = "1";
  j["name"] = atlas.name;
  j["floor"] = cables::fits_int64(floor)
                   ? nlohmann::json(floor.convert_to<long long>())
                   : nlohmann::json(floor.str());
  j["entries"] = peak_list_json(range.entries);
  j["peaks"] = peak_list_json(range.peak_entries());
  std::cout << j.dump(2) << "\n";
  if (!svg_path.empty()) {
    cables::RenderSpec spec;
    spec.floor = floor;
    write_file(svg_path, cables::render_svg(range, spec));
  }
  return kOk;
}

int run_transverse(const AtlasSource& source, const std::string& depth_text) {
  KnotAtlas atlas = source.load();
  Int depth = depth_text.empty() ? Int(8)
                                 : parse_int_option(depth_text, "--depth");
  cables::TransverseClassification classes =
      cables::transverse_classes(atlas, depth);
  nlohmann::json j;
  j["schema_version"] = "1";
  j["name"] = atlas.name;
  j["sl_max"] = cables::fits_int64(classes.sl_max)
                    ? nlohmann::json(classes.sl_max.convert_to<long long>())
                    : nlohmann::json(classes.sl_max.str());
  nlohmann::json values = nlohmann::json::array();
  for (const Int& v : classes.sl_values)
    values.push_back(cables::fits_int64(v)
                         ? nlohmann::json(v.convert_to<long long>())
                         : nlohmann::json(v.str()));
  j["sl_values"] = std::move(values);
  std::cout << j.dump(2) << "\n";
  return kOk;
}

int run_render(const AtlasSource& source, const std::string& floor_text,
               const std::string& cell_text, bool labels,
               const std::string& out_path) {
  KnotAtlas atlas = source.load();
  cables::RenderSpec spec;
  spec.floor = floor_text.empty() ? Int(atlas.max_tb() - 8)
                                  : parse_int_option(floor_text, "--floor");
  if (!cell_text.empty()) spec.cell = parse_int_option(cell_text, "--cell");
  spec.labels = labels;
  cables::MountainRange range = cables::mountain_range(atlas, spec.floor);
  std::string svg = cables::render_svg(range, spec);
  if (out_path.empty())
    std::cout << svg;
  else
    write_file(out_path, svg);
  return kOk;
}

int run_farey_bypass(const std::string& s_text, const std::string& r_text,
                     const std::string& side_text) {
  cables::AttachmentSide side;
  if (side_text == "front")
    side = cables::AttachmentSide::Front;
  else if (side_text == "back")
    side = cables::AttachmentSide::Back;
  else
    throw std::invalid_argument("--side must be front or back, got \"" +
                                side_text + "\"");
  cables::Slope result = cables::bypass_slope(cables::Slope::parse(s_text),
                                              cables::Slope::parse(r_text),
                                              side);
  std::cout << result.str() << "\n";
  return kOk;
}

int run_verify_command(const cables::VerifyOptions& options) {
  cables::VerifyReport report = cables::run_verify(options);
  for (const cables::SuiteResult& suite : report.suites) {
    std::cout << (suite.passed() ? "PASS " : "FAIL ") << suite.name << ": "
              << suite.cases << " cases";
    if (!suite.passed()) std::cout << ", " << suite.failures << " failures";
    std::cout << "\n";
    for (const std::string& note : suite.notes)
      std::cout << "  " << note << "\n";
  }
  return report.all_passed() ? kOk : kInternalError;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Legendrian classification of cables from knot atlases"};
  app.require_subcommand(1);
  int exit_code = kOk;

  AtlasSource classify_source;
  std::string classify_cable, classify_out;
  CLI::App* classify = app.add_subcommand(
      "classify", "Classify one cable of the atlas knot");
  classify_source.add_options(classify);
  classify->add_option("--cable", classify_cable, "Cable as P/Q")->required();
  classify->add_option("--out", classify_out, "Also write the result here");
  classify->callback([&] {
    exit_code = run_classify(classify_source, classify_cable, classify_out);
  });

  AtlasSource iterate_source;
  std::vector<std::string> iterate_cables;
  CLI::App* iterate = app.add_subcommand(
      "iterate", "Classify a chain of cables, feeding each result forward");
  iterate_source.add_options(iterate);
  iterate->add_option("--cable", iterate_cables,
                      "Cable as P/Q; repeat for each step");
  iterate->callback(
      [&] { exit_code = run_iterate(iterate_source, iterate_cables); });

  AtlasSource range_source;
  std::string range_floor, range_svg;
  CLI::App* range = app.add_subcommand(
      "range", "Print the mountain range down to a tb floor");
  range_source.add_options(range);
  range->add_option("--floor", range_floor,
                    "tb cutoff (default: max tb - 8)");
  range->add_option("--svg", range_svg, "Also render the range here");
  range->callback(
      [&] { exit_code = run_range(range_source, range_floor, range_svg); });

  AtlasSource transverse_source;
  std::string transverse_depth;
  CLI::App* transverse = app.add_subcommand(
      "transverse", "Print the transverse classification");
  transverse_source.add_options(transverse);
  transverse->add_option("--depth", transverse_depth,
                         "How many self-linking values to list (default 8)");
  transverse->callback([&] {
    exit_code = run_transverse(transverse_source, transverse_depth);
  });

  AtlasSource render_source;
  std::string render_floor, render_cell, render_out;
  bool render_labels = false;
  CLI::App* render =
      app.add_subcommand("render", "Render the mountain range as SVG");
  render_source.add_options(render);
  render->add_option("--floor", render_floor,
                     "tb cutoff (default: max tb - 8)");
  render->add_option("--cell", render_cell, "Cell size in SVG units");
  render->add_flag("--labels", render_labels, "Label each marker");
  render->add_option("--out", render_out, "Write SVG here instead of stdout");
  render->callback([&] {
    exit_code = run_render(render_source, render_floor, render_cell,
                           render_labels, render_out);
  });

  CLI::App* farey =
      app.add_subcommand("farey", "Slope calculus helpers");
  farey->require_subcommand(1);
  std::string bypass_s, bypass_r, bypass_side;
  CLI::App* bypass = farey->add_subcommand(
      "bypass", "Dividing slope after a bypass attachment");
  bypass->add_option("--s", bypass_s, "Current dividing slope")->required();
  bypass->add_option("--r", bypass_r, "Ruling slope")->required();
  bypass->add_option("--side", bypass_side, "front or back")->required();
  bypass->callback([&] {
    exit_code = run_farey_bypass(bypass_s, bypass_r, bypass_side);
  });

  cables::VerifyOptions verify_options;
  std::string verify_bound, verify_inject;
  CLI::App* verify = app.add_subcommand(
      "verify", "Run the oracle suites against the library");
  verify->add_option("--farey-bound", verify_bound,
                     "Slope box bound for the bypass sweep (default 12)");
  verify->add_option("--atlases", verify_options.atlas_count,
                     "Random atlas count for the BFS suite (default 50)");
  verify->add_option("--inject-oracle-bound", verify_inject,
                     "Force the oracle's denominator bound (testing aid)");
  verify->callback([&] {
    if (!verify_bound.empty())
      verify_options.farey_bound = parse_int_option(verify_bound,
                                                    "--farey-bound");
    if (!verify_inject.empty())
      verify_options.oracle_bound_override =
          parse_int_option(verify_inject, "--inject-oracle-bound");
    exit_code = run_verify_command(verify_options);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::logic_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternalError;
  }
  return exit_code;
}
