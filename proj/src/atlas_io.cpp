#include "cables/atlas_io.hpp"

#include <json.hpp>

#include <stdexcept>

namespace cables {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw std::invalid_argument(path + ": " + what);
}

std::string type_name(const json& v) {
  switch (v.type()) {
    case json::value_t::null:
      return "null";
    case json::value_t::boolean:
      return "a boolean";
    case json::value_t::number_integer:
    case json::value_t::number_unsigned:
      return "an integer";
    case json::value_t::number_float:
      return "a non-integer number";
    case json::value_t::string:
      return "a string";
    case json::value_t::array:
      return "an array";
    case json::value_t::object:
      return "an object";
    default:
      return "an unsupported value";
  }
}

const json& field(const json& obj, const std::string& path,
                  const std::string& key) {
  auto it = obj.find(key);
  if (it == obj.end())
    fail(path.empty() ? key : path + "." + key, "required field is missing");
  return *it;
}

// Integers arrive as JSON numbers when they fit and as decimal strings
// when they do not; both directions are accepted everywhere.
Int read_int(const json& v, const std::string& path) {
  if (v.is_number_integer()) return Int(v.get<std::int64_t>());
  if (v.is_number_unsigned()) return Int(v.get<std::uint64_t>());
  if (v.is_string()) {
    try {
      return parse_int(v.get<std::string>());
    } catch (const std::invalid_argument& e) {
      fail(path, e.what());
    }
  }
  fail(path, "expected an integer or a decimal string, got " + type_name(v));
}

json write_int(const Int& x) {
  if (fits_int64(x)) return json(x.convert_to<std::int64_t>());
  return json(x.str());
}

bool read_bool(const json& v, const std::string& path) {
  if (!v.is_boolean()) fail(path, "expected a boolean, got " + type_name(v));
  return v.get<bool>();
}

json atlas_to_json(const KnotAtlas& a) {
  json j;
  j["schema_version"] = "1";
  j["name"] = a.name;
  json peaks = json::array();
  for (const Peak& p : a.peaks)
    peaks.push_back(json{{"tb", write_int(p.tb)}, {"rot", write_int(p.rot)}});
  j["peaks"] = std::move(peaks);
  if (a.width.is_known())
    j["width"] = write_int(a.width.value());
  else
    j["width"] = "unknown";
  if (a.lower_width.is_known())
    j["lower_width"] = write_int(a.lower_width.value());
  else if (a.lower_width.is_infinite())
    j["lower_width"] = "infinity";
  else
    j["lower_width"] = "unknown";
  j["legendrian_simple"] = a.legendrian_simple;
  j["utp"] = a.utp;
  return j;
}

KnotAtlas atlas_from_json(const json& j) {
  if (!j.is_object())
    fail("(root)", "expected an object, got " + type_name(j));

  const json& version = field(j, "", "schema_version");
  if (!version.is_string() || version.get<std::string>() != "1")
    fail("schema_version", "expected the string \"1\", got " + version.dump());

  KnotAtlas a;
  const json& name = field(j, "", "name");
  if (!name.is_string()) fail("name", "expected a string, got " + type_name(name));
  a.name = name.get<std::string>();

  const json& peaks = field(j, "", "peaks");
  if (!peaks.is_array())
    fail("peaks", "expected an array, got " + type_name(peaks));
  for (std::size_t i = 0; i < peaks.size(); ++i) {
    std::string path = "peaks[" + std::to_string(i) + "]";
    const json& entry = peaks[i];
    if (!entry.is_object())
      fail(path, "expected an object, got " + type_name(entry));
    Peak p;
    p.tb = read_int(field(entry, path, "tb"), path + ".tb");
    p.rot = read_int(field(entry, path, "rot"), path + ".rot");
    a.peaks.push_back(std::move(p));
  }
  if (a.peaks.empty()) fail("peaks", "must contain at least one peak");

  Int tb_bar = a.max_tb();
  const json& width = field(j, "", "width");
  if (width.is_string() && width.get<std::string>() == "unknown")
    a.width = Width::unknown(tb_bar, tb_bar + 1);
  else
    a.width = Width::known(read_int(width, "width"));

  const json& lower = field(j, "", "lower_width");
  if (lower.is_string() && lower.get<std::string>() == "infinity")
    a.lower_width = LowerWidth::infinite();
  else if (lower.is_string() && lower.get<std::string>() == "unknown")
    a.lower_width = LowerWidth::unknown();
  else
    a.lower_width = LowerWidth::known(read_int(lower, "lower_width"));

  a.legendrian_simple =
      read_bool(field(j, "", "legendrian_simple"), "legendrian_simple");
  a.utp = read_bool(field(j, "", "utp"), "utp");

  ensure_valid(a);
  return a;
}

}  // namespace

KnotAtlas parse_atlas_file(const std::string& bytes) {
  json j;
  try {
    j = json::parse(bytes);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("malformed atlas file: ") +
                                e.what());
  }
  return atlas_from_json(j);
}

std::string serialize_atlas(const KnotAtlas& a) {
  return atlas_to_json(a).dump(2) + "\n";
}

KnotAtlas builtin_atlas(const std::string& name) {
  if (name == "unknot") {
    KnotAtlas a;
    a.name = "unknot";
    a.peaks = {Peak{-1, 0}};
    a.width = Width::known(0);
    a.lower_width = LowerWidth::infinite();
    a.legendrian_simple = true;
    a.utp = false;
    return a;
  }
  if (name.rfind("torus-", 0) == 0) {
    // e.g. "torus-2-3": not built in, but one cabling step away.
    std::string rest = name.substr(6);
    auto dash = rest.rfind('-');
    if (dash != std::string::npos && dash > 0) {
      std::string p = rest.substr(0, dash), q = rest.substr(dash + 1);
      throw std::invalid_argument(
          "\"" + name + "\" is not built in; torus knots are cables of the "
          "unknot — try `classify --builtin unknot --cable " + p + "/" + q +
          "`");
    }
  }
  std::string available;
  for (const std::string& known : builtin_atlas_names()) {
    if (!available.empty()) available += ", ";
    available += known;
  }
  throw std::invalid_argument("unknown builtin atlas \"" + name +
                              "\"; available: " + available);
}

std::vector<std::string> builtin_atlas_names() { return {"unknot"}; }

std::string serialize_cable_result(const CableResult& result) {
  json j;
  if (result.atlas)
    j = atlas_to_json(*result.atlas);
  else
    j["schema_version"] = "1";
  switch (result.regime.kind()) {
    case Regime::Kind::SufficientlyPositive:
      j["regime"] = "sufficiently_positive";
      break;
    case Regime::Kind::SufficientlyNegative:
      j["regime"] = "sufficiently_negative";
      break;
    case Regime::Kind::Uncovered:
      j["regime"] = "uncovered";
      j["reason"] = reason_code(result.regime.reason());
      break;
  }
  if (result.level_n) j["level_n"] = write_int(*result.level_n);
  return j.dump(2) + "\n";
}

}  // namespace cables
