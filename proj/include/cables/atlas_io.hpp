#pragma once

#include <string>
#include <vector>

#include "cables/atlas.hpp"
#include "cables/cabling.hpp"

namespace cables {

// Parses and validates an atlas file (UTF-8 JSON, schema_version "1").
// Errors carry the path of the offending field. Unknown keys are
// ignored, which lets a serialized classification result be fed back in
// as a plain atlas.
KnotAtlas parse_atlas_file(const std::string& bytes);

// Canonical serialization: sorted keys, two-space indent, trailing
// newline. parse(serialize(parse(f))) == parse(f) for every valid f.
std::string serialize_atlas(const KnotAtlas& a);

// Atlases shipped with the tool. Unknown names raise an error listing
// what is available; names of the form "torus-P-Q" get a hint that torus
// knots are derived by cabling, not built in.
KnotAtlas builtin_atlas(const std::string& name);
std::vector<std::string> builtin_atlas_names();

// Classification results use the atlas schema plus "regime", and
// "reason" (uncovered) or "level_n" (sufficiently negative).
std::string serialize_cable_result(const CableResult& result);

}  // namespace cables
