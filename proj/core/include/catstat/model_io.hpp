#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>

#include "catstat/group.hpp"
#include "catstat/model.hpp"

namespace catstat {

/// Run parameters stored next to a model definition.
struct ModelOptions {
  double tolerance = kDefaultTolerance;
  std::size_t n_max = 4;
};

struct ModelFile {
  ParticleModel model;
  ModelOptions options;
};

/// Parses a model document:
///   {"group": {"orders": [...]},
///    "bicharacter": {"Q": [["p/q", ...], ...]},
///    "generators": {"grades": [[...], ...], "pairing": [[[re, im], ...], ...]},
///    "braid": {"kind": "grade-diagonal"} | {"kind": "matrix", "R": [...]},
///    "cross": {"kind": "derived"} | {"kind": "matrix", "T": [...]},      (optional)
///    "options": {"tolerance": 1e-9, "n_max": 4, "expansion_sign": "+"}}  (optional)
/// Complex entries are [re, im] pairs or plain numbers. Raises Schema on any
/// malformed input.
ModelFile parse_model(std::string_view json_text);
ModelFile load_model(const std::filesystem::path& path);

/// Serializes a model back to the document format, pretty-printed with sorted keys.
std::string model_to_json(const ParticleModel& model, const ModelOptions& options = {});

/// {"target": {"orders": [...]}, "images": [[...], ...]}
GroupHom parse_hom(std::string_view json_text, const GroupSpec& source);

/// {"bicharacter": {"Q": [...]}} or {"Q": [...]}; an optional "group" must
/// agree with `group`.
Bicharacter parse_bicharacter(std::string_view json_text, const GroupSpec& group);

std::string read_text_file(const std::filesystem::path& path);

}  // namespace catstat
