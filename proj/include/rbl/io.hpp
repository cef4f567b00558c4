#pragma once

#include <string>

#include <json.hpp>

#include "rbl/core.hpp"

namespace rbl {

using Json = nlohmann::json;

// {"matrix": [[...]], "n": N}; keys serialize in sorted order. Reading also
// accepts construction output, which nests this under "coloring".
auto to_json(const Coloring& c) -> Json;
auto coloring_from_json(const Json& j) -> Coloring;

auto to_json(const PatternSpec& p) -> Json;
auto to_json(const Subcopy& s) -> Json;
auto subcopy_from_json(const Json& j) -> Subcopy;

auto read_json_file(const std::string& path) -> Json;
void write_text_file(const std::string& path, const std::string& text);

}  // namespace rbl
