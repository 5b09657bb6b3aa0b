#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "vboe/mbqc/pattern.h"

namespace vboe::mbqc {

// Pattern description file:
//
//   {
//     "vertices": [0, 1, 2],
//     "edges":    [[0, 1], [1, 2]],
//     "inputs":   [0],
//     "outputs":  [2],
//     "angles":   {"0": 1, "1": 6, "2": 0},   // units of pi/4, any integer
//     "flow":     {"0": 1, "1": 2},
//     "order":    [0, 1, 2]
//   }
//
// "angles" may omit vertices (default 0). Unknown keys are rejected. Errors
// carry a "line L" prefix pointing at the offending key.
MeasurementPattern parse_pattern(std::string_view text);
MeasurementPattern load_pattern(const std::filesystem::path& path);
std::string pattern_to_json(const MeasurementPattern& pattern);

// 1-based line of the byte at `offset`.
std::size_t line_of_offset(std::string_view text, std::size_t offset);

}  // namespace vboe::mbqc
