#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "eeganx/recording.hpp"

namespace eeganx {

// Internal columnar text format. One header line
//   #channels=<csv> rate=<Hz> subject=<id>
// followed by one whitespace-separated row per sample instant. Samples are
// printed with full double precision (well past the 9 significant digits the
// format guarantees). Trial files add situation/sub/duration/valence/arousal
// key=value pairs to the header line; a file may contain several blocks.

std::string write_columnar(const Recording& rec);
Recording read_columnar(std::string_view text);

std::string write_trials_columnar(const std::vector<Trial>& trials);
std::vector<Trial> read_trials_columnar(std::string_view text);

}  // namespace eeganx
