#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "eeganx/error.hpp"

namespace eeganx {

// Emotiv EPOC montage used by the DASPS recordings, in acquisition order.
inline constexpr std::array<const char*, 14> kEegChannels = {
    "AF3", "F7", "F3", "FC5", "T7",  "P7", "O1",
    "O2",  "P8", "T8", "FC6", "F4",  "F8", "AF4"};

inline constexpr double kEegSampleRateHz = 128.0;

inline bool is_eeg_channel(const std::string& name) {
  for (const char* c : kEegChannels)
    if (name == c) return true;
  return false;
}

struct SamRating {
  int valence = 0;  // 1..9, negative -> positive
  int arousal = 0;  // 1..9, calm -> excited

  bool valid() const {
    return valence >= 1 && valence <= 9 && arousal >= 1 && arousal <= 9;
  }
};

enum class Severity { normal = 0, light = 1, moderate = 2, severe = 3 };
enum class BinaryLevel { light = 0, severe = 1 };

const char* to_string(Severity s);
const char* to_string(BinaryLevel s);
Severity severity_from_string(const std::string& s);

struct AnxietyLabel {
  Severity four_level = Severity::normal;
  BinaryLevel two_level = BinaryLevel::light;
};

struct Recording {
  std::vector<std::string> channels;
  double sample_rate = 0.0;                 // Hz
  std::vector<std::vector<double>> data;    // [channel][sample], microvolts
  std::string subject_id;
  std::vector<bool> non_eeg;                // per channel, e.g. mastoid refs
  std::size_t edge_transient = 0;           // leading/trailing samples distorted by filtering

  std::size_t num_samples() const { return data.empty() ? 0 : data.front().size(); }
  double duration_s() const {
    return sample_rate > 0 ? static_cast<double>(num_samples()) / sample_rate : 0.0;
  }

  void validate() const;
  bool is_dasps_layout() const;
};

struct Trial {
  std::string subject_id;
  int situation = 0;   // 1..6
  int sub_index = 0;   // 0-based window index inside the 30 s parent
  double duration_s = 0.0;
  double sample_rate = 0.0;
  std::vector<std::string> channels;
  std::vector<std::vector<double>> data;  // [channel][sample]
  SamRating rating;
  std::optional<AnxietyLabel> label;
  std::size_t leading_transient = 0;   // filter-transient samples at the head
  std::size_t trailing_transient = 0;  // and at the tail

  std::size_t num_samples() const { return data.empty() ? 0 : data.front().size(); }

  // Samples excluding any filter transient (non-empty for valid trials).
  std::vector<std::vector<double>> valid_data() const;

  void validate() const;
};

}  // namespace eeganx
