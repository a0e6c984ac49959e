#include "eeganx/recording.hpp"

#include <cmath>
#include <set>

namespace eeganx {

const char* to_string(Severity s) {
  switch (s) {
    case Severity::normal: return "normal";
    case Severity::light: return "light";
    case Severity::moderate: return "moderate";
    case Severity::severe: return "severe";
  }
  return "?";
}

const char* to_string(BinaryLevel s) {
  return s == BinaryLevel::light ? "light" : "severe";
}

Severity severity_from_string(const std::string& s) {
  if (s == "normal") return Severity::normal;
  if (s == "light") return Severity::light;
  if (s == "moderate") return Severity::moderate;
  if (s == "severe") return Severity::severe;
  throw Error(errc::bad_format, "unknown severity label: " + s);
}

void Recording::validate() const {
  if (channels.empty())
    throw Error(errc::bad_argument, "recording has no channels");
  if (channels.size() != data.size())
    throw Error(errc::bad_argument, "channel name/data count mismatch");
  if (sample_rate <= 0.0)
    throw Error(errc::bad_argument, "sample rate must be positive");
  std::set<std::string> names(channels.begin(), channels.end());
  if (names.size() != channels.size())
    throw Error(errc::bad_argument, "duplicate channel names");
  const std::size_t n = data.front().size();
  for (const auto& ch : data)
    if (ch.size() != n)
      throw Error(errc::bad_argument, "channels have unequal lengths");
}

bool Recording::is_dasps_layout() const {
  if (sample_rate != kEegSampleRateHz) return false;
  std::size_t eeg = 0;
  for (std::size_t i = 0; i < channels.size(); ++i)
    if (non_eeg.empty() || !non_eeg[i])
      if (is_eeg_channel(channels[i])) ++eeg;
  return eeg == kEegChannels.size();
}

std::vector<std::vector<double>> Trial::valid_data() const {
  std::vector<std::vector<double>> out;
  out.reserve(data.size());
  const std::size_t n = num_samples();
  const std::size_t lead = leading_transient;
  const std::size_t trail = trailing_transient;
  if (lead + trail >= n)
    throw Error(errc::degenerate, "trial is entirely filter transient");
  for (const auto& ch : data)
    out.emplace_back(ch.begin() + static_cast<std::ptrdiff_t>(lead),
                     ch.end() - static_cast<std::ptrdiff_t>(trail));
  return out;
}

void Trial::validate() const {
  if (channels.size() != data.size())
    throw Error(errc::bad_argument, "trial channel name/data count mismatch");
  if (sample_rate <= 0.0)
    throw Error(errc::bad_argument, "trial sample rate must be positive");
  const std::size_t n = num_samples();
  for (const auto& ch : data)
    if (ch.size() != n)
      throw Error(errc::bad_argument, "trial channels have unequal lengths");
  const double expected = duration_s * sample_rate;
  if (std::abs(expected - static_cast<double>(n)) > 1e-9)
    throw Error(errc::bad_argument, "trial sample count does not match duration");
}

}  // namespace eeganx
