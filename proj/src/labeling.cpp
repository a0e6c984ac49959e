#include "eeganx/labeling.hpp"

#include <cmath>
#include <sstream>

#include "eeganx/error.hpp"

namespace eeganx {

const char* to_string(Quadrant q) {
  switch (q) {
    case Quadrant::LVLA: return "LVLA";
    case Quadrant::HVLA: return "HVLA";
    case Quadrant::LVHA: return "LVHA";
    case Quadrant::HVHA: return "HVHA";
  }
  return "?";
}

Quadrant quadrant(const SamRating& r) {
  if (!r.valid())
    throw Error(errc::bad_argument, "SAM rating out of the 1..9 range");
  const bool low_valence = r.valence <= 5;
  const bool high_arousal = r.arousal >= 5;
  if (low_valence) return high_arousal ? Quadrant::LVHA : Quadrant::LVLA;
  return high_arousal ? Quadrant::HVHA : Quadrant::HVLA;
}

void LabelRule::validate() const {
  auto in_range = [](int v) { return v >= 1 && v <= 9; };
  if (!in_range(severe_valence_max) || !in_range(severe_arousal_min) ||
      !in_range(moderate_valence_max) || !in_range(moderate_arousal_min))
    throw Error(errc::bad_argument, "label rule thresholds must be in 1..9");
  // severity must weakly increase towards low valence / high arousal
  if (severe_valence_max > moderate_valence_max ||
      severe_arousal_min < moderate_arousal_min)
    throw Error(errc::bad_argument,
                "severe region must be contained in the moderate region");
}

std::string LabelRule::serialize() const {
  std::ostringstream os;
  os << "severe_valence_max = " << severe_valence_max << "\n"
     << "severe_arousal_min = " << severe_arousal_min << "\n"
     << "moderate_valence_max = " << moderate_valence_max << "\n"
     << "moderate_arousal_min = " << moderate_arousal_min << "\n";
  return os.str();
}

LabelRule LabelRule::parse(const std::string& text) {
  LabelRule rule;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty() || line[0] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw Error(errc::bad_format, "label rule line has no '=': " + line);
    auto trim = [](std::string s) {
      const auto b = s.find_first_not_of(" \t");
      const auto e = s.find_last_not_of(" \t\r");
      return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    int v = 0;
    try {
      v = std::stoi(value);
    } catch (const std::exception&) {
      throw Error(errc::bad_format, "bad threshold for " + key + ": '" + value + "'");
    }
    if (key == "severe_valence_max") rule.severe_valence_max = v;
    else if (key == "severe_arousal_min") rule.severe_arousal_min = v;
    else if (key == "moderate_valence_max") rule.moderate_valence_max = v;
    else if (key == "moderate_arousal_min") rule.moderate_arousal_min = v;
    else throw Error(errc::bad_format, "unknown label rule key: " + key);
  }
  rule.validate();
  return rule;
}

Severity label4(const SamRating& r, const LabelRule& rule) {
  if (!r.valid())
    throw Error(errc::bad_argument, "SAM rating out of the 1..9 range");
  if (quadrant(r) != Quadrant::LVHA) return Severity::normal;
  if (r.valence <= rule.severe_valence_max && r.arousal >= rule.severe_arousal_min)
    return Severity::severe;
  if (r.valence <= rule.moderate_valence_max && r.arousal >= rule.moderate_arousal_min)
    return Severity::moderate;
  return Severity::light;
}

BinaryLevel regroup(Severity s) {
  return (s == Severity::normal || s == Severity::light) ? BinaryLevel::light
                                                         : BinaryLevel::severe;
}

AnxietyLabel label_trial(const SamRating& r, const LabelRule& rule) {
  AnxietyLabel l;
  l.four_level = label4(r, rule);
  l.two_level = regroup(l.four_level);
  return l;
}

namespace {

std::pair<double, double> mean_sd(const std::vector<double>& v, SdConvention sd) {
  const double n = static_cast<double>(v.size());
  double m = 0.0;
  for (double x : v) m += x;
  m /= n;
  double acc = 0.0;
  for (double x : v) acc += (x - m) * (x - m);
  double s = 0.0;
  if (v.size() > 1)
    s = std::sqrt(acc / (sd == SdConvention::population ? n : n - 1.0));
  return {m, s};
}

}  // namespace

RatingStats rating_stats(const std::vector<RatingRow>& rows, SdConvention sd) {
  std::map<int, std::pair<std::vector<double>, std::vector<double>>> grouped;
  for (const auto& row : rows) {
    if (!row.rating.valid())
      throw Error(errc::bad_argument, "SAM rating out of the 1..9 range");
    grouped[row.situation].first.push_back(row.rating.valence);
    grouped[row.situation].second.push_back(row.rating.arousal);
  }
  if (grouped.empty()) throw Error(errc::bad_argument, "no ratings to summarize");

  RatingStats stats;
  double cv_v = 0.0, cv_a = 0.0;
  for (const auto& [situation, va] : grouped) {
    SituationStats s;
    s.count = va.first.size();
    std::tie(s.valence_mean, s.valence_sd) = mean_sd(va.first, sd);
    std::tie(s.arousal_mean, s.arousal_sd) = mean_sd(va.second, sd);
    s.valence_cv = s.valence_mean != 0.0 ? s.valence_sd / s.valence_mean : 0.0;
    s.arousal_cv = s.arousal_mean != 0.0 ? s.arousal_sd / s.arousal_mean : 0.0;
    cv_v += s.valence_cv;
    cv_a += s.arousal_cv;
    stats.per_situation[situation] = s;
  }
  const double groups = static_cast<double>(grouped.size());
  stats.mean_valence_cv = cv_v / groups;
  stats.mean_arousal_cv = cv_a / groups;
  return stats;
}

std::array<std::size_t, 4> class_counts(const std::vector<RatingRow>& rows,
                                        const LabelRule& rule) {
  std::array<std::size_t, 4> counts{};
  for (const auto& row : rows)
    ++counts[static_cast<std::size_t>(label4(row.rating, rule))];
  return counts;
}

CalibrationResult calibrate_rule(const std::vector<RatingRow>& rows,
                                 const std::array<std::size_t, 4>& target) {
  CalibrationResult best;
  best.mismatch = static_cast<std::size_t>(-1);
  for (int sv = 1; sv <= 9; ++sv)
    for (int sa = 1; sa <= 9; ++sa)
      for (int mv = sv; mv <= 9; ++mv)
        for (int ma = 1; ma <= sa; ++ma) {
          const LabelRule rule{sv, sa, mv, ma};
          const auto counts = class_counts(rows, rule);
          std::size_t miss = 0;
          for (std::size_t i = 0; i < 4; ++i)
            miss += counts[i] > target[i] ? counts[i] - target[i] : target[i] - counts[i];
          if (miss < best.mismatch) {
            best.rule = rule;
            best.counts = counts;
            best.mismatch = miss;
            if (miss == 0) return best;
          }
        }
  return best;
}

std::vector<RatingRow> parse_ratings_table(const std::string& text) {
  std::vector<RatingRow> rows;
  std::istringstream is(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    for (char& c : line)
      if (c == ',' || c == '\t') c = ' ';
    std::istringstream ls(line);
    RatingRow row;
    if (!(ls >> row.subject >> row.situation >> row.rating.valence >> row.rating.arousal))
      throw Error(errc::bad_format,
                  "ratings table line " + std::to_string(lineno) +
                      ": expected 'subject situation valence arousal'");
    if (row.subject == "subject") continue;  // tolerate a header row
    if (!row.rating.valid() || row.situation < 1)
      throw Error(errc::bad_format,
                  "ratings table line " + std::to_string(lineno) + ": values out of range");
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string write_ratings_table(const std::vector<RatingRow>& rows) {
  std::ostringstream os;
  os << "# subject situation valence arousal\n";
  for (const auto& r : rows)
    os << r.subject << ' ' << r.situation << ' ' << r.rating.valence << ' '
       << r.rating.arousal << '\n';
  return os.str();
}

}  // namespace eeganx
