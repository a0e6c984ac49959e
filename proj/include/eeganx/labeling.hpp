#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "eeganx/recording.hpp"

namespace eeganx {

enum class Quadrant { LVLA, HVLA, LVHA, HVHA };
const char* to_string(Quadrant q);

// valence <= 5 counts as Low, arousal >= 5 counts as High, so the (5,5)
// midpoint lands in LVHA
Quadrant quadrant(const SamRating& r);

// Severity thresholds over the LVHA region. The defaults are calibratable
// against a dataset's published class counts; they live in configuration.
struct LabelRule {
  int severe_valence_max = 2;
  int severe_arousal_min = 6;
  int moderate_valence_max = 4;
  int moderate_arousal_min = 5;

  void validate() const;
  std::string serialize() const;  // key=value lines
  static LabelRule parse(const std::string& text);
};

Severity label4(const SamRating& r, const LabelRule& rule);
// normal/light regroup to "light", moderate/severe to "severe"
BinaryLevel regroup(Severity s);
AnxietyLabel label_trial(const SamRating& r, const LabelRule& rule);

enum class SdConvention { population, sample };

struct SituationStats {
  double valence_mean = 0.0, valence_sd = 0.0;
  double arousal_mean = 0.0, arousal_sd = 0.0;
  double valence_cv = 0.0, arousal_cv = 0.0;
  std::size_t count = 0;
};

struct RatingStats {
  std::map<int, SituationStats> per_situation;
  double mean_valence_cv = 0.0;  // averaged across situations
  double mean_arousal_cv = 0.0;
};

// one (situation, rating) row per trial
struct RatingRow {
  std::string subject;
  int situation = 0;
  SamRating rating;
};

RatingStats rating_stats(const std::vector<RatingRow>& rows,
                         SdConvention sd = SdConvention::population);

// class counts under a rule, indexed by Severity
std::array<std::size_t, 4> class_counts(const std::vector<RatingRow>& rows,
                                        const LabelRule& rule);

struct CalibrationResult {
  LabelRule rule;
  std::array<std::size_t, 4> counts{};
  std::size_t mismatch = 0;  // total absolute count error against the target
};

// grid-search the four thresholds for the rule whose counts best match the
// target; exact matches report mismatch = 0
CalibrationResult calibrate_rule(const std::vector<RatingRow>& rows,
                                 const std::array<std::size_t, 4>& target);

std::vector<RatingRow> parse_ratings_table(const std::string& text);
std::string write_ratings_table(const std::vector<RatingRow>& rows);

}  // namespace eeganx
