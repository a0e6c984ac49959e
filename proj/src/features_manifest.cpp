#include "eeganx/features/manifest.hpp"

#include <set>
#include <sstream>

#include "eeganx/features/time_features.hpp"

namespace eeganx {

const std::vector<FamilyInfo>& all_families() {
  static const std::vector<FamilyInfo> families = {
      {FeatureFamily::hjorth, "hjorth", FeatureGroup::time},
      {FeatureFamily::hfd, "hfd", FeatureGroup::time},
      {FeatureFamily::welch_power, "welch_power", FeatureGroup::frequency},
      {FeatureFamily::sef, "sef", FeatureGroup::frequency},
      {FeatureFamily::asym, "asym", FeatureGroup::frequency},
      {FeatureFamily::dwt_power, "dwt_power", FeatureGroup::time_frequency},
      {FeatureFamily::dwt_rms, "dwt_rms", FeatureGroup::time_frequency},
      {FeatureFamily::hht, "hht", FeatureGroup::time_frequency},
      {FeatureFamily::qeeg, "qeeg", FeatureGroup::qeeg},
  };
  return families;
}

const char* to_string(FeatureFamily f) {
  for (const auto& info : all_families())
    if (info.family == f) return info.name;
  return "?";
}

FeatureFamily feature_family_from_string(const std::string& s) {
  for (const auto& info : all_families())
    if (s == info.name) return info.family;
  throw Error(errc::bad_argument, "unknown feature family: " + s);
}

std::size_t family_dim(FeatureFamily f, double duration_s) {
  const std::size_t nch = kEegChannels.size();
  switch (f) {
    case FeatureFamily::hjorth: return 3 * nch;
    case FeatureFamily::hfd: return nch;
    case FeatureFamily::welch_power: return kBands.size() * nch;
    case FeatureFamily::sef: return nch;
    case FeatureFamily::asym: return kAsymmetryPairs.size();
    case FeatureFamily::dwt_power: return kBands.size() * nch;
    case FeatureFamily::dwt_rms: return kBands.size() * nch;
    case FeatureFamily::hht: return hht_feature_dim(duration_s);
    case FeatureFamily::qeeg: return qeeg_reduced_names().size();
  }
  throw Error(errc::bad_argument, "unknown feature family");
}

FeatureVector welch_power_vector(const Trial& trial, const WelchConfig& cfg) {
  const auto idx = montage_indices(trial);
  const auto data = trial.valid_data();

  FeatureVector fv;
  fv.group = FeatureGroup::frequency;
  for (std::size_t c = 0; c < idx.size(); ++c) {
    const Psd psd = welch_psd(data[idx[c]], trial.sample_rate, cfg);
    const double df = psd.freqs.size() > 1 ? psd.freqs[1] - psd.freqs[0] : 1.0;
    for (Band b : kBands) {
      double acc = 0.0;
      for (std::size_t k = 0; k < psd.freqs.size(); ++k)
        if (psd.freqs[k] >= band_low_hz(b) && psd.freqs[k] < band_high_hz(b))
          acc += psd.power[k];
      fv.push("welch.power." + std::string(to_string(b)) + "." +
                  std::string(kEegChannels[c]),
              acc * df);
    }
  }
  return fv;
}

FeatureVector extract_family(const Trial& trial, FeatureFamily family,
                             const ExtractorConfig& cfg) {
  switch (family) {
    case FeatureFamily::hjorth: return hjorth_vector(trial, cfg.classical_hjorth);
    case FeatureFamily::hfd: return higuchi_vector(trial);
    case FeatureFamily::welch_power: return welch_power_vector(trial, cfg.qeeg.welch);
    case FeatureFamily::sef: return sef_vector(trial, cfg.qeeg);
    case FeatureFamily::asym: return asymmetry_index(trial, cfg.asym);
    case FeatureFamily::dwt_power: return dwt_power_vector(trial, cfg.include_delta);
    case FeatureFamily::dwt_rms: return dwt_rms_vector(trial, cfg.rms_mode);
    case FeatureFamily::hht: return hht_vector(trial, cfg.emd);
    case FeatureFamily::qeeg: return qeeg_vector(trial, cfg.qeeg);
  }
  throw Error(errc::bad_argument, "unknown feature family");
}

std::vector<FeatureFamily> parse_feature_selection(const std::string& selection) {
  std::set<FeatureFamily> chosen;
  std::stringstream ss(selection);
  std::string token;
  bool any = false;
  while (std::getline(ss, token, ',')) {
    const auto b = token.find_first_not_of(" \t");
    const auto e = token.find_last_not_of(" \t");
    if (b == std::string::npos) continue;
    token = token.substr(b, e - b + 1);
    any = true;
    if (token == "all") {
      for (const auto& info : all_families()) chosen.insert(info.family);
      continue;
    }
    bool matched = false;
    for (const auto& info : all_families()) {
      if (token == info.name) {
        chosen.insert(info.family);
        matched = true;
        break;
      }
      if (token == to_string(info.group)) {
        chosen.insert(info.family);
        matched = true;  // keep scanning: groups cover several families
      }
    }
    if (!matched)
      throw Error(errc::bad_argument, "unknown feature group or family: " + token);
  }
  if (!any || chosen.empty())
    throw Error(errc::bad_argument, "empty feature selection");

  std::vector<FeatureFamily> out;
  for (const auto& info : all_families())
    if (chosen.count(info.family)) out.push_back(info.family);
  return out;
}

FeatureVector extract_features(const Trial& trial,
                               const std::vector<FeatureFamily>& families,
                               const ExtractorConfig& cfg) {
  if (families.empty()) throw Error(errc::bad_argument, "empty feature selection");
  FeatureVector out;
  out.group = all_families()
                  .at(static_cast<std::size_t>(families.front()))
                  .group;  // representative; mixed selections keep the first
  for (FeatureFamily f : families) {
    const FeatureVector fv = extract_family(trial, f, cfg);
    const std::size_t expected = family_dim(f, trial.duration_s);
    if (!cfg.include_delta && fv.size() != expected)
      throw Error(errc::bad_argument,
                  std::string("family ") + to_string(f) + " produced " +
                      std::to_string(fv.size()) + " features, manifest expects " +
                      std::to_string(expected));
    out.append(fv);
  }
  return out;
}

std::vector<std::string> family_feature_names(FeatureFamily f, double duration_s) {
  std::vector<std::string> names;
  auto channels = [&](auto make) {
    for (const char* ch : kEegChannels) names.push_back(make(std::string(ch)));
  };
  auto bands_channels = [&](const std::string& prefix) {
    for (const char* ch : kEegChannels)
      for (Band b : kBands)
        names.push_back(prefix + "." + to_string(b) + "." + ch);
  };
  switch (f) {
    case FeatureFamily::hjorth:
      for (const char* ch : kEegChannels) {
        names.push_back(std::string("hjorth.activity.") + ch);
        names.push_back(std::string("hjorth.mobility.") + ch);
        names.push_back(std::string("hjorth.complexity.") + ch);
      }
      break;
    case FeatureFamily::hfd:
      channels([](const std::string& ch) { return "hfd." + ch; });
      break;
    case FeatureFamily::welch_power:
      for (const char* ch : kEegChannels)
        for (Band b : kBands)
          names.push_back("welch.power." + std::string(to_string(b)) + "." + ch);
      break;
    case FeatureFamily::sef:
      channels([](const std::string& ch) { return "welch.sef95." + ch; });
      break;
    case FeatureFamily::asym:
      for (const auto& p : kAsymmetryPairs)
        names.push_back(std::string("asym.") + p.left + "_" + p.right);
      break;
    case FeatureFamily::dwt_power:
      bands_channels("dwt.power");
      break;
    case FeatureFamily::dwt_rms:
      bands_channels("dwt.rms");
      break;
    case FeatureFamily::hht:
      for (std::size_t k = 0; k < hht_feature_dim(duration_s); ++k)
        names.push_back("hht.ied.imf" + std::to_string(k + 1));
      break;
    case FeatureFamily::qeeg:
      names = qeeg_reduced_names();
      break;
  }
  return names;
}

std::string feature_manifest_table(double duration_s) {
  std::ostringstream os;
  os << "# name\tfamily\tgroup\tper_band\tchannel_policy\n";
  for (const auto& info : all_families()) {
    if (info.family == FeatureFamily::qeeg) continue;
    for (const auto& name : family_feature_names(info.family, duration_s)) {
      const bool per_band = name.find(".theta.") != std::string::npos ||
                            name.find(".alpha.") != std::string::npos ||
                            name.find(".beta.") != std::string::npos ||
                            name.find(".gamma.") != std::string::npos;
      os << name << '\t' << info.name << '\t' << to_string(info.group) << '\t'
         << (per_band ? "yes" : "no") << "\tper channel\n";
    }
  }
  for (const auto& row : qeeg_manifest()) {
    os << row.name << "\tqeeg\tqeeg\t" << (row.per_band ? "yes" : "no") << '\t'
       << row.channel_policy << "\n";
  }
  return os.str();
}

}  // namespace eeganx
