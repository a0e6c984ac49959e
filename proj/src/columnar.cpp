#include "eeganx/columnar.hpp"

#include <charconv>
#include <cstdio>
#include <map>
#include <sstream>

#include "eeganx/error.hpp"

namespace eeganx {

namespace {

void append_sample(std::string& out, double v) {
  char buf[40];
  const int n = std::snprintf(buf, sizeof(buf), "%.17g", v);
  out.append(buf, static_cast<std::size_t>(n));
}

std::vector<std::string> split_csv(std::string_view s) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (start <= s.size()) {
    const std::size_t comma = s.find(',', start);
    if (comma == std::string_view::npos) {
      parts.emplace_back(s.substr(start));
      break;
    }
    parts.emplace_back(s.substr(start, comma - start));
    start = comma + 1;
  }
  return parts;
}

// header line: "#" then space-separated key=value tokens
std::map<std::string, std::string> parse_header_line(std::string_view line) {
  if (line.empty() || line[0] != '#')
    throw Error(errc::bad_format, "columnar block must start with a '#' header line");
  std::map<std::string, std::string> kv;
  std::size_t i = 1;
  while (i < line.size()) {
    while (i < line.size() && line[i] == ' ') ++i;
    if (i >= line.size()) break;
    const std::size_t sp = line.find(' ', i);
    const std::string_view tok = line.substr(i, sp == std::string_view::npos ? line.size() - i
                                                                             : sp - i);
    const std::size_t eq = tok.find('=');
    if (eq == std::string_view::npos)
      throw Error(errc::bad_format, "malformed columnar header token: '" + std::string(tok) + "'");
    kv[std::string(tok.substr(0, eq))] = std::string(tok.substr(eq + 1));
    if (sp == std::string_view::npos) break;
    i = sp + 1;
  }
  if (!kv.count("channels") || !kv.count("rate"))
    throw Error(errc::bad_format, "columnar header needs channels= and rate=");
  return kv;
}

double parse_double_field(const std::string& s, const char* what) {
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (end != s.c_str() + s.size() || s.empty())
    throw Error(errc::bad_format, std::string("bad numeric value for ") + what + ": '" + s + "'");
  return v;
}

long parse_int_field(const std::string& s, const char* what) {
  char* end = nullptr;
  const long v = std::strtol(s.c_str(), &end, 10);
  if (end != s.c_str() + s.size() || s.empty())
    throw Error(errc::bad_format, std::string("bad integer value for ") + what + ": '" + s + "'");
  return v;
}

struct Block {
  std::map<std::string, std::string> header;
  std::vector<std::vector<double>> columns;  // [channel][sample]
};

std::vector<Block> parse_blocks(std::string_view text) {
  std::vector<Block> blocks;
  std::size_t pos = 0;
  std::size_t lineno = 0;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    pos = eol + 1;
    ++lineno;

    if (line.empty()) continue;
    if (line[0] == '#') {
      Block b;
      b.header = parse_header_line(line);
      const auto names = split_csv(b.header.at("channels"));
      if (names.size() == 1 && names[0].empty())
        throw Error(errc::bad_format, "columnar header has an empty channel list");
      b.columns.assign(names.size(), {});
      blocks.push_back(std::move(b));
      continue;
    }
    if (blocks.empty())
      throw Error(errc::bad_format, "columnar data before any header line");

    auto& cols = blocks.back().columns;
    const char* p = line.data();
    const char* end = line.data() + line.size();
    std::size_t col = 0;
    while (p < end) {
      while (p < end && (*p == ' ' || *p == '\t')) ++p;
      if (p >= end) break;
      double v = 0.0;
      const auto res = std::from_chars(p, end, v);
      if (res.ec != std::errc())
        throw Error(errc::bad_format,
                    "bad sample value at line " + std::to_string(lineno));
      p = res.ptr;
      if (col >= cols.size())
        throw Error(errc::bad_format,
                    "ragged row (too many values) at line " + std::to_string(lineno));
      cols[col].push_back(v);
      ++col;
    }
    if (col != cols.size())
      throw Error(errc::bad_format,
                  "ragged row (expected " + std::to_string(cols.size()) + " values, got " +
                      std::to_string(col) + ") at line " + std::to_string(lineno));
  }
  if (blocks.empty()) throw Error(errc::bad_format, "empty columnar input");
  return blocks;
}

void write_block_header(std::string& out, const Recording& rec,
                        const std::string& extra) {
  out += "#channels=";
  for (std::size_t i = 0; i < rec.channels.size(); ++i) {
    if (i) out += ',';
    out += rec.channels[i];
  }
  out += " rate=";
  append_sample(out, rec.sample_rate);
  out += " subject=";
  out += rec.subject_id;
  out += extra;
  out += '\n';
}

void write_rows(std::string& out, const std::vector<std::vector<double>>& data) {
  const std::size_t n = data.empty() ? 0 : data.front().size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t c = 0; c < data.size(); ++c) {
      if (c) out += ' ';
      append_sample(out, data[c][i]);
    }
    out += '\n';
  }
}

}  // namespace

std::string write_columnar(const Recording& rec) {
  rec.validate();
  std::string out;
  out.reserve(rec.num_samples() * rec.channels.size() * 20 + 128);
  std::string extra;
  if (rec.edge_transient > 0)
    extra = " transient=" + std::to_string(rec.edge_transient);
  write_block_header(out, rec, extra);
  write_rows(out, rec.data);
  return out;
}

Recording read_columnar(std::string_view text) {
  const auto blocks = parse_blocks(text);
  if (blocks.size() != 1)
    throw Error(errc::bad_format, "expected a single columnar block");
  const Block& b = blocks.front();

  Recording rec;
  rec.channels = split_csv(b.header.at("channels"));
  rec.sample_rate = parse_double_field(b.header.at("rate"), "rate");
  if (auto it = b.header.find("subject"); it != b.header.end()) rec.subject_id = it->second;
  if (auto it = b.header.find("transient"); it != b.header.end())
    rec.edge_transient = static_cast<std::size_t>(parse_int_field(it->second, "transient"));
  rec.data = b.columns;
  rec.non_eeg.clear();
  for (const auto& name : rec.channels) rec.non_eeg.push_back(!is_eeg_channel(name));
  rec.validate();
  return rec;
}

std::string write_trials_columnar(const std::vector<Trial>& trials) {
  if (trials.empty()) throw Error(errc::bad_argument, "no trials to write");
  std::string out;
  for (const Trial& t : trials) {
    t.validate();
    Recording view;
    view.channels = t.channels;
    view.sample_rate = t.sample_rate;
    view.subject_id = t.subject_id;
    view.data = t.data;
    std::string extra = " situation=" + std::to_string(t.situation) +
                        " sub=" + std::to_string(t.sub_index) +
                        " duration=" + std::to_string(t.duration_s) +
                        " valence=" + std::to_string(t.rating.valence) +
                        " arousal=" + std::to_string(t.rating.arousal) +
                        " lead=" + std::to_string(t.leading_transient) +
                        " trail=" + std::to_string(t.trailing_transient);
    write_block_header(out, view, extra);
    write_rows(out, t.data);
  }
  return out;
}

std::vector<Trial> read_trials_columnar(std::string_view text) {
  const auto blocks = parse_blocks(text);
  std::vector<Trial> trials;
  trials.reserve(blocks.size());
  for (const Block& b : blocks) {
    Trial t;
    t.channels = split_csv(b.header.at("channels"));
    t.sample_rate = parse_double_field(b.header.at("rate"), "rate");
    t.data = b.columns;
    auto get = [&](const char* key) -> const std::string& {
      auto it = b.header.find(key);
      if (it == b.header.end())
        throw Error(errc::bad_format, std::string("trial block missing ") + key + "=");
      return it->second;
    };
    if (auto it = b.header.find("subject"); it != b.header.end()) t.subject_id = it->second;
    t.situation = static_cast<int>(parse_int_field(get("situation"), "situation"));
    t.sub_index = static_cast<int>(parse_int_field(get("sub"), "sub"));
    t.duration_s = parse_double_field(get("duration"), "duration");
    t.rating.valence = static_cast<int>(parse_int_field(get("valence"), "valence"));
    t.rating.arousal = static_cast<int>(parse_int_field(get("arousal"), "arousal"));
    if (auto it = b.header.find("lead"); it != b.header.end())
      t.leading_transient = static_cast<std::size_t>(parse_int_field(it->second, "lead"));
    if (auto it = b.header.find("trail"); it != b.header.end())
      t.trailing_transient = static_cast<std::size_t>(parse_int_field(it->second, "trail"));
    t.validate();
    trials.push_back(std::move(t));
  }
  return trials;
}

}  // namespace eeganx
