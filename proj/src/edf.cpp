#include "eeganx/edf.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>

#include "eeganx/error.hpp"

namespace eeganx {

namespace {

constexpr std::size_t kMainHeaderBytes = 256;
constexpr std::size_t kPerSignalHeaderBytes = 256;

std::string trim_ascii(std::string_view raw) {
  std::size_t b = 0, e = raw.size();
  while (b < e && raw[b] == ' ') ++b;
  while (e > b && raw[e - 1] == ' ') --e;
  return std::string(raw.substr(b, e - b));
}

// Fixed-width reader over the header region. Never advances past the end
// of the span it was constructed with.
class FieldReader {
public:
  FieldReader(std::span<const std::uint8_t> bytes, std::size_t limit)
      : bytes_(bytes), limit_(std::min(limit, bytes.size())) {}

  std::string take(std::size_t width, const char* what) {
    if (pos_ + width > limit_)
      throw Error(errc::truncated, std::string("EDF header truncated reading ") + what);
    std::string_view raw(reinterpret_cast<const char*>(bytes_.data()) + pos_, width);
    pos_ += width;
    return trim_ascii(raw);
  }

  long take_int(std::size_t width, const char* what) {
    const std::string s = take(width, what);
    if (s.empty())
      throw Error(errc::bad_format, std::string("empty numeric EDF field: ") + what);
    char* end = nullptr;
    const long v = std::strtol(s.c_str(), &end, 10);
    if (end != s.c_str() + s.size())
      throw Error(errc::bad_format, std::string("non-numeric EDF field: ") + what + " = '" + s + "'");
    return v;
  }

  double take_double(std::size_t width, const char* what) {
    const std::string s = take(width, what);
    if (s.empty())
      throw Error(errc::bad_format, std::string("empty numeric EDF field: ") + what);
    char* end = nullptr;
    const double v = std::strtod(s.c_str(), &end);
    if (end != s.c_str() + s.size())
      throw Error(errc::bad_format, std::string("non-numeric EDF field: ") + what + " = '" + s + "'");
    return v;
  }

  std::size_t pos() const { return pos_; }

private:
  std::span<const std::uint8_t> bytes_;
  std::size_t limit_;
  std::size_t pos_ = 0;
};

void append_padded(std::string& out, const std::string& value, std::size_t width,
                   const char* what) {
  if (value.size() > width)
    throw Error(errc::bad_format,
                std::string("EDF field too long for ") + what + ": '" + value + "'");
  out += value;
  out.append(width - value.size(), ' ');
}

std::string format_number(double v, std::size_t width) {
  char buf[64];
  // integers are written without a decimal point; otherwise trim precision
  // until the text fits the fixed-width field
  if (v == std::floor(v) && std::abs(v) < 1e15) {
    std::snprintf(buf, sizeof(buf), "%.0f", v);
    if (std::strlen(buf) <= width) return buf;
  }
  for (int prec = static_cast<int>(width); prec >= 1; --prec) {
    std::snprintf(buf, sizeof(buf), "%.*g", prec, v);
    if (std::strlen(buf) <= width) return buf;
  }
  throw Error(errc::bad_format, "numeric value does not fit EDF field");
}

}  // namespace

void SignalHeader::validate() const {
  if (digital_min >= digital_max)
    throw Error(errc::bad_format, "signal '" + label + "': digital_min must be < digital_max");
  if (physical_min == physical_max)
    throw Error(errc::bad_format, "signal '" + label + "': physical_min equals physical_max");
  if (samples_per_record < 1)
    throw Error(errc::bad_format, "signal '" + label + "': samples_per_record must be >= 1");
}

double SignalHeader::decode(std::int16_t d) const {
  const double scale = (physical_max - physical_min) /
                       (static_cast<double>(digital_max) - static_cast<double>(digital_min));
  return physical_min + (static_cast<double>(d) - static_cast<double>(digital_min)) * scale;
}

std::int16_t SignalHeader::encode(double physical) const {
  const double scale = (static_cast<double>(digital_max) - static_cast<double>(digital_min)) /
                       (physical_max - physical_min);
  double d = static_cast<double>(digital_min) + (physical - physical_min) * scale;
  d = std::clamp(d, static_cast<double>(digital_min), static_cast<double>(digital_max));
  return static_cast<std::int16_t>(std::lround(d));
}

double EdfFile::sample_rate(std::size_t signal) const {
  return static_cast<double>(signals.at(signal).samples_per_record) / header.record_duration;
}

EdfFile parse_edf_header(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < kMainHeaderBytes)
    throw Error(errc::truncated, "EDF file shorter than the 256-byte main header");

  EdfFile f;
  // The main header alone may be read before header_bytes is known.
  FieldReader main(bytes, kMainHeaderBytes);
  f.header.version = main.take(8, "version");
  f.header.patient_id = main.take(80, "patient_id");
  f.header.recording_id = main.take(80, "recording_id");
  f.header.start_date = main.take(8, "start_date");
  f.header.start_time = main.take(8, "start_time");
  f.header.header_bytes = static_cast<int>(main.take_int(8, "header_bytes"));
  f.header.reserved = main.take(44, "reserved");
  f.header.num_records = static_cast<int>(main.take_int(8, "num_records"));
  f.header.record_duration = main.take_double(8, "record_duration");
  f.header.num_signals = static_cast<int>(main.take_int(4, "num_signals"));

  if (f.header.num_signals < 1)
    throw Error(errc::bad_format, "EDF declares no signals");
  const std::size_t expected_header =
      kMainHeaderBytes + kPerSignalHeaderBytes * static_cast<std::size_t>(f.header.num_signals);
  if (static_cast<std::size_t>(f.header.header_bytes) != expected_header)
    throw Error(errc::bad_format, "header size mismatch: declared " +
                                      std::to_string(f.header.header_bytes) + ", expected " +
                                      std::to_string(expected_header));
  if (f.header.num_records == -1)
    throw Error(errc::unsupported, "EDF with unknown record count (num_records = -1)");
  if (f.header.num_records < 1)
    throw Error(errc::bad_format, "EDF must declare at least one data record");
  if (!(f.header.record_duration > 0.0))
    throw Error(errc::bad_format, "record duration must be positive");
  if (bytes.size() < expected_header)
    throw Error(errc::truncated, "EDF file shorter than its declared header");

  // Signal headers are stored field-major: all labels, then all transducers, ...
  const std::size_t ns = static_cast<std::size_t>(f.header.num_signals);
  FieldReader sig(bytes.subspan(kMainHeaderBytes), expected_header - kMainHeaderBytes);
  f.signals.resize(ns);
  for (auto& s : f.signals) s.label = sig.take(16, "label");
  for (auto& s : f.signals) s.transducer = sig.take(80, "transducer");
  for (auto& s : f.signals) s.physical_dim = sig.take(8, "physical_dim");
  for (auto& s : f.signals) s.physical_min = sig.take_double(8, "physical_min");
  for (auto& s : f.signals) s.physical_max = sig.take_double(8, "physical_max");
  for (auto& s : f.signals) s.digital_min = static_cast<int>(sig.take_int(8, "digital_min"));
  for (auto& s : f.signals) s.digital_max = static_cast<int>(sig.take_int(8, "digital_max"));
  for (auto& s : f.signals) s.prefiltering = sig.take(80, "prefiltering");
  for (auto& s : f.signals)
    s.samples_per_record = static_cast<int>(sig.take_int(8, "samples_per_record"));
  for (auto& s : f.signals) s.reserved = sig.take(32, "signal reserved");

  for (const auto& s : f.signals) {
    if (s.label == "EDF Annotations")
      throw Error(errc::unsupported, "EDF+ annotations channels are not supported");
    s.validate();
  }
  return f;
}

EdfFile parse_edf_file(std::span<const std::uint8_t> bytes) {
  EdfFile f = parse_edf_header(bytes);
  const std::size_t ns = f.signals.size();
  const std::size_t records = static_cast<std::size_t>(f.header.num_records);

  std::size_t record_samples = 0;
  for (const auto& s : f.signals)
    record_samples += static_cast<std::size_t>(s.samples_per_record);
  const std::size_t data_bytes = records * record_samples * 2;
  const std::size_t offset = static_cast<std::size_t>(f.header.header_bytes);
  if (bytes.size() < offset + data_bytes)
    throw Error(errc::truncated, "EDF data section truncated: need " +
                                     std::to_string(offset + data_bytes) + " bytes, have " +
                                     std::to_string(bytes.size()));

  f.samples.assign(ns, {});
  for (std::size_t s = 0; s < ns; ++s)
    f.samples[s].reserve(records * static_cast<std::size_t>(f.signals[s].samples_per_record));

  const std::uint8_t* p = bytes.data() + offset;
  for (std::size_t r = 0; r < records; ++r) {
    for (std::size_t s = 0; s < ns; ++s) {
      const std::size_t n = static_cast<std::size_t>(f.signals[s].samples_per_record);
      for (std::size_t i = 0; i < n; ++i) {
        const std::uint16_t lo = p[0], hi = p[1];
        p += 2;
        f.samples[s].push_back(static_cast<std::int16_t>(lo | (hi << 8)));
      }
    }
  }
  return f;
}

std::vector<std::uint8_t> write_edf_file(const EdfFile& f) {
  const std::size_t ns = f.signals.size();
  if (ns == 0) throw Error(errc::bad_argument, "EDF writer needs at least one signal");
  if (f.samples.size() != ns)
    throw Error(errc::bad_argument, "EDF writer: sample/signal count mismatch");

  const std::size_t records = static_cast<std::size_t>(f.header.num_records);
  for (std::size_t s = 0; s < ns; ++s) {
    const std::size_t expect =
        records * static_cast<std::size_t>(f.signals[s].samples_per_record);
    if (f.samples[s].size() != expect)
      throw Error(errc::bad_argument, "EDF writer: signal '" + f.signals[s].label +
                                          "' sample count does not fill the declared records");
  }

  std::string head;
  head.reserve(kMainHeaderBytes + kPerSignalHeaderBytes * ns);
  append_padded(head, f.header.version.empty() ? "0" : f.header.version, 8, "version");
  append_padded(head, f.header.patient_id, 80, "patient_id");
  append_padded(head, f.header.recording_id, 80, "recording_id");
  append_padded(head, f.header.start_date, 8, "start_date");
  append_padded(head, f.header.start_time, 8, "start_time");
  append_padded(head, std::to_string(kMainHeaderBytes + kPerSignalHeaderBytes * ns), 8,
                "header_bytes");
  append_padded(head, f.header.reserved, 44, "reserved");
  append_padded(head, std::to_string(f.header.num_records), 8, "num_records");
  append_padded(head, format_number(f.header.record_duration, 8), 8, "record_duration");
  append_padded(head, std::to_string(ns), 4, "num_signals");

  for (const auto& s : f.signals) append_padded(head, s.label, 16, "label");
  for (const auto& s : f.signals) append_padded(head, s.transducer, 80, "transducer");
  for (const auto& s : f.signals) append_padded(head, s.physical_dim, 8, "physical_dim");
  for (const auto& s : f.signals)
    append_padded(head, format_number(s.physical_min, 8), 8, "physical_min");
  for (const auto& s : f.signals)
    append_padded(head, format_number(s.physical_max, 8), 8, "physical_max");
  for (const auto& s : f.signals)
    append_padded(head, std::to_string(s.digital_min), 8, "digital_min");
  for (const auto& s : f.signals)
    append_padded(head, std::to_string(s.digital_max), 8, "digital_max");
  for (const auto& s : f.signals) append_padded(head, s.prefiltering, 80, "prefiltering");
  for (const auto& s : f.signals)
    append_padded(head, std::to_string(s.samples_per_record), 8, "samples_per_record");
  for (const auto& s : f.signals) append_padded(head, s.reserved, 32, "signal reserved");

  std::vector<std::uint8_t> out(head.begin(), head.end());
  std::size_t record_samples = 0;
  for (const auto& s : f.signals)
    record_samples += static_cast<std::size_t>(s.samples_per_record);
  out.reserve(out.size() + records * record_samples * 2);

  for (std::size_t r = 0; r < records; ++r) {
    for (std::size_t s = 0; s < ns; ++s) {
      const std::size_t n = static_cast<std::size_t>(f.signals[s].samples_per_record);
      for (std::size_t i = 0; i < n; ++i) {
        const auto v = static_cast<std::uint16_t>(f.samples[s][r * n + i]);
        out.push_back(static_cast<std::uint8_t>(v & 0xff));
        out.push_back(static_cast<std::uint8_t>(v >> 8));
      }
    }
  }
  return out;
}

Recording to_recording(const EdfFile& f) {
  const std::size_t ns = f.signals.size();
  const double rate = f.sample_rate(0);
  for (std::size_t s = 1; s < ns; ++s) {
    if (f.sample_rate(s) != rate)
      throw Error(errc::unsupported,
                  "signals with differing sample rates (no resampling): '" +
                      f.signals[0].label + "' vs '" + f.signals[s].label + "'");
  }

  Recording rec;
  rec.sample_rate = rate;
  rec.subject_id = f.header.patient_id;
  rec.channels.reserve(ns);
  rec.data.reserve(ns);
  rec.non_eeg.reserve(ns);
  for (std::size_t s = 0; s < ns; ++s) {
    rec.channels.push_back(f.signals[s].label);
    rec.non_eeg.push_back(!is_eeg_channel(f.signals[s].label));
    std::vector<double> phys(f.samples[s].size());
    for (std::size_t i = 0; i < phys.size(); ++i)
      phys[i] = f.signals[s].decode(f.samples[s][i]);
    rec.data.push_back(std::move(phys));
  }
  rec.validate();
  return rec;
}

Recording parse_edf(std::span<const std::uint8_t> bytes) {
  return to_recording(parse_edf_file(bytes));
}

EdfFile make_edf(const Recording& rec, double physical_abs_max) {
  rec.validate();
  const std::size_t n = rec.num_samples();
  if (n == 0) throw Error(errc::bad_argument, "cannot encode an empty recording");

  // one-second records keep samples_per_record integral for integer rates
  double record_duration = 1.0;
  double spr = rec.sample_rate;
  if (spr != std::floor(spr)) {
    record_duration = 2.0;  // handles half-integral rates; others are rejected
    spr = rec.sample_rate * 2.0;
    if (spr != std::floor(spr))
      throw Error(errc::unsupported, "sample rate not representable with EDF records");
  }
  const auto samples_per_record = static_cast<int>(spr);
  const std::size_t per_record = static_cast<std::size_t>(samples_per_record);
  const std::size_t records = n / per_record;
  if (records == 0 || records * per_record != n)
    throw Error(errc::bad_argument,
                "recording length is not a whole number of EDF records");

  if (physical_abs_max <= 0.0) {
    for (const auto& ch : rec.data)
      for (double v : ch) physical_abs_max = std::max(physical_abs_max, std::abs(v));
    if (physical_abs_max <= 0.0) physical_abs_max = 1.0;
    physical_abs_max = std::ceil(physical_abs_max);
  }

  EdfFile f;
  f.header.version = "0";
  f.header.patient_id = rec.subject_id;
  f.header.recording_id = "eeganx export";
  f.header.start_date = "01.01.00";
  f.header.start_time = "00.00.00";
  f.header.num_records = static_cast<int>(records);
  f.header.record_duration = record_duration;
  f.header.num_signals = static_cast<int>(rec.channels.size());
  f.header.header_bytes =
      static_cast<int>(kMainHeaderBytes + kPerSignalHeaderBytes * rec.channels.size());

  for (std::size_t c = 0; c < rec.channels.size(); ++c) {
    SignalHeader s;
    s.label = rec.channels[c];
    s.transducer = "synthetic";
    s.physical_dim = "uV";
    s.physical_min = -physical_abs_max;
    s.physical_max = physical_abs_max;
    s.digital_min = -32768;
    s.digital_max = 32767;
    s.prefiltering = "";
    s.samples_per_record = samples_per_record;
    f.signals.push_back(std::move(s));
    std::vector<std::int16_t> dig(n);
    for (std::size_t i = 0; i < n; ++i) dig[i] = f.signals[c].encode(rec.data[c][i]);
    f.samples.push_back(std::move(dig));
  }
  return f;
}

std::vector<std::uint8_t> read_file_bytes(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(errc::io, "cannot open file: " + path);
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                  std::istreambuf_iterator<char>());
  return bytes;
}

void write_file_bytes(const std::string& path, std::span<const std::uint8_t> bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(errc::io, "cannot write file: " + path);
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  if (!out) throw Error(errc::io, "short write: " + path);
}

}  // namespace eeganx
