#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "eeganx/recording.hpp"

namespace eeganx {

// Plain EDF: 256-byte main header, 256 bytes per signal, 16-bit little-endian
// two's-complement samples. EDF+ annotation channels are rejected.

struct EdfHeader {
  std::string version;       // 8 chars, "0" for EDF
  std::string patient_id;    // 80 chars
  std::string recording_id;  // 80 chars
  std::string start_date;    // dd.mm.yy
  std::string start_time;    // hh.mm.ss
  int header_bytes = 0;      // must equal 256 + 256 * num_signals
  std::string reserved;      // 44 chars
  int num_records = 0;
  double record_duration = 0.0;  // seconds
  int num_signals = 0;
};

struct SignalHeader {
  std::string label;         // 16 chars
  std::string transducer;    // 80 chars
  std::string physical_dim;  // 8 chars
  double physical_min = 0.0;
  double physical_max = 0.0;
  int digital_min = 0;
  int digital_max = 0;
  std::string prefiltering;  // 80 chars
  int samples_per_record = 0;
  std::string reserved;      // 32 chars

  void validate() const;
  // physical_min + (d - digital_min) * (physical_max - physical_min) / (digital_max - digital_min)
  double decode(std::int16_t d) const;
  std::int16_t encode(double physical) const;
};

struct EdfFile {
  EdfHeader header;
  std::vector<SignalHeader> signals;
  // [signal][sample], records already concatenated in record order
  std::vector<std::vector<std::int16_t>> samples;

  double sample_rate(std::size_t signal) const;
};

// Header phase only; reads exactly header.header_bytes bytes.
EdfFile parse_edf_header(std::span<const std::uint8_t> bytes);

EdfFile parse_edf_file(std::span<const std::uint8_t> bytes);
std::vector<std::uint8_t> write_edf_file(const EdfFile& f);

Recording to_recording(const EdfFile& f);
Recording parse_edf(std::span<const std::uint8_t> bytes);

// Quantizes a recording into an EDF container (used by fixtures and export).
// Physical range defaults to a symmetric span covering the data.
EdfFile make_edf(const Recording& rec, double physical_abs_max = 0.0);

std::vector<std::uint8_t> read_file_bytes(const std::string& path);
void write_file_bytes(const std::string& path, std::span<const std::uint8_t> bytes);

}  // namespace eeganx
