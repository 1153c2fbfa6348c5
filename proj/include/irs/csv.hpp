// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace irs::cli {

// FNV-1a 64-bit over raw bytes; stamps the run manifest.
std::uint64_t fnv1a64(std::string_view bytes);
std::string hex64(std::uint64_t v);

// Deterministic shortest-ish decimal form ("%.12g"); the same value always
// prints the same bytes, keeping reruns byte-identical.
std::string format_double(double v);

std::string iso8601_utc_now();

// Comment header stamped on every output file. The timestamp is the only
// line that may differ between reruns of the same invocation.
struct RunManifest {
  std::string tool;         // e.g. "irstk sweep-response"
  std::uint64_t config_hash = 0;
  std::uint64_t seed = 0;
};

void write_manifest(std::ostream& out, const RunManifest& manifest);

}  // namespace irs::cli
