// SPDX-License-Identifier: Apache-2.0
#include "irs/csv.hpp"

#include <cstdio>
#include <ctime>

#include "irs/version.hpp"

namespace irs::cli {

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (const char c : bytes) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

std::string iso8601_utc_now() {
  const std::time_t now = std::time(nullptr);
  std::tm tm_utc{};
  gmtime_r(&now, &tm_utc);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
  return buf;
}

void write_manifest(std::ostream& out, const RunManifest& manifest) {
  out << "# tool: " << manifest.tool << "\n";
  out << "# version: " << kVersion << "\n";
  out << "# config_hash: fnv1a64:" << hex64(manifest.config_hash) << "\n";
  out << "# seed: " << manifest.seed << "\n";
  out << "# timestamp: " << iso8601_utc_now() << "\n";
}

}  // namespace irs::cli
