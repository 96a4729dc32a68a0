#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace gkm {

// A request that cannot be served as stated: unknown family, malformed word,
// operation applied to the wrong kind of graph, and so on.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A computation that would exceed a configured cap.
struct ResourceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Input data that parsed fine but fails a mathematical check
// (e.g. a would-be class violating the edge divisibility conditions).
struct VerificationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Caps for the potentially explosive enumerations.  The library default is
// generous; the command-line tool layers a tighter default on top.
struct Limits {
  std::uint64_t max_group_order = 1000000;
  int max_reduced_word_length = 12;
};

inline std::uint64_t hash_mix(std::uint64_t h, std::uint64_t v) {
  // FNV-1a style step, one 64-bit lane.
  h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  return h;
}

inline std::uint64_t hash_ints(const std::vector<int>& v) {
  std::uint64_t h = 1469598103934665603ull;
  for (int x : v) h = hash_mix(h, static_cast<std::uint64_t>(static_cast<std::int64_t>(x)));
  return h;
}

std::vector<std::string> split(const std::string& s, char sep);
std::string trim(const std::string& s);

}  // namespace gkm
