#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace tws {

inline constexpr const char* kSchemaVersion = "1";

// error raised on malformed or out-of-contract input; carries a stable identifier
struct input_error : std::runtime_error {
  std::string id;
  input_error(std::string id_, const std::string& msg)
      : std::runtime_error(id_ + ": " + msg), id(std::move(id_)) {}
};

// error raised when a theorem-backed internal invariant fails
struct invariant_error : std::logic_error {
  explicit invariant_error(const std::string& msg)
      : std::logic_error("InternalInvariantViolation: " + msg) {}
};

inline void require(bool ok, const char* id, const std::string& msg) {
  if (!ok) throw input_error(id, msg);
}

inline void check_invariant(bool ok, const std::string& msg) {
  if (!ok) throw invariant_error(msg);
}

// FNV-1a, 64 bit
inline std::uint64_t fnv1a(const std::string& bytes) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char ch : bytes) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  return h;
}

std::string fnv1a_hex(const std::string& bytes);

}  // namespace tws
