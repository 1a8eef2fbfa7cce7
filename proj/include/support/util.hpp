#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace wb {

// Error kinds map onto the CLI exit codes: usage -> 1, validation and
// cap -> 2, criterion failures are reported separately with exit 3.
enum class ErrorKind { usage, validation, cap, internal };

class Error : public std::runtime_error {
 public:
  Error(ErrorKind k, const std::string& msg) : std::runtime_error(msg), kind(k) {}
  ErrorKind kind;
};

[[noreturn]] inline void fail_usage(const std::string& msg) { throw Error(ErrorKind::usage, msg); }
[[noreturn]] inline void fail_validation(const std::string& msg) { throw Error(ErrorKind::validation, msg); }
[[noreturn]] inline void fail_cap(const std::string& msg) { throw Error(ErrorKind::cap, msg); }
[[noreturn]] inline void fail_internal(const std::string& msg) { throw Error(ErrorKind::internal, msg); }

inline void check_internal(bool ok, const std::string& msg) {
  if (!ok) fail_internal(msg);
}

// FNV-1a, used for deterministic content ids. Not cryptographic; collisions
// are tolerated because every consumer confirms with a structural compare.
struct Fnv1a {
  uint64_t h = 1469598103934665603ull;

  void byte(uint8_t b) {
    h ^= b;
    h *= 1099511628211ull;
  }
  void u16(uint16_t v) {
    byte(static_cast<uint8_t>(v & 0xff));
    byte(static_cast<uint8_t>(v >> 8));
  }
  void u32(uint32_t v) {
    u16(static_cast<uint16_t>(v & 0xffff));
    u16(static_cast<uint16_t>(v >> 16));
  }
  void u64(uint64_t v) {
    u32(static_cast<uint32_t>(v & 0xffffffffu));
    u32(static_cast<uint32_t>(v >> 32));
  }
  void str(const std::string& s) {
    u64(s.size());
    for (char c : s) byte(static_cast<uint8_t>(c));
  }
  uint64_t value() const { return h; }
};

std::string hex16(uint64_t v);

// base^exp if it stays <= cap, otherwise nullopt.
std::optional<uint64_t> checked_pow(uint64_t base, uint32_t exp, uint64_t cap);

// odometer step over base-q digit tuples; false once every tuple has been seen.
template <typename Digits>
bool next_tuple(Digits& digits, uint16_t q) {
  for (auto& d : digits) {
    if (static_cast<uint16_t>(d + 1) < q) {
      ++d;
      return true;
    }
    d = 0;
  }
  return false;
}

}  // namespace wb
