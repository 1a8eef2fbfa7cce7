#include "support/util.hpp"

namespace wb {

std::string hex16(uint64_t v) {
  static const char* digits = "0123456789abcdef";
  std::string s(16, '0');
  for (int i = 15; i >= 0; --i) {
    s[i] = digits[v & 0xf];
    v >>= 4;
  }
  return s;
}

std::optional<uint64_t> checked_pow(uint64_t base, uint32_t exp, uint64_t cap) {
  uint64_t r = 1;
  for (uint32_t i = 0; i < exp; ++i) {
    if (base != 0 && r > cap / base) return std::nullopt;
    r *= base;
    if (r > cap) return std::nullopt;
  }
  return r;
}

}  // namespace wb
