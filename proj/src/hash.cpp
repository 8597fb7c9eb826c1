#include "pankrag/hash.hpp"

#include <array>

namespace pankrag {

std::string to_hex(std::uint64_t v) {
  static constexpr char digits[] = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = digits[v & 0xf];
    v >>= 4;
  }
  return out;
}

std::string Fnv1a64::hex() const { return to_hex(state_); }

std::uint64_t fnv1a64(std::string_view bytes) {
  return Fnv1a64().update(bytes).value();
}

std::string fnv1a64_hex(std::string_view bytes) {
  return to_hex(fnv1a64(bytes));
}

}  // namespace pankrag
