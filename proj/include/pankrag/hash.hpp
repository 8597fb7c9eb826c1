#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace pankrag {

/// Incremental FNV-1a (64-bit). Used for content hashes, table checksums and
/// provider request hashes; not a cryptographic hash.
class Fnv1a64 {
 public:
  Fnv1a64& update(std::string_view bytes) {
    for (unsigned char c : bytes) {
      state_ ^= c;
      state_ *= kPrime;
    }
    return *this;
  }

  Fnv1a64& update_u64(std::uint64_t v) {
    for (int i = 0; i < 8; ++i) {
      state_ ^= static_cast<unsigned char>(v >> (8 * i));
      state_ *= kPrime;
    }
    return *this;
  }

  std::uint64_t value() const noexcept { return state_; }
  std::string hex() const;

 private:
  static constexpr std::uint64_t kOffset = 0xcbf29ce484222325ULL;
  static constexpr std::uint64_t kPrime = 0x100000001b3ULL;
  std::uint64_t state_ = kOffset;
};

std::uint64_t fnv1a64(std::string_view bytes);
std::string fnv1a64_hex(std::string_view bytes);
std::string to_hex(std::uint64_t v);

}  // namespace pankrag
