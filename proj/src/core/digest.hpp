#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace graphfp {

// Version stamp for the structural hashing scheme. Bump on any change to
// tags, mixing, or serialization order.
inline constexpr const char* kHashVersion = "v1";

// 64-bit non-cryptographic mixing (splitmix64-style finalizer chain).
uint64_t mix64(uint64_t state, uint64_t value);
uint64_t hash_words64(uint64_t tag, std::span<const uint64_t> words);

// Wide digest: SHA-512 truncated to 256 bits.
using WideDigest = std::array<uint8_t, 32>;
WideDigest sha_words(uint64_t tag, std::span<const WideDigest> parts,
                     std::span<const uint64_t> words);
WideDigest sha_bytes(std::span<const uint8_t> bytes);

std::string hex(uint64_t v);
std::string hex(const WideDigest& d);

// Streaming SHA-512 wrapper for digesting large serializations.
class ShaStream {
 public:
  ShaStream();
  ~ShaStream();
  ShaStream(const ShaStream&) = delete;
  ShaStream& operator=(const ShaStream&) = delete;
  void update(std::span<const uint8_t> bytes);
  void update_u64(uint64_t v);
  WideDigest finish();

 private:
  void* ctx_;
};

}  // namespace graphfp
