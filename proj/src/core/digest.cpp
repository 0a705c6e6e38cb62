#include "core/digest.hpp"

#include <openssl/evp.h>

#include <cstring>
#include <stdexcept>

namespace graphfp {

uint64_t mix64(uint64_t state, uint64_t value) {
  uint64_t z = state + 0x9e3779b97f4a7c15ULL + value;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

uint64_t hash_words64(uint64_t tag, std::span<const uint64_t> words) {
  uint64_t h = mix64(0x653589793238462ULL, tag);
  for (uint64_t w : words) h = mix64(h, w);
  return mix64(h, words.size());
}

namespace {

struct Sha512 {
  EVP_MD_CTX* ctx;
  Sha512() : ctx(EVP_MD_CTX_new()) {
    if (!ctx || EVP_DigestInit_ex(ctx, EVP_sha512(), nullptr) != 1)
      throw std::runtime_error("SHA-512 init failed");
  }
  ~Sha512() { EVP_MD_CTX_free(ctx); }
  void update(const void* data, size_t len) {
    if (EVP_DigestUpdate(ctx, data, len) != 1)
      throw std::runtime_error("SHA-512 update failed");
  }
  WideDigest finish() {
    unsigned char full[64];
    unsigned int len = 0;
    if (EVP_DigestFinal_ex(ctx, full, &len) != 1 || len != 64)
      throw std::runtime_error("SHA-512 final failed");
    WideDigest out;
    std::memcpy(out.data(), full, out.size());
    return out;
  }
};

void update_u64(Sha512& s, uint64_t v) {
  uint8_t buf[8];
  for (int i = 7; i >= 0; --i) {
    buf[i] = static_cast<uint8_t>(v & 0xff);
    v >>= 8;
  }
  s.update(buf, 8);
}

}  // namespace

WideDigest sha_words(uint64_t tag, std::span<const WideDigest> parts,
                     std::span<const uint64_t> words) {
  Sha512 s;
  update_u64(s, tag);
  update_u64(s, parts.size());
  for (const auto& p : parts) s.update(p.data(), p.size());
  update_u64(s, words.size());
  for (uint64_t w : words) update_u64(s, w);
  return s.finish();
}

WideDigest sha_bytes(std::span<const uint8_t> bytes) {
  Sha512 s;
  s.update(bytes.data(), bytes.size());
  return s.finish();
}

std::string hex(uint64_t v) {
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[i] = digits[v & 0xf];
    v >>= 4;
  }
  return out;
}

std::string hex(const WideDigest& d) {
  static const char* digits = "0123456789abcdef";
  std::string out;
  out.reserve(d.size() * 2);
  for (uint8_t b : d) {
    out.push_back(digits[b >> 4]);
    out.push_back(digits[b & 0xf]);
  }
  return out;
}

ShaStream::ShaStream() : ctx_(new Sha512()) {}
ShaStream::~ShaStream() { delete static_cast<Sha512*>(ctx_); }
void ShaStream::update(std::span<const uint8_t> bytes) {
  static_cast<Sha512*>(ctx_)->update(bytes.data(), bytes.size());
}
void ShaStream::update_u64(uint64_t v) {
  graphfp::update_u64(*static_cast<Sha512*>(ctx_), v);
}
WideDigest ShaStream::finish() {
  return static_cast<Sha512*>(ctx_)->finish();
}

}  // namespace graphfp
