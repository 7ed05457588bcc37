#ifndef SPRKIT_HASH_HPP
#define SPRKIT_HASH_HPP

#include <array>
#include <string>
#include <string_view>

#include <openssl/sha.h>

namespace sprkit {

/// Lower-case hex SHA-256 of `data`.
inline std::string sha256_hex(std::string_view data) {
  std::array<unsigned char, SHA256_DIGEST_LENGTH> digest{};
  SHA256(reinterpret_cast<const unsigned char*>(data.data()), data.size(), digest.data());
  static constexpr char hex[] = "0123456789abcdef";
  std::string out;
  out.reserve(2 * digest.size());
  for (unsigned char b : digest) {
    out += hex[b >> 4];
    out += hex[b & 0xF];
  }
  return out;
}

}  // namespace sprkit

#endif  // SPRKIT_HASH_HPP
