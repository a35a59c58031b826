#ifndef POLLCTL_DIGEST_HPP
#define POLLCTL_DIGEST_HPP

#include <cstdint>
#include <string>
#include <string_view>

namespace pollctl {

// FNV-1a 64-bit content digest; reports only need a stable fingerprint.
inline std::uint64_t fnv1a64(std::string_view data) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

inline std::string content_digest(std::string_view data) {
  static const char* hex = "0123456789abcdef";
  std::uint64_t h = fnv1a64(data);
  std::string out = "fnv1a:";
  for (int i = 15; i >= 0; --i) out.push_back(hex[(h >> (i * 4)) & 0xf]);
  return out;
}

}  // namespace pollctl

#endif
