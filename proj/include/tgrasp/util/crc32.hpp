#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace tgrasp {

/// CRC-32 (IEEE 802.3, zlib-compatible), table-driven.
class Crc32 {
 public:
  Crc32() = default;

  void update(const void* data, std::size_t len) {
    const auto* p = static_cast<const unsigned char*>(data);
    std::uint32_t c = state_;
    for (std::size_t i = 0; i < len; ++i)
      c = table()[(c ^ p[i]) & 0xFF] ^ (c >> 8);
    state_ = c;
  }

  std::uint32_t value() const { return state_ ^ 0xFFFFFFFFu; }

  static std::uint32_t of(const void* data, std::size_t len) {
    Crc32 c;
    c.update(data, len);
    return c.value();
  }

  static std::uint32_t of(std::string_view s) { return of(s.data(), s.size()); }

 private:
  static const std::uint32_t* table() {
    static const auto tab = [] {
      struct T { std::uint32_t v[256]; };
      T t{};
      for (std::uint32_t i = 0; i < 256; ++i) {
        std::uint32_t c = i;
        for (int k = 0; k < 8; ++k)
          c = (c & 1) ? 0xEDB88320u ^ (c >> 1) : c >> 1;
        t.v[i] = c;
      }
      return t;
    }();
    return tab.v;
  }

  std::uint32_t state_ = 0xFFFFFFFFu;
};

}  // namespace tgrasp
