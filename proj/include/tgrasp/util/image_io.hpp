#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace tgrasp {

/// Binary PGM, 8-bit. `comment` becomes a `#` header line when non-empty.
void write_pgm8(const std::string& path, int w, int h,
                const std::vector<std::uint8_t>& pixels, const std::string& comment = "");

/// Binary PGM, 16-bit (big-endian samples, maxval 65535).
void write_pgm16(const std::string& path, int w, int h,
                 const std::vector<std::uint16_t>& pixels, const std::string& comment = "");

/// Binary PPM, 8-bit RGB interleaved.
void write_ppm(const std::string& path, int w, int h,
               const std::vector<std::uint8_t>& rgb, const std::string& comment = "");

}  // namespace tgrasp
