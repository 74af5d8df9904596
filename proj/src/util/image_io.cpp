#include "tgrasp/util/image_io.hpp"

#include <cstdio>
#include <fstream>

#include "tgrasp/util/errors.hpp"

namespace tgrasp {

namespace {

std::ofstream open_out(const std::string& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open for writing: " + path);
  return f;
}

void header(std::ofstream& f, const char* magic, int w, int h, int maxval,
            const std::string& comment) {
  f << magic << "\n";
  if (!comment.empty()) f << "# " << comment << "\n";
  f << w << " " << h << "\n" << maxval << "\n";
}

}  // namespace

void write_pgm8(const std::string& path, int w, int h,
                const std::vector<std::uint8_t>& pixels, const std::string& comment) {
  if (static_cast<int>(pixels.size()) != w * h) throw IoError("pgm8 size mismatch");
  auto f = open_out(path);
  header(f, "P5", w, h, 255, comment);
  f.write(reinterpret_cast<const char*>(pixels.data()), static_cast<std::streamsize>(pixels.size()));
  if (!f) throw IoError("write failed: " + path);
}

void write_pgm16(const std::string& path, int w, int h,
                 const std::vector<std::uint16_t>& pixels, const std::string& comment) {
  if (static_cast<int>(pixels.size()) != w * h) throw IoError("pgm16 size mismatch");
  auto f = open_out(path);
  header(f, "P5", w, h, 65535, comment);
  for (std::uint16_t v : pixels) {
    unsigned char be[2] = {static_cast<unsigned char>(v >> 8),
                           static_cast<unsigned char>(v & 0xFF)};
    f.write(reinterpret_cast<const char*>(be), 2);
  }
  if (!f) throw IoError("write failed: " + path);
}

void write_ppm(const std::string& path, int w, int h,
               const std::vector<std::uint8_t>& rgb, const std::string& comment) {
  if (static_cast<int>(rgb.size()) != w * h * 3) throw IoError("ppm size mismatch");
  auto f = open_out(path);
  header(f, "P6", w, h, 255, comment);
  f.write(reinterpret_cast<const char*>(rgb.data()), static_cast<std::streamsize>(rgb.size()));
  if (!f) throw IoError("write failed: " + path);
}

}  // namespace tgrasp
