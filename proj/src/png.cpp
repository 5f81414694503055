#include "frontiers/png.hpp"

#include <array>
#include <cmath>
#include <cstring>
#include <fstream>
#include <stdexcept>

namespace frontiers {

Image::Image(int width, int height, std::uint8_t r, std::uint8_t g, std::uint8_t b)
    : width_(width), height_(height),
      data_(static_cast<size_t>(width) * height * 3) {
  if (width <= 0 || height <= 0) throw std::invalid_argument("Image: bad dimensions");
  for (size_t i = 0; i < data_.size(); i += 3) {
    data_[i] = r;
    data_[i + 1] = g;
    data_[i + 2] = b;
  }
}

void Image::set(int x, int y, std::uint8_t r, std::uint8_t g, std::uint8_t b) {
  if (!contains(x, y)) return;
  std::uint8_t* p = &data_[(static_cast<size_t>(y) * width_ + x) * 3];
  p[0] = r;
  p[1] = g;
  p[2] = b;
}

void Image::blend(int x, int y, std::uint8_t r, std::uint8_t g, std::uint8_t b, double alpha) {
  if (!contains(x, y)) return;
  std::uint8_t* p = &data_[(static_cast<size_t>(y) * width_ + x) * 3];
  p[0] = static_cast<std::uint8_t>(p[0] * (1.0 - alpha) + r * alpha);
  p[1] = static_cast<std::uint8_t>(p[1] * (1.0 - alpha) + g * alpha);
  p[2] = static_cast<std::uint8_t>(p[2] * (1.0 - alpha) + b * alpha);
}

const std::uint8_t* Image::pixel(int x, int y) const {
  return &data_[(static_cast<size_t>(y) * width_ + x) * 3];
}

void Image::fill_disc(int cx, int cy, int radius, std::uint8_t r, std::uint8_t g,
                      std::uint8_t b) {
  for (int dy = -radius; dy <= radius; ++dy)
    for (int dx = -radius; dx <= radius; ++dx)
      if (dx * dx + dy * dy <= radius * radius) set(cx + dx, cy + dy, r, g, b);
}

void Image::draw_line(int x0, int y0, int x1, int y1, std::uint8_t r, std::uint8_t g,
                      std::uint8_t b) {
  // Bresenham.
  const int dx = std::abs(x1 - x0);
  const int dy = -std::abs(y1 - y0);
  const int sx = x0 < x1 ? 1 : -1;
  const int sy = y0 < y1 ? 1 : -1;
  int err = dx + dy;
  while (true) {
    set(x0, y0, r, g, b);
    if (x0 == x1 && y0 == y1) break;
    const int e2 = 2 * err;
    if (e2 >= dy) {
      err += dy;
      x0 += sx;
    }
    if (e2 <= dx) {
      err += dx;
      y0 += sy;
    }
  }
}

namespace {

std::uint32_t crc32(const std::uint8_t* data, size_t len, std::uint32_t crc = 0) {
  static const auto table = [] {
    std::array<std::uint32_t, 256> t{};
    for (std::uint32_t n = 0; n < 256; ++n) {
      std::uint32_t c = n;
      for (int k = 0; k < 8; ++k) c = (c & 1) ? 0xEDB88320u ^ (c >> 1) : c >> 1;
      t[n] = c;
    }
    return t;
  }();
  crc ^= 0xFFFFFFFFu;
  for (size_t i = 0; i < len; ++i) crc = table[(crc ^ data[i]) & 0xFF] ^ (crc >> 8);
  return crc ^ 0xFFFFFFFFu;
}

std::uint32_t adler32(const std::uint8_t* data, size_t len) {
  std::uint32_t a = 1, b = 0;
  for (size_t i = 0; i < len; ++i) {
    a = (a + data[i]) % 65521;
    b = (b + a) % 65521;
  }
  return (b << 16) | a;
}

void put_u32(std::vector<std::uint8_t>& out, std::uint32_t v) {
  out.push_back(static_cast<std::uint8_t>(v >> 24));
  out.push_back(static_cast<std::uint8_t>(v >> 16));
  out.push_back(static_cast<std::uint8_t>(v >> 8));
  out.push_back(static_cast<std::uint8_t>(v));
}

void write_chunk(std::ofstream& out, const char type[4],
                 const std::vector<std::uint8_t>& payload) {
  std::vector<std::uint8_t> chunk;
  chunk.reserve(payload.size() + 4);
  chunk.insert(chunk.end(), type, type + 4);
  chunk.insert(chunk.end(), payload.begin(), payload.end());
  std::vector<std::uint8_t> len;
  put_u32(len, static_cast<std::uint32_t>(payload.size()));
  out.write(reinterpret_cast<const char*>(len.data()), 4);
  out.write(reinterpret_cast<const char*>(chunk.data()),
            static_cast<std::streamsize>(chunk.size()));
  std::vector<std::uint8_t> crc;
  put_u32(crc, crc32(chunk.data(), chunk.size()));
  out.write(reinterpret_cast<const char*>(crc.data()), 4);
}

}  // namespace

void Image::save_png(const std::filesystem::path& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());

  static const std::uint8_t signature[8] = {0x89, 'P', 'N', 'G', '\r', '\n', 0x1A, '\n'};
  out.write(reinterpret_cast<const char*>(signature), 8);

  std::vector<std::uint8_t> ihdr;
  put_u32(ihdr, static_cast<std::uint32_t>(width_));
  put_u32(ihdr, static_cast<std::uint32_t>(height_));
  ihdr.push_back(8);  // bit depth
  ihdr.push_back(2);  // color type: truecolor
  ihdr.push_back(0);  // compression
  ihdr.push_back(0);  // filter
  ihdr.push_back(0);  // interlace
  write_chunk(out, "IHDR", ihdr);

  // Raw scanlines, filter byte 0 per row.
  std::vector<std::uint8_t> raw;
  raw.reserve(static_cast<size_t>(height_) * (static_cast<size_t>(width_) * 3 + 1));
  for (int y = 0; y < height_; ++y) {
    raw.push_back(0);
    const std::uint8_t* row = &data_[static_cast<size_t>(y) * width_ * 3];
    raw.insert(raw.end(), row, row + static_cast<size_t>(width_) * 3);
  }

  // zlib stream of stored (uncompressed) deflate blocks.
  std::vector<std::uint8_t> idat;
  idat.push_back(0x78);
  idat.push_back(0x01);
  constexpr size_t kBlock = 65535;
  for (size_t offset = 0; offset < raw.size(); offset += kBlock) {
    const size_t n = std::min(kBlock, raw.size() - offset);
    const bool final_block = offset + n == raw.size();
    idat.push_back(final_block ? 1 : 0);
    idat.push_back(static_cast<std::uint8_t>(n & 0xFF));
    idat.push_back(static_cast<std::uint8_t>(n >> 8));
    idat.push_back(static_cast<std::uint8_t>(~n & 0xFF));
    idat.push_back(static_cast<std::uint8_t>((~n >> 8) & 0xFF));
    idat.insert(idat.end(), raw.begin() + static_cast<long>(offset),
                raw.begin() + static_cast<long>(offset + n));
  }
  put_u32(idat, adler32(raw.data(), raw.size()));
  write_chunk(out, "IDAT", idat);
  write_chunk(out, "IEND", {});
}

}  // namespace frontiers
