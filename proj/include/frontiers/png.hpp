#pragma once

#include <cstdint>
#include <filesystem>
#include <vector>

namespace frontiers {

/// Minimal dependency-free RGB8 image with a PNG writer (valid zlib stream
/// built from stored deflate blocks, so no compressor is needed).
class Image {
 public:
  Image(int width, int height, std::uint8_t r = 255, std::uint8_t g = 255,
        std::uint8_t b = 255);

  int width() const { return width_; }
  int height() const { return height_; }

  bool contains(int x, int y) const { return x >= 0 && y >= 0 && x < width_ && y < height_; }
  void set(int x, int y, std::uint8_t r, std::uint8_t g, std::uint8_t b);
  void blend(int x, int y, std::uint8_t r, std::uint8_t g, std::uint8_t b, double alpha);
  const std::uint8_t* pixel(int x, int y) const;

  void fill_disc(int cx, int cy, int radius, std::uint8_t r, std::uint8_t g, std::uint8_t b);
  void draw_line(int x0, int y0, int x1, int y1, std::uint8_t r, std::uint8_t g,
                 std::uint8_t b);

  void save_png(const std::filesystem::path& path) const;

 private:
  int width_;
  int height_;
  std::vector<std::uint8_t> data_;
};

}  // namespace frontiers
