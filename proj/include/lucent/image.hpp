#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

namespace lucent {

// Linear-light RGB image, row-major, top-left origin.
struct Image {
  int width = 0;
  int height = 0;
  std::vector<float> data;  // 3 floats per pixel

  Image() = default;
  Image(int w, int h) : width(w), height(h), data(std::size_t(w) * h * 3, 0.f) {}

  float* at(int x, int y) { return data.data() + 3 * (std::size_t(y) * width + x); }
  const float* at(int x, int y) const {
    return data.data() + 3 * (std::size_t(y) * width + x);
  }
  std::size_t pixel_count() const { return std::size_t(width) * height; }
};

inline float srgb_encode(float linear) {
  if (linear <= 0.0031308f) return 12.92f * linear;
  return 1.055f * std::pow(linear, 1.f / 2.4f) - 0.055f;
}

inline float srgb_decode(float encoded) {
  if (encoded <= 0.04045f) return encoded / 12.92f;
  return std::pow((encoded + 0.055f) / 1.055f, 2.4f);
}

// PNG I/O. Images are stored gamma-encoded (sRGB, 8-bit); in memory they are
// linear. save_png clamps to [0,1] before encoding.
void save_png(const Image& image, const std::string& path);
Image load_png(const std::string& path);

void save_png_gray8(const std::vector<uint8_t>& pixels, int width, int height,
                    const std::string& path);
std::vector<uint8_t> load_png_gray8(const std::string& path, int& width,
                                    int& height);

// Single-channel PFM (portable float map), little-endian, scale -1.0.
void save_pfm(const std::vector<float>& values, int width, int height,
              const std::string& path);
std::vector<float> load_pfm(const std::string& path, int& width, int& height);

}  // namespace lucent
