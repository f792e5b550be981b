#include "lucent/image.hpp"

#include <png.h>

#include <algorithm>
#include <cstdio>
#include <cstring>
#include <fstream>

#include "lucent/common.hpp"

namespace lucent {

namespace {

uint8_t to_byte(float v) {
  float c = std::clamp(v, 0.f, 1.f);
  return static_cast<uint8_t>(std::lround(c * 255.f));
}

}  // namespace

void save_png(const Image& image, const std::string& path) {
  if (image.width <= 0 || image.height <= 0)
    throw InputError("save_png: zero-sized image: " + path);
  std::vector<uint8_t> bytes(image.pixel_count() * 3);
  for (std::size_t i = 0; i < image.pixel_count(); ++i) {
    bytes[3 * i + 0] = to_byte(srgb_encode(image.data[3 * i + 0]));
    bytes[3 * i + 1] = to_byte(srgb_encode(image.data[3 * i + 1]));
    bytes[3 * i + 2] = to_byte(srgb_encode(image.data[3 * i + 2]));
  }

  png_image png{};
  png.version = PNG_IMAGE_VERSION;
  png.width = static_cast<png_uint_32>(image.width);
  png.height = static_cast<png_uint_32>(image.height);
  png.format = PNG_FORMAT_RGB;
  if (!png_image_write_to_file(&png, path.c_str(), 0, bytes.data(), 0, nullptr))
    throw std::runtime_error("save_png: failed to write " + path + ": " +
                             png.message);
}

Image load_png(const std::string& path) {
  png_image png{};
  png.version = PNG_IMAGE_VERSION;
  if (!png_image_begin_read_from_file(&png, path.c_str()))
    throw InputError("load_png: cannot open " + path + ": " + png.message);
  png.format = PNG_FORMAT_RGB;
  std::vector<uint8_t> bytes(PNG_IMAGE_SIZE(png));
  if (!png_image_finish_read(&png, nullptr, bytes.data(), 0, nullptr))
    throw InputError("load_png: failed to read " + path + ": " + png.message);

  Image image(static_cast<int>(png.width), static_cast<int>(png.height));
  for (std::size_t i = 0; i < image.pixel_count(); ++i) {
    image.data[3 * i + 0] = srgb_decode(bytes[3 * i + 0] / 255.f);
    image.data[3 * i + 1] = srgb_decode(bytes[3 * i + 1] / 255.f);
    image.data[3 * i + 2] = srgb_decode(bytes[3 * i + 2] / 255.f);
  }
  return image;
}

void save_png_gray8(const std::vector<uint8_t>& pixels, int width, int height,
                    const std::string& path) {
  if (width <= 0 || height <= 0 ||
      pixels.size() != std::size_t(width) * height)
    throw InputError("save_png_gray8: bad dimensions for " + path);
  png_image png{};
  png.version = PNG_IMAGE_VERSION;
  png.width = static_cast<png_uint_32>(width);
  png.height = static_cast<png_uint_32>(height);
  png.format = PNG_FORMAT_GRAY;
  if (!png_image_write_to_file(&png, path.c_str(), 0, pixels.data(), 0, nullptr))
    throw std::runtime_error("save_png_gray8: failed to write " + path + ": " +
                             png.message);
}

std::vector<uint8_t> load_png_gray8(const std::string& path, int& width,
                                    int& height) {
  png_image png{};
  png.version = PNG_IMAGE_VERSION;
  if (!png_image_begin_read_from_file(&png, path.c_str()))
    throw InputError("load_png_gray8: cannot open " + path + ": " + png.message);
  png.format = PNG_FORMAT_GRAY;
  std::vector<uint8_t> bytes(PNG_IMAGE_SIZE(png));
  if (!png_image_finish_read(&png, nullptr, bytes.data(), 0, nullptr))
    throw InputError("load_png_gray8: failed to read " + path + ": " +
                     png.message);
  width = static_cast<int>(png.width);
  height = static_cast<int>(png.height);
  return bytes;
}

// PFM convention: rows are stored bottom-to-top; a negative scale marks
// little-endian data.
void save_pfm(const std::vector<float>& values, int width, int height,
              const std::string& path) {
  if (width <= 0 || height <= 0 || values.size() != std::size_t(width) * height)
    throw InputError("save_pfm: bad dimensions for " + path);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("save_pfm: cannot open " + path);
  out << "Pf\n" << width << " " << height << "\n-1.0\n";
  for (int y = height - 1; y >= 0; --y)
    out.write(reinterpret_cast<const char*>(values.data() +
                                            std::size_t(y) * width),
              std::streamsize(width) * sizeof(float));
  if (!out) throw std::runtime_error("save_pfm: write failed for " + path);
}

std::vector<float> load_pfm(const std::string& path, int& width, int& height) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("load_pfm: cannot open " + path);
  std::string magic;
  in >> magic;
  if (magic != "Pf")
    throw InputError("load_pfm: " + path + ": not a grayscale PFM");
  double scale = 0;
  in >> width >> height >> scale;
  if (!in || width <= 0 || height <= 0)
    throw InputError("load_pfm: " + path + ": malformed header");
  if (scale >= 0)
    throw InputError("load_pfm: " + path + ": big-endian PFM not supported");
  in.get();  // single whitespace byte after the header
  std::vector<float> values(std::size_t(width) * height);
  for (int y = height - 1; y >= 0; --y)
    in.read(reinterpret_cast<char*>(values.data() + std::size_t(y) * width),
            std::streamsize(width) * sizeof(float));
  if (!in) throw InputError("load_pfm: " + path + ": truncated data");
  return values;
}

}  // namespace lucent
