#include "lucent/depth_map.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "lucent/common.hpp"
#include "lucent/image.hpp"

namespace lucent {

// Control points of the ramp (viridis-style): positions 0, 0.25, 0.5, 0.75, 1.
namespace {
constexpr float kRamp[5][3] = {
    {0.267f, 0.005f, 0.329f},
    {0.229f, 0.322f, 0.546f},
    {0.128f, 0.567f, 0.551f},
    {0.369f, 0.789f, 0.383f},
    {0.993f, 0.906f, 0.144f},
};
}

void depth_colormap(float t, uint8_t rgb[3]) {
  t = std::clamp(t, 0.f, 1.f);
  float s = t * 4.f;
  int i = std::min(3, static_cast<int>(s));
  float f = s - i;
  for (int c = 0; c < 3; ++c) {
    float v = kRamp[i][c] + f * (kRamp[i + 1][c] - kRamp[i][c]);
    rgb[c] = static_cast<uint8_t>(std::lround(std::clamp(v, 0.f, 1.f) * 255.f));
  }
}

void save_depth_map(const DepthMap& depth, const std::string& prefix) {
  const std::size_t n = depth.values.size();
  std::vector<float> pfm(n);
  std::vector<uint8_t> mask(n);
  float lo = std::numeric_limits<float>::max();
  float hi = 0.f;
  for (std::size_t i = 0; i < n; ++i) {
    bool ok = depth.values[i] >= 0.f;
    pfm[i] = ok ? depth.values[i] : 0.f;
    mask[i] = ok ? 255 : 0;
    if (ok) {
      lo = std::min(lo, depth.values[i]);
      hi = std::max(hi, depth.values[i]);
    }
  }
  save_pfm(pfm, depth.width, depth.height, prefix + ".pfm");
  save_png_gray8(mask, depth.width, depth.height, prefix + "_mask.png");

  // Near = bright, far = dark; invalid pixels black.
  Image vis(depth.width, depth.height);
  const float range = (hi > lo) ? (hi - lo) : 1.f;
  for (std::size_t i = 0; i < n; ++i) {
    uint8_t rgb[3] = {0, 0, 0};
    if (mask[i]) depth_colormap(1.f - (depth.values[i] - lo) / range, rgb);
    // Bypass sRGB enc/dec: the ramp is already display-referred.
    vis.data[3 * i + 0] = srgb_decode(rgb[0] / 255.f);
    vis.data[3 * i + 1] = srgb_decode(rgb[1] / 255.f);
    vis.data[3 * i + 2] = srgb_decode(rgb[2] / 255.f);
  }
  save_png(vis, prefix + "_vis.png");
}

DepthMap load_depth_map_pfm(const std::string& pfm_path,
                            const std::string& mask_path) {
  int w = 0, h = 0;
  std::vector<float> values = load_pfm(pfm_path, w, h);
  DepthMap depth(w, h);
  if (!mask_path.empty()) {
    int mw = 0, mh = 0;
    std::vector<uint8_t> mask = load_png_gray8(mask_path, mw, mh);
    if (mw != w || mh != h)
      throw InputError("load_depth_map_pfm: mask dimensions mismatch for " +
                       mask_path);
    for (std::size_t i = 0; i < values.size(); ++i)
      depth.values[i] = mask[i] ? values[i] : DepthMap::kNoHit;
  } else {
    // Without a mask, zero depth is the no-hit marker (PFM convention above).
    for (std::size_t i = 0; i < values.size(); ++i)
      depth.values[i] = values[i] > 0.f ? values[i] : DepthMap::kNoHit;
  }
  return depth;
}

}  // namespace lucent
