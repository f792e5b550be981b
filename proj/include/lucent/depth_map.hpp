#pragma once

#include <string>
#include <vector>

namespace lucent {

// Per-pixel depth in meters along the camera ray. Invalid (no-hit) pixels
// carry the sentinel -1.0 in memory; on disk they become 0 in the PFM with a
// companion 8-bit mask marking validity.
struct DepthMap {
  static constexpr float kNoHit = -1.0f;

  int width = 0;
  int height = 0;
  std::vector<float> values;

  DepthMap() = default;
  DepthMap(int w, int h)
      : width(w), height(h), values(std::size_t(w) * h, kNoHit) {}

  float& at(int x, int y) { return values[std::size_t(y) * width + x]; }
  float at(int x, int y) const { return values[std::size_t(y) * width + x]; }
  bool valid(int x, int y) const { return at(x, y) >= 0.f; }

  std::size_t valid_count() const {
    std::size_t n = 0;
    for (float v : values) n += (v >= 0.f);
    return n;
  }
};

// Writes <prefix>.pfm (invalid pixels as 0), <prefix>_mask.png and a
// colormapped <prefix>_vis.png for inspection.
void save_depth_map(const DepthMap& depth, const std::string& prefix);
DepthMap load_depth_map_pfm(const std::string& pfm_path,
                            const std::string& mask_path = "");

// Maps t in [0,1] onto a viridis-style ramp (piecewise-linear between the
// control points documented in the implementation).
void depth_colormap(float t, uint8_t rgb[3]);

}  // namespace lucent
