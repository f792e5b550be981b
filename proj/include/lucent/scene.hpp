#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "lucent/camera.hpp"
#include "lucent/common.hpp"

namespace lucent {

struct Lambertian {
  Vec3 albedo = Vec3(0.5, 0.5, 0.5);  // components in [0,1]
};

struct Dielectric {
  double ior = 1.45;
  Vec3 tint = Vec3(1, 1, 1);  // transmission filter, components in [0,1]
};

struct Emissive {
  Vec3 radiance = Vec3(1, 1, 1);
  double watts = 1.0;
};

using Material = std::variant<Lambertian, Dielectric, Emissive>;

struct Sphere {
  Vec3 center = Vec3::Zero();
  double radius = 1.0;
};

struct Box {
  Vec3 min = Vec3::Zero();
  Vec3 max = Vec3::Ones();
};

struct Plane {
  Vec3 point = Vec3::Zero();
  Vec3 normal = Vec3::UnitZ();
};

using Shape = std::variant<Sphere, Box, Plane>;

struct Primitive {
  Shape shape;
  Material material;
  bool is_light_fixture = false;  // emissive bulb geometry; skipped by shadow rays
  bool generated = false;         // added by finalize_scene, not scene content
};

struct PointLight {
  Vec3 position = Vec3::Zero();
  double watts = 1.0;
};

// Rows x cols point lights evenly spread over an extent x extent square at
// `height` above the work surface, sharing `total_watts` equally.
struct LightArray {
  int rows = 1;
  int cols = 1;
  double extent = 0.0;
  double height = 1.0;
  double total_watts = 100.0;

  double watts_per_light() const { return total_watts / (rows * cols); }
};

LightArray make_light_array(int rows, int cols, double extent, double height,
                            double total_watts);

struct Scene {
  std::vector<Primitive> primitives;
  LightArray light_array;
  std::vector<PointLight> lights;  // expanded from light_array
  Vec3 background = Vec3::Zero();
  Plane work_surface;
  Vec3 work_surface_albedo = Vec3(0.5, 0.5, 0.5);
  double bulb_radius = 0.02;  // emissive sphere drawn at each light; 0 disables

  void validate() const;
};

// Adds the work surface primitive, expands the light array into point lights
// and (when bulb_radius > 0) small emissive spheres so the fixtures are
// visible in reflections. Call once after filling in the fields above.
void finalize_scene(Scene& scene);

// Diameter of the bounding sphere of all finite primitives (planes and light
// fixtures excluded). Used to normalize error tolerances.
double scene_diameter(const Scene& scene);

struct Hit {
  double t = 0;
  Vec3 point = Vec3::Zero();
  Vec3 normal = Vec3::UnitZ();  // faces against the incoming ray
  const Primitive* primitive = nullptr;
  bool exiting = false;  // hit from inside; normal was flipped
};

inline constexpr double kRayEpsilon = 1e-4;  // self-intersection bias, meters

// Nearest intersection with t > kRayEpsilon, or nullopt.
std::optional<Hit> intersect(const Scene& scene, const Ray& ray);

}  // namespace lucent
