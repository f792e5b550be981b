#pragma once

#include <cstdint>

#include "lucent/depth_map.hpp"
#include "lucent/image.hpp"
#include "lucent/scene.hpp"

namespace lucent {

inline constexpr int kDefaultTraceDepth = 8;

// Schlick reflectance for an interface n1 -> n2. cos_i is the cosine of the
// incident angle (>= 0). Returns 1 under total internal reflection.
double fresnel_schlick(double cos_i, double n1, double n2);

// Snell refraction. dir points into the surface, normal against it,
// eta = n1/n2. Returns false under total internal reflection.
bool refract_dir(const Vec3& dir, const Vec3& normal, double eta, Vec3& out);

// Recursive radiance estimate. Lambertian surfaces shade with direct point
// lights and shadow rays; dielectrics split into Fresnel-weighted reflection
// and refraction; emissive surfaces return their radiance. Exhausting the
// bounce budget returns the background color.
Vec3 trace_ray(const Scene& scene, const Ray& ray, int depth = kDefaultTraceDepth);

// Light reaching `point` from `light_pos` through the scene, as a spectral
// attenuation factor. Opaque blockers return 0; dielectrics transmit their
// tint; light fixtures never block.
Vec3 shadow_attenuation(const Scene& scene, const Vec3& point,
                        const Vec3& light_pos);

// spp jittered primary rays per pixel, averaged, clamped to [0,1]. The RNG is
// seeded per pixel index so the result is independent of thread count.
Image render_image(const Scene& scene, const Camera& camera, int spp,
                   uint64_t seed, int max_depth = kDefaultTraceDepth);

// Ground-truth distance along the ray to the first surface, dielectric
// surfaces included. No-hit pixels carry the sentinel.
DepthMap oracle_depth_map(const Scene& scene, const Camera& camera);

enum class HitKind : uint8_t { kNone = 0, kOpaque = 1, kDielectric = 2 };

// What the first surface at each pixel is made of; pairs with oracle_depth_map
// to restrict depth metrics to transparent-object pixels.
std::vector<HitKind> oracle_hit_kinds(const Scene& scene, const Camera& camera);

}  // namespace lucent
