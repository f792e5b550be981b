#include "lucent/tracer.hpp"

#include <algorithm>
#include <cmath>

namespace lucent {

double fresnel_schlick(double cos_i, double n1, double n2) {
  double eta = n1 / n2;
  double sin2_t = eta * eta * (1.0 - cos_i * cos_i);
  if (sin2_t > 1.0) return 1.0;
  // Use the angle on the denser side so grazing exits stay continuous up to
  // the critical angle.
  double cos_x = n1 > n2 ? std::sqrt(1.0 - sin2_t) : cos_i;
  double r0 = (n1 - n2) / (n1 + n2);
  r0 *= r0;
  double m = 1.0 - cos_x;
  return r0 + (1.0 - r0) * m * m * m * m * m;
}

bool refract_dir(const Vec3& dir, const Vec3& normal, double eta, Vec3& out) {
  double cos_i = -dir.dot(normal);
  double sin2_t = eta * eta * (1.0 - cos_i * cos_i);
  if (sin2_t > 1.0) return false;
  out = eta * dir + (eta * cos_i - std::sqrt(1.0 - sin2_t)) * normal;
  out.normalize();
  return true;
}

Vec3 shadow_attenuation(const Scene& scene, const Vec3& point,
                        const Vec3& light_pos) {
  Vec3 attenuation = Vec3::Ones();
  Vec3 origin = point;
  // A shadow ray may cross several dielectric surfaces; cap the march.
  for (int step = 0; step < 32; ++step) {
    Vec3 to_light = light_pos - origin;
    double dist = to_light.norm();
    if (dist < kRayEpsilon) break;
    Ray ray{origin, to_light / dist};
    auto hit = intersect(scene, ray);
    if (!hit || hit->t >= dist - kRayEpsilon) break;
    if (hit->primitive->is_light_fixture) {
      // Fixtures do not shade their own (or any) light; step past.
      origin = hit->point + kRayEpsilon * ray.dir;
      continue;
    }
    if (const auto* die = std::get_if<Dielectric>(&hit->primitive->material)) {
      attenuation = attenuation.cwiseProduct(die->tint);
      if (attenuation.maxCoeff() < 1e-6) return Vec3::Zero();
      origin = hit->point + kRayEpsilon * ray.dir;
      continue;
    }
    return Vec3::Zero();
  }
  return attenuation;
}

namespace {

Vec3 shade_lambertian(const Scene& scene, const Hit& hit, const Vec3& albedo) {
  Vec3 radiance = Vec3::Zero();
  for (const PointLight& light : scene.lights) {
    Vec3 to_light = light.position - hit.point;
    double dist2 = to_light.squaredNorm();
    if (dist2 < 1e-12) continue;
    double dist = std::sqrt(dist2);
    Vec3 l = to_light / dist;
    double cos_n = hit.normal.dot(l);
    if (cos_n <= 0) continue;
    Vec3 attenuation =
        shadow_attenuation(scene, hit.point + kRayEpsilon * hit.normal,
                           light.position);
    if (attenuation.maxCoeff() <= 0) continue;
    double irradiance = light.watts / (4.0 * kPi * dist2);
    radiance += irradiance * cos_n * attenuation;
  }
  return (albedo / kPi).cwiseProduct(radiance);
}

}  // namespace

Vec3 trace_ray(const Scene& scene, const Ray& ray, int depth) {
  if (depth < 0) throw InputError("trace_ray: depth must be >= 0");
  if (depth == 0) return scene.background;
  auto hit = intersect(scene, ray);
  if (!hit) return scene.background;

  const Material& material = hit->primitive->material;
  if (const auto* emissive = std::get_if<Emissive>(&material))
    return emissive->radiance;
  if (const auto* lam = std::get_if<Lambertian>(&material))
    return shade_lambertian(scene, *hit, lam->albedo);

  const auto& die = std::get<Dielectric>(material);
  double n1 = hit->exiting ? die.ior : 1.0;
  double n2 = hit->exiting ? 1.0 : die.ior;
  double cos_i = std::clamp(-ray.dir.dot(hit->normal), 0.0, 1.0);
  double reflectance = fresnel_schlick(cos_i, n1, n2);

  Vec3 reflected_dir = ray.dir + 2.0 * cos_i * hit->normal;
  Ray reflected{hit->point + kRayEpsilon * hit->normal,
                reflected_dir.normalized()};
  Vec3 radiance = reflectance * trace_ray(scene, reflected, depth - 1);

  if (reflectance < 1.0) {
    Vec3 refracted_dir;
    if (refract_dir(ray.dir, hit->normal, n1 / n2, refracted_dir)) {
      Ray refracted{hit->point - kRayEpsilon * hit->normal, refracted_dir};
      Vec3 transmitted = trace_ray(scene, refracted, depth - 1);
      radiance += (1.0 - reflectance) * die.tint.cwiseProduct(transmitted);
    }
  }
  return radiance;
}

Image render_image(const Scene& scene, const Camera& camera, int spp,
                   uint64_t seed, int max_depth) {
  const Intrinsics& k = camera.intrinsics;
  if (k.width <= 0 || k.height <= 0)
    throw InputError("render_image: zero-sized image");
  if (spp < 1) throw InputError("render_image: spp must be >= 1");

  Image image(k.width, k.height);
  parallel_chunks(std::size_t(k.height), 1, [&](std::size_t y0, std::size_t,
                                                std::size_t) {
    int y = static_cast<int>(y0);
    for (int x = 0; x < k.width; ++x) {
      std::size_t pixel = std::size_t(y) * k.width + x;
      Pcg32 rng(seed_fanout(seed, "render.pixel", pixel));
      Vec3 sum = Vec3::Zero();
      for (int s = 0; s < spp; ++s) {
        double u = x + rng.uniform();
        double v = y + rng.uniform();
        sum += trace_ray(scene, pixel_to_ray(camera, u, v), max_depth);
      }
      Vec3 c = sum / spp;
      float* px = image.at(x, y);
      px[0] = static_cast<float>(std::clamp(c.x(), 0.0, 1.0));
      px[1] = static_cast<float>(std::clamp(c.y(), 0.0, 1.0));
      px[2] = static_cast<float>(std::clamp(c.z(), 0.0, 1.0));
    }
  });
  return image;
}

DepthMap oracle_depth_map(const Scene& scene, const Camera& camera) {
  const Intrinsics& k = camera.intrinsics;
  k.validate();
  DepthMap depth(k.width, k.height);
  parallel_chunks(std::size_t(k.height), 1, [&](std::size_t y0, std::size_t,
                                                std::size_t) {
    int y = static_cast<int>(y0);
    for (int x = 0; x < k.width; ++x) {
      Ray ray = pixel_to_ray(camera, x + 0.5, y + 0.5);
      auto hit = intersect(scene, ray);
      depth.at(x, y) = hit ? static_cast<float>(hit->t) : DepthMap::kNoHit;
    }
  });
  return depth;
}

std::vector<HitKind> oracle_hit_kinds(const Scene& scene, const Camera& camera) {
  const Intrinsics& k = camera.intrinsics;
  k.validate();
  std::vector<HitKind> kinds(std::size_t(k.width) * k.height, HitKind::kNone);
  parallel_chunks(std::size_t(k.height), 1, [&](std::size_t y0, std::size_t,
                                                std::size_t) {
    int y = static_cast<int>(y0);
    for (int x = 0; x < k.width; ++x) {
      Ray ray = pixel_to_ray(camera, x + 0.5, y + 0.5);
      auto hit = intersect(scene, ray);
      if (!hit) continue;
      kinds[std::size_t(y) * k.width + x] =
          std::holds_alternative<Dielectric>(hit->primitive->material)
              ? HitKind::kDielectric
              : HitKind::kOpaque;
    }
  });
  return kinds;
}

}  // namespace lucent
