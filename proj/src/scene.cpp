#include "lucent/scene.hpp"

#include <cmath>
#include <limits>

namespace lucent {

LightArray make_light_array(int rows, int cols, double extent, double height,
                            double total_watts) {
  if (rows < 1 || cols < 1)
    throw InputError("make_light_array: rows and cols must be >= 1");
  if (total_watts <= 0)
    throw InputError("make_light_array: total_watts must be > 0");
  if (extent <= 0 && rows * cols > 1)
    throw InputError("make_light_array: extent must be > 0 for more than one light");
  return LightArray{rows, cols, extent, height, total_watts};
}

namespace {

void check_color(const Vec3& c, const char* what) {
  if (c.minCoeff() < 0 || c.maxCoeff() > 1)
    throw InputError(std::string(what) + " components must be in [0,1]");
}

void validate_material(const Material& m) {
  if (const auto* lam = std::get_if<Lambertian>(&m)) {
    check_color(lam->albedo, "albedo");
  } else if (const auto* die = std::get_if<Dielectric>(&m)) {
    if (die->ior <= 1.0) throw InputError("dielectric ior must be > 1");
    check_color(die->tint, "tint");
  } else if (const auto* emi = std::get_if<Emissive>(&m)) {
    if (emi->watts <= 0) throw InputError("emissive watts must be > 0");
  }
}

void validate_shape(const Shape& s) {
  if (const auto* sph = std::get_if<Sphere>(&s)) {
    if (sph->radius <= 0) throw InputError("sphere radius must be > 0");
  } else if (const auto* box = std::get_if<Box>(&s)) {
    if ((box->max - box->min).minCoeff() <= 0)
      throw InputError("box min must be strictly below max componentwise");
  } else if (const auto* pl = std::get_if<Plane>(&s)) {
    if (std::abs(pl->normal.norm() - 1.0) > 1e-9)
      throw InputError("plane normal must be unit length");
  }
}

}  // namespace

void Scene::validate() const {
  check_color(background, "background");
  check_color(work_surface_albedo, "work surface albedo");
  if (std::abs(work_surface.normal.norm() - 1.0) > 1e-9)
    throw InputError("work surface normal must be unit length");
  if (lights.empty()) throw InputError("scene must have at least one light");
  for (const Primitive& p : primitives) {
    validate_shape(p.shape);
    validate_material(p.material);
  }
}

void finalize_scene(Scene& scene) {
  const LightArray& array = scene.light_array;
  if (array.rows < 1 || array.cols < 1)
    throw InputError("scene light array must have rows, cols >= 1");

  scene.primitives.push_back(
      {Plane{scene.work_surface.point, scene.work_surface.normal.normalized()},
       Lambertian{scene.work_surface_albedo}});

  scene.lights.clear();
  const double w = array.watts_per_light();
  for (int i = 0; i < array.rows; ++i) {
    for (int j = 0; j < array.cols; ++j) {
      double x = array.cols > 1 ? -0.5 * array.extent + array.extent * j / (array.cols - 1) : 0.0;
      double y = array.rows > 1 ? -0.5 * array.extent + array.extent * i / (array.rows - 1) : 0.0;
      Vec3 pos = scene.work_surface.point + Vec3(x, y, 0) +
                 array.height * scene.work_surface.normal;
      scene.lights.push_back({pos, w});
      if (scene.bulb_radius > 0) {
        // Surface radiance of a Lambertian sphere emitting w watts.
        double r = scene.bulb_radius;
        Vec3 radiance = Vec3::Ones() * (w / (4.0 * kPi * kPi * r * r));
        scene.primitives.push_back(
            {Sphere{pos, r}, Emissive{radiance, w}, /*is_light_fixture=*/true});
      }
    }
  }
  scene.validate();
}

double scene_diameter(const Scene& scene) {
  Vec3 lo = Vec3::Constant(std::numeric_limits<double>::max());
  Vec3 hi = Vec3::Constant(std::numeric_limits<double>::lowest());
  bool any = false;
  for (const Primitive& p : scene.primitives) {
    if (p.is_light_fixture) continue;
    if (const auto* sph = std::get_if<Sphere>(&p.shape)) {
      lo = lo.cwiseMin(sph->center - Vec3::Constant(sph->radius));
      hi = hi.cwiseMax(sph->center + Vec3::Constant(sph->radius));
      any = true;
    } else if (const auto* box = std::get_if<Box>(&p.shape)) {
      lo = lo.cwiseMin(box->min);
      hi = hi.cwiseMax(box->max);
      any = true;
    }
  }
  return any ? (hi - lo).norm() : 0.0;
}

namespace {

bool intersect_sphere(const Sphere& s, const Ray& ray, double& t, bool& exiting) {
  Vec3 oc = ray.origin - s.center;
  double b = oc.dot(ray.dir);
  double c = oc.squaredNorm() - s.radius * s.radius;
  double disc = b * b - c;
  if (disc < 0) return false;
  double sq = std::sqrt(disc);
  double t0 = -b - sq;
  double t1 = -b + sq;
  if (t0 > kRayEpsilon) {
    t = t0;
    exiting = false;
    return true;
  }
  if (t1 > kRayEpsilon) {
    t = t1;
    exiting = true;  // origin inside (or on) the sphere
    return true;
  }
  return false;
}

bool intersect_box(const Box& box, const Ray& ray, double& t, bool& exiting,
                   Vec3& normal) {
  double t_near = -std::numeric_limits<double>::infinity();
  double t_far = std::numeric_limits<double>::infinity();
  int near_axis = 0, far_axis = 0;
  for (int a = 0; a < 3; ++a) {
    if (std::abs(ray.dir[a]) < 1e-15) {
      if (ray.origin[a] < box.min[a] || ray.origin[a] > box.max[a]) return false;
      continue;
    }
    double inv = 1.0 / ray.dir[a];
    double lo = (box.min[a] - ray.origin[a]) * inv;
    double hi = (box.max[a] - ray.origin[a]) * inv;
    if (lo > hi) std::swap(lo, hi);
    if (lo > t_near) {
      t_near = lo;
      near_axis = a;
    }
    if (hi < t_far) {
      t_far = hi;
      far_axis = a;
    }
    if (t_near > t_far) return false;
  }
  if (t_far <= kRayEpsilon) return false;
  if (t_near > kRayEpsilon) {
    t = t_near;
    exiting = false;
    normal = Vec3::Zero();
    normal[near_axis] = ray.dir[near_axis] > 0 ? -1.0 : 1.0;
  } else {
    t = t_far;
    exiting = true;
    normal = Vec3::Zero();
    normal[far_axis] = ray.dir[far_axis] > 0 ? -1.0 : 1.0;
  }
  return true;
}

bool intersect_plane(const Plane& plane, const Ray& ray, double& t) {
  double denom = ray.dir.dot(plane.normal);
  if (std::abs(denom) < 1e-12) return false;
  double tt = (plane.point - ray.origin).dot(plane.normal) / denom;
  if (tt <= kRayEpsilon) return false;
  t = tt;
  return true;
}

}  // namespace

std::optional<Hit> intersect(const Scene& scene, const Ray& ray) {
  std::optional<Hit> best;
  for (const Primitive& prim : scene.primitives) {
    double t;
    bool exiting = false;
    Vec3 normal;
    bool ok = false;
    if (const auto* sph = std::get_if<Sphere>(&prim.shape)) {
      ok = intersect_sphere(*sph, ray, t, exiting);
      if (ok) {
        Vec3 p = ray.origin + t * ray.dir;
        normal = (p - sph->center).normalized();
        if (exiting) normal = -normal;
      }
    } else if (const auto* box = std::get_if<Box>(&prim.shape)) {
      ok = intersect_box(*box, ray, t, exiting, normal);
    } else if (const auto* pl = std::get_if<Plane>(&prim.shape)) {
      ok = intersect_plane(*pl, ray, t);
      if (ok) {
        exiting = false;
        normal = ray.dir.dot(pl->normal) > 0 ? Vec3(-pl->normal) : pl->normal;
      }
    }
    if (ok && (!best || t < best->t)) {
      Hit hit;
      hit.t = t;
      hit.point = ray.origin + t * ray.dir;
      hit.normal = normal;
      hit.primitive = &prim;
      hit.exiting = exiting;
      best = hit;
    }
  }
  return best;
}

}  // namespace lucent
