#include "lucent/camera.hpp"

#include <cmath>

namespace lucent {

void Intrinsics::validate() const {
  if (width <= 0 || height <= 0)
    throw InputError("Intrinsics: non-positive image dimensions");
  if (fx <= 0 || fy <= 0) throw InputError("Intrinsics: focal length must be > 0");
  if (cx <= 0 || cx >= width || cy <= 0 || cy >= height)
    throw InputError("Intrinsics: principal point outside the image");
}

Intrinsics intrinsics_from_fov(int width, int height, double hfov_deg) {
  Intrinsics k;
  k.width = width;
  k.height = height;
  k.fx = k.fy = 0.5 * width / std::tan(0.5 * hfov_deg * kPi / 180.0);
  k.cx = 0.5 * width;
  k.cy = 0.5 * height;
  k.validate();
  return k;
}

void Pose::validate() const {
  Mat3 err = rotation.transpose() * rotation - Mat3::Identity();
  if (err.cwiseAbs().maxCoeff() > 1e-8)
    throw InputError("Pose: rotation is not orthonormal");
  if (rotation.determinant() < 0)
    throw InputError("Pose: rotation must have determinant +1");
}

Eigen::Matrix4d Pose::to_matrix() const {
  Eigen::Matrix4d m = Eigen::Matrix4d::Identity();
  m.topLeftCorner<3, 3>() = rotation;
  m.topRightCorner<3, 1>() = translation;
  return m;
}

Pose Pose::from_matrix(const Eigen::Matrix4d& m) {
  Pose pose;
  pose.rotation = m.topLeftCorner<3, 3>();
  pose.translation = m.topRightCorner<3, 1>();
  pose.validate();
  return pose;
}

Ray pixel_to_ray(const Camera& camera, double u, double v) {
  const Intrinsics& k = camera.intrinsics;
  if (u < 0 || u >= k.width || v < 0 || v >= k.height)
    throw InputError("pixel_to_ray: pixel out of bounds");
  // Image v grows downward while camera y points up.
  Vec3 dir_cam((u - k.cx) / k.fx, -(v - k.cy) / k.fy, -1.0);
  Ray ray;
  ray.origin = camera.pose.translation;
  ray.dir = (camera.pose.rotation * dir_cam).normalized();
  return ray;
}

bool project(const Camera& camera, const Vec3& point, double& u, double& v) {
  Vec3 q = camera.pose.rotation.transpose() * (point - camera.pose.translation);
  if (q.z() >= -1e-12) return false;
  u = camera.intrinsics.cx + camera.intrinsics.fx * (q.x() / -q.z());
  v = camera.intrinsics.cy - camera.intrinsics.fy * (q.y() / -q.z());
  return true;
}

Pose look_at_pose(const Vec3& eye, const Vec3& target, const Vec3& up) {
  Vec3 forward = target - eye;
  if (forward.norm() < 1e-12) throw InputError("look_at_pose: eye equals target");
  forward.normalize();
  Vec3 z = -forward;
  Vec3 x = up.cross(z);
  if (x.norm() < 1e-9)
    throw InputError("look_at_pose: up is parallel to the view direction");
  x.normalize();
  Vec3 y = z.cross(x);
  Pose pose;
  pose.rotation.col(0) = x;
  pose.rotation.col(1) = y;
  pose.rotation.col(2) = z;
  pose.translation = eye;
  return pose;
}

std::vector<Camera> make_grid_rig(int n_side, double extent, double height,
                                  const Vec3& target,
                                  const Intrinsics& intrinsics) {
  if (n_side < 2) throw InputError("make_grid_rig: n_side must be >= 2");
  intrinsics.validate();
  std::vector<Camera> rig;
  rig.reserve(std::size_t(n_side) * n_side);
  for (int i = 0; i < n_side; ++i) {
    for (int j = 0; j < n_side; ++j) {
      double x = -0.5 * extent + extent * j / (n_side - 1);
      double y = -0.5 * extent + extent * i / (n_side - 1);
      Vec3 eye(x, y, height);
      // Directly-overhead cameras would have up parallel to the view axis.
      Vec3 up = Vec3::UnitZ();
      if ((target - eye).normalized().cross(up).norm() < 1e-6) up = Vec3::UnitY();
      rig.push_back({intrinsics, look_at_pose(eye, target, up)});
    }
  }
  return rig;
}

std::vector<Camera> make_arc_rig(int count, double radius,
                                 const std::vector<double>& elevations_deg,
                                 const Vec3& target,
                                 const Intrinsics& intrinsics) {
  if (count < 1) throw InputError("make_arc_rig: count must be >= 1");
  if (radius <= 0) throw InputError("make_arc_rig: radius must be > 0");
  intrinsics.validate();
  std::vector<Camera> rig;
  rig.reserve(std::size_t(count) * elevations_deg.size());
  for (double elev_deg : elevations_deg) {
    double elev = elev_deg * kPi / 180.0;
    for (int j = 0; j < count; ++j) {
      double az = 2.0 * kPi * j / count;
      Vec3 eye = target + radius * Vec3(std::cos(elev) * std::cos(az),
                                        std::cos(elev) * std::sin(az),
                                        std::sin(elev));
      Vec3 up = Vec3::UnitZ();
      if ((target - eye).normalized().cross(up).norm() < 1e-6) up = Vec3::UnitY();
      rig.push_back({intrinsics, look_at_pose(eye, target, up)});
    }
  }
  return rig;
}

}  // namespace lucent
