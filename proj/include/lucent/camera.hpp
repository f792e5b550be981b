#pragma once

#include <vector>

#include "lucent/common.hpp"

namespace lucent {

struct Ray {
  Vec3 origin = Vec3::Zero();
  Vec3 dir = -Vec3::UnitZ();  // unit length
};

// Distortion-free pinhole intrinsics.
struct Intrinsics {
  double fx = 0, fy = 0;
  double cx = 0, cy = 0;
  int width = 0, height = 0;

  void validate() const;
};

// Builds square-pixel intrinsics from a horizontal field of view in degrees.
Intrinsics intrinsics_from_fov(int width, int height, double hfov_deg);

// Rigid camera pose. rotation maps camera coordinates to world coordinates;
// translation is the camera center in world coordinates. Camera convention:
// looks along -z, x right, y up.
struct Pose {
  Mat3 rotation = Mat3::Identity();
  Vec3 translation = Vec3::Zero();

  void validate() const;  // orthonormal within 1e-8, det +1
  Eigen::Matrix4d to_matrix() const;
  static Pose from_matrix(const Eigen::Matrix4d& m);
};

struct Camera {
  Intrinsics intrinsics;
  Pose pose;
};

// World-space ray through sub-pixel coordinate (u, v). Out-of-bounds pixels
// are rejected.
Ray pixel_to_ray(const Camera& camera, double u, double v);

// Inverse of pixel_to_ray for points in front of the camera. Returns false
// when the point is at or behind the camera plane.
bool project(const Camera& camera, const Vec3& point, double& u, double& v);

Pose look_at_pose(const Vec3& eye, const Vec3& target, const Vec3& up);

// n_side x n_side cameras evenly spaced over an extent x extent square at the
// given height above the origin plane, all looking at target.
std::vector<Camera> make_grid_rig(int n_side, double extent, double height,
                                  const Vec3& target,
                                  const Intrinsics& intrinsics);

// `count` cameras evenly spaced in azimuth at each elevation (degrees above
// the horizontal) on a sphere of the given radius about target.
std::vector<Camera> make_arc_rig(int count, double radius,
                                 const std::vector<double>& elevations_deg,
                                 const Vec3& target,
                                 const Intrinsics& intrinsics);

}  // namespace lucent
