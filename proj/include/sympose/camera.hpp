#pragma once

#include <stdexcept>
#include <vector>

#include <Eigen/Core>
#include <nlohmann/json_fwd.hpp>

#include "sympose/pose.hpp"

namespace sympose {

struct CameraIntrinsics {
  double fx = 0.0, fy = 0.0;  // focal lengths, pixels
  double cx = 0.0, cy = 0.0;  // principal point, pixels
  int width = 0, height = 0;

  void validate() const {
    if (fx <= 0.0 || fy <= 0.0) throw std::invalid_argument("intrinsics: focal length must be positive");
    if (width <= 0 || height <= 0) throw std::invalid_argument("intrinsics: empty image plane");
    if (cx < 0.0 || cx >= width || cy < 0.0 || cy >= height)
      throw std::invalid_argument("intrinsics: principal point outside image");
  }

  // camera-frame point (z > 0) to pixel coordinates
  Eigen::Vector2d project(const Eigen::Vector3d& p) const {
    return {fx * p.x() / p.z() + cx, fy * p.y() / p.z() + cy};
  }

  // pixel + depth to camera-frame point
  Eigen::Vector3d backproject(double u, double v, double depth) const {
    return {(u - cx) * depth / fx, (v - cy) * depth / fy, depth};
  }
};

nlohmann::json intrinsics_to_json(const CameraIntrinsics& k);
CameraIntrinsics intrinsics_from_json(const nlohmann::json& j);

// One synchronized RGB-D view. rgb is row-major H*W*3 in [0,1]; depth is
// row-major H*W meters with 0 marking invalid pixels. camera_pose maps
// camera coordinates to world coordinates.
struct ViewFrame {
  std::vector<float> rgb;
  std::vector<float> depth;
  CameraIntrinsics intrinsics;
  Pose camera_pose;

  float depth_at(int u, int v) const { return depth[static_cast<std::size_t>(v) * intrinsics.width + u]; }
};

}  // namespace sympose
