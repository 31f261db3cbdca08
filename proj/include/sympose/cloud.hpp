#pragma once

#include <vector>

#include <Eigen/Core>

#include "sympose/camera.hpp"

namespace sympose {

struct PointCloud {
  std::vector<Eigen::Vector3d> points;
  std::vector<Eigen::Vector3f> colors;     // optional, unit interval
  std::vector<int> source_view;            // optional, per-point view index

  std::size_t size() const { return points.size(); }
  bool has_colors() const { return colors.size() == points.size(); }
};

// Back-projects every valid (depth > 0) pixel through the intrinsics into the
// camera frame, in row-major pixel order. Throws "empty cloud" when no pixel
// is valid.
PointCloud depth_to_cloud(const ViewFrame& view);

// Per-view clouds expressed in the first camera's frame and concatenated in
// view order; source_view records the origin of each point.
PointCloud merge_views(const std::vector<ViewFrame>& views);

}  // namespace sympose
