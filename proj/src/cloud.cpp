#include "sympose/cloud.hpp"

#include <cmath>
#include <stdexcept>

namespace sympose {

PointCloud depth_to_cloud(const ViewFrame& view) {
  view.intrinsics.validate();
  const int w = view.intrinsics.width;
  const int h = view.intrinsics.height;
  if (view.depth.size() != static_cast<std::size_t>(w) * h)
    throw std::invalid_argument("depth_to_cloud: depth map size mismatch");
  const bool with_color = view.rgb.size() == static_cast<std::size_t>(w) * h * 3;

  PointCloud cloud;
  for (int v = 0; v < h; ++v) {
    for (int u = 0; u < w; ++u) {
      const float d = view.depth[static_cast<std::size_t>(v) * w + u];
      if (!(d > 0.0f) || !std::isfinite(d)) continue;
      cloud.points.push_back(view.intrinsics.backproject(u, v, d));
      if (with_color) {
        const std::size_t base = (static_cast<std::size_t>(v) * w + u) * 3;
        cloud.colors.emplace_back(view.rgb[base], view.rgb[base + 1], view.rgb[base + 2]);
      }
    }
  }
  if (cloud.points.empty()) throw std::runtime_error("empty cloud");
  return cloud;
}

PointCloud merge_views(const std::vector<ViewFrame>& views) {
  if (views.empty()) throw std::invalid_argument("merge_views: no views");

  PointCloud merged;
  const Pose world_to_first = invert(views.front().camera_pose);
  for (std::size_t k = 0; k < views.size(); ++k) {
    PointCloud part = depth_to_cloud(views[k]);
    if (k > 0) {
      const Pose rel = compose(world_to_first, views[k].camera_pose);
      for (auto& p : part.points) p = rel.apply(p);
    }
    merged.points.insert(merged.points.end(), part.points.begin(), part.points.end());
    merged.colors.insert(merged.colors.end(), part.colors.begin(), part.colors.end());
    merged.source_view.insert(merged.source_view.end(), part.points.size(), static_cast<int>(k));
  }
  return merged;
}

}  // namespace sympose
