#include "sympose/pose.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <Eigen/Geometry>
#include <nlohmann/json.hpp>

namespace sympose {

Pose compose(const Pose& a, const Pose& b) {
  Pose out;
  out.rotation = a.rotation * b.rotation;
  out.translation = a.rotation * b.translation + a.translation;
  return out;
}

Pose invert(const Pose& p) {
  Pose out;
  out.rotation = p.rotation.transpose();
  out.translation = -(out.rotation * p.translation);
  return out;
}

bool pose_is_valid(const Pose& p, double tol) {
  const Eigen::Matrix3d err = p.rotation.transpose() * p.rotation - Eigen::Matrix3d::Identity();
  if (err.cwiseAbs().maxCoeff() > tol) return false;
  if (std::abs(p.rotation.determinant() - 1.0) > tol) return false;
  return p.translation.allFinite();
}

double rotation_angle_between(const Eigen::Matrix3d& a, const Eigen::Matrix3d& b) {
  const double tr = (a.transpose() * b).trace();
  const double c = std::clamp((tr - 1.0) / 2.0, -1.0, 1.0);
  return std::acos(c);
}

Eigen::Matrix3d axis_angle_rotation(const Eigen::Vector3d& axis, double angle) {
  const double n = axis.norm();
  if (n < 1e-15) throw std::invalid_argument("axis_angle_rotation: zero axis");
  return Eigen::AngleAxisd(angle, axis / n).toRotationMatrix();
}

nlohmann::json pose_to_json(const Pose& p) {
  nlohmann::json rot = nlohmann::json::array();
  for (int r = 0; r < 3; ++r) {
    rot.push_back({p.rotation(r, 0), p.rotation(r, 1), p.rotation(r, 2)});
  }
  return nlohmann::json{
      {"rotation", rot},
      {"translation", {p.translation.x(), p.translation.y(), p.translation.z()}}};
}

Pose pose_from_json(const nlohmann::json& j) {
  Pose p;
  if (j.contains("quaternion")) {
    const auto& q = j.at("quaternion");
    Eigen::Quaterniond quat(q.at(0).get<double>(), q.at(1).get<double>(), q.at(2).get<double>(),
                            q.at(3).get<double>());
    if (quat.norm() < 1e-12) throw std::runtime_error("pose_from_json: zero quaternion");
    quat.normalize();
    p.rotation = quat.toRotationMatrix();
  } else {
    const auto& rot = j.at("rotation");
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) p.rotation(r, c) = rot.at(r).at(c).get<double>();
  }
  const auto& t = j.at("translation");
  p.translation = Eigen::Vector3d(t.at(0).get<double>(), t.at(1).get<double>(), t.at(2).get<double>());
  return p;
}

}  // namespace sympose
