#pragma once

#include <Eigen/Core>

#include <nlohmann/json_fwd.hpp>

namespace sympose {

// Rigid transform [R|t]: rotation is orthonormal with det +1, translation in
// meters. Maps object/world coordinates into the target frame.
struct Pose {
  Eigen::Matrix3d rotation = Eigen::Matrix3d::Identity();
  Eigen::Vector3d translation = Eigen::Vector3d::Zero();

  static Pose identity() { return Pose{}; }

  Eigen::Vector3d apply(const Eigen::Vector3d& p) const { return rotation * p + translation; }
};

// result applies b first, then a
Pose compose(const Pose& a, const Pose& b);

Pose invert(const Pose& p);

bool pose_is_valid(const Pose& p, double tol = 1e-9);

// geodesic angle between the two rotations, radians
double rotation_angle_between(const Eigen::Matrix3d& a, const Eigen::Matrix3d& b);

Eigen::Matrix3d axis_angle_rotation(const Eigen::Vector3d& axis, double angle);

// {"rotation": [[...]x3], "translation": [x,y,z]}; a {"quaternion": [w,x,y,z]}
// field is accepted in place of the matrix and converted on load.
nlohmann::json pose_to_json(const Pose& p);
Pose pose_from_json(const nlohmann::json& j);

}  // namespace sympose
