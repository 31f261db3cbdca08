#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Core>

namespace sympose {

// All mesh-derived quantities (samples, centroid, diameter) come from this
// fixed seed so that symmetry thresholds and metric sampling agree.
inline constexpr std::uint64_t kSurfaceSampleSeed = 20240915ULL;
inline constexpr int kSurfaceSampleCount = 8192;

// Triangle mesh in the object frame with precomputed surface samples.
struct Mesh {
  std::string name;
  std::vector<Eigen::Vector3d> vertices;
  std::vector<std::array<int, 3>> faces;

  // area-weighted surface samples and their face normals
  std::vector<Eigen::Vector3d> surface_samples;
  std::vector<Eigen::Vector3d> sample_normals;

  Eigen::Vector3d centroid = Eigen::Vector3d::Zero();  // centroid of samples
  double diameter = 0.0;                               // max pairwise vertex distance

  void validate() const;
};

// Fills surface_samples/sample_normals/centroid/diameter. Deterministic for a
// fixed seed.
void sample_surface(Mesh& mesh, int count = kSurfaceSampleCount,
                    std::uint64_t seed = kSurfaceSampleSeed);

double surface_area(const Mesh& mesh);

// parametric shapes, centered on the origin unless noted
Mesh make_cuboid(double sx, double sy, double sz, const std::string& name = "cuboid");
Mesh make_cylinder(double radius, double height, int segments = 48,
                   const std::string& name = "cylinder");
// cuboid with the top face tilted into a ramp; no rotational symmetry
Mesh make_ramp_box(double sx, double sy, double z_low, double z_high,
                   const std::string& name = "rampbox");
// point-symmetric Z-shaped prism; exactly one 180-degree symmetry about z
Mesh make_z_clamp(double arm, double thickness, double height,
                  const std::string& name = "clamp");
Mesh make_scalene_tetrahedron(double scale, const std::string& name = "tetra");

// I/O: ASCII/binary-little-endian PLY and Wavefront OBJ (triangulated on
// load). Loading runs sample_surface with the defaults.
Mesh load_mesh(const std::string& path);
void save_mesh_ply(const Mesh& mesh, const std::string& path);

}  // namespace sympose
