#include "sympose/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include <Eigen/Dense>

#include "sympose/rng.hpp"

namespace sympose {

namespace {

Eigen::Vector3d face_normal(const Mesh& m, const std::array<int, 3>& f) {
  const Eigen::Vector3d e1 = m.vertices[f[1]] - m.vertices[f[0]];
  const Eigen::Vector3d e2 = m.vertices[f[2]] - m.vertices[f[0]];
  const Eigen::Vector3d n = e1.cross(e2);
  const double len = n.norm();
  return len > 1e-15 ? Eigen::Vector3d(n / len) : Eigen::Vector3d::UnitZ();
}

double face_area(const Mesh& m, const std::array<int, 3>& f) {
  const Eigen::Vector3d e1 = m.vertices[f[1]] - m.vertices[f[0]];
  const Eigen::Vector3d e2 = m.vertices[f[2]] - m.vertices[f[0]];
  return 0.5 * e1.cross(e2).norm();
}

}  // namespace

void Mesh::validate() const {
  if (vertices.size() < 4) throw std::runtime_error("mesh: needs at least 4 vertices");
  for (const auto& f : faces) {
    for (int idx : f) {
      if (idx < 0 || idx >= static_cast<int>(vertices.size()))
        throw std::runtime_error("mesh: face index out of range");
    }
  }
  for (const auto& v : vertices) {
    if (!v.allFinite()) throw std::runtime_error("mesh: non-finite vertex");
  }
  // symmetry analysis needs a full-rank point spread
  Eigen::Vector3d mean = Eigen::Vector3d::Zero();
  for (const auto& v : vertices) mean += v;
  mean /= static_cast<double>(vertices.size());
  Eigen::Matrix3d cov = Eigen::Matrix3d::Zero();
  for (const auto& v : vertices) cov += (v - mean) * (v - mean).transpose();
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> es(cov);
  if (es.eigenvalues()(0) < 1e-12 * std::max(1.0, es.eigenvalues()(2)))
    throw std::runtime_error("mesh: degenerate (rank < 3 point spread)");
}

double surface_area(const Mesh& mesh) {
  double a = 0.0;
  for (const auto& f : mesh.faces) a += face_area(mesh, f);
  return a;
}

void sample_surface(Mesh& mesh, int count, std::uint64_t seed) {
  if (mesh.faces.empty()) throw std::runtime_error("mesh: no faces to sample");

  std::vector<double> cumulative(mesh.faces.size());
  double total = 0.0;
  for (std::size_t i = 0; i < mesh.faces.size(); ++i) {
    total += face_area(mesh, mesh.faces[i]);
    cumulative[i] = total;
  }
  if (total <= 0.0) throw std::runtime_error("mesh: zero surface area");

  Rng rng(seed, "surface-sample", fnv1a64(mesh.name));
  mesh.surface_samples.resize(count);
  mesh.sample_normals.resize(count);
  for (int i = 0; i < count; ++i) {
    const double pick = rng.uniform() * total;
    const std::size_t fi =
        std::lower_bound(cumulative.begin(), cumulative.end(), pick) - cumulative.begin();
    const auto& f = mesh.faces[std::min(fi, mesh.faces.size() - 1)];
    // uniform barycentric sample
    double u = rng.uniform();
    double v = rng.uniform();
    if (u + v > 1.0) {
      u = 1.0 - u;
      v = 1.0 - v;
    }
    mesh.surface_samples[i] =
        mesh.vertices[f[0]] + u * (mesh.vertices[f[1]] - mesh.vertices[f[0]]) +
        v * (mesh.vertices[f[2]] - mesh.vertices[f[0]]);
    mesh.sample_normals[i] = face_normal(mesh, f);
  }

  mesh.centroid = Eigen::Vector3d::Zero();
  for (const auto& p : mesh.surface_samples) mesh.centroid += p;
  mesh.centroid /= static_cast<double>(count);

  mesh.diameter = 0.0;
  for (std::size_t i = 0; i < mesh.vertices.size(); ++i)
    for (std::size_t j = i + 1; j < mesh.vertices.size(); ++j)
      mesh.diameter = std::max(mesh.diameter, (mesh.vertices[i] - mesh.vertices[j]).norm());
}

namespace {

void add_quad(Mesh& m, int a, int b, int c, int d) {
  m.faces.push_back({a, b, c});
  m.faces.push_back({a, c, d});
}

void finish(Mesh& m, int samples = kSurfaceSampleCount) {
  m.validate();
  sample_surface(m, samples);
}

// ear clipping for a simple CCW polygon
std::vector<std::array<int, 3>> triangulate_polygon(const std::vector<Eigen::Vector2d>& poly) {
  auto cross2 = [](const Eigen::Vector2d& a, const Eigen::Vector2d& b) {
    return a.x() * b.y() - a.y() * b.x();
  };
  std::vector<int> idx(poly.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::vector<std::array<int, 3>> tris;
  int guard = 0;
  while (idx.size() > 3 && guard++ < 100000) {
    bool clipped = false;
    for (std::size_t k = 0; k < idx.size(); ++k) {
      const int ia = idx[(k + idx.size() - 1) % idx.size()];
      const int ib = idx[k];
      const int ic = idx[(k + 1) % idx.size()];
      const auto &A = poly[ia], &B = poly[ib], &C = poly[ic];
      if (cross2(B - A, C - B) <= 1e-15) continue;  // reflex or degenerate corner
      bool contains = false;
      for (int other : idx) {
        if (other == ia || other == ib || other == ic) continue;
        const auto& P = poly[other];
        if (cross2(B - A, P - A) >= -1e-15 && cross2(C - B, P - B) >= -1e-15 &&
            cross2(A - C, P - C) >= -1e-15) {
          contains = true;
          break;
        }
      }
      if (contains) continue;
      tris.push_back({ia, ib, ic});
      idx.erase(idx.begin() + static_cast<std::ptrdiff_t>(k));
      clipped = true;
      break;
    }
    if (!clipped) throw std::runtime_error("polygon triangulation failed");
  }
  if (idx.size() == 3) tris.push_back({idx[0], idx[1], idx[2]});
  return tris;
}

// extrudes a simple CCW polygon along z
Mesh extrude_polygon(const std::vector<Eigen::Vector2d>& poly, double z0, double z1,
                     const std::string& name) {
  Mesh m;
  m.name = name;
  const int n = static_cast<int>(poly.size());
  for (const auto& p : poly) m.vertices.emplace_back(p.x(), p.y(), z0);
  for (const auto& p : poly) m.vertices.emplace_back(p.x(), p.y(), z1);
  for (const auto& t : triangulate_polygon(poly)) {
    m.faces.push_back({t[0], t[2], t[1]});                  // bottom, outward -z
    m.faces.push_back({n + t[0], n + t[1], n + t[2]});      // top, outward +z
  }
  for (int i = 0; i < n; ++i) {
    const int j = (i + 1) % n;
    add_quad(m, i, j, n + j, n + i);
  }
  return m;
}

}  // namespace

Mesh make_cuboid(double sx, double sy, double sz, const std::string& name) {
  Mesh m;
  m.name = name;
  const double x = sx / 2, y = sy / 2, z = sz / 2;
  m.vertices = {{-x, -y, -z}, {x, -y, -z}, {x, y, -z}, {-x, y, -z},
                {-x, -y, z},  {x, -y, z},  {x, y, z},  {-x, y, z}};
  add_quad(m, 0, 3, 2, 1);  // bottom
  add_quad(m, 4, 5, 6, 7);  // top
  add_quad(m, 0, 1, 5, 4);  // -y
  add_quad(m, 2, 3, 7, 6);  // +y
  add_quad(m, 1, 2, 6, 5);  // +x
  add_quad(m, 3, 0, 4, 7);  // -x
  finish(m);
  return m;
}

Mesh make_cylinder(double radius, double height, int segments, const std::string& name) {
  Mesh m;
  m.name = name;
  const double z0 = -height / 2, z1 = height / 2;
  for (int i = 0; i < segments; ++i) {
    const double a = 2.0 * M_PI * i / segments;
    m.vertices.emplace_back(radius * std::cos(a), radius * std::sin(a), z0);
  }
  for (int i = 0; i < segments; ++i) {
    const double a = 2.0 * M_PI * i / segments;
    m.vertices.emplace_back(radius * std::cos(a), radius * std::sin(a), z1);
  }
  const int bc = static_cast<int>(m.vertices.size());
  m.vertices.emplace_back(0, 0, z0);
  const int tc = bc + 1;
  m.vertices.emplace_back(0, 0, z1);
  for (int i = 0; i < segments; ++i) {
    const int j = (i + 1) % segments;
    add_quad(m, i, j, segments + j, segments + i);
    m.faces.push_back({bc, j, i});
    m.faces.push_back({tc, segments + i, segments + j});
  }
  finish(m);
  return m;
}

Mesh make_ramp_box(double sx, double sy, double z_low, double z_high, const std::string& name) {
  Mesh m;
  m.name = name;
  const double x = sx / 2, y = sy / 2;
  // top slants from z_high at -x to z_low at +x
  m.vertices = {{-x, -y, 0}, {x, -y, 0}, {x, y, 0}, {-x, y, 0},
                {-x, -y, z_high}, {x, -y, z_low}, {x, y, z_low}, {-x, y, z_high}};
  add_quad(m, 0, 3, 2, 1);
  add_quad(m, 4, 5, 6, 7);
  add_quad(m, 0, 1, 5, 4);
  add_quad(m, 2, 3, 7, 6);
  add_quad(m, 1, 2, 6, 5);
  add_quad(m, 3, 0, 4, 7);
  finish(m);
  return m;
}

Mesh make_z_clamp(double arm, double thickness, double height, const std::string& name) {
  // point-symmetric Z cross-section in xy, extruded along z
  const double a = arm, t = thickness;
  std::vector<Eigen::Vector2d> poly = {
      {-a, -t}, {a - 2 * t, -t}, {a - 2 * t, -3 * t}, {a, -3 * t}, {a, t},
      {-(a - 2 * t), t}, {-(a - 2 * t), 3 * t}, {-a, 3 * t}};
  // recenter on the symmetry point (already at the origin by construction)
  Mesh m = extrude_polygon(poly, -height / 2, height / 2, name);
  finish(m);
  return m;
}

Mesh make_scalene_tetrahedron(double scale, const std::string& name) {
  Mesh m;
  m.name = name;
  m.vertices = {Eigen::Vector3d(0, 0, 0), Eigen::Vector3d(1.0, 0, 0),
                Eigen::Vector3d(0.35, 0.8, 0), Eigen::Vector3d(0.55, 0.3, 0.72)};
  for (auto& v : m.vertices) v *= scale;
  m.faces = {{0, 2, 1}, {0, 1, 3}, {1, 2, 3}, {0, 3, 2}};
  finish(m);
  return m;
}

namespace {

Mesh load_obj(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open mesh: " + path);
  Mesh m;
  m.name = std::filesystem::path(path).stem().string();
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ss(line);
    std::string tag;
    ss >> tag;
    if (tag == "v") {
      double x, y, z;
      ss >> x >> y >> z;
      m.vertices.emplace_back(x, y, z);
    } else if (tag == "f") {
      std::vector<int> idx;
      std::string tok;
      while (ss >> tok) {
        // "i", "i/j", "i/j/k" forms; negative indices count from the end
        int v = std::stoi(tok.substr(0, tok.find('/')));
        if (v < 0) v = static_cast<int>(m.vertices.size()) + v + 1;
        idx.push_back(v - 1);
      }
      for (std::size_t i = 1; i + 1 < idx.size(); ++i)
        m.faces.push_back({idx[0], idx[i], idx[i + 1]});
    }
  }
  return m;
}

struct PlyProperty {
  std::string type;
  std::string name;
  bool is_list = false;
  std::string count_type, item_type;
};

std::size_t scalar_size(const std::string& t) {
  if (t == "char" || t == "uchar" || t == "int8" || t == "uint8") return 1;
  if (t == "short" || t == "ushort" || t == "int16" || t == "uint16") return 2;
  if (t == "int" || t == "uint" || t == "int32" || t == "uint32" || t == "float" ||
      t == "float32")
    return 4;
  if (t == "double" || t == "float64" || t == "int64" || t == "uint64") return 8;
  throw std::runtime_error("ply: unknown type " + t);
}

double read_scalar(std::istream& in, const std::string& t) {
  unsigned char buf[8];
  in.read(reinterpret_cast<char*>(buf), static_cast<std::streamsize>(scalar_size(t)));
  if (!in) throw std::runtime_error("ply: truncated binary payload");
  if (t == "float" || t == "float32") {
    float f;
    std::memcpy(&f, buf, 4);
    return f;
  }
  if (t == "double" || t == "float64") {
    double d;
    std::memcpy(&d, buf, 8);
    return d;
  }
  std::int64_t v = 0;
  const std::size_t n = scalar_size(t);
  for (std::size_t i = 0; i < n; ++i) v |= static_cast<std::int64_t>(buf[i]) << (8 * i);
  const bool is_signed = t[0] != 'u';
  if (is_signed && n < 8) {
    const std::int64_t sign_bit = std::int64_t(1) << (8 * n - 1);
    if (v & sign_bit) v -= sign_bit << 1;
  }
  return static_cast<double>(v);
}

Mesh load_ply_mesh(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open mesh: " + path);

  std::string line, format;
  struct Element {
    std::string name;
    std::size_t count = 0;
    std::vector<PlyProperty> props;
  };
  std::vector<Element> elements;
  if (!std::getline(in, line) || line.rfind("ply", 0) != 0)
    throw std::runtime_error("ply: bad magic in " + path);
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream ss(line);
    std::string tag;
    ss >> tag;
    if (tag == "format") {
      ss >> format;
    } else if (tag == "element") {
      Element e;
      ss >> e.name >> e.count;
      elements.push_back(e);
    } else if (tag == "property") {
      PlyProperty p;
      std::string t;
      ss >> t;
      if (t == "list") {
        p.is_list = true;
        ss >> p.count_type >> p.item_type >> p.name;
      } else {
        p.type = t;
        ss >> p.name;
      }
      if (elements.empty()) throw std::runtime_error("ply: property before element");
      elements.back().props.push_back(p);
    } else if (tag == "end_header") {
      break;
    }
  }

  const bool ascii = format == "ascii";
  if (!ascii && format != "binary_little_endian")
    throw std::runtime_error("ply: unsupported format " + format);

  Mesh m;
  m.name = std::filesystem::path(path).stem().string();
  for (const auto& e : elements) {
    for (std::size_t i = 0; i < e.count; ++i) {
      Eigen::Vector3d v = Eigen::Vector3d::Zero();
      std::vector<int> face;
      for (const auto& p : e.props) {
        if (p.is_list) {
          std::size_t n;
          if (ascii) {
            in >> n;
          } else {
            n = static_cast<std::size_t>(read_scalar(in, p.count_type));
          }
          std::vector<int> items(n);
          for (std::size_t k = 0; k < n; ++k) {
            if (ascii) {
              in >> items[k];
            } else {
              items[k] = static_cast<int>(read_scalar(in, p.item_type));
            }
          }
          if (e.name == "face" && (p.name == "vertex_indices" || p.name == "vertex_index"))
            face = items;
        } else {
          double val;
          if (ascii) {
            in >> val;
          } else {
            val = read_scalar(in, p.type);
          }
          if (e.name == "vertex") {
            if (p.name == "x") v.x() = val;
            if (p.name == "y") v.y() = val;
            if (p.name == "z") v.z() = val;
          }
        }
      }
      if (e.name == "vertex") m.vertices.push_back(v);
      if (e.name == "face" && face.size() >= 3) {
        for (std::size_t k = 1; k + 1 < face.size(); ++k)
          m.faces.push_back({face[0], face[k], face[k + 1]});
      }
    }
  }
  return m;
}

}  // namespace

Mesh load_mesh(const std::string& path) {
  const std::string ext = std::filesystem::path(path).extension().string();
  Mesh m;
  if (ext == ".obj" || ext == ".OBJ") {
    m = load_obj(path);
  } else {
    m = load_ply_mesh(path);
  }
  m.validate();
  sample_surface(m);
  return m;
}

void save_mesh_ply(const Mesh& mesh, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write mesh: " + path);
  out << "ply\nformat ascii 1.0\n";
  out << "comment object " << mesh.name << "\n";
  out << "element vertex " << mesh.vertices.size() << "\n";
  out << "property double x\nproperty double y\nproperty double z\n";
  out << "element face " << mesh.faces.size() << "\n";
  out << "property list uchar int vertex_indices\nend_header\n";
  out.precision(17);
  for (const auto& v : mesh.vertices) out << v.x() << " " << v.y() << " " << v.z() << "\n";
  for (const auto& f : mesh.faces) out << "3 " << f[0] << " " << f[1] << " " << f[2] << "\n";
}

}  // namespace sympose
