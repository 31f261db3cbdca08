#include "sympose/ply_io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace sympose {

void save_cloud_ply(const PointCloud& cloud, const std::string& path,
                    const std::vector<std::string>& comments) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write cloud: " + path);
  const bool with_color = cloud.has_colors();
  out << "ply\nformat binary_little_endian 1.0\n";
  for (const auto& c : comments) out << "comment " << c << "\n";
  out << "element vertex " << cloud.points.size() << "\n";
  out << "property float x\nproperty float y\nproperty float z\n";
  if (with_color) out << "property uchar red\nproperty uchar green\nproperty uchar blue\n";
  out << "end_header\n";
  for (std::size_t i = 0; i < cloud.points.size(); ++i) {
    const float xyz[3] = {static_cast<float>(cloud.points[i].x()),
                          static_cast<float>(cloud.points[i].y()),
                          static_cast<float>(cloud.points[i].z())};
    out.write(reinterpret_cast<const char*>(xyz), sizeof(xyz));
    if (with_color) {
      unsigned char rgb[3];
      for (int c = 0; c < 3; ++c) {
        const float v = std::clamp(cloud.colors[i](c), 0.0f, 1.0f);
        rgb[c] = static_cast<unsigned char>(std::lround(v * 255.0f));
      }
      out.write(reinterpret_cast<const char*>(rgb), sizeof(rgb));
    }
  }
}

PointCloud load_cloud_ply(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open cloud: " + path);

  std::string line;
  if (!std::getline(in, line) || line.rfind("ply", 0) != 0)
    throw std::runtime_error("ply: bad magic in " + path);

  std::string format;
  std::size_t vertex_count = 0;
  struct Prop {
    std::string type, name;
  };
  std::vector<Prop> props;
  bool in_vertex = false;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream ss(line);
    std::string tag;
    ss >> tag;
    if (tag == "format") {
      ss >> format;
    } else if (tag == "element") {
      std::string name;
      std::size_t count;
      ss >> name >> count;
      in_vertex = name == "vertex";
      if (in_vertex) vertex_count = count;
    } else if (tag == "property" && in_vertex) {
      Prop p;
      ss >> p.type;
      if (p.type == "list") throw std::runtime_error("ply: list property in vertex element");
      ss >> p.name;
      props.push_back(p);
    } else if (tag == "end_header") {
      break;
    }
  }
  const bool ascii = format == "ascii";
  if (!ascii && format != "binary_little_endian")
    throw std::runtime_error("ply: unsupported format " + format);

  auto prop_size = [](const std::string& t) -> std::size_t {
    if (t == "uchar" || t == "char" || t == "uint8" || t == "int8") return 1;
    if (t == "short" || t == "ushort") return 2;
    if (t == "float" || t == "float32" || t == "int" || t == "uint") return 4;
    if (t == "double" || t == "float64") return 8;
    throw std::runtime_error("ply: unsupported property type " + t);
  };

  PointCloud cloud;
  cloud.points.resize(vertex_count);
  const bool with_color =
      std::any_of(props.begin(), props.end(), [](const Prop& p) { return p.name == "red"; });
  if (with_color) cloud.colors.resize(vertex_count);

  for (std::size_t i = 0; i < vertex_count; ++i) {
    for (const auto& p : props) {
      double val = 0.0;
      if (ascii) {
        in >> val;
      } else {
        unsigned char buf[8];
        in.read(reinterpret_cast<char*>(buf), static_cast<std::streamsize>(prop_size(p.type)));
        if (!in) throw std::runtime_error("ply: truncated payload in " + path);
        if (p.type == "float" || p.type == "float32") {
          float f;
          std::memcpy(&f, buf, 4);
          val = f;
        } else if (p.type == "double" || p.type == "float64") {
          std::memcpy(&val, buf, 8);
        } else if (prop_size(p.type) == 1) {
          val = buf[0];
        } else {
          std::uint32_t raw = 0;
          std::memcpy(&raw, buf, prop_size(p.type));
          val = raw;
        }
      }
      if (p.name == "x") cloud.points[i].x() = val;
      else if (p.name == "y") cloud.points[i].y() = val;
      else if (p.name == "z") cloud.points[i].z() = val;
      else if (with_color && p.name == "red") cloud.colors[i](0) = static_cast<float>(val / 255.0);
      else if (with_color && p.name == "green") cloud.colors[i](1) = static_cast<float>(val / 255.0);
      else if (with_color && p.name == "blue") cloud.colors[i](2) = static_cast<float>(val / 255.0);
    }
  }
  return cloud;
}

}  // namespace sympose
