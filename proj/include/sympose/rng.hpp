#pragma once

#include <cmath>
#include <cstdint>
#include <string_view>

#include <Eigen/Core>
#include <Eigen/Geometry>

namespace sympose {

// splitmix64 step; core of every random stream in the toolkit.
inline std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

// Deterministic generator keyed by (seed, module tag, item id).
// Every parallel work item derives its own stream, so results do not
// depend on thread count or scheduling.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) { warmup(); }

  Rng(std::uint64_t seed, std::string_view tag, std::uint64_t item = 0) {
    std::uint64_t s = seed;
    state_ = splitmix64(s) ^ (fnv1a64(tag) + 0x9e3779b97f4a7c15ULL * (item + 1));
    warmup();
  }

  std::uint64_t next_u64() { return splitmix64(state_); }

  // uniform in [0, 1)
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // unbiased integer in [0, n)
  std::uint64_t uniform_int(std::uint64_t n) {
    const std::uint64_t threshold = (0 - n) % n;
    for (;;) {
      const std::uint64_t r = next_u64();
      if (r >= threshold) return r % n;
    }
  }

  // standard normal, Box-Muller with cached spare
  double normal() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    double u1;
    do {
      u1 = uniform();
    } while (u1 <= 0.0);
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double th = 2.0 * M_PI * u2;
    spare_ = r * std::sin(th);
    has_spare_ = true;
    return r * std::cos(th);
  }

  double normal(double mean, double sigma) { return mean + sigma * normal(); }

  Eigen::Vector3d normal3() {
    Eigen::Vector3d v;
    v.x() = normal();
    v.y() = normal();
    v.z() = normal();
    return v;
  }

  Eigen::Vector3d unit_vector() {
    Eigen::Vector3d v;
    do {
      v = normal3();
    } while (v.norm() < 1e-12);
    return v.normalized();
  }

  // uniform rotation via normalized random quaternion
  Eigen::Matrix3d rotation() {
    Eigen::Quaterniond q(normal(), normal(), normal(), normal());
    while (q.norm() < 1e-12) q = Eigen::Quaterniond(normal(), normal(), normal(), normal());
    q.normalize();
    return q.toRotationMatrix();
  }

 private:
  void warmup() {
    (void)splitmix64(state_);
    (void)splitmix64(state_);
  }

  std::uint64_t state_ = 0;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace sympose
