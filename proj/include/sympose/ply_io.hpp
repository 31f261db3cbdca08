#pragma once

#include <string>
#include <vector>

#include "sympose/cloud.hpp"

namespace sympose {

// binary-little-endian PLY; x/y/z float32 plus red/green/blue uint8 when the
// cloud carries colors
void save_cloud_ply(const PointCloud& cloud, const std::string& path,
                    const std::vector<std::string>& comments = {});

PointCloud load_cloud_ply(const std::string& path);

}  // namespace sympose
