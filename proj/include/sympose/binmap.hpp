#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace sympose {

// Self-describing binary container used for depth/label/RGB maps and model
// weights: [uint64 little-endian header length][JSON header][raw payload].
void save_binmap(const std::string& path, const nlohmann::json& header, const void* data,
                 std::size_t bytes);

struct BinMap {
  nlohmann::json header;
  std::vector<std::uint8_t> payload;
};

BinMap load_binmap(const std::string& path);

}  // namespace sympose
