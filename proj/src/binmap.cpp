#include "sympose/binmap.hpp"

#include <fstream>
#include <stdexcept>

namespace sympose {

void save_binmap(const std::string& path, const nlohmann::json& header, const void* data,
                 std::size_t bytes) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write: " + path);
  const std::string head = header.dump();
  const std::uint64_t len = head.size();
  unsigned char lenbuf[8];
  for (int i = 0; i < 8; ++i) lenbuf[i] = static_cast<unsigned char>((len >> (8 * i)) & 0xff);
  out.write(reinterpret_cast<const char*>(lenbuf), 8);
  out.write(head.data(), static_cast<std::streamsize>(head.size()));
  if (bytes > 0) out.write(static_cast<const char*>(data), static_cast<std::streamsize>(bytes));
}

BinMap load_binmap(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open: " + path);
  unsigned char lenbuf[8];
  in.read(reinterpret_cast<char*>(lenbuf), 8);
  if (!in) throw std::runtime_error("truncated file: " + path);
  std::uint64_t len = 0;
  for (int i = 0; i < 8; ++i) len |= static_cast<std::uint64_t>(lenbuf[i]) << (8 * i);
  std::string head(len, '\0');
  in.read(head.data(), static_cast<std::streamsize>(len));
  if (!in) throw std::runtime_error("truncated header: " + path);
  BinMap bm;
  bm.header = nlohmann::json::parse(head);
  bm.payload.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  return bm;
}

}  // namespace sympose
