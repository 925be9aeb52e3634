#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "demoxfer/nn.hpp"

namespace demoxfer {

inline constexpr std::uint32_t kCheckpointVersion = 1;

struct NamedNetwork {
  std::string name;
  NetworkParams<float> params;
};

// Binary layout, all integers and floats little-endian:
//   "DXCK" u32 version u32 network_count
//   per network: str name, str activation, u32 n, u32 layer_sizes[n]
//   u32 tensor_count
//   per tensor: str name ("<network>.l<i>.<weight|bias|ln_gain|ln_offset>"),
//               u32 rank, u32 dims[rank], f32 data[] in row-major order
// where str is u32 length followed by the bytes.
void save_checkpoint(const std::filesystem::path& path, const std::vector<NamedNetwork>& networks);
std::vector<NamedNetwork> load_checkpoint(const std::filesystem::path& path);

/// Looks a network up by name; throws ConfigError when absent.
const NetworkParams<float>& find_network(const std::vector<NamedNetwork>& networks, const std::string& name);

}  // namespace demoxfer
