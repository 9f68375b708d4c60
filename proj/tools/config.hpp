#pragma once

#include <cstddef>
#include <istream>
#include <optional>
#include <string>

namespace harmodisk::cli {

// Settings read from a `key = value` config file (TOML subset: one
// assignment per line, `#` comments, bare numbers). Unset keys keep the
// built-in defaults; command-line flags override anything set here.
struct Config {
  std::optional<double> gamma0;
  std::optional<double> gamma_k;
  std::optional<std::size_t> quadrature_nodes;  // key: M
  std::optional<std::size_t> angles;
  std::optional<std::size_t> holder_grid;
  std::optional<std::size_t> circle_nodes;
};

Config parse_config(std::istream& in);
Config load_config_file(const std::string& path);

// Config named by HARMODISK_CONFIG, or an empty one when unset.
Config config_from_environment();

}  // namespace harmodisk::cli
