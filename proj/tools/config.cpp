#include "config.hpp"

#include <cstdlib>
#include <fstream>

#include "harmodisk/errors.hpp"

namespace harmodisk::cli {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double to_double(const std::string& key, const std::string& v) {
  std::size_t used = 0;
  double d = 0.0;
  try {
    d = std::stod(v, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != v.size()) {
    throw Error(ErrorKind::invalid_argument, "config: '" + key + "' expects a number");
  }
  return d;
}

std::size_t to_count(const std::string& key, const std::string& v) {
  const double d = to_double(key, v);
  if (d < 1.0 || d != static_cast<double>(static_cast<std::size_t>(d))) {
    throw Error(ErrorKind::invalid_argument, "config: '" + key + "' expects a positive integer");
  }
  return static_cast<std::size_t>(d);
}

}  // namespace

Config parse_config(std::istream& in) {
  Config c;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw Error(ErrorKind::invalid_argument,
                  "config line " + std::to_string(lineno) + ": expected key = value");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key == "gamma0") c.gamma0 = to_double(key, value);
    else if (key == "gamma_k") c.gamma_k = to_double(key, value);
    else if (key == "M") c.quadrature_nodes = to_count(key, value);
    else if (key == "angles") c.angles = to_count(key, value);
    else if (key == "holder_grid") c.holder_grid = to_count(key, value);
    else if (key == "circle_nodes") c.circle_nodes = to_count(key, value);
    else {
      throw Error(ErrorKind::invalid_argument, "config: unknown key '" + key + "'");
    }
  }
  return c;
}

Config load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::io, "cannot read config file '" + path + "'");
  return parse_config(in);
}

Config config_from_environment() {
  const char* path = std::getenv("HARMODISK_CONFIG");
  if (path == nullptr || *path == '\0') return {};
  return load_config_file(path);
}

}  // namespace harmodisk::cli
