// SPDX-License-Identifier: Apache-2.0
#include "wigner/app/config.hpp"

#include <json.hpp>

#include <cctype>
#include <fstream>
#include <sstream>

#include "wigner/errors.hpp"

namespace wigner::app {

namespace {

[[noreturn]] void fail(const std::string& what) { throw ConfigInvalid("config: " + what); }

int line_of_offset(const std::string& text, std::size_t byte) {
  int line = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i)
    if (text[i] == '\n') ++line;
  return line;
}

}  // namespace

void parse_grid_spec(const std::string& spec, Index& n_q, Index& n_p) {
  const auto x = spec.find('x');
  if (x == std::string::npos || x == 0 || x + 1 >= spec.size())
    fail("field 'grid': expected \"NxM\", got \"" + spec + "\"");
  try {
    std::size_t used = 0;
    const long nq = std::stol(spec.substr(0, x), &used);
    if (used != x) fail("field 'grid': malformed q-count in \"" + spec + "\"");
    const long np = std::stol(spec.substr(x + 1), &used);
    if (used != spec.size() - x - 1) fail("field 'grid': malformed p-count in \"" + spec + "\"");
    if (nq < 16 || np < 16) fail("field 'grid': both counts must be >= 16");
    n_q = nq;
    n_p = np;
  } catch (const ConfigInvalid&) {
    throw;
  } catch (const std::exception&) {
    fail("field 'grid': expected \"NxM\", got \"" + spec + "\"");
  }
}

RunConfig resolve_config(const std::optional<std::string>& config_path,
                         const ConfigOverrides& overrides) {
  RunConfig cfg;
  if (config_path) {
    std::ifstream in(*config_path);
    if (!in) fail("cannot open '" + *config_path + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    const std::string text = buffer.str();
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
      fail("parse error at line " + std::to_string(line_of_offset(text, e.byte)) + " of '" +
           *config_path + "': " + e.what());
    }
    if (!j.is_object()) fail("top level of '" + *config_path + "' must be an object");
    for (const auto& [key, value] : j.items()) {
      if (key == "sigma") {
        if (!value.is_number()) fail("field 'sigma' must be a number");
        cfg.sigma = value.get<double>();
      } else if (key == "a") {
        if (!value.is_number()) fail("field 'a' must be a number");
        cfg.a = value.get<double>();
      } else if (key == "grid") {
        if (!value.is_string()) fail("field 'grid' must be a string \"NxM\"");
        parse_grid_spec(value.get<std::string>(), cfg.n_q, cfg.n_p);
      } else if (key == "out") {
        if (!value.is_string()) fail("field 'out' must be a string");
        cfg.out_dir = value.get<std::string>();
      } else if (key == "quick") {
        if (!value.is_boolean()) fail("field 'quick' must be a boolean");
        cfg.quick = value.get<bool>();
      } else if (key == "tolerance_scale") {
        if (!value.is_number()) fail("field 'tolerance_scale' must be a number");
        cfg.tolerance_scale = value.get<double>();
      } else {
        fail("unknown field '" + key + "'");
      }
    }
  }
  if (overrides.sigma) cfg.sigma = *overrides.sigma;
  if (overrides.a) cfg.a = *overrides.a;
  if (overrides.grid) parse_grid_spec(*overrides.grid, cfg.n_q, cfg.n_p);
  if (overrides.out_dir) cfg.out_dir = *overrides.out_dir;
  if (overrides.quick) cfg.quick = *overrides.quick;
  if (overrides.tolerance_scale) cfg.tolerance_scale = *overrides.tolerance_scale;

  if (!(cfg.sigma > 0)) fail("field 'sigma' must be positive");
  if (!(cfg.a > 0)) fail("field 'a' must be positive");
  if (!(cfg.tolerance_scale > 0)) fail("field 'tolerance_scale' must be positive");
  return cfg;
}

}  // namespace wigner::app
