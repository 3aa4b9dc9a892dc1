#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "krein/types.hpp"

namespace krein {

struct ModelSpec {
  std::string kind = "shift";  // shift | schrodinger
  // shift
  double length = 40.0;
  int points = 401;
  // schrodinger
  std::string potential = "zero";
  double c = 1.0;
  double eps = 0.1;
  double x_max = 20.0;
  double h = 0.02;
};

struct ExtensionSpec {
  std::array<double, 3> alpha{1.0, 0.0, 0.0};
  std::optional<Mat2> unitary;
  std::string family;  // empty when `unitary` is given
  std::vector<double> grid;
};

/// One JSON document per run; see README for the schema.
struct RunConfig {
  std::string command;
  std::uint64_t seed = 1;
  std::optional<double> tolerance;
  ModelSpec model;
  ExtensionSpec extension;
  std::vector<cplx> mu;
  int samples = 20;
  std::string out;
  std::string format = "json";
};

/// Throws Error(Config) on malformed JSON, unknown keys, wrong types or
/// non-positive physical parameters.
RunConfig parse_config(const std::string& text);
RunConfig load_config(const std::string& path);

}  // namespace krein
