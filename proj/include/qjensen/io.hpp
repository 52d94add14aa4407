#pragma once

/// Function files. A polynomial is
///   {"name": "...", "r": 1.0, "coeffs": [a0, a1, ...]}
/// and a semiregular function
///   {"name": "...", "r": 2.0, "den": [1, 0, 1], "num": [[0, 1, 0, 0], 1]}
/// Coefficients are listed from degree 0 up; each is a real number or a
/// quaternion [w, x, y, z]. "name", "r" and "n" are optional.

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qjensen/semiregular.hpp"

namespace qjensen {

struct FunctionSpec {
  std::string name;
  std::string source;
  SemiregularFunction f;
  std::optional<double> r;
  std::optional<int> n;
};

/// Throws ParseError "source:line:col: message" on malformed input.
FunctionSpec parse_function(std::string_view text, const std::string& source);
FunctionSpec load_function(const std::filesystem::path& path);

struct CorpusEntry {
  std::filesystem::path file;
  std::string group;
};

/// {"polynomial": ["poly/p01.json", ...], "rational": [...]}; paths relative
/// to the manifest.
std::vector<CorpusEntry> load_manifest(const std::filesystem::path& path);

std::string describe(const SlicePolynomial& p);

}  // namespace qjensen
