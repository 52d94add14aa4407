#include "qjensen/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "qjensen/error.hpp"

namespace qjensen {

namespace {

using json = nlohmann::ordered_json;

struct Position {
  std::size_t line = 1;
  std::size_t column = 1;
};

Position locate(std::string_view text, std::size_t offset) {
  Position p;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++p.line;
      p.column = 1;
    } else {
      ++p.column;
    }
  }
  return p;
}

[[noreturn]] void fail(const std::string& source, Position at, const std::string& what) {
  std::ostringstream msg;
  msg << source << ':' << at.line << ':' << at.column << ": " << what;
  throw Error(ErrorKind::ParseError, msg.str());
}

// nlohmann does not keep value positions; point at the key instead.
Position key_position(std::string_view text, const std::string& key) {
  const std::size_t at = text.find('"' + key + '"');
  return locate(text, at == std::string_view::npos ? 0 : at);
}

Quaternion parse_coefficient(const json& v, const std::string& where, std::string_view text,
                             const std::string& source, const std::string& key) {
  if (v.is_number()) return Quaternion(v.get<double>());
  if (v.is_array() && v.size() == 4 &&
      std::all_of(v.begin(), v.end(), [](const json& c) { return c.is_number(); })) {
    return {v[0].get<double>(), v[1].get<double>(), v[2].get<double>(), v[3].get<double>()};
  }
  fail(source, key_position(text, key),
       where + ": coefficient must be a number or [w, x, y, z], got " + v.dump());
}

SlicePolynomial parse_poly(const json& doc, const std::string& key, std::string_view text,
                           const std::string& source) {
  const json& arr = doc.at(key);
  if (!arr.is_array() || arr.empty()) {
    fail(source, key_position(text, key), '"' + key + "\" must be a non-empty array");
  }
  std::vector<Quaternion> c;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    c.push_back(parse_coefficient(arr[i], key + '[' + std::to_string(i) + ']', text, source, key));
  }
  try {
    return SlicePolynomial(std::move(c));
  } catch (const Error& e) {
    fail(source, key_position(text, key), e.what());
  }
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::ParseError, path.string() + ": cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

FunctionSpec parse_function(std::string_view text, const std::string& source) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    fail(source, locate(text, e.byte > 0 ? e.byte - 1 : 0), "malformed JSON");
  }
  if (!doc.is_object()) fail(source, {}, "top level must be an object");

  FunctionSpec spec;
  spec.source = source;
  spec.name = doc.value("name", source);
  if (doc.contains("r")) {
    if (!doc["r"].is_number() || !(doc["r"].get<double>() > 0.0)) {
      fail(source, key_position(text, "r"), "\"r\" must be a positive number");
    }
    spec.r = doc["r"].get<double>();
  }
  if (doc.contains("n")) {
    if (!doc["n"].is_number_integer()) fail(source, key_position(text, "n"), "\"n\" must be an integer");
    spec.n = doc["n"].get<int>();
  }

  const bool poly = doc.contains("coeffs");
  const bool rational = doc.contains("num") || doc.contains("den");
  if (poly == rational) {
    fail(source, {}, "expected either \"coeffs\" or both \"num\" and \"den\"");
  }
  if (poly) {
    spec.f = SemiregularFunction(parse_poly(doc, "coeffs", text, source));
    return spec;
  }
  if (!doc.contains("num") || !doc.contains("den")) {
    fail(source, {}, "a rational function needs both \"num\" and \"den\"");
  }
  SlicePolynomial num = parse_poly(doc, "num", text, source);
  SlicePolynomial den = parse_poly(doc, "den", text, source);
  try {
    spec.f = SemiregularFunction(std::move(den), std::move(num));
  } catch (const Error& e) {
    fail(source, key_position(text, "den"), e.what());
  }
  return spec;
}

FunctionSpec load_function(const std::filesystem::path& path) {
  return parse_function(read_file(path), path.string());
}

std::vector<CorpusEntry> load_manifest(const std::filesystem::path& path) {
  const std::string text = read_file(path);
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    fail(path.string(), locate(text, e.byte > 0 ? e.byte - 1 : 0), "malformed JSON");
  }
  if (!doc.is_object()) fail(path.string(), {}, "manifest must be an object of groups");
  std::vector<CorpusEntry> out;
  const std::filesystem::path base = path.parent_path();
  for (const auto& [group, files] : doc.items()) {
    if (!files.is_array()) fail(path.string(), key_position(text, group), "group must be an array");
    for (const json& f : files) {
      if (!f.is_string()) fail(path.string(), key_position(text, group), "entries must be paths");
      out.push_back({base / f.get<std::string>(), group});
    }
  }
  return out;
}

std::string describe(const SlicePolynomial& p) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int m = 0; m <= p.degree(); ++m) {
    if (p[m] == Quaternion(0.0)) continue;
    if (!first) out << " + ";
    first = false;
    if (m == 1) out << "x ";
    if (m > 1) out << "x^" << m << ' ';
    out << p[m];
  }
  return out.str();
}

}  // namespace qjensen
