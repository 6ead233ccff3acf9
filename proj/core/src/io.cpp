#include "tropic/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>
#include <utility>

#include "json.hpp"

namespace tropic {

namespace {

using nlohmann::json;

std::size_t require_positive_size(const json& j, const char* field) {
  if (!j.is_number_integer() || j.get<long long>() <= 0) {
    throw ParseError(std::string("field '") + field + "' must be a positive integer");
  }
  return static_cast<std::size_t>(j.get<long long>());
}

}  // namespace

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  if (std::strcmp(buf, "-0") == 0) return "0";
  return buf;
}

PolytopeFile parse_polytope_file(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("top-level value must be an object");

  PolytopeFile file;
  if (j.contains("version")) {
    if (!j["version"].is_number_integer()) {
      throw ParseError("field 'version' must be an integer");
    }
    file.version = j["version"].get<int>();
    if (file.version != 1) throw ParseError("field 'version' must be 1");
  }
  if (j.contains("kind")) {
    if (!j["kind"].is_string()) throw ParseError("field 'kind' must be a string");
    file.kind = j["kind"].get<std::string>();
    if (file.kind != "tropical" && file.kind != "bconvex") {
      throw ParseError("field 'kind' must be \"tropical\" or \"bconvex\"");
    }
  }
  if (!j.contains("dim")) throw ParseError("missing field 'dim'");
  file.dim = require_positive_size(j["dim"], "dim");

  if (!j.contains("generators")) throw ParseError("missing field 'generators'");
  const json& gens = j["generators"];
  if (!gens.is_array() || gens.empty()) {
    throw ParseError("field 'generators' must be a nonempty array");
  }
  file.generators.reserve(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const json& row = gens[i];
    if (!row.is_array()) {
      throw ParseError("generators[" + std::to_string(i) + "] must be an array of numbers");
    }
    if (row.size() != file.dim) {
      throw ParseError("generators[" + std::to_string(i) + "] has " +
                       std::to_string(row.size()) + " coordinates, expected " +
                       std::to_string(file.dim));
    }
    std::vector<double> coords;
    coords.reserve(row.size());
    for (std::size_t k = 0; k < row.size(); ++k) {
      if (!row[k].is_number() || !std::isfinite(row[k].get<double>())) {
        throw ParseError("generators[" + std::to_string(i) + "][" + std::to_string(k) +
                         "] must be a finite number");
      }
      coords.push_back(row[k].get<double>());
    }
    file.generators.push_back(std::move(coords));
  }
  return file;
}

PolytopeFile load_polytope_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_polytope_file(buf.str());
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

std::string serialize_polytope_file(const PolytopeFile& file) {
  std::vector<std::vector<double>> gens = file.generators;
  std::sort(gens.begin(), gens.end());
  std::string out = "{\"version\":" + std::to_string(file.version) + ",\"kind\":\"" +
                    file.kind + "\",\"dim\":" + std::to_string(file.dim) +
                    ",\"generators\":[";
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (i) out += ',';
    out += '[';
    for (std::size_t j = 0; j < gens[i].size(); ++j) {
      if (j) out += ',';
      out += format_double(gens[i][j]);
    }
    out += ']';
  }
  out += "]}\n";
  return out;
}

namespace {

std::vector<Point> file_points(const PolytopeFile& file) {
  std::vector<Point> pts;
  pts.reserve(file.generators.size());
  for (const auto& row : file.generators) {
    if (row.size() != file.dim) {
      throw std::invalid_argument("polytope file: generator dimension disagrees with 'dim'");
    }
    pts.push_back(Point(row));
  }
  return pts;
}

}  // namespace

TropicalPolytope to_tropical(const PolytopeFile& file) {
  if (file.kind != "tropical") {
    throw std::invalid_argument("expected a polytope of kind \"tropical\", got \"" + file.kind + "\"");
  }
  return TropicalPolytope(file_points(file));
}

BPolytope to_bconvex(const PolytopeFile& file) {
  if (file.kind != "bconvex") {
    throw std::invalid_argument("expected a polytope of kind \"bconvex\", got \"" + file.kind + "\"");
  }
  return BPolytope(file_points(file));
}

PolytopeFile from_tropical(const TropicalPolytope& P) {
  PolytopeFile file;
  file.kind = "tropical";
  file.dim = P.dim();
  for (const Point& g : P.generators()) file.generators.push_back(g.coords());
  return file;
}

PolytopeFile from_bconvex(const BPolytope& P) {
  PolytopeFile file;
  file.kind = "bconvex";
  file.dim = P.dim();
  for (const Point& g : P.generators()) file.generators.push_back(g.coords());
  return file;
}

std::string serialize_report(const VerificationReport& report) {
  return "{\"trials\":" + std::to_string(report.trials) +
         ",\"violations\":" + std::to_string(report.violations) +
         ",\"worst_margin\":" + format_double(report.worst_margin) +
         ",\"seed\":" + std::to_string(report.seed) + "}\n";
}

}  // namespace tropic
