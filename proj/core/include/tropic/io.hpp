#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "tropic/bconvex.hpp"
#include "tropic/polytope.hpp"
#include "tropic/report.hpp"

namespace tropic {

/// On-disk polytope document:
///   {"version": 1, "kind": "tropical"|"bconvex", "dim": n, "generators": [[...],...]}
/// "version" and "kind" may be omitted on input (defaults: 1, "tropical").
struct PolytopeFile {
  int version = 1;
  std::string kind = "tropical";
  std::size_t dim = 0;
  std::vector<std::vector<double>> generators;
};

/// Raised on malformed input; the message names the offending field.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

PolytopeFile parse_polytope_file(const std::string& text);
PolytopeFile load_polytope_file(const std::string& path);

/// Canonical form: fixed key order, lexicographically sorted generators,
/// numbers at 12 significant digits, trailing newline. Canonical files
/// round-trip byte-stably.
std::string serialize_polytope_file(const PolytopeFile& file);

TropicalPolytope to_tropical(const PolytopeFile& file);
BPolytope to_bconvex(const PolytopeFile& file);
PolytopeFile from_tropical(const TropicalPolytope& P);
PolytopeFile from_bconvex(const BPolytope& P);

std::string serialize_report(const VerificationReport& report);

/// %.12g with "-0" normalized to "0".
std::string format_double(double v);

}  // namespace tropic
