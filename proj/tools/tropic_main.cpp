#include <cstdlib>
#include <iostream>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "tropic/bconvex.hpp"
#include "tropic/hyperspace.hpp"
#include "tropic/io.hpp"
#include "tropic/metrics.hpp"
#include "tropic/polytope.hpp"

namespace {

using namespace tropic;

std::vector<std::string> split_csv(const std::string& s) {
  std::vector<std::string> parts;
  std::string cur;
  for (char ch : s) {
    if (ch == ',') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  parts.push_back(cur);
  return parts;
}

double parse_number(const std::string& tok, const std::string& flag) {
  try {
    std::size_t pos = 0;
    const double v = std::stod(tok, &pos);
    if (pos != tok.size()) throw std::invalid_argument(tok);
    return v;
  } catch (const std::exception&) {
    throw ParseError(flag + ": '" + tok + "' is not a number");
  }
}

Point parse_point(const std::string& s, const std::string& flag) {
  std::vector<double> coords;
  for (const std::string& tok : split_csv(s)) {
    const double v = parse_number(tok, flag);
    if (!std::isfinite(v)) throw ParseError(flag + ": coordinates must be finite");
    coords.push_back(v);
  }
  return Point(std::move(coords));
}

std::vector<Rmax> parse_alphas(const std::string& s, const std::string& flag) {
  std::vector<Rmax> alphas;
  for (const std::string& tok : split_csv(s)) {
    const double v = parse_number(tok, flag);
    try {
      alphas.push_back(Rmax(v));
    } catch (const std::invalid_argument&) {
      throw ParseError(flag + ": coefficients must be finite or -inf");
    }
  }
  return alphas;
}

// 1-based on the command line, 0-based in the library.
std::vector<std::size_t> parse_coords(const std::string& s, const std::string& flag) {
  std::vector<std::size_t> coords;
  for (const std::string& tok : split_csv(s)) {
    const double v = parse_number(tok, flag);
    if (v < 1 || v != static_cast<double>(static_cast<std::size_t>(v))) {
      throw ParseError(flag + ": coordinates are 1-based positive integers");
    }
    coords.push_back(static_cast<std::size_t>(v) - 1);
  }
  return coords;
}

Metric parse_metric(const std::string& s) {
  if (s == "sup") return Metric::kSup;
  if (s == "weighted") return Metric::kWeighted;
  throw ParseError("--metric must be 'sup' or 'weighted'");
}

std::uint64_t resolve_seed(std::uint64_t cli_seed) {
  if (const char* env = std::getenv("TROPIC_SEED")) {
    try {
      std::size_t pos = 0;
      const std::uint64_t v = std::stoull(env, &pos);
      if (pos != std::string(env).size()) throw std::invalid_argument(env);
      return v;
    } catch (const std::exception&) {
      throw ParseError("TROPIC_SEED must be a nonnegative integer");
    }
  }
  return cli_seed;
}

std::string number_array(std::span<const double> values) {
  std::string out = "[";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    out += format_double(values[i]);
  }
  return out + "]";
}

std::string point_array(const Point& p) { return number_array(p.coords()); }

std::string polyline_array(const std::vector<Point>& pts) {
  std::string out = "[";
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (i) out += ',';
    out += point_array(pts[i]);
  }
  return out + "]";
}

void emit_tropical(const TropicalPolytope& P) {
  std::cout << serialize_polytope_file(from_tropical(P));
}

struct Args {
  std::vector<std::string> files;
  std::string point, coords, alphas, a, b;
  std::string metric = "sup";
  std::string mode = "exact";
  std::string variant, format = "json";
  double t = 0.0, r = 0.0, tol = kDefaultTol, dist_tol = 1e-10;
  int trials = 500;
  std::uint64_t seed = 42;
};

int run_member(const Args& args) {
  const PolytopeFile file = load_polytope_file(args.files.at(0));
  const Point x = parse_point(args.point, "--point");
  if (file.kind == "bconvex") {
    const BPolytope P = to_bconvex(file);
    const std::vector<double> mu = b_canonical_coeffs(P, x);
    const bool member = b_member(P, x, args.tol);
    std::vector<double> recon(P.dim(), 0.0);
    for (std::size_t i = 0; i < mu.size(); ++i) {
      for (std::size_t j = 0; j < recon.size(); ++j) {
        recon[j] = std::max(recon[j], mu[i] * P.generators()[i][j]);
      }
    }
    std::cout << "{\"member\":" << (member ? "true" : "false")
              << ",\"mu\":" << number_array(mu)
              << ",\"reconstruction\":" << number_array(recon) << "}\n";
    return 0;
  }
  const TropicalPolytope P = to_tropical(file);
  const MembershipWitness w = hull_member(P, x, args.tol);
  std::vector<double> lambdas;
  lambdas.reserve(w.lambdas.size());
  for (Rmax l : w.lambdas) lambdas.push_back(l.value());
  std::cout << "{\"member\":" << (w.is_member ? "true" : "false")
            << ",\"lambdas\":" << number_array(lambdas)
            << ",\"reconstruction\":" << point_array(w.reconstruction) << "}\n";
  return 0;
}

int run_reduce(const Args& args) {
  const PolytopeFile file = load_polytope_file(args.files.at(0));
  if (file.kind == "bconvex") {
    const BPolytope reduced =
        exp_bridge(reduce_generators(log_bridge(to_bconvex(file)), args.tol));
    std::cout << serialize_polytope_file(from_bconvex(reduced));
  } else {
    std::cout << serialize_polytope_file(
        from_tropical(reduce_generators(to_tropical(file), args.tol)));
  }
  return 0;
}

int run_plot(const Args& args) {
  const TropicalPolytope P = to_tropical(load_polytope_file(args.files.at(0)));
  if (P.dim() != 2) throw ParseError("plot: polytope must be 2-dimensional");
  const auto& gens = P.generators();
  std::vector<std::vector<Point>> polylines;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      polylines.push_back(tropical_segment(gens[i], gens[j]));
    }
  }
  if (args.format == "csv") {
    std::cout << "kind,index,x,y\n";
    for (std::size_t i = 0; i < gens.size(); ++i) {
      std::cout << "generator," << i << ',' << format_double(gens[i][0]) << ','
                << format_double(gens[i][1]) << '\n';
    }
    for (std::size_t k = 0; k < polylines.size(); ++k) {
      for (const Point& p : polylines[k]) {
        std::cout << "segment," << k << ',' << format_double(p[0]) << ','
                  << format_double(p[1]) << '\n';
      }
    }
  } else if (args.format == "json") {
    std::cout << "{\"dim\":2,\"generators\":" << polyline_array(gens) << ",\"polylines\":[";
    for (std::size_t k = 0; k < polylines.size(); ++k) {
      if (k) std::cout << ',';
      std::cout << polyline_array(polylines[k]);
    }
    std::cout << "]}\n";
  } else {
    throw ParseError("--format must be 'json' or 'csv'");
  }
  return 0;
}

int run_homotopy(const Args& args) {
  if (args.variant == "lemma1") {
    if (args.files.size() != 2) {
      throw ParseError("homotopy --variant lemma1 takes two polytope files: C A");
    }
    const TropicalPolytope C = to_tropical(load_polytope_file(args.files[0]));
    const TropicalPolytope A = to_tropical(load_polytope_file(args.files[1]));
    emit_tropical(fset_homotopy(C, A, args.t));
    return 0;
  }
  if (args.variant == "retraction") {
    if (args.files.size() != 1) {
      throw ParseError("homotopy --variant retraction takes one polytope file");
    }
    emit_tropical(retraction_homotopy(to_tropical(load_polytope_file(args.files[0])), args.t));
    return 0;
  }
  throw ParseError("--variant must be 'lemma1' or 'retraction'");
}

int run_verify_lemma1(const Args& args) {
  const Metric m = parse_metric(args.metric);
  const std::uint64_t seed = resolve_seed(args.seed);
  VerificationReport report;
  if (!args.files.empty()) {
    const TropicalPolytope center = to_tropical(load_polytope_file(args.files.at(0)));
    report = verify_ball_is_fset(center, args.r, m, args.trials, seed);
  } else {
    report = verify_ball_is_fset(args.r, m, args.trials, seed);
  }
  std::cout << serialize_report(report);
  return report.passed() ? 0 : 1;
}

int run_verify_bconvex(const Args& args) {
  const std::uint64_t seed = resolve_seed(args.seed);
  VerificationReport report;
  if (!args.files.empty()) {
    report = b_convexity_check(to_bconvex(load_polytope_file(args.files.at(0))), args.trials, seed);
  } else {
    report = b_convexity_check(args.trials, seed);
  }
  std::cout << serialize_report(report);
  return report.passed() ? 0 : 1;
}

int run_counterexample() {
  const PullbackReport report = pullback_counterexample();
  std::cout << "{\"projections_equal\":" << (report.projections_equal() ? "true" : "false")
            << ",\"hausdorff_D_D1\":" << format_double(report.hausdorff_D_D1) << "}\n";
  const bool pass =
      report.projections_equal() && std::abs(report.hausdorff_D_D1 - 0.5) <= 1e-9;
  return pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"tropic: max-plus convex geometry toolkit"};
  app.require_subcommand(1);
  Args args;

  auto add_files = [&](CLI::App* sub, int n, const char* desc) {
    sub->add_option("files", args.files, desc)->expected(n);
  };

  CLI::App* member = app.add_subcommand("member", "Decide hull membership of a point");
  add_files(member, 1, "polytope file");
  member->add_option("--point", args.point, "comma-separated coordinates")->required();
  member->add_option("--tol", args.tol, "membership tolerance");

  CLI::App* reduce = app.add_subcommand("reduce", "Drop redundant generators");
  add_files(reduce, 1, "polytope file");
  reduce->add_option("--tol", args.tol, "membership tolerance");

  CLI::App* oplus_cmd = app.add_subcommand("oplus", "Pointwise maximum of two hulls");
  add_files(oplus_cmd, 2, "polytope files");

  CLI::App* scale = app.add_subcommand("scale", "Shift a hull by a finite scalar");
  add_files(scale, 1, "polytope file");
  scale->add_option("--t", args.t, "shift amount")->required();

  CLI::App* product_cmd = app.add_subcommand("product", "Cartesian product of two hulls");
  add_files(product_cmd, 2, "polytope files");

  CLI::App* project_cmd = app.add_subcommand("project", "Coordinate projection of a hull");
  add_files(project_cmd, 1, "polytope file");
  project_cmd->add_option("--coords", args.coords, "1-based coordinates, strictly increasing")
      ->required();

  CLI::App* maxpoint = app.add_subcommand("maxpoint", "Coordinatewise maximum of a hull");
  add_files(maxpoint, 1, "polytope file");

  CLI::App* segment = app.add_subcommand("segment", "Tropical segment between two points");
  segment->add_option("--a", args.a, "first endpoint")->required();
  segment->add_option("--b", args.b, "second endpoint")->required();

  CLI::App* dist = app.add_subcommand("dist", "Distance from a point to a hull");
  add_files(dist, 1, "polytope file");
  dist->add_option("--point", args.point, "comma-separated coordinates")->required();
  dist->add_option("--metric", args.metric, "sup|weighted");
  dist->add_option("--mode", args.mode, "exact|bisect");
  dist->add_option("--tol", args.dist_tol, "bisection tolerance");

  CLI::App* hausdorff_cmd = app.add_subcommand("hausdorff", "Hausdorff distance of two hulls");
  add_files(hausdorff_cmd, 2, "polytope files");
  hausdorff_cmd->add_option("--metric", args.metric, "sup|weighted");

  CLI::App* homotopy = app.add_subcommand("homotopy", "Evaluate a contraction homotopy");
  homotopy->add_option("files", args.files, "polytope files")->expected(1, 2);
  homotopy->add_option("--variant", args.variant, "lemma1|retraction")->required();
  homotopy->add_option("--t", args.t, "homotopy parameter in [0,1]")->required();

  CLI::App* fcombine = app.add_subcommand("fcombine", "⊕ of scaled hulls (an F-element)");
  fcombine->add_option("files", args.files, "polytope files")->expected(-1)->required();
  fcombine->add_option("--alphas", args.alphas, "coefficients, max 0; -inf drops a term")
      ->required();

  CLI::App* verify_l1 = app.add_subcommand(
      "verify-lemma1", "Check that Hausdorff balls are F-sets of the ⊕-structure");
  verify_l1->add_option("files", args.files, "optional center polytope file")->expected(0, 1);
  verify_l1->add_option("--r", args.r, "ball radius")->required();
  verify_l1->add_option("--trials", args.trials, "trial count");
  verify_l1->add_option("--seed", args.seed, "rng seed (TROPIC_SEED overrides)");
  verify_l1->add_option("--metric", args.metric, "sup|weighted");

  CLI::App* verify_b = app.add_subcommand(
      "verify-bconvex", "Check closure of b-hulls under max(t·x, y)");
  verify_b->add_option("files", args.files, "optional bconvex polytope file")->expected(0, 1);
  verify_b->add_option("--trials", args.trials, "trial count");
  verify_b->add_option("--seed", args.seed, "rng seed (TROPIC_SEED overrides)");

  CLI::App* counter = app.add_subcommand(
      "counterexample", "Two distinct hulls with identical hyperspace projections");
  (void)counter;

  CLI::App* plot = app.add_subcommand("plot", "2D plot data: generators and pairwise segments");
  add_files(plot, 1, "polytope file");
  plot->add_option("--format", args.format, "json|csv");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(member)) return run_member(args);
    if (app.got_subcommand(reduce)) return run_reduce(args);
    if (app.got_subcommand(oplus_cmd)) {
      const TropicalPolytope P = to_tropical(load_polytope_file(args.files.at(0)));
      const TropicalPolytope Q = to_tropical(load_polytope_file(args.files.at(1)));
      emit_tropical(set_oplus(P, Q));
      return 0;
    }
    if (app.got_subcommand(scale)) {
      emit_tropical(set_scale(Rmax(args.t), to_tropical(load_polytope_file(args.files.at(0)))));
      return 0;
    }
    if (app.got_subcommand(product_cmd)) {
      const TropicalPolytope P = to_tropical(load_polytope_file(args.files.at(0)));
      const TropicalPolytope Q = to_tropical(load_polytope_file(args.files.at(1)));
      emit_tropical(product(P, Q));
      return 0;
    }
    if (app.got_subcommand(project_cmd)) {
      const std::vector<std::size_t> coords = parse_coords(args.coords, "--coords");
      emit_tropical(project(to_tropical(load_polytope_file(args.files.at(0))), coords));
      return 0;
    }
    if (app.got_subcommand(maxpoint)) {
      std::cout << "{\"point\":"
                << point_array(max_point(to_tropical(load_polytope_file(args.files.at(0)))))
                << "}\n";
      return 0;
    }
    if (app.got_subcommand(segment)) {
      const std::vector<Point> polyline =
          tropical_segment(parse_point(args.a, "--a"), parse_point(args.b, "--b"));
      std::cout << "{\"polyline\":" << polyline_array(polyline) << "}\n";
      return 0;
    }
    if (app.got_subcommand(dist)) {
      const Metric m = parse_metric(args.metric);
      DistMode mode;
      if (args.mode == "exact") {
        mode = DistMode::kExact;
      } else if (args.mode == "bisect") {
        mode = DistMode::kBisect;
      } else {
        throw ParseError("--mode must be 'exact' or 'bisect'");
      }
      const double d = dist_point_to_hull(m, parse_point(args.point, "--point"),
                                          to_tropical(load_polytope_file(args.files.at(0))),
                                          mode, args.dist_tol);
      std::cout << "{\"distance\":" << format_double(d) << "}\n";
      return 0;
    }
    if (app.got_subcommand(hausdorff_cmd)) {
      const Metric m = parse_metric(args.metric);
      const TropicalPolytope P = to_tropical(load_polytope_file(args.files.at(0)));
      const TropicalPolytope Q = to_tropical(load_polytope_file(args.files.at(1)));
      const double ab = directed_hausdorff(m, P, Q);
      const double ba = directed_hausdorff(m, Q, P);
      std::cout << "{\"directed_ab\":" << format_double(ab)
                << ",\"directed_ba\":" << format_double(ba)
                << ",\"hausdorff\":" << format_double(std::max(ab, ba)) << "}\n";
      return 0;
    }
    if (app.got_subcommand(homotopy)) return run_homotopy(args);
    if (app.got_subcommand(fcombine)) {
      const std::vector<Rmax> alphas = parse_alphas(args.alphas, "--alphas");
      std::vector<TropicalPolytope> polys;
      polys.reserve(args.files.size());
      for (const std::string& f : args.files) {
        polys.push_back(to_tropical(load_polytope_file(f)));
      }
      if (alphas.size() != polys.size()) {
        throw ParseError("--alphas length must match the number of files");
      }
      emit_tropical(f_combination(polys, alphas));
      return 0;
    }
    if (app.got_subcommand(verify_l1)) return run_verify_lemma1(args);
    if (app.got_subcommand(verify_b)) return run_verify_bconvex(args);
    if (app.got_subcommand(counter)) return run_counterexample();
    if (app.got_subcommand(plot)) return run_plot(args);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
