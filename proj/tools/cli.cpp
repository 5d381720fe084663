#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "macloops/json_io.hpp"
#include "macloops/series.hpp"

namespace macloops::cli {

namespace {

struct Request {
  std::string subcommand;
  std::string input = "-";
  std::string space;
  std::string format = "text";
  int expand_degree = -1;  // -1 = not requested
  int m = -1;
  int max_census_m = 5;
  int k = 0, t = 0, r = 0;
  bool allow_ghost_vertices = false;
};

std::string slurp_input(const Request& req, std::istream& in) {
  if (req.input == "-") {
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
  }
  std::ifstream file(req.input);
  if (!file) throw Error(Errc::ParseError, "cannot open input file " + req.input);
  std::ostringstream buf;
  buf << file.rdbuf();
  return buf.str();
}

SimplicialComplex read_complex(const Request& req, std::istream& in) {
  GhostPolicy policy = req.allow_ghost_vertices ? GhostPolicy::Allow : GhostPolicy::Reject;
  return parse_complex_json(slurp_input(req, in), policy);
}

std::string join_with(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

std::string sphere_product_name(const SphereProduct& sp) {
  std::vector<std::string> parts;
  if (sp.disk_dimension > 0 || sp.sphere_dimensions.empty())
    parts.push_back("D^" + std::to_string(sp.disk_dimension));
  for (int d : sp.sphere_dimensions) parts.push_back("S^" + std::to_string(d));
  return join_with(parts, " × ");
}

std::string face_set_name(const FaceSet& s) {
  std::vector<std::string> parts;
  for (int v : s.vertices()) parts.push_back(std::to_string(v));
  return "{" + join_with(parts, ",") + "}";
}

std::string coefficients_csv(const std::vector<mpz_class>& coeffs) {
  std::vector<std::string> parts;
  parts.reserve(coeffs.size());
  for (const auto& c : coeffs) parts.push_back(c.get_str());
  return join_with(parts, ",");
}

void run_classify(const Request& req, std::istream& in, std::ostream& out) {
  SimplicialComplex K = read_complex(req, in);
  Verdict verdict = classify(K);
  if (verdict.elliptic()) {
    SphereProduct sp = moment_angle_type(K);
    if (req.format == "json") {
      std::vector<std::string> mnfs;
      for (const FaceSet& f : verdict.profile.mnfs) mnfs.push_back(face_set_to_json(f));
      out << "{\"verdict\":\"elliptic\",\"mnfs\":[" << join_with(mnfs, ",")
          << "],\"zk\":{\"disk\":" << sp.disk_dimension << ",\"spheres\":[";
      std::vector<std::string> dims;
      for (int d : sp.sphere_dimensions) dims.push_back(std::to_string(d));
      out << join_with(dims, ",") << "]},\"lzk_growth\":\"sub-exponential\"}\n";
    } else {
      out << "elliptic; Z_K ≃ " << sphere_product_name(sp)
          << "; L Z_K growth: sub-exponential\n";
    }
  } else {
    WedgeWitness w = wedge_retract_witness(K);
    if (req.format == "json") {
      std::vector<std::string> mnfs;
      for (const FaceSet& f : verdict.profile.mnfs) mnfs.push_back(face_set_to_json(f));
      out << "{\"verdict\":\"hyperbolic\",\"mnfs\":[" << join_with(mnfs, ",")
          << "],\"witness\":" << witness_to_json(w) << ",\"lzk_growth\":\"exponential\"}\n";
    } else {
      out << "hyperbolic; wedge retract: S^" << w.sphere_dims.first << " ∨ S^"
          << w.sphere_dims.second << "; L Z_K growth: exponential\n";
    }
  }
}

void run_decompose(const Request& req, std::istream& in, std::ostream& out) {
  SimplicialComplex K = read_complex(req, in);
  JoinDecomposition d = join_decompose(K);
  if (req.format == "json") {
    out << decomposition_to_json(d) << "\n";
  } else {
    std::vector<std::string> factors;
    for (const FaceSet& f : d.boundary_factors) factors.push_back(face_set_name(f));
    out << "simplex: " << face_set_name(d.simplex_vertices)
        << "; boundaries: " << (factors.empty() ? "(none)" : join_with(factors, ", ")) << "\n";
  }
}

void run_witness(const Request& req, std::istream& in, std::ostream& out) {
  SimplicialComplex K = read_complex(req, in);
  WedgeWitness w = wedge_retract_witness(K);
  if (req.format == "json") {
    out << witness_to_json(w) << "\n";
  } else {
    HiltonMilnorBound b = hilton_milnor_bound(w.first_only, w.shared, w.second_only);
    out << "I=" << face_set_name(w.first) << " J=" << face_set_name(w.second)
        << " k=" << w.first_only << " t=" << w.shared << " r=" << w.second_only
        << "; wedge: S^" << w.sphere_dims.first << " ∨ S^" << w.sphere_dims.second
        << "; bound: " << b.lhs << " < " << b.rhs << "\n";
  }
}

FactoredSeries series_for_space(const Request& req, const SimplicialComplex& K) {
  const std::string& space = req.space;
  if (space == "zk") return zk_series(moment_angle_type(K));
  if (space == "omega-zk") return loop_zk_series(moment_angle_type(K));
  if (space == "loop-zk") return free_loop_zk_series(moment_angle_type(K));
  if (space == "dj") return face_ring_series(K);
  if (space == "omega-dj") return loop_dj_series(K);
  if (space == "loop-dj-bound") return free_loop_dj_upper_series(K);
  throw Error(Errc::ParameterOutOfRange, "unknown space " + space);
}

void run_series(const Request& req, std::istream& in, std::ostream& out) {
  FactoredSeries series;
  if (req.space == "loop-cp-power") {
    int m = req.m;
    if (m < 0) {
      // Fall back to the vertex count of an input complex if one is given.
      SimplicialComplex K = read_complex(req, in);
      m = K.vertex_count();
    }
    series = free_loop_cp_infty_power_series(m);
  } else {
    series = series_for_space(req, read_complex(req, in));
  }

  RationalFunction rf = series.normalized();
  if (req.format == "json") {
    out << "{\"space\":\"" << req.space << "\",\"factored\":\"" << series.str()
        << "\",\"series\":" << rational_function_to_json(rf);
    if (req.expand_degree >= 0)
      out << ",\"coefficients\":" << coefficients_to_json(rf.expand(req.expand_degree));
    out << "}\n";
  } else {
    out << series.str() << "\n";
    if (req.expand_degree >= 0)
      out << "coefficients: " << coefficients_csv(rf.expand(req.expand_degree)) << "\n";
  }
}

void run_census(const Request& req, std::ostream& out) {
  if (req.m < 0) throw Error(Errc::ParameterOutOfRange, "census requires --m");
  if (req.max_census_m > 5)
    throw Error(Errc::CensusTooLarge, "--max-census-m cannot exceed 5");
  if (req.m > req.max_census_m)
    throw Error(Errc::CensusTooLarge,
                "census for m = " + std::to_string(req.m) + " exceeds the cap of " +
                    std::to_string(req.max_census_m));
  census(req.m, [&](const SimplicialComplex& K, const Verdict& v) {
    out << "{\"complex\":" << complex_to_json(K) << ",\"verdict\":\""
        << (v.elliptic() ? "elliptic" : "hyperbolic") << "\"}\n";
  });
}

void run_expand(const Request& req, std::istream& in, std::ostream& out) {
  RationalFunction f = parse_rational_function_json(slurp_input(req, in));
  std::vector<mpz_class> coeffs = f.expand(req.expand_degree);
  if (req.format == "json")
    out << "{\"coefficients\":" << coefficients_to_json(coeffs) << "}\n";
  else
    out << coefficients_csv(coeffs) << "\n";
}

void run_bound_check(const Request& req, std::ostream& out) {
  HiltonMilnorBound b = hilton_milnor_bound(req.k, req.t, req.r);
  if (req.format == "json")
    out << "{\"lhs\":" << b.lhs << ",\"rhs\":" << b.rhs << ",\"ok\":" << (b.ok ? "true" : "false")
        << "}\n";
  else
    out << "lhs=" << b.lhs << " rhs=" << b.rhs << " ok=" << (b.ok ? "true" : "false") << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"moment-angle complex classification and Hilbert-Poincaré series toolkit"};
  app.require_subcommand(1);
  Request req;

  auto add_common = [&](CLI::App* cmd, bool with_input) {
    if (with_input)
      cmd->add_option("--input", req.input, "input file path, or - for standard input");
    cmd->add_option("--format", req.format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
    cmd->add_flag("--allow-ghost-vertices", req.allow_ghost_vertices,
                  "admit vertices lying in no facet (classification will refuse them)");
  };

  CLI::App* classify_cmd = app.add_subcommand("classify", "elliptic/hyperbolic verdict");
  add_common(classify_cmd, true);
  CLI::App* decompose_cmd = app.add_subcommand("decompose", "join decomposition certificate");
  add_common(decompose_cmd, true);
  CLI::App* series_cmd = app.add_subcommand("series", "Hilbert-Poincaré series");
  add_common(series_cmd, true);
  series_cmd
      ->add_option("--space", req.space, "which space's series")
      ->required()
      ->check(CLI::IsMember(
          {"zk", "omega-zk", "loop-zk", "dj", "omega-dj", "loop-dj-bound", "loop-cp-power"}));
  series_cmd->add_option("--expand", req.expand_degree, "also expand through degree N")
      ->check(CLI::NonNegativeNumber);
  series_cmd->add_option("--m", req.m, "exponent m for loop-cp-power");
  CLI::App* witness_cmd = app.add_subcommand("witness", "wedge-retract witness");
  add_common(witness_cmd, true);
  CLI::App* census_cmd = app.add_subcommand("census", "all labeled complexes on m vertices");
  add_common(census_cmd, false);
  census_cmd->add_option("--m", req.m, "number of vertices")->required();
  census_cmd->add_option("--max-census-m", req.max_census_m, "refuse censuses beyond this size");
  CLI::App* expand_cmd = app.add_subcommand("expand", "power-series coefficients");
  add_common(expand_cmd, true);
  expand_cmd->add_option("--expand", req.expand_degree, "expansion degree N")
      ->required()
      ->check(CLI::NonNegativeNumber);
  CLI::App* bound_cmd = app.add_subcommand("bound-check", "dimension bound for witness counts");
  add_common(bound_cmd, false);
  bound_cmd->add_option("--k", req.k)->required();
  bound_cmd->add_option("--t", req.t)->required();
  bound_cmd->add_option("--r", req.r)->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (classify_cmd->parsed()) run_classify(req, in, out);
    else if (decompose_cmd->parsed()) run_decompose(req, in, out);
    else if (series_cmd->parsed()) run_series(req, in, out);
    else if (witness_cmd->parsed()) run_witness(req, in, out);
    else if (census_cmd->parsed()) run_census(req, out);
    else if (expand_cmd->parsed()) run_expand(req, in, out);
    else if (bound_cmd->parsed()) run_bound_check(req, out);
  } catch (const Error& e) {
    err << e.what() << "\n";  // e.what() starts with the module error name
    return e.code() == Errc::ParseError ? 2 : 3;
  }
  return 0;
}

}  // namespace macloops::cli
