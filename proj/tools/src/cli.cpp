#include "copgeo_cli/cli.hpp"

#include <algorithm>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <optional>

#include "CLI11.hpp"
#include "copgeo/distance.hpp"
#include "copgeo/empirical.hpp"
#include "copgeo/error.hpp"
#include "copgeo/grid_measures.hpp"
#include "copgeo/io.hpp"
#include "copgeo/mcd_geometry.hpp"
#include "copgeo/oracles.hpp"
#include "copgeo/parallel.hpp"
#include "copgeo/renderer.hpp"
#include "copgeo/self_similar.hpp"
#include "json.hpp"

namespace copgeo::cli {
namespace {

namespace fs = std::filesystem;
using nlohmann::ordered_json;

std::string shortest(double v) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

int exit_code(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError:
    case ErrorCode::DuplicateOrOutOfRange:
    case ErrorCode::UnsupportedFormat:
      return kUsage;
    case ErrorCode::CapExceeded:
    case ErrorCode::IncompatibleResolution:
    case ErrorCode::ResolutionTooHigh:
      return kResource;
    default:
      return kData;
  }
}

// "identity" stands for the identity of size 2.
Permutation parse_permutation(const std::string& text) {
  if (text == "identity") return Permutation::identity(2);
  return Permutation::parse(text);
}

// A shuffle given as a JSON file, "identity", or a permutation literal.
IntervalExchange parse_target(const std::string& text) {
  if (text == "identity") return IntervalExchange::identity();
  std::error_code ec;
  if (fs::is_regular_file(text, ec)) return load_shuffle_spec(text);
  return shuffle_from_permutation(Permutation::parse(text));
}

void write_file(const fs::path& path, const std::string& bytes) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorCode::ParseError, "cannot write '" + path.string() + "'");
  f << bytes;
}

ordered_json merged(const std::string& report_json, const ordered_json& extra) {
  ordered_json j = ordered_json::parse(report_json);
  for (const auto& [k, v] : extra.items()) j[k] = v;
  return j;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Dependence measures of shuffles, checkerboards and self-similar copulas", "copgeo"};
  app.require_subcommand(1);
  unsigned threads = 0;
  app.add_option("--threads", threads, "Worker threads (0 = one per hardware thread)");

  // measure-perm
  auto* perm_cmd = app.add_subcommand("measure-perm", "Measures of the shuffle of a permutation");
  std::string perm_text;
  bool fixed_point = false, one_step = false;
  std::optional<std::size_t> iterate_n;
  perm_cmd->add_option("perm", perm_text, "Permutation such as 1,3,2")->required();
  auto* fp_flag = perm_cmd->add_flag("--fixed-point", fixed_point, "Self-similar attractor of V_pi");
  auto* it_opt = perm_cmd->add_option("--iterate", iterate_n, "Iterate V_pi^n(M)");
  auto* os_flag = perm_cmd->add_flag("--one-step", one_step, "The shuffle V_pi(M) (default)");
  fp_flag->excludes(it_opt)->excludes(os_flag);
  it_opt->excludes(os_flag);

  // measure-shuffle
  auto* shuffle_cmd = app.add_subcommand("measure-shuffle", "Exact measures of a shuffle given as JSON");
  std::string shuffle_path;
  shuffle_cmd->add_option("spec", shuffle_path, "Shuffle spec file")->required();

  // measure-grid
  auto* grid_cmd = app.add_subcommand("measure-grid", "Numeric measures of a checkerboard copula");
  std::string grid_path, profile_path;
  std::size_t quad_k = kDefaultQuadratureK, t_count = kDefaultTCount;
  grid_cmd->add_option("grid", grid_path, "Grid file (JSON or CSV)")->required();
  grid_cmd->add_option("--K", quad_k, "Quadrature resolution")->capture_default_str();
  grid_cmd->add_option("--tcount", t_count, "Number of contour levels")->capture_default_str();
  grid_cmd->add_option("--profile", profile_path, "Also write the length profile as CSV");

  // ifs
  auto* ifs_cmd = app.add_subcommand("ifs", "Iterates V_pi^n(M) as CSV: n,omega,tau,ell,surf,d_inf");
  std::string ifs_perm, render_dir, ifs_format = "svg";
  std::size_t ifs_n = 0, ifs_size = 512;
  ifs_cmd->add_option("perm", ifs_perm, "Permutation or 'identity'")->required();
  ifs_cmd->add_option("--n", ifs_n, "Last iterate")->required();
  ifs_cmd->add_option("--render", render_dir, "Write the supports of iterates 1..n into this directory");
  ifs_cmd->add_option("--format", ifs_format, "svg or pgm")->capture_default_str();
  ifs_cmd->add_option("--size", ifs_size, "Image size in pixels")->capture_default_str();

  // vt-fixed-point
  auto* vt_cmd = app.add_subcommand("vt-fixed-point", "Attractor of V_T for a transformation matrix, on a grid");
  std::string matrix_path;
  std::size_t resolution = 64, max_iter = 60;
  double fp_tol = 1e-9;
  vt_cmd->add_option("matrix", matrix_path, "JSON file {\"t\": [[...]]}")->required();
  vt_cmd->add_option("--resolution", resolution, "Grid resolution")->capture_default_str();
  vt_cmd->add_option("--tol", fp_tol, "Stop when successive iterates are this close in d_inf")->capture_default_str();
  vt_cmd->add_option("--max-iter", max_iter, "Iteration cap")->capture_default_str();
  vt_cmd->add_option("--K", quad_k, "Quadrature resolution")->capture_default_str();
  vt_cmd->add_option("--tcount", t_count, "Number of contour levels")->capture_default_str();

  // empirical
  auto* emp_cmd = app.add_subcommand("empirical", "Rank-based measures of a two-column CSV sample");
  std::string emp_path, tie_policy = "reject";
  emp_cmd->add_option("csv", emp_path, "Sample file")->required();
  emp_cmd->add_option("--tie-policy", tie_policy, "reject or input-order")->capture_default_str();

  // mc
  auto* mc_cmd = app.add_subcommand("mc", "Monte Carlo estimates for a shuffle");
  mc_cmd->require_subcommand(1);
  std::string mc_target;
  std::size_t samples = 1'000'000;
  std::uint64_t seed = 0;
  auto add_mc = [&](const char* name, const char* help) {
    auto* sub = mc_cmd->add_subcommand(name, help);
    sub->add_option("target", mc_target, "Permutation, 'identity' or shuffle spec file")->required();
    sub->add_option("--samples", samples, "Sample count")->capture_default_str();
    sub->add_option("--seed", seed, "RNG seed")->required();
    return sub;
  };
  auto* mc_tau_cmd = add_mc("tau", "Kendall's tau");
  add_mc("omega", "Omega area");

  // render
  auto* render_cmd = app.add_subcommand("render", "Support and Omega region as an image");
  std::string render_target, render_format = "svg", render_out;
  std::size_t render_size = 512, render_iterate = 1;
  render_cmd->add_option("target", render_target, "Permutation, 'identity' or shuffle spec file")->required();
  render_cmd->add_option("--format", render_format, "svg or pgm")->capture_default_str();
  render_cmd->add_option("--size", render_size, "Image size in pixels")->capture_default_str();
  render_cmd->add_option("--iterate", render_iterate, "For a permutation, render V_pi^n(M)")->capture_default_str();
  render_cmd->add_option("--out", render_out, "Output file (stdout when omitted)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o, r;
    const int code = app.exit(e, o, r);
    out << o.str();
    err << r.str();
    return code == 0 ? kOk : kUsage;
  }

  try {
    set_default_threads(threads);

    if (*perm_cmd) {
      const Permutation p = parse_permutation(perm_text);
      MeasureReport report;
      if (fixed_point)
        report = fixed_point_measures(p);
      else if (iterate_n)
        report = report_from_omega(omega_area_iterate(p, *iterate_n), true, "exact-mcd");
      else
        report = measure_report_mcd(shuffle_from_permutation(p));
      out << to_json(report) << '\n';
    } else if (*shuffle_cmd) {
      out << to_json(measure_report_mcd(load_shuffle_spec(shuffle_path))) << '\n';
    } else if (*grid_cmd) {
      const GridCopula grid = load_grid(grid_path);
      out << to_json(measure_report_grid(grid, quad_k, t_count)) << '\n';
      if (!profile_path.empty()) write_file(profile_path, profile_csv(length_profile(grid, quad_k, t_count)));
    } else if (*ifs_cmd) {
      const Permutation p = parse_permutation(ifs_perm);
      const auto format = parse_image_format(ifs_format);
      const auto steps = convergence_diagnostic(p, ifs_n);
      std::string csv = "n,omega,tau,ell,surf,d_inf\n";
      for (const auto& s : steps) {
        const double omega = s.omega.get_d();
        csv += std::to_string(s.n) + "," + to_string(s.omega) + "," + to_string(kendall_tau_mcd(s.omega)) + "," +
               shortest(length_measure_mcd(omega)) + "," + shortest(surface_area_mcd(omega)) + "," +
               shortest(s.d_inf) + "\n";
      }
      if (!render_dir.empty()) {
        for (std::size_t n = 1; n <= ifs_n; ++n) {
          const auto image = render_support_and_omega(iterate_shuffle(p, n), format, ifs_size);
          write_file(fs::path(render_dir) / ("ifs_n" + std::to_string(n) + "." + std::string(extension(format))), image);
        }
      }
      out << csv;
    } else if (*vt_cmd) {
      const auto t = load_transformation_matrix(matrix_path);
      const auto fp = fixed_point_grid(t, resolution, fp_tol, max_iter);
      ordered_json extra;
      extra["resolution"] = resolution;
      extra["iterations"] = fp.iterations;
      extra["last_step"] = fp.last_step;
      extra["converged"] = fp.converged;
      out << merged(to_json(measure_report_grid(fp.grid, quad_k, t_count)), extra).dump() << '\n';
      if (!fp.converged) err << "warning: no convergence within " << max_iter << " iterations\n";
    } else if (*emp_cmd) {
      const auto policy = parse_tie_policy(tie_policy);
      out << to_json(empirical_measures(read_pairs(emp_path), policy)) << '\n';
    } else if (*mc_cmd) {
      const IntervalExchange h = parse_target(mc_target);
      const bool tau = static_cast<bool>(*mc_tau_cmd);
      const McEstimate est = tau ? mc_kendall_tau(h, samples, seed) : mc_omega_area(h, samples, seed);
      const Rational omega = omega_area(h);
      ordered_json j;
      j["method"] = "monte-carlo";
      j["quantity"] = tau ? "tau" : "omega";
      j["estimate"] = est.estimate;
      j["std_error"] = est.std_error;
      j["samples"] = samples;
      j["seed"] = seed;
      const Rational exact = tau ? kendall_tau_mcd(omega) : omega;
      j["exact"] = to_string(exact);
      j["exact_value"] = exact.get_d();
      out << j.dump() << '\n';
    } else if (*render_cmd) {
      const auto format = parse_image_format(render_format);
      IntervalExchange h = IntervalExchange::identity();
      std::error_code ec;
      if (render_target == "identity")
        h = IntervalExchange::identity();
      else if (fs::is_regular_file(render_target, ec))
        h = load_shuffle_spec(render_target);
      else
        h = iterate_shuffle(Permutation::parse(render_target), render_iterate);
      const auto image = render_support_and_omega(h, format, render_size);
      if (render_out.empty())
        out << image;
      else
        write_file(render_out, image);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code(e.code());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kData;
  }
  return kOk;
}

}  // namespace copgeo::cli
