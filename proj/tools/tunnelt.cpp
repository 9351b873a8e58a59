// tunnelt: traversal times, transmission amplitudes and Hartman-recovery
// scans for wave packets crossing a complex absorptive barrier under a
// fractional (Levy) kinetic term.
//
// Exit codes: 0 success, 1 selfcheck failure, 2 usage or config error,
// 3 domain or regime error, 4 I/O error.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sfqm/errors.hpp"
#include "sfqm/export.hpp"
#include "sfqm/hartman.hpp"
#include "sfqm/selfcheck.hpp"
#include "sfqm/sweep.hpp"
#include "sfqm/transmission.hpp"
#include "sfqm/tunnel_time.hpp"
#include "sfqm/version.hpp"

namespace {

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string fmt6(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

// Scalar subcommands share one little report table; csv mode emits the exact
// values, human mode rounds to 6 significant digits.
struct Report {
  std::vector<std::pair<std::string, double>> fields;
  void add(const std::string& name, double value) {
    fields.emplace_back(name, value);
  }
  std::string render(const std::string& format) const {
    std::string out;
    if (format == "csv") {
      for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) out += ",";
        out += fields[i].first;
      }
      out += "\n";
      for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) out += ",";
        out += fmt17(fields[i].second);
      }
      out += "\n";
    } else {
      for (const auto& [name, value] : fields) {
        std::string pad(name.size() < 18 ? 18 - name.size() : 1, ' ');
        out += name + pad + fmt6(value) + "\n";
      }
    }
    return out;
  }
};

void deliver(const std::string& body, const std::string& out_path) {
  if (out_path.empty() || out_path == "-") {
    std::cout << body;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    throw sfqm::io_error("cannot open '" + out_path + "' for writing");
  }
  out.write(body.data(), static_cast<std::streamsize>(body.size()));
  out.flush();
  if (!out) {
    throw sfqm::io_error("short write to '" + out_path + "'");
  }
}

sfqm::UnitSystem resolve_units(const std::string& config_path) {
  if (config_path.empty()) return {};
  return sfqm::load_units(config_path);
}

// "name:min:max:steps" for --axis.
sfqm::Axis parse_axis_spec(const std::string& spec) {
  std::vector<std::string> parts;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ':')) parts.push_back(item);
  if (parts.size() != 4) {
    throw sfqm::domain_error("axis spec must be name:min:max:steps, got '" +
                             spec + "'");
  }
  sfqm::Axis ax;
  ax.name = parts[0];
  try {
    ax.min = std::stod(parts[1]);
    ax.max = std::stod(parts[2]);
    ax.steps = std::stoi(parts[3]);
  } catch (const std::exception&) {
    throw sfqm::domain_error("cannot parse axis spec '" + spec + "'");
  }
  return ax;
}

// "name=value" for --fix.
std::pair<std::string, double> parse_fix_spec(const std::string& spec) {
  std::size_t eq = spec.find('=');
  if (eq == std::string::npos || eq == 0) {
    throw sfqm::domain_error("fixed parameter must be name=value, got '" +
                             spec + "'");
  }
  try {
    return {spec.substr(0, eq), std::stod(spec.substr(eq + 1))};
  } catch (const std::exception&) {
    throw sfqm::domain_error("cannot parse fixed parameter '" + spec + "'");
  }
}

std::pair<double, double> parse_bracket_spec(const std::string& spec) {
  std::size_t colon = spec.find(':');
  if (colon == std::string::npos) {
    throw sfqm::domain_error("bracket must be lo:hi, got '" + spec + "'");
  }
  try {
    return {std::stod(spec.substr(0, colon)), std::stod(spec.substr(colon + 1))};
  } catch (const std::exception&) {
    throw sfqm::domain_error("cannot parse bracket '" + spec + "'");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Wave-packet traversal times through a complex absorptive barrier "
      "under a fractional kinetic term"};
  app.set_version_flag("--version", std::string("tunnelt ") + sfqm::kVersion);
  app.require_subcommand(1);

  // Shared parameters; each subcommand wires in the ones it uses.
  double E = 0.0, Vr = 0.0, Vi = 0.0, alpha = 2.0, d = 0.0, tol = 1.0e-6;
  std::string config, out_path, format = "human", bracket = "1.5:2";
  int jobs = 1;

  auto add_common = [&](CLI::App* cmd, bool with_format) {
    cmd->add_option("--config", config, "unit overrides file (key = value)");
    cmd->add_option("--out", out_path, "write output here instead of stdout");
    if (with_format) {
      cmd->add_option("--format", format, "output format")
          ->check(CLI::IsMember({"human", "csv"}));
    }
  };

  CLI::App* time_cmd =
      app.add_subcommand("time", "closed-form traversal time at one point");
  time_cmd->add_option("--E", E, "incident energy")->required();
  time_cmd->add_option("--Vr", Vr, "barrier height")->required();
  time_cmd->add_option("--Vi", Vi, "absorption strength");
  time_cmd->add_option("--alpha", alpha, "Levy index in (1,2]");
  time_cmd->add_option("--d", d, "barrier width")->required();
  add_common(time_cmd, true);

  CLI::App* trans_cmd = app.add_subcommand(
      "transmission", "transmission amplitude at one point (regime by E vs Vr)");
  trans_cmd->add_option("--E", E, "incident energy")->required();
  trans_cmd->add_option("--Vr", Vr, "barrier height")->required();
  trans_cmd->add_option("--Vi", Vi, "absorption strength");
  trans_cmd->add_option("--alpha", alpha, "Levy index in (1,2]");
  trans_cmd->add_option("--d", d, "barrier width")->required();
  add_common(trans_cmd, true);

  CLI::App* slope_cmd = app.add_subcommand(
      "slope", "large-width slope and intercept of the traversal time");
  slope_cmd->add_option("--E", E, "incident energy")->required();
  slope_cmd->add_option("--Vr", Vr, "barrier height")->required();
  slope_cmd->add_option("--Vi", Vi, "absorption strength");
  slope_cmd->add_option("--alpha", alpha, "Levy index in (1,2]");
  add_common(slope_cmd, true);

  CLI::App* ah_cmd = app.add_subcommand(
      "alpha-h", "Levy index where the large-width slope changes sign");
  ah_cmd->add_option("--E", E, "incident energy")->required();
  ah_cmd->add_option("--Vr", Vr, "barrier height")->required();
  ah_cmd->add_option("--Vi", Vi, "absorption strength");
  ah_cmd->add_option("--bracket", bracket, "search bracket lo:hi (default 1.5:2)");
  ah_cmd->add_option("--tol", tol, "bracket width tolerance");
  add_common(ah_cmd, true);

  CLI::App* sweep_cmd =
      app.add_subcommand("sweep", "parameter scan to CSV (or SVG line plot)");
  std::string kind;
  std::vector<std::string> axis_specs, fix_specs;
  std::string sweep_format = "csv";
  sweep_cmd->add_option("--kind", kind,
                        "gamma_vs_d | gamma_vs_Vi | contour_alpha_d | "
                        "contour_Vi_d | slope_vs_alpha | alphaH_vs_Vi")
      ->required();
  sweep_cmd->add_option("--axis", axis_specs, "axis spec name:min:max:steps")
      ->expected(1, 2);
  sweep_cmd->add_option("--fix", fix_specs, "fixed parameter name=value");
  sweep_cmd->add_option("--jobs", jobs, "worker threads (0 = hardware)");
  sweep_cmd->add_option("--format", sweep_format, "csv or svg")
      ->check(CLI::IsMember({"csv", "svg"}));
  sweep_cmd->add_option("--config", config, "unit overrides file (key = value)");
  sweep_cmd->add_option("--out", out_path, "output path ('-' = stdout)");

  CLI::App* fig_cmd = app.add_subcommand(
      "figure", "reproduce a canned dataset (fig1, fig2a, ... or 'all')");
  std::string figure_id;
  std::string fig_dir = ".";
  bool fig_svg = false;
  fig_cmd->add_option("id", figure_id, "figure identifier or 'all'")->required();
  fig_cmd->add_option("--out", fig_dir, "output directory (created if absent)");
  fig_cmd->add_flag("--svg", fig_svg, "also render an SVG line plot");
  fig_cmd->add_option("--jobs", jobs, "worker threads (0 = hardware)");
  fig_cmd->add_option("--config", config, "unit overrides file (key = value)");

  CLI::App* check_cmd = app.add_subcommand(
      "selfcheck", "run the internal consistency battery");
  check_cmd->add_option("--config", config, "unit overrides file (key = value)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    sfqm::UnitSystem units = resolve_units(config);

    if (time_cmd->parsed()) {
      sfqm::TunnelTimeResult r =
          sfqm::tunneling_time_closed(E, {Vr, Vi, d}, alpha, units);
      Report rep;
      rep.add("gamma", r.gamma);
      rep.add("term_phase", r.term_phase);
      rep.add("term_fractional", r.term_fractional);
      rep.add("term_free", r.term_free);
      deliver(rep.render(format), out_path);
    } else if (trans_cmd->parsed()) {
      sfqm::BarrierSpec barrier{Vr, Vi, d};
      barrier.validate();
      sfqm::TransmissionResult r =
          E < Vr ? sfqm::transmission_forbidden(E, barrier, alpha, units)
                 : sfqm::transmission_allowed(E, barrier, alpha, units);
      Report rep;
      rep.add("modulus", r.modulus);
      rep.add("phase_net", r.phase_net);
      rep.add("t_re", r.t_re);
      rep.add("t_im", r.t_im);
      rep.add("xi", r.xi);
      rep.add("zeta", r.zeta);
      rep.add("log_scale", r.log_scale);
      deliver(rep.render(format), out_path);
    } else if (slope_cmd->parsed()) {
      sfqm::SlopeResult r =
          sfqm::asymptotic_slope(E, {Vr, Vi, 0.0}, alpha, units);
      Report rep;
      rep.add("slope", r.slope);
      rep.add("intercept", r.intercept);
      deliver(rep.render(format), out_path);
    } else if (ah_cmd->parsed()) {
      auto [lo, hi] = parse_bracket_spec(bracket);
      sfqm::AlphaHResult r =
          sfqm::find_alpha_h(E, Vr, Vi, lo, hi, tol, units);
      if (format == "csv") {
        std::string body =
            "alpha_H,slope_at_root,bracket_lo,bracket_hi,iterations,slope_lo,"
            "slope_hi\n";
        body += (r.alpha_H ? fmt17(*r.alpha_H) : std::string());
        body += ",";
        body += r.alpha_H ? fmt17(r.slope_at_root) : std::string();
        body += "," + fmt17(r.bracket_lo) + "," + fmt17(r.bracket_hi) + "," +
                std::to_string(r.iterations) + "," + fmt17(r.slope_lo) + "," +
                fmt17(r.slope_hi) + "\n";
        deliver(body, out_path);
      } else {
        std::string body;
        if (r.alpha_H) {
          body += "alpha_H           " + fmt17(*r.alpha_H) + "\n";
          body += "slope_at_root     " + fmt6(r.slope_at_root) + "\n";
          body += "bracket           [" + fmt17(r.bracket_lo) + ", " +
                  fmt17(r.bracket_hi) + "]\n";
          body += "iterations        " + std::to_string(r.iterations) + "\n";
        } else {
          body += "alpha_H           absent (no sign change inside bracket)\n";
        }
        body += "slope_at_lo       " + fmt6(r.slope_lo) + "\n";
        body += "slope_at_hi       " + fmt6(r.slope_hi) + "\n";
        if (r.roots.size() > 1) {
          body += "all_roots         ";
          for (std::size_t i = 0; i < r.roots.size(); ++i) {
            if (i) body += ", ";
            body += fmt17(r.roots[i]);
          }
          body += "\n";
        }
        deliver(body, out_path);
      }
    } else if (sweep_cmd->parsed()) {
      sfqm::SweepRequest req;
      req.kind = sfqm::parse_sweep_kind(kind);
      for (const std::string& spec : axis_specs) {
        req.axes.push_back(parse_axis_spec(spec));
      }
      for (const std::string& spec : fix_specs) {
        auto [key, value] = parse_fix_spec(spec);
        if (req.fixed.count(key)) {
          throw sfqm::domain_error("duplicate fixed parameter '" + key + "'");
        }
        req.fixed.emplace(key, value);
      }
      sfqm::Dataset data = sfqm::run_sweep(req, units, jobs);
      deliver(sweep_format == "svg" ? sfqm::format_svg_lineplot(data)
                                    : sfqm::format_csv(data),
              out_path);
    } else if (fig_cmd->parsed()) {
      std::vector<std::string> ids;
      if (figure_id == "all") {
        ids = sfqm::figure_names();
      } else {
        ids.push_back(sfqm::figure_name(sfqm::parse_figure_id(figure_id)));
      }
      std::error_code ec;
      std::filesystem::create_directories(fig_dir, ec);
      if (ec) {
        throw sfqm::io_error("cannot create directory '" + fig_dir +
                             "': " + ec.message());
      }
      for (const std::string& idname : ids) {
        sfqm::Dataset data =
            sfqm::reproduce_figure(sfqm::parse_figure_id(idname), units, jobs);
        std::string csv_path = fig_dir + "/" + idname + ".csv";
        std::size_t bytes = sfqm::write_csv(data, csv_path);
        std::cout << "wrote " << csv_path << " (" << bytes << " bytes)\n";
        if (fig_svg) {
          std::string svg_path = fig_dir + "/" + idname + ".svg";
          bytes = sfqm::write_svg_lineplot(data, svg_path);
          std::cout << "wrote " << svg_path << " (" << bytes << " bytes)\n";
        }
      }
    } else if (check_cmd->parsed()) {
      if (!sfqm::run_selfcheck(std::cout, units)) {
        std::cout << "selfcheck: FAIL\n";
        return 1;
      }
      std::cout << "selfcheck: ok\n";
    }
  } catch (const sfqm::config_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const sfqm::io_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const sfqm::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
