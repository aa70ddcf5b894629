#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "coupler/coefficients.hpp"
#include "coupler/figures.hpp"
#include "coupler/sweep.hpp"
#include "coupler/validation.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitDomain = 3;

// Defaults are the Fig. 2 working point.
struct PhysicsOptions {
  std::string k = "0.1";
  std::string gamma_nl = "0.001";
  double delta_k = 1e-4;
  std::string alpha = "5";
  std::string beta = "2";
  std::string gamma_in = "1";

  [[nodiscard]] coupler::CouplerParams params() const {
    coupler::CouplerParams p;
    p.k = coupler::parse_complex(k);
    p.gamma_nl = coupler::parse_complex(gamma_nl);
    p.delta_k = delta_k;
    return p;
  }
  [[nodiscard]] coupler::CoherentInput input() const {
    return {coupler::parse_complex(alpha), coupler::parse_complex(beta), coupler::parse_complex(gamma_in)};
  }
};

void add_coupler_options(CLI::App* app, PhysicsOptions& o) {
  app->add_option("--k", o.k, "linear coupling k (re+imi)")->capture_default_str();
  app->add_option("--gamma-nl", o.gamma_nl, "nonlinear coupling Gamma (re+imi)")->capture_default_str();
  app->add_option("--delta-k", o.delta_k, "phase mismatch, >= 0")->capture_default_str();
}

void add_input_options(CLI::App* app, PhysicsOptions& o) {
  app->add_option("--alpha", o.alpha, "coherent amplitude of a(L) (re+imi)")->capture_default_str();
  app->add_option("--beta", o.beta, "coherent amplitude of b1(0) (re+imi)")->capture_default_str();
  app->add_option("--gamma-in", o.gamma_in, "coherent amplitude of b2(0) (re+imi)")->capture_default_str();
}

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary);
      if (!file_) throw coupler::ConfigError(fmt::format("cannot open '{}' for writing", path));
    }
  }
  std::ostream& stream() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }

 private:
  std::ofstream file_;
};

std::string number(double v) { return fmt::format("{:.17g}", v); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Contradirectional nonlinear coupler: coefficients, nonclassicality witnesses, sweeps"};
  app.require_subcommand(1);
  app.set_config("--config", "", "INI file with option values, one [subcommand] section each");

  PhysicsOptions phys;
  std::string out_path;
  unsigned threads = 0;

  auto* coeffs = app.add_subcommand("coeffs", "print the twelve coefficients at one length");
  double length = 1.0;
  std::string form = "closed";
  add_coupler_options(coeffs, phys);
  coeffs->add_option("--length", length, "interaction length L")->capture_default_str();
  coeffs->add_option("--form", form, "closed | short | printed")->capture_default_str();
  coeffs->add_option("--out", out_path, "output file (default stdout)");

  auto* witness = app.add_subcommand("witness", "evaluate witnesses at one length");
  std::vector<std::string> witness_names;
  add_coupler_options(witness, phys);
  add_input_options(witness, phys);
  witness->add_option("--length", length, "interaction length L")->capture_default_str();
  witness->add_option("--witness", witness_names, "witness name (repeatable; default all)");
  witness->add_option("--out", out_path, "output file (default stdout)");

  auto* sweep = app.add_subcommand("sweep", "sweep witnesses over L or Gamma*L and write CSV");
  std::string axis = "GammaL";
  coupler::GridSpec grid;
  add_coupler_options(sweep, phys);
  add_input_options(sweep, phys);
  sweep->add_option("--axis", axis, "L | GammaL")->capture_default_str();
  sweep->add_option("--start", grid.start, "first grid value")->capture_default_str();
  sweep->add_option("--stop", grid.stop, "last grid value")->capture_default_str();
  sweep->add_option("--points", grid.points, "grid points, >= 2")->capture_default_str();
  sweep->add_option("--witness", witness_names, "witness name (repeatable)");
  sweep->add_option("--out", out_path, "output file (default stdout)");
  sweep->add_option("--threads", threads, "worker threads (0 = all cores)");

  auto* figure = app.add_subcommand("figure", "write the CSV of a figure preset");
  std::string figure_id;
  figure->add_option("id", figure_id, "fig2a..fig2f, fig3a, fig3b, fig4a..fig4c, fig5a, fig5b, fig6, fig7")
      ->required();
  figure->add_option("--out", out_path, "output file (default stdout)");
  figure->add_option("--threads", threads, "worker threads (0 = all cores)");

  auto* validate = app.add_subcommand("validate", "run the validation suite and print key=value lines");
  coupler::ValidationOptions vopts;
  add_coupler_options(validate, phys);
  validate->add_option("--seed", vopts.seed, "sample generator seed")->capture_default_str();
  validate->add_option("--samples", vopts.sample_count, "coherent samples")->capture_default_str();
  validate->add_option("--step", vopts.ode_step, "RK4 step")->capture_default_str();
  validate->add_option("--out", out_path, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  try {
    if (*coeffs) {
      coupler::CouplerParams p = phys.params();
      p.length = length;
      coupler::Coefficients c;
      if (form == "closed") {
        c = coupler::compute_coefficients(p);
      } else if (form == "short") {
        c = coupler::short_length_coefficients(p);
      } else if (form == "printed") {
        c = coupler::printed_coefficients(p);
      } else {
        throw coupler::ConfigError(fmt::format("unknown coefficient form '{}'", form));
      }
      Output out(out_path);
      out.stream() << "coefficient,re,im\n";
      const auto values = c.as_array();
      for (std::size_t i = 0; i < values.size(); ++i) {
        out.stream() << coupler::Coefficients::kNames[i] << ',' << number(values[i].real()) << ','
                     << number(values[i].imag()) << '\n';
      }
    } else if (*witness) {
      std::vector<coupler::WitnessSelector> selectors;
      if (witness_names.empty()) {
        selectors = coupler::all_witness_selectors();
      } else {
        for (const auto& name : witness_names) selectors.push_back(coupler::WitnessSelector::parse(name));
      }
      coupler::CouplerParams p = phys.params();
      p.length = length;
      const coupler::CoherentInput in = phys.input();
      in.validate();
      const coupler::Coefficients c = coupler::compute_coefficients(p);
      Output out(out_path);
      out.stream() << "witness,value\n";
      for (const auto& s : selectors) out.stream() << s.name() << ',' << number(s.evaluate(c, in)) << '\n';
    } else if (*sweep) {
      coupler::SweepConfig cfg;
      cfg.params = phys.params();
      cfg.input = phys.input();
      cfg.axis = coupler::parse_axis(axis);
      cfg.grid = grid;
      for (const auto& name : witness_names) cfg.columns.push_back({coupler::WitnessSelector::parse(name), 1.0});
      const auto rows = coupler::run_sweep(cfg, threads);
      Output out(out_path);
      coupler::write_csv(out.stream(), rows);
    } else if (*figure) {
      const auto rows = coupler::reproduce_figure(figure_id, threads);
      Output out(out_path);
      coupler::write_csv(out.stream(), rows);
    } else if (*validate) {
      coupler::CouplerParams p = phys.params();
      try {
        p.validate();
      } catch (const coupler::DomainError& e) {
        throw coupler::ConfigError(e.what());
      }
      const coupler::ValidationReport report = coupler::run_validation(p, vopts);
      Output out(out_path);
      out.stream() << coupler::render_report(report);
    }
  } catch (const coupler::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const coupler::DomainError& e) {
    std::cerr << "domain error: " << e.what() << '\n';
    return kExitDomain;
  }
  return kExitOk;
}
