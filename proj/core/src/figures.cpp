#include "coupler/figures.hpp"

#include <fmt/format.h>

namespace coupler {

namespace {

struct Series {
  std::string label;
  double gamma_nl = 0.001;
  double delta_k = 1e-4;
  double alpha = 5.0;
  double gamma_in = 1.0;
};

SweepConfig make_config(const Series& s, GridAxis axis, GridSpec grid,
                        const std::vector<std::pair<std::string, double>>& witnesses) {
  SweepConfig cfg;
  cfg.params.k = {0.1, 0.0};
  cfg.params.gamma_nl = {s.gamma_nl, 0.0};
  cfg.params.delta_k = s.delta_k;
  cfg.input = {{s.alpha, 0.0}, {2.0, 0.0}, {s.gamma_in, 0.0}};
  cfg.axis = axis;
  cfg.grid = grid;
  for (const auto& [name, scale] : witnesses) cfg.columns.push_back({WitnessSelector::parse(name), scale});
  cfg.series = s.label;
  return cfg;
}

constexpr GridSpec kRescaledGrid{0.0, 0.1, 1000};
constexpr GridSpec kLengthGrid{0.0, 100.0, 1000};

std::vector<std::pair<std::string, double>> quadratures(const char* mode) {
  return {{fmt::format("VarX_{}", mode), 1.0}, {fmt::format("VarY_{}", mode), 1.0}};
}

std::vector<SweepConfig> fig2(const char* mode, bool versus_length) {
  std::vector<SweepConfig> out;
  if (versus_length) {
    for (double g : {0.001, 0.01}) {
      out.push_back(make_config({fmt::format("@Gamma={}", g), g, 1e-4}, GridAxis::kLength, kLengthGrid,
                                quadratures(mode)));
    }
  } else {
    for (double dk : {0.1, 0.01}) {
      out.push_back(make_config({fmt::format("@dk={}", dk), 0.001, dk}, GridAxis::kRescaledLength, kRescaledGrid,
                                quadratures(mode)));
    }
  }
  return out;
}

std::vector<SweepConfig> fig3(const char* mode) {
  // n = 2 curves are drawn ten times larger to share the n = 3 scale.
  std::vector<std::pair<std::string, double>> w;
  for (int n : {2, 3}) {
    const double scale = n == 2 ? 10.0 : 1.0;
    w.emplace_back(fmt::format("A1_{}({})", mode, n), scale);
    w.emplace_back(fmt::format("A2_{}({})", mode, n), scale);
  }
  return {make_config({"", 0.001, 1e-4, 3.0, 1.0}, GridAxis::kRescaledLength, kRescaledGrid, w)};
}

std::vector<SweepConfig> over_alpha(const std::vector<std::pair<std::string, double>>& w, double gamma_in) {
  std::vector<SweepConfig> out;
  for (double alpha : {3.0, 5.0}) {
    out.push_back(make_config({fmt::format("@alpha={}", alpha), 0.001, 1e-4, alpha, gamma_in},
                              GridAxis::kRescaledLength, kRescaledGrid, w));
  }
  return out;
}

std::vector<SweepConfig> fig5(const char* mode, double gamma_in) {
  const std::vector<std::pair<std::string, double>> w = {{fmt::format("D_{}(3)", mode), 400.0},
                                                         {fmt::format("D_{}(4)", mode), 20.0},
                                                         {fmt::format("D_{}(5)", mode), 1.0}};
  return {make_config({"", 0.001, 1e-4, 5.0, gamma_in}, GridAxis::kRescaledLength, kRescaledGrid, w)};
}

}  // namespace

const std::vector<std::string_view>& figure_ids() {
  static const std::vector<std::string_view> ids = {"fig2a", "fig2b", "fig2c", "fig2d", "fig2e", "fig2f",
                                                    "fig3a", "fig3b", "fig4a", "fig4b", "fig4c", "fig5a",
                                                    "fig5b", "fig6",  "fig7"};
  return ids;
}

std::vector<SweepConfig> figure_preset(std::string_view id) {
  if (id == "fig2a") return fig2("a", false);
  if (id == "fig2b") return fig2("b1", false);
  if (id == "fig2c") return fig2("ab1", false);
  if (id == "fig2d") return fig2("a", true);
  if (id == "fig2e") return fig2("b1", true);
  if (id == "fig2f") return fig2("ab1", true);
  if (id == "fig3a") return fig3("a");
  if (id == "fig3b") return fig3("b1");
  if (id == "fig4a") return over_alpha({{"D_a(2)", 1.0}}, 1.0);
  if (id == "fig4b") return over_alpha({{"D_b1(2)", 1.0}}, -1.0);
  if (id == "fig4c") return over_alpha({{"D_ab1", 1.0}}, -1.0);
  if (id == "fig5a") return fig5("a", 1.0);
  if (id == "fig5b") return fig5("b1", -1.0);
  if (id == "fig6") return over_alpha({{"E_ab1(1;1)", 1.0}, {"Ep_ab1(1;1)", 1.0}}, 1.0);
  if (id == "fig7") return over_alpha({{"E_ab1(2;1)", 1.0}, {"Ep_ab1(2;1)", 1.0}}, 1.0);
  throw ConfigError(fmt::format("unknown figure id '{}'", id));
}

std::vector<SweepRow> reproduce_figure(std::string_view id, unsigned threads) {
  std::vector<std::vector<SweepRow>> parts;
  for (const SweepConfig& cfg : figure_preset(id)) parts.push_back(run_sweep(cfg, threads));
  return merge_rows(std::move(parts));
}

}  // namespace coupler
