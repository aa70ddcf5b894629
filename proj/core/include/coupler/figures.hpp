#pragma once

#include <string_view>
#include <vector>

#include "coupler/sweep.hpp"

namespace coupler {

/// fig2a .. fig2f, fig3a, fig3b, fig4a .. fig4c, fig5a, fig5b, fig6, fig7.
[[nodiscard]] const std::vector<std::string_view>& figure_ids();

/// One sweep per plotted series. Throws ConfigError for unknown ids.
[[nodiscard]] std::vector<SweepConfig> figure_preset(std::string_view id);

[[nodiscard]] std::vector<SweepRow> reproduce_figure(std::string_view id, unsigned threads = 0);

}  // namespace coupler
