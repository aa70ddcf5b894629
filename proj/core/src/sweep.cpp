#include "coupler/sweep.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <exception>
#include <ostream>
#include <regex>
#include <thread>

#include <fmt/format.h>

#include "coupler/witness_oracle.hpp"

namespace coupler {

namespace {

double parse_real(std::string_view text) {
  double v = 0.0;
  const char* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (text.empty() || ec != std::errc{} || ptr != end) {
    throw ConfigError(fmt::format("malformed number '{}'", text));
  }
  return v;
}

template <class T>
T pick_mode(const PerMode<T>& m, std::string_view mode) {
  if (mode == "a") return m.a;
  if (mode == "b1") return m.b1;
  return m.b2;
}

template <class T>
T pick_pair(const PerPair<T>& p, std::string_view mode) {
  if (mode == "ab1") return p.ab1;
  if (mode == "ab2") return p.ab2;
  return p.b1b2;
}

bool is_single(std::string_view mode) { return mode == "a" || mode == "b1" || mode == "b2"; }
bool is_pair(std::string_view mode) { return mode == "ab1" || mode == "ab2" || mode == "b1b2"; }
bool is_bipartition(std::string_view mode) { return mode == "a|b1b2" || mode == "ab2|b1" || mode == "ab1|b2"; }

HzPair pick_bipartition(const ThreeModeWitnesses& w, std::string_view mode) {
  if (mode == "a|b1b2") return w.a_b1b2;
  if (mode == "ab2|b1") return w.ab2_b1;
  return w.ab1_b2;
}

}  // namespace

Complex parse_complex(std::string_view text) {
  if (text.empty()) throw ConfigError("empty complex value");
  if (text.back() != 'i') return {parse_real(text), 0.0};

  const std::string_view body = text.substr(0, text.size() - 1);
  // The split is the last sign that is neither leading nor an exponent sign.
  std::size_t split = std::string_view::npos;
  for (std::size_t i = body.size(); i-- > 1;) {
    if ((body[i] == '+' || body[i] == '-') && body[i - 1] != 'e' && body[i - 1] != 'E') {
      split = i;
      break;
    }
  }
  if (split == std::string_view::npos) {
    if (body.empty() || body == "+") return {0.0, 1.0};
    if (body == "-") return {0.0, -1.0};
    return {0.0, parse_real(body)};
  }
  const double re = parse_real(body.substr(0, split));
  std::string_view im = body.substr(split);
  double im_value = 0.0;
  if (im == "+") {
    im_value = 1.0;
  } else if (im == "-") {
    im_value = -1.0;
  } else {
    if (im.front() == '+') im.remove_prefix(1);
    im_value = parse_real(im);
  }
  return {re, im_value};
}

WitnessSelector WitnessSelector::parse(std::string_view text) {
  WitnessSelector s;
  if (text == "full_sep") {
    s.family_ = "full_sep";
    s.name_ = "full_sep";
    return s;
  }
  static const std::regex pattern(R"(^([A-Za-z0-9]+?)_([a-z0-9|]+)(?:\((\d+)(?:;(\d+))?\))?$)");
  const std::string str(text);
  std::smatch m;
  if (!std::regex_match(str, m, pattern)) throw ConfigError(fmt::format("unknown witness '{}'", text));
  s.family_ = m[1].str();
  s.mode_ = m[2].str();
  const bool has_first = m[3].matched;
  const bool has_second = m[4].matched;
  const int first = has_first ? std::stoi(m[3].str()) : 0;
  const int second = has_second ? std::stoi(m[4].str()) : 0;
  const auto bad = [&] { return ConfigError(fmt::format("unknown witness '{}'", text)); };

  const std::string& f = s.family_;
  const std::string& mode = s.mode_;
  if (f == "N" || f == "VarX" || f == "VarY" || f == "d" || f == "E3" || f == "E3p") {
    if (has_first) throw bad();
    const bool ok = (f == "N" && is_single(mode)) || ((f == "VarX" || f == "VarY") && (is_single(mode) || is_pair(mode))) ||
                    (f == "d" && is_pair(mode)) || ((f == "E3" || f == "E3p") && is_bipartition(mode));
    if (!ok) throw bad();
    s.name_ = fmt::format("{}_{}", f, mode);
  } else if (f == "A1" || f == "A2" || (f == "D" && is_single(mode))) {
    if (!is_single(mode) || !has_first || has_second) throw bad();
    if (first < 2) throw ConfigError(fmt::format("witness '{}' needs order n >= 2", text));
    s.n_ = first;
    s.name_ = fmt::format("{}_{}({})", f, mode, first);
  } else if (f == "D") {
    if (!is_pair(mode) || has_first) throw bad();
    s.name_ = fmt::format("D_{}", mode);
  } else if (f == "E" || f == "Ep") {
    if (mode == "ab1") {
      if (has_first != has_second) throw bad();
      s.m_ = has_first ? first : 1;
      s.n_ = has_second ? second : 1;
      if (s.m_ < 1 || s.n_ < 1) throw ConfigError(fmt::format("witness '{}' needs orders m, n >= 1", text));
      s.name_ = fmt::format("{}_ab1({};{})", f, s.m_, s.n_);
    } else if (mode == "ab2" || mode == "b1b2") {
      if (has_first) throw bad();
      s.name_ = fmt::format("{}_{}", f, mode);
    } else {
      throw bad();
    }
  } else {
    throw bad();
  }
  return s;
}

double WitnessSelector::evaluate(const Coefficients& c, const CoherentInput& in) const {
  const std::string& f = family_;
  if (f == "N") return pick_mode(mean_photon_numbers(c, in), mode_);
  if (f == "VarX" || f == "VarY") {
    const QuadratureVariances q = quadrature_variances(c, in);
    const Variance v = is_single(mode_) ? pick_mode(q.single, mode_) : pick_pair(q.compound, mode_);
    return f == "VarX" ? v.x : v.y;
  }
  if (f == "A1" || f == "A2") {
    const AmplitudeSqueezing a = pick_mode(amplitude_powered_squeezing(c, in, n_), mode_);
    return f == "A1" ? a.first : a.second;
  }
  if (f == "D") {
    return is_single(mode_) ? pick_mode(antibunching(c, in, n_), mode_)
                            : pick_pair(intermodal_antibunching(c, in), mode_);
  }
  if (f == "E" || f == "Ep") {
    HzPair h;
    if (mode_ == "ab1") {
      h = hz_entanglement(c, in, m_, n_);
    } else {
      const OtherPairsHz other = hz_entanglement_other_pairs(c, in);
      h = mode_ == "ab2" ? other.ab2 : other.b1b2;
    }
    return f == "E" ? h.e : h.e_prime;
  }
  if (f == "d") return pick_pair(duan_witness(c, in), mode_);
  if (f == "E3" || f == "E3p") {
    const HzPair h = pick_bipartition(three_mode_witnesses(c, in), mode_);
    return f == "E3" ? h.e : h.e_prime;
  }
  return three_mode_witnesses(c, in).full_separability;
}

std::vector<WitnessSelector> all_witness_selectors() {
  std::vector<std::string> names = {"N_a", "N_b1", "N_b2"};
  for (const char* mode : {"a", "b1", "b2", "ab1", "ab2", "b1b2"}) {
    names.push_back(fmt::format("VarX_{}", mode));
    names.push_back(fmt::format("VarY_{}", mode));
  }
  for (int n : {2, 3}) {
    for (const char* mode : {"a", "b1", "b2"}) {
      names.push_back(fmt::format("A1_{}({})", mode, n));
      names.push_back(fmt::format("A2_{}({})", mode, n));
    }
  }
  for (int n : {2, 3, 4, 5}) {
    for (const char* mode : {"a", "b1", "b2"}) names.push_back(fmt::format("D_{}({})", mode, n));
  }
  for (const char* pair : {"ab1", "ab2", "b1b2"}) names.push_back(fmt::format("D_{}", pair));
  for (const auto& [m, n] : {std::pair{1, 1}, {2, 1}, {2, 2}}) {
    names.push_back(fmt::format("E_ab1({};{})", m, n));
    names.push_back(fmt::format("Ep_ab1({};{})", m, n));
  }
  for (const char* pair : {"ab2", "b1b2"}) {
    names.push_back(fmt::format("E_{}", pair));
    names.push_back(fmt::format("Ep_{}", pair));
  }
  for (const char* pair : {"ab1", "ab2", "b1b2"}) names.push_back(fmt::format("d_{}", pair));
  for (const char* part : {"a|b1b2", "ab2|b1", "ab1|b2"}) {
    names.push_back(fmt::format("E3_{}", part));
    names.push_back(fmt::format("E3p_{}", part));
  }
  names.emplace_back("full_sep");

  std::vector<WitnessSelector> out;
  out.reserve(names.size());
  for (const auto& name : names) out.push_back(WitnessSelector::parse(name));
  return out;
}

std::string_view axis_name(GridAxis axis) { return axis == GridAxis::kLength ? "L" : "GammaL"; }

GridAxis parse_axis(std::string_view text) {
  if (text == "L" || text == "length") return GridAxis::kLength;
  if (text == "GammaL" || text == "rescaled") return GridAxis::kRescaledLength;
  throw ConfigError(fmt::format("unknown axis '{}' (expected L or GammaL)", text));
}

std::vector<double> GridSpec::values() const {
  std::vector<double> v(points);
  const double span = stop - start;
  const auto last = static_cast<double>(points - 1);
  for (std::size_t i = 0; i < points; ++i) v[i] = start + span * (static_cast<double>(i) / last);
  v.back() = stop;
  return v;
}

void SweepConfig::validate() const {
  if (!std::isfinite(grid.start) || !std::isfinite(grid.stop)) throw ConfigError("grid bounds must be finite");
  if (!(grid.start < grid.stop)) throw ConfigError("grid start must be below grid stop");
  if (grid.start < 0.0) throw ConfigError("grid values must be nonnegative");
  if (grid.points < 2) throw ConfigError("grid needs at least two points");
  if (columns.empty()) throw ConfigError("no witnesses selected");
  if (axis == GridAxis::kRescaledLength && std::abs(params.gamma_nl) == 0.0) {
    throw ConfigError("the GammaL axis needs a nonzero nonlinear coupling");
  }
  try {
    CouplerParams p = params;
    p.length = 0.0;
    p.validate();
    input.validate();
  } catch (const DomainError& e) {
    throw ConfigError(e.what());
  }
}

std::vector<SweepRow> run_sweep(const SweepConfig& config, unsigned threads) {
  config.validate();
  const std::vector<double> grid = config.grid.values();
  const double gamma_abs = std::abs(config.params.gamma_nl);

  std::vector<std::vector<SweepRow>> per_point(grid.size());
  std::vector<std::exception_ptr> errors(grid.size());

  auto evaluate_point = [&](std::size_t i) {
    const double x = grid[i];
    try {
      const double length = config.axis == GridAxis::kLength ? x : x / gamma_abs;
      const Coefficients c = compute_coefficients(config.params.with_length(length));
      auto& rows = per_point[i];
      rows.reserve(config.columns.size());
      for (const SweepColumn& col : config.columns) {
        const double v = col.selector.evaluate(c, config.input);
        if (!std::isfinite(v)) throw DomainError(fmt::format("witness {} is not finite", col.selector.name()));
        rows.push_back({config.axis, x, col.selector.name() + config.series, v, v * col.display_scale});
      }
    } catch (const DomainError& e) {
      errors[i] = std::make_exception_ptr(
          EvaluationError(fmt::format("{} at {}={}", e.what(), axis_name(config.axis), x), x));
    }
  };

  unsigned workers = threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : threads;
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, grid.size()));
  if (workers <= 1) {
    for (std::size_t i = 0; i < grid.size(); ++i) evaluate_point(i);
  } else {
    std::vector<std::thread> pool;
    const std::size_t chunk = (grid.size() + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
      const std::size_t begin = w * chunk;
      const std::size_t end = std::min(grid.size(), begin + chunk);
      pool.emplace_back([&, begin, end] {
        for (std::size_t i = begin; i < end; ++i) evaluate_point(i);
      });
    }
    for (auto& t : pool) t.join();
  }
  // Report the failure closest to the grid start, whatever the scheduling.
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  std::vector<SweepRow> rows;
  rows.reserve(grid.size() * config.columns.size());
  for (auto& point : per_point) {
    std::sort(point.begin(), point.end(), [](const SweepRow& l, const SweepRow& r) { return l.witness < r.witness; });
    std::move(point.begin(), point.end(), std::back_inserter(rows));
  }
  return rows;
}

std::vector<SweepRow> merge_rows(std::vector<std::vector<SweepRow>> parts) {
  std::vector<SweepRow> rows;
  for (auto& part : parts) std::move(part.begin(), part.end(), std::back_inserter(rows));
  std::stable_sort(rows.begin(), rows.end(), [](const SweepRow& l, const SweepRow& r) {
    if (l.axis_value != r.axis_value) return l.axis_value < r.axis_value;
    return l.witness < r.witness;
  });
  return rows;
}

void write_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
  out << "axis,axis_value,witness,value,display_value\n";
  fmt::memory_buffer buf;
  for (const SweepRow& r : rows) {
    buf.clear();
    fmt::format_to(std::back_inserter(buf), "{},{:.17g},{},{:.17g},{:.17g}\n", axis_name(r.axis), r.axis_value,
                   r.witness, r.value, r.display_value);
    out.write(buf.data(), static_cast<std::streamsize>(buf.size()));
  }
}

}  // namespace coupler
