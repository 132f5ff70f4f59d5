#include "tul/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "tul/combinatorics.hpp"
#include "tul/error.hpp"

namespace tul {

namespace {

void check_ratios(int colors, std::span<const double> c) {
  if (static_cast<int>(c.size()) != colors) {
    throw InvalidArgument("expected " + std::to_string(colors) + " dimension ratios, got " +
                          std::to_string(c.size()));
  }
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (!(c[i] > 0.0) || !std::isfinite(c[i])) {
      throw InvalidArgument("dimension ratio c_" + std::to_string(i + 1) + " must be positive");
    }
  }
}

double ratio(std::span<const double> c, int color) { return c[static_cast<std::size_t>(color)]; }

// Above this k the Narayana-weighted sum is accumulated in log space.
constexpr int kLogSpaceK = 15;

// log N_{k,l} = log binom(k,l) + log binom(k,l−1) − log k.
double log_narayana(int k, int l) {
  auto log_binomial = [](int n, int r) {
    return std::lgamma(n + 1.0) - std::lgamma(r + 1.0) - std::lgamma(n - r + 1.0);
  };
  return log_binomial(k, l) + log_binomial(k, l - 1) - std::log(static_cast<double>(k));
}

}  // namespace

std::string_view to_string(Family f) {
  switch (f) {
    case Family::melonic: return "melonic";
    case Family::cycle_mm: return "cycle_mm";
    case Family::cycle_mn: return "cycle_mn";
    case Family::cycle_11: return "cycle_11";
    case Family::generic: return "generic";
  }
  return "generic";
}

Family family_from_string(std::string_view name) {
  for (auto f : {Family::melonic, Family::cycle_mm, Family::cycle_mn, Family::cycle_11,
                 Family::generic}) {
    if (to_string(f) == name) return f;
  }
  throw InvalidArgument("unknown family '" + std::string(name) + "'");
}

AsymptoticPrediction predict_melonic(int k, int colors, std::span<const double> c,
                                     const FaceProfile& minimal_profile) {
  check_ratios(colors, c);
  const int gamma = 1 + k * (colors - 1);
  if (static_cast<int>(minimal_profile.zero_faces.size()) != colors) {
    throw InvalidArgument("face profile has the wrong number of colors");
  }
  if (minimal_profile.total != gamma) {
    throw InvalidArgument("face profile total " + std::to_string(minimal_profile.total) +
                          " is not 1 + k(D-1) = " + std::to_string(gamma) +
                          "; the graph is not melonic or the profile is not minimal");
  }
  double coefficient = 1.0;
  for (int i = 0; i < colors; ++i) {
    coefficient *= std::pow(ratio(c, i), minimal_profile.zero_faces[static_cast<std::size_t>(i)]);
  }
  return {gamma, coefficient, Family::melonic};
}

AsymptoticPrediction predict_melonic(const ColoredGraph& b, std::span<const double> c) {
  if (!is_melonic(b)) throw InvalidArgument("graph is not melonic");
  const auto minimal = minimal_coverings(b);
  return predict_melonic(b.k(), b.colors(), c, minimal.members.front().faces);
}

AsymptoticPrediction predict_cycle_mm(const CycleSpec& spec, std::span<const double> c) {
  validate(spec);
  if (spec.m() != spec.n()) {
    throw InvalidArgument("predict_cycle_mm needs m = n, got (" + std::to_string(spec.m()) + "," +
                          std::to_string(spec.n()) + ")");
  }
  check_ratios(spec.colors(), c);
  const int k = spec.k;
  const int m = spec.m();
  // Π_ν c_{i_ν} and Π_ν c_{i'_ν} enter as powers l and k−l+1.
  double log_a = 0.0;
  double log_b = 0.0;
  for (int nu = 0; nu < m; ++nu) {
    log_a += std::log(ratio(c, spec.m_colors[static_cast<std::size_t>(nu)]));
    log_b += std::log(ratio(c, spec.n_colors[static_cast<std::size_t>(nu)]));
  }
  double coefficient = 0.0;
  if (k <= kLogSpaceK) {
    const double a = std::exp(log_a);
    const double b = std::exp(log_b);
    for (int l = 1; l <= k; ++l) {
      coefficient += narayana(k, l).convert_to<double>() * std::pow(a, l) * std::pow(b, k - l + 1);
    }
  } else {
    std::vector<double> logs;
    for (int l = 1; l <= k; ++l) {
      logs.push_back(log_narayana(k, l) + l * log_a + (k - l + 1) * log_b);
    }
    const double top = *std::max_element(logs.begin(), logs.end());
    double scaled = 0.0;
    for (double x : logs) scaled += std::exp(x - top);
    coefficient = std::exp(top + std::log(scaled));
  }
  return {m * (k + 1), coefficient, m == 1 ? Family::cycle_11 : Family::cycle_mm};
}

AsymptoticPrediction predict_cycle_mn(const CycleSpec& spec, std::span<const double> c) {
  validate(spec);
  if (spec.m() >= spec.n()) {
    throw InvalidArgument("predict_cycle_mn needs m < n, got (" + std::to_string(spec.m()) + "," +
                          std::to_string(spec.n()) + ")");
  }
  check_ratios(spec.colors(), c);
  double coefficient = 1.0;
  for (int color : spec.m_colors) coefficient *= ratio(c, color);
  for (int color : spec.n_colors) coefficient *= std::pow(ratio(c, color), spec.k);
  return {spec.n() * spec.k + spec.m(), coefficient, Family::cycle_mn};
}

AsymptoticPrediction predict_cycle(const CycleSpec& spec, std::span<const double> c) {
  if (spec.m() == spec.n()) return predict_cycle_mm(spec, c);
  if (spec.m() < spec.n()) return predict_cycle_mn(spec, c);
  return predict_cycle_mn(spec.swapped(), c);
}

std::string CrossCheckReport::describe() const {
  std::ostringstream os;
  os.precision(17);
  os << (pass ? "pass" : "MISMATCH") << " family=" << to_string(family)
     << " gamma_closed=" << gamma_closed << " gamma_enum=" << gamma_enum
     << " coeff_closed=" << coeff_closed << " coeff_enum=" << coeff_enum
     << " count_closed=" << count_closed << " count_enum=" << count_enum;
  return os.str();
}

CrossCheckReport cross_check(const ColoredGraph& b, const AsymptoticPrediction& closed,
                             std::size_t count_closed, std::span<const double> c, double rel_tol) {
  check_ratios(b.colors(), c);
  const auto minimal = minimal_coverings(b);
  CrossCheckReport report;
  report.family = closed.family;
  report.gamma_closed = closed.gamma;
  report.coeff_closed = closed.coefficient;
  report.count_closed = count_closed;
  report.gamma_enum = minimal.gamma;
  report.coeff_enum = limit_coefficient(minimal, c);
  report.count_enum = minimal.count();
  const double scale = std::max(std::abs(report.coeff_closed), std::abs(report.coeff_enum));
  report.pass = report.gamma_closed == report.gamma_enum &&
                report.count_closed == report.count_enum &&
                std::abs(report.coeff_closed - report.coeff_enum) <= rel_tol * scale;
  return report;
}

CrossCheckReport cross_check(const CycleSpec& spec, std::span<const double> c, double rel_tol) {
  const auto closed = predict_cycle(spec, c);
  const std::size_t count =
      spec.m() == spec.n() ? catalan(spec.k).convert_to<std::size_t>() : std::size_t{1};
  return cross_check(make_cycle_graph(spec), closed, count, c, rel_tol);
}

CrossCheckReport cross_check(const MelonicRecipe& recipe, std::span<const double> c,
                             double rel_tol) {
  const auto b = make_melonic(recipe);
  check_ratios(b.colors(), c);
  const auto minimal = minimal_coverings(b);
  CrossCheckReport report;
  report.family = Family::melonic;
  report.gamma_closed = 1 + b.k() * (b.colors() - 1);
  report.count_closed = 1;
  report.gamma_enum = minimal.gamma;
  report.count_enum = minimal.count();
  report.coeff_enum = limit_coefficient(minimal, c);
  if (minimal.count() == 1 && minimal.gamma == report.gamma_closed) {
    report.coeff_closed = predict_melonic(b.k(), b.colors(), c, minimal.members.front().faces).coefficient;
  }
  const double scale = std::max(std::abs(report.coeff_closed), std::abs(report.coeff_enum));
  report.pass = report.gamma_closed == report.gamma_enum && report.count_enum == 1 &&
                std::abs(report.coeff_closed - report.coeff_enum) <= rel_tol * scale;
  return report;
}

}  // namespace tul
