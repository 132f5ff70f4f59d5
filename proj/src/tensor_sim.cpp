#include "tul/tensor_sim.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <thread>

#include "tul/asymptotics.hpp"
#include "tul/enumeration.hpp"

namespace tul {

std::string_view to_string(Distribution d) {
  switch (d) {
    case Distribution::complex_gaussian: return "complex_gaussian";
    case Distribution::complex_rademacher: return "complex_rademacher";
    case Distribution::uniform_disc: return "uniform_disc";
  }
  return "complex_gaussian";
}

Distribution distribution_from_string(std::string_view name) {
  for (auto d : {Distribution::complex_gaussian, Distribution::complex_rademacher,
                 Distribution::uniform_disc}) {
    if (to_string(d) == name) return d;
  }
  throw InvalidArgument("unknown distribution '" + std::string(name) +
                        "' (expected complex_gaussian, complex_rademacher or uniform_disc)");
}

std::vector<Eigen::Index> TensorSpec::dims() const {
  if (c.empty()) throw InvalidArgument("tensor spec needs at least one color");
  if (N < 1) throw InvalidArgument("tensor spec: N must be positive");
  std::vector<Eigen::Index> out;
  for (std::size_t i = 0; i < c.size(); ++i) {
    const double d = c[i] * N;
    const double rounded = std::round(d);
    if (!(c[i] > 0.0) || std::abs(d - rounded) > 1e-9 * std::max(1.0, d) || rounded < 1.0) {
      std::ostringstream os;
      os << "tensor spec: c_" << i + 1 << " * N = " << c[i] << " * " << N
         << " is not a positive integer";
      throw InvalidArgument(os.str());
    }
    out.push_back(static_cast<Eigen::Index>(rounded));
  }
  return out;
}

std::mt19937_64 substream(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) {
  auto lo = [](std::uint64_t x) { return static_cast<std::uint32_t>(x); };
  auto hi = [](std::uint64_t x) { return static_cast<std::uint32_t>(x >> 32); };
  std::seed_seq seq{lo(seed), hi(seed), lo(stream), hi(stream), lo(index), hi(index)};
  return std::mt19937_64(seq);
}

double naive_term_count(std::span<const Eigen::Index> dims, int k) {
  double terms = 1.0;
  for (auto d : dims) terms *= std::pow(static_cast<double>(d), k);
  return terms;
}

namespace detail {

void check_shape(std::span<const Eigen::Index> shape, int colors) {
  if (static_cast<int>(shape.size()) != colors) {
    throw InvalidArgument("tensor has " + std::to_string(shape.size()) + " slots but the graph has " +
                          std::to_string(colors) + " colors");
  }
}

}  // namespace detail

ColoredGraph graph_of(const TraceTarget& target) {
  if (const auto* spec = std::get_if<CycleSpec>(&target)) return make_cycle_graph(*spec);
  return std::get<ColoredGraph>(target);
}

std::string describe(const TraceTarget& target) {
  std::ostringstream os;
  if (const auto* spec = std::get_if<CycleSpec>(&target)) {
    os << "(" << spec->m() << "," << spec->n() << ")-cycle k=" << spec->k << " m_colors=[";
    for (std::size_t i = 0; i < spec->m_colors.size(); ++i) os << (i ? "," : "") << spec->m_colors[i] + 1;
    os << "] n_colors=[";
    for (std::size_t i = 0; i < spec->n_colors.size(); ++i) os << (i ? "," : "") << spec->n_colors[i] + 1;
    os << "]";
    return os.str();
  }
  const auto& g = std::get<ColoredGraph>(target);
  os << "graph k=" << g.k() << " D=" << g.colors() << " sigma=";
  for (const auto& s : g.sigmas()) os << s.cycle_notation() << ";";
  auto out = os.str();
  out.pop_back();
  return out;
}

double gaussian_exact_mean(const ColoredGraph& b, std::span<const Eigen::Index> dims) {
  detail::check_shape(dims, b.colors());
  double sum = 0.0;
  for_each_covering(b, [&](const Permutation&, const FaceProfile& faces) {
    double term = 1.0;
    for (std::size_t i = 0; i < dims.size(); ++i) {
      term *= std::pow(static_cast<double>(dims[i]), faces.zero_faces[i]);
    }
    sum += term;
  });
  return sum;
}

double gaussian_exact_mean(const ColoredGraph& b, std::span<const double> c, int N) {
  const TensorSpec spec{std::vector<double>(c.begin(), c.end()), N};
  const auto dims = spec.dims();
  return gaussian_exact_mean(b, dims);
}

MeanEstimate monte_carlo_mean(const TensorSpec& spec, const TraceTarget& target,
                              std::size_t samples, int threads) {
  if (samples < 2) throw InvalidArgument("Monte Carlo needs at least 2 samples for a standard error");
  const auto dims = spec.dims();
  const auto graph = graph_of(target);
  detail::check_shape(dims, graph.colors());
  if (std::holds_alternative<ColoredGraph>(target) &&
      naive_term_count(dims, graph.k()) > kNaiveTermBudget) {
    throw CapExceeded("naive contraction of this graph at N = " + std::to_string(spec.N) +
                      " exceeds the term budget; use a cycle spec for the matricized path");
  }

  std::vector<double> values(samples);
  auto run = [&](std::size_t begin, std::size_t end) {
    for (std::size_t s = begin; s < end; ++s) {
      values[s] = trace_invariant(sample_tensor<double>(spec, s), target);
    }
  };
  const auto workers = static_cast<std::size_t>(std::clamp<long>(threads, 1, static_cast<long>(samples)));
  if (workers == 1) {
    run(0, samples);
  } else {
    std::vector<std::jthread> pool;
    const std::size_t chunk = (samples + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
      const auto begin = std::min(samples, w * chunk);
      const auto end = std::min(samples, begin + chunk);
      pool.emplace_back(run, begin, end);
    }
  }

  // Two passes in sample order, so the result does not depend on the worker count.
  double mean = 0.0;
  for (double v : values) mean += v;
  mean /= static_cast<double>(samples);
  double ss = 0.0;
  for (double v : values) ss += (v - mean) * (v - mean);
  const double variance = ss / static_cast<double>(samples - 1);
  return {mean, std::sqrt(variance / static_cast<double>(samples)), samples};
}

std::vector<std::size_t> UniversalityReport::flagged() const {
  std::vector<std::size_t> out;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const auto& row = rows[r];
    const double scale = std::pow(static_cast<double>(row.N), gamma);
    if (std::abs(row.normalized - predicted) > 4.0 * row.std_error / scale) out.push_back(r);
  }
  return out;
}

UniversalityReport universality_scan(const TensorSpec& spec_template, const TraceTarget& target,
                                     std::span<const int> n_list, std::size_t samples,
                                     int threads) {
  if (n_list.empty()) throw InvalidArgument("universality scan needs at least one N");
  for (int n : n_list) {
    TensorSpec probe = spec_template;
    probe.N = n;
    probe.dims();
  }
  UniversalityReport report;
  report.graph = describe(target);
  if (const auto* spec = std::get_if<CycleSpec>(&target)) {
    const auto prediction = predict_cycle(*spec, spec_template.c);
    report.gamma = prediction.gamma;
    report.predicted = prediction.coefficient;
  } else {
    const auto minimal = minimal_coverings(std::get<ColoredGraph>(target));
    report.gamma = minimal.gamma;
    report.predicted = limit_coefficient(minimal, spec_template.c);
  }
  for (int n : n_list) {
    TensorSpec spec = spec_template;
    spec.N = n;
    const auto estimate = monte_carlo_mean(spec, target, samples, threads);
    const double scale = std::pow(static_cast<double>(n), report.gamma);
    report.rows.push_back({n, samples, estimate.mean, estimate.std_error, estimate.mean / scale});
  }
  return report;
}

}  // namespace tul
