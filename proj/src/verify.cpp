#include "tul/verify.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "tul/combinatorics.hpp"
#include "tul/constructors.hpp"
#include "tul/enumeration.hpp"
#include "tul/error.hpp"
#include "tul/tensor_sim.hpp"

namespace tul {

namespace {

bool wants(const VerifySuiteConfig& config, Family f) {
  return std::find(config.families.begin(), config.families.end(), f) != config.families.end();
}

std::vector<double> random_ratios(int colors, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> ratio(0.5, 3.0);
  std::vector<double> c;
  for (int i = 0; i < colors; ++i) c.push_back(ratio(rng));
  return c;
}

CycleSpec shuffled_spec(int k, int m, int n, std::mt19937_64& rng) {
  std::vector<int> colors(static_cast<std::size_t>(m + n));
  for (int i = 0; i < m + n; ++i) colors[static_cast<std::size_t>(i)] = i;
  std::shuffle(colors.begin(), colors.end(), rng);
  return {k, std::vector<int>(colors.begin(), colors.begin() + m),
          std::vector<int>(colors.begin() + m, colors.end())};
}

std::string spec_name(const CycleSpec& s) { return describe(TraceTarget{s}); }

void catalan_checks(const VerifySuiteConfig& config, VerifySummary& out) {
  for (int k = 1; k <= config.max_k; ++k) {
    const auto r = make_cycle_graph({k, {0}, {1}});
    const auto minimal = minimal_coverings(r, enumeration_cap(), config.threads);
    CatalanRow row;
    row.k = k;
    row.count = minimal.count();
    row.catalan = catalan(k).str();
    std::map<int, std::size_t> first;
    std::map<int, std::size_t> second;
    for (const auto& m : minimal.members) {
      ++first[m.faces.zero_faces[0]];
      ++second[m.faces.zero_faces[1]];
    }
    bool narayana_ok = true;
    bool recurrence_ok = true;
    bool symmetry_ok = true;
    for (int l = 1; l <= k; ++l) {
      const auto h = first.count(l) ? first[l] : 0;
      row.histogram.push_back(h);
      const auto closed = narayana(k, l);
      row.narayana.push_back(closed.str());
      narayana_ok = narayana_ok && BigInt(h) == closed;
      recurrence_ok = recurrence_ok && narayana_recurrence(k, l) == closed;
      const auto mirrored = second.count(k + 1 - l) ? second[k + 1 - l] : 0;
      symmetry_ok = symmetry_ok && mirrored == h;
    }
    bool genus_ok = true;
    for_each_covering(r, [&](const Permutation& tau, const FaceProfile& faces) {
      const double g = genus(CoveringGraph(r, tau));
      const bool minimal_here = faces.total == k + 1;
      genus_ok = genus_ok && g >= 0 && g == std::floor(g) && ((g == 0) == minimal_here);
    });
    std::ostringstream detail;
    detail << "count=" << row.count << " C_k=" << row.catalan << " gamma=" << minimal.gamma
           << " histogram=[";
    for (std::size_t i = 0; i < row.histogram.size(); ++i) detail << (i ? "," : "") << row.histogram[i];
    detail << "] narayana=[";
    for (std::size_t i = 0; i < row.narayana.size(); ++i) detail << (i ? "," : "") << row.narayana[i];
    detail << "]";
    const bool pass = BigInt(row.count) == catalan(k) && minimal.gamma == k + 1 && narayana_ok &&
                      recurrence_ok && symmetry_ok && genus_ok;
    out.checks.push_back({"cycle_11 k=" + std::to_string(k) + " catalan/narayana/genus", pass,
                          detail.str()});
    out.catalan_rows.push_back(std::move(row));
  }
}

CycleSpec canonical_spec(int k, int m, int n) {
  CycleSpec spec{k, {}, {}};
  for (int i = 0; i < m; ++i) spec.m_colors.push_back(i);
  for (int i = m; i < m + n; ++i) spec.n_colors.push_back(i);
  return spec;
}

// Every (m,n) split with D ≤ max_D, k ≤ max_k whose family is selected, in a
// canonical and a shuffled color layout.
void cycle_checks(const VerifySuiteConfig& config, std::mt19937_64& rng, VerifySummary& out) {
  for (int d = 2; d <= config.max_D; ++d) {
    for (int m = 1; 2 * m <= d; ++m) {
      const int n = d - m;
      const Family family = m < n ? Family::cycle_mn : (m == 1 ? Family::cycle_11 : Family::cycle_mm);
      if (!wants(config, family)) continue;
      for (int k = 1; k <= config.max_k; ++k) {
        for (const auto& spec : {canonical_spec(k, m, n), shuffled_spec(k, m, n, rng)}) {
          const auto c = random_ratios(d, rng);
          const auto report = cross_check(spec, c);
          out.checks.push_back({"closed form vs enumeration: " + spec_name(spec), report.pass,
                                report.describe()});
        }
      }
    }
  }
}

void melonic_checks(const VerifySuiteConfig& config, std::mt19937_64& rng, VerifySummary& out) {
  for (int d = 3; d <= config.max_D; ++d) {
    for (int k = 1; k <= config.max_k; ++k) {
      for (int rep = 0; rep < 2; ++rep) {
        const auto recipe = random_melonic_recipe(d, k, rng);
        const auto c = random_ratios(d, rng);
        const auto report = cross_check(recipe, c);
        const bool recognized = is_melonic(make_melonic(recipe));
        out.checks.push_back({"melonic D=" + std::to_string(d) + " k=" + std::to_string(k) +
                                  " recipe #" + std::to_string(rep + 1),
                              report.pass && recognized,
                              report.describe() + (recognized ? "" : " (not recognized as melonic)")});
      }
    }
  }
}

struct WickCase {
  std::string name;
  TraceTarget target;
  int N;
};

void wick_checks(const VerifySuiteConfig& config, VerifySummary& out) {
  std::vector<WickCase> cases;
  if (wants(config, Family::cycle_11)) cases.push_back({"(1,1)-cycle k=2", CycleSpec{2, {0}, {1}}, 4});
  if (wants(config, Family::cycle_mm) && config.max_D >= 4) {
    cases.push_back({"(2,2)-cycle k=2", CycleSpec{2, {0, 1}, {2, 3}}, 2});
  }
  if (wants(config, Family::cycle_mn) && config.max_D >= 3) {
    cases.push_back({"(1,2)-cycle k=2", CycleSpec{2, {0}, {1, 2}}, 3});
  }
  if (wants(config, Family::melonic) && config.max_D >= 3) {
    cases.push_back({"melonic D=3 k=2", make_melonic({3, {{0, 0}}}), 3});
  }

  for (const auto& wc : cases) {
    const auto graph = graph_of(wc.target);
    const std::vector<double> ones(static_cast<std::size_t>(graph.colors()), 1.0);
    const double exact = gaussian_exact_mean(graph, ones, wc.N);
    TensorSpec spec{ones, wc.N, Distribution::complex_gaussian, config.seed};
    const auto estimate = monte_carlo_mean(spec, wc.target, config.samples, config.threads);
    const double z = std::abs(estimate.mean - exact) / estimate.std_error;
    std::ostringstream detail;
    detail << "N=" << wc.N << " exact=" << exact << " mc=" << estimate.mean << " stderr="
           << estimate.std_error << " z=" << z;
    out.checks.push_back({"Wick exactness: " + wc.name, z < 4.0, detail.str()});

    // The exact Gaussian mean divided by N^gamma must settle onto the limit coefficient.
    const auto minimal = minimal_coverings(graph);
    const double limit = limit_coefficient(minimal, ones);
    double previous = INFINITY;
    bool settling = true;
    std::ostringstream trend;
    trend << "limit=" << limit << " deviations:";
    for (int n : {2, 4, 8, 16, 32}) {
      const double normalized =
          gaussian_exact_mean(graph, ones, n) / std::pow(static_cast<double>(n), minimal.gamma);
      const double dev = std::abs(normalized - limit);
      trend << ' ' << dev;
      settling = settling && dev <= previous * (1.0 + 1e-12);
      previous = dev;
    }
    settling = settling && previous < 0.1 * std::max(limit, 1.0);
    out.checks.push_back({"leading order: " + wc.name, settling, trend.str()});
  }
}

}  // namespace

void validate(const VerifySuiteConfig& config, int cap) {
  if (config.max_k < 1) throw InvalidArgument("verify: max_k must be at least 1");
  if (config.max_k > cap) {
    throw InvalidArgument("verify: max_k = " + std::to_string(config.max_k) +
                          " exceeds the enumeration cap " + std::to_string(cap) +
                          " (set TUL_ENUM_CAP to raise it)");
  }
  if (config.max_D < 2) throw InvalidArgument("verify: max_D must be at least 2");
  if (config.families.empty()) throw InvalidArgument("verify: no families selected");
  for (auto f : config.families) {
    if (f == Family::generic) throw InvalidArgument("verify: 'generic' is not a verifiable family");
  }
  if (config.samples < 2) throw InvalidArgument("verify: need at least 2 Monte Carlo samples");
}

std::size_t VerifySummary::failures() const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [](const CheckResult& c) { return !c.pass; }));
}

VerifySummary run_verify(const VerifySuiteConfig& config) {
  validate(config, enumeration_cap());
  VerifySummary out;
  std::mt19937_64 rng(config.seed);
  if (wants(config, Family::cycle_11)) catalan_checks(config, out);
  cycle_checks(config, rng, out);
  if (wants(config, Family::melonic)) melonic_checks(config, rng, out);
  wick_checks(config, out);
  return out;
}

}  // namespace tul
