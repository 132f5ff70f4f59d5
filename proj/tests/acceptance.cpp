// Acceptance gates: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "oracles.hpp"
#include "support.hpp"
#include "tul/asymptotics.hpp"
#include "tul/combinatorics.hpp"
#include "tul/enumeration.hpp"
#include "tul/tensor_sim.hpp"

using namespace tul;
using testing_support::canonical;
using testing_support::rel_diff;

namespace {

struct Gate {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      if (pass) detail << "first failure: " << what << "; ";
      pass = false;
    }
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

CycleSpec shuffled_layout(CycleSpec spec, std::mt19937_64& rng) {
  std::vector<int> colors(static_cast<std::size_t>(spec.colors()));
  std::iota(colors.begin(), colors.end(), 0);
  std::shuffle(colors.begin(), colors.end(), rng);
  for (auto& c : spec.m_colors) c = colors[static_cast<std::size_t>(c)];
  for (auto& c : spec.n_colors) c = colors[static_cast<std::size_t>(c)];
  return spec;
}

Gate catalan_counts() {
  Gate g;
  const std::size_t expected[] = {1, 2, 5, 14, 42, 132};
  const auto t0 = Clock::now();
  for (int k = 1; k <= 6; ++k) {
    const auto minimal = minimal_coverings(make_cycle_graph(canonical(k, 1, 1)));
    g.require(minimal.count() == expected[k - 1], "count at k=" + std::to_string(k));
    g.require(minimal.gamma == k + 1, "gamma at k=" + std::to_string(k));
    g.detail << minimal.count() << (k < 6 ? "," : "");
  }
  const double t = seconds_since(t0);
  g.require(t < 10.0, "runtime");
  g.detail << " gamma=k+1 (" << t << " s)";
  return g;
}

Gate narayana_rows() {
  Gate g;
  for (int k = 1; k <= 6; ++k) {
    const auto hist = narayana_face_distribution(make_cycle_graph(canonical(k, 1, 1)), 0);
    for (int l = 1; l <= k; ++l) {
      const auto it = hist.find(l);
      const std::size_t got = it == hist.end() ? 0 : it->second;
      g.require(BigInt(got) == narayana(k, l), "histogram k=" + std::to_string(k) + " l=" + std::to_string(l));
    }
    g.require(hist.size() == static_cast<std::size_t>(k), "histogram support k=" + std::to_string(k));
  }
  int entries = 0;
  for (int k = 1; k <= 12; ++k) {
    for (int l = 1; l <= k; ++l, ++entries) {
      g.require(narayana_recurrence(k, l) == narayana(k, l),
                "recurrence k=" + std::to_string(k) + " l=" + std::to_string(l));
    }
  }
  g.detail << "histograms k<=6 exact, recurrence matches " << entries << " entries k<=12";
  return g;
}

Gate melonic_uniqueness() {
  Gate g;
  std::mt19937_64 rng(2024);
  const auto t0 = Clock::now();
  int recipes = 0;
  for (int round = 0; round < 4; ++round) {
    for (int d = 3; d <= 5; ++d) {
      for (int k = 1; k <= 5; ++k, ++recipes) {
        const auto recipe = random_melonic_recipe(d, k, rng);
        const auto minimal = minimal_coverings(make_melonic(recipe));
        g.require(minimal.count() == 1, "count for D=" + std::to_string(d) + " k=" + std::to_string(k));
        g.require(minimal.gamma == 1 + k * (d - 1), "gamma for D=" + std::to_string(d) + " k=" + std::to_string(k));
      }
    }
  }
  const double t = seconds_since(t0);
  g.require(t < 60.0, "runtime");
  g.detail << recipes << " recipes, each one minimal covering with 1+k(D-1) faces (" << t << " s)";
  return g;
}

Gate cycle_closed_forms() {
  Gate g;
  std::mt19937_64 rng(77);
  constexpr int test_n = 4;
  std::uniform_int_distribution<int> quarter(2, 12);  // c in [0.5, 3], c * 4 integral
  int checks = 0;
  double worst = 0.0;
  for (int k = 1; k <= 4; ++k) {
    for (int d = 2; d <= 6; ++d) {
      for (int m = 1; m < d; ++m) {
        for (int layout = 0; layout < 2; ++layout, ++checks) {
          const auto spec = layout == 0 ? canonical(k, m, d - m) : shuffled_layout(canonical(k, m, d - m), rng);
          std::vector<double> c(static_cast<std::size_t>(d));
          for (auto& x : c) x = quarter(rng) / static_cast<double>(test_n);
          TensorSpec{c, test_n}.dims();
          const auto r = cross_check(spec, c, 1e-12);
          const int lo = std::min(m, d - m);
          const int hi = std::max(m, d - m);
          const int gamma = lo == hi ? lo * (k + 1) : hi * k + lo;
          const std::size_t count = lo == hi ? catalan(k).convert_to<std::size_t>() : 1;
          g.require(r.pass && r.gamma_enum == gamma && r.count_enum == count, r.describe());
          worst = std::max(worst, rel_diff(r.coeff_closed, r.coeff_enum));
        }
      }
    }
  }
  g.detail << checks << " splits/layouts k<=4 D<=6, worst coefficient rel diff " << worst;
  return g;
}

struct WickCase {
  std::string name;
  TraceTarget target;
  std::vector<double> c;
  int N;
};

Gate wick_exactness() {
  Gate g;
  std::mt19937_64 rng(5);
  std::vector<WickCase> cases;
  for (int N : {2, 4, 8}) cases.push_back({"(1,1) k=2", canonical(2, 1, 1), {1, 1}, N});
  for (int N : {2, 3, 4}) cases.push_back({"(1,1) k=3", canonical(3, 1, 1), {1, 1}, N});
  for (int N : {2, 3}) cases.push_back({"(1,1) k=4", canonical(4, 1, 1), {1, 1}, N});
  for (int N : {2, 3, 4}) cases.push_back({"(1,2) k=2", canonical(2, 1, 2), {1, 1, 1}, N});
  cases.push_back({"(1,2) k=3", canonical(3, 1, 2), {1, 1, 1}, 2});
  cases.push_back({"(1,2) k=2 c=(1,1/2,3/2)", canonical(2, 1, 2), {1, 0.5, 1.5}, 4});
  for (int N : {2, 3}) cases.push_back({"(2,2) k=2", canonical(2, 2, 2), {1, 1, 1, 1}, N});
  cases.push_back({"(2,3) k=2", canonical(2, 2, 3), {1, 1, 1, 1, 1}, 2});
  for (int N : {2, 3}) cases.push_back({"melonic D=3 k=2", make_melonic({3, {{0, 0}}}), {1, 1, 1}, N});
  cases.push_back({"melonic D=4 k=3", make_melonic({4, {{1, 0}, {3, 1}}}), {1, 1, 1, 1}, 2});
  cases.push_back({"dipole D=3", make_dipole(3), {1, 2.0 / 3.0, 1}, 3});
  {
    std::vector<Permutation> sigma;
    for (int i = 0; i < 3; ++i) {
      std::vector<int> img{0, 1, 2};
      std::shuffle(img.begin(), img.end(), rng);
      sigma.emplace_back(img);
    }
    cases.push_back({"random D=3 k=3", ColoredGraph(sigma), {1, 1, 1}, 2});
  }

  const auto t0 = Clock::now();
  double worst_z = 0.0;
  std::uint64_t seed = 100;
  for (const auto& wc : cases) {
    const TensorSpec spec{wc.c, wc.N, Distribution::complex_gaussian, seed++};
    const auto graph = graph_of(wc.target);
    const double exact = gaussian_exact_mean(graph, wc.c, wc.N);
    std::vector<double> dims;
    for (auto d : spec.dims()) dims.push_back(static_cast<double>(d));
    g.require(rel_diff(exact, oracle::wick_mean(testing_support::images_of(graph), dims)) < 1e-12,
              wc.name + " exact mean vs oracle");
    const auto est = monte_carlo_mean(spec, wc.target, 10000);
    const double z = std::abs(est.mean - exact) / est.std_error;
    worst_z = std::max(worst_z, z);
    g.require(z < 4.0, wc.name + " N=" + std::to_string(wc.N) + " z=" + std::to_string(z));
  }
  g.require(gaussian_exact_mean(make_cycle_graph(canonical(2, 1, 1)), std::vector<double>{1, 1}, 8) == 1024.0,
            "(1,1) k=2 N=8 exact value 1024");
  const double t = seconds_since(t0);
  g.require(t < 300.0, "runtime");
  g.detail << cases.size() << " configurations x 10^4 samples, max z " << worst_z << " (" << t << " s)";
  return g;
}

Gate universality() {
  Gate g;
  const std::vector<int> ns{4, 8, 16, 32};
  // The (2,2) unfolding is N^2 x N^2, so N = 32 costs about a second per sample.
  auto samples_at = [](const CycleSpec& spec, int N) -> std::size_t {
    if (spec.m() == 2) return N == 32 ? 64 : N == 16 ? 1000 : 4000;
    return N == 32 ? 1000 : 10000;
  };
  // For k = 2 and i.i.d. entries, E tr((MM†)²) = r c (r + c + μ4 − 2) with M r × c.
  auto fourth_moment = [](Distribution d) {
    switch (d) {
      case Distribution::complex_rademacher: return 1.0;
      case Distribution::uniform_disc: return 4.0 / 3.0;
      default: return 2.0;
    }
  };
  double worst_exact_z = 0.0;
  const auto t0 = Clock::now();
  for (const auto& spec : {canonical(2, 1, 2), canonical(2, 2, 2)}) {
    const std::vector<double> c(static_cast<std::size_t>(spec.colors()), 1.0);
    const auto prediction = predict_cycle(spec, c);
    std::map<Distribution, ScanRow> at_32;
    for (auto dist : {Distribution::complex_gaussian, Distribution::complex_rademacher, Distribution::uniform_disc}) {
      double previous = std::numeric_limits<double>::infinity();
      std::ostringstream devs;
      for (int N : ns) {
        const TensorSpec ts{c, N, dist, 31};
        const auto est = monte_carlo_mean(ts, spec, samples_at(spec, N));
        const double scale = std::pow(static_cast<double>(N), prediction.gamma);
        const ScanRow row{N, est.samples, est.mean, est.std_error, est.mean / scale};
        const double dev = std::abs(row.normalized - prediction.coefficient);
        const double r = std::pow(static_cast<double>(N), spec.m());
        const double cols = std::pow(static_cast<double>(N), spec.n());
        const double exact = r * cols * (r + cols + fourth_moment(dist) - 2.0);
        const double exact_z = std::abs(est.mean - exact) / est.std_error;
        worst_exact_z = std::max(worst_exact_z, exact_z);
        g.require(exact_z < 4.0, std::string(to_string(dist)) + " vs exact finite-N mean at N=" + std::to_string(N));
        if (dist != Distribution::complex_gaussian) {
          g.require(dev < previous, "(" + std::to_string(spec.m()) + "," + std::to_string(spec.n()) + ") " +
                                        std::string(to_string(dist)) + " deviation not decreasing at N=" +
                                        std::to_string(N));
          devs << (N == 4 ? "" : ">") << dev;
        }
        previous = dev;
        if (N == 32) at_32[dist] = row;
      }
      if (dist != Distribution::complex_gaussian) {
        g.detail << "(" << spec.m() << "," << spec.n() << ") " << to_string(dist) << " dev " << devs.str() << "; ";
      }
    }
    const auto& gauss = at_32[Distribution::complex_gaussian];
    const double scale = std::pow(32.0, prediction.gamma);
    for (auto dist : {Distribution::complex_rademacher, Distribution::uniform_disc}) {
      const auto& row = at_32[dist];
      const double sigma = std::hypot(row.std_error, gauss.std_error) / scale;
      const double z = std::abs(row.normalized - gauss.normalized) / sigma;
      g.require(z < 4.0, std::string(to_string(dist)) + " vs gaussian at N=32, z=" + std::to_string(z));
      g.detail << "N=32 " << to_string(dist) << " z=" << z << "; ";
    }
  }
  g.detail << "every row within 4 stderr of the exact finite-N mean (max z " << worst_exact_z << ") ("
           << seconds_since(t0) << " s)";
  return g;
}

Gate oracle_equivalence() {
  Gate g;
  std::mt19937_64 rng(9);
  const double ratios[] = {0.5, 1.0, 1.5, 2.0};
  int instances = 0;
  double worst = 0.0;
  while (instances < 100) {
    const int d = std::uniform_int_distribution<int>(2, 5)(rng);
    const int k = std::uniform_int_distribution<int>(1, 4)(rng);
    const int m = std::uniform_int_distribution<int>(1, d - 1)(rng);
    const int N = 2 * std::uniform_int_distribution<int>(1, 2)(rng);
    std::vector<double> c(static_cast<std::size_t>(d));
    for (auto& x : c) x = ratios[std::uniform_int_distribution<int>(0, 3)(rng)];
    const auto spec = shuffled_layout(canonical(k, m, d - m), rng);
    const TensorSpec ts{c, N, static_cast<Distribution>(instances % 3), static_cast<std::uint64_t>(instances)};
    if (naive_term_count(ts.dims(), k) > 1e7) continue;
    const auto t = sample_tensor(ts);
    const double naive = trace_invariant_naive(t, make_cycle_graph(spec));
    const double fast = trace_invariant_cycle(t, spec);
    worst = std::max(worst, rel_diff(naive, fast));
    g.require(rel_diff(naive, fast) < 1e-9, "instance " + std::to_string(instances));
    ++instances;
  }
  g.detail << instances << " instances, worst rel diff " << worst;
  return g;
}

Gate genus_gate() {
  Gate g;
  std::size_t coverings = 0;
  for (int k = 1; k <= 6; ++k) {
    const auto b = make_cycle_graph(canonical(k, 1, 1));
    const auto minimal = minimal_coverings(b);
    std::size_t planar = 0;
    for_each_covering(b, [&](const Permutation& tau, const FaceProfile& faces) {
      ++coverings;
      const double genus_value = genus(CoveringGraph(b, tau));
      g.require(genus_value >= 0.0 && genus_value == std::floor(genus_value),
                "genus not a nonnegative integer at k=" + std::to_string(k));
      const bool is_min = faces.total == minimal.gamma;
      g.require((genus_value == 0.0) == is_min, "genus 0 differs from minimality at k=" + std::to_string(k));
      if (genus_value == 0.0) ++planar;
    });
    g.require(BigInt(planar) == catalan(k), "planar count at k=" + std::to_string(k));
  }
  g.detail << coverings << " coverings k<=6, genus 0 exactly on the C_k minimal ones";
  return g;
}

Gate invariance_gate() {
  Gate g;
  std::mt19937_64 rng(13);
  double worst = 0.0;
  int checks = 0;
  for (int trial = 0; trial < 25; ++trial) {
    const int d = 2 + trial % 3;
    const int k = 1 + trial % 3;
    const int N = 2 + trial % 2;
    const TensorSpec ts{std::vector<double>(static_cast<std::size_t>(d), 1.0), N,
                        static_cast<Distribution>(trial % 3), static_cast<std::uint64_t>(trial)};
    const auto t = sample_tensor(ts);
    const TraceTarget target = trial % 2 == 0 ? TraceTarget{shuffled_layout(canonical(k, 1, d - 1), rng)}
                               : d >= 3     ? TraceTarget{make_melonic(random_melonic_recipe(d, k, rng))}
                                            : TraceTarget{make_cycle_graph(canonical(k, 1, 1))};

    std::vector<ComplexMatrix<double>> us;
    for (int a = 0; a < d; ++a) us.push_back(random_unitary<double>(N, rng));
    const double u_dev = unitary_invariance_check<double>(t, target, us);
    worst = std::max(worst, u_dev);
    g.require(u_dev < 1e-8, "unitary trial " + std::to_string(trial));
    ++checks;

    std::uniform_real_distribution<double> part(-2.0, 2.0);
    const std::complex<double> lambda(part(rng), part(rng));
    const double before = trace_invariant(t, target);
    const double after = trace_invariant(lambda * t, target);
    const double h_dev = rel_diff(after, std::pow(std::norm(lambda), graph_of(target).k()) * before);
    worst = std::max(worst, h_dev);
    g.require(h_dev < 1e-8, "homogeneity trial " + std::to_string(trial));
    ++checks;
  }
  g.detail << checks << " checks, worst rel deviation " << worst;
  return g;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Gate()>>> gates{
      {"AC1 catalan counts", catalan_counts},
      {"AC2 narayana refinement", narayana_rows},
      {"AC3 melonic uniqueness", melonic_uniqueness},
      {"AC4 cycle closed forms", cycle_closed_forms},
      {"AC5 wick exactness", wick_exactness},
      {"AC6 universality", universality},
      {"AC7 contraction oracle", oracle_equivalence},
      {"AC8 genus", genus_gate},
      {"AC9 invariance", invariance_gate},
  };
  int failures = 0;
  for (const auto& [name, run] : gates) {
    Gate gate;
    try {
      gate = run();
    } catch (const std::exception& e) {
      gate.pass = false;
      gate.detail << "exception: " << e.what();
    }
    if (!gate.pass) ++failures;
    std::cout << (gate.pass ? "PASS " : "FAIL ") << name << ": " << gate.detail.str() << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
