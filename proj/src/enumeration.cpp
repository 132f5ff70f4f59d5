#include "tul/enumeration.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <string_view>
#include <thread>

#include "tul/error.hpp"

namespace tul {

namespace {

// Face counter reusing its buffers across the k! coverings of one graph.
class FaceCounter {
 public:
  explicit FaceCounter(const ColoredGraph& b)
      : base_(b),
        tau_inv_(static_cast<std::size_t>(b.k())),
        seen_(static_cast<std::size_t>(b.k())) {}

  FaceProfile operator()(std::span<const int> tau) {
    const auto k = tau.size();
    for (std::size_t j = 0; j < k; ++j) tau_inv_[static_cast<std::size_t>(tau[j])] = static_cast<int>(j);
    FaceProfile out;
    out.zero_faces.reserve(static_cast<std::size_t>(base_.colors()));
    for (const auto& s : base_.sigmas()) {
      std::fill(seen_.begin(), seen_.end(), 0);
      int cycles = 0;
      for (std::size_t start = 0; start < k; ++start) {
        if (seen_[start]) continue;
        ++cycles;
        for (auto j = start; !seen_[j];
             j = static_cast<std::size_t>(tau_inv_[static_cast<std::size_t>(s(static_cast<int>(j)))])) {
          seen_[j] = 1;
        }
      }
      out.zero_faces.push_back(cycles);
      out.total += cycles;
    }
    return out;
  }

 private:
  const ColoredGraph& base_;
  std::vector<int> tau_inv_;
  std::vector<char> seen_;
};

// Visits every τ with τ(0) = first, lexicographically.
template <typename Visit>
void for_each_with_first(const ColoredGraph& b, int first, Visit&& visit) {
  const int k = b.k();
  std::vector<int> tau(static_cast<std::size_t>(k));
  tau[0] = first;
  for (int j = 0, v = 0; v < k; ++v) {
    if (v != first) tau[static_cast<std::size_t>(++j)] = v;
  }
  FaceCounter faces(b);
  do {
    visit(std::span<const int>(tau), faces(tau));
  } while (std::next_permutation(tau.begin() + 1, tau.end()));
}

MinimalCoveringSet minimal_for_firsts(const ColoredGraph& b, int worker, int workers) {
  MinimalCoveringSet out;
  out.gamma = -1;
  for (int first = worker; first < b.k(); first += workers) {
    for_each_with_first(b, first, [&out](std::span<const int> tau, FaceProfile faces) {
      if (faces.total < out.gamma) return;
      if (faces.total > out.gamma) {
        out.gamma = faces.total;
        out.members.clear();
      }
      out.members.push_back({Permutation(std::vector<int>(tau.begin(), tau.end())), std::move(faces)});
    });
  }
  return out;
}

void check_weights(const ColoredGraph& b, std::span<const double> c) {
  if (static_cast<int>(c.size()) != b.colors()) {
    throw InvalidArgument("expected " + std::to_string(b.colors()) + " dimension ratios, got " +
                          std::to_string(c.size()));
  }
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (!(c[i] > 0.0) || !std::isfinite(c[i])) {
      throw InvalidArgument("dimension ratio c_" + std::to_string(i + 1) + " must be positive");
    }
  }
}

}  // namespace

int enumeration_cap() {
  const char* env = std::getenv("TUL_ENUM_CAP");
  if (!env) return kDefaultEnumerationCap;
  const std::string_view text(env);
  int value = 0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || end != text.data() + text.size() || value < 1) {
    throw InvalidArgument("TUL_ENUM_CAP must be a positive integer, got '" + std::string(text) + "'");
  }
  return value;
}

void check_enumeration_cap(int k, int cap) {
  if (k > cap) {
    throw CapExceeded("refusing to enumerate " + std::to_string(k) + "! coverings (k = " +
                      std::to_string(k) + " exceeds the cap " + std::to_string(cap) +
                      "); raise TUL_ENUM_CAP if the factorial blowup is acceptable");
  }
}

void for_each_covering(const ColoredGraph& b,
                       const std::function<void(const Permutation&, const FaceProfile&)>& visit,
                       int cap) {
  check_enumeration_cap(b.k(), cap);
  for (int first = 0; first < b.k(); ++first) {
    for_each_with_first(b, first, [&visit](std::span<const int> tau, const FaceProfile& faces) {
      visit(Permutation(std::vector<int>(tau.begin(), tau.end())), faces);
    });
  }
}

std::vector<Covering> enumerate_coverings(const ColoredGraph& b, int cap) {
  std::vector<Covering> out;
  for_each_covering(b, [&out](const Permutation& tau, const FaceProfile& faces) {
    out.push_back({tau, faces});
  }, cap);
  return out;
}

MinimalCoveringSet minimal_coverings(const ColoredGraph& b, int cap, int threads) {
  check_enumeration_cap(b.k(), cap);
  const int workers = std::clamp(threads, 1, b.k());
  std::vector<MinimalCoveringSet> partial(static_cast<std::size_t>(workers));
  if (workers == 1) {
    partial[0] = minimal_for_firsts(b, 0, 1);
  } else {
    std::vector<std::jthread> pool;
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&partial, &b, w, workers] {
        partial[static_cast<std::size_t>(w)] = minimal_for_firsts(b, w, workers);
      });
    }
  }
  MinimalCoveringSet out;
  out.gamma = -1;
  for (auto& p : partial) out.gamma = std::max(out.gamma, p.gamma);
  for (auto& p : partial) {
    if (p.gamma != out.gamma) continue;
    for (auto& m : p.members) out.members.push_back(std::move(m));
  }
  std::sort(out.members.begin(), out.members.end(),
            [](const Covering& x, const Covering& y) { return x.tau < y.tau; });
  return out;
}

double limit_coefficient(const MinimalCoveringSet& minimal, std::span<const double> c) {
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (!(c[i] > 0.0) || !std::isfinite(c[i])) {
      throw InvalidArgument("dimension ratio c_" + std::to_string(i + 1) + " must be positive");
    }
  }
  double sum = 0.0;
  for (const auto& m : minimal.members) {
    if (m.faces.zero_faces.size() != c.size()) {
      throw InvalidArgument("dimension ratio count does not match the number of colors");
    }
    double term = 1.0;
    for (std::size_t i = 0; i < c.size(); ++i) term *= std::pow(c[i], m.faces.zero_faces[i]);
    sum += term;
  }
  return sum;
}

double limit_coefficient(const ColoredGraph& b, std::span<const double> c) {
  check_weights(b, c);
  return limit_coefficient(minimal_coverings(b), c);
}

std::map<int, std::size_t> narayana_face_distribution(const ColoredGraph& b, int anchor_color,
                                                      int cap) {
  if (b.colors() != 2 || !is_connected(b)) {
    throw InvalidArgument("the Narayana face distribution needs a (1,1)-cycle graph "
                          "(connected, D = 2)");
  }
  if (anchor_color < 0 || anchor_color > 1) {
    throw InvalidArgument("anchor color must be 1 or 2 for a (1,1)-cycle graph");
  }
  std::map<int, std::size_t> histogram;
  for (const auto& m : minimal_coverings(b, cap).members) {
    ++histogram[m.faces.zero_faces[static_cast<std::size_t>(anchor_color)]];
  }
  return histogram;
}

}  // namespace tul
