#include "tul/constructors.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

#include "tul/error.hpp"

namespace tul {

namespace {

using ImageTable = std::vector<std::vector<int>>;

ColoredGraph to_graph(const ImageTable& table) {
  std::vector<Permutation> sigma;
  sigma.reserve(table.size());
  for (const auto& row : table) sigma.emplace_back(row);
  return ColoredGraph(std::move(sigma));
}

ImageTable to_table(const ColoredGraph& g) {
  ImageTable table;
  for (const auto& s : g.sigmas()) table.emplace_back(s.images().begin(), s.images().end());
  return table;
}

struct Contraction {
  int white;
  int color;  // the one color not joining the dipole
};

std::optional<Contraction> contraction_at(const ImageTable& table, int w) {
  const int colors = static_cast<int>(table.size());
  // A (D−1)-dipole at w: all but one color land on the same black vertex.
  for (int odd = 0; odd < colors; ++odd) {
    const int partner = table[static_cast<std::size_t>((odd + 1) % colors)][static_cast<std::size_t>(w)];
    if (table[static_cast<std::size_t>(odd)][static_cast<std::size_t>(w)] == partner) continue;
    bool all_match = true;
    for (int c = 0; c < colors && all_match; ++c) {
      if (c != odd) all_match = table[static_cast<std::size_t>(c)][static_cast<std::size_t>(w)] == partner;
    }
    if (all_match) return Contraction{w, odd};
  }
  return std::nullopt;
}

void contract(ImageTable& table, Contraction at) {
  const auto colors = table.size();
  const auto k = static_cast<int>(table.front().size());
  auto& odd = table[static_cast<std::size_t>(at.color)];
  const int partner = table[(static_cast<std::size_t>(at.color) + 1) % colors][static_cast<std::size_t>(at.white)];
  const int exit_black = odd[static_cast<std::size_t>(at.white)];
  const auto entry_white = static_cast<std::size_t>(
      std::find(odd.begin(), odd.end(), partner) - odd.begin());
  odd[entry_white] = exit_black;

  auto relabel_black = [partner](int b) { return b > partner ? b - 1 : b; };
  for (auto& row : table) {
    std::vector<int> next;
    next.reserve(static_cast<std::size_t>(k - 1));
    for (int j = 0; j < k; ++j) {
      if (j == at.white) continue;
      next.push_back(relabel_black(row[static_cast<std::size_t>(j)]));
    }
    row = std::move(next);
  }
}

bool reduce_to_dipole(const ColoredGraph& b, std::mt19937_64* order) {
  if (b.colors() < 3 || !is_connected(b)) return false;
  auto table = to_table(b);
  while (table.front().size() > 1) {
    const int k = static_cast<int>(table.front().size());
    std::vector<Contraction> eligible;
    for (int w = 0; w < k; ++w) {
      if (auto c = contraction_at(table, w)) {
        eligible.push_back(*c);
        if (!order) break;
      }
    }
    if (eligible.empty()) return false;
    std::size_t pick = 0;
    if (order) {
      std::uniform_int_distribution<std::size_t> dist(0, eligible.size() - 1);
      pick = dist(*order);
    }
    contract(table, eligible[pick]);
  }
  return true;
}

}  // namespace

ColoredGraph make_dipole(int colors) {
  if (colors < 1) throw InvalidArgument("a dipole needs at least one color");
  return ColoredGraph(std::vector<Permutation>(static_cast<std::size_t>(colors), Permutation::identity(1)));
}

ColoredGraph make_melonic(const MelonicRecipe& recipe) {
  if (recipe.colors < 3) {
    throw InvalidArgument("melonic graphs need D >= 3, got D = " + std::to_string(recipe.colors));
  }
  ImageTable table(static_cast<std::size_t>(recipe.colors), std::vector<int>{0});
  for (std::size_t s = 0; s < recipe.steps.size(); ++s) {
    const auto& step = recipe.steps[s];
    const int k = static_cast<int>(table.front().size());
    if (step.color < 0 || step.color >= recipe.colors) {
      throw StructuralError("step " + std::to_string(s + 1) + ": color " +
                            std::to_string(step.color + 1) + " does not exist");
    }
    if (step.white < 0 || step.white >= k) {
      throw StructuralError("step " + std::to_string(s + 1) + ": no edge at white vertex " +
                            std::to_string(step.white + 1) + " (graph has " + std::to_string(k) +
                            " white vertices)");
    }
    for (int c = 0; c < recipe.colors; ++c) {
      auto& row = table[static_cast<std::size_t>(c)];
      if (c == step.color) {
        row.push_back(row[static_cast<std::size_t>(step.white)]);
        row[static_cast<std::size_t>(step.white)] = k;
      } else {
        row.push_back(k);
      }
    }
  }
  return to_graph(table);
}

MelonicRecipe random_melonic_recipe(int colors, int k, std::mt19937_64& rng) {
  if (k < 1) throw InvalidArgument("melonic graphs need k >= 1");
  MelonicRecipe recipe{colors, {}};
  std::uniform_int_distribution<int> color(0, colors - 1);
  for (int stage = 1; stage < k; ++stage) {
    std::uniform_int_distribution<int> white(0, stage - 1);
    const int c = color(rng);
    recipe.steps.push_back({c, white(rng)});
  }
  return recipe;
}

void validate(const CycleSpec& spec) {
  if (spec.k < 1) throw InvalidArgument("cycle spec: k must be positive");
  if (spec.m() < 1 || spec.n() < 1) {
    throw InvalidArgument("cycle spec: both m_colors and n_colors must be nonempty");
  }
  const int d = spec.colors();
  std::vector<char> used(static_cast<std::size_t>(d), 0);
  for (const auto* set : {&spec.m_colors, &spec.n_colors}) {
    for (int c : *set) {
      if (c < 0 || c >= d) {
        throw InvalidArgument("cycle spec: color " + std::to_string(c + 1) + " outside 1.." +
                              std::to_string(d) + " (m + n = D)");
      }
      if (used[static_cast<std::size_t>(c)]) {
        throw InvalidArgument("cycle spec: color " + std::to_string(c + 1) +
                              " appears more than once across m_colors and n_colors");
      }
      used[static_cast<std::size_t>(c)] = 1;
    }
  }
}

ColoredGraph make_cycle_graph(const CycleSpec& spec) {
  validate(spec);
  std::vector<Permutation> sigma(static_cast<std::size_t>(spec.colors()));
  for (int c : spec.m_colors) sigma[static_cast<std::size_t>(c)] = Permutation::identity(spec.k);
  for (int c : spec.n_colors) sigma[static_cast<std::size_t>(c)] = Permutation::shift(spec.k);
  return ColoredGraph(std::move(sigma));
}

std::vector<GraphPart> split_cycle_graph(const ColoredGraph& r, const CycleSpec& spec) {
  validate(spec);
  if (spec.m() > spec.n()) {
    throw InvalidArgument("split_cycle_graph needs m <= n; swap the color classes");
  }
  if (!(r == make_cycle_graph(spec))) {
    throw InvalidArgument("graph is not the (" + std::to_string(spec.m()) + "," +
                          std::to_string(spec.n()) + ")-cycle graph of the given spec");
  }
  auto part = [&r](std::vector<int> colors) {
    std::vector<Permutation> sigma;
    for (int c : colors) sigma.push_back(r.sigma(c));
    return GraphPart{ColoredGraph(std::move(sigma)), std::move(colors)};
  };
  std::vector<GraphPart> parts;
  const int m = spec.m();
  const int pairs = spec.m() == spec.n() ? m : m - 1;
  for (int nu = 0; nu < pairs; ++nu) {
    parts.push_back(part({spec.m_colors[static_cast<std::size_t>(nu)],
                          spec.n_colors[static_cast<std::size_t>(nu)]}));
  }
  if (spec.m() < spec.n()) {
    std::vector<int> colors{spec.m_colors.back()};
    colors.insert(colors.end(), spec.n_colors.begin() + (m - 1), spec.n_colors.end());
    parts.push_back(part(std::move(colors)));
  }
  return parts;
}

ColoredGraph merge_parts(std::span<const GraphPart> parts) {
  std::size_t colors = 0;
  for (const auto& p : parts) colors += p.colors.size();
  std::vector<std::optional<Permutation>> sigma(colors);
  for (const auto& p : parts) {
    if (static_cast<int>(p.colors.size()) != p.graph.colors()) {
      throw StructuralError("graph part color map does not match its color count");
    }
    for (std::size_t local = 0; local < p.colors.size(); ++local) {
      const auto parent = static_cast<std::size_t>(p.colors[local]);
      if (parent >= colors || sigma[parent]) {
        throw StructuralError("graph parts do not partition the colors");
      }
      sigma[parent] = p.graph.sigma(static_cast<int>(local));
    }
  }
  std::vector<Permutation> out;
  for (auto& s : sigma) out.push_back(std::move(*s));
  return ColoredGraph(std::move(out));
}

bool is_melonic(const ColoredGraph& b) { return reduce_to_dipole(b, nullptr); }

bool is_melonic(const ColoredGraph& b, std::mt19937_64& order) { return reduce_to_dipole(b, &order); }

}  // namespace tul
