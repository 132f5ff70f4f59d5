#pragma once

// Named graph families: dipoles, melonic graphs and (m,n)-cycle graphs.

#include <cstdint>
#include <random>
#include <vector>

#include "tul/graph.hpp"

namespace tul {

/// The 2-vertex graph with `colors` parallel edges.
ColoredGraph make_dipole(int colors);

/// Edge identifier: the color-`color` edge at white vertex `white`.
struct MelonicStep {
  int color = 0;
  int white = 0;

  friend bool operator==(const MelonicStep&, const MelonicStep&) = default;
};

/// Start from a D-dipole and, for each step, cut the named edge and insert
/// the (D−1)-dipole missing that color. `steps.size() + 1` white vertices.
struct MelonicRecipe {
  int colors = 3;
  std::vector<MelonicStep> steps;
};

/// Throws InvalidArgument for D < 3 and StructuralError when a step names an
/// edge that does not exist yet. Step s creates white/black vertex s + 1.
ColoredGraph make_melonic(const MelonicRecipe& recipe);

/// Uniformly chooses an existing edge at every step.
MelonicRecipe random_melonic_recipe(int colors, int k, std::mt19937_64& rng);

/// Colors in m_colors join v_j to v̄_j; colors in n_colors join v_j to v̄_{j+1}.
struct CycleSpec {
  int k = 1;
  std::vector<int> m_colors;
  std::vector<int> n_colors;

  int m() const { return static_cast<int>(m_colors.size()); }
  int n() const { return static_cast<int>(n_colors.size()); }
  int colors() const { return m() + n(); }
  /// Same graph family with the two color classes exchanged.
  CycleSpec swapped() const { return {k, n_colors, m_colors}; }

  friend bool operator==(const CycleSpec&, const CycleSpec&) = default;
};

/// Throws InvalidArgument unless m, n ≥ 1, k ≥ 1 and the two color sets partition {0..D-1}.
void validate(const CycleSpec& spec);

ColoredGraph make_cycle_graph(const CycleSpec& spec);

/// A subgraph on a subset of the colors; colors[c] is the parent color of local color c.
struct GraphPart {
  ColoredGraph graph;
  std::vector<int> colors;
};

/// m = n: m (1,1)-cycles pairing m_colors[ν] with n_colors[ν].
/// m < n: m − 1 such pairs plus one (1, n−m+1)-cycle on
/// {m_colors[m−1]} ∪ {n_colors[m−1], ..., n_colors[n−1]}.
/// Throws InvalidArgument if m > n or R is not the cycle graph of `spec`.
std::vector<GraphPart> split_cycle_graph(const ColoredGraph& r, const CycleSpec& spec);

/// Reassembles a colored graph from parts that partition its colors.
ColoredGraph merge_parts(std::span<const GraphPart> parts);

/// Reduces by contracting (D−1)-dipoles (the lowest-labeled eligible white
/// vertex first) and reports whether a D-dipole remains. Requires D ≥ 3;
/// 2-colored graphs are never reported melonic.
bool is_melonic(const ColoredGraph& b);

/// Same reduction, contracting a uniformly random eligible dipole each round.
bool is_melonic(const ColoredGraph& b, std::mt19937_64& order);

}  // namespace tul
