#pragma once

// D-colored bipartite graphs encoded as permutation tuples.
//
// Vertex and color labels are 0-based throughout the C++ API. The JSON and
// CLI layers translate to the 1-based labels used in external formats.

#include <compare>
#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace tul {

/// Bijection on {0, ..., k-1}, stored as its image array.
class Permutation {
 public:
  Permutation() = default;

  /// Throws StructuralError unless `images` is a bijection on {0..k-1}.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int k);
  /// j -> j + step (mod k).
  static Permutation shift(int k, int step = 1);
  /// Builds from 1-based images, as found in external formats.
  static Permutation from_one_based(std::span<const int> images);

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int j) const { return images_[static_cast<std::size_t>(j)]; }
  std::span<const int> images() const { return images_; }
  std::vector<int> one_based() const;

  Permutation inverse() const;
  bool is_identity() const;

  /// Disjoint-cycle notation with 1-based labels, fixed points omitted; "()" for the identity.
  std::string cycle_notation() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

/// p∘q: apply q first. Throws StructuralError on a length mismatch.
Permutation compose(const Permutation& p, const Permutation& q);

/// Number of disjoint cycles, fixed points included.
int cycle_count(const Permutation& p);

/// Cycle count of inner⁻¹∘outer without materializing the composition.
int cycle_count_of_quotient(const Permutation& inner, const Permutation& outer);

/// k white vertices v_j and k black vertices v̄_j; sigma[i](j) is the black
/// vertex joined to v_j by the color-i edge.
class ColoredGraph {
 public:
  ColoredGraph() = default;

  /// Throws StructuralError if sigma is empty or the lengths disagree.
  explicit ColoredGraph(std::vector<Permutation> sigma);

  int k() const { return sigma_.empty() ? 0 : sigma_.front().size(); }
  int colors() const { return static_cast<int>(sigma_.size()); }
  const Permutation& sigma(int color) const { return sigma_[static_cast<std::size_t>(color)]; }
  std::span<const Permutation> sigmas() const { return sigma_; }

  /// Conjugates every sigma by `relabel` (white and black vertex j -> relabel(j)).
  ColoredGraph relabeled(const Permutation& relabel) const;

  friend bool operator==(const ColoredGraph&, const ColoredGraph&) = default;

 private:
  std::vector<Permutation> sigma_;
};

/// A colored graph plus the color-0 pairing edges v_j to v̄_tau(j).
class CoveringGraph {
 public:
  /// Throws StructuralError if tau and the base graph differ in k.
  CoveringGraph(ColoredGraph base, Permutation tau);

  const ColoredGraph& base() const { return base_; }
  const Permutation& tau() const { return tau_; }

 private:
  ColoredGraph base_;
  Permutation tau_;
};

struct FaceProfile {
  /// zero_faces[i] = |F^(0,i)|, the number of alternating color-0/color-i cycles.
  std::vector<int> zero_faces;
  int total = 0;
  /// (i, j) with i < j -> number of alternating color-i/color-j cycles. Empty unless requested.
  std::map<std::pair<int, int>, int> pair_faces;

  friend bool operator==(const FaceProfile&, const FaceProfile&) = default;
};

/// (0,i)-faces are the cycles of tau⁻¹∘sigma[i]; (i,j)-faces the cycles of sigma[j]⁻¹∘sigma[i].
FaceProfile face_profile(const CoveringGraph& g, bool with_pair_faces = false);
FaceProfile face_profile(const ColoredGraph& base, const Permutation& tau,
                         bool with_pair_faces = false);

/// Connectivity of the 2k-vertex graph with edges (v_j, v̄_sigma[i](j)).
bool is_connected(const ColoredGraph& b);

/// Genus of a 3-colored covering of a 2-colored graph, from
/// Σ_{i<j}|F^(i,j)| − |E| + |V| = 2 − 2g with |V| = 2k, |E| = 3k.
/// Throws Unsupported unless the base graph has exactly two colors.
double genus(const CoveringGraph& g);

}  // namespace tul
