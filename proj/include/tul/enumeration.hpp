#pragma once

// Exhaustive enumeration of covering graphs over the symmetric group S_k.

#include <cstddef>
#include <functional>
#include <map>
#include <span>
#include <vector>

#include "tul/graph.hpp"

namespace tul {

inline constexpr int kDefaultEnumerationCap = 9;

/// The k cap: TUL_ENUM_CAP when set to a positive integer, else 9.
int enumeration_cap();

/// Throws CapExceeded if k! coverings are beyond `cap`.
void check_enumeration_cap(int k, int cap);

struct Covering {
  Permutation tau;
  FaceProfile faces;
};

/// Streams every τ ∈ S_k in lexicographic order of its image array.
void for_each_covering(const ColoredGraph& b,
                       const std::function<void(const Permutation&, const FaceProfile&)>& visit,
                       int cap = enumeration_cap());

std::vector<Covering> enumerate_coverings(const ColoredGraph& b, int cap = enumeration_cap());

struct MinimalCoveringSet {
  /// Maximal total face count over all coverings.
  int gamma = 0;
  /// Every τ attaining gamma, in lexicographic order.
  std::vector<Covering> members;

  std::size_t count() const { return members.size(); }
};

/// Partitions S_k by τ(1) across `threads` workers; the result does not depend on `threads`.
MinimalCoveringSet minimal_coverings(const ColoredGraph& b, int cap = enumeration_cap(),
                                     int threads = 1);

/// Σ over minimal coverings of Π_i c_i^{zero_faces[i]}. Throws InvalidArgument
/// for nonpositive c or a length mismatch.
double limit_coefficient(const MinimalCoveringSet& minimal, std::span<const double> c);
double limit_coefficient(const ColoredGraph& b, std::span<const double> c);

/// Histogram l -> number of minimal coverings with l (0,anchor)-faces.
/// Throws InvalidArgument unless b is a connected 2-colored graph (a (1,1)-cycle).
std::map<int, std::size_t> narayana_face_distribution(const ColoredGraph& b, int anchor_color,
                                                      int cap = enumeration_cap());

}  // namespace tul
