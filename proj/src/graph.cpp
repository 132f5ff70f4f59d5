#include "tul/graph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "tul/error.hpp"

namespace tul {

namespace {

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(static_cast<std::size_t>(n)) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  int find(int x) {
    while (parent_[static_cast<std::size_t>(x)] != x) {
      auto& p = parent_[static_cast<std::size_t>(x)];
      p = parent_[static_cast<std::size_t>(p)];
      x = p;
    }
    return x;
  }

  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[static_cast<std::size_t>(a)] = b;
    return true;
  }

 private:
  std::vector<int> parent_;
};

}  // namespace

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int k = size();
  std::vector<char> seen(images_.size(), 0);
  for (std::size_t j = 0; j < images_.size(); ++j) {
    const int v = images_[j];
    if (v < 0 || v >= k) {
      throw StructuralError("permutation image " + std::to_string(v + 1) + " at position " +
                            std::to_string(j + 1) + " is outside 1.." + std::to_string(k));
    }
    if (seen[static_cast<std::size_t>(v)]) {
      throw StructuralError("permutation is not a bijection: image " + std::to_string(v + 1) +
                            " repeats");
    }
    seen[static_cast<std::size_t>(v)] = 1;
  }
}

Permutation Permutation::identity(int k) {
  std::vector<int> images(static_cast<std::size_t>(k));
  std::iota(images.begin(), images.end(), 0);
  return Permutation(std::move(images));
}

Permutation Permutation::shift(int k, int step) {
  std::vector<int> images(static_cast<std::size_t>(k));
  for (int j = 0; j < k; ++j) images[static_cast<std::size_t>(j)] = ((j + step) % k + k) % k;
  return Permutation(std::move(images));
}

Permutation Permutation::from_one_based(std::span<const int> images) {
  std::vector<int> zero(images.begin(), images.end());
  for (auto& v : zero) --v;
  return Permutation(std::move(zero));
}

std::vector<int> Permutation::one_based() const {
  std::vector<int> out(images_);
  for (auto& v : out) ++v;
  return out;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (std::size_t j = 0; j < images_.size(); ++j) {
    inv[static_cast<std::size_t>(images_[j])] = static_cast<int>(j);
  }
  Permutation out;
  out.images_ = std::move(inv);
  return out;
}

bool Permutation::is_identity() const {
  for (std::size_t j = 0; j < images_.size(); ++j) {
    if (images_[j] != static_cast<int>(j)) return false;
  }
  return true;
}

std::string Permutation::cycle_notation() const {
  std::ostringstream os;
  std::vector<char> seen(images_.size(), 0);
  bool any = false;
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start] || images_[start] == static_cast<int>(start)) continue;
    any = true;
    os << '(';
    auto j = start;
    bool first = true;
    while (!seen[j]) {
      seen[j] = 1;
      if (!first) os << ' ';
      os << j + 1;
      first = false;
      j = static_cast<std::size_t>(images_[j]);
    }
    os << ')';
  }
  if (!any) os << "()";
  return os.str();
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.size() != q.size()) {
    throw StructuralError("cannot compose permutations of lengths " + std::to_string(p.size()) +
                          " and " + std::to_string(q.size()));
  }
  std::vector<int> images(static_cast<std::size_t>(q.size()));
  for (int j = 0; j < q.size(); ++j) images[static_cast<std::size_t>(j)] = p(q(j));
  return Permutation(std::move(images));
}

int cycle_count(const Permutation& p) {
  const auto k = static_cast<std::size_t>(p.size());
  std::vector<char> seen(k, 0);
  int cycles = 0;
  for (std::size_t start = 0; start < k; ++start) {
    if (seen[start]) continue;
    ++cycles;
    for (auto j = start; !seen[j]; j = static_cast<std::size_t>(p(static_cast<int>(j)))) {
      seen[j] = 1;
    }
  }
  return cycles;
}

int cycle_count_of_quotient(const Permutation& inner, const Permutation& outer) {
  // Walk j -> inner⁻¹(outer(j)) using the inverse image table.
  const auto k = static_cast<std::size_t>(outer.size());
  std::vector<int> inner_inv(k);
  for (std::size_t j = 0; j < k; ++j) inner_inv[static_cast<std::size_t>(inner(static_cast<int>(j)))] = static_cast<int>(j);
  std::vector<char> seen(k, 0);
  int cycles = 0;
  for (std::size_t start = 0; start < k; ++start) {
    if (seen[start]) continue;
    ++cycles;
    for (auto j = start; !seen[j];
         j = static_cast<std::size_t>(inner_inv[static_cast<std::size_t>(outer(static_cast<int>(j)))])) {
      seen[j] = 1;
    }
  }
  return cycles;
}

ColoredGraph::ColoredGraph(std::vector<Permutation> sigma) : sigma_(std::move(sigma)) {
  if (sigma_.empty()) throw StructuralError("a colored graph needs at least one color");
  const int k = sigma_.front().size();
  if (k < 1) throw StructuralError("a colored graph needs at least one white vertex");
  for (std::size_t i = 0; i < sigma_.size(); ++i) {
    if (sigma_[i].size() != k) {
      throw StructuralError("color " + std::to_string(i + 1) + " permutation has length " +
                            std::to_string(sigma_[i].size()) + ", expected " + std::to_string(k));
    }
  }
}

ColoredGraph ColoredGraph::relabeled(const Permutation& relabel) const {
  const auto inv = relabel.inverse();
  std::vector<Permutation> out;
  out.reserve(sigma_.size());
  for (const auto& s : sigma_) out.push_back(compose(relabel, compose(s, inv)));
  return ColoredGraph(std::move(out));
}

CoveringGraph::CoveringGraph(ColoredGraph base, Permutation tau)
    : base_(std::move(base)), tau_(std::move(tau)) {
  if (tau_.size() != base_.k()) {
    throw StructuralError("covering permutation has length " + std::to_string(tau_.size()) +
                          " but the graph has k = " + std::to_string(base_.k()));
  }
}

FaceProfile face_profile(const ColoredGraph& base, const Permutation& tau, bool with_pair_faces) {
  if (tau.size() != base.k()) {
    throw StructuralError("covering permutation length does not match the graph");
  }
  FaceProfile out;
  out.zero_faces.reserve(static_cast<std::size_t>(base.colors()));
  for (const auto& s : base.sigmas()) {
    const int f = cycle_count_of_quotient(tau, s);
    out.zero_faces.push_back(f);
    out.total += f;
  }
  if (with_pair_faces) {
    for (int i = 0; i < base.colors(); ++i) {
      for (int j = i + 1; j < base.colors(); ++j) {
        out.pair_faces[{i, j}] = cycle_count_of_quotient(base.sigma(j), base.sigma(i));
      }
    }
  }
  return out;
}

FaceProfile face_profile(const CoveringGraph& g, bool with_pair_faces) {
  return face_profile(g.base(), g.tau(), with_pair_faces);
}

bool is_connected(const ColoredGraph& b) {
  const int k = b.k();
  // white j -> j, black j -> k + j
  UnionFind uf(2 * k);
  int components = 2 * k;
  for (const auto& s : b.sigmas()) {
    for (int j = 0; j < k; ++j) {
      if (uf.unite(j, k + s(j))) --components;
    }
  }
  return components == 1;
}

double genus(const CoveringGraph& g) {
  if (g.base().colors() != 2) {
    throw Unsupported("genus is only defined here for coverings of 2-colored graphs, got D = " +
                      std::to_string(g.base().colors()));
  }
  const auto faces = face_profile(g, true);
  const int k = g.base().k();
  const int all_faces = faces.total + faces.pair_faces.at({0, 1});
  const int euler = all_faces - 3 * k + 2 * k;
  return (2.0 - euler) / 2.0;
}

}  // namespace tul
