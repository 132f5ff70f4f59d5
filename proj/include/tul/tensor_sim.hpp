#pragma once

// Random rectangular tensors, trace invariants, the exact Gaussian mean and
// Monte Carlo estimates of μ(Tr(T, T̄)).

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "tul/constructors.hpp"
#include "tul/error.hpp"
#include "tul/graph.hpp"

namespace tul {

enum class Distribution { complex_gaussian, complex_rademacher, uniform_disc };

std::string_view to_string(Distribution d);
Distribution distribution_from_string(std::string_view name);

/// A c_1 N × ⋯ × c_D N ensemble of i.i.d. entries with E|T|² = 1.
struct TensorSpec {
  std::vector<double> c;
  int N = 1;
  Distribution distribution = Distribution::complex_gaussian;
  std::uint64_t seed = 0;

  int colors() const { return static_cast<int>(c.size()); }
  /// c_i N; throws InvalidArgument unless every one is a positive integer.
  std::vector<Eigen::Index> dims() const;
};

/// Dense complex tensor, first index fastest (Eigen's column-major order).
template <typename Scalar = double>
class DenseTensor {
 public:
  using Complex = std::complex<Scalar>;
  using Storage = Eigen::Matrix<Complex, Eigen::Dynamic, 1>;

  DenseTensor() = default;

  explicit DenseTensor(std::vector<Eigen::Index> shape) : shape_(std::move(shape)) {
    strides_.resize(shape_.size());
    Eigen::Index stride = 1;
    for (std::size_t i = 0; i < shape_.size(); ++i) {
      if (shape_[i] < 1) throw StructuralError("tensor dimensions must be positive");
      strides_[i] = stride;
      stride *= shape_[i];
    }
    data_ = Storage::Zero(stride);
  }

  int rank() const { return static_cast<int>(shape_.size()); }
  Eigen::Index dim(int axis) const { return shape_[static_cast<std::size_t>(axis)]; }
  Eigen::Index stride(int axis) const { return strides_[static_cast<std::size_t>(axis)]; }
  std::span<const Eigen::Index> shape() const { return shape_; }
  Eigen::Index size() const { return data_.size(); }

  Storage& data() { return data_; }
  const Storage& data() const { return data_; }

  Complex& operator()(std::span<const Eigen::Index> index) { return data_(offset(index)); }
  const Complex& operator()(std::span<const Eigen::Index> index) const { return data_(offset(index)); }

  Eigen::Index offset(std::span<const Eigen::Index> index) const {
    Eigen::Index off = 0;
    for (std::size_t i = 0; i < shape_.size(); ++i) off += index[i] * strides_[i];
    return off;
  }

  friend DenseTensor operator*(const Complex& lambda, const DenseTensor& t) {
    DenseTensor out = t;
    out.data_ *= lambda;
    return out;
  }

 private:
  std::vector<Eigen::Index> shape_;
  std::vector<Eigen::Index> strides_;
  Storage data_;
};

using Tensor = DenseTensor<double>;

template <typename Scalar>
using ComplexMatrix = Eigen::Matrix<std::complex<Scalar>, Eigen::Dynamic, Eigen::Dynamic>;

/// Engine for one (seed, stream, index) triple; sample i does not depend on how many are drawn.
std::mt19937_64 substream(std::uint64_t seed, std::uint64_t stream, std::uint64_t index);

/// One entry with zero odd moments and unit second moment.
template <typename Scalar, typename Rng>
std::complex<Scalar> draw_entry(Distribution d, Rng& rng) {
  switch (d) {
    case Distribution::complex_gaussian: {
      std::normal_distribution<Scalar> normal(Scalar(0), std::sqrt(Scalar(0.5)));
      const Scalar re = normal(rng);
      return {re, normal(rng)};
    }
    case Distribution::complex_rademacher: {
      const auto bits = rng();
      const Scalar h = Scalar(1) / std::numbers::sqrt2_v<Scalar>;
      return {(bits & 1u) ? h : -h, (bits & 2u) ? h : -h};
    }
    case Distribution::uniform_disc: {
      std::uniform_real_distribution<Scalar> unit(Scalar(0), Scalar(1));
      const Scalar r = std::numbers::sqrt2_v<Scalar> * std::sqrt(unit(rng));
      const Scalar theta = Scalar(2) * std::numbers::pi_v<Scalar> * unit(rng);
      return std::polar(r, theta);
    }
  }
  return {};
}

/// Deterministic in (spec, sample_index).
template <typename Scalar = double>
DenseTensor<Scalar> sample_tensor(const TensorSpec& spec, std::uint64_t sample_index = 0) {
  DenseTensor<Scalar> t(spec.dims());
  auto rng = substream(spec.seed, static_cast<std::uint64_t>(spec.N) * 4u +
                                      static_cast<std::uint64_t>(spec.distribution),
                       sample_index);
  for (Eigen::Index i = 0; i < t.size(); ++i) t.data()(i) = draw_entry<Scalar>(spec.distribution, rng);
  return t;
}

inline constexpr double kNaiveTermBudget = 1e8;

/// Π_i dim_i^k: the number of terms in the naive contraction.
double naive_term_count(std::span<const Eigen::Index> dims, int k);

namespace detail {

void check_shape(std::span<const Eigen::Index> shape, int colors);

// Neumaier-compensated complex accumulator.
template <typename Scalar>
class CompensatedSum {
 public:
  void add(std::complex<Scalar> x) {
    add(re_, re_c_, x.real());
    add(im_, im_c_, x.imag());
  }
  std::complex<Scalar> value() const { return {re_ + re_c_, im_ + im_c_}; }

 private:
  static void add(Scalar& sum, Scalar& comp, Scalar x) {
    const Scalar t = sum + x;
    if (std::abs(sum) >= std::abs(x)) {
      comp += (sum - t) + x;
    } else {
      comp += (x - t) + sum;
    }
    sum = t;
  }
  Scalar re_{}, re_c_{}, im_{}, im_c_{};
};

}  // namespace detail

/// Sum over every free index n^i_j of Π_j T_{n_j} T̄_{n̄_j}, with n̄^i_{σ_i(j)} = n^i_j.
/// Throws CapExceeded when Π_i dim_i^k exceeds `budget`.
template <typename Scalar>
std::complex<Scalar> contract_naive(const DenseTensor<Scalar>& t, const ColoredGraph& b,
                                    double budget = kNaiveTermBudget) {
  detail::check_shape(t.shape(), b.colors());
  const int k = b.k();
  const int colors = b.colors();
  const double terms = naive_term_count(t.shape(), k);
  if (terms > budget) {
    throw CapExceeded("naive contraction needs about " + std::to_string(terms) +
                      " terms, over the budget of " + std::to_string(budget));
  }
  // Digit (i, j) is n^i_j; it moves white j and black σ_i(j) along axis i.
  std::vector<Eigen::Index> digit(static_cast<std::size_t>(colors * k), 0);
  std::vector<Eigen::Index> white(static_cast<std::size_t>(k), 0);
  std::vector<Eigen::Index> black(static_cast<std::size_t>(k), 0);
  const auto& data = t.data();
  detail::CompensatedSum<Scalar> sum;
  while (true) {
    std::complex<Scalar> term(1);
    for (int j = 0; j < k; ++j) {
      term *= data(white[static_cast<std::size_t>(j)]) *
              std::conj(data(black[static_cast<std::size_t>(j)]));
    }
    sum.add(term);

    int pos = 0;
    for (; pos < colors * k; ++pos) {
      const int axis = pos / k;
      const int j = pos % k;
      const auto ju = static_cast<std::size_t>(j);
      const auto bu = static_cast<std::size_t>(b.sigma(axis)(j));
      const Eigen::Index stride = t.stride(axis);
      if (++digit[static_cast<std::size_t>(pos)] < t.dim(axis)) {
        white[ju] += stride;
        black[bu] += stride;
        break;
      }
      digit[static_cast<std::size_t>(pos)] = 0;
      const Eigen::Index back = (t.dim(axis) - 1) * stride;
      white[ju] -= back;
      black[bu] -= back;
    }
    if (pos == colors * k) break;
  }
  return sum.value();
}

/// Real part of contract_naive.
template <typename Scalar>
Scalar trace_invariant_naive(const DenseTensor<Scalar>& t, const ColoredGraph& b,
                             double budget = kNaiveTermBudget) {
  return contract_naive(t, b, budget).real();
}

/// Unfolds T with rows over the listed row axes and columns over the rest.
template <typename Scalar>
ComplexMatrix<Scalar> matricize(const DenseTensor<Scalar>& t, std::span<const int> row_axes,
                                std::span<const int> col_axes) {
  Eigen::Index rows = 1;
  Eigen::Index cols = 1;
  for (int a : row_axes) rows *= t.dim(a);
  for (int a : col_axes) cols *= t.dim(a);
  if (rows * cols != t.size()) throw StructuralError("matricization axes do not cover the tensor");

  bool leading = true;
  for (std::size_t i = 0; i < row_axes.size(); ++i) leading = leading && row_axes[i] == static_cast<int>(i);
  for (std::size_t i = 0; i < col_axes.size(); ++i) {
    leading = leading && col_axes[i] == static_cast<int>(row_axes.size() + i);
  }
  if (leading) return Eigen::Map<const ComplexMatrix<Scalar>>(t.data().data(), rows, cols);

  // Gather: walk T in storage order, tracking the row and column offsets.
  std::vector<Eigen::Index> row_stride(static_cast<std::size_t>(t.rank()), 0);
  std::vector<Eigen::Index> col_stride(static_cast<std::size_t>(t.rank()), 0);
  Eigen::Index s = 1;
  for (int a : row_axes) {
    row_stride[static_cast<std::size_t>(a)] = s;
    s *= t.dim(a);
  }
  s = 1;
  for (int a : col_axes) {
    col_stride[static_cast<std::size_t>(a)] = s;
    s *= t.dim(a);
  }
  ComplexMatrix<Scalar> m(rows, cols);
  std::vector<Eigen::Index> index(static_cast<std::size_t>(t.rank()), 0);
  Eigen::Index r = 0;
  Eigen::Index c = 0;
  for (Eigen::Index flat = 0; flat < t.size(); ++flat) {
    m(r, c) = t.data()(flat);
    for (int a = 0; a < t.rank(); ++a) {
      const auto au = static_cast<std::size_t>(a);
      if (++index[au] < t.dim(a)) {
        r += row_stride[au];
        c += col_stride[au];
        break;
      }
      index[au] = 0;
      r -= (t.dim(a) - 1) * row_stride[au];
      c -= (t.dim(a) - 1) * col_stride[au];
    }
  }
  return m;
}

/// tr(W^k) for a Hermitian W.
template <typename Scalar>
std::complex<Scalar> hermitian_power_trace(const ComplexMatrix<Scalar>& w, int k) {
  if (k == 1) return w.trace();
  ComplexMatrix<Scalar> half = w;
  for (int p = 1; p < k / 2; ++p) half = half * w;
  if (k % 2 == 0) return half.squaredNorm();
  const ComplexMatrix<Scalar> sq = half * half;
  return w.cwiseProduct(sq.transpose()).sum();
}

/// tr((M†M)^k) with M the (m_colors × n_colors) unfolding of T.
template <typename Scalar>
std::complex<Scalar> contract_cycle(const DenseTensor<Scalar>& t, const CycleSpec& spec) {
  validate(spec);
  detail::check_shape(t.shape(), spec.colors());
  const ComplexMatrix<Scalar> m = matricize(t, std::span<const int>(spec.m_colors),
                                            std::span<const int>(spec.n_colors));
  if (spec.k == 1) return m.squaredNorm();
  // tr((M†M)^k) = tr((MM†)^k); use the smaller Gram matrix.
  const Eigen::Index side = std::min(m.rows(), m.cols());
  ComplexMatrix<Scalar> w = ComplexMatrix<Scalar>::Zero(side, side);
  if (m.rows() <= m.cols()) {
    w.template selfadjointView<Eigen::Lower>().rankUpdate(m);
  } else {
    w.template selfadjointView<Eigen::Lower>().rankUpdate(m.adjoint());
  }
  const ComplexMatrix<Scalar> full = w.template selfadjointView<Eigen::Lower>();
  return hermitian_power_trace<Scalar>(full, spec.k);
}

template <typename Scalar>
Scalar trace_invariant_cycle(const DenseTensor<Scalar>& t, const CycleSpec& spec) {
  return contract_cycle(t, spec).real();
}

/// A trace invariant given either as an arbitrary graph (naive path) or a
/// cycle spec (matricized path).
using TraceTarget = std::variant<ColoredGraph, CycleSpec>;

ColoredGraph graph_of(const TraceTarget& target);
std::string describe(const TraceTarget& target);

template <typename Scalar>
std::complex<Scalar> contract(const DenseTensor<Scalar>& t, const TraceTarget& target,
                              double budget = kNaiveTermBudget) {
  if (const auto* spec = std::get_if<CycleSpec>(&target)) return contract_cycle(t, *spec);
  return contract_naive(t, std::get<ColoredGraph>(target), budget);
}

template <typename Scalar>
Scalar trace_invariant(const DenseTensor<Scalar>& t, const TraceTarget& target,
                       double budget = kNaiveTermBudget) {
  return contract(t, target, budget).real();
}

/// Σ_{τ∈S_k} Π_i dims_i^{|F^(0,i)(τ)|}: the exact mean for complex Gaussian entries.
double gaussian_exact_mean(const ColoredGraph& b, std::span<const Eigen::Index> dims);
double gaussian_exact_mean(const ColoredGraph& b, std::span<const double> c, int N);

struct MeanEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  std::size_t samples = 0;
};

/// Throws InvalidArgument for fewer than 2 samples. Independent of `threads`.
MeanEstimate monte_carlo_mean(const TensorSpec& spec, const TraceTarget& target,
                              std::size_t samples, int threads = 1);

struct ScanRow {
  int N = 0;
  std::size_t samples = 0;
  double mean = 0.0;
  double std_error = 0.0;
  double normalized = 0.0;
};

struct UniversalityReport {
  std::string graph;
  int gamma = 0;
  double predicted = 0.0;
  std::vector<ScanRow> rows;

  /// Rows with |normalized − predicted| > 4 · std_error / N^gamma.
  std::vector<std::size_t> flagged() const;
};

/// `spec_template.N` is ignored; every N in `n_list` must make c_i N integral.
/// Cycle specs are predicted in closed form, other graphs through enumeration.
UniversalityReport universality_scan(const TensorSpec& spec_template, const TraceTarget& target,
                                     std::span<const int> n_list, std::size_t samples,
                                     int threads = 1);

/// U_i applied to slot i: (UT)_{n} = Σ_m Π_i U_i(n_i, m_i) T_m.
template <typename Scalar>
DenseTensor<Scalar> apply_unitaries(const DenseTensor<Scalar>& t,
                                    std::span<const ComplexMatrix<Scalar>> unitaries) {
  if (static_cast<int>(unitaries.size()) != t.rank()) {
    throw InvalidArgument("need one unitary per tensor slot");
  }
  DenseTensor<Scalar> cur = t;
  for (int axis = 0; axis < t.rank(); ++axis) {
    const auto& u = unitaries[static_cast<std::size_t>(axis)];
    if (u.rows() != t.dim(axis) || u.cols() != t.dim(axis)) {
      throw InvalidArgument("unitary for slot " + std::to_string(axis + 1) + " is " +
                            std::to_string(u.rows()) + "x" + std::to_string(u.cols()) +
                            ", slot has dimension " + std::to_string(t.dim(axis)));
    }
    DenseTensor<Scalar> next(std::vector<Eigen::Index>(t.shape().begin(), t.shape().end()));
    const Eigen::Index left = t.stride(axis);
    const Eigen::Index block = left * t.dim(axis);
    const ComplexMatrix<Scalar> ut = u.transpose();
    for (Eigen::Index base = 0; base < t.size(); base += block) {
      Eigen::Map<const ComplexMatrix<Scalar>> in(cur.data().data() + base, left, t.dim(axis));
      Eigen::Map<ComplexMatrix<Scalar>> out(next.data().data() + base, left, t.dim(axis));
      out.noalias() = in * ut;
    }
    cur = std::move(next);
  }
  return cur;
}

/// Haar-distributed unitary from the QR factorization of a complex Gaussian matrix.
template <typename Scalar>
ComplexMatrix<Scalar> random_unitary(Eigen::Index n, std::mt19937_64& rng) {
  ComplexMatrix<Scalar> g(n, n);
  for (Eigen::Index i = 0; i < g.size(); ++i) {
    g.data()[i] = draw_entry<Scalar>(Distribution::complex_gaussian, rng);
  }
  Eigen::HouseholderQR<ComplexMatrix<Scalar>> qr(g);
  ComplexMatrix<Scalar> q = qr.householderQ();
  const ComplexMatrix<Scalar> r = qr.matrixQR().template triangularView<Eigen::Upper>();
  for (Eigen::Index j = 0; j < n; ++j) {
    const auto d = r(j, j);
    if (std::abs(d) > Scalar(0)) q.col(j) *= d / std::abs(d);
  }
  return q;
}

/// |Tr(UT) − Tr(T)| / |Tr(T)|.
template <typename Scalar>
Scalar unitary_invariance_check(const DenseTensor<Scalar>& t, const TraceTarget& target,
                                std::span<const ComplexMatrix<Scalar>> unitaries) {
  const auto before = contract(t, target);
  const auto after = contract(apply_unitaries(t, unitaries), target);
  return std::abs(after - before) / std::abs(before);
}

}  // namespace tul
