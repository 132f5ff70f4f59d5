#pragma once

// Closed-form leading asymptotics for melonic and (m,n)-cycle graphs.

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tul/constructors.hpp"
#include "tul/enumeration.hpp"
#include "tul/graph.hpp"

namespace tul {

enum class Family { melonic, cycle_mm, cycle_mn, cycle_11, generic };

std::string_view to_string(Family f);
/// Throws InvalidArgument for an unknown name.
Family family_from_string(std::string_view name);

/// lim_{N→∞} μ(Tr)/N^gamma = coefficient.
struct AsymptoticPrediction {
  int gamma = 0;
  double coefficient = 0.0;
  Family family = Family::generic;
};

/// gamma = 1 + k(D−1); coefficient = Π c_i^{f_i}. The per-color exponents are
/// not known in closed form, so they come from the unique minimal covering's
/// profile. Throws InvalidArgument if the profile total disagrees with gamma.
AsymptoticPrediction predict_melonic(int k, int colors, std::span<const double> c,
                                     const FaceProfile& minimal_profile);

/// Enumerates the minimal covering for the per-color exponents.
/// Throws InvalidArgument for non-melonic input.
AsymptoticPrediction predict_melonic(const ColoredGraph& b, std::span<const double> c);

/// m = n: gamma = m(k+1), coefficient = Σ_l N_{k,l} Π_ν c_{i_ν}^l c_{i'_ν}^{k−l+1}.
/// Tagged cycle_11 when m = 1. Throws InvalidArgument when m ≠ n.
AsymptoticPrediction predict_cycle_mm(const CycleSpec& spec, std::span<const double> c);

/// m < n: gamma = nk + m, coefficient = (Π c_{i_ν}) (Π c_{i'_ν'}^k).
/// Throws InvalidArgument when m ≥ n.
AsymptoticPrediction predict_cycle_mn(const CycleSpec& spec, std::span<const double> c);

/// Dispatches on m vs n; an (m,n) spec with m > n is predicted as its swapped (n,m) form.
AsymptoticPrediction predict_cycle(const CycleSpec& spec, std::span<const double> c);

struct CrossCheckReport {
  Family family = Family::generic;
  int gamma_closed = 0;
  int gamma_enum = 0;
  double coeff_closed = 0.0;
  double coeff_enum = 0.0;
  /// Number of minimal coverings: 1 for melonic and m < n, C_k for m = n.
  std::size_t count_closed = 0;
  std::size_t count_enum = 0;
  bool pass = false;

  /// One-line diff naming every field.
  std::string describe() const;
};

inline constexpr double kCoefficientRelTol = 1e-12;

/// Closed form against minimal_coverings + limit_coefficient: exact gamma and
/// count, coefficient to relative `rel_tol`.
CrossCheckReport cross_check(const ColoredGraph& b, const AsymptoticPrediction& closed,
                             std::size_t count_closed, std::span<const double> c,
                             double rel_tol = kCoefficientRelTol);
CrossCheckReport cross_check(const CycleSpec& spec, std::span<const double> c,
                             double rel_tol = kCoefficientRelTol);
CrossCheckReport cross_check(const MelonicRecipe& recipe, std::span<const double> c,
                             double rel_tol = kCoefficientRelTol);

}  // namespace tul
