#pragma once

// Exact Catalan and Narayana numbers.

#include <boost/multiprecision/cpp_int.hpp>

namespace tul {

using BigInt = boost::multiprecision::cpp_int;

/// Multiplicative formula; zero when k > n.
BigInt binomial(unsigned n, unsigned k);

/// C_k = binom(2k, k) / (k + 1).
BigInt catalan(int k);

/// N_{k,l} = binom(k, l) binom(k, l−1) / k for 1 ≤ l ≤ k.
BigInt narayana(int k, int l);

/// N_{k,l} from the face-splitting recurrence
///   N_{k,l} = Σ_{p≥1} Σ_{k_1+…+k_p = k−p} Σ_{l_1+…+l_p = l−1} Π N_{k_q,l_q},
/// with N_{0,0} = 1 and N_{0,l} = 0 for l > 0, evaluated by dynamic programming.
BigInt narayana_recurrence(int k, int l);

}  // namespace tul
