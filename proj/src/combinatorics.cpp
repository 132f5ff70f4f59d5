#include "tul/combinatorics.hpp"

#include <string>
#include <vector>

#include "tul/error.hpp"

namespace tul {

namespace {

void check_row(int k, int l) {
  if (k < 1 || l < 1 || l > k) {
    throw InvalidArgument("Narayana numbers need 1 <= l <= k, got k = " + std::to_string(k) +
                          ", l = " + std::to_string(l));
  }
}

using Table = std::vector<std::vector<BigInt>>;

// a * b as bivariate series in (k, l), truncated at k <= max_k.
Table convolve(const Table& a, const Table& b, int max_k) {
  Table out(static_cast<std::size_t>(max_k + 1),
            std::vector<BigInt>(static_cast<std::size_t>(max_k + 1)));
  for (int k1 = 0; k1 <= max_k; ++k1) {
    for (int l1 = 0; l1 <= k1; ++l1) {
      const auto& x = a[static_cast<std::size_t>(k1)][static_cast<std::size_t>(l1)];
      if (x == 0) continue;
      for (int k2 = 0; k1 + k2 <= max_k; ++k2) {
        for (int l2 = 0; l2 <= k2; ++l2) {
          const auto& y = b[static_cast<std::size_t>(k2)][static_cast<std::size_t>(l2)];
          if (y == 0) continue;
          out[static_cast<std::size_t>(k1 + k2)][static_cast<std::size_t>(l1 + l2)] += x * y;
        }
      }
    }
  }
  return out;
}

}  // namespace

BigInt binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt result = 1;
  for (unsigned i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;  // exact: result is binom(n - k + i, i) here
  }
  return result;
}

BigInt catalan(int k) {
  if (k < 0) throw InvalidArgument("Catalan numbers need k >= 0");
  return binomial(2u * static_cast<unsigned>(k), static_cast<unsigned>(k)) / (k + 1);
}

BigInt narayana(int k, int l) {
  check_row(k, l);
  const auto uk = static_cast<unsigned>(k);
  const auto ul = static_cast<unsigned>(l);
  return binomial(uk, ul) * binomial(uk, ul - 1) / k;
}

BigInt narayana_recurrence(int k, int l) {
  check_row(k, l);
  // table[k'][l'] holds N_{k',l'} for k' < current row; row 0 is the empty part.
  Table table(static_cast<std::size_t>(k + 1), std::vector<BigInt>(static_cast<std::size_t>(k + 1)));
  table[0][0] = 1;
  for (int row = 1; row <= k; ++row) {
    // power = table^p restricted to parts of size < row; p parts use p of the row's k.
    Table power = table;
    for (int p = 1; p <= row; ++p) {
      if (p > 1) power = convolve(power, table, row - p);
      const int rest = row - p;
      for (int lr = 1; lr <= row; ++lr) {
        if (lr - 1 <= rest) {
          table[static_cast<std::size_t>(row)][static_cast<std::size_t>(lr)] +=
              power[static_cast<std::size_t>(rest)][static_cast<std::size_t>(lr - 1)];
        }
      }
    }
  }
  return table[static_cast<std::size_t>(k)][static_cast<std::size_t>(l)];
}

}  // namespace tul
