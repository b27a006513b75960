#include "klazar/counting.hpp"

#include <stdexcept>
#include <string>

#include "klazar/tree.hpp"

namespace klazar {

void CountTable::check(const std::vector<int>& index) const {
  if (static_cast<int>(index.size()) != dimension_) {
    throw std::invalid_argument("count table: index of dimension " + std::to_string(index.size()) +
                                ", expected " + std::to_string(dimension_));
  }
}

BigInt CountTable::at(const std::vector<int>& index) const {
  check(index);
  auto it = entries_.find(index);
  return it == entries_.end() ? BigInt(0) : it->second;
}

void CountTable::set(const std::vector<int>& index, BigInt value) {
  check(index);
  if (value == 0) {
    entries_.erase(index);
  } else {
    entries_[index] = std::move(value);
  }
}

void CountTable::add(const std::vector<int>& index, const BigInt& value) { set(index, at(index) + value); }

BigInt odd_double_factorial(int m) {
  if (m < -1 || m % 2 == 0) throw std::invalid_argument("odd double factorial: argument must be odd and >= -1");
  BigInt r = 1;
  for (int i = 3; i <= m; i += 2) r *= i;
  return r;
}

BigInt matching_count(int n) { return odd_double_factorial(2 * n - 1); }

BigInt factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial: negative argument");
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

BigInt binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

BigInt stirling2(int n, int k) {
  if (n < 0 || k < 0 || k > n) return 0;
  std::vector<BigInt> row{1};  // row n = 0
  for (int m = 1; m <= n; ++m) {
    std::vector<BigInt> next(m + 1, 0);
    for (int j = 1; j <= m; ++j) {
      BigInt left = j - 1 < static_cast<int>(row.size()) ? row[j - 1] : BigInt(0);
      BigInt same = j < static_cast<int>(row.size()) ? row[j] : BigInt(0);
      next[j] = left + j * same;
    }
    row = std::move(next);
  }
  return row[k];
}

BigInt power(const BigInt& base, int exponent) {
  if (exponent < 0) throw std::invalid_argument("power: negative exponent");
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(exponent));
  return r;
}

std::vector<BigInt> w12_sequence(int maxN) {
  if (maxN < 0) throw std::invalid_argument("w12 sequence: negative length");
  std::vector<BigInt> w{1};
  for (int n = 1; n <= maxN; ++n) {
    BigInt v = w[n - 1];
    for (int i = 1; i <= n - 1; ++i) v += w[i] * binomial(n - 1, i - 1);
    w.push_back(v);
  }
  return w;
}

BigInt no_upline_refined(int n, int k) {
  if (k < 0) return 0;
  BigInt d = odd_double_factorial(2 * k - 1);
  return d * d * stirling2(n + 1, 2 * k + 1);
}

BigInt no_upline_refined2(int n, int k, int j) {
  if (k < 0 || j < 0 || j > n) return 0;
  BigInt d = odd_double_factorial(2 * k - 1);
  return d * d * stirling2(j, 2 * k) * power(2 * k + 1, n - j);
}

BigInt no_upline_count(int n) {
  BigInt total = 0;
  for (int k = 0; 2 * k <= n; ++k) total += no_upline_refined(n, k);
  return total;
}

CountTable refined_tree_counts(int maxN) {
  CountTable a(3);
  a.set({0, 0, 1}, 1);
  for (int n = 1; n <= maxN; ++n) {
    for (int i = 0; i <= n; ++i) {
      for (int j = 1; j <= n + 1; ++j) {
        if ((n == 1 && i == 0 && j == 2) || (n == 1 && i == 1 && j == 1)) continue;
        BigInt v = j * a.at({n - 1, i, j}) + j * a.at({n - 1, i - 1, j}) +
                   (2 * n - 2 * j + 1) * a.at({n - 1, i, j - 1});
        a.set({n, i, j}, v);
      }
    }
  }
  return a;
}

CountTable refined_tree_counts4(int maxN) {
  CountTable a(4);
  a.set({0, 0, 1, 1}, 1);
  if (maxN >= 1) a.set({1, 0, 1, 1}, 1);
  if (maxN >= 2) {
    a.set({2, 0, 2, 2}, 1);
    a.set({2, 0, 1, 1}, 1);
    a.set({2, 1, 1, 2}, 1);
  }
  for (int n = 3; n <= maxN; ++n) {
    for (int i = 0; i <= n; ++i) {
      for (int j = 1; j <= n + 1; ++j) {
        for (int k = 1; k <= n + 1; ++k) {
          BigInt v = j * a.at({n - 1, i, j, k}) + j * a.at({n - 1, i - 1, j, k - 1}) +
                     (k - (j - 1)) * a.at({n - 1, i, j - 1, k}) +
                     (2 * n - k - j + 1) * a.at({n - 1, i, j - 1, k - 1});
          a.set({n, i, j, k}, v);
        }
      }
    }
  }
  return a;
}

std::tuple<BigInt, BigInt, BigInt> eq4_terms(int n) {
  if (n < 1) throw std::invalid_argument("eq4 terms: n must be at least 1");
  BigInt t3 = 0;
  for (int k = 0; k <= n - 3; ++k) t3 += binomial(n - 1, k + 2) * no_upline_count(n - 2 - k);
  BigInt prev = no_upline_count(n - 1);
  return {prev, (n - 1) * prev, t3};
}

std::map<int, BigInt> bad_vertex_distribution(int n) {
  if (n < 1) throw std::invalid_argument("bad vertex distribution: n must be at least 1");
  std::map<int, long> tally;
  for_each_increasing_tree(n, [&](const IncreasingTree& t) { ++tally[static_cast<int>(bad_vertices(t).size()) + 1]; });
  std::map<int, BigInt> out;
  for (auto [l, c] : tally) out[l] = c;
  return out;
}

const std::vector<std::vector<long>>& published_bad_vertex_rows() {
  static const std::vector<std::vector<long>> rows{
      {1},
      {2, 1},
      {4, 10, 1},
      {8, 60, 36, 1},
      {16, 296, 516, 116, 1},
      {32, 128, 5158, 3508, 358, 1},
      {64, 5664, 42960, 64240, 21120, 1086, 1},
  };
  return rows;
}

}  // namespace klazar
