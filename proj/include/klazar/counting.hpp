#pragma once

#include <map>
#include <tuple>
#include <vector>

#include "klazar/bigint.hpp"

namespace klazar {

/// Sparse table of exact counts indexed by small integer tuples; missing
/// entries read as zero.
class CountTable {
 public:
  explicit CountTable(int dimension) : dimension_(dimension) {}

  int dimension() const { return dimension_; }
  BigInt at(const std::vector<int>& index) const;
  void set(const std::vector<int>& index, BigInt value);
  void add(const std::vector<int>& index, const BigInt& value);
  /// Nonzero entries in lexicographic index order.
  const std::map<std::vector<int>, BigInt>& entries() const { return entries_; }

  friend bool operator==(const CountTable&, const CountTable&) = default;

 private:
  void check(const std::vector<int>& index) const;

  int dimension_;
  std::map<std::vector<int>, BigInt> entries_;
};

/// m!! for odd m >= -1, with (-1)!! = 1.
BigInt odd_double_factorial(int m);
/// (2n-1)!!, the number of perfect matchings of [2n].
BigInt matching_count(int n);
BigInt factorial(int n);
/// Zero outside 0 <= k <= n.
BigInt binomial(int n, int k);
/// Zero outside the triangle; S(0,0) = 1.
BigInt stirling2(int n, int k);
BigInt power(const BigInt& base, int exponent);

/// w(0..maxN) from w(n) = w(n-1) + sum_{i=1}^{n-1} w(i) C(n-1, i-1).
std::vector<BigInt> w12_sequence(int maxN);

/// (2k-1)!!^2 S(n+1, 2k+1).
BigInt no_upline_refined(int n, int k);
/// (2k-1)!!^2 S(j, 2k) (2k+1)^(n-j).
BigInt no_upline_refined2(int n, int k, int j);
BigInt no_upline_count(int n);

/// a[n,i,j]: trees with i violators and j non-descent-terminator leaves.
CountTable refined_tree_counts(int maxN);
/// a[n,i,j,k]: as above, with k leaves in total.
CountTable refined_tree_counts4(int maxN);

/// The three summands a(n-1), (n-1) a(n-1), sum C(n-1,k+2) a(n-2-k).
std::tuple<BigInt, BigInt, BigInt> eq4_terms(int n);

/// l -> number of n-edge trees with l - 1 bad vertices, by enumeration.
std::map<int, BigInt> bad_vertex_distribution(int n);

/// Published rows n = 1..7 of a(n, l), l = 1..n, verbatim. Row 6 carries
/// misprints at l = 2 and l = 3 (128 and 5158 for 1328 and 5168).
const std::vector<std::vector<long>>& published_bad_vertex_rows();

}  // namespace klazar
