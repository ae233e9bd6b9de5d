#include "hrlab/multiindex.hpp"

#include <stdexcept>

namespace hrlab {

std::int64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
  }
  return r;
}

std::vector<MultiIndex> combinations(int n, int k) {
  if (n < 0 || k < 0 || k > n) {
    throw std::invalid_argument("combinations: need 0 <= k <= n");
  }
  std::vector<MultiIndex> out;
  out.reserve(static_cast<std::size_t>(binomial(n, k)));
  MultiIndex c(k);
  for (int i = 0; i < k; ++i) c[i] = i + 1;
  while (true) {
    out.push_back(c);
    int t = k - 1;
    while (t >= 0 && c[t] == n - (k - 1 - t)) --t;
    if (t < 0) break;
    ++c[t];
    for (int i = t + 1; i < k; ++i) c[i] = c[i - 1] + 1;
  }
  return out;
}

int combination_rank(int n, const MultiIndex& c) {
  const int k = static_cast<int>(c.size());
  std::int64_t rank = 0;
  int prev = 0;
  for (int t = 0; t < k; ++t) {
    for (int v = prev + 1; v < c[t]; ++v) {
      rank += binomial(n - v, k - t - 1);
    }
    prev = c[t];
  }
  return static_cast<int>(rank);
}

int merge_indices(const MultiIndex& a, const MultiIndex& b, MultiIndex& out) {
  out.clear();
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  int inversions = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) return 0;
    if (a[i] < b[j]) {
      out.push_back(a[i++]);
    } else {
      // b[j] jumps past the remaining entries of a.
      inversions += static_cast<int>(a.size() - i);
      out.push_back(b[j++]);
    }
  }
  while (i < a.size()) out.push_back(a[i++]);
  while (j < b.size()) out.push_back(b[j++]);
  return (inversions % 2 == 0) ? 1 : -1;
}

}  // namespace hrlab
