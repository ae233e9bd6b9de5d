#pragma once

#include <cstdint>
#include <vector>

namespace hrlab {

// Strictly increasing tuple of integers in [1, n]; length 0 is allowed.
using MultiIndex = std::vector<int>;

std::int64_t binomial(int n, int k);

// All k-subsets of {1,...,n} in lexicographic order.
std::vector<MultiIndex> combinations(int n, int k);

// Position of c in the lexicographic enumeration above.
int combination_rank(int n, const MultiIndex& c);

// Merge two increasing tuples into one increasing tuple.
// Returns the transposition parity (+1/-1), or 0 when the tuples overlap
// (in which case `out` is left unspecified).
int merge_indices(const MultiIndex& a, const MultiIndex& b, MultiIndex& out);

}  // namespace hrlab
