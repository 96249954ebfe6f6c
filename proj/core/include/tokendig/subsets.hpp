#pragma once

#include <cstdint>
#include <vector>

namespace tokendig {

// Binomial coefficients C(n,k) for 0 <= k <= n <= 64.
// C(64,32) still fits in a uint64_t, so no overflow handling is needed.
std::uint64_t binomial(int n, int k);

// Subsets of {0,...,n-1} as bitmasks, identified by their colexicographic
// rank among all subsets of the same size:
//   rank{a_1 < a_2 < ... < a_k} = sum_i C(a_i, i).
// Ranks run from 0 to C(n,k)-1 and do not depend on n.
std::uint64_t colex_rank(std::uint64_t mask);
std::uint64_t colex_rank(const std::vector<int>& members);

// Inverse of colex_rank for subsets of size k.
std::uint64_t colex_unrank(std::uint64_t rank, int k);

std::vector<int> mask_members(std::uint64_t mask);
std::uint64_t members_mask(const std::vector<int>& members);

// Smallest k-subset mask (the set {0,...,k-1}); use with next_k_subset to
// iterate all k-subsets of {0,...,n-1} in colex order.
std::uint64_t first_k_subset(int k);
// Advances mask to the colex successor among k-subsets of {0,...,n-1};
// returns false when mask was the last one.
bool next_k_subset(std::uint64_t& mask, int n);

}  // namespace tokendig
