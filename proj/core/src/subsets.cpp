#include "tokendig/subsets.hpp"

#include <array>
#include <bit>
#include <cassert>
#include <stdexcept>

namespace tokendig {

namespace {

constexpr int kMaxN = 64;

struct BinomTable {
  std::array<std::array<std::uint64_t, kMaxN + 1>, kMaxN + 1> c{};
  BinomTable() {
    for (int n = 0; n <= kMaxN; ++n) {
      c[n][0] = 1;
      for (int k = 1; k <= n; ++k)
        c[n][k] = c[n - 1][k - 1] + (k <= n - 1 ? c[n - 1][k] : 0);
    }
  }
};

const BinomTable& table() {
  static const BinomTable t;
  return t;
}

}  // namespace

std::uint64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (n > kMaxN) throw std::out_of_range("binomial: n > 64");
  return table().c[n][k];
}

std::uint64_t colex_rank(std::uint64_t mask) {
  std::uint64_t rank = 0;
  int i = 1;
  while (mask) {
    int a = std::countr_zero(mask);
    rank += binomial(a, i);
    ++i;
    mask &= mask - 1;
  }
  return rank;
}

std::uint64_t colex_rank(const std::vector<int>& members) {
  std::uint64_t rank = 0;
  for (std::size_t i = 0; i < members.size(); ++i)
    rank += binomial(members[i], static_cast<int>(i) + 1);
  return rank;
}

std::uint64_t colex_unrank(std::uint64_t rank, int k) {
  std::uint64_t mask = 0;
  for (int i = k; i >= 1; --i) {
    // Largest a with C(a,i) <= rank; members are recovered high to low.
    int a = i - 1;
    while (a + 1 <= kMaxN && binomial(a + 1, i) <= rank) ++a;
    mask |= std::uint64_t{1} << a;
    rank -= binomial(a, i);
  }
  assert(rank == 0);
  return mask;
}

std::vector<int> mask_members(std::uint64_t mask) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(std::popcount(mask)));
  while (mask) {
    out.push_back(std::countr_zero(mask));
    mask &= mask - 1;
  }
  return out;
}

std::uint64_t members_mask(const std::vector<int>& members) {
  std::uint64_t mask = 0;
  for (int v : members) {
    if (v < 0 || v >= kMaxN) throw std::out_of_range("members_mask: vertex out of range");
    mask |= std::uint64_t{1} << v;
  }
  return mask;
}

std::uint64_t first_k_subset(int k) {
  return k == 0 ? 0 : (~std::uint64_t{0} >> (kMaxN - k));
}

bool next_k_subset(std::uint64_t& mask, int n) {
  // Gosper's hack.
  if (mask == 0) return false;
  std::uint64_t c = mask & -mask;
  std::uint64_t r = mask + c;
  std::uint64_t next = (((r ^ mask) >> 2) / c) | r;
  if (n < kMaxN && next >= (std::uint64_t{1} << n)) return false;
  mask = next;
  return true;
}

}  // namespace tokendig
