#pragma once

// Bijectivity of classical global maps on Q^n, the structure of the induced
// permutation, and an algebraic shortcut for rules that are affine over GF(2).

#include <array>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "qca/lattice.hpp"

namespace qca {

inline constexpr ConfigIndex kDefaultBudget = ConfigIndex{1} << 28;

struct BijectivityVerdict {
    bool bijective = false;
    // Two distinct configurations with the same image; set iff !bijective.
    // `first` < `second`, and `second` is the smallest index whose image was
    // already produced by an earlier index.
    std::optional<std::pair<ConfigIndex, ConfigIndex>> collision;
};

// Exhaustive injectivity test over all s^n configurations with early exit on
// the first repeated image. Throws ResourceLimit when s^n > budget.
BijectivityVerdict check_bijective(const RuleTable& rule, const LatticeSpec& spec,
                                   ConfigIndex budget = kDefaultBudget);

struct PermutationProfile {
    // Least k >= 1 with F^k = id; empty when the lcm of cycle lengths
    // exceeds 2^63.
    std::optional<std::uint64_t> order;
    std::uint64_t cycle_count = 0;
    std::uint64_t longest_cycle = 0;
};

PermutationProfile permutation_profile(const RuleTable& rule, const LatticeSpec& spec,
                                       ConfigIndex budget = kDefaultBudget);

// The inverse permutation: result[F(x)] = x. Throws NotBijective.
std::vector<ConfigIndex> invert(const RuleTable& rule, const LatticeSpec& spec,
                                ConfigIndex budget = kDefaultBudget);

struct AffineForm {
    // Coefficients of (left, center, right) over GF(2).
    std::array<bool, 3> linear_mask{};
    bool constant = false;

    friend bool operator==(const AffineForm&, const AffineForm&) = default;
};

std::optional<AffineForm> affine_analyze(const RuleTable& rule);

// F(x) = C x + constant, where C is the n x n circulant with row i carrying
// the mask at columns i-1, i, i+1. Bijective iff C is invertible over GF(2);
// decided by elimination on packed rows, so n is not limited by the budget.
bool affine_bijective(const AffineForm& form, unsigned n);

// Rank of a square GF(2) matrix given as packed rows (bit j of row i is the
// (i, j) entry, 64 columns per word).
std::size_t gf2_rank(std::vector<std::vector<std::uint64_t>> rows, std::size_t columns);

}  // namespace qca
