#include "qca/reversibility.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

#include "qca/errors.hpp"

namespace qca {

namespace {

class BitSet {
public:
    explicit BitSet(ConfigIndex bits) : words_((bits + 63) / 64, 0) {}

    // Sets the bit and reports whether it was already set.
    bool test_and_set(ConfigIndex i) {
        std::uint64_t& w = words_[i >> 6];
        const std::uint64_t m = std::uint64_t{1} << (i & 63);
        const bool was = (w & m) != 0;
        w |= m;
        return was;
    }

    bool test(ConfigIndex i) const { return (words_[i >> 6] >> (i & 63)) & 1; }

private:
    std::vector<std::uint64_t> words_;
};

void require_budget(const LatticeSpec& spec, ConfigIndex budget) {
    if (spec.config_count() > budget) {
        throw ResourceLimit("exhaustive check needs " + std::to_string(spec.config_count()) +
                            " configurations, budget is " + std::to_string(budget));
    }
}

}  // namespace

BijectivityVerdict check_bijective(const RuleTable& rule, const LatticeSpec& spec,
                                   ConfigIndex budget) {
    require_budget(spec, budget);
    const GlobalMap step(rule, spec);
    const ConfigIndex count = spec.config_count();
    BitSet seen(count);
    for (ConfigIndex x = 0; x < count; ++x) {
        const ConfigIndex y = step(x);
        if (seen.test_and_set(y)) {
            for (ConfigIndex earlier = 0; earlier < x; ++earlier) {
                if (step(earlier) == y) {
                    return {false, std::pair{earlier, x}};
                }
            }
        }
    }
    return {true, std::nullopt};
}

PermutationProfile permutation_profile(const RuleTable& rule, const LatticeSpec& spec,
                                       ConfigIndex budget) {
    if (!check_bijective(rule, spec, budget).bijective) {
        throw NotBijective("global map is not bijective at n=" + std::to_string(spec.length()));
    }
    constexpr unsigned __int128 kCap = static_cast<unsigned __int128>(1) << 63;
    const GlobalMap step(rule, spec);
    const ConfigIndex count = spec.config_count();
    BitSet visited(count);
    PermutationProfile profile;
    unsigned __int128 order = 1;
    bool overflow = false;
    for (ConfigIndex start = 0; start < count; ++start) {
        if (visited.test(start)) {
            continue;
        }
        std::uint64_t length = 0;
        ConfigIndex x = start;
        do {
            visited.test_and_set(x);
            x = step(x);
            ++length;
        } while (x != start);
        ++profile.cycle_count;
        profile.longest_cycle = std::max(profile.longest_cycle, length);
        if (!overflow) {
            const auto g = std::gcd(static_cast<std::uint64_t>(order), length);
            order = order / g * length;
            overflow = order > kCap;
        }
    }
    if (!overflow) {
        profile.order = static_cast<std::uint64_t>(order);
    }
    return profile;
}

std::vector<ConfigIndex> invert(const RuleTable& rule, const LatticeSpec& spec, ConfigIndex budget) {
    require_budget(spec, budget);
    const GlobalMap step(rule, spec);
    const ConfigIndex count = spec.config_count();
    std::vector<ConfigIndex> inverse(count);
    BitSet hit(count);
    for (ConfigIndex x = 0; x < count; ++x) {
        const ConfigIndex y = step(x);
        if (hit.test_and_set(y)) {
            throw NotBijective("global map is not bijective at n=" + std::to_string(spec.length()));
        }
        inverse[y] = x;
    }
    return inverse;
}

std::optional<AffineForm> affine_analyze(const RuleTable& rule) {
    if (rule.alphabet() != 2) {
        throw std::invalid_argument("affine analysis applies to binary rules only");
    }
    // The form is pinned by f(0,0,0) and the three unit neighbourhoods.
    AffineForm form;
    form.constant = rule(0, 0, 0) != 0;
    form.linear_mask = {(rule(1, 0, 0) != 0) != form.constant, (rule(0, 1, 0) != 0) != form.constant,
                        (rule(0, 0, 1) != 0) != form.constant};
    for (CellState a = 0; a < 2; ++a) {
        for (CellState b = 0; b < 2; ++b) {
            for (CellState c = 0; c < 2; ++c) {
                const bool predicted = ((form.linear_mask[0] && a) ^ (form.linear_mask[1] && b) ^
                                        (form.linear_mask[2] && c) ^ form.constant) != 0;
                if (predicted != (rule(a, b, c) != 0)) {
                    return std::nullopt;
                }
            }
        }
    }
    return form;
}

std::size_t gf2_rank(std::vector<std::vector<std::uint64_t>> rows, std::size_t columns) {
    std::size_t rank = 0;
    for (std::size_t col = 0; col < columns && rank < rows.size(); ++col) {
        const std::size_t word = col / 64;
        const std::uint64_t bit = std::uint64_t{1} << (col % 64);
        std::size_t pivot = rank;
        while (pivot < rows.size() && !(rows[pivot][word] & bit)) {
            ++pivot;
        }
        if (pivot == rows.size()) {
            continue;
        }
        std::swap(rows[rank], rows[pivot]);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r != rank && (rows[r][word] & bit)) {
                for (std::size_t w = word; w < rows[r].size(); ++w) {
                    rows[r][w] ^= rows[rank][w];
                }
            }
        }
        ++rank;
    }
    return rank;
}

bool affine_bijective(const AffineForm& form, unsigned n) {
    if (n < kMinLength) {
        throw std::invalid_argument("lattice length must be at least 3");
    }
    const std::size_t words = (n + 63) / 64;
    std::vector<std::vector<std::uint64_t>> rows(n, std::vector<std::uint64_t>(words, 0));
    for (unsigned i = 0; i < n; ++i) {
        const unsigned cols[3] = {(i + n - 1) % n, i, (i + 1) % n};
        for (int k = 0; k < 3; ++k) {
            if (form.linear_mask[k]) {
                rows[i][cols[k] / 64] ^= std::uint64_t{1} << (cols[k] % 64);
            }
        }
    }
    return gf2_rank(std::move(rows), n) == n;
}

}  // namespace qca
