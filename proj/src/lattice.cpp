#include "qca/lattice.hpp"

#include <stdexcept>
#include <string>

namespace qca {

namespace {

constexpr ConfigIndex kIndexLimit = ConfigIndex{1} << 63;

}  // namespace

LatticeSpec::LatticeSpec(unsigned s, unsigned n) : s_(s), n_(n), count_(1) {
    if (s < 2 || s > kMaxAlphabet) {
        throw std::invalid_argument("alphabet size must be in [2, 256], got " + std::to_string(s));
    }
    if (n < kMinLength) {
        throw std::invalid_argument("lattice length must be at least 3, got " + std::to_string(n));
    }
    for (unsigned i = 0; i < n; ++i) {
        if (count_ > kIndexLimit / s) {
            throw std::invalid_argument("s^n overflows the configuration index (s=" +
                                        std::to_string(s) + ", n=" + std::to_string(n) + ")");
        }
        count_ *= s;
    }
}

ConfigIndex encode_config(std::span<const CellState> cells, const LatticeSpec& spec) {
    if (cells.size() != spec.length()) {
        throw std::invalid_argument("configuration has " + std::to_string(cells.size()) +
                                    " cells, lattice length is " + std::to_string(spec.length()));
    }
    ConfigIndex index = 0;
    for (CellState c : cells) {
        if (c >= spec.alphabet()) {
            throw std::invalid_argument("cell state " + std::to_string(c) + " outside alphabet");
        }
        index = index * spec.alphabet() + c;
    }
    return index;
}

std::vector<CellState> decode_config(ConfigIndex index, const LatticeSpec& spec) {
    if (index >= spec.config_count()) {
        throw std::out_of_range("configuration index " + std::to_string(index) + " out of range");
    }
    std::vector<CellState> cells(spec.length());
    for (std::size_t i = cells.size(); i-- > 0;) {
        cells[i] = static_cast<CellState>(index % spec.alphabet());
        index /= spec.alphabet();
    }
    return cells;
}

RuleTable::RuleTable(unsigned s, std::vector<CellState> entries) : s_(s), entries_(std::move(entries)) {
    if (s < 1 || s > kMaxAlphabet) {
        throw std::invalid_argument("rule alphabet size out of range");
    }
    if (entries_.size() != std::size_t{s} * s * s) {
        throw std::invalid_argument("rule table needs s^3 = " + std::to_string(std::size_t{s} * s * s) +
                                    " entries, got " + std::to_string(entries_.size()));
    }
    for (CellState v : entries_) {
        if (v >= s) {
            throw std::invalid_argument("rule output " + std::to_string(v) + " outside alphabet");
        }
    }
}

RuleTable RuleTable::from_function(
    unsigned s, const std::function<CellState(CellState, CellState, CellState)>& f) {
    std::vector<CellState> entries;
    entries.reserve(std::size_t{s} * s * s);
    for (CellState l = 0; l < s; ++l) {
        for (CellState c = 0; c < s; ++c) {
            for (CellState r = 0; r < s; ++r) {
                entries.push_back(f(l, c, r));
            }
        }
    }
    return RuleTable(s, std::move(entries));
}

RuleTable rule_from_number(long long rule_number) {
    if (rule_number < 0 || rule_number > 255) {
        throw std::invalid_argument("elementary rule number must be in [0, 255], got " +
                                    std::to_string(rule_number));
    }
    std::vector<CellState> entries(8);
    for (unsigned i = 0; i < 8; ++i) {
        entries[i] = static_cast<CellState>((rule_number >> i) & 1);
    }
    return RuleTable(2, std::move(entries));
}

unsigned number_from_rule(const RuleTable& rule) {
    if (rule.alphabet() != 2) {
        throw std::invalid_argument("rule numbers exist only for binary alphabets");
    }
    unsigned r = 0;
    for (unsigned i = 0; i < 8; ++i) {
        r |= rule.at_offset(i) << i;
    }
    return r;
}

GlobalMap::GlobalMap(const RuleTable& rule, const LatticeSpec& spec)
    : rule_(rule), spec_(spec), binary_(spec.alphabet() == 2) {
    if (rule.alphabet() != spec.alphabet()) {
        throw std::invalid_argument("rule alphabet " + std::to_string(rule.alphabet()) +
                                    " does not match lattice alphabet " +
                                    std::to_string(spec.alphabet()));
    }
    if (binary_) {
        rule_bits_ = number_from_rule(rule);
        mask_ = spec.config_count() - 1;
    }
}

ConfigIndex GlobalMap::step_binary(ConfigIndex x) const {
    // Bit k of each word holds one cell; cell 1 is the top bit, so the left
    // neighbour of the cell at bit k sits at bit k+1.
    const unsigned n = spec_.length();
    const ConfigIndex left = (x >> 1) | ((x & 1) << (n - 1));
    const ConfigIndex right = ((x << 1) & mask_) | (x >> (n - 1));
    const ConfigIndex nl = ~left;
    const ConfigIndex nc = ~x;
    const ConfigIndex nr = ~right;
    ConfigIndex out = 0;
    if (rule_bits_ & 0x01) out |= nl & nc & nr;
    if (rule_bits_ & 0x02) out |= nl & nc & right;
    if (rule_bits_ & 0x04) out |= nl & x & nr;
    if (rule_bits_ & 0x08) out |= nl & x & right;
    if (rule_bits_ & 0x10) out |= left & nc & nr;
    if (rule_bits_ & 0x20) out |= left & nc & right;
    if (rule_bits_ & 0x40) out |= left & x & nr;
    if (rule_bits_ & 0x80) out |= left & x & right;
    return out & mask_;
}

ConfigIndex GlobalMap::step_general(ConfigIndex x) const {
    const unsigned s = spec_.alphabet();
    const unsigned n = spec_.length();
    std::array<CellState, 64> cells{};
    for (unsigned i = n; i-- > 0;) {
        cells[i] = static_cast<CellState>(x % s);
        x /= s;
    }
    ConfigIndex out = 0;
    for (unsigned i = 0; i < n; ++i) {
        const CellState l = cells[(i + n - 1) % n];
        const CellState r = cells[(i + 1) % n];
        out = out * s + rule_(l, cells[i], r);
    }
    return out;
}

ConfigIndex global_step(const RuleTable& rule, ConfigIndex config, const LatticeSpec& spec) {
    if (config >= spec.config_count()) {
        throw std::out_of_range("configuration index out of range");
    }
    return GlobalMap(rule, spec)(config);
}

std::vector<ConfigIndex> spacetime_trace(const RuleTable& rule, ConfigIndex config,
                                         const LatticeSpec& spec, std::size_t steps) {
    if (config >= spec.config_count()) {
        throw std::out_of_range("configuration index out of range");
    }
    const GlobalMap step(rule, spec);
    std::vector<ConfigIndex> rows;
    rows.reserve(steps + 1);
    rows.push_back(config);
    for (std::size_t t = 0; t < steps; ++t) {
        rows.push_back(step(rows.back()));
    }
    return rows;
}

ConfigIndex rotate_left(ConfigIndex config, const LatticeSpec& spec) {
    const ConfigIndex top = spec.config_count() / spec.alphabet();
    return (config % top) * spec.alphabet() + config / top;
}

}  // namespace qca
