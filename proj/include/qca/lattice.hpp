#pragma once

// Finite cyclic cellular automata: lattice shapes, configuration indexing and
// classical radius-1 rules.
//
// Conventions used throughout the library:
//   * configurations are indexed from 0 to s^n - 1;
//   * cell 1 is the most significant base-s digit, so index order equals the
//     lexicographic order of cell sequences;
//   * the lattice wraps: the left neighbour of cell 1 is cell n and the right
//     neighbour of cell n is cell 1.

#include <array>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace qca {

using ConfigIndex = std::uint64_t;
using CellState = std::uint32_t;

inline constexpr unsigned kMaxAlphabet = 256;
inline constexpr unsigned kMinLength = 3;

class LatticeSpec {
public:
    // Throws std::invalid_argument when s < 2, n < 3, s > kMaxAlphabet or
    // when s^n does not fit below 2^63.
    LatticeSpec(unsigned s, unsigned n);

    unsigned alphabet() const { return s_; }
    unsigned length() const { return n_; }
    ConfigIndex config_count() const { return count_; }

    friend bool operator==(const LatticeSpec&, const LatticeSpec&) = default;

private:
    unsigned s_;
    unsigned n_;
    ConfigIndex count_;
};

ConfigIndex encode_config(std::span<const CellState> cells, const LatticeSpec& spec);
std::vector<CellState> decode_config(ConfigIndex index, const LatticeSpec& spec);

// Dense local transition table f(left, center, right), stored at offset
// (left * s + center) * s + right.
class RuleTable {
public:
    RuleTable(unsigned s, std::vector<CellState> entries);

    static RuleTable from_function(
        unsigned s, const std::function<CellState(CellState, CellState, CellState)>& f);

    unsigned alphabet() const { return s_; }

    CellState operator()(CellState left, CellState center, CellState right) const {
        return entries_[(left * s_ + center) * s_ + right];
    }
    CellState at_offset(std::size_t offset) const { return entries_[offset]; }
    std::span<const CellState> entries() const { return entries_; }

    friend bool operator==(const RuleTable&, const RuleTable&) = default;

private:
    unsigned s_;
    std::vector<CellState> entries_;
};

// Elementary (s = 2) rule numbers: bit 4l+2c+r of R is f(l, c, r).
RuleTable rule_from_number(long long rule_number);
unsigned number_from_rule(const RuleTable& rule);

// Global map F_f on one lattice, prepared once for repeated evaluation.
// Binary alphabets evaluate all cells at once on the packed index.
class GlobalMap {
public:
    GlobalMap(const RuleTable& rule, const LatticeSpec& spec);

    ConfigIndex operator()(ConfigIndex config) const {
        return binary_ ? step_binary(config) : step_general(config);
    }

    const LatticeSpec& spec() const { return spec_; }

private:
    ConfigIndex step_binary(ConfigIndex x) const;
    ConfigIndex step_general(ConfigIndex x) const;

    RuleTable rule_;
    LatticeSpec spec_;
    bool binary_;
    unsigned rule_bits_ = 0;
    ConfigIndex mask_ = 0;
};

ConfigIndex global_step(const RuleTable& rule, ConfigIndex config, const LatticeSpec& spec);

std::vector<ConfigIndex> spacetime_trace(const RuleTable& rule, ConfigIndex config,
                                         const LatticeSpec& spec, std::size_t steps);

// Cyclic left rotation of the cell sequence: (q1, ..., qn) -> (q2, ..., qn, q1).
ConfigIndex rotate_left(ConfigIndex config, const LatticeSpec& spec);

}  // namespace qca
