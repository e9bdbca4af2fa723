#pragma once

// Quantum rules of the form f = g o e: a classical rule e followed by a
// single-cell gate g. The composite is well formed whenever F_e is a
// bijection and the gate matrix is unitary; the converse is not claimed.

#include <utility>

#include "qca/lattice.hpp"
#include "qca/quantum.hpp"
#include "qca/reversibility.hpp"

namespace qca {

// Single-cell gate g: Q -> C^Q as an s x s matrix, entry (p, q) = g(p)(q).
class LocalGate {
public:
    LocalGate(unsigned s, std::vector<Amplitude> entries);

    static LocalGate identity(unsigned s);

    unsigned alphabet() const { return s_; }
    const Amplitude& operator()(CellState p, CellState q) const { return lambda_[p * s_ + q]; }
    std::span<const Amplitude> row(CellState p) const {
        return std::span<const Amplitude>(lambda_).subspan(p * s_, s_);
    }

    // max |(L L^dagger - I)_{ij}|.
    double unitarity_deviation() const;

private:
    unsigned s_;
    std::vector<Amplitude> lambda_;
};

QuantumRule compose_rule(const RuleTable& e, const LocalGate& g);

struct Theorem1Certificate {
    BijectivityVerdict e_bijective;
    bool lambda_unitary = false;
    double lambda_deviation = 0.0;
    // True only when both conditions hold. False means "not certified", not
    // "not well formed".
    bool conclusion = false;
};

Theorem1Certificate certify(const RuleTable& e, const LocalGate& g, const LatticeSpec& spec,
                            double tol = kDefaultUnitaryTol, ConfigIndex budget = kDefaultBudget);

// Cell state q = (l * msize + m) * rsize + r over Q = L x M x R.
struct PartitionAlphabet {
    unsigned lsize, msize, rsize;

    unsigned size() const { return lsize * msize * rsize; }
    CellState encode(CellState l, CellState m, CellState r) const { return (l * msize + m) * rsize + r; }
    CellState l_of(CellState q) const { return q / (msize * rsize); }
    CellState m_of(CellState q) const { return (q / rsize) % msize; }
    CellState r_of(CellState q) const { return q % rsize; }
};

// e(left, center, right) = (l of right, m of center, r of left), with the
// identity gate.
std::pair<RuleTable, LocalGate> watrous_partition(unsigned lsize, unsigned msize, unsigned rsize);

// [[cos t, -sin t], [sin t, cos t]] over s = 2.
LocalGate rotation_gate(double theta);

// Q = {0,1}^2 with (a, b) -> 2a + b; e = (a of left, b of right), gate swaps
// basis states (1,0) and (1,1).
std::pair<RuleTable, LocalGate> controlled_xor_construction();

}  // namespace qca
