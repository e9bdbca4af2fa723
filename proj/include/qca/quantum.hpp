#pragma once

// Quantum states over Q^n and the linear operator induced by a quantum local
// rule f: Q^3 -> C^Q.
//
// Matrix orientation: entry (p, x) is the amplitude of outcome x when the
// input is configuration p. A state is a row vector multiplied on the left:
// out(x) = sum_p state(p) * M(p, x).

#include <complex>
#include <optional>
#include <span>
#include <vector>

#include "qca/lattice.hpp"
#include "qca/reversibility.hpp"

namespace qca {

using Amplitude = std::complex<double>;

inline constexpr std::size_t kDefaultDenseCap = 4096;
inline constexpr double kDefaultUnitaryTol = 1e-12;

class QuantumState {
public:
    // Zero state.
    explicit QuantumState(const LatticeSpec& spec);
    // Throws std::invalid_argument on size mismatch or non-finite entries.
    QuantumState(const LatticeSpec& spec, std::vector<Amplitude> amplitudes);

    const LatticeSpec& spec() const { return spec_; }
    std::span<const Amplitude> amplitudes() const { return amps_; }
    const Amplitude& operator[](ConfigIndex i) const { return amps_[i]; }

    double norm_squared() const;

private:
    LatticeSpec spec_;
    std::vector<Amplitude> amps_;
};

QuantumState basis_state(ConfigIndex config, const LatticeSpec& spec);

// <a, b> = sum_x conj(a(x)) * b(x).
Amplitude inner_product(const QuantumState& a, const QuantumState& b);

class QuantumRule {
public:
    // `vectors` holds s^3 amplitude vectors of length s, laid out like
    // RuleTable entries: vector for (l, c, r) starts at ((l*s + c)*s + r) * s.
    QuantumRule(unsigned s, std::vector<Amplitude> vectors);

    unsigned alphabet() const { return s_; }

    std::span<const Amplitude> operator()(CellState l, CellState c, CellState r) const {
        return std::span<const Amplitude>(data_).subspan(((l * s_ + c) * s_ + r) * s_, s_);
    }

    // The classical rule this one lifts, when every entry is exactly a basis
    // vector.
    std::optional<RuleTable> as_classical() const;

private:
    unsigned s_;
    std::vector<Amplitude> data_;
};

QuantumRule lift_rule(const RuleTable& rule);

Amplitude amplitude(const QuantumRule& qrule, ConfigIndex p, ConfigIndex x, const LatticeSpec& spec);

class GlobalMatrix {
public:
    explicit GlobalMatrix(std::size_t dim) : dim_(dim), data_(dim * dim) {}

    std::size_t dim() const { return dim_; }
    Amplitude& operator()(std::size_t row, std::size_t col) { return data_[row * dim_ + col]; }
    const Amplitude& operator()(std::size_t row, std::size_t col) const { return data_[row * dim_ + col]; }
    std::span<const Amplitude> row(std::size_t r) const {
        return std::span<const Amplitude>(data_).subspan(r * dim_, dim_);
    }

    static GlobalMatrix identity(std::size_t dim);

private:
    std::size_t dim_;
    std::vector<Amplitude> data_;
};

// Throws ResourceLimit when s^n exceeds `cap`.
GlobalMatrix build_global_matrix(const QuantumRule& qrule, const LatticeSpec& spec,
                                 std::size_t cap = kDefaultDenseCap);

// One step of evolution without materialising the matrix. Each input
// configuration contributes the tensor product of its n local vectors; zero
// components are pruned, so lifted classical rules cost O(s^n * n).
QuantumState apply_global(const QuantumRule& qrule, const QuantumState& state);

// Row-vector times matrix, the reference path for apply_global.
QuantumState apply_matrix(const GlobalMatrix& matrix, const QuantumState& state);

// max |(M M^dagger - I)_{ij}|.
double unitarity_deviation(const GlobalMatrix& matrix);
bool is_unitary(const GlobalMatrix& matrix, double tol = kDefaultUnitaryTol);

struct WellFormedOptions {
    double tol = kDefaultUnitaryTol;
    ConfigIndex budget = kDefaultBudget;
    std::size_t dense_cap = kDefaultDenseCap;
};

// Lifted classical rules are decided exactly through bijectivity of the
// classical map; anything else needs the dense matrix and throws
// ResourceLimit beyond the cap.
bool is_well_formed(const QuantumRule& qrule, const LatticeSpec& spec, const WellFormedOptions& options = {});

}  // namespace qca
