#include "qca/quantum.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "qca/errors.hpp"

namespace qca {

namespace {

bool finite(const Amplitude& a) { return std::isfinite(a.real()) && std::isfinite(a.imag()); }

// Calls sink(x, amp) for every outcome x of input p with nonzero amplitude.
template <typename Sink>
void expand_outcomes(const QuantumRule& qrule, ConfigIndex p, const LatticeSpec& spec, Amplitude weight,
                     Sink&& sink) {
    const unsigned s = spec.alphabet();
    const unsigned n = spec.length();
    const std::vector<CellState> cells = decode_config(p, spec);
    std::vector<std::span<const Amplitude>> local(n);
    for (unsigned i = 0; i < n; ++i) {
        local[i] = qrule(cells[(i + n - 1) % n], cells[i], cells[(i + 1) % n]);
    }
    auto recurse = [&](auto&& self, unsigned depth, ConfigIndex prefix, Amplitude acc) -> void {
        if (depth == n) {
            sink(prefix, acc);
            return;
        }
        for (CellState v = 0; v < s; ++v) {
            const Amplitude a = local[depth][v];
            if (a != Amplitude{}) {
                self(self, depth + 1, prefix * s + v, acc * a);
            }
        }
    };
    recurse(recurse, 0, 0, weight);
}

}  // namespace

QuantumState::QuantumState(const LatticeSpec& spec) : spec_(spec), amps_(spec.config_count()) {}

QuantumState::QuantumState(const LatticeSpec& spec, std::vector<Amplitude> amplitudes)
    : spec_(spec), amps_(std::move(amplitudes)) {
    if (amps_.size() != spec.config_count()) {
        throw std::invalid_argument("state needs s^n = " + std::to_string(spec.config_count()) +
                                    " amplitudes, got " + std::to_string(amps_.size()));
    }
    for (const Amplitude& a : amps_) {
        if (!finite(a)) {
            throw std::invalid_argument("state amplitudes must be finite");
        }
    }
}

double QuantumState::norm_squared() const {
    double sum = 0.0;
    for (const Amplitude& a : amps_) {
        sum += std::norm(a);
    }
    return sum;
}

QuantumState basis_state(ConfigIndex config, const LatticeSpec& spec) {
    if (config >= spec.config_count()) {
        throw std::out_of_range("configuration index out of range");
    }
    std::vector<Amplitude> amps(spec.config_count());
    amps[config] = 1.0;
    return QuantumState(spec, std::move(amps));
}

Amplitude inner_product(const QuantumState& a, const QuantumState& b) {
    if (!(a.spec() == b.spec())) {
        throw std::invalid_argument("inner product of states on different lattices");
    }
    Amplitude sum{};
    for (ConfigIndex i = 0; i < a.spec().config_count(); ++i) {
        sum += std::conj(a[i]) * b[i];
    }
    return sum;
}

QuantumRule::QuantumRule(unsigned s, std::vector<Amplitude> vectors) : s_(s), data_(std::move(vectors)) {
    if (s < 1 || s > kMaxAlphabet) {
        throw std::invalid_argument("quantum rule alphabet size out of range");
    }
    if (data_.size() != std::size_t{s} * s * s * s) {
        throw std::invalid_argument("quantum rule needs s^4 amplitudes");
    }
    for (const Amplitude& a : data_) {
        if (!finite(a)) {
            throw std::invalid_argument("quantum rule amplitudes must be finite");
        }
    }
}

std::optional<RuleTable> QuantumRule::as_classical() const {
    const std::size_t triples = std::size_t{s_} * s_ * s_;
    std::vector<CellState> entries(triples);
    for (std::size_t t = 0; t < triples; ++t) {
        int ones = 0;
        for (unsigned v = 0; v < s_; ++v) {
            const Amplitude a = data_[t * s_ + v];
            if (a == Amplitude{1.0, 0.0}) {
                entries[t] = v;
                ++ones;
            } else if (a != Amplitude{}) {
                return std::nullopt;
            }
        }
        if (ones != 1) {
            return std::nullopt;
        }
    }
    return RuleTable(s_, std::move(entries));
}

QuantumRule lift_rule(const RuleTable& rule) {
    const unsigned s = rule.alphabet();
    const std::size_t triples = std::size_t{s} * s * s;
    std::vector<Amplitude> data(triples * s);
    for (std::size_t t = 0; t < triples; ++t) {
        data[t * s + rule.at_offset(t)] = 1.0;
    }
    return QuantumRule(s, std::move(data));
}

Amplitude amplitude(const QuantumRule& qrule, ConfigIndex p, ConfigIndex x, const LatticeSpec& spec) {
    if (qrule.alphabet() != spec.alphabet()) {
        throw std::invalid_argument("rule alphabet does not match lattice");
    }
    if (p >= spec.config_count() || x >= spec.config_count()) {
        throw std::out_of_range("configuration index out of range");
    }
    const unsigned n = spec.length();
    const std::vector<CellState> in = decode_config(p, spec);
    const std::vector<CellState> out = decode_config(x, spec);
    Amplitude product = 1.0;
    for (unsigned i = 0; i < n; ++i) {
        product *= qrule(in[(i + n - 1) % n], in[i], in[(i + 1) % n])[out[i]];
    }
    return product;
}

GlobalMatrix GlobalMatrix::identity(std::size_t dim) {
    GlobalMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        m(i, i) = 1.0;
    }
    return m;
}

GlobalMatrix build_global_matrix(const QuantumRule& qrule, const LatticeSpec& spec, std::size_t cap) {
    if (qrule.alphabet() != spec.alphabet()) {
        throw std::invalid_argument("rule alphabet does not match lattice");
    }
    if (spec.config_count() > cap) {
        throw ResourceLimit("dense matrix dimension " + std::to_string(spec.config_count()) +
                            " exceeds cap " + std::to_string(cap));
    }
    const std::size_t dim = spec.config_count();
    GlobalMatrix m(dim);
    for (std::size_t p = 0; p < dim; ++p) {
        expand_outcomes(qrule, p, spec, 1.0, [&](ConfigIndex x, Amplitude a) { m(p, x) = a; });
    }
    return m;
}

QuantumState apply_global(const QuantumRule& qrule, const QuantumState& state) {
    const LatticeSpec& spec = state.spec();
    if (qrule.alphabet() != spec.alphabet()) {
        throw std::invalid_argument("rule alphabet does not match lattice");
    }
    std::vector<Amplitude> out(spec.config_count());
    for (ConfigIndex p = 0; p < spec.config_count(); ++p) {
        if (state[p] == Amplitude{}) {
            continue;
        }
        expand_outcomes(qrule, p, spec, state[p], [&](ConfigIndex x, Amplitude a) { out[x] += a; });
    }
    return QuantumState(spec, std::move(out));
}

QuantumState apply_matrix(const GlobalMatrix& matrix, const QuantumState& state) {
    const std::size_t dim = matrix.dim();
    if (dim != state.spec().config_count()) {
        throw std::invalid_argument("matrix dimension does not match state");
    }
    std::vector<Amplitude> out(dim);
    for (std::size_t p = 0; p < dim; ++p) {
        const auto row = matrix.row(p);
        for (std::size_t x = 0; x < dim; ++x) {
            out[x] += state[p] * row[x];
        }
    }
    return QuantumState(state.spec(), std::move(out));
}

double unitarity_deviation(const GlobalMatrix& matrix) {
    const std::size_t dim = matrix.dim();
    // Nonzero entries per column, so sparse (permutation-like) matrices cost
    // O(nnz) per row instead of O(dim^2).
    std::vector<std::vector<std::pair<std::size_t, Amplitude>>> columns(dim);
    for (std::size_t r = 0; r < dim; ++r) {
        for (std::size_t c = 0; c < dim; ++c) {
            const Amplitude a = matrix(r, c);
            if (!finite(a)) {
                return std::numeric_limits<double>::infinity();
            }
            if (a != Amplitude{}) {
                columns[c].emplace_back(r, a);
            }
        }
    }
    double worst = 0.0;
    std::vector<Amplitude> gram_row(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        std::fill(gram_row.begin(), gram_row.end(), Amplitude{});
        const auto row = matrix.row(i);
        for (std::size_t k = 0; k < dim; ++k) {
            if (row[k] == Amplitude{}) {
                continue;
            }
            for (const auto& [j, v] : columns[k]) {
                gram_row[j] += row[k] * std::conj(v);
            }
        }
        gram_row[i] -= 1.0;
        for (const Amplitude& g : gram_row) {
            worst = std::max(worst, std::abs(g));
        }
    }
    return worst;
}

bool is_unitary(const GlobalMatrix& matrix, double tol) { return unitarity_deviation(matrix) <= tol; }

bool is_well_formed(const QuantumRule& qrule, const LatticeSpec& spec, const WellFormedOptions& options) {
    if (qrule.alphabet() != spec.alphabet()) {
        throw std::invalid_argument("rule alphabet does not match lattice");
    }
    if (const auto classical = qrule.as_classical()) {
        return check_bijective(*classical, spec, options.budget).bijective;
    }
    return is_unitary(build_global_matrix(qrule, spec, options.dense_cap), options.tol);
}

}  // namespace qca
