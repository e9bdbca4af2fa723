#include "qca/partitioned.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qca {

LocalGate::LocalGate(unsigned s, std::vector<Amplitude> entries) : s_(s), lambda_(std::move(entries)) {
    if (s < 1 || s > kMaxAlphabet) {
        throw std::invalid_argument("gate alphabet size out of range");
    }
    if (lambda_.size() != std::size_t{s} * s) {
        throw std::invalid_argument("gate needs s^2 entries");
    }
    for (const Amplitude& a : lambda_) {
        if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
            throw std::invalid_argument("gate entries must be finite");
        }
    }
}

LocalGate LocalGate::identity(unsigned s) {
    std::vector<Amplitude> m(std::size_t{s} * s);
    for (unsigned i = 0; i < s; ++i) {
        m[i * s + i] = 1.0;
    }
    return LocalGate(s, std::move(m));
}

double LocalGate::unitarity_deviation() const {
    double worst = 0.0;
    for (unsigned i = 0; i < s_; ++i) {
        for (unsigned j = 0; j < s_; ++j) {
            Amplitude sum{};
            for (unsigned k = 0; k < s_; ++k) {
                sum += (*this)(i, k) * std::conj((*this)(j, k));
            }
            if (i == j) {
                sum -= 1.0;
            }
            worst = std::max(worst, std::abs(sum));
        }
    }
    return worst;
}

QuantumRule compose_rule(const RuleTable& e, const LocalGate& g) {
    if (e.alphabet() != g.alphabet()) {
        throw std::invalid_argument("rule alphabet " + std::to_string(e.alphabet()) +
                                    " does not match gate alphabet " + std::to_string(g.alphabet()));
    }
    const unsigned s = e.alphabet();
    const std::size_t triples = std::size_t{s} * s * s;
    std::vector<Amplitude> data;
    data.reserve(triples * s);
    for (std::size_t t = 0; t < triples; ++t) {
        const auto row = g.row(e.at_offset(t));
        data.insert(data.end(), row.begin(), row.end());
    }
    return QuantumRule(s, std::move(data));
}

Theorem1Certificate certify(const RuleTable& e, const LocalGate& g, const LatticeSpec& spec, double tol,
                            ConfigIndex budget) {
    if (e.alphabet() != g.alphabet()) {
        throw std::invalid_argument("rule alphabet does not match gate alphabet");
    }
    Theorem1Certificate cert;
    cert.e_bijective = check_bijective(e, spec, budget);
    cert.lambda_deviation = g.unitarity_deviation();
    cert.lambda_unitary = cert.lambda_deviation <= tol;
    cert.conclusion = cert.e_bijective.bijective && cert.lambda_unitary;
    return cert;
}

std::pair<RuleTable, LocalGate> watrous_partition(unsigned lsize, unsigned msize, unsigned rsize) {
    if (lsize < 1 || msize < 1 || rsize < 1) {
        throw std::invalid_argument("partition sizes must be at least 1");
    }
    const unsigned long long s = 1ULL * lsize * msize * rsize;
    if (s > kMaxAlphabet) {
        throw std::invalid_argument("partition alphabet L x M x R has " + std::to_string(s) +
                                    " states, limit is " + std::to_string(kMaxAlphabet));
    }
    const PartitionAlphabet q{lsize, msize, rsize};
    RuleTable e = RuleTable::from_function(q.size(), [&](CellState left, CellState center, CellState right) {
        return q.encode(q.l_of(right), q.m_of(center), q.r_of(left));
    });
    return {std::move(e), LocalGate::identity(q.size())};
}

LocalGate rotation_gate(double theta) {
    if (!std::isfinite(theta)) {
        throw std::invalid_argument("rotation angle must be finite");
    }
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    return LocalGate(2, {c, -s, s, c});
}

std::pair<RuleTable, LocalGate> controlled_xor_construction() {
    RuleTable e = RuleTable::from_function(4, [](CellState left, CellState, CellState right) {
        const CellState a1 = left >> 1;
        const CellState b3 = right & 1;
        return 2 * a1 + b3;
    });
    LocalGate g(4, {1, 0, 0, 0,
                    0, 1, 0, 0,
                    0, 0, 0, 1,
                    0, 0, 1, 0});
    return {std::move(e), std::move(g)};
}

}  // namespace qca
