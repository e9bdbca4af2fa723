#include "qca/rulescan.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <ctime>
#include <stdexcept>
#include <thread>

#include "qca/errors.hpp"

namespace qca {

namespace {

std::string utc_timestamp() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

unsigned worker_count(unsigned hint, std::size_t jobs) {
    unsigned w = hint != 0 ? hint : std::max(1u, std::thread::hardware_concurrency());
    return static_cast<unsigned>(std::min<std::size_t>(w, std::max<std::size_t>(jobs, 1)));
}

ScanCell evaluate_cell(unsigned n, unsigned rule, ConfigIndex budget, bool timed) {
    ScanCell cell{n, rule, CellStatus::skipped, 0, std::nullopt};
    const LatticeSpec spec(2, n);
    if (spec.config_count() > budget) {
        return cell;
    }
    const auto start = std::chrono::steady_clock::now();
    const BijectivityVerdict verdict = check_bijective(rule_from_number(rule), spec, budget);
    const auto stop = std::chrono::steady_clock::now();
    cell.status = verdict.bijective ? CellStatus::forms_qca : CellStatus::not_qca;
    cell.witness = verdict.collision;
    if (timed) {
        cell.elapsed_us = static_cast<std::uint64_t>(
            std::chrono::duration_cast<std::chrono::microseconds>(stop - start).count());
    }
    return cell;
}

}  // namespace

void ScanRequest::validate() const {
    if (n_min < kMinLength || n_min > n_max) {
        throw std::invalid_argument("size range must satisfy 3 <= n_min <= n_max");
    }
    if (n_max > 63) {
        throw std::invalid_argument("binary lattices are limited to n <= 63");
    }
    if (r_min > r_max || r_max > 255) {
        throw std::invalid_argument("rule range must satisfy 0 <= r_min <= r_max <= 255");
    }
}

const char* to_string(CellStatus status) {
    switch (status) {
        case CellStatus::forms_qca: return "true";
        case CellStatus::not_qca: return "false";
        case CellStatus::skipped: return "skipped";
    }
    return "?";
}

CellStatus cell_status_from_string(const std::string& text) {
    if (text == "true") return CellStatus::forms_qca;
    if (text == "false") return CellStatus::not_qca;
    if (text == "skipped") return CellStatus::skipped;
    throw std::invalid_argument("unknown cell status '" + text + "'");
}

std::map<unsigned, std::vector<unsigned>> ScanReport::forming() const {
    std::map<unsigned, std::vector<unsigned>> out;
    for (const ScanCell& c : cells) {
        auto& list = out[c.n];
        if (c.status == CellStatus::forms_qca) {
            list.push_back(c.rule);
        }
    }
    for (auto& [n, list] : out) {
        std::sort(list.begin(), list.end());
    }
    return out;
}

const ScanCell* ScanReport::find(unsigned n, unsigned rule) const {
    auto it = std::lower_bound(cells.begin(), cells.end(), std::pair{n, rule},
                               [](const ScanCell& c, const std::pair<unsigned, unsigned>& key) {
                                   return std::pair{c.n, c.rule} < key;
                               });
    if (it == cells.end() || it->n != n || it->rule != rule) {
        return nullptr;
    }
    return &*it;
}

ScanReport scan(const ScanRequest& request) {
    request.validate();
    ScanReport report;
    report.metadata.budget = request.budget;
    report.metadata.n_min = request.n_min;
    report.metadata.n_max = request.n_max;
    report.metadata.r_min = request.r_min;
    report.metadata.r_max = request.r_max;
    if (request.record_timing) {
        report.metadata.timestamp = utc_timestamp();
    }

    for (unsigned n = request.n_min; n <= request.n_max; ++n) {
        for (unsigned r = request.r_min; r <= request.r_max; ++r) {
            report.cells.push_back({n, r, CellStatus::skipped, 0, std::nullopt});
        }
    }
    // Largest lattices first so the slow cells start early.
    std::vector<std::size_t> schedule(report.cells.size());
    for (std::size_t i = 0; i < schedule.size(); ++i) {
        schedule[i] = schedule.size() - 1 - i;
    }

    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t k = next.fetch_add(1); k < schedule.size(); k = next.fetch_add(1)) {
            ScanCell& cell = report.cells[schedule[k]];
            cell = evaluate_cell(cell.n, cell.rule, request.budget, request.record_timing);
        }
    };
    const unsigned workers = worker_count(request.parallelism, schedule.size());
    if (workers <= 1) {
        work();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back(work);
        }
    }
    return report;
}

std::vector<SymmetryViolation> symmetry_check(const ScanReport& report) {
    std::vector<SymmetryViolation> violations;
    for (const ScanCell& cell : report.cells) {
        const unsigned complement = 255 - cell.rule;
        const ScanCell* other = report.find(cell.n, complement);
        if (other == nullptr) {
            throw std::invalid_argument("report lacks rule " + std::to_string(complement) + " at n=" +
                                        std::to_string(cell.n) + " needed to check rule " +
                                        std::to_string(cell.rule));
        }
        if (cell.rule > complement) {
            continue;
        }
        if (cell.status == CellStatus::skipped || other->status == CellStatus::skipped) {
            throw std::invalid_argument("cell skipped at n=" + std::to_string(cell.n) +
                                        "; symmetry cannot be checked");
        }
        const bool a = cell.status == CellStatus::forms_qca;
        const bool b = other->status == CellStatus::forms_qca;
        if (a != b) {
            violations.push_back({cell.n, cell.rule, a, b});
        }
    }
    return violations;
}

const char* to_string(ResidueClass rc) {
    switch (rc) {
        case ResidueClass::six_k: return "6k";
        case ResidueClass::six_k_pm1: return "6k+-1";
        case ResidueClass::six_k_pm2: return "6k+-2";
        case ResidueClass::six_k_plus3: return "6k+3";
    }
    return "?";
}

const char* to_string(ConjectureMatch m) {
    switch (m) {
        case ConjectureMatch::match: return "match";
        case ConjectureMatch::mismatch: return "mismatch";
        case ConjectureMatch::partial: return "partial";
        case ConjectureMatch::out_of_domain: return "out-of-domain";
    }
    return "?";
}

ResidueClass residue_class(unsigned n) {
    switch (n % 6) {
        case 0: return ResidueClass::six_k;
        case 1:
        case 5: return ResidueClass::six_k_pm1;
        case 2:
        case 4: return ResidueClass::six_k_pm2;
        default: return ResidueClass::six_k_plus3;
    }
}

std::set<unsigned> conjectured_rules(unsigned n) {
    if (n < 4) {
        return {};
    }
    switch (residue_class(n)) {
        case ResidueClass::six_k_pm2: return {150, 170, 204, 240};
        case ResidueClass::six_k_pm1: return {150, 154, 166, 170, 180, 204, 210, 240};
        case ResidueClass::six_k_plus3: return {154, 166, 170, 180, 204, 210, 240};
        case ResidueClass::six_k: return {170, 204, 240};
    }
    return {};
}

ConjectureVerdict conjecture_eval(unsigned n, const ScanReport* report, const ConjectureOptions& options) {
    if (n < kMinLength) {
        throw std::invalid_argument("lattice length must be at least 3");
    }
    ConjectureVerdict v;
    v.n = n;
    v.residue = residue_class(n);
    v.expected = conjectured_rules(n);

    std::set<unsigned> decided;
    auto record = [&](unsigned rule, bool forms) {
        decided.insert(rule);
        if (forms) {
            v.computed.insert(rule);
        }
    };

    bool covered = false;
    if (report != nullptr && !options.affine_only) {
        covered = true;
        for (unsigned r = 128; r <= 255 && covered; ++r) {
            const ScanCell* c = report->find(n, r);
            covered = c != nullptr && c->status != CellStatus::skipped;
        }
        if (covered) {
            for (unsigned r = 128; r <= 255; ++r) {
                record(r, report->find(n, r)->status == CellStatus::forms_qca);
            }
            v.note = "from supplied report";
        }
    }
    if (!covered) {
        if (options.affine_only) {
            for (unsigned r = 128; r <= 255; ++r) {
                if (const auto form = affine_analyze(rule_from_number(r))) {
                    record(r, affine_bijective(*form, n));
                }
            }
            v.note = "affine rules decided by circulant rank over GF(2); others not evaluated";
        } else {
            if (n > 63 || (ConfigIndex{1} << n) > options.budget) {
                throw ResourceLimit("exhaustive check at n=" + std::to_string(n) +
                                    " exceeds the budget; use the affine-only mode");
            }
            ScanRequest req;
            req.n_min = req.n_max = n;
            req.r_min = 128;
            req.r_max = 255;
            req.budget = options.budget;
            req.parallelism = options.parallelism;
            req.record_timing = false;
            const ScanReport fresh = scan(req);
            for (const ScanCell& c : fresh.cells) {
                record(c.rule, c.status == CellStatus::forms_qca);
            }
            v.note = "exhaustive scan";
        }
    }

    for (unsigned r = 128; r <= 255; ++r) {
        if (!decided.contains(r)) {
            v.undecided.insert(r);
        }
    }
    bool agrees = true;
    for (unsigned r : decided) {
        agrees = agrees && (v.expected.contains(r) == v.computed.contains(r));
    }
    if (n < 4) {
        // 6k+3 with k >= 1 starts at 9; n = 3 lies outside the table.
        v.match = ConjectureMatch::out_of_domain;
    } else if (!agrees) {
        v.match = ConjectureMatch::mismatch;
    } else if (!v.undecided.empty()) {
        v.match = ConjectureMatch::partial;
    } else {
        v.match = ConjectureMatch::match;
    }
    return v;
}

}  // namespace qca
