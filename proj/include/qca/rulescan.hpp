#pragma once

// Enumeration campaigns over (lattice length, elementary rule) grids.

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "qca/lattice.hpp"
#include "qca/reversibility.hpp"

namespace qca {

inline constexpr const char* kToolVersion = "1.0.0";

struct ScanRequest {
    unsigned n_min = 3;
    unsigned n_max = 22;
    unsigned r_min = 128;
    unsigned r_max = 255;
    ConfigIndex budget = kDefaultBudget;
    // 0 selects std::thread::hardware_concurrency().
    unsigned parallelism = 0;
    bool record_timing = true;

    // Throws std::invalid_argument unless 3 <= n_min <= n_max <= 63 and
    // r_min <= r_max <= 255.
    void validate() const;
};

enum class CellStatus { forms_qca, not_qca, skipped };

const char* to_string(CellStatus status);
CellStatus cell_status_from_string(const std::string& text);

struct ScanCell {
    unsigned n = 0;
    unsigned rule = 0;
    CellStatus status = CellStatus::skipped;
    std::uint64_t elapsed_us = 0;
    std::optional<std::pair<ConfigIndex, ConfigIndex>> witness;

    friend bool operator==(const ScanCell&, const ScanCell&) = default;
};

struct ScanMetadata {
    std::string tool_version = kToolVersion;
    // ISO-8601 UTC; empty when timing is suppressed.
    std::string timestamp;
    ConfigIndex budget = kDefaultBudget;
    unsigned n_min = 0, n_max = 0, r_min = 0, r_max = 0;

    friend bool operator==(const ScanMetadata&, const ScanMetadata&) = default;
};

struct ScanReport {
    ScanMetadata metadata;
    // Sorted by (n, rule); one entry per requested cell.
    std::vector<ScanCell> cells;

    // Ascending forming rules per n, derived from `cells`.
    std::map<unsigned, std::vector<unsigned>> forming() const;
    const ScanCell* find(unsigned n, unsigned rule) const;

    friend bool operator==(const ScanReport&, const ScanReport&) = default;
};

// Verdicts depend only on (n, R); worker count never changes the result.
ScanReport scan(const ScanRequest& request);

struct SymmetryViolation {
    unsigned n;
    unsigned rule;       // R < 255 - R
    bool forms;          // verdict for R
    bool complement_forms;
};

// Throws std::invalid_argument when some R is present without 255 - R, or a
// needed cell was skipped.
std::vector<SymmetryViolation> symmetry_check(const ScanReport& report);

enum class ResidueClass { six_k, six_k_pm1, six_k_pm2, six_k_plus3 };
enum class ConjectureMatch { match, mismatch, partial, out_of_domain };

const char* to_string(ResidueClass rc);
const char* to_string(ConjectureMatch m);

ResidueClass residue_class(unsigned n);
// Rules in [128, 255] the residue-class table predicts for n. The table is
// stated for k >= 1, so n = 3 yields an empty set.
std::set<unsigned> conjectured_rules(unsigned n);

struct ConjectureVerdict {
    unsigned n = 0;
    ResidueClass residue = ResidueClass::six_k;
    std::set<unsigned> expected;
    std::set<unsigned> computed;
    // Rules in [128, 255] whose verdict could not be computed.
    std::set<unsigned> undecided;
    ConjectureMatch match = ConjectureMatch::partial;
    std::string note;
};

struct ConjectureOptions {
    ConfigIndex budget = kDefaultBudget;
    // Decide only the GF(2)-affine rules, through circulant rank. Never
    // exhaustive; the remaining rules are reported as undecided.
    bool affine_only = false;
    unsigned parallelism = 0;
};

// Compares the computed forming set in [128, 255] with the prediction. Uses
// `report` when it covers n over [128, 255]; otherwise scans afresh. Throws
// ResourceLimit when 2^n exceeds the budget and affine_only is not set.
ConjectureVerdict conjecture_eval(unsigned n, const ScanReport* report = nullptr,
                                  const ConjectureOptions& options = {});

enum class ReportFormat { csv, json };

ReportFormat report_format_from_string(const std::string& tag);

// CSV carries the cells only (header `n,rule,forms_qca,elapsed_us,witness_a,witness_b`);
// JSON carries metadata, cells and per-n forming lists.
std::string export_report(const ScanReport& report, ReportFormat format);
ScanReport import_report(const std::string& text, ReportFormat format);

}  // namespace qca
