#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <string>

#include "json.hpp"
#include "qca/rulescan.hpp"

namespace qca {

namespace {

using nlohmann::json;

constexpr const char* kCsvHeader = "n,rule,forms_qca,elapsed_us,witness_a,witness_b";

std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> parts;
    std::string field;
    std::istringstream in(line);
    while (std::getline(in, field, sep)) {
        parts.push_back(field);
    }
    if (!line.empty() && line.back() == sep) {
        parts.emplace_back();
    }
    return parts;
}

std::uint64_t parse_u64(const std::string& text, const char* what) {
    std::size_t used = 0;
    unsigned long long v = 0;
    try {
        v = std::stoull(text, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (text.empty() || used != text.size() || text.front() == '-') {
        throw std::invalid_argument(std::string("bad ") + what + " field '" + text + "'");
    }
    return v;
}

void fill_ranges(ScanReport& report) {
    if (report.cells.empty()) {
        return;
    }
    auto& m = report.metadata;
    m.n_min = m.n_max = report.cells.front().n;
    m.r_min = m.r_max = report.cells.front().rule;
    for (const ScanCell& c : report.cells) {
        m.n_min = std::min(m.n_min, c.n);
        m.n_max = std::max(m.n_max, c.n);
        m.r_min = std::min(m.r_min, c.rule);
        m.r_max = std::max(m.r_max, c.rule);
    }
}

void sort_cells(ScanReport& report) {
    std::sort(report.cells.begin(), report.cells.end(), [](const ScanCell& a, const ScanCell& b) {
        return std::pair{a.n, a.rule} < std::pair{b.n, b.rule};
    });
}

std::string to_csv(const ScanReport& report) {
    std::ostringstream out;
    out << kCsvHeader << '\n';
    for (const ScanCell& c : report.cells) {
        out << c.n << ',' << c.rule << ',' << to_string(c.status) << ',' << c.elapsed_us << ',';
        if (c.witness) {
            out << c.witness->first << ',' << c.witness->second;
        } else {
            out << ',';
        }
        out << '\n';
    }
    return out.str();
}

ScanReport from_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || line != kCsvHeader) {
        throw std::invalid_argument("CSV report must start with header '" + std::string(kCsvHeader) + "'");
    }
    ScanReport report;
    while (std::getline(in, line)) {
        if (line.empty()) {
            continue;
        }
        const auto f = split(line, ',');
        if (f.size() != 6) {
            throw std::invalid_argument("CSV row needs 6 fields: '" + line + "'");
        }
        ScanCell c;
        c.n = static_cast<unsigned>(parse_u64(f[0], "n"));
        c.rule = static_cast<unsigned>(parse_u64(f[1], "rule"));
        c.status = cell_status_from_string(f[2]);
        c.elapsed_us = parse_u64(f[3], "elapsed_us");
        if (f[4].empty() != f[5].empty()) {
            throw std::invalid_argument("CSV row has half a witness: '" + line + "'");
        }
        if (!f[4].empty()) {
            c.witness = std::pair{parse_u64(f[4], "witness_a"), parse_u64(f[5], "witness_b")};
        }
        report.cells.push_back(c);
    }
    sort_cells(report);
    fill_ranges(report);
    return report;
}

std::string to_json(const ScanReport& report) {
    json cells = json::array();
    for (const ScanCell& c : report.cells) {
        json cell = {{"n", c.n}, {"rule", c.rule}, {"elapsed_us", c.elapsed_us}};
        cell["forms_qca"] = c.status == CellStatus::skipped ? json(nullptr) : json(c.status == CellStatus::forms_qca);
        cell["witness"] = c.witness ? json::array({c.witness->first, c.witness->second}) : json(nullptr);
        cells.push_back(std::move(cell));
    }
    json forming = json::object();
    for (const auto& [n, rules] : report.forming()) {
        forming[std::to_string(n)] = rules;
    }
    const auto& m = report.metadata;
    json doc = {
        {"metadata",
         {{"tool", "qca"},
          {"version", m.tool_version},
          {"timestamp", m.timestamp},
          {"budget", m.budget},
          {"sizes", {m.n_min, m.n_max}},
          {"rules", {m.r_min, m.r_max}}}},
        {"cells", std::move(cells)},
        {"forming", std::move(forming)},
    };
    return doc.dump(2) + "\n";
}

ScanReport from_json(const std::string& text) {
    const json doc = json::parse(text);
    ScanReport report;
    const json& m = doc.at("metadata");
    report.metadata.tool_version = m.at("version").get<std::string>();
    report.metadata.timestamp = m.at("timestamp").get<std::string>();
    report.metadata.budget = m.at("budget").get<ConfigIndex>();
    report.metadata.n_min = m.at("sizes").at(0).get<unsigned>();
    report.metadata.n_max = m.at("sizes").at(1).get<unsigned>();
    report.metadata.r_min = m.at("rules").at(0).get<unsigned>();
    report.metadata.r_max = m.at("rules").at(1).get<unsigned>();
    for (const json& jc : doc.at("cells")) {
        ScanCell c;
        c.n = jc.at("n").get<unsigned>();
        c.rule = jc.at("rule").get<unsigned>();
        c.elapsed_us = jc.at("elapsed_us").get<std::uint64_t>();
        const json& f = jc.at("forms_qca");
        c.status = f.is_null() ? CellStatus::skipped : (f.get<bool>() ? CellStatus::forms_qca : CellStatus::not_qca);
        const json& w = jc.at("witness");
        if (!w.is_null()) {
            c.witness = std::pair{w.at(0).get<ConfigIndex>(), w.at(1).get<ConfigIndex>()};
        }
        report.cells.push_back(c);
    }
    sort_cells(report);
    if (doc.contains("forming")) {
        for (const auto& [n, rules] : report.forming()) {
            const auto key = std::to_string(n);
            if (!doc["forming"].contains(key) || doc["forming"][key].get<std::vector<unsigned>>() != rules) {
                throw std::invalid_argument("JSON forming list for n=" + key + " disagrees with its cells");
            }
        }
    }
    return report;
}

}  // namespace

ReportFormat report_format_from_string(const std::string& tag) {
    if (tag == "csv") return ReportFormat::csv;
    if (tag == "json") return ReportFormat::json;
    throw std::invalid_argument("unsupported report format '" + tag + "' (expected csv or json)");
}

std::string export_report(const ScanReport& report, ReportFormat format) {
    return format == ReportFormat::csv ? to_csv(report) : to_json(report);
}

ScanReport import_report(const std::string& text, ReportFormat format) {
    return format == ReportFormat::csv ? from_csv(text) : from_json(text);
}

}  // namespace qca
