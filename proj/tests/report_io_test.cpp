#include <gtest/gtest.h>

#include <random>

#include "json.hpp"
#include "qca/rulescan.hpp"

using namespace qca;

namespace {

ScanReport random_report(std::mt19937_64& rng) {
    ScanReport r;
    std::uniform_int_distribution<unsigned> pick_n(3, 40), pick_rule(0, 255), pick_status(0, 2);
    std::uniform_int_distribution<std::uint64_t> pick_u64;
    std::set<std::pair<unsigned, unsigned>> used;
    const int cells = 1 + static_cast<int>(rng() % 30);
    for (int i = 0; i < cells; ++i) {
        const auto key = std::pair{pick_n(rng), pick_rule(rng)};
        if (!used.insert(key).second) continue;
        ScanCell c{key.first, key.second, static_cast<CellStatus>(pick_status(rng)), pick_u64(rng) >> 20, std::nullopt};
        if (c.status == CellStatus::not_qca) c.witness = std::pair{pick_u64(rng), pick_u64(rng)};
        r.cells.push_back(c);
    }
    std::sort(r.cells.begin(), r.cells.end(),
              [](const ScanCell& a, const ScanCell& b) { return std::pair{a.n, a.rule} < std::pair{b.n, b.rule}; });
    r.metadata.timestamp = "2026-01-02T03:04:05Z";
    r.metadata.budget = pick_u64(rng);
    r.metadata.n_min = r.cells.front().n;
    r.metadata.n_max = r.cells.back().n;
    r.metadata.r_min = 0;
    r.metadata.r_max = 255;
    return r;
}

}  // namespace

TEST(ExportReport, OneCellCsv) {
    ScanReport r;
    r.cells.push_back({4, 204, CellStatus::forms_qca, 17, std::nullopt});
    r.cells.push_back({6, 150, CellStatus::not_qca, 3, std::pair<ConfigIndex, ConfigIndex>{11, 16}});
    r.cells.push_back({30, 1, CellStatus::skipped, 0, std::nullopt});
    EXPECT_EQ(export_report(r, ReportFormat::csv),
              "n,rule,forms_qca,elapsed_us,witness_a,witness_b\n"
              "4,204,true,17,,\n"
              "6,150,false,3,11,16\n"
              "30,1,skipped,0,,\n");
}

TEST(ExportReport, ScanRoundTrips) {
    ScanRequest req;
    req.n_min = 3;
    req.n_max = 5;
    const ScanReport report = scan(req);
    ASSERT_EQ(report.cells.size(), 3u * 128u);

    const ScanReport via_json = import_report(export_report(report, ReportFormat::json), ReportFormat::json);
    EXPECT_EQ(via_json, report);
    const ScanReport via_csv = import_report(export_report(report, ReportFormat::csv), ReportFormat::csv);
    EXPECT_EQ(via_csv.cells, report.cells);
    EXPECT_EQ(via_csv.forming(), report.forming());
}

TEST(ExportReport, JsonFormingList) {
    ScanRequest req;
    req.n_min = req.n_max = 5;
    const auto doc = nlohmann::json::parse(export_report(scan(req), ReportFormat::json));
    EXPECT_EQ(doc["forming"]["5"].get<std::vector<unsigned>>(),
              (std::vector<unsigned>{150, 154, 166, 170, 180, 204, 210, 240}));
    EXPECT_EQ(doc["metadata"]["version"], kToolVersion);
}

TEST(ExportReport, RandomReportsRoundTrip) {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 200; ++trial) {
        const ScanReport r = random_report(rng);
        ASSERT_EQ(import_report(export_report(r, ReportFormat::json), ReportFormat::json), r);
        ASSERT_EQ(import_report(export_report(r, ReportFormat::csv), ReportFormat::csv).cells, r.cells);
    }
}

TEST(ExportReport, RejectsBadInput) {
    EXPECT_THROW(report_format_from_string("xml"), std::invalid_argument);
    EXPECT_THROW(import_report("n,rule\n", ReportFormat::csv), std::invalid_argument);
    EXPECT_THROW(import_report("n,rule,forms_qca,elapsed_us,witness_a,witness_b\n4,204,maybe,0,,\n", ReportFormat::csv),
                 std::invalid_argument);
    EXPECT_THROW(import_report("n,rule,forms_qca,elapsed_us,witness_a,witness_b\n4,204,false,0,3,\n", ReportFormat::csv),
                 std::invalid_argument);

    ScanReport r;
    r.cells.push_back({4, 204, CellStatus::forms_qca, 0, std::nullopt});
    auto doc = nlohmann::json::parse(export_report(r, ReportFormat::json));
    doc["forming"]["4"] = nlohmann::json::array();
    EXPECT_THROW(import_report(doc.dump(), ReportFormat::json), std::invalid_argument);
}
