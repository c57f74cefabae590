#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <sys/wait.h>

#include "json.hpp"

#include "blendsim/csv_io.hpp"
#include "blendsim/presets.hpp"

using namespace blendsim;
namespace fs = std::filesystem;

namespace {

const fs::path kWork = fs::temp_directory_path() / "blendsim_test_cli";

int run_cli(const std::string& args, const fs::path& stdout_file = {},
            const fs::path& stderr_file = {}) {
    std::string cmd = std::string(BLENDSIM_BIN) + " " + args;
    if (!stdout_file.empty()) {
        cmd += " > " + stdout_file.string();
    }
    if (!stderr_file.empty()) {
        cmd += " 2> " + stderr_file.string();
    }
    const int rc = std::system(cmd.c_str());
    REQUIRE(rc != -1);
    return WEXITSTATUS(rc);
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    REQUIRE(in.good());
    std::stringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

std::string paper_default_path() {
    return std::string(BLENDSIM_SCENARIO_DIR) + "/paper-default.json";
}

double table_value(const fs::path& csv, const std::string& column, int year) {
    const auto table = load_table(csv);
    return table.column(column)[static_cast<std::size_t>(year - table.start_year)];
}

std::string strip_timestamp(const std::string& manifest_text) {
    auto j = nlohmann::json::parse(manifest_text);
    j.erase("timestamp");
    return j.dump();
}

}  // namespace

TEST_CASE("validate: OK on the bundled preset, exit 2 otherwise") {
    fs::create_directories(kWork);
    const auto out = kWork / "validate_out.txt";

    CHECK(run_cli("validate --config " + paper_default_path(), out) == 0);
    CHECK(slurp(out).find("OK") != std::string::npos);

    // preset by name works too, as does a path without the extension
    CHECK(run_cli("validate --config paper-default", out) == 0);
    const std::string no_ext = std::string(BLENDSIM_SCENARIO_DIR) + "/paper-default";
    CHECK(run_cli("validate --config " + no_ext, out) == 0);

    CHECK(run_cli("validate --config /nonexistent/cfg.json", out, kWork / "e1.txt") == 2);

    const auto bad = kWork / "bad.json";
    std::ofstream(bad) << R"({"adoption": {"curves": {"E15":
        {"anchors": [[2023, 0.01], [2035, 0.25]], "ceiling": 1.5}}}})";
    const auto err = kWork / "e2.txt";
    CHECK(run_cli("validate --config " + bad.string(), out, err) == 2);
    const auto diagnostics = slurp(err);
    CHECK(diagnostics.find("adoption.curves.E15.ceiling") != std::string::npos);
    CHECK(diagnostics.find("1.5") != std::string::npos);
}

TEST_CASE("usage errors exit 2") {
    CHECK(run_cli("run --nonsense", kWork / "u1.txt", kWork / "u2.txt") == 2);
    CHECK(run_cli("", kWork / "u1.txt", kWork / "u2.txt") == 2);
}

TEST_CASE("run: writes tables whose 2035 shares match the published anchors") {
    const auto out_dir = kWork / "run1";
    fs::remove_all(out_dir);
    CHECK(run_cli("run --config " + paper_default_path() + " --out " + out_dir.string(),
                  kWork / "r1.txt", kWork / "r1e.txt") == 0);
    for (const char* name :
         {"shares.csv", "volumes.csv", "supply.csv", "carbon.csv", "economics.csv",
          "manifest.json"}) {
        CHECK_MESSAGE(fs::exists(out_dir / name), name);
    }
    // rescale mode squeezes the overflowing anchors by 0.99/1.01
    CHECK(table_value(out_dir / "shares.csv", "E15", 2035) == doctest::Approx(0.25).epsilon(0.04));
    CHECK(table_value(out_dir / "shares.csv", "E15", 2035) == doctest::Approx(0.245).epsilon(1e-3));
    const double row_sum = table_value(out_dir / "shares.csv", "E15", 2035) +
                           table_value(out_dir / "shares.csv", "E30", 2035) +
                           table_value(out_dir / "shares.csv", "E85", 2035) +
                           table_value(out_dir / "shares.csv", "EV", 2035) +
                           table_value(out_dir / "shares.csv", "H2", 2035) +
                           table_value(out_dir / "shares.csv", "E10", 2035) +
                           table_value(out_dir / "shares.csv", "GASOLINE", 2035);
    CHECK(row_sum == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("strict-band mode drops the 2028 45V credit") {
    const auto base_dir = kWork / "run_base";
    const auto band_dir = kWork / "run_band";
    fs::remove_all(base_dir);
    fs::remove_all(band_dir);
    REQUIRE(run_cli("run --config " + paper_default_path() + " --out " + base_dir.string(),
                    kWork / "rb.txt", kWork / "rbe.txt") == 0);
    REQUIRE(run_cli("run --config " + paper_default_path() + " --mode strict-band --out " +
                        band_dir.string(),
                    kWork / "rs.txt", kWork / "rse.txt") == 0);
    const double msw = table_value(base_dir / "supply.csv", "msw_supply_mgal", 2028);
    const double corn = table_value(base_dir / "supply.csv", "corn_import_mgal", 2028);
    const double rev_base = table_value(base_dir / "economics.csv", "investor_revenue_usd", 2028);
    const double rev_band = table_value(band_dir / "economics.csv", "investor_revenue_usd", 2028);
    // 1.50 vs 0.75 USD/gal on the local gallons (2028 CI ~51 sits outside the band)
    CHECK(rev_base == doctest::Approx(msw * 1e6 * 1.50 + corn * 1e6 * 0.56));
    CHECK(rev_band == doctest::Approx(msw * 1e6 * 0.75 + corn * 1e6 * 0.56));
}

TEST_CASE("formula-ci mode swaps the published table for the mixing formula") {
    const auto dir = kWork / "run_formula";
    fs::remove_all(dir);
    REQUIRE(run_cli("run --config " + paper_default_path() + " --mode formula-ci --out " +
                        dir.string(),
                    kWork / "rf.txt", kWork / "rfe.txt") == 0);
    // 2024 ethanol pool is all corn at 58.3; energy-weighted E85 CI lands at
    // 65.4 instead of the table's 58.3
    const double f = 0.85 * 80.5 / (0.85 * 80.5 + 0.15 * 122.5);
    CHECK(table_value(dir / "carbon.csv", "ci_E85", 2024) ==
          doctest::Approx(f * 58.3 + (1.0 - f) * 92.0));
    const auto manifest = slurp(dir / "manifest.json");
    CHECK(manifest.find("carbon=formula") != std::string::npos);
}

TEST_CASE("rerun produces byte-identical CSVs; only the manifest timestamp moves") {
    const auto dir_a = kWork / "det_a";
    const auto dir_b = kWork / "det_b";
    fs::remove_all(dir_a);
    fs::remove_all(dir_b);
    REQUIRE(run_cli("run --config " + paper_default_path() + " --out " + dir_a.string(),
                    kWork / "da.txt", kWork / "dae.txt") == 0);
    REQUIRE(run_cli("run --config " + paper_default_path() + " --out " + dir_b.string(),
                    kWork / "db.txt", kWork / "dbe.txt") == 0);
    for (const char* name : {"shares.csv", "volumes.csv", "supply.csv", "carbon.csv",
                             "economics.csv"}) {
        CHECK(slurp(dir_a / name) == slurp(dir_b / name));
    }
    CHECK(strip_timestamp(slurp(dir_a / "manifest.json")) ==
          strip_timestamp(slurp(dir_b / "manifest.json")));
}

TEST_CASE("mc: same seed gives identical band CSVs, different seed does not") {
    const auto dir_a = kWork / "mc_a";
    const auto dir_b = kWork / "mc_b";
    const auto dir_c = kWork / "mc_c";
    for (const auto& d : {dir_a, dir_b, dir_c}) {
        fs::remove_all(d);
    }
    const std::string base_cmd =
        "mc --config " + paper_default_path() + " --runs 50 --jobs 2 ";
    REQUIRE(run_cli(base_cmd + "--seed 7 --out " + dir_a.string(), kWork / "ma.txt",
                    kWork / "mae.txt") == 0);
    REQUIRE(run_cli(base_cmd + "--seed 7 --out " + dir_b.string(), kWork / "mb.txt",
                    kWork / "mbe.txt") == 0);
    REQUIRE(run_cli(base_cmd + "--seed 8 --out " + dir_c.string(), kWork / "mc.txt",
                    kWork / "mce.txt") == 0);
    CHECK(slurp(dir_a / "mc_economics.csv") == slurp(dir_b / "mc_economics.csv"));
    CHECK(slurp(dir_a / "mc_economics.csv") != slurp(dir_c / "mc_economics.csv"));
    CHECK(slurp(dir_a / "mc_carbon.csv") == slurp(dir_b / "mc_carbon.csv"));
}

TEST_CASE("mc with one run and no spreads equals the point run") {
    // a config without distributions: bands collapse onto the single run
    auto j = nlohmann::json::parse(*preset_text("paper-default"));
    j["mc"]["distributions"] = nlohmann::json::array();
    const auto cfg = kWork / "nodist.json";
    std::ofstream(cfg) << j.dump(2);

    const auto point_dir = kWork / "point";
    const auto band_dir = kWork / "band1";
    fs::remove_all(point_dir);
    fs::remove_all(band_dir);
    REQUIRE(run_cli("run --config " + cfg.string() + " --out " + point_dir.string(),
                    kWork / "p.txt", kWork / "pe.txt") == 0);
    REQUIRE(run_cli("mc --config " + cfg.string() + " --runs 1 --out " + band_dir.string(),
                    kWork / "b.txt", kWork / "be.txt") == 0);
    for (int year : {2024, 2030, 2035}) {
        const double point =
            table_value(point_dir / "economics.csv", "investor_revenue_usd", year);
        for (const char* col : {"investor_revenue_usd_p5", "investor_revenue_usd_p50",
                                "investor_revenue_usd_p95"}) {
            CHECK(table_value(band_dir / "mc_economics.csv", col, year) ==
                  doctest::Approx(point).epsilon(1e-12));
        }
    }
}

TEST_CASE("an unwritable output directory exits 1, not a crash") {
    const auto blocker = kWork / "blocker";
    std::ofstream(blocker) << "x";  // a file where the out dir should go
    const int rc = run_cli("run --config " + paper_default_path() + " --out " +
                               (blocker / "sub").string(),
                           kWork / "uw.txt", kWork / "uwe.txt");
    CHECK(rc == 1);
}

TEST_CASE("engine failures exit 1 with step context") {
    auto j = nlohmann::json::parse(*preset_text("paper-default"));
    j["adoption"]["mode"] = "strict";  // published anchors overflow in 2035
    const auto cfg = kWork / "strict_overflow.json";
    std::ofstream(cfg) << j.dump(2);
    const auto err = kWork / "fail_err.txt";
    CHECK(run_cli("run --config " + cfg.string() + " --out " + (kWork / "fail_out").string(),
                  kWork / "fail.txt", err) == 1);
    const auto msg = slurp(err);
    CHECK(msg.find("adoption") != std::string::npos);
}

TEST_CASE("BLENDSIM_NO_COLOR is accepted") {
    const auto out = kWork / "nocolor.txt";
    const std::string cmd = std::string("BLENDSIM_NO_COLOR=1 ") + BLENDSIM_BIN +
                            " validate --config " + paper_default_path() + " > " + out.string();
    const int rc = std::system(cmd.c_str());
    REQUIRE(rc != -1);
    CHECK(WEXITSTATUS(rc) == 0);
    CHECK(slurp(out).find("OK") != std::string::npos);
}

TEST_CASE("presets list names both bundled scenarios") {
    const auto out = kWork / "presets.txt";
    CHECK(run_cli("presets list", out) == 0);
    const auto text = slurp(out);
    CHECK(text.find("paper-default") != std::string::npos);
    CHECK(text.find("strict") != std::string::npos);
}

TEST_CASE("band CSVs parse back through the table reader") {
    const auto dir = kWork / "mc_parse";
    fs::remove_all(dir);
    REQUIRE(run_cli("mc --config " + paper_default_path() + " --runs 20 --seed 3 --out " +
                        dir.string(),
                    kWork / "mp.txt", kWork / "mpe.txt") == 0);
    for (const char* name : {"mc_shares.csv", "mc_volumes.csv", "mc_supply.csv",
                             "mc_carbon.csv", "mc_economics.csv"}) {
        const auto table = load_table(dir / name);
        CHECK(table.start_year == 2024);
        CHECK(!table.columns.empty());
        // usd puts no range constraint on the parsed values
        const auto series = series_from_table(table, table.columns.front(), Unit::usd);
        CHECK(series.size() == 12);
    }
}
