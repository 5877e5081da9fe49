#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <algorithm>
#include <string>

namespace fs = std::filesystem;

namespace {

const fs::path work = fs::path(ZETALAB_WORK_DIR) / "cli";

int run(const std::string& args) {
    std::string cmd = std::string(ZETALAB_CLI_PATH) + " " + args +
                      " > " + (work / "stdout.txt").string() + " 2>&1";
    int rc = std::system(cmd.c_str());
    return WEXITSTATUS(rc);
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    return std::string((std::istreambuf_iterator<char>(in)), {});
}

std::string out_dir_flag() { return "--out-dir " + work.string(); }

}  // namespace

TEST_CASE("find-zeros writes a verified cache and is idempotent") {
    fs::create_directories(work);
    REQUIRE(run(out_dir_flag() + " find-zeros --from 10 --to 1000") == 0);
    auto cache = work / "zeros.ztab";
    REQUIRE(fs::exists(cache));
    std::string first = slurp(cache);
    std::string first_csv = slurp(work / "zeros.ztab.csv");
    CHECK(first.size() == 40 + 8 * 649);  // N(1000) = 649

    REQUIRE(run(out_dir_flag() + " find-zeros --from 10 --to 1000") == 0);
    CHECK(slurp(cache) == first);
    CHECK(slurp(work / "zeros.ztab.csv") == first_csv);
}

TEST_CASE("find-zeros on an empty range exits 0") {
    REQUIRE(run(out_dir_flag() +
                " find-zeros --from 10 --to 14 --out empty.ztab") == 0);
    CHECK(slurp(work / "empty.ztab").size() == 40);
}

TEST_CASE("import-zeros skips headers and caches") {
    auto input = work / "import_input.txt";
    std::ofstream(input) << "# header\n14.134725141734694\n21.022039638771555\n";
    REQUIRE(run(out_dir_flag() + " import-zeros --in " + input.string() +
                " --skip 1 --out imported.ztab") == 0);
    CHECK(slurp(work / "imported.ztab").size() == 40 + 16);
}

TEST_CASE("import errors exit 4") {
    CHECK(run(out_dir_flag() + " import-zeros --in " +
              (work / "nonexistent.txt").string()) == 4);
    auto bad = work / "bad.txt";
    std::ofstream(bad) << "14.13\n13.0\n";
    CHECK(run(out_dir_flag() + " import-zeros --in " + bad.string()) == 4);
}

TEST_CASE("verify-ef over a small grid is deterministic") {
    std::string cache = (work / "zeros.ztab").string();
    std::string cmd = "--cache " + cache + " " + out_dir_flag() +
                      " verify-ef --t 100,300 --L 1,2 --delta 1";
    REQUIRE(run(cmd) == 0);
    std::string first = slurp(work / "explicit_formula.csv");
    CHECK(first.find("t,L,delta,sign,zero_side") == 0);
    REQUIRE(run(cmd) == 0);
    CHECK(slurp(work / "explicit_formula.csv") == first);
}

TEST_CASE("verify-ef sign filter restricts rows") {
    std::string cache = (work / "zeros.ztab").string();
    REQUIRE(run("--cache " + cache + " " + out_dir_flag() +
                " verify-ef --t 100 --L 1 --delta 1 --sign minus --out minus.csv") == 0);
    std::string csv = slurp(work / "minus.csv");
    CHECK(csv.find(",minus,") != std::string::npos);
    CHECK(csv.find(",plus,") == std::string::npos);
}

TEST_CASE("verify-ef fault injection trips the budget (exit 3)") {
    std::string cache = (work / "zeros.ztab").string();
    CHECK(run("--cache " + cache + " " + out_dir_flag() +
              " verify-ef --t 100 --L 2 --delta 1 --delete-zero 98.8") == 3);
}

TEST_CASE("verify-ef guards the parameter regime (exit 2)") {
    std::string cache = (work / "zeros.ztab").string();
    CHECK(run("--cache " + cache + " " + out_dir_flag() +
              " verify-ef --t 100 --L 1 --delta 0.5") == 2);
    CHECK(run("--cache " + cache + " " + out_dir_flag() +
              " verify-ef --t 100 --L 25 --delta 1") == 2);
}

TEST_CASE("scan rejects h beyond sqrt(t) (exit 2)") {
    REQUIRE(run(out_dir_flag() +
                " find-zeros --from 10 --to 1040 --out tall.ztab") == 0);
    std::string cache = (work / "tall.ztab").string();
    CHECK(run("--cache " + cache + " " + out_dir_flag() +
              " scan theorem1 --t 1000 --h 1,5,31.7") == 2);
    CHECK(run("--cache " + cache + " " + out_dir_flag() +
              " scan theorem1 --t 1000 --h 1,5,31.6") == 0);
    // three rows: header + 3 lines
    std::string csv = slurp(work / "theorem1.csv");
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 4);
}

TEST_CASE("scan outputs csv, summary, and plot script") {
    std::string cache = (work / "zeros.ztab").string();
    REQUIRE(run("--cache " + cache + " " + out_dir_flag() + " scan gaps") == 0);
    CHECK(fs::exists(work / "gaps.csv"));
    CHECK(fs::exists(work / "gaps.summary.txt"));
    CHECK(fs::exists(work / "gaps.gnuplot"));
    std::string summary = slurp(work / "gaps.summary.txt");
    CHECK(summary.find("max_ratio:") != std::string::npos);
    std::string plot = slurp(work / "gaps.gnuplot");
    CHECK(plot.find("gaps.csv") != std::string::npos);

    REQUIRE(run("--cache " + cache + " " + out_dir_flag() +
                " scan s-extrema --from 10 --to 900") == 0);
    CHECK(fs::exists(work / "s_samples.csv"));
    CHECK(fs::exists(work / "s_extrema.summary.txt"));
}

TEST_CASE("config file options are honored with flag override") {
    auto conf = work / "lab.ini";
    std::ofstream(conf) << "out-dir = " << work.string() << "\n"
                        << "cache = " << (work / "zeros.ztab").string() << "\n";
    REQUIRE(run("--config " + conf.string() + " scan gaps") == 0);
    // flag overrides the config value
    auto other = work / "override";
    REQUIRE(run("--config " + conf.string() + " --out-dir " + other.string() +
                " scan gaps") == 0);
    CHECK(fs::exists(other / "gaps.csv"));
}

TEST_CASE("missing table is a precondition error") {
    CHECK(run(out_dir_flag() + " scan gaps") == 2);
}
