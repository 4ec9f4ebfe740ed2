#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "saw/bounds.hpp"
#include "saw/census.hpp"
#include "saw/cli.hpp"
#include "saw/numeric.hpp"
#include "saw/table_io.hpp"
#include "saw/verify.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

using namespace saw;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::dispatch(args, out, err);
    return {code, out.str(), err.str()};
}

fs::path workdir() {
    static const fs::path dir = [] {
        fs::path p = fs::temp_directory_path() / "saw_cli_test";
        fs::remove_all(p);
        fs::create_directories(p);
        return p;
    }();
    return dir;
}

std::string path(const std::string& name) { return (workdir() / name).string(); }

std::string slurp(const std::string& file) {
    std::ifstream in(file, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), {}};
}

Table read_table(const std::string& file) {
    std::ifstream in(file);
    return read_csv(in);
}

std::string census12() {
    static const std::string p = [] {
        const std::string out = path("c12.saw");
        REQUIRE(run({"census", "-d", "2", "-N", "12", "-j", "2", "-o", out}).code == cli::kExitOk);
        return out;
    }();
    return p;
}

}  // namespace

TEST_CASE("census then mu") {
    const Census c = load_census(census12());
    CHECK(c == enumerate_census(LatticeDim(2), 12));
    const Run mu = run({"mu", census12()});
    CHECK(mu.code == cli::kExitOk);
    CHECK(mu.out.find("mu_low") != std::string::npos);
    const MuBracket br = mu_bracket(c);
    CHECK(mu.out.find(format_double(br.mu_low)) != std::string::npos);
    CHECK(mu.out.find(format_double(br.mu_high)) != std::string::npos);
    CHECK(br.mu_low <= br.mu_high);
}

TEST_CASE("verify with empirical phi") {
    const std::string report = path("report.json");
    const Run r = run({"verify", census12(), "--phi", "empirical", "-o", report, "-q"});
    CHECK(r.code == cli::kExitOk);
    REQUIRE(fs::exists(report));
    const Report parsed = parse_report(slurp(report));
    CHECK(parsed.count(Status::fails) == 0);
    CHECK(parsed.toolkit_version == cli::kToolkitVersion);
}

TEST_CASE("verify exits 1 on a failing census") {
    Census bad = load_census(census12());
    bad.c[9] += 1;
    const std::string file = path("bad.saw");
    save_census(bad, file);
    CHECK(run({"verify", file, "-o", path("bad_report.json"), "-q"}).code == cli::kExitFails);
    CHECK(run({"verify", file, "--phi", "power:10,2", "-o", path("bad_report2.json"), "-q"}).code == cli::kExitFails);
}

TEST_CASE("bounds CSV matches the library row by row") {
    const std::string csv = path("bounds.csv");
    REQUIRE(run({"bounds", "--phi", "zero", "-n", "100", "-o", csv}).code == cli::kExitOk);
    const Table t = read_table(csv);
    REQUIRE(t.header.at(1) == "hw_log");
    REQUIRE(t.rows.size() == 101);
    for (const auto& row : t.rows) {
        const long long n = std::stoll(row.at(0));
        if (n <= 2) CHECK(row.at(1) == "inf");
        else CHECK(parse_double(row.at(1)) == hw_explicit_log_bound(n));
        CHECK(parse_double(row.at(2)) == quant_log_bound(PhiModel::zero(), n).quant_log);
    }
}

TEST_CASE("CSV output round-trips and is reproducible") {
    const std::string a = path("phi_a.csv"), b = path("phi_b.csv");
    REQUIRE(run({"phi", census12(), "-o", a}).code == cli::kExitOk);
    REQUIRE(run({"phi", census12(), "-o", b}).code == cli::kExitOk);
    CHECK(slurp(a) == slurp(b));

    const Table t = read_table(a);
    std::ostringstream again;
    write_csv(again, t);
    CHECK(read_table(a) == t);
    std::istringstream back(again.str());
    CHECK(read_csv(back) == t);

    const PhiModel p = phi_empirical(load_census(census12()));
    REQUIRE(t.rows.size() == p.breakpoints().size());
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
        CHECK(parse_double(t.rows[i][0]) == p.breakpoints()[i].eps);
        CHECK(parse_double(t.rows[i][1]) == p.breakpoints()[i].phi);
    }

    const std::string p1 = path("plot1"), p2 = path("plot2");
    REQUIRE(run({"plot-data", "--phi", "power:1,2", "-n", "1000", "--points", "20", "--census", census12(), "-o", p1})
                .code == cli::kExitOk);
    REQUIRE(run({"plot-data", "--phi", "power:1,2", "-n", "1000", "--points", "20", "--census", census12(), "-o", p2})
                .code == cli::kExitOk);
    CHECK(slurp(p1 + "_bounds.csv") == slurp(p2 + "_bounds.csv"));
    CHECK(slurp(p1 + "_phi.csv") == slurp(p2 + "_phi.csv"));
    CHECK(read_table(p1 + "_bounds.csv").rows.size() >= 2);
}

TEST_CASE("CSV reader") {
    std::istringstream in("# comment\na,b\n1,2\n\n3,4\n");
    const Table t = read_csv(in);
    CHECK(t.header == std::vector<std::string>{"a", "b"});
    CHECK(t.rows.size() == 2);
    std::istringstream ragged("a,b\n1\n");
    CHECK_THROWS(read_csv(ragged));
}

TEST_CASE("phi model files and fits") {
    const std::string model = path("phi.json");
    const Run r = run({"phi", census12(), "--min-length", "6", "--model-out", model, "-o", path("phi6.csv")});
    CHECK(r.code == cli::kExitOk);
    REQUIRE(fs::exists(model));
    CHECK(parse_phi(slurp(model)) == phi_empirical(load_census(census12()), 6));
    CHECK(run({"bounds", "--phi", "file:" + model, "-n", "20", "-o", path("b_file.csv")}).code == cli::kExitOk);
    // A rate fitted on n >= 6 overclaims at n = 1, where the lone one-step bridge reaches full height.
    CHECK(run({"verify", census12(), "--phi", "file:" + model, "-o", path("r_file.json"), "-q"}).code == cli::kExitFails);
    const Report report = parse_report(slurp(path("r_file.json")));
    const auto bad = std::find_if(report.verdicts.begin(), report.verdicts.end(),
                                  [](const Verdict& v) { return v.status == Status::fails; });
    REQUIRE(bad != report.verdicts.end());
    CHECK(bad->subject == "rate.tall_bridges");
    CHECK(report.count(Status::fails) == 1);

    const std::string full = path("phi_full.json");
    REQUIRE(run({"phi", census12(), "--model-out", full, "-o", path("phi_full.csv")}).code == cli::kExitOk);
    CHECK(run({"verify", census12(), "--phi", "file:" + full, "-o", path("r_full.json"), "-q"}).code == cli::kExitOk);
}

TEST_CASE("usage errors exit 2") {
    CHECK(run({}).code == cli::kExitUsage);
    CHECK(run({"frobnicate"}).code == cli::kExitUsage);
    CHECK(run({"census", "-d", "1", "-N", "4", "-o", path("x.saw")}).code == cli::kExitUsage);
    CHECK(run({"census", "-d", "2", "-N", "-3", "-o", path("x.saw")}).code == cli::kExitUsage);
    CHECK(run({"bounds", "--phi", "power:1,0.5", "-n", "10"}).code == cli::kExitUsage);
    CHECK(run({"bounds", "--phi", "sigmoid", "-n", "10"}).code == cli::kExitUsage);
    CHECK(run({"mu", path("missing.saw")}).code == cli::kExitUsage);
    CHECK(run({"verify", census12(), "--padding-ulps", "0", "-o", path("r0.json")}).code == cli::kExitUsage);
    CHECK(run({"verify", census12(), "--z-grid", "1/2", "-o", path("rz.json"), "-q"}).code == cli::kExitUsage);
    CHECK(run({"verify", census12(), "--z-grid", "1/8,1/5", "-o", path("rz2.json"), "-q"}).code == cli::kExitOk);
}

TEST_CASE("installed tool exit codes") {
    const std::string tool = SAW_TOOL_PATH;
    const auto status = [&](const std::string& args) {
        const int raw = std::system((tool + " " + args + " >/dev/null 2>&1").c_str());
        return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    };
    CHECK(status("census -d 2 -N 6 -o " + path("t6.saw")) == 0);
    CHECK(status("verify " + path("t6.saw") + " -q -o " + path("t6.json")) == 0);
    CHECK(status("--version") == 0);
    CHECK(status("census -d 2") == 2);
    CHECK(status("SAW_MAX_N=3") != 0);
    const int limited = std::system(("SAW_MAX_N=4 " + tool + " census -d 2 -N 6 -o " + path("t7.saw") + " >/dev/null 2>&1").c_str());
    CHECK(WEXITSTATUS(limited) == 2);
}
