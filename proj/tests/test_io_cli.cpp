// Output tables (CSV/JSON) and the command-line front end, driven in-process
// through branchon::cli::run so exit codes and streams are observable.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "branchon/io.hpp"
#include "cli_app.hpp"

using namespace branchon;

namespace {

struct CliResult {
    int code = -1;
    std::string out;
    std::string err;
};

CliResult run_cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    CliResult result;
    result.code = cli::run(std::move(args), out, err);
    result.out = out.str();
    result.err = err.str();
    return result;
}

std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) lines.push_back(line);
    return lines;
}

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> cells;
    std::istringstream in(line);
    std::string cell;
    while (std::getline(in, cell, ',')) cells.push_back(cell);
    return cells;
}

// First non-comment line (the column header) and all data lines after it.
std::vector<std::vector<std::string>> csv_rows(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    for (const auto& line : split_lines(text)) {
        if (line.empty() || line[0] == '#') continue;
        rows.push_back(split_csv(line));
    }
    return rows;
}

// The contiguous table starting at the exact header line; ignores any prose
// commentary the subcommand prints around it.
std::vector<std::vector<std::string>> table_rows(const std::string& text,
                                                 const std::string& header) {
    const std::size_t width = split_csv(header).size();
    std::vector<std::vector<std::string>> rows;
    bool in_table = false;
    for (const auto& line : split_lines(text)) {
        if (!in_table) {
            if (line == header) {
                in_table = true;
                rows.push_back(split_csv(line));
            }
            continue;
        }
        auto cells = split_csv(line);
        if (cells.size() != width) break;  // prose commentary after the table
        rows.push_back(std::move(cells));
    }
    return rows;
}

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

}  // namespace

TEST_CASE("doubles are printed with round-trip precision") {
    CHECK(format_double(1.0) == "1");
    CHECK(format_double(0.5) == "0.5");
    CHECK(format_double(0.1) == "0.10000000000000001");
    for (double value : {1.0 / 3.0, 2.0 / 7.0, 1e-17, 123456.789, 3.0e300}) {
        const std::string text = format_double(value);
        CHECK(std::strtod(text.c_str(), nullptr) == value);
    }
}

TEST_CASE("CSV rendering is exact and stable") {
    Table table;
    table.add_config("command", "demo");
    table.add_config("k", 1.0);
    table.add_config("count", 3);
    table.add_config("flag", true);
    table.columns = {"a", "b", "c"};
    table.rows.push_back({0.5, static_cast<long>(7), std::string("text")});

    const std::string expected =
        "# command=demo\n"
        "# k=1\n"
        "# count=3\n"
        "# flag=true\n"
        "a,b,c\n"
        "0.5,7,text\n";
    CHECK(to_csv(table) == expected);
    CHECK(render(table, "csv") == expected);

    Table ragged = table;
    ragged.rows.push_back({1.0});
    CHECK_THROWS_AS(to_csv(ragged), DomainError);
    CHECK_THROWS_AS(render(table, "xml"), ConfigError);
}

TEST_CASE("JSON mirror carries the same content and parses back") {
    Table table;
    table.add_config("command", "demo");
    table.add_config("k", 2.5);
    table.columns = {"n", "value", "label"};
    table.rows.push_back({static_cast<long>(0), 1.25, std::string("x")});
    table.rows.push_back({static_cast<long>(1), -3.0, std::string("y")});

    const nlohmann::ordered_json doc = to_json(table);
    CHECK(doc["config"]["command"] == "demo");
    CHECK(doc["config"]["k"] == "2.5");
    CHECK(doc["columns"].size() == 3);
    CHECK(doc["rows"].size() == 2);
    CHECK(doc["rows"][0][0] == 0);
    CHECK(doc["rows"][0][1] == 1.25);
    CHECK(doc["rows"][1][2] == "y");

    const auto parsed = nlohmann::json::parse(render(table, "json"));
    CHECK(parsed["rows"][1][1] == -3.0);
}

TEST_CASE("file output fails loudly on bad paths") {
    CHECK_THROWS_AS(write_file("/nonexistent-dir-98431/out.csv", "x"), ConfigError);
}

TEST_CASE("cli: a subcommand is required and help is available") {
    const CliResult missing = run_cli({});
    CHECK(missing.code == 2);
    CHECK(contains(missing.err, "configuration error"));

    const CliResult help = run_cli({"--help"});
    CHECK(help.code == 0);
    CHECK(contains(help.out, "simulate"));
    CHECK(contains(help.out, "spectrum"));
    CHECK(contains(help.out, "compare"));
}

TEST_CASE("cli simulate: harmonic run returns to its starting point") {
    const CliResult result =
        run_cli({"simulate", "--k", "0", "--lambda", "1", "--x0", "1", "--v0", "0",
                 "--t_end", "6.283185307179586"});
    REQUIRE(result.code == 0);
    CHECK(contains(result.out, "# command=simulate\n"));
    CHECK(contains(result.out, "# k=0\n"));
    CHECK(contains(result.out, "# tol=1e-10\n"));
    CHECK(contains(result.out, "# out=-\n"));
    CHECK(contains(result.out, "# format=csv\n"));

    const auto rows = csv_rows(result.out);
    REQUIRE(rows.size() > 2);
    CHECK(rows.front() == std::vector<std::string>{"t", "x", "v"});
    const auto& last = rows.back();
    REQUIRE(last.size() == 3);
    CHECK(std::strtod(last[1].c_str(), nullptr) == doctest::Approx(1.0).epsilon(1e-8));
    CHECK(std::strtod(last[2].c_str(), nullptr) == doctest::Approx(0.0).scale(1.0).epsilon(1e-8));
}

TEST_CASE("cli simulate: identical invocations produce identical bytes") {
    const std::vector<std::string> args = {"simulate", "--k", "1", "--lambda", "2",
                                           "--x0", "0.2", "--t_end", "3"};
    const CliResult first = run_cli(args);
    const CliResult second = run_cli(args);
    REQUIRE(first.code == 0);
    CHECK(first.out == second.out);
    CHECK(first.err == second.err);
}

TEST_CASE("cli simulate: json output parses and mirrors the csv content") {
    const CliResult csv = run_cli({"simulate", "--t_end", "1"});
    const CliResult json = run_cli({"simulate", "--t_end", "1", "--format", "json"});
    REQUIRE(csv.code == 0);
    REQUIRE(json.code == 0);

    const auto doc = nlohmann::json::parse(json.out);
    CHECK(doc["config"]["command"] == "simulate");
    CHECK(doc["config"]["format"] == "json");
    CHECK(doc["columns"] == nlohmann::json({"t", "x", "v"}));
    const auto rows = csv_rows(csv.out);
    REQUIRE(doc["rows"].size() == rows.size() - 1);  // header line
    // spot-check the final sample against the csv route
    const auto& last_csv = rows.back();
    const auto& last_json = doc["rows"].back();
    CHECK(last_json[1].get<double>() ==
          doctest::Approx(std::strtod(last_csv[1].c_str(), nullptr)).epsilon(1e-15));
}

TEST_CASE("cli simulate: --out writes the table to a file") {
    const std::string path = "cli_test_simulate_out.csv";
    const CliResult direct = run_cli({"simulate", "--t_end", "1"});
    const CliResult filed = run_cli({"simulate", "--t_end", "1", "--out", path});
    REQUIRE(filed.code == 0);
    CHECK(contains(filed.out, "wrote "));
    const std::string content = slurp(path);
    std::remove(path.c_str());
    // file content equals the printed table except for the out= echo line
    const auto direct_rows = csv_rows(direct.out);
    const auto file_rows = csv_rows(content);
    CHECK(direct_rows == file_rows);
    CHECK(contains(content, "# out=" + path + "\n"));
}

TEST_CASE("cli: config files feed subcommand options") {
    const std::string path = "cli_test_config.ini";
    {
        std::ofstream cfg(path);
        cfg << "[simulate]\n"
            << "k=0\n"
            << "x0=1\n"
            << "t_end=1\n";
    }
    const CliResult result = run_cli({"--config", path, "simulate"});
    std::remove(path.c_str());
    REQUIRE(result.code == 0);
    CHECK(contains(result.out, "# k=0\n"));
    CHECK(contains(result.out, "# x0=1\n"));
    const auto rows = csv_rows(result.out);
    CHECK(std::strtod(rows.back()[1].c_str(), nullptr) ==
          doctest::Approx(std::cos(1.0)).epsilon(1e-8));
}

TEST_CASE("cli: config and domain problems exit 2") {
    CHECK(run_cli({"simulate", "--no-such-flag"}).code == 2);
    CHECK(run_cli({"simulate", "--tol", "1e-20"}).code == 2);
    CHECK(run_cli({"simulate", "--lambda", "-1"}).code == 2);
    CHECK(run_cli({"spectrum", "--s", "-6"}).code == 2);
    CHECK(run_cli({"spectrum", "--count", "40"}).code == 2);
    const CliResult bad = run_cli({"simulate", "--tol", "1e-20"});
    CHECK(contains(bad.err, "configuration error"));
    CHECK(bad.out.empty());
}

TEST_CASE("cli: numerical failures exit 3") {
    const CliResult blowup = run_cli({"simulate", "--k", "0", "--x0", "0.5", "--v0", "1",
                                      "--blowup_bound", "1", "--t_end", "20"});
    CHECK(blowup.code == 3);
    CHECK(contains(blowup.err, "numerical failure"));

    // trajectory through the momentum-map pole (D = v + x^2/3 + 3 crosses 0)
    const CliResult pole =
        run_cli({"hamiltonian", "--x0", "0", "--v0", "-3.5", "--t_end", "10"});
    CHECK(pole.code == 3);

    const CliResult hopeless = run_cli({"spectrum", "--s", "6", "--method", "grid",
                                        "--grid.n_points", "100", "--grid.r_max", "500",
                                        "--count", "4"});
    CHECK(hopeless.code == 3);
}

TEST_CASE("cli transform-check: reports the residual and can gate on it") {
    const CliResult report = run_cli({"transform-check", "--t_end", "5"});
    REQUIRE(report.code == 0);
    CHECK(contains(report.out, "harmonic residual"));
    CHECK(contains(report.out, "# max_step=0.001\n"));  // dense default for this command

    const CliResult gated =
        run_cli({"transform-check", "--t_end", "5", "--max-residual", "1e-30"});
    CHECK(gated.code == 3);
}

TEST_CASE("cli hamiltonian: drift summary stays tiny on a conserved run") {
    const CliResult result = run_cli({"hamiltonian", "--x0", "0.1", "--t_end", "10"});
    REQUIRE(result.code == 0);
    const auto lines = split_lines(result.out);
    REQUIRE(!lines.empty());
    const std::string& summary = lines.back();
    REQUIRE(contains(summary, "relative drift"));
    const double drift = std::strtod(summary.substr(summary.rfind('=') + 1).c_str(), nullptr);
    CHECK(drift <= 1e-8);

    for (const std::string family : {"fractional", "inverse"}) {
        const CliResult fam =
            run_cli({"hamiltonian", "--family", family, "--x0", "0.1", "--t_end", "5"});
        REQUIRE(fam.code == 0);
        const auto fam_lines = split_lines(fam.out);
        const std::string& fam_summary = fam_lines.back();
        const double fam_drift =
            std::strtod(fam_summary.substr(fam_summary.rfind('=') + 1).c_str(), nullptr);
        CHECK(fam_drift <= 1e-8);
    }
}

TEST_CASE("cli branches: tabulates both branches over the default window") {
    const CliResult result = run_cli({"branches", "--samples", "11"});
    REQUIRE(result.code == 0);
    const auto rows = csv_rows(result.out);
    REQUIRE(rows.size() == 12);  // header + 11 samples
    CHECK(rows.front() == std::vector<std::string>{"p", "v_plus", "v_minus", "H_plus", "H_minus"});

    const CliResult inverse =
        run_cli({"branches", "--family", "inverse", "--s", "1", "--samples", "5"});
    REQUIRE(inverse.code == 0);
    CHECK(csv_rows(inverse.out).size() == 6);
}

TEST_CASE("cli spectrum: linear-term-free levels match the even ladder") {
    const CliResult result =
        run_cli({"spectrum", "--s", "6", "--lambda", "1", "--method", "basis", "--branch",
                 "plus", "--count", "5", "--no-linear-term"});
    REQUIRE(result.code == 0);
    CHECK(contains(result.out, "# include_linear=false\n"));
    const auto rows = csv_rows(result.out);
    REQUIRE(rows.size() == 6);
    for (int n = 0; n < 5; ++n) {
        CHECK(std::strtod(rows[n + 1][2].c_str(), nullptr) ==
              doctest::Approx(2.0 * n + 2.0).epsilon(1e-10));
        CHECK(rows[n + 1][3] == "plus");
        CHECK(rows[n + 1][4] == "basis");
    }
}

TEST_CASE("cli spectrum: both branches stack into one table") {
    const CliResult result = run_cli({"spectrum", "--s", "6", "--method", "basis", "--count",
                                      "3", "--branch", "both"});
    REQUIRE(result.code == 0);
    const auto rows = csv_rows(result.out);
    REQUIRE(rows.size() == 7);
    CHECK(rows[1][3] == "plus");
    CHECK(rows[4][3] == "minus");
    // attractive branch sits below the repulsive one level by level
    for (int n = 0; n < 3; ++n) {
        const double plus = std::strtod(rows[1 + n][2].c_str(), nullptr);
        const double minus = std::strtod(rows[4 + n][2].c_str(), nullptr);
        CHECK(plus < minus);
    }
}

TEST_CASE("cli spectrum: hyphen aliases match the dotted option names") {
    const CliResult dotted = run_cli({"spectrum", "--method", "grid", "--grid.n_points", "1000",
                                      "--count", "2", "--branch", "plus", "--s", "6"});
    const CliResult hyphen = run_cli({"spectrum", "--method", "grid", "--grid-points", "1000",
                                      "--count", "2", "--branch", "plus", "--s", "6"});
    REQUIRE(dotted.code == 0);
    REQUIRE(hyphen.code == 0);
    CHECK(dotted.out == hyphen.out);
}

TEST_CASE("cli perturb: prints the series and radius commentary") {
    const CliResult with_radius =
        run_cli({"perturb", "--s", "6", "--n", "0", "--order", "4"});
    REQUIRE(with_radius.code == 0);
    CHECK(contains(with_radius.out, "eta(0, plus) summed to order 4 = "));
    CHECK(contains(with_radius.out, "convergence-radius estimate = "));
    const auto rows = table_rows(with_radius.out, "m,coefficient,partial_sum,eta_partial");
    REQUIRE(rows.size() == 6);  // header + orders 0..4
    CHECK(rows.front() ==
          std::vector<std::string>{"m", "coefficient", "partial_sum", "eta_partial"});
    CHECK(std::strtod(rows[1][3].c_str(), nullptr) == doctest::Approx(2.0).epsilon(1e-12));

    const CliResult short_run =
        run_cli({"perturb", "--s", "6", "--n", "0", "--order", "2"});
    REQUIRE(short_run.code == 0);
    CHECK(contains(short_run.out, "pattern too short"));
}

TEST_CASE("cli compare: reports both branches and the mirror split") {
    const CliResult result =
        run_cli({"compare", "--s", "6", "--lambda", "16", "--n", "0", "--order", "4"});
    REQUIRE(result.code == 0);
    CHECK(contains(result.out, "eta_plus(0): series "));
    CHECK(contains(result.out, "eta_minus(0): series "));
    CHECK(contains(result.out, "even-order shift: series "));
    const auto rows =
        table_rows(result.out, "n,branch,order_used,eta_series,eta_diag,abs_diff");
    REQUIRE(rows.size() == 3);  // header + one row per branch
    CHECK(rows[1][1] == "plus");
    CHECK(rows[2][1] == "minus");
    const double diff_plus = std::strtod(rows[1][5].c_str(), nullptr);
    CHECK(diff_plus <= 1e-2);
}

TEST_CASE("cli: thread cap environment variable is validated") {
    setenv("BRANCHON_THREADS", "not-a-number", 1);
    const CliResult bad = run_cli({"simulate", "--t_end", "1"});
    CHECK(bad.code == 2);
    CHECK(contains(bad.err, "BRANCHON_THREADS"));

    setenv("BRANCHON_THREADS", "0", 1);
    CHECK(run_cli({"simulate", "--t_end", "1"}).code == 2);

    setenv("BRANCHON_THREADS", "2", 1);
    const CliResult capped = run_cli({"simulate", "--t_end", "1"});
    CHECK(capped.code == 0);
    unsetenv("BRANCHON_THREADS");

    // determinism across thread caps
    setenv("BRANCHON_THREADS", "1", 1);
    const CliResult single = run_cli({"simulate", "--t_end", "1"});
    unsetenv("BRANCHON_THREADS");
    CHECK(single.out == capped.out);
}
