// End-to-end runs of the installed binary. Each case spawns the real
// executable, so these tests cover argument parsing, exit codes, and the
// on-disk artifact formats rather than library internals.

#include <sys/wait.h>

#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "trop/io.hpp"

namespace {

const std::string& tmpdir() {
    static std::string d = [] {
        char tmpl[] = "/tmp/tropcli_XXXXXX";
        const char* p = mkdtemp(tmpl);
        if (p == nullptr) throw std::runtime_error("mkdtemp failed");
        return std::string(p);
    }();
    return d;
}

std::string tmp(const std::string& name) { return tmpdir() + "/" + name; }

std::string data_file(const std::string& name) { return std::string(TROP_DATA_DIR) + "/" + name; }

int run_cli(const std::string& args) {
    const std::string cmd = std::string("\"") + TROP_CLI_PATH + "\" " + args + " > " +
                            tmp("stdout.log") + " 2> " + tmp("stderr.log");
    const int rc = std::system(cmd.c_str());
    if (rc == -1) return -1;
    return WIFEXITED(rc) ? WEXITSTATUS(rc) : -2;
}

std::vector<std::string> csv_rows(const std::string& text) {
    std::vector<std::string> rows;
    std::string cur;
    for (size_t i = 0; i < text.size(); ++i) {
        if (text[i] == '\r' && i + 1 < text.size() && text[i + 1] == '\n') {
            rows.push_back(cur);
            cur.clear();
            ++i;
        } else {
            cur += text[i];
        }
    }
    if (!cur.empty()) rows.push_back(cur);
    return rows;
}

double second_field(const std::string& row) {
    const auto pos = row.find(',');
    REQUIRE(pos != std::string::npos);
    return std::stod(row.substr(pos + 1));
}

}  // namespace

TEST_CASE("evaluation: exact tropical value and its smoothed family") {
    const std::string out1 = tmp("eval1.csv"), out2 = tmp("eval2.csv");
    const std::string base = "trop-eval --poly " + data_file("trop_line.json") +
                             " --point 0,0 --h 0,1 --out ";
    REQUIRE(run_cli(base + out1) == 0);
    const auto rows = csv_rows(trop::read_text_file(out1));
    REQUIRE(rows.size() == 3);
    CHECK(rows[0] == "h,value");
    CHECK(rows[1] == "0,0");
    // three equal terms: smoothed value at h=1 is log 3
    CHECK(std::abs(second_field(rows[2]) - 1.0986122886681096914) <= 1e-11);

    REQUIRE(run_cli(base + out2) == 0);
    CHECK(trop::read_text_file(out1) == trop::read_text_file(out2));
}

TEST_CASE("evaluation: rational coordinates are exact") {
    const std::string out = tmp("eval_rat.csv");
    REQUIRE(run_cli("trop-eval --poly " + data_file("trop_line.json") +
                    " --point 1/3,-2/3 --h 0 --out " + out) == 0);
    const auto rows = csv_rows(trop::read_text_file(out));
    REQUIRE(rows.size() == 2);
    CHECK(std::abs(second_field(rows[1]) - 1.0 / 3.0) <= 1e-12);
}

TEST_CASE("evaluation: both halves of the sign split agree on the cone") {
    const std::string out = tmp("mk.csv");
    REQUIRE(run_cli("trop-eval --poly " + data_file("markov_plus.json") + " --point 1,1,2 --out " +
                    out) == 0);
    auto rows = csv_rows(trop::read_text_file(out));
    REQUIRE(rows.size() == 2);
    CHECK(rows[1] == "0,4");
    REQUIRE(run_cli("trop-eval --poly " + data_file("markov_minus.json") +
                    " --point 1,1,2 --out " + out) == 0);
    rows = csv_rows(trop::read_text_file(out));
    REQUIRE(rows.size() == 2);
    CHECK(rows[1] == "0,4");
}

TEST_CASE("evaluation: input failures") {
    CHECK(run_cli("trop-eval --poly " + tmp("missing.json") + " --point 0,0") == 2);
    CHECK(run_cli("trop-eval --poly " + data_file("trop_line.json") + " --point 0,0,0") == 2);
    CHECK(run_cli("trop-eval --poly " + data_file("trop_line.json") + " --point 0,0 --h -1") == 2);

    trop::write_text_file(tmp("broken.json"), "{ not json\n");
    CHECK(run_cli("trop-eval --poly " + tmp("broken.json") + " --point 0,0") == 2);

    trop::write_text_file(tmp("empty.json"), "{\"nvars\":2,\"terms\":[]}\n");
    CHECK(run_cli("trop-eval --poly " + tmp("empty.json") + " --point 0,0") == 4);
}

TEST_CASE("output directory variable catches relative artifact paths") {
    const std::string dir = tmp("outenv");
    REQUIRE(setenv("TROP_OUT_DIR", dir.c_str(), 1) == 0);
    const int rc = run_cli("trop-eval --poly " + data_file("trop_line.json") +
                           " --point 0,0 --out rel.csv");
    REQUIRE(unsetenv("TROP_OUT_DIR") == 0);
    REQUIRE(rc == 0);
    const auto rows = csv_rows(trop::read_text_file(dir + "/rel.csv"));
    REQUIRE(rows.size() == 2);
    CHECK(rows[1] == "0,0");

    // absolute paths must ignore the variable
    REQUIRE(setenv("TROP_OUT_DIR", dir.c_str(), 1) == 0);
    const std::string abs = tmp("abs.csv");
    const int rc2 = run_cli("trop-eval --poly " + data_file("trop_line.json") +
                            " --point 0,0 --out " + abs);
    REQUIRE(unsetenv("TROP_OUT_DIR") == 0);
    REQUIRE(rc2 == 0);
    CHECK(csv_rows(trop::read_text_file(abs)).size() == 2);
}

TEST_CASE("amoeba sampling: deterministic CSV and SVG artifacts") {
    const std::string csv1 = tmp("am1.csv"), csv2 = tmp("am2.csv"), svg = tmp("am1.svg");
    const std::string base = "amoeba --poly " + data_file("line.json") +
                             " --grid 24x16 --window -3,3 --seed 7 --svg " + svg +
                             " --overlay --out ";
    REQUIRE(run_cli(base + csv1) == 0);
    const auto rows = csv_rows(trop::read_text_file(csv1));
    REQUIRE(rows.size() >= 2);
    CHECK(rows[0] == "u1,u2");
    CHECK(rows.size() - 1 >= 200);  // 384 fibers, nearly all inside the window

    const std::string svg_text = trop::read_text_file(svg);
    CHECK(svg_text.rfind("<svg", 0) == 0);
    CHECK(svg_text.find("circle") != std::string::npos);

    REQUIRE(run_cli(base + csv2) == 0);
    CHECK(trop::read_text_file(csv1) == trop::read_text_file(csv2));
}

TEST_CASE("amoeba sampling: degenerate and malformed inputs") {
    trop::write_text_file(tmp("mono.json"),
                          "{\"nvars\":2,\"terms\":[{\"coeff\":1,\"exp\":[1,0]}]}\n");
    const std::string out = tmp("mono.csv");
    CHECK(run_cli("amoeba --poly " + tmp("mono.json") + " --out " + out) == 4);
    CHECK(trop::read_text_file(out) == "u1,u2\r\n");  // header written before the failure

    // three variables but no x3 anywhere: every fiber degenerates
    trop::write_text_file(
        tmp("flat3.json"),
        "{\"nvars\":3,\"terms\":[{\"coeff\":1,\"exp\":[1,0,0]},{\"coeff\":1,\"exp\":[0,1,0]}]}\n");
    CHECK(run_cli("amoeba --poly " + tmp("flat3.json") + " --out " + tmp("flat3.csv")) == 4);

    trop::write_text_file(tmp("four.json"),
                          "{\"nvars\":4,\"terms\":[{\"coeff\":1,\"exp\":[1,0,0,0]},"
                          "{\"coeff\":1,\"exp\":[0,0,0,1]}]}\n");
    CHECK(run_cli("amoeba --poly " + tmp("four.json")) == 2);
    CHECK(run_cli("amoeba --poly " + data_file("line.json") + " --grid bogus") == 2);
    CHECK(run_cli("amoeba --poly " + data_file("line.json") + " --window 3,-3") == 2);
}

TEST_CASE("amoeba sampling: one and three variables emit CSV, SVG stays planar") {
    // roots of x^2 + x - 2 sit at 1 and -2: log moduli 0 and log 2, in order
    trop::write_text_file(tmp("quad1.json"),
                          "{\"nvars\":1,\"terms\":[{\"coeff\":1,\"exp\":[2]},"
                          "{\"coeff\":1,\"exp\":[1]},{\"coeff\":-2,\"exp\":[0]}]}\n");
    const std::string one = tmp("one.csv");
    REQUIRE(run_cli("amoeba --poly " + tmp("quad1.json") + " --out " + one) == 0);
    auto rows = csv_rows(trop::read_text_file(one));
    REQUIRE(rows.size() == 3);
    CHECK(rows[0] == "u1");
    CHECK(std::abs(std::stod(rows[1])) <= 1e-9);
    CHECK(std::stod(rows[2]) == doctest::Approx(std::log(2.0)).epsilon(1e-9));

    // plane x + y + z = 1: one fiber root above each lattice node
    trop::write_text_file(tmp("plane3.json"),
                          "{\"nvars\":3,\"terms\":[{\"coeff\":1,\"exp\":[1,0,0]},"
                          "{\"coeff\":1,\"exp\":[0,1,0]},{\"coeff\":1,\"exp\":[0,0,1]},"
                          "{\"coeff\":-1,\"exp\":[0,0,0]}]}\n");
    const std::string a = tmp("pl1.csv"), b = tmp("pl2.csv");
    const std::string base =
        "amoeba --poly " + tmp("plane3.json") + " --grid 12x10 --window -2,2 --seed 5 --out ";
    REQUIRE(run_cli(base + a) == 0);
    rows = csv_rows(trop::read_text_file(a));
    REQUIRE(rows.size() >= 2);
    CHECK(rows[0] == "u1,u2,u3");
    CHECK(rows.size() - 1 >= 100);  // 120 fibers, each linear in x3
    REQUIRE(run_cli(base + b) == 0);
    CHECK(trop::read_text_file(a) == trop::read_text_file(b));

    CHECK(run_cli("amoeba --poly " + tmp("plane3.json") + " --svg " + tmp("no.svg")) == 2);
}

TEST_CASE("deformation scan: table, manifest, and shrinking distance") {
    const std::string out = tmp("def.csv"), man = tmp("def.json");
    REQUIRE(run_cli("deform --poly " + data_file("line.json") +
                    " --orthant +,+ --h 1,0.5 --n 150 --window -3,3 --out " + out +
                    " --manifest " + man) == 0);
    const auto rows = csv_rows(trop::read_text_file(out));
    REQUIRE(rows.size() == 3);
    CHECK(rows[0] == "h,samples,hausdorff,sample_to_complex,complex_to_sample");

    const auto j = nlohmann::json::parse(trop::read_text_file(man));
    REQUIRE(j.at("hausdorff").size() == 2);
    CHECK(j.at("monotone").get<bool>());
    CHECK(j.at("cells").get<int>() == 2);
    const double d1 = j.at("hausdorff")[0].get<double>();
    const double d2 = j.at("hausdorff")[1].get<double>();
    CHECK(d1 > d2);
    CHECK(d1 <= 2.0 * std::log(3.0));  // crude cap: twice the corner bound at h=1
}

TEST_CASE("deformation scan: an orthant with no zeros is reported as empty") {
    CHECK(run_cli("deform --poly " + data_file("quadric.json") + " --orthant +,+ --h 1") == 4);
    CHECK(run_cli("deform --poly " + data_file("line.json") + " --orthant +,+ --h 0") == 2);
    CHECK(run_cli("deform --poly " + data_file("line.json") + " --orthant +,+,+ --h 1") == 2);
}

TEST_CASE("newton: valuations against the tropical roots, row by row") {
    const std::string out = tmp("newton.csv");
    REQUIRE(run_cli("newton --in " + data_file("newton_example.json") + " --out " + out) == 0);
    const auto rows = csv_rows(trop::read_text_file(out));
    REQUIRE(rows.size() == 3);
    CHECK(rows[0] == "valuation,tropical_root");
    CHECK(rows[1] == "1,-1");
    CHECK(rows[2] == "2,-2");

    trop::write_text_file(tmp("zero.json"),
                          "{\"coeffs\":[{\"deg\":0,\"series\":\"0\"}]}\n");
    CHECK(run_cli("newton --in " + tmp("zero.json")) == 2);
}

TEST_CASE("boundary rays: escaping, pinned, and bounded") {
    const std::string csv1 = tmp("mk1.csv"), csv2 = tmp("mk2.csv"), man = tmp("mk1.json");
    const std::string base = "markov-boundary --manifest " + man + " --out ";
    REQUIRE(run_cli(base + csv1) == 0);
    const auto j = nlohmann::json::parse(trop::read_text_file(man));
    CHECK(j.at("status").get<std::string>() == "converged");
    CHECK(j.at("on_cone").get<bool>());
    CHECK(j.at("tail_gap").get<double>() < 1e-3);
    CHECK(j.at("residual_max").get<double>() < 1e-10);
    REQUIRE(j.at("limit").size() == 3);
    CHECK(std::abs(j.at("limit")[0].get<double>() - 0.40824829046386301637) <= 1e-3);
    CHECK(std::abs(j.at("limit")[2].get<double>() - 0.81649658092772603273) <= 1e-3);

    REQUIRE(run_cli(base + csv2) == 0);
    CHECK(trop::read_text_file(csv1) == trop::read_text_file(csv2));

    CHECK(run_cli("markov-boundary --ray w,3 --out " + tmp("mk3.csv")) == 0);
    CHECK(run_cli("markov-boundary --ray 3,3") == 4);
    CHECK(run_cli("markov-boundary --ray bogus,3") == 2);
    CHECK(run_cli("markov-boundary --ratio 0.9") == 2);
}

TEST_CASE("argument parsing at the top level") {
    CHECK(run_cli("--help") == 0);
    CHECK(run_cli("") == 2);            // a subcommand is required
    CHECK(run_cli("frobnicate") == 2);  // unknown subcommand
    CHECK(run_cli("trop-eval") == 2);   // missing required options
}
