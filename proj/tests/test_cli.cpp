#include <doctest.h>

#include <algorithm>
#include <cstdio>
#include <cstring>
#include <string>

#include <json.hpp>

#include "flatdist/instance_io.hpp"
#include "flatdist/solver.hpp"
#include "test_support.hpp"

namespace ts = testsupport;
using nlohmann::json;

namespace {

bool contains_line(const std::string& output, const std::string& line) {
    return output.find(line) != std::string::npos;
}

}  // namespace

TEST_CASE("cli pair on skew lines") {
    const auto r =
        ts::run_command(ts::cli_path() + " pair " + ts::fixture("skew_lines.json"));
    CHECK(r.exit_code == 0);
    CHECK(contains_line(r.output, "distance 1.000000000000"));
    CHECK(contains_line(r.output, "path full_rank_cramer"));
    CHECK(contains_line(r.output, "unique true"));
}

TEST_CASE("cli distance on identical points") {
    const auto r = ts::run_command(ts::cli_path() + " distance " +
                                   ts::fixture("identical_points.json"));
    CHECK(r.exit_code == 0);
    CHECK(contains_line(r.output, "distance 0.000000000000"));
}

TEST_CASE("cli distance on point vs plane") {
    const auto r =
        ts::run_command(ts::cli_path() + " distance " + ts::fixture("point_plane.json"));
    CHECK(r.exit_code == 0);
    CHECK(contains_line(r.output, "distance 5.000000000000"));
    CHECK(contains_line(r.output, "distance_sq 25.000000000000"));
}

TEST_CASE("cli gram on skew lines") {
    const auto r =
        ts::run_command(ts::cli_path() + " gram " + ts::fixture("skew_lines.json"));
    CHECK(r.exit_code == 0);
    CHECK(contains_line(r.output, "n 2"));
    CHECK(contains_line(r.output, "gram_det 1.000000000000"));
    CHECK(contains_line(r.output, "gram_det_bordered 1.000000000000"));
}

TEST_CASE("cli check on a rank-deficient instance reports non-unique agreement") {
    const auto r =
        ts::run_command(ts::cli_path() + " check " + ts::fixture("self_line.json"));
    CHECK(r.exit_code == 0);
    CHECK(contains_line(r.output, "unique false"));
    CHECK(contains_line(r.output, "agreement true"));
}

TEST_CASE("cli check on parallel lines") {
    const auto r =
        ts::run_command(ts::cli_path() + " check " + ts::fixture("parallel_lines.json"));
    CHECK(r.exit_code == 0);
    CHECK(contains_line(r.output, "distance 3.000000000000"));
    CHECK(contains_line(r.output, "unique false"));
}

TEST_CASE("cli exit codes for bad input") {
    CHECK(ts::run_command(ts::cli_path() + " distance " + ts::fixture("malformed.json") +
                          " 2>/dev/null")
              .exit_code == 2);
    CHECK(ts::run_command(ts::cli_path() + " distance " + ts::fixture("bad_dims.json") +
                          " 2>/dev/null")
              .exit_code == 2);
    CHECK(ts::run_command(ts::cli_path() + " distance " + ts::fixture("nonfinite.json") +
                          " 2>/dev/null")
              .exit_code == 2);
    CHECK(ts::run_command(ts::cli_path() + " distance /no/such/file.json 2>/dev/null")
              .exit_code == 2);
}

TEST_CASE("cli prints a one-line diagnostic on stderr for bad input") {
    const auto r = ts::run_command(ts::cli_path() + " distance " +
                                   ts::fixture("bad_dims.json") + " 2>&1");
    CHECK(r.exit_code == 2);
    CHECK(contains_line(r.output, "error:"));
    CHECK(std::count(r.output.begin(), r.output.end(), '\n') == 1);
}

TEST_CASE("cli json output round-trips the distance bit-for-bit") {
    const auto r = ts::run_command(ts::cli_path() + " pair --json " +
                                   ts::fixture("skew_lines.json"));
    REQUIRE(r.exit_code == 0);
    const json doc = json::parse(r.output);
    const double printed = doc["distance"].get<double>();

    const flatdist::Instance inst =
        flatdist::load_instance(ts::fixture("skew_lines.json"));
    const double computed = flatdist::optimal_pair(inst.vb, inst.vc).distance;
    CHECK(std::memcmp(&printed, &computed, sizeof(double)) == 0);

    CHECK(doc["diagnostics"]["path"] == "full_rank_cramer");
    CHECK(doc["b_star"].get<std::vector<double>>() ==
          std::vector<double>{0.0, 0.0, 0.0});
}

TEST_CASE("cli --tol override changes the rank decision") {
    // A nearly dependent pair of lines: full rank at a tight tolerance,
    // reduced at a loose one.
    const std::string path = "/tmp/flatdist_tol_case.json";
    {
        FILE* f = fopen(path.c_str(), "w");
        REQUIRE(f != nullptr);
        fputs("{\"m\":3,\"b\":[0,0,0],\"B\":[[1,0,0]],"
              "\"c\":[0,1,0],\"C\":[[1,1e-5,0]]}",
              f);
        fclose(f);
    }
    const auto tight = ts::run_command(ts::cli_path() + " pair --tol 1e-9 " + path);
    CHECK(tight.exit_code == 0);
    CHECK(contains_line(tight.output, "path full_rank_cramer"));
    const auto loose = ts::run_command(ts::cli_path() + " pair --tol 1e-3 " + path);
    CHECK(loose.exit_code == 0);
    CHECK(contains_line(loose.output, "path reduced_columns"));
}
