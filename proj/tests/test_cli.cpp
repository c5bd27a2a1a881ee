#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

using json = nlohmann::json;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

RunResult run_cli(const std::string& args) {
    const auto dir = std::filesystem::temp_directory_path();
    const auto out_path = dir / "ptopo_cli_out.txt";
    const auto err_path = dir / "ptopo_cli_err.txt";
    const std::string cmd = std::string(PTOPO_CLI_PATH) + " " + args + " > " +
                            out_path.string() + " 2> " + err_path.string();
    const int status = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = WEXITSTATUS(status);
    r.out = slurp(out_path);
    r.err = slurp(err_path);
    return r;
}

std::string fixture(const std::string& name) {
    return std::string(PTOPO_FIXTURE_DIR) + "/" + name;
}

} // namespace

TEST_CASE("verify-union on the two-disk fixture exits 0 with a pass report") {
    const RunResult r = run_cli("verify-union " + fixture("two_disks.json"));
    CHECK(r.exit_code == 0);
    const json j = json::parse(r.out);
    CHECK(j.at("verdict") == "pass");
    CHECK(j.at("resolutions").size() >= 1);
}

TEST_CASE("simply-connected on the ring fixture decides 'no' with a witness") {
    const RunResult r = run_cli("simply-connected " + fixture("ring.json"));
    CHECK(r.exit_code == 0);
    const json j = json::parse(r.out);
    CHECK(j.at("all_simply_connected") == "no");
    CHECK(j.at("certificate").at("verdict") == "disconnected");
    CHECK(j.at("certificate").at("witness").at("type") == "point");
}

TEST_CASE("malformed documents exit 2 with a field-path diagnostic") {
    const RunResult r = run_cli("components " + fixture("malformed.json"));
    CHECK(r.exit_code == 2);
    CHECK(r.err.find("sets.K[0]") != std::string::npos);
}

TEST_CASE("undecided at the floor exits 3") {
    // outer raster shows the ring's hole, inner raster is empty at this
    // coarse resolution, and the floor forbids refinement
    const RunResult r = run_cli("sphere-connected " + fixture("ring.json") + " --h 0.4 --floor 0.4");
    CHECK(r.exit_code == 3);
    const json j = json::parse(r.out);
    CHECK(j.at("verdict") == "undecided");
}

TEST_CASE("annulus obstruction on a disk is a precondition violation, exit 1") {
    const RunResult r = run_cli("annulus " + fixture("disk.json"));
    CHECK(r.exit_code == 1);
    CHECK(r.err.find("precondition") != std::string::npos);
}

TEST_CASE("components reports both sides") {
    const RunResult r = run_cli("components " + fixture("disk.json"));
    CHECK(r.exit_code == 0);
    const json j = json::parse(r.out);
    CHECK(j.at("occupied").at("count") == 1);
    CHECK(j.at("complement").at("count") == 1);
}

TEST_CASE("sphere-connected on the ring at full resolution decides disconnected") {
    const RunResult r = run_cli("sphere-connected " + fixture("ring.json"));
    CHECK(r.exit_code == 0);
    const json j = json::parse(r.out);
    CHECK(j.at("verdict") == "disconnected");
    CHECK(j.at("mode") == "inner");
}

TEST_CASE("neighborhood builds and writes an SVG") {
    const auto svg_path = std::filesystem::temp_directory_path() / "ptopo_nbhd.svg";
    const RunResult r =
        run_cli("neighborhood " + fixture("nbhd.json") + " --svg " + svg_path.string());
    CHECK(r.exit_code == 0);
    const json j = json::parse(r.out);
    CHECK(j.at("status") == "built");
    CHECK(j.at("certificates").at("k_in_v") == true);
    CHECK(j.at("certificates").at("v_in_a") == true);
    CHECK(slurp(svg_path).find("id=\"V\"") != std::string::npos);
}

TEST_CASE("grid-cycle reports unit winding for the disk fixture") {
    const RunResult r = run_cli("grid-cycle " + fixture("disk.json") + " --eps 0.25");
    CHECK(r.exit_code == 0);
    const json j = json::parse(r.out);
    CHECK(j.at("winding_around_sample") == 1);
    CHECK(j.at("cycles").size() == 1);
}

TEST_CASE("render emits byte-identical SVGs across runs") {
    const auto s1 = std::filesystem::temp_directory_path() / "ptopo_r1.svg";
    const auto s2 = std::filesystem::temp_directory_path() / "ptopo_r2.svg";
    CHECK(run_cli("render " + fixture("two_disks.json") + " --svg " + s1.string()).exit_code == 0);
    CHECK(run_cli("render " + fixture("two_disks.json") + " --svg " + s2.string()).exit_code == 0);
    const std::string a = slurp(s1), b = slurp(s2);
    CHECK(!a.empty());
    CHECK(a == b);
}

TEST_CASE("--set picks a named set from a multi-set document") {
    const RunResult r = run_cli("sphere-connected " + fixture("two_disks.json") + " --set L");
    CHECK(r.exit_code == 0);
    CHECK(json::parse(r.out).at("verdict") == "connected");
}

TEST_CASE("PGM masks flow through the grid subcommands") {
    const auto pgm = std::filesystem::temp_directory_path() / "ptopo_cli_mask.pgm";
    {
        std::ofstream out(pgm, std::ios::binary);
        out << "P2\n8 8\n255\n";
        for (int row = 0; row < 8; ++row) {
            for (int col = 0; col < 8; ++col)
                out << ((row >= 3 && row <= 4 && col >= 3 && col <= 4) ? "255 " : "0 ");
            out << "\n";
        }
    }
    const RunResult r = run_cli("components " + pgm.string());
    CHECK(r.exit_code == 0);
    const json j = json::parse(r.out);
    CHECK(j.at("occupied").at("count") == 1);
    CHECK(j.at("complement").at("count") == 1);

    const RunResult s = run_cli("sphere-connected " + pgm.string());
    CHECK(s.exit_code == 0);
    CHECK(json::parse(s.out).at("verdict") == "connected");
}

TEST_CASE("fuzz subcommand runs a tiny deterministic campaign") {
    const auto dir = std::filesystem::temp_directory_path() / "ptopo_cli_fuzz";
    std::filesystem::create_directories(dir);
    const std::string args = "fuzz --seed 11 --count 2 --threads 1 --defect-dir " + dir.string();
    const RunResult r1 = run_cli(args);
    const RunResult r2 = run_cli(args);
    CHECK(r1.exit_code == 0);
    CHECK(r1.out == r2.out);
    const json j = json::parse(r1.out);
    CHECK(j.at("instances") == 2);
    CHECK(j.at("defects") == 0);
}
