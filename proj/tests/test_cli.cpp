#include <doctest.h>

#include <filesystem>
#include <unistd.h>
#include <cmath>
#include <string>
#include <vector>

#include "cli.hpp"
#include "dirichlet/io.hpp"
#include "oracles.hpp"

namespace fs = std::filesystem;

namespace {

int run(const std::vector<std::string>& args) {
    std::vector<const char*> argv{"dirichlet"};
    for (const std::string& a : args) argv.push_back(a.c_str());
    return dirichlet::cli::run_cli(static_cast<int>(argv.size()), argv.data());
}

// Scratch directory, fresh per test case.
struct Scratch {
    fs::path dir;

    Scratch() {
        static int counter = 0;
        dir = fs::temp_directory_path() /
              ("dirichlet_cli_" + std::to_string(++counter) + "_" + std::to_string(::getpid()));
        fs::create_directories(dir);
    }
    ~Scratch() { fs::remove_all(dir); }

    [[nodiscard]] std::string path(const std::string& name) const {
        return (dir / name).string();
    }
    [[nodiscard]] std::string write(const std::string& name, const std::string& text) const {
        dirichlet::write_file(path(name), text);
        return path(name);
    }
};

const char* kTriangle = R"({"sites": [[0, 0], [1, 0], [0.5, 0.8660254037844386]],
                            "bbox": [-1, -1, 2, 2]})";

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("usage errors exit with 2") {
    CHECK(run({}) == 2);
    CHECK(run({"frobnicate"}) == 2);
    CHECK(run({"tessellate"}) == 2);                         // missing --sites
    CHECK(run({"tessellate", "--no-such-flag"}) == 2);
    CHECK(run({"--help"}) == 0);
}

TEST_CASE("missing input file is a domain error") {
    CHECK(run({"tessellate", "--sites", "/nonexistent/sites.json"}) == 1);
}

TEST_CASE("tessellate writes both artifacts and a summary") {
    const Scratch scratch;
    const std::string sites = scratch.write("sites.json", kTriangle);
    const std::string json_out = scratch.path("diagram.json");
    const std::string svg_out = scratch.path("diagram.svg");
    const std::string report = scratch.path("report.txt");

    CHECK(run({"tessellate", "--sites", sites, "--json", json_out, "--svg", svg_out, "--out",
               report}) == 0);
    REQUIRE(fs::exists(json_out));
    REQUIRE(fs::exists(svg_out));

    const auto doc = dirichlet::diagram_from_json(dirichlet::read_file(json_out));
    CHECK(doc.diagram.cells.size() == 3);
    CHECK(doc.diagram.edges.size() == 3);
    CHECK(doc.diagram.vertices.size() == 1);
    CHECK(oracle::xml_well_formed(dirichlet::read_file(svg_out)));
    CHECK(dirichlet::read_file(report).find("sites: 3") != std::string::npos);
}

TEST_CASE("tessellate output is byte-identical across runs") {
    const Scratch scratch;
    const std::string sites = scratch.write("sites.json", kTriangle);
    const std::string out_a = scratch.path("a.json");
    const std::string out_b = scratch.path("b.json");
    CHECK(run({"tessellate", "--sites", sites, "--json", out_a, "--out",
               scratch.path("r1.txt")}) == 0);
    CHECK(run({"tessellate", "--sites", sites, "--json", out_b, "--out",
               scratch.path("r2.txt")}) == 0);
    CHECK(dirichlet::read_file(out_a) == dirichlet::read_file(out_b));
}

TEST_CASE("proximity reports one edge pair for two sites") {
    const Scratch scratch;
    const std::string sites = scratch.write("sites.json", R"({"sites": [[-1, 0], [1, 0]]})");
    const std::string report = scratch.path("report.txt");
    CHECK(run({"proximity", "--sites", sites, "--out", report}) == 0);
    const std::string text = dirichlet::read_file(report);
    CHECK(text.find("proximal pairs: 1") != std::string::npos);
    CHECK(text.find("0 1 edge") != std::string::npos);
}

TEST_CASE("topology prints the five collinear families") {
    const Scratch scratch;
    const std::string sites = scratch.write(
        "sites.json", R"({"sites": [[0, 0], [1, 0], [2, 0]], "bbox": [-1, -1, 3, 1]})");
    const std::string report = scratch.path("report.txt");
    CHECK(run({"topology", "--sites", sites, "--out", report}) == 0);
    const std::string text = dirichlet::read_file(report);
    CHECK(text.find("families: 5") != std::string::npos);
    CHECK(text.find("{1}") != std::string::npos);
    CHECK(text.find("{0 1 2}") != std::string::npos);
    CHECK(text.find("axioms: ok") != std::string::npos);
}

TEST_CASE("lloyd converges and emits a refeedable diagram document") {
    const Scratch scratch;
    const std::string sites = scratch.write(
        "sites.json",
        R"({"sites": [[-0.4, 0], [0.6, 0]], "bbox": [-1, -1, 1, 1]})");
    const std::string json_out = scratch.path("final.json");
    const std::string report = scratch.path("report.txt");
    CHECK(run({"lloyd", "--sites", sites, "--iters", "200", "--move-tol", "1e-9", "--json",
               json_out, "--out", report}) == 0);

    const auto doc = dirichlet::diagram_from_json(dirichlet::read_file(json_out));
    REQUIRE(doc.diagram.cells.size() == 2);
    CHECK(std::abs(doc.diagram.generating_set.sites[0].x + 0.5) <= 1e-6);
    CHECK(std::abs(doc.diagram.generating_set.sites[1].x - 0.5) <= 1e-6);
    CHECK(dirichlet::read_file(report).find("converged") != std::string::npos);

    // diagram documents parse as site documents (unknown keys are ignored)
    const std::string report2 = scratch.path("report2.txt");
    CHECK(run({"tessellate", "--sites", json_out, "--out", report2}) == 0);
}

TEST_CASE("lloyd with a density grid keeps sites near the mass") {
    const Scratch scratch;
    const std::string sites = scratch.write(
        "sites.json", R"({"sites": [[0.4, 0.5], [0.6, 0.5]], "bbox": [0, 0, 1, 1]})");
    // all mass on the left quarter
    std::string pgm = "P5\n8 8\n255\n";
    for (int row = 0; row < 8; ++row) {
        for (int col = 0; col < 8; ++col) {
            pgm += col < 2 ? '\xff' : '\x00';
        }
    }
    const std::string density = scratch.write("density.pgm", pgm);
    const std::string report = scratch.path("report.txt");
    CHECK(run({"lloyd", "--sites", sites, "--density", density, "--iters", "50", "--out",
               report}) == 0);
    CHECK(dirichlet::read_file(report).find("step 1:") != std::string::npos);
}

TEST_CASE("check passes on sound input") {
    const Scratch scratch;
    const std::string sites = scratch.write("sites.json", kTriangle);
    const std::string report = scratch.path("report.txt");
    CHECK(run({"check", "--sites", sites, "--seed", "42", "--out", report}) == 0);
    const std::string text = dirichlet::read_file(report);
    CHECK(text.find("oracle-equivalence: PASS") != std::string::npos);
    CHECK(text.find("covering: PASS") != std::string::npos);
    CHECK(text.find("convexity: PASS") != std::string::npos);
}

TEST_CASE("bbox and tolerance overrides are honored") {
    const Scratch scratch;
    const std::string sites = scratch.write("sites.json", R"({"sites": [[0, 0], [2, 0]]})");
    const std::string json_out = scratch.path("d.json");
    CHECK(run({"tessellate", "--sites", sites, "--bbox", "-5", "-5", "5", "5", "--tol", "1e-7",
               "--json", json_out, "--out", scratch.path("r.txt")}) == 0);
    const auto doc = dirichlet::diagram_from_json(dirichlet::read_file(json_out));
    CHECK(doc.diagram.bbox.min_x == -5.0);
    CHECK(doc.diagram.bbox.max_y == 5.0);

    // override that excludes a site → domain error
    CHECK(run({"tessellate", "--sites", sites, "--bbox", "1", "-1", "3", "1", "--out",
               scratch.path("r2.txt")}) == 1);
}

}  // TEST_SUITE
