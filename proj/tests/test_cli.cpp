// Drives the built `lowlight` binary end to end.

#include <stdexcept>
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "doctest.h"

#include "lowlight/bench.hpp"
#include "lowlight/image_io.hpp"
#include "support/fixtures.hpp"

using namespace lowlight;
using lowlight::testing::TempDir;
namespace fs = std::filesystem;

namespace {

struct RunResult {
    int status;
    std::string out;
};

RunResult run(const std::string& args, const std::string& env = "")
{
    const std::string cmd = env + " '" + std::string(LOWLIGHT_CLI) + "' " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf{};
    while (std::fgets(buf.data(), buf.size(), pipe)) {
        out += buf.data();
    }
    const int raw = pclose(pipe);
    return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

std::string quoted(const fs::path& p) { return "'" + p.string() + "'"; }

std::vector<std::string> read_lines(const fs::path& p)
{
    std::ifstream in(p);
    std::vector<std::string> lines;
    for (std::string line; std::getline(in, line);) {
        lines.push_back(line);
    }
    return lines;
}

int printed_levels(const std::string& out)
{
    const auto pos = out.find("K=");
    REQUIRE(pos != std::string::npos);
    return std::stoi(out.substr(pos + 2));
}

} // namespace

TEST_CASE("cli enhance")
{
    TempDir tmp;
    const auto dark = tmp / "dark.png";
    save_png(random_image(40, 30, 1, 0.0, 0.15), dark);

    SUBCASE("writes a PNG and reports the level count")
    {
        const auto r = run("enhance " + quoted(dark) + " " + quoted(tmp / "out.png"));
        CHECK(r.status == 0);
        CHECK(fs::exists(tmp / "out.png"));
        const int k = printed_levels(r.out);
        CHECK(k >= 1);
        CHECK(k <= 3);
        CHECK(r.out.find("mu_v=") != std::string::npos);
        CHECK(r.out.find("time_s=") != std::string::npos);
    }
    SUBCASE("levels override")
    {
        const auto r = run("enhance " + quoted(dark) + " " + quoted(tmp / "out.png") +
                           " --levels 2");
        CHECK(r.status == 0);
        CHECK(printed_levels(r.out) == 2);
    }
    SUBCASE("white round trips byte for byte")
    {
        save_png(ImageBuffer::filled(20, 20, 3, 1.0), tmp / "white.png");
        const auto r = run("enhance " + quoted(tmp / "white.png") + " " + quoted(tmp / "w2.png"));
        CHECK(r.status == 0);
        CHECK(printed_levels(r.out) == 1);
        CHECK(quantize(load_image(tmp / "w2.png")) == quantize(load_image(tmp / "white.png")));
    }
    SUBCASE("runtime failures exit 1")
    {
        CHECK(run("enhance " + quoted(tmp / "missing.png") + " " + quoted(tmp / "o.png")).status == 1);
        std::ofstream(tmp / "junk.png") << "junk";
        CHECK(run("enhance " + quoted(tmp / "junk.png") + " " + quoted(tmp / "o.png")).status == 1);
        CHECK(run("enhance " + quoted(dark) + " " + quoted(tmp / "no" / "dir" / "o.png")).status == 1);
    }
    SUBCASE("usage errors exit 2")
    {
        const std::string base = "enhance " + quoted(dark) + " " + quoted(tmp / "o.png");
        CHECK(run(base + " --bogus").status == 2);
        CHECK(run(base + " --levels 0").status == 2);
        CHECK(run(base + " --gamma -1").status == 2);
        CHECK(run(base + " --threshold-low 0.3 --threshold-high 0.2").status == 2);
        CHECK(run(base + " --threads 0").status == 2);
        CHECK(run("enhance").status == 2);
        CHECK(run("").status == 2);
        CHECK(run("frobnicate").status == 2);
    }
}

TEST_CASE("cli help lists every flag")
{
    const auto top = run("--help");
    CHECK(top.status == 0);
    for (const char* sub : {"enhance", "eval", "bench", "trace"}) {
        CHECK(top.out.find(sub) != std::string::npos);
    }

    const std::vector<std::string> common = {"--threshold-low", "--threshold-high", "--gamma",
                                             "--no-saturation", "--eps", "--threads"};
    const std::vector<std::pair<std::string, std::vector<std::string>>> expected = {
        {"enhance", {"--levels"}},
        {"eval", {"--levels", "--manifest", "--out", "--format"}},
        {"bench", {"--levels", "--width", "--height", "--repeats", "--seed", "--with-io",
                   "--kernel", "--content", "--format"}},
        {"trace", {"--max-levels", "--out", "--ref"}},
    };
    for (const auto& [sub, flags] : expected) {
        const auto help = run(sub + " --help");
        CHECK(help.status == 0);
        for (const auto& flag : flags) {
            INFO(sub << " " << flag);
            CHECK(help.out.find(flag) != std::string::npos);
        }
        for (const auto& flag : common) {
            INFO(sub << " " << flag);
            CHECK(help.out.find(flag) != std::string::npos);
        }
        CHECK(help.out.find("RETINEX_THREADS") != std::string::npos);
    }
}

TEST_CASE("cli eval")
{
    TempDir tmp;
    const auto low = tmp / "low";
    const auto ref = tmp / "ref";
    fs::create_directories(low);
    fs::create_directories(ref);

    SUBCASE("synthetic pairs")
    {
        for (int i = 0; i < 2; ++i) {
            const auto name = "img" + std::to_string(i) + ".png";
            save_png(testing::lift(random_image(24, 24, 50 + i), 0.2), ref / name);
            save_png(testing::power(load_image(ref / name), 3.0), low / name);
        }
        const auto r = run("eval " + quoted(low) + " " + quoted(ref) + " --out " +
                           quoted(tmp / "report.csv"));
        CHECK(r.status == 0);
        const auto lines = read_lines(tmp / "report.csv");
        REQUIRE(lines.size() == 3);
        CHECK(lines[2].rfind("MEAN,", 0) == 0);

        const auto mean_pos = r.out.find("MEAN,");
        const auto base_pos = r.out.find("BASELINE,");
        REQUIRE(mean_pos != std::string::npos);
        REQUIRE(base_pos != std::string::npos);
        const double mean_psnr = std::stod(r.out.substr(mean_pos + 5));
        const double base_psnr = std::stod(r.out.substr(base_pos + 9));
        CHECK(mean_psnr > base_psnr);
        CHECK(r.out.find("threads=1") != std::string::npos);

        const auto md = run("eval " + quoted(low) + " " + quoted(ref) + " --format md --out " +
                            quoted(tmp / "report.md"));
        CHECK(md.status == 0);
        CHECK(read_lines(tmp / "report.md").size() == 5);

        std::ofstream(tmp / "manifest.txt") << "low/img0.png,ref/img0.png\n";
        const auto man = run("eval --manifest " + quoted(tmp / "manifest.txt") + " --out " +
                             quoted(tmp / "m.csv"));
        CHECK(man.status == 0);
        CHECK(read_lines(tmp / "m.csv").size() == 2);
    }
    SUBCASE("empty directories")
    {
        const auto r = run("eval " + quoted(low) + " " + quoted(ref));
        CHECK(r.status == 1);
        CHECK(r.out.find("no matching image pairs") != std::string::npos);
    }
    SUBCASE("usage")
    {
        CHECK(run("eval " + quoted(low) + " " + quoted(ref) + " --format xml").status == 2);
        CHECK(run("eval").status == 2);
    }
}

TEST_CASE("cli bench")
{
    const auto r = run("bench --width 32 --height 32 --repeats 3");
    CHECK(r.status == 0);
    CHECK(r.out.find("ns_per_pixel=") != std::string::npos);
    CHECK(r.out.find("threads=1") != std::string::npos);

    const auto env = run("bench --width 32 --height 32 --repeats 3 --format csv",
                         "RETINEX_THREADS=3");
    CHECK(env.status == 0);
    CHECK(env.out.find(",3,3,") != std::string::npos);

    const auto flag = run("bench --width 32 --height 32 --repeats 3 --threads 2",
                          "RETINEX_THREADS=3");
    CHECK(flag.out.find("threads=2") != std::string::npos);

    CHECK(run("bench --width 32 --height 32 --repeats 3 --with-io --kernel full").status == 0);
    CHECK(run("bench --width 32 --height 32 --repeats 3 --kernel vplane --format md").status == 0);
    CHECK(run("bench --repeats 2").status == 2);
    CHECK(run("bench --width 8").status == 2);
    CHECK(run("bench --kernel gpu").status == 2);
}

TEST_CASE("cli trace")
{
    TempDir tmp;
    save_png(random_image(30, 20, 4, 0.0, 0.3), tmp / "in.png");

    const auto r = run("trace " + quoted(tmp / "in.png") + " --max-levels 3 --out " +
                       quoted(tmp / "trace"));
    CHECK(r.status == 0);
    for (int k = 1; k <= 3; ++k) {
        CHECK(fs::exists(tmp / "trace" / ("in_k" + std::to_string(k) + ".png")));
    }
    const auto csv = read_lines(tmp / "trace" / "in_trace.csv");
    REQUIRE(csv.size() == 4);
    CHECK(csv[0] == "k,mean_v,psnr_db");
    double prev = 0.0;
    for (int k = 1; k <= 3; ++k) {
        const auto& line = csv[static_cast<std::size_t>(k)];
        const double mean_v = std::stod(line.substr(line.find(',') + 1));
        CHECK(mean_v > prev);
        prev = mean_v;
    }

    save_png(ImageBuffer::filled(16, 16, 3, 1.0), tmp / "white.png");
    const auto w = run("trace " + quoted(tmp / "white.png") + " --max-levels 4 --out " +
                       quoted(tmp / "wt") + " --ref " + quoted(tmp / "white.png"));
    CHECK(w.status == 0);
    const auto first = quantize(load_image(tmp / "wt" / "white_k1.png"));
    for (int k = 2; k <= 4; ++k) {
        CHECK(quantize(load_image(tmp / "wt" / ("white_k" + std::to_string(k) + ".png"))) == first);
    }
    CHECK(read_lines(tmp / "wt" / "white_trace.csv")[1].find(",inf") != std::string::npos);

    CHECK(run("trace " + quoted(tmp / "in.png") + " --max-levels 9 --out " +
              quoted(tmp / "x")).status == 2);
    CHECK(run("trace " + quoted(tmp / "in.png")).status == 2);
    CHECK(run("trace " + quoted(tmp / "missing.png") + " --out " + quoted(tmp / "x")).status == 1);
}
