#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "mincodes/cli.hpp"
#include "mincodes/constructions.hpp"
#include "mincodes/corpus.hpp"
#include "mincodes/format.hpp"
#include <json.hpp>

using namespace mincodes;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(const std::vector<std::string>& args, const std::string& input = "") {
    std::istringstream in(input);
    std::ostringstream out, err;
    const int code = cli::run(args, in, out, err);
    return {code, out.str(), err.str()};
}

nlohmann::json first_record(const std::string& out) { return nlohmann::json::parse(out.substr(0, out.find('\n'))); }

}  // namespace

TEST_CASE("construct") {
    auto r = run({"construct", "--family", "d0", "--k", "3", "--q", "2"});
    CHECK(r.code == cli::exit_ok);
    CHECK(r.out == to_text(d0(3, make_field(2, 1))));

    r = run({"construct", "--family", "d1", "--k", "4", "--t", "3", "--q", "3", "--manifest"});
    CHECK(r.code == cli::exit_ok);
    CHECK(r.out.rfind("# family: d1\n", 0) == 0);
    CHECK(parse_defining_set(r.out) == d_family(1, 4, 3, make_field(3, 1)));

    r = run({"construct", "--family", "full", "--k", "2", "--q", "3^1"});
    CHECK(r.code == cli::exit_ok);
    CHECK(parse_defining_set(r.out).n() == 9);

    CHECK(run({"construct", "--family", "d1", "--k", "4", "--t", "2", "--q", "2"}).code == cli::exit_domain);
    CHECK(run({"construct", "--family", "d9", "--k", "3", "--q", "2"}).code == cli::exit_usage);
    CHECK(run({"construct", "--family", "d0", "--k", "3", "--q", "6"}).code == cli::exit_usage);
    CHECK(run({"construct", "--family", "d0", "--q", "2"}).code == cli::exit_usage);
    CHECK(run({"frobnicate"}).code == cli::exit_usage);
    CHECK(run({}).code == cli::exit_usage);
}

TEST_CASE("check") {
    const std::string code = to_text(d0(3, make_field(2, 1)));
    auto r = run({"check"}, code);
    CHECK(r.code == cli::exit_ok);
    CHECK(r.out.find("method: span\nverdict: minimal\n") == 0);

    r = run({"check", "--method", "brute", "--format", "structured"}, "2 2 2\n1 0\n0 1\n");
    CHECK(r.code == cli::exit_ok);
    const auto rec = first_record(r.out);
    CHECK(rec["verdict"] == "not_minimal");
    CHECK(rec["witness"]["y"] == "1 1");

    r = run({"check", "--method", "all", "--format", "structured"}, code);
    CHECK(r.code == cli::exit_ok);
    CHECK(r.out.find("\"consistent\":true") != std::string::npos);

    CHECK(run({"check"}, "2 2 2\n1 1\n1 1\n").code == cli::exit_domain);
    CHECK(run({"check"}, "2 2 2\n1 0\n").code == cli::exit_domain);
    CHECK(run({"check", "--method", "psychic"}, code).code == cli::exit_usage);
    CHECK(run({"check", "--format", "xml"}, code).code == cli::exit_usage);
    CHECK(run({"check", "-i", "/nonexistent/file.txt"}).code != cli::exit_ok);
}

TEST_CASE("span, dhz and brute agree on corpus files") {
    const auto corpus = random_corpus(11, 40);
    for (const auto& d : corpus) {
        std::string verdicts[3];
        const char* methods[] = {"span", "dhz", "brute"};
        for (int i = 0; i < 3; ++i) {
            const auto r = run({"check", "--method", methods[i], "--format", "structured"}, to_text(d));
            REQUIRE(r.code == cli::exit_ok);
            verdicts[i] = first_record(r.out)["verdict"];
        }
        CHECK(verdicts[0] == verdicts[1]);
        CHECK(verdicts[0] == verdicts[2]);
    }
}

TEST_CASE("weights and bounds") {
    auto r = run({"weights"}, "2 2 3\n1 0\n0 1\n1 1\n");
    CHECK(r.code == cli::exit_ok);
    CHECK(r.out.find("A_0 = 1\nA_2 = 3\n") != std::string::npos);

    r = run({"bounds", "--k", "2", "--q", "5"});
    CHECK(r.code == cli::exit_ok);
    CHECK(r.out.find("lower: 5\nupper: 6") == 0);
    r = run({"bounds", "--k", "3", "--q", "2", "--format", "structured"});
    const auto rec = first_record(r.out);
    CHECK(rec["lower_exclusive"] == 4);
    CHECK(rec["upper_inclusive"] == 6);
}

TEST_CASE("search") {
    auto r = run({"search", "--k", "2", "--q", "4", "--format", "structured"});
    CHECK(r.code == cli::exit_ok);
    auto rec = first_record(r.out);
    CHECK(rec["status"] == "exact");
    CHECK(rec["n_min"] == 5);
    CHECK(parse_defining_set(rec["witness"].get<std::string>()).n() == 5);

    r = run({"search", "--k", "3", "--q", "3", "--budget", "5"});
    CHECK(r.code == cli::exit_budget);
    CHECK(r.out.find("status: budget_exhausted") != std::string::npos);

    CHECK(run({"search", "--k", "3", "--q", "2", "--n-max", "5"}).code == cli::exit_ok);
    CHECK(run({"search", "--k", "7", "--q", "5"}).code == cli::exit_domain);
}

TEST_CASE("extend") {
    const std::string code = to_text(d0(2, make_field(2, 1)));
    auto r = run({"extend", "--n", "5"}, code);
    CHECK(r.code == cli::exit_ok);
    const auto d = parse_defining_set(r.out);
    CHECK(d.n() == 5);
    CHECK(run({"check"}, r.out).out.find("verdict: minimal") != std::string::npos);
    CHECK(run({"extend", "--n", "2"}, code).code == cli::exit_domain);
    CHECK(run({"extend", "--n", "5", "--padding", "sideways"}, code).code == cli::exit_usage);

    const auto dir = std::filesystem::temp_directory_path() / "mincodes_cli_test";
    std::filesystem::create_directories(dir);
    const auto pool = dir / "pool.txt";
    {
        std::ofstream(pool) << "2 2 1\n0 1\n";
    }
    const auto outfile = dir / "out.txt";
    r = run({"extend", "--n", "4", "--padding", "from_file", "--pad-file", pool.string(), "-o", outfile.string()},
            code);
    CHECK(r.code == cli::exit_ok);
    std::ifstream back(outfile);
    const auto e = parse_defining_set(back);
    CHECK(e.n() == 4);
    CHECK(e[3] == Vector(make_field(2, 1), {0, 1}));
    std::filesystem::remove_all(dir);
}

TEST_CASE("field-info and selftest") {
    auto r = run({"field-info", "--q", "8"});
    CHECK(r.code == cli::exit_ok);
    CHECK(r.out.find("field: GF(2^3)") == 0);
    CHECK(run({"field-info", "--q", "12"}).code == cli::exit_usage);

    r = run({"selftest", "--seed", "3", "--count", "20", "--format", "structured"});
    CHECK(r.code == cli::exit_ok);
    CHECK(run({"selftest", "--seed", "3", "--count", "20", "--format", "structured"}).out == r.out);
}

TEST_CASE("structured output is byte-identical across runs") {
    const std::string code = to_text(d_family(2, 4, 3, make_field(2, 1)));
    for (const char* m : {"span", "dhz", "brute", "ab", "all"}) {
        const auto a = run({"check", "--method", m, "--format", "structured"}, code);
        const auto b = run({"check", "--method", m, "--format", "structured", "--jobs", "3"}, code);
        CHECK(a.out == b.out);
        CHECK(a.out.find("wall") == std::string::npos);
    }
    const auto s1 = run({"search", "--k", "3", "--q", "2", "--format", "structured"});
    const auto s2 = run({"search", "--k", "3", "--q", "2", "--format", "structured"});
    CHECK(s1.out == s2.out);
}
