#include "shimura/cli.hpp"
#include "shimura/jack_cache.hpp"
#include "shimura/serialize.hpp"
#include "shimura/superpoly.hpp"

#include <doctest.h>

#include <filesystem>
#include <sstream>

using namespace shimura;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string line_value(const std::string& text, const std::string& key)
{
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line))
        if (line.rfind(key + " = ", 0) == 0) return line.substr(key.size() + 3);
    return {};
}

} // namespace

TEST_CASE("hooks lists partitions")
{
    const auto r = run({"hooks", "--p", "1", "--q", "1", "--size", "2"});
    CHECK(r.code == 0);
    CHECK(r.out == "(2)\n(1,1)\n");
}

TEST_CASE("interp example and text/structured agreement")
{
    const auto t = run({"interp", "--mu", "1", "--p", "2", "--q", "1", "--mode", "paper"});
    CHECK(t.code == 0);
    CHECK(line_value(t.out, "J") == "-1/4*x1^2 - 1/4*x2^2 + 1/4*y1^2 + 1/4");
    CHECK(line_value(t.out, "normalization") == "-2");
    const auto s = run({"interp", "--mu", "1", "--p", "2", "--q", "1", "--mode", "paper", "--format", "structured"});
    CHECK(s.code == 0);
    const Json doc = Json::parse(s.out);
    CHECK(doc["tool"] == "shimura");
    CHECK(doc["invocation"]["subcommand"] == "interp");
    const QPoly from_json = qpoly_from_json(doc["result"]["polynomial"]);
    CHECK(parse_qpoly(line_value(t.out, "J"), a_vars(HookParams(2, 1))) == from_json);
    CHECK(rational_from_json(doc["result"]["normalization_value"]) == -2);
}

TEST_CASE("superjack text and structured forms describe the same polynomial")
{
    for (const auto& lam : {"2", "1,1", "2,1"}) {
        const auto t = run({"superjack", "--lambda", lam, "--p", "2", "--q", "1"});
        const auto s = run({"superjack", "--lambda", lam, "--p", "2", "--q", "1", "--format", "structured"});
        REQUIRE(t.code == 0);
        REQUIRE(s.code == 0);
        std::string text = t.out;
        text.pop_back();
        const QPoly f = qpoly_from_json(Json::parse(s.out)["result"]["polynomial"]);
        CHECK(parse_qpoly(text, f.vars()) == f);
    }
    const auto g = run({"superjack", "--lambda", "2", "--p", "1", "--q", "1", "--theta", "generic", "--format", "structured"});
    CHECK(g.code == 0);
    CHECK_NOTHROW(theta_poly_from_json(Json::parse(g.out)["result"]["polynomial"]));
}

TEST_CASE("jack output")
{
    const auto r = run({"jack", "--lambda", "2", "--theta", "generic"});
    CHECK(r.code == 0);
    CHECK(r.out == "m[2]: 1\nm[1,1]: (2*θ)/(θ + 1)\n");
    const auto h = run({"jack", "--lambda", "2", "--theta", "1/2"});
    CHECK(h.out == "m[2]: 1\nm[1,1]: 2/3\n");
}

TEST_CASE("verify vanishing passes")
{
    const auto r = run({"verify", "vanishing", "--p", "1", "--q", "1", "--max-size", "3"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("fail ", 0) == std::string::npos);
    CHECK(r.out.find("\nfail ") == std::string::npos);
    CHECK(r.out.find(" fail=0 ") != std::string::npos);
    CHECK(r.out.find("summary pass=") != std::string::npos);
}

TEST_CASE("degenerate fallback exits 3")
{
    const auto r = run({"interp", "--mu", "1", "--p", "1", "--q", "1"});
    CHECK(r.code == 3);
    CHECK(line_value(r.out, "mode") == "top");
    const auto v = run({"verify", "normalization", "--p", "1", "--q", "1", "--max-size", "2"});
    CHECK(v.code == 3);
}

TEST_CASE("unreachable paper target is an error")
{
    const auto r = run({"interp", "--mu", "1,1", "--p", "2", "--q", "1", "--mode", "paper"});
    CHECK(r.code == 1);
    CHECK(r.err.find("no solution") != std::string::npos);
    CHECK(run({"interp", "--mu", "1,1", "--p", "2", "--q", "1", "--mode", "top"}).code == 0);
}

TEST_CASE("usage errors exit 2")
{
    CHECK(run({}).code == 2);
    CHECK(run({"bogus"}).code == 2);
    CHECK(run({"hooks", "--p", "0", "--q", "1", "--size", "2"}).code == 2);
    CHECK(run({"hooks", "--p", "1", "--q", "1", "--size", "-1"}).code == 2);
    CHECK(run({"hooks", "--p", "1", "--size", "2"}).code == 2);
    CHECK(run({"jack", "--lambda", "2", "--theta", "0.5"}).code == 2);
    CHECK(run({"jack", "--lambda", "1,2"}).code == 2);
    CHECK(run({"interp", "--mu", "2,2", "--p", "1", "--q", "1"}).code == 2);
    CHECK(run({"interp", "--mu", "1", "--p", "1", "--q", "1", "--mode", "other"}).code == 2);
    CHECK(run({"verify", "nothing"}).code == 2);
    CHECK(run({"grid", "--lambda", "1", "--p", "1", "--q", "1", "--format", "xml"}).code == 2);
}

TEST_CASE("structured output is deterministic")
{
    const std::vector<std::string> args{"verify", "expansion", "--p", "2", "--q", "1", "--max-size", "3", "--format", "structured"};
    const auto a = run(args), b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
}

TEST_CASE("kmu, grid and expand")
{
    const auto k = run({"kmu", "--mu", "2,1"});
    CHECK(line_value(k.out, "k") == "-3");
    CHECK(line_value(k.out, "d(-1)") == "-1");
    const auto g = run({"grid", "--lambda", "1", "--p", "2", "--q", "1"});
    CHECK(line_value(g.out, "grid") == "(3, -1, 1)");
    const auto e = run({"expand", "--size", "2", "--p", "1", "--q", "1"});
    CHECK(e.code == 0);
    CHECK(line_value(e.out, "orientation") == "reciprocal");
}

TEST_CASE("cache file does not change results")
{
    const auto path = (std::filesystem::temp_directory_path() / "shimura_cli_cache_test.json").string();
    std::filesystem::remove(path);
    const std::vector<std::string> base{"jack", "--lambda", "2,1", "--theta", "generic", "--format", "structured"};
    const auto plain = run(base);
    auto with_cache = base;
    with_cache.insert(with_cache.end(), {"--cache", path});
    const auto first = run(with_cache);
    CHECK(std::filesystem::exists(path));
    jack_cache().clear();
    const auto second = run(with_cache);
    CHECK(plain.out == first.out);
    CHECK(first.out == second.out);
    std::filesystem::remove(path);
}
