#include "tautcalc/commands.hpp"

#include <doctest.h>

#include <cstdlib>
#include <sstream>

using namespace tautcalc;

namespace {

struct Result {
    int code;
    std::string out, err;
};

Result invoke(std::vector<std::string> args)
{
    std::ostringstream out, err;
    int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

Json report_of(const Result& r) { return Json::parse(r.out); }

// Restores TAUT_MAX_CODIM when a test leaves.
struct EnvGuard {
    EnvGuard(const char* value)
    {
        if (value)
            setenv("TAUT_MAX_CODIM", value, 1);
        else
            unsetenv("TAUT_MAX_CODIM");
    }
    ~EnvGuard() { unsetenv("TAUT_MAX_CODIM"); }
};

}  // namespace

TEST_CASE("d-op")
{
    EnvGuard env(nullptr);
    Result r = invoke({"d-op", "p2^2", "--times", "2"});
    CHECK(r.code == kExitPass);
    Json j = report_of(r);
    CHECK(j["command"] == "d-op");
    CHECK(j["status"] == "DERIVED");
    CHECK(j["trace"].size() == 3);
    CHECK(r.out.find("2*p2*q1 - 6*p3") != std::string::npos);
    CHECK(r.out.find("2*q1^2 - 8*q2") != std::string::npos);

    Result text = invoke({"d-op", "p2^2", "--text"});
    CHECK(text.code == kExitPass);
    CHECK(text.out.find("2*p2*q1 - 6*p3") != std::string::npos);
    CHECK_FALSE(Json::accept(text.out));
}

TEST_CASE("d-op input errors exit 2 with a caret")
{
    Result r = invoke({"d-op", "2*(p1"});
    CHECK(r.code == kExitUsage);
    CHECK(r.out.empty());
    CHECK(r.err.find("unbalanced '('") != std::string::npos);
    CHECK(r.err.find("    ^") != std::string::npos);
    CHECK(invoke({"d-op", "q0"}).code == kExitUsage);
    CHECK(invoke({"d-op", "p1^x"}).code == kExitUsage);
}

TEST_CASE("usage errors")
{
    CHECK(invoke({}).code == kExitUsage);
    CHECK(invoke({"bogus"}).code == kExitUsage);
    CHECK(invoke({"check-w"}).code == kExitUsage);
    CHECK(invoke({"check-w", "--genus", "0"}).code == kExitUsage);
    CHECK(invoke({"degeneration-check", "--genus", "3"}).code == kExitUsage);
    CHECK(invoke({"d-op", "p1", "--json", "--text"}).code == kExitUsage);
    CHECK(invoke({"--help"}).code == kExitPass);
    Result v = invoke({"--version"});
    CHECK(v.code == kExitPass);
    CHECK_FALSE(v.out.empty());
}

TEST_CASE("check-w exit codes follow the verdict")
{
    EnvGuard env(nullptr);
    Result g3 = invoke({"check-w", "--genus", "3"});
    CHECK(g3.code == kExitPass);
    CHECK(report_of(g3)["status"] == "DERIVED_ZERO");
    Result g4 = invoke({"check-w", "--genus", "4"});
    CHECK(g4.code == kExitNegative);
    Json j = report_of(g4);
    CHECK(j["status"] == "NOT_DERIVED");
    CHECK(j["inputs"]["max_codim"] == 8);
}

TEST_CASE("TAUT_MAX_CODIM overrides the default bound")
{
    {
        EnvGuard env("5");
        CHECK(resolve_bound(std::nullopt, 9) == 5);
        CHECK(resolve_bound(7, 9) == 7);
        Json j = report_of(invoke({"check-w", "--genus", "2"}));
        CHECK(j["inputs"]["max_codim"] == 5);
        CHECK(j["status"] == "DERIVED_ZERO");
    }
    {
        EnvGuard env("x");
        CHECK_THROWS_AS(resolve_bound(std::nullopt, 9), std::invalid_argument);
        CHECK(invoke({"check-w", "--genus", "2"}).code == kExitUsage);
    }
    {
        EnvGuard env(nullptr);
        CHECK(resolve_bound(std::nullopt, 9) == 9);
    }
}

TEST_CASE("pass/fail commands")
{
    EnvGuard env(nullptr);
    for (std::vector<std::string> args : {std::vector<std::string>{"sl2-check", "--max-codim", "4"},
                                          std::vector<std::string>{"pullback-verify"},
                                          std::vector<std::string>{"degeneration-check", "--genus", "4"}}) {
        Result r = invoke(args);
        CHECK_MESSAGE(r.code == kExitPass, args[0]);
        Json j = report_of(r);
        CHECK(j["status"] == "PASS");
        for (const auto& v : j["verdicts"]) CHECK_MESSAGE(v["passed"].get<bool>(), v["name"].get<std::string>());
    }
}

TEST_CASE("reports are byte for byte deterministic")
{
    EnvGuard env(nullptr);
    for (std::vector<std::string> args :
         {std::vector<std::string>{"d-op", "p2^2", "--times", "2"}, std::vector<std::string>{"relations", "--genus", "3"},
          std::vector<std::string>{"check-w", "--genus", "4"}, std::vector<std::string>{"pullback-verify"},
          std::vector<std::string>{"degeneration-check", "--genus", "5"}}) {
        Result a = invoke(args), b = invoke(args);
        CHECK_MESSAGE(a.out == b.out, args[0]);
        CHECK(a.code == b.code);
    }
}

TEST_CASE("report skeleton")
{
    EnvGuard env(nullptr);
    Json j = report_of(invoke({"relations", "--genus", "2", "--max-codim", "5"}));
    for (const char* key : {"command", "version", "inputs", "status", "verdicts", "certificates", "trace", "notes"})
        CHECK_MESSAGE(j.contains(key), key);
}
