#include "htceq/cli.hpp"

#include <json.hpp>

#include <gtest/gtest.h>

#include <cstdlib>
#include <unistd.h>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace htceq;

namespace {

std::string data(std::string const &name) { return std::string{HTCEQ_DATA_DIR} + "/" + name; }

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> const &args) {
    std::ostringstream out;
    std::ostringstream err;
    int const code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

class TempFile {
  public:
    explicit TempFile(std::string const &text) {
        static int counter = 0;
        path_ = (std::filesystem::temp_directory_path() /
                 ("htceq_cli_" + std::to_string(::getpid()) + "_" + std::to_string(counter++) + ".lp"))
                    .string();
        std::ofstream{path_} << text;
    }
    ~TempFile() { std::filesystem::remove(path_); }
    TempFile(TempFile const &) = delete;
    TempFile &operator=(TempFile const &) = delete;
    std::string const &path() const { return path_; }

  private:
    std::string path_;
};

} // namespace

TEST(Cli, AnswerSets) {
    auto const r = run({"answersets", data("running.lp")});
    EXPECT_EQ(r.code, cli::exit_ok);
    EXPECT_EQ(r.out, "% bounds 0..200, budget 10000000\nanswer set: {a}, s=130\n1 answer set\n");
}

TEST(Cli, StableModelsBothDefinitions) {
    auto const def4 = run({"stable", data("running.lp")});
    auto const def3 = run({"stable", "--def3", data("running.lp")});
    EXPECT_EQ(def4.code, cli::exit_ok);
    EXPECT_EQ(def4.out, def3.out);
    EXPECT_NE(def4.out.find("stable model: {a, &sum{s}=130, &sum{s}>100, &sum{s}>=120}"), std::string::npos)
        << def4.out;
    EXPECT_EQ(run({"stable", "--def3", "--def4", data("running.lp")}).code, cli::exit_error);
}

TEST(Cli, SequivVerdicts) {
    auto const eq = run({"sequiv", data("intro.lp"), data("intro_r2only.lp")});
    EXPECT_EQ(eq.code, cli::exit_ok);
    EXPECT_NE(eq.out.find("Equivalent (bounds 0..200)"), std::string::npos);
    auto const ne = run({"sequiv", data("a_fact.lp"), data("empty.lp")});
    EXPECT_EQ(ne.code, cli::exit_negative);
    EXPECT_NE(ne.out.find("Not equivalent"), std::string::npos);
    EXPECT_NE(ne.out.find("a :- a."), std::string::npos) << ne.out;
}

TEST(Cli, WorkersDoNotChangeOutput) {
    for (auto const &command : std::vector<std::vector<std::string>>{
             {"models", data("running.lp"), "--bounds", "95..135"},
             {"sequiv", data("a_fact.lp"), data("empty.lp")},
             {"sequiv", data("intro.lp"), data("intro_r2only.lp"), "--bounds", "90..130"},
             {"answersets", data("intro.lp"), "--bounds", "0..40"}}) {
        auto with = command;
        with.insert(with.end(), {"--workers", "4"});
        auto const one = run(command);
        auto const four = run(with);
        EXPECT_EQ(one.code, four.code);
        EXPECT_EQ(one.out, four.out);
    }
}

TEST(Cli, RecordFormat) {
    auto const r = run({"answersets", data("running.lp"), "--format", "record"});
    ASSERT_EQ(r.code, cli::exit_ok);
    auto const j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["schema"], "htceq/1");
    EXPECT_EQ(j["kind"], "answer_sets");
    EXPECT_EQ(j["bounds"]["lo"], 0);
    EXPECT_EQ(j["bounds"]["hi"], 200);
    EXPECT_EQ(j["budget"], 10000000);
    EXPECT_TRUE(j["payload"].is_array());
    EXPECT_EQ(j["payload"].size(), 1U);

    auto const v = run({"sequiv", data("a_fact.lp"), data("empty.lp"), "--format", "record"});
    EXPECT_EQ(v.code, cli::exit_negative);
    EXPECT_EQ(nlohmann::json::parse(v.out)["kind"], "verdict");
    EXPECT_EQ(run({"parse", data("running.lp"), "--format", "xml"}).code, cli::exit_error);
}

TEST(Cli, Bounds) {
    TempFile const small{"#bounds 0..3. &sum{s}>=2."};
    auto const r = run({"answersets", small.path()});
    EXPECT_EQ(r.out, "% bounds 0..3, budget 10000000\nanswer set: {}, s=2\nanswer set: {}, s=3\n2 answer sets\n");
    auto const wide = run({"answersets", small.path(), "--bounds", "0..4"});
    EXPECT_NE(wide.out.find("s=4"), std::string::npos);

    TempFile const other{"#bounds 0..4. b."};
    auto const conflict = run({"sequiv", small.path(), other.path()});
    EXPECT_EQ(conflict.code, cli::exit_error);
    EXPECT_NE(conflict.err.find("conflicting bounds"), std::string::npos);
    EXPECT_EQ(run({"sequiv", small.path(), other.path(), "--bounds", "0..4"}).code, cli::exit_negative);
    EXPECT_EQ(run({"parse", small.path(), "--bounds", "3..1"}).code, cli::exit_error);
    EXPECT_EQ(run({"parse", small.path(), "--bounds", "x"}).code, cli::exit_error);
}

TEST(Cli, InputErrors) {
    TempFile const bad{"a :- not not b."};
    auto const parse = run({"parse", bad.path()});
    EXPECT_EQ(parse.code, cli::exit_negative);
    EXPECT_NE(parse.err.find(bad.path() + ":1:"), std::string::npos) << parse.err;
    EXPECT_EQ(run({"stable", bad.path()}).code, cli::exit_error);
    EXPECT_EQ(run({"answersets", data("missing.lp")}).code, cli::exit_error);
    EXPECT_EQ(run({}).code, cli::exit_error);
    EXPECT_EQ(run({"sequiv", data("intro.lp")}).code, cli::exit_error);
    EXPECT_EQ(run({"--help"}).code, cli::exit_ok);
}

TEST(Cli, Budget) {
    auto const r = run({"models", data("running.lp"), "--budget", "10"});
    EXPECT_EQ(r.code, cli::exit_budget);
    EXPECT_NE(r.err.find("budget"), std::string::npos);
    EXPECT_EQ(run({"models", data("running.lp"), "--budget", "0"}).code, cli::exit_error);

    ::setenv("HTCEQ_BUDGET", "10", 1);
    EXPECT_EQ(run({"models", data("running.lp")}).code, cli::exit_budget);
    auto const flag = run({"models", data("running.lp"), "--budget", "100000"});
    EXPECT_EQ(flag.code, cli::exit_ok);
    EXPECT_EQ(flag.out.rfind("% bounds 0..200, budget 100000\n", 0), 0U);
    ::setenv("HTCEQ_BUDGET", "lots", 1);
    EXPECT_EQ(run({"models", data("running.lp")}).code, cli::exit_error);
    ::unsetenv("HTCEQ_BUDGET");
}

TEST(Cli, TranslateAndParse) {
    auto const t = run({"translate", data("running.lp")});
    EXPECT_EQ(t.code, cli::exit_ok);
    EXPECT_NE(t.out.find("% SEM"), std::string::npos);
    EXPECT_NE(t.out.find("% DOM"), std::string::npos);
    auto const t2 = run({"translate", "--tau2", data("running.lp")});
    EXPECT_NE(t2.out.find("__prop("), std::string::npos);
    EXPECT_EQ(t2.out.find("% SEM"), std::string::npos);
    auto const p = run({"parse", data("intro.lp")});
    EXPECT_EQ(p.out, "% bounds 0..200, budget 10000000\n#bounds 0..200.\n:- &sum{s}>=120, not a.\na :- &sum{s}>100.\n");
}
