#include "htceq/cli.hpp"

#include "htceq/error.hpp"
#include "htceq/record.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

namespace htceq::cli {

namespace {

enum class Format { text, record };

//! Unreadable, unparsable or ill-formed input file.
class InputError : public Error {
  public:
    using Error::Error;
};

struct RunConfig {
    std::vector<std::string> inputs;
    std::string bounds;
    Format format = Format::text;
    std::optional<std::uint64_t> budget;
    unsigned workers = 1;
    bool def3 = false;
    bool def4 = false;
    bool tau2 = false;
};

Bounds parse_bounds(std::string const &text) {
    auto const dots = text.find("..");
    auto number = [&](std::string const &s) {
        std::size_t used = 0;
        long long value = 0;
        try {
            value = std::stoll(s, &used);
        } catch (std::exception const &) {
            used = std::string::npos;
        }
        if (s.empty() || used != s.size()) {
            throw SemanticError{"invalid --bounds '" + text + "', expected LO..HI"};
        }
        return static_cast<Integer>(value);
    };
    if (dots == std::string::npos) {
        throw SemanticError{"invalid --bounds '" + text + "', expected LO..HI"};
    }
    try {
        return Bounds{number(text.substr(0, dots)), number(text.substr(dots + 2))};
    } catch (PreconditionViolation const &e) {
        throw SemanticError{e.what()};
    }
}

std::uint64_t resolve_budget(RunConfig const &config) {
    if (config.budget) {
        return *config.budget;
    }
    if (char const *env = std::getenv("HTCEQ_BUDGET"); env != nullptr && *env != '\0') {
        std::string const text{env};
        if (text.find_first_not_of("0123456789") != std::string::npos || text.size() > 19) {
            throw SemanticError{"invalid HTCEQ_BUDGET '" + text + "'"};
        }
        return std::stoull(text);
    }
    return default_budget;
}

SourceProgram load(std::string const &path) {
    std::ifstream in{path, std::ios::binary};
    if (!in) {
        throw InputError{path + ": cannot read file"};
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    try {
        return parse_program(buffer.str());
    } catch (SyntaxError const &e) {
        throw InputError{path + ":" + e.what()};
    } catch (SemanticError const &e) {
        throw InputError{path + (e.line() > 0 ? ":" : ": ") + e.what()};
    }
}

//! Flag bounds, else the directives (which must agree), else the defaults.
Bounds resolve_bounds(RunConfig const &config, std::vector<SourceProgram> const &programs) {
    if (!config.bounds.empty()) {
        return parse_bounds(config.bounds);
    }
    std::optional<Bounds> out;
    for (auto const &p : programs) {
        if (p.bounds && out && *out != *p.bounds) {
            throw SemanticError{"input programs declare conflicting bounds " + out->to_string() + " and " +
                                p.bounds->to_string() + "; pass --bounds to override"};
        }
        if (p.bounds) {
            out = p.bounds;
        }
    }
    return out.value_or(Bounds{});
}

class Reporter {
  public:
    Reporter(std::ostream &out, Format format, Bounds bounds, std::uint64_t budget)
    : out_{out}
    , format_{format}
    , bounds_{bounds}
    , budget_{budget} {}

    void emit(std::string const &kind, std::string const &text, nlohmann::ordered_json payload) {
        if (format_ == Format::record) {
            out_ << make_record(kind, bounds_, budget_, std::move(payload)).dump(2) << "\n";
        } else {
            out_ << "% bounds " << bounds_.to_string() << ", budget " << budget_ << "\n" << text;
        }
    }

  private:
    std::ostream &out_;
    Format format_;
    Bounds bounds_;
    std::uint64_t budget_;
};

int execute(std::string const &command, RunConfig const &config, std::ostream &out) {
    std::vector<SourceProgram> programs;
    for (auto const &path : config.inputs) {
        programs.push_back(load(path));
    }
    auto const bounds = resolve_bounds(config, programs);
    SearchOptions const opts{resolve_budget(config), config.workers};
    Reporter report{out, config.format, bounds, opts.budget};
    auto const p = programs.front().program.with_bounds(bounds);

    if (command == "parse") {
        auto const &founded = programs.front().founded;
        report.emit("program", render_program(p, founded), record_program(p, founded));
    } else if (command == "stable") {
        std::set<TAtomSet> models;
        if (config.def3) {
            models = theory_stable_models_def3(p, opts).models;
        } else {
            models = theory_stable_models_def4(p, opts);
        }
        report.emit("stable_models", render_stable_models(models), record_stable_models(models));
    } else if (command == "answersets") {
        auto const answers = answer_sets(p, opts);
        report.emit("answer_sets", render_answer_sets(answers), record_answer_sets(answers));
    } else if (command == "translate") {
        auto const t = config.tau2 ? tau2_program(p) : tau_program(p);
        report.emit("theory", render_theory(t), record_theory(t));
    } else if (command == "models") {
        auto const t = tau_program(p);
        auto const found = models(t.theory, ValuationSpace{t.signature}, opts);
        report.emit("models", render_interpretations(found), record_interpretations(found));
    } else if (command == "sequiv") {
        auto const q = programs.back().program.with_bounds(bounds);
        auto const verdict = strong_equivalent(p, q, opts);
        auto const sig = joint_signature(p, q);
        report.emit("verdict", render_verdict(verdict, sig), record_verdict(verdict, sig));
        return std::holds_alternative<SequivEquivalent>(verdict) ? exit_ok : exit_negative;
    }
    return exit_ok;
}

} // namespace

int run(std::vector<std::string> const &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Strong equivalence, stable models and answer sets of programs with linear constraints", "htceq"};
    app.require_subcommand(1);
    RunConfig config;

    auto common = [&](CLI::App *sub) {
        sub->add_option("--bounds", config.bounds, "Integer interval LO..HI of theory variables (default 0..200)");
        sub->add_option("--format", config.format, "Output format")
            ->transform(CLI::CheckedTransformer(std::map<std::string, Format>{{"text", Format::text},
                                                                              {"record", Format::record}}));
        sub->add_option("--budget", config.budget, "Cap on enumerated interpretations (default 10000000)")
            ->check(CLI::PositiveNumber);
        sub->add_option("--workers", config.workers, "Threads for the enumeration")->check(CLI::Range(1U, 1024U));
    };
    auto one_file = [&](char const *name, char const *description) {
        auto *sub = app.add_subcommand(name, description);
        sub->add_option("file", config.inputs, "Program file")->required()->expected(1);
        common(sub);
        return sub;
    };

    one_file("parse", "Print the canonical form of a program");
    auto *stable = one_file("stable", "Theory stable models");
    auto *def3 = stable->add_flag("--def3", config.def3, "Guess a solution first");
    stable->add_flag("--def4", config.def4, "Choice over external atoms (default)")->excludes(def3);
    one_file("answersets", "Answer sets");
    one_file("translate", "HTc theory of a program")->add_flag("--tau2", config.tau2, "Decoupled translation");
    one_file("models", "HTc models of the translation");
    auto *sequiv = app.add_subcommand("sequiv", "Decide strong equivalence of two programs");
    sequiv->add_option("files", config.inputs, "Program files")->required()->expected(2);
    common(sequiv);

    std::vector<std::string> argv{"htceq"};
    argv.insert(argv.end(), args.begin(), args.end());
    std::vector<char const *> raw;
    for (auto const &arg : argv) {
        raw.push_back(arg.c_str());
    }
    try {
        app.parse(static_cast<int>(raw.size()), raw.data());
    } catch (CLI::ParseError const &e) {
        auto const code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_error;
    }

    auto const command = app.get_subcommands().front()->get_name();
    try {
        return execute(command, config, out);
    } catch (BudgetExceeded const &e) {
        err << "htceq: budget exceeded: " << e.what() << "\n";
        return exit_budget;
    } catch (InputError const &e) {
        err << "htceq: " << e.what() << "\n";
        return command == "parse" ? exit_negative : exit_error;
    } catch (SemanticError const &e) {
        err << "htceq: " << e.what() << "\n";
        return exit_error;
    } catch (Error const &e) {
        err << "htceq: error: " << e.what() << "\n";
        return exit_error;
    }
}

} // namespace htceq::cli
