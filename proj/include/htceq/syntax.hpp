#pragma once

#include "htceq/modelsearch.hpp"
#include "htceq/program.hpp"
#include "htceq/sequiv.hpp"
#include "htceq/translate.hpp"

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace htceq {

//! Parsed program text together with its directives.
struct SourceProgram {
    std::string text;
    //! Bounds are the directive's, or the defaults when there is none.
    TProgram program;
    std::optional<Bounds> bounds;
    LinearAtomSet externals;
    LinearAtomSet founded;
};

//! Throws SyntaxError or SemanticError (with position where one exists); never anything else.
[[nodiscard]] SourceProgram parse_program(std::string_view text);

//! Canonical program text: `#bounds`, `#external` and `#founded` directives, then the rules.
[[nodiscard]] std::string render_program(TProgram const &p, LinearAtomSet const &founded = {});

//! One formula per line, followed by its origin.
[[nodiscard]] std::string render_theory(TranslationOutput const &t);

[[nodiscard]] std::string render_valuations(std::vector<Valuation> const &models, std::string_view label);
[[nodiscard]] std::string render_interpretations(std::vector<Interpretation> const &models);
[[nodiscard]] std::string render_stable_models(std::set<TAtomSet> const &models);
[[nodiscard]] std::string render_answer_sets(std::set<AnswerSet> const &answers);
[[nodiscard]] std::string render_verdict(SequivVerdict const &verdict, Signature const &sig);

} // namespace htceq
