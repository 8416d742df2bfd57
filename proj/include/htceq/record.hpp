#pragma once

#include "htceq/syntax.hpp"

#include <json.hpp>

namespace htceq {

//! Version tag of the structured-record schema.
inline constexpr char const *record_schema = "htceq/1";

//! Valuations are lists of {"name", "value"} objects sorted by name; undefined variables are omitted
//! and the truth value is the string "t".
[[nodiscard]] nlohmann::ordered_json record_valuation(Valuation const &v);
[[nodiscard]] nlohmann::ordered_json record_interpretation(Interpretation const &i);
[[nodiscard]] nlohmann::ordered_json record_program(TProgram const &p, LinearAtomSet const &founded = {});
[[nodiscard]] nlohmann::ordered_json record_theory(TranslationOutput const &t);
[[nodiscard]] nlohmann::ordered_json record_valuations(std::vector<Valuation> const &models);
[[nodiscard]] nlohmann::ordered_json record_interpretations(std::vector<Interpretation> const &models);
[[nodiscard]] nlohmann::ordered_json record_stable_models(std::set<TAtomSet> const &models);
[[nodiscard]] nlohmann::ordered_json record_answer_sets(std::set<AnswerSet> const &answers);
[[nodiscard]] nlohmann::ordered_json record_verdict(SequivVerdict const &verdict, Signature const &sig);

//! {"schema", "kind", "bounds": {"lo", "hi"}, "budget", "payload"}
[[nodiscard]] nlohmann::ordered_json make_record(std::string const &kind, Bounds const &bounds, std::uint64_t budget,
                                                 nlohmann::ordered_json payload);

} // namespace htceq
