#include "htceq/record.hpp"

namespace htceq {

using nlohmann::ordered_json;

ordered_json record_valuation(Valuation const &v) {
    auto out = ordered_json::array();
    for (auto const &[name, value] : v) {
        ordered_json entry{{"name", name}};
        if (value.is_truth()) {
            entry["value"] = "t";
        } else {
            entry["value"] = value.as_integer();
        }
        out.push_back(std::move(entry));
    }
    return out;
}

ordered_json record_interpretation(Interpretation const &i) {
    return {{"here", record_valuation(i.here())}, {"there", record_valuation(i.there())}};
}

ordered_json record_program(TProgram const &p, LinearAtomSet const &founded) {
    auto strings = [](auto const &items) {
        auto out = ordered_json::array();
        for (auto const &item : items) {
            out.push_back(item.to_string());
        }
        return out;
    };
    return {{"rules", strings(p.rules())},
            {"declared_externals", strings(p.declared_externals())},
            {"externals", strings(p.externals())},
            {"founded", strings(p.founded())},
            {"founded_directives", strings(founded)},
            {"text", render_program(p, founded)}};
}

ordered_json record_theory(TranslationOutput const &t) {
    auto formulas = ordered_json::array();
    for (auto const &f : t.theory) {
        auto const &origin = t.origin_of(f);
        formulas.push_back({{"formula", f.to_string()}, {"origin", to_string(origin.origin)}, {"source", origin.source}});
    }
    auto variables = ordered_json::array();
    for (auto const &[name, kind] : t.signature.variables()) {
        variables.push_back({{"name", name}, {"kind", kind == VarKind::regular ? "regular" : "theory"}});
    }
    return {{"variables", std::move(variables)}, {"formulas", std::move(formulas)}};
}

ordered_json record_valuations(std::vector<Valuation> const &models) {
    auto out = ordered_json::array();
    for (auto const &v : models) {
        out.push_back(record_valuation(v));
    }
    return out;
}

ordered_json record_interpretations(std::vector<Interpretation> const &models) {
    auto out = ordered_json::array();
    for (auto const &i : models) {
        out.push_back(record_interpretation(i));
    }
    return out;
}

ordered_json record_stable_models(std::set<TAtomSet> const &models) {
    auto out = ordered_json::array();
    for (auto const &x : models) {
        auto atoms = ordered_json::array();
        for (auto const &atom : x) {
            atoms.push_back(atom.to_string());
        }
        out.push_back(std::move(atoms));
    }
    return out;
}

ordered_json record_answer_sets(std::set<AnswerSet> const &answers) {
    auto out = ordered_json::array();
    for (auto const &a : answers) {
        out.push_back({{"regular", a.regular}, {"valuation", record_valuation(a.valuation)}});
    }
    return out;
}

ordered_json record_verdict(SequivVerdict const &verdict, Signature const &sig) {
    if (std::holds_alternative<SequivEquivalent>(verdict)) {
        return {{"equivalent", true}};
    }
    auto const &ne = std::get<SequivNotEquivalent>(verdict);
    auto witness = ordered_json::array();
    for (auto const &f : ne.witness) {
        witness.push_back(f.to_string());
    }
    return {{"equivalent", false},
            {"countermodel", record_interpretation(ne.countermodel.interpretation)},
            {"satisfied_by", ne.countermodel.side == Side::left_only ? "first" : "second"},
            {"witness", std::move(witness)},
            {"witness_program", render_witness(ne.witness, sig)},
            {"evidence", {{"first", record_valuations(ne.evidence.lhs)}, {"second", record_valuations(ne.evidence.rhs)}}}};
}

ordered_json make_record(std::string const &kind, Bounds const &bounds, std::uint64_t budget, ordered_json payload) {
    return {{"schema", record_schema},
            {"kind", kind},
            {"bounds", {{"lo", bounds.lo()}, {"hi", bounds.hi()}}},
            {"budget", budget},
            {"payload", std::move(payload)}};
}

} // namespace htceq
