#include "htceq/syntax.hpp"

namespace htceq {

namespace {

std::string plural(std::size_t n, std::string_view noun) {
    return std::to_string(n) + " " + std::string{noun} + (n == 1 ? "" : "s");
}

std::string unsat() { return "UNSATISFIABLE (0 models)\n"; }

} // namespace

std::string render_program(TProgram const &p, LinearAtomSet const &founded) {
    std::string out = "#bounds " + p.bounds().to_string() + ".\n";
    for (auto const &atom : p.declared_externals()) {
        out += "#external " + atom.to_string() + ".\n";
    }
    for (auto const &atom : founded) {
        out += "#founded " + atom.to_string() + ".\n";
    }
    for (auto const &rule : p.rules()) {
        out += rule.to_string() + "\n";
    }
    return out;
}

std::string render_theory(TranslationOutput const &t) {
    std::string out;
    for (auto const &f : t.theory) {
        auto const &origin = t.origin_of(f);
        out += f.to_string() + "  % " + to_string(origin.origin);
        if (!origin.source.empty()) {
            out += " " + origin.source;
        }
        out += "\n";
    }
    return out;
}

std::string render_valuations(std::vector<Valuation> const &models, std::string_view label) {
    if (models.empty()) {
        return unsat();
    }
    std::string out;
    for (auto const &v : models) {
        out += std::string{label} + ": " + v.to_string() + "\n";
    }
    return out + plural(models.size(), label) + "\n";
}

std::string render_interpretations(std::vector<Interpretation> const &models) {
    if (models.empty()) {
        return unsat();
    }
    std::string out;
    for (auto const &i : models) {
        out += "model: " + i.to_string() + "\n";
    }
    return out + plural(models.size(), "model") + "\n";
}

std::string render_stable_models(std::set<TAtomSet> const &models) {
    if (models.empty()) {
        return unsat();
    }
    std::string out;
    for (auto const &x : models) {
        out += "stable model: " + to_string(x) + "\n";
    }
    return out + plural(models.size(), "stable model") + "\n";
}

std::string render_answer_sets(std::set<AnswerSet> const &answers) {
    if (answers.empty()) {
        return unsat();
    }
    std::string out;
    for (auto const &a : answers) {
        out += "answer set: " + a.to_string() + "\n";
    }
    return out + plural(answers.size(), "answer set") + "\n";
}

std::string render_verdict(SequivVerdict const &verdict, Signature const &sig) {
    if (auto const *eq = std::get_if<SequivEquivalent>(&verdict)) {
        return "Equivalent (bounds " + eq->bounds.to_string() + ")\n";
    }
    auto const &ne = std::get<SequivNotEquivalent>(verdict);
    std::string out = "Not equivalent (bounds " + ne.bounds.to_string() + ")\n";
    out += "countermodel: " + ne.countermodel.interpretation.to_string() + " satisfies " +
           (ne.countermodel.side == Side::left_only ? "the first" : "the second") + " program only\n";
    out += "witness context:\n";
    for (auto const &line : render_witness(ne.witness, sig)) {
        out += "  " + line + "\n";
    }
    auto models = [&](std::vector<Valuation> const &vs, char const *which) {
        out += std::string{"stable models with the "} + which + " program: " + std::to_string(vs.size()) + "\n";
        for (auto const &v : vs) {
            out += "  " + v.to_string() + "\n";
        }
    };
    models(ne.evidence.lhs, "first");
    models(ne.evidence.rhs, "second");
    return out;
}

} // namespace htceq
