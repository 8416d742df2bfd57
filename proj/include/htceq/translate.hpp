#pragma once

#include "htceq/core.hpp"
#include "htceq/modelsearch.hpp"
#include "htceq/program.hpp"

#include <map>
#include <string>
#include <string_view>

namespace htceq {

//! Identifiers starting with this prefix are reserved for the auxiliary propositions of the
//! decoupled translation.
inline constexpr std::string_view reserved_prefix = "__";

enum class Origin { rule, sem, dom, phi, choice };

[[nodiscard]] char const *to_string(Origin origin);

struct Provenance {
    Origin origin;
    //! Source rule or atom in program syntax; empty for axioms tied to a variable only.
    std::string source;
};

//! HTc theory with the signature it lives in and the origin of every formula.
struct TranslationOutput {
    Theory theory;
    Signature signature;
    std::map<Formula, Provenance> provenance;

    //! Inserts f unless already present (the first origin wins).
    void add(Formula f, Origin origin, std::string source = {});
    [[nodiscard]] Provenance const &origin_of(Formula const &f) const { return provenance.at(f); }
};

[[nodiscard]] ConstraintAtom tau_atom(TAtom const &atom);

//! Body conjunction (positive atoms, then negated negative atoms) implying the head; ⊤ for an
//! empty body, ⊥ for an empty head.
[[nodiscard]] Formula tau_rule(Rule const &rule);

//! Rules, then def(x) for every variable of an external atom, then the domain axioms
//! `def(a) -> a` and `def(x) -> dom(x, bounds)`.
[[nodiscard]] TranslationOutput tau_program(TProgram const &p);

//! The program read propositionally, plus one `s | comp(s)` fact per complementary external pair.
[[nodiscard]] PropProgram kappa(TProgram const &p);

//! Name of the auxiliary proposition standing for a theory atom.
[[nodiscard]] std::string prop_variable(LinearAtom const &atom);

//! Propositional encoding over auxiliary propositions, `prop(s) -> s` for every theory atom,
//! and domain axioms for regular atoms, auxiliary propositions, and theory variables.
[[nodiscard]] TranslationOutput tau2_program(TProgram const &p);

//! Drops auxiliary proposition bindings, mapping decoupled-translation valuations back onto the
//! variables of the direct translation.
[[nodiscard]] Valuation strip_auxiliary(Valuation const &v);

//! t = v ∪ {a ↦ t | a ∈ Y}.
[[nodiscard]] Valuation to_valuation(AnswerSet const &a);

} // namespace htceq
