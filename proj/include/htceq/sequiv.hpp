#pragma once

#include "htceq/core.hpp"
#include "htceq/modelsearch.hpp"
#include "htceq/program.hpp"

#include <string>
#include <variant>
#include <vector>

namespace htceq {

//! Equilibrium models of both programs extended with a context.
struct WitnessCheck {
    bool differ = false;
    std::vector<Valuation> lhs;
    std::vector<Valuation> rhs;
};

struct SequivEquivalent {
    Bounds bounds;
};

struct SequivNotEquivalent {
    Bounds bounds;
    Countermodel countermodel;
    //! Def facts and Def <- Def rules.
    Theory witness;
    WitnessCheck evidence;
};

using SequivVerdict = std::variant<SequivEquivalent, SequivNotEquivalent>;

//! Signature over the variables of both translations.
[[nodiscard]] Signature joint_signature(TProgram const &p, TProgram const &q);

//! Decides HTc equivalence of the translations over the shared bounds. A countermodel comes with a
//! context that is checked to separate the stable models before it is returned.
[[nodiscard]] SequivVerdict strong_equivalent(TProgram const &p, TProgram const &q, SearchOptions const &opts = {});

//! Context separating the stable models of `satisfied` and `violated`, given an interpretation that is
//! a model of the first theory only.
//!
//! When ⟨t,t⟩ fails `violated`: def(x) for every x defined in t. Otherwise def(x) for every x defined
//! in h, plus def(x) <- def(y) for all x, y defined in t but not in h (x = y included).
[[nodiscard]] Theory witness_context(Theory const &satisfied, Theory const &violated, Interpretation const &cm,
                                     Signature const &sig);

[[nodiscard]] WitnessCheck verify_witness(TProgram const &p, TProgram const &q, Theory const &delta,
                                          SearchOptions const &opts = {});

//! Program-level form of a witness: `&dom{lo..hi}(x)` for theory variables, the atom itself for
//! regular ones.
[[nodiscard]] std::vector<std::string> render_witness(Theory const &delta, Signature const &sig);

} // namespace htceq
