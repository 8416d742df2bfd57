#pragma once

#include "htceq/core.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

namespace htceq {

//! Limits shared by every enumeration.
struct SearchOptions {
    //! Cap on enumerated interpretations (or assignments / candidate sets).
    std::uint64_t budget = default_budget;
    //! Number of threads the t-valuation stream is partitioned across.
    unsigned workers = 1;
};

//! Finite valuation space: each variable takes a value from its menu or stays undefined.
//!
//! Canonical order: variables sorted by name, first variable most significant; within a
//! variable, values ascending (t before integers) and undefined last.
class ValuationSpace {
  public:
    //! Regular variables get {t}, theory variables the signature's bounds.
    explicit ValuationSpace(Signature const &sig, std::optional<VariableSet> const &restriction = std::nullopt);

    [[nodiscard]] Signature const &signature() const { return sig_; }
    [[nodiscard]] std::vector<std::string> const &variables() const { return names_; }
    [[nodiscard]] std::vector<std::vector<DomainValue>> const &menus() const { return menus_; }
    //! Number of t-valuations: product of (menu size + 1).
    [[nodiscard]] double valuation_count() const;
    //! Number of pairs h ⊆ t: product of (2 * menu size + 1).
    [[nodiscard]] double interpretation_count() const;

  private:
    Signature sig_;
    std::vector<std::string> names_;
    std::vector<std::vector<DomainValue>> menus_;
};

//! Every valuation of the space exactly once, in canonical order.
[[nodiscard]] std::vector<Valuation> enumerate_t_valuations(ValuationSpace const &space, SearchOptions const &opts = {});

//! All ⟨h,t⟩ of the space satisfying the theory; t in canonical order, then h from t downwards
//! (kept-variable bitmask descending, first variable most significant).
[[nodiscard]] std::vector<Interpretation> models(Theory const &theory, ValuationSpace const &space,
                                                 SearchOptions const &opts = {});

//! All t with ⟨t,t⟩ ⊨ Γ and no h ⊂ t in the space with ⟨h,t⟩ ⊨ Γ, in canonical order.
[[nodiscard]] std::vector<Valuation> equilibrium_models(Theory const &theory, ValuationSpace const &space,
                                                        SearchOptions const &opts = {});

enum class Side { left_only, right_only };

struct Equivalent {};
struct Countermodel {
    Interpretation interpretation;
    //! Which theory the interpretation satisfies.
    Side side;
};
using HtcVerdict = std::variant<Equivalent, Countermodel>;

//! Same HTc models over the space; otherwise the first separating interpretation in canonical order.
[[nodiscard]] HtcVerdict htc_equivalent(Theory const &lhs, Theory const &rhs, ValuationSpace const &space,
                                        SearchOptions const &opts = {});

//! Propositional rule: disjunctive head (empty means ⊥), positive and negative body.
struct PropRule {
    std::vector<std::string> head;
    std::vector<std::string> pos;
    std::vector<std::string> neg;

    [[nodiscard]] std::string to_string() const;
    friend auto operator<=>(PropRule const &, PropRule const &) = default;
};

//! Propositional program; every atom is a proposition.
struct PropProgram {
    std::vector<PropRule> rules;

    [[nodiscard]] std::set<std::string> atoms() const;
    //! Rules as HT formulas over regular atoms, `body -> head`.
    [[nodiscard]] Theory to_theory() const;
};

using AtomSet = std::set<std::string>;

//! Sets X whose characteristic valuation is an equilibrium model of the program read as HT formulas.
[[nodiscard]] std::set<AtomSet> regular_stable_models(PropProgram const &program, SearchOptions const &opts = {});

} // namespace htceq
