#pragma once

#include "htceq/linear.hpp"
#include "htceq/modelsearch.hpp"
#include "htceq/value.hpp"

#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

namespace htceq {

//! Program atom: a regular proposition or a linear theory atom.
class TAtom {
  public:
    [[nodiscard]] static TAtom reg(std::string name);
    [[nodiscard]] static TAtom th(LinearAtom atom);

    [[nodiscard]] bool is_regular() const { return std::holds_alternative<std::string>(atom_); }
    [[nodiscard]] bool is_theory() const { return !is_regular(); }
    //! Only for regular atoms.
    [[nodiscard]] std::string const &name() const { return std::get<std::string>(atom_); }
    //! Only for theory atoms.
    [[nodiscard]] LinearAtom const &linear() const { return std::get<LinearAtom>(atom_); }
    //! Program syntax.
    [[nodiscard]] std::string to_string() const;

    friend auto operator<=>(TAtom const &, TAtom const &) = default;
    friend bool operator==(TAtom const &, TAtom const &) = default;

  private:
    explicit TAtom(std::variant<std::string, LinearAtom> atom)
    : atom_{std::move(atom)} {}

    std::variant<std::string, LinearAtom> atom_;
};

using TAtomSet = std::set<TAtom>;

//! `head :- pos, not neg.`; an empty head is ⊥.
struct Rule {
    std::optional<TAtom> head;
    std::vector<TAtom> pos;
    std::vector<TAtom> neg;

    [[nodiscard]] std::string to_string() const;
    friend auto operator<=>(Rule const &, Rule const &) = default;
    friend bool operator==(Rule const &, Rule const &) = default;
};

//! Program over regular and linear atoms with its external atoms and integer bounds.
//!
//! Construction closes the externals: every body theory atom is external, and the set is closed
//! under complement. Head theory atoms outside the externals are founded.
class TProgram {
  public:
    explicit TProgram(std::vector<Rule> rules = {}, LinearAtomSet declared_externals = {}, Bounds bounds = {});

    [[nodiscard]] std::vector<Rule> const &rules() const { return rules_; }
    [[nodiscard]] LinearAtomSet const &externals() const { return externals_; }
    [[nodiscard]] Bounds const &bounds() const { return bounds_; }
    //! Externals given explicitly (before the body/closure completion).
    [[nodiscard]] LinearAtomSet const &declared_externals() const { return declared_; }

    [[nodiscard]] LinearAtomSet founded() const;
    //! Theory atoms occurring in rules or in the externals.
    [[nodiscard]] LinearAtomSet theory_atoms() const;
    [[nodiscard]] LinearAtomSet head_theory_atoms() const;
    [[nodiscard]] std::set<std::string> regular_atoms() const;
    [[nodiscard]] VariableSet theory_variables() const;

    [[nodiscard]] TProgram with_bounds(Bounds bounds) const;
    [[nodiscard]] TProgram with_externals(LinearAtomSet const &extra) const;

    //! Rules of both programs, externals re-closed over the union.
    friend TProgram merge(TProgram const &lhs, TProgram const &rhs);
    friend bool operator==(TProgram const &, TProgram const &) = default;

  private:
    std::vector<Rule> rules_;
    LinearAtomSet declared_;
    LinearAtomSet externals_;
    Bounds bounds_;
};

[[nodiscard]] TProgram merge(TProgram const &lhs, TProgram const &rhs);

//! (Y, v): true regular atoms and an integer valuation of the theory variables.
struct AnswerSet {
    std::set<std::string> regular;
    Valuation valuation;

    //! "{a}, s=130"
    [[nodiscard]] std::string to_string() const;
    friend auto operator<=>(AnswerSet const &a, AnswerSet const &b) {
        if (auto c = a.regular <=> b.regular; c != 0) {
            return c;
        }
        if (a.valuation < b.valuation) {
            return std::strong_ordering::less;
        }
        return b.valuation < a.valuation ? std::strong_ordering::greater : std::strong_ordering::equal;
    }
    friend bool operator==(AnswerSet const &, AnswerSet const &) = default;
};

//! S ∪ comp(E \ S).
[[nodiscard]] LinearAtomSet comp_completion(LinearAtomSet const &s, LinearAtomSet const &externals);

//! Both S and its completion are satisfiable.
[[nodiscard]] bool is_solution(LinearAtomSet const &s, LinearAtomSet const &externals, LinearOptions const &opts);

//! Program with the choice `s | comp(s)` added once per complementary pair of externals.
//! Theory atoms are named by their program syntax.
[[nodiscard]] PropProgram choice_program(TProgram const &p);

//! Stable models by guessing a solution S first, plus every solution that was examined.
struct Def3Result {
    std::set<TAtomSet> models;
    std::vector<LinearAtomSet> solutions;
};

[[nodiscard]] Def3Result theory_stable_models_def3(TProgram const &p, SearchOptions const &opts = {});

//! Stable models of the choice program whose theory part is satisfiable.
[[nodiscard]] std::set<TAtomSet> theory_stable_models_def4(TProgram const &p, SearchOptions const &opts = {});

[[nodiscard]] std::set<AnswerSet> answer_sets(TProgram const &p, SearchOptions const &opts = {});

//! (Y,v) ⊨ atom (or ⊨ not atom when negated); theory atoms use existence of an agreeing total assignment.
[[nodiscard]] bool satisfies_literal(AnswerSet const &a, TAtom const &atom, bool negated, Bounds const &bounds);

//! Stable model that an answer set belongs to.
[[nodiscard]] TAtomSet stable_of_answer(TProgram const &p, AnswerSet const &a);

//! "{a, &sum{s}=130}"
[[nodiscard]] std::string to_string(TAtomSet const &atoms);

} // namespace htceq
