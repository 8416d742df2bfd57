#pragma once

#include "htceq/value.hpp"

#include <concepts>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

namespace htceq {

enum class Comparator { le, eq, ne, lt, gt, ge };

[[nodiscard]] char const *to_string(Comparator cmp);
//! Negated comparator: <= and >, = and !=, < and >= swap.
[[nodiscard]] Comparator complement(Comparator cmp);
[[nodiscard]] bool compare(Integer lhs, Comparator cmp, Integer rhs);

struct Term {
    Integer coefficient = 1;
    std::string variable;

    friend auto operator<=>(Term const &, Term const &) = default;
};

//! Linear constraint `&sum{k1*x1;...;kn*xn} cmp k0`.
//!
//! Identity is syntactic: terms keep their input order and are never merged, so
//! `&sum{x}>0` and `&sum{x}>=1` are different atoms.
class LinearAtom {
  public:
    LinearAtom(std::vector<Term> terms, Comparator cmp, Integer bound);

    [[nodiscard]] std::vector<Term> const &terms() const { return terms_; }
    [[nodiscard]] Comparator comparator() const { return cmp_; }
    [[nodiscard]] Integer bound() const { return bound_; }
    [[nodiscard]] VariableSet vars() const;

    //! Program syntax, e.g. `&sum{2*x;-1*y}<=5`.
    [[nodiscard]] std::string to_string() const;
    //! Arithmetic form used inside formulas, e.g. `2*x-y<=5`.
    [[nodiscard]] std::string to_arith_string() const;

    friend auto operator<=>(LinearAtom const &, LinearAtom const &) = default;

  private:
    std::vector<Term> terms_;
    Comparator cmp_;
    Integer bound_;
};

using LinearAtomSet = std::set<LinearAtom>;
//! Total assignment of integers to theory variables.
using Assignment = std::map<std::string, Integer>;

[[nodiscard]] LinearAtom complement(LinearAtom const &atom);
[[nodiscard]] LinearAtomSet complement(LinearAtomSet const &atoms);
[[nodiscard]] VariableSet vars(LinearAtomSet const &atoms);

//! Evaluates the atom with `values[i]` standing for the variable of `terms()[i]`.
//! Throws ArithmeticOverflow instead of wrapping.
[[nodiscard]] bool eval_linear(LinearAtom const &atom, std::span<Integer const> values);
//! Throws PreconditionViolation when w leaves a variable of the atom unassigned.
[[nodiscard]] bool eval_linear(LinearAtom const &atom, Assignment const &w);

//! Settings for bounded satisfiability.
struct LinearOptions {
    Bounds bounds;
    std::uint64_t budget = default_budget;
};

//! Assignments over vars(atoms) (or `over` when given) within the bounds that satisfy all atoms,
//! in lexicographic order of the variable names.
[[nodiscard]] std::vector<Assignment> denotation(LinearAtomSet const &atoms, LinearOptions const &opts,
                                                 std::optional<VariableSet> const &over = std::nullopt);
//! First satisfying assignment, if any.
[[nodiscard]] std::optional<Assignment> find_witness(LinearAtomSet const &atoms, LinearOptions const &opts);
//! Some total assignment of vars(atoms) into the bounds satisfies every atom.
[[nodiscard]] bool sat(LinearAtomSet const &atoms, LinearOptions const &opts);

//! Bound integers for every variable of the atom, and the atom holds there.
[[nodiscard]] bool den_member_linear(LinearAtom const &atom, Valuation const &v, Bounds const &bounds);

//! Interface of a structured, compositional theory with an absolute complement.
template <typename T>
concept StructuredTheory = requires(T const &theory, typename T::atom_type const &atom,
                                    std::set<typename T::atom_type> const &atoms, Assignment const &w) {
    { theory.complement(atom) } -> std::same_as<typename T::atom_type>;
    { theory.sat(atoms) } -> std::same_as<bool>;
    { theory.vars(atom) } -> std::same_as<VariableSet>;
    { theory.den_member_total(atom, w) } -> std::same_as<bool>;
};

//! The theory of linear constraints over a bounded integer interval.
class LinearTheory {
  public:
    using atom_type = LinearAtom;

    explicit LinearTheory(LinearOptions opts = {})
    : opts_{opts} {}

    [[nodiscard]] LinearOptions const &options() const { return opts_; }
    [[nodiscard]] LinearAtom complement(LinearAtom const &atom) const { return htceq::complement(atom); }
    [[nodiscard]] bool sat(LinearAtomSet const &atoms) const { return htceq::sat(atoms, opts_); }
    [[nodiscard]] VariableSet vars(LinearAtom const &atom) const { return atom.vars(); }
    //! Membership of a total assignment; values outside the bounds are not in the denotation.
    [[nodiscard]] bool den_member_total(LinearAtom const &atom, Assignment const &w) const;

  private:
    LinearOptions opts_;
};

static_assert(StructuredTheory<LinearTheory>);

} // namespace htceq
