#pragma once

#include "htceq/linear.hpp"
#include "htceq/value.hpp"

#include <compare>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

namespace htceq {

//! Subset of the domain {t} ∪ Z used by Dom atoms: optionally the truth value, optionally an interval.
struct Subdomain {
    bool truth = false;
    std::optional<Bounds> integers;

    [[nodiscard]] static Subdomain truth_only() { return {true, std::nullopt}; }
    [[nodiscard]] static Subdomain interval(Bounds b) { return {false, b}; }

    [[nodiscard]] bool contains(DomainValue value) const;
    [[nodiscard]] std::string to_string() const;

    friend auto operator<=>(Subdomain const &, Subdomain const &) = default;
};

struct RegularAtom {
    std::string name;
    friend auto operator<=>(RegularAtom const &, RegularAtom const &) = default;
};

struct DomAtom {
    std::string variable;
    Subdomain subdomain;
    friend auto operator<=>(DomAtom const &, DomAtom const &) = default;
};

//! def(x): x has some value.
struct DefAtom {
    std::string variable;
    friend auto operator<=>(DefAtom const &, DefAtom const &) = default;
};

//! Constraint atom of an HTc signature.
class ConstraintAtom {
  public:
    using Variant = std::variant<RegularAtom, LinearAtom, DomAtom, DefAtom>;

    [[nodiscard]] static ConstraintAtom regular(std::string name);
    [[nodiscard]] static ConstraintAtom linear(LinearAtom atom);
    [[nodiscard]] static ConstraintAtom dom(std::string variable, Subdomain subdomain);
    [[nodiscard]] static ConstraintAtom def(std::string variable);

    [[nodiscard]] Variant const &get() const { return atom_; }
    template <typename T> [[nodiscard]] T const *as() const { return std::get_if<T>(&atom_); }
    [[nodiscard]] VariableSet vars() const;
    //! Formula-level syntax: `a`, `s>=120`, `def(s)`, `dom(s,0..200)`.
    [[nodiscard]] std::string to_string() const;

    friend auto operator<=>(ConstraintAtom const &, ConstraintAtom const &) = default;
    friend bool operator==(ConstraintAtom const &, ConstraintAtom const &) = default;

  private:
    explicit ConstraintAtom(Variant atom)
    : atom_{std::move(atom)} {}

    Variant atom_;
};

enum class FormulaKind { bot, atom, conj, disj, implies };

//! Immutable formula tree; copies share structure.
class Formula {
  public:
    [[nodiscard]] static Formula bot();
    [[nodiscard]] static Formula atom(ConstraintAtom c);
    [[nodiscard]] static Formula conj(Formula lhs, Formula rhs);
    [[nodiscard]] static Formula disj(Formula lhs, Formula rhs);
    [[nodiscard]] static Formula implies(Formula lhs, Formula rhs);
    //! ⊥ → ⊥
    [[nodiscard]] static Formula top();
    //! φ → ⊥
    [[nodiscard]] static Formula neg(Formula f);

    [[nodiscard]] FormulaKind kind() const { return node_->kind; }
    //! Only for FormulaKind::atom.
    [[nodiscard]] ConstraintAtom const &constraint() const { return *node_->atom; }
    [[nodiscard]] Formula const &lhs() const { return node_->children->first; }
    [[nodiscard]] Formula const &rhs() const { return node_->children->second; }
    [[nodiscard]] bool is_top() const;
    [[nodiscard]] VariableSet vars() const;
    [[nodiscard]] std::string to_string() const;

    friend std::strong_ordering operator<=>(Formula const &a, Formula const &b);
    friend bool operator==(Formula const &a, Formula const &b) { return (a <=> b) == 0; }

  private:
    struct Node {
        FormulaKind kind;
        std::optional<ConstraintAtom> atom;
        std::unique_ptr<std::pair<Formula, Formula>> children;
    };

    explicit Formula(std::shared_ptr<Node const> node)
    : node_{std::move(node)} {}
    static Formula binary(FormulaKind kind, Formula lhs, Formula rhs);

    std::shared_ptr<Node const> node_;
};

//! Set of formulas iterated in insertion order.
class Theory {
  public:
    Theory() = default;
    Theory(std::initializer_list<Formula> formulas);

    //! False when the formula was already present.
    bool insert(Formula f);
    [[nodiscard]] bool contains(Formula const &f) const { return index_.count(f) > 0; }
    [[nodiscard]] std::size_t size() const { return formulas_.size(); }
    [[nodiscard]] bool empty() const { return formulas_.empty(); }
    [[nodiscard]] auto begin() const { return formulas_.begin(); }
    [[nodiscard]] auto end() const { return formulas_.end(); }
    [[nodiscard]] std::vector<Formula> const &formulas() const { return formulas_; }
    [[nodiscard]] VariableSet vars() const;
    [[nodiscard]] std::vector<ConstraintAtom> atoms() const;

    friend Theory operator|(Theory lhs, Theory const &rhs);
    friend bool operator==(Theory const &a, Theory const &b) { return a.index_ == b.index_; }

  private:
    std::vector<Formula> formulas_;
    std::set<Formula> index_;
};

enum class VarKind { regular, theory };

//! Variables of an HTc signature with their kinds and the integer interval of theory variables.
//! Regular variables range over {t}; theory variables over the bounds.
class Signature {
  public:
    Signature() = default;
    explicit Signature(Bounds bounds)
    : bounds_{bounds} {}

    //! Throws SemanticError when the name is already registered with the other kind.
    void add(std::string const &name, VarKind kind);
    void add_regular(std::string const &name) { add(name, VarKind::regular); }
    void add_theory(std::string const &name) { add(name, VarKind::theory); }
    void merge(Signature const &other);

    [[nodiscard]] std::optional<VarKind> kind(std::string const &name) const;
    [[nodiscard]] bool contains(std::string const &name) const { return vars_.count(name) > 0; }
    [[nodiscard]] Bounds const &bounds() const { return bounds_; }
    [[nodiscard]] std::map<std::string, VarKind> const &variables() const { return vars_; }
    //! Domain of the variable: {t} or the bounds.
    [[nodiscard]] Subdomain domain_of(std::string const &name) const;

    //! Infers kinds from a theory: regular-atom and truth-only Dom variables are regular, everything else
    //! is a theory variable.
    [[nodiscard]] static Signature of(Theory const &theory, Bounds bounds);

    friend bool operator==(Signature const &, Signature const &) = default;

  private:
    std::map<std::string, VarKind> vars_;
    Bounds bounds_;
};

//! A pair ⟨h,t⟩ with h ⊆ t.
class Interpretation {
  public:
    //! Throws PreconditionViolation unless h ⊆ t.
    Interpretation(Valuation h, Valuation t);

    [[nodiscard]] Valuation const &here() const { return h_; }
    [[nodiscard]] Valuation const &there() const { return t_; }
    [[nodiscard]] bool total() const { return h_ == t_; }
    [[nodiscard]] std::string to_string() const;

    friend bool operator==(Interpretation const &, Interpretation const &) = default;
    friend bool operator<(Interpretation const &a, Interpretation const &b) {
        return a.t_ < b.t_ || (a.t_ == b.t_ && a.h_ < b.h_);
    }

  private:
    Valuation h_;
    Valuation t_;
};

//! v ∈ ⟦atom⟧. Throws UnknownVariable if the atom mentions a variable outside the signature.
[[nodiscard]] bool den_member(ConstraintAtom const &atom, Valuation const &v, Signature const &sig);

//! ⟨h,t⟩ ⊨ φ.
[[nodiscard]] bool satisfies(Interpretation const &i, Formula const &f, Signature const &sig);

//! ⟨h,t⟩ ⊨ φ for every φ ∈ Γ.
[[nodiscard]] bool is_model(Interpretation const &i, Theory const &theory, Signature const &sig);

//! φ[c/ψ]: every occurrence of atom c replaced by ψ.
[[nodiscard]] Formula substitute(Formula const &f, ConstraintAtom const &c, Formula const &replacement);

} // namespace htceq
