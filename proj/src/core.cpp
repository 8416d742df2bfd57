#include "htceq/core.hpp"

#include "htceq/error.hpp"

#include <algorithm>

namespace htceq {

// Subdomain

bool Subdomain::contains(DomainValue value) const {
    if (value.is_truth()) {
        return truth;
    }
    return integers && integers->contains(value.as_integer());
}

std::string Subdomain::to_string() const {
    if (truth && integers) {
        return "{t}+" + integers->to_string();
    }
    if (truth) {
        return "{t}";
    }
    if (integers) {
        return integers->to_string();
    }
    return "{}";
}

// ConstraintAtom

ConstraintAtom ConstraintAtom::regular(std::string name) {
    if (name.empty()) {
        throw PreconditionViolation{"regular atom needs a name"};
    }
    return ConstraintAtom{RegularAtom{std::move(name)}};
}

ConstraintAtom ConstraintAtom::linear(LinearAtom atom) { return ConstraintAtom{std::move(atom)}; }

ConstraintAtom ConstraintAtom::dom(std::string variable, Subdomain subdomain) {
    if (variable.empty()) {
        throw PreconditionViolation{"dom atom needs a variable"};
    }
    return ConstraintAtom{DomAtom{std::move(variable), subdomain}};
}

ConstraintAtom ConstraintAtom::def(std::string variable) {
    if (variable.empty()) {
        throw PreconditionViolation{"def atom needs a variable"};
    }
    return ConstraintAtom{DefAtom{std::move(variable)}};
}

VariableSet ConstraintAtom::vars() const {
    return std::visit(
        [](auto const &atom) -> VariableSet {
            using T = std::decay_t<decltype(atom)>;
            if constexpr (std::is_same_v<T, RegularAtom>) {
                return {atom.name};
            } else if constexpr (std::is_same_v<T, LinearAtom>) {
                return atom.vars();
            } else {
                return {atom.variable};
            }
        },
        atom_);
}

std::string ConstraintAtom::to_string() const {
    return std::visit(
        [](auto const &atom) -> std::string {
            using T = std::decay_t<decltype(atom)>;
            if constexpr (std::is_same_v<T, RegularAtom>) {
                return atom.name;
            } else if constexpr (std::is_same_v<T, LinearAtom>) {
                return atom.to_arith_string();
            } else if constexpr (std::is_same_v<T, DomAtom>) {
                return "dom(" + atom.variable + "," + atom.subdomain.to_string() + ")";
            } else {
                return "def(" + atom.variable + ")";
            }
        },
        atom_);
}

// Formula

Formula Formula::bot() {
    static Formula const instance{std::make_shared<Node const>(Node{FormulaKind::bot, std::nullopt, nullptr})};
    return instance;
}

Formula Formula::atom(ConstraintAtom c) {
    return Formula{std::make_shared<Node const>(Node{FormulaKind::atom, std::move(c), nullptr})};
}

Formula Formula::binary(FormulaKind kind, Formula lhs, Formula rhs) {
    return Formula{std::make_shared<Node const>(
        Node{kind, std::nullopt, std::make_unique<std::pair<Formula, Formula>>(std::move(lhs), std::move(rhs))})};
}

Formula Formula::conj(Formula lhs, Formula rhs) { return binary(FormulaKind::conj, std::move(lhs), std::move(rhs)); }
Formula Formula::disj(Formula lhs, Formula rhs) { return binary(FormulaKind::disj, std::move(lhs), std::move(rhs)); }
Formula Formula::implies(Formula lhs, Formula rhs) {
    return binary(FormulaKind::implies, std::move(lhs), std::move(rhs));
}
Formula Formula::top() { return implies(bot(), bot()); }
Formula Formula::neg(Formula f) { return implies(std::move(f), bot()); }

bool Formula::is_top() const {
    return kind() == FormulaKind::implies && lhs().kind() == FormulaKind::bot && rhs().kind() == FormulaKind::bot;
}

VariableSet Formula::vars() const {
    switch (kind()) {
    case FormulaKind::bot: return {};
    case FormulaKind::atom: return constraint().vars();
    default: {
        auto out = lhs().vars();
        out.merge(rhs().vars());
        return out;
    }
    }
}

namespace {

bool is_compound(Formula const &f) {
    return (f.kind() == FormulaKind::conj || f.kind() == FormulaKind::disj || f.kind() == FormulaKind::implies) &&
           !f.is_top() && !(f.kind() == FormulaKind::implies && f.rhs().kind() == FormulaKind::bot &&
                            f.lhs().kind() == FormulaKind::atom);
}

std::string wrap(Formula const &f) { return is_compound(f) ? "(" + f.to_string() + ")" : f.to_string(); }

} // namespace

std::string Formula::to_string() const {
    switch (kind()) {
    case FormulaKind::bot: return "#false";
    case FormulaKind::atom: return constraint().to_string();
    case FormulaKind::conj: return wrap(lhs()) + " & " + wrap(rhs());
    case FormulaKind::disj: return wrap(lhs()) + " | " + wrap(rhs());
    case FormulaKind::implies:
        if (is_top()) {
            return "#true";
        }
        if (rhs().kind() == FormulaKind::bot && lhs().kind() == FormulaKind::atom) {
            return "not " + lhs().to_string();
        }
        return wrap(lhs()) + " -> " + wrap(rhs());
    }
    return "?";
}

std::strong_ordering operator<=>(Formula const &a, Formula const &b) {
    if (a.node_ == b.node_) {
        return std::strong_ordering::equal;
    }
    if (auto c = a.kind() <=> b.kind(); c != 0) {
        return c;
    }
    switch (a.kind()) {
    case FormulaKind::bot: return std::strong_ordering::equal;
    case FormulaKind::atom: return a.constraint() <=> b.constraint();
    default:
        if (auto c = a.lhs() <=> b.lhs(); c != 0) {
            return c;
        }
        return a.rhs() <=> b.rhs();
    }
}

// Theory

Theory::Theory(std::initializer_list<Formula> formulas) {
    for (auto const &f : formulas) {
        insert(f);
    }
}

bool Theory::insert(Formula f) {
    if (!index_.insert(f).second) {
        return false;
    }
    formulas_.push_back(std::move(f));
    return true;
}

VariableSet Theory::vars() const {
    VariableSet out;
    for (auto const &f : formulas_) {
        out.merge(f.vars());
    }
    return out;
}

std::vector<ConstraintAtom> Theory::atoms() const {
    std::set<ConstraintAtom> seen;
    std::vector<ConstraintAtom> out;
    auto visit = [&](auto &self, Formula const &f) -> void {
        switch (f.kind()) {
        case FormulaKind::bot: return;
        case FormulaKind::atom:
            if (seen.insert(f.constraint()).second) {
                out.push_back(f.constraint());
            }
            return;
        default: self(self, f.lhs()); self(self, f.rhs());
        }
    };
    for (auto const &f : formulas_) {
        visit(visit, f);
    }
    return out;
}

Theory operator|(Theory lhs, Theory const &rhs) {
    for (auto const &f : rhs) {
        lhs.insert(f);
    }
    return lhs;
}

// Signature

void Signature::add(std::string const &name, VarKind kind) {
    auto [it, inserted] = vars_.emplace(name, kind);
    if (!inserted && it->second != kind) {
        throw SemanticError{"'" + name + "' is used both as a regular atom and as a theory variable"};
    }
}

void Signature::merge(Signature const &other) {
    for (auto const &[name, kind] : other.vars_) {
        add(name, kind);
    }
}

std::optional<VarKind> Signature::kind(std::string const &name) const {
    if (auto it = vars_.find(name); it != vars_.end()) {
        return it->second;
    }
    return std::nullopt;
}

Subdomain Signature::domain_of(std::string const &name) const {
    auto k = kind(name);
    if (!k) {
        throw UnknownVariable{name};
    }
    return *k == VarKind::regular ? Subdomain::truth_only() : Subdomain::interval(bounds_);
}

Signature Signature::of(Theory const &theory, Bounds bounds) {
    Signature sig{bounds};
    auto atoms = theory.atoms();
    for (auto const &atom : atoms) {
        if (auto const *reg = atom.as<RegularAtom>()) {
            sig.add_regular(reg->name);
        } else if (auto const *dom = atom.as<DomAtom>(); dom && dom->subdomain == Subdomain::truth_only()) {
            sig.add_regular(dom->variable);
        }
    }
    for (auto const &atom : atoms) {
        for (auto const &var : atom.vars()) {
            if (!sig.contains(var)) {
                sig.add_theory(var);
            }
        }
    }
    return sig;
}

// Interpretation

Interpretation::Interpretation(Valuation h, Valuation t)
: h_{std::move(h)}
, t_{std::move(t)} {
    if (!valuation_subset(h_, t_)) {
        throw PreconditionViolation{"interpretation requires h ⊆ t: " + h_.to_string() + " vs " + t_.to_string()};
    }
}

std::string Interpretation::to_string() const { return "<" + h_.to_string() + ", " + t_.to_string() + ">"; }

// Semantics

bool den_member(ConstraintAtom const &atom, Valuation const &v, Signature const &sig) {
    for (auto const &var : atom.vars()) {
        if (!sig.contains(var)) {
            throw UnknownVariable{var};
        }
    }
    return std::visit(
        [&](auto const &a) -> bool {
            using T = std::decay_t<decltype(a)>;
            if constexpr (std::is_same_v<T, RegularAtom>) {
                auto value = v.get(a.name);
                return value && value->is_truth();
            } else if constexpr (std::is_same_v<T, LinearAtom>) {
                return den_member_linear(a, v, sig.bounds());
            } else if constexpr (std::is_same_v<T, DomAtom>) {
                auto value = v.get(a.variable);
                return value && a.subdomain.contains(*value);
            } else {
                return v.defined(a.variable);
            }
        },
        atom.get());
}

namespace {

bool holds(Valuation const &w, Valuation const &t, Formula const &f, Signature const &sig) {
    switch (f.kind()) {
    case FormulaKind::bot: return false;
    case FormulaKind::atom: return den_member(f.constraint(), w, sig);
    case FormulaKind::conj: return holds(w, t, f.lhs(), sig) && holds(w, t, f.rhs(), sig);
    case FormulaKind::disj: return holds(w, t, f.lhs(), sig) || holds(w, t, f.rhs(), sig);
    case FormulaKind::implies: {
        auto there = !holds(t, t, f.lhs(), sig) || holds(t, t, f.rhs(), sig);
        if (&w == &t || !there) {
            return there;
        }
        return !holds(w, t, f.lhs(), sig) || holds(w, t, f.rhs(), sig);
    }
    }
    return false;
}

} // namespace

bool satisfies(Interpretation const &i, Formula const &f, Signature const &sig) {
    return holds(i.here(), i.there(), f, sig);
}

bool is_model(Interpretation const &i, Theory const &theory, Signature const &sig) {
    return std::all_of(theory.begin(), theory.end(), [&](Formula const &f) { return satisfies(i, f, sig); });
}

Formula substitute(Formula const &f, ConstraintAtom const &c, Formula const &replacement) {
    switch (f.kind()) {
    case FormulaKind::bot: return f;
    case FormulaKind::atom: return f.constraint() == c ? replacement : f;
    case FormulaKind::conj: return Formula::conj(substitute(f.lhs(), c, replacement), substitute(f.rhs(), c, replacement));
    case FormulaKind::disj: return Formula::disj(substitute(f.lhs(), c, replacement), substitute(f.rhs(), c, replacement));
    case FormulaKind::implies:
        return Formula::implies(substitute(f.lhs(), c, replacement), substitute(f.rhs(), c, replacement));
    }
    return f;
}

} // namespace htceq
