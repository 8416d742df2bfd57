#include "htceq/linear.hpp"

#include "htceq/error.hpp"

#include <algorithm>
#include <cmath>

namespace htceq {

char const *to_string(Comparator cmp) {
    switch (cmp) {
    case Comparator::le: return "<=";
    case Comparator::eq: return "=";
    case Comparator::ne: return "!=";
    case Comparator::lt: return "<";
    case Comparator::gt: return ">";
    case Comparator::ge: return ">=";
    }
    return "?";
}

Comparator complement(Comparator cmp) {
    switch (cmp) {
    case Comparator::le: return Comparator::gt;
    case Comparator::eq: return Comparator::ne;
    case Comparator::ne: return Comparator::eq;
    case Comparator::lt: return Comparator::ge;
    case Comparator::gt: return Comparator::le;
    case Comparator::ge: return Comparator::lt;
    }
    return cmp;
}

bool compare(Integer lhs, Comparator cmp, Integer rhs) {
    switch (cmp) {
    case Comparator::le: return lhs <= rhs;
    case Comparator::eq: return lhs == rhs;
    case Comparator::ne: return lhs != rhs;
    case Comparator::lt: return lhs < rhs;
    case Comparator::gt: return lhs > rhs;
    case Comparator::ge: return lhs >= rhs;
    }
    return false;
}

LinearAtom::LinearAtom(std::vector<Term> terms, Comparator cmp, Integer bound)
: terms_{std::move(terms)}
, cmp_{cmp}
, bound_{bound} {
    if (terms_.empty()) {
        throw PreconditionViolation{"linear atom needs at least one term"};
    }
    for (auto const &term : terms_) {
        if (term.variable.empty()) {
            throw PreconditionViolation{"linear term without variable"};
        }
    }
}

VariableSet LinearAtom::vars() const {
    VariableSet out;
    for (auto const &term : terms_) {
        out.insert(term.variable);
    }
    return out;
}

std::string LinearAtom::to_string() const {
    std::string out = "&sum{";
    bool first = true;
    for (auto const &term : terms_) {
        if (!first) {
            out += ";";
        }
        first = false;
        if (term.coefficient != 1) {
            out += std::to_string(term.coefficient) + "*";
        }
        out += term.variable;
    }
    return out + "}" + htceq::to_string(cmp_) + std::to_string(bound_);
}

std::string LinearAtom::to_arith_string() const {
    std::string out;
    bool first = true;
    for (auto const &term : terms_) {
        Integer const k = term.coefficient;
        auto const magnitude = k < 0 ? 0 - static_cast<std::uint64_t>(k) : static_cast<std::uint64_t>(k);
        if (first) {
            out += k < 0 ? "-" : "";
        } else {
            out += k < 0 ? "-" : "+";
        }
        first = false;
        if (magnitude != 1) {
            out += std::to_string(magnitude) + "*";
        }
        out += term.variable;
    }
    return out + htceq::to_string(cmp_) + std::to_string(bound_);
}

LinearAtom complement(LinearAtom const &atom) {
    return LinearAtom{atom.terms(), complement(atom.comparator()), atom.bound()};
}

LinearAtomSet complement(LinearAtomSet const &atoms) {
    LinearAtomSet out;
    for (auto const &atom : atoms) {
        out.insert(complement(atom));
    }
    return out;
}

VariableSet vars(LinearAtomSet const &atoms) {
    VariableSet out;
    for (auto const &atom : atoms) {
        out.merge(atom.vars());
    }
    return out;
}

bool eval_linear(LinearAtom const &atom, std::span<Integer const> values) {
    auto const &terms = atom.terms();
    if (values.size() != terms.size()) {
        throw PreconditionViolation{"eval_linear: value count does not match term count"};
    }
    Integer sum = 0;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        Integer product = 0;
        if (__builtin_mul_overflow(terms[i].coefficient, values[i], &product) ||
            __builtin_add_overflow(sum, product, &sum)) {
            throw ArithmeticOverflow{"overflow evaluating " + atom.to_string()};
        }
    }
    return compare(sum, atom.comparator(), atom.bound());
}

bool eval_linear(LinearAtom const &atom, Assignment const &w) {
    std::vector<Integer> values;
    values.reserve(atom.terms().size());
    for (auto const &term : atom.terms()) {
        auto it = w.find(term.variable);
        if (it == w.end()) {
            throw PreconditionViolation{"eval_linear: variable " + term.variable + " is unassigned"};
        }
        values.push_back(it->second);
    }
    return eval_linear(atom, values);
}

namespace {

// Atom with its term variables resolved to positions in an ordered variable list.
struct IndexedAtom {
    LinearAtom const *atom;
    std::vector<std::size_t> slots;
};

template <typename Visit>
void enumerate_satisfying(LinearAtomSet const &atoms, LinearOptions const &opts, VariableSet const &over,
                          Visit &&visit) {
    std::vector<std::string> names(over.begin(), over.end());
    double const size = std::pow(opts.bounds.size(), static_cast<double>(names.size()));
    if (size > static_cast<double>(opts.budget)) {
        throw BudgetExceeded{"theory satisfiability", size, static_cast<double>(opts.budget)};
    }
    std::vector<IndexedAtom> indexed;
    for (auto const &atom : atoms) {
        IndexedAtom entry{&atom, {}};
        for (auto const &term : atom.terms()) {
            auto it = std::lower_bound(names.begin(), names.end(), term.variable);
            if (it == names.end() || *it != term.variable) {
                throw PreconditionViolation{"variable " + term.variable + " outside the enumerated set"};
            }
            entry.slots.push_back(static_cast<std::size_t>(it - names.begin()));
        }
        indexed.push_back(std::move(entry));
    }

    std::vector<Integer> current(names.size(), opts.bounds.lo());
    std::vector<Integer> values;
    while (true) {
        bool ok = true;
        for (auto const &entry : indexed) {
            values.clear();
            for (auto slot : entry.slots) {
                values.push_back(current[slot]);
            }
            if (!eval_linear(*entry.atom, values)) {
                ok = false;
                break;
            }
        }
        if (ok) {
            Assignment w;
            for (std::size_t i = 0; i < names.size(); ++i) {
                w.emplace_hint(w.end(), names[i], current[i]);
            }
            if (!visit(std::move(w))) {
                return;
            }
        }
        // odometer, last variable fastest
        std::size_t i = names.size();
        while (i > 0) {
            --i;
            if (current[i] < opts.bounds.hi()) {
                ++current[i];
                break;
            }
            current[i] = opts.bounds.lo();
            if (i == 0) {
                return;
            }
        }
        if (names.empty()) {
            return;
        }
    }
}

} // namespace

std::vector<Assignment> denotation(LinearAtomSet const &atoms, LinearOptions const &opts,
                                   std::optional<VariableSet> const &over) {
    VariableSet domain = over ? *over : vars(atoms);
    if (over) {
        for (auto const &var : vars(atoms)) {
            if (domain.count(var) == 0) {
                throw PreconditionViolation{"denotation: atom variable " + var + " not enumerated"};
            }
        }
    }
    std::vector<Assignment> out;
    enumerate_satisfying(atoms, opts, domain, [&](Assignment w) {
        out.push_back(std::move(w));
        return true;
    });
    return out;
}

std::optional<Assignment> find_witness(LinearAtomSet const &atoms, LinearOptions const &opts) {
    std::optional<Assignment> out;
    enumerate_satisfying(atoms, opts, vars(atoms), [&](Assignment w) {
        out = std::move(w);
        return false;
    });
    return out;
}

bool sat(LinearAtomSet const &atoms, LinearOptions const &opts) { return find_witness(atoms, opts).has_value(); }

bool den_member_linear(LinearAtom const &atom, Valuation const &v, Bounds const &bounds) {
    std::vector<Integer> values;
    values.reserve(atom.terms().size());
    for (auto const &term : atom.terms()) {
        auto value = v.get(term.variable);
        if (!value || !value->is_integer() || !bounds.contains(value->as_integer())) {
            return false;
        }
        values.push_back(value->as_integer());
    }
    return eval_linear(atom, values);
}

bool LinearTheory::den_member_total(LinearAtom const &atom, Assignment const &w) const {
    for (auto const &term : atom.terms()) {
        auto it = w.find(term.variable);
        if (it == w.end()) {
            throw PreconditionViolation{"den_member_total: assignment is not total over the atom"};
        }
        if (!opts_.bounds.contains(it->second)) {
            return false;
        }
    }
    return eval_linear(atom, w);
}

} // namespace htceq
