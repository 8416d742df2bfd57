#pragma once

// Test-only oracles and generators. The oracles are deliberately naive re-statements of the
// definitions and share no evaluation code with the library.

#include "htceq/core.hpp"
#include "htceq/modelsearch.hpp"
#include "htceq/program.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace htceq::testing {

using Kinds = std::map<std::string, VarKind>;

inline bool oracle_den(ConstraintAtom const &atom, Valuation const &v) {
    if (auto const *r = atom.as<RegularAtom>()) {
        auto value = v.get(r->name);
        return value && value->is_truth();
    }
    if (auto const *d = atom.as<DefAtom>()) {
        return v.defined(d->variable);
    }
    if (auto const *d = atom.as<DomAtom>()) {
        auto value = v.get(d->variable);
        if (!value) {
            return false;
        }
        if (value->is_truth()) {
            return d->subdomain.truth;
        }
        return d->subdomain.integers && d->subdomain.integers->contains(value->as_integer());
    }
    auto const &lin = *atom.as<LinearAtom>();
    __int128 sum = 0;
    for (auto const &term : lin.terms()) {
        auto value = v.get(term.variable);
        if (!value || !value->is_integer()) {
            return false;
        }
        sum += static_cast<__int128>(term.coefficient) * value->as_integer();
    }
    __int128 const k = lin.bound();
    switch (lin.comparator()) {
    case Comparator::le: return sum <= k;
    case Comparator::eq: return sum == k;
    case Comparator::ne: return sum != k;
    case Comparator::lt: return sum < k;
    case Comparator::gt: return sum > k;
    case Comparator::ge: return sum >= k;
    }
    return false;
}

inline bool oracle_sat(Valuation const &h, Valuation const &t, Formula const &f) {
    switch (f.kind()) {
    case FormulaKind::bot: return false;
    case FormulaKind::atom: return oracle_den(f.constraint(), h);
    case FormulaKind::conj: return oracle_sat(h, t, f.lhs()) && oracle_sat(h, t, f.rhs());
    case FormulaKind::disj: return oracle_sat(h, t, f.lhs()) || oracle_sat(h, t, f.rhs());
    case FormulaKind::implies:
        return (!oracle_sat(h, t, f.lhs()) || oracle_sat(h, t, f.rhs())) &&
               (!oracle_sat(t, t, f.lhs()) || oracle_sat(t, t, f.rhs()));
    }
    return false;
}

inline bool oracle_model(Valuation const &h, Valuation const &t, Theory const &theory) {
    return std::all_of(theory.begin(), theory.end(), [&](Formula const &f) { return oracle_sat(h, t, f); });
}

inline std::vector<Valuation> oracle_valuations(Kinds const &kinds, Bounds bounds) {
    std::vector<Valuation> out{Valuation{}};
    for (auto const &[name, kind] : kinds) {
        std::vector<Valuation> next;
        for (auto const &v : out) {
            next.push_back(v);
            if (kind == VarKind::regular) {
                next.push_back(v.with(name, DomainValue::truth()));
            } else {
                for (auto x = bounds.lo(); x <= bounds.hi(); ++x) {
                    next.push_back(v.with(name, DomainValue::integer(x)));
                }
            }
        }
        out = std::move(next);
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<Valuation> oracle_subvaluations(Valuation const &t) {
    std::vector<Valuation> out{Valuation{}};
    for (auto const &[name, value] : t) {
        auto const n = out.size();
        for (std::size_t i = 0; i < n; ++i) {
            out.push_back(out[i].with(name, value));
        }
    }
    return out;
}

//! Sorted equilibrium models.
inline std::vector<Valuation> oracle_equilibrium(Theory const &theory, Kinds const &kinds, Bounds bounds) {
    std::vector<Valuation> out;
    for (auto const &t : oracle_valuations(kinds, bounds)) {
        if (!oracle_model(t, t, theory)) {
            continue;
        }
        bool minimal = true;
        for (auto const &h : oracle_subvaluations(t)) {
            if (h != t && oracle_model(h, t, theory)) {
                minimal = false;
                break;
            }
        }
        if (minimal) {
            out.push_back(t);
        }
    }
    return out;
}

inline Kinds kinds_of(Signature const &sig) { return sig.variables(); }

//! Stable models as minimal models of the reduct.
inline std::set<AtomSet> oracle_stable(PropProgram const &program) {
    auto const atoms_set = program.atoms();
    std::vector<std::string> const atoms(atoms_set.begin(), atoms_set.end());
    auto subset = [&](std::uint64_t mask) {
        AtomSet out;
        for (std::size_t i = 0; i < atoms.size(); ++i) {
            if (mask >> i & 1U) {
                out.insert(atoms[i]);
            }
        }
        return out;
    };
    auto in = [](AtomSet const &s, std::string const &a) { return s.count(a) > 0; };
    auto reduct_model = [&](AtomSet const &y, AtomSet const &x) {
        for (auto const &rule : program.rules) {
            if (std::any_of(rule.neg.begin(), rule.neg.end(), [&](auto const &a) { return in(x, a); })) {
                continue;
            }
            bool const body = std::all_of(rule.pos.begin(), rule.pos.end(), [&](auto const &a) { return in(y, a); });
            bool const head = std::any_of(rule.head.begin(), rule.head.end(), [&](auto const &a) { return in(y, a); });
            if (body && !head) {
                return false;
            }
        }
        return true;
    };
    std::set<AtomSet> out;
    std::uint64_t const n = std::uint64_t{1} << atoms.size();
    for (std::uint64_t x = 0; x < n; ++x) {
        auto const xs = subset(x);
        if (!reduct_model(xs, xs)) {
            continue;
        }
        bool minimal = true;
        for (std::uint64_t y = (x - 1) & x; x != 0; y = (y - 1) & x) {
            if (reduct_model(subset(y), xs)) {
                minimal = false;
                break;
            }
            if (y == 0) {
                break;
            }
        }
        if (minimal) {
            out.insert(xs);
        }
    }
    return out;
}

//! Shape of the random program corpus.
struct CorpusShape {
    std::vector<std::string> regular{"a", "b"};
    std::vector<std::string> variables{"x", "y"};
    Bounds bounds{0, 3};
    std::size_t max_rules = 4;
    //! Distinct theory atoms a program draws from (complements come on top via closure).
    std::size_t max_theory_atoms = 3;
};

template <typename Rng> std::size_t pick(Rng &rng, std::size_t n) {
    return std::uniform_int_distribution<std::size_t>{0, n - 1}(rng);
}

template <typename Rng> bool coin(Rng &rng, double p) { return std::bernoulli_distribution{p}(rng); }

template <typename Rng> LinearAtom random_linear(Rng &rng, std::vector<std::string> const &variables) {
    static constexpr Integer coefficients[] = {-1, 1, 2};
    static constexpr Comparator comparators[] = {Comparator::le, Comparator::eq, Comparator::ne,
                                                 Comparator::lt, Comparator::gt, Comparator::ge};
    auto vars = variables;
    std::shuffle(vars.begin(), vars.end(), rng);
    auto const n = 1 + pick(rng, std::min<std::size_t>(2, vars.size()));
    std::vector<Term> terms;
    for (std::size_t i = 0; i < n; ++i) {
        terms.push_back(Term{coefficients[pick(rng, 3)], vars[i]});
    }
    auto const bound = std::uniform_int_distribution<Integer>{-1, 6}(rng);
    return LinearAtom{std::move(terms), comparators[pick(rng, 6)], bound};
}

template <typename Rng> TProgram random_program(Rng &rng, CorpusShape const &shape = {}) {
    std::vector<LinearAtom> pool;
    auto const pool_size = 1 + pick(rng, shape.max_theory_atoms);
    for (std::size_t i = 0; i < pool_size; ++i) {
        pool.push_back(random_linear(rng, shape.variables));
    }
    auto atom = [&]() {
        return coin(rng, 0.5) ? TAtom::reg(shape.regular[pick(rng, shape.regular.size())])
                              : TAtom::th(pool[pick(rng, pool.size())]);
    };
    std::vector<Rule> rules;
    auto const count = 1 + pick(rng, shape.max_rules);
    for (std::size_t i = 0; i < count; ++i) {
        Rule rule;
        auto const body = pick(rng, 3);
        for (std::size_t j = 0; j < body; ++j) {
            (coin(rng, 0.3) ? rule.neg : rule.pos).push_back(atom());
        }
        auto const head = pick(rng, 3);
        if (head == 0 || (head == 2 && body == 0)) {
            rule.head = TAtom::reg(shape.regular[pick(rng, shape.regular.size())]);
        } else if (head == 1) {
            rule.head = TAtom::th(pool[pick(rng, pool.size())]);
        }
        rules.push_back(std::move(rule));
    }
    LinearAtomSet declared;
    if (coin(rng, 0.2)) {
        declared.insert(pool[pick(rng, pool.size())]);
    }
    return TProgram{std::move(rules), std::move(declared), shape.bounds};
}

inline std::vector<TProgram> corpus(std::size_t n, std::uint64_t seed, CorpusShape const &shape = {}) {
    std::mt19937_64 rng{seed};
    std::vector<TProgram> out;
    for (std::size_t i = 0; i < n; ++i) {
        out.push_back(random_program(rng, shape));
    }
    return out;
}

template <typename Rng> ConstraintAtom random_constraint(Rng &rng, Kinds const &kinds, Bounds bounds) {
    std::vector<std::string> regular;
    std::vector<std::string> theory;
    for (auto const &[name, kind] : kinds) {
        (kind == VarKind::regular ? regular : theory).push_back(name);
    }
    auto const choice = pick(rng, 4);
    if (choice == 0 && !regular.empty()) {
        return ConstraintAtom::regular(regular[pick(rng, regular.size())]);
    }
    if (choice == 1 || theory.empty()) {
        auto all = regular;
        all.insert(all.end(), theory.begin(), theory.end());
        return ConstraintAtom::def(all[pick(rng, all.size())]);
    }
    if (choice == 2) {
        auto lo = std::uniform_int_distribution<Integer>{bounds.lo(), bounds.hi()}(rng);
        auto hi = std::uniform_int_distribution<Integer>{lo, bounds.hi()}(rng);
        return ConstraintAtom::dom(theory[pick(rng, theory.size())], Subdomain::interval(Bounds{lo, hi}));
    }
    return ConstraintAtom::linear(random_linear(rng, theory));
}

template <typename Rng> Formula random_formula(Rng &rng, Kinds const &kinds, Bounds bounds, int depth) {
    if (depth == 0 || coin(rng, 0.25)) {
        return coin(rng, 0.1) ? Formula::bot() : Formula::atom(random_constraint(rng, kinds, bounds));
    }
    auto lhs = random_formula(rng, kinds, bounds, depth - 1);
    auto rhs = random_formula(rng, kinds, bounds, depth - 1);
    switch (pick(rng, 3)) {
    case 0: return Formula::conj(std::move(lhs), std::move(rhs));
    case 1: return Formula::disj(std::move(lhs), std::move(rhs));
    default: return Formula::implies(std::move(lhs), std::move(rhs));
    }
}

template <typename Rng> Interpretation random_interpretation(Rng &rng, Kinds const &kinds, Bounds bounds) {
    Valuation::Map t;
    Valuation::Map h;
    for (auto const &[name, kind] : kinds) {
        if (coin(rng, 0.3)) {
            continue;
        }
        auto value = kind == VarKind::regular
                         ? DomainValue::truth()
                         : DomainValue::integer(std::uniform_int_distribution<Integer>{bounds.lo(), bounds.hi()}(rng));
        t.emplace(name, value);
        if (coin(rng, 0.5)) {
            h.emplace(name, value);
        }
    }
    return Interpretation{Valuation{std::move(h)}, Valuation{std::move(t)}};
}

//! Small theory over the given variables, e.g. a context for strong-equivalence checks.
template <typename Rng> Theory random_theory(Rng &rng, Kinds const &kinds, Bounds bounds, std::size_t max_size) {
    Theory out;
    auto const n = pick(rng, max_size + 1);
    for (std::size_t i = 0; i < n; ++i) {
        out.insert(random_formula(rng, kinds, bounds, 2));
    }
    return out;
}

} // namespace htceq::testing
