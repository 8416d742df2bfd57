#include "htceq/program.hpp"

#include "htceq/error.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace htceq {

// TAtom / Rule

TAtom TAtom::reg(std::string name) {
    if (name.empty()) {
        throw PreconditionViolation{"regular atom needs a name"};
    }
    return TAtom{std::move(name)};
}

TAtom TAtom::th(LinearAtom atom) { return TAtom{std::move(atom)}; }

std::string TAtom::to_string() const { return is_regular() ? name() : linear().to_string(); }

std::string Rule::to_string() const {
    std::string out = head ? head->to_string() : std::string{};
    if (pos.empty() && neg.empty()) {
        return head ? out + "." : ":- .";
    }
    out += head ? " :- " : ":- ";
    bool first = true;
    for (auto const &atom : pos) {
        out += (first ? "" : ", ") + atom.to_string();
        first = false;
    }
    for (auto const &atom : neg) {
        out += (first ? "not " : ", not ") + atom.to_string();
        first = false;
    }
    return out + ".";
}

std::string to_string(TAtomSet const &atoms) {
    std::string out = "{";
    bool first = true;
    for (auto const &atom : atoms) {
        out += (first ? "" : ", ") + atom.to_string();
        first = false;
    }
    return out + "}";
}

// TProgram

TProgram::TProgram(std::vector<Rule> rules, LinearAtomSet declared_externals, Bounds bounds)
: declared_{std::move(declared_externals)}
, bounds_{bounds} {
    for (auto &rule : rules) {
        if (std::find(rules_.begin(), rules_.end(), rule) == rules_.end()) {
            rules_.push_back(std::move(rule));
        }
    }
    externals_ = declared_;
    for (auto const &rule : rules_) {
        for (auto const *body : {&rule.pos, &rule.neg}) {
            for (auto const &atom : *body) {
                if (atom.is_theory()) {
                    externals_.insert(atom.linear());
                }
            }
        }
    }
    externals_.merge(complement(externals_));
}

LinearAtomSet TProgram::head_theory_atoms() const {
    LinearAtomSet out;
    for (auto const &rule : rules_) {
        if (rule.head && rule.head->is_theory()) {
            out.insert(rule.head->linear());
        }
    }
    return out;
}

LinearAtomSet TProgram::founded() const {
    LinearAtomSet out;
    for (auto const &atom : head_theory_atoms()) {
        if (externals_.count(atom) == 0) {
            out.insert(atom);
        }
    }
    return out;
}

LinearAtomSet TProgram::theory_atoms() const {
    LinearAtomSet out = externals_;
    out.merge(head_theory_atoms());
    return out;
}

std::set<std::string> TProgram::regular_atoms() const {
    std::set<std::string> out;
    auto add = [&](TAtom const &atom) {
        if (atom.is_regular()) {
            out.insert(atom.name());
        }
    };
    for (auto const &rule : rules_) {
        if (rule.head) {
            add(*rule.head);
        }
        std::for_each(rule.pos.begin(), rule.pos.end(), add);
        std::for_each(rule.neg.begin(), rule.neg.end(), add);
    }
    return out;
}

VariableSet TProgram::theory_variables() const { return vars(theory_atoms()); }

TProgram TProgram::with_bounds(Bounds bounds) const { return TProgram{rules_, declared_, bounds}; }

TProgram TProgram::with_externals(LinearAtomSet const &extra) const {
    auto declared = declared_;
    declared.insert(extra.begin(), extra.end());
    return TProgram{rules_, std::move(declared), bounds_};
}

TProgram merge(TProgram const &lhs, TProgram const &rhs) {
    if (lhs.bounds_ != rhs.bounds_) {
        throw PreconditionViolation{"merging programs with different bounds"};
    }
    auto rules = lhs.rules_;
    rules.insert(rules.end(), rhs.rules_.begin(), rhs.rules_.end());
    auto declared = lhs.declared_;
    declared.insert(rhs.declared_.begin(), rhs.declared_.end());
    return TProgram{std::move(rules), std::move(declared), lhs.bounds_};
}

// AnswerSet

std::string AnswerSet::to_string() const {
    std::string out = "{";
    bool first = true;
    for (auto const &name : regular) {
        out += (first ? "" : ", ") + name;
        first = false;
    }
    out += "}";
    for (auto const &[var, value] : valuation) {
        out += ", " + var + "=" + value.to_string();
    }
    return out;
}

// Semantics

LinearAtomSet comp_completion(LinearAtomSet const &s, LinearAtomSet const &externals) {
    LinearAtomSet out = s;
    for (auto const &atom : externals) {
        if (s.count(atom) == 0) {
            out.insert(complement(atom));
        }
    }
    return out;
}

bool is_solution(LinearAtomSet const &s, LinearAtomSet const &externals, LinearOptions const &opts) {
    return sat(s, opts) && sat(comp_completion(s, externals), opts);
}

namespace {

// Atom <-> proposition naming; theory atoms use their program syntax, which cannot clash with identifiers.
std::string prop_name(TAtom const &atom) { return atom.to_string(); }

PropRule to_prop_rule(Rule const &rule) {
    PropRule out;
    if (rule.head) {
        out.head.push_back(prop_name(*rule.head));
    }
    for (auto const &atom : rule.pos) {
        out.pos.push_back(prop_name(atom));
    }
    for (auto const &atom : rule.neg) {
        out.neg.push_back(prop_name(atom));
    }
    return out;
}

class AtomIndex {
  public:
    explicit AtomIndex(TProgram const &p) {
        for (auto const &name : p.regular_atoms()) {
            add(TAtom::reg(name));
        }
        for (auto const &atom : p.theory_atoms()) {
            add(TAtom::th(atom));
        }
    }

    [[nodiscard]] TAtomSet lift(AtomSet const &names) const {
        TAtomSet out;
        for (auto const &name : names) {
            out.insert(by_name_.at(name));
        }
        return out;
    }

  private:
    void add(TAtom atom) { by_name_.emplace(prop_name(atom), std::move(atom)); }

    std::map<std::string, TAtom> by_name_;
};

LinearAtomSet theory_part(TAtomSet const &x) {
    LinearAtomSet out;
    for (auto const &atom : x) {
        if (atom.is_theory()) {
            out.insert(atom.linear());
        }
    }
    return out;
}

LinearOptions linear_options(TProgram const &p, SearchOptions const &opts) { return {p.bounds(), opts.budget}; }

} // namespace

PropProgram choice_program(TProgram const &p) {
    PropProgram out;
    for (auto const &rule : p.rules()) {
        out.rules.push_back(to_prop_rule(rule));
    }
    LinearAtomSet done;
    for (auto const &atom : p.externals()) {
        if (done.count(atom) > 0) {
            continue;
        }
        auto comp = complement(atom);
        done.insert(atom);
        done.insert(comp);
        out.rules.push_back(PropRule{{prop_name(TAtom::th(atom)), prop_name(TAtom::th(comp))}, {}, {}});
    }
    return out;
}

Def3Result theory_stable_models_def3(TProgram const &p, SearchOptions const &opts) {
    auto const atoms = p.theory_atoms();
    std::vector<LinearAtom> const universe(atoms.begin(), atoms.end());
    double const candidates = std::pow(2.0, static_cast<double>(universe.size()));
    if (universe.size() >= 63 || candidates > static_cast<double>(opts.budget)) {
        throw BudgetExceeded{"solution candidates", candidates, static_cast<double>(opts.budget)};
    }
    auto const lin = linear_options(p, opts);
    auto const heads = p.head_theory_atoms();
    AtomIndex const index{p};
    std::vector<PropRule> base;
    for (auto const &rule : p.rules()) {
        base.push_back(to_prop_rule(rule));
    }

    Def3Result out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << universe.size()); ++mask) {
        LinearAtomSet s;
        for (std::size_t i = 0; i < universe.size(); ++i) {
            if (mask >> i & 1U) {
                s.insert(universe[i]);
            }
        }
        if (!is_solution(s, p.externals(), lin)) {
            continue;
        }
        PropProgram program{base};
        for (auto const &atom : s) {
            if (p.externals().count(atom) > 0) {
                program.rules.push_back(PropRule{{prop_name(TAtom::th(atom))}, {}, {}});
            }
        }
        for (auto const &atom : heads) {
            if (s.count(atom) == 0) {
                program.rules.push_back(PropRule{{}, {prop_name(TAtom::th(atom))}, {}});
            }
        }
        for (auto const &model : regular_stable_models(program, opts)) {
            out.models.insert(index.lift(model));
        }
        out.solutions.push_back(std::move(s));
    }
    return out;
}

std::set<TAtomSet> theory_stable_models_def4(TProgram const &p, SearchOptions const &opts) {
    auto const lin = linear_options(p, opts);
    AtomIndex const index{p};
    std::set<TAtomSet> out;
    for (auto const &model : regular_stable_models(choice_program(p), opts)) {
        auto x = index.lift(model);
        if (sat(theory_part(x), lin)) {
            out.insert(std::move(x));
        }
    }
    return out;
}

std::set<AnswerSet> answer_sets(TProgram const &p, SearchOptions const &opts) {
    auto const lin = linear_options(p, opts);
    std::set<AnswerSet> out;
    for (auto const &x : theory_stable_models_def4(p, opts)) {
        std::set<std::string> y;
        for (auto const &atom : x) {
            if (atom.is_regular()) {
                y.insert(atom.name());
            }
        }
        for (auto const &w : denotation(theory_part(x), lin)) {
            Valuation::Map v;
            for (auto const &[var, value] : w) {
                v.emplace_hint(v.end(), var, DomainValue::integer(value));
            }
            out.insert(AnswerSet{y, Valuation{std::move(v)}});
        }
    }
    return out;
}

bool satisfies_literal(AnswerSet const &a, TAtom const &atom, bool negated, Bounds const &bounds) {
    bool holds = false;
    if (atom.is_regular()) {
        holds = a.regular.count(atom.name()) > 0;
    } else {
        auto const &lin = atom.linear();
        auto const vars = lin.vars();
        std::vector<std::string> free;
        Assignment fixed;
        bool feasible = true;
        for (auto const &var : vars) {
            if (auto value = a.valuation.get(var)) {
                if (!value->is_integer() || !bounds.contains(value->as_integer())) {
                    feasible = false;
                }
                fixed.emplace(var, value->is_integer() ? value->as_integer() : 0);
            } else {
                free.push_back(var);
            }
        }
        if (feasible) {
            // odometer over the unconstrained variables
            Assignment w = fixed;
            for (auto const &var : free) {
                w[var] = bounds.lo();
            }
            while (true) {
                if (eval_linear(lin, w)) {
                    holds = true;
                    break;
                }
                std::size_t i = free.size();
                bool advanced = false;
                while (i > 0) {
                    --i;
                    if (w[free[i]] < bounds.hi()) {
                        ++w[free[i]];
                        advanced = true;
                        break;
                    }
                    w[free[i]] = bounds.lo();
                }
                if (!advanced) {
                    break;
                }
            }
        }
    }
    return negated ? !holds : holds;
}

TAtomSet stable_of_answer(TProgram const &p, AnswerSet const &a) {
    TAtomSet out;
    for (auto const &name : a.regular) {
        out.insert(TAtom::reg(name));
    }
    for (auto const &atom : p.externals()) {
        if (satisfies_literal(a, TAtom::th(atom), false, p.bounds())) {
            out.insert(TAtom::th(atom));
        }
    }
    auto const founded = p.founded();
    for (auto const &rule : p.rules()) {
        if (!rule.head || !rule.head->is_theory() || founded.count(rule.head->linear()) == 0) {
            continue;
        }
        bool const body = std::all_of(rule.pos.begin(), rule.pos.end(),
                                      [&](TAtom const &b) { return satisfies_literal(a, b, false, p.bounds()); }) &&
                          std::all_of(rule.neg.begin(), rule.neg.end(),
                                      [&](TAtom const &b) { return satisfies_literal(a, b, true, p.bounds()); });
        if (body) {
            out.insert(*rule.head);
        }
    }
    return out;
}

} // namespace htceq
