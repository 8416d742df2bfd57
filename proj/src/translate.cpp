#include "htceq/translate.hpp"

namespace htceq {

char const *to_string(Origin origin) {
    switch (origin) {
    case Origin::rule: return "RULE";
    case Origin::sem: return "SEM";
    case Origin::dom: return "DOM";
    case Origin::phi: return "PHI";
    case Origin::choice: return "CHOICE";
    }
    return "?";
}

void TranslationOutput::add(Formula f, Origin origin, std::string source) {
    if (theory.insert(f)) {
        provenance.emplace(std::move(f), Provenance{origin, std::move(source)});
    }
}

ConstraintAtom tau_atom(TAtom const &atom) {
    return atom.is_regular() ? ConstraintAtom::regular(atom.name()) : ConstraintAtom::linear(atom.linear());
}

Formula tau_rule(Rule const &rule) {
    std::optional<Formula> body;
    auto add = [&](Formula f) { body = body ? Formula::conj(*body, std::move(f)) : std::move(f); };
    for (auto const &atom : rule.pos) {
        add(Formula::atom(tau_atom(atom)));
    }
    for (auto const &atom : rule.neg) {
        add(Formula::neg(Formula::atom(tau_atom(atom))));
    }
    return Formula::implies(body ? *body : Formula::top(),
                            rule.head ? Formula::atom(tau_atom(*rule.head)) : Formula::bot());
}

namespace {

void add_domain_axioms(TranslationOutput &out, std::set<std::string> const &booleans, VariableSet const &integers,
                       Bounds bounds) {
    for (auto const &name : booleans) {
        out.add(Formula::implies(Formula::atom(ConstraintAtom::def(name)), Formula::atom(ConstraintAtom::regular(name))),
                Origin::dom, name);
    }
    for (auto const &var : integers) {
        out.add(Formula::implies(Formula::atom(ConstraintAtom::def(var)),
                                 Formula::atom(ConstraintAtom::dom(var, Subdomain::interval(bounds)))),
                Origin::dom, var);
    }
}

} // namespace

TranslationOutput tau_program(TProgram const &p) {
    TranslationOutput out{{}, Signature{p.bounds()}, {}};
    for (auto const &name : p.regular_atoms()) {
        out.signature.add_regular(name);
    }
    for (auto const &var : p.theory_variables()) {
        out.signature.add_theory(var);
    }
    for (auto const &rule : p.rules()) {
        out.add(tau_rule(rule), Origin::rule, rule.to_string());
    }
    for (auto const &var : vars(p.externals())) {
        out.add(Formula::atom(ConstraintAtom::def(var)), Origin::sem, var);
    }
    add_domain_axioms(out, p.regular_atoms(), p.theory_variables(), p.bounds());
    return out;
}

PropProgram kappa(TProgram const &p) { return choice_program(p); }

std::string prop_variable(LinearAtom const &atom) { return std::string{reserved_prefix} + "prop(" + atom.to_string() + ")"; }

Valuation strip_auxiliary(Valuation const &v) {
    Valuation::Map out;
    for (auto const &[var, value] : v) {
        if (var.rfind(reserved_prefix, 0) != 0) {
            out.emplace_hint(out.end(), var, value);
        }
    }
    return Valuation{std::move(out)};
}

Valuation to_valuation(AnswerSet const &a) {
    auto map = a.valuation.bindings();
    for (auto const &name : a.regular) {
        map.insert_or_assign(name, DomainValue::truth());
    }
    return Valuation{std::move(map)};
}

TranslationOutput tau2_program(TProgram const &p) {
    TranslationOutput out{{}, Signature{p.bounds()}, {}};
    std::map<std::string, std::string> rename; // program-syntax name -> HTc variable
    std::set<std::string> booleans = p.regular_atoms();
    for (auto const &name : booleans) {
        rename.emplace(name, name);
    }
    for (auto const &atom : p.theory_atoms()) {
        auto var = prop_variable(atom);
        rename.emplace(atom.to_string(), var);
        booleans.insert(var);
    }
    for (auto const &name : booleans) {
        out.signature.add_regular(name);
    }
    for (auto const &var : p.theory_variables()) {
        out.signature.add_theory(var);
    }

    auto const program = kappa(p);
    auto const rule_count = p.rules().size();
    for (std::size_t i = 0; i < program.rules.size(); ++i) {
        auto const &rule = program.rules[i];
        std::optional<Formula> body;
        auto add = [&](Formula f) { body = body ? Formula::conj(*body, std::move(f)) : std::move(f); };
        for (auto const &name : rule.pos) {
            add(Formula::atom(ConstraintAtom::regular(rename.at(name))));
        }
        for (auto const &name : rule.neg) {
            add(Formula::neg(Formula::atom(ConstraintAtom::regular(rename.at(name)))));
        }
        std::optional<Formula> head;
        for (auto const &name : rule.head) {
            auto atom = Formula::atom(ConstraintAtom::regular(rename.at(name)));
            head = head ? Formula::disj(*head, std::move(atom)) : std::move(atom);
        }
        auto f = Formula::implies(body ? *body : Formula::top(), head ? *head : Formula::bot());
        if (i < rule_count) {
            out.add(std::move(f), Origin::rule, p.rules()[i].to_string());
        } else {
            out.add(std::move(f), Origin::choice, rule.to_string());
        }
    }
    for (auto const &atom : p.theory_atoms()) {
        out.add(Formula::implies(Formula::atom(ConstraintAtom::regular(prop_variable(atom))),
                                 Formula::atom(ConstraintAtom::linear(atom))),
                Origin::phi, atom.to_string());
    }
    add_domain_axioms(out, booleans, p.theory_variables(), p.bounds());
    return out;
}

} // namespace htceq
