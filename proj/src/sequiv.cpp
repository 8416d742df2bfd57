#include "htceq/sequiv.hpp"

#include "htceq/error.hpp"
#include "htceq/translate.hpp"

namespace htceq {

Signature joint_signature(TProgram const &p, TProgram const &q) {
    if (p.bounds() != q.bounds()) {
        throw PreconditionViolation{"programs have different bounds: " + p.bounds().to_string() + " and " +
                                    q.bounds().to_string()};
    }
    auto sig = tau_program(p).signature;
    sig.merge(tau_program(q).signature);
    return sig;
}

Theory witness_context(Theory const &satisfied, Theory const &violated, Interpretation const &cm,
                       Signature const &sig) {
    if (!is_model(cm, satisfied, sig) || is_model(cm, violated, sig)) {
        throw PreconditionViolation{"interpretation " + cm.to_string() + " does not separate the theories"};
    }
    auto def = [](std::string const &x) { return Formula::atom(ConstraintAtom::def(x)); };
    Interpretation const total{cm.there(), cm.there()};
    Theory delta;
    if (!is_model(total, violated, sig)) {
        for (auto const &[x, value] : cm.there()) {
            delta.insert(def(x));
        }
        return delta;
    }
    std::vector<std::string> gap;
    for (auto const &[x, value] : cm.there()) {
        if (cm.here().defined(x)) {
            delta.insert(def(x));
        } else {
            gap.push_back(x);
        }
    }
    for (auto const &x : gap) {
        for (auto const &y : gap) {
            delta.insert(Formula::implies(def(y), def(x)));
        }
    }
    return delta;
}

WitnessCheck verify_witness(TProgram const &p, TProgram const &q, Theory const &delta, SearchOptions const &opts) {
    auto const sig = joint_signature(p, q);
    for (auto const &x : delta.vars()) {
        if (!sig.contains(x)) {
            throw UnknownVariable{x};
        }
    }
    ValuationSpace const space{sig};
    WitnessCheck out;
    out.lhs = equilibrium_models(tau_program(p).theory | delta, space, opts);
    out.rhs = equilibrium_models(tau_program(q).theory | delta, space, opts);
    out.differ = out.lhs != out.rhs;
    return out;
}

SequivVerdict strong_equivalent(TProgram const &p, TProgram const &q, SearchOptions const &opts) {
    auto const sig = joint_signature(p, q);
    auto const tp = tau_program(p).theory;
    auto const tq = tau_program(q).theory;
    ValuationSpace const space{sig};
    auto verdict = htc_equivalent(tp, tq, space, opts);
    auto const *cm = std::get_if<Countermodel>(&verdict);
    if (cm == nullptr) {
        return SequivEquivalent{p.bounds()};
    }
    bool const left = cm->side == Side::left_only;
    auto delta = witness_context(left ? tp : tq, left ? tq : tp, cm->interpretation, sig);
    auto evidence = verify_witness(p, q, delta, opts);
    if (!evidence.differ) {
        throw Error{"witness context failed verification for countermodel " + cm->interpretation.to_string()};
    }
    return SequivNotEquivalent{p.bounds(), *cm, std::move(delta), std::move(evidence)};
}

std::vector<std::string> render_witness(Theory const &delta, Signature const &sig) {
    auto atom = [&](Formula const &f) {
        auto const &x = f.constraint().as<DefAtom>()->variable;
        if (sig.kind(x) == VarKind::regular) {
            return x;
        }
        return "&dom{" + sig.bounds().to_string() + "}(" + x + ")";
    };
    std::vector<std::string> out;
    for (auto const &f : delta) {
        if (f.kind() == FormulaKind::atom) {
            out.push_back(atom(f) + ".");
        } else {
            out.push_back(atom(f.rhs()) + " :- " + atom(f.lhs()) + ".");
        }
    }
    return out;
}

} // namespace htceq
