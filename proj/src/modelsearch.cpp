#include "htceq/modelsearch.hpp"

#include "htceq/error.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <map>
#include <mutex>
#include <thread>

namespace htceq {

namespace {

constexpr Integer undefined_slot = std::numeric_limits<Integer>::min();
constexpr Integer truth_slot = std::numeric_limits<Integer>::min() + 1;

Integer encode(DomainValue value) { return value.is_truth() ? truth_slot : value.as_integer(); }

DomainValue decode(Integer slot) { return slot == truth_slot ? DomainValue::truth() : DomainValue::integer(slot); }

// Atom bound to dense slot positions of a valuation space.
struct CompiledAtom {
    enum class Kind { regular, linear, dom, def } kind;
    std::vector<std::size_t> slots;
    LinearAtom const *linear = nullptr;
    Subdomain subdomain;
};

struct CompiledNode {
    FormulaKind kind;
    std::size_t atom = 0;
    std::size_t lhs = 0;
    std::size_t rhs = 0;
};

// Theory flattened into a post-order node array sharing equal subformulas.
class CompiledTheory {
  public:
    CompiledTheory(Theory const &theory, ValuationSpace const &space)
    : bounds_{space.signature().bounds()} {
        auto const &names = space.variables();
        for (std::size_t i = 0; i < names.size(); ++i) {
            slot_of_.emplace(names[i], i);
        }
        for (auto const &f : theory) {
            roots_.push_back(compile(f));
        }
    }

    [[nodiscard]] std::size_t node_count() const { return nodes_.size(); }

    // Truth of every node at ⟨t,t⟩; returns whether all roots hold.
    bool eval_there(std::vector<Integer> const &t, std::vector<char> &node_t) const {
        node_t.resize(nodes_.size());
        for (std::size_t i = 0; i < nodes_.size(); ++i) {
            auto const &n = nodes_[i];
            switch (n.kind) {
            case FormulaKind::bot: node_t[i] = 0; break;
            case FormulaKind::atom: node_t[i] = atom_holds(atoms_[n.atom], t) ? 1 : 0; break;
            case FormulaKind::conj: node_t[i] = node_t[n.lhs] && node_t[n.rhs]; break;
            case FormulaKind::disj: node_t[i] = node_t[n.lhs] || node_t[n.rhs]; break;
            case FormulaKind::implies: node_t[i] = !node_t[n.lhs] || node_t[n.rhs]; break;
            }
        }
        return std::all_of(roots_.begin(), roots_.end(), [&](std::size_t r) { return node_t[r] != 0; });
    }

    // Truth at ⟨h,t⟩ given the ⟨t,t⟩ values from eval_there.
    bool eval_here(std::vector<Integer> const &h, std::vector<char> const &node_t, std::vector<char> &node_h) const {
        node_h.resize(nodes_.size());
        for (std::size_t i = 0; i < nodes_.size(); ++i) {
            auto const &n = nodes_[i];
            switch (n.kind) {
            case FormulaKind::bot: node_h[i] = 0; break;
            case FormulaKind::atom: node_h[i] = atom_holds(atoms_[n.atom], h) ? 1 : 0; break;
            case FormulaKind::conj: node_h[i] = node_h[n.lhs] && node_h[n.rhs]; break;
            case FormulaKind::disj: node_h[i] = node_h[n.lhs] || node_h[n.rhs]; break;
            case FormulaKind::implies: node_h[i] = node_t[i] && (!node_h[n.lhs] || node_h[n.rhs]); break;
            }
        }
        return std::all_of(roots_.begin(), roots_.end(), [&](std::size_t r) { return node_h[r] != 0; });
    }

  private:
    std::size_t compile(Formula const &f) {
        if (auto it = memo_.find(f); it != memo_.end()) {
            return it->second;
        }
        CompiledNode node{f.kind()};
        switch (f.kind()) {
        case FormulaKind::bot: break;
        case FormulaKind::atom: node.atom = compile_atom(f.constraint()); break;
        default:
            node.lhs = compile(f.lhs());
            node.rhs = compile(f.rhs());
        }
        nodes_.push_back(node);
        memo_.emplace(f, nodes_.size() - 1);
        return nodes_.size() - 1;
    }

    std::size_t slot(std::string const &var) const {
        auto it = slot_of_.find(var);
        if (it == slot_of_.end()) {
            throw UnknownVariable{var};
        }
        return it->second;
    }

    std::size_t compile_atom(ConstraintAtom const &atom) {
        CompiledAtom out{};
        if (auto const *reg = atom.as<RegularAtom>()) {
            out.kind = CompiledAtom::Kind::regular;
            out.slots.push_back(slot(reg->name));
        } else if (auto const *lin = atom.as<LinearAtom>()) {
            out.kind = CompiledAtom::Kind::linear;
            out.linear = lin;
            for (auto const &term : lin->terms()) {
                out.slots.push_back(slot(term.variable));
            }
        } else if (auto const *dom = atom.as<DomAtom>()) {
            out.kind = CompiledAtom::Kind::dom;
            out.slots.push_back(slot(dom->variable));
            out.subdomain = dom->subdomain;
        } else {
            out.kind = CompiledAtom::Kind::def;
            out.slots.push_back(slot(atom.as<DefAtom>()->variable));
        }
        atoms_.push_back(std::move(out));
        return atoms_.size() - 1;
    }

    bool atom_holds(CompiledAtom const &atom, std::vector<Integer> const &v) const {
        switch (atom.kind) {
        case CompiledAtom::Kind::regular: return v[atom.slots[0]] == truth_slot;
        case CompiledAtom::Kind::def: return v[atom.slots[0]] != undefined_slot;
        case CompiledAtom::Kind::dom: {
            auto value = v[atom.slots[0]];
            return value != undefined_slot && atom.subdomain.contains(decode(value));
        }
        case CompiledAtom::Kind::linear: {
            thread_local std::vector<Integer> values;
            values.clear();
            for (auto s : atom.slots) {
                auto value = v[s];
                if (value == undefined_slot || value == truth_slot || !bounds_.contains(value)) {
                    return false;
                }
                values.push_back(value);
            }
            return eval_linear(*atom.linear, values);
        }
        }
        return false;
    }

    Bounds bounds_;
    std::map<std::string, std::size_t> slot_of_;
    std::vector<CompiledAtom> atoms_;
    std::vector<CompiledNode> nodes_;
    std::vector<std::size_t> roots_;
    std::map<Formula, std::size_t> memo_;
};

// Dense t-valuation number `index` in canonical order.
void decode_index(ValuationSpace const &space, std::uint64_t index, std::vector<Integer> &out) {
    auto const &menus = space.menus();
    out.resize(menus.size());
    for (std::size_t i = menus.size(); i > 0; --i) {
        auto const &menu = menus[i - 1];
        auto const radix = menu.size() + 1;
        auto digit = index % radix;
        index /= radix;
        out[i - 1] = digit == menu.size() ? undefined_slot : encode(menu[digit]);
    }
}

Valuation to_valuation(ValuationSpace const &space, std::vector<Integer> const &dense) {
    Valuation::Map map;
    auto const &names = space.variables();
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (dense[i] != undefined_slot) {
            map.emplace_hint(map.end(), names[i], decode(dense[i]));
        }
    }
    return Valuation{std::move(map)};
}

std::vector<std::size_t> defined_slots(std::vector<Integer> const &t) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (t[i] != undefined_slot) {
            out.push_back(i);
        }
    }
    return out;
}

// h keeps defined[j] iff bit (k-1-j) of mask is set.
void build_here(std::vector<Integer> const &t, std::vector<std::size_t> const &defined, std::uint64_t mask,
                std::vector<Integer> &h) {
    h = t;
    auto const k = defined.size();
    for (std::size_t j = 0; j < k; ++j) {
        if ((mask >> (k - 1 - j) & 1U) == 0) {
            h[defined[j]] = undefined_slot;
        }
    }
}

void check_budget(char const *what, double required, std::uint64_t budget) {
    if (required > static_cast<double>(budget)) {
        throw BudgetExceeded{what, required, static_cast<double>(budget)};
    }
}

// Splits [0, count) into contiguous blocks, one per worker, and concatenates the per-block
// results in block order so the output does not depend on scheduling.
template <typename R, typename Work>
std::vector<R> partitioned(std::uint64_t count, unsigned workers, Work const &work) {
    workers = std::max(1U, workers);
    if (workers == 1 || count < 2) {
        std::vector<R> out;
        work(std::uint64_t{0}, count, out);
        return out;
    }
    auto const blocks = static_cast<std::uint64_t>(std::min<std::uint64_t>(workers, count));
    std::vector<std::vector<R>> results(blocks);
    std::vector<std::exception_ptr> errors(blocks);
    {
        std::vector<std::thread> threads;
        threads.reserve(blocks);
        for (std::uint64_t b = 0; b < blocks; ++b) {
            threads.emplace_back([&, b] {
                try {
                    auto begin = count * b / blocks;
                    auto end = count * (b + 1) / blocks;
                    work(begin, end, results[b]);
                } catch (...) {
                    errors[b] = std::current_exception();
                }
            });
        }
        for (auto &thread : threads) {
            thread.join();
        }
    }
    for (auto const &error : errors) {
        if (error) {
            std::rethrow_exception(error);
        }
    }
    std::vector<R> out;
    for (auto &block : results) {
        std::move(block.begin(), block.end(), std::back_inserter(out));
    }
    return out;
}

} // namespace

// ValuationSpace

ValuationSpace::ValuationSpace(Signature const &sig, std::optional<VariableSet> const &restriction)
: sig_{sig} {
    for (auto const &[name, kind] : sig.variables()) {
        if (restriction && restriction->count(name) == 0) {
            continue;
        }
        names_.push_back(name);
        std::vector<DomainValue> menu;
        if (kind == VarKind::regular) {
            menu.push_back(DomainValue::truth());
        } else {
            for (Integer x = sig.bounds().lo();; ++x) {
                menu.push_back(DomainValue::integer(x));
                if (x == sig.bounds().hi()) {
                    break;
                }
            }
        }
        menus_.push_back(std::move(menu));
    }
    if (restriction) {
        for (auto const &name : *restriction) {
            if (!sig.contains(name)) {
                throw UnknownVariable{name};
            }
        }
    }
}

double ValuationSpace::valuation_count() const {
    double out = 1;
    for (auto const &menu : menus_) {
        out *= static_cast<double>(menu.size() + 1);
    }
    return out;
}

double ValuationSpace::interpretation_count() const {
    double out = 1;
    for (auto const &menu : menus_) {
        out *= static_cast<double>(2 * menu.size() + 1);
    }
    return out;
}

std::vector<Valuation> enumerate_t_valuations(ValuationSpace const &space, SearchOptions const &opts) {
    check_budget("valuation enumeration", space.valuation_count(), opts.budget);
    auto const count = static_cast<std::uint64_t>(space.valuation_count());
    return partitioned<Valuation>(count, opts.workers, [&](std::uint64_t begin, std::uint64_t end, auto &out) {
        std::vector<Integer> t;
        for (auto i = begin; i < end; ++i) {
            decode_index(space, i, t);
            out.push_back(to_valuation(space, t));
        }
    });
}

std::vector<Interpretation> models(Theory const &theory, ValuationSpace const &space, SearchOptions const &opts) {
    check_budget("model enumeration", space.interpretation_count(), opts.budget);
    CompiledTheory const compiled{theory, space};
    auto const count = static_cast<std::uint64_t>(space.valuation_count());
    return partitioned<Interpretation>(count, opts.workers, [&](std::uint64_t begin, std::uint64_t end, auto &out) {
        std::vector<Integer> t;
        std::vector<Integer> h;
        std::vector<char> node_t;
        std::vector<char> node_h;
        for (auto i = begin; i < end; ++i) {
            decode_index(space, i, t);
            if (!compiled.eval_there(t, node_t)) {
                continue; // persistence: no ⟨h,t⟩ can be a model either
            }
            auto const defined = defined_slots(t);
            auto const tv = to_valuation(space, t);
            for (std::uint64_t mask = (std::uint64_t{1} << defined.size());; ) {
                --mask;
                build_here(t, defined, mask, h);
                if (compiled.eval_here(h, node_t, node_h)) {
                    out.emplace_back(to_valuation(space, h), tv);
                }
                if (mask == 0) {
                    break;
                }
            }
        }
    });
}

std::vector<Valuation> equilibrium_models(Theory const &theory, ValuationSpace const &space,
                                          SearchOptions const &opts) {
    check_budget("equilibrium search", space.interpretation_count(), opts.budget);
    CompiledTheory const compiled{theory, space};
    auto const count = static_cast<std::uint64_t>(space.valuation_count());
    return partitioned<Valuation>(count, opts.workers, [&](std::uint64_t begin, std::uint64_t end, auto &out) {
        std::vector<Integer> t;
        std::vector<Integer> h;
        std::vector<char> node_t;
        std::vector<char> node_h;
        for (auto i = begin; i < end; ++i) {
            decode_index(space, i, t);
            if (!compiled.eval_there(t, node_t)) {
                continue;
            }
            auto const defined = defined_slots(t);
            auto const full = (std::uint64_t{1} << defined.size()) - 1;
            bool minimal = true;
            for (std::uint64_t mask = full; mask > 0 && minimal;) {
                --mask;
                build_here(t, defined, mask, h);
                minimal = !compiled.eval_here(h, node_t, node_h);
            }
            if (minimal) {
                out.push_back(to_valuation(space, t));
            }
        }
    });
}

HtcVerdict htc_equivalent(Theory const &lhs, Theory const &rhs, ValuationSpace const &space,
                          SearchOptions const &opts) {
    check_budget("equivalence check", space.interpretation_count(), opts.budget);
    CompiledTheory const left{lhs, space};
    CompiledTheory const right{rhs, space};
    auto const count = static_cast<std::uint64_t>(space.valuation_count());
    // lowest t-index known to carry a countermodel; blocks past it stop early
    std::atomic<std::uint64_t> first_hit{count};
    auto found = partitioned<Countermodel>(count, opts.workers, [&](std::uint64_t begin, std::uint64_t end, auto &out) {
        std::vector<Integer> t;
        std::vector<Integer> h;
        std::vector<char> lt;
        std::vector<char> rt;
        std::vector<char> lh;
        std::vector<char> rh;
        for (auto i = begin; i < end && i < first_hit.load(); ++i) {
            decode_index(space, i, t);
            bool const lthere = left.eval_there(t, lt);
            bool const rthere = right.eval_there(t, rt);
            if (!lthere && !rthere) {
                continue;
            }
            auto const defined = defined_slots(t);
            for (std::uint64_t mask = (std::uint64_t{1} << defined.size());;) {
                --mask;
                build_here(t, defined, mask, h);
                bool const l = lthere && left.eval_here(h, lt, lh);
                bool const r = rthere && right.eval_here(h, rt, rh);
                if (l != r) {
                    out.push_back(Countermodel{Interpretation{to_valuation(space, h), to_valuation(space, t)},
                                               l ? Side::left_only : Side::right_only});
                    auto expected = first_hit.load();
                    while (i < expected && !first_hit.compare_exchange_weak(expected, i)) {
                    }
                    return;
                }
                if (mask == 0) {
                    break;
                }
            }
        }
    });
    if (found.empty()) {
        return Equivalent{};
    }
    return found.front();
}

// Propositional programs

std::string PropRule::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < head.size(); ++i) {
        out += (i > 0 ? " | " : "") + head[i];
    }
    std::vector<std::string> body;
    for (auto const &p : pos) {
        body.push_back(p);
    }
    for (auto const &n : neg) {
        body.push_back("not " + n);
    }
    if (body.empty()) {
        return out.empty() ? ":- ." : out + ".";
    }
    out += out.empty() ? ":- " : " :- ";
    for (std::size_t i = 0; i < body.size(); ++i) {
        out += (i > 0 ? ", " : "") + body[i];
    }
    return out + ".";
}

std::set<std::string> PropProgram::atoms() const {
    std::set<std::string> out;
    for (auto const &rule : rules) {
        out.insert(rule.head.begin(), rule.head.end());
        out.insert(rule.pos.begin(), rule.pos.end());
        out.insert(rule.neg.begin(), rule.neg.end());
    }
    return out;
}

Theory PropProgram::to_theory() const {
    Theory out;
    for (auto const &rule : rules) {
        std::optional<Formula> body;
        auto add = [&](Formula f) { body = body ? Formula::conj(*body, std::move(f)) : std::move(f); };
        for (auto const &p : rule.pos) {
            add(Formula::atom(ConstraintAtom::regular(p)));
        }
        for (auto const &n : rule.neg) {
            add(Formula::neg(Formula::atom(ConstraintAtom::regular(n))));
        }
        std::optional<Formula> head;
        for (auto const &p : rule.head) {
            auto atom = Formula::atom(ConstraintAtom::regular(p));
            head = head ? Formula::disj(*head, std::move(atom)) : std::move(atom);
        }
        out.insert(Formula::implies(body ? *body : Formula::top(), head ? *head : Formula::bot()));
    }
    return out;
}

std::set<AtomSet> regular_stable_models(PropProgram const &program, SearchOptions const &opts) {
    // Only head atoms can be true in a stable model: dropping any other atom from X keeps ⟨H,X⟩ a model.
    std::vector<std::string> heads;
    for (auto const &rule : program.rules) {
        heads.insert(heads.end(), rule.head.begin(), rule.head.end());
    }
    std::sort(heads.begin(), heads.end());
    heads.erase(std::unique(heads.begin(), heads.end()), heads.end());
    if (heads.size() >= 63) {
        throw BudgetExceeded{"regular stable models", std::pow(2.0, static_cast<double>(heads.size())),
                             static_cast<double>(opts.budget)};
    }
    check_budget("regular stable models", std::pow(2.0, static_cast<double>(heads.size())), opts.budget);

    struct Bits {
        std::uint64_t head = 0;
        std::uint64_t pos = 0;
        std::uint64_t neg = 0;
        bool blocked = false; // a positive body atom can never be true
    };
    auto bit = [&](std::string const &atom) -> std::optional<std::uint64_t> {
        auto it = std::lower_bound(heads.begin(), heads.end(), atom);
        if (it == heads.end() || *it != atom) {
            return std::nullopt;
        }
        return std::uint64_t{1} << (it - heads.begin());
    };
    std::vector<Bits> rules;
    for (auto const &rule : program.rules) {
        Bits b;
        for (auto const &p : rule.head) {
            b.head |= *bit(p);
        }
        for (auto const &p : rule.pos) {
            if (auto m = bit(p)) {
                b.pos |= *m;
            } else {
                b.blocked = true;
            }
        }
        for (auto const &n : rule.neg) {
            if (auto m = bit(n)) {
                b.neg |= *m;
            }
        }
        if (!b.blocked) {
            rules.push_back(b);
        }
    }
    // ⟨w,X⟩ satisfies the rule at world w (the X-world is checked separately)
    auto sat_at = [&](std::uint64_t w, std::uint64_t x) {
        return std::all_of(rules.begin(), rules.end(), [&](Bits const &r) {
            bool const body = (r.pos & ~w) == 0 && (r.neg & x) == 0;
            return !body || (r.head & w) != 0;
        });
    };

    std::set<AtomSet> out;
    auto const total = std::uint64_t{1} << heads.size();
    for (std::uint64_t x = 0; x < total; ++x) {
        if (!sat_at(x, x)) {
            continue;
        }
        bool minimal = true;
        // proper submasks of x
        for (std::uint64_t h = (x - 1) & x; minimal; h = (h - 1) & x) {
            if (h != x && sat_at(h, x)) {
                minimal = false;
            }
            if (h == 0) {
                break;
            }
        }
        if (x == 0) {
            minimal = true;
        }
        if (minimal) {
            AtomSet model;
            for (std::size_t i = 0; i < heads.size(); ++i) {
                if (x >> i & 1U) {
                    model.insert(heads[i]);
                }
            }
            out.insert(std::move(model));
        }
    }
    return out;
}

} // namespace htceq
