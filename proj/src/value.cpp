#include "htceq/value.hpp"

#include "htceq/error.hpp"

#include <algorithm>

namespace htceq {

Bounds::Bounds(Integer lo, Integer hi)
: lo_{lo}
, hi_{hi} {
    if (lo > hi) {
        throw PreconditionViolation{"bounds inverted: " + std::to_string(lo) + " > " + std::to_string(hi)};
    }
    if (lo < -max_magnitude || hi > max_magnitude) {
        throw PreconditionViolation{"bounds exceed the supported magnitude"};
    }
}

std::string Bounds::to_string() const { return std::to_string(lo_) + ".." + std::to_string(hi_); }

std::string DomainValue::to_string() const { return truth_ ? std::string{"t"} : std::to_string(value_); }

std::optional<DomainValue> Valuation::get(std::string const &var) const {
    if (auto it = bindings_.find(var); it != bindings_.end()) {
        return it->second;
    }
    return std::nullopt;
}

Valuation Valuation::with(std::string const &var, DomainValue value) const {
    auto copy = bindings_;
    copy.insert_or_assign(var, value);
    return Valuation{std::move(copy)};
}

Valuation Valuation::without(std::string const &var) const {
    auto copy = bindings_;
    copy.erase(var);
    return Valuation{std::move(copy)};
}

VariableSet Valuation::dom() const {
    VariableSet out;
    for (auto const &[var, value] : bindings_) {
        out.insert(out.end(), var);
    }
    return out;
}

std::string Valuation::to_string() const {
    std::string out = "{";
    bool first = true;
    for (auto const &[var, value] : bindings_) {
        if (!first) {
            out += ", ";
        }
        first = false;
        out += var + "=" + value.to_string();
    }
    return out + "}";
}

bool valuation_subset(Valuation const &v, Valuation const &w) {
    return std::all_of(v.begin(), v.end(), [&](auto const &binding) {
        auto other = w.get(binding.first);
        return other && *other == binding.second;
    });
}

Valuation restrict(Valuation const &v, VariableSet const &vars) {
    Valuation::Map out;
    for (auto const &[var, value] : v) {
        if (vars.count(var) > 0) {
            out.emplace_hint(out.end(), var, value);
        }
    }
    return Valuation{std::move(out)};
}

} // namespace htceq
