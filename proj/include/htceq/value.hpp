#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>

namespace htceq {

using Integer = std::int64_t;
using VariableSet = std::set<std::string>;

//! Closed integer interval that every theory variable ranges over.
class Bounds {
  public:
    //! Values beyond this magnitude are rejected so that dense encodings keep spare sentinels.
    static constexpr Integer max_magnitude = Integer{1} << 62;

    constexpr Bounds() = default;
    Bounds(Integer lo, Integer hi);

    [[nodiscard]] Integer lo() const { return lo_; }
    [[nodiscard]] Integer hi() const { return hi_; }
    [[nodiscard]] bool contains(Integer x) const { return lo_ <= x && x <= hi_; }
    //! Number of integers in the interval.
    [[nodiscard]] double size() const { return static_cast<double>(hi_) - static_cast<double>(lo_) + 1.0; }
    [[nodiscard]] std::string to_string() const;

    friend auto operator<=>(Bounds const &, Bounds const &) = default;

  private:
    Integer lo_ = 0;
    Integer hi_ = 200;
};

inline constexpr std::uint64_t default_budget = 10'000'000;

//! A defined value: the truth constant or an integer. The undefined value is not a DomainValue.
class DomainValue {
  public:
    [[nodiscard]] static DomainValue truth() { return DomainValue{true, 0}; }
    [[nodiscard]] static DomainValue integer(Integer x) { return DomainValue{false, x}; }

    [[nodiscard]] bool is_truth() const { return truth_; }
    [[nodiscard]] bool is_integer() const { return !truth_; }
    //! Only meaningful when is_integer().
    [[nodiscard]] Integer as_integer() const { return value_; }
    [[nodiscard]] std::string to_string() const;

    // truth orders before every integer
    friend auto operator<=>(DomainValue const &a, DomainValue const &b) {
        if (a.truth_ != b.truth_) {
            return a.truth_ ? std::strong_ordering::less : std::strong_ordering::greater;
        }
        return a.value_ <=> b.value_;
    }
    friend bool operator==(DomainValue const &, DomainValue const &) = default;

  private:
    DomainValue(bool truth, Integer value)
    : truth_{truth}
    , value_{value} {}

    bool truth_;
    Integer value_;
};

//! Partial map from variables to defined values; unbound variables are undefined.
class Valuation {
  public:
    using Map = std::map<std::string, DomainValue>;
    using const_iterator = Map::const_iterator;

    Valuation() = default;
    explicit Valuation(Map bindings)
    : bindings_{std::move(bindings)} {}
    Valuation(std::initializer_list<std::pair<std::string const, DomainValue>> init)
    : bindings_{init} {}

    [[nodiscard]] std::optional<DomainValue> get(std::string const &var) const;
    [[nodiscard]] bool defined(std::string const &var) const { return bindings_.count(var) > 0; }
    //! Copy of this valuation with var bound to value (replacing any previous binding).
    [[nodiscard]] Valuation with(std::string const &var, DomainValue value) const;
    [[nodiscard]] Valuation without(std::string const &var) const;
    [[nodiscard]] VariableSet dom() const;
    [[nodiscard]] std::size_t size() const { return bindings_.size(); }
    [[nodiscard]] bool empty() const { return bindings_.empty(); }
    [[nodiscard]] Map const &bindings() const { return bindings_; }
    [[nodiscard]] const_iterator begin() const { return bindings_.begin(); }
    [[nodiscard]] const_iterator end() const { return bindings_.end(); }
    //! "{a=t, s=130}" with variables in name order.
    [[nodiscard]] std::string to_string() const;

    friend bool operator==(Valuation const &, Valuation const &) = default;
    friend bool operator<(Valuation const &a, Valuation const &b) { return a.bindings_ < b.bindings_; }

  private:
    Map bindings_;
};

//! v is contained in w: every binding of v appears identically in w.
[[nodiscard]] bool valuation_subset(Valuation const &v, Valuation const &w);

//! Projection of v onto vars.
[[nodiscard]] Valuation restrict(Valuation const &v, VariableSet const &vars);

} // namespace htceq
