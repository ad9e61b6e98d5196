#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "inventory/multiset.hpp"

namespace inventory {

// A nonnegative count, or infinity (which absorbs +1).
class ExtValue {
public:
    constexpr ExtValue() = default;
    static constexpr ExtValue finite(std::int64_t n) { return ExtValue(n, false); }
    static constexpr ExtValue infinity() { return ExtValue(0, true); }

    constexpr bool is_infinite() const { return infinite_; }
    constexpr std::int64_t value() const { return value_; }

    friend constexpr bool operator==(const ExtValue&, const ExtValue&) = default;
    friend constexpr std::strong_ordering operator<=>(const ExtValue& a, const ExtValue& b) {
        if (a.infinite_ != b.infinite_) return a.infinite_ ? std::strong_ordering::greater : std::strong_ordering::less;
        return a.value_ <=> b.value_;
    }
    friend ExtValue operator+(const ExtValue& a, const ExtValue& b);

private:
    constexpr ExtValue(std::int64_t v, bool inf) : value_(inf ? 0 : v), infinite_(inf) {}

    std::int64_t value_ = 0;
    bool infinite_ = false;
};

std::string to_string(const ExtValue& v);

// A function given by finitely many overrides and a default for every other
// point of the domain.
class Sigma {
public:
    Sigma() = default;
    Sigma(std::map<ExtValue, ExtValue> overrides, ExtValue fallback);

    const std::map<ExtValue, ExtValue>& overrides() const { return overrides_; }
    ExtValue fallback() const { return fallback_; }
    ExtValue operator()(const ExtValue& x) const;

    friend bool operator==(const Sigma&, const Sigma&) = default;
    friend auto operator<=>(const Sigma&, const Sigma&) = default;

private:
    std::map<ExtValue, ExtValue> overrides_;
    ExtValue fallback_;
};

struct SigmaHash {
    std::size_t operator()(const Sigma& s) const noexcept;
};

// "1→2, 3→1, 8→1, *→0"
std::string to_string(const Sigma& s);

Sigma sigma_from_multiset(const Multiset& s);
// Values may be zero or negative here, e.g. {-1, 0, 2}.
Sigma sigma_from_values(const std::vector<std::int64_t>& values);
// Digit i of a base-b numeral is sigma(i), e.g. 6210001000.
Sigma sigma_from_digits(const std::string& digits);
std::optional<Multiset> multiset_from_sigma(const Sigma& s);

enum class DomainKind { naturals, naturals_with_infinity, modular_digits, integers_with_floor };

struct Domain {
    DomainKind kind = DomainKind::naturals;
    std::int64_t parameter = 0;  // the base for modular digits, the least element for a floor

    bool contains(const ExtValue& v) const;
    bool finite() const { return kind == DomainKind::modular_digits; }
};

enum class CardinalityRule {
    finite_count,        // cofinite preimages cannot be counted
    infinite_as_value,   // cofinite preimages count as infinity
    modular_count,       // counts are reduced modulo the domain's base
};

struct VariationConfig {
    std::string name;
    Domain domain;
    std::function<bool(const ExtValue&)> insignificant;
    std::string insignificant_text;
    CardinalityRule cardinality = CardinalityRule::finite_count;
    std::int64_t r = 1;
};

class UnrepresentableError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

VariationConfig classic_config();
VariationConfig stig_config();
VariationConfig nounless_config(std::int64_t base = 10);
VariationConfig oeig_config(std::int64_t r);
// Only counts in `significant` are mentioned.
VariationConfig significance_config(const std::vector<std::int64_t>& significant);
VariationConfig floor_config(std::int64_t least);
// Presets by name: classic, stig, nounless10, oeig:R, significance:1,2,3, floor:-1.
VariationConfig preset(const std::string& spec);

Sigma variation_step(const Sigma& s, const VariationConfig& cfg);

struct VariationOrbit {
    Sigma start;
    std::vector<Sigma> states;  // sigma_0 ... up to the first repeat or the budget
    bool looped = false;
    std::size_t preperiod = 0;
    std::size_t period = 0;
};

VariationOrbit variation_orbit(const Sigma& start, const VariationConfig& cfg, std::size_t max_iters);

// Multisets as ascending element lists; zero is allowed here.
using ElementList = std::vector<std::uint64_t>;

std::vector<ElementList> enumerate_Tnr(std::size_t n, std::uint64_t r);
bool in_Tnr(const ElementList& s, std::size_t n, std::uint64_t r);
ElementList tnr_shift(const ElementList& s, std::uint64_t r, std::uint64_t t);

struct DivergenceResult {
    Sigma seed;
    bool looped = false;
    std::size_t preperiod = 0;
    std::size_t period = 0;
    std::size_t generations = 0;
    bool monotone_growth = false;  // heuristic only
    std::int64_t final_order = 0;
};

// Sum of the finite values of a finitely supported sigma.
std::optional<std::int64_t> sigma_order(const Sigma& s);

std::vector<DivergenceResult> divergence_search(const VariationConfig& cfg, const std::vector<Sigma>& seeds,
                                                std::size_t budget);

}  // namespace inventory
