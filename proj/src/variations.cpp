#include "inventory/variations.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <unordered_map>

namespace inventory {

ExtValue operator+(const ExtValue& a, const ExtValue& b) {
    if (a.is_infinite() || b.is_infinite()) return ExtValue::infinity();
    std::int64_t sum;
    if (__builtin_add_overflow(a.value(), b.value(), &sum)) throw OverflowError("variation value overflow");
    return ExtValue::finite(sum);
}

std::string to_string(const ExtValue& v) {
    return v.is_infinite() ? "∞" : std::to_string(v.value());
}

Sigma::Sigma(std::map<ExtValue, ExtValue> overrides, ExtValue fallback) : fallback_(fallback) {
    for (auto& [x, y] : overrides)
        if (y != fallback) overrides_.emplace(x, y);
}

ExtValue Sigma::operator()(const ExtValue& x) const {
    auto it = overrides_.find(x);
    return it == overrides_.end() ? fallback_ : it->second;
}

std::size_t SigmaHash::operator()(const Sigma& s) const noexcept {
    std::uint64_t h = 0x84222325cbf29ce4ULL;
    auto mix = [&h](const ExtValue& v) {
        const std::uint64_t raw = v.is_infinite() ? 0xffffffffffffffffULL : static_cast<std::uint64_t>(v.value());
        h ^= raw + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    };
    for (const auto& [x, y] : s.overrides()) {
        mix(x);
        mix(y);
    }
    mix(s.fallback());
    return static_cast<std::size_t>(h);
}

std::string to_string(const Sigma& s) {
    std::string out;
    for (const auto& [x, y] : s.overrides()) out += to_string(x) + "→" + to_string(y) + ", ";
    return out + "*→" + to_string(s.fallback());
}

Sigma sigma_from_multiset(const Multiset& s) {
    std::map<ExtValue, ExtValue> overrides;
    for (auto [x, m] : s.entries())
        overrides.emplace(ExtValue::finite(static_cast<std::int64_t>(x)), ExtValue::finite(static_cast<std::int64_t>(m)));
    return Sigma(std::move(overrides), ExtValue::finite(0));
}

Sigma sigma_from_values(const std::vector<std::int64_t>& values) {
    std::map<ExtValue, ExtValue> overrides;
    for (std::int64_t v : values) {
        auto [it, inserted] = overrides.emplace(ExtValue::finite(v), ExtValue::finite(1));
        if (!inserted) it->second = it->second + ExtValue::finite(1);
    }
    return Sigma(std::move(overrides), ExtValue::finite(0));
}

Sigma sigma_from_digits(const std::string& digits) {
    std::map<ExtValue, ExtValue> overrides;
    for (std::size_t i = 0; i < digits.size(); ++i) {
        if (digits[i] < '0' || digits[i] > '9') throw ParseError("expected a digit", i);
        overrides.emplace(ExtValue::finite(static_cast<std::int64_t>(i)), ExtValue::finite(digits[i] - '0'));
    }
    return Sigma(std::move(overrides), ExtValue::finite(0));
}

std::optional<Multiset> multiset_from_sigma(const Sigma& s) {
    if (s.fallback() != ExtValue::finite(0)) return std::nullopt;
    Multiset::Entries entries;
    for (const auto& [x, y] : s.overrides()) {
        if (x.is_infinite() || y.is_infinite() || x.value() <= 0 || y.value() < 0) return std::nullopt;
        entries.emplace(static_cast<Element>(x.value()), static_cast<Count>(y.value()));
    }
    return Multiset::from_entries(std::move(entries));
}

bool Domain::contains(const ExtValue& v) const {
    switch (kind) {
        case DomainKind::naturals: return !v.is_infinite() && v.value() >= 0;
        case DomainKind::naturals_with_infinity: return v.is_infinite() || v.value() >= 0;
        case DomainKind::modular_digits: return !v.is_infinite() && v.value() >= 0 && v.value() < parameter;
        case DomainKind::integers_with_floor: return !v.is_infinite() && v.value() >= parameter;
    }
    return false;
}

namespace {

bool is_zero(const ExtValue& v) { return v == ExtValue::finite(0); }

}  // namespace

VariationConfig classic_config() {
    return {"classic", {DomainKind::naturals, 0}, is_zero, "{0}", CardinalityRule::finite_count, 1};
}

VariationConfig stig_config() {
    return {"stig", {DomainKind::naturals_with_infinity, 0}, is_zero, "{0}", CardinalityRule::infinite_as_value, 1};
}

VariationConfig nounless_config(std::int64_t base) {
    if (base < 2) throw PreconditionError("nounless variation needs a base of at least 2");
    return {"nounless" + std::to_string(base), {DomainKind::modular_digits, base},
            [](const ExtValue&) { return false; }, "{}", CardinalityRule::modular_count, 0};
}

VariationConfig oeig_config(std::int64_t r) {
    if (r < 1) throw PreconditionError("oeig: r must be positive");
    return {"oeig:" + std::to_string(r), {DomainKind::naturals, 0}, is_zero, "{0}", CardinalityRule::finite_count, r};
}

VariationConfig significance_config(const std::vector<std::int64_t>& significant) {
    std::set<std::int64_t> keep(significant.begin(), significant.end());
    if (keep.count(0)) throw PreconditionError("significance: 0 cannot be significant");
    std::string text = "N\\{";
    for (auto it = keep.begin(); it != keep.end(); ++it) text += (it == keep.begin() ? "" : ",") + std::to_string(*it);
    text += "}";
    std::string name = "significance:" + text.substr(3, text.size() - 4);
    return {name, {DomainKind::naturals, 0},
            [keep](const ExtValue& v) { return v.is_infinite() || !keep.count(v.value()); }, text,
            CardinalityRule::finite_count, 1};
}

VariationConfig floor_config(std::int64_t least) {
    return {"floor:" + std::to_string(least), {DomainKind::integers_with_floor, least}, is_zero, "{0}",
            CardinalityRule::finite_count, 1};
}

namespace {

std::vector<std::int64_t> parse_int_list(const std::string& text) {
    std::vector<std::int64_t> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        std::size_t used = 0;
        try {
            out.push_back(std::stoll(item, &used));
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != item.size()) throw ParseError("expected an integer list in '" + text + "'", 0);
    }
    return out;
}

}  // namespace

VariationConfig preset(const std::string& spec) {
    const auto colon = spec.find(':');
    const std::string head = spec.substr(0, colon);
    const std::string arg = colon == std::string::npos ? "" : spec.substr(colon + 1);
    if (spec == "classic") return classic_config();
    if (spec == "stig") return stig_config();
    if (head == "nounless10" && arg.empty()) return nounless_config(10);
    if (head == "oeig" && !arg.empty()) {
        const auto r = parse_int_list(arg);
        if (r.size() == 1) return oeig_config(r[0]);
    }
    if (head == "significance" && !arg.empty()) return significance_config(parse_int_list(arg));
    if (head == "floor" && !arg.empty()) {
        const auto least = parse_int_list(arg);
        if (least.size() == 1) return floor_config(least[0]);
    }
    throw ParseError("unknown preset '" + spec + "'", 0);
}

Sigma variation_step(const Sigma& s, const VariationConfig& cfg) {
    const Domain& domain = cfg.domain;
    std::set<ExtValue> points;
    if (domain.finite()) {
        for (std::int64_t i = 0; i < domain.parameter; ++i) points.insert(ExtValue::finite(i));
    } else {
        for (const auto& [x, y] : s.overrides()) {
            points.insert(x);
            points.insert(y);
        }
        points.insert(s.fallback());
    }

    std::map<ExtValue, std::size_t> finite_preimage;
    std::size_t listed_in_domain = 0;
    for (const auto& [x, y] : s.overrides()) {
        if (!domain.contains(x)) continue;
        ++finite_preimage[y];
        ++listed_in_domain;
    }

    auto cardinality = [&](const ExtValue& x) -> ExtValue {
        std::int64_t count = 0;
        if (auto it = finite_preimage.find(x); it != finite_preimage.end()) count = static_cast<std::int64_t>(it->second);
        if (x == s.fallback()) {
            if (domain.finite()) {
                count += domain.parameter - static_cast<std::int64_t>(listed_in_domain);
            } else if (cfg.cardinality == CardinalityRule::infinite_as_value) {
                return ExtValue::infinity();
            } else {
                throw UnrepresentableError("preimage of " + to_string(x) + " is cofinite under " + cfg.name);
            }
        }
        if (cfg.cardinality == CardinalityRule::modular_count) count %= domain.parameter;
        return ExtValue::finite(count);
    };

    const ExtValue mention = ExtValue::finite(cfg.r);
    std::map<ExtValue, ExtValue> next;
    for (const ExtValue& x : points) {
        if (!domain.contains(x)) continue;
        ExtValue value = cfg.insignificant(x) ? ExtValue::finite(0) : cardinality(x);
        if (!cfg.insignificant(s(x))) value = value + mention;
        if (cfg.cardinality == CardinalityRule::modular_count)
            value = ExtValue::finite(value.value() % domain.parameter);
        if (!domain.contains(value))
            throw UnrepresentableError("value " + to_string(value) + " lies outside the domain of " + cfg.name);
        next.emplace(x, value);
    }
    ExtValue fallback = ExtValue::finite(0);
    if (!domain.finite() && !cfg.insignificant(s.fallback())) fallback = mention;
    return Sigma(std::move(next), fallback);
}

VariationOrbit variation_orbit(const Sigma& start, const VariationConfig& cfg, std::size_t max_iters) {
    if (max_iters == 0) throw PreconditionError("variation_orbit: max_iters must be positive");
    VariationOrbit out;
    out.start = start;
    out.states.push_back(start);
    std::unordered_map<Sigma, std::size_t, SigmaHash> seen{{start, 0}};
    for (std::size_t iter = 1; iter <= max_iters; ++iter) {
        Sigma next = variation_step(out.states.back(), cfg);
        if (auto hit = seen.find(next); hit != seen.end()) {
            out.looped = true;
            out.preperiod = hit->second;
            out.period = out.states.size() - hit->second;
            return out;
        }
        seen.emplace(next, out.states.size());
        out.states.push_back(std::move(next));
    }
    return out;
}

std::vector<ElementList> enumerate_Tnr(std::size_t n, std::uint64_t r) {
    if (n == 0) throw PreconditionError("enumerate_Tnr: n must be positive");
    std::vector<ElementList> out;
    ElementList prefix;
    auto extend = [&](auto&& self, std::size_t parts, std::uint64_t sum, std::uint64_t least) -> void {
        if (parts == 0) {
            if (sum == 0) out.push_back(prefix);
            return;
        }
        for (std::uint64_t part = least; part * parts <= sum; ++part) {
            prefix.push_back(part);
            self(self, parts - 1, sum - part, part);
            prefix.pop_back();
        }
    };
    extend(extend, n, checked_mul(r + 1, n), r);
    std::sort(out.begin(), out.end());
    return out;
}

bool in_Tnr(const ElementList& s, std::size_t n, std::uint64_t r) {
    if (s.size() != n) return false;
    std::uint64_t sum = 0;
    for (std::uint64_t x : s) {
        if (x < r) return false;
        sum += x;
    }
    return sum == (r + 1) * n;
}

ElementList tnr_shift(const ElementList& s, std::uint64_t r, std::uint64_t t) {
    if (!in_Tnr(s, s.size(), r)) throw PreconditionError("tnr_shift: input is not in T_{n,r}");
    ElementList out;
    for (std::uint64_t x : s) out.push_back(x + t - r);  // x >= r keeps this nonnegative
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<std::int64_t> sigma_order(const Sigma& s) {
    if (s.fallback() != ExtValue::finite(0)) return std::nullopt;
    std::int64_t total = 0;
    for (const auto& [x, y] : s.overrides()) {
        if (y.is_infinite()) return std::nullopt;
        total += y.value();
    }
    return total;
}

std::vector<DivergenceResult> divergence_search(const VariationConfig& cfg, const std::vector<Sigma>& seeds,
                                                std::size_t budget) {
    std::vector<DivergenceResult> out;
    for (const Sigma& seed : seeds) {
        const VariationOrbit o = variation_orbit(seed, cfg, budget);
        DivergenceResult r;
        r.seed = seed;
        r.looped = o.looped;
        r.preperiod = o.preperiod;
        r.period = o.period;
        r.generations = o.states.size() - 1;
        r.final_order = sigma_order(o.states.back()).value_or(-1);
        if (!o.looped) {
            const std::size_t window = std::max<std::size_t>(budget / 4, 1);
            r.monotone_growth = o.states.size() > window;
            for (std::size_t i = o.states.size() - window; r.monotone_growth && i < o.states.size(); ++i) {
                const auto before = sigma_order(o.states[i - 1]);
                const auto after = sigma_order(o.states[i]);
                r.monotone_growth = before && after && *after > *before;
            }
        }
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace inventory
