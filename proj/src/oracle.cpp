#include "twoway/oracle.hpp"

#include <bit>
#include <string>
#include <unordered_map>

namespace twoway {

namespace {

std::uint32_t keys_below(int b) { return b <= 1 ? 0u : ((1u << (b - 1)) - 1u); }

class ExhaustiveSearch {
public:
    ExhaustiveSearch(const Instance& inst, const OracleOptions& options) : inst_(inst), options_(options) {
        const int n = inst.size();
        if (n > options.max_n)
            throw OracleLimitError("oracle refuses n=" + std::to_string(n) + " keys; the limit is " +
                                   std::to_string(options.max_n) + " (raise it with --max-n)");
        if (n > kOracleHardLimit)
            throw OracleLimitError("oracle cannot handle more than " + std::to_string(kOracleHardLimit) + " keys");
        full_ = inst.variant() == Variant::Full;
    }

    std::optional<Rational> run() { return best(full_state(inst_, 0, inst_.size() + 1)); }

private:
    std::uint64_t memo_key(const OracleState& s) const {
        return (static_cast<std::uint64_t>(s.i) << 40) | (static_cast<std::uint64_t>(s.j) << 32) | s.present_keys;
    }

    Rational weight(const OracleState& s) const {
        Rational w = 0;
        if (full_)
            for (int a = s.i; a < s.j; ++a) w += inst_.gap_weight(a);
        for (std::uint32_t m = s.present_keys; m; m &= m - 1) w += inst_.key_weight(std::countr_zero(m) + 1);
        return w;
    }

    static void consider(std::optional<Rational>& best, const Rational& candidate) {
        if (!best || candidate < *best) best = candidate;
    }

    std::optional<Rational> best(const OracleState& s) {
        const std::uint64_t key = memo_key(s);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;

        std::optional<Rational> result = solve_state(s);
        memo_.emplace(key, result);
        return result;
    }

    std::optional<Rational> solve_state(const OracleState& s) {
        const int key_count = std::popcount(s.present_keys);
        if (full_) {
            if (s.j == s.i + 1 && key_count == 0) return Rational(0);
        } else {
            if (key_count == 0) return std::nullopt;
            if (key_count == 1) return Rational(0);
        }

        const Rational w = weight(s);
        const bool forced_here = options_.forced && options_.forced->state == s;
        std::optional<Rational> result;

        if (options_.operators == Operators::LessAndEqual || forced_here) {
            for (std::uint32_t m = s.present_keys; m; m &= m - 1) {
                const int b = std::countr_zero(m) + 1;
                if (forced_here && b != options_.forced->key) continue;
                if (auto rest = best({s.i, s.j, s.present_keys & ~(1u << (b - 1))})) consider(result, w + *rest);
            }
        }
        if (forced_here) return result;

        for (int b = s.i + 1; b < s.j; ++b) {
            auto left = best({s.i, b, s.present_keys & keys_below(b)});
            if (!left) continue;
            auto right = best({b, s.j, s.present_keys & ~keys_below(b)});
            if (!right) continue;
            consider(result, w + *left + *right);
        }
        return result;
    }

    const Instance& inst_;
    const OracleOptions& options_;
    bool full_ = true;
    std::unordered_map<std::uint64_t, std::optional<Rational>> memo_;
};

Weight run_oracle(const Instance& inst, const OracleOptions& options) {
    ExhaustiveSearch search(inst, options);
    auto result = search.run();
    if (!result) throw InfeasibleError("no tree handles the instance with the allowed operators");
    return Weight(*result);
}

} // namespace

OracleState full_state(const Instance& inst, int i, int j) {
    OracleState s{i, j, 0};
    for (int b = std::max(i, 1); b < j && b <= inst.size(); ++b) s.present_keys |= 1u << (b - 1);
    return s;
}

Weight oracle_full(const Instance& inst, const OracleOptions& options) {
    if (inst.variant() != Variant::Full) throw std::invalid_argument("oracle_full needs a full-variant instance");
    return run_oracle(inst, options);
}

Weight oracle_successful(const Instance& inst, const OracleOptions& options) {
    if (inst.variant() != Variant::Successful)
        throw std::invalid_argument("oracle_successful needs a successful-variant instance");
    return run_oracle(inst, options);
}

Weight oracle(const Instance& inst, const OracleOptions& options) {
    return inst.variant() == Variant::Full ? oracle_full(inst, options) : oracle_successful(inst, options);
}

} // namespace twoway
