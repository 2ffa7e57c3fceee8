#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>

#include "twoway/dp_solver.hpp"
#include "twoway/instance.hpp"
#include "twoway/weight.hpp"

namespace twoway {

/// Instance too large for exhaustive search.
class OracleLimitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A reachable query set during exhaustive search: intervals i .. j-1 plus
/// the keys whose bits are set (bit b-1 for key b). Only keys with
/// max(i, 1) <= b < j may be set.
struct OracleState {
    int i = 0;
    int j = 1;
    std::uint32_t present_keys = 0;

    friend bool operator==(const OracleState&, const OracleState&) = default;
};

/// Pins the root of one particular state to an equality test on `key`.
/// Used to price trees that are forced to make a specific choice.
struct ForcedEquality {
    OracleState state;
    int key = 0;
};

struct OracleOptions {
    Operators operators = Operators::LessAndEqual;
    int max_n = 12;
    std::optional<ForcedEquality> forced;
};

inline constexpr int kOracleHardLimit = 24;

/// Minimum cost over every two-way-comparison tree for a full instance,
/// found by memoised search over (i, j, present keys). Equality tests to any
/// present key are tried. Throws OracleLimitError when n > max_n and
/// InfeasibleError when no tree exists (lt-only with keys).
Weight oracle_full(const Instance& inst, const OracleOptions& options = {});

/// Key-only counterpart for successful instances.
Weight oracle_successful(const Instance& inst, const OracleOptions& options = {});

/// Dispatches on inst.variant().
Weight oracle(const Instance& inst, const OracleOptions& options = {});

/// State holding every key in [max(i, 1), j).
OracleState full_state(const Instance& inst, int i, int j);

} // namespace twoway
