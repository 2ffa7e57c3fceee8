#pragma once

#include <string>
#include <string_view>

#include "twoway/comparison_tree.hpp"
#include "twoway/instance.hpp"

namespace twoway {

enum class DispatchStyle { CLike, Pseudocode };

DispatchStyle parse_dispatch_style(std::string_view text); // "c-like" | "pseudocode"

/// Lowers a comparison tree to nested if/else text on a query variable `q`.
///
///   c-like:       if (q == 3) { return 3; } else { ... }
///   pseudocode:   if (q == 3) then / return 3 / else / ... / end
///
/// The yes-branch comes first. Key leaves return the key value, interval
/// leaves return GAP_a. Non-integer keys are written as exact decimals, or
/// as p/q when the expansion does not terminate (c-like wraps these in a
/// double division). Output depends only on the tree and the keys.
std::string emit_dispatch(const ComparisonTree& tree, const Instance& inst, DispatchStyle style);

} // namespace twoway
