#pragma once

#include <string>

#include "twoway/comparison_tree.hpp"
#include "twoway/instance.hpp"
#include "twoway/threeway.hpp"

namespace twoway::testing {

inline std::string fixture_path(const std::string& name) { return std::string(TWOWAY_FIXTURE_DIR) + "/" + name; }

inline Instance fixture_instance(const std::string& name) { return read_instance_file(fixture_path(name)); }

inline ComparisonTree fixture_tree(const std::string& name, const Instance& inst) {
    return read_tree_file(fixture_path(name), inst);
}

/// Hand-built three-way tree over four_keys: 5 at the root, 1 (then 3) on
/// the left, 7 on the right.
inline ThreeWayTree reference_threeway_tree() {
    using T = ThreeWayTree;
    T left = T::compare(1, T::interval_leaf(0), T::compare(2, T::interval_leaf(1), T::interval_leaf(2)));
    T right = T::compare(4, T::interval_leaf(3), T::interval_leaf(4));
    return T::compare(3, left, right);
}

} // namespace twoway::testing
