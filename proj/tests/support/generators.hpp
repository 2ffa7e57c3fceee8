#pragma once

#include <functional>
#include <random>
#include <string>
#include <vector>

#include "twoway/comparison_tree.hpp"
#include "twoway/instance.hpp"
#include "twoway/threeway.hpp"

namespace twoway::testing {

inline Rational R(const char* text) { return parse_rational(text); }

/// How weights are drawn: uniform hundredths, a tiny palette (lots of
/// ties), or mostly zeros.
enum class WeightStyle { Uniform, Ties, Zeros };

inline Rational draw_weight(std::mt19937_64& rng, WeightStyle style) {
    switch (style) {
    case WeightStyle::Uniform:
        return Rational(std::uniform_int_distribution<int>(0, 100)(rng), 100);
    case WeightStyle::Ties: {
        static constexpr int palette[] = {0, 10, 25, 25, 50};
        return Rational(palette[std::uniform_int_distribution<int>(0, 4)(rng)], 100);
    }
    case WeightStyle::Zeros:
        if (std::uniform_int_distribution<int>(0, 1)(rng) == 0) return Rational(0);
        return Rational(std::uniform_int_distribution<int>(1, 100)(rng), 100);
    }
    return Rational(0);
}

inline WeightStyle style_for(int index) { return static_cast<WeightStyle>(index % 3); }

/// Strictly increasing keys with random gaps, sometimes negative.
inline std::vector<Rational> draw_keys(std::mt19937_64& rng, int n) {
    std::vector<Rational> keys;
    int k = std::uniform_int_distribution<int>(-5, 5)(rng);
    for (int b = 0; b < n; ++b) {
        k += std::uniform_int_distribution<int>(1, 4)(rng);
        keys.emplace_back(k);
    }
    return keys;
}

inline Instance random_full(std::mt19937_64& rng, int n, WeightStyle style) {
    std::vector<Rational> beta, alpha;
    for (int b = 0; b < n; ++b) beta.push_back(draw_weight(rng, style));
    for (int a = 0; a <= n; ++a) alpha.push_back(draw_weight(rng, style));
    for (auto& w : beta) w.canonicalize();
    for (auto& w : alpha) w.canonicalize();
    return Instance::full(draw_keys(rng, n), std::move(beta), std::move(alpha));
}

inline Instance random_successful(std::mt19937_64& rng, int n, WeightStyle style) {
    std::vector<Rational> beta;
    for (int b = 0; b < n; ++b) beta.push_back(draw_weight(rng, style));
    for (auto& w : beta) w.canonicalize();
    return Instance::successful(draw_keys(rng, n), std::move(beta));
}

inline Instance random_instance(std::mt19937_64& rng, Variant variant, int n, WeightStyle style) {
    return variant == Variant::Full ? random_full(rng, n, style) : random_successful(rng, n, style);
}

/// A uniformly-chosen legal root decision at every step, so the result
/// always handles the whole instance. Only "<" tests at keys strictly
/// inside the current range are drawn.
inline ComparisonTree random_tree(std::mt19937_64& rng, const Instance& inst) {
    const bool full = inst.variant() == Variant::Full;
    std::function<ComparisonTree(int, int, std::vector<int>)> rec = [&](int i, int j, std::vector<int> keys) {
        if (full && j == i + 1 && keys.empty()) return ComparisonTree::interval_leaf(i);
        if (!full && keys.size() == 1) return ComparisonTree::key_leaf(keys.front());

        struct Move {
            bool equality;
            int key;
        };
        std::vector<Move> moves;
        for (int b : keys) moves.push_back({true, b});
        for (int b = i + 1; b < j; ++b) {
            if (!full) {
                bool left = false, right = false;
                for (int k : keys) (k < b ? left : right) = true;
                if (!left || !right) continue;
            }
            moves.push_back({false, b});
        }
        const Move m = moves[std::uniform_int_distribution<std::size_t>(0, moves.size() - 1)(rng)];
        if (m.equality) {
            std::vector<int> rest;
            for (int k : keys)
                if (k != m.key) rest.push_back(k);
            return ComparisonTree::equality_test(m.key, rec(i, j, rest));
        }
        std::vector<int> lo, hi;
        for (int k : keys) (k < m.key ? lo : hi).push_back(k);
        return ComparisonTree::less(m.key, rec(i, m.key, lo), rec(m.key, j, hi));
    };
    std::vector<int> all;
    for (int b = 1; b <= inst.size(); ++b) all.push_back(b);
    return rec(0, inst.size() + 1, all);
}

/// Every legal tree for the instance (equality tests to any present key,
/// "<" at any key strictly inside the range). Exponential; n <= 3 only.
inline std::vector<ComparisonTree> all_trees(const Instance& inst) {
    const bool full = inst.variant() == Variant::Full;
    std::function<std::vector<ComparisonTree>(int, int, std::vector<int>)> rec = [&](int i, int j,
                                                                                     std::vector<int> keys) {
        std::vector<ComparisonTree> out;
        if (full && j == i + 1 && keys.empty()) return std::vector{ComparisonTree::interval_leaf(i)};
        if (!full && keys.size() == 1) return std::vector{ComparisonTree::key_leaf(keys.front())};
        if (!full && keys.empty()) return out;
        for (int b : keys) {
            std::vector<int> rest;
            for (int k : keys)
                if (k != b) rest.push_back(k);
            for (const auto& sub : rec(i, j, rest)) out.push_back(ComparisonTree::equality_test(b, sub));
        }
        for (int b = i + 1; b < j; ++b) {
            std::vector<int> lo, hi;
            for (int k : keys) (k < b ? lo : hi).push_back(k);
            auto left = rec(i, b, lo);
            auto right = rec(b, j, hi);
            for (const auto& l : left)
                for (const auto& r : right) out.push_back(ComparisonTree::less(b, l, r));
        }
        return out;
    };
    std::vector<int> all;
    for (int b = 1; b <= inst.size(); ++b) all.push_back(b);
    return rec(0, inst.size() + 1, all);
}

/// Every three-way search tree over the instance's keys.
inline std::vector<ThreeWayTree> all_threeway_trees(int n) {
    std::function<std::vector<ThreeWayTree>(int, int)> rec = [&](int a, int b) {
        if (a == b) return std::vector{ThreeWayTree::interval_leaf(a)};
        std::vector<ThreeWayTree> out;
        for (int r = a + 1; r <= b; ++r)
            for (const auto& l : rec(a, r - 1))
                for (const auto& rt : rec(r, b)) out.push_back(ThreeWayTree::compare(r, l, rt));
        return out;
    };
    return rec(0, n);
}

} // namespace twoway::testing
