#pragma once

#include <string>
#include <vector>

#include "twoway/instance.hpp"

namespace twoway {

/// S(i, j, h): the queries in [k_i, k_j) minus every key of rank above h
/// (and minus k_0, which is not a key). Holds the intervals i .. j-1 and
/// the keys b with max(i, 1) <= b < j and rank(b) <= h.
struct ValidSet {
    int i = 0;
    int j = 1;
    int h = 0;

    static ValidSet whole(const Instance& inst) { return {0, inst.size() + 1, inst.size()}; }

    bool contains_key(const RankPermutation& pi, int b) const {
        return b >= 1 && b >= i && b < j && pi.rank_of(b) <= h;
    }

    friend bool operator==(const ValidSet&, const ValidSet&) = default;
};

/// An explicit set of keys and intervals that a (sub)tree is expected to
/// handle. In the successful variant `gaps` is always empty.
struct QuerySet {
    std::vector<int> keys; // ascending key indices
    std::vector<int> gaps; // ascending interval indices

    static QuerySet whole(const Instance& inst);
    static QuerySet of(const Instance& inst, const RankPermutation& pi, const ValidSet& s);

    bool empty() const { return keys.empty() && gaps.empty(); }
    friend bool operator==(const QuerySet&, const QuerySet&) = default;
};

/// A point strictly inside interval a: the midpoint for bounded intervals,
/// k_1 - 1 and k_n + 1 for the unbounded ones, 0 when n = 0.
Rational gap_representative(const Instance& inst, int a);

/// "(-inf,1)", "(3,5)", "(7,+inf)".
std::string describe_gap(const Instance& inst, int a);

} // namespace twoway
