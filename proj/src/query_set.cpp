#include "twoway/query_set.hpp"

#include <algorithm>

namespace twoway {

QuerySet QuerySet::whole(const Instance& inst) {
    QuerySet s;
    for (int b = 1; b <= inst.size(); ++b) s.keys.push_back(b);
    if (inst.variant() == Variant::Full)
        for (int a = 0; a <= inst.size(); ++a) s.gaps.push_back(a);
    return s;
}

QuerySet QuerySet::of(const Instance& inst, const RankPermutation& pi, const ValidSet& vs) {
    QuerySet s;
    for (int b = std::max(vs.i, 1); b < vs.j; ++b)
        if (pi.rank_of(b) <= vs.h) s.keys.push_back(b);
    if (inst.variant() == Variant::Full)
        for (int a = vs.i; a < vs.j; ++a) s.gaps.push_back(a);
    return s;
}

Rational gap_representative(const Instance& inst, int a) {
    const int n = inst.size();
    if (n == 0) return 0;
    if (a == 0) return inst.key(1) - 1;
    if (a == n) return inst.key(n) + 1;
    return Rational((inst.key(a) + inst.key(a + 1)) / 2);
}

std::string describe_gap(const Instance& inst, int a) {
    const int n = inst.size();
    std::string lo = a == 0 ? "-inf" : format_rational(inst.key(a));
    std::string hi = a == n ? "+inf" : format_rational(inst.key(a + 1));
    return "(" + lo + "," + hi + ")";
}

} // namespace twoway
