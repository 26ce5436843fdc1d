// Decision tables of the two classification theorems, clause by clause.

#include <algorithm>

#include "logenr/enumeration.hpp"

namespace logenr {
namespace {

bool meets(SubsetT s, std::initializer_list<int> labels) {
    return std::any_of(labels.begin(), labels.end(), [&](int k) { return s.contains(k); });
}

bool is_exactly(SubsetT s, std::initializer_list<int> labels) {
    return s == SubsetT::from_labels(std::vector<int>(labels));
}

}  // namespace

PredicateVerdict evaluate_predicate_A26(SubsetT t, const PredicateOptions& opts) {
    const SubsetT t1 = t.part(1);
    const SubsetT t2 = t.part(2);
    // T3 is read up to the loop symmetry: use the smaller of T3 and its mirror.
    SubsetT t3 = t.part(3);
    if (t3.mapped(ModelCase::A26).bits() < t3.bits()) t3 = t3.mapped(ModelCase::A26);
    const int n1 = t1.size(), n2 = t2.size(), n3 = t3.size();
    const bool has10 = t3.contains(10);
    const bool t1_is_3 = is_exactly(t1, {3});

    if (n1 + n2 < 1 || n3 < 1) return {false, "(1) T1+T2 >= 1 and T3 >= 1"};
    if (!opts.weaken_a26_cond1 && n1 == 0 && is_exactly(t2, {9})) return {false, "(1) T1 = 0 requires T2 != {9}"};

    if (n3 == 1) {
        if (n2 == 0) return {has10, "(2) T2 = 0, T3 = 1: 10 in T3"};
        const int max2 = *t2.part_max(2);
        if (max2 <= 6) return {has10, "(3) max T2 <= 6: 10 in T3"};
        if (max2 == 7) return {meets(t3, {10, 11}), "(3) max T2 = 7: T3 meets {10,11}"};
        return {true, "(3) max T2 in {8,9}: T3 arbitrary"};
    }
    if (n3 == 2) {
        if (n2 == 0) {
            if (has10) return {true, "(4) 10 in T3"};
            return {is_exactly(t3, {11, 14}) && !t1_is_3, "(4) T3 = {11,14} and T1 != {3}"};
        }
        const int max2 = *t2.part_max(2);
        if (has10) return {true, "(5) 10 in T3"};
        if (is_exactly(t3, {11, 14})) return {true, "(5) T3 = {11,14}"};
        if (is_exactly(t3, {11, 13})) return {max2 >= 5, "(5) T3 = {11,13} and max T2 >= 5"};
        if (is_exactly(t3, {11, 12})) return {meets(t2, {7, 8, 9}), "(5) T3 = {11,12} and T2 meets {7,8,9}"};
        if (is_exactly(t3, {12, 13})) return {meets(t2, {8, 9}), "(5) T3 = {12,13} and T2 meets {8,9}"};
        return {false, "(5) no listed T3"};
    }
    if (n3 == 3) {
        if (n2 == 0) {
            if (has10) return {true, "(6) 10 in T3"};
            return {is_exactly(t3, {11, 12, 14}) && !t1_is_3, "(6) T3 = {11,12,14} and T1 != {3}"};
        }
        const int max2 = *t2.part_max(2);
        if (has10) return {true, "(7) 10 in T3"};
        if (is_exactly(t3, {11, 12, 14})) return {true, "(7) T3 = {11,12,14}"};
        if (is_exactly(t3, {11, 12, 13})) return {max2 >= 5, "(7) T3 = {11,12,13} and max T2 >= 5"};
        return {false, "(7) no listed T3"};
    }
    if (n3 == 4 && n2 == 0) {
        if (opts.a26_cond8 == A26Cond8Reading::Unrestricted) return {true, "(8) read as unrestricted"};
        if (has10) return {true, "(8) 10 in T3"};
        return {is_exactly(t3, {11, 12, 13, 14}) && !t1_is_3, "(8) T3 = {11,12,13,14} and T1 != {3}"};
    }
    return {true, "(9) T arbitrary"};
}

namespace {

bool upsilon1(int min2, int min3) {
    return min2 <= 5 || (min2 == 6 && min3 <= 14) || (min2 >= 7 && min2 <= 8 && min3 <= 12) ||
           (min2 == 9 && min3 <= 11);
}

bool upsilon2(int max2, SubsetT t3, I22Upsilon2Reading reading) {
    const int max3 = *t3.part_max(3);
    if (max2 == 4) {
        switch (reading) {
            case I22Upsilon2Reading::MaxT3Is15: return max3 == 15;
            case I22Upsilon2Reading::Never: return false;
            case I22Upsilon2Reading::T3IsOnly15: return is_exactly(t3, {15});
        }
    }
    return (max2 >= 5 && max2 <= 7 && max3 >= 14) || (max2 == 8 && max3 >= 11) || max2 == 9;
}

bool upsilon3(int max2, int max3) {
    return (max2 == 4 && max3 >= 14) || (max2 >= 5 && max2 <= 6 && max3 >= 13) || (max2 == 7 && max3 >= 11) ||
           max2 >= 8;
}

}  // namespace

PredicateVerdict evaluate_predicate_I22(SubsetT t, const PredicateOptions& opts) {
    if (t.part_size(2) + t.part_size(3) < 1) return {false, "(1) T2+T3 >= 1"};
    // T2 = 0, T3 >= 1 is the mirror image of T2 >= 1, T3 = 0.
    if (t.part_size(2) == 0) t = t.mapped(ModelCase::I22);

    const SubsetT t1 = t.part(1), t2 = t.part(2), t3 = t.part(3);
    const int min2 = *t.part_min(2), max2 = *t.part_max(2);

    if (t3.empty()) {
        switch (t1.bits()) {
            case 0b000: return {min2 <= 5 && t2.contains(9), "(2) min T2 <= 5 and 9 in T2"};
            case 0b001: return {t2.contains(9), "(3) T1 = {1}: 9 in T2"};
            case 0b010: return {min2 <= 5, "(3) T1 = {2}: min T2 <= 5"};
            case 0b100: {
                bool first = false;
                switch (opts.i22_cond3) {
                    case I22Cond3Reading::FourAndEightOrNine: first = t2.contains(4) && meets(t2, {8, 9}); break;
                    case I22Cond3Reading::FourOrEightOrNine: first = t2.contains(4) || meets(t2, {8, 9}); break;
                    case I22Cond3Reading::EightOrNine: first = meets(t2, {8, 9}); break;
                }
                if (first) return {true, "(3) T1 = {3}: 4 in T2 and T2 meets {8,9}"};
                return {t2.contains(5) && t2.contains(9), "(3) T1 = {3}: {5,9} in T2"};
            }
            case 0b011: return {true, "(4) T1 = {1,2}"};
            case 0b101:
                if (opts.i22_cond4 == I22Cond4Reading::ContainsEightNine)
                    return {t2.contains(8) && t2.contains(9), "(4) T1 = {1,3}: {8,9} in T2"};
                return {meets(t2, {8, 9}), "(4) T1 = {1,3}: T2 meets {8,9}"};
            case 0b110: return {min2 <= 5, "(4) T1 = {2,3}: min T2 <= 5"};
            default: return {true, "(5) T1 = {1,2,3}"};
        }
    }

    const int min3 = *t.part_min(3), max3 = *t.part_max(3);
    const bool u1 = upsilon1(min2, min3);
    const bool u2 = upsilon2(max2, t3, opts.i22_upsilon2);
    const bool u3 = upsilon3(max2, max3);
    switch (t1.bits()) {
        case 0b000: return {u1 && u2, "(6) T1 = 0: Upsilon1 and Upsilon2"};
        case 0b001: return {u2, "(7) T1 = {1}: Upsilon2"};
        case 0b010:
        case 0b110: return {u1, "(8) 2 in T1: Upsilon1"};
        case 0b100: return {u1 && u3, "(9) T1 = {3}: Upsilon1 and Upsilon3"};
        case 0b101: return {u3, "(11) T1 = {1,3}: Upsilon3"};
        default: return {true, "(10) {1,2} in T1"};
    }
}

PredicateVerdict evaluate_predicate(ModelCase c, SubsetT t, const PredicateOptions& opts) {
    return c == ModelCase::A26 ? evaluate_predicate_A26(t, opts) : evaluate_predicate_I22(t, opts);
}

bool theorem_predicate_A26(SubsetT t) { return evaluate_predicate_A26(t).holds; }
bool theorem_predicate_I22(SubsetT t) { return evaluate_predicate_I22(t).holds; }

}  // namespace logenr
