#pragma once

#include <functional>
#include <vector>

#include "modpart/partition.hpp"

namespace modpart {

enum class ag_interpretation { standard, literal };

// Filter applied during enumeration. Factories validate parameters and throw
// std::invalid_argument on bad ones.
struct constraint {
    enum class kind {
        all,
        max_repeat,
        no_parts_divisible_by,
        gap_at_least_2,
        gap_at_least_2_no_ones,
        andrews_gordon,
    };

    kind which = kind::all;
    int max_multiplicity = 0;  // max_repeat
    int m = 0;                 // no_parts_divisible_by
    int d = 0;                 // andrews_gordon
    int i = 0;                 // andrews_gordon
    ag_interpretation interp = ag_interpretation::standard;

    static constraint all();
    static constraint max_repeat(int max_multiplicity);
    static constraint no_parts_divisible_by(int m);
    static constraint gap_at_least_2();
    static constraint gap_at_least_2_no_ones();
    static constraint andrews_gordon(int d, int i,
                                     ag_interpretation interp = ag_interpretation::standard);
};

// Calls fn once for every partition of n meeting the constraint, in
// lexicographically decreasing part order. n=0 yields the empty partition.
void for_each_partition(int n, const constraint& c,
                        const std::function<void(const partition&)>& fn);

// Materialized form of the stream above, same order.
std::vector<partition> enumerate_partitions(int n, const constraint& c);

}  // namespace modpart
