#include "modpart/enumerate.hpp"

#include <algorithm>
#include <stdexcept>

namespace modpart {

constraint constraint::all() {
    return {};
}

constraint constraint::max_repeat(int max_multiplicity) {
    if (max_multiplicity < 1)
        throw std::invalid_argument("max_repeat: multiplicity bound must be >= 1");
    constraint c;
    c.which = kind::max_repeat;
    c.max_multiplicity = max_multiplicity;
    return c;
}

constraint constraint::no_parts_divisible_by(int m) {
    if (m < 2)
        throw std::invalid_argument("no_parts_divisible_by: m must be >= 2");
    constraint c;
    c.which = kind::no_parts_divisible_by;
    c.m = m;
    return c;
}

constraint constraint::gap_at_least_2() {
    constraint c;
    c.which = kind::gap_at_least_2;
    return c;
}

constraint constraint::gap_at_least_2_no_ones() {
    constraint c;
    c.which = kind::gap_at_least_2_no_ones;
    return c;
}

constraint constraint::andrews_gordon(int d, int i, ag_interpretation interp) {
    if (d < 1)
        throw std::invalid_argument("andrews_gordon: d must be >= 1");
    if (i < 1 || i > 2 * d)
        throw std::invalid_argument("andrews_gordon: i must be in 1..2d");
    constraint c;
    c.which = kind::andrews_gordon;
    c.d = d;
    c.i = i;
    c.interp = interp;
    return c;
}

namespace {

struct walker {
    const constraint& c;
    const std::function<void(const partition&)>& fn;
    std::vector<int> current;
    int step1_pairs = 0;  // literal AG: adjacent positions with difference exactly 1

    // Multiplicity of v in the tail of current (parts are weakly decreasing,
    // so all copies of v sit at the end, preceded by all copies of v+1).
    int tail_count(int v) const {
        int n = 0;
        for (auto it = current.rbegin(); it != current.rend() && *it == v; ++it)
            ++n;
        return n;
    }

    int count_before_tail(int v) const {
        auto it = current.rbegin();
        while (it != current.rend() && *it < v)
            ++it;
        int n = 0;
        for (; it != current.rend() && *it == v; ++it)
            ++n;
        return n;
    }

    bool may_push(int v) const {
        switch (c.which) {
            case constraint::kind::all:
                return true;
            case constraint::kind::max_repeat:
                return tail_count(v) < c.max_multiplicity;
            case constraint::kind::no_parts_divisible_by:
                return v % c.m != 0;
            case constraint::kind::gap_at_least_2:
                return current.empty() || current.back() - v >= 2;
            case constraint::kind::gap_at_least_2_no_ones:
                return v >= 2 && (current.empty() || current.back() - v >= 2);
            case constraint::kind::andrews_gordon:
                if (c.interp == ag_interpretation::standard) {
                    // f_v + f_{v+1} <= d-1 for every v, plus f_1 <= i-1.
                    // Checked each push; the last push of any value sees the
                    // final counts of it and its successor.
                    if (v == 1 && tail_count(1) + 1 > c.i - 1)
                        return false;
                    return tail_count(v) + 1 + count_before_tail(v + 1) <= c.d - 1;
                }
                if (v == 1 && tail_count(1) + 1 > c.i - 1)
                    return false;
                return current.empty() || current.back() - v != 1 || step1_pairs + 1 <= c.d - 1;
        }
        return false;
    }

    void rec(int remaining, int max_part) {
        if (remaining == 0) {
            fn(partition(current));
            return;
        }
        for (int v = std::min(remaining, max_part); v >= 1; --v) {
            if (!may_push(v))
                continue;
            const bool new_step1 = !current.empty() && current.back() - v == 1;
            current.push_back(v);
            step1_pairs += new_step1 ? 1 : 0;
            rec(remaining - v, v);
            step1_pairs -= new_step1 ? 1 : 0;
            current.pop_back();
        }
    }
};

}  // namespace

void for_each_partition(int n, const constraint& c,
                        const std::function<void(const partition&)>& fn) {
    if (n < 0)
        throw std::invalid_argument("for_each_partition: n must be >= 0");
    walker w{c, fn, {}, 0};
    w.rec(n, n);
}

std::vector<partition> enumerate_partitions(int n, const constraint& c) {
    std::vector<partition> out;
    for_each_partition(n, c, [&](const partition& p) { out.push_back(p); });
    return out;
}

}  // namespace modpart
