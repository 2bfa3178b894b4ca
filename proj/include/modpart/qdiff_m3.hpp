#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "modpart/qseries.hpp"

namespace modpart {

// Modulus-3 fixed-length counts a_L(s1, s2; n): max-multiplicity-2
// partitions of n with alternating sum type (s1, s2) and length exactly L.
struct fixed_length_count_table {
    int max_length = 0;
    int trunc = 0;
    // counts[L] maps {s1, s2, n} to a_L(s1, s2; n); zero entries are absent
    std::vector<std::map<std::array<int, 3>, long long>> counts;
};

// Stored count or 0; negative s1/s2/n read as 0. Throws std::out_of_range
// for n > trunc (unknown, not zero) and std::invalid_argument for a length
// outside 0..max_length.
long long table_count(const fixed_length_count_table& t, int length, int s1, int s2, int n);

// Fills lengths 0..max_length from the base case a_0 = {(0,0;0) -> 1} by
// the three last-part-removal recurrences (one per length residue mod 3),
// bounded by weight <= trunc.
fixed_length_count_table count_by_recurrence(int max_length, int trunc);

// The length-N slice as a series in x, y, q (x = z1 tracks s1, y = z2
// tracks s2). A_0 = 1 (the empty partition); constant-free for N >= 1.
truncated_series A_series(int N, int trunc);

// Partial sum over lengths 0..N, computed solely from the three-term
// recurrences P_L = (P_{L-1} - t * P_{L-3}) / (1 - t) with t = q^L, x q^L,
// y q^L for L = 0, 1, 2 mod 3, from the initial values P_0 = 1,
// P_1 = 1/(1-xq), P_2 = 1/((1-xq)(1-yq^2)). Never built from A_series.
truncated_series P_series(int N, int trunc);

// Three readings of the limit identity for P_N, each checked
// coefficient-wise up to q^trunc using P_N with N >= trunc (stable window).
struct conjecture44_report {
    int trunc = 0;
    int stabilization_index = 0;
    // P = P / ((1-xq)(1-yq^2)) exactly as printed; degenerate, fails for
    // any trunc >= 1
    bool printed_fixed_point_holds = false;
    // P equals the factorized no-part-divisible-by-3 length-type series
    bool restated_identity_holds = false;
    // P(x,y,q) = P(xq^3, yq^3, q) / ((1-xq)(1-yq^2))
    bool shifted_fixed_point_holds = false;
    std::string summary;
};

// Throws std::invalid_argument when N < trunc (P_N not yet stable there).
conjecture44_report check_conjecture_4_4(int trunc, int N);

}  // namespace modpart
