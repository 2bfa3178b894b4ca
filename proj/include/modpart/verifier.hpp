#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "modpart/enumerate.hpp"
#include "modpart/partition.hpp"
#include "modpart/qseries.hpp"

namespace modpart {

enum class table_side { p_side, q_side };

// Counts of partitions of n grouped by an (m-1)-vector type: alternating
// sum types over the max-multiplicity-(m-1) side, length types over the
// no-part-divisible-by-m side.
struct count_table {
    int m;
    table_side side;
    std::map<std::pair<std::vector<int>, int>, long long> entries;
};

// Both tables for 1 <= n <= max_n (the empty partition is excluded).
std::pair<count_table, count_table> build_tables(const modulus& m, int max_n);

// One side as a series in m-1 z variables: the sum over its partitions of
// weight <= N of z^type q^weight, empty partition included.
truncated_series side_series(const modulus& m, table_side side, int N);

enum class cell_status { verified, mismatch };

// One compared cell. kind names the comparison family ("cell" for plain
// type cells, "marginal", "pure-cell", "family-cell", "decomposition",
// "companion"). Witness lists are filled only on mismatch.
struct cell_report {
    std::string kind;
    std::vector<int> type;
    int n = 0;
    long long p_count = 0;
    long long q_count = 0;
    cell_status status = cell_status::verified;
    std::vector<std::string> p_witnesses;
    std::vector<std::string> q_witnesses;
};

struct verification_report {
    int m = 0;
    int max_n = 0;
    bool verified = false;
    long long cells_checked = 0;
    double seconds = 0.0;
    std::vector<std::string> flags;
    std::vector<cell_report> cells;
    std::string summary;
};

// Cell-by-cell comparison of the two tables over the union of observed
// type keys; verified iff every cell matches. Mismatched cells carry the
// partition lists behind both counts.
verification_report verify_conjecture(const modulus& m, int max_n);

// Restricted comparisons: pure-type cells, total-sum versus length
// marginals, the (S,2)/(2,S) family (m = 3), the families with one type
// entry 1 and at most one other nonzero entry, and for m = 3, max_n >= 14
// the worked decomposition of the (3,1) cell at weight 14.
verification_report verify_special_cases(const modulus& m, int max_n);

// Gap-condition side versus type side for modulus 2d+1: partitions
// satisfying the (d, i) gap constraint under the chosen interpretation
// against max-multiplicity-2d partitions whose type vanishes at positions
// i and 2d+1-i but not everywhere. n = 0 reports 0 = 0 by convention.
// Mismatched cells always carry witnesses; collect_witnesses fills them
// for verified cells too. Throws std::invalid_argument unless d >= 1 and
// 1 <= i <= 2d.
verification_report verify_rr_companions(int d, int i, int max_n, ag_interpretation interp,
                                         bool collect_witnesses = false);

// Bucket sizes over the max-multiplicity-2 side at a single weight:
// every partition, pure types, the mixed types belonging to the two
// closed-form families above, and the remainder.
struct census_counts {
    long long total = 0;
    long long pure = 0;
    long long families = 0;
    long long other = 0;
};
census_counts compute_census(const modulus& m, int n);

}  // namespace modpart
