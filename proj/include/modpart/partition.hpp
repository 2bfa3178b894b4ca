#pragma once

#include <compare>
#include <string>
#include <vector>

namespace modpart {

// Weakly decreasing list of positive parts. The empty partition has weight 0.
class partition {
public:
    partition() = default;
    explicit partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    long long weight() const { return weight_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    // "5+4+2"; the empty partition prints as "0".
    std::string to_string() const;

    friend auto operator<=>(const partition&, const partition&) = default;

private:
    std::vector<int> parts_;
    long long weight_ = 0;
};

// m >= 2 everywhere a modulus appears.
struct modulus {
    explicit modulus(int m);
    int value;
};

// Vector of m-1 alternating block sums; all entries nonnegative.
struct alt_sum_type {
    std::vector<int> sigma;
    friend auto operator<=>(const alt_sum_type&, const alt_sum_type&) = default;
};

// Vector of m-1 residue-class part counts.
struct length_type {
    std::vector<int> lengths;
    friend auto operator<=>(const length_type&, const length_type&) = default;
};

enum class special_kind { none, gap1, gap2 };

// One zero-padded block of m consecutive parts. gap1/gap2 record
// entries[1] - entries[2] == 1 or 2 (meaningful for m >= 3).
struct basic_unit {
    std::vector<int> entries;
    special_kind kind = special_kind::none;
};

enum class case_kind { case_a, case_b, neither };

// Young-diagram transpose; involution, weight preserved.
partition conjugate(const partition& p);

// Pads with zeros to the next multiple of m, then sums
// lambda_{(i-1)m+j} - lambda_{(i-1)m+j+1} over blocks for j = 1..m-1.
alt_sum_type compute_alt_sum_type(const partition& p, const modulus& m);

// Counts of parts in each nonzero residue class mod m. Throws
// std::domain_error naming the first part divisible by m.
length_type compute_length_type(const partition& p, const modulus& m);

// Consecutive zero-padded m-tuples, in order; empty partition gives none.
std::vector<basic_unit> basic_units(const partition& p, const modulus& m);

// Requires m=3, every multiplicity <= 2 and second type entry == 2;
// throws std::domain_error otherwise. Under that precondition the units
// always contain either exactly two gap1 specials (case_a) or exactly one
// gap2 special (case_b); neither is unreachable but kept for honesty.
case_kind case_classify(const partition& p);

// Number of units strictly between the two gap1 units; requires
// case_classify(p) == case_a, throws std::domain_error otherwise.
int unit_distance(const partition& p);

}  // namespace modpart
