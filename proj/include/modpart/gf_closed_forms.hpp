#pragma once

#include "modpart/partition.hpp"
#include "modpart/qseries.hpp"

namespace modpart {

// Term lists for the modulus-3 type-(S,2) generating function, split by
// length class and case. L34 covers length 3n+3, L35 length 3n+2, L36
// length 3n+1, all case A with the term index selecting the distance
// between the two gap1 units; L37 covers case B with four displayed terms.
enum class lemma_id { L34, L35, L36, L37 };

struct term_spec {
    lemma_id lemma;
    int n;           // unit-count parameter: the partition has n+1 units
    int term_index;  // L34, L35: 0..n-1; L36: 0..n-2; L37: 1..4
};

// Sum over unit counts u = 0..max_units of the chain
//   zq/(1-zq) * q^m/(1-q^m) * ... * 1/(1-zq^{um+1}),
// the generating function of max-multiplicity-(m-1) partitions whose type
// has a single nonzero leading entry tracked by z. One z variable.
truncated_series pure_type_generator(const modulus& m, int max_units, int N);

// One displayed term, z tracking the leading type entry. The 1/z, 1/z^2
// prefactors are absorbed into the z^{n+1} numerator; each piece that
// divides by q^e is expanded at truncation N+e and shifted down, so no
// boundary mass is lost. Throws std::invalid_argument when the term's
// validity condition on n fails or the index is out of range.
truncated_series lemma_term(const term_spec& spec, int N);

// All lemma terms with any series mass below q^N, summed.
struct case_sums {
    truncated_series case_a;           // L34 + L35 + L36
    truncated_series case_b;           // L37
    truncated_series one_over_z_sum;   // every 1/z piece (case B is all 1/z)
    truncated_series one_over_z2_sum;  // every 1/z^2 piece
};

// max_n <= 0 derives the range automatically: n is included while
// 3n^2 - 2n <= N, a lower bound for the least weight at unit count n+1.
case_sums case_a_generating_function(int N, int max_n = 0);

enum class companion_eq { eq31, eq32, eq33 };

// Right-hand sides of the length-type companion identities, one z variable
// tracking l. eq31 (m=3): f(z,q of one-residue-class-1 partitions) times
// q^4/((1-q^3)(1-q^6)); eq32 (m=3): the class-2 series times
// q^2/((1-q^3)(1-q^6)); eq33 (any m, 1 <= i,j <= m-1, i != j): the class-i
// series times q^j/(1-q^m). Parameter violations throw
// std::invalid_argument.
truncated_series rhs_companion(const modulus& m, companion_eq eq, int N, int i = 0, int j = 0);

// Product over residues i = 1..m-1 of the series counting partitions into
// parts congruent to i mod m by length, z_i tracking the class-i length.
truncated_series factorized_Q_generator(const modulus& m, int N);

}  // namespace modpart
