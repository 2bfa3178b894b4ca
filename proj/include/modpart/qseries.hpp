#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace modpart {

// Exponent key of one term: q-degree first so map order matches the dump
// order (q-exponent, then z-exponents lexicographically).
struct term_key {
    int q = 0;
    std::vector<int> z;
    friend auto operator<=>(const term_key&, const term_key&) = default;
};

// Polynomial in z_1..z_{num_z_vars} and q, truncated by total q-degree:
// every stored q-exponent is <= trunc, no stored coefficient is zero,
// every stored z vector has length num_z_vars. z-degrees are bounded only
// through q-degrees, so every z must enter with at least one q.
struct truncated_series {
    int num_z_vars = 0;
    int trunc = 0;
    std::map<term_key, long long> coeffs;
    friend bool operator==(const truncated_series&, const truncated_series&) = default;
};

// coeff * z^z_exp * q^q_exp. z_exp must have one entry per variable.
struct monomial {
    long long coeff = 1;
    std::vector<int> z_exp;
    int q_exp = 0;
};

// One factor numerator / (1 - [z_{z_index}] q^q_exp) of a Pochhammer-style
// product. z_index absent means a pure-q denominator.
struct chain_factor {
    monomial numerator;
    std::optional<int> z_index;
    int q_exp = 0;
};

// Zero series.
truncated_series make_series(int num_z_vars, int trunc);

// Constant c.
truncated_series series_constant(int num_z_vars, int trunc, long long c);

// Single term; exponents beyond trunc give the zero series.
truncated_series series_monomial(int num_z_vars, int trunc, const monomial& m);

// Coefficient-wise sum; result trunc = min of the two. Throws
// std::invalid_argument on mismatched variable counts.
truncated_series series_add(const truncated_series& a, const truncated_series& b);

// a + (-1) * b, same preconditions as series_add.
truncated_series series_sub(const truncated_series& a, const truncated_series& b);

// Convolution truncated at min(a.trunc, b.trunc); exact 64-bit arithmetic,
// throws std::overflow_error on overflow.
truncated_series series_mul(const truncated_series& a, const truncated_series& b);

// Scalar multiple.
truncated_series series_scale(const truncated_series& a, long long c);

// 1/(1 - z_{z_index} q^a) or, with z_index absent, 1/(1 - q^a), expanded
// through q^N. a == 0 is rejected outright: without z the series diverges,
// and with z it would put infinitely many z-powers at q-degree 0, which the
// q-only truncation cannot bound.
truncated_series geometric_factor(int num_z_vars, std::optional<int> z_index, int a, int N);

// Product over the spec of numerator / (1 - [z] q^a); empty spec gives 1.
truncated_series pochhammer_chain(const std::vector<chain_factor>& spec, int num_z_vars, int N);

// Stored coefficient or 0. q_exponent > s.trunc is an out-of-truncation
// error (std::out_of_range): beyond the window the value is unknown, not 0.
long long coeff(const truncated_series& s, const std::vector<int>& z_exponents, int q_exponent);

// Adds dz/dq to every exponent (entries may be negative), drops terms above
// new_trunc, keeps variable count. A term that would get a negative exponent
// is a logic error upstream and throws std::domain_error. Used to divide a
// series known to be divisible by a monomial: compute at an extended
// truncation, shift down, re-truncate.
truncated_series series_shift(const truncated_series& s, const std::vector<int>& dz, int dq,
                              int new_trunc);

// One line per term, "z1^a z2^b q^k : c"; zero z-exponents are omitted, the
// q factor is always printed. Sorted by q-exponent then z-exponents.
std::string dump(const truncated_series& s);

}  // namespace modpart
