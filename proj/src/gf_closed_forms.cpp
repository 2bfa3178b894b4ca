#include "modpart/gf_closed_forms.hpp"

#include <stdexcept>
#include <string>

namespace modpart {

namespace {

// z^{n+1} q^{3n^2+7n+4} / ((zq;q^3)_{n+1} (q^3;q^3)_{n+1})
truncated_series pre34(int n, int trunc) {
    std::vector<chain_factor> spec;
    spec.push_back({monomial{1, {n + 1}, 3 * n * n + 7 * n + 4}, 0, 1});
    for (int k = 1; k <= n; ++k) spec.push_back({monomial{1, {0}, 0}, 0, 3 * k + 1});
    for (int k = 1; k <= n + 1; ++k) spec.push_back({monomial{1, {0}, 0}, std::nullopt, 3 * k});
    return pochhammer_chain(spec, 1, trunc);
}

// z^{n+1} q^{3n^2+4n+1} / ((zq;q^3)_{n+1} (q^3;q^3)_n)
truncated_series pre35(int n, int trunc) {
    std::vector<chain_factor> spec;
    spec.push_back({monomial{1, {n + 1}, 3 * n * n + 4 * n + 1}, 0, 1});
    for (int k = 1; k <= n; ++k) spec.push_back({monomial{1, {0}, 0}, 0, 3 * k + 1});
    for (int k = 1; k <= n; ++k) spec.push_back({monomial{1, {0}, 0}, std::nullopt, 3 * k});
    return pochhammer_chain(spec, 1, trunc);
}

// One signed monomial multiplier c * z^{dz} * q^{dq} applied to a
// prefactor; dz, dq may be negative.
struct piece {
    long long c;
    int dz;
    int dq;
};

using prefactor_fn = truncated_series (*)(int, int);

// Expands pre(n) at an extended truncation before shifting down, so terms
// that land inside the q^N window from above it are kept.
truncated_series apply_pieces(prefactor_fn pre, int n, const std::vector<piece>& pieces, int N) {
    truncated_series acc = make_series(1, N);
    for (const piece& p : pieces) {
        const int ext = p.dq < 0 ? -p.dq : 0;
        truncated_series s = pre(n, N + ext);
        s = series_shift(s, {p.dz}, p.dq, N);
        acc = series_add(acc, series_scale(s, p.c));
    }
    return acc;
}

// d = 0 bracket shared by L34 (on pre34) and L36 (on pre35):
//   sum_{k=1}^{kmax} [ z^{-2} q^{-(3k+1)} + z^{-1} q^{-3k} (1 - q^{3k}) ]
void append_distance0_sum(std::vector<piece>& pieces, int kmax) {
    for (int k = 1; k <= kmax; ++k) {
        pieces.push_back({1, -2, -(3 * k + 1)});
        pieces.push_back({1, -1, -3 * k});
        pieces.push_back({-1, -1, 0});
    }
}

// d >= 1 bracket shared by L34 and L36: sum_{k=1}^{kmax} z^{-2} q^{-(6k+3d+1)}
void append_distance_sum(std::vector<piece>& pieces, int kmax, int d) {
    for (int k = 1; k <= kmax; ++k) pieces.push_back({1, -2, -(6 * k + 3 * d + 1)});
}

void require(bool ok, const std::string& what) {
    if (!ok) throw std::invalid_argument("lemma_term: " + what);
}

struct term_pieces {
    prefactor_fn pre;
    std::vector<piece> pieces;
};

term_pieces build_term(const term_spec& spec) {
    const int n = spec.n;
    const int t = spec.term_index;
    term_pieces out;
    switch (spec.lemma) {
        case lemma_id::L34: {
            require(n >= 1, "L34 requires n >= 1");
            require(t >= 0 && t <= n - 1, "L34 term index must be in 0..n-1");
            out.pre = &pre34;
            if (t == 0) {
                append_distance0_sum(out.pieces, n - 1);
                out.pieces.push_back({1, -2, 2});
                out.pieces.push_back({1, -1, 3});
                out.pieces.push_back({-1, -1, 3 * n + 3});
            } else {
                append_distance_sum(out.pieces, n - t - 1, t);
                out.pieces.push_back({1, -2, -(3 * n - 3 * t - 2)});
            }
            break;
        }
        case lemma_id::L35: {
            require(n >= 1, "L35 requires n >= 1");
            require(t >= 0 && t <= n - 1, "L35 term index must be in 0..n-1");
            out.pre = &pre35;
            if (t == 0) {
                out.pieces.push_back({1, -2, 2});
                out.pieces.push_back({1, -1, 3});
                out.pieces.push_back({-1, -1, 3 * n + 3});
            } else {
                out.pieces.push_back({1, -2, -(3 * n - 3 * t - 2)});
            }
            break;
        }
        case lemma_id::L36: {
            require(n >= 2, "L36 requires n >= 2");
            require(t >= 0 && t <= n - 2, "L36 term index must be in 0..n-2");
            out.pre = &pre35;
            if (t == 0) {
                append_distance0_sum(out.pieces, n - 1);
            } else {
                append_distance_sum(out.pieces, n - t - 1, t);
            }
            break;
        }
        case lemma_id::L37: {
            require(t >= 1 && t <= 4, "L37 term index must be in 1..4");
            const bool scaled_by_n = (t == 1 || t == 3);
            require(n >= (scaled_by_n ? 1 : 0),
                    scaled_by_n ? "L37 terms (1),(3) require n >= 1" : "L37 requires n >= 0");
            out.pre = (t <= 2) ? &pre34 : &pre35;
            if (scaled_by_n) {
                out.pieces.push_back({n, -1, 0});
            } else {
                out.pieces.push_back({1, -1, 3 * n + 3});
            }
            break;
        }
    }
    return out;
}

// Series counting partitions into parts congruent to i mod m by length
// (one z variable): product of 1/(1-z q^{i+km}) over i+km <= N. Factors
// past the window only contribute the constant 1 below q^N.
truncated_series residue_class_series(int m, int i, int N) {
    std::vector<chain_factor> spec;
    for (int a = i; a <= N; a += m) spec.push_back({monomial{1, {0}, 0}, 0, a});
    return pochhammer_chain(spec, 1, N);
}

}  // namespace

truncated_series pure_type_generator(const modulus& m, int max_units, int N) {
    if (max_units < 0) throw std::invalid_argument("pure_type_generator: max_units < 0");
    truncated_series total = make_series(1, N);
    for (int u = 0; u <= max_units; ++u) {
        std::vector<chain_factor> spec;
        for (int k = 0; k < u; ++k) {
            spec.push_back({monomial{1, {1}, k * m.value + 1}, 0, k * m.value + 1});
            spec.push_back(
                {monomial{1, {0}, (k + 1) * m.value}, std::nullopt, (k + 1) * m.value});
        }
        spec.push_back({monomial{1, {0}, 0}, 0, u * m.value + 1});
        total = series_add(total, pochhammer_chain(spec, 1, N));
    }
    return total;
}

truncated_series lemma_term(const term_spec& spec, int N) {
    const term_pieces t = build_term(spec);
    return apply_pieces(t.pre, spec.n, t.pieces, N);
}

case_sums case_a_generating_function(int N, int max_n) {
    if (max_n <= 0) {
        max_n = 0;
        while (3 * (max_n + 1) * (max_n + 1) - 2 * (max_n + 1) <= N) ++max_n;
    }
    case_sums out{make_series(1, N), make_series(1, N), make_series(1, N), make_series(1, N)};
    auto accumulate = [&](truncated_series case_sums::*slot, prefactor_fn pre, int n,
                          const std::vector<piece>& pieces) {
        std::vector<piece> z1, z2;
        for (const piece& p : pieces) (p.dz == -1 ? z1 : z2).push_back(p);
        const truncated_series a = apply_pieces(pre, n, z1, N);
        const truncated_series b = apply_pieces(pre, n, z2, N);
        out.one_over_z_sum = series_add(out.one_over_z_sum, a);
        out.one_over_z2_sum = series_add(out.one_over_z2_sum, b);
        out.*slot = series_add(out.*slot, series_add(a, b));
    };
    for (int n = 0; n <= max_n; ++n) {
        for (int t = 0; t <= n - 1; ++t) {
            const term_pieces a34 = build_term({lemma_id::L34, n, t});
            accumulate(&case_sums::case_a, a34.pre, n, a34.pieces);
            const term_pieces a35 = build_term({lemma_id::L35, n, t});
            accumulate(&case_sums::case_a, a35.pre, n, a35.pieces);
        }
        for (int t = 0; t <= n - 2; ++t) {
            const term_pieces a36 = build_term({lemma_id::L36, n, t});
            accumulate(&case_sums::case_a, a36.pre, n, a36.pieces);
        }
        for (int t = 1; t <= 4; ++t) {
            if ((t == 1 || t == 3) && n < 1) continue;
            const term_pieces b37 = build_term({lemma_id::L37, n, t});
            accumulate(&case_sums::case_b, b37.pre, n, b37.pieces);
        }
    }
    return out;
}

truncated_series rhs_companion(const modulus& m, companion_eq eq, int N, int i, int j) {
    truncated_series factor = make_series(1, N);
    truncated_series base = make_series(1, N);
    switch (eq) {
        case companion_eq::eq31:
        case companion_eq::eq32: {
            if (m.value != 3) {
                throw std::invalid_argument("rhs_companion: eq31/eq32 are modulus-3 identities");
            }
            const int residue = (eq == companion_eq::eq31) ? 1 : 2;
            const int shift = (eq == companion_eq::eq31) ? 4 : 2;
            base = residue_class_series(3, residue, N);
            factor = series_monomial(1, N, monomial{1, {0}, shift});
            factor = series_mul(factor, geometric_factor(1, std::nullopt, 3, N));
            factor = series_mul(factor, geometric_factor(1, std::nullopt, 6, N));
            break;
        }
        case companion_eq::eq33: {
            if (i < 1 || i > m.value - 1 || j < 1 || j > m.value - 1) {
                throw std::invalid_argument("rhs_companion: eq33 requires 1 <= i,j <= m-1");
            }
            if (i == j) throw std::invalid_argument("rhs_companion: eq33 requires i != j");
            base = residue_class_series(m.value, i, N);
            factor = series_monomial(1, N, monomial{1, {0}, j});
            factor = series_mul(factor, geometric_factor(1, std::nullopt, m.value, N));
            break;
        }
    }
    return series_mul(base, factor);
}

truncated_series factorized_Q_generator(const modulus& m, int N) {
    truncated_series total = series_constant(m.value - 1, N, 1);
    for (int i = 1; i <= m.value - 1; ++i) {
        std::vector<chain_factor> spec;
        for (int a = i; a <= N; a += m.value) {
            spec.push_back({monomial{1, std::vector<int>(m.value - 1, 0), 0}, i - 1, a});
        }
        total = series_mul(total, pochhammer_chain(spec, m.value - 1, N));
    }
    return total;
}

}  // namespace modpart
