#include "modpart/qdiff_m3.hpp"

#include <stdexcept>

#include "modpart/checked.hpp"
#include "modpart/gf_closed_forms.hpp"
#include "modpart/partition.hpp"

namespace modpart {

namespace {

// x -> x q^3, y -> y q^3; exact because every q-degree only grows.
truncated_series shift_arguments(const truncated_series& s) {
    truncated_series out = make_series(s.num_z_vars, s.trunc);
    for (const auto& [key, c] : s.coeffs) {
        term_key moved = key;
        for (int e : key.z) moved.q += 3 * e;
        if (moved.q <= s.trunc) out.coeffs.emplace(std::move(moved), c);
    }
    return out;
}

}  // namespace

long long table_count(const fixed_length_count_table& t, int length, int s1, int s2, int n) {
    if (length < 0 || length > t.max_length) {
        throw std::invalid_argument("table_count: length " + std::to_string(length) +
                                    " outside filled range 0.." + std::to_string(t.max_length));
    }
    if (n > t.trunc) {
        throw std::out_of_range("table_count: weight " + std::to_string(n) +
                                " is beyond truncation " + std::to_string(t.trunc) +
                                " (unknown, not zero)");
    }
    if (s1 < 0 || s2 < 0 || n < 0) return 0;
    const auto& slice = t.counts[length];
    auto it = slice.find({s1, s2, n});
    return it == slice.end() ? 0 : it->second;
}

fixed_length_count_table count_by_recurrence(int max_length, int trunc) {
    if (max_length < 0) throw std::invalid_argument("count_by_recurrence: max_length < 0");
    if (trunc < 0) throw std::invalid_argument("count_by_recurrence: trunc < 0");
    fixed_length_count_table t;
    t.max_length = max_length;
    t.trunc = trunc;
    t.counts.assign(max_length + 1, {});
    t.counts[0][{0, 0, 0}] = 1;
    for (int L = 1; L <= max_length; ++L) {
        auto& out = t.counts[L];
        // scatter from the two shorter lengths: re-attach a last part of
        // size k to each counted partition, adding k to every part
        for (int src = L - 1; src >= L - 2 && src >= 0; --src) {
            for (const auto& [key, c] : t.counts[src]) {
                for (int k = 1; key[2] + L * k <= trunc; ++k) {
                    std::array<int, 3> to = key;
                    to[2] += L * k;
                    if (L % 3 == 1) to[0] += k;
                    if (L % 3 == 2) to[1] += k;
                    auto [it, fresh] = out.try_emplace(to, 0);
                    it->second = checked_add(it->second, c);
                }
            }
        }
    }
    return t;
}

truncated_series A_series(int N, int trunc) {
    if (N < 0) throw std::invalid_argument("A_series: N < 0");
    const fixed_length_count_table t = count_by_recurrence(N, trunc);
    truncated_series s = make_series(2, trunc);
    for (const auto& [key, c] : t.counts[N]) {
        s = series_add(s, series_scale(series_monomial(2, trunc, monomial{1, {key[0], key[1]},
                                                                          key[2]}),
                                       c));
    }
    return s;
}

truncated_series P_series(int N, int trunc) {
    if (N < 0) throw std::invalid_argument("P_series: N < 0");
    std::vector<truncated_series> last;
    last.push_back(series_constant(2, trunc, 1));
    last.push_back(series_mul(last[0], geometric_factor(2, 0, 1, trunc)));
    last.push_back(series_mul(last[1], geometric_factor(2, 1, 2, trunc)));
    if (N < 3) return last[N];
    for (int L = 3; L <= N; ++L) {
        monomial t{1, {0, 0}, L};
        std::optional<int> zi;
        if (L % 3 == 1) zi = 0;
        if (L % 3 == 2) zi = 1;
        if (zi) t.z_exp[*zi] = 1;
        truncated_series next =
            series_sub(last[2], series_mul(series_monomial(2, trunc, t), last[0]));
        next = series_mul(next, geometric_factor(2, zi, L, trunc));
        last[0] = std::move(last[1]);
        last[1] = std::move(last[2]);
        last[2] = std::move(next);
    }
    return last[2];
}

conjecture44_report check_conjecture_4_4(int trunc, int N) {
    if (N < trunc) {
        throw std::invalid_argument("check_conjecture_4_4: need N >= trunc for a stable window");
    }
    conjecture44_report r;
    r.trunc = trunc;
    r.stabilization_index = N;

    const truncated_series p = P_series(N, trunc);
    const truncated_series factor =
        series_mul(geometric_factor(2, 0, 1, trunc), geometric_factor(2, 1, 2, trunc));

    r.printed_fixed_point_holds = (p == series_mul(p, factor));
    r.restated_identity_holds = (p == factorized_Q_generator(modulus(3), trunc));
    r.shifted_fixed_point_holds = (p == series_mul(shift_arguments(p), factor));

    auto word = [](bool b) { return b ? "holds" : "fails"; };
    r.summary = std::string("printed fixed point (P = P/((1-xq)(1-yq^2))) ") +
                word(r.printed_fixed_point_holds) +
                " (degenerate as printed: it forces the factor to be 1); " +
                "restated identity (P limit = factorized no-multiples-of-3 series) " +
                word(r.restated_identity_holds) + "; argument-shifted fixed point " +
                "(P(x,y,q) = P(xq^3,yq^3,q)/((1-xq)(1-yq^2))) " +
                word(r.shifted_fixed_point_holds) + "; checked up to q^" +
                std::to_string(trunc) + " at index " + std::to_string(N) + ".";
    return r;
}

}  // namespace modpart
