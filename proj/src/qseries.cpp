#include "modpart/qseries.hpp"

#include <sstream>
#include <stdexcept>

#include "modpart/checked.hpp"

namespace modpart {

namespace {

void require_same_vars(const truncated_series& a, const truncated_series& b, const char* op) {
    if (a.num_z_vars != b.num_z_vars) {
        throw std::invalid_argument(std::string(op) + ": variable counts differ (" +
                                    std::to_string(a.num_z_vars) + " vs " +
                                    std::to_string(b.num_z_vars) + ")");
    }
}

void add_term(truncated_series& s, term_key key, long long c) {
    if (c == 0) return;
    auto it = s.coeffs.find(key);
    if (it == s.coeffs.end()) {
        s.coeffs.emplace(std::move(key), c);
        return;
    }
    it->second = checked_add(it->second, c);
    if (it->second == 0) s.coeffs.erase(it);
}

}  // namespace

truncated_series make_series(int num_z_vars, int trunc) {
    if (num_z_vars < 0) throw std::invalid_argument("make_series: num_z_vars < 0");
    if (trunc < 0) throw std::invalid_argument("make_series: trunc < 0");
    return truncated_series{num_z_vars, trunc, {}};
}

truncated_series series_constant(int num_z_vars, int trunc, long long c) {
    truncated_series s = make_series(num_z_vars, trunc);
    if (c != 0) s.coeffs.emplace(term_key{0, std::vector<int>(num_z_vars, 0)}, c);
    return s;
}

truncated_series series_monomial(int num_z_vars, int trunc, const monomial& m) {
    truncated_series s = make_series(num_z_vars, trunc);
    if (static_cast<int>(m.z_exp.size()) != num_z_vars) {
        throw std::invalid_argument("series_monomial: z_exp has " +
                                    std::to_string(m.z_exp.size()) + " entries, expected " +
                                    std::to_string(num_z_vars));
    }
    for (int e : m.z_exp) {
        if (e < 0) throw std::invalid_argument("series_monomial: negative z exponent");
    }
    if (m.q_exp < 0) throw std::invalid_argument("series_monomial: negative q exponent");
    if (m.coeff != 0 && m.q_exp <= trunc) {
        s.coeffs.emplace(term_key{m.q_exp, m.z_exp}, m.coeff);
    }
    return s;
}

truncated_series series_add(const truncated_series& a, const truncated_series& b) {
    require_same_vars(a, b, "series_add");
    truncated_series out = make_series(a.num_z_vars, std::min(a.trunc, b.trunc));
    for (const auto& [key, c] : a.coeffs) {
        if (key.q <= out.trunc) add_term(out, key, c);
    }
    for (const auto& [key, c] : b.coeffs) {
        if (key.q <= out.trunc) add_term(out, key, c);
    }
    return out;
}

truncated_series series_sub(const truncated_series& a, const truncated_series& b) {
    return series_add(a, series_scale(b, -1));
}

truncated_series series_mul(const truncated_series& a, const truncated_series& b) {
    require_same_vars(a, b, "series_mul");
    truncated_series out = make_series(a.num_z_vars, std::min(a.trunc, b.trunc));
    for (const auto& [ka, ca] : a.coeffs) {
        if (ka.q > out.trunc) continue;
        for (const auto& [kb, cb] : b.coeffs) {
            const int q = ka.q + kb.q;
            if (q > out.trunc) break;  // map is q-major, later kb only grow
            term_key key{q, ka.z};
            for (int v = 0; v < out.num_z_vars; ++v) key.z[v] += kb.z[v];
            add_term(out, std::move(key), checked_mul(ca, cb));
        }
    }
    return out;
}

truncated_series series_scale(const truncated_series& a, long long c) {
    truncated_series out = make_series(a.num_z_vars, a.trunc);
    if (c == 0) return out;
    for (const auto& [key, v] : a.coeffs) out.coeffs.emplace(key, checked_mul(v, c));
    return out;
}

truncated_series geometric_factor(int num_z_vars, std::optional<int> z_index, int a, int N) {
    if (a <= 0) {
        throw std::invalid_argument(
            "geometric_factor: q-exponent must be >= 1 (a = 0 diverges without z and is "
            "unbounded in z at fixed q-truncation with it)");
    }
    if (z_index && (*z_index < 0 || *z_index >= num_z_vars)) {
        throw std::invalid_argument("geometric_factor: z index " + std::to_string(*z_index) +
                                    " out of range for " + std::to_string(num_z_vars) +
                                    " variables");
    }
    truncated_series s = make_series(num_z_vars, N);
    for (int k = 0; a * k <= N; ++k) {
        term_key key{a * k, std::vector<int>(num_z_vars, 0)};
        if (z_index) key.z[*z_index] = k;
        s.coeffs.emplace(std::move(key), 1);
    }
    return s;
}

truncated_series pochhammer_chain(const std::vector<chain_factor>& spec, int num_z_vars, int N) {
    truncated_series s = series_constant(num_z_vars, N, 1);
    for (const chain_factor& f : spec) {
        s = series_mul(s, series_monomial(num_z_vars, N, f.numerator));
        s = series_mul(s, geometric_factor(num_z_vars, f.z_index, f.q_exp, N));
    }
    return s;
}

long long coeff(const truncated_series& s, const std::vector<int>& z_exponents, int q_exponent) {
    if (static_cast<int>(z_exponents.size()) != s.num_z_vars) {
        throw std::invalid_argument("coeff: z_exponents has " +
                                    std::to_string(z_exponents.size()) + " entries, expected " +
                                    std::to_string(s.num_z_vars));
    }
    if (q_exponent < 0) throw std::invalid_argument("coeff: negative q exponent");
    if (q_exponent > s.trunc) {
        throw std::out_of_range("coeff: q^" + std::to_string(q_exponent) +
                                " is beyond truncation " + std::to_string(s.trunc) +
                                " (unknown, not zero)");
    }
    auto it = s.coeffs.find(term_key{q_exponent, z_exponents});
    return it == s.coeffs.end() ? 0 : it->second;
}

truncated_series series_shift(const truncated_series& s, const std::vector<int>& dz, int dq,
                              int new_trunc) {
    if (static_cast<int>(dz.size()) != s.num_z_vars) {
        throw std::invalid_argument("series_shift: dz has " + std::to_string(dz.size()) +
                                    " entries, expected " + std::to_string(s.num_z_vars));
    }
    if (new_trunc < 0) throw std::invalid_argument("series_shift: new_trunc < 0");
    truncated_series out = make_series(s.num_z_vars, new_trunc);
    for (const auto& [key, c] : s.coeffs) {
        term_key shifted{key.q + dq, key.z};
        if (shifted.q < 0) {
            throw std::domain_error("series_shift: term q^" + std::to_string(key.q) +
                                    " shifted to negative q-degree");
        }
        for (int v = 0; v < s.num_z_vars; ++v) {
            shifted.z[v] += dz[v];
            if (shifted.z[v] < 0) {
                throw std::domain_error("series_shift: negative exponent on z" +
                                        std::to_string(v + 1));
            }
        }
        if (shifted.q <= new_trunc) out.coeffs.emplace(std::move(shifted), c);
    }
    return out;
}

std::string dump(const truncated_series& s) {
    std::ostringstream os;
    for (const auto& [key, c] : s.coeffs) {
        for (int v = 0; v < s.num_z_vars; ++v) {
            if (key.z[v] != 0) os << 'z' << (v + 1) << '^' << key.z[v] << ' ';
        }
        os << "q^" << key.q << " : " << c << '\n';
    }
    return os.str();
}

}  // namespace modpart
