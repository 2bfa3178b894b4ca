#include "modpart/verifier.hpp"

#include <algorithm>
#include <chrono>
#include <set>
#include <sstream>
#include <stdexcept>

namespace modpart {

namespace {

using clock_type = std::chrono::steady_clock;

double seconds_since(clock_type::time_point start) {
    return std::chrono::duration<double>(clock_type::now() - start).count();
}

bool is_pure(const std::vector<int>& type) {
    int nonzero = 0;
    for (int e : type) nonzero += e != 0;
    return nonzero == 1;
}

// Mixed types carrying the closed-form families: two nonzero entries one
// of which is 1; for modulus 3 also the (S,2) and (2,S) shapes.
bool in_families(const std::vector<int>& type, int m) {
    int nonzero = 0;
    for (int e : type) nonzero += e != 0;
    if (nonzero < 2) return false;
    const bool has_one = nonzero == 2 && std::count(type.begin(), type.end(), 1) >= 1;
    const bool m3_two = m == 3 && (type[0] == 2 || type[1] == 2);
    return has_one || m3_two;
}

std::string type_to_string(const std::vector<int>& type) {
    std::string s = "(";
    for (std::size_t i = 0; i < type.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(type[i]);
    }
    return s + ")";
}

// Partitions of n on one side whose type equals the given key.
std::vector<std::string> side_witnesses(const modulus& m, table_side side, int n,
                                        const std::vector<int>& type) {
    const constraint c = side == table_side::p_side
                             ? constraint::max_repeat(m.value - 1)
                             : constraint::no_parts_divisible_by(m.value);
    std::vector<std::string> out;
    for_each_partition(n, c, [&](const partition& p) {
        if (p.empty()) return;
        const std::vector<int> t = side == table_side::p_side
                                       ? compute_alt_sum_type(p, m).sigma
                                       : compute_length_type(p, m).lengths;
        if (t == type) out.push_back(p.to_string());
    });
    return out;
}

cell_report make_cell(std::string kind, std::vector<int> type, int n, long long pc,
                      long long qc) {
    cell_report cell;
    cell.kind = std::move(kind);
    cell.type = std::move(type);
    cell.n = n;
    cell.p_count = pc;
    cell.q_count = qc;
    cell.status = pc == qc ? cell_status::verified : cell_status::mismatch;
    return cell;
}

long long table_at(const count_table& t, const std::vector<int>& type, int n) {
    auto it = t.entries.find({type, n});
    return it == t.entries.end() ? 0 : it->second;
}

void finish_report(verification_report& r, clock_type::time_point start) {
    long long bad = 0;
    for (const cell_report& c : r.cells) bad += c.status == cell_status::mismatch;
    r.cells_checked = static_cast<long long>(r.cells.size());
    r.verified = bad == 0;
    r.seconds = seconds_since(start);
    std::ostringstream os;
    os << r.cells_checked << " cells compared, " << bad << " mismatched";
    if (bad > 0) {
        for (const cell_report& c : r.cells) {
            if (c.status != cell_status::mismatch) continue;
            os << "; first mismatch: " << c.kind;
            if (!c.type.empty()) os << " type=" << type_to_string(c.type);
            os << " n=" << c.n;
            break;
        }
    }
    r.summary = os.str();
}

}  // namespace

std::pair<count_table, count_table> build_tables(const modulus& m, int max_n) {
    if (max_n < 0) throw std::invalid_argument("build_tables: max_n < 0");
    count_table p{m.value, table_side::p_side, {}};
    count_table q{m.value, table_side::q_side, {}};
    for (int n = 1; n <= max_n; ++n) {
        for_each_partition(n, constraint::max_repeat(m.value - 1), [&](const partition& part) {
            p.entries[{compute_alt_sum_type(part, m).sigma, n}] += 1;
        });
        for_each_partition(n, constraint::no_parts_divisible_by(m.value),
                           [&](const partition& part) {
                               q.entries[{compute_length_type(part, m).lengths, n}] += 1;
                           });
    }
    return {std::move(p), std::move(q)};
}

truncated_series side_series(const modulus& m, table_side side, int N) {
    const constraint c = side == table_side::p_side
                             ? constraint::max_repeat(m.value - 1)
                             : constraint::no_parts_divisible_by(m.value);
    std::map<std::pair<std::vector<int>, int>, long long> cells;
    for (int n = 0; n <= N; ++n) {
        for_each_partition(n, c, [&](const partition& part) {
            const std::vector<int> type = side == table_side::p_side
                                              ? compute_alt_sum_type(part, m).sigma
                                              : compute_length_type(part, m).lengths;
            cells[{type, n}] += 1;
        });
    }
    truncated_series s = make_series(m.value - 1, N);
    for (const auto& [key, count] : cells) {
        monomial mono;
        mono.coeff = count;
        mono.z_exp = key.first;
        mono.q_exp = key.second;
        s = series_add(s, series_monomial(m.value - 1, N, mono));
    }
    return s;
}

verification_report verify_conjecture(const modulus& m, int max_n) {
    const auto start = clock_type::now();
    verification_report r;
    r.m = m.value;
    r.max_n = max_n;
    const auto [p, q] = build_tables(m, max_n);
    std::set<std::pair<std::vector<int>, int>> keys;
    for (const auto& [key, c] : p.entries) keys.insert(key);
    for (const auto& [key, c] : q.entries) keys.insert(key);
    for (const auto& [type, n] : keys) {
        cell_report cell = make_cell("cell", type, n, table_at(p, type, n), table_at(q, type, n));
        if (cell.status == cell_status::mismatch) {
            cell.p_witnesses = side_witnesses(m, table_side::p_side, n, type);
            cell.q_witnesses = side_witnesses(m, table_side::q_side, n, type);
        }
        r.cells.push_back(std::move(cell));
    }
    finish_report(r, start);
    return r;
}

verification_report verify_special_cases(const modulus& m, int max_n) {
    const auto start = clock_type::now();
    verification_report r;
    r.m = m.value;
    r.max_n = max_n;
    const auto [p, q] = build_tables(m, max_n);

    std::set<std::pair<std::vector<int>, int>> keys;
    for (const auto& [key, c] : p.entries) keys.insert(key);
    for (const auto& [key, c] : q.entries) keys.insert(key);

    // per-weight marginals: total alternating sum versus number of parts
    std::map<std::pair<int, int>, long long> p_marginal, q_marginal;
    for (const auto& [key, c] : p.entries) {
        int total = 0;
        for (int e : key.first) total += e;
        p_marginal[{total, key.second}] += c;
    }
    for (const auto& [key, c] : q.entries) {
        int total = 0;
        for (int e : key.first) total += e;
        q_marginal[{total, key.second}] += c;
    }
    std::set<std::pair<int, int>> marginal_keys;
    for (const auto& [key, c] : p_marginal) marginal_keys.insert(key);
    for (const auto& [key, c] : q_marginal) marginal_keys.insert(key);
    for (const auto& [total, n] : marginal_keys) {
        auto pit = p_marginal.find({total, n});
        auto qit = q_marginal.find({total, n});
        r.cells.push_back(make_cell("marginal", {total}, n,
                                    pit == p_marginal.end() ? 0 : pit->second,
                                    qit == q_marginal.end() ? 0 : qit->second));
    }

    for (const auto& [type, n] : keys) {
        const bool pure = is_pure(type);
        const bool family = in_families(type, m.value);
        if (!pure && !family) continue;
        cell_report cell = make_cell(pure ? "pure-cell" : "family-cell", type, n,
                                     table_at(p, type, n), table_at(q, type, n));
        if (cell.status == cell_status::mismatch) {
            cell.p_witnesses = side_witnesses(m, table_side::p_side, n, type);
            cell.q_witnesses = side_witnesses(m, table_side::q_side, n, type);
        }
        r.cells.push_back(std::move(cell));
    }

    // worked decomposition: the (3,1) cell at weight 14 equals the sum of
    // pure (3,0) cells at weights 12, 9, 6, 3
    if (m.value == 3 && max_n >= 14) {
        long long sum = 0;
        for (int w = 12; w >= 1; w -= 3) sum += table_at(p, {3, 0}, w);
        r.cells.push_back(make_cell("decomposition", {3, 1}, 14, table_at(p, {3, 1}, 14), sum));
    }

    finish_report(r, start);
    return r;
}

verification_report verify_rr_companions(int d, int i, int max_n, ag_interpretation interp,
                                         bool collect_witnesses) {
    if (d < 1) throw std::invalid_argument("verify_rr_companions: d must be >= 1");
    if (i < 1 || i > 2 * d) {
        throw std::invalid_argument("verify_rr_companions: i must be in 1..2d");
    }
    if (max_n < 0) throw std::invalid_argument("verify_rr_companions: max_n < 0");
    const auto start = clock_type::now();
    const modulus m(2 * d + 1);
    verification_report r;
    r.m = m.value;
    r.max_n = max_n;
    r.flags = {"d=" + std::to_string(d), "i=" + std::to_string(i),
               std::string("interpretation=") +
                   (interp == ag_interpretation::standard ? "standard" : "literal")};

    const constraint gap = constraint::andrews_gordon(d, i, interp);
    const constraint rep = constraint::max_repeat(2 * d);
    auto type_matches = [&](const partition& part) {
        const auto sigma = compute_alt_sum_type(part, m).sigma;
        if (sigma[i - 1] != 0 || sigma[2 * d - i] != 0) return false;
        for (int e : sigma) {
            if (e != 0) return true;
        }
        return false;
    };

    for (int n = 0; n <= max_n; ++n) {
        long long gap_count = 0, type_count = 0;
        if (n > 0) {
            for_each_partition(n, gap, [&](const partition&) { gap_count += 1; });
            for_each_partition(n, rep, [&](const partition& part) {
                type_count += type_matches(part);
            });
        }
        cell_report cell = make_cell("companion", {}, n, gap_count, type_count);
        if (cell.status == cell_status::mismatch || (collect_witnesses && n > 0)) {
            for_each_partition(n, gap, [&](const partition& part) {
                cell.p_witnesses.push_back(part.to_string());
            });
            for_each_partition(n, rep, [&](const partition& part) {
                if (type_matches(part)) cell.q_witnesses.push_back(part.to_string());
            });
        }
        r.cells.push_back(std::move(cell));
    }
    finish_report(r, start);
    return r;
}

census_counts compute_census(const modulus& m, int n) {
    census_counts out;
    for_each_partition(n, constraint::max_repeat(m.value - 1), [&](const partition& part) {
        if (part.empty()) return;
        const auto type = compute_alt_sum_type(part, m).sigma;
        out.total += 1;
        if (is_pure(type)) {
            out.pure += 1;
        } else if (in_families(type, m.value)) {
            out.families += 1;
        } else {
            out.other += 1;
        }
    });
    return out;
}

}  // namespace modpart
