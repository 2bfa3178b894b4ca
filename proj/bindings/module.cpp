// Python bindings for the main operations: type computations, table
// building, the verification sweeps, the census, the modulus-3 limit
// checks, and series dumps. Exceptions from the library surface as
// ValueError/IndexError through pybind11's standard translation.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "modpart/enumerate.hpp"
#include "modpart/gf_closed_forms.hpp"
#include "modpart/partition.hpp"
#include "modpart/qdiff_m3.hpp"
#include "modpart/qseries.hpp"
#include "modpart/verifier.hpp"

namespace py = pybind11;
using namespace modpart;

namespace {

py::dict cell_to_dict(const cell_report& c) {
    py::dict d;
    d["kind"] = c.kind;
    d["type"] = py::tuple(py::cast(c.type));
    d["n"] = c.n;
    d["p_count"] = c.p_count;
    d["q_count"] = c.q_count;
    d["status"] = c.status == cell_status::verified ? "verified" : "mismatch";
    d["p_witnesses"] = c.p_witnesses;
    d["q_witnesses"] = c.q_witnesses;
    return d;
}

py::dict report_to_dict(const verification_report& r) {
    py::dict d;
    d["m"] = r.m;
    d["max_n"] = r.max_n;
    d["verified"] = r.verified;
    d["cells_checked"] = r.cells_checked;
    d["seconds"] = r.seconds;
    d["flags"] = r.flags;
    d["summary"] = r.summary;
    py::list cells;
    for (const cell_report& c : r.cells) cells.append(cell_to_dict(c));
    d["cells"] = cells;
    return d;
}

py::dict table_to_dict(const count_table& t) {
    py::dict d;
    for (const auto& [key, count] : t.entries) {
        d[py::make_tuple(py::tuple(py::cast(key.first)), key.second)] = count;
    }
    return d;
}

ag_interpretation parse_interp(const std::string& s) {
    if (s == "standard") return ag_interpretation::standard;
    if (s == "literal") return ag_interpretation::literal;
    throw std::invalid_argument("interpretation must be \"standard\" or \"literal\"");
}

std::vector<std::vector<int>> list_partitions(int n, const constraint& c) {
    std::vector<std::vector<int>> out;
    for_each_partition(n, c, [&](const partition& p) { out.push_back(p.parts()); });
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, mod) {
    mod.doc() = "exact-arithmetic checks for partition type identities";
    mod.attr("__version__") = "1.0.0";

    mod.def(
        "conjugate",
        [](const std::vector<int>& parts) { return conjugate(partition(parts)).parts(); },
        py::arg("parts"), "Transpose the Young diagram.");

    mod.def(
        "alt_sum_type",
        [](const std::vector<int>& parts, int m) {
            return compute_alt_sum_type(partition(parts), modulus(m)).sigma;
        },
        py::arg("parts"), py::arg("m"),
        "Alternating block sums of the zero-padded partition, one entry per "
        "nonzero residue.");

    mod.def(
        "length_type",
        [](const std::vector<int>& parts, int m) {
            return compute_length_type(partition(parts), modulus(m)).lengths;
        },
        py::arg("parts"), py::arg("m"),
        "Part counts per nonzero residue class; parts divisible by m are "
        "rejected.");

    mod.def(
        "partitions_max_repeat",
        [](int n, int k) { return list_partitions(n, constraint::max_repeat(k)); }, py::arg("n"),
        py::arg("k"), "Partitions of n with every multiplicity at most k.");

    mod.def(
        "partitions_no_multiples",
        [](int n, int m) { return list_partitions(n, constraint::no_parts_divisible_by(m)); },
        py::arg("n"), py::arg("m"), "Partitions of n with no part divisible by m.");

    mod.def(
        "build_tables",
        [](int m, int max_n) {
            const auto [p, q] = build_tables(modulus(m), max_n);
            return py::make_tuple(table_to_dict(p), table_to_dict(q));
        },
        py::arg("m"), py::arg("max_n"),
        "Both count tables keyed by (type, weight): alternating-sum types over "
        "the bounded-multiplicity side, length types over the "
        "no-forbidden-parts side.");

    mod.def(
        "verify_conjecture",
        [](int m, int max_n) { return report_to_dict(verify_conjecture(modulus(m), max_n)); },
        py::arg("m"), py::arg("max_n"), "Cell-by-cell comparison of the two tables.");

    mod.def(
        "verify_special_cases",
        [](int m, int max_n) { return report_to_dict(verify_special_cases(modulus(m), max_n)); },
        py::arg("m"), py::arg("max_n"),
        "Marginals, pure cells, the closed-form families, and the worked "
        "decomposition cell.");

    mod.def(
        "verify_rr_companions",
        [](int d, int i, int max_n, const std::string& interpretation, bool witnesses) {
            return report_to_dict(
                verify_rr_companions(d, i, max_n, parse_interp(interpretation), witnesses));
        },
        py::arg("d"), py::arg("i"), py::arg("max_n"), py::arg("interpretation") = "standard",
        py::arg("witnesses") = false,
        "Gap-condition count against vanishing-type count for modulus 2d+1.");

    mod.def(
        "census",
        [](int m, int n) {
            const census_counts c = compute_census(modulus(m), n);
            py::dict d;
            d["total"] = c.total;
            d["pure"] = c.pure;
            d["families"] = c.families;
            d["other"] = c.other;
            return d;
        },
        py::arg("m"), py::arg("n"),
        "Bucket sizes at one weight: every partition, pure types, closed-form "
        "family types, the rest.");

    mod.def(
        "check_qdiff_limit",
        [](int trunc, int length) {
            const conjecture44_report r = check_conjecture_4_4(trunc, length);
            py::dict d;
            d["trunc"] = r.trunc;
            d["stabilization_index"] = r.stabilization_index;
            d["printed_fixed_point_holds"] = r.printed_fixed_point_holds;
            d["restated_identity_holds"] = r.restated_identity_holds;
            d["shifted_fixed_point_holds"] = r.shifted_fixed_point_holds;
            d["summary"] = r.summary;
            return d;
        },
        py::arg("trunc"), py::arg("length"),
        "Three readings of the modulus-3 limit identity, checked "
        "coefficient-wise up to q^trunc.");

    mod.def(
        "qdiff_cell",
        [](int max_length, int trunc, int s1, int s2, int n) {
            const fixed_length_count_table t = count_by_recurrence(max_length, trunc);
            long long total = 0;
            for (int len = 0; len <= max_length; ++len) total += table_count(t, len, s1, s2, n);
            return total;
        },
        py::arg("max_length"), py::arg("trunc"), py::arg("s1"), py::arg("s2"), py::arg("n"),
        "Recurrence-table count of type (s1, s2) at weight n, summed over "
        "lengths up to max_length.");

    mod.def(
        "series_dump",
        [](const std::string& which, int m, int trunc) {
            const modulus mod_m(m);
            if (which == "p") return dump(side_series(mod_m, table_side::p_side, trunc));
            if (which == "q") return dump(side_series(mod_m, table_side::q_side, trunc));
            if (which == "factorized") return dump(factorized_Q_generator(mod_m, trunc));
            if (which == "pure") {
                int max_units = 0;
                while (m * (max_units + 1) * (max_units + 1) + (max_units + 1) <= trunc)
                    ++max_units;
                return dump(pure_type_generator(mod_m, max_units, trunc));
            }
            throw std::invalid_argument("which must be p, q, factorized, or pure");
        },
        py::arg("which"), py::arg("m") = 3, py::arg("trunc") = 20,
        "Sorted text dump of one generating function.");

    mod.def(
        "lemma_dump",
        [](const std::string& lemma, int n, int term, int trunc) {
            const std::map<std::string, lemma_id> ids = {{"L34", lemma_id::L34},
                                                         {"L35", lemma_id::L35},
                                                         {"L36", lemma_id::L36},
                                                         {"L37", lemma_id::L37}};
            const auto it = ids.find(lemma);
            if (it == ids.end())
                throw std::invalid_argument("lemma must be L34, L35, L36, or L37");
            term_spec spec;
            spec.lemma = it->second;
            spec.n = n;
            spec.term_index = term;
            return dump(lemma_term(spec, trunc));
        },
        py::arg("lemma"), py::arg("n"), py::arg("term"), py::arg("trunc"),
        "Sorted text dump of one closed-form term.");
}
