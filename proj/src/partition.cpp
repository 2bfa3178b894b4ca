#include "modpart/partition.hpp"

#include <algorithm>
#include <stdexcept>

#include "modpart/checked.hpp"

namespace modpart {

partition::partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1)
            throw std::invalid_argument("partition: parts must be positive");
        if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
            throw std::invalid_argument("partition: parts must be weakly decreasing");
        weight_ = checked_add(weight_, parts_[i]);
    }
}

std::string partition::to_string() const {
    if (parts_.empty())
        return "0";
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i)
            out += '+';
        out += std::to_string(parts_[i]);
    }
    return out;
}

modulus::modulus(int m) : value(m) {
    if (m < 2)
        throw std::invalid_argument("modulus: m must be at least 2");
}

partition conjugate(const partition& p) {
    const auto& parts = p.parts();
    if (parts.empty())
        return {};
    std::vector<int> out(static_cast<std::size_t>(parts[0]), 0);
    for (int v : parts)
        for (int j = 0; j < v; ++j)
            out[static_cast<std::size_t>(j)] += 1;
    return partition(std::move(out));
}

alt_sum_type compute_alt_sum_type(const partition& p, const modulus& m) {
    const auto& parts = p.parts();
    const int mm = m.value;
    std::vector<int> sigma(static_cast<std::size_t>(mm - 1), 0);
    const int padded = static_cast<int>((parts.size() + mm - 1) / mm) * mm;
    auto at = [&](int idx) { return idx < static_cast<int>(parts.size()) ? parts[static_cast<std::size_t>(idx)] : 0; };
    for (int base = 0; base < padded; base += mm)
        for (int j = 1; j < mm; ++j)
            sigma[static_cast<std::size_t>(j - 1)] += at(base + j - 1) - at(base + j);
    return {std::move(sigma)};
}

length_type compute_length_type(const partition& p, const modulus& m) {
    std::vector<int> lengths(static_cast<std::size_t>(m.value - 1), 0);
    for (int v : p.parts()) {
        const int r = v % m.value;
        if (r == 0)
            throw std::domain_error("length_type: part " + std::to_string(v) +
                                    " is divisible by " + std::to_string(m.value));
        lengths[static_cast<std::size_t>(r - 1)] += 1;
    }
    return {std::move(lengths)};
}

std::vector<basic_unit> basic_units(const partition& p, const modulus& m) {
    const auto& parts = p.parts();
    const int mm = m.value;
    const int padded = static_cast<int>((parts.size() + mm - 1) / mm) * mm;
    auto at = [&](int idx) { return idx < static_cast<int>(parts.size()) ? parts[static_cast<std::size_t>(idx)] : 0; };
    std::vector<basic_unit> units;
    for (int base = 0; base < padded; base += mm) {
        basic_unit u;
        u.entries.reserve(static_cast<std::size_t>(mm));
        for (int j = 0; j < mm; ++j)
            u.entries.push_back(at(base + j));
        if (mm >= 3) {
            const int gap = u.entries[1] - u.entries[2];
            if (gap == 1)
                u.kind = special_kind::gap1;
            else if (gap == 2)
                u.kind = special_kind::gap2;
        }
        units.push_back(std::move(u));
    }
    return units;
}

namespace {

void require_sigma2_family(const partition& p) {
    const auto& parts = p.parts();
    for (std::size_t i = 0; i + 2 < parts.size(); ++i)
        if (parts[i] == parts[i + 2])
            throw std::domain_error("case_classify: part " + std::to_string(parts[i]) +
                                    " repeats more than twice");
    const auto type = compute_alt_sum_type(p, modulus(3));
    if (type.sigma[1] != 2)
        throw std::domain_error("case_classify: second type entry is " +
                                std::to_string(type.sigma[1]) + ", need 2");
}

}  // namespace

case_kind case_classify(const partition& p) {
    require_sigma2_family(p);
    int gap1 = 0, gap2 = 0;
    for (const auto& u : basic_units(p, modulus(3))) {
        if (u.kind == special_kind::gap1)
            ++gap1;
        else if (u.kind == special_kind::gap2)
            ++gap2;
    }
    if (gap1 == 2 && gap2 == 0)
        return case_kind::case_a;
    if (gap1 == 0 && gap2 == 1)
        return case_kind::case_b;
    return case_kind::neither;
}

int unit_distance(const partition& p) {
    if (case_classify(p) != case_kind::case_a)
        throw std::domain_error("unit_distance: partition is not case A");
    const auto units = basic_units(p, modulus(3));
    int first = -1, second = -1;
    for (int i = 0; i < static_cast<int>(units.size()); ++i) {
        if (units[static_cast<std::size_t>(i)].kind == special_kind::gap1) {
            if (first < 0)
                first = i;
            else
                second = i;
        }
    }
    return second - first - 1;
}

}  // namespace modpart
