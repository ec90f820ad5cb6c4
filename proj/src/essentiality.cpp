#include "mvone/essentiality.hpp"

#include "mvone/errors.hpp"

#include <stdexcept>

namespace mvone {

namespace {

// Subsets of {0..k-1} in (size, lexicographic) order, as index lists.
std::vector<std::vector<int>> ordered_subsets(int k) {
    std::vector<std::vector<int>> out;
    std::vector<std::vector<int>> by_mask;
    for (std::size_t mask = 1; mask < (std::size_t{1} << k); ++mask) {
        std::vector<int> idx;
        for (int i = 0; i < k; ++i)
            if (mask & (std::size_t{1} << i)) idx.push_back(i);
        by_mask.push_back(std::move(idx));
    }
    std::stable_sort(by_mask.begin(), by_mask.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return by_mask;
}

}  // namespace

int subtuple_sum_dim(const PolytopeTuple& a, const std::vector<int>& indices) {
    Mat diffs;
    for (int i : indices) {
        const auto& verts = a.entries[static_cast<std::size_t>(i)].verts;
        for (std::size_t j = 1; j < verts.size(); ++j) diffs.push_back(sub(verts[j], verts[0]));
    }
    return rank_of(diffs);
}

int tuple_dim(const PolytopeTuple& a) {
    std::vector<int> all(static_cast<std::size_t>(a.size()));
    for (int i = 0; i < a.size(); ++i) all[static_cast<std::size_t>(i)] = i;
    return subtuple_sum_dim(a, all) - a.size();
}

bool is_essential(const PolytopeTuple& a) {
    for (const auto& idx : ordered_subsets(a.size())) {
        const int need = std::min(static_cast<int>(idx.size()) + 1, a.dim);
        if (subtuple_sum_dim(a, idx) < need) return false;
    }
    return true;
}

bool is_linearly_independent(const PolytopeTuple& a) {
    for (const auto& idx : ordered_subsets(a.size()))
        if (subtuple_sum_dim(a, idx) < static_cast<int>(idx.size())) return false;
    return true;
}

std::optional<SubtupleReport> minimal_deficient_subtuple(const PolytopeTuple& a) {
    const auto subsets = ordered_subsets(a.size());
    // Strictly deficient subsets witness a vanishing mixed volume and take
    // priority over merely critical ones regardless of size.
    for (const auto& idx : subsets) {
        const int d = subtuple_sum_dim(a, idx);
        if (d < static_cast<int>(idx.size()))
            return SubtupleReport{idx, d, static_cast<int>(idx.size()) - d};
    }
    for (const auto& idx : subsets) {
        const int d = subtuple_sum_dim(a, idx);
        if (d == static_cast<int>(idx.size())) return SubtupleReport{idx, d, 0};
    }
    return std::nullopt;
}

std::pair<std::vector<int>, SublatticeFrame> maximal_essential_subtuple(const PolytopeTuple& a) {
    auto report = minimal_deficient_subtuple(a);
    if (report && report->deficiency > 0) throw ZeroMixedVolume(report->indices);
    if (!report) throw std::invalid_argument("no critical subtuple: tuple has fewer entries than its span");
    Mat diffs;
    for (int i : report->indices) {
        const auto& verts = a.entries[static_cast<std::size_t>(i)].verts;
        for (std::size_t j = 1; j < verts.size(); ++j) diffs.push_back(sub(verts[j], verts[0]));
    }
    return {report->indices, hermite_extend(a.dim, diffs)};
}

}  // namespace mvone
