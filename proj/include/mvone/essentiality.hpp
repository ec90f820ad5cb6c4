#pragma once

#include "mvone/mixed_volume.hpp"

#include <optional>
#include <vector>

namespace mvone {

// Dimension report for a subtuple: deficiency = |indices| - dim(sum).
struct SubtupleReport {
    std::vector<int> indices;
    int sum_dim = 0;
    int deficiency = 0;
};

// dim of the Minkowski sum of the selected entries (all entries if empty selection list).
int subtuple_sum_dim(const PolytopeTuple& a, const std::vector<int>& indices);

// dim(sum of all entries) - k.
int tuple_dim(const PolytopeTuple& a);

// Every nonempty subtuple of size l must span dimension >= min(l+1, n).
bool is_essential(const PolytopeTuple& a);

// Every nonempty subtuple of size l must span dimension >= l.
bool is_linearly_independent(const PolytopeTuple& a);

// Minimal-by-inclusion nonempty subset I with dim(sum over I) <= |I|.
// Strictly deficient subsets (dim < |I|) are preferred over critical ones
// (dim = |I|); ties broken by (size, lexicographic index set).
std::optional<SubtupleReport> minimal_deficient_subtuple(const PolytopeTuple& a);

// Minimal critical subtuple I (dim sum = |I|) and the saturated frame of its
// span. Throws ZeroMixedVolume with the witness set when some subset is
// strictly deficient.
std::pair<std::vector<int>, SublatticeFrame> maximal_essential_subtuple(const PolytopeTuple& a);

}  // namespace mvone
