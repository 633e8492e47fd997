// Permutation equivalence of modular data, optionally with the W-matrix.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tdl/modular.hpp"

namespace tdl {

struct InvariantData {
    std::vector<std::string> labels;
    std::vector<int> dims;
    CycloMatrix S;
    std::vector<Cyclo> T;
    std::optional<CycloMatrix> W;
    int unit = 0;

    static InvariantData from(const ModularData& md, const WMatrix* w = nullptr);
};

struct SearchResult {
    bool equivalent = false;
    std::vector<int> witness;  // witness[a] = image of a, when equivalent
    std::int64_t nodes = 0;    // backtracking nodes visited
    std::string reason;        // why the search failed, when it did
};

// Looks for a bijection pi with pi(unit) = unit, d and T preserved, and
// S_{pi a, pi b} = S_ab (and W likewise when both sides carry W).
SearchResult equivalence_search(const InvariantData& first, const InvariantData& second);

// For a target label x of the first data set and an anchor b: the images of x
// allowed by T (same d and twist), and the images demanded by W given that b
// must map to one of its own T-allowed images.
struct Obstruction {
    int anchor = 0;
    int target = 0;
    std::vector<int> t_allowed;
    std::vector<int> w_required;
    bool disjoint() const;
};

Obstruction t_versus_w(const InvariantData& first, const InvariantData& second, int anchor, int target);
// every (anchor, target) pair whose two image sets are disjoint
std::vector<Obstruction> t_versus_w_all(const InvariantData& first, const InvariantData& second);

// Classes of mutually equivalent data sets, each listed by index in ascending order.
std::vector<std::vector<int>> equivalence_classes(const std::vector<InvariantData>& data);

}  // namespace tdl
