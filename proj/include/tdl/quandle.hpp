// Alexander quandles on Z_q and their braid coloring counts; an independent
// combinatorial check on single-colored invariants of B-type objects.
#pragma once

#include <cstdint>
#include <string>

#include "tdl/braid.hpp"

namespace tdl {

struct AlexanderQuandle {
    int modulus = 11;
    int multiplier = 4;  // t = n^k mod q

    static AlexanderQuandle for_class(const GroupSpec& spec, int k);
    int op(int x, int y) const;  // (1-t)x + t y
    int left_inverse(int x, int z) const;  // the y with x > y = z
};

int quandle_op(const AlexanderQuandle& Q, int x, int y);

// Number of tuples in Q^strands fixed by the braid, with sigma_i(x,y) = (x > y, x).
std::int64_t coloring_count(const AlexanderQuandle& Q, const BraidWord& word);

struct SingleColorReport {
    bool holds = false;
    Cyclo engine;     // framed invariant with every strand B_{k,s}
    Cyclo predicted;  // theta^writhe * coloring count
    std::int64_t count = 0;
    std::string describe() const;
};

SingleColorReport single_color_check(const TwistedDouble& theory, const BraidWord& word, int k, int s);

}  // namespace tdl
