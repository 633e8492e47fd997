// Braid words, their closures, and colored braid invariants from D^omega(G).
//
// sigma_i acts on the tensor of induced irreps as psi_i^-1 . P R . psi_i where
// psi_i is the diagonal scalar omega(F, f_i, f_{i+1})^-1, F the product of the
// fluxes left of position i. Every factor is monomial, so a colored braid is a
// permutation of the tensor basis with phases, and its trace is a histogram of
// phase exponents converted once into a Cyclo.
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "tdl/double.hpp"

namespace tdl {

struct BraidWord {
    int strands = 1;
    std::vector<int> letters;  // +-i means sigma_i^{+-1}, 1 <= i < strands

    int writhe() const;
    BraidWord inverse() const;
    friend bool operator==(const BraidWord&, const BraidWord&) = default;
};

struct BraidParseError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct ColoringError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Accepts "s2^-2 s1^-1 s2^2 s1^2" or a JSON-style array "[-2,-2,-1,2,2,1,1]".
BraidWord parse_braid(std::string_view text, int strands);
std::string format_braid(const BraidWord& word);

struct ClosureComponent {
    std::vector<int> strands;  // 0-based top positions, ascending
    int self_writhe = 0;
};

struct ClosureStructure {
    std::vector<ClosureComponent> components;
    std::vector<int> component_of;  // per top position
    int writhe = 0;
};

ClosureStructure closure_structure(const BraidWord& word);

struct ColoredBraid {
    BraidWord word;
    std::vector<int> top_colors;  // object index per strand
};

// Throws ColoringError naming the first component whose strands disagree.
void validate_coloring(const TwistedDouble& theory, const ColoredBraid& colored);
// Colors each component uniformly; component_colors follows closure_structure order.
ColoredBraid color_by_component(const BraidWord& word, const std::vector<int>& component_colors);

// Sparse operator between tensor bases: basis index i goes to target[i] scaled by
// zeta_N^phase[i]. Indices are mixed radix with strand 1 most significant.
class MonomialOperator {
public:
    MonomialOperator() = default;
    MonomialOperator(std::vector<int> domain_dims, std::vector<int> codomain_dims, int phase_order);
    static MonomialOperator identity(std::vector<int> dims, int phase_order);

    std::size_t size() const { return target_.size(); }
    const std::vector<int>& domain_dims() const { return domain_dims_; }
    const std::vector<int>& codomain_dims() const { return codomain_dims_; }
    std::uint32_t target(std::size_t i) const { return target_[i]; }
    int phase(std::size_t i) const { return phase_[i]; }
    void set(std::size_t i, std::uint32_t target, int phase);

    // (this after other): first apply other, then this
    MonomialOperator after(const MonomialOperator& other) const;
    Cyclo trace() const;
    bool is_identity() const;
    friend bool operator==(const MonomialOperator&, const MonomialOperator&) = default;

private:
    std::vector<int> domain_dims_;
    std::vector<int> codomain_dims_;
    int phase_order_ = 1;
    std::vector<std::uint32_t> target_;
    std::vector<int> phase_;
};

// Any top colors are allowed; the codomain carries them permuted by the braid.
MonomialOperator representation_operator(const TwistedDouble& theory, const ColoredBraid& colored);

enum class Kernel { Serial, Parallel };

// Blackboard-framed invariant: the trace of the representation operator.
Cyclo framed_invariant(const TwistedDouble& theory, const ColoredBraid& colored, Kernel kernel = Kernel::Parallel);
// framed_invariant times prod_components theta^{-self_writhe}.
Cyclo zero_framed_invariant(const TwistedDouble& theory, const ColoredBraid& colored,
                            Kernel kernel = Kernel::Parallel);

// Exponent histogram of the trace (length N); exposed for the benchmark and tests.
std::vector<std::int64_t> trace_histogram(const TwistedDouble& theory, const ColoredBraid& colored, Kernel kernel);

// Product of the strand fluxes of a tensor basis state, left to right.
int total_flux(const TwistedDouble& theory, const std::vector<int>& colors, const std::vector<int>& state);

}  // namespace tdl
