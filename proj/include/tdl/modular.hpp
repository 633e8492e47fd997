// Modular data (S,T), the Whitehead W-matrix, and invariants read off from them.
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "tdl/braid.hpp"

namespace tdl {

class CycloMatrix {
public:
    CycloMatrix() = default;
    explicit CycloMatrix(int n) : n_(n), data_(static_cast<std::size_t>(n) * n) {}

    int size() const { return n_; }
    Cyclo& operator()(int i, int j) { return data_[static_cast<std::size_t>(i) * n_ + j]; }
    const Cyclo& operator()(int i, int j) const { return data_[static_cast<std::size_t>(i) * n_ + j]; }
    friend bool operator==(const CycloMatrix&, const CycloMatrix&) = default;

private:
    int n_ = 0;
    std::vector<Cyclo> data_;
};

struct ModularData {
    CocycleParams params;
    std::vector<std::string> labels;
    std::vector<int> dims;
    int D = 1;
    CycloMatrix S;
    std::vector<Cyclo> T;
    std::vector<int> dual;  // charge conjugation read off S^2; -1 where S^2 is not a permutation
    int c_mod_8 = 0;

    int size() const { return static_cast<int>(labels.size()); }
};

std::vector<Cyclo> t_matrix(const TwistedDouble& theory);
// S_ab = (1/D) tr(sigma_1^-2 colored (a,b)); entries are computed in parallel.
CycloMatrix s_matrix(const TwistedDouble& theory);
// c mod 8 from the Gauss sum (1/D) sum d^2 theta = e^{2 pi i c/8}; throws if the sum is not an 8th root of unity.
int central_charge_mod8(const TwistedDouble& theory);
Cyclo gauss_sum(const TwistedDouble& theory);
ModularData modular_data(const TwistedDouble& theory);

// Fusion coefficients, candidates rounded from floats and certified exactly by
// N_a S = S diag(S_az / S_0z) for every a.
struct FusionRules {
    int n = 0;
    std::vector<std::vector<std::pair<int, int>>> entries;  // [a*n+b] -> (c, N_ab^c), N > 0
    bool certified = false;
    std::vector<std::string> problems;

    int operator()(int a, int b, int c) const;
};

FusionRules fusion_rules(const ModularData& md);
// One exact Verlinde coefficient; throws std::runtime_error unless it is a nonnegative integer.
int verlinde(const ModularData& md, int a, int b, int c);

struct ModularityReport {
    bool unit_row = false;           // S_0a = d_a / D
    bool symmetric = false;
    bool s_squared_permutation = false;
    int fixed_points = 0;            // of the charge conjugation
    bool conjugation_consistent = false;  // conj(S) = S C, which with S^2 = C gives unitarity
    bool unitary = false;
    bool st_cubed = false;           // (ST)^3 = S^2, checked as S T S = T^-1 S T^-1
    bool twists_roots = false;
    bool fusion_certified = false;
    bool fusion_dims = false;        // sum_c N_ab^c d_c = d_a d_b
    int c_mod_8 = 0;
    std::vector<std::string> failures;

    bool ok() const;
};

ModularityReport check_modularity(const ModularData& md, const FusionRules& fusion);

// Braid words for the Whitehead link and its mirror.
BraidWord whitehead_braid();         // s2^-2 s1 s2^-1 s1, components {1,3} and {2}
BraidWord whitehead_mirror_braid();  // s2^-2 s1^-1 s2^2 s1^2, components {1,2} and {3}

struct WMatrix {
    CycloMatrix W;
    CycloMatrix Wtilde;
};

// Z0(a,b) = zero-framed Whitehead invariant with a on the two-strand component.
// Wtilde_ab = theta_a^-2 Z0(a,b) and W_ab = (theta_a/theta_b) Wtilde_ab.
CycloMatrix whitehead_zero_framed(const TwistedDouble& theory, const BraidWord& word);
WMatrix w_matrix(const TwistedDouble& theory);

// Closed form of the B-A block for G(11,5;4)-type data:
//   55 (-1)^{lm [k^2]_p} (theta_A^{[k^2]_p / 2} theta_B)^-1
// where theta_A = e^{2 pi i lm/q} and powers of roots follow (e^{2 pi i s/N})^t = e^{2 pi i st/N}
// with s = lm unreduced.
Cyclo ba_closed_form(const TwistedDouble& theory, int b_obj, int a_obj);

struct WIdentityReport {
    std::vector<std::pair<int, int>> asymmetric;  // W_ab != W_ba
    std::vector<std::pair<int, int>> identity1;   // theta_a^2 Wt_ax != theta_x^2 Wt_{x abar}
    std::vector<std::pair<int, int>> identity2;   // Wt_ax != Wt_{a xbar}
    bool ok() const { return asymmetric.empty() && identity1.empty() && identity2.empty(); }
};

WIdentityReport w_identities(const ModularData& md, const WMatrix& w);

// sum_mu S^(z)_{(a mu)(a mu)} = d_a / (theta_a D^2) sum_x S_zx theta_x W_ax
Cyclo punctured_s_trace(const ModularData& md, const WMatrix& w, int z, int a);
// W_ab rebuilt from punctured traces: theta_a D^2 / (theta_b d_a) sum_x conj(S_bx) trace(x, a)
Cyclo w_from_punctured_traces(const ModularData& md, const std::vector<Cyclo>& traces_for_a, int a, int b);

// sum_mu [R^{aa}_c]_{mu mu} from modular data, fusion-reduced:
//   sum_{x,y} N_{a xbar}^y S_0y conj(S_cx) theta_y^2 / (theta_a theta_x^2)
Cyclo r_symbol_sum(const ModularData& md, const FusionRules& fusion, int a, int c);
// all c at once for one a
std::vector<Cyclo> r_symbol_sums(const ModularData& md, const FusionRules& fusion, int a);
// the unreduced triple sum over x, y, z; slow, kept as an oracle
Cyclo r_symbol_sum_direct(const ModularData& md, int a, int c);

// Lambda_{a,c} = value * theta_a / theta_c^{1/2} with the principal square root.
struct RibbonSignature {
    Cyclo lambda;
    bool integral = false;
    bool branch_sensitive = false;  // lambda is nonzero, so its sign flips with the other square root
};
RibbonSignature ribbon_signature(const ModularData& md, const Cyclo& r_sum, int a, int c);

// Closed forms: sigma_1^{2n} colored (a,b) gives sum_c d_c N_ab^c (theta_c/(theta_a theta_b))^n;
// sigma_1^{2n+1} colored a gives sum_c d_c Rsum(a,c) (theta_c/theta_a^2)^n.
Cyclo two_strand_closure_even(const ModularData& md, const FusionRules& fusion, int a, int b, int n);
Cyclo two_strand_closure_odd(const ModularData& md, const std::vector<Cyclo>& r_sums_for_a, int a, int n);

// nu_a^n = (1/D^2) sum_{x,y} N_ax^y d_x d_y (theta_y/theta_x)^n
Cyclo fs_indicator(const ModularData& md, const FusionRules& fusion, int a, int n);

// Negative-regular continued fraction p/q = a_n - 1/(a_{n-1} - ... - 1/a_1); returns a_1..a_n.
std::vector<int> negative_continued_fraction(int p, int q);
int linking_signature(const std::vector<int>& framings);
Cyclo lens_space_invariant(const ModularData& md, int p, int q);
// Same value from braid closures of the framed chain link sigma_1^-2 sigma_2^-2 ...
Cyclo lens_space_invariant_by_braids(const TwistedDouble& theory, const ModularData& md, int p, int q);

}  // namespace tdl
