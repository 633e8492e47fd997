// The metacyclic family G(q,p;n) = Z_q x|_n Z_p: elements a^l b^m with
// b a b^-1 = a^n.
#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "tdl/cyclotomic.hpp"

namespace tdl {

struct InvalidSpec : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct GroupSpec {
    int q = 11;
    int p = 5;
    int n = 4;

    // Throws InvalidSpec unless q, p are odd primes with p | q-1 and n has
    // multiplicative order exactly p mod q.
    void validate() const;
    int order() const { return p * q; }
    // Every phase in the theory is a power of zeta_{p^2 q}.
    int phase_order() const { return p * p * q; }
    friend bool operator==(const GroupSpec&, const GroupSpec&) = default;
};

struct GroupElement {
    int l = 0;  // power of a, mod q
    int m = 0;  // power of b, mod p
    friend auto operator<=>(const GroupElement&, const GroupElement&) = default;
};

struct ConjClassInfo {
    GroupElement representative;
    std::vector<GroupElement> members;      // sorted; members[0] == representative
    std::vector<GroupElement> centralizer;  // sorted
    std::vector<GroupElement> coset_reps;   // members[i] = r_i t r_i^-1, r_0 = e
};

// A representation in which every group element acts by a monomial matrix:
// basis vector j goes to images[g][j].first scaled by zeta_N^{images[g][j].second}.
struct MonomialRep {
    int dim = 1;
    int phase_order = 1;
    std::vector<std::vector<std::pair<int, int>>> images;  // indexed by element index

    Cyclo character(int element_index) const;
};

class Group {
public:
    explicit Group(GroupSpec spec);

    const GroupSpec& spec() const { return spec_; }
    int size() const { return size_; }

    // Elements are indexed lexicographically: index = l*p + m.
    int index(GroupElement g) const { return g.l * spec_.p + g.m; }
    GroupElement element(int idx) const { return {idx / spec_.p, idx % spec_.p}; }
    int identity() const { return 0; }
    int mul(int g, int h) const { return mul_[static_cast<std::size_t>(g) * size_ + h]; }
    int inv(int g) const { return inv_[g]; }
    int conj(int g, int x) const { return mul(mul(g, x), inv(g)); }  // g x g^-1

    GroupElement multiply(GroupElement g, GroupElement h) const;
    GroupElement inverse(GroupElement g) const;
    int power_of_n(int e) const;  // n^e mod q, e may be negative

    const std::vector<ConjClassInfo>& classes() const { return classes_; }
    int class_of(int g) const { return class_of_[g]; }

private:
    GroupSpec spec_;
    int size_;
    std::vector<int> mul_;
    std::vector<int> inv_;
    std::vector<ConjClassInfo> classes_;
    std::vector<int> class_of_;
};

GroupElement multiply(GroupElement g, GroupElement h, const GroupSpec& spec);
GroupElement inverse(GroupElement g, const GroupSpec& spec);
std::vector<ConjClassInfo> conjugacy_data(const GroupSpec& spec);

// p linear irreps pulled back from Z_p, then (q-1)/p irreps of dimension p
// induced from Z_q characters, one per orbit of Z_q^* under multiplication by n.
std::vector<MonomialRep> irreps_of_G(const Group& group);

// Linear character of the centralizer of a class representative. For t = e the
// centralizer is G and the index selects a G-irrep (character = trace).
std::function<Cyclo(GroupElement)> centralizer_character(const Group& group, GroupElement t, int index);

}  // namespace tdl
