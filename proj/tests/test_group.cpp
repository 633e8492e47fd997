#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "tdl/group.hpp"

using namespace tdl;

namespace {

const GroupSpec kSpecs[] = {{11, 5, 4}, {7, 3, 2}, {13, 3, 3}, {31, 5, 2}};

// a^l b^m acts on Z_q by x -> n^m x + l; this action is faithful.
struct Affine {
    long scale;
    long shift;
};

Affine as_affine(GroupElement g, const GroupSpec& s) {
    long scale = 1;
    for (int i = 0; i < g.m; ++i) scale = scale * s.n % s.q;
    return {scale, g.l};
}

Affine compose(Affine f, Affine g, int q) {  // f after g
    return {f.scale * g.scale % q, (f.scale * g.shift + f.shift) % q};
}

bool same(Affine f, Affine g, int q) { return (f.scale - g.scale) % q == 0 && (f.shift - g.shift) % q == 0; }

// Monomial matrices compose by following images and adding phases.
std::vector<std::pair<int, int>> compose(const std::vector<std::pair<int, int>>& f,
                                         const std::vector<std::pair<int, int>>& g, int N) {
    std::vector<std::pair<int, int>> out(g.size());
    for (std::size_t j = 0; j < g.size(); ++j) {
        const auto [k, ph] = g[j];
        out[j] = {f[k].first, (ph + f[k].second) % N};
    }
    return out;
}

}  // namespace

TEST_CASE("spec validation") {
    CHECK_NOTHROW((GroupSpec{11, 5, 4}.validate()));
    CHECK_THROWS_AS((GroupSpec{10, 5, 4}.validate()), InvalidSpec);
    CHECK_THROWS_AS((GroupSpec{11, 3, 4}.validate()), InvalidSpec);  // 3 does not divide 10
    CHECK_THROWS_AS((GroupSpec{11, 5, 10}.validate()), InvalidSpec);  // 10 has order 2
    CHECK_THROWS_AS((GroupSpec{11, 5, 1}.validate()), InvalidSpec);
    CHECK_THROWS_AS((GroupSpec{11, 2, 10}.validate()), InvalidSpec);
}

TEST_CASE("multiplication agrees with the affine action on Z_q") {
    for (const auto& s : kSpecs) {
        const Group G(s);
        for (int g = 0; g < G.size(); ++g)
            for (int h = 0; h < G.size(); ++h) {
                const auto prod = G.element(G.mul(g, h));
                const Affine expect = compose(as_affine(G.element(g), s), as_affine(G.element(h), s), s.q);
                REQUIRE(same(as_affine(prod, s), expect, s.q));
            }
    }
}

TEST_CASE("defining relation and inverses") {
    for (const auto& s : kSpecs) {
        const Group G(s);
        const auto a = G.index({1, 0});
        const auto b = G.index({0, 1});
        CHECK(G.conj(b, a) == G.index({s.n % s.q, 0}));
        for (int g = 0; g < G.size(); ++g) {
            int brute = -1;
            for (int h = 0; h < G.size(); ++h)
                if (G.mul(g, h) == G.identity()) brute = h;
            CHECK(G.inv(g) == brute);
        }
    }
}

TEST_CASE("conjugacy classes partition the group with orbit-stabilizer sizes") {
    for (const auto& s : kSpecs) {
        const Group G(s);
        const auto& cls = G.classes();
        CHECK(static_cast<int>(cls.size()) == 1 + (s.q - 1) / s.p + (s.p - 1));
        std::set<GroupElement> seen;
        for (std::size_t c = 0; c < cls.size(); ++c) {
            const auto& info = cls[c];
            CHECK(info.members.size() * info.centralizer.size() == static_cast<std::size_t>(G.size()));
            CHECK(std::is_sorted(info.members.begin(), info.members.end()));
            CHECK(info.members.front() == info.representative);
            const int t = G.index(info.representative);
            for (std::size_t i = 0; i < info.members.size(); ++i) {
                CHECK(G.conj(G.index(info.coset_reps[i]), t) == G.index(info.members[i]));
                CHECK(G.class_of(G.index(info.members[i])) == static_cast<int>(c));
                seen.insert(info.members[i]);
            }
            for (const auto& x : info.centralizer) CHECK(G.conj(G.index(x), t) == t);
        }
        CHECK(static_cast<int>(seen.size()) == G.size());
    }
}

TEST_CASE("default group has the documented class sizes") {
    const Group G({11, 5, 4});
    std::vector<std::size_t> sizes;
    for (const auto& c : G.classes()) sizes.push_back(c.members.size());
    CHECK(sizes == std::vector<std::size_t>{1, 5, 5, 11, 11, 11, 11});
}

TEST_CASE("irreps are homomorphisms and their characters are orthonormal") {
    for (const auto& s : kSpecs) {
        const Group G(s);
        const auto irreps = irreps_of_G(G);
        CHECK(static_cast<int>(irreps.size()) == s.p + (s.q - 1) / s.p);
        int dim_squares = 0;
        for (const auto& rho : irreps) {
            dim_squares += rho.dim * rho.dim;
            for (int g = 0; g < G.size(); ++g)
                for (int h = 0; h < G.size(); ++h)
                    REQUIRE(compose(rho.images[g], rho.images[h], rho.phase_order) ==
                            rho.images[G.mul(g, h)]);
        }
        CHECK(dim_squares == G.size());
        for (std::size_t i = 0; i < irreps.size(); ++i)
            for (std::size_t j = 0; j < irreps.size(); ++j) {
                Cyclo inner;
                for (int g = 0; g < G.size(); ++g) inner += irreps[i].character(g) * irreps[j].character(g).conj();
                CHECK(inner == Cyclo(i == j ? G.size() : 0));
            }
    }
}

TEST_CASE("centralizer characters are class functions on abelian centralizers") {
    const Group G({11, 5, 4});
    for (const auto& info : G.classes()) {
        if (info.representative == GroupElement{0, 0}) continue;
        const auto chi = centralizer_character(G, info.representative, 1);
        for (const auto& x : info.centralizer)
            for (const auto& y : info.centralizer)
                CHECK(chi(G.element(G.mul(G.index(x), G.index(y)))) == chi(x) * chi(y));
        CHECK_THROWS(chi(GroupElement{1, 1}));
    }
}
