#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tdl/double.hpp"

using namespace tdl;

namespace {

int wrap(long e, int N) { return static_cast<int>(((e % N) + N) % N); }

}  // namespace

TEST_CASE("default theory has 49 simples with sum of squared dimensions 55^2") {
    const TwistedDouble th({{11, 5, 4}, 1});
    CHECK(th.size() == 49);
    long total = 0;
    int counts[3] = {0, 0, 0};
    for (const auto& o : th.objects()) {
        total += static_cast<long>(o.dim()) * o.dim();
        ++counts[static_cast<int>(o.kind)];
    }
    CHECK(total == 55L * 55);
    CHECK(th.global_dim() == 55);
    CHECK(counts[0] == 7);
    CHECK(counts[1] == 22);
    CHECK(counts[2] == 20);
    CHECK(th.object(th.unit()).label == "I_0");
}

TEST_CASE("small family counts") {
    // G(7,3;2): 3 + 2 group irreps, 2 A-classes with 7 charges, 2 B-classes with 3.
    const TwistedDouble th({{7, 3, 2}, 1});
    CHECK(th.size() == 5 + 14 + 6);
}

TEST_CASE("labels parse in several spellings") {
    const TwistedDouble th({{11, 5, 4}, 0});
    const int o = th.find("A_{1,4}");
    CHECK(th.object(o).label == "A_{1,4}");
    CHECK(th.find("A1_4") == o);
    CHECK(th.find("A_1_4") == o);
    CHECK(th.find("B_1_0") == th.find("B_{1,0}"));
    CHECK(th.find("I_0") == 0);
    CHECK_THROWS(th.find("B_1"));
    CHECK_THROWS(th.find("C_{1,0}"));
    CHECK_THROWS(th.find("A_{9,0}"));
}

TEST_CASE("twists are the charge evaluated on the flux") {
    for (int u = 0; u < 5; ++u) {
        const TwistedDouble th({{11, 5, 4}, u});
        const Group& G = th.group();
        for (int o = 0; o < th.size(); ++o) {
            const auto& obj = th.object(o);
            const auto t = G.classes()[obj.class_index].representative;
            Cyclo expected(1);
            if (obj.kind != ChargeKind::GroupIrrep) expected = projective_character(th.params(), t, obj.charge, t);
            CHECK(th.twist(o) == expected);
        }
    }
}

TEST_CASE("specific twists at u = 1") {
    const TwistedDouble th({{11, 5, 4}, 1});
    CHECK(th.twist(th.find("B_{1,0}")) == Cyclo::root(1, 25));
    CHECK(th.twist(th.find("A_{1,4}")) == Cyclo::root(4, 11));
}

TEST_CASE("the quasi-Hopf generators P_g x multiply with theta") {
    for (int u : {0, 1, 3}) {
        const TwistedDouble th({{11, 5, 4}, u});
        const Group& G = th.group();
        const int N = th.phase_order();
        for (int o : {th.find("B_{2,1}"), th.find("A_{1,3}"), th.find("I_5"), th.find("I_2")}) {
            for (int v = 0; v < th.qdim(o); ++v)
                for (int x = 0; x < G.size(); x += 3)
                    for (int y = 0; y < G.size(); y += 2) {
                        const auto first = th.dpr_action(G.conj(y, th.flux(o, v)), y, o, v);
                        REQUIRE(first.has_value());
                        const int g = G.conj(x, G.conj(y, th.flux(o, v)));
                        const auto second = th.dpr_action(g, x, o, first->index);
                        REQUIRE(second.has_value());
                        const auto direct = th.dpr_action(g, G.mul(x, y), o, v);
                        REQUIRE(direct.has_value());
                        CHECK(second->index == direct->index);
                        CHECK(wrap(first->phase + second->phase, N) ==
                              wrap(static_cast<long>(th.theta_exp(g, x, y)) + direct->phase, N));
                        // wrong projector annihilates
                        CHECK(!th.dpr_action(G.mul(g, G.index({1, 0})), G.mul(x, y), o, v).has_value());
                    }
        }
    }
}

TEST_CASE("braiding moves are inverted by the inverse moves") {
    const TwistedDouble th({{11, 5, 4}, 2});
    const int N = th.phase_order();
    const int pairs[][2] = {{th.find("B_{1,0}"), th.find("A_{1,4}")},
                            {th.find("B_{3,2}"), th.find("B_{1,4}")},
                            {th.find("I_6"), th.find("B_{2,2}")}};
    for (const auto& pr : pairs) {
        const int X = pr[0], Y = pr[1];
        for (int v = 0; v < th.qdim(X); ++v)
            for (int w = 0; w < th.qdim(Y); ++w) {
                const PairMove f = th.sigma_action(X, Y, v, w);
                const PairMove b = th.sigma_inverse_action(Y, X, f.left, f.right);
                CHECK(b.left == v);
                CHECK(b.right == w);
                CHECK(wrap(f.phase + b.phase, N) == 0);
                // flux conservation: g h = h' g
                const Group& G = th.group();
                CHECK(G.mul(th.flux(X, v), th.flux(Y, w)) == G.mul(th.flux(Y, f.left), th.flux(X, f.right)));
            }
    }
}

TEST_CASE("twist is read off the double braiding on the diagonal of X x X") {
    // sum over v of the self-crossing phase with v fixed equals theta * d
    const TwistedDouble th({{11, 5, 4}, 1});
    for (int o : {th.find("B_{1,0}"), th.find("A_{2,5}")}) {
        Cyclo trace;
        for (int v = 0; v < th.qdim(o); ++v) {
            const ScaledVector img = *th.dpr_action(th.flux(o, v), th.flux(o, v), o, v);
            if (img.index == v) trace += th.phase(img.phase);
        }
        CHECK(trace == th.twist(o) * Cyclo(th.qdim(o)));
    }
}
