// One PASS/FAIL line per acceptance criterion for G(11,5;4). Exit status is
// the number of failing criteria.
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>

#include "tdl/quandle.hpp"
#include "tdl/search.hpp"

using namespace tdl;

namespace {

constexpr GroupSpec kSpec{11, 5, 4};
constexpr int kLabels = 5;

struct Outcome {
    bool pass = false;
    std::string detail;
};

int failures = 0;

void criterion(int id, const char* name, double limit_s, const std::function<Outcome()>& body) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome r;
    try {
        r = body();
    } catch (const std::exception& e) {
        r = {false, std::string("exception: ") + e.what()};
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = s <= limit_s;
    const bool ok = r.pass && in_time;
    if (!ok) ++failures;
    std::printf("[%s] %2d %-28s %8.2f s (limit %g s)  %s%s\n", ok ? "PASS" : "FAIL", id, name, s, limit_s,
                r.detail.c_str(), in_time ? "" : "  [over time]");
    std::fflush(stdout);
}

// Reference table of labels, d and theta, written out independently of the engine.
std::map<std::string, std::pair<int, Cyclo>> tabulated_twists(int u) {
    std::map<std::string, std::pair<int, Cyclo>> out;
    for (int j = 0; j < 5; ++j) out["I_" + std::to_string(j)] = {1, Cyclo(1)};
    out["I_5"] = out["I_6"] = {5, Cyclo(1)};
    for (int l = 1; l <= 2; ++l)
        for (int m = 0; m < 11; ++m)
            out["A_{" + std::to_string(l) + "," + std::to_string(m) + "}"] = {5, Cyclo::root(l * m, 11)};
    for (int k = 1; k <= 4; ++k)
        for (int n = 0; n < 5; ++n)
            out["B_{" + std::to_string(k) + "," + std::to_string(n) + "}"] = {11, Cyclo::root(5 * k * n + k * k * u, 25)};
    return out;
}

std::vector<TwistedDouble> theories() {
    std::vector<TwistedDouble> out;
    for (int u = 0; u < kLabels; ++u) out.emplace_back(CocycleParams{kSpec, u});
    return out;
}

std::string join_labels(const std::vector<int>& ids, const std::vector<std::string>& labels) {
    std::set<std::string> sorted;
    for (int i : ids) sorted.insert(labels[i]);
    std::string s = "{";
    for (const auto& l : sorted) s += (s.size() > 1 ? ", " : "") + l;
    return s + "}";
}

std::string classes_text(const std::vector<std::vector<int>>& classes) {
    std::string s;
    for (const auto& c : classes) {
        s += "{";
        for (std::size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + std::to_string(c[i]);
        s += "}";
    }
    return s;
}

}  // namespace

int main() {
    const auto th = theories();
    std::vector<ModularData> md(kLabels);
    std::vector<FusionRules> fusion(kLabels);
    std::vector<WMatrix> w(kLabels);

    criterion(1, "enumeration", 1, [&] {
        const auto& t = th[1];
        int counts[3] = {0, 0, 0};
        std::map<int, int> dims;
        long d2 = 0;
        for (const auto& o : t.objects()) {
            ++counts[static_cast<int>(o.kind)];
            ++dims[o.dim()];
            d2 += static_cast<long>(o.dim()) * o.dim();
        }
        // self-duality from the group data: the dual of (class, charge) has the inverse class and conjugate charge
        const Group& G = t.group();
        int self_dual = 0;
        for (int o = 0; o < t.size(); ++o) {
            const auto& obj = t.object(o);
            const auto rep = G.classes()[obj.class_index].representative;
            const bool class_self_inverse = G.class_of(G.inv(G.index(rep))) == obj.class_index;
            if (!class_self_inverse) continue;
            // odd order: only the identity class is closed under inversion, so only G-irreps get here
            if (obj.kind != ChargeKind::GroupIrrep) return Outcome{false, "unexpected self-inverse class"};
            const auto chi = centralizer_character(G, rep, obj.charge);
            bool real = true;
            for (int x = 0; x < G.size(); ++x)
                if (!(chi(G.element(x)) == chi(G.element(x)).conj())) real = false;
            if (real) ++self_dual;
        }
        const int abelian = dims[1];
        const bool ok = t.size() == 49 && counts[0] == 7 && counts[1] == 22 && counts[2] == 20 && dims[1] == 5 &&
                        dims[5] == 24 && dims[11] == 20 && dims.size() == 3 && d2 == 55L * 55 &&
                        t.global_dim() == 55 && abelian == 5 && self_dual == 1;
        char buf[160];
        std::snprintf(buf, sizeof buf, "49=%d (I %d, A %d, B %d), D=%d, abelian %d, self-dual %d", t.size(), counts[0],
                      counts[1], counts[2], t.global_dim(), abelian, self_dual);
        return Outcome{ok, buf};
    });

    criterion(2, "T-matrix vs reference table", 1, [&] {
        int bad = 0;
        for (int u = 0; u < kLabels; ++u) {
            const auto table = tabulated_twists(u);
            const auto T = t_matrix(th[u]);
            for (int o = 0; o < th[u].size(); ++o) {
                const auto& [d, theta] = table.at(th[u].object(o).label);
                if (d != th[u].qdim(o) || !(T[o] == theta)) ++bad;
            }
        }
        return Outcome{bad == 0, std::to_string(49 * kLabels - bad) + "/245 entries equal"};
    });

    criterion(3, "central charge", 1, [&] {
        int ok = 0;
        for (int u = 0; u < kLabels; ++u) {
            Cyclo sum;
            for (int o = 0; o < th[u].size(); ++o) sum += Cyclo(th[u].qdim(o) * th[u].qdim(o)) * th[u].twist(o);
            if (sum * Cyclo(mpq_class(1, 55)) == Cyclo(1)) ++ok;
        }
        return Outcome{ok == kLabels, "(1/55) sum d^2 theta = 1 for " + std::to_string(ok) + "/5 labels"};
    });

    criterion(4, "modularity", 300, [&] {
        std::string detail;
        bool all = true;
        for (int u = 0; u < kLabels; ++u) {
            md[u] = modular_data(th[u]);
            fusion[u] = fusion_rules(md[u]);
            const auto rep = check_modularity(md[u], fusion[u]);
            const bool ok = rep.ok() && rep.unitary && rep.s_squared_permutation && rep.fixed_points == 1 &&
                            rep.st_cubed && rep.fusion_certified && rep.fusion_dims;
            all = all && ok;
            detail += "u=" + std::to_string(u) + (ok ? " ok " : " FAILED ");
        }
        return Outcome{all, detail};
    });

    criterion(5, "W-matrix structure", 900, [&] {
        std::string detail;
        bool all = true;
        for (int u = 0; u < kLabels; ++u) {
            if (md[u].size() == 0) md[u] = modular_data(th[u]);
            w[u] = w_matrix(th[u]);
            const auto rep = w_identities(md[u], w[u]);
            all = all && rep.ok();
            detail += "u=" + std::to_string(u) + ":" + std::to_string(rep.asymmetric.size()) + "/" +
                      std::to_string(rep.identity1.size()) + "/" + std::to_string(rep.identity2.size()) + " ";
        }
        return Outcome{all, detail + "(asymmetric/identity 1/identity 2 failures)"};
    });

    criterion(6, "BA block closed form", 60, [&] {
        int total = 0, good = 0;
        for (int u = 0; u < kLabels; ++u) {
            const auto& t = th[u];
            const Group& G = t.group();
            for (int b = 0; b < t.size(); ++b) {
                if (t.object(b).kind != ChargeKind::CyclicB) continue;
                const int k = G.classes()[t.object(b).class_index].representative.m;
                const int j = k * k % 5;
                for (int a = 0; a < t.size(); ++a) {
                    if (t.object(a).kind != ChargeKind::CyclicA) continue;
                    const int l = G.classes()[t.object(a).class_index].representative.l;
                    const long s = static_cast<long>(l) * t.object(a).charge;  // theta_A = e^{2 pi i s / 11}
                    // (-1)^{s j} (theta_A^{j/2})^-1 = e^{2 pi i (11 s j - s j) / 22}
                    const Cyclo expected =
                        Cyclo(55).times_root(11 * s * j - s * j, 22) * tabulated_twists(u).at(t.object(b).label).second.inverse();
                    ++total;
                    if (w[u].W(b, a) == expected) ++good;
                }
            }
        }
        return Outcome{total == 2200 && good == total, std::to_string(good) + "/" + std::to_string(total) + " entries"};
    });

    criterion(7, "distinguishing theorem", 60, [&] {
        std::vector<InvariantData> st, stw;
        for (int u = 0; u < kLabels; ++u) {
            st.push_back(InvariantData::from(md[u]));
            stw.push_back(InvariantData::from(md[u], &w[u]));
        }
        const auto c1 = equivalence_classes(st);
        const auto c2 = equivalence_classes(stw);
        const bool classes_ok = c1 == std::vector<std::vector<int>>{{0}, {1, 4}, {2, 3}} &&
                                c2 == std::vector<std::vector<int>>{{0}, {1}, {2}, {3}, {4}};
        const auto& labels = md[1].labels;
        const auto idx = [&](const char* l) { return th[1].find(l); };
        const Obstruction ob = t_versus_w(stw[1], stw[4], idx("B_{1,0}"), idx("A_{1,4}"));
        const std::string allowed = join_labels(ob.t_allowed, labels);
        const std::string required = join_labels(ob.w_required, labels);
        const bool ob_ok = allowed == "{A_{1,4}, A_{2,2}}" && required == "{A_{1,1}, A_{2,6}}";
        return Outcome{classes_ok && ob_ok, "(S,T) " + classes_text(c1) + ", (S,T,W) " + classes_text(c2) +
                                                ", A_{1,4}: T allows " + allowed + ", W requires " + required};
    });

    criterion(8, "quandle oracle", 60, [&] {
        const std::vector<std::pair<const char*, BraidWord>> links = {
            {"unknot", {1, {}}},
            {"Hopf", {2, {1, 1}}},
            {"trefoil", {2, {1, 1, 1}}},
            {"figure-eight", {3, {1, -2, 1, -2}}},
            {"Borromean", {3, {2, -1, 2, -1, 2, -1}}},
            {"Whitehead b5", whitehead_braid()}};
        int checks = 0, bad = 0;
        bool independent = true;
        for (const auto& [name, word] : links) {
            const bool watch = std::string(name) == "figure-eight" || std::string(name) == "Borromean";
            for (int k = 1; k < 5; ++k) {
                std::set<std::int64_t> counts;
                std::set<std::string> normalized;
                for (int u = 0; u < kLabels; ++u)
                    for (int s = 0; s < 5; ++s) {
                        const auto rep = single_color_check(th[u], word, k, s);
                        ++checks;
                        if (!rep.holds) ++bad;
                        counts.insert(rep.count);
                        const int b = th[u].find("B_{" + std::to_string(k) + "," + std::to_string(s) + "}");
                        normalized.insert((rep.engine * th[u].twist(b).pow(-word.writhe())).to_string());
                    }
                if (watch && (counts.size() != 1 || normalized.size() != 1)) independent = false;
            }
        }
        return Outcome{bad == 0 && independent, std::to_string(checks - bad) + "/" + std::to_string(checks) +
                                                    " framed = theta^writhe * count; figure-eight and Borromean " +
                                                    (independent ? "independent of u,s" : "DEPEND on u,s")};
    });

    criterion(9, "two-strand closed forms", 300, [&] {
        long checks = 0, bad = 0;
        for (int u = 0; u < kLabels; ++u) {
            const int n = md[u].size();
            for (int a = 0; a < n; ++a) {
                const auto rs = r_symbol_sums(md[u], fusion[u], a);
                for (int k = 0; k <= 3; ++k) {
                    const BraidWord odd{2, std::vector<int>(2 * k + 1, 1)};
                    ++checks;
                    if (!(two_strand_closure_odd(md[u], rs, a, k) == framed_invariant(th[u], {odd, {a, a}}))) ++bad;
                    const BraidWord even{2, std::vector<int>(2 * k, 1)};
                    for (int b = 0; b < n; ++b) {
                        ++checks;
                        if (!(two_strand_closure_even(md[u], fusion[u], a, b, k) ==
                              framed_invariant(th[u], {even, {a, b}})))
                            ++bad;
                    }
                }
            }
        }
        return Outcome{bad == 0, std::to_string(checks - bad) + "/" + std::to_string(checks) + " closures"};
    });

    criterion(10, "property suites", 600, [&] {
        long checks = 0, bad = 0;
        const int N = kSpec.phase_order();
        const auto wrap = [N](long e) { return ((e % N) + N) % N; };
        for (int u = 0; u < kLabels; ++u) {
            const CocycleParams P{kSpec, u};
            // 3-cocycle identity over b-parts
            const auto om = [&](int a, int b, int c) { return omega_exponent_bparts(P, a % 5, b % 5, c % 5); };
            for (int g = 0; g < 5; ++g)
                for (int h = 0; h < 5; ++h)
                    for (int k = 0; k < 5; ++k)
                        for (int l = 0; l < 5; ++l) {
                            ++checks;
                            const long lhs = om(h, k, l) + om(g, h + k, l) + om(g, h, k);
                            const long rhs = om(g + h, k, l) + om(g, h, k + l);
                            if (wrap(lhs - rhs) != 0) ++bad;
                        }
            // projectivity over every centralizer and charge
            const Group& G = th[u].group();
            for (const auto& cls : G.classes()) {
                if (cls.representative == GroupElement{0, 0}) continue;
                const int charges = cls.representative.m == 0 ? kSpec.q : kSpec.p;
                for (int s = 0; s < charges; ++s)
                    for (const auto& x : cls.centralizer)
                        for (const auto& y : cls.centralizer) {
                            ++checks;
                            const auto t = cls.representative;
                            if (!(projective_character(P, t, s, x) * projective_character(P, t, s, y) ==
                                  theta(P, t, x, y) * projective_character(P, t, s, multiply(x, y, kSpec))))
                                ++bad;
                        }
            }
            // braid relations, Markov stabilization and flux conservation on sampled colors
            std::mt19937 rng(1000 + u);
            std::uniform_int_distribution<int> pick(0, th[u].size() - 1);
            const auto& t = th[u];
            for (int trial = 0; trial < 40; ++trial) {
                const std::vector<int> c = {pick(rng), pick(rng), pick(rng)};
                if (static_cast<long>(t.qdim(c[0])) * t.qdim(c[1]) * t.qdim(c[2]) > 1331) continue;
                const auto lhs = representation_operator(t, {{3, {1, 2, 1}}, c});
                const auto rhs = representation_operator(t, {{3, {2, 1, 2}}, c});
                ++checks;
                if (!(lhs == rhs)) ++bad;
                ++checks;
                if (!representation_operator(t, {{3, {1, -1, -2, 2}}, c}).is_identity()) ++bad;
                // flux conservation for sigma_1 sigma_2 sigma_1, which reverses the colors
                const std::vector<int> out_cols = {c[2], c[1], c[0]};
                const std::vector<int> din = {t.qdim(c[0]), t.qdim(c[1]), t.qdim(c[2])};
                const std::vector<int> dout = {t.qdim(c[2]), t.qdim(c[1]), t.qdim(c[0])};
                for (std::size_t i = 0; i < lhs.size(); ++i) {
                    const std::vector<int> s_in = {static_cast<int>(i / (din[1] * din[2])),
                                                   static_cast<int>(i / din[2] % din[1]), static_cast<int>(i % din[2])};
                    const std::uint32_t j = lhs.target(i);
                    const std::vector<int> s_out = {static_cast<int>(j / (dout[1] * dout[2])),
                                                    static_cast<int>(j / dout[2] % dout[1]),
                                                    static_cast<int>(j % dout[2])};
                    ++checks;
                    if (total_flux(t, c, s_in) != total_flux(t, out_cols, s_out)) ++bad;
                }
                // Markov: the closure of sigma_1^2 colored (c0, c1) against sigma_1^2 sigma_2^{+-1}
                for (int sign : {1, -1}) {
                    const BraidWord hopf{2, {1, 1}};
                    const BraidWord stab{3, {1, 1, 2 * sign}};
                    ++checks;
                    if (!(zero_framed_invariant(t, color_by_component(hopf, {c[0], c[1]})) ==
                          zero_framed_invariant(t, color_by_component(stab, {c[0], c[1]}))))
                        ++bad;
                }
            }
        }
        return Outcome{bad == 0, std::to_string(checks - bad) + "/" + std::to_string(checks) + " checks"};
    });

    criterion(11, "lens spaces", 300, [&] {
        bool ok = true;
        std::string detail;
        for (int u = 0; u < kLabels; ++u) {
            ok = ok && lens_space_invariant(md[u], 0, 1) == Cyclo(1);
            ok = ok && lens_space_invariant(md[u], 1, 1) == Cyclo(mpq_class(1, 55));
            for (auto [p, q] : {std::pair{5, 1}, std::pair{5, 2}}) {
                const Cyclo f = lens_space_invariant(md[u], p, q);
                const Cyclo b = lens_space_invariant_by_braids(th[u], md[u], p, q);
                ok = ok && f == b;
                if (u == 1) {
                    char buf[96];
                    std::snprintf(buf, sizeof buf, "L(%d,%d)=%.6f%+.6fi ", p, q, f.to_complex().real(),
                                  f.to_complex().imag());
                    detail += buf;
                }
            }
        }
        return Outcome{ok, "L(0,1)=1, L(1,1)=1/55; at u=1 " + detail + "(formula = braids for all u)"};
    });

    std::printf("%d of 11 criteria failed\n", failures);
    return failures;
}
