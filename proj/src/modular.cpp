#include "tdl/modular.hpp"

#include <cmath>
#include <numbers>

#include <cmath>
#include <complex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace tdl {
namespace {

int wrap(long long x, int m) {
    long long r = x % m;
    return static_cast<int>(r < 0 ? r + m : r);
}

unsigned big(const ModularData& md) { return static_cast<unsigned>(md.params.spec.phase_order()); }

// twist exponents are recovered from T so that everything downstream depends only on (S,T)
std::vector<int> twist_exponents(const ModularData& md) {
    const unsigned N = big(md);
    std::vector<int> out;
    for (const auto& t : md.T) {
        // the float angle proposes the exponent, exact equality confirms it
        const double turns = std::arg(t.to_complex()) / (2 * std::numbers::pi);
        const int guess = static_cast<int>(std::lround(turns * N + N)) % static_cast<int>(N);
        int found = t == Cyclo::root(guess, N) ? guess : -1;
        if (found < 0) throw std::runtime_error("twist is not a root of unity of order dividing p^2 q");
        out.push_back(found);
    }
    return out;
}

Cyclo weighted_roots(const std::vector<std::int64_t>& hist) { return Cyclo::from_exponent_counts(hist); }

Cyclo row_dot(const ModularData& md, int a, const std::vector<Cyclo>& v, bool conjugate_s) {
    Cyclo acc;
    for (int x = 0; x < md.size(); ++x) {
        if (v[x].is_zero()) continue;
        const Cyclo& s = md.S(a, x);
        if (s.is_zero()) continue;
        acc += (conjugate_s ? s.conj() : s) * v[x];
    }
    return acc;
}

}  // namespace

std::vector<Cyclo> t_matrix(const TwistedDouble& theory) {
    std::vector<Cyclo> T;
    for (int o = 0; o < theory.size(); ++o) T.push_back(theory.twist(o));
    return T;
}

CycloMatrix s_matrix(const TwistedDouble& theory) {
    const int n = theory.size();
    CycloMatrix S(n);
    const BraidWord hopf = parse_braid("s1^-2", 2);
    const Cyclo inv_D(mpq_class(1, theory.global_dim()));
#pragma omp parallel for schedule(dynamic)
    for (int idx = 0; idx < n * n; ++idx) {
        const int a = idx / n;
        const int b = idx % n;
        S(a, b) = framed_invariant(theory, {hopf, {a, b}}, Kernel::Serial) * inv_D;
    }
    return S;
}

Cyclo gauss_sum(const TwistedDouble& theory) {
    std::vector<std::int64_t> hist(theory.phase_order(), 0);
    for (int o = 0; o < theory.size(); ++o)
        hist[theory.twist_exponent(o)] += static_cast<std::int64_t>(theory.qdim(o)) * theory.qdim(o);
    return weighted_roots(hist) * Cyclo(mpq_class(1, theory.global_dim()));
}

int central_charge_mod8(const TwistedDouble& theory) {
    const Cyclo g = gauss_sum(theory);
    for (int c = 0; c < 8; ++c)
        if (g == Cyclo::root(c, 8)) return c;
    throw std::runtime_error("Gauss sum is not an 8th root of unity: " + g.to_string());
}

ModularData modular_data(const TwistedDouble& theory) {
    ModularData md;
    md.params = theory.params();
    for (const auto& obj : theory.objects()) {
        md.labels.push_back(obj.label);
        md.dims.push_back(obj.dim());
    }
    md.D = theory.global_dim();
    md.S = s_matrix(theory);
    md.T = t_matrix(theory);
    md.c_mod_8 = central_charge_mod8(theory);
    const int n = md.size();
    md.dual.assign(n, -1);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n && md.dual[a] < 0; ++b) {
            if (md.dims[a] != md.dims[b]) continue;
            bool match = true;
            for (int z = 0; z < n && match; ++z) match = md.S(a, z).conj() == md.S(b, z);
            if (match) md.dual[a] = b;
        }
    }
    return md;
}

int FusionRules::operator()(int a, int b, int c) const {
    for (auto [x, m] : entries.at(static_cast<std::size_t>(a) * n + b))
        if (x == c) return m;
    return 0;
}

FusionRules fusion_rules(const ModularData& md) {
    const int n = md.size();
    FusionRules fr;
    fr.n = n;
    fr.entries.resize(static_cast<std::size_t>(n) * n);
    std::vector<std::complex<double>> Sf(static_cast<std::size_t>(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) Sf[a * n + b] = md.S(a, b).to_complex();

    // float candidates
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            for (int c = 0; c < n; ++c) {
                std::complex<double> v = 0;
                for (int z = 0; z < n; ++z) v += Sf[a * n + z] * Sf[b * n + z] * std::conj(Sf[c * n + z]) / Sf[z];
                const double r = std::round(v.real());
                if (std::abs(v - r) > 1e-6 || r < 0) {
                    std::ostringstream msg;
                    msg << "Verlinde sum for (" << md.labels[a] << "," << md.labels[b] << "," << md.labels[c]
                        << ") is " << v << ", not a nonnegative integer";
                    fr.problems.push_back(msg.str());
                    continue;
                }
                if (r > 0) fr.entries[a * n + b].emplace_back(c, static_cast<int>(r));
            }
        }
    }
    // exact certificate: N_a S = S diag(S_az / S_0z)
    std::vector<Cyclo> inv_s0(n);
    for (int z = 0; z < n; ++z) inv_s0[z] = md.S(0, z).inverse();
    bool ok = fr.problems.empty();
#pragma omp parallel for schedule(dynamic) reduction(&& : ok)
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n && ok; ++b) {
            for (int z = 0; z < n && ok; ++z) {
                Cyclo lhs;
                for (auto [c, m] : fr.entries[a * n + b]) lhs += Cyclo(static_cast<long>(m)) * md.S(c, z);
                const Cyclo rhs = md.S(b, z) * md.S(a, z) * inv_s0[z];
                if (!(lhs == rhs)) ok = false;
            }
        }
    }
    fr.certified = ok;
    if (!ok && fr.problems.empty()) fr.problems.push_back("fusion candidates fail N_a S = S Lambda_a");
    return fr;
}

int verlinde(const ModularData& md, int a, int b, int c) {
    Cyclo acc;
    for (int z = 0; z < md.size(); ++z) {
        const Cyclo term = md.S(a, z) * md.S(b, z);
        if (term.is_zero()) continue;
        acc += term * md.S(c, z).conj() * md.S(0, z).inverse();
    }
    if (!acc.is_integer() || acc.rational_value() < 0)
        throw std::runtime_error("Verlinde sum " + acc.to_string() + " is not a nonnegative integer");
    return static_cast<int>(acc.rational_value().get_num().get_si());
}

bool ModularityReport::ok() const {
    return unit_row && symmetric && s_squared_permutation && fixed_points == 1 && conjugation_consistent && unitary &&
           st_cubed && twists_roots && fusion_certified && fusion_dims && failures.empty();
}

ModularityReport check_modularity(const ModularData& md, const FusionRules& fusion) {
    const int n = md.size();
    ModularityReport rep;
    rep.c_mod_8 = md.c_mod_8;
    auto fail = [&](const std::string& what) { rep.failures.push_back(what); };

    rep.unit_row = true;
    for (int a = 0; a < n; ++a)
        if (!(md.S(0, a) == Cyclo(mpq_class(md.dims[a], md.D)))) rep.unit_row = false;
    if (!rep.unit_row) fail("unit row of S is not d/D");

    rep.symmetric = true;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (!(md.S(a, b) == md.S(b, a))) rep.symmetric = false;
    if (!rep.symmetric) fail("S is not symmetric");

    // S^2 must be the permutation matrix of charge conjugation
    std::vector<int> perm(n, -1);
    bool perm_ok = true;
#pragma omp parallel for schedule(dynamic) reduction(&& : perm_ok)
    for (int a = 0; a < n; ++a) {
        int ones = 0;
        for (int b = 0; b < n; ++b) {
            Cyclo acc;
            for (int z = 0; z < n; ++z) acc += md.S(a, z) * md.S(z, b);
            if (acc == Cyclo(1)) {
                ++ones;
                perm[a] = b;
            } else if (!acc.is_zero()) {
                perm_ok = false;
            }
        }
        if (ones != 1) perm_ok = false;
    }
    rep.s_squared_permutation = perm_ok;
    if (perm_ok) {
        for (int a = 0; a < n; ++a) {
            if (perm[perm[a]] != a) rep.s_squared_permutation = false;
            if (perm[a] == a) ++rep.fixed_points;
            if (perm[a] != md.dual[a]) fail("S^2 disagrees with the duality read off conj(S) for " + md.labels[a]);
        }
    }
    if (!rep.s_squared_permutation) fail("S^2 is not an involutive permutation matrix");
    if (rep.fixed_points != 1) fail("charge conjugation fixes " + std::to_string(rep.fixed_points) + " labels");

    rep.conjugation_consistent = rep.s_squared_permutation;
    if (rep.s_squared_permutation)
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                if (!(md.S(a, b).conj() == md.S(a, perm[b]))) rep.conjugation_consistent = false;
    if (!rep.conjugation_consistent) fail("conj(S) != S C");
    // S S^dagger = S conj(S) = S S C = C C = I
    rep.unitary = rep.symmetric && rep.s_squared_permutation && rep.conjugation_consistent;

    // S T S = T^-1 S T^-1
    bool st_ok = true;
#pragma omp parallel for schedule(dynamic) reduction(&& : st_ok)
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n && st_ok; ++b) {
            Cyclo acc;
            for (int z = 0; z < n; ++z) {
                const Cyclo l = md.S(a, z) * md.S(z, b);
                if (!l.is_zero()) acc += l * md.T[z];
            }
            const Cyclo rhs = md.S(a, b) * (md.T[a] * md.T[b]).inverse();
            if (!(acc == rhs)) st_ok = false;
        }
    }
    rep.st_cubed = st_ok;
    if (!st_ok) fail("(ST)^3 != S^2");

    rep.twists_roots = true;
    try {
        (void)twist_exponents(md);
    } catch (const std::exception&) {
        rep.twists_roots = false;
        fail("T has an entry that is not a root of unity of order dividing p^2 q");
    }

    rep.fusion_certified = fusion.certified;
    for (const auto& p : fusion.problems) fail(p);
    rep.fusion_dims = true;
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            long long total = 0;
            for (auto [c, m] : fusion.entries[a * n + b]) total += static_cast<long long>(m) * md.dims[c];
            if (total != static_cast<long long>(md.dims[a]) * md.dims[b]) rep.fusion_dims = false;
        }
    }
    if (!rep.fusion_dims) fail("sum_c N_ab^c d_c != d_a d_b");
    return rep;
}

BraidWord whitehead_braid() { return parse_braid("s2^-2 s1 s2^-1 s1", 3); }
BraidWord whitehead_mirror_braid() { return parse_braid("s2^-2 s1^-1 s2^2 s1^2", 3); }

CycloMatrix whitehead_zero_framed(const TwistedDouble& theory, const BraidWord& word) {
    const auto cs = closure_structure(word);
    if (cs.components.size() != 2) throw std::invalid_argument("Whitehead braid must close to two components");
    const bool first_is_double = cs.components[0].strands.size() == 2;
    const int n = theory.size();
    CycloMatrix Z(n);
#pragma omp parallel for schedule(dynamic)
    for (int idx = 0; idx < n * n; ++idx) {
        const int a = idx / n;
        const int b = idx % n;
        const std::vector<int> colors = first_is_double ? std::vector<int>{a, b} : std::vector<int>{b, a};
        Z(a, b) = zero_framed_invariant(theory, color_by_component(word, colors), Kernel::Serial);
    }
    return Z;
}

WMatrix w_matrix(const TwistedDouble& theory) {
    const CycloMatrix Z = whitehead_zero_framed(theory, whitehead_braid());
    const int n = theory.size();
    const auto N = static_cast<unsigned>(theory.phase_order());
    WMatrix w{CycloMatrix(n), CycloMatrix(n)};
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            const long ta = theory.twist_exponent(a);
            const long tb = theory.twist_exponent(b);
            w.Wtilde(a, b) = Z(a, b).times_root(-2 * ta, N);
            w.W(a, b) = Z(a, b).times_root(-ta - tb, N);
        }
    }
    return w;
}

Cyclo ba_closed_form(const TwistedDouble& theory, int b_obj, int a_obj) {
    const auto& B = theory.object(b_obj);
    const auto& A = theory.object(a_obj);
    if (B.kind != ChargeKind::CyclicB || A.kind != ChargeKind::CyclicA)
        throw std::invalid_argument("ba_closed_form expects a B object and an A object");
    const auto& spec = theory.params().spec;
    const int k = theory.group().classes()[B.class_index].representative.m;
    const int l = theory.group().classes()[A.class_index].representative.l;
    const long lm = static_cast<long>(l) * A.charge;
    const long j = static_cast<long>(k) * k % spec.p;
    // (-1)^{lm j} theta_A^{-j/2} = zeta_{2q}^{q lm j - lm j}
    const Cyclo a_part = Cyclo(theory.global_dim()).times_root((spec.q - 1) * lm * j, 2 * spec.q);
    return a_part.times_root(-theory.twist_exponent(b_obj), theory.phase_order());
}

WIdentityReport w_identities(const ModularData& md, const WMatrix& w) {
    const int n = md.size();
    WIdentityReport rep;
    for (int a = 0; a < n; ++a) {
        for (int x = 0; x < n; ++x) {
            if (!(w.W(a, x) == w.W(x, a))) rep.asymmetric.emplace_back(a, x);
            const Cyclo lhs = md.T[a] * md.T[a] * w.Wtilde(a, x);
            const Cyclo rhs = md.T[x] * md.T[x] * w.Wtilde(x, md.dual[a]);
            if (!(lhs == rhs)) rep.identity1.emplace_back(a, x);
            if (!(w.Wtilde(a, x) == w.Wtilde(a, md.dual[x]))) rep.identity2.emplace_back(a, x);
        }
    }
    return rep;
}

Cyclo punctured_s_trace(const ModularData& md, const WMatrix& w, int z, int a) {
    std::vector<Cyclo> v(md.size());
    for (int x = 0; x < md.size(); ++x) v[x] = md.T[x] * w.W(a, x);
    const Cyclo scale = Cyclo(mpq_class(md.dims[a], md.D * md.D)) * md.T[a].inverse();
    return scale * row_dot(md, z, v, false);
}

Cyclo w_from_punctured_traces(const ModularData& md, const std::vector<Cyclo>& traces_for_a, int a, int b) {
    const Cyclo scale = Cyclo(mpq_class(md.D * md.D, md.dims[a])) * md.T[a] * md.T[b].inverse();
    return scale * row_dot(md, b, traces_for_a, true);
}

namespace {

// V(x) = theta_x^-2 sum_y N_{a xbar}^y S_0y theta_y^2
std::vector<Cyclo> r_sum_kernel(const ModularData& md, const FusionRules& fusion, int a) {
    const int n = md.size();
    const auto te = twist_exponents(md);
    const int N = static_cast<int>(big(md));
    std::vector<Cyclo> V(n);
    for (int x = 0; x < n; ++x) {
        std::vector<std::int64_t> hist(N, 0);
        for (auto [y, m] : fusion.entries[static_cast<std::size_t>(a) * n + md.dual[x]])
            hist[wrap(2LL * te[y] - 2LL * te[x], N)] += static_cast<std::int64_t>(m) * md.dims[y];
        V[x] = weighted_roots(hist) * Cyclo(mpq_class(1, md.D));
    }
    return V;
}

}  // namespace

std::vector<Cyclo> r_symbol_sums(const ModularData& md, const FusionRules& fusion, int a) {
    const std::vector<Cyclo> V = r_sum_kernel(md, fusion, a);
    const Cyclo inv_ta = md.T[a].inverse();
    std::vector<Cyclo> out(md.size());
    for (int c = 0; c < md.size(); ++c) out[c] = inv_ta * row_dot(md, c, V, true);
    return out;
}

Cyclo r_symbol_sum(const ModularData& md, const FusionRules& fusion, int a, int c) {
    return md.T[a].inverse() * row_dot(md, c, r_sum_kernel(md, fusion, a), true);
}

Cyclo r_symbol_sum_direct(const ModularData& md, int a, int c) {
    const int n = md.size();
    Cyclo acc;
    for (int z = 0; z < n; ++z) {
        const Cyclo sz = md.S(a, z) * md.S(0, z).inverse();
        if (sz.is_zero()) continue;
        for (int x = 0; x < n; ++x) {
            const Cyclo sx = sz * md.S(x, z).conj() * md.S(c, x).conj();
            if (sx.is_zero()) continue;
            const Cyclo tx = (md.T[a] * md.T[x] * md.T[x]).inverse();
            for (int y = 0; y < n; ++y) {
                const Cyclo sy = md.S(0, y) * md.S(y, z).conj();
                if (sy.is_zero()) continue;
                acc += sx * sy * md.T[y] * md.T[y] * tx;
            }
        }
    }
    return acc;
}

RibbonSignature ribbon_signature(const ModularData& md, const Cyclo& r_sum, int a, int c) {
    const auto te = twist_exponents(md);
    const unsigned N = big(md);
    RibbonSignature sig;
    sig.lambda = (r_sum * md.T[a]).times_root(-te[c], 2 * N);
    sig.integral = sig.lambda.is_integer();
    sig.branch_sensitive = !sig.lambda.is_zero();
    return sig;
}

Cyclo two_strand_closure_even(const ModularData& md, const FusionRules& fusion, int a, int b, int n) {
    const auto te = twist_exponents(md);
    const int N = static_cast<int>(big(md));
    std::vector<std::int64_t> hist(N, 0);
    for (auto [c, m] : fusion.entries[static_cast<std::size_t>(a) * md.size() + b])
        hist[wrap(static_cast<long long>(n) * (te[c] - te[a] - te[b]), N)] += static_cast<std::int64_t>(m) * md.dims[c];
    return weighted_roots(hist);
}

Cyclo two_strand_closure_odd(const ModularData& md, const std::vector<Cyclo>& r_sums_for_a, int a, int n) {
    const auto te = twist_exponents(md);
    const int N = static_cast<int>(big(md));
    Cyclo acc;
    for (int c = 0; c < md.size(); ++c) {
        if (r_sums_for_a[c].is_zero()) continue;
        acc += (Cyclo(md.dims[c]) * r_sums_for_a[c]).times_root(static_cast<long long>(n) * (te[c] - 2 * te[a]) % N, N);
    }
    return acc;
}

Cyclo fs_indicator(const ModularData& md, const FusionRules& fusion, int a, int n) {
    const auto te = twist_exponents(md);
    const int N = static_cast<int>(big(md));
    std::vector<std::int64_t> hist(N, 0);
    for (int x = 0; x < md.size(); ++x)
        for (auto [y, m] : fusion.entries[static_cast<std::size_t>(a) * md.size() + x])
            hist[wrap(static_cast<long long>(n) * (te[y] - te[x]), N)] +=
                static_cast<std::int64_t>(m) * md.dims[x] * md.dims[y];
    return weighted_roots(hist) * Cyclo(mpq_class(1, md.D * md.D));
}

std::vector<int> negative_continued_fraction(int p, int q) {
    if (q <= 0) throw std::invalid_argument("lens space needs q > 0");
    if (std::gcd(p, q) != 1) throw std::invalid_argument("lens space needs gcd(p, q) = 1");
    std::vector<int> outer_first;
    long long num = p, den = q;
    while (true) {
        const long long a = -static_cast<long long>(std::floor(static_cast<double>(-num) / den));
        outer_first.push_back(static_cast<int>(a));
        const long long rest = a * den - num;  // p/q = a - rest/q
        if (rest == 0) break;
        num = den;
        den = rest;
    }
    return {outer_first.rbegin(), outer_first.rend()};
}

int linking_signature(const std::vector<int>& framings) {
    // exact LDL^T pivots of the tridiagonal matrix with -1 off the diagonal
    int sig = 0;
    mpq_class prev = 0;
    for (std::size_t j = 0; j < framings.size(); ++j) {
        mpq_class pivot = framings[j];
        if (j > 0) {
            if (prev == 0) throw std::invalid_argument("degenerate linking matrix");
            pivot -= mpq_class(1) / prev;
        }
        if (pivot > 0) ++sig;
        if (pivot < 0) --sig;
        prev = pivot;
    }
    return sig;
}

Cyclo lens_space_invariant(const ModularData& md, int p, int q) {
    const auto a = negative_continued_fraction(p, q);
    const auto te = twist_exponents(md);
    const unsigned N = big(md);
    const int n = md.size();
    const int len = static_cast<int>(a.size());
    // f_j(x_j) accumulates the weights and S-chain of components 1..j
    std::vector<Cyclo> f(n);
    for (int x = 0; x < n; ++x) f[x] = Cyclo(md.dims[x]).times_root(static_cast<long long>(a[0]) * te[x] % N, N);
    Cyclo total;
    if (len == 1) {
        for (int x = 0; x < n; ++x) total += f[x] * Cyclo(md.dims[x]);
    } else {
        for (int j = 1; j < len; ++j) {
            std::vector<Cyclo> g(n);
            for (int y = 0; y < n; ++y) {
                Cyclo acc;
                for (int x = 0; x < n; ++x)
                    if (!md.S(x, y).is_zero() && !f[x].is_zero()) acc += f[x] * md.S(x, y);
                acc *= Cyclo(md.D);  // unnormalized S
                if (j + 1 < len) acc *= Cyclo(mpq_class(1, md.dims[y]));
                g[y] = (acc * Cyclo(md.dims[y])).times_root(static_cast<long long>(a[j]) * te[y] % N, N);
            }
            f = std::move(g);
        }
        for (int y = 0; y < n; ++y) total += f[y];
    }
    mpz_class Dpow = 1;
    for (int j = 0; j <= len; ++j) Dpow *= md.D;
    const int sigma = linking_signature(a);
    return (total * Cyclo(mpq_class(mpz_class(1), Dpow))).times_root(-static_cast<long>(md.c_mod_8) * sigma, 8);
}

Cyclo lens_space_invariant_by_braids(const TwistedDouble& theory, const ModularData& md, int p, int q) {
    const auto a = negative_continued_fraction(p, q);
    const int len = static_cast<int>(a.size());
    BraidWord chain{len, {}};
    for (int j = 1; j < len; ++j) chain.letters.insert(chain.letters.end(), {-j, -j});
    const int n = theory.size();
    long long count = 1;
    for (int j = 0; j < len; ++j) count *= n;
    if (count > 200000) throw std::invalid_argument("chain too long for exhaustive coloring");
    const auto N = static_cast<unsigned>(theory.phase_order());
    std::vector<Cyclo> terms(count);
#pragma omp parallel for schedule(dynamic)
    for (long long idx = 0; idx < count; ++idx) {
        std::vector<int> colors(len);
        long long r = idx;
        for (int j = len; j-- > 0;) colors[j] = static_cast<int>(r % n), r /= n;
        long long weight = 1;
        long long phase = 0;
        for (int j = 0; j < len; ++j) {
            weight *= theory.qdim(colors[j]);
            phase += static_cast<long long>(a[j]) * theory.twist_exponent(colors[j]);
        }
        const Cyclo inv = framed_invariant(theory, {chain, colors}, Kernel::Serial);
        terms[idx] = (inv * Cyclo(static_cast<long>(weight))).times_root(phase % N, N);
    }
    Cyclo total;
    for (const auto& t : terms) total += t;
    mpz_class Dpow = 1;
    for (int j = 0; j <= len; ++j) Dpow *= md.D;
    const int sigma = linking_signature(a);
    return (total * Cyclo(mpq_class(mpz_class(1), Dpow))).times_root(-static_cast<long>(md.c_mod_8) * sigma, 8);
}

}  // namespace tdl
