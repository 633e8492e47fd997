#include "tdl/quandle.hpp"

#include <sstream>

namespace tdl {
namespace {

int wrap(long long x, int m) {
    long long r = x % m;
    return static_cast<int>(r < 0 ? r + m : r);
}

int inverse_mod(int a, int m) {
    for (int x = 1; x < m; ++x)
        if (static_cast<long long>(a) * x % m == 1) return x;
    throw std::invalid_argument("no inverse mod " + std::to_string(m));
}

}  // namespace

AlexanderQuandle AlexanderQuandle::for_class(const GroupSpec& spec, int k) {
    spec.validate();
    long long t = 1;
    for (int j = 0; j < wrap(k, spec.p); ++j) t = t * spec.n % spec.q;
    return {spec.q, wrap(t, spec.q)};
}

int AlexanderQuandle::op(int x, int y) const {
    return wrap(static_cast<long long>(1 - multiplier) * x + static_cast<long long>(multiplier) * y, modulus);
}

int AlexanderQuandle::left_inverse(int x, int z) const {
    return wrap((static_cast<long long>(z) - static_cast<long long>(1 - multiplier) * x) * inverse_mod(multiplier, modulus),
                modulus);
}

int quandle_op(const AlexanderQuandle& Q, int x, int y) { return Q.op(x, y); }

std::int64_t coloring_count(const AlexanderQuandle& Q, const BraidWord& word) {
    const int n = word.strands;
    std::int64_t total = 1;
    for (int j = 0; j < n; ++j) total *= Q.modulus;
    std::int64_t fixed = 0;
    std::vector<int> start(n), x(n);
    for (std::int64_t idx = 0; idx < total; ++idx) {
        std::int64_t r = idx;
        for (int j = n; j-- > 0;) start[j] = static_cast<int>(r % Q.modulus), r /= Q.modulus;
        x = start;
        for (int letter : word.letters) {
            const int i = std::abs(letter) - 1;
            const int a = x[i];
            const int b = x[i + 1];
            if (letter > 0) {
                x[i] = Q.op(a, b);
                x[i + 1] = a;
            } else {
                // inverse of (a,b) -> (a > b, a)
                x[i] = b;
                x[i + 1] = Q.left_inverse(b, a);
            }
        }
        if (x == start) ++fixed;
    }
    return fixed;
}

std::string SingleColorReport::describe() const {
    std::ostringstream out;
    out << (holds ? "holds" : "FAILS") << ": count " << count << ", engine " << engine.to_string() << ", predicted "
        << predicted.to_string();
    return out.str();
}

SingleColorReport single_color_check(const TwistedDouble& theory, const BraidWord& word, int k, int s) {
    const int obj = theory.find("B_{" + std::to_string(k) + "," + std::to_string(s) + "}");
    SingleColorReport rep;
    rep.count = coloring_count(AlexanderQuandle::for_class(theory.params().spec, k), word);
    rep.engine = framed_invariant(theory, {word, std::vector<int>(word.strands, obj)});
    rep.predicted =
        Cyclo(static_cast<long>(rep.count))
            .times_root(static_cast<long>(word.writhe()) * theory.twist_exponent(obj), theory.phase_order());
    rep.holds = rep.engine == rep.predicted;
    return rep;
}

}  // namespace tdl
