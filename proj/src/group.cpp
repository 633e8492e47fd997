#include "tdl/group.hpp"

#include <algorithm>
#include <string>

namespace tdl {
namespace {

bool is_prime(int x) {
    if (x < 2) return false;
    for (int d = 2; d * d <= x; ++d)
        if (x % d == 0) return false;
    return true;
}

int mod(long long x, int m) {
    long long r = x % m;
    return static_cast<int>(r < 0 ? r + m : r);
}

int pow_mod(long long base, long long e, int m) {
    long long result = 1 % m;
    base = mod(base, m);
    while (e > 0) {
        if (e & 1) result = result * base % m;
        base = base * base % m;
        e >>= 1;
    }
    return static_cast<int>(result);
}

}  // namespace

void GroupSpec::validate() const {
    if (!is_prime(q) || q == 2) throw InvalidSpec("q must be an odd prime, got " + std::to_string(q));
    if (!is_prime(p) || p == 2) throw InvalidSpec("p must be an odd prime, got " + std::to_string(p));
    if ((q - 1) % p != 0) throw InvalidSpec("p must divide q-1");
    const int r = mod(n, q);
    if (r == 1 || r == 0 || pow_mod(r, p, q) != 1)
        throw InvalidSpec("n must have multiplicative order " + std::to_string(p) + " mod " + std::to_string(q) +
                          ", got n = " + std::to_string(n));
}

GroupElement multiply(GroupElement g, GroupElement h, const GroupSpec& s) {
    return {mod(g.l + static_cast<long long>(pow_mod(s.n, g.m, s.q)) * h.l, s.q), mod(g.m + h.m, s.p)};
}

GroupElement inverse(GroupElement g, const GroupSpec& s) {
    const int m = mod(-g.m, s.p);
    return {mod(-static_cast<long long>(pow_mod(s.n, m, s.q)) * g.l, s.q), m};
}

Group::Group(GroupSpec spec) : spec_(spec), size_(spec.order()) {
    spec_.validate();
    spec_.n = mod(spec_.n, spec_.q);
    mul_.resize(static_cast<std::size_t>(size_) * size_);
    inv_.resize(size_);
    for (int g = 0; g < size_; ++g) {
        inv_[g] = index(tdl::inverse(element(g), spec_));
        for (int h = 0; h < size_; ++h)
            mul_[static_cast<std::size_t>(g) * size_ + h] = index(tdl::multiply(element(g), element(h), spec_));
    }

    class_of_.assign(size_, -1);
    for (int t = 0; t < size_; ++t) {
        if (class_of_[t] >= 0) continue;
        ConjClassInfo info;
        info.representative = element(t);  // lex-least because indices are lex-ordered
        for (int g = 0; g < size_; ++g) {
            const int c = conj(g, t);
            if (c == t) info.centralizer.push_back(element(g));
            if (std::find(info.members.begin(), info.members.end(), element(c)) == info.members.end())
                info.members.push_back(element(c));
        }
        std::sort(info.members.begin(), info.members.end());
        for (const auto& x : info.members) {
            for (int g = 0; g < size_; ++g) {
                if (conj(g, t) == index(x)) {
                    info.coset_reps.push_back(element(g));
                    break;
                }
            }
        }
        for (const auto& x : info.members) class_of_[index(x)] = static_cast<int>(classes_.size());
        classes_.push_back(std::move(info));
    }
    // order by (m, l) of the representative: [e], [a^l]..., [b^k]...
    std::vector<int> order(classes_.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(), [&](int x, int y) {
        const auto& a = classes_[x].representative;
        const auto& b = classes_[y].representative;
        return std::pair(a.m, a.l) < std::pair(b.m, b.l);
    });
    std::vector<ConjClassInfo> sorted;
    std::vector<int> renumber(order.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
        renumber[order[i]] = static_cast<int>(i);
        sorted.push_back(std::move(classes_[order[i]]));
    }
    classes_ = std::move(sorted);
    for (auto& c : class_of_) c = renumber[c];
}

GroupElement Group::multiply(GroupElement g, GroupElement h) const { return tdl::multiply(g, h, spec_); }
GroupElement Group::inverse(GroupElement g) const { return tdl::inverse(g, spec_); }

int Group::power_of_n(int e) const { return pow_mod(spec_.n, mod(e, spec_.p), spec_.q); }

std::vector<ConjClassInfo> conjugacy_data(const GroupSpec& spec) { return Group(spec).classes(); }

Cyclo MonomialRep::character(int element_index) const {
    std::vector<std::int64_t> counts(phase_order, 0);
    for (int j = 0; j < dim; ++j) {
        auto [target, phase] = images[element_index][j];
        if (target == j) ++counts[phase];
    }
    return Cyclo::from_exponent_counts(counts);
}

std::vector<MonomialRep> irreps_of_G(const Group& group) {
    const auto& s = group.spec();
    const int big = s.phase_order();
    std::vector<MonomialRep> reps;
    for (int j = 0; j < s.p; ++j) {
        MonomialRep rep{1, big, {}};
        for (int g = 0; g < group.size(); ++g) {
            const auto x = group.element(g);
            rep.images.push_back({{0, mod(static_cast<long long>(j) * x.m * s.p * s.q, big)}});
        }
        reps.push_back(std::move(rep));
    }
    // rho(a^l b^m) e_j = zeta_q^{r n^-(j+m) l} e_{j+m}
    for (const auto& cls : group.classes()) {
        if (cls.representative.m != 0 || cls.representative.l == 0) continue;
        const int r = cls.representative.l;
        MonomialRep rep{s.p, big, {}};
        for (int g = 0; g < group.size(); ++g) {
            const auto x = group.element(g);
            std::vector<std::pair<int, int>> image;
            for (int j = 0; j < s.p; ++j) {
                const int target = (j + x.m) % s.p;
                const long long e = static_cast<long long>(r) * group.power_of_n(-(j + x.m)) % s.q * x.l % s.q;
                image.emplace_back(target, mod(e * s.p * s.p, big));
            }
            rep.images.push_back(std::move(image));
        }
        reps.push_back(std::move(rep));
    }
    return reps;
}

std::function<Cyclo(GroupElement)> centralizer_character(const Group& group, GroupElement t, int index) {
    const auto& s = group.spec();
    const int cls = group.class_of(group.index(t));
    if (group.classes()[cls].representative != t)
        throw std::invalid_argument("centralizer_character expects a class representative");
    auto in_centralizer = [&group, t](GroupElement x) {
        return group.multiply(x, t) == group.multiply(t, x);
    };
    if (t == GroupElement{}) {
        auto reps = irreps_of_G(group);
        if (index < 0 || index >= static_cast<int>(reps.size())) throw std::out_of_range("G-irrep index out of range");
        return [rep = std::move(reps[index]), &group](GroupElement x) { return rep.character(group.index(x)); };
    }
    if (t.m == 0) {
        if (index < 0 || index >= s.q) throw std::out_of_range("Z_q character index out of range");
        return [=](GroupElement x) {
            if (!in_centralizer(x)) throw std::invalid_argument("element outside the centralizer");
            return Cyclo::root(static_cast<long>(x.l) * index, s.q);
        };
    }
    if (index < 0 || index >= s.p) throw std::out_of_range("Z_p character index out of range");
    return [=](GroupElement x) {
        if (!in_centralizer(x)) throw std::invalid_argument("element outside the centralizer");
        return Cyclo::root(static_cast<long>(x.m) * index, s.p);
    };
}

}  // namespace tdl
