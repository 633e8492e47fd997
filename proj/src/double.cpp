#include "tdl/double.hpp"

#include <algorithm>
#include <regex>
#include <stdexcept>

namespace tdl {
namespace {

int wrap(long long x, int m) {
    long long r = x % m;
    return static_cast<int>(r < 0 ? r + m : r);
}

}  // namespace

std::vector<SimpleObject> enumerate_simples(const CocycleParams& params) {
    params.validate();
    const Group group(params.spec);
    const auto& s = params.spec;
    std::vector<SimpleObject> out;
    const auto& classes = group.classes();
    for (std::size_t c = 0; c < classes.size(); ++c) {
        const auto& cls = classes[c];
        const int size = static_cast<int>(cls.members.size());
        const auto t = cls.representative;
        if (t == GroupElement{}) {
            const int induced = (s.q - 1) / s.p;
            for (int j = 0; j < s.p + induced; ++j)
                out.push_back({static_cast<int>(c), ChargeKind::GroupIrrep, j, 1, j < s.p ? 1 : s.p,
                               "I_" + std::to_string(j)});
        } else if (t.m == 0) {
            for (int m = 0; m < s.q; ++m)
                out.push_back({static_cast<int>(c), ChargeKind::CyclicA, m, size, 1,
                               "A_{" + std::to_string(t.l) + "," + std::to_string(m) + "}"});
        } else {
            for (int j = 0; j < s.p; ++j)
                out.push_back({static_cast<int>(c), ChargeKind::CyclicB, j, size, 1,
                               "B_{" + std::to_string(t.m) + "," + std::to_string(j) + "}"});
        }
    }
    return out;
}

TwistedDouble::TwistedDouble(CocycleParams params)
    : params_(params), group_((params.validate(), params.spec)), big_(params.spec.phase_order()), p_(params.spec.p) {
    const int G = group_.size();
    bpart_.resize(G);
    for (int g = 0; g < G; ++g) bpart_[g] = group_.element(g).m;
    omega_table_.resize(static_cast<std::size_t>(p_) * p_ * p_);
    for (int a = 0; a < p_; ++a)
        for (int b = 0; b < p_; ++b)
            for (int c = 0; c < p_; ++c) omega_table_[(a * p_ + b) * p_ + c] = omega_exponent_bparts(params_, a, b, c);

    const auto& classes = group_.classes();
    for (std::size_t c = 0; c < classes.size(); ++c) {
        std::vector<int> members, reps;
        for (const auto& x : classes[c].members) members.push_back(group_.index(x));
        for (const auto& r : classes[c].coset_reps) reps.push_back(group_.index(r));
        members_.push_back(std::move(members));
        coset_reps_.push_back(std::move(reps));
    }
    splits_.resize(classes.size() * static_cast<std::size_t>(G));
    for (std::size_t c = 0; c < classes.size(); ++c) {
        const int t = members_[c][0];
        for (int g = 0; g < G; ++g) {
            const int image = group_.conj(g, t);
            const auto it = std::find(members_[c].begin(), members_[c].end(), image);
            const int l = static_cast<int>(it - members_[c].begin());
            splits_[c * G + g] = {l, group_.mul(group_.inv(coset_reps_[c][l]), g)};
        }
    }

    objects_ = enumerate_simples(params_);
    const auto irreps = irreps_of_G(group_);
    const auto& s = params_.spec;
    for (const auto& obj : objects_) {
        const int t = members_[obj.class_index][0];
        const auto tk = group_.element(t);
        std::vector<ScaledVector> table(static_cast<std::size_t>(G) * obj.charge_dim);
        for (int x = 0; x < G; ++x) {
            if (group_.mul(x, t) != group_.mul(t, x)) continue;
            const auto xe = group_.element(x);
            for (int a = 0; a < obj.charge_dim; ++a) {
                ScaledVector sv{a, 0};
                switch (obj.kind) {
                case ChargeKind::GroupIrrep: {
                    auto [target, phase] = irreps[obj.charge].images[x][a];
                    sv = {target, phase};
                    break;
                }
                case ChargeKind::CyclicA:
                    sv.phase = wrap(static_cast<long long>(obj.charge) * xe.l * s.p * s.p, big_);
                    break;
                case ChargeKind::CyclicB:
                    sv.phase = wrap(static_cast<long long>(obj.charge * s.p + params_.u * tk.m) * xe.m * s.q, big_);
                    break;
                }
                table[static_cast<std::size_t>(x) * obj.charge_dim + a] = sv;
            }
        }
        charge_.push_back(std::move(table));
        // pi(t) is scalar on the charge space; the twist is that scalar
        twist_exp_.push_back(charge_.back()[static_cast<std::size_t>(t) * obj.charge_dim].phase);
    }
}

int TwistedDouble::find(std::string_view label) const {
    static const std::regex pattern(R"(^\s*([IAB])[_]?\{?(\d+)(?:[,_](\d+))?\}?\s*$)");
    std::match_results<std::string_view::const_iterator> m;
    if (!std::regex_match(label.begin(), label.end(), m, pattern))
        throw std::invalid_argument("malformed object label '" + std::string(label) + "'");
    std::string canonical = m[1].str() + "_";
    if (m[1] == "I") {
        if (m[3].matched) throw std::invalid_argument("I labels take one index: '" + std::string(label) + "'");
        canonical += m[2].str();
    } else {
        if (!m[3].matched) throw std::invalid_argument("A/B labels take two indices: '" + std::string(label) + "'");
        canonical += "{" + std::to_string(std::stoi(m[2].str())) + "," + std::to_string(std::stoi(m[3].str())) + "}";
    }
    for (int o = 0; o < size(); ++o)
        if (objects_[o].label == canonical) return o;
    throw std::invalid_argument("no simple object labelled '" + std::string(label) + "'");
}

int TwistedDouble::flux(int o, int v) const {
    const auto& obj = objects_[o];
    return members_[obj.class_index][v / obj.charge_dim];
}

ScaledVector TwistedDouble::charge_action(int o, int x, int a) const {
    const auto& obj = objects_[o];
    return charge_[o][static_cast<std::size_t>(x) * obj.charge_dim + a];
}

int TwistedDouble::theta_exp(int g, int x, int y) const {
    // conjugates of g share its b-part, so theta reads off b-parts only
    return wrap(static_cast<long long>(omega_exp(g, x, y)) + omega_exp(x, y, g) - omega_exp(x, g, y), big_);
}

std::optional<ScaledVector> TwistedDouble::dpr_action(int x, int y, int o, int v) const {
    const auto& obj = objects_[o];
    const int c = obj.class_index;
    const int i = v / obj.charge_dim;
    const int a = v % obj.charge_dim;
    const Split sp = split(c, group_.mul(y, coset_reps_[c][i]));
    if (members_[c][sp.coset] != x) return std::nullopt;
    const ScaledVector inner = charge_action(o, sp.stab, a);
    const int phase = wrap(static_cast<long long>(theta_exp(x, y, coset_reps_[c][i])) -
                               theta_exp(x, coset_reps_[c][sp.coset], sp.stab) + inner.phase,
                           big_);
    return ScaledVector{sp.coset * obj.charge_dim + inner.index, phase};
}

PairMove TwistedDouble::sigma_action(int x_obj, int y_obj, int v, int w) const {
    const auto& Y = objects_[y_obj];
    const int cy = Y.class_index;
    const int g = flux(x_obj, v);
    const int k = w / Y.charge_dim;
    const int b = w % Y.charge_dim;
    const int rk = coset_reps_[cy][k];
    const Split sp = split(cy, group_.mul(g, rk));
    const int h = members_[cy][sp.coset];
    const ScaledVector inner = charge_action(y_obj, sp.stab, b);
    const int phase = wrap(static_cast<long long>(theta_exp(h, g, rk)) -
                               theta_exp(h, coset_reps_[cy][sp.coset], sp.stab) + inner.phase,
                           big_);
    return {sp.coset * Y.charge_dim + inner.index, v, phase};
}

PairMove TwistedDouble::sigma_inverse_action(int y_obj, int x_obj, int w, int v) const {
    const auto& Y = objects_[y_obj];
    const int cy = Y.class_index;
    const int g = flux(x_obj, v);
    const int gi = group_.inv(g);
    const int l = w / Y.charge_dim;
    const int b = w % Y.charge_dim;
    const int rl = coset_reps_[cy][l];
    const Split sp = split(cy, group_.mul(gi, rl));
    const int h = members_[cy][sp.coset];
    const ScaledVector inner = charge_action(y_obj, sp.stab, b);
    const int phase = wrap(-static_cast<long long>(theta_exp(members_[cy][l], g, gi)) + theta_exp(h, gi, rl) -
                               theta_exp(h, coset_reps_[cy][sp.coset], sp.stab) + inner.phase,
                           big_);
    return {v, sp.coset * Y.charge_dim + inner.index, phase};
}

int TwistedDouble::associator_exponent(int f1, int f2, int f3) const { return wrap(-omega_exp(f1, f2, f3), big_); }

Cyclo TwistedDouble::associator_scalar(GroupElement f1, GroupElement f2, GroupElement f3) const {
    return phase(associator_exponent(group_.index(f1), group_.index(f2), group_.index(f3)));
}

}  // namespace tdl
