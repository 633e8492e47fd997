#include "tdl/cocycle.hpp"

#include <string>

namespace tdl {
namespace {

int wrap(long long x, int m) {
    long long r = x % m;
    return static_cast<int>(r < 0 ? r + m : r);
}

}  // namespace

void CocycleParams::validate() const {
    spec.validate();
    if (u < 0 || u >= spec.p)
        throw InvalidSpec("u must lie in [0, " + std::to_string(spec.p) + "), got " + std::to_string(u));
}

int omega_exponent_bparts(const CocycleParams& params, int gb, int hb, int kb) {
    const int p = params.spec.p;
    const int carry = gb + hb - (gb + hb) % p;  // either 0 or p
    // zeta_{p^2}^{u kb carry} = zeta_N^{q u kb carry}
    return wrap(static_cast<long long>(params.spec.q) * params.u * kb * carry, params.spec.phase_order());
}

int omega_exponent(const CocycleParams& params, GroupElement g, GroupElement h, GroupElement k) {
    return omega_exponent_bparts(params, g.m, h.m, k.m);
}

int theta_exponent(const CocycleParams& params, GroupElement g, GroupElement x, GroupElement y) {
    const auto& s = params.spec;
    const GroupElement xy = multiply(x, y, s);
    const GroupElement conj_xy = multiply(multiply(inverse(xy, s), g, s), xy, s);
    const GroupElement conj_x = multiply(multiply(inverse(x, s), g, s), x, s);
    return wrap(static_cast<long long>(omega_exponent(params, g, x, y)) + omega_exponent(params, x, y, conj_xy) -
                    omega_exponent(params, x, conj_x, y),
                s.phase_order());
}

int gamma_exponent(const CocycleParams& params, GroupElement h, GroupElement x, GroupElement y) {
    const auto& s = params.spec;
    const GroupElement hi = inverse(h, s);
    const GroupElement xh = multiply(multiply(hi, x, s), h, s);
    const GroupElement yh = multiply(multiply(hi, y, s), h, s);
    return wrap(static_cast<long long>(omega_exponent(params, x, y, h)) + omega_exponent(params, h, xh, yh) -
                    omega_exponent(params, x, h, yh),
                s.phase_order());
}

Cyclo omega(const CocycleParams& params, GroupElement g, GroupElement h, GroupElement k) {
    return Cyclo::root(omega_exponent(params, g, h, k), params.spec.phase_order());
}

Cyclo theta(const CocycleParams& params, GroupElement g, GroupElement x, GroupElement y) {
    return Cyclo::root(theta_exponent(params, g, x, y), params.spec.phase_order());
}

Cyclo gamma(const CocycleParams& params, GroupElement h, GroupElement x, GroupElement y) {
    return Cyclo::root(gamma_exponent(params, h, x, y), params.spec.phase_order());
}

Cyclo projective_character(const CocycleParams& params, GroupElement t, int s, GroupElement x) {
    const auto& spec = params.spec;
    if (multiply(x, t, spec) != multiply(t, x, spec))
        throw std::invalid_argument("element outside the centralizer");
    if (t.m != 0) {
        if (s < 0 || s >= spec.p) throw std::out_of_range("Z_p charge index out of range");
        // x = b^j since the centralizer of b^k is <b>
        return Cyclo::root(static_cast<long>(s * spec.p + params.u * t.m) * x.m, spec.p * spec.p);
    }
    Group group(spec);
    return centralizer_character(group, t, s)(x);
}

}  // namespace tdl
