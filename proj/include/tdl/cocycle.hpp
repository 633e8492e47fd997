// The 3-cocycles omega_u on G(q,p;n) and the 2-cochains they induce.
//
// omega_u(g,h,k) = zeta_{p^2}^{u k_b (g_b + h_b - [g_b + h_b]_p)} depends only on
// b-parts. Every value is a power of zeta_N with N = p^2 q, so the *_exponent
// functions return the power (mod N) and the Cyclo versions wrap it.
#pragma once

#include "tdl/group.hpp"

namespace tdl {

struct CocycleParams {
    GroupSpec spec;
    int u = 0;

    void validate() const;  // spec valid and 0 <= u < p
};

int omega_exponent(const CocycleParams& params, GroupElement g, GroupElement h, GroupElement k);
// Same value read off the b-parts only; the table form used by the engine.
int omega_exponent_bparts(const CocycleParams& params, int gb, int hb, int kb);
// theta_g(x,y) = omega(g,x,y) omega(x,y,(xy)^-1 g xy) / omega(x, x^-1 g x, y)
int theta_exponent(const CocycleParams& params, GroupElement g, GroupElement x, GroupElement y);
// gamma_h(x,y) = omega(x,y,h) omega(h, h^-1 x h, h^-1 y h) / omega(x, h, h^-1 y h)
int gamma_exponent(const CocycleParams& params, GroupElement h, GroupElement x, GroupElement y);

Cyclo omega(const CocycleParams& params, GroupElement g, GroupElement h, GroupElement k);
Cyclo theta(const CocycleParams& params, GroupElement g, GroupElement x, GroupElement y);
Cyclo gamma(const CocycleParams& params, GroupElement h, GroupElement x, GroupElement y);

// The theta_t-projective character of C_G(t) with charge index s:
//   t = e:      trace of the s-th G-irrep
//   t = a^l:    zeta_q^{s l'} on a^{l'}
//   t = b^k:    zeta_{p^2}^{(s p + u k) j} on b^j, 0 <= j < p
// It satisfies pi(x) pi(y) = theta_t(x,y) pi(xy). Throws if x does not commute with t.
Cyclo projective_character(const CocycleParams& params, GroupElement t, int s, GroupElement x);

}  // namespace tdl
