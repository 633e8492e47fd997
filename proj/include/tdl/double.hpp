// Simple objects of the twisted double D^omega(G) and the moves the braid
// engine is built from.
//
// An object is (class [t], charge). Its basis is |r_i>|v_a> with r_i a coset
// representative and v_a a basis vector of the charge space; the flux of that
// vector is t_i = r_i t r_i^-1. Every charge space is realized monomially (the
// p-dimensional G-irreps are induced), so every move sends a basis vector to
// one scaled basis vector. Phases are exponents of zeta_N, N = p^2 q.
#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tdl/cocycle.hpp"

namespace tdl {

enum class ChargeKind { GroupIrrep, CyclicA, CyclicB };

struct SimpleObject {
    int class_index = 0;
    ChargeKind kind = ChargeKind::GroupIrrep;
    int charge = 0;  // G-irrep index j, Z_q character m, or Z_p label s
    int class_size = 1;
    int charge_dim = 1;
    std::string label;  // I_j, A_{l,m}, B_{k,s}

    int dim() const { return class_size * charge_dim; }
};

// A basis vector scaled by zeta_N^phase.
struct ScaledVector {
    int index = 0;
    int phase = 0;
};

// Result of a crossing move on a pair of adjacent basis vectors.
struct PairMove {
    int left = 0;   // new index at the left position
    int right = 0;  // new index at the right position
    int phase = 0;
};

class TwistedDouble {
public:
    explicit TwistedDouble(CocycleParams params);

    const CocycleParams& params() const { return params_; }
    const Group& group() const { return group_; }
    int phase_order() const { return big_; }
    Cyclo phase(long e) const { return Cyclo::root(e, static_cast<unsigned>(big_)); }

    const std::vector<SimpleObject>& objects() const { return objects_; }
    int size() const { return static_cast<int>(objects_.size()); }
    const SimpleObject& object(int o) const { return objects_.at(o); }
    int unit() const { return 0; }
    // Accepts I_0, A_{1,4}, B_{1,0} and the shorter A1_4, A1,4, B_1_0 spellings.
    int find(std::string_view label) const;

    int qdim(int o) const { return objects_.at(o).dim(); }
    int global_dim() const { return group_.size(); }  // D with D^2 = sum d^2
    int twist_exponent(int o) const { return twist_exp_.at(o); }
    Cyclo twist(int o) const { return phase(twist_exp_.at(o)); }

    // Flux (element index) of basis vector v of object o.
    int flux(int o, int v) const;
    // Charge-space action pi(x) for x in the centralizer of the representative.
    ScaledVector charge_action(int o, int x, int a) const;

    // P_x y acting on basis vector v of object o; empty when x is not the flux of y.v.
    std::optional<ScaledVector> dpr_action(int x, int y, int o, int v) const;
    // c: |v>_X |w>_Y -> phase |w'>_Y |v>_X
    PairMove sigma_action(int x_obj, int y_obj, int v, int w) const;
    // inverse of sigma_action: |w'>_Y |v>_X -> phase |v>_X |w>_Y
    PairMove sigma_inverse_action(int y_obj, int x_obj, int w, int v) const;
    // omega(f1,f2,f3)^-1 as an exponent
    int associator_exponent(int f1, int f2, int f3) const;
    Cyclo associator_scalar(GroupElement f1, GroupElement f2, GroupElement f3) const;

    int omega_exp(int g, int h, int k) const {
        return omega_table_[(bpart_[g] * p_ + bpart_[h]) * p_ + bpart_[k]];
    }
    int theta_exp(int g, int x, int y) const;

private:
    // g = r_l s with s in the centralizer of the representative
    struct Split {
        int coset = 0;
        int stab = 0;
    };
    Split split(int cls, int g) const { return splits_[static_cast<std::size_t>(cls) * group_.size() + g]; }

    CocycleParams params_;
    Group group_;
    int big_;
    int p_;
    std::vector<int> bpart_;
    std::vector<int> omega_table_;
    std::vector<SimpleObject> objects_;
    std::vector<int> twist_exp_;
    std::vector<std::vector<int>> members_;     // per class: element indices
    std::vector<std::vector<int>> coset_reps_;  // per class: element indices
    std::vector<Split> splits_;
    // per object: charge action indexed [x * charge_dim + a]; unused entries for x outside C(t)
    std::vector<std::vector<ScaledVector>> charge_;
};

// Enumerates the simple objects in canonical order I_*, A_{l,*}, B_{k,*}.
std::vector<SimpleObject> enumerate_simples(const CocycleParams& params);

}  // namespace tdl
