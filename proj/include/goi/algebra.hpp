#pragma once

// Derived algebraic structure: the Thompson family generated by the
// associator, the split/merge pair, and the bicyclic monoid they generate
// under the pasting composition.

#include <cstdint>
#include <vector>

#include "matrix.hpp"
#include "pinj.hpp"
#include "square.hpp"

namespace goi {

// x_0 = tau, x_{i+1} = 1 * x_i; every x_i is a bijection
inline dyadic_pinj thompson_x(u64 i) {
    dyadic_pinj x = gen_tau();
    for (u64 k = 0; k < i; ++k)
        x = star_tensor(dyadic_pinj::one(), x);
    return x;
}

// the same family one level up: X_0 = T, X_{i+1} = 1 [] X_i
inline rook_square thompson_box_x(u64 i) {
    rook_square x = assoc_T();
    for (u64 k = 0; k < i; ++k)
        x = box_tensor(identity_square(), x);
    return x;
}

// split = tau . (1 * sigma), merge = (1 * sigma) . tau'
inline const dyadic_pinj &delta_split() {
    static const dyadic_pinj v =
        compose(gen_tau(), star_tensor(dyadic_pinj::one(), gen_sigma()));
    return v;
}
inline const dyadic_pinj &nabla_merge() {
    static const dyadic_pinj v =
        compose(star_tensor(dyadic_pinj::one(), gen_sigma()), gen_tau_inv());
    return v;
}

// --- bicyclic normal forms ----------------------------------------------

struct bicyclic_nf {
    u64 d = 0;
    u64 c = 0;
    friend bool operator==(const bicyclic_nf &, const bicyclic_nf &) = default;
};

inline u64 monus(u64 y, u64 x) { return x <= y ? y - x : 0; }

// (d,c)(b,a) = (d + (b - c), (c - b) + a), subtraction truncated
inline bicyclic_nf bicyclic_compose_nf(const bicyclic_nf &later, const bicyclic_nf &first) {
    return bicyclic_nf{later.d + monus(first.d, later.c),
                       monus(later.c, first.d) + first.c};
}

enum class split_merge { split, merge };

inline bicyclic_nf bicyclic_letter_nf(split_merge w) {
    return w == split_merge::split ? bicyclic_nf{1, 0} : bicyclic_nf{0, 1};
}

struct bicyclic_value {
    dyadic_pinj endo;
    bicyclic_nf nf;
};

// Evaluates a word under the pasting composition, outermost letter first
// (word[k-1] is applied first), and independently folds the monus normal
// form. Words with equal normal form must evaluate to equal maps.
inline bicyclic_value bicyclic_eval(const std::vector<split_merge> &word,
                                    u64 max_iter = default_max_iter) {
    rook_square acc = identity_square();
    bicyclic_nf nf{0, 0};
    for (split_merge w : word) {
        const dyadic_pinj &gen = w == split_merge::split ? delta_split() : nabla_merge();
        acc = compose_int(acc, square_from_endo(gen), max_iter);
        nf = bicyclic_compose_nf(nf, bicyclic_letter_nf(w));
    }
    return bicyclic_value{endo_from_square(acc), nf};
}

} // namespace goi
