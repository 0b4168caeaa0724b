#pragma once

// Exact arithmetic for the partial injections on the naturals generated by
//
//     p(2n) = n        p#(n) = 2n
//     q(2n+1) = n      q#(n) = 2n+1
//
// Every element reachable from these under composition, converse and
// disjoint union is a finite union of "dyadic affine pieces": a piece
// (d, r, e, s) is the map defined exactly on { n : n = r (mod 2^d) },
//
//     2^d k + r  |->  2^e k + s        (0 <= r < 2^d, 0 <= s < 2^e).
//
// Such unions are closed under composition, converse and disjoint union,
// and admit a canonical form (sibling-merged, sorted), so equality is
// decidable exactly.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "errors.hpp"

namespace goi {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

// Depth bound for pieces; set it once at startup if needed, it is read-only
// while computations run. Slopes are 2^(e-d), so words of length <= 64 fit.
inline u64 &depth_limit() {
    static u64 limit = 64;
    return limit;
}

inline u64 mask64(u64 d) { return d >= 64 ? ~u64{0} : ((u64{1} << d) - 1); }
inline u64 shl64(u64 v, u64 k) { return k >= 64 ? 0 : v << k; }

struct piece {
    u64 d = 0; // domain depth: domain is the class r (mod 2^d)
    u64 r = 0;
    u64 e = 0; // image depth: image is the class s (mod 2^e)
    u64 s = 0;

    friend bool operator==(const piece &, const piece &) = default;

    // maps 2^d k + r to 2^e k + s
    std::optional<u64> apply(u64 n) const {
        if ((n & mask64(d)) != r)
            return std::nullopt;
        u64 k = d >= 64 ? 0 : (n - r) >> d;
        u128 m = (u128{k} << e) + s;
        if (m > ~u64{0})
            throw depth_exceeded_error("piece application overflows 64 bits");
        return static_cast<u64>(m);
    }

    piece converse() const { return piece{e, s, d, r}; }
};

inline bool piece_order(const piece &a, const piece &b) {
    if (a.d != b.d) return a.d < b.d;
    if (a.r != b.r) return a.r < b.r;
    if (a.e != b.e) return a.e < b.e;
    return a.s < b.s;
}

// Residue classes mod powers of two are nested or disjoint; they meet iff
// the residues agree modulo the coarser one.
inline bool classes_meet(u64 d1, u64 r1, u64 d2, u64 r2) {
    u64 m = std::min(d1, d2);
    return (r1 & mask64(m)) == (r2 & mask64(m));
}

// g after f on single pieces. The middle set im(f) /\ dom(g) is a single
// residue class mod 2^max(f.e, g.d), or empty.
inline std::optional<piece> compose_pieces(const piece &g, const piece &f) {
    u64 m = std::min(f.e, g.d);
    if ((f.s & mask64(m)) != (g.r & mask64(m)))
        return std::nullopt;
    bool image_finer = f.e >= g.d;
    u64 t = image_finer ? f.e : g.d;
    u64 x = image_finer ? f.s : g.r; // representative of the middle class mod 2^t
    u64 dd = f.d + (t - f.e);
    u64 ee = g.e + (t - g.d);
    if (dd > depth_limit() || ee > depth_limit())
        throw depth_exceeded_error("piece composition exceeds depth limit " +
                                   std::to_string(depth_limit()));
    u64 j_dom = f.e >= 64 ? 0 : (x - f.s) >> f.e; // < 2^(t - f.e)
    u64 j_im = g.d >= 64 ? 0 : (x - g.r) >> g.d;  // < 2^(t - g.d)
    u64 rr = static_cast<u64>(u128{f.r} + (u128{j_dom} << f.d));
    u64 ss = static_cast<u64>(u128{g.s} + (u128{j_im} << g.e));
    return piece{dd, rr, ee, ss};
}

namespace detail {

// Two pieces are siblings when they are exactly the two halves of a
// coarser piece: (d, r, e, s) splits into (d+1, r, e+1, s) and
// (d+1, r + 2^d, e+1, s + 2^e). Greedy merging strictly shrinks the list.
inline bool merge_siblings_once(std::vector<piece> &v) {
    bool merged_any = false;
    std::sort(v.begin(), v.end(), piece_order);
    std::vector<piece> out;
    std::vector<bool> used(v.size(), false);
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (used[i])
            continue;
        const piece &lo = v[i];
        if (lo.d > 0 && lo.e > 0 && (lo.r >> (lo.d - 1)) == 0 && (lo.s >> (lo.e - 1)) == 0) {
            piece hi{lo.d, lo.r | (u64{1} << (lo.d - 1)), lo.e, lo.s | (u64{1} << (lo.e - 1))};
            auto it = std::lower_bound(v.begin() + i + 1, v.end(), hi, piece_order);
            if (it != v.end() && *it == hi && !used[it - v.begin()]) {
                used[it - v.begin()] = true;
                out.push_back(piece{lo.d - 1, lo.r, lo.e - 1, lo.s});
                merged_any = true;
                continue;
            }
        }
        out.push_back(lo);
    }
    v = std::move(out);
    return merged_any;
}

inline void canonicalize(std::vector<piece> &v) {
    while (merge_siblings_once(v)) {
    }
    std::sort(v.begin(), v.end(), piece_order);
}

} // namespace detail

// A partial injection on the naturals, stored as the canonical finite union
// of dyadic affine pieces: domains pairwise disjoint, images pairwise
// disjoint, no mergeable siblings, sorted by (d, r).
class dyadic_pinj {
  public:
    dyadic_pinj() = default; // the nowhere-defined map

    static dyadic_pinj zero() { return dyadic_pinj{}; }

    static dyadic_pinj one() {
        dyadic_pinj f;
        f.ps_.push_back(piece{0, 0, 0, 0});
        return f;
    }

    static dyadic_pinj single(piece p) {
        check_bounds(p);
        dyadic_pinj f;
        f.ps_.push_back(p);
        return f;
    }

    // Validates bounds and exact disjointness, then canonicalizes.
    static dyadic_pinj from_pieces(std::vector<piece> v) {
        for (const piece &p : v)
            check_bounds(p);
        for (std::size_t i = 0; i < v.size(); ++i)
            for (std::size_t j = i + 1; j < v.size(); ++j) {
                if (classes_meet(v[i].d, v[i].r, v[j].d, v[j].r)) {
                    u64 m = std::min(v[i].d, v[j].d);
                    throw not_disjoint_error("piece domains", m, v[i].r & mask64(m));
                }
                if (classes_meet(v[i].e, v[i].s, v[j].e, v[j].s)) {
                    u64 m = std::min(v[i].e, v[j].e);
                    throw not_disjoint_error("piece images", m, v[i].s & mask64(m));
                }
            }
        detail::canonicalize(v);
        dyadic_pinj f;
        f.ps_ = std::move(v);
        return f;
    }

    const std::vector<piece> &pieces() const { return ps_; }
    bool is_zero() const { return ps_.empty(); }
    bool is_one() const { return ps_.size() == 1 && ps_[0] == piece{0, 0, 0, 0}; }

    std::optional<u64> apply(u64 n) const {
        // disjoint domains: at most one piece is defined at n
        for (const piece &p : ps_)
            if (auto v = p.apply(n))
                return v;
        return std::nullopt;
    }

    // canonical-form identity (the fast equality)
    friend bool operator==(const dyadic_pinj &, const dyadic_pinj &) = default;

    friend dyadic_pinj compose(const dyadic_pinj &g, const dyadic_pinj &f); // g after f
    friend dyadic_pinj union_disjoint(const dyadic_pinj &f, const dyadic_pinj &g);
    friend dyadic_pinj dagger(const dyadic_pinj &f);

  private:
    static void check_bounds(const piece &p) {
        if (p.d > depth_limit() || p.e > depth_limit())
            throw depth_exceeded_error("piece depth beyond limit " +
                                       std::to_string(depth_limit()));
        if ((p.r & ~mask64(p.d)) != 0 || (p.s & ~mask64(p.e)) != 0)
            throw error("piece residue not reduced");
    }

    static dyadic_pinj from_canonical(std::vector<piece> v) {
        detail::canonicalize(v);
        dyadic_pinj f;
        f.ps_ = std::move(v);
        return f;
    }

    std::vector<piece> ps_;
};

inline dyadic_pinj compose(const dyadic_pinj &g, const dyadic_pinj &f) {
    // pairwise piece composition; results inherit disjointness from f and g
    std::vector<piece> out;
    for (const piece &pf : f.pieces())
        for (const piece &pg : g.pieces())
            if (auto c = compose_pieces(pg, pf))
                out.push_back(*c);
    return dyadic_pinj::from_canonical(std::move(out));
}

// Union of partial injections with exactly disjoint domains and images.
// Overlap is an error by design: every union the algebra performs is
// disjoint by a rook condition, so overlap signals an ill-formed input.
inline dyadic_pinj union_disjoint(const dyadic_pinj &f, const dyadic_pinj &g) {
    if (f.is_zero())
        return g;
    if (g.is_zero())
        return f;
    for (const piece &a : f.pieces())
        for (const piece &b : g.pieces()) {
            if (classes_meet(a.d, a.r, b.d, b.r)) {
                u64 m = std::min(a.d, b.d);
                throw not_disjoint_error("domains", m, a.r & mask64(m));
            }
            if (classes_meet(a.e, a.s, b.e, b.s)) {
                u64 m = std::min(a.e, b.e);
                throw not_disjoint_error("images", m, a.s & mask64(m));
            }
        }
    std::vector<piece> out = f.pieces();
    out.insert(out.end(), g.pieces().begin(), g.pieces().end());
    return dyadic_pinj::from_canonical(std::move(out));
}

// relational converse; on pieces (d,r,e,s) |-> (e,s,d,r)
inline dyadic_pinj dagger(const dyadic_pinj &f) {
    std::vector<piece> out;
    out.reserve(f.pieces().size());
    for (const piece &p : f.pieces())
        out.push_back(p.converse());
    return dyadic_pinj::from_canonical(std::move(out));
}

inline dyadic_pinj source_idempotent(const dyadic_pinj &f) { return compose(dagger(f), f); }
inline dyadic_pinj target_idempotent(const dyadic_pinj &f) { return compose(f, dagger(f)); }

// Refine every piece to a common domain depth D. A piece of depth d splits
// into 2^(D-d) children, so keep D reasonable.
inline std::vector<piece> refine_to_depth(const dyadic_pinj &f, u64 depth) {
    std::vector<piece> out;
    for (const piece &p : f.pieces()) {
        u64 extra = depth - p.d;
        if (extra > 26)
            throw depth_exceeded_error("refinement would produce 2^" + std::to_string(extra) +
                                       " pieces");
        u64 count = u64{1} << extra;
        for (u64 j = 0; j < count; ++j)
            out.push_back(
                piece{depth, p.r + shl64(j, p.d), p.e + extra, p.s + shl64(j, p.e)});
    }
    std::sort(out.begin(), out.end(), piece_order);
    return out;
}

// Extensional equality via refinement to the common depth. Cross-checked in
// the tests against canonical-form identity; both must agree.
inline bool equals(const dyadic_pinj &f, const dyadic_pinj &g) {
    u64 depth = 0;
    for (const piece &p : f.pieces())
        depth = std::max(depth, p.d);
    for (const piece &p : g.pieces())
        depth = std::max(depth, p.d);
    return refine_to_depth(f, depth) == refine_to_depth(g, depth);
}

// --- the named generators ---------------------------------------------

inline const dyadic_pinj &gen_p() {
    static const dyadic_pinj v = dyadic_pinj::single(piece{1, 0, 0, 0});
    return v;
}
inline const dyadic_pinj &gen_q() {
    static const dyadic_pinj v = dyadic_pinj::single(piece{1, 1, 0, 0});
    return v;
}
inline const dyadic_pinj &gen_p_dag() {
    static const dyadic_pinj v = dyadic_pinj::single(piece{0, 0, 1, 0});
    return v;
}
inline const dyadic_pinj &gen_q_dag() {
    static const dyadic_pinj v = dyadic_pinj::single(piece{0, 0, 1, 1});
    return v;
}

// symmetry of the dyadic tensor: sigma = p# q \/ q# p, i.e. 2n <-> 2n+1
inline const dyadic_pinj &gen_sigma() {
    static const dyadic_pinj v =
        union_disjoint(compose(gen_p_dag(), gen_q()), compose(gen_q_dag(), gen_p()));
    return v;
}

// associator: tau = (p#)^2 p \/ p# q# p q \/ q# q^2
inline const dyadic_pinj &gen_tau() {
    static const dyadic_pinj v = [] {
        dyadic_pinj a = compose(gen_p_dag(), compose(gen_p_dag(), gen_p()));
        dyadic_pinj b =
            compose(gen_p_dag(), compose(gen_q_dag(), compose(gen_p(), gen_q())));
        dyadic_pinj c = compose(gen_q_dag(), compose(gen_q(), gen_q()));
        return union_disjoint(a, union_disjoint(b, c));
    }();
    return v;
}

inline const dyadic_pinj &gen_tau_inv() {
    static const dyadic_pinj v = dagger(gen_tau());
    return v;
}

inline std::optional<dyadic_pinj> generator_by_name(const std::string &name) {
    if (name == "p") return gen_p();
    if (name == "q") return gen_q();
    if (name == "P") return gen_p_dag();
    if (name == "Q") return gen_q_dag();
    if (name == "s") return gen_sigma();
    if (name == "t") return gen_tau();
    if (name == "t'") return gen_tau_inv();
    if (name == "id") return dyadic_pinj::one();
    if (name == "zero") return dyadic_pinj::zero();
    return std::nullopt;
}

} // namespace goi
