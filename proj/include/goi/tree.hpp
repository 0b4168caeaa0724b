#pragma once

// Tree-shaped objects over the naturals with a strict unit, and the
// strictification functor that squeezes every tree-typed arrow into a
// single dyadic partial injection (its code).
//
// Elements of a tree are addressed by their branch path, least significant
// bit first: in Node(A, B) the A side occupies the evens and the B side the
// odds. The standalone code of a tree translates from the right-comb
// numbering of its leaves to this address numbering; with that convention
// the code of Leaf and of Node(Leaf, Leaf) are both the identity, and the
// codes of the two three-leaf trees differ by the associator.

#include <cstdint>
#include <memory>
#include <vector>

#include "matrix.hpp"
#include "pinj.hpp"

namespace goi {

class object_tree;
using tree_ptr = std::shared_ptr<const object_tree>;

class object_tree {
  public:
    enum class kind { unit, leaf, node };

    static tree_ptr unit() {
        static const tree_ptr t{new object_tree(kind::unit, nullptr, nullptr)};
        return t;
    }
    static tree_ptr leaf() {
        static const tree_ptr t{new object_tree(kind::leaf, nullptr, nullptr)};
        return t;
    }
    static tree_ptr node(tree_ptr l, tree_ptr r) {
        // the unit is strict: it only ever appears as the whole tree
        if (l->k_ == kind::unit)
            return r;
        if (r->k_ == kind::unit)
            return l;
        return tree_ptr{new object_tree(kind::node, std::move(l), std::move(r))};
    }

    kind k() const { return k_; }
    bool is_unit() const { return k_ == kind::unit; }
    bool is_leaf() const { return k_ == kind::leaf; }
    const tree_ptr &left() const { return l_; }
    const tree_ptr &right() const { return r_; }

    u64 leaf_count() const {
        switch (k_) {
        case kind::unit: return 0;
        case kind::leaf: return 1;
        case kind::node: return l_->leaf_count() + r_->leaf_count();
        }
        return 0;
    }

  private:
    object_tree(kind k, tree_ptr l, tree_ptr r) : k_(k), l_(std::move(l)), r_(std::move(r)) {}
    kind k_;
    tree_ptr l_, r_;
};

inline bool tree_equal(const tree_ptr &a, const tree_ptr &b) {
    if (a.get() == b.get())
        return true;
    if (a->k() != b->k())
        return false;
    if (a->k() != object_tree::kind::node)
        return true;
    return tree_equal(a->left(), b->left()) && tree_equal(a->right(), b->right());
}

namespace detail {

struct leaf_class {
    u64 depth;
    u64 res;
};

inline void collect_addresses(const tree_ptr &t, u64 depth, u64 res,
                              std::vector<leaf_class> &out) {
    if (t->is_leaf()) {
        out.push_back(leaf_class{depth, res});
        return;
    }
    collect_addresses(t->left(), depth + 1, res, out);
    collect_addresses(t->right(), depth + 1, res | shl64(1, depth), out);
}

// right-comb numbering of k leaves: leaf j lives on 2^(j+1) m + (2^j - 1),
// except the last leaf which lives on 2^(k-1) m + (2^(k-1) - 1)
inline leaf_class comb_class(u64 j, u64 k) {
    if (j + 1 < k)
        return leaf_class{j + 1, mask64(j)};
    return leaf_class{k - 1, mask64(k - 1)};
}

} // namespace detail

// The code C_X : X -> N; C_Leaf = 1, C_{Node(A,B)} glues C_A and C_B through
// the pairing. Returned as the translation right-comb |-> address, one piece
// per leaf.
inline dyadic_pinj phi_code(const tree_ptr &t) {
    if (t->is_unit())
        throw unit_has_no_code_error{};
    std::vector<detail::leaf_class> addr;
    detail::collect_addresses(t, 0, 0, addr);
    u64 k = addr.size();
    if (k > depth_limit())
        throw depth_exceeded_error("tree has more leaves than the depth limit");
    std::vector<piece> ps;
    ps.reserve(k);
    for (u64 j = 0; j < k; ++j) {
        detail::leaf_class c = detail::comb_class(j, k);
        ps.push_back(piece{c.depth, c.res, addr[j].depth, addr[j].res});
    }
    return dyadic_pinj::from_pieces(std::move(ps));
}

inline dyadic_pinj phi_decode(const tree_ptr &t) { return dagger(phi_code(t)); }

// An arrow of the tree-typed category, carried by its code. Arrows touching
// the unit exist only at the unit itself (the formal scalar).
struct typed_arrow {
    tree_ptr src;
    tree_ptr tgt;
    dyadic_pinj code;

    typed_arrow(tree_ptr s, tree_ptr t, dyadic_pinj c)
        : src(std::move(s)), tgt(std::move(t)), code(std::move(c)) {
        if (src->is_unit() != tgt->is_unit())
            throw type_mismatch_error("no arrows between the unit and a tree");
    }

    bool is_unit_scalar() const { return src->is_unit(); }
};

inline bool typed_equal(const typed_arrow &f, const typed_arrow &g) {
    return tree_equal(f.src, g.src) && tree_equal(f.tgt, g.tgt) && f.code == g.code;
}

inline typed_arrow typed_identity(const tree_ptr &x) {
    return typed_arrow(x, x, dyadic_pinj::one());
}

inline typed_arrow typed_from_endo(const dyadic_pinj &f) {
    return typed_arrow(object_tree::leaf(), object_tree::leaf(), f);
}

inline typed_arrow typed_compose(const typed_arrow &g, const typed_arrow &f) {
    if (!tree_equal(f.tgt, g.src))
        throw type_mismatch_error("typed composition: target/source shapes differ");
    return typed_arrow(f.src, g.tgt, compose(g.code, f.code));
}

// strict unit; otherwise the code of a tensor is the star of the codes
inline typed_arrow typed_tensor(const typed_arrow &f, const typed_arrow &g) {
    if (f.is_unit_scalar())
        return g;
    if (g.is_unit_scalar())
        return f;
    return typed_arrow(object_tree::node(f.src, g.src), object_tree::node(f.tgt, g.tgt),
                       star_tensor(f.code, g.code));
}

inline typed_arrow typed_dagger(const typed_arrow &f) {
    return typed_arrow(f.tgt, f.src, dagger(f.code));
}

// canonical isomorphisms; their codes do not depend on the trees involved
inline typed_arrow typed_symmetry(const tree_ptr &a, const tree_ptr &b) {
    return typed_arrow(object_tree::node(a, b), object_tree::node(b, a), gen_sigma());
}

inline typed_arrow typed_assoc(const tree_ptr &a, const tree_ptr &b, const tree_ptr &c) {
    return typed_arrow(object_tree::node(a, object_tree::node(b, c)),
                       object_tree::node(object_tree::node(a, b), c), gen_tau());
}

inline typed_arrow typed_assoc_inv(const tree_ptr &a, const tree_ptr &b, const tree_ptr &c) {
    return typed_arrow(object_tree::node(object_tree::node(a, b), c),
                       object_tree::node(a, object_tree::node(b, c)), gen_tau_inv());
}

// tracing over the unit is the identity on homsets
inline typed_arrow typed_trace_over_unit(const typed_arrow &f) { return f; }

} // namespace goi
