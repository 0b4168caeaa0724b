#pragma once

// Seeded word generation and an independent pointwise evaluator. The
// pointwise path computes straight from the defining case formulas of the
// generators, never through pieces, so it can arbitrate for the symbolic
// engine.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "expr.hpp"
#include "pinj.hpp"
#include "window.hpp"

namespace goi {

struct splitmix64 {
    u64 state;
    explicit splitmix64(u64 seed) : state(seed) {}
    u64 next() {
        u64 z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    u64 below(u64 n) { return next() % n; }
};

// random word over {p, q, P, Q, s, t, t', id} under '.' and '*'
inline expr_ptr random_word(splitmix64 &rng, u64 atoms) {
    static const char *names[] = {"p", "q", "P", "Q", "s", "t", "t'", "id"};
    if (atoms <= 1)
        return expr::gen(names[rng.below(8)]);
    u64 left = 1 + rng.below(atoms - 1);
    expr_ptr l = random_word(rng, left);
    expr_ptr r = random_word(rng, atoms - left);
    return expr::binary(rng.below(4) == 0 ? expr_op::star : expr_op::dot, l, r);
}

// the same closed forms the tests quote, evaluated one point at a time
inline std::optional<u64> pointwise_generator(const std::string &name, u64 n) {
    if (name == "p")
        return n % 2 == 0 ? std::optional<u64>(n / 2) : std::nullopt;
    if (name == "q")
        return n % 2 == 1 ? std::optional<u64>((n - 1) / 2) : std::nullopt;
    if (name == "P")
        return 2 * n;
    if (name == "Q")
        return 2 * n + 1;
    if (name == "s")
        return n % 2 == 0 ? n + 1 : n - 1;
    if (name == "t") {
        if (n % 2 == 0)
            return 2 * n;
        if (n % 4 == 1)
            return n + 1;
        return (n - 1) / 2;
    }
    if (name == "t'") {
        if (n % 4 == 0)
            return n / 2;
        if (n % 4 == 2)
            return n - 1;
        return 2 * n + 1;
    }
    if (name == "id")
        return n;
    if (name == "zero")
        return std::nullopt;
    throw error("no pointwise form for generator: " + name);
}

// One point of a value through the box wiring, using only the operand
// endomorphisms. Input parity picks the rail, the next bit picks the
// operand; the output is re-coded from the operand's own rail choice.
inline std::optional<u64> box_apply_pointwise(const dyadic_pinj &f, const dyadic_pinj &g,
                                              u64 n) {
    u64 inner = n >> 1;
    bool g_slot = (inner & 1) != 0;
    u64 arg = ((inner >> 1) << 1) | (n & 1);
    auto w = (g_slot ? g : f).apply(arg);
    if (!w)
        return std::nullopt;
    if (!g_slot)
        return *w % 2 == 0 ? 2 * *w : 2 * *w - 1;
    return *w % 2 == 0 ? 2 * *w + 2 : 2 * *w + 1;
}

// undefined-propagating evaluation; supports the '.'/'*' fragment
inline std::optional<u64> pointwise_apply(const expr_ptr &e, u64 n) {
    switch (e->op) {
    case expr_op::generator:
        return pointwise_generator(e->name, n);
    case expr_op::dot: {
        auto inner = pointwise_apply(e->rhs, n);
        if (!inner)
            return std::nullopt;
        return pointwise_apply(e->lhs, *inner);
    }
    case expr_op::star: {
        if (n % 2 == 0) {
            auto v = pointwise_apply(e->lhs, n / 2);
            return v ? std::optional<u64>(2 * *v) : std::nullopt;
        }
        auto v = pointwise_apply(e->rhs, (n - 1) / 2);
        return v ? std::optional<u64>(2 * *v + 1) : std::nullopt;
    }
    default:
        throw error("pointwise evaluation only covers the '.'/'*' fragment");
    }
}

struct oracle_outcome {
    enum class kind { value, undefined, no_information } k;
    u64 v = 0;
};

// Independent evaluation of one point. The square-level operators are walked
// by token simulation over the symbolic values of their operands, so the
// execution-formula path itself is never reused. Points whose walk leaves
// the window or step budget carry no information.
inline oracle_outcome oracle_apply(const expr_ptr &e, u64 n, u64 window, u64 steps) {
    using kind = oracle_outcome::kind;
    auto lift = [](std::optional<u64> v) {
        return v ? oracle_outcome{kind::value, *v} : oracle_outcome{kind::undefined, 0};
    };
    try {
        switch (e->op) {
        case expr_op::generator:
            return lift(pointwise_generator(e->name, n));
        case expr_op::dot: {
            oracle_outcome inner = oracle_apply(e->rhs, n, window, steps);
            if (inner.k != kind::value)
                return inner;
            return oracle_apply(e->lhs, inner.v, window, steps);
        }
        case expr_op::star: {
            oracle_outcome v = n % 2 == 0 ? oracle_apply(e->lhs, n / 2, window, steps)
                                          : oracle_apply(e->rhs, (n - 1) / 2, window, steps);
            if (v.k != kind::value)
                return v;
            return oracle_outcome{kind::value, n % 2 == 0 ? 2 * v.v : 2 * v.v + 1};
        }
        case expr_op::converse:
            // the converse subtree is treated as an opaque symbolic value
            return lift(dagger(evaluate(e->lhs)).apply(n));
        case expr_op::circ:
        case expr_op::vert: {
            rook_square g = square_from_endo(evaluate(e->lhs));
            rook_square f = square_from_endo(evaluate(e->rhs));
            paste_mode mode =
                e->op == expr_op::circ ? paste_mode::horizontal : paste_mode::vertical;
            sim_outcome out = simulate_square_compose(g, f, mode, n, window, steps);
            switch (out.kind) {
            case sim_kind::value: return oracle_outcome{kind::value, out.v};
            case sim_kind::undefined: return oracle_outcome{kind::undefined, 0};
            default: return oracle_outcome{kind::no_information, 0};
            }
        }
        case expr_op::box:
            return lift(box_apply_pointwise(evaluate(e->lhs), evaluate(e->rhs), n));
        }
    } catch (const depth_exceeded_error &) {
        return oracle_outcome{kind::no_information, 0};
    }
    throw error("malformed expression node");
}

} // namespace goi
