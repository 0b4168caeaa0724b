#pragma once

// Brute-force verification layer: finite-window truncations and
// token-passing simulation of the trace and of square pasting. Nothing here
// shares code with the symbolic path; that is the point.

#include <cstdint>
#include <vector>

#include "matrix.hpp"
#include "pinj.hpp"
#include "square.hpp"

namespace goi {

inline constexpr u64 default_window = u64{1} << 14;
inline constexpr u64 default_step_bound = u64{1} << 10;

enum class cell_kind { value, undefined, out_of_window };

struct window_cell {
    cell_kind kind = cell_kind::undefined;
    u64 v = 0;
    friend bool operator==(const window_cell &, const window_cell &) = default;
};

struct window_map {
    u64 size = 0;
    std::vector<window_cell> cells;
};

inline window_map truncate(const dyadic_pinj &f, u64 n) {
    window_map w;
    w.size = n;
    w.cells.reserve(n);
    for (u64 x = 0; x < n; ++x) {
        auto v = f.apply(x);
        if (!v)
            w.cells.push_back(window_cell{cell_kind::undefined, 0});
        else if (*v >= n)
            w.cells.push_back(window_cell{cell_kind::out_of_window, *v});
        else
            w.cells.push_back(window_cell{cell_kind::value, *v});
    }
    return w;
}

enum class sim_kind { value, undefined, out_of_window, steps_exceeded };

struct sim_outcome {
    sim_kind kind = sim_kind::undefined;
    u64 v = 0;
    friend bool operator==(const sim_outcome &, const sim_outcome &) = default;
};

namespace detail {

// Exactly one of the two candidate edges may be defined at the token; two
// defined edges expose a non-rook input and are a hard error.
inline int pick_edge(const dyadic_pinj &first, const dyadic_pinj &second, u64 x) {
    bool a = first.apply(x).has_value();
    bool b = second.apply(x).has_value();
    if (a && b)
        throw not_disjoint_error("token step: column domains", 0, x);
    if (a)
        return 0;
    if (b)
        return 1;
    return -1;
}

} // namespace detail

// Bounce a token through the feedback loop of a matrix: at the main
// component f00 exits, f10 feeds back; at the loop component f01 exits,
// f11 keeps looping.
inline sim_outcome simulate_trace(const matrix2x2 &m, u64 x, u64 window, u64 step_bound) {
    bool looping = false;
    u64 val = x;
    for (u64 step = 0; step <= step_bound; ++step) {
        if (val >= window)
            return sim_outcome{sim_kind::out_of_window, val};
        const dyadic_pinj &exit_edge = looping ? m.f01 : m.f00;
        const dyadic_pinj &feed_edge = looping ? m.f11 : m.f10;
        int pick = detail::pick_edge(exit_edge, feed_edge, val);
        if (pick < 0)
            return sim_outcome{sim_kind::undefined, 0};
        u64 next = *(pick == 0 ? exit_edge : feed_edge).apply(val);
        if (pick == 0)
            return next < window ? sim_outcome{sim_kind::value, next}
                                 : sim_outcome{sim_kind::out_of_window, next};
        looping = true;
        val = next;
    }
    return sim_outcome{sim_kind::steps_exceeded, 0};
}

enum class paste_mode { horizontal, vertical };

// Token walk over two glued endomorphism squares. Inputs and outputs are
// parity-coded the same way the matrix of an endomorphism is: even values
// ride the first component, odd the second.
inline sim_outcome simulate_square_compose(const rook_square &g, const rook_square &f,
                                           paste_mode mode, u64 n, u64 window,
                                           u64 step_bound) {
    // state: which square (0 = f, 1 = g), which input port (0 = top, 1 = bottom)
    int sq = 0, port = 0;
    u64 val = 0;
    if (mode == paste_mode::horizontal) {
        sq = n % 2 == 0 ? 0 : 1;     // evens enter f's top, odds enter g's bottom
        port = n % 2 == 0 ? 0 : 1;
    } else {
        sq = n % 2 == 0 ? 1 : 0;     // evens enter the top square, odds the bottom one
        port = n % 2 == 0 ? 0 : 1;
    }
    val = n / 2;
    for (u64 step = 0; step <= step_bound; ++step) {
        if (val >= window)
            return sim_outcome{sim_kind::out_of_window, val};
        const rook_square &cur = sq == 0 ? f : g;
        const dyadic_pinj &along = port == 0 ? cur.a : cur.b; // towards the square's Y
        const dyadic_pinj &across = port == 0 ? cur.c : cur.d; // towards the square's U
        int pick = detail::pick_edge(along, across, val);
        if (pick < 0)
            return sim_outcome{sim_kind::undefined, 0};
        u64 next = *(pick == 0 ? along : across).apply(val);
        if (mode == paste_mode::horizontal) {
            // f's Y feeds g's top input; g's U feeds f's bottom input;
            // g's Y exits even, f's U exits odd
            if (sq == 0 && pick == 0) {
                sq = 1; port = 0; val = next;
            } else if (sq == 1 && pick == 1) {
                sq = 0; port = 1; val = next;
            } else {
                u128 out = u128{next} * 2 + (pick == 0 ? 0 : 1);
                return out < window ? sim_outcome{sim_kind::value, static_cast<u64>(out)}
                                    : sim_outcome{sim_kind::out_of_window, next};
            }
        } else {
            // g is on top: g's U feeds f's top input, f's Y feeds g's bottom
            // input; g's Y exits even, f's U exits odd
            if (sq == 1 && pick == 1) {
                sq = 0; port = 0; val = next;
            } else if (sq == 0 && pick == 0) {
                sq = 1; port = 1; val = next;
            } else {
                u128 out = u128{next} * 2 + (pick == 0 ? 0 : 1);
                return out < window ? sim_outcome{sim_kind::value, static_cast<u64>(out)}
                                    : sim_outcome{sim_kind::out_of_window, next};
            }
        }
    }
    return sim_outcome{sim_kind::steps_exceeded, 0};
}

} // namespace goi
