#pragma once

// The word algebra over the named generators: one set of elements, two
// compositions and two tensors. Grammar (loosest to tightest):
//
//   expr    := tensor (('.' | 'o' | 'g') tensor)*      left associative
//   tensor  := postfix (('*' | '#') postfix)*          left associative
//   postfix := atom '~'*                               converse
//   atom    := generator | '(' expr ')'
//
// Generators: p q P Q s t t' D V id zero S T T' x0 x1 ...
// '.' composes in the base monoid, 'o' through horizontal square pasting,
// 'g' through vertical pasting; '*' is the base tensor, '#' the square one.
// 'g . f' and 'g o f' both mean "g after f".

#include <cctype>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "algebra.hpp"
#include "errors.hpp"
#include "matrix.hpp"
#include "pinj.hpp"
#include "square.hpp"

namespace goi {

enum class expr_op { generator, converse, dot, circ, vert, star, box };

struct expr;
using expr_ptr = std::shared_ptr<const expr>;

struct expr {
    expr_op op;
    std::string name;       // generator name, for expr_op::generator
    expr_ptr lhs, rhs;      // rhs unused for converse

    static expr_ptr gen(std::string n) {
        return std::make_shared<expr>(expr{expr_op::generator, std::move(n), nullptr, nullptr});
    }
    static expr_ptr unary(expr_op o, expr_ptr e) {
        return std::make_shared<expr>(expr{o, {}, std::move(e), nullptr});
    }
    static expr_ptr binary(expr_op o, expr_ptr l, expr_ptr r) {
        return std::make_shared<expr>(expr{o, {}, std::move(l), std::move(r)});
    }
};

// --- parsing --------------------------------------------------------------

namespace detail {

struct token {
    enum class kind { word, dot, circ, vert, star, box, tilde, lparen, rparen, end };
    kind k;
    std::string text;
    std::size_t pos;
};

inline std::vector<token> lex(const std::string &text) {
    std::vector<token> out;
    std::size_t i = 0;
    while (i < text.size()) {
        char ch = text[i];
        if (std::isspace(static_cast<unsigned char>(ch))) {
            ++i;
            continue;
        }
        if (std::isalnum(static_cast<unsigned char>(ch))) {
            std::size_t start = i;
            while (i < text.size() &&
                   (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '\''))
                ++i;
            std::string word = text.substr(start, i - start);
            if (word == "o")
                out.push_back(token{token::kind::circ, word, start});
            else if (word == "g")
                out.push_back(token{token::kind::vert, word, start});
            else
                out.push_back(token{token::kind::word, word, start});
            continue;
        }
        token::kind k;
        switch (ch) {
        case '.': k = token::kind::dot; break;
        case '*': k = token::kind::star; break;
        case '#': k = token::kind::box; break;
        case '~': k = token::kind::tilde; break;
        case '(': k = token::kind::lparen; break;
        case ')': k = token::kind::rparen; break;
        default:
            throw parse_error(i, "an operator '. o g * #' , '~', parentheses or a generator");
        }
        out.push_back(token{k, std::string(1, ch), i});
        ++i;
    }
    out.push_back(token{token::kind::end, "", text.size()});
    return out;
}

inline bool known_generator(const std::string &w) {
    if (generator_by_name(w))
        return true;
    if (w == "D" || w == "V" || w == "S" || w == "T" || w == "T'")
        return true;
    if (w.size() >= 2 && w[0] == 'x') {
        for (std::size_t i = 1; i < w.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(w[i])))
                return false;
        return true;
    }
    return false;
}

class parser {
  public:
    explicit parser(const std::string &text) : toks_(lex(text)) {}

    expr_ptr parse() {
        expr_ptr e = composition();
        if (peek().k != token::kind::end)
            throw parse_error(peek().pos, "end of input or a composition operator");
        return e;
    }

  private:
    const token &peek() const { return toks_[i_]; }
    token take() { return toks_[i_++]; }

    expr_ptr composition() {
        expr_ptr e = tensor();
        while (true) {
            token::kind k = peek().k;
            if (k == token::kind::dot || k == token::kind::circ || k == token::kind::vert) {
                take();
                expr_ptr r = tensor();
                expr_op op = k == token::kind::dot    ? expr_op::dot
                             : k == token::kind::circ ? expr_op::circ
                                                      : expr_op::vert;
                e = expr::binary(op, e, r);
            } else {
                return e;
            }
        }
    }

    expr_ptr tensor() {
        expr_ptr e = postfix();
        while (peek().k == token::kind::star || peek().k == token::kind::box) {
            token::kind k = take().k;
            expr_ptr r = postfix();
            e = expr::binary(k == token::kind::star ? expr_op::star : expr_op::box, e, r);
        }
        return e;
    }

    expr_ptr postfix() {
        expr_ptr e = atom();
        while (peek().k == token::kind::tilde) {
            take();
            e = expr::unary(expr_op::converse, e);
        }
        return e;
    }

    expr_ptr atom() {
        const token &t = peek();
        if (t.k == token::kind::lparen) {
            take();
            expr_ptr e = composition();
            if (peek().k != token::kind::rparen)
                throw parse_error(peek().pos, "')'");
            take();
            return e;
        }
        if (t.k == token::kind::word) {
            if (!known_generator(t.text))
                throw parse_error(t.pos, "a generator (p q P Q s t t' D V id zero S T T' xN)");
            return expr::gen(take().text);
        }
        throw parse_error(t.pos, "a generator or '('");
    }

    std::vector<token> toks_;
    std::size_t i_ = 0;
};

} // namespace detail

inline expr_ptr parse(const std::string &text) { return detail::parser(text).parse(); }

// canonical printing; parse(print(e)) is structurally identical to e
inline std::string print(const expr_ptr &e) {
    auto wrap = [](const std::string &s, bool need) { return need ? "(" + s + ")" : s; };
    switch (e->op) {
    case expr_op::generator:
        return e->name;
    case expr_op::converse: {
        bool need = e->lhs->op != expr_op::generator && e->lhs->op != expr_op::converse;
        return wrap(print(e->lhs), need) + "~";
    }
    case expr_op::star:
    case expr_op::box: {
        auto needs = [](const expr_ptr &s, bool right) {
            // tensors are printed left associated; compositions always bracket
            if (s->op == expr_op::dot || s->op == expr_op::circ || s->op == expr_op::vert)
                return true;
            if (right && (s->op == expr_op::star || s->op == expr_op::box))
                return true;
            return false;
        };
        const char *sym = e->op == expr_op::star ? " * " : " # ";
        return wrap(print(e->lhs), needs(e->lhs, false)) + sym +
               wrap(print(e->rhs), needs(e->rhs, true));
    }
    case expr_op::dot:
    case expr_op::circ:
    case expr_op::vert: {
        auto needs = [](const expr_ptr &s, bool right) {
            return right &&
                   (s->op == expr_op::dot || s->op == expr_op::circ || s->op == expr_op::vert);
        };
        const char *sym = e->op == expr_op::dot ? " . " : e->op == expr_op::circ ? " o " : " g ";
        return wrap(print(e->lhs), needs(e->lhs, false)) + sym +
               wrap(print(e->rhs), needs(e->rhs, true));
    }
    }
    return {};
}

inline dyadic_pinj generator_value(const std::string &name) {
    if (auto g = generator_by_name(name))
        return *g;
    if (name == "D")
        return delta_split();
    if (name == "V")
        return nabla_merge();
    if (name == "S")
        return star_tensor(gen_sigma(), gen_sigma());
    if (name == "T")
        return star_tensor(gen_tau(), gen_tau_inv());
    if (name == "T'")
        return star_tensor(gen_tau_inv(), gen_tau());
    if (name.size() >= 2 && name[0] == 'x')
        return thompson_x(std::stoull(name.substr(1)));
    throw error("unknown generator: " + name);
}

struct trace_divergence_error_at : trace_divergence_error {
    trace_divergence_error_at(u64 iterations, std::string subexpr)
        : trace_divergence_error(iterations), subexpression(std::move(subexpr)) {}
    std::string subexpression;
};

// Evaluation in the base monoid; the square-level operations route through
// rook squares and come back via the matrix correspondence.
inline dyadic_pinj evaluate(const expr_ptr &e, u64 max_iter = default_max_iter) {
    try {
        switch (e->op) {
        case expr_op::generator:
            return generator_value(e->name);
        case expr_op::converse:
            return dagger(evaluate(e->lhs, max_iter));
        case expr_op::dot:
            return compose(evaluate(e->lhs, max_iter), evaluate(e->rhs, max_iter));
        case expr_op::star:
            return star_tensor(evaluate(e->lhs, max_iter), evaluate(e->rhs, max_iter));
        case expr_op::circ:
            return endo_from_square(compose_int(square_from_endo(evaluate(e->lhs, max_iter)),
                                                square_from_endo(evaluate(e->rhs, max_iter)),
                                                max_iter));
        case expr_op::vert:
            return endo_from_square(compose_goi(square_from_endo(evaluate(e->lhs, max_iter)),
                                                square_from_endo(evaluate(e->rhs, max_iter)),
                                                max_iter));
        case expr_op::box:
            return endo_from_square(box_tensor(square_from_endo(evaluate(e->lhs, max_iter)),
                                               square_from_endo(evaluate(e->rhs, max_iter))));
        }
    } catch (trace_divergence_error_at &) {
        throw; // already carries the innermost offender
    } catch (trace_divergence_error &div) {
        throw trace_divergence_error_at(div.iterations, print(e));
    }
    throw error("malformed expression node");
}

// true when the word uses only split, merge and the pasting composition,
// i.e. lives in the bicyclic fragment
inline bool is_bicyclic_word(const expr_ptr &e) {
    switch (e->op) {
    case expr_op::generator:
        return e->name == "D" || e->name == "V";
    case expr_op::circ:
        return is_bicyclic_word(e->lhs) && is_bicyclic_word(e->rhs);
    default:
        return false;
    }
}

inline void bicyclic_nf_of_expr(const expr_ptr &e, bicyclic_nf &acc) {
    // outermost-first fold matches the composition order
    if (e->op == expr_op::generator) {
        acc = bicyclic_compose_nf(acc, e->name == "D" ? bicyclic_nf{1, 0} : bicyclic_nf{0, 1});
        return;
    }
    bicyclic_nf_of_expr(e->lhs, acc);
    bicyclic_nf_of_expr(e->rhs, acc);
}

} // namespace goi
