#pragma once

// JSON wire formats:
//   map:        {"pieces":[{"d":..,"r":..,"e":..,"s":..}, ...]}   canonical order
//   square:     {"src":"II"|"NN","tgt":"II"|"NN","a":map,"b":map,"c":map,"d":map}
//   law report: {"suite":..,"laws":[{"name":..,"status":..,"witness":..,"ms":..}, ...]}
// Round-trips are bit exact on canonical values.

#include <string>
#include <vector>

#include <json.hpp>

#include "laws.hpp"
#include "pinj.hpp"
#include "square.hpp"

namespace goi {

using nlohmann::json;

inline json to_json(const dyadic_pinj &f) {
    json pieces = json::array();
    for (const piece &p : f.pieces())
        pieces.push_back(json{{"d", p.d}, {"r", p.r}, {"e", p.e}, {"s", p.s}});
    return json{{"pieces", pieces}};
}

inline dyadic_pinj pinj_from_json(const json &j) {
    if (!j.is_object() || !j.contains("pieces") || !j["pieces"].is_array())
        throw error("expected an object with a \"pieces\" array");
    std::vector<piece> ps;
    for (const json &e : j["pieces"]) {
        if (!e.contains("d") || !e.contains("r") || !e.contains("e") || !e.contains("s"))
            throw error("piece needs fields d, r, e, s");
        ps.push_back(piece{e["d"].get<u64>(), e["r"].get<u64>(), e["e"].get<u64>(),
                           e["s"].get<u64>()});
    }
    return dyadic_pinj::from_pieces(std::move(ps));
}

inline std::string object_tag(const int_object &o) {
    if (o.is_unit())
        return "II";
    if (o.first->is_leaf() && o.second->is_leaf())
        return "NN";
    throw type_mismatch_error("only II and NN objects serialize");
}

inline int_object object_from_tag(const std::string &tag) {
    if (tag == "II")
        return int_object::unit();
    if (tag == "NN")
        return int_object::nn();
    throw error("unknown object tag: " + tag);
}

inline json to_json(const rook_square &s) {
    return json{{"src", object_tag(s.src)}, {"tgt", object_tag(s.tgt)},
                {"a", to_json(s.a)},        {"b", to_json(s.b)},
                {"c", to_json(s.c)},        {"d", to_json(s.d)}};
}

inline rook_square square_from_json(const json &j) {
    rook_square s{object_from_tag(j.at("src").get<std::string>()),
                  object_from_tag(j.at("tgt").get<std::string>()),
                  pinj_from_json(j.at("a")), pinj_from_json(j.at("b")),
                  pinj_from_json(j.at("c")), pinj_from_json(j.at("d"))};
    if (!is_rook_square(s))
        throw error("square violates the rook condition");
    return s;
}

inline json to_json(const law_report &rep) {
    json laws = json::array();
    for (const law_result &l : rep.laws) {
        const char *st = l.status == law_status::holds    ? "holds"
                         : l.status == law_status::fails ? "fails"
                                                         : "diverged";
        json entry{{"name", l.name}, {"status", st}, {"ms", l.millis}};
        if (!l.witness.empty())
            entry["witness"] = l.witness;
        laws.push_back(std::move(entry));
    }
    return json{{"suite", rep.suite}, {"laws", laws}};
}

} // namespace goi
