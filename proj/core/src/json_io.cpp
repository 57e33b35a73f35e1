#include "ordlab/json_io.hpp"

namespace ordlab {

Json nadic_json(const NAdic& x) {
    return Json{{"m", x.mantissa().str()}, {"k", x.exponent()}};
}

NAdic nadic_from_json(const Json& j, int n) {
    if (j.is_string()) return NAdic::parse(j.get<std::string>(), n);
    return NAdic(BigInt(j.at("m").get<std::string>()), j.at("k").get<long long>(), n);
}

Json element_json(const GroupElement& g) {
    return Json{{"r", g.r.to_string()}, {"s", g.s}};
}

GroupElement element_from_json(const Json& j, int n) {
    return {nadic_from_json(j.at("r"), n), j.at("s").get<long long>()};
}

Json rat_json(const Rat& x) {
    return Json{{"p", numerator(x).str()}, {"q", denominator(x).str()}};
}

Json base_point_json(const BasePoint& p) {
    if (const Rat* r = std::get_if<Rat>(&p))
        return Json{{"kind", "rat"}, {"p", numerator(*r).str()}, {"q", denominator(*r).str()}};
    if (const Quadratic* q = std::get_if<Quadratic>(&p))
        return Json{{"kind", "quad"},
                    {"u", rat_to_string(q->u)},
                    {"v", rat_to_string(q->v)},
                    {"d", q->d.str()}};
    const DigitStream& st = std::get<DigitStream>(p);
    return Json{{"kind", "stream"}, {"ref", st.ref}};
}

namespace {

BasePoint stream_from_ref(const std::string& ref, int n, int budget) {
    if (ref.rfind("sqrt:", 0) == 0)
        return sqrt_digit_stream(BigInt(ref.substr(5)), n, budget);
    if (ref.rfind("rat:", 0) == 0)
        return rational_digit_stream(parse_rat(ref.substr(4)), n, budget);
    throw Error("unknown stream ref '" + ref + "' (expected sqrt:<d> or rat:<p/q>)");
}

} // namespace

BasePoint base_point_from_json(const Json& j, int n, int budget) {
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "rat")
        return Rat(BigInt(j.at("p").get<std::string>()), BigInt(j.at("q").get<std::string>()));
    if (kind == "quad")
        return Quadratic(parse_rat(j.at("u").get<std::string>()),
                         parse_rat(j.at("v").get<std::string>()),
                         BigInt(j.at("d").get<std::string>()));
    if (kind == "stream") return stream_from_ref(j.at("ref").get<std::string>(), n, budget);
    throw Error("unknown base point kind '" + kind + "'");
}

BasePoint parse_base_point(const std::string& text, int n, int budget) {
    auto colon = text.find(':');
    if (colon == std::string::npos)
        throw Error("bad base point '" + text + "': expected kind:value");
    std::string kind = text.substr(0, colon);
    std::string body = text.substr(colon + 1);
    if (kind == "rat") return parse_rat(body);
    if (kind == "quad") {
        auto c1 = body.find(',');
        auto c2 = body.find(',', c1 == std::string::npos ? c1 : c1 + 1);
        if (c1 == std::string::npos || c2 == std::string::npos)
            throw Error("bad quad literal '" + body + "': expected u,v,d");
        return Quadratic(parse_rat(body.substr(0, c1)),
                         parse_rat(body.substr(c1 + 1, c2 - c1 - 1)),
                         BigInt(body.substr(c2 + 1)));
    }
    if (kind == "nadic") return NAdic::parse(body, n).to_rat();
    if (kind == "stream") return stream_from_ref(body, n, budget);
    throw Error("unknown base point kind '" + kind + "'");
}

Json cone_json(const ConeDescriptor& c) {
    Json j{{"tag", tag_name(c.tag)}};
    if (c.base) j["base"] = base_point_json(*c.base);
    return j;
}

ConeDescriptor cone_from_json(const Json& j, int n, int budget) {
    auto tag = tag_from_name(j.at("tag").get<std::string>());
    if (!tag) throw Error("unknown cone tag '" + j.at("tag").get<std::string>() + "'");
    std::optional<BasePoint> base;
    if (j.contains("base")) base = base_point_from_json(j.at("base"), n, budget);
    return make_cone(*tag, std::move(base));
}

namespace {

Json digit_run_json(const std::vector<int>& digs, int base) {
    if (base <= 10) {
        std::string s;
        for (int d : digs) s += static_cast<char>('0' + d);
        return Json(s);
    }
    Json arr = Json::array();
    for (int d : digs) arr.push_back(d);
    return arr;
}

} // namespace

Json digit_word_json(const DigitWord& w) {
    Json j{{"pre", digit_run_json(w.pre, w.base)}};
    if (w.truncated) {
        j["truncated"] = true;
    } else {
        j["period"] = digit_run_json(w.period, w.base);
    }
    return j;
}

Json stage_json(const RealizationStage& st) {
    Json arr = Json::array();
    for (std::size_t i = 0; i < st.elems.size(); ++i) {
        arr.push_back(Json{{"element", element_json(st.elems[i])},
                           {"word", print_word(st.elems[i])},
                           {"tag", rat_to_string(st.tags[i])}});
    }
    return arr;
}

} // namespace ordlab
