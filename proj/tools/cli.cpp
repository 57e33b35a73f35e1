#include "cli.hpp"

#include "ordlab/checks.hpp"
#include "ordlab/json_io.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <iostream>

namespace ordlab::cli {

namespace {

struct Session {
    int n = 2;
    int budget = kDefaultDigitBudget;
    std::uint64_t seed = 0;
    std::string format = "json";
};

std::string member_str(Member m) {
    switch (m) {
    case Member::yes: return "yes";
    case Member::no: return "no";
    default: return "unknown";
    }
}

ConeDescriptor cone_from_flags(const Session& ses, const std::string& tag_text,
                               const std::string& base_text) {
    auto tag = tag_from_name(tag_text);
    if (!tag) throw Error("unknown cone tag '" + tag_text + "'");
    std::optional<BasePoint> base;
    if (!base_text.empty()) base = parse_base_point(base_text, ses.n, ses.budget);
    return make_cone(*tag, std::move(base));
}

void emit(const Session& ses, std::ostream& out, const Json& j) {
    (void)ses;
    out << j.dump() << "\n";
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"ordlab - exact computations with the left orderings of BS(1,n)"};
    app.require_subcommand(1);

    Session ses;
    app.add_option("--n", ses.n, "group parameter n >= 2")->check(CLI::Range(2, 1 << 20));
    app.add_option("--budget", ses.budget, "digit budget for stream base points (>= 16)")
        ->check(CLI::Range(16, 1 << 20));
    app.add_option("--seed", ses.seed, "seed for randomized suites");
    app.add_option("--format", ses.format, "output format: json, csv or text")
        ->check(CLI::IsMember({"json", "csv", "text"}));

    int exit_code = 0;

    // normalize
    std::string norm_m;
    long long norm_k = 0;
    auto* c_norm = app.add_subcommand("normalize", "canonical form of m / n^k");
    c_norm->add_option("m", norm_m, "mantissa")->required();
    c_norm->add_option("k", norm_k, "exponent")->required();
    c_norm->callback([&] { emit(ses, out, nadic_json(NAdic(BigInt(norm_m), norm_k, ses.n))); });

    // mul
    std::vector<std::string> mul_words;
    auto* c_mul = app.add_subcommand("mul", "product of two words, in normal form");
    c_mul->add_option("words", mul_words, "two words")->expected(2);
    c_mul->callback([&] {
        GroupElement g = parse_word(mul_words[0], ses.n);
        GroupElement h = parse_word(mul_words[1], ses.n);
        emit(ses, out, element_json(mul(g, h)));
    });

    // parse
    std::string parse_text;
    auto* c_parse = app.add_subcommand("parse", "normal form of a word");
    c_parse->add_option("word", parse_text, "word over a, A, b, B")->required();
    c_parse->callback([&] { emit(ses, out, element_json(parse_word(parse_text, ses.n))); });

    // act
    std::string act_elem, act_point;
    auto* c_act = app.add_subcommand("act", "apply the affine action to a point");
    c_act->add_option("--elem", act_elem, "group element (word)")->required();
    c_act->add_option("--point", act_point, "point: nadic:…, rat:… or quad:…")->required();
    c_act->callback([&] {
        GroupElement g = parse_word(act_elem, ses.n);
        if (act_point.rfind("nadic:", 0) == 0) {
            NAdic x = NAdic::parse(act_point.substr(6), ses.n);
            emit(ses, out, nadic_json(act(g, x)));
            return;
        }
        BasePoint p = parse_base_point(act_point, ses.n, ses.budget);
        emit(ses, out, base_point_json(act(g, p)));
    });

    // fix
    std::string fix_elem;
    auto* c_fix = app.add_subcommand("fix", "fixed point of an element with s != 0");
    c_fix->add_option("--elem", fix_elem, "group element (word)")->required();
    c_fix->callback([&] {
        Rat f = fixed_point(parse_word(fix_elem, ses.n));
        emit(ses, out, rat_json(f));
    });

    // stab
    std::string stab_point;
    auto* c_stab = app.add_subcommand("stab", "stabilizer generator of a rational point");
    c_stab->add_option("--point", stab_point, "rational point rat:p/q")->required();
    c_stab->callback([&] {
        BasePoint p = parse_base_point(stab_point, ses.n, ses.budget);
        const Rat* x = std::get_if<Rat>(&p);
        if (!x) throw Error("stab: the point must be rational");
        emit(ses, out, element_json(stabilizer_generator(*x, ses.n)));
    });

    // orbit-eq
    std::string oe_from, oe_to;
    auto* c_oe = app.add_subcommand("orbit-eq", "orbit equivalence of two points");
    c_oe->add_option("--from", oe_from, "point")->required();
    c_oe->add_option("--to", oe_to, "point")->required();
    c_oe->callback([&] {
        BasePoint a = parse_base_point(oe_from, ses.n, ses.budget);
        BasePoint b = parse_base_point(oe_to, ses.n, ses.budget);
        auto w = orbit_witness(a, b, ses.n);
        Json j{{"equivalent", w.has_value()}};
        if (w) j["witness"] = element_json(*w);
        emit(ses, out, j);
    });

    // member
    std::string mem_tag, mem_base, mem_elem;
    auto* c_mem = app.add_subcommand("member", "cone membership of an element");
    c_mem->add_option("--cone", mem_tag, "cone tag")->required();
    c_mem->add_option("--base", mem_base, "base point (P/Q tags)");
    c_mem->add_option("--elem", mem_elem, "group element (word)")->required();
    c_mem->callback([&] {
        ConeDescriptor c = cone_from_flags(ses, mem_tag, mem_base);
        Member m = member(c, parse_word(mem_elem, ses.n));
        if (m == Member::unknown) {
            emit(ses, out, Json{{"member", "unknown"}});
            exit_code = 3;
        } else {
            emit(ses, out, Json{{"member", m == Member::yes}});
        }
    });

    // conjugate
    std::string cj_tag, cj_base, cj_elem;
    auto* c_cj = app.add_subcommand("conjugate", "image of a cone under the conjugation action");
    c_cj->add_option("--cone", cj_tag, "cone tag")->required();
    c_cj->add_option("--base", cj_base, "base point (P/Q tags)");
    c_cj->add_option("--elem", cj_elem, "group element (word)")->required();
    c_cj->callback([&] {
        ConeDescriptor c = cone_from_flags(ses, cj_tag, cj_base);
        emit(ses, out, cone_json(conjugate(c, parse_word(cj_elem, ses.n))));
    });

    // identify
    std::string id_tag, id_base;
    int id_radius = 8, id_precision = 4;
    auto* c_id = app.add_subcommand("identify", "classify a cone from its membership oracle");
    c_id->add_option("--cone", id_tag, "cone tag backing the oracle")->required();
    c_id->add_option("--base", id_base, "base point (P/Q tags)");
    c_id->add_option("--radius", id_radius, "query ball radius");
    c_id->add_option("--precision", id_precision, "grid depth for the cut bracket");
    c_id->callback([&] {
        ConeDescriptor c = cone_from_flags(ses, id_tag, id_base);
        IdentifyResult res = identify(oracle_of(c), id_radius, id_precision, ses.n);
        Json tags = Json::array();
        for (ConeTag t : res.tags) tags.push_back(tag_name(t));
        Json j{{"tags", tags}};
        if (res.exact_base) j["base"] = rat_to_string(*res.exact_base);
        if (res.interval)
            j["interval"] = Json{{"lo", rat_to_string(res.interval->first)},
                                 {"hi", rat_to_string(res.interval->second)}};
        j["note"] = res.note;
        emit(ses, out, j);
    });

    // check-cone
    std::string cc_tag, cc_base;
    int cc_radius = 5;
    auto* c_cc = app.add_subcommand("check-cone", "verify the cone axioms on a ball");
    c_cc->add_option("--cone", cc_tag, "cone tag")->required();
    c_cc->add_option("--base", cc_base, "base point (P/Q tags)");
    c_cc->add_option("--radius", cc_radius, "ball radius");
    c_cc->callback([&] {
        ConeDescriptor c = cone_from_flags(ses, cc_tag, cc_base);
        AxiomReport rep = cone_axioms_check(c, cc_radius, ses.n);
        Json j{{"pass", rep.pass}, {"checked", rep.checked}};
        if (!rep.violation.empty()) j["violation"] = rep.violation;
        if (rep.inconclusive) j["inconclusive"] = true;
        emit(ses, out, j);
        if (!rep.pass) exit_code = 1;
        else if (rep.inconclusive) exit_code = 3;
    });

    // realize
    std::string rz_tag, rz_base;
    std::size_t rz_stage = 16;
    auto* c_rz = app.add_subcommand("realize", "finite stage of the dynamical realization");
    c_rz->add_option("--cone", rz_tag, "cone tag")->required();
    c_rz->add_option("--base", rz_base, "base point (P/Q tags)");
    c_rz->add_option("--stage", rz_stage, "number of enumerated elements");
    c_rz->callback([&] {
        ConeDescriptor c = cone_from_flags(ses, rz_tag, rz_base);
        RealizationStage st = build_stage(c, rz_stage, ses.n);
        if (ses.format == "csv") {
            out << "index,word,r,s,tag\n";
            for (std::size_t i = 0; i < st.elems.size(); ++i)
                out << i << ",\"" << print_word(st.elems[i]) << "\"," << st.elems[i].r.to_string()
                    << "," << st.elems[i].s << "," << rat_to_string(st.tags[i]) << "\n";
        } else {
            emit(ses, out, stage_json(st));
        }
    });

    // reduce
    std::string rd_point;
    auto* c_rd = app.add_subcommand("reduce", "base-n digit word of the fractional part");
    c_rd->add_option("--point", rd_point, "point")->required();
    c_rd->callback([&] {
        BasePoint p = parse_base_point(rd_point, ses.n, ses.budget);
        emit(ses, out, digit_word_json(reduce(p, ses.n, ses.budget)));
    });

    // tail-eq
    std::string te_a, te_b;
    auto* c_te = app.add_subcommand("tail-eq", "tail equivalence of two digit words");
    c_te->add_option("--a", te_a, "first point")->required();
    c_te->add_option("--b", te_b, "second point")->required();
    c_te->callback([&] {
        BasePoint a = parse_base_point(te_a, ses.n, ses.budget);
        BasePoint b = parse_base_point(te_b, ses.n, ses.budget);
        TailDecision d = tail_equivalent(reduce(a, ses.n, ses.budget), reduce(b, ses.n, ses.budget));
        switch (d.kind) {
        case TailDecision::Kind::witness:
            emit(ses, out, Json{{"equivalent", true}, {"p", d.w.p}, {"q", d.w.q}});
            break;
        case TailDecision::Kind::not_equivalent:
            emit(ses, out, Json{{"equivalent", false}});
            break;
        default:
            emit(ses, out, Json{{"equivalent", "unknown"}});
            exit_code = 3;
        }
    });

    // roundtrip
    std::string rt_point, rt_elem;
    auto* c_rt = app.add_subcommand("roundtrip", "digit reduction roundtrip along one orbit move");
    c_rt->add_option("--point", rt_point, "rational point rat:p/q")->required();
    c_rt->add_option("--elem", rt_elem, "group element (word)")->required();
    c_rt->callback([&] {
        BasePoint p = parse_base_point(rt_point, ses.n, ses.budget);
        const Rat* x = std::get_if<Rat>(&p);
        if (!x) throw Error("roundtrip: the point must be rational");
        RoundtripReport rep = reduction_roundtrip_check(*x, parse_word(rt_elem, ses.n));
        Json j{{"pass", rep.pass}, {"detail", rep.detail}};
        if (rep.pass) {
            j["witness"] = Json{{"p", rep.witness.p}, {"q", rep.witness.q}};
            j["reconstructed"] = element_json(rep.reconstructed);
        }
        emit(ses, out, j);
        if (!rep.pass) exit_code = 1;
    });

    // check-all
    int ca_radius = 5;
    std::size_t ca_stage = 64;
    int ca_samples = 200;
    auto* c_ca = app.add_subcommand("check-all", "run the full invariant suite");
    c_ca->add_option("--radius", ca_radius, "ball radius for the axiom checks");
    c_ca->add_option("--stage", ca_stage, "realization stage size");
    c_ca->add_option("--samples", ca_samples, "random samples for the reduction suite");
    c_ca->callback([&] {
        CheckConfig cfg;
        cfg.n = ses.n;
        cfg.radius = ca_radius;
        cfg.stage = ca_stage;
        cfg.samples = ca_samples;
        cfg.seed = ses.seed;
        auto results = run_all_checks(cfg);
        bool all_pass = true;
        if (ses.format == "json") {
            Json arr = Json::array();
            for (const auto& r : results) {
                arr.push_back(Json{{"check", r.name}, {"pass", r.pass}, {"detail", r.detail}});
                all_pass = all_pass && r.pass;
            }
            emit(ses, out, arr);
        } else {
            for (const auto& r : results) {
                out << (r.pass ? "[PASS] " : "[FAIL] ") << r.name << " - " << r.detail << "\n";
                all_pass = all_pass && r.pass;
            }
        }
        if (!all_pass) exit_code = 1;
    });

    std::vector<std::string> argv_like = args;
    try {
        // CLI11 consumes arguments in reverse.
        std::reverse(argv_like.begin(), argv_like.end());
        app.parse(argv_like);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const BudgetError& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return exit_code;
}

} // namespace ordlab::cli
