// yhx: exact construction and verification of calibrated representations of
// affine Yokonuma-Hecke algebras, their branching and Clifford-theory
// decompositions, and the modular (degenerate) constructions.
//
// Every subcommand prints one deterministic JSON document on stdout.
// Exit codes: 0 all requested verifications pass, 1 a verification failed,
// 2 malformed input or usage error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "yhx/branching.hpp"
#include "yhx/clifford.hpp"
#include "yhx/serialize.hpp"

using namespace yhx;
using io::json;

namespace {

struct ShapeArgs {
    std::string shape_arg;                // file path or inline JSON
    std::string outer_str, inner_str;     // JSON arrays of arrays
    std::vector<std::string> phases;
    std::string contents_arg;             // inline JSON list

    void attach(CLI::App* cmd, bool with_contents = true) {
        cmd->add_option("--shape", shape_arg, "placed shape as a JSON file or inline JSON");
        cmd->add_option("--outer", outer_str, "outer r-partition as JSON, e.g. [[2,1],[1]]");
        cmd->add_option("--inner", inner_str, "inner r-partition as JSON (default empty)");
        if (with_contents) {
            cmd->add_option("--phase", phases,
                            "content phase per component (rational), classical offsets");
            cmd->add_option("--contents", contents_arg,
                            "explicit contents as JSON [{\"u\":\"p/q\",\"a\":int},...]");
        }
    }

    shapes::PlacedShape resolve() const {
        if (!shape_arg.empty()) {
            json j;
            if (!shape_arg.empty() && shape_arg.front() == '{') {
                j = json::parse(shape_arg);
            } else {
                std::ifstream in(shape_arg);
                if (!in) throw Error("cannot open shape file " + shape_arg);
                in >> j;
            }
            return io::shape_from_json(j);
        }
        if (outer_str.empty()) throw Error("need --shape or --outer");
        auto op = shapes::RPartition(json::parse(outer_str).get<std::vector<std::vector<long>>>());
        auto ip = inner_str.empty()
                      ? shapes::RPartition(std::vector<std::vector<long>>(op.r()))
                      : shapes::RPartition(
                            json::parse(inner_str).get<std::vector<std::vector<long>>>());
        auto sk = build_skew(op, ip);
        if (!contents_arg.empty()) {
            json cj = json::parse(contents_arg);
            std::vector<shapes::ContentValue> cs;
            for (const auto& c : cj)
                cs.emplace_back(parse_rat(c.at("u").get<std::string>()), c.at("a").get<long>());
            return place(sk, std::move(cs));
        }
        std::vector<Rat> ph;
        if (phases.empty()) {
            ph.assign(op.r(), Rat(0));
        } else if (phases.size() == 1) {
            ph.assign(op.r(), parse_rat(phases[0]));
        } else {
            if (static_cast<long>(phases.size()) != op.r())
                throw Error("need one --phase per component (or a single one)");
            for (const auto& s : phases) ph.push_back(parse_rat(s));
        }
        return classical_placed(sk, ph);
    }

    shapes::RSkewShape resolve_bare() const {
        if (!shape_arg.empty()) return resolve().shape();
        if (outer_str.empty()) throw Error("need --shape or --outer");
        auto op = shapes::RPartition(json::parse(outer_str).get<std::vector<std::vector<long>>>());
        auto ip = inner_str.empty()
                      ? shapes::RPartition(std::vector<std::vector<long>>(op.r()))
                      : shapes::RPartition(
                            json::parse(inner_str).get<std::vector<std::vector<long>>>());
        return build_skew(op, ip);
    }
};

void emit(const json& j, const std::string& out_path) {
    std::string text = j.dump(2);
    text += "\n";
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw Error("cannot open output file " + out_path);
        out << text;
    }
}

// full verification battery for one module
json verify_module(const calrep::CalibratedModule& m, bool& ok) {
    json v;
    ok = true;
    if (m.n() == 0) {
        v["relations"] = {{"all_pass", true}, {"checked", 0}, {"failures", json::array()}};
        return v;
    }
    auto rels = algebra::defining_relations(m.placed.r(), static_cast<int>(m.n()),
                                            algebra::Flavor::affineYH);
    auto rel_rep = algebra::check_relations(m.rep, rels);
    v["relations"] = io::report_to_json(rel_rep);
    ok = rel_rep.all_pass;
    {
        auto der = algebra::derived_elements(m.rep);
        v["derived"] = io::report_to_json(der.report);
        ok = ok && der.report.all_pass;
    }
    auto tau = calrep::tau_suite(m);
    v["tau"] = io::report_to_json(tau);
    ok = ok && tau.all_pass;
    auto proj = calrep::projector_suite(m);
    v["projectors"] = io::report_to_json(proj);
    ok = ok && proj.all_pass;
    auto irr = calrep::irreducibility_certificate(m);
    v["irreducible"] = {{"diagonal", irr.diagonal},
                        {"weights_distinct", irr.weights_distinct},
                        {"connected", irr.connected},
                        {"pass", irr.pass}};
    ok = ok && irr.pass;
    return v;
}

json decomposition_to_json(const branching::DecompositionReport& rep, bool induction) {
    json j;
    json cons = json::array();
    for (const auto& c : rep.constituents) {
        json cj;
        if (induction)
            cj["shape"] = io::shape_to_json(c.glued);
        else
            cj["label"] = c.label.comps();
        cj["multiplicity"] = c.multiplicity;
        cj["dimension"] = c.dimension;
        cons.push_back(std::move(cj));
    }
    j["constituents"] = std::move(cons);
    j["ledger"] = {{"identity", rep.ledger_desc},
                   {"lhs", rep.lhs.get_str()},
                   {"rhs", rep.rhs.get_str()},
                   {"ok", rep.ledger_ok}};
    return j;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact calibrated representations of affine Yokonuma-Hecke algebras"};
    app.require_subcommand(1);
    std::string out_path;
    app.add_option("--out", out_path, "write the JSON report to this file instead of stdout");

    ShapeArgs build_shape, tab_shape, bruhat_shape, restrict_shape_args, cyclo_shape, split_shape;

    auto* cmd_build = app.add_subcommand("build", "construct a calibrated module and verify it");
    long build_r = 0;
    cmd_build->add_option("--r", build_r, "number of components (consistency check)");
    build_shape.attach(cmd_build);

    auto* cmd_check = app.add_subcommand("check", "re-run the relation suite on a module file");
    std::string check_in;
    cmd_check->add_option("--in", check_in, "module JSON file")->required();

    auto* cmd_tab = app.add_subcommand("tableaux", "list standard tableaux and weights");
    tab_shape.attach(cmd_tab);

    auto* cmd_bruhat = app.add_subcommand("bruhat", "reading tableaux and the interval check");
    bruhat_shape.attach(cmd_bruhat, false);

    auto* cmd_restrict = app.add_subcommand("restrict", "restriction to the finite subalgebra");
    restrict_shape_args.attach(cmd_restrict);

    auto* cmd_induce = app.add_subcommand("induce", "induction product of two placed shapes");
    std::string induce_a, induce_b;
    cmd_induce->add_option("--a", induce_a, "first placed shape (file or inline JSON)")->required();
    cmd_induce->add_option("--b", induce_b, "second placed shape (file or inline JSON)")->required();

    auto* cmd_cyclo = app.add_subcommand("cyclo", "cyclotomic quotient membership");
    cyclo_shape.attach(cmd_cyclo);
    std::string cyclo_params;
    long cyclo_enum_d = 0, cyclo_enum_n = -1, cyclo_enum_r = 1;
    cmd_cyclo->add_option("--params", cyclo_params,
                          "parameters as JSON [{\"u\":\"p/q\",\"a\":int},...]");
    cmd_cyclo->add_option("--enumerate-d", cyclo_enum_d, "enumerate simples: d");
    cmd_cyclo->add_option("--enumerate-n", cyclo_enum_n, "enumerate simples: n");
    cmd_cyclo->add_option("--enumerate-r", cyclo_enum_r, "enumerate simples: r");

    auto* cmd_split = app.add_subcommand("split", "Clifford decomposition under the Z/p twist");
    split_shape.attach(cmd_split);
    long split_p = 2;
    cmd_split->add_option("--p", split_p, "twist modulus")->required();

    auto* cmd_ydp = app.add_subcommand("count-ydp", "index the fixed-subalgebra simples");
    long ydp_r = 1, ydp_d = 1, ydp_p = 1, ydp_n = 0;
    cmd_ydp->add_option("--r", ydp_r)->required();
    cmd_ydp->add_option("--d", ydp_d)->required();
    cmd_ydp->add_option("--p", ydp_p)->required();
    cmd_ydp->add_option("--n", ydp_n)->required();

    auto* cmd_deg = app.add_subcommand("degenerate", "modular constructions over F_{p^k}");
    cmd_deg->require_subcommand(1);
    auto* cmd_deg_build = cmd_deg->add_subcommand("build", "completely splittable module");
    long deg_r = 1, deg_p = 2;
    std::string deg_alpha, deg_j;
    cmd_deg_build->add_option("--r", deg_r)->required();
    cmd_deg_build->add_option("--p", deg_p)->required();
    cmd_deg_build->add_option("--alpha", deg_alpha, "content entries, e.g. [0,3]")->required();
    cmd_deg_build->add_option("--j", deg_j, "t-classes, e.g. [1,1] (default all 1)");
    auto* cmd_deg_wreath = cmd_deg->add_subcommand("wreath", "wreath-product module");
    long wr_r = 1, wr_p = 2;
    std::string wr_outer;
    cmd_deg_wreath->add_option("--r", wr_r)->required();
    cmd_deg_wreath->add_option("--p", wr_p)->required();
    cmd_deg_wreath->add_option("--outer", wr_outer, "r-partition as JSON, e.g. [[2,1]]")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        json out;
        bool ok = true;

        if (cmd_build->parsed()) {
            auto placed = build_shape.resolve();
            if (build_r > 0 && build_r != placed.r())
                throw Error("--r does not match the shape's component count");
            auto m = calrep::build_module(placed);
            out["module"] = io::module_to_json(m);
            out["verify"] = verify_module(m, ok);
        } else if (cmd_check->parsed()) {
            std::ifstream in(check_in);
            if (!in) throw Error("cannot open module file " + check_in);
            json j;
            in >> j;
            if (j.contains("module")) j = j.at("module");
            auto parsed = io::module_rep_from_json(j);
            auto rels = algebra::defining_relations(parsed.r, parsed.n,
                                                    algebra::Flavor::affineYH);
            auto rel_rep = algebra::check_relations(parsed.rep, rels);
            out["verify"]["relations"] = io::report_to_json(rel_rep);
            ok = rel_rep.all_pass;
            if (parsed.n >= 1) {
                auto der = algebra::derived_elements(parsed.rep);
                out["verify"]["derived"] = io::report_to_json(der.report);
                ok = ok && der.report.all_pass;
            }
        } else if (cmd_tab->parsed()) {
            auto placed = tab_shape.resolve();
            auto tabs = enumerate_std(placed.shape());
            out["count"] = tabs.size();
            json list = json::array();
            for (const auto& t : tabs) {
                json tj;
                tj["entries"] = t.entries();
                auto w = weight_of(placed, t);
                tj["components"] = w.comp;
                json cs = json::array();
                for (const auto& c : w.content)
                    cs.push_back({{"u", rat_str(c.phase)}, {"a", c.offset}});
                tj["contents"] = std::move(cs);
                list.push_back(std::move(tj));
            }
            out["tableaux"] = std::move(list);
        } else if (cmd_bruhat->parsed()) {
            auto shape = bruhat_shape.resolve_bare();
            auto rep = bruhat_interval(shape);
            out["w_col"] = rep.w_col.one_line();
            out["w_row"] = rep.w_row.one_line();
            out["interval_size"] = rep.interval_size;
            out["std_count"] = rep.std_count;
            out["match"] = rep.match;
            out["strong_containment"] = rep.strong_containment;
            ok = rep.match && rep.strong_containment;
        } else if (cmd_restrict->parsed()) {
            auto placed = restrict_shape_args.resolve();
            auto rep = branching::restrict_shape(placed);
            out = decomposition_to_json(rep, false);
            ok = rep.ledger_ok;
        } else if (cmd_induce->parsed()) {
            auto load = [](const std::string& arg) {
                json j;
                if (!arg.empty() && arg.front() == '{') {
                    j = json::parse(arg);
                } else {
                    std::ifstream in(arg);
                    if (!in) throw Error("cannot open shape file " + arg);
                    in >> j;
                }
                return io::shape_from_json(j);
            };
            auto rep = branching::induce(load(induce_a), load(induce_b));
            out = decomposition_to_json(rep, true);
            ok = rep.ledger_ok;
        } else if (cmd_cyclo->parsed()) {
            if (cyclo_enum_n >= 0) {
                auto params = cyclo_params.empty()
                                  ? branching::CyclotomicParams::fresh(cyclo_enum_d)
                                  : [&] {
                                        branching::CyclotomicParams p;
                                        for (const auto& c : json::parse(cyclo_params))
                                            p.values.emplace_back(
                                                parse_rat(c.at("u").get<std::string>()),
                                                c.at("a").get<long>());
                                        return p;
                                    }();
                auto shapes_out = branching::enumerate_cyclotomic_simples(
                    cyclo_enum_r, cyclo_enum_d, cyclo_enum_n, params);
                out["count"] = shapes_out.size();
                json list = json::array();
                for (const auto& s : shapes_out) list.push_back(io::shape_to_json(s));
                out["shapes"] = std::move(list);
            } else {
                if (cyclo_params.empty()) throw Error("cyclo: need --params");
                branching::CyclotomicParams params;
                for (const auto& c : json::parse(cyclo_params))
                    params.values.emplace_back(parse_rat(c.at("u").get<std::string>()),
                                               c.at("a").get<long>());
                auto m = calrep::build_module(cyclo_shape.resolve());
                bool member = branching::cyclotomic_membership(m, params);
                out["member"] = member;
                out["minpoly_degree"] = branching::x1_minpoly_degree(m);
                json nw = json::array();
                for (const auto& v : branching::nw_content_values(m))
                    nw.push_back(io::tower_str(v, m.cyclo_order));
                out["nw_contents"] = std::move(nw);
                ok = member;
            }
        } else if (cmd_split->parsed()) {
            auto m = calrep::build_module(split_shape.resolve());
            auto split = clifford::clifford_split(m, split_p);
            out["stabilizer"] = {{"p", split.stab.p}, {"k", split.stab.k},
                                 {"order", split.stab.order}};
            long order = lcm_long(m.cyclo_order, split_p);
            json comps = json::array();
            for (const auto& comp : split.components) {
                json cj;
                cj["j"] = comp.j;
                cj["dimension"] = comp.dimension;
                cj["connected"] = comp.connected;
                json ws = json::array();
                for (const auto& w : comp.weight_support) {
                    json row = json::array();
                    for (const auto& v : w) row.push_back(io::tower_str(v, order));
                    ws.push_back(std::move(row));
                }
                cj["weight_support"] = std::move(ws);
                json mats;
                auto str = [&](const algebra::TowerScalar& v) { return io::tower_str(v, order); };
                for (const auto& [name, mat] : comp.restricted)
                    mats[name] = io::matrix_to_json(mat, str);
                cj["matrices"] = std::move(mats);
                comps.push_back(std::move(cj));
            }
            out["components"] = std::move(comps);
            out["verify"] = io::report_to_json(split.report);
            ok = split.report.all_pass;
        } else if (cmd_ydp->parsed()) {
            auto count = clifford::count_ydp_simples(ydp_r, ydp_d, ydp_p, ydp_n);
            out["total_indices"] = count.total_indices;
            json orbits = json::array();
            for (const auto& orb : count.orbits) {
                json oj;
                oj["representative"] = orb.rep;
                oj["orbit_size"] = orb.orbit_size;
                oj["f"] = orb.f;
                oj["stabilizer_order"] = orb.order;
                oj["indices"] = orb.indices;
                orbits.push_back(std::move(oj));
            }
            out["orbits"] = std::move(orbits);
        } else if (cmd_deg_build->parsed()) {
            degenerate::ContentVector w;
            for (const auto& a : json::parse(deg_alpha)) w.alpha.push_back(a.get<long>());
            if (deg_j.empty()) {
                w.j.assign(w.alpha.size(), 1);
            } else {
                for (const auto& jv : json::parse(deg_j)) w.j.push_back(jv.get<int>());
            }
            for (auto& a : w.alpha) a = mod_floor(a, deg_p);
            auto cls = degenerate::splittable_class(w, deg_p, deg_r);
            auto m = degenerate::build_splittable_module(cls);
            out["module"] = io::degenerate_module_to_json(m);
            auto rels = algebra::defining_relations(deg_r, m.n, algebra::Flavor::degenerateYH);
            auto rp = algebra::check_relations(m.rep, rels);
            out["verify"]["relations"] = io::report_to_json(rp);
            ok = rp.all_pass;
        } else if (cmd_deg_wreath->parsed()) {
            auto m = degenerate::build_wreath_module(
                shapes::RPartition(json::parse(wr_outer).get<std::vector<std::vector<long>>>()),
                wr_p, wr_r);
            out["module"] = io::degenerate_module_to_json(m);
            auto rels = algebra::defining_relations(wr_r, m.n, algebra::Flavor::wreath);
            auto rp = algebra::check_relations(m.rep, rels);
            out["verify"]["relations"] = io::report_to_json(rp);
            auto wr = degenerate::wreath_specialize(m);
            out["verify"]["jucys_murphy"] = io::report_to_json(wr);
            ok = rp.all_pass && wr.all_pass;
        }

        out["ok"] = ok;
        emit(out, out_path);
        return ok ? 0 : 1;
    } catch (const json::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
