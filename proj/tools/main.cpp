#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <treekkm/io.hpp>
#include <treekkm/oracles.hpp>

namespace {

using nlohmann::json;
using namespace treekkm;

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct Options {
    bool trace = false;
    std::string output;
};

/*
 * Every subcommand produces one of these. The digest ties the report to the
 * exact instance file bytes, and a report is only written after the witness
 * it carries has been re-checked against the instance, so a "verified"
 * status in a file is always earned.
 */
struct Report {
    std::string operation;
    std::string digest;
    json witness = json::object();
    std::string status = "verified";  // or "invalid" or "not-applicable"
    json trace = json::object();
};

int emit(const Options& opt, const Report& r, const std::vector<std::string>& lines) {
    for (const auto& s : lines) std::cout << s << "\n";
    if (opt.trace && !r.trace.empty()) std::cout << "trace: " << r.trace.dump() << "\n";
    std::cout << "status: " << r.status << "\n";
    if (!opt.output.empty()) {
        std::ofstream out(opt.output, std::ios::binary);
        if (!out) throw ParseError("cannot write " + opt.output);
        json j;
        j["operation"] = r.operation;
        j["digest"] = r.digest;
        j["witness"] = r.witness;
        j["status"] = r.status;
        j["trace"] = r.trace;
        out << j.dump(2) << "\n";
    }
    return r.status == "invalid" ? 1 : 0;
}

json point_fragment(const MetricTree& t, const TreePoint& p) {
    return json::parse(point_json(t, p));
}

json cycle_fragment(const MetricCycle& c, const TreePoint& p) {
    return json::parse(cycle_point_json(c, p));
}

std::string join_ids(const std::vector<int>& ids) {
    std::string s;
    for (int v : ids) {
        if (!s.empty()) s += ' ';
        s += std::to_string(v);
    }
    return s;
}

int run_validate_labelling(const Options& opt, const std::string& tf, const std::string& lf) {
    std::string tt = slurp(tf), lt = slurp(lf);
    MetricTree t = parse_tree(tt);
    Labelling l = parse_labelling(lt, t);
    Report r;
    r.operation = "validate-labelling";
    r.digest = digest_hex(tt + lt);
    std::vector<std::string> lines;
    if (auto bad = labelling_violation(t, l)) {
        r.status = "invalid";
        r.witness["proper"] = false;
        r.witness["violation"] = *bad;
        lines.push_back("labelling violation: " + *bad);
    } else {
        r.witness["proper"] = true;
        lines.push_back("labelling is proper");
    }
    return emit(opt, r, lines);
}

int run_find_edge(const Options& opt, const std::string& tf, const std::string& lf) {
    std::string tt = slurp(tf), lt = slurp(lf);
    MetricTree t = parse_tree(tt);
    Labelling l = parse_labelling(lt, t);
    SpernerResult res = find_fully_labelled_edge(t, l);
    Report r;
    r.operation = "find-edge";
    r.digest = digest_hex(tt + lt);
    const Edge& ed = t.edge(res.edge);
    r.witness["edge"] = res.edge;
    r.witness["endpoints"] = json::array({ed.u, ed.v});
    r.trace["walk"] = res.walk;
    if (!edge_fully_labelled(t, l, res.edge)) r.status = "invalid";
    std::vector<std::string> lines;
    lines.push_back("fully labelled edge: " + std::to_string(res.edge) + " (vertices " +
                    std::to_string(ed.u) + " and " + std::to_string(ed.v) + ")");
    return emit(opt, r, lines);
}

int run_discrete_fp(const Options& opt, const std::string& tf, const std::string& mf) {
    std::string tt = slurp(tf), mt = slurp(mf);
    MetricTree t = parse_tree(tt);
    std::vector<int> f = parse_vertex_map(mt, t);
    InvertedEdgeResult res = inverted_edge(t, f);
    Report r;
    r.operation = "discrete-fp";
    r.digest = digest_hex(tt + mt);
    const Edge& ed = t.edge(res.edge);
    int x = ed.u, y = ed.v;
    r.witness["edge"] = res.edge;
    r.witness["endpoints"] = json::array({x, y});
    r.witness["images"] = json::array({f[x], f[y]});
    r.trace["walk"] = res.walk;
    bool ok = f[x] != x && f[y] != y && t.next_hop(x, f[x]) == y && t.next_hop(y, f[y]) == x;
    if (!ok) r.status = "invalid";
    std::vector<std::string> lines;
    lines.push_back("inverted edge: " + std::to_string(res.edge) + " (vertices " +
                    std::to_string(x) + " and " + std::to_string(y) + ", images " +
                    std::to_string(f[x]) + " and " + std::to_string(f[y]) + ")");
    return emit(opt, r, lines);
}

int run_validate_cover(const Options& opt, const std::string& cf) {
    std::string ct = slurp(cf);
    TreeCoverInstance inst = parse_tree_cover(ct);
    Report r;
    r.operation = "validate-cover";
    r.digest = digest_hex(ct);
    std::vector<std::string> lines;
    if (auto bad = cover_violation(*inst.tree, inst.cover)) {
        r.status = "invalid";
        r.witness["valid"] = false;
        r.witness["violation"] = *bad;
        lines.push_back("cover violation: " + *bad);
    } else {
        r.witness["valid"] = true;
        lines.push_back("cover is a valid KKM cover");
    }
    return emit(opt, r, lines);
}

int run_kkm_intersect(const Options& opt, const std::string& cf, const std::string& method,
                      const std::string& delta0) {
    std::string ct = slurp(cf);
    TreeCoverInstance inst = parse_tree_cover(ct);
    const MetricTree& t = *inst.tree;
    Report r;
    r.operation = "kkm-intersect";
    r.digest = digest_hex(ct);
    TreePoint p;
    if (method == "sperner") {
        KkmSpernerResult res = kkm_point_via_sperner(t, inst.cover, parse_rational(delta0));
        p = res.point;
        r.trace["refinements"] = res.refinements;
        json ds = json::array();
        for (const Rat& d : res.deltas) ds.push_back(rational_str(d));
        r.trace["deltas"] = ds;
        r.trace["walk"] = res.walk;
    } else {
        ClosedSet inter = intersect_all(t, inst.cover, true);
        auto mp = inter.min_point();
        if (!mp) throw ValidationError("cover sets have empty intersection");
        p = *mp;
    }
    bool ok = true;
    for (const ClosedSet& s : inst.cover.sets) ok = ok && s.contains(p);
    if (!ok) r.status = "invalid";
    r.witness["method"] = method;
    r.witness["point"] = point_fragment(t, p);
    std::vector<std::string> lines;
    lines.push_back("common point of all " + std::to_string(inst.cover.sets.size()) +
                    " sets: " + point_text(p));
    return emit(opt, r, lines);
}

int run_fixed_point(const Options& opt, const std::string& mf) {
    std::string mt = slurp(mf);
    PlMapInstance inst = parse_pl_map(mt);
    const MetricTree& t = *inst.tree;
    TreePoint z = fixed_point_pl(t, inst.map);
    Report r;
    r.operation = "fixed-point";
    r.digest = digest_hex(mt);
    if (!(eval_pl(t, inst.map, z) == z)) r.status = "invalid";
    r.witness["point"] = point_fragment(t, z);
    std::vector<std::string> lines;
    lines.push_back("fixed point: " + point_text(z));
    return emit(opt, r, lines);
}

int run_eps_fixed_point(const Options& opt, const std::string& mf, const std::string& eps_str,
                        const std::string& lip_str) {
    std::string mt = slurp(mf);
    PlMapInstance inst = parse_pl_map(mt);
    const MetricTree& t = *inst.tree;
    Rat eps = parse_rational(eps_str);
    if (sgn(eps) <= 0) throw ValidationError("epsilon must be positive");
    BlackBoxMap bb = lip_str.empty() ? black_box_from_pl(t, inst.map)
                                     : black_box_from_pl(t, inst.map, parse_rational(lip_str));
    EpsilonFpResult res = epsilon_fixed_point(t, bb, eps);
    Report r;
    r.operation = "eps-fixed-point";
    r.digest = digest_hex(mt);
    Rat gap = t.distance(res.point, eval_pl(t, inst.map, res.point));
    if (!(gap < eps)) r.status = "invalid";
    r.witness["point"] = point_fragment(t, res.point);
    r.witness["partner"] = point_fragment(t, res.partner);
    r.witness["epsilon"] = rational_str(eps);
    r.witness["displacement"] = rational_str(gap);
    r.witness["delta"] = rational_str(res.delta);
    r.trace["steps"] = res.steps;
    std::vector<std::string> lines;
    lines.push_back("epsilon-fixed point: " + point_text(res.point) + " (moved by " +
                    rational_str(gap) + ", bound " + rational_str(eps) + ")");
    return emit(opt, r, lines);
}

int run_validate_cycle_cover(const Options& opt, const std::string& cf) {
    std::string ct = slurp(cf);
    CycleCoverInstance inst = parse_cycle_cover(ct);
    Report r;
    r.operation = "validate-cycle-cover";
    r.digest = digest_hex(ct);
    std::vector<std::string> lines;
    if (auto bad = cycle_cover_violation(*inst.cycle, inst.cover)) {
        r.status = "invalid";
        r.witness["valid"] = false;
        r.witness["violation"] = *bad;
        lines.push_back("cycle cover violation: " + *bad);
    } else {
        r.witness["valid"] = true;
        lines.push_back("cover is a valid cycle KKM cover");
    }
    return emit(opt, r, lines);
}

int run_cycle_majority(const Options& opt, const std::string& cf, const std::string& method) {
    std::string ct = slurp(cf);
    CycleCoverInstance inst = parse_cycle_cover(ct);
    const MetricCycle& c = *inst.cycle;
    int need = c.vertex_count() / 2 + 1;
    Report r;
    r.operation = "cycle-majority";
    r.digest = digest_hex(ct);
    std::vector<std::string> lines;
    r.witness["method"] = method;
    if (method == "reduction") {
        ReductionResult res = tree_reduction_majority(c, inst.cover);
        if (!res.applicable) {
            r.status = "not-applicable";
            r.witness["applicable"] = false;
            lines.push_back("reduction not applicable: no point lies in fewer than " +
                            std::to_string(need - 1) + " sets");
            return emit(opt, r, lines);
        }
        bool ok = (int)res.members.size() >= need;
        for (int v : res.members) ok = ok && inst.cover.sets[v].contains(res.point);
        if (!ok) r.status = "invalid";
        r.witness["applicable"] = true;
        r.witness["point"] = cycle_fragment(c, res.point);
        r.witness["members"] = res.members;
        r.witness["depth"] = (int)res.members.size();
        r.witness["cut"] = cycle_fragment(c, res.cut);
        r.witness["cut_depth"] = res.cut_depth;
        lines.push_back("majority point: " + point_text(res.point) + " in " +
                        std::to_string(res.members.size()) + " of " +
                        std::to_string(c.vertex_count()) + " sets (cut at " +
                        point_text(res.cut) + ", depth " + std::to_string(res.cut_depth) + ")");
        return emit(opt, r, lines);
    }
    MajorityResult res = majority_point(c, inst.cover, true);
    bool ok = (int)res.members.size() == res.depth;
    for (int v : res.members) ok = ok && inst.cover.sets[v].contains(res.point);
    if (res.warning.empty()) ok = ok && res.depth >= need;
    r.witness["point"] = cycle_fragment(c, res.point);
    r.witness["members"] = res.members;
    r.witness["depth"] = res.depth;
    if (!res.warning.empty()) {
        r.status = "invalid";
        r.witness["warning"] = res.warning;
        lines.push_back("cover is invalid (" + res.warning + "); deepest point found anyway:");
    } else if (!ok) {
        r.status = "invalid";
    }
    lines.push_back("majority point: " + point_text(res.point) + " in " +
                    std::to_string(res.depth) + " of " + std::to_string(c.vertex_count()) +
                    " sets (members " + join_ids(res.members) + ")");
    return emit(opt, r, lines);
}

int run_vote(const Options& opt, const std::string& sf) {
    std::string st = slurp(sf);
    CircularSociety s = parse_society(st);
    VoteResult res = super_agreeable_majority(s);
    int n = s.spectrum->vertex_count();
    Report r;
    r.operation = "vote";
    r.digest = digest_hex(st);
    bool ok = 2 * (int)res.approvers.size() > n;
    for (int i : res.approvers) ok = ok && s.approvals[i].contains(res.option);
    if (!ok) r.status = "invalid";
    r.witness["option"] = cycle_fragment(*s.spectrum, res.option);
    r.witness["approvers"] = res.approvers;
    std::vector<std::string> lines;
    lines.push_back("winning option: " + point_text(res.option) + ", approved by " +
                    std::to_string(res.approvers.size()) + " of " + std::to_string(n) +
                    " voters (" + join_ids(res.approvers) + ")");
    return emit(opt, r, lines);
}

int fail_verify(const std::string& why) {
    std::cout << "witness rejected: " << why << "\n";
    return 1;
}

/*
 * Re-checks a previously written report against the instance files, passed
 * in the same order the original subcommand took them. Positive witnesses
 * are re-derived with the exhaustive oracles where one exists, not just
 * re-tested, so a verify pass is independent evidence.
 */
int run_verify(const std::string& wf, const std::vector<std::string>& files) {
    json w = json::parse(slurp(wf), nullptr, false);
    if (w.is_discarded() || !w.is_object()) throw ParseError("witness file is not a json object");
    for (const char* key : {"operation", "digest", "status"})
        if (!w.contains(key) || !w[key].is_string())
            throw ParseError(std::string("witness file lacks a string \"") + key + "\" field");
    if (!w.contains("witness") || !w["witness"].is_object())
        throw ParseError("witness file lacks a \"witness\" object");
    const std::string op = w["operation"].get<std::string>();
    const std::string status = w["status"].get<std::string>();
    const json& body = w["witness"];

    auto need_files = [&](size_t k) {
        if (files.size() != k)
            throw ParseError("operation " + op + " takes " + std::to_string(k) +
                             " instance file(s), got " + std::to_string(files.size()));
    };
    // Arity errors and unknown operations are usage problems; settle them
    // before the digest can blame the file contents.
    if (op == "validate-labelling" || op == "find-edge" || op == "discrete-fp")
        need_files(2);
    else if (op == "validate-cover" || op == "kkm-intersect" || op == "fixed-point" ||
             op == "eps-fixed-point" || op == "validate-cycle-cover" || op == "cycle-majority" ||
             op == "vote")
        need_files(1);
    else
        throw ParseError("unknown operation \"" + op + "\" in witness file");
    std::vector<std::string> texts;
    for (const auto& f : files) texts.push_back(slurp(f));
    std::string cat;
    for (const auto& s : texts) cat += s;
    if (digest_hex(cat) != w["digest"].get<std::string>())
        return fail_verify("instance digest mismatch; these are not the files the report was made from");

    auto get_int = [&](const json& j, const char* key) -> int {
        if (!j.contains(key) || !j[key].is_number_integer())
            throw ParseError(std::string("witness lacks an integer \"") + key + "\" field");
        return j[key].get<int>();
    };
    auto get_ids = [&](const json& j, const char* key) -> std::vector<int> {
        if (!j.contains(key) || !j[key].is_array())
            throw ParseError(std::string("witness lacks an array \"") + key + "\" field");
        std::vector<int> out;
        for (const auto& e : j[key]) {
            if (!e.is_number_integer()) throw ParseError(std::string(key) + " entries must be integers");
            out.push_back(e.get<int>());
        }
        return out;
    };
    auto get_str = [&](const json& j, const char* key) -> std::string {
        if (!j.contains(key) || !j[key].is_string())
            throw ParseError(std::string("witness lacks a string \"") + key + "\" field");
        return j[key].get<std::string>();
    };
    auto flag_matches = [&](const char* key, bool recomputed_ok) -> int {
        if (!body.contains(key) || !body[key].is_boolean())
            throw ParseError(std::string("witness lacks a boolean \"") + key + "\" field");
        if (body[key].get<bool>() != recomputed_ok)
            return fail_verify(std::string("recorded \"") + key + "\" flag contradicts the instance");
        std::cout << "witness verified\n";
        return 0;
    };

    if (op == "validate-labelling") {
        need_files(2);
        MetricTree t = parse_tree(texts[0]);
        Labelling l = parse_labelling(texts[1], t);
        return flag_matches("proper", !labelling_violation(t, l).has_value());
    }
    if (op == "validate-cover") {
        need_files(1);
        TreeCoverInstance inst = parse_tree_cover(texts[0]);
        return flag_matches("valid", !cover_violation(*inst.tree, inst.cover).has_value());
    }
    if (op == "validate-cycle-cover") {
        need_files(1);
        CycleCoverInstance inst = parse_cycle_cover(texts[0]);
        return flag_matches("valid", !cycle_cover_violation(*inst.cycle, inst.cover).has_value());
    }

    if (status == "invalid") return fail_verify("report records a failed run; nothing to certify");

    if (op == "find-edge") {
        need_files(2);
        MetricTree t = parse_tree(texts[0]);
        Labelling l = parse_labelling(texts[1], t);
        int e = get_int(body, "edge");
        if (e < 0 || e >= (int)t.edges().size()) return fail_verify("edge id out of range");
        std::vector<int> all = scan_fully_labelled(t, l);
        if (std::find(all.begin(), all.end(), e) == all.end())
            return fail_verify("edge " + std::to_string(e) + " is not fully labelled");
    } else if (op == "discrete-fp") {
        need_files(2);
        MetricTree t = parse_tree(texts[0]);
        std::vector<int> f = parse_vertex_map(texts[1], t);
        int e = get_int(body, "edge");
        DiscreteFpWitnesses all = exhaustive_discrete_fp(t, f);
        if (std::find(all.inverted_edges.begin(), all.inverted_edges.end(), e) ==
            all.inverted_edges.end())
            return fail_verify("edge " + std::to_string(e) + " is not inverted by the map");
    } else if (op == "kkm-intersect") {
        need_files(1);
        TreeCoverInstance inst = parse_tree_cover(texts[0]);
        TreePoint p = parse_point(body.value("point", json::object()).dump(), *inst.tree);
        for (size_t i = 0; i < inst.cover.sets.size(); ++i)
            if (!inst.cover.sets[i].contains(p))
                return fail_verify("point lies outside set " + std::to_string(i));
    } else if (op == "fixed-point") {
        need_files(1);
        PlMapInstance inst = parse_pl_map(texts[0]);
        TreePoint p = parse_point(body.value("point", json::object()).dump(), *inst.tree);
        if (!(eval_pl(*inst.tree, inst.map, p) == p))
            return fail_verify("the map moves the recorded point");
    } else if (op == "eps-fixed-point") {
        need_files(1);
        PlMapInstance inst = parse_pl_map(texts[0]);
        TreePoint p = parse_point(body.value("point", json::object()).dump(), *inst.tree);
        Rat eps = parse_rational(get_str(body, "epsilon"));
        Rat gap = inst.tree->distance(p, eval_pl(*inst.tree, inst.map, p));
        if (!(gap < eps))
            return fail_verify("the map moves the recorded point by " + rational_str(gap) +
                               ", not under " + rational_str(eps));
    } else if (op == "cycle-majority") {
        need_files(1);
        CycleCoverInstance inst = parse_cycle_cover(texts[0]);
        const MetricCycle& c = *inst.cycle;
        if (status == "not-applicable") {
            if (tree_reduction_majority(c, inst.cover).applicable)
                return fail_verify("reduction is applicable after all");
        } else {
            TreePoint p = parse_cycle_point(body.value("point", json::object()).dump(), c);
            std::vector<int> members = get_ids(body, "members");
            for (int v : members) {
                if (v < 0 || v >= c.vertex_count()) return fail_verify("member id out of range");
                if (!inst.cover.sets[v].contains(p))
                    return fail_verify("set of vertex " + std::to_string(v) +
                                       " does not contain the point");
            }
            if ((int)members.size() < c.vertex_count() / 2 + 1)
                return fail_verify("recorded members are not a strict majority");
        }
    } else if (op == "vote") {
        need_files(1);
        CircularSociety s = parse_society(texts[0]);
        TreePoint p = parse_cycle_point(body.value("option", json::object()).dump(), *s.spectrum);
        std::vector<int> approvers = get_ids(body, "approvers");
        for (int i : approvers) {
            if (i < 0 || i >= (int)s.approvals.size()) return fail_verify("voter id out of range");
            if (!s.approvals[i].contains(p))
                return fail_verify("voter " + std::to_string(i) + " does not approve the option");
        }
        if (2 * (int)approvers.size() <= s.spectrum->vertex_count())
            return fail_verify("recorded approvers are not a strict majority");
    } else {
        throw ParseError("unknown operation \"" + op + "\" in witness file");
    }
    std::cout << "witness verified\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"constructive fixed points, KKM covers, and majority points on metric trees and cycles"};
    app.require_subcommand(1);
    Options opt;
    app.add_flag("--trace", opt.trace, "narrate walks and refinement steps on stdout");
    app.add_option("--output", opt.output, "write the machine-readable witness report to this file");

    std::string file1, file2;
    std::string method = "exact", cycle_method = "sweep", delta0 = "1", epsilon, lipschitz;
    std::vector<std::string> instance_files;

    auto add_two = [&](const char* name, const char* help, const char* second) {
        CLI::App* s = app.add_subcommand(name, help);
        s->add_option("tree", file1, "tree instance file")->required();
        s->add_option(second, file2)->required();
        s->fallthrough();
        return s;
    };
    auto add_one = [&](const char* name, const char* help, const char* arg) {
        CLI::App* s = app.add_subcommand(name, help);
        s->add_option(arg, file1)->required();
        s->fallthrough();
        return s;
    };

    CLI::App* vl = add_two("validate-labelling", "check a vertex labelling for properness", "labels");
    CLI::App* fe = add_two("find-edge", "find a fully labelled edge of a properly labelled tree", "labels");
    CLI::App* df = add_two("discrete-fp", "find an inverted edge of a fixed-point-free vertex map", "map");
    CLI::App* vc = add_one("validate-cover", "check a closed cover for the KKM condition", "cover");
    CLI::App* ki = add_one("kkm-intersect", "produce a point common to all sets of a KKM cover", "cover");
    ki->add_option("--method", method, "exact or sperner")
        ->check(CLI::IsMember({"exact", "sperner"}));
    ki->add_option("--delta0", delta0, "initial segmentation size for the sperner method, as p/q");
    CLI::App* fp = add_one("fixed-point", "exact fixed point of a piecewise-linear self-map", "map");
    CLI::App* ef = add_one("eps-fixed-point", "approximate fixed point within a given tolerance", "map");
    ef->add_option("--epsilon", epsilon, "tolerance, as p/q")->required();
    ef->add_option("--lipschitz", lipschitz, "declared Lipschitz constant, as p/q");
    CLI::App* vk = add_one("validate-cycle-cover", "check a cycle cover for the pairwise arc condition", "cover");
    CLI::App* cm = add_one("cycle-majority", "find a point lying in a strict majority of the sets", "cover");
    cm->add_option("--method", cycle_method, "sweep or reduction")
        ->check(CLI::IsMember({"sweep", "reduction"}));
    CLI::App* vo = add_one("vote", "pick an option a strict majority of voters approves", "society");
    CLI::App* ve = app.add_subcommand("verify", "re-check a witness report against its instance files");
    ve->add_option("witness", file1, "witness report file")->required();
    ve->add_option("instances", instance_files, "instance files, in the operation's argument order")
        ->required();
    ve->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (vl->parsed()) return run_validate_labelling(opt, file1, file2);
        if (fe->parsed()) return run_find_edge(opt, file1, file2);
        if (df->parsed()) return run_discrete_fp(opt, file1, file2);
        if (vc->parsed()) return run_validate_cover(opt, file1);
        if (ki->parsed()) return run_kkm_intersect(opt, file1, method, delta0);
        if (fp->parsed()) return run_fixed_point(opt, file1);
        if (ef->parsed()) return run_eps_fixed_point(opt, file1, epsilon, lipschitz);
        if (vk->parsed()) return run_validate_cycle_cover(opt, file1);
        if (cm->parsed()) return run_cycle_majority(opt, file1, cycle_method);
        if (vo->parsed()) return run_vote(opt, file1);
        if (ve->parsed()) return run_verify(file1, instance_files);
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
