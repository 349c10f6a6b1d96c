#include "commands.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <sstream>

#include "tightcat/acceptance.hpp"
#include "tightcat/cuts.hpp"
#include "tightcat/error.hpp"
#include "tightcat/groups.hpp"
#include "tightcat/io.hpp"
#include "tightcat/poset.hpp"
#include "tightcat/tight.hpp"

namespace tightcat::cli {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

json error_body(const Error& e) {
    std::string msg = e.what();
    const std::string prefix = std::string(to_string(e.kind())) + ": ";
    if (msg.rfind(prefix, 0) == 0) msg = msg.substr(prefix.size());
    return {{"error", to_string(e.kind())}, {"message", msg}};
}

int status_of(ErrorKind k) {
    switch (k) {
        case ErrorKind::ParseError:
        case ErrorKind::UnknownReference:
        case ErrorKind::SizeLimit: return UsageOrLimit;
        default: return CheckedFailure;
    }
}

json dm_body(const FinPoset& p, const DMCompletion& dm) {
    json j;
    j["size"] = dm.cuts.size();
    j["cuts"] = to_json(p, dm.cuts);
    j["embed"] = json::object();
    for (int x = 0; x < p.size(); ++x) j["embed"][p.name(x)] = dm.embed[x];
    j["order"] = json::array();
    for (int a = 0; a < dm.lattice.size(); ++a)
        for (int b = 0; b < dm.lattice.size(); ++b)
            if (a != b && dm.lattice.leq(a, b)) j["order"].push_back({a, b});
    return j;
}

json gaps_body(const std::vector<Gap>& gaps, const Action& a, const Action& b) {
    const auto& C = *a.base;
    json j;
    j["count"] = gaps.size();
    json rows = json::array(), cols = json::array();
    for (int x = 0; x < a.num_objects(); ++x)
        for (const auto& s : a.names[x]) rows.push_back(C.object_name(x) + ":" + s);
    for (int y = 0; y < b.num_objects(); ++y)
        for (const auto& u : b.names[y]) cols.push_back(C.object_name(y) + ":" + u);
    j["left_elements"] = rows;
    j["right_elements"] = cols;
    j["gaps"] = json::array();
    for (const auto& g : gaps) {
        json table = json::array();
        for (const auto& row : g.phi) {
            json r = json::array();
            for (int m : row) r.push_back(C.morphism(m).id);
            table.push_back(r);
        }
        j["gaps"].push_back(table);
    }
    return j;
}

struct Context {
    Options opt;
    std::uint32_t seed = 1;
    fs::path root;
    Workspace ws;
};

// Failing checks exit 1 with the report.
Result from_report(json body, const Report& r) {
    body["report"] = to_json(r);
    return {r.pass() ? Pass : CheckedFailure, body, {}};
}

Result cmd_validate(Context& cx, const std::string& file) {
    auto doc = cx.ws.resolve(json(file), cx.root);
    const std::string kind = kind_of(doc.json);
    json body{{"kind", kind}};
    if (kind == "category") {
        CatPtr c = cx.ws.category(doc.json, doc.dir);
        body["objects"] = c->num_objects();
        body["morphisms"] = c->num_morphisms();
    } else if (kind == "poset") {
        FinPoset p = cx.ws.poset(doc.json, doc.dir);
        body["elements"] = p.size();
        body["complete_lattice"] = is_complete_lattice(p);
    } else if (kind == "monoid" || kind == "group") {
        FinMonoid m = cx.ws.monoid(doc.json, doc.dir);
        body["elements"] = m.size();
        body["group"] = m.is_group();
    } else if (kind == "action") {
        Action a = cx.ws.action(doc.json, doc.dir);
        body["total"] = a.total();
    } else if (kind == "cut") {
        if (doc.json.value("form", "absolute") == "simple") {
            Action a = cx.ws.action(doc.json.at("left"), doc.dir);
            Action b = cx.ws.action(doc.json.at("right"), doc.dir);
            CutSpaces sp = cut_spaces(a, b, true, cx.opt);
            body["valid"] = true;
            return from_report(body, check_simple_cut(simple_cut_from_json(doc.json, sp), sp));
        }
        AbsoluteCut c = absolute_cut_from_json(cx.ws, doc.json, doc.dir, cx.opt);
        body["valid"] = true;
        return from_report(body, check_absolute_cut(c, cx.opt));
    } else if (kind == "tight_diagram") {
        body["valid"] = true;
        if (doc.json.value("side", "left") == "left")
            return from_report(body, check_tight_diagram(left_diagram_from_json(cx.ws, doc.json, doc.dir, cx.opt), cx.opt));
        return from_report(body, check_tight_diagram(right_diagram_from_json(cx.ws, doc.json, doc.dir, cx.opt), cx.opt));
    } else {
        throw Error(ErrorKind::ParseError, "unknown kind '" + kind + "'");
    }
    body["valid"] = true;
    return {Pass, body, {}};
}

Result cmd_cone(Context& cx, const std::string& which, const std::string& file) {
    Action a = cx.ws.action(json(file), cx.root);
    Action out;
    if (which == "lan") {
        if (a.variance != Variance::Left) throw Error(ErrorKind::TypeMismatch, "lan takes a left action");
        out = lan(a, cx.opt).action;
    } else if (which == "ran") {
        if (a.variance != Variance::Right) throw Error(ErrorKind::TypeMismatch, "ran takes a right action");
        out = ran(a, cx.opt).action;
    } else {
        out = a.variance == Variance::Left ? monad_square(a, cx.opt) : comonad_square(a, cx.opt);
    }
    return {Pass, {{"size", out.total()}, {"result", to_json(out)}}, {}};
}

Result cmd_check_cut(Context& cx, const std::string& file) {
    auto doc = cx.ws.resolve(json(file), cx.root);
    if (kind_of(doc.json) != "cut") throw Error(ErrorKind::ParseError, "expected a cut");
    Action a = cx.ws.action(doc.json.at("left"), doc.dir);
    Action b = cx.ws.action(doc.json.at("right"), doc.dir);
    CutSpaces sp = cut_spaces(a, b, true, cx.opt);
    Report r;
    const std::string form = doc.json.value("form", "absolute");
    json body{{"form", form}};
    if (form == "simple") {
        SimpleCut s = simple_cut_from_json(doc.json, sp);
        r.merge(check_simple_cut(s, sp), "simple.");
        if (r.pass()) {
            r.merge(check_full_cut(simple_to_full(s, sp), sp), "full.");
            r.merge(check_absolute_cut(simple_to_absolute(s, sp), sp, cx.opt), "absolute.");
        }
    } else {
        AbsoluteCut c = absolute_cut_from_json(cx.ws, doc.json, doc.dir, cx.opt);
        r.merge(check_absolute_cut(c, sp, cx.opt), "absolute.");
        if (r.pass()) {
            SimpleCut s = absolute_to_simple(c, sp, cx.opt);
            r.merge(check_simple_cut(s, sp), "simple.");
            r.merge(check_full_cut(simple_to_full(s, sp), sp), "full.");
            r.merge(representable_generation_check(c, cx.opt), "generation.");
        }
    }
    return from_report(body, r);
}

json diagram_check(const std::function<Report()>& check) {
    try {
        return to_json(check());
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::NotIdempotent && e.kind() != ErrorKind::SplitMismatch) throw;
        json j = error_body(e);
        j["pass"] = false;
        return j;
    }
}

Result cmd_tight(Context& cx, bool colimit, const std::string& file) {
    auto doc = cx.ws.resolve(json(file), cx.root);
    if (kind_of(doc.json) != "tight_diagram") throw Error(ErrorKind::ParseError, "expected a tight diagram");
    json body;
    std::optional<Universal> u;
    Action diagram;
    std::function<Universal()> via;
    if (colimit) {
        LeftTightDiagram d = left_diagram_from_json(cx.ws, doc.json, doc.dir, cx.opt);
        diagram = d.diagram;
        body["diagram_check"] = diagram_check([&] { return check_tight_diagram(d, cx.opt); });
        u = tight_colimit(d, cx.opt);
        via = [&, d] { return tight_colimit_via_split(d, cx.opt); };
    } else {
        RightTightDiagram d = right_diagram_from_json(cx.ws, doc.json, doc.dir, cx.opt);
        diagram = d.diagram;
        body["diagram_check"] = diagram_check([&] { return check_tight_diagram(d, cx.opt); });
        u = tight_limit(d, cx.opt);
        via = [&, d] { return tight_limit_via_split(d, cx.opt); };
    }
    body["exists"] = u.has_value();
    if (u) body["universal"] = universal_to_json(diagram, *u);
    try {
        Universal v = via();
        body["via_split"] = universal_to_json(diagram, v);
        body["paths_agree"] = u && u->object == v.object && u->arrows == v.arrows;
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::NoLooseColimit && e.kind() != ErrorKind::NotSplittable) throw;
        body["via_split"] = error_body(e);
    }
    return {Pass, body, {}};
}

Result cmd_embed(Context& cx, const std::string& cat, const std::string& object) {
    CatPtr c = cx.ws.category(json(cat), cx.root);
    auto x = c->find_object(object);
    if (!x) throw Error(ErrorKind::UnknownObject, "'" + object + "'");
    AbsoluteCut cut = embed_object(c, *x, cx.opt);
    CutView v = cut_view(cut, cx.opt);
    json body{{"cut", to_json(cut)}, {"endomorphisms", cut_homs(v, v, cx.opt).size()}};
    return from_report(body, check_absolute_cut(cut, cx.opt));
}

Result cmd_group_lan(Context& cx, const std::string& group, const std::string& action) {
    FinMonoid m = cx.ws.monoid(json(group), cx.root);
    Action a = cx.ws.action(json(action), cx.root);
    GAction x = from_action(a, m);
    if (x.side != Variance::Left) throw Error(ErrorKind::TypeMismatch, "group-lan takes a left action");
    Freeness f = is_free(x);
    json body;
    body["free"] = f.free;
    if (!f.free && f.a >= 0)
        body["witness"] = {{"element", m.elements[f.a]}, {"other", m.elements[f.b]}, {"point", a.names[0][f.x]}};
    body["orbits"] = orbits(x).size();
    GAction out = m.is_group() ? group_lan(x) : monoid_lan(x, cx.opt);
    body["size"] = out.size;
    bool agrees = m.is_group() ? group_lan_agrees(x, cx.opt)
                               : static_cast<bool>(find_isomorphism(lan(a, cx.opt).action, to_action(out, a.base), cx.opt));
    body["agrees_with_generic"] = agrees;
    if (m.is_group() && f.free) {
        json rays = json::array();
        for (const auto& r : projective_rays(x, cx.opt)) {
            json t = json::array();
            for (int c : r.coords) t.push_back(m.elements[c]);
            rays.push_back(t);
        }
        body["rays"] = rays;
    }
    return {agrees ? Pass : CheckedFailure, body, {}};
}

Result cmd_z4_demo(Context& cx) {
    Z4Demo d = z4_demo(cx.opt);
    json table = json::array();
    for (const auto& r : d.table) {
        json row{{"orbits", r.orbits}, {"lan_size", r.lan_size}, {"lan_orbits", r.lan_orbits}};
        if (r.monad_size) row["monad_size"] = *r.monad_size;
        table.push_back(row);
    }
    json body{{"table", table},
              {"coproduct",
               {{"monad_of_coproduct", d.coproduct_monad},
                {"sum_of_monads", d.sum_of_monads},
                {"product_of_monads", d.product_of_monads}}}};
    return from_report(body, d.report);
}

Result cmd_corpus_verify(Context& cx, const std::string& dir) {
    AcceptanceConfig cfg{cx.seed, cx.opt};
    json criteria = json::array();
    bool pass = true;
    std::string lines;
    for (const auto& r : run_acceptance(cfg)) {
        criteria.push_back({{"id", r.id},
                            {"name", r.name},
                            {"pass", r.pass},
                            {"seconds", r.seconds},
                            {"budget", r.budget},
                            {"detail", r.detail}});
        pass = pass && r.pass;
        lines += format_line(r) + "\n";
    }
    json golden = verify_golden(dir.empty() ? fs::path(TIGHTCAT_CORPUS_DIR) : fs::path(dir));
    for (const auto& g : golden) {
        pass = pass && g["pass"].get<bool>();
        lines += std::string(g["pass"].get<bool>() ? "PASS" : "FAIL") + " golden " + g["file"].get<std::string>() +
                 (g.contains("detail") ? " - " + g["detail"].get<std::string>() : "") + "\n";
    }
    json body{{"criteria", criteria}, {"golden", golden}, {"pass", pass}};
    return {pass ? Pass : CheckedFailure, body, lines};
}

}  // namespace

std::string render_text(const json& j) {
    std::ostringstream out;
    auto rec = [&](auto&& self, const json& v, const std::string& path) -> void {
        if (v.is_object() && !v.empty()) {
            for (const auto& [k, x] : v.items()) self(self, x, path.empty() ? k : path + "." + k);
        } else if (v.is_array() && !v.empty() && (v[0].is_object() || v[0].is_array())) {
            for (size_t i = 0; i < v.size(); ++i) self(self, v[i], path + "[" + std::to_string(i) + "]");
        } else {
            out << path << " = " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
        }
    };
    rec(rec, j, "");
    return out.str();
}

Result run(const std::vector<std::string>& args, const fs::path& root) {
    CLI::App app{"Finite categorical completions: cuts, tight limits and their oracles", "tightcat"};
    app.require_subcommand(1);
    app.fallthrough();
    Context cx{{}, 1, root, Workspace(root)};
    std::size_t cap = cx.opt.cap;
    std::string format = "json";
    app.add_option("--cap", cap, "Search cap (states per search)");
    app.add_option("--seed", cx.seed, "Seed for randomized corpora");
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));

    std::string f1, f2;
    int fiber_cap = 2;
    std::function<Result()> action;
    auto file_cmd = [&](const std::string& name, const std::string& help, std::function<Result()> fn) {
        auto* sub = app.add_subcommand(name, help);
        sub->add_option("file", f1)->required();
        sub->callback([&, fn] { action = fn; });
        return sub;
    };
    file_cmd("validate", "Parse and check a document", [&] { return cmd_validate(cx, f1); });
    file_cmd("dm", "Dedekind-MacNeille completion of a poset", [&] {
        FinPoset p = cx.ws.poset(json(f1), cx.root);
        return Result{Pass, dm_body(p, dm_completion(p)), {}};
    });
    file_cmd("dm-oracle", "Powerset oracle for the completion", [&] {
        FinPoset p = cx.ws.poset(json(f1), cx.root);
        auto oracle = oracle_dm(p, cx.opt);
        auto dm = dm_completion(p);
        auto key = [&](std::vector<PosetCut> v) {
            std::sort(v.begin(), v.end(), cut_before);
            return to_json(p, v);
        };
        bool agrees = key(oracle) == key(dm.cuts) && order_isomorphism(dm.lattice, cut_poset(p, oracle));
        json body{{"size", oracle.size()}, {"cuts", key(oracle)}, {"agrees", agrees}};
        return Result{agrees ? Pass : CheckedFailure, body, {}};
    });
    for (const char* w : {"lan", "ran", "square"})
        file_cmd(w, std::string("Compute ") + w + " of an action", [&, w] { return cmd_cone(cx, w, f1); });
    {
        auto* sub = app.add_subcommand("gaps", "Enumerate gaps between a left and a right action");
        sub->add_option("left", f1)->required();
        sub->add_option("right", f2)->required();
        sub->callback([&] {
            action = [&] {
                Action a = cx.ws.action(json(f1), cx.root);
                Action b = cx.ws.action(json(f2), cx.root);
                return Result{Pass, gaps_body(gaps_enumerate(a, b, cx.opt), a, b), {}};
            };
        });
    }
    file_cmd("check-cut", "Check a cut in every presentation", [&] { return cmd_check_cut(cx, f1); });
    {
        auto* sub = app.add_subcommand("cuts-enum", "Enumerate cuts up to isomorphism");
        sub->add_option("category", f1)->required();
        sub->add_option("--cap", fiber_cap, "Largest fiber size")->check(CLI::Range(0, 8));
        sub->callback([&] {
            action = [&] {
                CatPtr c = cx.ws.category(json(f1), cx.root);
                auto cuts = enumerate_cuts(c, fiber_cap, cx.opt);
                json list = json::array();
                for (const auto& cut : cuts) list.push_back(to_json(cut));
                return Result{Pass, {{"count", cuts.size()}, {"cuts", list}}, {}};
            };
        });
    }
    file_cmd("tight-colim", "Tight colimit of a left tight diagram", [&] { return cmd_tight(cx, true, f1); });
    file_cmd("tight-lim", "Tight limit of a right tight diagram", [&] { return cmd_tight(cx, false, f1); });
    {
        auto* sub = app.add_subcommand("embed", "The cut of a representable");
        sub->add_option("category", f1)->required();
        sub->add_option("object", f2)->required();
        sub->callback([&] { action = [&] { return cmd_embed(cx, f1, f2); }; });
    }
    {
        auto* sub = app.add_subcommand("group-lan", "Cocones over a group action in closed form");
        sub->add_option("group", f1)->required();
        sub->add_option("action", f2)->required();
        sub->callback([&] { action = [&] { return cmd_group_lan(cx, f1, f2); }; });
    }
    app.add_subcommand("z4-demo", "Closed forms over the cyclic group of order four")->callback([&] {
        action = [&] { return cmd_z4_demo(cx); };
    });
    {
        auto* sub = app.add_subcommand("corpus-verify", "Run the acceptance suite and the golden files");
        sub->add_option("--corpus", f1, "Corpus directory");
        sub->callback([&] { action = [&] { return cmd_corpus_verify(cx, f1); }; });
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        return {Pass, json::object(), app.help()};
    } catch (const CLI::ParseError& e) {
        json body{{"error", "Usage"}, {"message", e.what()}};
        return {UsageOrLimit, body, body.dump() + "\n"};
    }
    cx.opt.cap = cap;

    Result r;
    try {
        r = action();
    } catch (const Error& e) {
        r = {status_of(e.kind()), error_body(e), {}};
    } catch (const nlohmann::json::exception& e) {
        r = {UsageOrLimit, {{"error", "ParseError"}, {"message", e.what()}}, {}};
    }
    if (format == "text") {
        if (r.text.empty()) r.text = render_text(r.body);
    } else {
        r.text = r.body.dump(2) + "\n";
    }
    return r;
}

json verify_golden(const fs::path& dir) {
    json out = json::array();
    const fs::path golden = dir / "golden";
    if (!fs::exists(golden)) return out;
    std::vector<fs::path> files;
    for (const auto& e : fs::directory_iterator(golden))
        if (e.path().extension() == ".json") files.push_back(e.path());
    std::sort(files.begin(), files.end());
    for (const auto& f : files) {
        json entry{{"file", f.filename().string()}};
        try {
            std::ifstream in(f);
            json g = json::parse(in);
            Result r = run(g.at("args").get<std::vector<std::string>>(), dir);
            if (r.status != g.at("status").get<int>())
                entry["detail"] = "status " + std::to_string(r.status);
            else if (r.body != g.at("expect"))
                entry["detail"] = "output differs";
        } catch (const std::exception& e) {
            entry["detail"] = e.what();
        }
        entry["pass"] = !entry.contains("detail");
        out.push_back(entry);
    }
    return out;
}

}  // namespace tightcat::cli
