#include "tightcat/io.hpp"

#include <algorithm>
#include <fstream>

#include "tightcat/error.hpp"

namespace tightcat {

namespace fs = std::filesystem;

std::string kind_of(const Json& doc) {
    if (!doc.is_object() || !doc.contains("kind") || !doc["kind"].is_string())
        throw Error(ErrorKind::ParseError, "document without a \"kind\"");
    return doc["kind"].get<std::string>();
}

namespace {

std::optional<Json> builtin(const std::string& name) {
    if (name == "terminal") {
        Json j = to_json(*terminal_category());
        j["name"] = name;
        return j;
    }
    std::optional<FinMonoid> m;
    if (name == "s3") m = symmetric_group3();
    if (name == "idempotent") m = idempotent_monoid();
    if (name.size() > 1 && name[0] == 'z' && name.find_first_not_of("0123456789", 1) == std::string::npos) {
        int n = std::stoi(name.substr(1));
        if (n >= 1 && n <= 64) m = cyclic_group(n);
    }
    if (!m) return std::nullopt;
    Json j = to_json(*m);
    j["name"] = name;
    if (m->is_group()) j["kind"] = "group";
    return j;
}

// shown is the reference as the user wrote it
Json parse_file(const fs::path& p, const std::string& shown) {
    std::ifstream in(p);
    if (!in) throw Error(ErrorKind::UnknownReference, "cannot open '" + shown + "'");
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw Error(ErrorKind::ParseError, shown + ": " + e.what());
    }
}

const Json& field(const Json& doc, const char* key) {
    if (!doc.is_object() || !doc.contains(key))
        throw Error(ErrorKind::ParseError, std::string("missing field \"") + key + "\"");
    return doc[key];
}

int element_index(const Action& a, int x, const std::string& name) {
    int i = a.find_element(x, name);
    if (i < 0)
        throw Error(ErrorKind::UnknownElement, "'" + name + "' in fiber of '" + a.base->object_name(x) + "'");
    return i;
}

}  // namespace

void Workspace::remember(const Doc& d) {
    if (d.json.is_object() && d.json.contains("name") && d.json["name"].is_string())
        registry_[d.json["name"].get<std::string>()] = d;
}

Workspace::Doc Workspace::load(const std::string& path) {
    fs::path p = fs::path(path).is_absolute() ? fs::path(path) : root_ / path;
    Doc d{parse_file(p, path), p.parent_path()};
    kind_of(d.json);
    remember(d);
    return d;
}

Workspace::Doc Workspace::resolve(const Json& ref, const fs::path& dir) {
    if (ref.is_object()) {
        Doc d{ref, dir};
        remember(d);
        return d;
    }
    if (!ref.is_string()) throw Error(ErrorKind::ParseError, "reference must be an object or a string");
    const std::string s = ref.get<std::string>();
    if (auto it = registry_.find(s); it != registry_.end()) return it->second;
    if (auto b = builtin(s)) {
        Doc d{*b, dir};
        remember(d);
        return d;
    }
    fs::path p = dir / s;
    if (!fs::exists(p)) throw Error(ErrorKind::UnknownReference, "no document, builtin or file named '" + s + "'");
    Doc d{parse_file(p, s), p.parent_path()};
    remember(d);
    return d;
}

CatPtr Workspace::category(const Json& ref, const fs::path& dir) {
    Doc d = resolve(ref, dir);
    const std::string kind = kind_of(d.json);
    if (kind == "poset") return thin_category(poset(d.json, d.dir));
    if (kind == "monoid" || kind == "group") return as_category(monoid(d.json, d.dir));
    if (kind != "category") throw Error(ErrorKind::ParseError, "expected a category, got '" + kind + "'");
    RawCategory raw;
    raw.objects = field(d.json, "objects").get<std::vector<std::string>>();
    if (d.json.contains("morphisms"))
        for (const auto& m : d.json["morphisms"])
            raw.morphisms.push_back({field(m, "id").get<std::string>(), field(m, "dom").get<std::string>(),
                                     field(m, "cod").get<std::string>()});
    if (d.json.contains("composition"))
        for (const auto& e : d.json["composition"]) {
            auto v = e.get<std::vector<std::string>>();
            if (v.size() != 3) throw Error(ErrorKind::ParseError, "composition entries are [first, second, result]");
            raw.composition.push_back({v[0], v[1], v[2]});
        }
    return validate_category(raw);
}

FinPoset Workspace::poset(const Json& ref, const fs::path& dir) {
    Doc d = resolve(ref, dir);
    if (kind_of(d.json) != "poset") throw Error(ErrorKind::ParseError, "expected a poset");
    std::vector<std::pair<std::string, std::string>> leq;
    if (d.json.contains("leq"))
        for (const auto& e : d.json["leq"]) {
            auto v = e.get<std::vector<std::string>>();
            if (v.size() != 2) throw Error(ErrorKind::ParseError, "order entries are [lower, upper]");
            leq.push_back({v[0], v[1]});
        }
    auto elements = field(d.json, "elements").get<std::vector<std::string>>();
    for (const auto& [x, y] : leq)
        for (const auto& s : {x, y})
            if (std::find(elements.begin(), elements.end(), s) == elements.end())
                throw Error(ErrorKind::UnknownElement, "'" + s + "'");
    return make_poset(elements, leq);
}

FinMonoid Workspace::monoid(const Json& ref, const fs::path& dir) {
    Doc d = resolve(ref, dir);
    const std::string kind = kind_of(d.json);
    if (kind != "monoid" && kind != "group") throw Error(ErrorKind::ParseError, "expected a monoid or group");
    auto elements = field(d.json, "elements").get<std::vector<std::string>>();
    auto table = field(d.json, "table").get<std::vector<std::vector<std::string>>>();
    std::vector<std::vector<int>> t;
    for (const auto& row : table) {
        std::vector<int> r;
        for (const auto& s : row) {
            auto it = std::find(elements.begin(), elements.end(), s);
            if (it == elements.end()) throw Error(ErrorKind::UnknownElement, "'" + s + "' in table");
            r.push_back(static_cast<int>(it - elements.begin()));
        }
        t.push_back(std::move(r));
    }
    FinMonoid m = validate_monoid(elements, t);
    if (kind == "group" && !m.is_group()) throw Error(ErrorKind::TypeMismatch, "not every element is invertible");
    return m;
}

Action Workspace::action(const Json& ref, const fs::path& dir) {
    Doc d = resolve(ref, dir);
    if (kind_of(d.json) != "action") throw Error(ErrorKind::ParseError, "expected an action");
    CatPtr base = category(field(d.json, "category"), d.dir);
    RawAction raw;
    const std::string variance = d.json.value("variance", "left");
    if (variance != "left" && variance != "right") throw Error(ErrorKind::ParseError, "variance is left or right");
    raw.variance = variance == "left" ? Variance::Left : Variance::Right;
    for (const auto& [obj, elems] : field(d.json, "fibers").items())
        raw.fibers.push_back({obj, elems.get<std::vector<std::string>>()});
    // objects without a listed fiber are empty
    if (d.json.contains("maps"))
        for (const auto& [mor, table] : d.json["maps"].items()) {
            std::vector<std::pair<std::string, std::string>> t;
            for (const auto& [from, to] : table.items()) t.push_back({from, to.get<std::string>()});
            raw.maps.push_back({mor, t});
        }
    return validate_action(base, raw);
}

Json to_json(const FinCategory& c) {
    Json j;
    // one object with a named unit: written as its monoid
    if (c.num_objects() == 1 && c.morphism(c.identity(0)).id != identity_id(c.object_name(0))) {
        j["kind"] = "monoid";
        j["elements"] = Json::array();
        j["table"] = Json::array();
        for (int a = 0; a < c.num_morphisms(); ++a) {
            j["elements"].push_back(c.morphism(a).id);
            Json row = Json::array();
            for (int b = 0; b < c.num_morphisms(); ++b) row.push_back(c.morphism(c.compose(a, b)).id);
            j["table"].push_back(row);
        }
        return j;
    }
    j["kind"] = "category";
    j["objects"] = c.objects();
    j["morphisms"] = Json::array();
    j["composition"] = Json::array();
    for (int m = 0; m < c.num_morphisms(); ++m)
        if (!c.is_identity(m))
            j["morphisms"].push_back(
                {{"id", c.morphism(m).id}, {"dom", c.object_name(c.dom(m))}, {"cod", c.object_name(c.cod(m))}});
    for (int f = 0; f < c.num_morphisms(); ++f)
        for (int g = 0; g < c.num_morphisms(); ++g) {
            if (c.is_identity(f) || c.is_identity(g)) continue;
            int h = c.compose(f, g);
            if (h >= 0) j["composition"].push_back({c.morphism(f).id, c.morphism(g).id, c.morphism(h).id});
        }
    return j;
}

Json to_json(const FinPoset& p) {
    Json j;
    j["kind"] = "poset";
    j["elements"] = p.elements();
    j["leq"] = Json::array();
    for (int x = 0; x < p.size(); ++x)
        for (int y = 0; y < p.size(); ++y)
            if (x != y && p.leq(x, y)) j["leq"].push_back({p.name(x), p.name(y)});
    return j;
}

Json to_json(const FinMonoid& m) {
    Json j;
    j["kind"] = "monoid";
    j["elements"] = m.elements;
    j["table"] = Json::array();
    for (const auto& row : m.table) {
        Json r = Json::array();
        for (int v : row) r.push_back(m.elements[v]);
        j["table"].push_back(r);
    }
    return j;
}

Json to_json(const Action& a) {
    const auto& C = *a.base;
    Json j;
    j["kind"] = "action";
    j["variance"] = a.variance == Variance::Left ? "left" : "right";
    j["category"] = to_json(C);
    j["fibers"] = Json::object();
    for (int x = 0; x < a.num_objects(); ++x) j["fibers"][C.object_name(x)] = a.names[x];
    j["maps"] = Json::object();
    for (int f = 0; f < C.num_morphisms(); ++f) {
        if (C.is_identity(f)) continue;
        Json t = Json::object();
        const int in = a.input_object(f), out = a.output_object(f);
        for (int i = 0; i < a.fiber_size(in); ++i) t[a.names[in][i]] = a.names[out][a.act(f, i)];
        j["maps"][C.morphism(f).id] = t;
    }
    return j;
}

Json to_json(const Report& r) {
    Json j;
    j["pass"] = r.pass();
    j["checks"] = Json::array();
    for (const auto& c : r.checks) {
        Json e{{"name", c.name}, {"pass", c.pass}};
        if (!c.detail.empty()) e["detail"] = c.detail;
        j["checks"].push_back(e);
    }
    return j;
}

Json to_json(const FinPoset& p, const std::vector<PosetCut>& cuts) {
    Json arr = Json::array();
    for (const auto& c : cuts) {
        Json lower = Json::array(), upper = Json::array();
        for (int x = 0; x < p.size(); ++x) {
            if (c.lower.test(x)) lower.push_back(p.name(x));
            if (c.upper.test(x)) upper.push_back(p.name(x));
        }
        arr.push_back({{"lower", lower}, {"upper", upper}});
    }
    return arr;
}

Json map_to_json(const EqMap& m, const Action& source, const Action& target) {
    Json j = Json::object();
    for (int x = 0; x < source.num_objects(); ++x) {
        Json t = Json::object();
        for (int i = 0; i < source.fiber_size(x); ++i) t[source.names[x][i]] = target.names[x][m.comp[x][i]];
        j[source.base->object_name(x)] = t;
    }
    return j;
}

EqMap map_from_json(const Json& j, const Action& source, const Action& target) {
    const auto& C = *source.base;
    EqMap m;
    m.comp.resize(source.num_objects());
    for (int x = 0; x < source.num_objects(); ++x) {
        m.comp[x].assign(source.fiber_size(x), -1);
        if (source.fiber_size(x) == 0) continue;
        const std::string& obj = C.object_name(x);
        if (!j.contains(obj)) throw Error(ErrorKind::FiberMismatch, "map has no component at '" + obj + "'");
        for (const auto& [from, to] : j[obj].items())
            m.comp[x][element_index(source, x, from)] = element_index(target, x, to.get<std::string>());
        for (int v : m.comp[x])
            if (v < 0) throw Error(ErrorKind::FiberMismatch, "map is not total at '" + obj + "'");
    }
    if (!is_equivariant(source, target, m)) throw Error(ErrorKind::TypeMismatch, "map is not equivariant");
    return m;
}

Json to_json(const AbsoluteCut& c) {
    CutSpaces sp = cut_spaces(c.left, c.right, true);
    Json j;
    j["kind"] = "cut";
    j["form"] = "absolute";
    j["left"] = to_json(c.left);
    j["right"] = to_json(c.right);
    j["a_lower"] = map_to_json(c.a_lower, sp.ran_b.action, sp.ran_b.action);
    j["a_upper"] = map_to_json(c.a_upper, sp.lan_a.action, sp.lan_a.action);
    j["phi_lower"] = map_to_json(c.phi_lower, sp.ran_lan_a.action, sp.ran_lan_a.action);
    j["phi_upper"] = map_to_json(c.phi_upper, sp.lan_ran_b.action, sp.lan_ran_b.action);
    return j;
}

Json universal_to_json(const Action& diagram, const Universal& u) {
    const auto& C = *diagram.base;
    Json j;
    j["object"] = C.object_name(u.object);
    Json legs = Json::object();
    const auto off = diagram.offsets();
    for (int x = 0; x < diagram.num_objects(); ++x) {
        if (diagram.fiber_size(x) == 0) continue;
        Json t = Json::object();
        for (int i = 0; i < diagram.fiber_size(x); ++i) t[diagram.names[x][i]] = C.morphism(u.arrows[off[x] + i]).id;
        legs[C.object_name(x)] = t;
    }
    j["legs"] = legs;
    return j;
}

SimpleCut simple_cut_from_json(const Json& doc, const CutSpaces& sp) {
    const Action& a = sp.lan_a.source;
    const Action& b = sp.ran_b.source;
    SimpleCut s;
    s.left = a;
    s.right = b;
    s.g_lower = map_from_json(field(doc, "g_lower"), a, sp.ran_b.action);
    s.g_upper = map_from_json(field(doc, "g_upper"), b, sp.lan_a.action);
    s.j_lower = map_from_json(field(doc, "j_lower"), sp.ran_b.action, a);
    s.j_upper = map_from_json(field(doc, "j_upper"), sp.lan_a.action, b);
    return s;
}

AbsoluteCut absolute_cut_from_json(Workspace& ws, const Json& doc, const fs::path& dir, const Options& opt) {
    AbsoluteCut c;
    c.left = ws.action(field(doc, "left"), dir);
    c.right = ws.action(field(doc, "right"), dir);
    if (c.left.variance != Variance::Left || c.right.variance != Variance::Right)
        throw Error(ErrorKind::TypeMismatch, "a cut pairs a left action with a right action");
    CutSpaces sp = cut_spaces(c.left, c.right, true, opt);
    c.a_lower = map_from_json(field(doc, "a_lower"), sp.ran_b.action, sp.ran_b.action);
    c.a_upper = map_from_json(field(doc, "a_upper"), sp.lan_a.action, sp.lan_a.action);
    c.phi_lower = map_from_json(field(doc, "phi_lower"), sp.ran_lan_a.action, sp.ran_lan_a.action);
    c.phi_upper = map_from_json(field(doc, "phi_upper"), sp.lan_ran_b.action, sp.lan_ran_b.action);
    return c;
}

LeftTightDiagram left_diagram_from_json(Workspace& ws, const Json& doc, const fs::path& dir, const Options& opt) {
    Action d = ws.action(field(doc, "diagram"), dir);
    if (d.variance != Variance::Left) throw Error(ErrorKind::TypeMismatch, "left tight diagrams take a left action");
    ConeSpace sp = lan(d, opt);
    if (!doc.contains("idempotent")) return {d, identity_map(sp.action)};
    return {d, map_from_json(doc["idempotent"], sp.action, sp.action)};
}

RightTightDiagram right_diagram_from_json(Workspace& ws, const Json& doc, const fs::path& dir, const Options& opt) {
    Action d = ws.action(field(doc, "diagram"), dir);
    if (d.variance != Variance::Right)
        throw Error(ErrorKind::TypeMismatch, "right tight diagrams take a right action");
    ConeSpace sp = ran(d, opt);
    if (!doc.contains("idempotent")) return {d, identity_map(sp.action)};
    return {d, map_from_json(doc["idempotent"], sp.action, sp.action)};
}

}  // namespace tightcat
