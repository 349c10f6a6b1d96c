#pragma once

#include <filesystem>
#include <map>
#include <string>

#include <json.hpp>

#include "tightcat/cuts.hpp"
#include "tightcat/groups.hpp"
#include "tightcat/poset.hpp"
#include "tightcat/tight.hpp"

namespace tightcat {

using Json = nlohmann::json;

// Loaded documents by registry name. A reference is either an inline object,
// a registered name, a builtin ("z<n>", "s3", "terminal", "idempotent"), or a
// path relative to the referring file.
class Workspace {
public:
    explicit Workspace(std::filesystem::path root = ".") : root_(std::move(root)) {}

    struct Doc {
        Json json;
        std::filesystem::path dir;
    };
    // Throws ParseError or UnknownReference.
    Doc load(const std::string& path);
    Doc resolve(const Json& ref, const std::filesystem::path& dir);

    CatPtr category(const Json& ref, const std::filesystem::path& dir);
    FinPoset poset(const Json& ref, const std::filesystem::path& dir);
    FinMonoid monoid(const Json& ref, const std::filesystem::path& dir);
    Action action(const Json& ref, const std::filesystem::path& dir);

    Doc load_ref(const std::string& ref) { return resolve(Json(ref), root_); }

private:
    std::filesystem::path root_;
    std::map<std::string, Doc> registry_;
    void remember(const Doc& d);
};

std::string kind_of(const Json& doc);

Json to_json(const FinCategory& c);
Json to_json(const FinPoset& p);
Json to_json(const FinMonoid& m);
Json to_json(const Action& a);
Json to_json(const Report& r);
Json to_json(const FinPoset& p, const std::vector<PosetCut>& cuts);
Json map_to_json(const EqMap& m, const Action& source, const Action& target);
EqMap map_from_json(const Json& j, const Action& source, const Action& target);
Json to_json(const AbsoluteCut& c);
Json universal_to_json(const Action& diagram, const Universal& u);

// Cut documents: form "simple" or "absolute", maps by element names.
// Maps of a simple cut over the spaces of its two actions.
SimpleCut simple_cut_from_json(const Json& doc, const CutSpaces& sp);
AbsoluteCut absolute_cut_from_json(Workspace& ws, const Json& doc, const std::filesystem::path& dir,
                                   const Options& opt = {});
LeftTightDiagram left_diagram_from_json(Workspace& ws, const Json& doc, const std::filesystem::path& dir,
                                        const Options& opt = {});
RightTightDiagram right_diagram_from_json(Workspace& ws, const Json& doc, const std::filesystem::path& dir,
                                          const Options& opt = {});

}  // namespace tightcat
