#include <fstream>

#include "commands.hpp"
#include "helpers.hpp"

using tightcat::cli::run;

namespace {

const std::filesystem::path corpus = TIGHTCAT_CORPUS_DIR;

}

TEST_SUITE("cli") {
    TEST_CASE("completion of an antichain") {
        auto r = run({"dm", "posets/antichain2.json"}, corpus);
        CHECK(r.status == 0);
        CHECK(r.body["size"] == 4);
        CHECK(r.body["cuts"].size() == 4);
    }

    TEST_CASE("exit statuses") {
        CHECK(run({"validate", "categories/missing_composite.json"}, corpus).status == 1);
        CHECK(run({"validate", "categories/missing_composite.json"}, corpus).body["error"] == "MissingComposite");
        CHECK(run({"validate", "categories/truncated.json"}, corpus).status == 2);
        CHECK(run({"validate", "categories/absent.json"}, corpus).status == 2);
        CHECK(run({"--cap", "1", "lan", "actions/z4_free2.json"}, corpus).status == 2);
        CHECK(run({"lan"}, corpus).status == 2);
        CHECK(run({}, corpus).status == 2);
        CHECK(run({"--format", "xml", "z4-demo"}, corpus).status == 2);
    }

    TEST_CASE("builtin references and inline documents") {
        auto r = run({"validate", "s3"}, corpus);
        CHECK(r.status == 0);
        CHECK(r.body["group"] == true);
        CHECK(run({"embed", "z4", "o"}, corpus).body["endomorphisms"] == 4);
        CHECK(run({"embed", "z4", "p"}, corpus).body["error"] == "UnknownObject");
    }

    TEST_CASE("the fiber cap belongs to cuts-enum") {
        auto r = run({"--cap", "100000", "cuts-enum", "z4", "--cap", "4"}, corpus);
        CHECK(r.status == 0);
        CHECK(r.body["count"] == 3);
        CHECK(run({"cuts-enum", "z4", "--cap", "1"}, corpus).body["count"] == 2);
    }

    TEST_CASE("text output is line oriented") {
        auto r = run({"--format", "text", "group-lan", "z4", "actions/z4_free2.json"}, corpus);
        CHECK(r.status == 0);
        CHECK(r.text.find("size = 16\n") != std::string::npos);
        CHECK(r.text.find("free = true\n") != std::string::npos);
    }

    TEST_CASE("tight colimit outputs") {
        auto r = run({"tight-colim", "diagrams/pentagon_rep_b.json"}, corpus);
        CHECK(r.body["exists"] == true);
        CHECK(r.body["universal"]["object"] == "b");
        CHECK(r.body["paths_agree"] == true);
        auto z = run({"tight-colim", "diagrams/z4_free2.json"}, corpus);
        CHECK(z.body["exists"] == false);
        CHECK(z.body["via_split"]["error"] == "NoLooseColimit");
    }

    TEST_CASE("golden files") {
        auto results = tightcat::cli::verify_golden(corpus);
        CHECK(results.size() >= 20);
        for (const auto& g : results) {
            CAPTURE(g.dump());
            CHECK(g["pass"] == true);
        }
    }
}

TEST_SUITE("cli") {
    TEST_CASE("a broken golden file is reported by name") {
        namespace fs = std::filesystem;
        fs::path tmp = fs::temp_directory_path() / "tightcat_golden_copy";
        fs::remove_all(tmp);
        fs::copy(corpus, tmp, fs::copy_options::recursive);
        {
            std::ifstream in(tmp / "golden" / "dm_antichain.json");
            nlohmann::json g = nlohmann::json::parse(in);
            g["expect"]["size"] = 5;
            std::ofstream(tmp / "golden" / "dm_antichain.json") << g.dump(1);
        }
        auto results = tightcat::cli::verify_golden(tmp);
        int failed = 0;
        for (const auto& g : results)
            if (g["pass"] != true) {
                ++failed;
                CHECK(g["file"] == "dm_antichain.json");
            }
        CHECK(failed == 1);
        auto r = run({"corpus-verify", "--corpus", tmp.string()});
        CHECK(r.status == 1);
        fs::remove_all(tmp);
    }

    TEST_CASE("the seed does not change verdicts") {
        for (const char* seed : {"3", "17"}) {
            auto r = run({"--seed", seed, "dm-oracle", "posets/zigzag.json"}, corpus);
            CHECK(r.status == 0);
            CHECK(r.body == run({"dm-oracle", "posets/zigzag.json"}, corpus).body);
            CHECK(run({"--seed", seed, "group-lan", "actions/z4_free2.json"}, corpus).body ==
                  run({"group-lan", "actions/z4_free2.json"}, corpus).body);
        }
    }
}
