#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "support.hpp"

using namespace liecoh;
using liecoh::testing::data_dir;
using json = io::json;

TEST(Catalog, ListAndLookup) {
    auto names = catalog::list();
    EXPECT_TRUE(std::is_sorted(names.begin(), names.end()));
    for (const char* must : {"abelian1", "abelian2", "abelian3", "abelian4", "aff1", "heisenberg3", "n4", "sl2", "so3",
                             "sl2_plus_line", "sl2_plus_sl2", "sl2_semidirect_natural", "solvable3"})
        EXPECT_NE(std::find(names.begin(), names.end(), must), names.end()) << must;
    EXPECT_THROW(catalog::get("nope"), InvalidInput);
    for (const auto& n : names) {
        auto e = catalog::get(n);
        EXPECT_EQ(e.algebra.name(), n);
        EXPECT_LE(e.algebra.dim(), 6u);
        for (const auto& [label, m] : e.modules) {
            EXPECT_FALSE(validate_rep(m).has_value()) << n << " " << label;
            EXPECT_LE(m.dim, 16u);
        }
    }
}

TEST(Catalog, CommittedFilesMatchBuilders) {
    for (const auto& n : catalog::list()) {
        auto e = catalog::get(n);
        auto on_disk = io::read_json_file(data_dir() + "/" + n + ".json");
        EXPECT_EQ(on_disk, io::algebra_json(e.algebra)) << n;
        for (const auto& [label, m] : e.modules) {
            auto mj = io::read_json_file(data_dir() + "/" + n + "." + label + ".module.json");
            EXPECT_EQ(mj, io::module_json(m)) << n << " " << label;
        }
    }
}

TEST(Catalog, ExpectedVerdicts) {
    for (const auto& n : catalog::list()) {
        auto j = io::read_json_file(data_dir() + "/expected/" + n + ".expected.json");
        auto l = io::read_algebra(data_dir() + "/" + n + ".json");
        EXPECT_EQ(to_string(classify(l).kind), j.at("verdict").at("value").get<std::string>()) << n;
    }
}

TEST(Io, AlgebraRoundTrip) {
    for (const auto& n : catalog::list()) {
        auto l = catalog::get(n).algebra;
        auto back = io::algebra_from_json(json::parse(io::algebra_json(l).dump()));
        EXPECT_TRUE(back.same_structure(l));
        EXPECT_EQ(back.name(), l.name());
        EXPECT_EQ(back.basis_names(), l.basis_names());
    }
}

TEST(Io, RationalConstants) {
    auto j = json::parse(R"({"dim": 2, "brackets": [{"i": 0, "j": 1, "terms": [{"k": 1, "c": "2/4"}]}]})");
    auto l = io::algebra_from_json(j);
    EXPECT_EQ(l.constant(0, 1, 1), Rational(1, 2));
    EXPECT_EQ(l.basis_names(), (std::vector<std::string>{"e0", "e1"}));
    auto k = json::parse(R"({"dim": 2, "brackets": [{"i": 0, "j": 1, "terms": [{"k": 1, "c": 3}]}]})");
    EXPECT_EQ(io::algebra_from_json(k).constant(0, 1, 1), 3);
}

TEST(Io, MalformedAlgebra) {
    for (const char* bad : {
             R"({"brackets": []})",
             R"({"dim": 2, "brackets": [{"i": 1, "j": 0, "terms": []}]})",
             R"({"dim": 2, "brackets": [{"i": 0, "j": 2, "terms": []}]})",
             R"({"dim": 2, "brackets": [{"i": 0, "j": 1, "terms": [{"k": 5, "c": "1"}]}]})",
             R"({"dim": 2, "brackets": [{"i": 0, "j": 1, "terms": [{"k": 1, "c": "1/0"}]}]})",
             R"({"dim": 2, "brackets": [{"i": 0, "j": 1, "terms": [{"k": 1, "c": 0.5}]}]})",
             R"({"dim": 2, "basis": ["a"]})",
             R"({"dim": "two"})",
         })
        EXPECT_THROW(io::algebra_from_json(json::parse(bad)), InvalidInput) << bad;
}

TEST(Io, ModuleRoundTripAndErrors) {
    auto nat = catalog::sl2_natural();
    auto back = io::module_from_json(io::module_json(nat), nat.algebra);
    EXPECT_TRUE(back.same_matrices(nat));
    auto j = io::module_json(nat);
    j["action"].erase(0);
    EXPECT_THROW(io::module_from_json(j, nat.algebra), InvalidInput);
    auto k = io::module_json(nat);
    k["dim"] = 3;
    EXPECT_THROW(io::module_from_json(k, nat.algebra), InvalidInput);
}

TEST(Io, CocycleRoundTrip) {
    auto l = catalog::heisenberg3();
    auto v = classify(l);
    ASSERT_TRUE(v.witness.has_value());
    const auto& w = v.witness->cocycle;
    auto back = io::cocycle_from_json(io::cocycle_json(w), l.dim(), w.module_dim);
    EXPECT_EQ(back, w);
    auto j = io::cocycle_json(w);
    j["tuples"][0] = json::array({1, 0});
    EXPECT_THROW(io::cocycle_from_json(j, l.dim(), w.module_dim), InvalidInput);
}

TEST(Io, VerdictShape) {
    auto a = io::verdict_json(classify(catalog::aff1()));
    EXPECT_EQ(a.at("case"), "witness");
    EXPECT_TRUE(a.at("decomposition").is_null());
    EXPECT_EQ(a.at("witness").at("provenance"), "codim1-nonsplit");
    EXPECT_EQ(a.at("witness").at("h2_dim"), 1);
    auto s = io::verdict_json(classify(catalog::sl2_plus_line()));
    EXPECT_EQ(s.at("case"), "semisimple_plus_line");
    EXPECT_TRUE(s.at("witness").is_null());
    EXPECT_EQ(s.at("decomposition").at("line").size(), 1u);
    // Same input, same bytes.
    EXPECT_EQ(io::verdict_json(classify(catalog::sl2_semidirect_natural())).dump(2),
              io::verdict_json(classify(catalog::sl2_semidirect_natural())).dump(2));
}

TEST(Io, FileErrors) {
    EXPECT_THROW(io::read_json_file(data_dir() + "/missing.json"), InvalidInput);
    auto tmp = std::filesystem::temp_directory_path() / "liecoh_bad.json";
    std::ofstream(tmp) << "{ not json";
    EXPECT_THROW(io::read_json_file(tmp.string()), InvalidInput);
    std::filesystem::remove(tmp);
}
