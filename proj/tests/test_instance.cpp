#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>
#include <string>

#include <dcover/instance.hpp>

using namespace dcover;
namespace fs = std::filesystem;

namespace {

Instance tiny() {
    Instance inst;
    inst.name = "tiny";
    inst.points = {{0.0, 0.0}, {3.0, 4.0}};
    inst.kappa = {2, 1};
    inst.m = 3;
    return inst;
}

std::string temp_path(const std::string& stem) {
    return (fs::temp_directory_path() / stem).string();
}

} // namespace

TEST_CASE("instance validation names the offending field") {
    Instance inst = tiny();
    REQUIRE_NOTHROW(inst.validate());

    SECTION("empty points") {
        inst.points.clear();
        inst.kappa.clear();
        REQUIRE_THROWS_WITH(inst.validate(), Catch::Matchers::ContainsSubstring("points"));
    }
    SECTION("kappa length mismatch") {
        inst.kappa.push_back(1);
        REQUIRE_THROWS_WITH(inst.validate(), Catch::Matchers::ContainsSubstring("kappa"));
    }
    SECTION("kappa below one") {
        inst.kappa[1] = 0;
        REQUIRE_THROWS_WITH(inst.validate(), Catch::Matchers::ContainsSubstring("kappa[1]"));
    }
    SECTION("budget below one") {
        inst.m = 0;
        REQUIRE_THROWS_WITH(inst.validate(), Catch::Matchers::ContainsSubstring("m"));
    }
    SECTION("non-finite coordinate") {
        inst.points[0].x = std::numeric_limits<double>::quiet_NaN();
        REQUIRE_THROWS_WITH(inst.validate(), Catch::Matchers::ContainsSubstring("points[0]"));
    }
    SECTION("non-positive separation distance") {
        inst.ell = 0.0;
        REQUIRE_THROWS_WITH(inst.validate(), Catch::Matchers::ContainsSubstring("ell"));
    }
}

TEST_CASE("instance accessors") {
    const Instance inst = tiny();
    REQUIRE(inst.n() == 2);
    REQUIRE(inst.max_kappa() == 2);
    REQUIRE(inst.total_kappa() == 3);
}

TEST_CASE("instance json round trip") {
    Instance inst = tiny();
    inst.seed = 42;

    SECTION("field-for-field identity, ell absent serialized as null") {
        const ordered_json j = to_json(inst);
        REQUIRE(j.at("ell").is_null());
        REQUIRE(j.at("n").get<int>() == 2);
        const Instance back = instance_from_json(j);
        REQUIRE(back.name == inst.name);
        REQUIRE(back.m == inst.m);
        REQUIRE(back.kappa == inst.kappa);
        REQUIRE_FALSE(back.ell.has_value());
        REQUIRE(back.seed == inst.seed);
        REQUIRE(back.points.size() == inst.points.size());
        for (std::size_t i = 0; i < back.points.size(); ++i) {
            REQUIRE(back.points[i].x == inst.points[i].x);
            REQUIRE(back.points[i].y == inst.points[i].y);
        }
    }
    SECTION("round trip is byte-stable") {
        inst.ell = 5.0;
        const std::string once = to_json(inst).dump(2);
        const std::string twice = to_json(instance_from_json(to_json(inst))).dump(2);
        REQUIRE(once == twice);
    }
    SECTION("key order is fixed") {
        const std::string dumped = to_json(inst).dump();
        const auto pos = [&](const char* key) { return dumped.find(key); };
        REQUIRE(pos("\"name\"") < pos("\"n\""));
        REQUIRE(pos("\"n\"") < pos("\"m\""));
        REQUIRE(pos("\"m\"") < pos("\"ell\""));
        REQUIRE(pos("\"ell\"") < pos("\"points\""));
        REQUIRE(pos("\"points\"") < pos("\"kappa\""));
        REQUIRE(pos("\"kappa\"") < pos("\"seed\""));
    }
    SECTION("declared n must match the points array") {
        ordered_json j = to_json(inst);
        j["n"] = 7;
        REQUIRE_THROWS_AS(instance_from_json(j), ValidationError);
    }
    SECTION("kappa length mismatch rejected") {
        ordered_json j = to_json(inst);
        j["kappa"] = std::vector<int>{1};
        REQUIRE_THROWS_AS(instance_from_json(j), ValidationError);
    }
    SECTION("kappa zero rejected") {
        ordered_json j = to_json(inst);
        j["kappa"] = std::vector<int>{1, 0};
        REQUIRE_THROWS_AS(instance_from_json(j), ValidationError);
    }
    SECTION("malformed point entry rejected") {
        ordered_json j = to_json(inst);
        j["points"][0] = ordered_json::array({1.0});
        REQUIRE_THROWS_AS(instance_from_json(j), ValidationError);
    }
}

TEST_CASE("instance file save and load") {
    Instance inst = tiny();
    inst.ell = 2.25;
    const std::string path = temp_path("dcover_inst_roundtrip.json");

    save_instance(inst, path);
    const Instance back = load_instance(path);
    REQUIRE(back.name == inst.name);
    REQUIRE(back.ell.has_value());
    REQUIRE(*back.ell == 2.25);
    REQUIRE(to_json(back).dump(2) == to_json(inst).dump(2));
    fs::remove(path);

    SECTION("missing file is an io error") {
        REQUIRE_THROWS_AS(load_instance(temp_path("dcover_missing_nope.json")), IoError);
    }
    SECTION("malformed json is a parse error") {
        const std::string bad = temp_path("dcover_inst_bad.json");
        std::ofstream(bad) << "{ not json";
        REQUIRE_THROWS_AS(load_instance(bad), ParseError);
        fs::remove(bad);
    }
}

TEST_CASE("uniform generator obeys its configuration") {
    GeneratorConfig cfg;
    cfg.seed = 1;

    SECTION("canvas bounds and kappa choices") {
        const Instance inst = generate_uniform(200, 20, cfg, "g");
        REQUIRE(inst.n() == 200);
        REQUIRE(inst.m == 20);
        for (const Point& p : inst.points) {
            REQUIRE(p.x >= 0.0);
            REQUIRE(p.x < 100.0);
            REQUIRE(p.y >= 0.0);
            REQUIRE(p.y < 100.0);
        }
        for (int k : inst.kappa) REQUIRE((k >= 1 && k <= 3));
        // all three kappa values actually occur at this sample size
        std::set<int> seen(inst.kappa.begin(), inst.kappa.end());
        REQUIRE(seen == std::set<int>{1, 2, 3});
    }
    SECTION("restricted kappa choices are respected") {
        cfg.kappa_choices = {2};
        const Instance inst = generate_uniform(50, 5, cfg);
        for (int k : inst.kappa) REQUIRE(k == 2);
    }
    SECTION("same arguments give byte-identical instances") {
        const Instance a = generate_uniform(40, 7, cfg, "same");
        const Instance b = generate_uniform(40, 7, cfg, "same");
        REQUIRE(to_json(a).dump(2) == to_json(b).dump(2));
    }
    SECTION("different seeds give different points") {
        const Instance a = generate_uniform(40, 7, cfg);
        cfg.seed = 2;
        const Instance b = generate_uniform(40, 7, cfg);
        REQUIRE(to_json(a).dump() != to_json(b).dump());
    }
    SECTION("single point") {
        cfg.kappa_choices = {1};
        const Instance inst = generate_uniform(1, 1, cfg);
        REQUIRE(inst.n() == 1);
        REQUIRE(inst.kappa == std::vector<int>{1});
    }
    SECTION("degenerate sizes rejected") {
        REQUIRE_THROWS_AS(generate_uniform(0, 1, cfg), ValidationError);
        REQUIRE_THROWS_AS(generate_uniform(1, 0, cfg), ValidationError);
    }
}

TEST_CASE("benchmark suite families") {
    SECTION("full-scale sizes and counts") {
        const auto sm = make_suite("uni_sm", 1);
        REQUIRE(sm.size() == 95);  // 19 sizes x 5 replicates
        for (const Instance& i : sm) REQUIRE(i.m == 20);
        REQUIRE(sm.front().n() == 20);
        REQUIRE(sm.back().n() == 200);

        const auto lg = make_suite("uni_lg", 1);
        REQUIRE(lg.size() == 140);  // 28 sizes x 5
        for (const Instance& i : lg) REQUIRE(i.m == 30);

        const auto fx = make_suite("uni_fix_n", 1);
        REQUIRE(fx.size() == 100);  // 20 budgets x 5
        for (const Instance& i : fx) REQUIRE(i.n() == 250);
        REQUIRE(fx.front().m == 5);
        REQUIRE(fx.back().m == 100);
    }
    SECTION("small scale caps sizes at 60 and deduplicates") {
        REQUIRE(make_suite("uni_sm", 1, SuiteScale::Small).size() == 25);
        REQUIRE(make_suite("uni_lg", 1, SuiteScale::Small).size() == 20);
        REQUIRE(make_suite("uni_fix_n", 1, SuiteScale::Small).size() == 60);
        for (const Instance& i : make_suite("uni_lg", 1, SuiteScale::Small)) {
            REQUIRE(i.n() <= 60);
            REQUIRE(i.m <= 60);
        }
    }
    SECTION("instance names encode family, size, and replicate") {
        const auto sm = make_suite("uni_sm", 1);
        REQUIRE(sm[0].name == "uni_sm_n020_m020_r0");
        REQUIRE(sm[4].name == "uni_sm_n020_m020_r4");
        REQUIRE(sm[5].name == "uni_sm_n030_m020_r0");
    }
    SECTION("per-instance seeds are distinct and reproducible") {
        const auto a = make_suite("uni_sm", 7);
        const auto b = make_suite("uni_sm", 7);
        std::set<std::int64_t> seeds;
        for (std::size_t i = 0; i < a.size(); ++i) {
            REQUIRE(a[i].seed.has_value());
            REQUIRE(to_json(a[i]).dump(2) == to_json(b[i]).dump(2));
            seeds.insert(*a[i].seed);
        }
        REQUIRE(seeds.size() == a.size());
    }
    SECTION("base seed changes every instance") {
        const auto a = make_suite("uni_fix_n", 1, SuiteScale::Small);
        const auto b = make_suite("uni_fix_n", 2, SuiteScale::Small);
        for (std::size_t i = 0; i < a.size(); ++i)
            REQUIRE(to_json(a[i]).dump() != to_json(b[i]).dump());
    }
    SECTION("unknown family is rejected") {
        REQUIRE_THROWS_WITH(make_suite("uni_xy", 1),
                            Catch::Matchers::ContainsSubstring("uni_xy"));
    }
}
