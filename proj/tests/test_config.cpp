#include <doctest.h>

#include <fstream>

#include "chainsim/config.hpp"

using namespace chainsim;

namespace {

RunConfig parse(const char* text) { return parse_run_config(Json::parse(text)); }

}  // namespace

TEST_SUITE("config") {
    TEST_CASE("defaults fill a minimal config") {
        const RunConfig rc = parse(R"({"chain": {"sites": 20}})");
        CHECK(rc.chain.sites() == 20);
        CHECK(rc.chain.geometry.boundary == Boundary::open);
        CHECK(rc.chain.decay_model == DecayModel::independent);
        CHECK(rc.method == Method::expm);
        CHECK_FALSE(rc.disorder.has_value());
        CHECK(rc.time.values().size() == 201);
    }

    TEST_CASE("every section is read") {
        const RunConfig rc = parse(R"({
            "chain": {"sites": 40, "spacing": 0.1, "boundary": "periodic", "hopping": 2.0,
                      "truncation": "full", "decay_model": "collective"},
            "packet": {"center": 12, "width": 3, "quasimomentum": 1.0},
            "time": {"end": 2, "steps": 4},
            "method": "rk4",
            "disorder": {"distribution": "gaussian", "width": 0.5, "realizations": 7, "seed": 3},
            "concurrence": {"separation": 12, "normalization": "pair_count"}
        })");
        CHECK(rc.chain.geometry.spacing == 0.1);
        CHECK(rc.chain.geometry.boundary == Boundary::periodic);
        CHECK(*rc.chain.hopping == 2.0);
        CHECK(rc.chain.truncation == Truncation::full);
        CHECK(rc.packet.center == 12.0);
        CHECK(rc.time.values() == std::vector<double>{0.0, 0.5, 1.0, 1.5, 2.0});
        CHECK(rc.method == Method::rk4);
        CHECK(rc.disorder->distribution == DisorderDistribution::gaussian);
        CHECK(rc.disorder->realizations == 7);
        CHECK(rc.disorder->seed == 3u);
        CHECK(rc.separation == 12.0);
        CHECK(rc.normalization == ConcurrenceNormalization::pair_count);
    }

    TEST_CASE("cavity layout with a matched island detuning") {
        const RunConfig rc = parse(R"({
            "chain": {"sites": 16, "hopping": 1.0},
            "layout": {"island_sites": 3, "cavity_sites": 10, "cavity_hopping": 1.0,
                       "island_detuning": {"symmetry": "asymmetric"}},
            "cavity": {"coupling": 5.0, "symmetry": "asymmetric", "loss": 0.5}
        })");
        CHECK(rc.chain.has_cavity());
        CHECK(rc.chain.cavity->couplings.size() == 10);
        CHECK(rc.chain.cavity->couplings[0] == -5.0);
        CHECK(rc.chain.cavity->loss == 0.5);
        CHECK(rc.chain.island_detuning ==
              doctest::Approx(matched_detuning(5.0, 10, 1.0, CouplingSymmetry::asymmetric,
                                               PolaritonBranch::upper)));
    }

    TEST_CASE("errors name the offending field") {
        const auto fails_with = [](const char* text, const char* message) {
            CAPTURE(text);
            CHECK_THROWS_WITH_AS(parse(text), doctest::Contains(message), ConfigError);
        };
        fails_with(R"({})", "chain");
        fails_with(R"({"chain": {"sites": "many"}})", "chain.sites: expected an integer");
        fails_with(R"({"chain": {"sites": 1}})", "chain.sites");
        fails_with(R"({"chain": {"sites": 8, "spacing": -1}})", "chain.spacing");
        fails_with(R"({"chain": {"sites": 8, "sitez": 3}})", "chain.sitez: unknown key");
        fails_with(R"({"chain": {"sites": 8}, "extra": 1})", "extra: unknown key");
        fails_with(R"({"chain": {"sites": 8, "boundary": "closed"}})", "chain.boundary: unknown value 'closed'");
        fails_with(R"({"chain": {"sites": 8, "detunings": [1, "x"]}})", "chain.detunings[1]");
        fails_with(R"({"chain": {"sites": 8}, "method": "euler"})", "method");
        fails_with(R"({"chain": {"sites": 8}, "time": {"steps": 0}})", "time.steps");
        fails_with(R"({"chain": {"sites": 8}, "packet": {"width": 0}})", "packet.width");
        fails_with(R"({"chain": {"sites": 8}, "disorder": {"width": -1}})", "disorder.width");
        fails_with(R"({"chain": {"sites": 8}, "disorder": {"seed": -1}})", "disorder.seed");
        fails_with(R"({"chain": {"sites": 8}, "cavity": {"coupling": 1}})", "cavity");
        fails_with(R"({"chain": {"sites": 8}, "layout": {"island_sites": 1, "cavity_sites": 6},
                       "cavity": {"loss": 1}})", "cavity.coupling");
        fails_with(R"({"chain": {"sites": 8}, "layout": {"island_sites": 1, "cavity_sites": 6},
                       "cavity": {"coupling": 1, "couplings": [1,1,1,1,1,1]}})", "cavity.coupling");
        fails_with(R"({"chain": {"sites": 9}, "layout": {"island_sites": 1, "cavity_sites": 6}})",
                   "cavity_sites");
    }

    TEST_CASE("files with comments load and bad files are reported") {
        const auto dir = std::filesystem::temp_directory_path() / "chainsim_config_test";
        std::filesystem::create_directories(dir);
        {
            std::ofstream(dir / "ok.json") << "// run\n{\"chain\": {\"sites\": 4} /* tiny */}\n";
            std::ofstream(dir / "bad.json") << "{\"chain\": ";
        }
        CHECK(load_json(dir / "ok.json")["chain"]["sites"] == 4);
        CHECK_THROWS_WITH_AS(load_json(dir / "bad.json"), doctest::Contains("invalid JSON"), ConfigError);
        CHECK_THROWS_WITH_AS(load_json(dir / "missing.json"), doctest::Contains("cannot open"), ConfigError);
        std::filesystem::remove_all(dir);
    }
}
