#include <doctest.h>

#include <sstream>

#include "olpbench/config.hpp"
#include "olpbench/presets.hpp"
#include "olpbench/runner.hpp"

using namespace olp;
using namespace olp::bench;

TEST_CASE("instance presets") {
  Instance m = multi_10x2(2500);
  CHECK(m.num_resources() == 10);
  CHECK(m.num_types() == 2);
  CHECK(m.rewards == Vec{0.689, 0.710});
  CHECK(m.probabilities == Vec{0.121, 0.879});
  CHECK(m.consumption(2, 1) == 0.876);
  CHECK(m.budget_rate[6] == 0.181);

  Instance s = instance_by_name("single_resource(0.45)", 100);
  CHECK(s.budget_rate == Vec{0.45});
  CHECK(s.rewards == Vec{2.0, 1.0});
  CHECK_THROWS_AS(instance_by_name("nope", 100), InputError);
  CHECK_THROWS_AS(instance_by_name("single_resource(x)", 100), InputError);

  SUBCASE("fig6 generator is reproducible and near-degenerate by construction") {
    Instance a = fig6_10x50(5000);
    Instance b = fig6_10x50(5000);
    CHECK(a.consumption.data() == b.consumption.data());
    CHECK(a.rewards == b.rewards);
    CHECK(a.probabilities == b.probabilities);
    CHECK(a.budget_rate == b.budget_rate);
    CHECK(a.num_types() == 50);
    Instance c = fig6_10x50(5000, 12345);
    CHECK(c.rewards != a.rewards);
  }
}

TEST_CASE("config JSON parsing") {
  const char* doc = R"json({
    "instance": "single_resource(0.5)",
    "policies": [
      {"name": "air", "alpha": 0.6, "beta": 0.8},
      "sfa",
      {"name": "air", "schedule": "finite", "M": 4, "beta": 0.7, "epsilon": 0.02}
    ],
    "horizons": [100, 200],
    "n_sims": 7,
    "base_seed": 99,
    "output_path": "out.csv",
    "threads": 2
  })json";
  ExperimentConfig cfg = parse_config_json(doc);
  cfg.validate();
  CHECK(cfg.instance_name == "single_resource(0.5)");
  REQUIRE(cfg.policies.size() == 3);
  CHECK(cfg.policies[0].kind == PolicyKind::Air);
  CHECK(cfg.policies[0].alpha == 0.6);
  CHECK(cfg.policies[1].kind == PolicyKind::Sfa);
  CHECK(cfg.policies[2].schedule == ScheduleKind::FiniteM);
  CHECK(cfg.policies[2].M == 4);
  CHECK(cfg.horizons == std::vector<long long>{100, 200});
  CHECK(cfg.n_sims == 7);
  CHECK(cfg.base_seed == 99);
  CHECK(cfg.threads == 2);

  SUBCASE("bad documents are config errors naming the offender") {
    CHECK_THROWS_AS(parse_config_json("{"), ConfigError);
    CHECK_THROWS_WITH_AS(parse_config_json(R"json({"policies": [{"name": "argmax"}]})json"),
                         doctest::Contains("argmax"), ConfigError);
    CHECK_THROWS_AS(parse_config_json(R"json({"policies": [{"alpha": 0.5}]})json"), ConfigError);
    ExperimentConfig badPreset2 = parse_config_json(
        R"json({"instance": "mystery", "policies": ["sfa"], "horizons": [100]})json");
    CHECK_THROWS_WITH_AS(badPreset2.validate(), doctest::Contains("mystery"), ConfigError);
  }
  SUBCASE("validation catches empty and inconsistent configs") {
    ExperimentConfig empty;
    empty.horizons = {100};
    CHECK_THROWS_AS(empty.validate(), ConfigError);  // no policies

    ExperimentConfig noT = parse_config_json(R"json({"policies": ["sfa"]})json");
    CHECK_THROWS_AS(noT.validate(), ConfigError);  // no horizons

    ExperimentConfig badPreset = parse_config_json(
        R"json({"instance": "mystery", "policies": ["sfa"], "horizons": [100]})json");
    CHECK_THROWS_AS(badPreset.validate(), ConfigError);

    ExperimentConfig shortT = parse_config_json(
        R"json({"policies": [{"name": "air"}], "horizons": [5]})json");
    CHECK_THROWS_AS(shortT.validate(), ConfigError);  // log-log needs T >= 9

    ExperimentConfig badSweep = parse_config_json(
        R"json({"policies": ["sfa"], "horizons": [100],
            "sweep": {"param": "rho", "values": [0.5]}})json");
    CHECK_THROWS_AS(badSweep.validate(), ConfigError);  // rho sweep off single_resource
  }
  SUBCASE("inline instances are accepted") {
    ExperimentConfig inl = parse_config_json(R"json({
      "instance": {"rewards": [1.0], "consumption": [[1.0]], "budget_rate": [0.5],
                   "probabilities": [1.0]},
      "policies": ["sfa"], "horizons": [50]})json");
    inl.validate();
    REQUIRE(inl.inline_instance.has_value());
    CHECK(inl.inline_instance->num_types() == 1);
  }
}

TEST_CASE("experiment presets exist and validate") {
  for (const char* name : {"table4", "table3_desk", "table5_alpha", "table5_beta",
                           "fig5_rho_sweep", "fig6_10x50", "fig7_finite", "fig8_kp",
                           "kp_constancy"}) {
    CHECK(is_experiment_preset(name));
    ExperimentConfig desk = experiment_preset(name, false);
    desk.validate();
    ExperimentConfig full = experiment_preset(name, true);
    full.validate();
  }
  CHECK(experiment_preset("table4", false).mode == ExperimentMode::ScheduleTable);
  CHECK_FALSE(is_experiment_preset("multi_10x2"));
  CHECK_THROWS_AS(experiment_preset("mystery", false), ConfigError);

  const std::string listing = list_presets_text();
  CHECK(listing.find("table4") != std::string::npos);
  CHECK(listing.find("fig5_rho_sweep") != std::string::npos);
  CHECK(listing.find("multi_10x2") != std::string::npos);
}

TEST_CASE("emit_schedule renders the documented strings") {
  CHECK(emit_schedule("learning_approx", 2500, 0.7, 0.7, 3, 1, 0.01) ==
        "3,4,7,15,47,240,1250,2261,2454,2486,2494,2497,2498");
  CHECK(emit_schedule("periodic", 10, 0.7, 0.7, 3, 3, 0.01) == "1,4,7,10");
  CHECK(emit_schedule("kp_finite", 10000, 0.7, 0.7, 1, 1, 0.01) == "1");
  CHECK_THROWS_AS(emit_schedule("mystery", 10, 0.7, 0.7, 3, 1, 0.01), ConfigError);
}

TEST_CASE("run_experiment_to writes the documented CSV schema") {
  ExperimentConfig cfg;
  cfg.instance_name = "single_resource(0.5)";
  cfg.policies = {{.kind = PolicyKind::Air}, {.kind = PolicyKind::Sfa}};
  cfg.horizons = {100};
  cfg.n_sims = 5;
  cfg.base_seed = 11;
  cfg.threads = 1;

  std::ostringstream out;
  run_experiment_to(cfg, out);
  std::istringstream in(out.str());
  std::string line;

  REQUIRE(std::getline(in, line));
  CHECK(line.rfind("# olp-bench", 0) == 0);
  CHECK(line.find("base_seed=11") != std::string::npos);

  REQUIRE(std::getline(in, line));
  CHECK(line ==
        "policy,T,sweep_param,sweep_value,mean_regret,std_error,mean_revenue,mean_hindsight,"
        "mean_lp_solves,n_sims,wall_time_s,schedule");

  int rows = 0;
  while (std::getline(in, line)) {
    ++rows;
    CHECK(line.find(",100,") != std::string::npos);
    // Schedule field is quoted (it may contain commas).
    if (line.rfind("air", 0) == 0) {
      CHECK(line.find("\"") != std::string::npos);
      CHECK(line.find(",5,") != std::string::npos);  // n_sims column
    }
  }
  CHECK(rows == 2);

  SUBCASE("unknown policy names fail before any work") {
    ExperimentConfig bad = cfg;
    bad.instance_name = "mystery";
    std::ostringstream sink;
    CHECK_THROWS_AS(run_experiment_to(bad, sink), ConfigError);
  }
  SUBCASE("schedule tables carry empty estimates but real schedules") {
    ExperimentConfig table = experiment_preset("table4", false);
    table.horizons = {2500};
    std::ostringstream sink;
    run_experiment_to(table, sink);
    CHECK(sink.str().find("\"3,4,7,15,47,240,1250,2261,2454,2486,2494,2497,2498\"") !=
          std::string::npos);
  }
  SUBCASE("sweeps emit one row per point with the swept value recorded") {
    ExperimentConfig sweep = cfg;
    sweep.instance_name = "single_resource";
    sweep.policies = {{.kind = PolicyKind::Sfa}};
    sweep.sweep = SweepSpec{"rho", {0.25, 0.75}};
    std::ostringstream sink;
    run_experiment_to(sweep, sink);
    CHECK(sink.str().find("rho,0.25") != std::string::npos);
    CHECK(sink.str().find("rho,0.75") != std::string::npos);
  }
}

TEST_CASE("policy labels carry their parameters") {
  CHECK(PolicySpec{.kind = PolicyKind::Air}.label() == "air(alpha=0.7,beta=0.7)");
  CHECK(PolicySpec{.kind = PolicyKind::Sfa}.label() == "sfa");
  CHECK(PolicySpec{.kind = PolicyKind::AirKp, .beta = 5.0 / 6.0}.label() ==
        "air-kp(schedule=kp,beta=0.833333)");
  PolicySpec fin{.kind = PolicyKind::Air, .schedule = ScheduleKind::FiniteM, .M = 3};
  CHECK(fin.label() == "air(schedule=finite,M=3,beta=0.7,epsilon=0.01)");
  PolicySpec lit{.kind = PolicyKind::Sfa, .literal_dual_accept = true};
  CHECK(lit.label() == "sfa(literal_accept=1)");
}
