#include <array>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "doctest.h"

#include "creasim/metrics.hpp"
#include "support.hpp"

using namespace creasim;
using namespace testsupport;

namespace {

Event ev(EventType t, int agent, std::int64_t artefact_id) {
  Event e;
  e.type = t;
  e.agent = agent;
  e.artefact_id = artefact_id;
  return e;
}

Event generated(int agent, std::int64_t artefact_id, Artefact a) {
  Event e = ev(EventType::Generated, agent, artefact_id);
  e.artefact = std::move(a);
  e.attempts = 1;
  e.eval = Evaluation{EvalClass::Positive, 1.0};
  return e;
}

Event evaluated(int agent, std::int64_t artefact_id, Evaluation eval) {
  Event e = ev(EventType::Evaluated, agent, artefact_id);
  e.eval = eval;
  return e;
}

Event updated(int agent, std::int64_t artefact_id) {
  Event e = ev(EventType::Updated, agent, artefact_id);
  e.target = UpdateTarget::External;
  return e;
}

}  // namespace

TEST_SUITE("metrics") {

TEST_CASE("strength bins") {
  CHECK(strength_bin(0.0) == 0);
  CHECK(strength_bin(0.25) == 5);
  CHECK(strength_bin(0.5) == 10);
  CHECK(strength_bin(1.0) == kStrengthBins - 1);  // top edge folds into the last bin
  CHECK_THROWS_AS(strength_bin(-0.01), std::invalid_argument);
  CHECK_THROWS_AS(strength_bin(1.01), std::invalid_argument);
}

TEST_CASE("eval distribution bookkeeping") {
  EvalDistribution d;
  CHECK(d.total() == 0);
  CHECK(d.pmf(EvalClass::Positive) == 0.0);

  d.add({EvalClass::Positive, 0.25});
  d.add({EvalClass::Positive, 1.0});
  d.add({EvalClass::Negative, 0.5});
  d.add({EvalClass::NonDecidable, 0.0});

  CHECK(d.total() == 4);
  CHECK(d.class_counts == std::array<std::int64_t, 3>{2, 1, 1});
  CHECK(d.positive_hist[5] == 1);
  CHECK(d.positive_hist[kStrengthBins - 1] == 1);
  CHECK(d.negative_hist[10] == 1);
  CHECK(d.pmf(EvalClass::Positive) == 0.5);
  CHECK(d.pmf(EvalClass::NonDecidable) == 0.25);

  EvalDistribution other;
  other.add({EvalClass::Negative, 0.5});
  d.merge(other);
  CHECK(d.total() == 5);
  CHECK(d.negative_hist[10] == 2);
}

TEST_CASE("eval partition: frozen oracle") {
  // Feasible {1,2,3}; scores 0.86 / 1.0 / 0.86 against theta 0.9.
  AgentSpec spec = base_spec(1);
  spec.internal = ball_internal({0.2}, 0.15);
  spec.external = external_one({0.2}, 0.5);
  spec.params.theta = 0.9;
  const Agent agent(0, spec, space(1, 10), 42, 1000);

  std::vector<Artefact> sample = enumerate_space(space(1, 10), 1000);
  sample.push_back(Artefact::empty());

  const EvalPartition p = eval_partition(agent, sample);
  CHECK(p.positive == std::vector<Artefact>{Artefact::point({2})});
  CHECK(p.negative == std::vector<Artefact>{Artefact::point({1}), Artefact::point({3})});
  CHECK(p.null.size() == 9);  // 8 infeasible points plus the empty artefact
}

TEST_CASE("eval distribution estimate sweeps agents x externals") {
  AgentSpec spec = base_spec(1);
  std::vector<Agent> agents;
  agents.emplace_back(0, spec, space(1, 10), 42, 1000);
  agents.emplace_back(1, spec, space(1, 10), 42, 1000);
  agents[1].observe(Artefact::point({2}), 1);  // memories may differ

  const std::vector<ExternalConfig> externals = {external_one({0.2}, 0.5),
                                                 external_one({0.8}, 0.5)};
  const std::vector<Artefact> artefacts = {Artefact::point({2}), Artefact::point({8})};

  const EvalDistributionEstimate est = estimate_eval_distribution(agents, externals, artefacts);
  REQUIRE(est.per_artefact.size() == 2);
  CHECK(est.per_artefact[0].total() == 4);  // 2 agents x 2 external samples
  CHECK(est.per_artefact[0].class_counts == std::array<std::int64_t, 3>{2, 2, 0});
  CHECK(est.per_artefact[1].class_counts == std::array<std::int64_t, 3>{2, 2, 0});
  CHECK(est.pooled.total() == 8);
  CHECK(est.pooled.pmf(EvalClass::Positive) == 0.5);
  CHECK(est.pooled.pmf(EvalClass::NonDecidable) == 0.0);

  SUBCASE("inputs are validated") {
    CHECK_THROWS_AS(estimate_eval_distribution({}, externals, artefacts), std::invalid_argument);
    CHECK_THROWS_AS(estimate_eval_distribution(agents, {}, artefacts), std::invalid_argument);
    AgentSpec narrow = spec;
    narrow.internal = ball_internal({0.2}, 0.15);
    agents.emplace_back(2, narrow, space(1, 10), 42, 1000);
    CHECK_THROWS_AS(estimate_eval_distribution(agents, externals, artefacts),
                    std::invalid_argument);
  }
}

TEST_CASE("union generation space dedups across agents") {
  AgentSpec low = base_spec(1);
  low.internal = ball_internal({0.2}, 0.15);  // {1, 2, 3}
  AgentSpec high = base_spec(1);
  high.internal = ball_internal({0.8}, 0.1);  // {8, 9}
  AgentSpec low_again = low;

  const auto cfg = space(1, 10);
  const auto by_spec = union_generation_space({low, high, low_again}, cfg, 1000);
  const std::vector<Artefact> expected = {Artefact::point({1}), Artefact::point({2}),
                                          Artefact::point({3}), Artefact::point({8}),
                                          Artefact::point({9})};
  CHECK(by_spec == expected);

  std::vector<Agent> agents;
  agents.emplace_back(0, low, cfg, 42, 1000);
  agents.emplace_back(1, high, cfg, 42, 1000);
  CHECK(union_generation_space(agents, cfg, 1000) == expected);
}

TEST_CASE("convergence series averages pairwise config distances") {
  const auto cfg = space(1, 10);

  Snapshot spread;
  spread.tick = 0;
  spread.agents.push_back({0, external_one({0.2}, 0.5), 0.5, 2.0, 0});
  spread.agents.push_back({1, external_one({0.5}, 0.5), 0.5, 2.0, 0});
  spread.agents.push_back({2, external_one({0.8}, 0.5), 0.5, 2.0, 0});

  Snapshot merged;
  merged.tick = 1;
  for (int i = 0; i < 3; ++i) merged.agents.push_back({i, external_one({0.4}, 0.5), 0.5, 2.0, 0});

  const std::vector<double> series = convergence_series({spread, merged}, cfg);
  REQUIRE(series.size() == 2);
  CHECK(series[0] == doctest::Approx(0.4).epsilon(1e-12));  // (0.3 + 0.6 + 0.3) / 3
  CHECK(series[1] == 0.0);

  Snapshot alone;
  alone.tick = 0;
  alone.agents.push_back({0, external_one({0.2}, 0.5), 0.5, 2.0, 0});
  CHECK(convergence_series({alone}, cfg) == std::vector<double>{0.0});
}

TEST_CASE("influence counts updates caused in others") {
  std::vector<Event> log;
  log.push_back(generated(0, 0, Artefact::point({1})));
  log.push_back(generated(1, 1, Artefact::point({2})));
  log.push_back(updated(1, 0));  // agent 1 learned from artefact 0
  log.push_back(updated(2, 0));
  log.push_back(updated(0, 0));  // self-update: not influence
  log.push_back(updated(0, 1));

  CHECK(influence(0, log) == 2);
  CHECK(influence(1, log) == 1);
  CHECK(influence(2, log) == 0);
}

TEST_CASE("influence table: per-node rows with received evaluation tallies") {
  std::vector<Event> log;
  log.push_back(generated(0, 0, Artefact::point({1})));
  log.push_back(evaluated(1, 0, {EvalClass::Positive, 1.0}));
  log.push_back(evaluated(2, 0, {EvalClass::Negative, 0.5}));
  log.push_back(evaluated(1, 0, {EvalClass::NonDecidable, 0.0}));
  log.push_back(updated(1, 0));
  log.push_back(updated(2, 0));

  const Graph g(3, {{0, 1}, {0, 2}});
  const std::vector<InfluenceRow> rows = influence_by_degree(log, g);
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].agent_id == 0);
  CHECK(rows[0].degree == 2);
  CHECK(rows[0].influence == 2);
  CHECK(rows[0].positive_received == 1);
  CHECK(rows[0].negative_received == 1);
  CHECK(rows[0].null_received == 1);
  CHECK(rows[1].degree == 1);
  CHECK(rows[1].influence == 0);
  CHECK(rows[2].positive_received == 0);
}

TEST_CASE("coverage") {
  const auto cfg = space(1, 10);

  SUBCASE("finite generator is measured against its frozen support") {
    AgentSpec spec = base_spec(1);
    spec.external = external_one({0.0}, 0.35);  // support {0, 1, 2, 3}
    Agent agent = make_archetype(Archetype::FiniteGenerator, spec, 0, cfg, 42, 1000);

    std::vector<Event> log;
    log.push_back(generated(0, 0, Artefact::point({0})));
    log.push_back(generated(0, 1, Artefact::point({1})));
    log.push_back(generated(0, 2, Artefact::point({0})));  // repeat: still one value
    log.push_back(generated(1, 3, Artefact::point({2})));  // someone else's output
    CHECK(coverage(agent, log, cfg, 1000) == 0.5);
  }

  SUBCASE("everyone else is measured against the current potential space") {
    AgentSpec spec = base_spec(1);
    spec.internal = ball_internal({0.2}, 0.15);  // potential space {1, 2, 3}
    const Agent agent(0, spec, cfg, 42, 1000);

    std::vector<Event> log;
    log.push_back(generated(0, 0, Artefact::point({1})));
    CHECK(coverage(agent, log, cfg, 1000) == doctest::Approx(1.0 / 3).epsilon(1e-12));

    // outputs from before a config drift can exceed today's space: clamp
    log.push_back(generated(0, 1, Artefact::point({2})));
    log.push_back(generated(0, 2, Artefact::point({3})));
    log.push_back(generated(0, 3, Artefact::point({8})));
    CHECK(coverage(agent, log, cfg, 1000) == 1.0);
  }

  SUBCASE("an empty potential space reads as zero") {
    AgentSpec spec = base_spec(1);
    spec.internal = ball_internal({0.05}, 0.01);
    const Agent agent(0, spec, cfg, 42, 1000);
    CHECK(coverage(agent, {}, cfg, 1000) == 0.0);
  }
}

TEST_CASE("forms of creativity") {
  CHECK(classify_form(Category::Human, Category::Human).kind == FormKind::TwoH);
  CHECK(classify_form(Category::Cad, Category::Human).kind == FormKind::CH);
  CHECK(classify_form(Category::Ccs, Category::Human).kind == FormKind::AIH);
  CHECK(classify_form(Category::Ccs, Category::Ccs).kind == FormKind::TwoAI);
  CHECK(classify_form(Category::Human, Category::Ccs).kind == FormKind::Other);
  CHECK(classify_form(Category::Cad, Category::Cad).kind == FormKind::Other);

  CHECK(to_string(classify_form(Category::Human, Category::Human)) == "2H");
  CHECK(to_string(classify_form(Category::Ccs, Category::Human)) == "AIH");
  CHECK(to_string(classify_form(Category::Human, Category::Ccs)) == "other(Human,Ccs)");
  CHECK(classify_form(Category::Ccs, Category::Ccs) ==
        Form{FormKind::TwoAI, Category::Ccs, Category::Ccs});
}

TEST_CASE("creativity counts come straight from the log") {
  std::vector<Event> log;
  log.push_back(ev(EventType::PCreative, 0, 0));
  log.push_back(ev(EventType::PCreative, 0, 1));
  log.push_back(ev(EventType::HCreative, 0, 0));
  log.push_back(ev(EventType::PCreative, 1, 2));
  log.push_back(ev(EventType::Observed, 2, 0));  // ignored

  const CreativityCounts c = creativity_counts(log);
  CHECK(c.p_total == 3);
  CHECK(c.h_total == 1);
  CHECK(c.p_by_agent.at(0) == 2);
  CHECK(c.p_by_agent.at(1) == 1);
  CHECK(c.h_by_agent.at(0) == 1);
  CHECK(c.p_by_agent.count(2) == 0);
}

}  // TEST_SUITE
