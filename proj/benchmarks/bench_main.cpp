#include <benchmark/benchmark.h>

#include <fstream>
#include <sstream>

#include "cosmo/harness.hpp"

using namespace cosmo;

namespace {

const std::filesystem::path kSource(COSMO_SOURCE_DIR);

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void BM_ParseDecision(benchmark::State& state) {
  const std::string text = read_text(kSource / "tests/data/decisions/realtime_war.txt");
  const std::vector<CivName> known{"Earth"};
  for (auto _ : state) benchmark::DoNotOptimize(parse_decision(text, known));
}
BENCHMARK(BM_ParseDecision);

void BM_CheckMatrix(benchmark::State& state) {
  const TransferMatrix m({2.3, 2.3, 1.7, 1.7, 1.0});
  for (auto _ : state) benchmark::DoNotOptimize(check_matrix(m, ConstraintRegime::Mobilization));
}
BENCHMARK(BM_CheckMatrix);

void BM_ValidateDecision(benchmark::State& state) {
  const std::string text = read_text(kSource / "tests/data/decisions/delayed_mobilization.txt");
  CivSnapshot snapshot;
  snapshot.name = "Three Body";
  snapshot.worldview = Worldview::Militarism;
  snapshot.resources = ResourceVector({10, 1, 1, 1, 1});
  snapshot.discovered = {"Earth"};
  for (auto _ : state) benchmark::DoNotOptimize(validate(text, snapshot));
}
BENCHMARK(BM_ValidateDecision);

// Doctrine-driven rounds over the seven-civilization roster.
void BM_StepRound(benchmark::State& state) {
  auto cfg = load_config(kSource / "configs/roster7.json");
  cfg.rounds = static_cast<int>(state.range(0));
  for (auto _ : state) {
    Universe u = Universe::from_config(cfg);
    u.run();
    benchmark::DoNotOptimize(u.all_records());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_StepRound)->Arg(5)->Arg(20);

}  // namespace

BENCHMARK_MAIN();
