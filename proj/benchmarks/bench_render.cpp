#include <benchmark/benchmark.h>

#include <string>

#include "genii/dataset.hpp"
#include "genii/gene.hpp"
#include "genii/render.hpp"

namespace {

genii::Dataset bars(int n) {
  std::string text = R"({"width": 8, "height": 6, "padding": 0.2, "categories": [)";
  for (int i = 0; i < n; ++i)
    text += (i ? "," : "") + std::string(R"({"name": "c)") + std::to_string(i) +
            R"(", "value": )" + std::to_string(3 + (i * 7) % 11) + R"(, "range": 14})";
  text += "]}";
  return genii::parse_dataset(text).dataset;
}

genii::Gene gene_for(const std::string& mode, const std::string& shape, int points,
                     const std::string& filters = "[]") {
  return genii::parse_gene(R"({"geneVersion": 1, "name": "bench", "path": {"mode": ")" + mode +
                           R"(", "pointCount": )" + std::to_string(points) +
                           R"(}, "object": {"shape": ")" + shape +
                           R"("}, "mappings": [{"channel": "mark_height", "source": "value_over_range"}],
                           "filters": )" + filters + "}");
}

void BM_RenderBars(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto data = bars(n);
  const auto gene = gene_for("inline_linear", "rect", n + 1);
  for (auto _ : state) benchmark::DoNotOptimize(genii::render(gene, data).svg);
}
BENCHMARK(BM_RenderBars)->Arg(8)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond);

void BM_RenderHilbertCircles(benchmark::State& state) {
  const auto data = bars(63);
  const auto gene = gene_for("hilbert", "circle", 64);
  for (auto _ : state) benchmark::DoNotOptimize(genii::render(gene, data).svg);
}
BENCHMARK(BM_RenderHilbertCircles)->Unit(benchmark::kMillisecond);

void BM_RenderUnion(benchmark::State& state) {
  const auto data = bars(32);
  const auto gene =
      gene_for("ring", "rect", 32, R"([{"kind": "union"}])");
  for (auto _ : state) benchmark::DoNotOptimize(genii::render(gene, data).svg);
}
BENCHMARK(BM_RenderUnion)->Unit(benchmark::kMillisecond);

void BM_ParseSerializeGene(benchmark::State& state) {
  const auto gene = gene_for("ring", "rect", 32);
  const std::string text = genii::serialize_gene(gene);
  for (auto _ : state) benchmark::DoNotOptimize(genii::serialize_gene(genii::parse_gene(text)));
}
BENCHMARK(BM_ParseSerializeGene);

}  // namespace

BENCHMARK_MAIN();
