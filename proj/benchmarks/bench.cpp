#include <benchmark/benchmark.h>

#include <fstream>
#include <sstream>

#include "umlp/conformance.hpp"
#include "umlp/consistency.hpp"
#include "umlp/lowering.hpp"
#include "umlp/parser.hpp"
#include "umlp/wellformedness.hpp"

using namespace umlp;

namespace {

std::string read_fixture(const std::string& rel) {
    std::ifstream in(std::string(UMLP_FIXTURE_DIR) + "/" + rel);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

/// Diagram with `n` classes chained by `n` associations.
std::string chain_diagram(int n) {
    std::ostringstream out;
    out << "classdiagram Chain {\n";
    for (int i = 0; i < n; ++i) out << "  class C" << i << " { int n; }\n";
    for (int i = 0; i < n; ++i)
        out << "  association r" << i << " C" << i << " -> C" << (i + 1) % n
            << ";\n";
    out << "}\n";
    return out.str();
}

ast::ClassDiagram lowered(const std::string& text) {
    auto parsed = parse_cd(text);
    auto low = to_abstract(*parsed.cd);
    return low->cd;
}

/// System model matching chain_diagram(n) with `oidsPerClass` objects each.
SystemModel chain_model(int n, int oidsPerClass, int states) {
    SystemModel sys;
    sys.types["int"] = {std::int64_t{0}, std::int64_t{1}};
    for (int i = 0; i < n; ++i) {
        ClassName c = "C" + std::to_string(i);
        sys.uclasses.insert(c);
        sys.attrsOf[c] = {{"n", "int"}};
        sys.uassocs["r" + std::to_string(i)] =
            AssocInfo{c, "C" + std::to_string((i + 1) % n)};
        for (int k = 1; k <= oidsPerClass; ++k)
            sys.uoids[c + "-" + std::to_string(k)] = c;
    }
    for (int j = 0; j < states; ++j) {
        SystemState s;
        s.id = "s" + std::to_string(j);
        for (const auto& [oid, cls] : sys.uoids) {
            s.ds.liveOids.insert(oid);
            s.ds.attrVal[{oid, "n"}] = std::int64_t{j % 2};
        }
        sys.states.push_back(std::move(s));
        sys.reachable.insert("s" + std::to_string(j));
    }
    return sys;
}

void BM_Parse(benchmark::State& state) {
    std::string text = read_fixture("grammar/25_mixed.cd");
    for (auto _ : state) {
        auto out = parse_cd(text);
        benchmark::DoNotOptimize(out);
    }
}
BENCHMARK(BM_Parse);

void BM_ParseLarge(benchmark::State& state) {
    std::string text = chain_diagram(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        auto out = parse_cd(text);
        benchmark::DoNotOptimize(out);
    }
}
BENCHMARK(BM_ParseLarge)->Arg(10)->Arg(100);

void BM_CheckContextConditions(benchmark::State& state) {
    auto cd = lowered(chain_diagram(static_cast<int>(state.range(0))));
    for (auto _ : state) {
        auto diags = check_context_conditions(cd);
        benchmark::DoNotOptimize(diags);
    }
}
BENCHMARK(BM_CheckContextConditions)->Arg(10)->Arg(100);

void BM_Conform(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    auto cd = lowered(chain_diagram(n));
    SystemModel sys = chain_model(n, 2, 10);
    for (auto _ : state) {
        auto report = check_conformance({cd}, sys);
        benchmark::DoNotOptimize(report);
    }
}
BENCHMARK(BM_Conform)->Arg(10)->Arg(100);

void BM_BoundedConsistency(benchmark::State& state) {
    auto cd = lowered(
        "classdiagram D { class A { boolean b; } class B; "
        "association r [0..1] A -> B; "
        "[exists x in extent(A): x.attr(b) = true]; }");
    Bounds b;
    b.maxOidsPerClass = static_cast<int>(state.range(0));
    b.maxStates = 1;
    b.defaultCarrierSize = 2;
    b.maxLinksPerAssoc = 2;
    for (auto _ : state) {
        auto r = bounded_consistency({cd}, b);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_BoundedConsistency)->Arg(1)->Arg(2);

}  // namespace

BENCHMARK_MAIN();
