#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "umlp/minicond.hpp"
#include "umlp/system_model.hpp"

#include "minicond_oracle.hpp"

using namespace umlp;
using minicond::EvalOutcome;
using namespace umlp::test;

namespace {

SystemModel small_model() {
    SystemModel sys;
    sys.types["int"] = {std::int64_t{0}, std::int64_t{1}, std::int64_t{7}};
    sys.uclasses = {"A", "B"};
    sys.sub = {{"B", "A"}};
    sys.attrsOf["A"] = {{"n", "int"}};
    sys.uassocs["r"] = AssocInfo{"A", "B"};

    sys.uoids = {{"a1", "A"}, {"a2", "A"}, {"b1", "B"}};
    SystemState s;
    s.id = "s0";
    s.ds.liveOids = {"a1", "a2", "b1"};
    s.ds.attrVal[{"a1", "n"}] = std::int64_t{1};
    s.ds.attrVal[{"a2", "n"}] = std::int64_t{7};
    s.ds.attrVal[{"b1", "n"}] = std::int64_t{2};
    s.ds.links["r"].push_back(Link{"a1", "b1", std::nullopt, std::nullopt});
    sys.states.push_back(s);
    sys.reachable = {"s0"};
    return sys;
}

EvalOutcome run(const std::string& text, const SystemModel& sys) {
    auto cond = minicond::parse_cond(text);
    REQUIRE(cond.ok());
    return minicond::eval_cond(**cond, sys.states[0], sys);
}

}  // namespace

TEST_CASE("parse errors are reported as diagnostics") {
    for (const char* bad : {"", "forall x in", "1 +", "x.attr()", "count(links(r))",
                            "exists x in extent(A) true"}) {
        CAPTURE(bad);
        auto r = minicond::parse_cond(bad);
        CHECK(!r.ok());
        REQUIRE(!r.diags.empty());
        CHECK(r.diags.front().code == "SyntaxError");
    }
}

TEST_CASE("hand-checked evaluations") {
    SystemModel sys = small_model();
    CHECK(run("true", sys).isTrue());
    CHECK(!run("false", sys).isTrue());
    CHECK(run("exists x in extent(A): x.attr(n) = 7", sys).isTrue());
    CHECK(run("forall x in extent(A): x.attr(n) >= 1", sys).isTrue());
    CHECK(!run("forall x in extent(A): x.attr(n) = 1", sys).isTrue());
    // extent(A) includes the B-instance through sub*.
    CHECK(run("exists x in extent(A): x.attr(n) = 2", sys).isTrue());
    CHECK(!run("exists x in extent(B): x.attr(n) = 7", sys).isTrue());
    CHECK(run("exists x in extent(A): count(links(r, x, left)) = 1", sys).isTrue());
    CHECK(run("forall x in extent(B): count(links(r, x, right)) = 1", sys).isTrue());
    CHECK(run("1 < 2 and not (1 = 2)", sys).isTrue());
    CHECK(run("\"a\" < \"b\"", sys).isTrue());
    CHECK(run("1 = 1.0", sys).isTrue());
    // Mixed types: equality is false, inequality true, ordering an error.
    CHECK(!run("1 = \"a\"", sys).isTrue());
    CHECK(run("1 != \"a\"", sys).isTrue());
    CHECK(run("1 < \"a\"", sys).isError());
}

TEST_CASE("evaluation errors are explicit") {
    SystemModel sys = small_model();
    auto missing = run("exists x in extent(A): x.attr(ghost) = 1", sys);
    CHECK(missing.isError());
    CHECK(missing.error.find("ghost") != std::string::npos);
    CHECK(run("forall x in extent(A): count(links(q, x, left)) = 0", sys).isError());
    // Unbound variable: the condition must be closed.
    auto open = minicond::parse_cond("y.attr(n) = 1");
    REQUIRE(open.ok());
    CHECK(minicond::eval_cond(**open, sys.states[0], sys).isError());
    // Short-circuit suppresses errors on the unevaluated side.
    CHECK(!run("false and (1 < \"a\")", sys).isTrue());
    CHECK(run("true or (1 < \"a\")", sys).isTrue());
}

TEST_CASE("500 random closed conditions agree with the unrolling oracle") {
    std::mt19937 rng(20240815);
    int mismatches = 0;
    for (int iter = 0; iter < 500; ++iter) {
        SystemModel sys = random_model(rng);
        Gen gen{rng};
        auto tree = gen.expr(3);
        std::string text = render(*tree);
        CAPTURE(iter);
        CAPTURE(text);
        auto parsed = minicond::parse_cond(text);
        REQUIRE(parsed.ok());
        EvalOutcome got = minicond::eval_cond(**parsed, sys.states[0], sys);

        Oracle oracle(sys);
        EvalOutcome want;
        try {
            want.kind = oracle.eval(*tree) ? EvalOutcome::Kind::True
                                           : EvalOutcome::Kind::False;
        } catch (const OracleError&) {
            want.kind = EvalOutcome::Kind::Error;
        }
        if (got.kind != want.kind) ++mismatches;
        CHECK(got.kind == want.kind);
    }
    CHECK(mismatches == 0);
}
