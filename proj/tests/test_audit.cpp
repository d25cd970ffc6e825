#include <doctest.h>
#include <nlohmann/json.hpp>

#include "gridcds/audit.hpp"
#include "gridcds/bounds.hpp"
#include "gridcds/constructions.hpp"
#include "gridcds/errors.hpp"
#include "gridcds/solver.hpp"

using namespace gridcds;

TEST_CASE("audit of D1 on 7x11") {
    const AuditReport r = audit(build_d1(GridDims(7, 11)));
    CHECK(r.thin_tree());
    const CheckResult* hs = r.find(checks::handshake);
    REQUIRE(hs);
    CHECK(hs->lhs == 6);
    CHECK(hs->rhs == 6);
    CHECK(hs->slack == 0);
    CHECK(hs->holds);
    const CheckResult* loss = r.find(checks::loss_lower);
    CHECK(loss->lhs == 72);
    CHECK(loss->rhs == 68);
    CHECK(loss->holds);
    const CheckResult* id = r.find(checks::identity);
    CHECK(id->lhs == 77);
    CHECK(id->rhs == 77);
    CHECK(id->holds);
    CHECK(r.asserted_violations().empty());
    CHECK(r.checks.size() == 11);
}

TEST_CASE("the 4x4 ladder violates the loss inequality") {
    VertexSet ladder(GridDims(4, 4));
    for (int i = 1; i <= 4; ++i) {
        ladder.insert({i, 2});
        ladder.insert({i, 3});
    }
    const AuditReport r = audit(ladder);
    CHECK(r.has_2x2_block);
    CHECK_FALSE(r.is_tree);
    const CheckResult* loss = r.find(checks::loss_lower);
    CHECK(loss->lhs == 20);
    CHECK(loss->rhs == 32);
    CHECK_FALSE(loss->holds);
    CHECK_FALSE(loss->asserted);
    CHECK(r.asserted_violations().empty());
}

TEST_CASE("minimum CDSs of 4x4 meet the main theorem") {
    for (const auto& s : enumerate_min_cds(GridDims(4, 4), 100)) {
        const AuditReport r = audit(s);
        const CheckResult* mt = r.find(checks::main_theorem);
        CHECK(mt->lhs == 7);
        CHECK(mt->rhs == 7);
        CHECK(mt->holds);
        CHECK(r.asserted_violations().empty());
    }
}

TEST_CASE("skips and refusals") {
    CHECK_THROWS_AS((void)audit(VertexSet(GridDims(4, 4), {{2, 2}})), DomainError);

    VertexSet cornered = build_d1(GridDims(5, 5));
    cornered.insert({1, 1});
    const AuditReport r = audit(cornered);
    CHECK(r.find(checks::identity)->skipped);

    const AuditReport tiny = audit(VertexSet(GridDims(1, 3), {{1, 2}}));
    CHECK(tiny.find(checks::handshake)->skipped);
    CHECK(tiny.find(checks::segment_span)->skipped);
    CHECK(tiny.find(checks::loss_lower)->skipped);
    CHECK(tiny.find(checks::identity)->skipped);
    CHECK(tiny.find(checks::excess_ge_4)->skipped);
    CHECK(tiny.asserted_violations().empty());
}

TEST_CASE("sweep over constructions") {
    SweepOptions o;
    o.n_min = 4;
    o.n_max = 20;
    o.m_min = 4;
    o.m_max = 20;
    o.random = false;
    o.optimal = false;
    o.threads = 4;
    const SweepResult res = audit_sweep(o);
    CHECK(res.entries.size() == 17 * 17 * 2);
    for (const auto& e : res.entries) {
        CHECK(e.report.find(checks::identity)->holds);
        CHECK(e.report.find(checks::handshake)->holds);
        CHECK(e.report.asserted_violations().empty());
    }
}

TEST_CASE("sweep over random corner-free sets is deterministic") {
    SweepOptions o;
    o.n_min = 4;
    o.n_max = 12;
    o.m_min = 4;
    o.m_max = 12;
    o.constructions = false;
    o.optimal = false;
    o.random_per_dims = 3;
    o.seed = 2024;
    o.threads = 1;
    const SweepResult a = audit_sweep(o);
    o.threads = 3;
    const SweepResult b = audit_sweep(o);
    REQUIRE(a.entries.size() == 9 * 9 * 3);
    REQUIRE(a.entries.size() == b.entries.size());
    for (std::size_t k = 0; k < a.entries.size(); ++k) {
        CHECK(a.entries[k].label == b.entries[k].label);
        CHECK(to_json(a.entries[k].report) == to_json(b.entries[k].report));
        CHECK(a.entries[k].report.find(checks::identity)->holds);
    }
    CHECK(summary_csv(a) == summary_csv(b));
}

TEST_CASE("sweep over optimal sets") {
    SweepOptions o;
    o.n_min = 4;
    o.n_max = 5;
    o.m_min = 4;
    o.m_max = 5;
    o.constructions = false;
    o.random = false;
    const SweepResult res = audit_sweep(o);
    CHECK_FALSE(res.entries.empty());
    CHECK(res.notices.size() == 1);  // 5x5 exceeds the brute-force limit
    for (const auto& e : res.entries) {
        CHECK(e.report.find(checks::main_theorem)->holds);
    }
    const std::string csv = summary_csv(res);
    CHECK(csv.rfind("check,source,holds,violations,asserted_violations,skipped\n", 0) == 0);
    CHECK(csv.find("main_theorem,optimal,") != std::string::npos);
}

TEST_CASE("audit serialises") {
    const auto j = to_json(audit(build_d1(GridDims(7, 11))));
    CHECK(j.at("checks").size() == 11);
    CHECK(j.at("is_tree") == true);
    CHECK(j.at("checks")[0].at("name") == "handshake");
}
