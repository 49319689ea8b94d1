#include <catch2/catch_amalgamated.hpp>

#include "support/test_support.hpp"

using namespace stcube;

TEST_CASE("node and edge ids are stable and normalized") {
    ContinuousDynamicGraph g;
    const int a = g.add_node("a");
    const int b = g.add_node("b");
    CHECK(g.add_node("a") == a);  // idempotent by name
    CHECK(g.node_id("b") == b);
    CHECK(g.node_id("zzz") == -1);

    const int e = g.add_edge(b, a);  // stored undirected
    CHECK(g.add_edge(a, b) == e);
    CHECK(g.edge(e).u == a);
    CHECK(g.edge(e).v == b);
    CHECK(g.edge_id(b, a) == e);
    CHECK_THROWS_AS(g.add_edge(a, a), std::out_of_range);
}

namespace {

ContinuousDynamicGraph coverage_case(const TimeInterval& edge_span,
                                     const TimeInterval& u_span,
                                     const TimeInterval& v_span) {
    ContinuousDynamicGraph g;
    g.time_domain = TimeInterval::closed(0, 20);
    const int u = g.add_node("u");
    const int v = g.add_node("v");
    g.node(u).appearance.add(u_span, PieceFunction<bool>::constant(true));
    g.node(v).appearance.add(v_span, PieceFunction<bool>::constant(true));
    g.edge(g.add_edge(u, v)).appearance.add(edge_span, PieceFunction<bool>::constant(true));
    return g;
}

}  // namespace

TEST_CASE("edge coverage validation") {
    // Edge on [2,7), both nodes on [0,10]: fine.
    CHECK(validate(coverage_case(TimeInterval::right_open(2, 7), TimeInterval::closed(0, 10),
                                 TimeInterval::closed(0, 10)))
              .ok());

    // u only present from 3: the edge dangles on [2,3).
    const auto report = validate(coverage_case(TimeInterval::right_open(2, 7),
                                               TimeInterval::closed(3, 10),
                                               TimeInterval::closed(0, 10)));
    REQUIRE(report.violations.size() == 1);
    CHECK(report.violations[0].edge == 0);
    CHECK(report.violations[0].span == TimeInterval::right_open(2, 3));

    // A node alone can never violate coverage.
    CHECK(validate(support::jane_graph()).ok());
}

TEST_CASE("validation agrees with brute-force sampling on random graphs") {
    support::Rng rng(23);
    for (int round = 0; round < 20; ++round) {
        ContinuousDynamicGraph g = support::random_graph(rng, 12);
        // Half the rounds: break one edge on purpose by extending its presence.
        const bool broken = g.edge_count() > 0 && round % 2 == 0;
        if (broken) {
            auto& e = g.edge(0);
            const double beyond = 99.5;
            e.appearance.add(TimeInterval::closed(beyond, 100),
                             PieceFunction<bool>::constant(true));
            // Make sure at least one endpoint is really absent there.
            // (Presence generation never reaches past 99.)
        }
        const ValidationReport report = validate(g);

        // Sampled cross-check: every violation span must contain a genuinely
        // uncovered instant, and an ok report must have no uncovered samples.
        auto uncovered_at = [&](int edge, double t) {
            const auto& e = g.edge(edge);
            return e.appearance.value(t) &&
                   !(g.node(e.u).appearance.value(t) && g.node(e.v).appearance.value(t));
        };
        if (report.ok()) {
            for (int i = 0; i < 10000; ++i) {
                const double t = support::runif(rng, 0, 100);
                for (int e = 0; e < g.edge_count(); ++e) CHECK_FALSE(uncovered_at(e, t));
                if (g.edge_count() == 0) break;
            }
        } else {
            for (const auto& violation : report.violations) {
                const double mid = violation.span.is_instant()
                                       ? violation.span.start
                                       : (violation.span.start + violation.span.end) / 2;
                CHECK(uncovered_at(violation.edge, mid));
            }
        }
        if (broken) CHECK_FALSE(report.ok());
    }
}

TEST_CASE("presence intervals materialize correctly") {
    const auto g = support::jane_graph();
    const auto runs = appearance_intervals(g, 0);
    REQUIRE(runs.size() == 2);
    CHECK(runs[0] == TimeInterval::right_open(2, 7));
    CHECK(runs[1] == TimeInterval::left_open(9, 13));

    ContinuousDynamicGraph empty;
    empty.add_node("ghost");
    CHECK(appearance_intervals(empty, 0).empty());

    // Adjacent true pieces merge.
    ContinuousDynamicGraph g2;
    g2.time_domain = TimeInterval::closed(0, 10);
    const int id = g2.add_node("n");
    g2.node(id).appearance.add(TimeInterval::closed(1, 2), PieceFunction<bool>::constant(true));
    g2.node(id).appearance.add(TimeInterval::left_open(2, 3),
                               PieceFunction<bool>::constant(true));
    const auto merged = appearance_intervals(g2, 0);
    REQUIRE(merged.size() == 1);
    CHECK(merged[0] == TimeInterval::closed(1, 3));
}

TEST_CASE("default-true appearance spans the domain minus false pieces") {
    ContinuousDynamicGraph g;
    g.time_domain = TimeInterval::closed(0, 10);
    const int id = g.add_node("n");
    g.node(id).appearance.set_default(true);
    g.node(id).appearance.add(TimeInterval::open(4, 6), PieceFunction<bool>::constant(false));
    const auto runs = appearance_intervals(g, id);
    REQUIRE(runs.size() == 2);
    CHECK(runs[0] == TimeInterval::closed(0, 4));
    CHECK(runs[1] == TimeInterval::closed(6, 10));
}
