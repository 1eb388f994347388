#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "json.hpp"

#include <algorithm>
#include <random>

#include "ddg/analysis.hpp"

using namespace ddg;

namespace {

Graph cycle(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i) e.push_back({i, (i + 1) % n});
    return Graph::from_edges(n, e);
}

Graph complete(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.push_back({i, j});
    return Graph::from_edges(n, e);
}

Graph two_triangles() {
    return Graph::from_edges(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
}

Graph petersen_kneser() {
    std::vector<std::pair<int, int>> pairs;
    for (int a = 0; a < 5; ++a)
        for (int b = a + 1; b < 5; ++b) pairs.push_back({a, b});
    std::vector<std::pair<int, int>> e;
    for (size_t i = 0; i < pairs.size(); ++i)
        for (size_t j = i + 1; j < pairs.size(); ++j) {
            auto [a, b] = pairs[i];
            auto [c, d] = pairs[j];
            if (a != c && a != d && b != c && b != d) e.push_back({(int)i, (int)j});
        }
    return Graph::from_edges(10, e);
}

Graph hypercube3() {
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < 8; ++u)
        for (int b = 0; b < 3; ++b)
            if (u < (u ^ (1 << b))) e.push_back({u, u ^ (1 << b)});
    return Graph::from_edges(8, e);
}

// quotient identity for a proper DDG: R^2 = (k^2 - lambda2 v) I + lambda2 n J
void check_quotient_identity(const Graph& g, const DdgParams& p, const Partition& part) {
    const IntMatrix r = canonical_quotient(g, part);
    const IntMatrix want = mat_add(
        mat_scale(IntMatrix::identity(p.m),
                  BigInt(p.k) * p.k - BigInt(p.lambda2) * p.v),
        mat_scale(IntMatrix::ones(p.m), BigInt(p.lambda2) * p.n));
    CHECK(mat_mul(r, r) == want);
    CHECK(mat_mul(r, transpose(r)) == want);
}

Graph relabel(const Graph& g, const std::vector<int>& perm) {
    GraphBuilder b(g.size());
    for (int u = 0; u < g.size(); ++u)
        for (int v : g.neighbours(u))
            if (u < v) b.add_edge(perm[(size_t)u], perm[(size_t)v]);
    return b.build();
}

}  // namespace

TEST_CASE("verify: hexagon and two triangles share parameters (6,2,1,0,2,3)") {
    const DdgParams p{6, 2, 1, 0, 2, 3};

    Graph c6 = cycle(6);
    Partition alt{{{0, 2, 4}, {1, 3, 5}}};
    CHECK(verify_ddg(c6, p, alt).ok);
    check_quotient_identity(c6, p, alt);
    IntMatrix q = canonical_quotient(c6, alt);
    CHECK(q == IntMatrix::from_rows({{0, 2}, {2, 0}}));
    CHECK(is_walk_regular_ddg(c6, p, alt));

    Graph tt = two_triangles();
    Partition comps{{{0, 1, 2}, {3, 4, 5}}};
    CHECK(verify_ddg(tt, p, comps).ok);
    check_quotient_identity(tt, p, comps);
    CHECK(canonical_quotient(tt, comps) == IntMatrix::from_rows({{2, 0}, {0, 2}}));
    CHECK(is_walk_regular_ddg(tt, p, comps));

    // wrong class split: same-class pairs no longer share a count
    VerifyReport bad = verify_ddg(c6, p, Partition{{{0, 1, 2}, {3, 4, 5}}});
    CHECK_FALSE(bad.ok);
    CHECK(bad.u >= 0);
    CHECK(bad.observed != bad.required);

    // malformed partitions are the caller's error
    CHECK_THROWS_AS(verify_ddg(c6, p, Partition{{{0, 1, 2, 3, 4, 5}}}), PartitionMismatch);
    CHECK_THROWS_AS(verify_ddg(c6, p, Partition{{{0, 2, 4}, {1, 3, 4}}}), PartitionMismatch);
}

TEST_CASE("verify: improper clique with a single class") {
    // K4 as (4,3,2)-graph: lambda2 plays no role when m = 1
    CHECK(verify_ddg(complete(4), DdgParams{4, 3, 2, 77, 1, 4}, Partition{{{0, 1, 2, 3}}}).ok);
}

TEST_CASE("recognition: proper, improper, rejected") {
    Graph c6 = cycle(6);
    Recognition r = recognize_ddg(c6);
    REQUIRE(r.kind == Recognition::Kind::Proper);
    REQUIRE(r.readings.size() == 1);  // readings are provably unique
    CHECK(r.readings[0].first == DdgParams{6, 2, 1, 0, 2, 3});
    CHECK(r.readings[0].second.classes == std::vector<VertexSet>{{0, 2, 4}, {1, 3, 5}});

    r = recognize_ddg(two_triangles());
    REQUIRE(r.kind == Recognition::Kind::Proper);
    REQUIRE(r.readings.size() == 1);
    CHECK(r.readings[0].first == DdgParams{6, 2, 1, 0, 2, 3});
    CHECK(r.readings[0].second.classes == std::vector<VertexSet>{{0, 1, 2}, {3, 4, 5}});

    r = recognize_ddg(hypercube3());
    REQUIRE(r.kind == Recognition::Kind::Proper);
    REQUIRE(r.readings.size() == 1);
    CHECK(r.readings[0].first == DdgParams{8, 3, 2, 0, 2, 4});

    // complete graph: one common-neighbour value, improper
    r = recognize_ddg(complete(4));
    CHECK(r.kind == Recognition::Kind::Improper);
    CHECK(r.v == 4);
    CHECK(r.k == 3);
    CHECK(r.lambda == 2);

    // coclique: k = 0, lambda = 0
    r = recognize_ddg(Graph::empty(5));
    CHECK(r.kind == Recognition::Kind::Improper);
    CHECK(r.lambda == 0);

    // Petersen: two values {0,1} but no equivalence fits either way
    r = recognize_ddg(petersen_kneser());
    CHECK(r.kind == Recognition::Kind::NotDdg);
    CHECK(r.common_values == std::vector<int>{0, 1});

    // path: not regular
    CHECK_THROWS_AS(recognize_ddg(Graph::from_edges(3, {{0, 1}, {1, 2}})), NotRegular);

    // triangular prism: common-neighbour counts take values {0,1,2}
    Graph prism = Graph::from_edges(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5},
                                        {0, 3}, {1, 4}, {2, 5}});
    CHECK_THROWS_AS(recognize_ddg(prism), MoreThanTwoValues);
}

TEST_CASE("recognition is invariant under relabeling") {
    std::mt19937_64 rng(31);
    for (const Graph& g : {cycle(6), two_triangles(), hypercube3()}) {
        std::vector<int> perm(static_cast<size_t>(g.size()));
        for (int i = 0; i < g.size(); ++i) perm[(size_t)i] = i;
        for (int trial = 0; trial < 10; ++trial) {
            std::shuffle(perm.begin(), perm.end(), rng);
            Graph h = relabel(g, perm);
            Recognition a = recognize_ddg(g), b = recognize_ddg(h);
            REQUIRE(a.kind == Recognition::Kind::Proper);
            REQUIRE(b.kind == Recognition::Kind::Proper);
            CHECK(a.readings[0].first == b.readings[0].first);
            // the partition must be the image of the original partition
            std::vector<VertexSet> mapped;
            for (const auto& cls : a.readings[0].second.classes) {
                VertexSet img;
                for (int u : cls) img.push_back(perm[(size_t)u]);
                std::sort(img.begin(), img.end());
                mapped.push_back(std::move(img));
            }
            std::sort(mapped.begin(), mapped.end());
            CHECK(mapped == b.readings[0].second.classes);
        }
    }
}

TEST_CASE("quotient: equitability enforced") {
    try {
        canonical_quotient(cycle(6), Partition{{{0, 1, 2}, {3, 4, 5}}});
        FAIL("expected NotEquitable");
    } catch (const NotEquitable& e) {
        CHECK(std::string(e.what()).find("class 0") != std::string::npos);
    }
}

TEST_CASE("spectrum: hexagon (connected) and two triangles (disconnected)") {
    const DdgParams p{6, 2, 1, 0, 2, 3};
    // d1 = 1, d2 = 4; spectrum of C6 is {2, 1, 1, -1, -1, -2}
    DdgSpectrum s = ddg_spectrum(p, cycle(6));
    CHECK(s.f.d == 1);
    CHECK(s.f.mult_plus == 2);
    CHECK(s.f.mult_minus == 2);
    CHECK(s.g.d == 4);
    CHECK(s.g.mult_plus == 0);  // +2 is the valency itself
    CHECK(s.g.mult_minus == 1);
    CHECK(s.second_largest_squared() == 1);

    // spectrum of 2K3 is {2, 2, -1, -1, -1, -1}: the second valency copy is
    // the +sqrt(d2) eigenvalue
    s = ddg_spectrum(p, two_triangles());
    CHECK(s.f.mult_plus == 0);
    CHECK(s.f.mult_minus == 4);
    CHECK(s.g.mult_plus == 1);
    CHECK(s.g.mult_minus == 0);
    CHECK(s.second_largest_squared() == 4);

    // hypercube: d1 = 1, d2 = 9 with sqrt = k: {3, 1^3, (-1)^3, -3}
    s = ddg_spectrum(DdgParams{8, 3, 2, 0, 2, 4}, hypercube3());
    CHECK(s.f.mult_plus == 3);
    CHECK(s.f.mult_minus == 3);
    CHECK(s.g.mult_plus == 0);
    CHECK(s.g.mult_minus == 1);

    CHECK_THROWS_AS(ddg_spectrum(DdgParams{4, 3, 2, 2, 1, 4}, complete(4)), ImproperInput);
    CHECK_THROWS_AS(ddg_spectrum(DdgParams{6, 2, 0, 1, 2, 3}, cycle(6)),
                    InconsistentMultiplicities);  // swapped lambdas break trace(A^2)
}

TEST_CASE("analysis report JSON") {
    auto j = nlohmann::json::parse(analysis_report_json(cycle(6)));
    CHECK(j["ddg"] == true);
    CHECK(j["proper"] == true);
    CHECK(j["params"]["lambda2"] == 0);
    CHECK(j["partition"].size() == 2);
    CHECK(j["quotient"][0][1] == 2);
    CHECK(j["walk_regular"] == true);
    CHECK(j["spectrum"]["pairs"][1]["root"] == 2);

    j = nlohmann::json::parse(analysis_report_json(complete(4)));
    CHECK(j["ddg"] == true);
    CHECK(j["proper"] == false);
    CHECK(j["improper"]["lambda"] == 2);

    j = nlohmann::json::parse(analysis_report_json(petersen_kneser()));
    CHECK(j["ddg"] == false);

    j = nlohmann::json::parse(analysis_report_json(Graph::from_edges(3, {{0, 1}, {1, 2}})));
    CHECK(j["ddg"] == false);
    CHECK(j["reason"] == "not regular");
}
