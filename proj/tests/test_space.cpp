#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "uvh/space.hpp"

using namespace uvh;

namespace {

MetricCloud line_cloud(int n, double step = 1.0) {
    std::vector<std::vector<double>> c;
    for (int i = 0; i < n; ++i) c.push_back({i * step});
    return MetricCloud::from_coords(std::move(c));
}

std::vector<int> range_vec(int lo, int hi) { // [lo, hi]
    std::vector<int> v;
    for (int i = lo; i <= hi; ++i) v.push_back(i);
    return v;
}

} // namespace

TEST_CASE("metric cloud construction and validation", "[space]") {
    auto c = line_cloud(3);
    REQUIRE(c.size() == 3);
    REQUIRE(c.distance(0, 2) == 2.0);
    REQUIRE(c.diameter() == 2.0);
    REQUIRE(c.min_positive_distance() == 1.0);

    REQUIRE_THROWS_AS(MetricCloud::from_distances({{0, 1}, {2, 0}}), input_error);
    REQUIRE_THROWS_AS(MetricCloud::from_distances({{1, 1}, {1, 0}}), input_error);
    REQUIRE_THROWS_AS(MetricCloud::from_distances({{0, -1}, {-1, 0}}), input_error);

    auto m = MetricCloud::from_distances({{0, 1, 2}, {1, 0, 1}, {2, 1, 0}});
    REQUIRE(m.distance(0, 2) == 2.0);
    REQUIRE_FALSE(m.coords().has_value());
}

TEST_CASE("entourage from metric", "[space]") {
    auto c = line_cloud(3);

    SECTION("eps = 1 relates consecutive points only") {
        auto U = entourage_from_metric(c, 1.0);
        REQUIRE(U.related(0, 1));
        REQUIRE(U.related(1, 2));
        REQUIRE_FALSE(U.related(0, 2));
        for (int i = 0; i < 3; ++i) REQUIRE(U.related(i, i));
    }
    SECTION("eps below the minimum positive distance is the identity") {
        auto U = entourage_from_metric(c, 0.5);
        REQUIRE(U == Entourage::identity(3));
    }
    SECTION("eps at or above the diameter is complete") {
        auto U = entourage_from_metric(c, 2.0);
        REQUIRE(U == Entourage::complete(3));
    }
    SECTION("invalid scale rejected") {
        REQUIRE_THROWS_AS(entourage_from_metric(c, 0.0), input_error);
        REQUIRE_THROWS_AS(entourage_from_metric(c, -1.0), input_error);
    }
    SECTION("monotone in eps") {
        std::mt19937_64 rng(7);
        std::uniform_real_distribution<double> d(0.1, 3.0);
        for (int t = 0; t < 50; ++t) {
            double a = d(rng), b = d(rng);
            if (a > b) std::swap(a, b);
            REQUIRE(entourage_from_metric(c, a).subset_of(entourage_from_metric(c, b)));
        }
    }
}

TEST_CASE("balls", "[space]") {
    auto c = line_cloud(3);
    REQUIRE(ball(Entourage::identity(3), 1) == std::vector<int>{1});
    REQUIRE(ball(entourage_from_metric(c, 1.0), 1) == std::vector<int>{0, 1, 2});
    REQUIRE(ball(Entourage::complete(3), 2) == std::vector<int>{0, 1, 2});
    REQUIRE_THROWS_AS(ball(Entourage::identity(3), 3), input_error);
}

TEST_CASE("relation from pairs symmetrizes with a warning", "[space]") {
    bool warned = false;
    auto U = Entourage::from_pairs(3, {{0, 1}}, &warned);
    REQUIRE(warned);
    REQUIRE(U.related(1, 0));
    warned = false;
    auto V = Entourage::from_pairs(3, {{0, 1}, {1, 0}}, &warned);
    REQUIRE_FALSE(warned);
    REQUIRE(U == V);
}

TEST_CASE("refinement order", "[space]") {
    Cover u(3, {{0, 1}, {1, 2}});
    Cover singles(3, {{0}, {1}, {2}});
    Cover merged(3, {{0, 1}, {2}});
    REQUIRE(is_refinement(u, singles));
    REQUIRE_FALSE(is_refinement(singles, merged));
    REQUIRE(is_refinement(u, u));

    SECTION("transitive") {
        Cover whole(3, {{0, 1, 2}});
        REQUIRE(is_refinement(whole, u));
        REQUIRE(is_refinement(u, singles));
        REQUIRE(is_refinement(whole, singles));
    }
}

TEST_CASE("join cover", "[space]") {
    Cover u(3, {{0, 1}, {1, 2}});
    Cover whole(3, {{0, 1, 2}});
    REQUIRE(join_cover(u, whole) == u);

    Cover a(3, {{0, 1}, {2}});
    Cover b(3, {{0}, {1, 2}});
    REQUIRE(join_cover(a, b) == Cover(3, {{0}, {1}, {2}}));

    REQUIRE(join_cover(u, u) == u);

    SECTION("join refines both inputs") {
        auto j = join_cover(a, u);
        REQUIRE(is_refinement(a, j));
        REQUIRE(is_refinement(u, j));
    }
}

TEST_CASE("ball covers and uniform covers", "[space]") {
    auto c = line_cloud(3);
    REQUIRE(ball_cover(Entourage::identity(3)) == Cover(3, {{0}, {1}, {2}}));
    REQUIRE(ball_cover(Entourage::complete(3)) == Cover(3, {{0, 1, 2}}));
    REQUIRE(ball_cover(entourage_from_metric(c, 1.0)) == Cover(3, {{0, 1}, {0, 1, 2}, {1, 2}}));

    REQUIRE(is_uniform_cover(Cover(3, {{0, 1, 2}}), entourage_from_metric(c, 1.0)));
    REQUIRE(is_uniform_cover(Cover(3, {{0}, {1}, {2}}), Entourage::identity(3)));
    REQUIRE_FALSE(is_uniform_cover(Cover(3, {{0}, {1}, {2}}), entourage_from_metric(c, 1.0)));
}

TEST_CASE("stars", "[space]") {
    auto c = line_cloud(3);
    auto bc = ball_cover(entourage_from_metric(c, 1.0));
    REQUIRE(star({}, bc).empty());
    REQUIRE(star({1}, bc) == std::vector<int>{0, 1, 2});
    REQUIRE(star({2}, Cover(3, {{0, 1, 2}})) == std::vector<int>{0, 1, 2});

    SECTION("star contains A and is monotone in A") {
        auto s1 = star({0}, bc);
        auto s2 = star({0, 2}, bc);
        std::vector<int> a0{0};
        REQUIRE(std::includes(s1.begin(), s1.end(), a0.begin(), a0.end()));
        REQUIRE(std::includes(s2.begin(), s2.end(), s1.begin(), s1.end()));
    }
    SECTION("star is antitone under ladder refinement of ball covers") {
        auto line = line_cloud(11);
        auto ladder = EntourageLadder::from_metric(line, {3.0, 2.0, 1.0});
        std::vector<int> A{4, 5};
        std::vector<int> prev;
        for (int r = 0; r < ladder.size(); ++r) {
            auto s = star(A, ball_cover(ladder.rung(r)));
            if (r > 0) REQUIRE(std::includes(prev.begin(), prev.end(), s.begin(), s.end()));
            prev = s;
        }
    }
}

TEST_CASE("star refinement", "[space]") {
    auto c = line_cloud(3);
    auto bc = ball_cover(entourage_from_metric(c, 1.0));
    Cover singles(3, {{0}, {1}, {2}});
    Cover whole(3, {{0, 1, 2}});

    // a coarse cover never star-refines a finer one once stars spill over
    REQUIRE_FALSE(is_star_refinement(singles, bc));
    // the singleton cover star-refines anything: singleton stars are singletons
    REQUIRE(is_star_refinement(bc, singles));
    REQUIRE(is_star_refinement(whole, bc));
    REQUIRE(is_star_refinement(whole, whole));

    SECTION("star refinement implies plain refinement") {
        std::vector<std::pair<Cover, Cover>> cases = {{bc, singles}, {whole, bc}, {whole, singles}, {bc, bc}};
        for (const auto& [u, v] : cases)
            if (is_star_refinement(u, v)) REQUIRE(is_refinement(u, v));
    }
}

TEST_CASE("normal ladders", "[space]") {
    auto c = line_cloud(3);
    Cover whole(3, {{0, 1, 2}});
    Cover singles(3, {{0}, {1}, {2}});
    auto bc = ball_cover(entourage_from_metric(c, 1.0));

    REQUIRE(is_normal_ladder({bc}));
    REQUIRE(is_normal_ladder({whole, whole}));
    REQUIRE(is_normal_ladder({whole, bc, singles}));
    REQUIRE_FALSE(is_normal_ladder({singles, bc}));
    REQUIRE_THROWS_AS(is_normal_ladder({}), input_error);
}

TEST_CASE("strong containment", "[space]") {
    auto line = line_cloud(11);
    auto ladder = EntourageLadder::from_metric(line, {2.0, 1.0});

    SECTION("empty set is strongly contained at the coarsest scale") {
        auto s = strong_containment({}, {0}, ladder);
        REQUIRE(s.has_value());
        REQUIRE(*s == 2.0);
    }
    SECTION("collar example") {
        auto s = strong_containment(range_vec(0, 3), range_vec(0, 5), ladder);
        REQUIRE(s.has_value());
        REQUIRE(*s == 1.0);
    }
    SECTION("a set is never strongly contained in itself when stars grow") {
        REQUIRE_FALSE(strong_containment(range_vec(0, 3), range_vec(0, 3), ladder).has_value());
    }
    SECTION("strong containment implies containment") {
        std::mt19937_64 rng(99);
        std::uniform_int_distribution<int> pick(0, 10);
        for (int t = 0; t < 40; ++t) {
            std::vector<int> A, B;
            for (int i = 0; i <= 10; ++i) {
                if (pick(rng) < 4) A.push_back(i);
                if (pick(rng) < 7) B.push_back(i);
            }
            if (B.empty()) B.push_back(0);
            auto s = strong_containment(A, B, ladder);
            if (s.has_value())
                for (int a : A) REQUIRE(std::find(B.begin(), B.end(), a) != B.end());
        }
    }
}

TEST_CASE("ladder validation", "[space]") {
    auto c = line_cloud(4);
    REQUIRE_THROWS_AS(EntourageLadder::from_metric(c, {1.0, 2.0}), input_error);
    REQUIRE_THROWS_AS(EntourageLadder::from_metric(c, {1.0, 1.0}), input_error);
    REQUIRE_THROWS_AS(EntourageLadder::from_metric(c, {}), input_error);

    auto g = EntourageLadder::geometric_scales(2.0, 0.5, 3);
    REQUIRE(g == std::vector<double>{2.0, 1.0, 0.5});
    auto lad = EntourageLadder::from_metric(c, g);
    REQUIRE(lad.size() == 3);
    REQUIRE(lad.rung(2).subset_of(lad.rung(0)));

    // hand-rolled non-monotone ladder is rejected
    std::vector<Entourage> bad{Entourage::identity(4), Entourage::complete(4)};
    REQUIRE_THROWS_AS(EntourageLadder({2.0, 1.0}, std::move(bad)), input_error);
}
