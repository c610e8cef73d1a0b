#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "outdeg1/process.hpp"

using namespace outdeg1;

namespace {
const Window kUnit{{0, 0}, {1, 1}};
}

TEST_CASE("sample_ppp rejects bad inputs") {
    CHECK_THROWS_AS(sample_ppp(kUnit, 0.0, {1, 0}), std::invalid_argument);
    CHECK_THROWS_AS(sample_ppp(kUnit, -1.0, {1, 0}), std::invalid_argument);
    CHECK_THROWS_AS(sample_ppp(kUnit, std::nan(""), {1, 0}), std::invalid_argument);
    CHECK_THROWS_AS(sample_ppp(Window{{1, 0}, {0, 1}}, 1.0, {1, 0}), std::invalid_argument);
}

TEST_CASE("sample_ppp: near-zero intensity is almost always empty") {
    size_t total = 0;
    for (uint64_t s = 0; s < 100; ++s) total += sample_ppp(kUnit, 1e-9, {5, s}).size();
    CHECK(total == 0);
}

TEST_CASE("sample_ppp determinism and stream independence") {
    const auto a = sample_ppp(kUnit, 50.0, {123, 4});
    const auto b = sample_ppp(kUnit, 50.0, {123, 4});
    REQUIRE(a.size() == b.size());
    for (size_t i = 0; i < a.size(); ++i) {
        CHECK(a.points[i].germ == b.points[i].germ);
        CHECK(a.points[i].mark == b.points[i].mark);
    }
    const auto c = sample_ppp(kUnit, 50.0, {123, 5});
    bool differs = a.size() != c.size();
    for (size_t i = 0; !differs && i < a.size(); ++i) {
        differs = !(a.points[i].germ == c.points[i].germ);
    }
    CHECK(differs);  // distinct streams draw distinct configurations
    a.check();
}

TEST_CASE("sample_ppp: Poisson moments over replicates") {
    // Window [0,10]^2, intensity 1: mean count 100.
    const Window win{{0, 0}, {10, 10}};
    double sum = 0.0;
    const int reps = 1000;
    for (int r = 0; r < reps; ++r) sum += sample_ppp(win, 1.0, {777, uint64_t(r)}).size();
    const double mean = sum / reps;
    CHECK(std::abs(mean - 100.0) <= 3.0 * std::sqrt(100.0 / reps) * 3.0);
}

TEST_CASE("sample_ppp: chi-square goodness of fit against Poisson(20)") {
    // 1e4 replicates of intensity*area = 20; pooled bins, 0.001 level.
    const Window win{{0, 0}, {4, 5}};
    const int reps = 10000;
    std::vector<int> counts;
    counts.reserve(reps);
    for (int r = 0; r < reps; ++r) {
        counts.push_back(static_cast<int>(sample_ppp(win, 1.0, {2024, uint64_t(r)}).size()));
    }

    // Poisson(20) pmf by recurrence; bins {<=11, 12..28, >=29}.
    const double lambda = 20.0;
    std::vector<double> pmf(120, 0.0);
    pmf[0] = std::exp(-lambda);
    for (int k = 1; k < 120; ++k) pmf[k] = pmf[k - 1] * lambda / k;

    const int lo = 12, hi = 28;
    std::vector<double> expected(hi - lo + 3, 0.0);
    std::vector<int> observed(hi - lo + 3, 0);
    double mass = 0.0;
    for (int k = 0; k < 120; ++k) {
        const int bin = k < lo ? 0 : (k > hi ? hi - lo + 2 : k - lo + 1);
        expected[bin] += pmf[k] * reps;
        mass += pmf[k];
    }
    expected.back() += (1.0 - mass) * reps;  // tail beyond the table
    for (int c : counts) {
        const int bin = c < lo ? 0 : (c > hi ? hi - lo + 2 : c - lo + 1);
        ++observed[bin];
    }
    double chi2 = 0.0;
    for (size_t b = 0; b < expected.size(); ++b) {
        REQUIRE(expected[b] > 5.0);
        const double d = observed[b] - expected[b];
        chi2 += d * d / expected[b];
    }
    // df = 19 bins - 1 = 18; chi2_{0.999}(18) = 42.312.
    CHECK(chi2 < 42.312);
}

TEST_CASE("sample_ppp: quadrant counts are exchangeable") {
    const Window win{{0, 0}, {10, 10}};
    long q[4] = {0, 0, 0, 0};
    long total = 0;
    for (int r = 0; r < 10000; ++r) {
        const auto config = sample_ppp(win, 0.2, {31337, uint64_t(r)});
        for (const auto& p : config.points) {
            const int ix = p.germ.x < 5.0 ? 0 : 1;
            const int iy = p.germ.y < 5.0 ? 0 : 1;
            ++q[ix * 2 + iy];
            ++total;
        }
    }
    // Multinomial(total, 1/4) chi-square, df = 3, 0.001 level -> 16.266.
    double chi2 = 0.0;
    const double exp_q = total / 4.0;
    for (int i = 0; i < 4; ++i) chi2 += (q[i] - exp_q) * (q[i] - exp_q) / exp_q;
    CHECK(chi2 < 16.266);
}

TEST_CASE("add_typical") {
    Configuration empty;
    empty.window = kUnit;
    const auto [one, fresh] = add_typical(empty, {0.5, 0.5}, {9, 0});
    CHECK(one.size() == 1);
    CHECK(fresh.id == 0);
    CHECK(fresh.germ == Point2{0.5, 0.5});
    CHECK(fresh.mark >= 0.0);
    CHECK(fresh.mark < 1.0);

    const auto base = sample_ppp(kUnit, 30.0, {10, 1});
    const auto [grown, p] = add_typical(base, {0.25, 0.75}, {9, 1});
    REQUIRE(grown.size() == base.size() + 1);
    CHECK(p.id == static_cast<int>(base.size()));
    for (size_t i = 0; i < base.size(); ++i) CHECK(grown.points[i].id == base.points[i].id);

    // Same rng twice -> identical mark.
    const auto [again, p2] = add_typical(base, {0.25, 0.75}, {9, 1});
    CHECK(again.size() == grown.size());
    CHECK(p2.mark == p.mark);

    CHECK_THROWS_AS(add_typical(grown, p.germ, {9, 2}), std::invalid_argument);
    CHECK_THROWS_AS(add_typical(base, {0.0, 0.5}, {9, 3}), std::invalid_argument);
}

TEST_CASE("translate") {
    const auto base = sample_ppp(kUnit, 20.0, {11, 0});
    const auto same = translate(base, {0, 0});
    for (size_t i = 0; i < base.size(); ++i) CHECK(same.points[i].germ == base.points[i].germ);

    const auto there_back = translate(translate(base, {3.5, -2.25}), {-3.5, 2.25});
    for (size_t i = 0; i < base.size(); ++i) {
        CHECK(dist(there_back.points[i].germ, base.points[i].germ) <= 1e-12);
        CHECK(there_back.points[i].mark == base.points[i].mark);
    }

    Configuration single;
    single.window = {{0, 0}, {5, 5}};
    single.points.push_back({0, {1, 2}, 0.3});
    const auto moved = translate(single, {3, -1});
    CHECK(moved.points[0].germ == Point2{4, 1});
    CHECK(moved.points[0].mark == 0.3);
    CHECK(moved.window.lo == Point2{3, -1});
}
