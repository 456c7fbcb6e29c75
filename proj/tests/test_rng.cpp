#include <doctest.h>

#include <cmath>
#include <algorithm>
#include <numeric>

#include "chainsim/rng.hpp"

using namespace chainsim;

namespace {

std::vector<double> draws(std::uint64_t seed, std::uint64_t stream, int count) {
    CounterRng rng(seed, stream);
    std::vector<double> out(static_cast<size_t>(count));
    for (double& x : out) x = rng.uniform();
    return out;
}

double mean(const std::vector<double>& v) {
    return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

double variance(const std::vector<double>& v) {
    const double m = mean(v);
    double s = 0.0;
    for (double x : v) s += (x - m) * (x - m);
    return s / static_cast<double>(v.size() - 1);
}

}  // namespace

TEST_SUITE("rng") {
    TEST_CASE("streams are reproducible") {
        CHECK(draws(5, 3, 100) == draws(5, 3, 100));
        CHECK(draws(5, 3, 100) != draws(5, 4, 100));
        CHECK(draws(5, 3, 100) != draws(6, 3, 100));
    }

    TEST_CASE("uniform draws lie in the unit interval") {
        for (double x : draws(1, 0, 10000)) {
            CHECK(x >= 0.0);
            CHECK(x < 1.0);
        }
    }

    TEST_CASE("neighbouring streams are uncorrelated") {
        const auto a = draws(9, 0, 20000);
        const auto b = draws(9, 1, 20000);
        const double ma = mean(a), mb = mean(b);
        double cov = 0.0;
        for (size_t i = 0; i < a.size(); ++i) cov += (a[i] - ma) * (b[i] - mb);
        cov /= static_cast<double>(a.size() - 1);
        CHECK(std::abs(cov / std::sqrt(variance(a) * variance(b))) < 0.03);
    }

    TEST_CASE("disorder distributions have the advertised moments") {
        CounterRng rng(2024, 0);
        const auto u = draw_detunings(rng, 50000, DisorderDistribution::uniform, 2.0);
        CHECK(std::abs(mean(u)) < 0.02);
        CHECK(variance(u) == doctest::Approx(4.0 / 12.0).epsilon(0.03));
        CHECK(*std::min_element(u.begin(), u.end()) >= -1.0);
        CHECK(*std::max_element(u.begin(), u.end()) <= 1.0);

        const auto g = draw_detunings(rng, 50000, DisorderDistribution::gaussian, 0.5);
        CHECK(std::abs(mean(g)) < 0.01);
        CHECK(variance(g) == doctest::Approx(0.25).epsilon(0.03));
    }

    TEST_CASE("zero width gives a clean chain") {
        CounterRng rng(1, 1);
        const auto d = draw_detunings(rng, 10, DisorderDistribution::gaussian, 0.0);
        CHECK(std::all_of(d.begin(), d.end(), [](double x) { return x == 0.0; }));
    }
}
