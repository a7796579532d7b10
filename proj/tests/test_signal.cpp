#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "wmeog/signal.hpp"

using namespace wmeog;

TEST_CASE("quantize rounds half away from zero") {
    const QuantizationSpec micro(1'000'000);

    CHECK(quantize(Signal({0.0}, 250.0), micro).samples == std::vector<std::int32_t>{0});
    CHECK(quantize(Signal({4.9698e-5}, 250.0), micro).samples ==
          std::vector<std::int32_t>{50});
    CHECK(quantize(Signal({-1.5e-6}, 250.0), micro).samples ==
          std::vector<std::int32_t>{-2});

    const QuantizationSpec unit(1);
    CHECK(quantize(Signal({0.5, -0.5, 1.5, 2.5, -2.5}, 1.0), unit).samples ==
          std::vector<std::int32_t>{1, -1, 2, 3, -3});
}

TEST_CASE("quantize carries scale and sample rate through") {
    const auto q = quantize(Signal({1.0e-6, 2.0e-6}, 250.0), QuantizationSpec(1'000'000));
    CHECK(q.scale == 1'000'000);
    CHECK(q.sample_rate == 250.0);
    CHECK(q.samples == std::vector<std::int32_t>{1, 2});
}

TEST_CASE("quantize rejects samples outside the 32-bit range") {
    const QuantizationSpec micro(1'000'000);
    CHECK_THROWS_AS(quantize(Signal({3000.0}, 250.0), micro), RangeOverflow);
    CHECK_THROWS_AS(quantize(Signal({-3000.0}, 250.0), micro), RangeOverflow);
    CHECK_THROWS_AS(quantize(Signal({std::numeric_limits<double>::infinity()}, 250.0),
                             QuantizationSpec(1)),
                    RangeOverflow);

    // the boundary itself is representable
    const auto q = quantize(Signal({-2147483648.0, 2147483647.0}, 1.0), QuantizationSpec(1));
    CHECK(q.samples.front() == INT32_MIN);
    CHECK(q.samples.back() == INT32_MAX);
    CHECK_THROWS_AS(quantize(Signal({2147483648.0}, 1.0), QuantizationSpec(1)), RangeOverflow);
}

TEST_CASE("dequantize divides by the scale") {
    CHECK(dequantize(IntSignal({0}, 1'000'000, 250.0)).samples ==
          std::vector<double>{0.0});
    CHECK(dequantize(IntSignal({50}, 1'000'000, 250.0)).samples ==
          std::vector<double>{5.0e-5});
    CHECK(dequantize(IntSignal({-93}, 1, 250.0)).samples == std::vector<double>{-93.0});
}

TEST_CASE("quantize/dequantize round trip stays within half a grid step") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> volt(-1.0, 1.0);
    const QuantizationSpec spec(1'000'000);
    const double step = 0.5 / static_cast<double>(spec.scale);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<double> samples(64);
        for (auto& v : samples) v = volt(rng);
        const Signal s(samples, 250.0);
        const Signal back = dequantize(quantize(s, spec));
        for (std::size_t i = 0; i < samples.size(); ++i) {
            CHECK(std::abs(back.samples[i] - samples[i]) <= step * (1.0 + 1e-12));
        }
    }
}

TEST_CASE("quantize is monotone per sample") {
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> volt(-2.0, 2.0);
    const QuantizationSpec spec(1000);
    for (int trial = 0; trial < 1000; ++trial) {
        double a = volt(rng);
        double b = volt(rng);
        if (a > b) std::swap(a, b);
        const auto q = quantize(Signal({a, b}, 1.0), spec);
        CHECK(q.samples[0] <= q.samples[1]);
    }
}

TEST_CASE("crop returns the contiguous sub-signal") {
    std::vector<std::int32_t> ramp(200);
    for (std::size_t i = 0; i < ramp.size(); ++i) ramp[i] = static_cast<std::int32_t>(i);
    const IntSignal s(ramp, 1, 250.0);

    const IntSignal head = crop(s, Region(0, 128));
    REQUIRE(head.size() == 128);
    CHECK(head.samples.front() == 0);
    CHECK(head.samples.back() == 127);
    CHECK(head.scale == s.scale);
    CHECK(head.sample_rate == s.sample_rate);

    const IntSignal full = crop(IntSignal(head.samples, 1, 250.0), Region(0, 128));
    CHECK(full.samples == head.samples);

    CHECK_THROWS_AS(crop(IntSignal(std::vector<std::int32_t>(100, 0), 1, 250.0),
                         Region(0, 128)),
                    RegionOutOfBounds);
}

TEST_CASE("merge replaces exactly the region") {
    const IntSignal carrier({1, 2, 3, 4}, 1, 250.0);
    const IntSignal repl({9, 8}, 1, 250.0);
    CHECK(merge(carrier, Region(1, 2), repl).samples ==
          std::vector<std::int32_t>{1, 9, 8, 4});

    CHECK_THROWS_AS(merge(IntSignal({1, 2}, 1, 250.0), Region(0, 4), carrier),
                    RegionOutOfBounds);
    CHECK_THROWS_AS(merge(carrier, Region(0, 4), repl), LengthMismatch);
    CHECK_THROWS_AS(merge(carrier, Region(0, 2), IntSignal({9, 8}, 2, 250.0)),
                    SignalMismatch);
}

TEST_CASE("merge/crop identities hold for random regions") {
    std::mt19937 rng(23);
    std::uniform_int_distribution<std::int32_t> value(-1000, 1000);
    for (int trial = 0; trial < 300; ++trial) {
        std::uniform_int_distribution<std::size_t> len_dist(4, 200);
        const std::size_t n = len_dist(rng) & ~std::size_t{1};
        std::vector<std::int32_t> samples(n);
        for (auto& v : samples) v = value(rng);
        const IntSignal s(samples, 1, 100.0);

        std::uniform_int_distribution<std::size_t> reg_len(1, n / 2);
        const std::size_t length = reg_len(rng) * 2;
        std::uniform_int_distribution<std::size_t> reg_off(0, n - length);
        const Region r(reg_off(rng), length);

        // merge(s, r, crop(s, r)) == s
        CHECK(merge(s, r, crop(s, r)).samples == s.samples);

        // crop(merge(s, r, x), r) == x
        std::vector<std::int32_t> xs(length);
        for (auto& v : xs) v = value(rng);
        const IntSignal x(xs, 1, 100.0);
        CHECK(crop(merge(s, r, x), r).samples == x.samples);
    }
}

TEST_CASE("degenerate construction is rejected") {
    CHECK_THROWS_AS(Signal({}, 250.0), InvalidArgument);
    CHECK_THROWS_AS(Signal({1.0}, 0.0), InvalidArgument);
    CHECK_THROWS_AS(Signal({1.0}, -1.0), InvalidArgument);
    CHECK_THROWS_AS(IntSignal({}, 1, 250.0), InvalidArgument);
    CHECK_THROWS_AS(IntSignal({1}, 0, 250.0), InvalidArgument);
    CHECK_THROWS_AS(QuantizationSpec(0), InvalidArgument);
    CHECK_THROWS_AS(Region(0, 0), InvalidArgument);
    CHECK_THROWS_AS(Region(0, 127), InvalidArgument);
}
