#include <catch2/catch_amalgamated.hpp>

#include "hpdiv/divergences.hpp"
#include "hpdiv/random.hpp"

using namespace hpdiv;

namespace {

double binary_entropy(double p) { return -p * std::log(p) - (1 - p) * std::log(1 - p); }

HermitianMatrix draw(std::uint64_t seed, int dim, bool unit_trace = false) {
    HpdGenConfig cfg;
    cfg.dim = dim;
    cfg.seed = seed;
    cfg.unit_trace = unit_trace;
    return random_hpd(cfg);
}

HermitianMatrix conjugate(const HermitianMatrix& x, const ComplexMatrix& u) {
    return HermitianMatrix::hermitian_part(matmul(matmul(u, x.as_complex()), adjoint(u)));
}

// Classical (scalar-sum) oracle for commuting diagonal pairs.
double classical_js(const std::vector<double>& p, const std::vector<double>& q) {
    double s = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        const double m = 0.5 * (p[i] + q[i]);
        s += -m * std::log(m) + 0.5 * p[i] * std::log(p[i]) + 0.5 * q[i] * std::log(q[i]);
    }
    return s;
}

}  // namespace

TEST_CASE("bregman_scalar closed forms") {
    REQUIRE(bregman_scalar(FunctionKind::neglog(), 2.0, 2.0) == Catch::Approx(0.0).margin(1e-15));
    REQUIRE(bregman_scalar(FunctionKind::xlogx(), 2.0, 1.0) ==
            Catch::Approx(2.0 * std::log(2.0) - 1.0));
    REQUIRE(bregman_scalar(FunctionKind::square(), 3.0, 1.0) == Catch::Approx(2.0));
    REQUIRE_THROWS_AS(bregman_scalar(FunctionKind::xlogx(), -1.0, 1.0), domain_error);
}

TEST_CASE("bregman_matrix instances") {
    SECTION("zero at X = Y") {
        const HermitianMatrix x = draw(3, 3);
        REQUIRE(bregman_vn(x, x) == Catch::Approx(0.0).margin(1e-10));
        REQUIRE(bregman_logdet(x, x) == Catch::Approx(0.0).margin(1e-10));
        REQUIRE(bregman_frobenius(x, x) == Catch::Approx(0.0).margin(1e-12));
    }
    SECTION("LogDet scalar Burg value") {
        REQUIRE(bregman_logdet(HermitianMatrix::diagonal({2.0}),
                               HermitianMatrix::diagonal({1.0})) ==
                Catch::Approx(1.0 - std::log(2.0)));
    }
    SECTION("von Neumann on commuting pair is a scalar KL sum") {
        REQUIRE(bregman_vn(HermitianMatrix::diagonal({2.0, 1.0}),
                           HermitianMatrix::diagonal({1.0, 1.0})) ==
                Catch::Approx(2.0 * std::log(2.0) - 1.0));
    }
    SECTION("nonnegativity and asymmetry on random pairs") {
        for (std::uint64_t s = 0; s < 20; ++s) {
            const HermitianMatrix x = draw(100 + s, 3), y = draw(200 + s, 3);
            REQUIRE(bregman_vn(x, y) >= -1e-10);
            REQUIRE(bregman_logdet(x, y) >= -1e-10);
        }
        const HermitianMatrix x = draw(55, 3), y = draw(56, 3);
        REQUIRE(std::abs(bregman_vn(x, y) - bregman_vn(y, x)) > 1e-8);
        REQUIRE(std::abs(bregman_logdet(x, y) - bregman_logdet(y, x)) > 1e-8);
    }
    SECTION("generic Bregman matches the named instances") {
        const HermitianMatrix x = draw(7, 3), y = draw(8, 3);
        REQUIRE(bregman_matrix(FunctionKind::xlogx(), x, y) ==
                Catch::Approx(bregman_vn(x, y)).epsilon(1e-10));
        REQUIRE(bregman_matrix(FunctionKind::neglog(), x, y) ==
                Catch::Approx(bregman_logdet(x, y)).epsilon(1e-10));
        REQUIRE(bregman_matrix(FunctionKind::square(), x, y) ==
                Catch::Approx(bregman_frobenius(x, y)).epsilon(1e-10));
    }
}

TEST_CASE("jensen divergence") {
    const HermitianMatrix x = draw(11, 3), y = draw(12, 3);

    SECTION("Square kind is the scaled squared Frobenius distance") {
        // For f = x^2/2 the Jensen gap is ||X-Y||_F^2 / 8, a quarter of the
        // Bregman value (midpoint averaging halves each difference twice).
        const double fd = frobenius_distance(x, y);
        REQUIRE(jensen(FunctionKind::square(), x, y) == Catch::Approx(0.125 * fd * fd));
        REQUIRE(jensen(FunctionKind::square(), x, y) ==
                Catch::Approx(0.25 * bregman_frobenius(x, y)).epsilon(1e-12));
    }
    SECTION("X = Y gives 0") {
        for (auto f : {FunctionKind::square(), FunctionKind::xlogx(), FunctionKind::neglog(),
                       FunctionKind::power_low(0.5), FunctionKind::power_high(1.5)})
            REQUIRE(jensen(f, x, x) == Catch::Approx(0.0).margin(1e-10));
    }
    SECTION("NegLog scalar value") {
        REQUIRE(jensen(FunctionKind::neglog(), HermitianMatrix::diagonal({4.0}),
                       HermitianMatrix::diagonal({1.0})) ==
                Catch::Approx(std::log(2.5) - 0.5 * std::log(4.0)));
    }
    SECTION("trace form agrees with averaged-Bregman form") {
        for (auto f : {FunctionKind::square(), FunctionKind::xlogx(), FunctionKind::neglog()}) {
            const double a = jensen(f, x, y);
            const double b = jensen_via_bregman(f, x, y);
            REQUIRE(a == Catch::Approx(b).epsilon(1e-10));
            REQUIRE(a >= -1e-12);
        }
    }
    SECTION("midpoint optimality of the averaged Bregman objective") {
        Rng rng(2024);
        const HermitianMatrix m = midpoint(x, y);
        for (auto f : {FunctionKind::square(), FunctionKind::xlogx(), FunctionKind::neglog()}) {
            const double at_mid = 0.5 * (bregman_matrix(f, x, m) + bregman_matrix(f, y, m));
            for (int k = 0; k < 25; ++k) {
                const HermitianMatrix h = random_hermitian_direction(3, rng);
                for (double eps : {1e-2, 1e-3}) {
                    const HermitianMatrix z = m + eps * h;
                    const double at_z =
                        0.5 * (bregman_matrix(f, x, z) + bregman_matrix(f, y, z));
                    REQUIRE(at_mid <= at_z + 1e-10);
                }
            }
        }
    }
}

TEST_CASE("s_divergence") {
    const HermitianMatrix x = draw(21, 4), y = draw(22, 4);
    REQUIRE(s_divergence(x, x) == Catch::Approx(0.0).margin(1e-12));
    REQUIRE(s_divergence(HermitianMatrix::diagonal({4.0}), HermitianMatrix::diagonal({1.0})) ==
            Catch::Approx(std::log(1.25)));
    REQUIRE(s_divergence(HermitianMatrix::diagonal({1.0, 4.0}),
                         HermitianMatrix::diagonal({4.0, 1.0})) ==
            Catch::Approx(2.0 * std::log(1.25)));
    REQUIRE(s_divergence(x, y) == Catch::Approx(s_divergence(y, x)).epsilon(1e-12));
    REQUIRE(s_divergence(x, y) > 0.0);
}

TEST_CASE("qjsd") {
    SECTION("X = Y gives 0") {
        const HermitianMatrix x = draw(31, 3);
        REQUIRE(qjsd(x, x) == Catch::Approx(0.0).margin(1e-12));
    }
    SECTION("binary entropy closed form") {
        const double expected = binary_entropy(0.7) - 0.5 * binary_entropy(0.9) -
                                0.5 * binary_entropy(0.5);
        REQUIRE(qjsd(HermitianMatrix::diagonal({0.9, 0.1}),
                     HermitianMatrix::diagonal({0.5, 0.5})) ==
                Catch::Approx(expected).epsilon(1e-12));
        REQUIRE(expected == Catch::Approx(0.10174922507919676));
    }
    SECTION("commuting pair equals classical JS of the spectra") {
        const std::vector<double> p{0.2, 0.3, 0.5}, q{0.6, 0.1, 0.3};
        REQUIRE(qjsd(HermitianMatrix::diagonal(p), HermitianMatrix::diagonal(q)) ==
                Catch::Approx(classical_js(p, q)).epsilon(1e-12));
    }
}

TEST_CASE("qjsd_alpha") {
    const HermitianMatrix x = draw(41, 3), y = draw(42, 3);

    SECTION("alpha = 1 is qjsd exactly") {
        REQUIRE(qjsd_alpha(x, y, 1.0) == qjsd(x, y));
    }
    SECTION("alpha = 2 is a quarter of the squared Frobenius distance") {
        const double fd = frobenius_distance(x, y);
        REQUIRE(qjsd_alpha(x, y, 2.0) == Catch::Approx(0.25 * fd * fd).epsilon(1e-12));
    }
    SECTION("alpha = 0 vanishes") {
        REQUIRE(qjsd_alpha(x, y, 0.0) == Catch::Approx(0.0).margin(1e-12));
    }
    SECTION("scalar closed form at alpha = 0.5") {
        REQUIRE(qjsd_alpha(HermitianMatrix::diagonal({9.0}), HermitianMatrix::diagonal({1.0}),
                           0.5) == Catch::Approx((std::sqrt(5.0) - 2.0) / 0.5));
    }
    SECTION("out-of-range alpha rejected") {
        REQUIRE_THROWS_AS(qjsd_alpha(x, y, 2.5), input_error);
    }
}

TEST_CASE("qjrd_alpha") {
    const HermitianMatrix x = draw(51, 3, true), y = draw(52, 3, true);
    SECTION("X = Y gives 0") { REQUIRE(qjrd_alpha(x, x, 0.5) == Catch::Approx(0.0).margin(1e-12)); }
    SECTION("scalar trace arithmetic oracle on a unit-trace pair") {
        const double a = 0.5;
        const double dx = std::pow(0.9, a) + std::pow(0.1, a);
        const double dy = 2.0 * std::pow(0.5, a);
        const double dxy = std::pow(0.7, a) + std::pow(0.3, a);
        const double expected =
            (std::log(dxy) - 0.5 * std::log(dx) - 0.5 * std::log(dy)) / (1.0 - a);
        REQUIRE(qjrd_alpha(HermitianMatrix::diagonal({0.9, 0.1}),
                           HermitianMatrix::diagonal({0.5, 0.5}), a) ==
                Catch::Approx(expected).epsilon(1e-12));
        REQUIRE(expected == Catch::Approx(0.06893310019541549));
    }
    SECTION("commuting unit-trace pair equals the classical Jensen-Renyi value") {
        const std::vector<double> p{0.2, 0.3, 0.5}, q{0.6, 0.1, 0.3};
        const double a = 0.25;
        auto h = [a](const std::vector<double>& v) {
            double s = 0.0;
            for (double t : v) s += std::pow(t, a);
            return std::log(s) / (1.0 - a);
        };
        std::vector<double> m(3);
        for (int i = 0; i < 3; ++i) m[i] = 0.5 * (p[i] + q[i]);
        const double expected = h(m) - 0.5 * h(p) - 0.5 * h(q);
        REQUIRE(qjrd_alpha(HermitianMatrix::diagonal(p), HermitianMatrix::diagonal(q), a) ==
                Catch::Approx(expected).epsilon(1e-12));
    }
    SECTION("alpha outside (0,1) rejected") {
        REQUIRE_THROWS_AS(qjrd_alpha(x, y, 1.0), input_error);
        REQUIRE_THROWS_AS(qjrd_alpha(x, y, 0.0), input_error);
    }
    SECTION("nonnegative on unit-trace pairs") {
        for (std::uint64_t s = 0; s < 20; ++s) {
            const HermitianMatrix a = draw(300 + s, 3, true), b = draw(400 + s, 3, true);
            REQUIRE(qjrd_alpha(a, b, 0.5) >= -1e-12);
        }
    }
}

TEST_CASE("tsallis_relative") {
    const HermitianMatrix x = draw(61, 3), y = draw(62, 3);
    SECTION("zero at X = Y") {
        REQUIRE(tsallis_relative(x, x, 0.5) == Catch::Approx(0.0).margin(1e-10));
    }
    SECTION("scalar arithmetic") {
        REQUIRE(tsallis_relative(HermitianMatrix::diagonal({2.0}),
                                 HermitianMatrix::diagonal({1.0}), 0.5) ==
                Catch::Approx((1.5 - std::sqrt(2.0)) / 0.5));
    }
    SECTION("commuting diagonal pair is a coordinate-wise sum") {
        const std::vector<double> p{2.0, 0.7}, q{1.3, 0.4};
        const double a = 0.5;
        double expected = 0.0;
        for (int i = 0; i < 2; ++i)
            expected += (a * p[i] + (1 - a) * q[i] - std::pow(p[i], a) * std::pow(q[i], 1 - a)) /
                        (1 - a);
        REQUIRE(tsallis_relative(HermitianMatrix::diagonal(p), HermitianMatrix::diagonal(q), a) ==
                Catch::Approx(expected).epsilon(1e-12));
    }
    SECTION("alpha = 1 rejected") {
        REQUIRE_THROWS_AS(tsallis_relative(x, y, 1.0), input_error);
    }
}

TEST_CASE("js_tsallis_relative") {
    const HermitianMatrix x = draw(71, 3), y = draw(72, 3);

    SECTION("zero at X = Y") {
        REQUIRE(js_tsallis_relative(x, x, 0.5) == Catch::Approx(0.0).margin(1e-10));
    }
    SECTION("1x1 oracle via the power mean") {
        // M = ((sqrt(4)+sqrt(16))/2)^2 = 9
        const double a = 0.5;
        auto s = [a](double p, double q) {
            return (a * p + (1 - a) * q - std::pow(p, a) * std::pow(q, 1 - a)) / (1 - a);
        };
        REQUIRE(js_tsallis_relative(HermitianMatrix::diagonal({4.0}),
                                    HermitianMatrix::diagonal({16.0}), a) ==
                Catch::Approx(s(4.0, 9.0) + s(16.0, 9.0)).epsilon(1e-12));
    }
    SECTION("direct and reduced paths agree") {
        for (double a : {0.5, 0.75, 1.5, 2.0}) {
            const double direct = js_tsallis_relative(x, y, a);
            const double reduced = js_tsallis_relative_reduced(x, y, a);
            REQUIRE(direct == Catch::Approx(reduced).epsilon(1e-10));
            REQUIRE(direct >= -1e-10);
        }
    }
    SECTION("power-mean centroid optimality") {
        Rng rng(515);
        for (double a : {0.5, 0.75, 1.5}) {
            const HermitianMatrix m = power_mean(x, y, a);
            const double at_mean = tsallis_relative(x, m, a) + tsallis_relative(y, m, a);
            for (int k = 0; k < 25; ++k) {
                const HermitianMatrix h = random_hermitian_direction(3, rng);
                for (double eps : {1e-2, 1e-3}) {
                    const HermitianMatrix z = m + eps * h;
                    const double at_z = tsallis_relative(x, z, a) + tsallis_relative(y, z, a);
                    REQUIRE(at_mean <= at_z + 1e-10);
                }
            }
        }
    }
    SECTION("alpha = 1 rejected") {
        REQUIRE_THROWS_AS(js_tsallis_relative(x, y, 1.0), input_error);
    }
}

TEST_CASE("zoo-wide invariants") {
    const std::vector<DivergenceSpec> zoo = {
        DivergenceSpec::sdiv(),          DivergenceSpec::qjsd(),
        DivergenceSpec::qjsd_alpha(0.5), DivergenceSpec::qjsd_alpha(1.5),
        DivergenceSpec::qjrd_alpha(0.5), DivergenceSpec::delta_alpha(0.75),
        DivergenceSpec::bregman_frobenius(),
        DivergenceSpec::jensen(FunctionKind::xlogx())};

    SECTION("symmetry and nonnegativity on random pairs") {
        for (const auto& spec : zoo) {
            for (std::uint64_t s = 0; s < 10; ++s) {
                const bool ut = spec.requires_unit_trace();
                const HermitianMatrix x = draw(1000 + s, 3, ut), y = draw(2000 + s, 3, ut);
                const double dxy = spec.evaluate(x, y);
                const double dyx = spec.evaluate(y, x);
                REQUIRE(dxy >= -1e-10 * (1.0 + std::abs(dxy)));
                REQUIRE(dxy == Catch::Approx(dyx).epsilon(1e-12).margin(1e-14));
            }
        }
    }
    SECTION("unitary invariance under joint conjugation") {
        const ComplexMatrix u = random_unitary(3, 31337);
        for (const auto& spec : zoo) {
            const bool ut = spec.requires_unit_trace();
            const HermitianMatrix x = draw(91, 3, ut), y = draw(92, 3, ut);
            const double before = spec.evaluate(x, y);
            const double after = spec.evaluate(conjugate(x, u), conjugate(y, u));
            REQUIRE(after == Catch::Approx(before).epsilon(1e-10).margin(1e-12));
        }
    }
    SECTION("1x1 values match scalar closed forms") {
        const double p = 1.7, q = 0.6;
        const HermitianMatrix x = HermitianMatrix::diagonal({p});
        const HermitianMatrix y = HermitianMatrix::diagonal({q});
        const double m = 0.5 * (p + q);
        REQUIRE(s_divergence(x, y) ==
                Catch::Approx(std::log(m) - 0.5 * std::log(p * q)).margin(1e-12));
        REQUIRE(qjsd(x, y) ==
                Catch::Approx(-m * std::log(m) + 0.5 * p * std::log(p) +
                              0.5 * q * std::log(q)).margin(1e-12));
        const double a = 0.5;
        REQUIRE(qjsd_alpha(x, y, a) ==
                Catch::Approx((std::pow(m, a) - 0.5 * std::pow(p, a) - 0.5 * std::pow(q, a)) /
                              (1 - a)).margin(1e-12));
        REQUIRE(bregman_vn(x, y) ==
                Catch::Approx(p * std::log(p / q) - p + q).margin(1e-12));
        REQUIRE(bregman_logdet(x, y) ==
                Catch::Approx(std::log(q / p) + p / q - 1.0).margin(1e-12));
    }
}
