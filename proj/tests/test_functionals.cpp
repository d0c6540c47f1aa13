#include <catch2/catch.hpp>

#include <random>

#include "coefflab/error.hpp"
#include "coefflab/functionals.hpp"
#include "oracles.hpp"

using namespace coefflab;
using namespace std::complex_literals;

namespace {

const CoefficientWindow kF1{1.0, 2i, -3.0, -4i, 5.0};
const CoefficientWindow kIdentity{1.0, 0.0, 0.0, 0.0, 0.0};
const CoefficientWindow kKoebe{1.0, 2.0, 3.0, 4.0, 5.0};

CoefficientWindow random_window(std::mt19937_64& g, std::size_t m, double radius)
{
    std::vector<cplx> tail(m - 1);
    for (auto& a : tail) a = oracle::random_disc(g, radius);
    return CoefficientWindow::from_tail(tail);
}

cplx oracle_det(const CoefficientWindow& w, const DeterminantId& id)
{
    const auto m = id.kind == DeterminantKind::Toeplitz ? oracle::toeplitz_matrix(w.values(), id.q, id.n)
                                                        : oracle::hankel_matrix(w.values(), id.q, id.n);
    return oracle::leibniz_det(m);
}

} // namespace

TEST_CASE("window: a1 must be exactly one", "[functionals]")
{
    CHECK_THROWS_AS(CoefficientWindow({2.0, 1.0}), InvalidWindow);
    CHECK_THROWS_AS(CoefficientWindow(std::vector<cplx>{}), InvalidWindow);
    CHECK_THROWS_AS(CoefficientWindow({1.0 + 1e-15, 1.0}), InvalidWindow);
    CHECK(kF1.a(1) == cplx(1.0));
    CHECK(kF1.a(5) == cplx(5.0));
    CHECK_THROWS_AS(kF1.a(6), WindowTooShort);
    const std::array<cplx, 2> tail{2i, -3.0};
    CHECK(CoefficientWindow::from_tail(tail).values() == std::vector<cplx>{1.0, 2i, -3.0});
}

TEST_CASE("determinant ids parse and print", "[functionals]")
{
    CHECK(parse_determinant_id("T3,2") == DeterminantId{DeterminantKind::Toeplitz, 3, 2});
    CHECK(parse_determinant_id("H2,3") == DeterminantId{DeterminantKind::Hankel, 2, 3});
    CHECK(to_string(parse_determinant_id("T12,4")) == "T12,4");
    CHECK(parse_determinant_id("h2,2") == DeterminantId{DeterminantKind::Hankel, 2, 2});
    for (const char* bad : {"", "T", "T3", "X3,2", "T0,1", "T3,", "T,3", "T3,2,1", "T-1,2", "T 3,2"}) {
        INFO(bad);
        CHECK_THROWS_AS(parse_determinant_id(bad), std::invalid_argument);
    }
    CHECK(DeterminantId{DeterminantKind::Toeplitz, 3, 3}.required_length() == 5);
    CHECK(DeterminantId{DeterminantKind::Hankel, 2, 3}.required_length() == 5);
}

TEST_CASE("toeplitz_det examples", "[functionals]")
{
    CHECK(std::abs(toeplitz_det(kF1, 3, 1) - cplx(24.0)) < 1e-12);
    CHECK(toeplitz_det(kF1, 1, 1) == cplx(1.0));
    CHECK(toeplitz_det(CoefficientWindow{1.0}, 1, 1) == cplx(1.0));
    CHECK(std::abs(toeplitz_det(kF1, 3, 3) - cplx(-208.0)) < 1e-12);
    CHECK_THROWS_AS(toeplitz_det(kF1, 3, 4), WindowTooShort);
}

TEST_CASE("hankel_det examples", "[functionals]")
{
    CHECK(std::abs(hankel_det(kF1, 2, 2) - cplx(-1.0)) < 1e-12);
    CHECK(hankel_det(kIdentity, 2, 2) == cplx(0.0));
    CHECK(std::abs(hankel_det(kKoebe, 2, 2) - cplx(-1.0)) < 1e-12);
    CHECK_THROWS_AS(hankel_det(kF1, 2, 5), WindowTooShort);
}

TEST_CASE("closed_form examples", "[functionals]")
{
    using K = DeterminantKind;
    CHECK(std::abs(closed_form(kF1, {K::Toeplitz, 3, 2}) - (-84i)) < 1e-12);
    CHECK(closed_form(kIdentity, {K::Toeplitz, 3, 1}) == cplx(1.0));
    CHECK(std::abs(closed_form(kF1, {K::Toeplitz, 2, 3}) - cplx(25.0)) < 1e-12);
    CHECK_THROWS_AS(closed_form(kF1, {K::Toeplitz, 4, 1}), UnsupportedId);
    CHECK_THROWS_AS(closed_form(kF1, {K::Hankel, 3, 1}), UnsupportedId);
    CHECK_THROWS_AS(closed_form(CoefficientWindow{1.0, 2.0, 3.0}, {K::Toeplitz, 2, 3}), WindowTooShort);
    for (const auto& id : kClosedFormIds) CHECK(has_closed_form(id));
    CHECK_FALSE(has_closed_form({K::Toeplitz, 1, 1}));
}

TEST_CASE("closed forms agree with the determinant definition", "[functionals][property]")
{
    std::mt19937_64 g(201);
    double worst_impl = 0.0, worst_oracle = 0.0;
    for (int trial = 0; trial < 1000; ++trial) {
        const CoefficientWindow w = random_window(g, 5, 5.0);
        for (const auto& id : kClosedFormIds) {
            const cplx cf = closed_form(w, id);
            worst_impl = std::max(worst_impl, std::abs(cf - determinant(w, id)));
            worst_oracle = std::max(worst_oracle, std::abs(cf - oracle_det(w, id)));
        }
    }
    CHECK(worst_impl <= 1e-9);
    CHECK(worst_oracle <= 1e-9);
}

TEST_CASE("general determinants agree with the Leibniz formula", "[functionals][property]")
{
    std::mt19937_64 g(202);
    for (int trial = 0; trial < 200; ++trial) {
        const CoefficientWindow w = random_window(g, 12, 2.0);
        for (int q = 1; q <= 6; ++q) {
            for (int n = 1; n <= 3; ++n) {
                const DeterminantId t{DeterminantKind::Toeplitz, q, n};
                const cplx want = oracle_det(w, t);
                REQUIRE(std::abs(toeplitz_det(w, q, n) - want) <= 1e-9 * std::max(1.0, std::abs(want)));
                const DeterminantId h{DeterminantKind::Hankel, q, n};
                if (h.required_length() <= w.size()) {
                    const cplx want_h = oracle_det(w, h);
                    REQUIRE(std::abs(hankel_det(w, q, n) - want_h) <= 1e-9 * std::max(1.0, std::abs(want_h)));
                }
            }
        }
    }
}

TEST_CASE("Toeplitz matrices are symmetric so transposition leaves the determinant fixed", "[functionals][property]")
{
    std::mt19937_64 g(203);
    for (int trial = 0; trial < 100; ++trial) {
        const CoefficientWindow w = random_window(g, 8, 3.0);
        for (int q = 1; q <= 4; ++q) {
            const auto m = oracle::toeplitz_matrix(w.values(), q, 2);
            std::vector<cplx> row_major, col_major;
            for (int i = 0; i < q; ++i)
                for (int j = 0; j < q; ++j) {
                    REQUIRE(m[i][j] == m[j][i]);
                    row_major.push_back(m[i][j]);
                    col_major.push_back(m[j][i]);
                }
            REQUIRE(dense_determinant(row_major, q) == dense_determinant(col_major, q));
            REQUIRE(std::abs(dense_determinant(row_major, q) - toeplitz_det(w, q, 2)) <= 1e-12 * (1 + std::abs(toeplitz_det(w, q, 2))));
        }
    }
}

TEST_CASE("dense_determinant handles singular and pivoting cases", "[functionals]")
{
    const std::vector<cplx> singular{1.0, 2.0, 3.0, 4.0, 2.0, 4.0, 6.0, 8.0, 0.0, 1.0, 0.0, 1.0, 5.0, 5.0, 5.0, 5.0};
    CHECK(std::abs(dense_determinant(singular, 4)) < 1e-12);
    // Zero leading entry forces a row swap.
    const std::vector<cplx> swap{0.0, 1.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0, 1.0};
    CHECK(std::abs(dense_determinant(swap, 4) - cplx(-1.0)) < 1e-15);
    CHECK(dense_determinant(std::vector<cplx>{}, 0) == cplx(1.0));
    CHECK_THROWS_AS(dense_determinant(std::vector<cplx>{1.0, 2.0}, 2), std::invalid_argument);
}
