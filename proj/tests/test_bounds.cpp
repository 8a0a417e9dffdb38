#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "fatcast/bounds.hpp"

using namespace fatcast;
using Catch::Approx;

TEST_CASE("cubic case roots hit the published constants") {
    const auto I = solve_case_I();
    CHECK(I.root == Approx(1.2400118097176258).margin(1e-9));
    CHECK(I.matches_reference);
    CHECK(std::abs(I.trace.residual) < 1e-10);
    CHECK(I.relation == "2R(R^2-1) = 4/3");

    const auto IIa = solve_case_IIa();
    CHECK(IIa.root == Approx(1.1371580426032577).margin(1e-9));
    CHECK(IIa.matches_reference);

    const auto IIb_pos = solve_case_IIb_pos();
    CHECK(IIb_pos.root == Approx(IIa.root).margin(1e-12));

    CHECK(IIa.root < I.root);
}

TEST_CASE("chain bound is the algebraic root of its relation") {
    const auto c = chain_bound();
    CHECK(c.root == Approx(std::sqrt(1.25)).margin(1e-9));
    CHECK(c.matches_reference);
    CHECK(std::abs(2.0 * std::sqrt(c.root * c.root - 1.0) - 1.0) < 1e-10);
}

TEST_CASE("below-center case distinguishes the two right-hand sides") {
    const auto integral = solve_case_IIb_neg(RhsVariant::Integral);
    CHECK(integral.root == Approx(1.0721899120809026).margin(1e-8));
    CHECK(integral.z0 == Approx(-0.38677).margin(1e-3));
    CHECK(integral.matches_reference);
    CHECK(std::abs(bounds_detail::neg_residual(integral.root, integral.z0, RhsVariant::Integral)) <
          1e-9);

    const auto printed = solve_case_IIb_neg(RhsVariant::Printed);
    CHECK(printed.root == Approx(1.078908161283434).margin(1e-8));
    CHECK(printed.z0 == Approx(-0.405022).margin(1e-3));
    CHECK_FALSE(printed.matches_reference);

    CHECK(integral.root < printed.root);
}

TEST_CASE("theorem constant is the loosest case and uses the matching variant") {
    const auto t = theorem_constant();
    const auto integral = solve_case_IIb_neg(RhsVariant::Integral);

    CHECK(t.root == integral.root);
    CHECK(t.variant == RhsVariant::Integral);
    CHECK(t.matches_reference);
    CHECK(t.z0 == integral.z0);

    CHECK(t.root <= solve_case_I().root);
    CHECK(t.root <= solve_case_IIa().root);
    CHECK(t.root <= chain_bound().root);
    CHECK(t.root <= solve_case_IIb_neg(RhsVariant::Printed).root);
}

TEST_CASE("bound table lists every case once") {
    const auto rows = all_bounds();
    REQUIRE(rows.size() == 7);
    CHECK(rows[0].id == CaseId::I);
    CHECK(rows[1].id == CaseId::IIa);
    CHECK(rows[2].id == CaseId::IIbPos);
    CHECK(rows[3].id == CaseId::IIbNeg);
    CHECK(rows[3].variant == RhsVariant::Integral);
    CHECK(rows[4].id == CaseId::IIbNeg);
    CHECK(rows[4].variant == RhsVariant::Printed);
    CHECK(rows[5].id == CaseId::Chain);
    CHECK(rows[6].id == CaseId::Theorem);

    int neg_matches = 0;
    for (const auto& r : rows) {
        if (r.id == CaseId::IIbNeg && r.matches_reference) ++neg_matches;
    }
    CHECK(neg_matches == 1);

    CHECK(std::string(case_name(CaseId::IIbNeg)) == "IIb-neg");
    CHECK(std::string(variant_name(RhsVariant::Printed)) == "printed-rhs");
    CHECK(std::string(variant_name(RhsVariant::Integral)) == "integral-rhs");
}

TEST_CASE("independent root finders agree") {
    auto f = [](double R) { return bounds_detail::cubic_residual(R, 4.0 / 3.0); };
    const auto bi = bounds_detail::bisect(f, 1.0, 2.0);
    const auto se = bounds_detail::secant(f, 1.0, 2.0);
    CHECK(std::abs(bi.root - se.root) < 1e-9);
    CHECK(std::abs(se.residual) < 1e-12);

    CHECK_THROWS_AS(bounds_detail::bisect(f, 1.5, 2.0), PreconditionFailed);
    CHECK_THROWS_AS(bounds_detail::secant(f, 1.5, 2.0), PreconditionFailed);
}

TEST_CASE("per-height required ratio behaves at the endpoints") {
    // At z0 = 0 the relation degenerates to the cubic of the upper case.
    const auto IIa = solve_case_IIa();
    CHECK(bounds_detail::required_ratio_at(0.0, RhsVariant::Integral) ==
          Approx(IIa.root).margin(1e-9));
    CHECK(bounds_detail::required_ratio_at(0.0, RhsVariant::Printed) ==
          Approx(IIa.root).margin(1e-9));

    // At z0 = -1 the disk constraint alone decides: R = sqrt(2).
    CHECK(bounds_detail::required_ratio_at(-1.0, RhsVariant::Integral) ==
          Approx(std::sqrt(2.0)).margin(1e-12));
    CHECK(bounds_detail::required_ratio_at(-1.0, RhsVariant::Printed) ==
          Approx(std::sqrt(2.0)).margin(1e-9));
}

TEST_CASE("the minimized height is a genuine interior minimum") {
    for (RhsVariant variant : {RhsVariant::Integral, RhsVariant::Printed}) {
        const auto b = solve_case_IIb_neg(variant);
        auto f = [&](double z) { return bounds_detail::required_ratio_at(z, variant); };
        CHECK(b.z0 > -1.0);
        CHECK(b.z0 < 0.0);
        CHECK(f(b.z0) == Approx(b.root).margin(1e-12));
        CHECK(f(b.z0 - 0.05) > b.root);
        CHECK(f(b.z0 + 0.05) > b.root);
        CHECK(f(-1.0) > b.root);
        CHECK(f(0.0) > b.root);
    }
}

TEST_CASE("a dense independent scan reproduces the minimum") {
    for (RhsVariant variant : {RhsVariant::Integral, RhsVariant::Printed}) {
        const auto b = solve_case_IIb_neg(variant);
        double best = std::numeric_limits<double>::infinity();
        const int N = 200003;  // step incommensurate with the solver's own grid
        for (int i = 0; i <= N; ++i) {
            const double z0 = -1.0 + static_cast<double>(i) / N;
            best = std::min(best, bounds_detail::required_ratio_at(z0, variant));
        }
        CHECK(std::abs(best - b.root) < 1e-6);
        CHECK(b.root <= best + 1e-12);  // the solver's minimum is never beaten
    }
}
