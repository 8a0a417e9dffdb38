#pragma once

#include <cmath>
#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "fatcast/errors.hpp"

namespace fatcast {

enum class CaseId { I, IIa, IIbPos, IIbNeg, Chain, Theorem };

/// The right-hand side of the small-part volume relation comes from
/// integrating the inner-sphere cross-section area from -1 to z0. The source
/// text prints 2/3 + z0 - z0^3; the antiderivative gives 2/3 + z0 - z0^3/3.
/// Both are implemented; reports flag which one reproduces the published
/// minimum.
enum class RhsVariant { Printed, Integral };

struct SolverTrace {
    double bracket_lo = 0.0;
    double bracket_hi = 0.0;
    int iterations = 0;
    double residual = 0.0;
    std::string method;
};

struct CaseBound {
    CaseId id = CaseId::I;
    std::string relation;
    double root = 0.0;
    double z0 = std::numeric_limits<double>::quiet_NaN();  // IIb-neg minimizer
    RhsVariant variant = RhsVariant::Integral;             // meaningful for IIb-neg only
    SolverTrace trace;
    double reference = 0.0;          // published value
    bool matches_reference = false;  // within 1e-6
};

namespace bounds_detail {

constexpr double kRefI = 1.240011810;
constexpr double kRefII = 1.137158043;
constexpr double kRefIIbNeg = 1.07218989;
constexpr double kRefChain = 1.118033989;
constexpr double kMatchTol = 1e-6;

struct RootResult {
    double root = 0.0;
    int iterations = 0;
    double residual = 0.0;
};

template <typename F>
RootResult bisect(F&& f, double lo, double hi, double width = 1e-13) {
    double flo = f(lo);
    const double fhi = f(hi);
    if (!(flo < 0.0 && fhi > 0.0)) throw PreconditionFailed("bisection bracket does not straddle the root");
    RootResult r;
    while (hi - lo > width) {
        const double mid = 0.5 * (lo + hi);
        const double fm = f(mid);
        if (fm < 0.0) { lo = mid; flo = fm; }
        else { hi = mid; }
        ++r.iterations;
        if (r.iterations > 200) break;
    }
    r.root = 0.5 * (lo + hi);
    r.residual = f(r.root);
    return r;
}

/// Safeguarded secant iteration inside a bracket; independent of bisect for
/// cross-checking.
template <typename F>
RootResult secant(F&& f, double lo, double hi, double xtol = 1e-13) {
    double x0 = lo, x1 = hi;
    double f0 = f(x0), f1 = f(x1);
    if (!(f0 < 0.0 && f1 > 0.0)) throw PreconditionFailed("secant bracket does not straddle the root");
    double blo = lo, bhi = hi;
    RootResult r;
    for (int it = 0; it < 200; ++it) {
        ++r.iterations;
        double x2;
        if (std::abs(f1 - f0) > 0.0) {
            x2 = x1 - f1 * (x1 - x0) / (f1 - f0);
        } else {
            x2 = 0.5 * (blo + bhi);
        }
        if (!(x2 > blo && x2 < bhi)) x2 = 0.5 * (blo + bhi);
        const double f2 = f(x2);
        if (f2 < 0.0) blo = x2;
        else bhi = x2;
        x0 = x1; f0 = f1;
        x1 = x2; f1 = f2;
        if (std::abs(x1 - x0) < xtol || bhi - blo < xtol) break;
    }
    r.root = x1;
    r.residual = f1;
    return r;
}

inline double cubic_residual(double R, double rhs) { return 2.0 * R * (R * R - 1.0) - rhs; }

inline double neg_rhs(double z0, RhsVariant variant) {
    return variant == RhsVariant::Printed ? 2.0 / 3.0 + z0 - z0 * z0 * z0
                                          : 2.0 / 3.0 + z0 - z0 * z0 * z0 / 3.0;
}

inline double neg_residual(double R, double z0, RhsVariant variant) {
    return 2.0 * (R * R - 1.0) * std::sqrt(std::max(0.0, R * R - z0 * z0)) - neg_rhs(z0, variant);
}

/// Loosest admissible R at a fixed cut height: the volume relation's root,
/// raised when the inner-disk constraint sqrt(R^2 - z0^2) >= 1 binds.
inline double required_ratio_at(double z0, RhsVariant variant) {
    const double circ = std::sqrt(1.0 + z0 * z0);
    const double rhs = neg_rhs(z0, variant);
    if (rhs <= 0.0) return circ;
    const double root =
        bisect([&](double R) { return neg_residual(R, z0, variant); }, 1.0, 2.0).root;
    return std::max(root, circ);
}

template <typename F>
double golden_min(F&& f, double a, double b, int iters = 80) {
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = f(c), fd = f(d);
    for (int i = 0; i < iters; ++i) {
        if (fc < fd) {
            b = d; d = c; fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a = c; c = d; fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
        }
    }
    return fc < fd ? c : d;
}

inline CaseBound cubic_case(CaseId id, const std::string& relation, double rhs, double reference) {
    CaseBound b;
    b.id = id;
    b.relation = relation;
    const RootResult r = bisect([&](double R) { return cubic_residual(R, rhs); }, 1.0, 2.0);
    b.root = r.root;
    b.trace = {1.0, 2.0, r.iterations, r.residual, "bisection"};
    b.reference = reference;
    b.matches_reference = std::abs(b.root - reference) < kMatchTol;
    return b;
}

}  // namespace bounds_detail

/// Case I: a castable fat polyhedron satisfies 2R(R^2-1) >= 4/3.
inline CaseBound solve_case_I() {
    return bounds_detail::cubic_case(CaseId::I, "2R(R^2-1) = 4/3", 4.0 / 3.0,
                                     bounds_detail::kRefI);
}

/// Case IIa: the larger half forces 2R(R^2-1) >= 2/3.
inline CaseBound solve_case_IIa() {
    return bounds_detail::cubic_case(CaseId::IIa, "2R(R^2-1) = 2/3", 2.0 / 3.0,
                                     bounds_detail::kRefII);
}

/// Case IIb with the cut above the center: same relation as IIa.
inline CaseBound solve_case_IIb_pos() {
    return bounds_detail::cubic_case(CaseId::IIbPos, "2R(R^2-1) = 2/3", 2.0 / 3.0,
                                     bounds_detail::kRefII);
}

/// Case IIb with the cut below the center: minimize over z0 in [-1, 0] the
/// root of 2(R^2-1)sqrt(R^2-z0^2) = rhs(z0) subject to sqrt(R^2-z0^2) >= 1.
/// Grid scan at step 1e-4 plus golden-section refinement.
inline CaseBound solve_case_IIb_neg(RhsVariant variant = RhsVariant::Integral) {
    using namespace bounds_detail;
    CaseBound b;
    b.id = CaseId::IIbNeg;
    b.variant = variant;
    b.relation = variant == RhsVariant::Printed
                     ? "min over z0 of root of 2(R^2-1)sqrt(R^2-z0^2) = 2/3 + z0 - z0^3"
                     : "min over z0 of root of 2(R^2-1)sqrt(R^2-z0^2) = 2/3 + z0 - z0^3/3";

    auto f = [&](double z0) { return required_ratio_at(z0, variant); };
    const double step = 1e-4;
    double best_z = -1.0;
    double best_v = f(-1.0);
    int evals = 1;
    for (double z0 = -1.0 + step; z0 <= 0.0 + 1e-15; z0 += step) {
        const double v = f(z0);
        ++evals;
        if (v < best_v) { best_v = v; best_z = z0; }
    }
    const double lo = std::max(-1.0, best_z - 2.0 * step);
    const double hi = std::min(0.0, best_z + 2.0 * step);
    const double z_star = golden_min(f, lo, hi);
    const double v_star = f(z_star);
    if (v_star < best_v) { best_v = v_star; best_z = z_star; }

    b.root = best_v;
    b.z0 = best_z;
    b.trace = {1.0, 2.0, evals, neg_residual(best_v, best_z, variant), "grid+golden-section"};
    b.reference = kRefIIbNeg;
    b.matches_reference = std::abs(b.root - b.reference) < kMatchTol;
    return b;
}

/// Chain argument: the longest unmarked edge exceeds 1, so 2 sqrt(R^2-1) > 1.
inline CaseBound chain_bound() {
    using namespace bounds_detail;
    CaseBound b;
    b.id = CaseId::Chain;
    b.relation = "2 sqrt(R^2-1) = 1";
    const RootResult r = bisect([](double R) { return 2.0 * std::sqrt(R * R - 1.0) - 1.0; }, 1.0, 2.0);
    b.root = r.root;
    b.trace = {1.0, 2.0, r.iterations, r.residual, "bisection"};
    b.reference = kRefChain;
    b.matches_reference = std::abs(b.root - b.reference) < kMatchTol;
    return b;
}

/// The loosest of all case bounds: the published non-2-castability constant.
/// Uses whichever IIb-neg right-hand side reproduces the published minimum.
inline CaseBound theorem_constant() {
    using namespace bounds_detail;
    const CaseBound integral = solve_case_IIb_neg(RhsVariant::Integral);
    const CaseBound printed = solve_case_IIb_neg(RhsVariant::Printed);
    const CaseBound& neg = integral.matches_reference ? integral : printed;

    CaseBound b;
    b.id = CaseId::Theorem;
    b.relation = "min over cases {I, IIa, IIb-pos, IIb-neg, chain}";
    b.variant = neg.variant;
    b.root = std::min({solve_case_I().root, solve_case_IIa().root, solve_case_IIb_pos().root,
                       neg.root, chain_bound().root});
    b.z0 = neg.z0;
    b.trace = neg.trace;
    b.reference = kRefIIbNeg;
    b.matches_reference = std::abs(b.root - b.reference) < kMatchTol;
    return b;
}

/// Every bound in presentation order: the five case rows, the alternate
/// IIb-neg right-hand side, and the theorem constant.
inline std::vector<CaseBound> all_bounds() {
    return {solve_case_I(),
            solve_case_IIa(),
            solve_case_IIb_pos(),
            solve_case_IIb_neg(RhsVariant::Integral),
            solve_case_IIb_neg(RhsVariant::Printed),
            chain_bound(),
            theorem_constant()};
}

inline const char* case_name(CaseId id) {
    switch (id) {
        case CaseId::I: return "I";
        case CaseId::IIa: return "IIa";
        case CaseId::IIbPos: return "IIb-pos";
        case CaseId::IIbNeg: return "IIb-neg";
        case CaseId::Chain: return "chain";
        case CaseId::Theorem: return "theorem";
    }
    return "";
}

inline const char* variant_name(RhsVariant v) {
    return v == RhsVariant::Printed ? "printed-rhs" : "integral-rhs";
}

}  // namespace fatcast
