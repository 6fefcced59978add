#pragma once

// One checker per inequality family: each verifies its hypotheses, evaluates
// both sides of the refined chain, and returns an InequalityReport with a
// Loewner verdict per link. A hypothesis problem raises HypothesisError (the
// instance is garbage); a failing link only flips the report (the claim is
// wrong), so callers can tell the two apart.

#include <cmath>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "opineq/errors.hpp"
#include "opineq/maps.hpp"
#include "opineq/report.hpp"
#include "opineq/scalar_function.hpp"
#include "opineq/spectral.hpp"

namespace opineq {

// (1/2) I - |A - ((m+M)/2) I| / (M - m). Ranges in [0, 1/2 I] whenever the
// spectrum of A sits inside [m, M]; drops below zero outside.
inline HermitianMatrix tilde(const HermitianMatrix& a, double m, double M) {
    if (!(m < M)) throw DomainError("tilde needs m < M");
    double c = (m + M) / 2;
    return 0.5 * HermitianMatrix::identity(a.dim()) -
           (1.0 / (M - m)) * abs_deviation(a, c);
}

namespace detail {

inline Ordering expected_direction(const ScalarFunction& f) {
    return f.direction() == Direction::Convex ? Ordering::LessEq : Ordering::GreaterEq;
}

inline void require_leq(const HermitianMatrix& x, const HermitianMatrix& y, double tol,
                        const std::string& what) {
    LoewnerVerdict v = loewner_compare(x, y, tol);
    if (v.ordering != Ordering::LessEq && v.ordering != Ordering::Equal) {
        std::ostringstream os;
        os << "hypothesis violated: " << what << " (lambda_min of difference = " << v.min_eig_diff
           << ", scale " << v.scale << ")";
        throw HypothesisError(os.str());
    }
}

inline void require_equal(const HermitianMatrix& x, const HermitianMatrix& y, double tol,
                          const std::string& what) {
    LoewnerVerdict v = loewner_compare(x, y, tol);
    if (v.ordering != Ordering::Equal) {
        std::ostringstream os;
        os << "hypothesis violated: " << what << " (eigenvalue range of difference ["
           << v.min_eig_diff << ", " << v.max_eig_diff << "], scale " << v.scale << ")";
        throw HypothesisError(os.str());
    }
}

inline void require_sandwich(const std::vector<HermitianMatrix>& A,
                             const std::vector<HermitianMatrix>& B,
                             const std::vector<HermitianMatrix>& C,
                             const std::vector<HermitianMatrix>& D, double m, double M,
                             double tol) {
    if (A.empty() || A.size() != B.size() || B.size() != C.size() || C.size() != D.size())
        throw HypothesisError("operator lists A,B,C,D must share a positive length");
    int dim = A.front().dim();
    HermitianMatrix mi = m * HermitianMatrix::identity(dim);
    HermitianMatrix Mi = M * HermitianMatrix::identity(dim);
    for (std::size_t i = 0; i < A.size(); ++i) {
        std::string ix = "[" + std::to_string(i) + "]";
        require_leq(A[i], mi, tol, "A" + ix + " <= m I");
        require_leq(mi, B[i], tol, "m I <= B" + ix);
        require_leq(B[i], Mi, tol, "B" + ix + " <= M I");
        require_leq(mi, C[i], tol, "m I <= C" + ix);
        require_leq(C[i], Mi, tol, "C" + ix + " <= M I");
        require_leq(Mi, D[i], tol, "M I <= D" + ix);
    }
}

inline std::vector<HermitianMatrix> apply_each(const ScalarFunction& f,
                                               const std::vector<HermitianMatrix>& xs) {
    std::vector<HermitianMatrix> out;
    out.reserve(xs.size());
    for (const auto& x : xs) out.push_back(apply_function(x, f));
    return out;
}

inline std::vector<HermitianMatrix> abs_dev_each(const std::vector<HermitianMatrix>& xs,
                                                 double c) {
    std::vector<HermitianMatrix> out;
    out.reserve(xs.size());
    for (const auto& x : xs) out.push_back(abs_deviation(x, c));
    return out;
}

inline HermitianMatrix sum(const std::vector<HermitianMatrix>& xs) {
    HermitianMatrix acc = HermitianMatrix::zero(xs.front().dim());
    for (const auto& x : xs) acc = acc + x;
    return acc;
}

// main's lists may have different lengths per role; check each against the
// interval separately.
inline void require_sandwich_per_role(const std::vector<HermitianMatrix>& A,
                                      const std::vector<HermitianMatrix>& B,
                                      const std::vector<HermitianMatrix>& C,
                                      const std::vector<HermitianMatrix>& D, double m, double M,
                                      double tol) {
    if (A.empty() || B.empty() || C.empty() || D.empty())
        throw HypothesisError("all four operator lists must be nonempty");
    int dim = A.front().dim();
    HermitianMatrix mi = m * HermitianMatrix::identity(dim);
    HermitianMatrix Mi = M * HermitianMatrix::identity(dim);
    for (std::size_t i = 0; i < A.size(); ++i)
        require_leq(A[i], mi, tol, "A[" + std::to_string(i) + "] <= m I");
    for (std::size_t i = 0; i < B.size(); ++i) {
        require_leq(mi, B[i], tol, "m I <= B[" + std::to_string(i) + "]");
        require_leq(B[i], Mi, tol, "B[" + std::to_string(i) + "] <= M I");
    }
    for (std::size_t i = 0; i < C.size(); ++i) {
        require_leq(mi, C[i], tol, "m I <= C[" + std::to_string(i) + "]");
        require_leq(C[i], Mi, tol, "C[" + std::to_string(i) + "] <= M I");
    }
    for (std::size_t i = 0; i < D.size(); ++i)
        require_leq(Mi, D[i], tol, "M I <= D[" + std::to_string(i) + "]");
}

// Shared skeleton: every refined chain is  L  vs  R - defect  vs  R, with the
// expected direction flipped for concave functions (where the defect term is
// itself negative semidefinite times -1).
inline InequalityReport two_link_chain(const ScalarFunction& f, const HermitianMatrix& lhs,
                                       const HermitianMatrix& rhs,
                                       const HermitianMatrix& correction, double delta_value,
                                       double tol, const std::string& xtilde_name,
                                       const HermitianMatrix& xtilde, double xtilde_range_max) {
    InequalityReport rep;
    rep.direction = expected_direction(f);
    HermitianMatrix middle = rhs - delta_value * correction;
    rep.add_link("lhs", "middle", lhs, middle, tol);
    rep.add_link("middle", "rhs", middle, rhs, tol);
    rep.matrices.emplace("lhs", lhs);
    rep.matrices.emplace("middle", middle);
    rep.matrices.emplace("rhs", rhs);
    rep.matrices.emplace(xtilde_name, xtilde);
    rep.scalars["delta_f"] = delta_value;
    rep.scalars[xtilde_name + ".range_max"] = xtilde_range_max;
    return rep;
}

} // namespace detail

// Refined secant bound for spectrum(A) inside [m, M]:
//   f(A)  vs  ((M-A) f(m) + (A-m) f(M)) / (M-m)  -  delta_f * tilde(A),
// with both links reversed for concave f.
inline InequalityReport lemma1_bound(const ScalarFunction& f, const HermitianMatrix& a, double m,
                                     double M, double tol = default_tolerance()) {
    if (!(m < M)) throw DomainError("lemma1_bound needs m < M");
    auto [lo, hi] = spectral_bounds(a);
    double scale = std::max({1.0, std::abs(m), std::abs(M)});
    if (lo < m - tol * scale || hi > M + tol * scale)
        throw HypothesisError("spectrum [" + std::to_string(lo) + ", " + std::to_string(hi) +
                              "] escapes [" + std::to_string(m) + ", " + std::to_string(M) + "]");
    DeltaF df = delta_f(f, m, M);
    // Secant through (m, f(m)), (M, f(M)) is affine in A.
    double slope = (f(M) - f(m)) / (M - m);
    double intercept = (M * f(m) - m * f(M)) / (M - m);
    HermitianMatrix secant = (slope * a).shifted(intercept);
    HermitianMatrix at = tilde(a, m, M);
    InequalityReport rep = detail::two_link_chain(f, apply_function(a, f), secant, at, df.value,
                                                  tol, "A_tilde", at, 0.5);
    rep.scalars["m"] = m;
    rep.scalars["M"] = M;
    return rep;
}

// True when A <= mI <= (A+D)/2 <= MI <= D, each comparison at tol.
inline bool omega_member(const HermitianMatrix& a, const HermitianMatrix& d, double m, double M,
                         double tol = default_tolerance()) {
    if (!(m < M)) throw DomainError("omega_member needs m < M");
    if (a.dim() != d.dim()) throw DimensionError("omega_member: dimension mismatch");
    int n = a.dim();
    HermitianMatrix mi = m * HermitianMatrix::identity(n);
    HermitianMatrix Mi = M * HermitianMatrix::identity(n);
    HermitianMatrix mid = 0.5 * (a + d);
    auto ok = [&](const HermitianMatrix& x, const HermitianMatrix& y) {
        Ordering o = loewner_compare(x, y, tol).ordering;
        return o == Ordering::LessEq || o == Ordering::Equal;
    };
    return ok(a, mi) && ok(mi, mid) && ok(mid, Mi) && ok(Mi, d);
}

enum class ValidationMode { Enforce, Skip };

struct InstanceData {
    double m = 0.0;
    double M = 1.0;
    std::optional<ScalarFunction> function;
    std::string theorem;
    std::string variant = "X1";   // main: X1 | X2 | X3
    std::string condition;        // power-pairs: i | ii
    std::optional<double> lambda; // omega.lambda
    std::optional<double> q;      // power-pairs
    std::vector<HermitianMatrix> A, B, C, D;
    std::map<std::string, MapFamily> families;

    const ScalarFunction& f() const {
        if (!function) throw DomainError("instance carries no function");
        return *function;
    }
    const MapFamily& family(const std::string& role) const {
        auto it = families.find(role);
        if (it == families.end())
            throw HypothesisError("instance lacks the \"" + role + "\" map family");
        return it->second;
    }
};

void verify_hypotheses(const InstanceData& inst, double tol);

// An instance is a hypothesis-checked bundle; construction with Enforce (the
// default) refuses anything that does not satisfy its theorem's
// preconditions. Skip exists for sensitivity tests that must run checkers on
// deliberately broken inputs.
class Instance {
public:
    explicit Instance(InstanceData data, ValidationMode mode = ValidationMode::Enforce,
                      double tol = default_tolerance())
        : data_(std::move(data)) {
        if (mode == ValidationMode::Enforce) verify_hypotheses(data_, tol);
    }

    const InstanceData& data() const { return data_; }

private:
    InstanceData data_;
};

// ---------------------------------------------------------------------------
// Checkers
// ---------------------------------------------------------------------------

// Four independent map families, one per operator list, each normalized by
// its own constant; the level-balance condition ties the A/D averages to the
// C/B averages. Variant selects where the absolute values and the function
// sit (X1: both outside on the left, inside on the right; X2: the mirror
// image; X3: mixed).
inline InequalityReport check_theorem_main(const Instance& inst, const std::string& variant,
                                           double tol = default_tolerance()) {
    const InstanceData& d = inst.data();
    const ScalarFunction& f = d.f();
    double m = d.m, M = d.M, c = (m + M) / 2;
    const MapFamily& famA = d.family("A");
    const MapFamily& famB = d.family("B");
    const MapFamily& famC = d.family("C");
    const MapFamily& famD = d.family("D");
    DeltaF df = delta_f(f, m, M);
    int dim = famA.dim_out();
    HermitianMatrix I = HermitianMatrix::identity(dim);

    HermitianMatrix avgA = family_apply_normalized(famA, d.A);
    HermitianMatrix avgB = family_apply_normalized(famB, d.B);
    HermitianMatrix avgC = family_apply_normalized(famC, d.C);
    HermitianMatrix avgD = family_apply_normalized(famD, d.D);
    HermitianMatrix avg_fA = family_apply_normalized(famA, detail::apply_each(f, d.A));
    HermitianMatrix avg_fB = family_apply_normalized(famB, detail::apply_each(f, d.B));
    HermitianMatrix avg_fC = family_apply_normalized(famC, detail::apply_each(f, d.C));
    HermitianMatrix avg_fD = family_apply_normalized(famD, detail::apply_each(f, d.D));

    HermitianMatrix lhs = I, rhs = I, xt = I;
    if (variant == "X1") {
        xt = I - (1.0 / (M - m)) * (abs_deviation(avgB, c) + abs_deviation(avgC, c));
        lhs = apply_function(avgC, f) + apply_function(avgB, f);
        rhs = avg_fA + avg_fD;
    } else if (variant == "X2") {
        HermitianMatrix inB = family_apply_normalized(famB, detail::abs_dev_each(d.B, c));
        HermitianMatrix inC = family_apply_normalized(famC, detail::abs_dev_each(d.C, c));
        xt = I - (1.0 / (M - m)) * (inC + inB);
        lhs = avg_fC + avg_fB;
        rhs = apply_function(avgA, f) + apply_function(avgD, f);
    } else if (variant == "X3") {
        HermitianMatrix inB = family_apply_normalized(famB, detail::abs_dev_each(d.B, c));
        xt = I - (1.0 / (M - m)) * (abs_deviation(avgC, c) + inB);
        lhs = apply_function(avgC, f) + avg_fB;
        rhs = apply_function(avgA, f) + avg_fD;
    } else {
        throw DomainError("unknown variant \"" + variant + "\" (expected X1, X2 or X3)");
    }
    InequalityReport rep = detail::two_link_chain(f, lhs, rhs, xt, df.value, tol, "X_tilde", xt,
                                                  1.0);
    rep.scalars["m"] = m;
    rep.scalars["M"] = M;
    rep.scalars["alpha"] = famA.normalization();
    rep.scalars["beta"] = famB.normalization();
    rep.scalars["gamma"] = famC.normalization();
    rep.scalars["delta"] = famD.normalization();
    return rep;
}

// Single unital map, one operator per role, exact balance A + D = B + C:
//   f(Phi(B)) + f(Phi(C))  vs  Phi(f(A)) + Phi(f(D)) - delta_f X~  vs  rhs.
inline InequalityReport check_corollary_single_map(const ScalarFunction& f,
                                                   const HermitianMatrix& A,
                                                   const HermitianMatrix& B,
                                                   const HermitianMatrix& C,
                                                   const HermitianMatrix& D,
                                                   const PositiveLinearMap& phi, double m,
                                                   double M, double tol = default_tolerance()) {
    detail::require_sandwich({A}, {B}, {C}, {D}, m, M, tol);
    detail::require_equal(A + D, B + C, tol, "A + D = B + C");
    double unital = spectral_norm(phi.unit_image() - HermitianMatrix::identity(phi.dim_out()));
    if (unital > tol * 1.0)
        throw HypothesisError("map is not unital: |Phi(I) - I| = " + std::to_string(unital));
    double c = (m + M) / 2;
    DeltaF df = delta_f(f, m, M);
    HermitianMatrix pB = phi.apply(B), pC = phi.apply(C);
    HermitianMatrix xt = HermitianMatrix::identity(phi.dim_out()) -
                         (1.0 / (M - m)) * (abs_deviation(pB, c) + abs_deviation(pC, c));
    HermitianMatrix lhs = apply_function(pB, f) + apply_function(pC, f);
    HermitianMatrix rhs = phi.apply(apply_function(A, f)) + phi.apply(apply_function(D, f));
    InequalityReport rep =
        detail::two_link_chain(f, lhs, rhs, xt, df.value, tol, "X_tilde", xt, 1.0);
    rep.scalars["m"] = m;
    rep.scalars["M"] = M;
    return rep;
}

// One unital family shared by all roles, per-index balance. Forms 1..3 move
// the function and the absolute values inside or outside the family average.
inline InequalityReport check_corollary_families(const Instance& inst, int form,
                                                 double tol = default_tolerance()) {
    const InstanceData& d = inst.data();
    const ScalarFunction& f = d.f();
    double m = d.m, M = d.M, c = (m + M) / 2;
    const MapFamily& fam = d.family("phi");
    DeltaF df = delta_f(f, m, M);
    int dim = fam.dim_out();
    HermitianMatrix I = HermitianMatrix::identity(dim);

    HermitianMatrix sA = family_apply_normalized(fam, d.A);
    HermitianMatrix sB = family_apply_normalized(fam, d.B);
    HermitianMatrix sC = family_apply_normalized(fam, d.C);
    HermitianMatrix sD = family_apply_normalized(fam, d.D);
    HermitianMatrix sfA = family_apply_normalized(fam, detail::apply_each(f, d.A));
    HermitianMatrix sfB = family_apply_normalized(fam, detail::apply_each(f, d.B));
    HermitianMatrix sfC = family_apply_normalized(fam, detail::apply_each(f, d.C));
    HermitianMatrix sfD = family_apply_normalized(fam, detail::apply_each(f, d.D));

    HermitianMatrix lhs = I, rhs = I, xt = I;
    std::string xt_name = "X_tilde_" + std::to_string(form);
    if (form == 1) {
        xt = I - (1.0 / (M - m)) * (abs_deviation(sB, c) + abs_deviation(sC, c));
        lhs = apply_function(sB, f) + apply_function(sC, f);
        rhs = sfA + sfD;
    } else if (form == 2) {
        HermitianMatrix inB = family_apply_normalized(fam, detail::abs_dev_each(d.B, c));
        HermitianMatrix inC = family_apply_normalized(fam, detail::abs_dev_each(d.C, c));
        xt = I - (1.0 / (M - m)) * (inB + inC);
        lhs = sfB + sfC;
        rhs = apply_function(sA, f) + apply_function(sD, f);
    } else if (form == 3) {
        HermitianMatrix inB = family_apply_normalized(fam, detail::abs_dev_each(d.B, c));
        xt = I - (1.0 / (M - m)) * (inB + abs_deviation(sC, c));
        lhs = sfB + apply_function(sC, f);
        rhs = apply_function(sD, f) + sfA;
    } else {
        throw DomainError("form must be 1, 2 or 3, got " + std::to_string(form));
    }
    InequalityReport rep =
        detail::two_link_chain(f, lhs, rhs, xt, df.value, tol, xt_name, xt, 1.0);
    rep.scalars["m"] = m;
    rep.scalars["M"] = M;
    return rep;
}

// Summed balance sum(A)+sum(D) = sum(C)+sum(B). Verifies both chains: the
// dilated one on the summed operators (defect on [n m, n M]) and the
// termwise one with delta_f times the sum of per-operator tildes.
inline InequalityReport check_corollary_sums(const ScalarFunction& f,
                                             const std::vector<HermitianMatrix>& A,
                                             const std::vector<HermitianMatrix>& B,
                                             const std::vector<HermitianMatrix>& C,
                                             const std::vector<HermitianMatrix>& D, double m,
                                             double M, double tol = default_tolerance()) {
    detail::require_sandwich(A, B, C, D, m, M, tol);
    int n = static_cast<int>(A.size());
    HermitianMatrix SA = detail::sum(A), SB = detail::sum(B), SC = detail::sum(C),
                    SD = detail::sum(D);
    detail::require_equal(SA + SD, SC + SB, tol, "sum(A) + sum(D) = sum(C) + sum(B)");

    ScalarFunction fn = f.certifies(n * m, n * M) ? f : f.recertified(n * m, n * M);
    DeltaF dfn = delta_f_n(fn, m, M, n);
    DeltaF df = delta_f(f, m, M);
    int dim = SA.dim();
    HermitianMatrix I = HermitianMatrix::identity(dim);
    double nc = n * (m + M) / 2;

    InequalityReport rep;
    rep.direction = detail::expected_direction(f);

    HermitianMatrix xtn =
        I - (1.0 / (n * (M - m))) * (abs_deviation(SC, nc) + abs_deviation(SB, nc));
    HermitianMatrix lhs1 = apply_function(SC, fn) + apply_function(SB, fn);
    HermitianMatrix rhs1 = apply_function(SA, fn) + apply_function(SD, fn);
    HermitianMatrix mid1 = rhs1 - dfn.value * xtn;
    rep.add_link("eq1.lhs", "eq1.middle", lhs1, mid1, tol);
    rep.add_link("eq1.middle", "eq1.rhs", mid1, rhs1, tol);

    HermitianMatrix tilde_sum = HermitianMatrix::zero(dim);
    for (const auto& x : C) tilde_sum = tilde_sum + tilde(x, m, M);
    for (const auto& x : B) tilde_sum = tilde_sum + tilde(x, m, M);
    HermitianMatrix lhs2 = HermitianMatrix::zero(dim), rhs2 = HermitianMatrix::zero(dim);
    for (const auto& x : C) lhs2 = lhs2 + apply_function(x, f);
    for (const auto& x : B) lhs2 = lhs2 + apply_function(x, f);
    for (const auto& x : A) rhs2 = rhs2 + apply_function(x, f);
    for (const auto& x : D) rhs2 = rhs2 + apply_function(x, f);
    HermitianMatrix mid2 = rhs2 - df.value * tilde_sum;
    rep.add_link("eq2.lhs", "eq2.middle", lhs2, mid2, tol);
    rep.add_link("eq2.middle", "eq2.rhs", mid2, rhs2, tol);

    rep.scalars["delta_f"] = df.value;
    rep.scalars["delta_f_n"] = dfn.value;
    rep.scalars["n"] = n;
    rep.scalars["m"] = m;
    rep.scalars["M"] = M;
    rep.scalars["X_tilde_n.range_max"] = 1.0;
    rep.scalars["tilde_sum.range_max"] = n;  // 2n terms, each at most 1/2
    rep.matrices.emplace("eq1.lhs", lhs1);
    rep.matrices.emplace("eq1.middle", mid1);
    rep.matrices.emplace("eq1.rhs", rhs1);
    rep.matrices.emplace("eq2.lhs", lhs2);
    rep.matrices.emplace("eq2.middle", mid2);
    rep.matrices.emplace("eq2.rhs", rhs2);
    rep.matrices.emplace("X_tilde_n", xtn);
    rep.matrices.emplace("tilde_sum", tilde_sum);
    return rep;
}

// Mercer-type translation: f(m + M - avg(B))  vs
//   (f(m)+f(M)) I - avg(f(B)) - delta_f B~  vs  the same without the defect.
inline InequalityReport check_jensen_mercer(const ScalarFunction& f, const MapFamily& fam,
                                            const std::vector<HermitianMatrix>& B, double m,
                                            double M, double tol = default_tolerance()) {
    if (B.empty()) throw HypothesisError("B list must be nonempty");
    if (B.size() != fam.size())
        throw HypothesisError("family size does not match number of operators");
    if (std::abs(fam.normalization() - 1.0) > tol)
        throw HypothesisError("family must be unital (normalization 1)");
    int dim = B.front().dim();
    HermitianMatrix mi = m * HermitianMatrix::identity(dim);
    HermitianMatrix Mi = M * HermitianMatrix::identity(dim);
    for (std::size_t i = 0; i < B.size(); ++i) {
        detail::require_leq(mi, B[i], tol, "m I <= B[" + std::to_string(i) + "]");
        detail::require_leq(B[i], Mi, tol, "B[" + std::to_string(i) + "] <= M I");
    }
    double c = (m + M) / 2;
    DeltaF df = delta_f(f, m, M);
    int dout = fam.dim_out();
    HermitianMatrix I = HermitianMatrix::identity(dout);
    HermitianMatrix sB = family_apply_normalized(fam, B);
    HermitianMatrix bt = I - (1.0 / (M - m)) * (family_apply_normalized(
                                                    fam, detail::abs_dev_each(B, c)) +
                                                abs_deviation(sB, c));
    HermitianMatrix lhs = apply_function((m + M) * I - sB, f);
    HermitianMatrix rhs =
        (f(m) + f(M)) * I - family_apply_normalized(fam, detail::apply_each(f, B));
    InequalityReport rep =
        detail::two_link_chain(f, lhs, rhs, bt, df.value, tol, "B_tilde", bt, 1.0);
    rep.scalars["m"] = m;
    rep.scalars["M"] = M;
    return rep;
}

// Superadditivity-with-remainder for nonnegative B_i summing to exactly M I:
//   sum f(B_i)  vs  f(sum B_i) + (n-1) f(0) I - delta_f B~  vs  rhs,
// with the defect taken on [0, M].
inline InequalityReport check_petrovic(const ScalarFunction& f,
                                       const std::vector<HermitianMatrix>& B, double M,
                                       double tol = default_tolerance()) {
    if (B.empty()) throw HypothesisError("B list must be nonempty");
    if (!(M > 0.0)) throw HypothesisError("M must be positive");
    if (!f.domain().admits(0.0, 1e-9))
        throw HypothesisError("0 escapes the domain of " + f.describe());
    int dim = B.front().dim();
    int n = static_cast<int>(B.size());
    HermitianMatrix Z = HermitianMatrix::zero(dim);
    for (std::size_t i = 0; i < B.size(); ++i)
        detail::require_leq(Z, B[i], tol, "0 <= B[" + std::to_string(i) + "]");
    HermitianMatrix S = detail::sum(B);
    detail::require_equal(S, M * HermitianMatrix::identity(dim), tol, "sum(B) = M I");

    ScalarFunction f0 = f.certifies(0.0, M) ? f : f.recertified(0.0, M);
    DeltaF df = delta_f(f0, 0.0, M);
    HermitianMatrix bt = (n / 2.0) * HermitianMatrix::identity(dim);
    for (const auto& b : B) bt = bt - abs_deviation((1.0 / M) * b, 0.5);
    HermitianMatrix lhs = Z;
    for (const auto& b : B) lhs = lhs + apply_function(b, f0);
    HermitianMatrix rhs = apply_function(S, f0).shifted((n - 1) * f0(0.0));
    InequalityReport rep =
        detail::two_link_chain(f0, lhs, rhs, bt, df.value, tol, "B_tilde", bt, n / 2.0);
    rep.scalars["M"] = M;
    rep.scalars["n"] = n;
    return rep;
}

// The three midpoint forms on Omega pairs. midpoint-out keeps the absolute
// value outside the family average, midpoint-in moves it inside; the lambda
// form replaces the midpoint by the weighted combination W built through
// convexity_weights_map and requires the spectrum of W to stay inside
// [m, M] (outside that window the refined two-point bound genuinely fails
// for non-operator-convex functions, so it is a hypothesis, not a check).
enum class OmegaForm { MidpointOut, MidpointIn, Lambda };

inline InequalityReport check_omega_jensen(const ScalarFunction& f, const MapFamily& fam,
                                           const std::vector<HermitianMatrix>& A,
                                           const std::vector<HermitianMatrix>& D, double m,
                                           double M, OmegaForm form,
                                           std::optional<double> lambda = std::nullopt,
                                           double tol = default_tolerance()) {
    if (A.empty() || A.size() != D.size())
        throw HypothesisError("omega checker needs matching nonempty A and D lists");
    for (std::size_t i = 0; i < A.size(); ++i) {
        if (!omega_member(A[i], D[i], m, M, tol))
            throw HypothesisError("pair " + std::to_string(i) +
                                  " is not an Omega member for [m, M]");
    }
    double c = (m + M) / 2;
    DeltaF df = delta_f(f, m, M);

    if (form == OmegaForm::Lambda) {
        if (A.size() != 1)
            throw HypothesisError("lambda form takes a single pair");
        if (!lambda || *lambda < 0.0 || *lambda > 1.0)
            throw HypothesisError("lambda form needs lambda in [0, 1]");
        int dim = A.front().dim();
        MapFamily weights = convexity_weights_map(*lambda, dim);
        HermitianMatrix W = family_apply_normalized(weights, {A[0], D[0]});
        auto [wlo, whi] = spectral_bounds(W);
        double scale = std::max({1.0, std::abs(m), std::abs(M)});
        if (wlo < m - tol * scale || whi > M + tol * scale)
            throw HypothesisError(
                "spectrum of lambda A + (1-lambda) D escapes [m, M]: eigenvalue " +
                std::to_string(wlo < m - tol * scale ? wlo : whi) +
                " outside [" + std::to_string(m) + ", " + std::to_string(M) +
                "]; the refined bound only certifies combinations inside the window");
        HermitianMatrix xt = tilde(W, m, M);
        HermitianMatrix lhs = apply_function(W, f);
        HermitianMatrix rhs = family_apply_normalized(
            weights, {apply_function(A[0], f), apply_function(D[0], f)});
        InequalityReport rep =
            detail::two_link_chain(f, lhs, rhs, xt, df.value, tol, "X_tilde", xt, 0.5);
        rep.scalars["m"] = m;
        rep.scalars["M"] = M;
        rep.scalars["lambda"] = *lambda;
        return rep;
    }

    if (A.size() != fam.size())
        throw HypothesisError("family size does not match number of pairs");
    if (std::abs(fam.normalization() - 1.0) > tol)
        throw HypothesisError("family must be unital (normalization 1)");
    std::vector<HermitianMatrix> mids;
    mids.reserve(A.size());
    for (std::size_t i = 0; i < A.size(); ++i) mids.push_back(0.5 * (A[i] + D[i]));
    int dout = fam.dim_out();
    HermitianMatrix I = HermitianMatrix::identity(dout);

    if (form == OmegaForm::MidpointOut) {
        HermitianMatrix sMid = family_apply_normalized(fam, mids);
        HermitianMatrix xt = 0.5 * I - (1.0 / (M - m)) * abs_deviation(sMid, c);
        HermitianMatrix lhs = apply_function(sMid, f);
        std::vector<HermitianMatrix> half_sums;
        half_sums.reserve(A.size());
        for (std::size_t i = 0; i < A.size(); ++i)
            half_sums.push_back(0.5 * (apply_function(A[i], f) + apply_function(D[i], f)));
        HermitianMatrix rhs = family_apply_normalized(fam, half_sums);
        InequalityReport rep =
            detail::two_link_chain(f, lhs, rhs, xt, df.value, tol, "X_tilde", xt, 0.5);
        rep.scalars["m"] = m;
        rep.scalars["M"] = M;
        return rep;
    }

    // MidpointIn
    HermitianMatrix xt =
        0.5 * I - (1.0 / (M - m)) * family_apply_normalized(fam, detail::abs_dev_each(mids, c));
    HermitianMatrix lhs = family_apply_normalized(fam, detail::apply_each(f, mids));
    HermitianMatrix sA = family_apply_normalized(fam, A);
    HermitianMatrix sD = family_apply_normalized(fam, D);
    HermitianMatrix rhs = 0.5 * (apply_function(sA, f) + apply_function(sD, f));
    InequalityReport rep =
        detail::two_link_chain(f, lhs, rhs, xt, df.value, tol, "X_tilde", xt, 0.5);
    rep.scalars["m"] = m;
    rep.scalars["M"] = M;
    return rep;
}

// Four-link strengthening available once f is operator convex (the checks
// use f(t) = t^2): family average of midpoint images slots between the
// plain Jensen left end and the defect-corrected half-sum bounds.
inline InequalityReport check_operator_convex_chain(const ScalarFunction& f, const MapFamily& fam,
                                                    const std::vector<HermitianMatrix>& A,
                                                    const std::vector<HermitianMatrix>& D,
                                                    double m, double M,
                                                    double tol = default_tolerance()) {
    if (A.empty() || A.size() != D.size())
        throw HypothesisError("operator-convex chain needs matching nonempty A and D lists");
    if (A.size() != fam.size())
        throw HypothesisError("family size does not match number of pairs");
    for (std::size_t i = 0; i < A.size(); ++i) {
        if (!omega_member(A[i], D[i], m, M, tol))
            throw HypothesisError("pair " + std::to_string(i) +
                                  " is not an Omega member for [m, M]");
    }
    double c = (m + M) / 2;
    DeltaF df = delta_f(f, m, M);
    int dout = fam.dim_out();
    HermitianMatrix I = HermitianMatrix::identity(dout);
    std::vector<HermitianMatrix> mids;
    mids.reserve(A.size());
    for (std::size_t i = 0; i < A.size(); ++i) mids.push_back(0.5 * (A[i] + D[i]));

    HermitianMatrix xt =
        0.5 * I - (1.0 / (M - m)) * family_apply_normalized(fam, detail::abs_dev_each(mids, c));
    HermitianMatrix l0 = apply_function(family_apply_normalized(fam, mids), f);
    HermitianMatrix l1 = family_apply_normalized(fam, detail::apply_each(f, mids));
    HermitianMatrix sA = family_apply_normalized(fam, A);
    HermitianMatrix sD = family_apply_normalized(fam, D);
    std::vector<HermitianMatrix> half_sums;
    half_sums.reserve(A.size());
    for (std::size_t i = 0; i < A.size(); ++i)
        half_sums.push_back(0.5 * (apply_function(A[i], f) + apply_function(D[i], f)));
    HermitianMatrix l4 = family_apply_normalized(fam, half_sums);
    HermitianMatrix l2 = 0.5 * (apply_function(sA, f) + apply_function(sD, f)) - df.value * xt;
    HermitianMatrix l3 = l4 - df.value * xt;

    InequalityReport rep;
    rep.direction = detail::expected_direction(f);
    rep.add_link("f(avg mid)", "avg f(mid)", l0, l1, tol);
    rep.add_link("avg f(mid)", "half-sum of f(avg) - defect", l1, l2, tol);
    rep.add_link("half-sum of f(avg) - defect", "avg half-sum - defect", l2, l3, tol);
    rep.add_link("avg half-sum - defect", "avg half-sum", l3, l4, tol);
    rep.scalars["delta_f"] = df.value;
    rep.scalars["m"] = m;
    rep.scalars["M"] = M;
    rep.scalars["X_tilde.range_max"] = 0.5;
    rep.matrices.emplace("X_tilde", xt);
    return rep;
}

// sum f(C_i)  vs  f(sum C_i) - delta_f sum C~_i  vs  f(sum C_i) for
// 0 <= C_i <= M I <= sum C_i, defect on [0, M]; needs f(0) <= 0 when convex
// (f(0) >= 0 when concave) or the uncorrected inequality already fails.
inline InequalityReport check_superadditivity(const ScalarFunction& f,
                                              const std::vector<HermitianMatrix>& C, double M,
                                              double tol = default_tolerance()) {
    if (C.empty()) throw HypothesisError("C list must be nonempty");
    if (!(M > 0.0)) throw HypothesisError("M must be positive");
    if (!f.domain().admits(0.0, 1e-9))
        throw HypothesisError("0 escapes the domain of " + f.describe());
    ScalarFunction f0 = f.certifies(0.0, M) ? f : f.recertified(0.0, M);
    double f_at_0 = f0(0.0);
    if (f0.direction() == Direction::Convex && f_at_0 > tol)
        throw HypothesisError("superadditivity needs f(0) <= 0 for convex f; f(0) = " +
                              std::to_string(f_at_0));
    if (f0.direction() == Direction::Concave && f_at_0 < -tol)
        throw HypothesisError("superadditivity needs f(0) >= 0 for concave f; f(0) = " +
                              std::to_string(f_at_0));
    int dim = C.front().dim();
    int n = static_cast<int>(C.size());
    HermitianMatrix Z = HermitianMatrix::zero(dim);
    HermitianMatrix Mi = M * HermitianMatrix::identity(dim);
    for (std::size_t i = 0; i < C.size(); ++i) {
        detail::require_leq(Z, C[i], tol, "0 <= C[" + std::to_string(i) + "]");
        detail::require_leq(C[i], Mi, tol, "C[" + std::to_string(i) + "] <= M I");
    }
    HermitianMatrix S = detail::sum(C);
    detail::require_leq(Mi, S, tol, "M I <= sum(C)");

    DeltaF df = delta_f(f0, 0.0, M);
    HermitianMatrix ct_sum = HermitianMatrix::zero(dim);
    for (const auto& x : C)
        ct_sum = ct_sum + (0.5 * HermitianMatrix::identity(dim) -
                           abs_deviation((1.0 / M) * x, 0.5));
    HermitianMatrix lhs = Z;
    for (const auto& x : C) lhs = lhs + apply_function(x, f0);
    HermitianMatrix rhs = apply_function(S, f0);
    InequalityReport rep = detail::two_link_chain(f0, lhs, rhs, ct_sum, df.value, tol,
                                                  "C_tilde_sum", ct_sum, n * 0.5);
    rep.scalars["M"] = M;
    rep.scalars["n"] = n;
    return rep;
}

// Theorem-style sandwich inequality without any balance equality; instead one
// of four (order, monotonicity) side conditions justifies the chain:
//   i:   convex,  B + C <= A + D,  f(m) <= f(M)
//   ii:  convex,  A + D <= B + C,  f(M) <= f(m)
//   iii: concave, B + C <= A + D,  f(M) <= f(m)
//   iv:  concave, A + D <= B + C,  f(m) <= f(M)
inline InequalityReport check_monotone_conditions(const ScalarFunction& f,
                                                  const HermitianMatrix& A,
                                                  const HermitianMatrix& B,
                                                  const HermitianMatrix& C,
                                                  const HermitianMatrix& D, double m, double M,
                                                  const std::string& condition,
                                                  double tol = default_tolerance()) {
    detail::require_sandwich({A}, {B}, {C}, {D}, m, M, tol);
    bool convex = f.direction() == Direction::Convex;
    double fscale = std::max({1.0, std::abs(f(m)), std::abs(f(M))});
    bool fm_le_fM = f(m) <= f(M) + tol * fscale;
    bool fM_le_fm = f(M) <= f(m) + tol * fscale;
    auto op_le = [&](const HermitianMatrix& x, const HermitianMatrix& y) {
        Ordering o = loewner_compare(x, y, tol).ordering;
        return o == Ordering::LessEq || o == Ordering::Equal;
    };
    bool bc_le_ad = op_le(B + C, A + D);
    bool ad_le_bc = op_le(A + D, B + C);

    auto fail = [&](const std::string& half) {
        throw HypothesisError("condition (" + condition + ") not satisfied: " + half);
    };
    if (condition == "i") {
        if (!convex) fail("f must be convex");
        if (!bc_le_ad) fail("operator half B + C <= A + D fails");
        if (!fm_le_fM) fail("scalar half f(m) <= f(M) fails");
    } else if (condition == "ii") {
        if (!convex) fail("f must be convex");
        if (!ad_le_bc) fail("operator half A + D <= B + C fails");
        if (!fM_le_fm) fail("scalar half f(M) <= f(m) fails");
    } else if (condition == "iii") {
        if (convex) fail("f must be concave");
        if (!bc_le_ad) fail("operator half B + C <= A + D fails");
        if (!fM_le_fm) fail("scalar half f(M) <= f(m) fails");
    } else if (condition == "iv") {
        if (convex) fail("f must be concave");
        if (!ad_le_bc) fail("operator half A + D <= B + C fails");
        if (!fm_le_fM) fail("scalar half f(m) <= f(M) fails");
    } else {
        throw DomainError("condition must be one of i, ii, iii, iv; got \"" + condition + "\"");
    }

    double c = (m + M) / 2;
    DeltaF df = delta_f(f, m, M);
    HermitianMatrix xt = HermitianMatrix::identity(A.dim()) -
                         (1.0 / (M - m)) * (abs_deviation(B, c) + abs_deviation(C, c));
    HermitianMatrix lhs = apply_function(B, f) + apply_function(C, f);
    HermitianMatrix rhs = apply_function(A, f) + apply_function(D, f);
    InequalityReport rep =
        detail::two_link_chain(f, lhs, rhs, xt, df.value, tol, "X_tilde", xt, 1.0);
    rep.scalars["m"] = m;
    rep.scalars["M"] = M;
    return rep;
}

// Power-function specialization with split exponents: B^p + C^p vs
// A^q + D^q - delta_p X~ for q >= p, under I <= A and the per-condition
// order between B + C and A + D.
inline InequalityReport check_power_pairs(const HermitianMatrix& A, const HermitianMatrix& B,
                                          const HermitianMatrix& C, const HermitianMatrix& D,
                                          double m, double M, double p, double q,
                                          const std::string& condition,
                                          double tol = default_tolerance()) {
    detail::require_sandwich({A}, {B}, {C}, {D}, m, M, tol);
    detail::require_leq(HermitianMatrix::identity(A.dim()), A, tol, "I <= A");
    if (q < p) throw HypothesisError("q >= p required, got p=" + std::to_string(p) +
                                     " q=" + std::to_string(q));
    auto op_le = [&](const HermitianMatrix& x, const HermitianMatrix& y) {
        Ordering o = loewner_compare(x, y, tol).ordering;
        return o == Ordering::LessEq || o == Ordering::Equal;
    };
    if (condition == "i") {
        if (p < 1.0)
            throw HypothesisError("condition (i) needs p >= 1, got " + std::to_string(p));
        if (!op_le(B + C, A + D))
            throw HypothesisError("condition (i) not satisfied: B + C <= A + D fails");
    } else if (condition == "ii") {
        if (p > 0.0)
            throw HypothesisError("condition (ii) needs p <= 0, got " + std::to_string(p));
        if (!op_le(A + D, B + C))
            throw HypothesisError("condition (ii) not satisfied: A + D <= B + C fails");
    } else {
        throw DomainError("condition must be i or ii, got \"" + condition + "\"");
    }

    ScalarFunction fp(FunctionSpec::power(p), m, M);
    // q is only ever applied to spectra in [1, m] and [M, inf); certify on a
    // window that covers what this instance actually uses.
    double dmax = spectral_bounds(D).second;
    ScalarFunction fq(FunctionSpec::power(q), std::min(1.0, m), std::max(M, dmax) + 1.0);
    double c = (m + M) / 2;
    DeltaF dp = delta_f(fp, m, M);
    HermitianMatrix xt = HermitianMatrix::identity(A.dim()) -
                         (1.0 / (M - m)) * (abs_deviation(B, c) + abs_deviation(C, c));
    HermitianMatrix lhs = apply_function(B, fp) + apply_function(C, fp);
    HermitianMatrix rhs = apply_function(A, fq) + apply_function(D, fq);
    InequalityReport rep =
        detail::two_link_chain(fp, lhs, rhs, xt, dp.value, tol, "X_tilde", xt, 1.0);
    rep.scalars["m"] = m;
    rep.scalars["M"] = M;
    rep.scalars["p"] = p;
    rep.scalars["q"] = q;
    rep.scalars.erase("delta_f");
    rep.scalars["delta_p"] = dp.value;
    return rep;
}

// ---------------------------------------------------------------------------
// Instance-level hypothesis verification and dispatch
// ---------------------------------------------------------------------------

inline void verify_hypotheses(const InstanceData& d, double tol) {
    if (!(d.m < d.M)) throw HypothesisError("instance needs m < M");
    const std::string& t = d.theorem;
    const ScalarFunction& f = d.f();

    if (t == "main") {
        detail::require_sandwich_per_role(d.A, d.B, d.C, d.D, d.m, d.M, tol);
        const MapFamily &fa = d.family("A"), &fb = d.family("B"), &fc = d.family("C"),
                        &fd = d.family("D");
        if (fa.size() != d.A.size() || fb.size() != d.B.size() || fc.size() != d.C.size() ||
            fd.size() != d.D.size())
            throw HypothesisError("family sizes must match their operator lists");
        HermitianMatrix left =
            family_apply_normalized(fa, d.A) + family_apply_normalized(fd, d.D);
        HermitianMatrix right =
            family_apply_normalized(fc, d.C) + family_apply_normalized(fb, d.B);
        detail::require_equal(left, right, tol,
                              "avg_A(A) + avg_D(D) = avg_C(C) + avg_B(B) (level balance)");
    } else if (t == "cor24") {
        if (d.A.size() != 1 || d.B.size() != 1 || d.C.size() != 1 || d.D.size() != 1)
            throw HypothesisError("cor24 takes exactly one operator per role");
        detail::require_sandwich(d.A, d.B, d.C, d.D, d.m, d.M, tol);
        detail::require_equal(d.A[0] + d.D[0], d.B[0] + d.C[0], tol, "A + D = B + C");
        const MapFamily& fam = d.family("phi");
        if (fam.size() != 1 || std::abs(fam.normalization() - 1.0) > tol)
            throw HypothesisError("cor24 needs a single unital map");
    } else if (t == "cor25.1" || t == "cor25.2" || t == "cor25.3") {
        detail::require_sandwich(d.A, d.B, d.C, d.D, d.m, d.M, tol);
        for (std::size_t i = 0; i < d.A.size(); ++i)
            detail::require_equal(d.A[i] + d.D[i], d.B[i] + d.C[i], tol,
                                  "A[" + std::to_string(i) + "] + D[...] = B[...] + C[...]");
        const MapFamily& fam = d.family("phi");
        if (fam.size() != d.A.size())
            throw HypothesisError("family size does not match number of operators");
        if (std::abs(fam.normalization() - 1.0) > tol)
            throw HypothesisError("family must be unital (normalization 1)");
    } else if (t == "cor27") {
        detail::require_sandwich(d.A, d.B, d.C, d.D, d.m, d.M, tol);
        detail::require_equal(detail::sum(d.A) + detail::sum(d.D),
                              detail::sum(d.C) + detail::sum(d.B), tol,
                              "sum(A) + sum(D) = sum(C) + sum(B)");
    } else if (t == "jm") {
        // check_jensen_mercer re-verifies; run it cheaply here for uniformity.
        if (d.B.empty()) throw HypothesisError("B list must be nonempty");
        const MapFamily& fam = d.family("phi");
        if (fam.size() != d.B.size())
            throw HypothesisError("family size does not match number of operators");
        if (std::abs(fam.normalization() - 1.0) > tol)
            throw HypothesisError("family must be unital (normalization 1)");
        int dim = d.B.front().dim();
        HermitianMatrix mi = d.m * HermitianMatrix::identity(dim);
        HermitianMatrix Mi = d.M * HermitianMatrix::identity(dim);
        for (std::size_t i = 0; i < d.B.size(); ++i) {
            detail::require_leq(mi, d.B[i], tol, "m I <= B[" + std::to_string(i) + "]");
            detail::require_leq(d.B[i], Mi, tol, "B[" + std::to_string(i) + "] <= M I");
        }
    } else if (t == "petrovic") {
        if (d.B.empty()) throw HypothesisError("B list must be nonempty");
        if (!(d.M > 0.0)) throw HypothesisError("M must be positive");
        int dim = d.B.front().dim();
        HermitianMatrix Z = HermitianMatrix::zero(dim);
        for (std::size_t i = 0; i < d.B.size(); ++i)
            detail::require_leq(Z, d.B[i], tol, "0 <= B[" + std::to_string(i) + "]");
        detail::require_equal(detail::sum(d.B), d.M * HermitianMatrix::identity(dim), tol,
                              "sum(B) = M I");
        if (!f.domain().admits(0.0, 1e-9))
            throw HypothesisError("0 escapes the domain of " + f.describe());
    } else if (t == "omega.mid-out" || t == "omega.mid-in") {
        if (d.A.empty() || d.A.size() != d.D.size())
            throw HypothesisError("omega forms need matching nonempty A and D lists");
        for (std::size_t i = 0; i < d.A.size(); ++i)
            if (!omega_member(d.A[i], d.D[i], d.m, d.M, tol))
                throw HypothesisError("pair " + std::to_string(i) + " is not an Omega member");
        const MapFamily& fam = d.family("phi");
        if (fam.size() != d.A.size())
            throw HypothesisError("family size does not match number of pairs");
        if (std::abs(fam.normalization() - 1.0) > tol)
            throw HypothesisError("family must be unital (normalization 1)");
    } else if (t == "omega.lambda") {
        if (d.A.size() != 1 || d.D.size() != 1)
            throw HypothesisError("lambda form takes a single pair");
        if (!d.lambda || *d.lambda < 0.0 || *d.lambda > 1.0)
            throw HypothesisError("lambda form needs lambda in [0, 1]");
        if (!omega_member(d.A[0], d.D[0], d.m, d.M, tol))
            throw HypothesisError("the pair is not an Omega member");
        MapFamily weights = convexity_weights_map(*d.lambda, d.A[0].dim());
        HermitianMatrix W = family_apply_normalized(weights, {d.A[0], d.D[0]});
        auto [wlo, whi] = spectral_bounds(W);
        double scale = std::max({1.0, std::abs(d.m), std::abs(d.M)});
        if (wlo < d.m - tol * scale || whi > d.M + tol * scale)
            throw HypothesisError("spectrum of lambda A + (1-lambda) D escapes [m, M]");
    } else if (t == "superadd") {
        if (d.C.empty()) throw HypothesisError("C list must be nonempty");
        if (!(d.M > 0.0)) throw HypothesisError("M must be positive");
        if (!f.domain().admits(0.0, 1e-9))
            throw HypothesisError("0 escapes the domain of " + f.describe());
        int dim = d.C.front().dim();
        HermitianMatrix Z = HermitianMatrix::zero(dim);
        HermitianMatrix Mi = d.M * HermitianMatrix::identity(dim);
        for (std::size_t i = 0; i < d.C.size(); ++i) {
            detail::require_leq(Z, d.C[i], tol, "0 <= C[" + std::to_string(i) + "]");
            detail::require_leq(d.C[i], Mi, tol, "C[" + std::to_string(i) + "] <= M I");
        }
        detail::require_leq(Mi, detail::sum(d.C), tol, "M I <= sum(C)");
        ScalarFunction f0 = f.certifies(0.0, d.M) ? f : f.recertified(0.0, d.M);
        double f_at_0 = f0(0.0);
        if (f0.direction() == Direction::Convex && f_at_0 > tol)
            throw HypothesisError("superadditivity needs f(0) <= 0 for convex f; f(0) = " +
                                  std::to_string(f_at_0));
        if (f0.direction() == Direction::Concave && f_at_0 < -tol)
            throw HypothesisError("superadditivity needs f(0) >= 0 for concave f; f(0) = " +
                                  std::to_string(f_at_0));
    } else if (t.rfind("monotone.", 0) == 0) {
        // The checker performs the full condition analysis (it owns the
        // "which half failed" reporting); reaching it requires the sandwich.
        detail::require_sandwich(d.A, d.B, d.C, d.D, d.m, d.M, tol);
    } else if (t == "power-pairs") {
        detail::require_sandwich(d.A, d.B, d.C, d.D, d.m, d.M, tol);
        detail::require_leq(HermitianMatrix::identity(d.A[0].dim()), d.A[0], tol, "I <= A");
        if (f.spec().kind != FunctionSpec::Kind::Power)
            throw HypothesisError("power-pairs needs a power function for p");
        if (!d.q) throw HypothesisError("power-pairs needs q");
    } else {
        throw HypothesisError("unknown theorem id \"" + t + "\"");
    }
}

// Runs the checker an instance declares. The variant for "main" and the form
// digits for cor25 come from the instance itself.
inline InequalityReport run_checker(const Instance& inst, double tol = default_tolerance()) {
    const InstanceData& d = inst.data();
    const std::string& t = d.theorem;
    if (t == "main") return check_theorem_main(inst, d.variant, tol);
    if (t == "cor24") {
        const MapFamily& fam = d.family("phi");
        return check_corollary_single_map(d.f(), d.A[0], d.B[0], d.C[0], d.D[0],
                                          fam.maps().front(), d.m, d.M, tol);
    }
    if (t == "cor25.1") return check_corollary_families(inst, 1, tol);
    if (t == "cor25.2") return check_corollary_families(inst, 2, tol);
    if (t == "cor25.3") return check_corollary_families(inst, 3, tol);
    if (t == "cor27") return check_corollary_sums(d.f(), d.A, d.B, d.C, d.D, d.m, d.M, tol);
    if (t == "jm") return check_jensen_mercer(d.f(), d.family("phi"), d.B, d.m, d.M, tol);
    if (t == "petrovic") return check_petrovic(d.f(), d.B, d.M, tol);
    if (t == "omega.mid-out")
        return check_omega_jensen(d.f(), d.family("phi"), d.A, d.D, d.m, d.M,
                                  OmegaForm::MidpointOut, std::nullopt, tol);
    if (t == "omega.mid-in")
        return check_omega_jensen(d.f(), d.family("phi"), d.A, d.D, d.m, d.M,
                                  OmegaForm::MidpointIn, std::nullopt, tol);
    if (t == "omega.lambda") {
        MapFamily unused = convexity_weights_map(0.5, d.A[0].dim());
        return check_omega_jensen(d.f(), unused, d.A, d.D, d.m, d.M, OmegaForm::Lambda, d.lambda,
                                  tol);
    }
    if (t == "superadd") return check_superadditivity(d.f(), d.C, d.M, tol);
    if (t.rfind("monotone.", 0) == 0)
        return check_monotone_conditions(d.f(), d.A[0], d.B[0], d.C[0], d.D[0], d.m, d.M,
                                         t.substr(9), tol);
    if (t == "power-pairs") {
        double p = d.f().spec().p;
        std::string cond = d.condition.empty() ? (p >= 1.0 ? "i" : "ii") : d.condition;
        return check_power_pairs(d.A[0], d.B[0], d.C[0], d.D[0], d.m, d.M, p,
                                 d.q.value_or(p), cond, tol);
    }
    throw HypothesisError("unknown theorem id \"" + t + "\"");
}

} // namespace opineq
