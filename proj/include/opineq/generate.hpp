#pragma once

// Seeded instance generators. Every random draw flows through a SplitMix64
// stream plus Box-Muller, so a (seed, parameters) pair produces bit-identical
// instances on every platform; std:: distributions are deliberately avoided
// because their outputs differ between standard library implementations.

#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/QR>

#include "opineq/checkers.hpp"
#include "opineq/errors.hpp"
#include "opineq/maps.hpp"
#include "opineq/spectral.hpp"

namespace opineq {

struct SplitMix64 {
    std::uint64_t state;

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }
};

// Stable sub-seed for the index-th instance of a run; consuming instances in
// any order (or in parallel) cannot perturb each other's draws.
inline std::uint64_t seed_split(std::uint64_t master, std::uint64_t index) {
    SplitMix64 a{master};
    std::uint64_t base = a.next();
    SplitMix64 b{base ^ (index * 0xD1B54A32D192ED03ULL + 0x2545F4914F6CDD1DULL)};
    return b.next();
}

class Rng {
public:
    explicit Rng(std::uint64_t seed) : sm_{seed} {}

    std::uint64_t bits() { return sm_.next(); }

    double uniform01() { return static_cast<double>(sm_.next() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    // inclusive on both ends
    std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(sm_.next() %
                                              static_cast<std::uint64_t>(hi - lo + 1));
    }

    double normal() {
        if (has_cache_) {
            has_cache_ = false;
            return cache_;
        }
        double u1 = (static_cast<double>(sm_.next() >> 11) + 1.0) * 0x1.0p-53; // (0,1]
        double u2 = uniform01();
        double r = std::sqrt(-2.0 * std::log(u1));
        double th = 2.0 * 3.14159265358979323846 * u2;
        cache_ = r * std::sin(th);
        has_cache_ = true;
        return r * std::cos(th);
    }

private:
    SplitMix64 sm_;
    bool has_cache_ = false;
    double cache_ = 0.0;
};

struct GenConfig {
    int dim = 2;
    double m = 0.0;
    double M = 1.0;
    std::uint64_t seed = 0;
    int max_retries = 1000;
    std::optional<double> spread;         // default (M - m) / 2
    std::optional<double> spectrum_floor; // hard lower bound (log-like domains)

    void validate() const {
        if (dim < 1) throw GenerationError("dim must be >= 1");
        if (!(m < M)) throw GenerationError("need m < M");
        if (max_retries < 1) throw GenerationError("max_retries must be >= 1");
        if (spread && !(*spread > 0.0)) throw GenerationError("spread must be positive");
        if (spectrum_floor && !(*spectrum_floor < m))
            throw GenerationError("spectrum_floor must sit below m");
    }

    double effective_spread() const {
        double s = spread.value_or((M - m) / 2.0);
        if (spectrum_floor) s = std::min(s, 0.9 * (m - *spectrum_floor));
        return s;
    }
};

namespace gendetail {

inline Eigen::MatrixXcd gaussian(Rng& rng, int rows, int cols) {
    Eigen::MatrixXcd g(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) g(i, j) = Complex(rng.normal(), rng.normal());
    return g;
}

inline Eigen::MatrixXcd random_unitary(Rng& rng, int n) {
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(gaussian(rng, n, n));
    return Eigen::MatrixXcd(qr.householderQ());
}

inline double lambda_min(const HermitianMatrix& h) { return spectral_bounds(h).first; }

} // namespace gendetail

// G G* scaled to spectral norm one: a PSD contraction whose top eigenvalue
// is exactly 1.
inline HermitianMatrix random_psd_contraction(Rng& rng, int n) {
    Eigen::MatrixXcd g = gendetail::gaussian(rng, n, n);
    Eigen::MatrixXcd w = g * g.adjoint();
    HermitianMatrix h = HermitianMatrix::from_eigen(w);
    double nrm = spectral_norm(h);
    if (!(nrm > 0.0)) throw GenerationError("degenerate Gaussian draw");
    return (1.0 / nrm) * h;
}

// n_maps random Kraus bundles jointly normalized so the family sums to the
// identity on I (left-multiply every Kraus operator by (sum K K*)^{-1/2}).
inline MapFamily rand_unital_family(Rng& rng, int n_maps, int dim, int kraus_per = 1) {
    if (n_maps < 1 || kraus_per < 1) throw GenerationError("need at least one map and Kraus op");
    std::vector<std::vector<Eigen::MatrixXcd>> bundles(n_maps);
    Eigen::MatrixXcd s = Eigen::MatrixXcd::Zero(dim, dim);
    for (auto& bundle : bundles) {
        for (int k = 0; k < kraus_per; ++k) {
            bundle.push_back(gendetail::gaussian(rng, dim, dim));
            s += bundle.back() * bundle.back().adjoint();
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(s);
    if (es.info() != Eigen::Success) throw GenerationError("Kraus normalizer eigensolve failed");
    double lo = es.eigenvalues().minCoeff(), hi = es.eigenvalues().maxCoeff();
    if (lo <= 1e-12 * std::max(1.0, hi)) throw GenerationError("singular Kraus normalizer");
    Eigen::MatrixXcd sih = es.eigenvectors() *
                           es.eigenvalues().cwiseSqrt().cwiseInverse().asDiagonal() *
                           es.eigenvectors().adjoint();
    std::vector<PositiveLinearMap> maps;
    maps.reserve(bundles.size());
    for (auto& bundle : bundles) {
        for (auto& k : bundle) k = sih * k;
        maps.emplace_back(dim, dim, bundle);
    }
    return MapFamily(std::move(maps), 1.0);
}

enum class Balance { PerIndex, Summed, MapLevel };

namespace gendetail {

// B, C random in [mI, MI]; A below mI; D solves the balance. The repair loop
// either pushes A down (unbounded domains) or inflates B and C toward M I
// (a spectrum floor forbids lowering A).
struct SandwichLists {
    std::vector<HermitianMatrix> A, B, C, D;
};

inline SandwichLists per_index_sandwich(Rng& rng, const GenConfig& cfg, int n_ops) {
    double m = cfg.m, M = cfg.M, spread = cfg.effective_spread();
    int dim = cfg.dim;
    HermitianMatrix I = HermitianMatrix::identity(dim);
    SandwichLists out;
    for (int i = 0; i < n_ops; ++i) {
        HermitianMatrix B = (m * I) + (M - m) * random_psd_contraction(rng, dim);
        HermitianMatrix C = (m * I) + (M - m) * random_psd_contraction(rng, dim);
        HermitianMatrix A = (m * I) - spread * random_psd_contraction(rng, dim);
        bool ok = false;
        for (int r = 0; r < cfg.max_retries; ++r) {
            HermitianMatrix D = B + C - A;
            if (lambda_min(D) >= M) {
                ok = true;
                break;
            }
            if (!cfg.spectrum_floor) {
                A = A - 0.1 * (M - m) * I;
            } else {
                B = B + 0.25 * ((M * I) - B);
                C = C + 0.25 * ((M * I) - C);
            }
        }
        if (!ok) throw GenerationError("sandwich repair exhausted retries");
        out.A.push_back(A);
        out.B.push_back(B);
        out.C.push_back(C);
        out.D.push_back(B + C - A);
    }
    return out;
}

inline SandwichLists summed_sandwich(Rng& rng, const GenConfig& cfg, int n_ops) {
    double m = cfg.m, M = cfg.M, spread = cfg.effective_spread();
    int dim = cfg.dim;
    HermitianMatrix I = HermitianMatrix::identity(dim);
    SandwichLists out;
    for (int i = 0; i < n_ops; ++i) {
        out.B.push_back((m * I) + (M - m) * random_psd_contraction(rng, dim));
        out.C.push_back((m * I) + (M - m) * random_psd_contraction(rng, dim));
        out.A.push_back((m * I) - spread * random_psd_contraction(rng, dim));
    }
    for (int i = 1; i < n_ops; ++i)
        out.D.push_back((M * I) + spread * random_psd_contraction(rng, dim));
    auto residual = [&]() {
        HermitianMatrix r = HermitianMatrix::zero(dim);
        for (const auto& x : out.B) r = r + x;
        for (const auto& x : out.C) r = r + x;
        for (const auto& x : out.A) r = r - x;
        for (const auto& x : out.D) r = r - x;
        return r;
    };
    bool ok = false;
    HermitianMatrix d1 = HermitianMatrix::zero(dim);
    for (int r = 0; r < cfg.max_retries; ++r) {
        d1 = residual();
        if (lambda_min(d1) >= M) {
            ok = true;
            break;
        }
        if (!cfg.spectrum_floor) {
            out.A[0] = out.A[0] - 0.1 * (M - m) * I;
        } else {
            for (auto& x : out.B) x = x + 0.25 * ((M * I) - x);
            for (auto& x : out.C) x = x + 0.25 * ((M * I) - x);
        }
    }
    if (!ok) throw GenerationError("summed-balance repair exhausted retries");
    out.D.insert(out.D.begin(), d1);
    return out;
}

} // namespace gendetail

// Balance-respecting random instance for the sandwich-shaped statements.
// PerIndex keeps A_i + D_i = B_i + C_i exactly (cor24, cor25.*); Summed only
// keeps the totals equal (cor27); MapLevel balances the four normalized
// family averages (main), solving for a single D through a scaled unitary.
inline Instance gen_sandwich(const GenConfig& cfg, int n, Balance balance,
                             const ScalarFunction& f, const std::string& theorem,
                             const std::string& variant = "X1") {
    cfg.validate();
    Rng rng(cfg.seed);
    InstanceData d;
    d.m = cfg.m;
    d.M = cfg.M;
    d.function = f;
    d.theorem = theorem;
    d.variant = variant;

    if (balance == Balance::PerIndex) {
        auto lists = gendetail::per_index_sandwich(rng, cfg, n);
        d.A = std::move(lists.A);
        d.B = std::move(lists.B);
        d.C = std::move(lists.C);
        d.D = std::move(lists.D);
        if (theorem == "cor24" || theorem.rfind("cor25", 0) == 0 || theorem == "jm")
            d.families.emplace("phi", rand_unital_family(rng, n, cfg.dim));
        return Instance(std::move(d));
    }
    if (balance == Balance::Summed) {
        auto lists = gendetail::summed_sandwich(rng, cfg, n);
        d.A = std::move(lists.A);
        d.B = std::move(lists.B);
        d.C = std::move(lists.C);
        d.D = std::move(lists.D);
        return Instance(std::move(d));
    }

    // MapLevel: independent family sizes per role, D solved exactly.
    double m = cfg.m, M = cfg.M, spread = cfg.effective_spread();
    int dim = cfg.dim;
    HermitianMatrix I = HermitianMatrix::identity(dim);
    int n1 = static_cast<int>(rng.uniform_int(1, std::max(1, n)));
    int n3 = static_cast<int>(rng.uniform_int(1, std::max(1, n)));
    int n4 = static_cast<int>(rng.uniform_int(1, std::max(1, n)));
    double alpha = rng.uniform(0.5, 2.0), beta = rng.uniform(0.5, 2.0),
           gamma = rng.uniform(0.5, 2.0), delta = rng.uniform(0.5, 2.0);

    auto scale_family = [&](MapFamily base, double w) {
        std::vector<PositiveLinearMap> maps;
        for (const auto& phi : base.maps()) {
            std::vector<Eigen::MatrixXcd> ks = phi.kraus();
            for (auto& k : ks) k *= std::sqrt(w);
            maps.emplace_back(phi.dim_in(), phi.dim_out(), std::move(ks));
        }
        return MapFamily(std::move(maps), w);
    };
    MapFamily famA = scale_family(rand_unital_family(rng, n1, dim), alpha);
    MapFamily famC = scale_family(rand_unital_family(rng, n3, dim), gamma);
    MapFamily famB = scale_family(rand_unital_family(rng, n4, dim), beta);
    Eigen::MatrixXcd Q = gendetail::random_unitary(rng, dim);
    MapFamily famD(
        {PositiveLinearMap(dim, dim, {Eigen::MatrixXcd(std::sqrt(delta) * Q)})}, delta);

    std::vector<HermitianMatrix> Al, Bl, Cl;
    for (int i = 0; i < n1; ++i)
        Al.push_back((m * I) - spread * random_psd_contraction(rng, dim));
    for (int i = 0; i < n3; ++i)
        Cl.push_back((m * I) + (M - m) * random_psd_contraction(rng, dim));
    for (int i = 0; i < n4; ++i)
        Bl.push_back((m * I) + (M - m) * random_psd_contraction(rng, dim));

    bool ok = false;
    HermitianMatrix r_target = HermitianMatrix::zero(dim);
    for (int r = 0; r < cfg.max_retries; ++r) {
        r_target = family_apply_normalized(famC, Cl) + family_apply_normalized(famB, Bl) -
                   family_apply_normalized(famA, Al);
        if (gendetail::lambda_min(r_target) >= M) {
            ok = true;
            break;
        }
        if (!cfg.spectrum_floor) {
            for (auto& x : Al) x = x - 0.1 * (M - m) * I;
        } else {
            for (auto& x : Cl) x = x + 0.25 * ((M * I) - x);
            for (auto& x : Bl) x = x + 0.25 * ((M * I) - x);
        }
    }
    if (!ok) throw GenerationError("map-level balance repair exhausted retries");
    // famD conjugates by Q, so D = Q* R Q makes the normalized D-average
    // exactly R and the level balance exact.
    HermitianMatrix D = HermitianMatrix::from_eigen(Q.adjoint() * r_target.to_eigen() * Q);

    d.A = std::move(Al);
    d.B = std::move(Bl);
    d.C = std::move(Cl);
    d.D = {D};
    d.families.emplace("A", famA);
    d.families.emplace("B", famB);
    d.families.emplace("C", famC);
    d.families.emplace("D", famD);
    return Instance(std::move(d));
}

// A below mI, D = 2 mid - A above MI with mid random in [mI, MI]: an Omega
// member by construction. Same floor-aware repair as the sandwich.
inline std::pair<HermitianMatrix, HermitianMatrix> gen_omega_pair(const GenConfig& cfg,
                                                                  Rng& rng) {
    double m = cfg.m, M = cfg.M, spread = cfg.effective_spread();
    int dim = cfg.dim;
    HermitianMatrix I = HermitianMatrix::identity(dim);
    HermitianMatrix A = (m * I) - spread * random_psd_contraction(rng, dim);
    HermitianMatrix mid = (m * I) + (M - m) * random_psd_contraction(rng, dim);
    for (int r = 0; r < cfg.max_retries; ++r) {
        HermitianMatrix D = 2.0 * mid - A;
        if (gendetail::lambda_min(D) >= M) return {A, D};
        if (!cfg.spectrum_floor) {
            A = A - 0.1 * (M - m) * I;
        } else {
            mid = mid + 0.25 * ((M * I) - mid);
        }
    }
    throw GenerationError("omega pair repair exhausted retries");
}

inline std::pair<HermitianMatrix, HermitianMatrix> gen_omega_pair(const GenConfig& cfg) {
    cfg.validate();
    Rng rng(cfg.seed);
    return gen_omega_pair(cfg, rng);
}

// n Omega pairs plus a unital family for the midpoint forms; the lambda form
// takes one pair and pulls lambda toward 1/2 until the combination's
// spectrum falls inside [m, M].
inline Instance gen_omega_instance(const GenConfig& cfg, int n, const ScalarFunction& f,
                                   const std::string& form,
                                   std::optional<double> lambda = std::nullopt) {
    cfg.validate();
    Rng rng(cfg.seed);
    InstanceData d;
    d.m = cfg.m;
    d.M = cfg.M;
    d.function = f;

    if (form == "lambda") {
        d.theorem = "omega.lambda";
        auto [A, D] = gen_omega_pair(cfg, rng);
        double lam = lambda.value_or(rng.uniform01());
        for (int r = 0; r < cfg.max_retries; ++r) {
            MapFamily w = convexity_weights_map(lam, cfg.dim);
            HermitianMatrix W = family_apply_normalized(w, {A, D});
            auto [lo, hi] = spectral_bounds(W);
            if (lo >= cfg.m && hi <= cfg.M) break;
            lam = 0.5 + 0.8 * (lam - 0.5);
        }
        d.A = {A};
        d.D = {D};
        d.lambda = lam;
        return Instance(std::move(d));
    }

    d.theorem = (form == "mid-in") ? "omega.mid-in" : "omega.mid-out";
    for (int i = 0; i < n; ++i) {
        auto [A, D] = gen_omega_pair(cfg, rng);
        d.A.push_back(A);
        d.D.push_back(D);
    }
    d.families.emplace("phi", rand_unital_family(rng, n, cfg.dim));
    return Instance(std::move(d));
}

// n PSD contractions scaled by M, blended upward until their sum dominates
// M I. Needs a function with f(0) on the right side of zero.
inline Instance gen_superadditive(const GenConfig& cfg, int n, const ScalarFunction& f) {
    cfg.validate();
    if (!(cfg.M > 0.0)) throw GenerationError("superadditive instances need M > 0");
    Rng rng(cfg.seed);
    int dim = cfg.dim;
    HermitianMatrix I = HermitianMatrix::identity(dim);
    std::vector<HermitianMatrix> ts;
    for (int i = 0; i < n; ++i) ts.push_back(random_psd_contraction(rng, dim));
    bool ok = false;
    for (int r = 0; r < cfg.max_retries; ++r) {
        HermitianMatrix s = HermitianMatrix::zero(dim);
        for (const auto& t : ts) s = s + t;
        if (gendetail::lambda_min(s) >= 1.0) {
            ok = true;
            break;
        }
        for (auto& t : ts) t = t + 0.05 * (I - t);
    }
    if (!ok) throw GenerationError("superadditive repair exhausted retries");
    InstanceData d;
    d.m = 0.0;
    d.M = cfg.M;
    d.function = f;
    d.theorem = "superadd";
    for (const auto& t : ts) d.C.push_back(cfg.M * t);
    return Instance(std::move(d));
}

// n jointly normalized PSD pieces summing to exactly M I.
inline Instance gen_petrovic(const GenConfig& cfg, int n, const ScalarFunction& f) {
    cfg.validate();
    if (!(cfg.M > 0.0)) throw GenerationError("petrovic instances need M > 0");
    Rng rng(cfg.seed);
    int dim = cfg.dim;
    std::vector<HermitianMatrix> gs;
    Eigen::MatrixXcd s = Eigen::MatrixXcd::Zero(dim, dim);
    for (int i = 0; i < n; ++i) {
        HermitianMatrix g =
            random_psd_contraction(rng, dim).shifted(1e-6);
        gs.push_back(g);
        s += g.to_eigen();
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(s);
    if (es.info() != Eigen::Success) throw GenerationError("normalizer eigensolve failed");
    Eigen::MatrixXcd sih = es.eigenvectors() *
                           es.eigenvalues().cwiseSqrt().cwiseInverse().asDiagonal() *
                           es.eigenvectors().adjoint();
    InstanceData d;
    d.m = 0.0;
    d.M = cfg.M;
    d.function = f;
    d.theorem = "petrovic";
    for (const auto& g : gs)
        d.B.push_back(cfg.M * HermitianMatrix::from_eigen(sih * g.to_eigen() * sih));
    return Instance(std::move(d));
}

// n operators in [mI, MI] plus a unital family.
inline Instance gen_jensen_mercer(const GenConfig& cfg, int n, const ScalarFunction& f) {
    cfg.validate();
    Rng rng(cfg.seed);
    int dim = cfg.dim;
    HermitianMatrix I = HermitianMatrix::identity(dim);
    InstanceData d;
    d.m = cfg.m;
    d.M = cfg.M;
    d.function = f;
    d.theorem = "jm";
    for (int i = 0; i < n; ++i)
        d.B.push_back((cfg.m * I) + (cfg.M - cfg.m) * random_psd_contraction(rng, dim));
    d.families.emplace("phi", rand_unital_family(rng, n, dim));
    return Instance(std::move(d));
}

// Sandwich geometry tilted to one of the four side conditions: (i)/(iii)
// inflate D above the balance solution, (ii)/(iv) place D between M I and
// B + C - A (pushing A down, or inflating B and C under a floor, until that
// window exists).
inline Instance gen_monotone(const GenConfig& cfg, const ScalarFunction& f,
                             const std::string& condition) {
    cfg.validate();
    Rng rng(cfg.seed);
    double m = cfg.m, M = cfg.M;
    int dim = cfg.dim;
    HermitianMatrix I = HermitianMatrix::identity(dim);
    auto lists = gendetail::per_index_sandwich(rng, cfg, 1);
    HermitianMatrix A = lists.A[0], B = lists.B[0], C = lists.C[0], D = lists.D[0];

    InstanceData d;
    d.m = m;
    d.M = M;
    d.function = f;
    d.theorem = "monotone." + condition;

    if (condition == "i" || condition == "iii") {
        d.A = {A};
        d.B = {B};
        d.C = {C};
        d.D = {D + rng.uniform01() * (M - m) * random_psd_contraction(rng, dim)};
        return Instance(std::move(d));
    }
    if (condition == "ii" || condition == "iv") {
        bool ok = false;
        for (int r = 0; r < cfg.max_retries; ++r) {
            HermitianMatrix bca = B + C - A;
            if (gendetail::lambda_min(bca - M * I) >= 0.0) {
                ok = true;
                break;
            }
            if (!cfg.spectrum_floor) {
                A = A - 0.1 * (M - m) * I;
            } else {
                B = B + 0.25 * ((M * I) - B);
                C = C + 0.25 * ((M * I) - C);
            }
        }
        if (!ok) throw GenerationError("monotone (ii)/(iv) geometry repair exhausted retries");
        HermitianMatrix bca = B + C - A;
        double t = rng.uniform01();
        d.A = {A};
        d.B = {B};
        d.C = {C};
        d.D = {(M * I) + t * (bca - (M * I))};
        return Instance(std::move(d));
    }
    throw GenerationError("unknown monotone condition \"" + condition + "\"");
}

// Split-exponent instances: I <= A <= mI needs m > 1. Condition i grows D
// from the balance solution and shifts it above M I; condition ii needs
// B + C - A above M I first, then samples D inside that window.
inline Instance gen_power_pairs(const GenConfig& cfg, double p, double q,
                                const std::string& condition) {
    cfg.validate();
    if (!(cfg.m > 1.0)) throw GenerationError("power pairs need m > 1 so that I <= A <= mI");
    Rng rng(cfg.seed);
    double m = cfg.m, M = cfg.M;
    int dim = cfg.dim;
    HermitianMatrix I = HermitianMatrix::identity(dim);
    HermitianMatrix A = I + (m - 1.0) * random_psd_contraction(rng, dim);
    HermitianMatrix B = (m * I) + (M - m) * random_psd_contraction(rng, dim);
    HermitianMatrix C = (m * I) + (M - m) * random_psd_contraction(rng, dim);

    InstanceData d;
    d.m = m;
    d.M = M;
    d.function = ScalarFunction(FunctionSpec::power(p), m, M);
    d.theorem = "power-pairs";
    d.condition = condition;
    d.q = q;

    if (condition == "i") {
        HermitianMatrix D = B + C - A + rng.uniform01() * random_psd_contraction(rng, dim);
        double lo = gendetail::lambda_min(D);
        if (lo < M) D = D.shifted(M - lo); // raising D preserves B + C <= A + D
        d.A = {A};
        d.B = {B};
        d.C = {C};
        d.D = {D};
        return Instance(std::move(d));
    }
    if (condition == "ii") {
        bool ok = false;
        for (int r = 0; r < cfg.max_retries; ++r) {
            if (gendetail::lambda_min(B + C - A - (M * I)) >= 0.0) {
                ok = true;
                break;
            }
            B = B + 0.25 * ((M * I) - B);
            C = C + 0.25 * ((M * I) - C);
        }
        if (!ok) throw GenerationError("power-pairs (ii) geometry repair exhausted retries");
        HermitianMatrix bca = B + C - A;
        d.A = {A};
        d.B = {B};
        d.C = {C};
        d.D = {(M * I) + rng.uniform01() * (bca - (M * I))};
        return Instance(std::move(d));
    }
    throw GenerationError("power-pairs condition must be i or ii");
}

// Random search for operators where f(Phi(A)) and Phi(f(A)) are Loewner
// incomparable. Returns every witness found within the budget; an empty
// result is evidence (not proof) that the pair is always ordered.
struct IncomparableWitness {
    HermitianMatrix a;
    HermitianMatrix lhs; // f(Phi(A))
    HermitianMatrix rhs; // Phi(f(A))
    LoewnerVerdict verdict;
};

inline std::vector<IncomparableWitness> find_incomparable(const ScalarFunction& f,
                                                          const PositiveLinearMap& phi,
                                                          int budget, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<IncomparableWitness> found;
    double lo = f.cert_lo(), hi = f.cert_hi();
    for (int i = 0; i < budget; ++i) {
        HermitianMatrix a =
            (lo * HermitianMatrix::identity(phi.dim_in())) +
            (hi - lo) * random_psd_contraction(rng, phi.dim_in());
        try {
            HermitianMatrix lhs = apply_function(phi.apply(a), f);
            HermitianMatrix rhs = phi.apply(apply_function(a, f));
            LoewnerVerdict v = loewner_compare(lhs, rhs);
            if (v.ordering == Ordering::Incomparable) found.push_back({a, lhs, rhs, v});
        } catch (const DomainError&) {
            continue; // non-unital maps can push the spectrum out of the domain
        }
    }
    return found;
}

} // namespace opineq
