#pragma once

// Scalar function descriptors with curvature certification, and the
// midpoint-defect quantities driving every refinement term.

#include <cmath>
#include <functional>
#include <limits>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "opineq/errors.hpp"

namespace opineq {

enum class Direction { Convex, Concave };

inline const char* to_string(Direction d) {
    return d == Direction::Convex ? "convex" : "concave";
}

// Real interval, possibly unbounded; endpoints may be open (log's domain
// excludes 0, negative powers likewise).
struct Interval {
    double lo = -std::numeric_limits<double>::infinity();
    double hi = std::numeric_limits<double>::infinity();
    bool lo_open = false;
    bool hi_open = false;

    static Interval all() { return {}; }
    static Interval closed(double a, double b) { return {a, b, false, false}; }
    static Interval positive() {
        return {0.0, std::numeric_limits<double>::infinity(), true, false};
    }
    static Interval nonnegative() {
        return {0.0, std::numeric_limits<double>::infinity(), false, false};
    }

    bool contains(double t) const {
        if (t < lo || (lo_open && t <= lo)) return false;
        if (t > hi || (hi_open && t >= hi)) return false;
        return true;
    }

    // Admits t if inside, or within tol*max(1,|t|) of a closed endpoint;
    // open endpoints give no slack (the function blows up there).
    bool admits(double t, double tol) const {
        if (contains(t)) return true;
        double slack = tol * std::max(1.0, std::abs(t));
        if (!lo_open && t >= lo - slack) return t <= hi || (!hi_open && t <= hi + slack);
        if (!hi_open && t <= hi + slack) return t >= lo;
        return false;
    }

    // Pulls a tolerance-admitted value back onto the closed part of the
    // interval so evaluation never sees an out-of-domain argument.
    double clamp(double t) const {
        if (!lo_open && t < lo) return lo;
        if (!hi_open && t > hi) return hi;
        return t;
    }
};

// Parse/serialization-level description of a function, before any interval
// certification. "custom" carries a live callable and cannot round-trip
// through JSON.
struct FunctionSpec {
    enum class Kind { Power, Exp, Log, Affine, Polynomial, Custom };
    Kind kind = Kind::Power;
    double p = 2.0;                    // Power
    double a = 1.0, b = 0.0;           // Affine: a*t + b
    std::vector<double> coeffs;        // Polynomial: coeffs[k] * t^k
    std::function<double(double)> eval;  // Custom
    Interval custom_domain = Interval::all();

    static FunctionSpec power(double p) {
        FunctionSpec s;
        s.kind = Kind::Power;
        s.p = p;
        return s;
    }
    static FunctionSpec exp() {
        FunctionSpec s;
        s.kind = Kind::Exp;
        return s;
    }
    static FunctionSpec log() {
        FunctionSpec s;
        s.kind = Kind::Log;
        return s;
    }
    static FunctionSpec affine(double a, double b) {
        FunctionSpec s;
        s.kind = Kind::Affine;
        s.a = a;
        s.b = b;
        return s;
    }
    static FunctionSpec polynomial(std::vector<double> coeffs) {
        FunctionSpec s;
        s.kind = Kind::Polynomial;
        s.coeffs = std::move(coeffs);
        return s;
    }
    static FunctionSpec custom(std::function<double(double)> f,
                               Interval domain = Interval::all()) {
        FunctionSpec s;
        s.kind = Kind::Custom;
        s.eval = std::move(f);
        s.custom_domain = domain;
        return s;
    }

    Interval natural_domain() const {
        switch (kind) {
            case Kind::Power: {
                double ip;
                bool integral = std::modf(p, &ip) == 0.0;
                if (p < 0.0) return Interval::positive();
                if (!integral) return Interval::nonnegative();
                return Interval::all();
            }
            case Kind::Log:
                return Interval::positive();
            case Kind::Custom:
                return custom_domain;
            default:
                return Interval::all();
        }
    }

    double operator()(double t) const {
        switch (kind) {
            case Kind::Power:
                return std::pow(t, p);
            case Kind::Exp:
                return std::exp(t);
            case Kind::Log:
                return std::log(t);
            case Kind::Affine:
                return a * t + b;
            case Kind::Polynomial: {
                double acc = 0.0;
                for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
                    acc = acc * t + *it;
                return acc;
            }
            case Kind::Custom:
                return eval(t);
        }
        return 0.0;
    }

    std::string describe() const {
        std::ostringstream os;
        switch (kind) {
            case Kind::Power:
                os << "power(" << p << ")";
                break;
            case Kind::Exp:
                os << "exp";
                break;
            case Kind::Log:
                os << "log";
                break;
            case Kind::Affine:
                os << "affine(" << a << "," << b << ")";
                break;
            case Kind::Polynomial: {
                os << "polynomial(";
                for (std::size_t k = 0; k < coeffs.size(); ++k)
                    os << (k ? "," : "") << coeffs[k];
                os << ")";
                break;
            }
            case Kind::Custom:
                os << "custom";
                break;
        }
        return os.str();
    }
};

// A scalar function certified convex or concave on an interval. The
// constructor samples midpoint second differences f(t-h)+f(t+h)-2f(t) on a
// 101-point grid with h = (hi-lo)/100 and derives the direction from their
// signs; a function that is neither (within 1e-9 of scale) is rejected.
class ScalarFunction {
public:
    ScalarFunction(FunctionSpec spec, double cert_lo, double cert_hi)
        : spec_(std::move(spec)), cert_lo_(cert_lo), cert_hi_(cert_hi) {
        if (!(cert_lo < cert_hi))
            throw DomainError("certification interval needs lo < hi, got [" +
                              std::to_string(cert_lo) + ", " + std::to_string(cert_hi) + "]");
        Interval dom = spec_.natural_domain();
        if (!dom.admits(cert_lo, 1e-9) || !dom.admits(cert_hi, 1e-9))
            throw DomainError("certification interval [" + std::to_string(cert_lo) + ", " +
                              std::to_string(cert_hi) + "] escapes the domain of " +
                              spec_.describe());
        certify();
    }

    double operator()(double t) const { return spec_(t); }

    const FunctionSpec& spec() const { return spec_; }
    Direction direction() const { return direction_; }
    Interval domain() const { return spec_.natural_domain(); }
    double cert_lo() const { return cert_lo_; }
    double cert_hi() const { return cert_hi_; }
    std::string describe() const { return spec_.describe(); }

    bool is_affine() const {
        if (spec_.kind == FunctionSpec::Kind::Affine) return true;
        if (spec_.kind == FunctionSpec::Kind::Power && spec_.p == 1.0) return true;
        if (spec_.kind == FunctionSpec::Kind::Polynomial && spec_.coeffs.size() <= 2) return true;
        return false;
    }

    // Same function, re-certified on a different interval (checkers that work
    // on dilated or [0,M] intervals need this).
    ScalarFunction recertified(double lo, double hi) const {
        return ScalarFunction(spec_, lo, hi);
    }

    bool certifies(double lo, double hi) const {
        return cert_lo_ <= lo + 1e-12 && hi <= cert_hi_ + 1e-12;
    }

private:
    void certify() {
        constexpr int kPoints = 101;
        double h = (cert_hi_ - cert_lo_) / (kPoints - 1);
        Interval dom = spec_.natural_domain();
        double scale = 1.0;
        double min_sd = std::numeric_limits<double>::infinity();
        double max_sd = -std::numeric_limits<double>::infinity();
        for (int i = 1; i + 1 < kPoints; ++i) {
            double t = cert_lo_ + i * h;
            double fm = spec_(dom.clamp(t - h));
            double f0 = spec_(dom.clamp(t));
            double fp = spec_(dom.clamp(t + h));
            if (!std::isfinite(fm) || !std::isfinite(f0) || !std::isfinite(fp))
                throw DomainError(spec_.describe() + " is not finite on [" +
                                  std::to_string(cert_lo_) + ", " + std::to_string(cert_hi_) + "]");
            scale = std::max({scale, std::abs(fm), std::abs(f0), std::abs(fp)});
            double sd = fm + fp - 2.0 * f0;
            min_sd = std::min(min_sd, sd);
            max_sd = std::max(max_sd, sd);
        }
        double tol = 1e-9 * scale;
        bool convex_ok = min_sd >= -tol;
        bool concave_ok = max_sd <= tol;
        if (convex_ok)
            direction_ = Direction::Convex;  // affine passes both; convex wins, delta is 0 anyway
        else if (concave_ok)
            direction_ = Direction::Concave;
        else
            throw ConvexityError(spec_.describe() + " is neither convex nor concave on [" +
                                 std::to_string(cert_lo_) + ", " + std::to_string(cert_hi_) +
                                 "] (second differences span [" + std::to_string(min_sd) + ", " +
                                 std::to_string(max_sd) + "])");
    }

    FunctionSpec spec_;
    double cert_lo_, cert_hi_;
    Direction direction_ = Direction::Convex;
};

// Midpoint defect f(m) + f(M) - 2 f((m+M)/2) on [m, M]. Nonnegative for
// convex f, nonpositive for concave; the constructor enforces the sign as a
// consistency check against the certification.
struct DeltaF {
    double value;
    double m;
    double M;
};

inline DeltaF delta_f(const ScalarFunction& f, double m, double M) {
    if (!(m < M))
        throw DomainError("delta_f needs m < M, got m=" + std::to_string(m) +
                          " M=" + std::to_string(M));
    Interval dom = f.domain();
    for (double t : {m, M, (m + M) / 2}) {
        if (!dom.admits(t, 1e-9))
            throw DomainError("delta_f: " + std::to_string(t) + " escapes the domain of " +
                              f.describe());
    }
    double fm = f(dom.clamp(m));
    double fM = f(dom.clamp(M));
    double fc = f(dom.clamp((m + M) / 2));
    double v = fm + fM - 2.0 * fc;
    double scale = std::max({1.0, std::abs(fm), std::abs(fM), std::abs(fc)});
    if (f.certifies(m, M)) {
        if (f.direction() == Direction::Convex && v < -1e-9 * scale)
            throw ConvexityError("delta_f negative (" + std::to_string(v) +
                                 ") for a convex-certified function");
        if (f.direction() == Direction::Concave && v > 1e-9 * scale)
            throw ConvexityError("delta_f positive (" + std::to_string(v) +
                                 ") for a concave-certified function");
    }
    return DeltaF{v, m, M};
}

// Defect on the dilated interval [n*m, n*M]; n=1 reduces to delta_f.
inline DeltaF delta_f_n(const ScalarFunction& f, double m, double M, int n) {
    if (n < 1) throw DomainError("delta_f_n needs n >= 1");
    return delta_f(f, n * m, n * M);
}

// Refined two-point convexity bound: for convex f,
//   f(la*a + (1-la)*b) <= la f(a) + (1-la) f(b)
//                          - min(la,1-la) (f(a)+f(b)-2f((a+b)/2)).
// Returns (lhs, rhs); callers compare with the direction they certified.
inline std::pair<double, double> scalar_refined_convexity(const ScalarFunction& f, double a,
                                                          double b, double lambda) {
    if (lambda < 0.0 || lambda > 1.0)
        throw DomainError("lambda must lie in [0,1], got " + std::to_string(lambda));
    Interval dom = f.domain();
    for (double t : {a, b, (a + b) / 2, lambda * a + (1 - lambda) * b}) {
        if (!dom.admits(t, 1e-9))
            throw DomainError("scalar_refined_convexity: " + std::to_string(t) +
                              " escapes the domain of " + f.describe());
    }
    double lhs = f(dom.clamp(lambda * a + (1 - lambda) * b));
    double pair_defect = f(dom.clamp(a)) + f(dom.clamp(b)) - 2.0 * f(dom.clamp((a + b) / 2));
    double rhs = lambda * f(dom.clamp(a)) + (1 - lambda) * f(dom.clamp(b)) -
                 std::min(lambda, 1 - lambda) * pair_defect;
    return {lhs, rhs};
}

} // namespace opineq
