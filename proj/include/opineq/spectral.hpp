#pragma once

// Hermitian matrices, eigendecomposition, functional calculus and the
// Loewner-order comparison every inequality check is built on.

#include <algorithm>
#include <cmath>
#include <complex>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "opineq/errors.hpp"
#include "opineq/scalar_function.hpp"

namespace opineq {

using Complex = std::complex<double>;

class HermitianMatrix {
public:
    // Row-major entries; construction rejects anything that is not Hermitian
    // within 1e-12 * max(1, largest |entry|).
    HermitianMatrix(int dim, std::vector<Complex> entries) : dim_(dim), a_(std::move(entries)) {
        if (dim_ < 1) throw DimensionError("matrix dimension must be >= 1");
        if (a_.size() != static_cast<std::size_t>(dim_) * dim_)
            throw DimensionError("expected " + std::to_string(dim_ * dim_) + " entries, got " +
                                 std::to_string(a_.size()));
        double amax = 1.0;
        for (const auto& z : a_) amax = std::max(amax, std::abs(z));
        double tol = 1e-12 * amax;
        for (int i = 0; i < dim_; ++i) {
            for (int j = i; j < dim_; ++j) {
                Complex d = at(i, j) - std::conj(at(j, i));
                if (std::abs(d) > tol) {
                    std::ostringstream os;
                    os << "not Hermitian at (" << i << "," << j << "): asymmetry " << std::abs(d)
                       << " exceeds " << tol;
                    throw DomainError(os.str());
                }
            }
        }
        // Tidy rounding asymmetry so later arithmetic sees an exactly
        // Hermitian value.
        for (int i = 0; i < dim_; ++i) {
            (*this)(i, i) = Complex(at(i, i).real(), 0.0);
            for (int j = i + 1; j < dim_; ++j) {
                Complex avg = (at(i, j) + std::conj(at(j, i))) / 2.0;
                (*this)(i, j) = avg;
                (*this)(j, i) = std::conj(avg);
            }
        }
    }

    static HermitianMatrix zero(int dim) {
        return HermitianMatrix(dim, std::vector<Complex>(static_cast<std::size_t>(dim) * dim));
    }

    static HermitianMatrix identity(int dim) {
        HermitianMatrix h = zero(dim);
        for (int i = 0; i < dim; ++i) h(i, i) = 1.0;
        return h;
    }

    static HermitianMatrix diagonal(const std::vector<double>& d) {
        HermitianMatrix h = zero(static_cast<int>(d.size()));
        for (int i = 0; i < h.dim(); ++i) h(i, i) = d[static_cast<std::size_t>(i)];
        return h;
    }

    static HermitianMatrix real(int dim, const std::vector<double>& entries) {
        std::vector<Complex> z(entries.begin(), entries.end());
        return HermitianMatrix(dim, std::move(z));
    }

    // Trusted factory for internally computed results: symmetrizes, so the
    // type invariant holds by construction instead of by rejection.
    static HermitianMatrix from_eigen(const Eigen::MatrixXcd& m) {
        Eigen::MatrixXcd h = (m + m.adjoint()) / 2.0;
        int n = static_cast<int>(h.rows());
        std::vector<Complex> entries(static_cast<std::size_t>(n) * n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) entries[static_cast<std::size_t>(i) * n + j] = h(i, j);
        return HermitianMatrix(n, std::move(entries));
    }

    Eigen::MatrixXcd to_eigen() const {
        Eigen::MatrixXcd m(dim_, dim_);
        for (int i = 0; i < dim_; ++i)
            for (int j = 0; j < dim_; ++j) m(i, j) = at(i, j);
        return m;
    }

    int dim() const { return dim_; }
    const Complex& at(int i, int j) const { return a_[static_cast<std::size_t>(i) * dim_ + j]; }
    const std::vector<Complex>& entries() const { return a_; }

    friend HermitianMatrix operator+(const HermitianMatrix& x, const HermitianMatrix& y) {
        check_same_dim(x, y, "operator+");
        HermitianMatrix r = x;
        for (std::size_t k = 0; k < r.a_.size(); ++k) r.a_[k] += y.a_[k];
        return r;
    }
    friend HermitianMatrix operator-(const HermitianMatrix& x, const HermitianMatrix& y) {
        check_same_dim(x, y, "operator-");
        HermitianMatrix r = x;
        for (std::size_t k = 0; k < r.a_.size(); ++k) r.a_[k] -= y.a_[k];
        return r;
    }
    friend HermitianMatrix operator*(double s, const HermitianMatrix& x) {
        HermitianMatrix r = x;
        for (auto& z : r.a_) z *= s;
        return r;
    }
    HermitianMatrix operator-() const { return -1.0 * (*this); }

    // this + c*I
    HermitianMatrix shifted(double c) const {
        HermitianMatrix r = *this;
        for (int i = 0; i < dim_; ++i) r(i, i) += c;
        return r;
    }

private:
    Complex& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * dim_ + j]; }

    static void check_same_dim(const HermitianMatrix& x, const HermitianMatrix& y,
                               const char* what) {
        if (x.dim() != y.dim())
            throw DimensionError(std::string(what) + ": dimensions " + std::to_string(x.dim()) +
                                 " vs " + std::to_string(y.dim()));
    }

    int dim_;
    std::vector<Complex> a_;
};

// Eigenvalues ascending with the matching unitary of column eigenvectors.
// Construction re-checks reconstruction and orthonormality so a buggy solver
// cannot leak through.
struct SpectralDecomposition {
    std::vector<double> eigenvalues;
    Eigen::MatrixXcd eigenvectors;

    SpectralDecomposition(std::vector<double> vals, Eigen::MatrixXcd vecs,
                          const Eigen::MatrixXcd& source)
        : eigenvalues(std::move(vals)), eigenvectors(std::move(vecs)) {
        int n = static_cast<int>(eigenvalues.size());
        Eigen::VectorXd lam(n);
        for (int i = 0; i < n; ++i) lam(i) = eigenvalues[static_cast<std::size_t>(i)];
        double hnorm = std::max(1.0, source.operatorNorm());
        double recon =
            (eigenvectors * lam.asDiagonal() * eigenvectors.adjoint() - source).operatorNorm();
        if (recon > 1e-10 * hnorm)
            throw SolverError("spectral reconstruction residual " + std::to_string(recon) +
                              " exceeds tolerance (dim " + std::to_string(n) + ")");
        double ortho =
            (eigenvectors.adjoint() * eigenvectors - Eigen::MatrixXcd::Identity(n, n)).norm();
        if (ortho > 1e-10 * n)
            throw SolverError("eigenvector columns not orthonormal, residual " +
                              std::to_string(ortho));
    }
};

inline SpectralDecomposition eigendecompose(const HermitianMatrix& h) {
    Eigen::MatrixXcd m = h.to_eigen();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m);
    if (solver.info() != Eigen::Success) {
        // Rough conditioning hint for the diagnostic: ratio of extreme
        // absolute row sums.
        double rmax = 0.0, rmin = std::numeric_limits<double>::infinity();
        for (int i = 0; i < h.dim(); ++i) {
            double s = m.row(i).cwiseAbs().sum();
            rmax = std::max(rmax, s);
            rmin = std::min(rmin, s);
        }
        throw SolverError("eigensolver failed to converge (dim " + std::to_string(h.dim()) +
                          ", row-sum spread " + std::to_string(rmax / std::max(rmin, 1e-300)) +
                          ")");
    }
    // Eigen returns ascending eigenvalues already; keep the solver's own
    // (deterministic) vector order.
    std::vector<double> vals(solver.eigenvalues().data(),
                             solver.eigenvalues().data() + h.dim());
    return SpectralDecomposition(std::move(vals), solver.eigenvectors(), m);
}

// f applied through the spectrum: U diag(f(lambda)) U*. Every eigenvalue must
// sit in f's domain within 1e-9 relative slack.
inline HermitianMatrix apply_function(const HermitianMatrix& h, const ScalarFunction& f) {
    SpectralDecomposition sd = eigendecompose(h);
    Interval dom = f.domain();
    int n = h.dim();
    Eigen::VectorXd fv(n);
    for (int i = 0; i < n; ++i) {
        double lam = sd.eigenvalues[static_cast<std::size_t>(i)];
        if (!dom.admits(lam, 1e-9))
            throw DomainError("eigenvalue " + std::to_string(lam) + " escapes the domain of " +
                              f.describe());
        fv(i) = f(dom.clamp(lam));
    }
    Eigen::MatrixXcd out = sd.eigenvectors * fv.asDiagonal() * sd.eigenvectors.adjoint();
    return HermitianMatrix::from_eigen(out);
}

// Same spectral reconstruction for plain callables (no domain metadata);
// internal workhorse for |t - c| and friends.
template <typename F>
HermitianMatrix apply_pointwise(const HermitianMatrix& h, F&& f) {
    SpectralDecomposition sd = eigendecompose(h);
    int n = h.dim();
    Eigen::VectorXd fv(n);
    for (int i = 0; i < n; ++i) fv(i) = f(sd.eigenvalues[static_cast<std::size_t>(i)]);
    Eigen::MatrixXcd out = sd.eigenvectors * fv.asDiagonal() * sd.eigenvectors.adjoint();
    return HermitianMatrix::from_eigen(out);
}

inline std::pair<double, double> spectral_bounds(const HermitianMatrix& h) {
    SpectralDecomposition sd = eigendecompose(h);
    return {sd.eigenvalues.front(), sd.eigenvalues.back()};
}

inline double spectral_norm(const HermitianMatrix& h) {
    auto [lo, hi] = spectral_bounds(h);
    return std::max(std::abs(lo), std::abs(hi));
}

enum class Ordering { LessEq, GreaterEq, Equal, Incomparable };

inline const char* to_string(Ordering o) {
    switch (o) {
        case Ordering::LessEq: return "LessEq";
        case Ordering::GreaterEq: return "GreaterEq";
        case Ordering::Equal: return "Equal";
        case Ordering::Incomparable: return "Incomparable";
    }
    return "?";
}

// Outcome of comparing X against Y through the spectrum of Y - X. The scale
// s = max(1, |X|_2, |Y|_2) makes the tolerance relative; witness holds the
// unit eigenvector of the violating extreme eigenvalue when one exists.
struct LoewnerVerdict {
    Ordering ordering = Ordering::Equal;
    double min_eig_diff = 0.0;   // lambda_min(Y - X)
    double max_eig_diff = 0.0;   // lambda_max(Y - X)
    double scale = 1.0;
    std::vector<Complex> witness;
};

inline double default_tolerance() { return 1e-9; }

inline LoewnerVerdict loewner_compare(const HermitianMatrix& x, const HermitianMatrix& y,
                                      double tol = default_tolerance()) {
    if (x.dim() != y.dim())
        throw DimensionError("loewner_compare: dimensions " + std::to_string(x.dim()) + " vs " +
                             std::to_string(y.dim()));
    if (tol < 0.0) throw DomainError("tolerance must be nonnegative");
    HermitianMatrix d = y - x;
    SpectralDecomposition sd = eigendecompose(d);
    LoewnerVerdict v;
    v.min_eig_diff = sd.eigenvalues.front();
    v.max_eig_diff = sd.eigenvalues.back();
    v.scale = std::max({1.0, spectral_norm(x), spectral_norm(y)});
    double slack = tol * v.scale;
    bool lo_ok = v.min_eig_diff >= -slack;  // nothing of Y - X below zero
    bool hi_ok = v.max_eig_diff <= slack;   // nothing above zero
    if (lo_ok && hi_ok)
        v.ordering = Ordering::Equal;
    else if (lo_ok)
        v.ordering = Ordering::LessEq;
    else if (hi_ok)
        v.ordering = Ordering::GreaterEq;
    else
        v.ordering = Ordering::Incomparable;
    if (!lo_ok) {
        v.witness.assign(sd.eigenvectors.col(0).data(), sd.eigenvectors.col(0).data() + d.dim());
    } else if (!hi_ok) {
        v.witness.assign(sd.eigenvectors.col(d.dim() - 1).data(),
                         sd.eigenvectors.col(d.dim() - 1).data() + d.dim());
    }
    return v;
}

// |H - cI| via functional calculus; always positive semidefinite.
inline HermitianMatrix abs_deviation(const HermitianMatrix& h, double c) {
    return apply_pointwise(h, [c](double t) { return std::abs(t - c); });
}

// Entrywise closeness helper (absolute tolerance); for tests and goldens.
inline double max_entry_distance(const HermitianMatrix& x, const HermitianMatrix& y) {
    if (x.dim() != y.dim())
        throw DimensionError("max_entry_distance: dimension mismatch");
    double d = 0.0;
    for (std::size_t k = 0; k < x.entries().size(); ++k)
        d = std::max(d, std::abs(x.entries()[k] - y.entries()[k]));
    return d;
}

} // namespace opineq
