#pragma once

// Positive linear maps in Kraus form and normalized families of them.
// Positivity is structural: Phi(X) = sum_k K_k X K_k* cannot leave the PSD
// cone, so no semantic positivity testing is ever needed.

#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "opineq/errors.hpp"
#include "opineq/spectral.hpp"

namespace opineq {

class PositiveLinearMap {
public:
    PositiveLinearMap(int dim_in, int dim_out, std::vector<Eigen::MatrixXcd> kraus)
        : dim_in_(dim_in), dim_out_(dim_out), kraus_(std::move(kraus)) {
        if (dim_in_ < 1 || dim_out_ < 1) throw DimensionError("map dimensions must be >= 1");
        if (kraus_.empty()) throw DomainError("a map needs at least one Kraus operator");
        for (const auto& k : kraus_) {
            if (k.rows() != dim_out_ || k.cols() != dim_in_)
                throw DimensionError("Kraus operator shape " + std::to_string(k.rows()) + "x" +
                                     std::to_string(k.cols()) + " does not match map dims " +
                                     std::to_string(dim_out_) + "x" + std::to_string(dim_in_));
        }
    }

    int dim_in() const { return dim_in_; }
    int dim_out() const { return dim_out_; }
    const std::vector<Eigen::MatrixXcd>& kraus() const { return kraus_; }

    HermitianMatrix apply(const HermitianMatrix& x) const {
        if (x.dim() != dim_in_)
            throw DimensionError("map expects dim " + std::to_string(dim_in_) + ", operand has " +
                                 std::to_string(x.dim()));
        Eigen::MatrixXcd xm = x.to_eigen();
        Eigen::MatrixXcd acc = Eigen::MatrixXcd::Zero(dim_out_, dim_out_);
        for (const auto& k : kraus_) acc += k * xm * k.adjoint();
        return HermitianMatrix::from_eigen(acc);
    }

    // Phi(I); a multiple of I exactly when the map fits into a normalized
    // family on its own.
    HermitianMatrix unit_image() const { return apply(HermitianMatrix::identity(dim_in_)); }

private:
    int dim_in_, dim_out_;
    std::vector<Eigen::MatrixXcd> kraus_;
};

inline HermitianMatrix apply_map(const PositiveLinearMap& phi, const HermitianMatrix& x) {
    return phi.apply(x);
}

// Row-selection compression: the single Kraus operator picks the listed rows,
// so applying the map keeps the corresponding principal submatrix. Unital.
inline PositiveLinearMap compression_map(int dim_in, const std::vector<int>& rows) {
    if (rows.empty()) throw DomainError("compression needs at least one row");
    std::vector<bool> seen(static_cast<std::size_t>(dim_in), false);
    for (int r : rows) {
        if (r < 0 || r >= dim_in)
            throw DomainError("row index " + std::to_string(r) + " outside [0, " +
                              std::to_string(dim_in) + ")");
        if (seen[static_cast<std::size_t>(r)])
            throw DomainError("duplicate row index " + std::to_string(r));
        seen[static_cast<std::size_t>(r)] = true;
    }
    Eigen::MatrixXcd k = Eigen::MatrixXcd::Zero(static_cast<int>(rows.size()), dim_in);
    for (std::size_t i = 0; i < rows.size(); ++i) k(static_cast<int>(i), rows[i]) = 1.0;
    return PositiveLinearMap(dim_in, static_cast<int>(rows.size()), {k});
}

inline PositiveLinearMap identity_map(int dim) {
    return PositiveLinearMap(dim, dim, {Eigen::MatrixXcd::Identity(dim, dim)});
}

// X -> w * X as a Kraus map (sqrt(w) I); the degenerate w = 0 map is allowed
// and simply annihilates.
inline PositiveLinearMap scale_map(double w, int dim) {
    if (w < 0.0) throw DomainError("scale weight must be nonnegative");
    return PositiveLinearMap(dim, dim,
                             {std::sqrt(w) * Eigen::MatrixXcd::Identity(dim, dim)});
}

// Family Phi_1..Phi_n with sum_i Phi_i(I) = normalization * I; the
// constructor verifies that identity to 1e-9 * normalization and rejects
// anything else, so a family's constant is always trustworthy downstream.
class MapFamily {
public:
    MapFamily(std::vector<PositiveLinearMap> maps, double normalization)
        : maps_(std::move(maps)), normalization_(normalization) {
        if (maps_.empty()) throw DomainError("a family needs at least one map");
        if (!(normalization_ > 0.0))
            throw DomainError("family normalization must be positive, got " +
                              std::to_string(normalization_));
        int din = maps_.front().dim_in();
        int dout = maps_.front().dim_out();
        for (const auto& m : maps_) {
            if (m.dim_in() != din || m.dim_out() != dout)
                throw DimensionError("family maps must share dimensions");
        }
        HermitianMatrix total = HermitianMatrix::zero(dout);
        for (const auto& m : maps_) total = total + m.unit_image();
        double resid =
            spectral_norm(total - normalization_ * HermitianMatrix::identity(dout));
        if (resid > 1e-9 * normalization_)
            throw DomainError("family normalization violated: |sum Phi_i(I) - " +
                              std::to_string(normalization_) + " I| = " + std::to_string(resid));
    }

    const std::vector<PositiveLinearMap>& maps() const { return maps_; }
    double normalization() const { return normalization_; }
    int dim_in() const { return maps_.front().dim_in(); }
    int dim_out() const { return maps_.front().dim_out(); }
    std::size_t size() const { return maps_.size(); }

    static MapFamily singleton_unital(PositiveLinearMap phi) {
        return MapFamily({std::move(phi)}, 1.0);
    }

private:
    std::vector<PositiveLinearMap> maps_;
    double normalization_;
};

// (1/normalization) * sum_i Phi_i(X_i).
inline HermitianMatrix family_apply_normalized(const MapFamily& fam,
                                               const std::vector<HermitianMatrix>& xs) {
    if (xs.size() != fam.size())
        throw DimensionError("family of " + std::to_string(fam.size()) + " maps applied to " +
                             std::to_string(xs.size()) + " operands");
    HermitianMatrix acc = HermitianMatrix::zero(fam.dim_out());
    for (std::size_t i = 0; i < xs.size(); ++i) acc = acc + fam.maps()[i].apply(xs[i]);
    return (1.0 / fam.normalization()) * acc;
}

// Two-member family {sqrt(lambda) I, sqrt(1-lambda) I} with normalization 1:
// the normalized application of (A, D) is exactly lambda*A + (1-lambda)*D.
inline MapFamily convexity_weights_map(double lambda, int dim) {
    if (lambda < 0.0 || lambda > 1.0)
        throw DomainError("lambda must lie in [0,1], got " + std::to_string(lambda));
    std::vector<PositiveLinearMap> maps;
    maps.push_back(scale_map(lambda, dim));
    maps.push_back(scale_map(1.0 - lambda, dim));
    return MapFamily(std::move(maps), 1.0);
}

} // namespace opineq
