#pragma once

// Inequality-chain reports: one verdict per link plus the named scalars and
// matrices a reader needs to audit the computation.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "opineq/spectral.hpp"

namespace opineq {

struct ChainLink {
    std::string lhs_label;
    std::string rhs_label;
    LoewnerVerdict verdict;
};

struct InequalityReport {
    // Direction every link is expected to satisfy: LessEq for convex
    // statements, GreaterEq when a concave function reverses the chain.
    Ordering direction = Ordering::LessEq;
    std::vector<ChainLink> chain;
    std::map<std::string, double> scalars;
    std::map<std::string, HermitianMatrix> matrices;
    bool passed = false;

    static bool link_ok(const ChainLink& link, Ordering direction) {
        return link.verdict.ordering == Ordering::Equal || link.verdict.ordering == direction;
    }

    // A link is strict when its gap clears 1e-6 of the comparison scale in
    // the expected direction (rules out equality-case flukes).
    static bool link_strict(const ChainLink& link, Ordering direction) {
        double margin = 1e-6 * link.verdict.scale;
        if (direction == Ordering::LessEq) return link.verdict.min_eig_diff > margin;
        return link.verdict.max_eig_diff < -margin;
    }

    void add_link(std::string lhs_label, std::string rhs_label, const HermitianMatrix& lhs,
                  const HermitianMatrix& rhs, double tol) {
        // Compare in chain order but store the verdict of lhs vs rhs; the
        // expected direction decides what counts as passing.
        ChainLink link{std::move(lhs_label), std::move(rhs_label), loewner_compare(lhs, rhs, tol)};
        chain.push_back(std::move(link));
        recompute_passed();
    }

    void recompute_passed() {
        passed = true;
        for (const auto& link : chain)
            if (!link_ok(link, direction)) passed = false;
    }

    bool all_strict() const {
        for (const auto& link : chain)
            if (!link_strict(link, direction)) return false;
        return !chain.empty();
    }
};

} // namespace opineq
