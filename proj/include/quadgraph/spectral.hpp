#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "quadgraph/graph.hpp"

namespace quadgraph {

class CapError : public Error {
public:
    using Error::Error;
};

struct JacobiOptions {
    double off_tol = 1e-10;  // stop once the off-diagonal absolute sum drops below this
    int max_sweeps = 100;
};

/// Full spectrum of a dense symmetric matrix by cyclic Jacobi rotations with
/// the usual threshold schedule. Eigenvalues come back sorted descending with
/// matching eigenvector columns.
struct DenseSpectrum {
    int n = 0;
    std::vector<double> values;   // descending
    std::vector<double> vectors;  // row-major n x n; column j pairs with values[j]
    int sweeps = 0;
};

DenseSpectrum jacobi_eigen_symmetric(std::vector<double> a, int n, const JacobiOptions& opt = {});

struct SpectralReport {
    std::vector<double> eigenvalues;  // descending
    double top = 0.0;
    double second_largest_abs = 0.0;  // max(|λ2|, |λ_min|)
    double bound = 0.0;               // sqrt(d̄ - ā) from the gaussian binomials of (n,k,q)
    double solver_residual = 0.0;     // max_j |A v_j - λ_j v_j|_inf
    double trace_residual = 0.0;      // |Σλ - trace A|
    double energy_residual = 0.0;     // |Σλ² - ΣA²_ij|
    int sweeps = 0;
};

/// Spectrum of the adjacency matrix; refuses graphs above the vertex cap.
SpectralReport compute_spectrum(const OrthGraph& g, size_t vertex_cap = 5000,
                                unsigned threads = 0);

struct IdentityResidual {
    std::int64_t a = 0;  // gaussian_binomial(n-2k, k, q)
    std::int64_t d = 0;  // gaussian_binomial(n-k, k, q)
    /// dim(y ∩ z) -> observed (A²)_{y,z} value -> multiplicity, over unordered
    /// pairs y != z.
    std::map<int, std::map<std::int64_t, std::uint64_t>> histogram;
    std::map<std::int64_t, std::uint64_t> diagonal;  // (A²)_{y,y} value -> count
    std::int64_t max_abs_residual = 0;               // vs aJ + (d-a)I, all entries
    bool transverse_exact = false;  // every dim(y∩z)=0 entry equals a
    std::uint64_t transverse_pairs = 0;
};

/// Exact integer A² via bitset row intersections, bucketed by dim(y ∩ z).
IdentityResidual identity_residual(const OrthGraph& gbar, unsigned threads = 0);

struct InterlacingReport {
    bool holds = false;
    double max_violation = 0.0;  // most negative slack observed
    size_t checked = 0;
};

/// Verifies λ̄_i >= λ''_i >= λ̄_{N-n''+i} for the principal-submatrix pair
/// (Γ□ inside Γ̄). Errors unless the Γ□ vertex set embeds in Γ̄ with
/// identical induced adjacency.
InterlacingReport interlacing_check(const OrthGraph& gsq, const SpectralReport& sq,
                                    const OrthGraph& gbar, const SpectralReport& bar,
                                    double tol = 1e-6);

/// n_* = |V| * secondLargestAbs / d; requires a regular graph with d > 0.
double spectral_gap_threshold(const OrthGraph& g, const SpectralReport& report);

struct EdgeGuarantee {
    bool guaranteed = false;
    double sqrt_xy = 0.0;
    std::optional<std::pair<int, int>> witness;  // x in X, y in Y, adjacent, x != y
};

EdgeGuarantee edge_guarantee(const OrthGraph& g, const std::vector<int>& xs,
                             const std::vector<int>& ys, double n_star);

struct GapTrialReport {
    std::uint64_t seed = 0;
    int trials_requested = 0;
    int trials_run = 0;
    int witnesses_found = 0;
    bool satisfiable = false;  // does any (X, Y) meet sqrt(|X||Y|) > n_*?
    bool all_guaranteed_have_witness = false;
    double n_star = 0.0;
};

/// Seeded Corollary-10 style trials: random (X, Y) with sqrt(|X||Y|) > n_*,
/// each must contain a crossing edge (found exhaustively). When no pair of
/// subsets can satisfy the threshold (|V| <= n_* within 1e-6), the report
/// says so and runs nothing.
GapTrialReport gap_test(const OrthGraph& g, const SpectralReport& report, int trials,
                        std::uint64_t seed);

}  // namespace quadgraph
