#pragma once

#include <cmath>
#include <nlohmann/json.hpp>

#include "quadgraph/spectral.hpp"

namespace quadgraph {

using ordered_json = nlohmann::ordered_json;

/// Eigenvalues and other solver outputs are reported to 1e-8.
inline double round_report(double x) { return std::round(x * 1e8) / 1e8; }

/// Field element as JSON: plain residue for prime fields, coefficient vector
/// (constant term first) for extension fields.
inline ordered_json element_to_json(const FieldElement& e) {
    if (e.spec().degree() == 1) return int(e.index());
    return ordered_json(e.coeffs());
}

inline ordered_json gram_to_json(const QuadraticSpace& q) {
    ordered_json rows = ordered_json::array();
    for (int i = 0; i < q.dim(); ++i) {
        ordered_json row = ordered_json::array();
        for (int j = 0; j < q.dim(); ++j) row.push_back(element_to_json(q.gram().at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

/// Parse a Gram matrix from row-major JSON (ints, or coefficient arrays for
/// extension fields).
QuadraticSpace gram_from_json(const ordered_json& j, const FieldRef& spec);

ordered_json stats_to_json(const OrthGraph& g, const GraphStats& s);
ordered_json spectral_report_to_json(const SpectralReport& r);
ordered_json identity_residual_to_json(const IdentityResidual& r);
ordered_json orbit_result_to_json(const OrbitCheckResult& r);
ordered_json gap_report_to_json(const GapTrialReport& r);

}  // namespace quadgraph
