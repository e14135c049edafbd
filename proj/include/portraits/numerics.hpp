#pragma once

#include <complex>
#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "portraits/angle.hpp"
#include "portraits/portrait.hpp"

namespace portraits {

using Complex = std::complex<double>;

/// f_c(z) = conj(z)^d + c
Complex apply_f(int d, Complex c, Complex z);

enum class TraceStatus { Landed, MaxDepth, Diverged, BranchAmbiguity };

std::string to_string(TraceStatus s);

struct TraceOptions {
    int depth = 6000;       // radius levels R -> R^(1/d) before giving up
    int density = 8;        // samples per level
    double R0 = 1e8;
    double landing_tol = 1e-9;
    double ambiguity_factor = 1e-4;
    bool polish = true;     // Newton refinement for periodic rays that converge slowly
};

struct RayTrace {
    Angle angle;
    int degree = 2;
    Complex parameter;
    std::vector<Complex> samples; // from large radius inward
    std::optional<Complex> landing_estimate;
    TraceStatus status = TraceStatus::MaxDepth;
    bool polished = false;
    std::string detail;
};

/// Pulls the ray back from radius R0 through the forward orbit of theta.
RayTrace trace_ray(int d, Complex c, const Angle& theta, const TraceOptions& opts = {});

/// |landing1 - landing2| < tol. Throws TraceFailed unless both rays land.
bool co_landing_numeric(int d, Complex c, const Angle& theta1, const Angle& theta2, double tol,
                        const TraceOptions& opts = {});

/// Newton's method on f^{2p}(z) - z from seed. Throws NoConvergence.
Complex find_periodic_point(int d, Complex c, std::size_t p, Complex seed);

struct NumericTolerances {
    double co_landing = 1e-6;
    double separation = 1e-3;
    double image = 1e-6;
};

struct NumericReport {
    bool ok = true;
    std::vector<RayTrace> traces;                 // one per angle, sorted by angle
    std::vector<std::optional<Complex>> landing;  // per set: first ray's landing point
    std::vector<std::string> failures;
};

/// Traces every ray of P and checks co-landing inside each A_j, separation
/// between different A_j, and f(z_j) = z_{j+1}.
NumericReport verify_portrait_numeric(int d, Complex c, const OrbitPortrait& portrait,
                                      const NumericTolerances& tol = {}, const TraceOptions& opts = {});

/// CSV: angle,depth_index,re,im then a status footer row; 17 significant digits.
void write_trace_csv(const RayTrace& trace, std::ostream& out);

} // namespace portraits
