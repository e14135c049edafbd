#include "portraits/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "portraits/errors.hpp"

namespace portraits {

Complex apply_f(int d, Complex c, Complex z) {
    return std::pow(std::conj(z), d) + c;
}

std::string to_string(TraceStatus s) {
    switch (s) {
    case TraceStatus::Landed: return "Landed";
    case TraceStatus::MaxDepth: return "MaxDepth";
    case TraceStatus::Diverged: return "Diverged";
    case TraceStatus::BranchAmbiguity: return "BranchAmbiguity";
    }
    return "?";
}

namespace {

bool finite(Complex z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

// F(z) = f^m(z) - z with both Wirtinger derivatives. An odd number of
// conjugations leaves a nonzero d/dz-bar part, so Newton has to solve the
// real-linear system A*delta + B*conj(delta) = -F.
struct ReturnMap {
    Complex value;
    Complex dz;
    Complex dzbar;
};

ReturnMap return_map(int d, Complex c, std::size_t m, Complex z0) {
    Complex z = z0;
    Complex dz = 1.0;
    Complex dzbar = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        Complex fbar = static_cast<double>(d) * std::pow(std::conj(z), d - 1);
        Complex next_dz = fbar * std::conj(dzbar);
        Complex next_dzbar = fbar * std::conj(dz);
        dz = next_dz;
        dzbar = next_dzbar;
        z = std::pow(std::conj(z), d) + c;
    }
    return {z - z0, dz - 1.0, dzbar};
}

// Residual threshold 1e-12, scaled by the size of the linearisation so that
// long returns with large multipliers are judged by their attainable accuracy.
std::optional<Complex> newton_return(int d, Complex c, std::size_t m, Complex z, int max_iter = 100) {
    for (int it = 0; it < max_iter; ++it) {
        ReturnMap r = return_map(d, c, m, z);
        double scale = std::max(1.0, std::abs(r.dz) + std::abs(r.dzbar));
        if (!finite(r.value)) {
            return std::nullopt;
        }
        if (std::abs(r.value) < 1e-12 * scale) {
            return z;
        }
        Complex rhs = -r.value;
        double det = std::norm(r.dz) - std::norm(r.dzbar);
        if (det == 0.0) {
            return std::nullopt;
        }
        Complex delta = (std::conj(r.dz) * rhs - r.dzbar * std::conj(rhs)) / det;
        z += delta;
        if (!finite(z)) {
            return std::nullopt;
        }
    }
    ReturnMap r = return_map(d, c, m, z);
    if (std::abs(r.value) < 1e-12 * std::max(1.0, std::abs(r.dz) + std::abs(r.dzbar))) {
        return z;
    }
    return std::nullopt;
}

struct AngleOrbit {
    std::vector<Angle> angles;
    std::vector<std::size_t> next;
};

AngleOrbit forward_orbit(const Angle& theta, int d) {
    AngleOrbit o;
    std::map<Angle, std::size_t> seen;
    Angle x = theta;
    while (!seen.count(x)) {
        seen.emplace(x, o.angles.size());
        o.angles.push_back(x);
        x = map_neg_d(x, d);
    }
    for (std::size_t i = 0; i + 1 < o.angles.size(); ++i) {
        o.next.push_back(i + 1);
    }
    o.next.push_back(seen[x]);
    return o;
}

// Slow (parabolic-like) convergence: if the ray tail is already close to a
// repelling-or-parabolic periodic point and keeps approaching it, land there.
std::optional<Complex> polish_landing(int d, Complex c, const Angle& theta, const std::vector<Complex>& pts,
                                      int density) {
    if (!is_periodic(theta, d)) {
        return std::nullopt;
    }
    const std::size_t q = period(theta, d);
    const std::size_t stride = q * static_cast<std::size_t>(density);
    if (pts.size() <= 3 * stride + 1) {
        return std::nullopt;
    }
    const Complex tail = pts.back();
    for (std::size_t m = 1; m <= q; ++m) {
        if (q % m != 0) {
            continue;
        }
        std::optional<Complex> z = newton_return(d, c, m, tail);
        if (!z || std::abs(*z - tail) > 0.05) {
            continue;
        }
        const std::size_t last = pts.size() - 1;
        bool approaching = true;
        for (std::size_t k = 0; k < 3 && approaching; ++k) {
            approaching = std::abs(pts[last - k * stride] - *z) < std::abs(pts[last - (k + 1) * stride] - *z);
        }
        if (approaching) {
            return z;
        }
    }
    return std::nullopt;
}

} // namespace

RayTrace trace_ray(int d, Complex c, const Angle& theta, const TraceOptions& opts) {
    checked_degree(d);
    if (opts.depth < 1 || opts.density < 1) {
        throw std::invalid_argument("trace depth and density must be positive");
    }
    if (!(opts.R0 > std::max(2.0, std::abs(c) + 2.0))) {
        throw std::invalid_argument("R0 must exceed max(2, |c| + 2)");
    }
    RayTrace trace;
    trace.angle = theta;
    trace.degree = d;
    trace.parameter = c;

    const AngleOrbit orb = forward_orbit(theta, d);
    const std::size_t rays = orb.angles.size();
    const int D = opts.density;
    const std::size_t levels = static_cast<std::size_t>(opts.depth + 1) * static_cast<std::size_t>(D);
    std::vector<std::vector<Complex>> pts(rays);
    for (auto& v : pts) {
        v.reserve(std::min<std::size_t>(levels, 1 << 16));
    }

    const double log_r0 = std::log(opts.R0);
    for (int m = 0; m < D; ++m) {
        double rho = std::exp(log_r0 * std::pow(static_cast<double>(d), -static_cast<double>(m) / D));
        for (std::size_t k = 0; k < rays; ++k) {
            double arg = 2.0 * std::numbers::pi * orb.angles[k].to_double();
            pts[k].push_back(std::polar(rho, arg));
        }
    }

    trace.status = TraceStatus::MaxDepth;
    bool stop = false;
    for (std::size_t m = D; m < levels && !stop; ++m) {
        for (std::size_t k = 0; k < rays; ++k) {
            const Complex w = pts[orb.next[k]][m - D];
            const Complex u = w - c;
            const double r = std::pow(std::abs(u), 1.0 / d);
            const double arg0 = std::arg(u) / d;
            const Complex prev = pts[k][m - 1];
            double best = INFINITY;
            double second = INFINITY;
            Complex chosen;
            for (int j = 0; j < d; ++j) {
                Complex cand = std::conj(std::polar(r, arg0 + 2.0 * std::numbers::pi * j / d));
                double dist = std::abs(cand - prev);
                if (dist < best) {
                    second = best;
                    best = dist;
                    chosen = cand;
                } else if (dist < second) {
                    second = dist;
                }
            }
            if (!finite(chosen)) {
                trace.status = TraceStatus::Diverged;
                trace.detail = "non-finite pullback at level " + std::to_string(m);
                stop = true;
                break;
            }
            if (second - best < opts.ambiguity_factor * r) {
                trace.status = TraceStatus::BranchAmbiguity;
                trace.detail = "ray " + orb.angles[k].str() + " passes near a precritical point at level " +
                               std::to_string(m);
                stop = true;
                break;
            }
            pts[k].push_back(chosen);
        }
        if (!stop && (m + 1) % D == 0 && m >= 2 * static_cast<std::size_t>(D)) {
            if (std::abs(pts[0][m] - pts[0][m - D]) < opts.landing_tol) {
                trace.status = TraceStatus::Landed;
                trace.landing_estimate = pts[0][m];
                stop = true;
            }
        }
    }

    trace.samples = std::move(pts[0]);
    if (trace.status == TraceStatus::MaxDepth && opts.polish) {
        if (auto z = polish_landing(d, c, theta, trace.samples, D)) {
            trace.status = TraceStatus::Landed;
            trace.landing_estimate = *z;
            trace.polished = true;
            trace.detail = "landing point refined by Newton's method";
        }
    }
    return trace;
}

bool co_landing_numeric(int d, Complex c, const Angle& theta1, const Angle& theta2, double tol,
                        const TraceOptions& opts) {
    RayTrace a = trace_ray(d, c, theta1, opts);
    RayTrace b = trace_ray(d, c, theta2, opts);
    for (const RayTrace* t : {&a, &b}) {
        if (t->status != TraceStatus::Landed) {
            throw TraceFailed("ray " + t->angle.str() + ": " + to_string(t->status) +
                              (t->detail.empty() ? "" : " (" + t->detail + ")"));
        }
    }
    return std::abs(*a.landing_estimate - *b.landing_estimate) < tol;
}

Complex find_periodic_point(int d, Complex c, std::size_t p, Complex seed) {
    checked_degree(d);
    if (p == 0) {
        throw std::invalid_argument("period must be at least 1");
    }
    if (auto z = newton_return(d, c, 2 * p, seed, 200)) {
        return *z;
    }
    std::ostringstream msg;
    msg << "Newton's method for period " << p << " did not converge from " << seed;
    throw NoConvergence(msg.str());
}

NumericReport verify_portrait_numeric(int d, Complex c, const OrbitPortrait& portrait, const NumericTolerances& tol,
                                      const TraceOptions& opts) {
    NumericReport report;
    const std::size_t p = portrait.period();
    std::map<Angle, std::size_t> trace_of;
    for (const Angle& a : portrait.all_angles()) {
        trace_of.emplace(a, report.traces.size());
        report.traces.push_back(trace_ray(d, c, a, opts));
        const RayTrace& t = report.traces.back();
        if (t.status != TraceStatus::Landed) {
            report.failures.push_back("ray " + a.str() + " did not land: " + to_string(t.status) +
                                      (t.detail.empty() ? "" : " (" + t.detail + ")"));
        }
    }
    auto landing = [&](const Angle& a) { return report.traces[trace_of.at(a)].landing_estimate; };
    auto fmt = [](Complex z) {
        std::ostringstream s;
        s.precision(10);
        s << z.real() << (z.imag() < 0 ? "" : "+") << z.imag() << "i";
        return s.str();
    };

    report.landing.resize(p);
    for (std::size_t j = 0; j < p; ++j) {
        const AngleSet& s = portrait.set(j);
        report.landing[j] = landing(s[0]);
        for (std::size_t a = 0; a < s.size(); ++a) {
            for (std::size_t b = a + 1; b < s.size(); ++b) {
                auto za = landing(s[a]);
                auto zb = landing(s[b]);
                if (za && zb && std::abs(*za - *zb) >= tol.co_landing) {
                    report.failures.push_back("rays " + s[a].str() + " and " + s[b].str() + " land apart: " +
                                              fmt(*za) + " vs " + fmt(*zb));
                }
            }
        }
    }
    for (std::size_t i = 0; i < p; ++i) {
        for (std::size_t j = i + 1; j < p; ++j) {
            if (report.landing[i] && report.landing[j] &&
                std::abs(*report.landing[i] - *report.landing[j]) <= tol.separation) {
                report.failures.push_back("A_" + std::to_string(i + 1) + " and A_" + std::to_string(j + 1) +
                                          " land at the same point " + fmt(*report.landing[i]));
            }
        }
    }
    for (std::size_t j = 0; j < p; ++j) {
        const auto& from = report.landing[j];
        const auto& to = report.landing[(j + 1) % p];
        if (from && to && std::abs(apply_f(d, c, *from) - *to) >= tol.image) {
            report.failures.push_back("f maps the landing point of A_" + std::to_string(j + 1) + " to " +
                                      fmt(apply_f(d, c, *from)) + ", not " + fmt(*to));
        }
    }
    report.ok = report.failures.empty();
    return report;
}

void write_trace_csv(const RayTrace& trace, std::ostream& out) {
    std::ostringstream buf;
    buf.precision(17);
    buf << "angle,depth_index,re,im\n";
    const std::string angle = trace.angle.str();
    for (std::size_t i = 0; i < trace.samples.size(); ++i) {
        buf << angle << ',' << i << ',' << trace.samples[i].real() << ',' << trace.samples[i].imag() << '\n';
    }
    buf << "status," << to_string(trace.status) << ',';
    if (trace.landing_estimate) {
        buf << trace.landing_estimate->real() << ',' << trace.landing_estimate->imag();
    } else {
        buf << ',';
    }
    buf << '\n';
    out << buf.str();
}

} // namespace portraits
