#include "toral/circle.hpp"

#include "toral/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace toral {

namespace {

double dist_to_int(double x) { return std::fabs(x - std::round(x)); }

double frac(double x) {
    double f = x - std::floor(x);
    return f >= 1.0 ? 0.0 : f;
}

}  // namespace

long degree(const CircleLift& lift) {
    double diff = lift.g(1.0) - lift.g(0.0);
    double rounded = std::round(diff);
    if (std::fabs(diff - rounded) > 1e-9)
        throw invalid_lift_error("g(1) - g(0) is not an integer: not a lift");
    return static_cast<long>(rounded);
}

ConjugacyResult conjugacy_to_power_map(const CircleLift& lift, double tol,
                                       long max_iter) {
    const long d = degree(lift);
    if (std::labs(d) < 2)
        throw out_of_regime_error("conjugacy iteration requires |degree| >= 2");
    const long N = lift.sample_count;
    if (N < 8) throw std::invalid_argument("sample count too small");

    // Sampled lift values; monotonicity check (strictly, at sample scale).
    std::vector<double> gs(static_cast<std::size_t>(N) + 1);
    for (long k = 0; k <= N; ++k)
        gs[static_cast<std::size_t>(k)] = lift.g(static_cast<double>(k) / N);
    const double dir = d > 0 ? 1.0 : -1.0;
    for (long k = 0; k < N; ++k)
        if (dir * (gs[static_cast<std::size_t>(k) + 1] - gs[static_cast<std::size_t>(k)]) <= 0)
            throw invalid_lift_error("lift samples are not strictly monotone");

    // Evaluate a sampled function in M = {f continuous, f(t+1) = f(t)+1}
    // at an arbitrary real, by periodicity and linear interpolation.
    auto eval = [N](const std::vector<double>& f, double x) {
        double fl = std::floor(x);
        double t = x - fl;
        double pos = t * N;
        long idx = std::min(static_cast<long>(pos), N - 1);
        double w = pos - idx;
        double v = f[static_cast<std::size_t>(idx)] * (1.0 - w) +
                   f[static_cast<std::size_t>(idx) + 1] * w;
        return v + fl;
    };

    ConjugacyResult res;
    res.h_samples.resize(static_cast<std::size_t>(N) + 1);
    for (long k = 0; k <= N; ++k)
        res.h_samples[static_cast<std::size_t>(k)] = static_cast<double>(k) / N;

    std::vector<double> next(static_cast<std::size_t>(N) + 1);
    for (long it = 0; it < max_iter; ++it) {
        double step = 0.0;
        for (long k = 0; k <= N; ++k) {
            double v = eval(res.h_samples, gs[static_cast<std::size_t>(k)]) / d;
            step = std::max(step, std::fabs(v - res.h_samples[static_cast<std::size_t>(k)]));
            next[static_cast<std::size_t>(k)] = v;
        }
        res.h_samples.swap(next);
        res.step_sizes.push_back(step);
        res.iterations = it + 1;
        if (step < tol) break;
    }

    double resid = 0.0;
    for (long k = 0; k <= N; ++k)
        resid = std::max(resid,
                         dist_to_int(eval(res.h_samples, gs[static_cast<std::size_t>(k)]) -
                                     d * res.h_samples[static_cast<std::size_t>(k)]));
    res.residual = resid;
    return res;
}

namespace {

struct Vec2 {
    double x = 0, y = 0;
};
struct Mat2 {
    double a = 1, b = 0, c = 0, d = 1;  // row-major [[a,b],[c,d]]
    Vec2 apply(Vec2 v) const { return {a * v.x + b * v.y, c * v.x + d * v.y}; }
    Mat2 mul(const Mat2& o) const {
        return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c,
                c * o.b + d * o.d};
    }
    double det() const { return a * d - b * c; }
    Mat2 inverse() const {
        double dd = det();
        return {d / dd, -b / dd, -c / dd, a / dd};
    }
    double smallest_singular_value() const {
        double t = a * a + b * b + c * c + d * d;
        double dd = det();
        double disc = std::max(0.0, t * t - 4.0 * dd * dd);
        double s2 = (t - std::sqrt(disc)) / 2.0;
        return std::sqrt(std::max(0.0, s2));
    }
};

GridCoverResult oracle_1d(double a, double alpha, double center, double r,
                          long N, long M) {
    std::vector<char> hit(static_cast<std::size_t>(N), 0);
    long remaining = N;
    double m = 1.0, t = 0.0;
    const double eps = 1e-9;
    for (long step = 0; step <= M; ++step) {
        double len = std::fabs(m) * 2.0 * r;
        if (len >= 1.0) return {true, step};
        if (len * N >= 1.0) {
            // Image arc (lo, lo+len) mod 1; mark fully contained cells.
            double lo = frac(t + m * center - std::fabs(m) * r);
            long first = static_cast<long>(std::ceil(lo * N - eps));
            long last = static_cast<long>(std::floor((lo + len) * N + eps)) - 1;
            for (long j = first; j <= last; ++j) {
                long cell = ((j % N) + N) % N;
                if (!hit[static_cast<std::size_t>(cell)]) {
                    hit[static_cast<std::size_t>(cell)] = 1;
                    if (--remaining == 0) return {true, step};
                }
            }
        }
        m *= a;
        t = a * t + alpha;
        t = frac(t);
    }
    return {false, M};
}

GridCoverResult oracle_2d(const Mat2& A, Vec2 alpha, Vec2 center, double r,
                          long N, long M) {
    // Rasterize at a finer granularity than the requested grid: a grid cell
    // counts as covered once all its subcells have been inside some forward
    // image (union semantics, matching the covering definition).  Each
    // subcell itself is only marked when it fits entirely inside a single
    // lattice translate of the image parallelogram, so marks never overreach.
    const long F = 4;
    const long R = F * N;
    std::vector<char> hit(static_cast<std::size_t>(R) * R, 0);
    long remaining = R * static_cast<long>(R);
    Mat2 Mi;  // identity
    Vec2 t{0, 0};
    const double margin = r - 1e-9;
    std::vector<std::array<double, 6>> seen;  // repeated-state skip (mod 1)

    for (long step = 0; step <= M; ++step) {
        double smin = Mi.smallest_singular_value();
        if (smin * r >= 0.7072) return {true, step};

        bool repeat = false;
        std::array<double, 6> state{Mi.a, Mi.b, Mi.c, Mi.d, t.x, t.y};
        for (const auto& s : seen) {
            bool same = true;
            for (int j = 0; j < 4 && same; ++j)
                same = std::fabs(state[j] - s[j]) < 1e-9;
            // translations compare on the torus
            same = same && dist_to_int(state[4] - s[4]) < 1e-9 &&
                   dist_to_int(state[5] - s[5]) < 1e-9;
            if (same) {
                repeat = true;
                break;
            }
        }

        // Worth rasterizing only for fresh states while the image is at
        // least one subcell thick.
        if (!repeat && smin * 2.0 * r * R >= 1.0 && std::fabs(Mi.det()) > 1e-250) {
            seen.push_back(state);
            Mat2 inv = Mi.inverse();
            // Gauss-reduced basis of the lattice inv * Z^2, used to pick the
            // candidate integer shifts near each subcell.
            Vec2 b1{inv.a, inv.c}, b2{inv.b, inv.d};
            for (int pass = 0; pass < 64; ++pass) {
                double n1 = b1.x * b1.x + b1.y * b1.y;
                double n2 = b2.x * b2.x + b2.y * b2.y;
                if (n1 > n2) std::swap(b1, b2), std::swap(n1, n2);
                double mu = std::round((b1.x * b2.x + b1.y * b2.y) /
                                       (b1.x * b1.x + b1.y * b1.y));
                if (mu == 0.0) break;
                b2.x -= mu * b1.x;
                b2.y -= mu * b1.y;
            }
            double bdet = b1.x * b2.y - b1.y * b2.x;
            // Half-subcell offsets in box coordinates.
            Vec2 dx = inv.apply({0.5 / R, 0.0});
            Vec2 dy = inv.apply({0.0, 0.5 / R});

            for (long cy = 0; cy < R; ++cy)
                for (long cx = 0; cx < R; ++cx) {
                    char& cell = hit[static_cast<std::size_t>(cy) * R + cx];
                    if (cell) continue;
                    Vec2 y{(cx + 0.5) / R, (cy + 0.5) / R};
                    Vec2 u = inv.apply({y.x - t.x, y.y - t.y});
                    u.x -= center.x;
                    u.y -= center.y;
                    // Candidate integer shifts from rounding in the reduced
                    // basis; the subcell rectangle (corners, by convexity)
                    // must fit in the box for a single shift.
                    double c1 = std::round((u.x * b2.y - u.y * b2.x) / bdet);
                    double c2 = std::round((b1.x * u.y - b1.y * u.x) / bdet);
                    bool inside = false;
                    for (int o1 = -2; o1 <= 2 && !inside; ++o1)
                        for (int o2 = -2; o2 <= 2 && !inside; ++o2) {
                            double lx = (c1 + o1) * b1.x + (c2 + o2) * b2.x;
                            double ly = (c1 + o1) * b1.y + (c2 + o2) * b2.y;
                            double px = u.x - lx, py = u.y - ly;
                            inside = std::fabs(px + dx.x + dy.x) <= margin &&
                                     std::fabs(py + dx.y + dy.y) <= margin &&
                                     std::fabs(px + dx.x - dy.x) <= margin &&
                                     std::fabs(py + dx.y - dy.y) <= margin &&
                                     std::fabs(px - dx.x + dy.x) <= margin &&
                                     std::fabs(py - dx.y + dy.y) <= margin &&
                                     std::fabs(px - dx.x - dy.x) <= margin &&
                                     std::fabs(py - dx.y - dy.y) <= margin;
                        }
                    if (inside) {
                        cell = 1;
                        if (--remaining == 0) return {true, step};
                    }
                }
        }
        Mi = A.mul(Mi);
        t = {A.a * t.x + A.b * t.y + alpha.x, A.c * t.x + A.d * t.y + alpha.y};
        t = {frac(t.x), frac(t.y)};
    }
    return {false, M};
}

}  // namespace

GridCoverResult grid_transitivity_oracle(const IntMatrix& A,
                                         const std::vector<double>& alpha,
                                         const std::vector<double>& box_center,
                                         double box_radius, long resolution,
                                         long max_steps) {
    const long n = A.rows();
    if (!A.is_square() || (n != 1 && n != 2))
        throw out_of_regime_error("grid oracle supports n in {1,2}");
    if (resolution < 2 || resolution > 2048)
        throw out_of_regime_error("grid resolution must be in [2, 2048]");
    if (max_steps < 1 || max_steps > 200)
        throw out_of_regime_error("step budget must be in [1, 200]");
    if (alpha.size() != static_cast<std::size_t>(n) ||
        box_center.size() != static_cast<std::size_t>(n))
        throw std::invalid_argument("dimension mismatch");
    if (!(box_radius > 0.0 && box_radius <= 0.5))
        throw std::invalid_argument("box radius must be in (0, 0.5]");
    if (determinant(A) == 0)
        throw out_of_regime_error("grid oracle requires det A != 0");

    if (n == 1)
        return oracle_1d(static_cast<double>(A(0, 0)), alpha[0], box_center[0],
                         box_radius, resolution, max_steps);
    Mat2 m{static_cast<double>(A(0, 0)), static_cast<double>(A(0, 1)),
           static_cast<double>(A(1, 0)), static_cast<double>(A(1, 1))};
    return oracle_2d(m, {alpha[0], alpha[1]}, {box_center[0], box_center[1]},
                     box_radius, resolution, max_steps);
}

}  // namespace toral
