#pragma once

#include <Eigen/Core>
#include <algorithm>
#include <cmath>
#include <cstdint>
#include <future>
#include <string>
#include <vector>

#include "fcaerr/context.hpp"

namespace fcaerr {

struct BmfParams {
    std::size_t rank = 0;  // 0 = pick default_bmf_rank(|M|)
    std::size_t max_iter = 500;
    std::size_t restarts = 10;
    double lambda_w = 1.1;
    double lambda_h = 1.1;
    std::uint64_t seed = 0;
    double threshold = 0.5;
    double tol = 1e-5;
};

/// Target scale dimension: round(sqrt(|M|)), clamped to a valid rank.
inline std::size_t default_bmf_rank(std::size_t attribute_count) {
    auto k = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(attribute_count))));
    return std::max<std::size_t>(1, k);
}

struct RestartDiagnostics {
    std::uint64_t seed = 0;
    double frobenius = 0.0;              // post-threshold, against the input
    std::size_t iterations = 0;
    std::size_t monotonicity_violations = 0;  // reconstruction error increases > 1e-9
};

struct BinaryFactorization {
    /// |G| x k scale factor; attributes named "0".."k-1".
    FormalContext scale;
    /// k x |M| loading factor; objects named "0".."k-1".
    FormalContext loading;
    double fit_error = 0.0;  // Frobenius of the best run
    std::size_t best_run = 0;
    std::vector<RestartDiagnostics> runs;
};

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

/// Uniform double in the open interval (0,1); platform-independent.
inline double uniform01(std::uint64_t& state) {
    return (static_cast<double>(splitmix64(state) >> 11) + 0.5) * 0x1.0p-53;
}

struct BmfRun {
    Eigen::MatrixXd w, h;
    RestartDiagnostics diag;
};

// Penalized multiplicative updates. Objective:
//
//   f(W,H) = ||V - WH||_F^2 + l_w ||W.W - W||_F^2 + l_h ||H.H - H||_F^2
//
// The penalty x^2(1-x)^2 per entry pulls factors toward {0,1}. Splitting the
// gradient into positive and negative parts gives the usual ratio updates
// (Zhang, Li, Ding, Zhang 2007):
//
//   H <- H . (W'V + 3 l_h H.H) / (W'WH + 2 l_h H.H.H + l_h H)
//   W <- W . (VH' + 3 l_w W.W) / (WHH' + 2 l_w W.W.W + l_w W)
//
// l starts at 1/max_iter and is multiplied by lambda_w / lambda_h each
// iteration, so the reconstruction dominates early and binarization late.
inline BmfRun run_bmf_once(const Eigen::MatrixXd& v, std::size_t rank, const BmfParams& p,
                           std::uint64_t run_seed) {
    constexpr double eps = 1e-12;
    const auto n = v.rows(), m = v.cols();
    const auto k = static_cast<Eigen::Index>(rank);
    std::uint64_t rng = run_seed;
    Eigen::MatrixXd w(n, k), h(k, m);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < k; ++j) w(i, j) = uniform01(rng);
    for (Eigen::Index i = 0; i < k; ++i)
        for (Eigen::Index j = 0; j < m; ++j) h(i, j) = uniform01(rng);

    double lam_w = 1.0 / static_cast<double>(p.max_iter);
    double lam_h = lam_w;
    double prev = (v - w * h).squaredNorm();
    BmfRun run;
    run.diag.seed = run_seed;
    for (std::size_t it = 0; it < p.max_iter; ++it) {
        Eigen::ArrayXXd h2 = h.array().square();
        Eigen::MatrixXd h_num = (w.transpose() * v).array() + 3.0 * lam_h * h2;
        Eigen::MatrixXd h_den =
            (w.transpose() * w * h).array() + 2.0 * lam_h * (h2 * h.array()) + lam_h * h.array() + eps;
        h = (h.array() * h_num.array() / h_den.array()).matrix();

        Eigen::ArrayXXd w2 = w.array().square();
        Eigen::MatrixXd w_num = (v * h.transpose()).array() + 3.0 * lam_w * w2;
        Eigen::MatrixXd w_den =
            (w * (h * h.transpose())).array() + 2.0 * lam_w * (w2 * w.array()) + lam_w * w.array() + eps;
        w = (w.array() * w_num.array() / w_den.array()).matrix();

        lam_w *= p.lambda_w;
        lam_h *= p.lambda_h;
        ++run.diag.iterations;

        double cur = (v - w * h).squaredNorm();
        if (cur > prev + 1e-9) ++run.diag.monotonicity_violations;
        if (prev - cur < p.tol) {
            prev = cur;
            break;
        }
        prev = cur;
    }
    run.w = std::move(w);
    run.h = std::move(h);
    return run;
}

inline FormalContext matrix_to_context(const Eigen::MatrixXd& mat, double threshold,
                                       std::vector<std::string> objects,
                                       std::vector<std::string> attributes) {
    std::vector<Bitset> rows;
    rows.reserve(static_cast<std::size_t>(mat.rows()));
    for (Eigen::Index g = 0; g < mat.rows(); ++g) {
        Bitset r(static_cast<std::size_t>(mat.cols()));
        for (Eigen::Index m = 0; m < mat.cols(); ++m)
            if (mat(g, m) > threshold) r.set(static_cast<std::size_t>(m));
        rows.push_back(std::move(r));
    }
    return FormalContext(std::move(objects), std::move(attributes), std::move(rows));
}

inline std::vector<std::string> numbered_names(std::size_t n) {
    std::vector<std::string> names;
    names.reserve(n);
    for (std::size_t i = 0; i < n; ++i) names.push_back(std::to_string(i));
    return names;
}

}  // namespace detail

/// Boolean product S·H: (g,m) incident iff some factor links them.
inline FormalContext boolean_product(const FormalContext& s, const FormalContext& h) {
    if (s.attribute_count() != h.object_count())
        throw std::invalid_argument("boolean_product: inner dimensions do not match");
    std::vector<Bitset> rows;
    rows.reserve(s.object_count());
    for (std::size_t g = 0; g < s.object_count(); ++g) {
        Bitset r(h.attribute_count());
        s.row(g).for_each([&](std::size_t j) { r |= h.row(j); });
        rows.push_back(std::move(r));
    }
    return FormalContext(s.objects(), h.attributes(), std::move(rows));
}

inline std::size_t mismatch_count(const FormalContext& a, const FormalContext& b) {
    if (a.object_count() != b.object_count() || a.attribute_count() != b.attribute_count())
        throw std::invalid_argument("mismatch_count: shape mismatch");
    std::size_t n = 0;
    for (std::size_t g = 0; g < a.object_count(); ++g) n += (a.row(g) - b.row(g)).count() + (b.row(g) - a.row(g)).count();
    return n;
}

/// sqrt(number of differing cells) — the Frobenius norm of the boolean
/// difference.
inline double frobenius_error(const FormalContext& a, const FormalContext& b) {
    return std::sqrt(static_cast<double>(mismatch_count(a, b)));
}

/// 100 * differing cells / (|G|*|M|).
inline double hamming_percent(const FormalContext& a, const FormalContext& b) {
    double cells = static_cast<double>(a.object_count()) * static_cast<double>(a.attribute_count());
    return 100.0 * static_cast<double>(mismatch_count(a, b)) / cells;
}

/// Penalized-NMF binary factorization. Runs `restarts` independent seeded
/// optimizations, thresholds each result and keeps the factor pair with the
/// lowest post-threshold Frobenius error (ties: lowest restart index).
/// Restarts execute as independent tasks; the reduction is deterministic.
inline BinaryFactorization bmf_factorize(const FormalContext& ctx, const BmfParams& params) {
    std::size_t rank = params.rank ? params.rank : default_bmf_rank(ctx.attribute_count());
    if (rank < 1 || rank > std::min(ctx.object_count(), ctx.attribute_count()))
        throw std::invalid_argument("bmf rank out of range 1..min(|G|,|M|)");
    if (params.max_iter == 0 || params.restarts == 0)
        throw std::invalid_argument("bmf needs positive max_iter and restarts");
    if (!(params.threshold > 0.0 && params.threshold < 1.0))
        throw std::invalid_argument("bmf threshold must lie in (0,1)");
    if (ctx.incidence_count() == 0)
        throw std::invalid_argument(
            "bmf input context has no incidences; a factorization would be trivially empty");

    Eigen::MatrixXd v(static_cast<Eigen::Index>(ctx.object_count()),
                      static_cast<Eigen::Index>(ctx.attribute_count()));
    for (std::size_t g = 0; g < ctx.object_count(); ++g)
        for (std::size_t m = 0; m < ctx.attribute_count(); ++m) v(g, m) = ctx.incident(g, m) ? 1.0 : 0.0;

    std::vector<std::uint64_t> run_seeds(params.restarts);
    std::uint64_t s = params.seed;
    for (std::size_t r = 0; r < params.restarts; ++r) run_seeds[r] = detail::splitmix64(s) ^ r;

    std::vector<detail::BmfRun> runs(params.restarts);
    {
        std::vector<std::future<detail::BmfRun>> futures;
        futures.reserve(params.restarts);
        for (std::size_t r = 0; r < params.restarts; ++r)
            futures.push_back(std::async(std::launch::async, [&, r] {
                return detail::run_bmf_once(v, rank, params, run_seeds[r]);
            }));
        for (std::size_t r = 0; r < params.restarts; ++r) runs[r] = futures[r].get();
    }

    std::vector<std::string> factor_names = detail::numbered_names(rank);
    BinaryFactorization best{
        FormalContext(ctx.objects(), factor_names, std::vector<Bitset>(ctx.object_count(), Bitset(rank))),
        FormalContext(factor_names, ctx.attributes(), std::vector<Bitset>(rank, Bitset(ctx.attribute_count()))),
        0.0, 0, {}};
    bool have_best = false;
    for (std::size_t r = 0; r < params.restarts; ++r) {
        FormalContext sf = detail::matrix_to_context(runs[r].w, params.threshold, ctx.objects(), factor_names);
        FormalContext hf = detail::matrix_to_context(runs[r].h, params.threshold, factor_names, ctx.attributes());
        double err = frobenius_error(ctx, boolean_product(sf, hf));
        runs[r].diag.frobenius = err;
        if (!have_best || err < best.fit_error) {
            best.scale = std::move(sf);
            best.loading = std::move(hf);
            best.fit_error = err;
            best.best_run = r;
            have_best = true;
        }
    }
    for (const detail::BmfRun& r : runs) best.runs.push_back(r.diag);
    return best;
}

}  // namespace fcaerr
