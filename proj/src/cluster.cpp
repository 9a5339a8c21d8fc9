#include "chromasift/cluster.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "chromasift/error.hpp"
#include "chromasift/rng.hpp"

namespace chromasift {

double squared_distance(const MeanVector& a, const MeanVector& b) {
    double dr = a.r - b.r;
    double dg = a.g - b.g;
    double db = a.b - b.b;
    return dr * dr + dg * dg + db * db;
}

int assign_point(const MeanVector& p, const std::vector<MeanVector>& centroids) {
    int best = 0;
    double best_dist = squared_distance(p, centroids[0]);
    for (std::size_t j = 1; j < centroids.size(); ++j) {
        double d = squared_distance(p, centroids[j]);
        if (d < best_dist) { // strict keeps ties at the lowest index
            best_dist = d;
            best = static_cast<int>(j);
        }
    }
    return best;
}

namespace {

double objective(const std::vector<MeanVector>& points,
                 const std::vector<int>& assignments,
                 const std::vector<MeanVector>& centroids) {
    double total = 0.0;
    for (std::size_t i = 0; i < points.size(); ++i)
        total += squared_distance(points[i], centroids[assignments[i]]);
    return total;
}

// Sample k distinct indices from [0, n) by partial Fisher-Yates.
std::vector<int> sample_distinct(int n, int k, SplitMix64& rng) {
    std::vector<int> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    for (int i = 0; i < k; ++i) {
        int j = i + static_cast<int>(rng.bounded(static_cast<std::uint64_t>(n - i)));
        std::swap(idx[i], idx[j]);
    }
    idx.resize(k);
    return idx;
}

} // namespace

ClusterModel kmeans_fit(const std::vector<MeanVector>& points,
                        const ClusterConfig& config) {
    const int n = static_cast<int>(points.size());
    const int k = config.k;
    if (k < 1) throw Error("k must be >= 1");
    if (config.max_iterations < 1) throw Error("max_iterations must be >= 1");
    if (config.convergence_tolerance < 0.0)
        throw Error("convergence_tolerance must be >= 0");
    if (n < k)
        throw InsufficientPoints("kmeans needs at least k=" + std::to_string(k) +
                                 " points, got N=" + std::to_string(n));
    for (const MeanVector& p : points)
        if (!std::isfinite(p.r) || !std::isfinite(p.g) || !std::isfinite(p.b))
            throw NonFiniteInput("kmeans input contains NaN or infinity");

    SplitMix64 rng(config.seed);
    std::vector<MeanVector> centroids;
    centroids.reserve(k);
    for (int idx : sample_distinct(n, k, rng)) centroids.push_back(points[idx]);

    ClusterModel model;
    model.seed = config.seed;
    std::vector<int> assignments(n, 0);

    for (int iter = 0; iter < config.max_iterations; ++iter) {
        for (int i = 0; i < n; ++i) assignments[i] = assign_point(points[i], centroids);
        model.inertia_trace.push_back(objective(points, assignments, centroids));
        model.iterations_run = iter + 1;

        std::vector<MeanVector> sums(k);
        std::vector<int> counts(k, 0);
        for (int i = 0; i < n; ++i) {
            sums[assignments[i]].r += points[i].r;
            sums[assignments[i]].g += points[i].g;
            sums[assignments[i]].b += points[i].b;
            ++counts[assignments[i]];
        }
        std::vector<MeanVector> updated(k);
        for (int j = 0; j < k; ++j) {
            if (counts[j] > 0) {
                updated[j] = {sums[j].r / counts[j], sums[j].g / counts[j],
                              sums[j].b / counts[j]};
            } else {
                updated[j] = centroids[j]; // reseeded below
            }
        }

        // Reseed each empty cluster to the point farthest from its own
        // centroid (ties -> lowest point index). Moving an unused centroid
        // never raises any point's assigned distance, so the trace stays
        // non-increasing.
        for (int j = 0; j < k; ++j) {
            if (counts[j] > 0) continue;
            int donor = -1;
            double worst = -1.0;
            for (int i = 0; i < n; ++i) {
                if (counts[assignments[i]] <= 1) continue; // keep clusters non-empty
                double d = squared_distance(points[i], updated[assignments[i]]);
                if (d > worst) {
                    worst = d;
                    donor = i;
                }
            }
            if (donor < 0) continue; // all clusters singletons; nothing to take
            updated[j] = points[donor];
            --counts[assignments[donor]];
            assignments[donor] = j;
            counts[j] = 1;
        }

        double displacement = 0.0;
        for (int j = 0; j < k; ++j)
            displacement = std::max(
                displacement, std::sqrt(squared_distance(updated[j], centroids[j])));
        centroids = std::move(updated);
        if (displacement < config.convergence_tolerance) break;
    }

    // Pin the reported assignments to the final centroids.
    for (int i = 0; i < n; ++i) assignments[i] = assign_point(points[i], centroids);
    model.centroids = std::move(centroids);
    model.assignments = std::move(assignments);
    model.inertia = objective(points, model.assignments, model.centroids);
    model.inertia_trace.push_back(model.inertia);
    return model;
}

ClusterModel kmeans_fit_restarts(const std::vector<MeanVector>& points,
                                 const ClusterConfig& config, int restarts) {
    if (restarts < 1) throw Error("restarts must be >= 1");

    SplitMix64 seed_stream(config.seed);
    ClusterModel best;
    bool have_best = false;
    for (int r = 0; r < restarts; ++r) {
        ClusterConfig run = config;
        run.seed = seed_stream.next();
        ClusterModel model = kmeans_fit(points, run);
        if (!have_best || model.inertia < best.inertia) {
            best = std::move(model);
            have_best = true;
        }
    }
    return best;
}

std::vector<bool> rarity_flags(const std::vector<int>& assignments) {
    if (assignments.empty()) throw Error("rarity_flags on empty assignments");

    int max_cluster = *std::max_element(assignments.begin(), assignments.end());
    std::vector<int> sizes(max_cluster + 1, 0);
    for (int a : assignments) ++sizes[a];

    std::vector<bool> flags(assignments.size());
    for (std::size_t i = 0; i < assignments.size(); ++i)
        flags[i] = sizes[assignments[i]] == 1;
    return flags;
}

} // namespace chromasift
