#pragma once

#include <cstdint>
#include <vector>

#include "chromasift/features.hpp"

namespace chromasift {

struct ClusterConfig {
    int k = 3;
    std::uint64_t seed = 42;
    int max_iterations = 300;
    // Lloyd stops once the largest centroid displacement of an update step
    // falls below this (or max_iterations is hit).
    double convergence_tolerance = 1e-6;

    bool operator==(const ClusterConfig&) const = default;
};

struct ClusterModel {
    std::vector<MeanVector> centroids;  // k centroids, same units as the input
    std::vector<int> assignments;       // per-point cluster index in [0, k)
    double inertia = 0.0;               // final sum of squared distances
    int iterations_run = 0;
    std::vector<double> inertia_trace;  // objective after each assignment pass
    std::uint64_t seed = 0;

    bool operator==(const ClusterModel&) const = default;
};

// Squared Euclidean distance between two mean vectors.
double squared_distance(const MeanVector& a, const MeanVector& b);

// Index of the nearest centroid by squared Euclidean distance; ties go to the
// lowest index.
int assign_point(const MeanVector& p, const std::vector<MeanVector>& centroids);

// Lloyd's algorithm over 3D mean vectors. Initial centroids are k distinct
// input points sampled without replacement from a SplitMix64 stream seeded
// with config.seed (partial Fisher-Yates). Iterations assign each point to
// its nearest centroid (ties -> lowest cluster index) and recompute centroids
// as cluster means; a cluster that empties is reseeded to the point farthest
// from its own centroid (ties -> lowest point index). A final assignment pass
// pins the reported assignments to the final centroids.
//
// Throws InsufficientPoints if points.size() < k, NonFiniteInput on NaN or
// infinite components.
ClusterModel kmeans_fit(const std::vector<MeanVector>& points,
                        const ClusterConfig& config);

// Run kmeans_fit `restarts` times with seeds drawn from a SplitMix64 stream
// seeded with config.seed and keep the lowest-inertia model (ties -> earliest
// restart).
ClusterModel kmeans_fit_restarts(const std::vector<MeanVector>& points,
                                 const ClusterConfig& config, int restarts);

// flag[i] is true iff the cluster of point i has exactly one member.
std::vector<bool> rarity_flags(const std::vector<int>& assignments);

} // namespace chromasift
