#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cwc/codebook.hpp"

namespace cwc {

struct WeightReport {
    bool pass = false;
    bool empty_warning = false;
    std::vector<long long> bad_indices;
};

/// Pass iff every word has popcount exactly book.w; failures listed by index.
/// An empty book passes vacuously with a warning.
WeightReport check_constant_weight(const CodeBook& book);

struct DistanceResult {
    int d = 0;
    long long i = -1, j = -1; // a witness pair attaining d (full mode)
};

/// Exact minimum pairwise distance via popcount of XOR on packed words.
/// Errors on books with fewer than 2 words.
DistanceResult min_distance(const CodeBook& book);

/// Early-exit mode: certifies min distance >= threshold, or returns the
/// first violating pair and its exact distance.
struct ThresholdResult {
    bool at_least = false;
    int witness_d = 0;
    long long i = -1, j = -1;
};
ThresholdResult min_distance_at_least(const CodeBook& book, int threshold);

/// Ground truth for every table claim: constant weight, no duplicates, and
/// exact minimum distance >= d_claimed.
struct Certificate {
    int n = 0, w = 0;
    long long size = 0;
    int d_exact = 0;
    bool weight_ok = false;
    bool no_duplicates = false;
    bool pass = false;
    long long witness_i = -1, witness_j = -1; // distance witness, or dup pair on failure
    std::vector<std::string> lines() const;
};
Certificate verify_claim(const CodeBook& book);

/// Exact A(n,d,w) for tiny parameters by branch-and-bound maximum clique on
/// the graph of weight-w words with pairwise distance >= d. Refuses (throws)
/// when C(n,w) exceeds `cap` or the search exceeds `node_budget`; never
/// approximates.
long long brute_force_optimum(int n, int d, int w, long long cap = 5000,
                              long long node_budget = 50'000'000);

} // namespace cwc
