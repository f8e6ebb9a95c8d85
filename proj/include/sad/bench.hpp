#pragma once

#include <span>
#include <string>
#include <vector>

#include "sad/models/microgrid.hpp"
#include "sad/sparsity.hpp"

namespace sad {

struct BenchRecord {
    std::string model;
    int N = 0;
    int dim = 0;
    std::string mode;  // "sparse" or "dense"
    long long calls = 0;
    double total_eval_s = 0.0;
    double per_call_us = 0.0;
};

inline constexpr const char* bench_csv_header = "model,N,dim,mode,calls,total_eval_s,per_call_us";

std::string bench_csv_row(const BenchRecord& record);

struct LinearFit {
    double slope = 0.0;
    double intercept = 0.0;
    double r2 = 1.0;
};

LinearFit fit_linear(std::span<const double> x, std::span<const double> y);

// One benchmark call: seed the state as derivative-carrying variables,
// evaluate the microgrid step residual and assemble the CSR Jacobian.
// Timing is median-of-repetitions with one warm-up call; the state is a
// seeded uniform draw so identical seeds give identical work.
BenchRecord bench_microgrid_sparse(const MicrogridParams& params, int N, int reps, unsigned seed);

// Same work in dense mode: every scalar carries a gradient of full length.
BenchRecord bench_microgrid_dense(const MicrogridParams& params, int N, int reps, unsigned seed);

// Jacobians of the identical benchmark evaluation in the two modes, for
// cross-mode equivalence checks.
CsrMatrix bench_jacobian_sparse(const MicrogridParams& params, int N, unsigned seed);
std::vector<std::vector<double>> bench_jacobian_dense(const MicrogridParams& params, int N,
                                                      unsigned seed);

inline constexpr int dense_dim_cap = 20000;

}  // namespace sad
