#include "sad/bench.hpp"

#include <algorithm>
#include <chrono>
#include <random>

#include "sad/ad_scalar.hpp"
#include "sad/dense_scalar.hpp"
#include "sad/errors.hpp"
#include "sad/num_format.hpp"

namespace sad {

std::string bench_csv_row(const BenchRecord& record) {
    return record.model + "," + std::to_string(record.N) + "," + std::to_string(record.dim) + "," +
           record.mode + "," + std::to_string(record.calls) + "," +
           format_double(record.total_eval_s) + "," + format_double(record.per_call_us);
}

LinearFit fit_linear(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size()) throw DimensionError("fit_linear: length mismatch");
    const std::size_t n = x.size();
    if (n < 2) throw DimensionError("fit_linear: need at least two points");

    double mean_x = 0.0, mean_y = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        mean_x += x[i];
        mean_y += y[i];
    }
    mean_x /= static_cast<double>(n);
    mean_y /= static_cast<double>(n);

    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        sxx += (x[i] - mean_x) * (x[i] - mean_x);
        sxy += (x[i] - mean_x) * (y[i] - mean_y);
    }
    if (sxx == 0.0) throw DimensionError("fit_linear: degenerate abscissa");

    LinearFit fit;
    fit.slope = sxy / sxx;
    fit.intercept = mean_y - fit.slope * mean_x;

    double ss_res = 0.0, ss_tot = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double predicted = fit.intercept + fit.slope * x[i];
        ss_res += (y[i] - predicted) * (y[i] - predicted);
        ss_tot += (y[i] - mean_y) * (y[i] - mean_y);
    }
    fit.r2 = ss_tot == 0.0 ? 1.0 : 1.0 - ss_res / ss_tot;
    return fit;
}

namespace {

constexpr double bench_alpha = 1e5;
constexpr double bench_time = 0.0123;

volatile double bench_sink = 0.0;

std::vector<double> bench_state(int dim, unsigned seed) {
    std::mt19937 gen(seed);
    std::uniform_real_distribution<double> dist(-0.5, 0.5);
    std::vector<double> state(dim);
    for (double& x : state) x = dist(gen);
    return state;
}

double median_seconds(std::vector<double>& times) {
    std::sort(times.begin(), times.end());
    const std::size_t n = times.size();
    if (n % 2 == 1) return times[n / 2];
    return 0.5 * (times[n / 2 - 1] + times[n / 2]);
}

CsrMatrix sparse_call(const MicrogridModel& model, const std::vector<double>& state) {
    const int dim = model.dimension();
    std::vector<ADScalar> vars = make_variables(state);
    std::vector<ADScalar> vdot(dim, ADScalar(0.0));
    for (int i = 0; i < dim; ++i) {
        vdot[i] = vars[i];
        vdot[i] *= bench_alpha;
    }
    std::vector<ADScalar> res(dim, ADScalar(0.0));
    model.residual(std::span<const ADScalar>(vdot), std::span<const ADScalar>(vars), bench_time,
                   std::span<ADScalar>(res));
    return assemble_csr(std::span<const ADScalar>(res), dim);
}

std::vector<DenseADScalar> dense_call(const MicrogridModel& model,
                                      const std::vector<double>& state) {
    const int dim = model.dimension();
    std::vector<DenseADScalar> vars;
    vars.reserve(dim);
    for (int i = 0; i < dim; ++i) vars.push_back(DenseADScalar::variable(state[i], dim, i));
    std::vector<DenseADScalar> vdot(dim, DenseADScalar(0.0));
    for (int i = 0; i < dim; ++i) {
        vdot[i] = vars[i];
        vdot[i] *= bench_alpha;
    }
    std::vector<DenseADScalar> res(dim, DenseADScalar(0.0));
    microgrid_residual<DenseADScalar>(std::span<DenseADScalar>(res),
                                      std::span<const DenseADScalar>(vdot),
                                      std::span<const DenseADScalar>(vars), bench_time,
                                      model.params(), model.layout());
    return res;
}

template <typename Call>
BenchRecord run_bench(const std::string& mode, const MicrogridParams& params, int N, int reps,
                      unsigned seed, Call call) {
    if (reps < 1) throw UsageError("benchmark repetitions must be at least 1");
    MicrogridModel model(params, N);
    const std::vector<double> state = bench_state(model.dimension(), seed);

    call(model, state);  // warm-up
    std::vector<double> times;
    times.reserve(reps);
    for (int r = 0; r < reps; ++r) {
        const auto begin = std::chrono::steady_clock::now();
        call(model, state);
        const auto end = std::chrono::steady_clock::now();
        times.push_back(std::chrono::duration<double>(end - begin).count());
    }

    const double per_call_s = median_seconds(times);
    BenchRecord record;
    record.model = "microgrid";
    record.N = N;
    record.dim = model.dimension();
    record.mode = mode;
    record.calls = reps;
    record.per_call_us = per_call_s * 1e6;
    record.total_eval_s = per_call_s * static_cast<double>(reps);
    return record;
}

}  // namespace

BenchRecord bench_microgrid_sparse(const MicrogridParams& params, int N, int reps, unsigned seed) {
    return run_bench("sparse", params, N, reps, seed,
                     [](const MicrogridModel& model, const std::vector<double>& state) {
                         CsrMatrix jac = sparse_call(model, state);
                         bench_sink = bench_sink + jac.vals[0];
                     });
}

BenchRecord bench_microgrid_dense(const MicrogridParams& params, int N, int reps, unsigned seed) {
    const int dim = 12 + 7 * N;
    if (dim > dense_dim_cap)
        throw UsageError("dense mode caps the dimension at " + std::to_string(dense_dim_cap) +
                         ", requested " + std::to_string(dim));
    return run_bench("dense", params, N, reps, seed,
                     [](const MicrogridModel& model, const std::vector<double>& state) {
                         std::vector<DenseADScalar> res = dense_call(model, state);
                         bench_sink = bench_sink + res[0].value();
                     });
}

CsrMatrix bench_jacobian_sparse(const MicrogridParams& params, int N, unsigned seed) {
    MicrogridModel model(params, N);
    return sparse_call(model, bench_state(model.dimension(), seed));
}

std::vector<std::vector<double>> bench_jacobian_dense(const MicrogridParams& params, int N,
                                                      unsigned seed) {
    MicrogridModel model(params, N);
    const int dim = model.dimension();
    if (dim > dense_dim_cap)
        throw UsageError("dense mode caps the dimension at " + std::to_string(dense_dim_cap) +
                         ", requested " + std::to_string(dim));
    std::vector<DenseADScalar> res = dense_call(model, bench_state(dim, seed));
    std::vector<std::vector<double>> jac(dim, std::vector<double>(dim, 0.0));
    for (int i = 0; i < dim; ++i) {
        const std::vector<double>& grad = res[i].grad();
        for (std::size_t j = 0; j < grad.size(); ++j) jac[i][j] = grad[j];
    }
    return jac;
}

}  // namespace sad
