#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include "sad/bench.hpp"
#include "sad/dense_scalar.hpp"

using sad::BenchRecord;
using sad::DenseADScalar;

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::string part;
    std::istringstream is(text);
    while (std::getline(is, part, sep)) parts.push_back(part);
    return parts;
}

}  // namespace

TEST_CASE("benchmark records keep the timing identity") {
    const sad::MicrogridParams params;
    const BenchRecord r = sad::bench_microgrid_sparse(params, 2, 3, 42);
    CHECK(r.model == "microgrid");
    CHECK(r.N == 2);
    CHECK(r.dim == 26);
    CHECK(r.mode == "sparse");
    CHECK(r.calls == 3);
    CHECK(r.total_eval_s > 0.0);
    CHECK(std::fabs(r.per_call_us - r.total_eval_s * 1e6 / double(r.calls)) <=
          1e-12 * r.per_call_us);
}

TEST_CASE("dense mode reports the same shape") {
    const sad::MicrogridParams params;
    const BenchRecord r = sad::bench_microgrid_dense(params, 1, 2, 7);
    CHECK(r.mode == "dense");
    CHECK(r.dim == 19);
    CHECK(r.calls == 2);
    CHECK(r.per_call_us > 0.0);
}

TEST_CASE("repetition counts below one are rejected") {
    const sad::MicrogridParams params;
    CHECK_THROWS_AS((void)sad::bench_microgrid_sparse(params, 1, 0, 1), sad::UsageError);
    CHECK_THROWS_AS((void)sad::bench_microgrid_dense(params, 1, -3, 1), sad::UsageError);
}

TEST_CASE("dense mode refuses dimensions past the cap") {
    const sad::MicrogridParams params;
    try {
        (void)sad::bench_microgrid_dense(params, 2856, 1, 1);
        FAIL("expected a usage error");
    } catch (const sad::UsageError& e) {
        CHECK(std::string(e.what()).find("20000") != std::string::npos);
    }
    CHECK_NOTHROW((void)sad::bench_microgrid_sparse(params, 2856, 1, 1));
}

TEST_CASE("CSV rows match the documented column order") {
    CHECK(std::string(sad::bench_csv_header) == "model,N,dim,mode,calls,total_eval_s,per_call_us");

    BenchRecord r;
    r.model = "microgrid";
    r.N = 5;
    r.dim = 47;
    r.mode = "sparse";
    r.calls = 4;
    r.total_eval_s = 2.0;
    r.per_call_us = 500000.0;
    CHECK(sad::bench_csv_row(r) == "microgrid,5,47,sparse,4,2,500000");

    r.total_eval_s = 0.125;
    r.per_call_us = 31250.0;
    const auto fields = split(sad::bench_csv_row(r), ',');
    REQUIRE(fields.size() == 7);
    CHECK(fields[5] == "0.125");
    CHECK(fields[6] == "31250");
}

TEST_CASE("identical seeds produce identical benchmark Jacobians") {
    const sad::MicrogridParams params;
    const auto a = sad::bench_jacobian_sparse(params, 2, 42);
    const auto b = sad::bench_jacobian_sparse(params, 2, 42);
    CHECK(a.col_idx == b.col_idx);
    CHECK(a.vals == b.vals);
    CHECK(a.rhs == b.rhs);

    const auto c = sad::bench_jacobian_sparse(params, 2, 43);
    CHECK(c.vals != a.vals);
}

TEST_CASE("sparse and dense modes compute the same Jacobian") {
    const sad::MicrogridParams params;
    const auto sparse = sad::bench_jacobian_sparse(params, 1, 42);
    const auto dense = sad::bench_jacobian_dense(params, 1, 42);
    REQUIRE(sparse.n_rows == 19);
    REQUIRE(dense.size() == 19);
    for (int i = 0; i < 19; ++i) {
        REQUIRE(dense[i].size() == 19);
        for (int j = 0; j < 19; ++j) {
            const double sv = sparse.at(i, j);
            CHECK(std::fabs(dense[i][j] - sv) <= 1e-12 * std::max(1.0, std::fabs(sv)));
        }
    }
}

TEST_CASE("linear fits recover exact lines") {
    const std::vector<double> x = {1.0, 2.0, 3.0, 4.0};
    const std::vector<double> y = {5.0, 8.0, 11.0, 14.0};
    const auto fit = sad::fit_linear(x, y);
    CHECK(fit.slope == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(fit.intercept == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(fit.r2 == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("constant data fits with full explained variance") {
    const std::vector<double> x = {1.0, 2.0, 3.0};
    const std::vector<double> y = {5.0, 5.0, 5.0};
    const auto fit = sad::fit_linear(x, y);
    CHECK(fit.slope == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(fit.r2 == 1.0);
}

TEST_CASE("unusable fit inputs are rejected") {
    const std::vector<double> two = {1.0, 2.0};
    const std::vector<double> three = {1.0, 2.0, 3.0};
    CHECK_THROWS_AS((void)sad::fit_linear(two, three), sad::DimensionError);

    const std::vector<double> one = {1.0};
    CHECK_THROWS_AS((void)sad::fit_linear(one, one), sad::DimensionError);

    const std::vector<double> same_x = {2.0, 2.0, 2.0};
    CHECK_THROWS_AS((void)sad::fit_linear(same_x, three), sad::DimensionError);
}

TEST_CASE("dense scalars follow the same arithmetic rules") {
    const auto x = DenseADScalar::variable(2.0, 3, 0);
    const auto y = DenseADScalar::variable(3.0, 3, 1);

    const auto prod = x * y;
    CHECK(prod.value() == 6.0);
    CHECK(prod.grad() == std::vector<double>{3.0, 2.0, 0.0});

    const auto quot = prod / y;
    CHECK(quot.value() == 2.0);
    CHECK(quot.grad()[0] == 1.0);
    CHECK(quot.grad()[1] == 0.0);

    const auto affine = 2.0 * x - y + 1.0;
    CHECK(affine.value() == 2.0);
    CHECK(affine.grad() == std::vector<double>{2.0, -1.0, 0.0});

    const auto neg = -x;
    CHECK(neg.value() == -2.0);
    CHECK(neg.grad()[0] == -1.0);

    CHECK(x < y);
    CHECK(y > x);
    CHECK(x == DenseADScalar(2.0));
}

TEST_CASE("dense scalar exponential") {
    const auto e = exp(DenseADScalar::variable(1.0, 2, 0));
    CHECK(e.value() == std::exp(1.0));
    CHECK(e.grad() == std::vector<double>{std::exp(1.0), 0.0});
}

TEST_CASE("constants adopt the gradient length of their partner") {
    const auto sum = DenseADScalar(2.0) + DenseADScalar::variable(1.0, 3, 0);
    CHECK(sum.value() == 3.0);
    CHECK(sum.grad() == std::vector<double>{1.0, 0.0, 0.0});
}

TEST_CASE("dense scalar error cases") {
    const auto x = DenseADScalar::variable(1.0, 2, 0);
    CHECK_THROWS_AS((void)(x / DenseADScalar(0.0)), sad::DomainError);
    DenseADScalar y = x;
    CHECK_THROWS_AS(y /= 0.0, sad::DomainError);

    const auto other = DenseADScalar::variable(1.0, 3, 1);
    CHECK_THROWS_AS((void)(x + other), sad::DimensionError);
}
