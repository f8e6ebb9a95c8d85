#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>
#include <vector>

#include "sad/ad_scalar.hpp"

using sad::ADScalar;
using sad::make_variable;
using sad::UnaryFn;

namespace {

std::vector<int> keys_of(const ADScalar& x) {
    std::vector<int> keys;
    for (const auto& [k, d] : x.deps()) keys.push_back(k);
    return keys;
}

double central_diff(const std::function<double(double)>& f, double x) {
    const double h = std::cbrt(std::numeric_limits<double>::epsilon()) * std::max(1.0, std::fabs(x));
    return (f(x + h) - f(x - h)) / (2.0 * h);
}

struct UnarySpec {
    UnaryFn fn;
    std::function<double(double)> eval;
    std::function<double(std::mt19937&)> sample;
};

double signed_uniform(std::mt19937& gen, double lo, double hi) {
    std::uniform_real_distribution<double> mag(lo, hi);
    std::uniform_int_distribution<int> sign(0, 1);
    return (sign(gen) ? 1.0 : -1.0) * mag(gen);
}

}  // namespace

TEST_CASE("make_variable seeds a unit self-dependency") {
    ADScalar x = make_variable(8.0, 0);
    CHECK(x.value() == 8.0);
    CHECK(x.deps().size() == 1);
    CHECK(x.derivative(0) == 1.0);
    CHECK(x.has_var_id());
    CHECK(x.var_id() == 0);
    CHECK_FALSE(x.fixed());

    ADScalar z = make_variable(0.0, 5);
    CHECK(z.value() == 0.0);
    CHECK(z.derivative(5) == 1.0);
    CHECK(z.deps().size() == 1);
}

TEST_CASE("re-registering clears prior dependencies") {
    ADScalar x = make_variable(1.0, 0);
    ADScalar y = make_variable(2.0, 1);
    x += y;  // deps {(0,1),(1,1)}
    CHECK(x.deps().size() == 2);
    x.set_variable_id(3);
    CHECK(x.deps().size() == 1);
    CHECK(x.derivative(3) == 1.0);
}

TEST_CASE("set_variable_id rejects negative ids") {
    ADScalar x(1.0);
    CHECK_THROWS_AS(x.set_variable_id(-1), std::invalid_argument);
}

TEST_CASE("fixed scalars have and keep empty dependencies") {
    ADScalar x = make_variable(2.0 / 3.0, 2);
    x.set_fixed(true);
    CHECK(x.fixed());
    CHECK(x.deps().empty());

    ADScalar y = make_variable(4.0, 1);
    x += y;
    x *= y;
    CHECK(x.deps().empty());

    x.set_fixed(false);
    CHECK(x.deps().empty());  // unfixing does not restore the seed
}

TEST_CASE("copy keeps value and dependencies only, move keeps everything") {
    ADScalar x = make_variable(5.0, 4);
    ADScalar c(x);
    CHECK(c.value() == 5.0);
    CHECK(c.derivative(4) == 1.0);
    CHECK_FALSE(c.has_var_id());
    CHECK_FALSE(c.fixed());

    ADScalar f(3.0);
    f.set_fixed(true);
    ADScalar cf(f);
    CHECK_FALSE(cf.fixed());

    ADScalar m(std::move(x));
    CHECK(m.has_var_id());
    CHECK(m.var_id() == 4);
    CHECK(m.derivative(4) == 1.0);
}

TEST_CASE("assignment semantics") {
    SUBCASE("from a plain value drops dependencies, fixed untouched") {
        ADScalar t = make_variable(5.0, 0);
        t = 3.0;
        CHECK(t.value() == 3.0);
        CHECK(t.deps().empty());
        CHECK_FALSE(t.fixed());

        ADScalar u(1.0);
        u.set_fixed(true);
        u = 7.0;
        CHECK(u.fixed());
    }
    SUBCASE("self-assignment is a no-op") {
        ADScalar t = make_variable(5.0, 0);
        t = *&t;
        CHECK(t.value() == 5.0);
        CHECK(t.derivative(0) == 1.0);
        CHECK(t.var_id() == 0);
    }
    SUBCASE("from a fixed source copies the fixed flag") {
        ADScalar source(2.0);
        source.set_fixed(true);
        ADScalar t = make_variable(1.0, 0);
        t = source;
        CHECK(t.fixed());
        CHECK(t.deps().empty());
        CHECK(t.value() == 2.0);
    }
    SUBCASE("target var_id is untouched by scalar assignment") {
        ADScalar t = make_variable(1.0, 3);
        ADScalar s = make_variable(9.0, 7);
        t = s;
        CHECK(t.var_id() == 3);
        CHECK(t.derivative(7) == 1.0);
        CHECK(t.deps().size() == 1);
    }
}

TEST_CASE("product of independents applies the product rule") {
    ADScalar a = make_variable(2.0, 0);
    ADScalar b = make_variable(3.0, 1);
    ADScalar r = a * b;
    CHECK(r.value() == 6.0);
    CHECK(r.derivative(0) == 3.0);
    CHECK(r.derivative(1) == 2.0);
    CHECK(r.deps().size() == 2);
}

TEST_CASE("constant times difference of independents") {
    ADScalar y = make_variable(20.0, 1);
    ADScalar x = make_variable(8.0, 0);
    ADScalar r = 10.0 * (y - x);
    CHECK(r.value() == 120.0);
    CHECK(r.derivative(0) == -10.0);
    CHECK(r.derivative(1) == 10.0);
}

TEST_CASE("quotient keeps a structurally present zero entry") {
    ADScalar a = make_variable(2.0, 0);
    ADScalar b = make_variable(3.0, 1);
    ADScalar prod = a * b;  // {6, {(0,3),(1,2)}}
    ADScalar r = prod / b;
    CHECK(r.value() == 2.0);
    CHECK(r.derivative(0) == 1.0);
    CHECK(r.derivative(1) == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(r.deps().count(1) == 1);  // key retained although the value is zero
}

TEST_CASE("binary key sets are unions of operand key sets") {
    ADScalar a = make_variable(1.5, 0);
    a += make_variable(-0.5, 2);  // keys {0,2}
    ADScalar b = make_variable(2.5, 1);
    b += make_variable(0.5, 2);  // keys {1,2}
    const std::vector<int> expect = {0, 1, 2};
    CHECK(keys_of(a + b) == expect);
    CHECK(keys_of(a - b) == expect);
    CHECK(keys_of(a * b) == expect);
    CHECK(keys_of(a / b) == expect);
}

TEST_CASE("multiplying by zero keeps the key set") {
    ADScalar x = make_variable(4.0, 0);
    ADScalar r = x * 0.0;
    CHECK(r.value() == 0.0);
    CHECK(r.deps().count(0) == 1);
    CHECK(r.derivative(0) == 0.0);
}

TEST_CASE("comparisons use values only") {
    ADScalar a = make_variable(1.0, 0);
    ADScalar b = make_variable(0.5, 1);
    CHECK(a > b);
    CHECK(b < a);
    CHECK(a != b);

    ADScalar c = make_variable(2.0, 0);
    ADScalar d(2.0);
    CHECK(c == d);
    CHECK(c <= d);
    CHECK(c >= d);

    ADScalar e(-1.0);
    CHECK(e <= 0.0);
    CHECK(0.0 >= e);
}

TEST_CASE("comparison results are invariant under dependency mutation") {
    ADScalar a = make_variable(1.0, 0);
    ADScalar b = make_variable(0.5, 1);
    const bool before = a > b;
    a.scale_dependencies(1e9);
    b.add_dependencies(make_variable(0.0, 7));
    CHECK((a > b) == before);
    CHECK((a == b) == false);
}

TEST_CASE("apply_unary worked examples") {
    ADScalar zero = make_variable(0.0, 0);
    ADScalar s = sin(zero);
    CHECK(s.value() == 0.0);
    CHECK(s.derivative(0) == 1.0);

    ADScalar ten = make_variable(10.0, 0);
    ADScalar l = log10(ten);
    CHECK(l.value() == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(std::fabs(l.derivative(0) - 0.04342944819032518) <= 1e-15);

    ADScalar x(1.0);
    x.add_dependencies(make_variable(0.0, 0));
    x.scale_dependencies(2.0);
    ADScalar mapped = exp(x);  // seed derivative 2 at value 1
    CHECK(mapped.value() == doctest::Approx(std::exp(1.0)).epsilon(1e-15));
    CHECK(mapped.derivative(0) == doctest::Approx(2.0 * std::exp(1.0)).epsilon(1e-15));
}

TEST_CASE("unary derivatives match central differences at random in-domain points") {
    const std::vector<UnarySpec> specs = {
        {UnaryFn::sin, [](double v) { return std::sin(v); },
         [](std::mt19937& g) { return std::uniform_real_distribution<double>(-1.3, 1.3)(g); }},
        {UnaryFn::cos, [](double v) { return std::cos(v); },
         [](std::mt19937& g) { return signed_uniform(g, 0.3, 1.3); }},
        {UnaryFn::tan, [](double v) { return std::tan(v); },
         [](std::mt19937& g) { return std::uniform_real_distribution<double>(-1.2, 1.2)(g); }},
        {UnaryFn::asin, [](double v) { return std::asin(v); },
         [](std::mt19937& g) { return std::uniform_real_distribution<double>(-0.95, 0.95)(g); }},
        {UnaryFn::acos, [](double v) { return std::acos(v); },
         [](std::mt19937& g) { return std::uniform_real_distribution<double>(-0.95, 0.95)(g); }},
        {UnaryFn::atan, [](double v) { return std::atan(v); },
         [](std::mt19937& g) { return std::uniform_real_distribution<double>(-2.0, 2.0)(g); }},
        {UnaryFn::sinh, [](double v) { return std::sinh(v); },
         [](std::mt19937& g) { return std::uniform_real_distribution<double>(-2.0, 2.0)(g); }},
        {UnaryFn::cosh, [](double v) { return std::cosh(v); },
         [](std::mt19937& g) { return signed_uniform(g, 0.3, 2.0); }},
        {UnaryFn::tanh, [](double v) { return std::tanh(v); },
         [](std::mt19937& g) { return std::uniform_real_distribution<double>(-2.0, 2.0)(g); }},
        {UnaryFn::exp, [](double v) { return std::exp(v); },
         [](std::mt19937& g) { return std::uniform_real_distribution<double>(-2.0, 2.0)(g); }},
        {UnaryFn::log, [](double v) { return std::log(v); },
         [](std::mt19937& g) { return std::uniform_real_distribution<double>(0.1, 5.0)(g); }},
        {UnaryFn::log10, [](double v) { return std::log10(v); },
         [](std::mt19937& g) { return std::uniform_real_distribution<double>(0.1, 5.0)(g); }},
        {UnaryFn::sqrt, [](double v) { return std::sqrt(v); },
         [](std::mt19937& g) { return std::uniform_real_distribution<double>(0.1, 5.0)(g); }},
        {UnaryFn::abs, [](double v) { return std::fabs(v); },
         [](std::mt19937& g) { return signed_uniform(g, 0.1, 3.0); }},
    };
    REQUIRE(specs.size() == sad::all_unary_fns.size());

    std::mt19937 gen(1234);
    for (const UnarySpec& spec : specs) {
        INFO("function ", sad::unary_fn_name(spec.fn));
        for (int trial = 0; trial < 20; ++trial) {
            const double point = spec.sample(gen);
            const ADScalar r = apply_unary(spec.fn, make_variable(point, 0));
            const double fd = central_diff(spec.eval, point);
            CHECK(std::fabs(r.derivative(0) - fd) <= 1e-6 * std::fabs(fd));
            CHECK(r.value() == spec.eval(point));
            CHECK(r.deps().size() == 1);
        }
    }
}

TEST_CASE("binary derivatives match central differences") {
    std::mt19937 gen(77);
    std::uniform_real_distribution<double> dist(-2.0, 2.0);
    const auto ops = std::vector<std::function<double(double, double)>>{
        [](double a, double b) { return a + b; },
        [](double a, double b) { return a - b; },
        [](double a, double b) { return a * b; },
        [](double a, double b) { return a / b; },
    };
    const auto ad_ops = std::vector<std::function<ADScalar(const ADScalar&, const ADScalar&)>>{
        [](const ADScalar& a, const ADScalar& b) { return a + b; },
        [](const ADScalar& a, const ADScalar& b) { return a - b; },
        [](const ADScalar& a, const ADScalar& b) { return a * b; },
        [](const ADScalar& a, const ADScalar& b) { return a / b; },
    };
    for (std::size_t op = 0; op < ops.size(); ++op) {
        for (int trial = 0; trial < 20; ++trial) {
            const double av = dist(gen);
            double bv = dist(gen);
            if (op == 3 && std::fabs(bv) < 0.3) bv += bv >= 0.0 ? 0.5 : -0.5;
            const ADScalar r = ad_ops[op](make_variable(av, 0), make_variable(bv, 1));
            const double fd_a = central_diff([&](double t) { return ops[op](t, bv); }, av);
            const double fd_b = central_diff([&](double t) { return ops[op](av, t); }, bv);
            CHECK(std::fabs(r.derivative(0) - fd_a) <= 1e-6 * std::max(1.0, std::fabs(fd_a)));
            CHECK(std::fabs(r.derivative(1) - fd_b) <= 1e-6 * std::max(1.0, std::fabs(fd_b)));
        }
    }
}

TEST_CASE("evaluation order does not change value or dependencies") {
    const ADScalar x = make_variable(8.0, 0);
    const ADScalar y = make_variable(20.0, 1);
    const ADScalar z = make_variable(2.0 / 3.0, 2);
    const double beta = 28.0;

    const ADScalar direct = x * y - beta * z;
    ADScalar u = x * y;
    const ADScalar via_intermediate = u - beta * z;

    CHECK(direct.value() == via_intermediate.value());
    CHECK(direct.deps() == via_intermediate.deps());
}

TEST_CASE("chain-rule composition collapses to the identity") {
    std::mt19937 gen(5);
    std::uniform_real_distribution<double> dist(0.2, 4.0);
    for (int trial = 0; trial < 10; ++trial) {
        const double point = dist(gen);
        const ADScalar x = make_variable(point, 0);
        const ADScalar roundtrip = exp(log(x));
        CHECK(std::fabs(roundtrip.value() - point) <= 1e-12 * point);
        CHECK(std::fabs(roundtrip.derivative(0) - 1.0) <= 1e-12);
        CHECK(keys_of(roundtrip) == keys_of(x));
    }
}

TEST_CASE("domain errors carry the operation name") {
    const ADScalar bad(-1.0);
    CHECK_THROWS_AS((void)log(bad), sad::DomainError);
    CHECK_THROWS_AS((void)log10(bad), sad::DomainError);
    CHECK_THROWS_AS((void)sqrt(bad), sad::DomainError);
    CHECK_THROWS_AS((void)log(ADScalar(0.0)), sad::DomainError);
    CHECK_THROWS_AS((void)log10(ADScalar(0.0)), sad::DomainError);
    CHECK_THROWS_AS((void)asin(ADScalar(1.5)), sad::DomainError);
    CHECK_THROWS_AS((void)acos(ADScalar(-1.5)), sad::DomainError);
    CHECK_THROWS_AS((void)tan(ADScalar(std::numbers::pi / 2.0)), sad::DomainError);

    try {
        (void)log(bad);
        FAIL("expected a domain error");
    } catch (const sad::DomainError& e) {
        CHECK(e.operation() == "log");
    }
}

TEST_CASE("division by a zero value is a domain error") {
    ADScalar a = make_variable(1.0, 0);
    const ADScalar zero(0.0);
    CHECK_THROWS_AS((void)(a / zero), sad::DomainError);
    CHECK_THROWS_AS(a /= 0.0, sad::DomainError);
    try {
        (void)(a / zero);
        FAIL("expected a domain error");
    } catch (const sad::DomainError& e) {
        CHECK(e.operation() == "divide");
    }
}

TEST_CASE("abs derivative branches, including the zero point") {
    CHECK(abs(make_variable(2.0, 0)).derivative(0) == 1.0);
    CHECK(abs(make_variable(-2.0, 0)).derivative(0) == -1.0);
    CHECK(abs(make_variable(0.0, 0)).derivative(0) == -1.0);
}

TEST_CASE("scale_dependencies worked examples") {
    ADScalar base(1.0);
    base.add_dependencies(make_variable(0.0, 0));
    base.add_dependencies(make_variable(0.0, 3));
    base.scale_dependencies(2.0);  // {(0,2),(3,2)}

    ADScalar probe = base;
    probe.scale_dependencies(0.5);
    CHECK(probe.derivative(0) == 1.0);
    CHECK(probe.derivative(3) == 1.0);

    ADScalar zeroed = base;
    zeroed.scale_dependencies(0.0);
    CHECK(zeroed.deps().size() == 2);
    CHECK(zeroed.derivative(0) == 0.0);
    CHECK(zeroed.derivative(3) == 0.0);

    ADScalar same = base;
    same.scale_dependencies(1.0);
    CHECK(same.deps() == base.deps());
}

TEST_CASE("add_dependencies overwrites colliding keys") {
    ADScalar u(1.0);
    ADScalar v(2.0);
    v.add_dependencies(make_variable(0.0, 1));
    v.scale_dependencies(3.0);  // v deps {(1,3)}

    u.add_dependencies(v);
    CHECK(u.deps().size() == 1);
    CHECK(u.derivative(1) == 3.0);

    ADScalar w(1.0);
    w.add_dependencies(make_variable(0.0, 1));
    w.scale_dependencies(9.0);  // w deps {(1,9)}
    w.add_dependencies(v);
    CHECK(w.derivative(1) == 3.0);

    ADScalar t = make_variable(4.0, 2);
    const ADScalar before = t;
    t.add_dependencies(t);
    CHECK(t.deps() == before.deps());
}

TEST_CASE("derivative lookup of an absent key is zero") {
    const ADScalar x = make_variable(1.0, 0);
    CHECK(x.derivative(9) == 0.0);
}

TEST_CASE("debug print formats") {
    ADScalar fixed(2.5);
    fixed.set_fixed(true);
    CHECK(sad::to_string(fixed) == "2.5 (fixed)");

    const ADScalar var = make_variable(8.0, 0);
    CHECK(sad::to_string(var) == "8 (variable 0)");

    ADScalar expr = make_variable(8.0, 0) * make_variable(2.0, 1);
    std::ostringstream os;
    os << expr;
    CHECK(os.str() == "16 dependencies: [ (0, 2) (1, 8) ]");
}
