#pragma once

#include <array>
#include <cmath>
#include <map>
#include <ostream>
#include <string>

#include "sad/errors.hpp"
#include "sad/num_format.hpp"

namespace sad {

enum class UnaryFn {
    sin,
    cos,
    tan,
    asin,
    acos,
    atan,
    sinh,
    cosh,
    tanh,
    exp,
    log,
    log10,
    sqrt,
    abs,
};

inline constexpr std::array<UnaryFn, 14> all_unary_fns = {
    UnaryFn::sin,  UnaryFn::cos,  UnaryFn::tan,  UnaryFn::asin, UnaryFn::acos,
    UnaryFn::atan, UnaryFn::sinh, UnaryFn::cosh, UnaryFn::tanh, UnaryFn::exp,
    UnaryFn::log,  UnaryFn::log10, UnaryFn::sqrt, UnaryFn::abs,
};

inline const char* unary_fn_name(UnaryFn f) {
    switch (f) {
        case UnaryFn::sin:   return "sin";
        case UnaryFn::cos:   return "cos";
        case UnaryFn::tan:   return "tan";
        case UnaryFn::asin:  return "asin";
        case UnaryFn::acos:  return "acos";
        case UnaryFn::atan:  return "atan";
        case UnaryFn::sinh:  return "sinh";
        case UnaryFn::cosh:  return "cosh";
        case UnaryFn::tanh:  return "tanh";
        case UnaryFn::exp:   return "exp";
        case UnaryFn::log:   return "log";
        case UnaryFn::log10: return "log10";
        case UnaryFn::sqrt:  return "sqrt";
        case UnaryFn::abs:   return "abs";
    }
    return "?";
}

class ADScalar;
ADScalar apply_unary(UnaryFn f, const ADScalar& x);

// Scalar carrying a value plus a sparse map from independent-variable index
// to partial derivative. Arithmetic propagates both through the chain rule;
// the key set of a binary result is the union of the operand key sets, kept
// even where a derivative value works out to zero (structural sparsity).
//
// A scalar registered as variable i holds the seed {(i, 1.0)}. A fixed
// scalar participates as a pure constant: its map is empty and stays empty.
class ADScalar {
public:
    using Deps = std::map<int, double>;
    static constexpr int invalid_var_id = -1;

    ADScalar() = default;
    explicit ADScalar(double value) : value_(value) {}

    // Copies value and dependencies only; the copy is neither registered nor fixed.
    ADScalar(const ADScalar& other) : value_(other.value_), deps_(other.deps_) {}
    ADScalar(ADScalar&& other) noexcept = default;

    // Copies value, fixed flag and dependencies; keeps its own var_id.
    ADScalar& operator=(const ADScalar& rhs) {
        if (this != &rhs) {
            value_ = rhs.value_;
            fixed_ = rhs.fixed_;
            deps_ = rhs.deps_;
        }
        return *this;
    }

    ADScalar& operator=(ADScalar&& rhs) noexcept {
        if (this != &rhs) {
            value_ = rhs.value_;
            fixed_ = rhs.fixed_;
            deps_ = std::move(rhs.deps_);
        }
        return *this;
    }

    // Assigning a plain value drops all dependencies; the fixed flag is untouched.
    ADScalar& operator=(double v) {
        value_ = v;
        deps_.clear();
        return *this;
    }

    double value() const { return value_; }
    const Deps& deps() const { return deps_; }
    bool fixed() const { return fixed_; }
    bool has_var_id() const { return var_id_ != invalid_var_id; }
    int var_id() const { return var_id_; }

    // Registers this scalar as independent variable `id`: any prior
    // dependencies are cleared and the self-seed (id, 1.0) installed.
    void set_variable_id(int id) {
        if (id < 0) throw std::invalid_argument("variable id must be nonnegative");
        deps_.clear();
        var_id_ = id;
        fixed_ = false;
        deps_[id] = 1.0;
    }

    // Marking fixed clears dependencies; unmarking does not restore the seed.
    void set_fixed(bool fixed) {
        fixed_ = fixed;
        if (fixed_) deps_.clear();
    }

    double derivative(int key) const {
        auto it = deps_.find(key);
        return it == deps_.end() ? 0.0 : it->second;
    }

    void scale_dependencies(double c) {
        for (auto& [key, der] : deps_) der *= c;
    }

    // Copies every entry of v into this map; v's values win on key collisions.
    void add_dependencies(const ADScalar& v) {
        if (fixed_) return;
        for (const auto& [key, der] : v.deps_) deps_[key] = der;
    }

    ADScalar& operator+=(const ADScalar& rhs) {
        if (!fixed_) {
            for (const auto& [key, der] : rhs.deps_) deps_[key] += der;
        }
        value_ += rhs.value_;
        return *this;
    }

    ADScalar& operator-=(const ADScalar& rhs) {
        if (!fixed_) {
            for (const auto& [key, der] : rhs.deps_) deps_[key] -= der;
        }
        value_ -= rhs.value_;
        return *this;
    }

    ADScalar& operator*=(const ADScalar& rhs) {
        if (!fixed_) {
            const double u = value_;
            if (this == &rhs) {
                for (auto& [key, der] : deps_) der *= 2.0 * u;
            } else {
                const double v = rhs.value_;
                for (auto& [key, der] : deps_) der *= v;
                for (const auto& [key, der] : rhs.deps_) deps_[key] += u * der;
            }
        }
        value_ *= rhs.value_;
        return *this;
    }

    ADScalar& operator/=(const ADScalar& rhs) {
        if (rhs.value_ == 0.0) throw DomainError("divide", "division by zero value");
        if (!fixed_) {
            const double u = value_;
            if (this == &rhs) {
                for (auto& [key, der] : deps_) der = 0.0;
            } else {
                const double v = rhs.value_;
                for (auto& [key, der] : deps_) der /= v;
                for (const auto& [key, der] : rhs.deps_) deps_[key] -= u * der / (v * v);
            }
        }
        value_ /= rhs.value_;
        return *this;
    }

    ADScalar& operator+=(double c) {
        value_ += c;
        return *this;
    }

    ADScalar& operator-=(double c) {
        value_ -= c;
        return *this;
    }

    ADScalar& operator*=(double c) {
        for (auto& [key, der] : deps_) der *= c;
        value_ *= c;
        return *this;
    }

    ADScalar& operator/=(double c) {
        if (c == 0.0) throw DomainError("divide", "division by zero value");
        for (auto& [key, der] : deps_) der /= c;
        value_ /= c;
        return *this;
    }

private:
    double value_ = 0.0;
    int var_id_ = invalid_var_id;
    bool fixed_ = false;
    Deps deps_;

    friend ADScalar apply_unary(UnaryFn f, const ADScalar& x);
};

inline ADScalar make_variable(double value, int id) {
    ADScalar s(value);
    s.set_variable_id(id);
    return s;
}

inline ADScalar& scale_dependencies(ADScalar& x, double c) {
    x.scale_dependencies(c);
    return x;
}

inline ADScalar& add_dependencies(ADScalar& u, const ADScalar& v) {
    u.add_dependencies(v);
    return u;
}

// ---- arithmetic --------------------------------------------------------

inline ADScalar operator+(const ADScalar& a, const ADScalar& b) { ADScalar r(a); r += b; return r; }
inline ADScalar operator-(const ADScalar& a, const ADScalar& b) { ADScalar r(a); r -= b; return r; }
inline ADScalar operator*(const ADScalar& a, const ADScalar& b) { ADScalar r(a); r *= b; return r; }
inline ADScalar operator/(const ADScalar& a, const ADScalar& b) { ADScalar r(a); r /= b; return r; }

inline ADScalar operator+(const ADScalar& a, double b) { ADScalar r(a); r += b; return r; }
inline ADScalar operator-(const ADScalar& a, double b) { ADScalar r(a); r -= b; return r; }
inline ADScalar operator*(const ADScalar& a, double b) { ADScalar r(a); r *= b; return r; }
inline ADScalar operator/(const ADScalar& a, double b) { ADScalar r(a); r /= b; return r; }

inline ADScalar operator+(double a, const ADScalar& b) { ADScalar r(b); r += a; return r; }
inline ADScalar operator*(double a, const ADScalar& b) { ADScalar r(b); r *= a; return r; }
inline ADScalar operator-(double a, const ADScalar& b) { ADScalar r(a); r -= b; return r; }
inline ADScalar operator/(double a, const ADScalar& b) { ADScalar r(a); r /= b; return r; }

inline ADScalar operator-(const ADScalar& a) { ADScalar r(a); r *= -1.0; return r; }
inline ADScalar operator+(const ADScalar& a) { return ADScalar(a); }

// ---- comparisons (values only) -----------------------------------------

inline bool operator==(const ADScalar& a, const ADScalar& b) { return a.value() == b.value(); }
inline bool operator!=(const ADScalar& a, const ADScalar& b) { return a.value() != b.value(); }
inline bool operator<(const ADScalar& a, const ADScalar& b) { return a.value() < b.value(); }
inline bool operator>(const ADScalar& a, const ADScalar& b) { return a.value() > b.value(); }
inline bool operator<=(const ADScalar& a, const ADScalar& b) { return a.value() <= b.value(); }
inline bool operator>=(const ADScalar& a, const ADScalar& b) { return a.value() >= b.value(); }

inline bool operator==(const ADScalar& a, double b) { return a.value() == b; }
inline bool operator!=(const ADScalar& a, double b) { return a.value() != b; }
inline bool operator<(const ADScalar& a, double b) { return a.value() < b; }
inline bool operator>(const ADScalar& a, double b) { return a.value() > b; }
inline bool operator<=(const ADScalar& a, double b) { return a.value() <= b; }
inline bool operator>=(const ADScalar& a, double b) { return a.value() >= b; }

inline bool operator==(double a, const ADScalar& b) { return a == b.value(); }
inline bool operator!=(double a, const ADScalar& b) { return a != b.value(); }
inline bool operator<(double a, const ADScalar& b) { return a < b.value(); }
inline bool operator>(double a, const ADScalar& b) { return a > b.value(); }
inline bool operator<=(double a, const ADScalar& b) { return a <= b.value(); }
inline bool operator>=(double a, const ADScalar& b) { return a >= b.value(); }

// ---- math functions ----------------------------------------------------

// Value mapped through f, every derivative entry scaled by f'(value);
// the key set is unchanged.
inline ADScalar apply_unary(UnaryFn f, const ADScalar& x) {
    const double v = x.value();
    double fv = 0.0;
    double dfv = 0.0;
    switch (f) {
        case UnaryFn::sin:
            fv = std::sin(v);
            dfv = std::cos(v);
            break;
        case UnaryFn::cos:
            fv = std::cos(v);
            dfv = -std::sin(v);
            break;
        case UnaryFn::tan: {
            const double c = std::cos(v);
            if (std::fabs(c) < 1e-12)
                throw DomainError("tan", "argument too close to an odd multiple of pi/2");
            fv = std::tan(v);
            dfv = 1.0 / (c * c);
            break;
        }
        case UnaryFn::asin:
            if (v < -1.0 || v > 1.0) throw DomainError("asin", "argument outside [-1, 1]");
            fv = std::asin(v);
            dfv = 1.0 / std::sqrt(1.0 - v * v);
            break;
        case UnaryFn::acos:
            if (v < -1.0 || v > 1.0) throw DomainError("acos", "argument outside [-1, 1]");
            fv = std::acos(v);
            dfv = -1.0 / std::sqrt(1.0 - v * v);
            break;
        case UnaryFn::atan:
            fv = std::atan(v);
            dfv = 1.0 / (1.0 + v * v);
            break;
        case UnaryFn::sinh:
            fv = std::sinh(v);
            dfv = std::cosh(v);
            break;
        case UnaryFn::cosh:
            fv = std::cosh(v);
            dfv = std::sinh(v);
            break;
        case UnaryFn::tanh: {
            const double c = std::cosh(v);
            fv = std::tanh(v);
            dfv = 1.0 / (c * c);
            break;
        }
        case UnaryFn::exp:
            fv = std::exp(v);
            dfv = fv;
            break;
        case UnaryFn::log:
            if (v <= 0.0) throw DomainError("log", "requires a positive argument");
            fv = std::log(v);
            dfv = 1.0 / v;
            break;
        case UnaryFn::log10:
            if (v <= 0.0) throw DomainError("log10", "requires a positive argument");
            fv = std::log10(v);
            dfv = 0.4342944819032518 / v;
            break;
        case UnaryFn::sqrt:
            if (v < 0.0) throw DomainError("sqrt", "requires a nonnegative argument");
            fv = std::sqrt(v);
            dfv = 0.5 / fv;
            break;
        case UnaryFn::abs:
            fv = std::fabs(v);
            dfv = v > 0.0 ? 1.0 : -1.0;
            break;
    }
    ADScalar r(x);
    r.value_ = fv;
    r.scale_dependencies(dfv);
    return r;
}

inline ADScalar sin(const ADScalar& x) { return apply_unary(UnaryFn::sin, x); }
inline ADScalar cos(const ADScalar& x) { return apply_unary(UnaryFn::cos, x); }
inline ADScalar tan(const ADScalar& x) { return apply_unary(UnaryFn::tan, x); }
inline ADScalar asin(const ADScalar& x) { return apply_unary(UnaryFn::asin, x); }
inline ADScalar acos(const ADScalar& x) { return apply_unary(UnaryFn::acos, x); }
inline ADScalar atan(const ADScalar& x) { return apply_unary(UnaryFn::atan, x); }
inline ADScalar sinh(const ADScalar& x) { return apply_unary(UnaryFn::sinh, x); }
inline ADScalar cosh(const ADScalar& x) { return apply_unary(UnaryFn::cosh, x); }
inline ADScalar tanh(const ADScalar& x) { return apply_unary(UnaryFn::tanh, x); }
inline ADScalar exp(const ADScalar& x) { return apply_unary(UnaryFn::exp, x); }
inline ADScalar log(const ADScalar& x) { return apply_unary(UnaryFn::log, x); }
inline ADScalar log10(const ADScalar& x) { return apply_unary(UnaryFn::log10, x); }
inline ADScalar sqrt(const ADScalar& x) { return apply_unary(UnaryFn::sqrt, x); }
inline ADScalar abs(const ADScalar& x) { return apply_unary(UnaryFn::abs, x); }

// ---- debug printing ----------------------------------------------------

inline std::string to_string(const ADScalar& x) {
    if (x.fixed()) return format_double(x.value()) + " (fixed)";
    if (x.has_var_id())
        return format_double(x.value()) + " (variable " + std::to_string(x.var_id()) + ")";
    std::string s = format_double(x.value()) + " dependencies: [";
    for (const auto& [key, der] : x.deps())
        s += " (" + std::to_string(key) + ", " + format_double(der) + ")";
    s += " ]";
    return s;
}

inline std::ostream& operator<<(std::ostream& os, const ADScalar& x) {
    return os << to_string(x);
}

}  // namespace sad
