#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "sad/errors.hpp"

namespace sad {

// Comparison baseline for the benchmark: a scalar carrying a fixed-length
// dense gradient of the full system dimension. A default-constructed or
// plain-value instance has an empty gradient and acts as a constant until
// it meets a sized operand.
class DenseADScalar {
public:
    DenseADScalar() = default;
    explicit DenseADScalar(double value) : value_(value) {}

    static DenseADScalar variable(double value, std::size_t dim, std::size_t index) {
        DenseADScalar s(value);
        s.grad_.assign(dim, 0.0);
        s.grad_.at(index) = 1.0;
        return s;
    }

    double value() const { return value_; }
    const std::vector<double>& grad() const { return grad_; }

    DenseADScalar& operator+=(const DenseADScalar& rhs) {
        match(rhs);
        for (std::size_t i = 0; i < rhs.grad_.size(); ++i) grad_[i] += rhs.grad_[i];
        value_ += rhs.value_;
        return *this;
    }

    DenseADScalar& operator-=(const DenseADScalar& rhs) {
        match(rhs);
        for (std::size_t i = 0; i < rhs.grad_.size(); ++i) grad_[i] -= rhs.grad_[i];
        value_ -= rhs.value_;
        return *this;
    }

    DenseADScalar& operator*=(const DenseADScalar& rhs) {
        const double u = value_;
        if (this == &rhs) {
            for (auto& g : grad_) g *= 2.0 * u;
        } else {
            match(rhs);
            const double v = rhs.value_;
            for (auto& g : grad_) g *= v;
            for (std::size_t i = 0; i < rhs.grad_.size(); ++i) grad_[i] += u * rhs.grad_[i];
        }
        value_ *= rhs.value_;
        return *this;
    }

    DenseADScalar& operator/=(const DenseADScalar& rhs) {
        if (rhs.value_ == 0.0) throw DomainError("divide", "division by zero value");
        const double u = value_;
        if (this == &rhs) {
            for (auto& g : grad_) g = 0.0;
        } else {
            match(rhs);
            const double v = rhs.value_;
            for (auto& g : grad_) g /= v;
            for (std::size_t i = 0; i < rhs.grad_.size(); ++i)
                grad_[i] -= u * rhs.grad_[i] / (v * v);
        }
        value_ /= rhs.value_;
        return *this;
    }

    DenseADScalar& operator+=(double c) { value_ += c; return *this; }
    DenseADScalar& operator-=(double c) { value_ -= c; return *this; }

    DenseADScalar& operator*=(double c) {
        for (auto& g : grad_) g *= c;
        value_ *= c;
        return *this;
    }

    DenseADScalar& operator/=(double c) {
        if (c == 0.0) throw DomainError("divide", "division by zero value");
        for (auto& g : grad_) g /= c;
        value_ /= c;
        return *this;
    }

private:
    // Grows a constant to the operand's dimension; mismatched nonzero sizes
    // mean two different evaluations were mixed.
    void match(const DenseADScalar& rhs) {
        if (rhs.grad_.empty()) return;
        if (grad_.empty()) {
            grad_.assign(rhs.grad_.size(), 0.0);
        } else if (grad_.size() != rhs.grad_.size()) {
            throw DimensionError("dense gradient lengths differ");
        }
    }

    double value_ = 0.0;
    std::vector<double> grad_;

    friend DenseADScalar exp(const DenseADScalar& x);
};

inline DenseADScalar operator+(const DenseADScalar& a, const DenseADScalar& b) { DenseADScalar r(a); r += b; return r; }
inline DenseADScalar operator-(const DenseADScalar& a, const DenseADScalar& b) { DenseADScalar r(a); r -= b; return r; }
inline DenseADScalar operator*(const DenseADScalar& a, const DenseADScalar& b) { DenseADScalar r(a); r *= b; return r; }
inline DenseADScalar operator/(const DenseADScalar& a, const DenseADScalar& b) { DenseADScalar r(a); r /= b; return r; }

inline DenseADScalar operator+(const DenseADScalar& a, double b) { DenseADScalar r(a); r += b; return r; }
inline DenseADScalar operator-(const DenseADScalar& a, double b) { DenseADScalar r(a); r -= b; return r; }
inline DenseADScalar operator*(const DenseADScalar& a, double b) { DenseADScalar r(a); r *= b; return r; }
inline DenseADScalar operator/(const DenseADScalar& a, double b) { DenseADScalar r(a); r /= b; return r; }

inline DenseADScalar operator+(double a, const DenseADScalar& b) { DenseADScalar r(b); r += a; return r; }
inline DenseADScalar operator*(double a, const DenseADScalar& b) { DenseADScalar r(b); r *= a; return r; }
inline DenseADScalar operator-(double a, const DenseADScalar& b) { DenseADScalar r(a); r -= b; return r; }
inline DenseADScalar operator/(double a, const DenseADScalar& b) { DenseADScalar r(a); r /= b; return r; }

inline DenseADScalar operator-(const DenseADScalar& a) { DenseADScalar r(a); r *= -1.0; return r; }

inline bool operator==(const DenseADScalar& a, const DenseADScalar& b) { return a.value() == b.value(); }
inline bool operator<(const DenseADScalar& a, const DenseADScalar& b) { return a.value() < b.value(); }
inline bool operator>(const DenseADScalar& a, const DenseADScalar& b) { return a.value() > b.value(); }

inline DenseADScalar exp(const DenseADScalar& x) {
    DenseADScalar r(x);
    const double e = std::exp(x.value());
    r.value_ = e;
    for (auto& g : r.grad_) g *= e;
    return r;
}

}  // namespace sad
