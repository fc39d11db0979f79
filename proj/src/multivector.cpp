#include "clifft/multivector.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace clifft {

namespace {

void check_dim(int m) {
    if (m < 1 || m > kMaxDim)
        throw std::invalid_argument("multivector dimension must be in [1, 8]");
}

void check_same_dim(const Multivector& a, const Multivector& b) {
    if (a.dim() != b.dim())
        throw std::invalid_argument("multivector dimension mismatch");
}

} // namespace

int blade_grade(unsigned mask) {
    return std::popcount(mask);
}

int blade_product_sign(unsigned a, unsigned b) {
    // Transpositions: each generator of a must pass every lower-index
    // generator of b when the concatenation is sorted to canonical order.
    int swaps = 0;
    unsigned t = a >> 1;
    while (t) {
        swaps += std::popcount(t & b);
        t >>= 1;
    }
    // Contractions: shared generators meet and square to -1.
    swaps += std::popcount(a & b);
    return (swaps & 1) ? -1 : 1;
}

Multivector::Multivector(int m) : m_(m), coeffs_(std::size_t{1} << m, 0.0) {
    check_dim(m);
}

Multivector Multivector::scalar(int m, double value) {
    Multivector out(m);
    out[0] = value;
    return out;
}

Multivector Multivector::blade(int m, unsigned mask, double value) {
    Multivector out(m);
    if (mask >= out.size())
        throw std::invalid_argument("blade mask out of range");
    out[mask] = value;
    return out;
}

Multivector Multivector::basis_vector(int m, int axis) {
    if (axis < 0 || axis >= m)
        throw std::invalid_argument("generator index out of range");
    return blade(m, 1u << axis, 1.0);
}

Multivector Multivector::from_vector(std::span<const double> components) {
    Multivector out(static_cast<int>(components.size()));
    for (std::size_t i = 0; i < components.size(); ++i)
        out[std::size_t{1} << i] = components[i];
    return out;
}

Multivector& Multivector::operator+=(const Multivector& rhs) {
    check_same_dim(*this, rhs);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        coeffs_[i] += rhs.coeffs_[i];
    return *this;
}

Multivector& Multivector::operator-=(const Multivector& rhs) {
    check_same_dim(*this, rhs);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        coeffs_[i] -= rhs.coeffs_[i];
    return *this;
}

Multivector& Multivector::operator*=(double s) {
    for (double& c : coeffs_)
        c *= s;
    return *this;
}

Multivector Multivector::operator-() const {
    Multivector out(*this);
    for (std::size_t i = 0; i < out.coeffs_.size(); ++i)
        out.coeffs_[i] = -out.coeffs_[i];
    return out;
}

bool Multivector::is_zero(double tol) const {
    for (double c : coeffs_)
        if (std::abs(c) > tol)
            return false;
    return true;
}

Multivector geometric_product(const Multivector& a, const Multivector& b) {
    check_same_dim(a, b);
    Multivector out(a.dim());
    const std::size_t n = a.size();
    for (std::size_t i = 0; i < n; ++i) {
        const double ai = a[i];
        if (ai == 0.0)
            continue;
        for (std::size_t j = 0; j < n; ++j) {
            const double bj = b[j];
            if (bj == 0.0)
                continue;
            const int sign = blade_product_sign(static_cast<unsigned>(i), static_cast<unsigned>(j));
            out[i ^ j] += sign * ai * bj;
        }
    }
    return out;
}

Multivector grade_project(const Multivector& a, int k) {
    if (k < 0 || k > a.dim())
        throw std::invalid_argument("grade out of range");
    Multivector out(a.dim());
    for (std::size_t i = 0; i < a.size(); ++i)
        if (blade_grade(static_cast<unsigned>(i)) == k)
            out[i] = a[i];
    return out;
}

double clifford_norm(const Multivector& a) {
    double s = 0.0;
    for (double c : a.coefficients())
        s += c * c;
    return std::sqrt(s);
}

bool is_pure_vector(const Multivector& a, double tol) {
    const double scale = clifford_norm(a);
    const double bound = tol * (scale > 0.0 ? scale : 1.0);
    for (std::size_t i = 0; i < a.size(); ++i)
        if (blade_grade(static_cast<unsigned>(i)) != 1 && std::abs(a[i]) > bound)
            return false;
    return true;
}

std::vector<double> vector_part(const Multivector& a) {
    std::vector<double> out(static_cast<std::size_t>(a.dim()));
    for (int i = 0; i < a.dim(); ++i)
        out[static_cast<std::size_t>(i)] = a[std::size_t{1} << i];
    return out;
}

Multivector inner_product(const Multivector& x, const Multivector& y) {
    check_same_dim(x, y);
    if (!is_pure_vector(x) || !is_pure_vector(y))
        throw std::invalid_argument("inner_product requires grade-1 arguments");
    double dot = 0.0;
    for (int i = 0; i < x.dim(); ++i)
        dot += x[std::size_t{1} << i] * y[std::size_t{1} << i];
    return Multivector::scalar(x.dim(), dot);
}

Multivector wedge_product(const Multivector& x, const Multivector& y) {
    check_same_dim(x, y);
    if (!is_pure_vector(x) || !is_pure_vector(y))
        throw std::invalid_argument("wedge_product requires grade-1 arguments");
    Multivector out(x.dim());
    for (int j = 0; j < x.dim(); ++j) {
        for (int k = j + 1; k < x.dim(); ++k) {
            const unsigned mask = (1u << j) | (1u << k);
            out[mask] = x[std::size_t{1} << j] * y[std::size_t{1} << k] -
                        x[std::size_t{1} << k] * y[std::size_t{1} << j];
        }
    }
    return out;
}

ComplexMultivector::ComplexMultivector(Multivector real_part, Multivector imag_part)
    : re(std::move(real_part)), im(std::move(imag_part)) {
    if (re.dim() != im.dim())
        throw std::invalid_argument("real/imaginary dimension mismatch");
}

ComplexMultivector geometric_product(const ComplexMultivector& a, const ComplexMultivector& b) {
    return {geometric_product(a.re, b.re) - geometric_product(a.im, b.im),
            geometric_product(a.re, b.im) + geometric_product(a.im, b.re)};
}

ComplexMultivector operator+(const ComplexMultivector& a, const ComplexMultivector& b) {
    return {a.re + b.re, a.im + b.im};
}

double clifford_norm(const ComplexMultivector& a) {
    double s = 0.0;
    for (double c : a.re.coefficients())
        s += c * c;
    for (double c : a.im.coefficients())
        s += c * c;
    return std::sqrt(s);
}

} // namespace clifft
