#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "clifft/fourier_engine.hpp"
#include "clifft/multivector.hpp"

namespace clifft {

/// Uniform midpoint tensor grid over the centered cube [-R, R]^m with N
/// points per axis: x_i = -R + (i + 1/2) h, h = 2R/N. Node values are built
/// symmetric under negation (node(N-1-i) == -node(i) exactly).
struct GridSpec {
    int m;
    double half_width;
    int points_per_axis;

    GridSpec(int m_, double half_width_, int points_per_axis_);

    double step() const { return 2.0 * half_width / points_per_axis; }
    std::size_t node_count() const;
    double node(int i) const;
    /// All axis nodes (shared by every axis).
    std::vector<double> axis_nodes() const;
    /// Coordinates of flat node index (row-major over axes, axis 0 slowest).
    void node_coords(std::size_t flat, std::span<double> out) const;

    AxisGrid axis() const { return AxisGrid{half_width, points_per_axis}; }

    bool operator==(const GridSpec& o) const {
        return m == o.m && half_width == o.half_width && points_per_axis == o.points_per_axis;
    }
};

using FieldFn = std::function<Multivector(std::span<const double>)>;

/// Multivector-valued samples on a GridSpec, stored node-major (2^m
/// coefficients per node).
class SampledField {
public:
    explicit SampledField(const GridSpec& grid);

    static SampledField sample(const GridSpec& grid, const FieldFn& fn);

    const GridSpec& grid() const { return grid_; }
    std::size_t node_count() const { return grid_.node_count(); }
    std::size_t mv_size() const { return mv_size_; }

    Multivector at(std::size_t node) const;
    void set(std::size_t node, const Multivector& value);
    double component(std::size_t node, std::size_t blade) const {
        return data_[node * mv_size_ + blade];
    }
    double& component(std::size_t node, std::size_t blade) {
        return data_[node * mv_size_ + blade];
    }
    std::span<const double> raw() const { return data_; }

    /// Copy of one blade coefficient over all nodes.
    std::vector<double> component_plane(std::size_t blade) const;
    void set_component_plane(std::size_t blade, std::span<const double> plane);

    SampledField& operator+=(const SampledField& rhs);
    SampledField& operator-=(const SampledField& rhs);
    SampledField& operator*=(double s);
    friend SampledField operator+(SampledField a, const SampledField& b) { return a += b; }
    friend SampledField operator-(SampledField a, const SampledField& b) { return a -= b; }
    friend SampledField operator*(SampledField a, double s) { return a *= s; }

private:
    GridSpec grid_;
    std::size_t mv_size_;
    std::vector<double> data_;
};

/// ||f||_{p,c}: midpoint quadrature of ||f(x)||_c^p times h^m, p-th root.
/// p = infinity gives the max node norm.
double lp_norm(const SampledField& field, double p);

/// Weighted L1 norm with weight (1 + ||x||)^{(m-2)/2}.
double b_norm(const SampledField& field);

/// Max pointwise Clifford norm of (a - b); grids must match.
double linf_diff(const SampledField& a, const SampledField& b);

/// Per-shell radial structure of a field. Shells are orbits of nodes with
/// exactly equal sorted |coordinates| (the grid is symmetric, so a radial
/// function is exactly constant on each orbit).
struct RadialProfile {
    std::vector<double> radius;        // ascending
    std::vector<Multivector> value;    // orbit representative values
    /// Linear interpolation in radius; zero beyond the last shell.
    Multivector interpolate(double r) const;
};

RadialProfile radial_profile(const SampledField& field);

/// True when the field is constant on every equal-radius orbit to within
/// tol * max ||f||.
bool is_radial(const SampledField& field, double tol = 1e-8, double* max_deviation = nullptr);

enum class ConvolveMethod { spectral, direct };

/// Clifford convolution of a radial left factor with an arbitrary field on
/// the same grid: (2 pi)^{-m/2} integral f(x - y) g(y) dy with the geometric
/// product between values. For radial f this coincides with the classically
/// normalized convolution. The spectral path multiplies forward transforms
/// on the frequency grid and inverts; the direct path interpolates the
/// radial profile of f (intended for small grids and cross-checks).
/// Throws if f is not radial: outside the radial case the Clifford
/// convolution does not reduce to the classical one.
SampledField radial_convolve(const SampledField& f, const SampledField& g,
                             ConvolveMethod method = ConvolveMethod::spectral);

/// Surface area of the unit sphere in R^m.
double unit_sphere_area(int m);

/// Integral over R^m of a radial scalar function by 1-d midpoint quadrature:
/// S_{m-1} * sum fn(r_i) r_i^{m-1} dr on (0, r_max].
double radial_integral(const std::function<double(double)>& fn, int m, double r_max,
                       std::size_t n_points = 8192);

/// CSV serialization: header line "m,R,N", then N^m rows of 2^m coefficients.
void save_field_csv(const SampledField& field, const std::string& path);
SampledField load_field_csv(const std::string& path);

} // namespace clifft
