#include "clifft/grid.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "clifft/parallel.hpp"

namespace clifft {

GridSpec::GridSpec(int m_, double half_width_, int points_per_axis_)
    : m(m_), half_width(half_width_), points_per_axis(points_per_axis_) {
    if (m < 1 || m > kMaxDim)
        throw std::invalid_argument("grid dimension must be in [1, 8]");
    if (!(half_width > 0.0))
        throw std::invalid_argument("grid half-width must be positive");
    if (points_per_axis < 8 || points_per_axis % 2 != 0)
        throw std::invalid_argument("points per axis must be even and at least 8");
}

std::size_t GridSpec::node_count() const {
    std::size_t n = 1;
    for (int i = 0; i < m; ++i)
        n *= static_cast<std::size_t>(points_per_axis);
    return n;
}

double GridSpec::node(int i) const {
    const int n = points_per_axis;
    if (i < 0 || i >= n)
        throw std::out_of_range("axis node index out of range");
    // Mirror the upper half so node(N-1-i) == -node(i) bit-exactly.
    if (i >= n / 2)
        return -(-half_width + (n - 1 - i + 0.5) * step());
    return -half_width + (i + 0.5) * step();
}

std::vector<double> GridSpec::axis_nodes() const {
    std::vector<double> out(static_cast<std::size_t>(points_per_axis));
    for (int i = 0; i < points_per_axis; ++i)
        out[static_cast<std::size_t>(i)] = node(i);
    return out;
}

void GridSpec::node_coords(std::size_t flat, std::span<double> out) const {
    if (out.size() != static_cast<std::size_t>(m))
        throw std::invalid_argument("coordinate span arity mismatch");
    const std::size_t n = static_cast<std::size_t>(points_per_axis);
    for (int axis = m - 1; axis >= 0; --axis) {
        out[static_cast<std::size_t>(axis)] = node(static_cast<int>(flat % n));
        flat /= n;
    }
}

SampledField::SampledField(const GridSpec& grid)
    : grid_(grid), mv_size_(std::size_t{1} << grid.m),
      data_(grid.node_count() * (std::size_t{1} << grid.m), 0.0) {}

SampledField SampledField::sample(const GridSpec& grid, const FieldFn& fn) {
    SampledField out(grid);
    const std::size_t nodes = grid.node_count();
    const std::size_t mv = out.mv_size_;
    parallel_for(nodes, [&](std::size_t begin, std::size_t end) {
        std::vector<double> coords(static_cast<std::size_t>(grid.m));
        for (std::size_t i = begin; i < end; ++i) {
            grid.node_coords(i, coords);
            const Multivector value = fn(coords);
            if (value.size() != mv)
                throw std::invalid_argument("field function dimension mismatch");
            for (std::size_t b = 0; b < mv; ++b)
                out.data_[i * mv + b] = value[b];
        }
    });
    return out;
}

Multivector SampledField::at(std::size_t node) const {
    Multivector out(grid_.m);
    for (std::size_t b = 0; b < mv_size_; ++b)
        out[b] = data_[node * mv_size_ + b];
    return out;
}

void SampledField::set(std::size_t node, const Multivector& value) {
    if (value.size() != mv_size_)
        throw std::invalid_argument("multivector dimension mismatch");
    for (std::size_t b = 0; b < mv_size_; ++b)
        data_[node * mv_size_ + b] = value[b];
}

std::vector<double> SampledField::component_plane(std::size_t blade) const {
    const std::size_t nodes = node_count();
    std::vector<double> out(nodes);
    for (std::size_t i = 0; i < nodes; ++i)
        out[i] = data_[i * mv_size_ + blade];
    return out;
}

void SampledField::set_component_plane(std::size_t blade, std::span<const double> plane) {
    const std::size_t nodes = node_count();
    if (plane.size() != nodes)
        throw std::invalid_argument("plane size mismatch");
    for (std::size_t i = 0; i < nodes; ++i)
        data_[i * mv_size_ + blade] = plane[i];
}

namespace {

void check_same_grid(const SampledField& a, const SampledField& b) {
    if (!(a.grid() == b.grid()))
        throw std::invalid_argument("grid mismatch");
}

double node_norm(const SampledField& f, std::size_t node) {
    double s = 0.0;
    for (std::size_t b = 0; b < f.mv_size(); ++b) {
        const double c = f.component(node, b);
        s += c * c;
    }
    return std::sqrt(s);
}

} // namespace

SampledField& SampledField::operator+=(const SampledField& rhs) {
    check_same_grid(*this, rhs);
    for (std::size_t i = 0; i < data_.size(); ++i)
        data_[i] += rhs.data_[i];
    return *this;
}

SampledField& SampledField::operator-=(const SampledField& rhs) {
    check_same_grid(*this, rhs);
    for (std::size_t i = 0; i < data_.size(); ++i)
        data_[i] -= rhs.data_[i];
    return *this;
}

SampledField& SampledField::operator*=(double s) {
    for (double& v : data_)
        v *= s;
    return *this;
}

double lp_norm(const SampledField& field, double p) {
    const std::size_t nodes = field.node_count();
    if (std::isinf(p)) {
        double best = 0.0;
        for (std::size_t i = 0; i < nodes; ++i)
            best = std::max(best, node_norm(field, i));
        return best;
    }
    if (p < 1.0)
        throw std::invalid_argument("lp_norm requires p >= 1");
    const double cell = std::pow(field.grid().step(), field.grid().m);
    const double total = deterministic_sum(
        nodes, [&](std::size_t i) { return std::pow(node_norm(field, i), p); });
    return std::pow(total * cell, 1.0 / p);
}

double b_norm(const SampledField& field) {
    const std::size_t nodes = field.node_count();
    const int m = field.grid().m;
    const double cell = std::pow(field.grid().step(), m);
    const double exponent = 0.5 * (m - 2);
    std::vector<double> coords(static_cast<std::size_t>(m));
    const double total = deterministic_sum(nodes, [&](std::size_t i) {
        field.grid().node_coords(i, coords);
        double r2 = 0.0;
        for (double c : coords)
            r2 += c * c;
        return std::pow(1.0 + std::sqrt(r2), exponent) * node_norm(field, i);
    });
    return total * cell;
}

double linf_diff(const SampledField& a, const SampledField& b) {
    check_same_grid(a, b);
    double best = 0.0;
    for (std::size_t i = 0; i < a.node_count(); ++i) {
        double s = 0.0;
        for (std::size_t c = 0; c < a.mv_size(); ++c) {
            const double d = a.component(i, c) - b.component(i, c);
            s += d * d;
        }
        best = std::max(best, std::sqrt(s));
    }
    return best;
}

namespace {

/// Orbit key: sorted absolute coordinates. Exact doubles, so grouping is
/// exact on the symmetric midpoint grid.
std::map<std::vector<double>, std::vector<std::size_t>> orbit_map(const GridSpec& grid) {
    std::map<std::vector<double>, std::vector<std::size_t>> orbits;
    const std::size_t nodes = grid.node_count();
    std::vector<double> coords(static_cast<std::size_t>(grid.m));
    for (std::size_t i = 0; i < nodes; ++i) {
        grid.node_coords(i, coords);
        std::vector<double> key(coords);
        for (double& c : key)
            c = std::abs(c);
        std::sort(key.begin(), key.end());
        orbits[key].push_back(i);
    }
    return orbits;
}

} // namespace

RadialProfile radial_profile(const SampledField& field) {
    RadialProfile profile;
    const auto orbits = orbit_map(field.grid());
    profile.radius.reserve(orbits.size());
    profile.value.reserve(orbits.size());
    for (const auto& [key, members] : orbits) {
        double r2 = 0.0;
        for (double c : key)
            r2 += c * c;
        Multivector mean(field.grid().m);
        for (std::size_t node : members)
            mean += field.at(node);
        mean *= 1.0 / static_cast<double>(members.size());
        profile.radius.push_back(std::sqrt(r2));
        profile.value.push_back(mean);
    }
    return profile;
}

Multivector RadialProfile::interpolate(double r) const {
    const int m = value.empty() ? 2 : value.front().dim();
    if (value.empty() || r > radius.back())
        return Multivector(m);
    auto it = std::lower_bound(radius.begin(), radius.end(), r);
    const std::size_t hi = static_cast<std::size_t>(it - radius.begin());
    if (hi == 0)
        return value.front();
    const std::size_t lo = hi - 1;
    if (hi >= radius.size())
        return value.back();
    const double span = radius[hi] - radius[lo];
    const double t = span > 0.0 ? (r - radius[lo]) / span : 0.0;
    return value[lo] * (1.0 - t) + value[hi] * t;
}

bool is_radial(const SampledField& field, double tol, double* max_deviation) {
    const auto orbits = orbit_map(field.grid());
    double scale = 0.0;
    for (std::size_t i = 0; i < field.node_count(); ++i)
        scale = std::max(scale, node_norm(field, i));
    if (scale == 0.0) {
        if (max_deviation)
            *max_deviation = 0.0;
        return true;
    }
    double worst = 0.0;
    for (const auto& [key, members] : orbits) {
        const Multivector ref = field.at(members.front());
        for (std::size_t node : members) {
            double dev2 = 0.0;
            for (std::size_t c = 0; c < field.mv_size(); ++c) {
                const double d = field.component(node, c) - ref[c];
                dev2 += d * d;
            }
            worst = std::max(worst, std::sqrt(dev2));
        }
    }
    if (max_deviation)
        *max_deviation = worst / scale;
    return worst <= tol * scale;
}

namespace {

SampledField convolve_spectral(const SampledField& f, const SampledField& g) {
    const GridSpec& grid = f.grid();
    const AxisGrid axis = grid.axis();
    const std::size_t nodes = grid.node_count();
    const std::size_t mv = f.mv_size();
    const double two_pi = 2.0 * std::numbers::pi;

    // Forward transforms of every nonzero component.
    std::vector<std::vector<std::complex<double>>> fhat(mv), ghat(mv);
    auto forward = [&](const SampledField& field, std::size_t blade) {
        std::vector<std::complex<double>> plane(nodes);
        bool any = false;
        for (std::size_t i = 0; i < nodes; ++i) {
            const double v = field.component(i, blade);
            plane[i] = {v, 0.0};
            any = any || v != 0.0;
        }
        if (!any)
            return std::vector<std::complex<double>>{};
        return fourier2d(plane, axis, axis, -1);
    };
    for (std::size_t b = 0; b < mv; ++b) {
        fhat[b] = forward(f, b);
        ghat[b] = forward(g, b);
    }

    // Frequency-domain product, accumulated per output blade, then one
    // inverse per blade. Normalization: plain convolution is
    // (2 pi)^{-2} * inverse(product); the Clifford convolution adds
    // (2 pi)^{-m/2}.
    SampledField out(grid);
    for (std::size_t target = 0; target < mv; ++target) {
        std::vector<std::complex<double>> acc;
        for (std::size_t a = 0; a < mv; ++a) {
            const std::size_t bb = a ^ target;
            if (fhat[a].empty() || ghat[bb].empty())
                continue;
            const double sign = blade_product_sign(static_cast<unsigned>(a),
                                                   static_cast<unsigned>(bb));
            if (acc.empty())
                acc.assign(nodes, {0.0, 0.0});
            for (std::size_t i = 0; i < nodes; ++i)
                acc[i] += sign * fhat[a][i] * ghat[bb][i];
        }
        if (acc.empty())
            continue;
        const auto back = fourier2d(acc, axis, axis, +1);
        const double scale = 1.0 / (two_pi * two_pi) / std::pow(two_pi, 0.5 * grid.m);
        std::vector<double> plane(nodes);
        for (std::size_t i = 0; i < nodes; ++i)
            plane[i] = back[i].real() * scale;
        out.set_component_plane(target, plane);
    }
    return out;
}

SampledField convolve_direct(const SampledField& f, const SampledField& g) {
    const GridSpec& grid = f.grid();
    const std::size_t nodes = grid.node_count();
    const std::size_t mv = f.mv_size();
    const RadialProfile prof = radial_profile(f);
    const double cell = std::pow(grid.step(), grid.m);
    const double scale = cell / std::pow(2.0 * std::numbers::pi, 0.5 * grid.m);

    std::vector<std::vector<double>> coords(nodes, std::vector<double>(grid.m));
    for (std::size_t i = 0; i < nodes; ++i)
        grid.node_coords(i, coords[i]);

    SampledField out(grid);
    parallel_for(nodes, [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            Multivector acc(grid.m);
            for (std::size_t j = 0; j < nodes; ++j) {
                double d2 = 0.0;
                for (int ax = 0; ax < grid.m; ++ax) {
                    const double d = coords[i][static_cast<std::size_t>(ax)] -
                                     coords[j][static_cast<std::size_t>(ax)];
                    d2 += d * d;
                }
                const Multivector fv = prof.interpolate(std::sqrt(d2));
                if (fv.is_zero())
                    continue;
                acc += geometric_product(fv, g.at(j));
            }
            out.set(i, acc * scale);
        }
    });
    (void)mv;
    return out;
}

} // namespace

SampledField radial_convolve(const SampledField& f, const SampledField& g,
                             ConvolveMethod method) {
    check_same_grid(f, g);
    if (f.grid().m != 2)
        throw std::invalid_argument("radial_convolve is implemented for m = 2 grids");
    double dev = 0.0;
    if (!is_radial(f, 1e-8, &dev)) {
        char msg[160];
        std::snprintf(msg, sizeof msg,
                      "left factor is not radial (relative shell deviation %.3e); "
                      "Clifford convolution does not reduce to the classical one",
                      dev);
        throw std::domain_error(msg);
    }
    return method == ConvolveMethod::spectral ? convolve_spectral(f, g)
                                              : convolve_direct(f, g);
}

double unit_sphere_area(int m) {
    return 2.0 * std::pow(std::numbers::pi, 0.5 * m) / std::tgamma(0.5 * m);
}

double radial_integral(const std::function<double(double)>& fn, int m, double r_max,
                       std::size_t n_points) {
    const double dr = r_max / static_cast<double>(n_points);
    const double total = deterministic_sum(n_points, [&](std::size_t i) {
        const double r = (static_cast<double>(i) + 0.5) * dr;
        return fn(r) * std::pow(r, m - 1);
    });
    return unit_sphere_area(m) * total * dr;
}

void save_field_csv(const SampledField& field, const std::string& path) {
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot open " + path + " for writing");
    char buf[64];
    std::snprintf(buf, sizeof buf, "%d,%.17g,%d\n", field.grid().m, field.grid().half_width,
                  field.grid().points_per_axis);
    out << buf;
    for (std::size_t i = 0; i < field.node_count(); ++i) {
        for (std::size_t c = 0; c < field.mv_size(); ++c) {
            std::snprintf(buf, sizeof buf, "%.17g", field.component(i, c));
            out << buf << (c + 1 == field.mv_size() ? '\n' : ',');
        }
    }
    if (!out)
        throw std::runtime_error("write failed: " + path);
}

SampledField load_field_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open " + path);
    std::string line;
    if (!std::getline(in, line))
        throw std::runtime_error("empty field file: " + path);
    int m = 0, n = 0;
    double r = 0.0;
    if (std::sscanf(line.c_str(), "%d,%lg,%d", &m, &r, &n) != 3)
        throw std::runtime_error("bad field header in " + path);
    SampledField field{GridSpec(m, r, n)};
    const std::size_t mv = field.mv_size();
    for (std::size_t i = 0; i < field.node_count(); ++i) {
        if (!std::getline(in, line))
            throw std::runtime_error("truncated field file: " + path);
        std::stringstream ss(line);
        std::string cellstr;
        for (std::size_t c = 0; c < mv; ++c) {
            if (!std::getline(ss, cellstr, ','))
                throw std::runtime_error("short row in field file: " + path);
            field.component(i, c) = std::strtod(cellstr.c_str(), nullptr);
        }
    }
    return field;
}

} // namespace clifft
