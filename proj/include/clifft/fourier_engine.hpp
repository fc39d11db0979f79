#pragma once

#include <complex>
#include <span>
#include <vector>

namespace clifft {

/// One axis of a midpoint grid on [-half_width, half_width]: nodes
/// x_i = -half_width + (i + 1/2) * step.
struct AxisGrid {
    double half_width = 0.0;
    int n = 0;

    double step() const { return 2.0 * half_width / n; }
    double node(int i) const { return -half_width + (i + 0.5) * step(); }
};

/// In-place complex FFT for power-of-two lengths (FFTW backend, deterministic
/// plan selection). The inverse includes the 1/M scaling.
void fft_pow2(std::span<std::complex<double>> data, bool inverse);

/// Evaluates G_k = sum_j g_j exp(i * sign * x_j * u_k) for midpoint nodes x_j
/// of `in` and u_k of `out`, any (half_width, n) pairs. The bilinear phase is
/// factored as x_j u_k = C0 + A j + B k + w j k and the chirp part becomes a
/// zero-padded FFT convolution, so cost is O((n_in + n_out) log) instead of
/// O(n_in * n_out).
class ChirpTransform {
public:
    ChirpTransform(AxisGrid in, AxisGrid out, int sign);

    void apply(std::span<const std::complex<double>> in,
               std::span<std::complex<double>> out) const;

    int input_size() const { return in_.n; }
    int output_size() const { return out_.n; }

private:
    AxisGrid in_;
    AxisGrid out_;
    std::size_t fft_size_;
    std::vector<std::complex<double>> pre_;       // e^{i sign (A j + w j^2/2)}
    std::vector<std::complex<double>> post_;      // e^{i sign (C0 + B k + w k^2/2)}
    std::vector<std::complex<double>> chirp_fft_; // FFT of e^{-i sign w n^2/2}
};

/// Separable 2-d version on an n x n plane (row-major, first index = first
/// coordinate): returns h^2 * sum_{j1 j2} plane[j1][j2]
/// exp(i * sign (x_{j1} u_{k1} + x_{j2} u_{k2})), i.e. the midpoint-rule
/// approximation of the continuous integral against e^{i sign x.u}.
std::vector<std::complex<double>> fourier2d(std::span<const std::complex<double>> plane,
                                            AxisGrid in, AxisGrid out, int sign);

} // namespace clifft
