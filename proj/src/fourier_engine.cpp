#include "clifft/fourier_engine.hpp"

#include <fftw3.h>

#include <bit>
#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

#include "clifft/parallel.hpp"

namespace clifft {

namespace {

// Plans are created once per (size, direction) under a lock; execution uses
// the new-array interface, which is thread safe. FFTW_UNALIGNED removes the
// alignment contract so std::vector storage is always valid.
std::mutex g_plan_mutex;
std::map<std::pair<std::size_t, int>, fftw_plan> g_plans;

fftw_plan plan_for(std::size_t size, int direction) {
    std::lock_guard<std::mutex> lock(g_plan_mutex);
    const auto key = std::make_pair(size, direction);
    auto it = g_plans.find(key);
    if (it != g_plans.end())
        return it->second;
    std::vector<std::complex<double>> scratch(size);
    auto* ptr = reinterpret_cast<fftw_complex*>(scratch.data());
    fftw_plan plan =
        fftw_plan_dft_1d(static_cast<int>(size), ptr, ptr, direction,
                         FFTW_ESTIMATE | FFTW_UNALIGNED);
    if (plan == nullptr)
        throw std::runtime_error("fftw plan creation failed");
    g_plans.emplace(key, plan);
    return plan;
}

std::size_t next_pow2(std::size_t n) {
    return std::bit_ceil(n);
}

} // namespace

void fft_pow2(std::span<std::complex<double>> data, bool inverse) {
    const std::size_t size = data.size();
    if (size == 0 || (size & (size - 1)) != 0)
        throw std::invalid_argument("fft length must be a power of two");
    fftw_plan plan = plan_for(size, inverse ? FFTW_BACKWARD : FFTW_FORWARD);
    auto* ptr = reinterpret_cast<fftw_complex*>(data.data());
    fftw_execute_dft(plan, ptr, ptr);
    if (inverse) {
        const double scale = 1.0 / static_cast<double>(size);
        for (auto& v : data)
            v *= scale;
    }
}

ChirpTransform::ChirpTransform(AxisGrid in, AxisGrid out, int sign) : in_(in), out_(out) {
    if (in.n < 1 || out.n < 1)
        throw std::invalid_argument("empty axis grid");
    if (sign != 1 && sign != -1)
        throw std::invalid_argument("sign must be +1 or -1");

    const double h = in.step();
    const double hp = out.step();
    const double w = h * hp;
    const double a = 0.5 * w - out.half_width * h;
    const double b = 0.5 * w - in.half_width * hp;
    const double c0 =
        in.half_width * out.half_width - 0.5 * (in.half_width * hp + out.half_width * h) + 0.25 * w;
    const double s = static_cast<double>(sign);

    pre_.resize(static_cast<std::size_t>(in.n));
    for (int j = 0; j < in.n; ++j)
        pre_[static_cast<std::size_t>(j)] =
            std::polar(1.0, s * (a * j + 0.5 * w * static_cast<double>(j) * j));

    post_.resize(static_cast<std::size_t>(out.n));
    for (int k = 0; k < out.n; ++k)
        post_[static_cast<std::size_t>(k)] =
            std::polar(1.0, s * (c0 + b * k + 0.5 * w * static_cast<double>(k) * k));

    fft_size_ = next_pow2(static_cast<std::size_t>(in.n + out.n - 1));
    chirp_fft_.assign(fft_size_, {0.0, 0.0});
    // chirp(d) = e^{-i s w d^2 / 2} stored at d mod fft_size for
    // d in [-(n_in - 1), n_out - 1].
    for (int d = -(in.n - 1); d <= out.n - 1; ++d) {
        const double phase = -s * 0.5 * w * static_cast<double>(d) * d;
        const std::size_t idx =
            d >= 0 ? static_cast<std::size_t>(d) : fft_size_ + static_cast<std::size_t>(d);
        chirp_fft_[idx] = std::polar(1.0, phase);
    }
    fft_pow2(chirp_fft_, false);
}

void ChirpTransform::apply(std::span<const std::complex<double>> in,
                           std::span<std::complex<double>> out) const {
    if (in.size() != static_cast<std::size_t>(in_.n) ||
        out.size() != static_cast<std::size_t>(out_.n))
        throw std::invalid_argument("chirp transform size mismatch");
    std::vector<std::complex<double>> work(fft_size_, {0.0, 0.0});
    for (std::size_t j = 0; j < in.size(); ++j)
        work[j] = in[j] * pre_[j];
    fft_pow2(work, false);
    for (std::size_t i = 0; i < fft_size_; ++i)
        work[i] *= chirp_fft_[i];
    fft_pow2(work, true);
    for (std::size_t k = 0; k < out.size(); ++k)
        out[k] = work[k] * post_[k];
}

std::vector<std::complex<double>> fourier2d(std::span<const std::complex<double>> plane,
                                            AxisGrid in, AxisGrid out, int sign) {
    const std::size_t n_in = static_cast<std::size_t>(in.n);
    const std::size_t n_out = static_cast<std::size_t>(out.n);
    if (plane.size() != n_in * n_in)
        throw std::invalid_argument("plane size does not match grid");

    const ChirpTransform chirp(in, out, sign);

    // Axis 2 (contiguous rows), then transpose and do axis 1.
    std::vector<std::complex<double>> stage1(n_in * n_out);
    parallel_for(n_in, [&](std::size_t begin, std::size_t end) {
        for (std::size_t r = begin; r < end; ++r)
            chirp.apply(plane.subspan(r * n_in, n_in),
                        std::span<std::complex<double>>(stage1.data() + r * n_out, n_out));
    });

    std::vector<std::complex<double>> transposed(n_out * n_in);
    for (std::size_t r = 0; r < n_in; ++r)
        for (std::size_t c = 0; c < n_out; ++c)
            transposed[c * n_in + r] = stage1[r * n_out + c];

    std::vector<std::complex<double>> stage2(n_out * n_out);
    parallel_for(n_out, [&](std::size_t begin, std::size_t end) {
        for (std::size_t r = begin; r < end; ++r)
            chirp.apply(std::span<const std::complex<double>>(transposed.data() + r * n_in, n_in),
                        std::span<std::complex<double>>(stage2.data() + r * n_out, n_out));
    });

    // stage2 is indexed [k2][k1]; transpose back and apply the h^2 weight.
    std::vector<std::complex<double>> result(n_out * n_out);
    const double weight = in.step() * in.step();
    for (std::size_t k2 = 0; k2 < n_out; ++k2)
        for (std::size_t k1 = 0; k1 < n_out; ++k1)
            result[k1 * n_out + k2] = stage2[k2 * n_out + k1] * weight;
    return result;
}

} // namespace clifft
