#include "pilotwave/spectral.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <tuple>

#include "pilotwave/errors.hpp"

namespace pilotwave {

namespace {

// FFTW plan creation is not thread-safe; execution via the new-array
// interface is.  Plans use FFTW_ESTIMATE so the chosen algorithm (and hence
// the rounding pattern) is reproducible run to run.
class PlanCache {
public:
    static PlanCache& instance() {
        static PlanCache c;
        return c;
    }

    fftw_plan get1d(std::size_t n, int sign) {
        std::scoped_lock lock(mu_);
        auto key = std::make_tuple(n, std::size_t{0}, sign);
        auto it = plans_.find(key);
        if (it != plans_.end()) return it->second;
        std::vector<Complex> scratch(n);
        fftw_plan p = fftw_plan_dft_1d(static_cast<int>(n),
                                       reinterpret_cast<fftw_complex*>(scratch.data()),
                                       reinterpret_cast<fftw_complex*>(scratch.data()),
                                       sign, FFTW_ESTIMATE | FFTW_UNALIGNED);
        plans_[key] = p;
        return p;
    }

    fftw_plan get2d(std::size_t n1, std::size_t n2, int sign) {
        std::scoped_lock lock(mu_);
        auto key = std::make_tuple(n1, n2, sign);
        auto it = plans_.find(key);
        if (it != plans_.end()) return it->second;
        std::vector<Complex> scratch(n1 * n2);
        fftw_plan p = fftw_plan_dft_2d(static_cast<int>(n1), static_cast<int>(n2),
                                       reinterpret_cast<fftw_complex*>(scratch.data()),
                                       reinterpret_cast<fftw_complex*>(scratch.data()),
                                       sign, FFTW_ESTIMATE | FFTW_UNALIGNED);
        plans_[key] = p;
        return p;
    }

private:
    PlanCache() = default;
    std::mutex mu_;
    std::map<std::tuple<std::size_t, std::size_t, int>, fftw_plan> plans_;
};

void execute(fftw_plan p, std::vector<Complex>& data) {
    fftw_execute_dft(p, reinterpret_cast<fftw_complex*>(data.data()),
                     reinterpret_cast<fftw_complex*>(data.data()));
}

void scale(std::vector<Complex>& data, double s) {
    for (Complex& z : data) z *= s;
}

// (ik)^n for the FFT-ordered wavenumbers; odd orders zero the Nyquist mode.
std::vector<Complex> ik_pow(const SpatialGrid& g, int order) {
    if (order < 1 || order > 4)
        throw std::invalid_argument("spectral derivative order must be in {1,2,3,4}");
    const auto ks = g.wavenumbers();
    std::vector<Complex> out(ks.size());
    for (std::size_t j = 0; j < ks.size(); ++j) {
        Complex ik(0.0, ks[j]);
        Complex v = ik;
        for (int m = 1; m < order; ++m) v *= ik;
        out[j] = v;
    }
    if (order % 2 == 1) out[ks.size() / 2] = Complex{0.0, 0.0};
    return out;
}

} // namespace

void fft_forward(std::vector<Complex>& data) {
    execute(PlanCache::instance().get1d(data.size(), FFTW_FORWARD), data);
}

void fft_inverse(std::vector<Complex>& data) {
    execute(PlanCache::instance().get1d(data.size(), FFTW_BACKWARD), data);
    scale(data, 1.0 / static_cast<double>(data.size()));
}

void fft2_forward(std::vector<Complex>& data, std::size_t n1, std::size_t n2) {
    execute(PlanCache::instance().get2d(n1, n2, FFTW_FORWARD), data);
}

void fft2_inverse(std::vector<Complex>& data, std::size_t n1, std::size_t n2) {
    execute(PlanCache::instance().get2d(n1, n2, FFTW_BACKWARD), data);
    scale(data, 1.0 / static_cast<double>(n1 * n2));
}

Field1D spectral_derivative(const Field1D& f, int order) {
    const auto mul = ik_pow(f.grid(), order);
    std::vector<Complex> work = f.values();
    fft_forward(work);
    for (std::size_t j = 0; j < work.size(); ++j) work[j] *= mul[j];
    fft_inverse(work);
    return Field1D(f.grid(), std::move(work));
}

Field2D spectral_partial(const Field2D& f, int axis, int order) {
    if (axis != 1 && axis != 2) throw std::invalid_argument("spectral_partial: axis must be 1 or 2");
    const std::size_t n1 = f.grid1().size(), n2 = f.grid2().size();
    const auto mul = ik_pow(axis == 1 ? f.grid1() : f.grid2(), order);
    std::vector<Complex> work = f.values();
    fft2_forward(work, n1, n2);
    if (axis == 1) {
        for (std::size_t i = 0; i < n1; ++i) {
            const Complex m = mul[i];
            Complex* row = work.data() + i * n2;
            for (std::size_t j = 0; j < n2; ++j) row[j] *= m;
        }
    } else {
        for (std::size_t i = 0; i < n1; ++i) {
            Complex* row = work.data() + i * n2;
            for (std::size_t j = 0; j < n2; ++j) row[j] *= mul[j];
        }
    }
    fft2_inverse(work, n1, n2);
    return Field2D(f.grid1(), f.grid2(), std::move(work));
}

} // namespace pilotwave
