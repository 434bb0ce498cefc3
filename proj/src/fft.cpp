#include "besovlab/fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <tuple>

namespace besovlab::fft {

namespace {

struct PlanPair {
    fftw_plan fwd = nullptr;
    fftw_plan bwd = nullptr;
};

// FFTW plan creation is not thread safe; executions through fftw_execute_dft
// on distinct arrays are. Plans are created unaligned so they can be applied
// to any buffer.
PlanPair& plans_for(int dim, int m) {
    static std::map<std::pair<int, int>, PlanPair> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto key = std::make_pair(dim, m);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    std::size_t n = 1;
    for (int d = 0; d < dim; ++d) n *= static_cast<std::size_t>(m);
    std::vector<std::complex<double>> buf(n);
    auto* ptr = reinterpret_cast<fftw_complex*>(buf.data());
    int dims[3] = {m, m, m};
    PlanPair p;
    p.fwd = fftw_plan_dft(dim, dims, ptr, ptr, FFTW_FORWARD,
                          FFTW_ESTIMATE | FFTW_UNALIGNED);
    p.bwd = fftw_plan_dft(dim, dims, ptr, ptr, FFTW_BACKWARD,
                          FFTW_ESTIMATE | FFTW_UNALIGNED);
    return cache.emplace(key, p).first->second;
}

} // namespace

void forward_c2c(int dim, int m, std::vector<std::complex<double>>& data) {
    auto& p = plans_for(dim, m);
    auto* ptr = reinterpret_cast<fftw_complex*>(data.data());
    fftw_execute_dft(p.fwd, ptr, ptr);
}

void inverse_c2c(int dim, int m, std::vector<std::complex<double>>& data) {
    auto& p = plans_for(dim, m);
    auto* ptr = reinterpret_cast<fftw_complex*>(data.data());
    fftw_execute_dft(p.bwd, ptr, ptr);
}

std::vector<std::complex<double>> forward(const Grid& grid,
                                          const std::vector<double>& physical) {
    std::vector<std::complex<double>> data(physical.begin(), physical.end());
    forward_c2c(grid.dim(), grid.resolution(), data);
    const double scale = 1.0 / static_cast<double>(grid.size());
    for (auto& c : data) c *= scale;
    return data;
}

std::vector<double> inverse(const Grid& grid,
                            const std::vector<std::complex<double>>& spectral,
                            double* imag_max) {
    std::vector<std::complex<double>> data = spectral;
    inverse_c2c(grid.dim(), grid.resolution(), data);
    std::vector<double> out(data.size());
    double worst = 0.0;
    for (std::size_t i = 0; i < data.size(); ++i) {
        out[i] = data[i].real();
        double im = std::abs(data[i].imag());
        if (im > worst) worst = im;
    }
    if (imag_max) *imag_max = worst;
    return out;
}

} // namespace besovlab::fft
