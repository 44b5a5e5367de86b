#include "epdiff/fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>

namespace epdiff {

namespace {

// FFTW planning is not thread-safe and not free, so plans are cached per
// (sizes, direction). FFTW_ESTIMATE keeps planning deterministic and
// FFTW_UNALIGNED lets the new-array execute run on ordinary vectors.
class PlanCache {
public:
    fftw_plan get(const std::vector<int>& n, int sign) {
        std::lock_guard<std::mutex> lock(mu_);
        auto key = std::make_pair(n, sign);
        auto it = plans_.find(key);
        if (it != plans_.end()) return it->second;

        std::size_t total = 1;
        for (int d : n) total *= static_cast<std::size_t>(d);
        fftw_complex* scratch_in = fftw_alloc_complex(total);
        fftw_complex* scratch_out = fftw_alloc_complex(total);
        fftw_plan p = fftw_plan_dft(static_cast<int>(n.size()), n.data(), scratch_in,
                                    scratch_out, sign, FFTW_ESTIMATE | FFTW_UNALIGNED);
        fftw_free(scratch_in);
        fftw_free(scratch_out);
        plans_.emplace(std::move(key), p);
        return p;
    }

private:
    std::mutex mu_;
    std::map<std::pair<std::vector<int>, int>, fftw_plan> plans_;
};

PlanCache& cache() {
    static PlanCache c;
    return c;
}

std::vector<int> fftw_sizes(const Grid& g) {
    std::vector<int> n;
    for (int a = 0; a < g.dim(); ++a) n.push_back(static_cast<int>(g.size(a)));
    return n;
}

} // namespace

Spectrum forward(const ScalarField& f) {
    Spectrum s(f.grid);
    std::vector<std::complex<double>> in(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) in[i] = f[i];
    fftw_plan p = cache().get(fftw_sizes(*f.grid), FFTW_FORWARD);
    fftw_execute_dft(p, reinterpret_cast<fftw_complex*>(in.data()),
                     reinterpret_cast<fftw_complex*>(s.coeff.data()));
    return s;
}

ScalarField inverse(const Spectrum& s) {
    std::vector<std::complex<double>> out(s.coeff.size());
    std::vector<std::complex<double>> in = s.coeff;
    fftw_plan p = cache().get(fftw_sizes(*s.grid), FFTW_BACKWARD);
    fftw_execute_dft(p, reinterpret_cast<fftw_complex*>(in.data()),
                     reinterpret_cast<fftw_complex*>(out.data()));
    ScalarField f(s.grid);
    const double norm = 1.0 / static_cast<double>(s.grid->point_count());
    for (std::size_t i = 0; i < out.size(); ++i) f[i] = out[i].real() * norm;
    return f;
}

} // namespace epdiff
