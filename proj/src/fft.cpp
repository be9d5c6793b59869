#include "fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <vector>

#include "reslab/errors.hpp"

namespace reslab::fft {
namespace {

struct Plans {
    fftw_plan fwd = nullptr;
    fftw_plan bwd = nullptr;
};

// Plans are created once per size and never destroyed. Execution through
// fftw_execute_dft is thread safe; only the planner needs the lock.
std::mutex g_mutex;
std::map<std::size_t, Plans> g_plans;

const Plans& plans_for(std::size_t n) {
    std::lock_guard<std::mutex> lock(g_mutex);
    auto it = g_plans.find(n);
    if (it != g_plans.end()) return it->second;
    if (n == 0) throw InvalidArgument("zero-length transform");
    std::vector<cplx> a(n), b(n);
    auto* pa = reinterpret_cast<fftw_complex*>(a.data());
    auto* pb = reinterpret_cast<fftw_complex*>(b.data());
    const unsigned flags = FFTW_ESTIMATE | FFTW_UNALIGNED;
    Plans p;
    p.fwd = fftw_plan_dft_1d(static_cast<int>(n), pa, pb, FFTW_FORWARD, flags);
    p.bwd = fftw_plan_dft_1d(static_cast<int>(n), pa, pb, FFTW_BACKWARD, flags);
    if (p.fwd == nullptr || p.bwd == nullptr) throw Error("FFTW planning failed");
    return g_plans.emplace(n, p).first->second;
}

}  // namespace

void backward(const cplx* in, cplx* out, std::size_t n) {
    const Plans& p = plans_for(n);
    // FFTW does not modify the input of an out-of-place complex transform.
    fftw_execute_dft(p.bwd, reinterpret_cast<fftw_complex*>(const_cast<cplx*>(in)),
                     reinterpret_cast<fftw_complex*>(out));
}

void forward(const cplx* in, cplx* out, std::size_t n) {
    const Plans& p = plans_for(n);
    fftw_execute_dft(p.fwd, reinterpret_cast<fftw_complex*>(const_cast<cplx*>(in)),
                     reinterpret_cast<fftw_complex*>(out));
}

}  // namespace reslab::fft
