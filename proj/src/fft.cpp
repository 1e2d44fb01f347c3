#include "fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <vector>

#include "bogauge/errors.hpp"

namespace bogauge::detail {
namespace {

struct PlanPair {
  fftw_plan forward = nullptr;
  fftw_plan backward = nullptr;
};

// The FFTW planner is not reentrant; executing an existing plan on new
// arrays is. Plans are created once per size under the lock and never freed.
class PlanCache {
 public:
  const PlanPair& get(int n) {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = plans_.find(n);
    if (it != plans_.end()) return it->second;
    std::vector<fftw_complex> a(n), b(n);
    PlanPair p;
    const unsigned flags = FFTW_ESTIMATE | FFTW_UNALIGNED;
    p.forward = fftw_plan_dft_1d(n, a.data(), b.data(), FFTW_FORWARD, flags);
    p.backward = fftw_plan_dft_1d(n, a.data(), b.data(), FFTW_BACKWARD, flags);
    if (!p.forward || !p.backward) throw Error("FFTW planning failed");
    return plans_.emplace(n, p).first->second;
  }

 private:
  std::mutex mutex_;
  std::map<int, PlanPair> plans_;
};

PlanCache& cache() {
  static PlanCache c;
  return c;
}

void execute(std::span<const cplx> in, std::span<cplx> out, bool forward) {
  if (in.size() != out.size()) throw ContractError("dft: size mismatch");
  const int n = static_cast<int>(in.size());
  const PlanPair& p = cache().get(n);
  // Plans are out-of-place; stage through a scratch buffer when aliased.
  std::vector<cplx> scratch;
  const cplx* src = in.data();
  if (src == out.data()) {
    scratch.assign(in.begin(), in.end());
    src = scratch.data();
  }
  fftw_execute_dft(forward ? p.forward : p.backward,
                   reinterpret_cast<fftw_complex*>(const_cast<cplx*>(src)),
                   reinterpret_cast<fftw_complex*>(out.data()));
}

}  // namespace

void dft_forward(std::span<const cplx> in, std::span<cplx> out) { execute(in, out, true); }
void dft_backward(std::span<const cplx> in, std::span<cplx> out) { execute(in, out, false); }

}  // namespace bogauge::detail
