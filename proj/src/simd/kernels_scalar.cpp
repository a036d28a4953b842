#include "casimir/simd.hpp"
#include "casimir/specfun.hpp"

#include <cmath>

namespace casimir::simd::detail {

// Reference kernels.  These define the semantics the vector variants are
// equivalence-tested against.

void k2_batch_scalar(const double* z, double* out, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) out[i] = specfun::bessel_k2(z[i]);
}

void prefactor_row_scalar(double drag, double inv_scale_sq, double u_limit,
                          const double* vel, std::size_t n,
                          double* big_r, double* pref_y, unsigned char* allowed) {
    for (std::size_t i = 0; i < n; ++i) {
        const double d = vel[i] - drag;
        const double u = inv_scale_sq * d * d;
        if (u < u_limit) {
            const double r2 = 1.0 - u;
            const double r = std::sqrt(r2);
            big_r[i] = r;
            pref_y[i] = (3.0 * r2 - 2.0) / (r2 * r);
            allowed[i] = 1;
        } else {
            big_r[i] = 0.0;
            pref_y[i] = 0.0;
            allowed[i] = 0;
        }
    }
}

}  // namespace casimir::simd::detail
