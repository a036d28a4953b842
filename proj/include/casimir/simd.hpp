#pragma once

#include <cstddef>

namespace casimir::simd {

enum class Isa { Scalar, Avx2 };

// Hot inner-loop kernels.  Every entry has a scalar reference implementation
// and, on x86-64 hosts with AVX2+FMA, a vectorised variant selected once at
// startup.  The environment variable CASIMIR_SIMD=scalar|avx2 overrides the
// automatic choice (an unavailable request falls back to scalar).
struct Kernels {
    // out[i] = K2(z[i]) for z[i] > 0; arguments above the underflow cutoff
    // yield exact 0.  The AVX2 variant evaluates a Chebyshev fit of
    // e^z sqrt(z) K2(z) for lanes in [2, 700] and defers the rest to the
    // scalar path.
    void (*k2_batch)(const double* z, double* out, std::size_t n);

    // Orientation prefactors along one sweep row.  With
    //   u_i = inv_scale_sq * (vel[i] - drag)^2
    // lanes with u_i < u_limit get
    //   big_r[i]  = sqrt(1 - u_i)                    (x-orientation factor)
    //   pref_y[i] = (3 (1-u_i) - 2) / (1-u_i)^{3/2}  (y-orientation factor)
    //   allowed[i] = 1
    // and excluded lanes get zeros with allowed[i] = 0.
    void (*prefactor_row)(double drag, double inv_scale_sq, double u_limit,
                          const double* vel, std::size_t n,
                          double* big_r, double* pref_y, unsigned char* allowed);
};

// Kernel table selected for this process (stable after first call).
const Kernels& active();
Isa active_isa();

// Table for a specific ISA, or nullptr when this host cannot run it.
const Kernels* kernels_for(Isa isa);

const char* to_string(Isa isa);

}  // namespace casimir::simd
