#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace semgrid::kernels {

// Flat-array arithmetic primitives behind every hot loop (convolutions,
// batch-norm reductions, softmax, grid arithmetic). Scalar reference
// implementations are always available; vectorized variants (AVX2 on x86-64,
// NEON on aarch64) are selected at runtime and must agree with the scalar
// path up to floating-point reassociation of reductions.
struct Ops {
    const char* name;

    // y[i] += a * x[i]
    void (*axpy)(double a, const double* x, double* y, std::size_t n);
    // sum_i x[i] * y[i]
    double (*dot)(const double* x, const double* y, std::size_t n);
    // sum_i x[i]
    double (*sum)(const double* x, std::size_t n);
    // sum_i x[i]^2
    double (*sumsq)(const double* x, std::size_t n);
    // x[i] *= a
    void (*scale)(double a, double* x, std::size_t n);
    // y[i] += x[i]
    void (*add)(const double* x, double* y, std::size_t n);
    // y[i] = a * x[i] + b
    void (*affine)(double a, double b, const double* x, double* y, std::size_t n);
    // dst[i] = a * x[i] + b * y[i] + c
    void (*lincomb2)(double a, const double* x, double b, const double* y, double c,
                     double* dst, std::size_t n);
    // y[i] = max(x[i], 0)
    void (*relu)(const double* x, double* y, std::size_t n);
    // dst[i] = g[i] * (x[i] > 0 ? 1 : 0)
    void (*relu_mask_grad)(const double* x, const double* g, double* dst, std::size_t n);
    // dst[i] = max(dst[i], x[i])
    void (*emax)(const double* x, double* dst, std::size_t n);
    // dst[i] = x[i] * y[i]
    void (*emul)(const double* x, const double* y, double* dst, std::size_t n);
    // dst[i] += x[i] * y[i]
    void (*emul_acc)(const double* x, const double* y, double* dst, std::size_t n);
    // dst[i] = x[i] - y[i]
    void (*esub)(const double* x, const double* y, double* dst, std::size_t n);
    // dst[i] = x[i] / y[i]
    void (*ediv)(const double* x, const double* y, double* dst, std::size_t n);
    // Row-strided forms used by the convolution inner loops; one call covers
    // a whole shifted plane so the per-row work stays inside the backend.
    // y[r*ys + i] += a * x[r*xs + i]
    void (*axpy2d)(double a, const double* x, std::size_t xs, double* y, std::size_t ys,
                   std::size_t rows, std::size_t cols);
    // sum_{r,i} x[r*xs + i] * y[r*ys + i]
    double (*dot2d)(const double* x, std::size_t xs, const double* y, std::size_t ys,
                    std::size_t rows, std::size_t cols);
};

// Always-available reference implementation.
const Ops& scalar_ops();

// Backend chosen at startup: best supported variant, overridable with
// SEMGRID_KERNELS=scalar|avx2|neon|auto.
const Ops& active();

// Forces a backend by name ("auto" re-runs detection). Throws ConfigError if
// the backend is not supported on this machine. Intended for tests/benchmarks.
void force(const std::string& name);

// All backends usable on this machine (scalar first).
std::vector<const Ops*> available();

}  // namespace semgrid::kernels
