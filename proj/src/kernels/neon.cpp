// NEON variants (aarch64, 2-wide f64).

#include "semgrid/kernels/kernels.hpp"

#if defined(__aarch64__)

#include <arm_neon.h>

namespace semgrid::kernels {
namespace {

void axpy(double a, const double* x, double* y, std::size_t n) {
    const float64x2_t va = vdupq_n_f64(a);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        vst1q_f64(y + i, vfmaq_f64(vld1q_f64(y + i), va, vld1q_f64(x + i)));
        vst1q_f64(y + i + 2, vfmaq_f64(vld1q_f64(y + i + 2), va, vld1q_f64(x + i + 2)));
    }
    for (; i + 2 <= n; i += 2) {
        vst1q_f64(y + i, vfmaq_f64(vld1q_f64(y + i), va, vld1q_f64(x + i)));
    }
    for (; i < n; ++i) y[i] += a * x[i];
}

double dot(const double* x, const double* y, std::size_t n) {
    float64x2_t acc0 = vdupq_n_f64(0.0);
    float64x2_t acc1 = vdupq_n_f64(0.0);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        acc0 = vfmaq_f64(acc0, vld1q_f64(x + i), vld1q_f64(y + i));
        acc1 = vfmaq_f64(acc1, vld1q_f64(x + i + 2), vld1q_f64(y + i + 2));
    }
    for (; i + 2 <= n; i += 2) {
        acc0 = vfmaq_f64(acc0, vld1q_f64(x + i), vld1q_f64(y + i));
    }
    double s = vaddvq_f64(vaddq_f64(acc0, acc1));
    for (; i < n; ++i) s += x[i] * y[i];
    return s;
}

double sum(const double* x, std::size_t n) {
    float64x2_t acc = vdupq_n_f64(0.0);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) acc = vaddq_f64(acc, vld1q_f64(x + i));
    double s = vaddvq_f64(acc);
    for (; i < n; ++i) s += x[i];
    return s;
}

double sumsq(const double* x, std::size_t n) {
    float64x2_t acc = vdupq_n_f64(0.0);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        float64x2_t v = vld1q_f64(x + i);
        acc = vfmaq_f64(acc, v, v);
    }
    double s = vaddvq_f64(acc);
    for (; i < n; ++i) s += x[i] * x[i];
    return s;
}

void scale(double a, double* x, std::size_t n) {
    const float64x2_t va = vdupq_n_f64(a);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) vst1q_f64(x + i, vmulq_f64(va, vld1q_f64(x + i)));
    for (; i < n; ++i) x[i] *= a;
}

void add(const double* x, double* y, std::size_t n) {
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) vst1q_f64(y + i, vaddq_f64(vld1q_f64(x + i), vld1q_f64(y + i)));
    for (; i < n; ++i) y[i] += x[i];
}

void affine(double a, double b, const double* x, double* y, std::size_t n) {
    const float64x2_t va = vdupq_n_f64(a);
    const float64x2_t vb = vdupq_n_f64(b);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) vst1q_f64(y + i, vfmaq_f64(vb, va, vld1q_f64(x + i)));
    for (; i < n; ++i) y[i] = a * x[i] + b;
}

void lincomb2(double a, const double* x, double b, const double* y, double c,
              double* dst, std::size_t n) {
    const float64x2_t va = vdupq_n_f64(a);
    const float64x2_t vb = vdupq_n_f64(b);
    const float64x2_t vc = vdupq_n_f64(c);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        float64x2_t t = vfmaq_f64(vc, vb, vld1q_f64(y + i));
        vst1q_f64(dst + i, vfmaq_f64(t, va, vld1q_f64(x + i)));
    }
    for (; i < n; ++i) dst[i] = a * x[i] + b * y[i] + c;
}

void relu(const double* x, double* y, std::size_t n) {
    const float64x2_t zero = vdupq_n_f64(0.0);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) vst1q_f64(y + i, vmaxq_f64(zero, vld1q_f64(x + i)));
    for (; i < n; ++i) y[i] = x[i] > 0.0 ? x[i] : 0.0;
}

void relu_mask_grad(const double* x, const double* g, double* dst, std::size_t n) {
    const float64x2_t zero = vdupq_n_f64(0.0);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        uint64x2_t mask = vcgtq_f64(vld1q_f64(x + i), zero);
        float64x2_t gv = vld1q_f64(g + i);
        vst1q_f64(dst + i, vreinterpretq_f64_u64(
                               vandq_u64(mask, vreinterpretq_u64_f64(gv))));
    }
    for (; i < n; ++i) dst[i] = x[i] > 0.0 ? g[i] : 0.0;
}

void emax(const double* x, double* dst, std::size_t n) {
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        vst1q_f64(dst + i, vmaxq_f64(vld1q_f64(dst + i), vld1q_f64(x + i)));
    }
    for (; i < n; ++i) dst[i] = x[i] > dst[i] ? x[i] : dst[i];
}

void emul(const double* x, const double* y, double* dst, std::size_t n) {
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) vst1q_f64(dst + i, vmulq_f64(vld1q_f64(x + i), vld1q_f64(y + i)));
    for (; i < n; ++i) dst[i] = x[i] * y[i];
}

void emul_acc(const double* x, const double* y, double* dst, std::size_t n) {
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        vst1q_f64(dst + i, vfmaq_f64(vld1q_f64(dst + i), vld1q_f64(x + i), vld1q_f64(y + i)));
    }
    for (; i < n; ++i) dst[i] += x[i] * y[i];
}

void esub(const double* x, const double* y, double* dst, std::size_t n) {
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) vst1q_f64(dst + i, vsubq_f64(vld1q_f64(x + i), vld1q_f64(y + i)));
    for (; i < n; ++i) dst[i] = x[i] - y[i];
}

void ediv(const double* x, const double* y, double* dst, std::size_t n) {
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) vst1q_f64(dst + i, vdivq_f64(vld1q_f64(x + i), vld1q_f64(y + i)));
    for (; i < n; ++i) dst[i] = x[i] / y[i];
}


void axpy2d(double a, const double* x, std::size_t xs, double* y, std::size_t ys,
            std::size_t rows, std::size_t cols) {
    for (std::size_t r = 0; r < rows; ++r) axpy(a, x + r * xs, y + r * ys, cols);
}

double dot2d(const double* x, std::size_t xs, const double* y, std::size_t ys,
             std::size_t rows, std::size_t cols) {
    double s = 0.0;
    for (std::size_t r = 0; r < rows; ++r) s += dot(x + r * xs, y + r * ys, cols);
    return s;
}

}  // namespace

const Ops* neon_ops() {
    static const Ops ops{
        .name = "neon",
        .axpy = axpy,
        .dot = dot,
        .sum = sum,
        .sumsq = sumsq,
        .scale = scale,
        .add = add,
        .affine = affine,
        .lincomb2 = lincomb2,
        .relu = relu,
        .relu_mask_grad = relu_mask_grad,
        .emax = emax,
        .emul = emul,
        .emul_acc = emul_acc,
        .esub = esub,
        .ediv = ediv,
        .axpy2d = axpy2d,
        .dot2d = dot2d,
    };
    return &ops;
}

}  // namespace semgrid::kernels

#else

namespace semgrid::kernels {
const Ops* neon_ops() { return nullptr; }
}  // namespace semgrid::kernels

#endif
