#include "semgrid/kernels/kernels.hpp"

namespace semgrid::kernels {
namespace {

void axpy(double a, const double* x, double* y, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) y[i] += a * x[i];
}

double dot(const double* x, const double* y, std::size_t n) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += x[i] * y[i];
    return s;
}

double sum(const double* x, std::size_t n) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += x[i];
    return s;
}

double sumsq(const double* x, std::size_t n) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += x[i] * x[i];
    return s;
}

void scale(double a, double* x, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) x[i] *= a;
}

void add(const double* x, double* y, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) y[i] += x[i];
}

void affine(double a, double b, const double* x, double* y, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) y[i] = a * x[i] + b;
}

void lincomb2(double a, const double* x, double b, const double* y, double c,
              double* dst, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) dst[i] = a * x[i] + b * y[i] + c;
}

void relu(const double* x, double* y, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) y[i] = x[i] > 0.0 ? x[i] : 0.0;
}

void relu_mask_grad(const double* x, const double* g, double* dst, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) dst[i] = x[i] > 0.0 ? g[i] : 0.0;
}

void emax(const double* x, double* dst, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) dst[i] = x[i] > dst[i] ? x[i] : dst[i];
}

void emul(const double* x, const double* y, double* dst, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) dst[i] = x[i] * y[i];
}

void emul_acc(const double* x, const double* y, double* dst, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) dst[i] += x[i] * y[i];
}

void esub(const double* x, const double* y, double* dst, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) dst[i] = x[i] - y[i];
}

void ediv(const double* x, const double* y, double* dst, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) dst[i] = x[i] / y[i];
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

const Ops& scalar_ops() {
    static const Ops ops{
        .name = "scalar",
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
    return ops;
}

}  // namespace semgrid::kernels
