#pragma once

#include <cstddef>

// Dense matrix kernels behind the tensor ops. Each kernel exists twice: a
// plain serial loop (the reference) and an OpenMP version parallelized over
// output rows. Every output element is the same serially-accumulated dot
// product in both, so results are bit-identical for any thread count; the
// unsuffixed entry point picks between them by problem size.
namespace geolm::kern {

// c (n x m) = op(a) * op(b), or c += ... when accumulate is set.
// op(a) is (n x k): a is stored (n x k) row-major, or (k x n) when trans_a.
// op(b) is (k x m): b is stored (k x m) row-major, or (m x k) when trans_b.
void gemm_serial(bool trans_a, bool trans_b, std::size_t n, std::size_t k, std::size_t m,
                 const double* a, const double* b, double* c, bool accumulate);
void gemm_omp(bool trans_a, bool trans_b, std::size_t n, std::size_t k, std::size_t m,
              const double* a, const double* b, double* c, bool accumulate);
void gemm(bool trans_a, bool trans_b, std::size_t n, std::size_t k, std::size_t m,
          const double* a, const double* b, double* c, bool accumulate);

// Work threshold (multiply-add count) above which gemm() goes parallel.
inline constexpr std::size_t kGemmParallelThreshold = 1u << 16;

}  // namespace geolm::kern
