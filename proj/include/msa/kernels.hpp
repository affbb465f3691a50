#pragma once

// Data-parallel inner loops shared by the aligners.
//
// Every kernel has a scalar reference implementation and, where the target
// supports it, an AVX2 variant. The active table is picked once at first use
// from the host CPU; `select_isa` overrides it (tests use this to compare
// variants). Reductions use four interleaved partial sums combined as
// (s0 + s1) + (s2 + s3) in every variant, and no variant contracts into FMA,
// so all variants produce bit-identical results.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace msa::kernels {

enum class Isa { scalar, avx2 };

struct MatchCounts {
    std::size_t identical = 0;     // columns with the same residue in both rows
    std::size_t residue_pairs = 0; // columns with a residue in both rows
};

struct KernelTable {
    Isa isa;
    double (*dot)(const double* a, const double* b, std::size_t n);
    // y[i] += alpha * x[i]
    void (*axpy)(double* y, double alpha, const double* x, std::size_t n);
    // Column-wise comparison of two gapped rows of equal length.
    MatchCounts (*match_counts)(const char* a, const char* b, std::size_t n, char gap);
};

const KernelTable& active();
const KernelTable& table_for(Isa isa);
bool isa_available(Isa isa);
void select_isa(Isa isa);
const char* isa_name(Isa isa);

inline double dot(std::span<const double> a, std::span<const double> b) {
    return active().dot(a.data(), b.data(), a.size());
}

inline void axpy(std::span<double> y, double alpha, std::span<const double> x) {
    active().axpy(y.data(), alpha, x.data(), y.size());
}

inline MatchCounts match_counts(std::string_view a, std::string_view b, char gap = '-') {
    return active().match_counts(a.data(), b.data(), a.size(), gap);
}

namespace detail {
double dot_ref(const double* a, const double* b, std::size_t n);
void axpy_ref(double* y, double alpha, const double* x, std::size_t n);
MatchCounts match_counts_ref(const char* a, const char* b, std::size_t n, char gap);
#if defined(MSA_HAVE_AVX2)
double dot_avx2(const double* a, const double* b, std::size_t n);
void axpy_avx2(double* y, double alpha, const double* x, std::size_t n);
MatchCounts match_counts_avx2(const char* a, const char* b, std::size_t n, char gap);
#endif
} // namespace detail

} // namespace msa::kernels
