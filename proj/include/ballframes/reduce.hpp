#pragma once

#ifdef __FAST_MATH__
#error "fast-math breaks compensated summation; build without -ffast-math"
#endif

#include <complex>
#include <cstddef>
#include <vector>

namespace ballframes::reduce {

/// Neumaier-compensated accumulator.
struct Kahan {
    double sum = 0.0;
    double carry = 0.0;

    void add(double x) {
        const double t = sum + x;
        if (std::abs(sum) >= std::abs(x))
            carry += (sum - t) + x;
        else
            carry += (x - t) + sum;
        sum = t;
    }
    double value() const { return sum + carry; }
};

struct KahanC {
    Kahan re, im;
    void add(const std::complex<double>& z) {
        re.add(z.real());
        im.add(z.imag());
    }
    std::complex<double> value() const { return {re.value(), im.value()}; }
};

/// Serial reference: one compensated pass over term(0..count-1).
template <typename F>
double serial_sum(std::size_t count, F&& term) {
    Kahan acc;
    for (std::size_t i = 0; i < count; ++i) acc.add(term(i));
    return acc.value();
}

template <typename F>
std::complex<double> serial_sum_c(std::size_t count, F&& term) {
    KahanC acc;
    for (std::size_t i = 0; i < count; ++i) acc.add(term(i));
    return acc.value();
}

/// Chunk width of the deterministic reduction.  Fixed: the partitioning must
/// not depend on the worker count, otherwise results drift with threads.
inline constexpr std::size_t kChunk = 4096;

/// Deterministic parallel sum: terms are split into fixed-size chunks, each
/// chunk is summed serially (compensated), and the chunk partials are
/// combined serially in index order.  The result is bit-identical for any
/// number of OpenMP threads and matches serial_sum to compensated accuracy.
template <typename F>
double deterministic_sum(std::size_t count, F&& term) {
    if (count == 0) return 0.0;
    const std::size_t nchunks = (count + kChunk - 1) / kChunk;
    std::vector<double> partial(nchunks);
#pragma omp parallel for schedule(static)
    for (long long c = 0; c < static_cast<long long>(nchunks); ++c) {
        const std::size_t lo = static_cast<std::size_t>(c) * kChunk;
        const std::size_t hi = std::min(lo + kChunk, count);
        Kahan acc;
        for (std::size_t i = lo; i < hi; ++i) acc.add(term(i));
        partial[static_cast<std::size_t>(c)] = acc.value();
    }
    Kahan total;
    for (double p : partial) total.add(p);
    return total.value();
}

template <typename F>
std::complex<double> deterministic_sum_c(std::size_t count, F&& term) {
    if (count == 0) return {0.0, 0.0};
    const std::size_t nchunks = (count + kChunk - 1) / kChunk;
    std::vector<std::complex<double>> partial(nchunks);
#pragma omp parallel for schedule(static)
    for (long long c = 0; c < static_cast<long long>(nchunks); ++c) {
        const std::size_t lo = static_cast<std::size_t>(c) * kChunk;
        const std::size_t hi = std::min(lo + kChunk, count);
        KahanC acc;
        for (std::size_t i = lo; i < hi; ++i) acc.add(term(i));
        partial[static_cast<std::size_t>(c)] = acc.value();
    }
    KahanC total;
    for (const auto& p : partial) total.add(p);
    return total.value();
}

/// Deterministic parallel accumulation of vector-valued terms: out[j] =
/// sum_i term(i, j).  Chunked like deterministic_sum; each chunk keeps a
/// local accumulator vector, chunk results are merged in chunk order.
/// `term` writes its contribution into a scratch row via emit(j, value).
template <typename F>
std::vector<double> deterministic_sum_rows(std::size_t count, std::size_t width, F&& fill_row) {
    const std::size_t nchunks = count == 0 ? 0 : (count + kChunk - 1) / kChunk;
    std::vector<std::vector<double>> partial(nchunks);
#pragma omp parallel
    {
        std::vector<double> row(width);
#pragma omp for schedule(static)
        for (long long c = 0; c < static_cast<long long>(nchunks); ++c) {
            const std::size_t lo = static_cast<std::size_t>(c) * kChunk;
            const std::size_t hi = std::min(lo + kChunk, count);
            std::vector<Kahan> acc(width);
            for (std::size_t i = lo; i < hi; ++i) {
                fill_row(i, row);
                for (std::size_t j = 0; j < width; ++j) acc[j].add(row[j]);
            }
            auto& out = partial[static_cast<std::size_t>(c)];
            out.resize(width);
            for (std::size_t j = 0; j < width; ++j) out[j] = acc[j].value();
        }
    }
    std::vector<Kahan> total(width);
    for (const auto& p : partial)
        for (std::size_t j = 0; j < width; ++j) total[j].add(p[j]);
    std::vector<double> out(width);
    for (std::size_t j = 0; j < width; ++j) out[j] = total[j].value();
    return out;
}

} // namespace ballframes::reduce
