#pragma once

#include <cmath>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace taskinfer {

// Dense embedding vector. All arithmetic accumulates in double regardless of
// the precision the source file was written at.
using Vec = std::vector<double>;

// Returned by cosine() when either argument has zero norm. Strictly below any
// legal cosine, so zero vectors never win a max-similarity comparison.
inline constexpr double kZeroNormCosine = -2.0;

inline void check_same_dimension(const Vec& a, const Vec& b, const char* op) {
    if (a.size() != b.size()) {
        throw std::invalid_argument(std::string(op) + ": dimension mismatch (" +
                                    std::to_string(a.size()) + " vs " +
                                    std::to_string(b.size()) + ")");
    }
}

// a.b / (|a| |b|). Symmetric bit-for-bit: products commute and the
// accumulation order is the index order for both argument orders.
inline double cosine(const Vec& a, const Vec& b) {
    check_same_dimension(a, b, "cosine");
    double ab = 0.0, aa = 0.0, bb = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        ab += a[i] * b[i];
        aa += a[i] * a[i];
        bb += b[i] * b[i];
    }
    if (aa == 0.0 || bb == 0.0) return kZeroNormCosine;
    return ab / (std::sqrt(aa) * std::sqrt(bb));
}

// Sum(w_i v_i) / Sum(w_i). Weights must be non-negative with at least one
// strictly positive.
Vec weighted_average(const std::vector<Vec>& vectors, std::span<const double> weights);

// Streaming unweighted mean; absent when nothing was added.
class MeanAccumulator {
public:
    void add(std::span<const double> v) {
        if (sum_.empty()) sum_.assign(v.size(), 0.0);
        if (v.size() != sum_.size()) {
            throw std::invalid_argument("mean: dimension mismatch");
        }
        for (std::size_t i = 0; i < v.size(); ++i) sum_[i] += v[i];
        ++count_;
    }

    std::optional<Vec> mean() const {
        if (count_ == 0) return std::nullopt;
        Vec out(sum_);
        for (double& x : out) x /= static_cast<double>(count_);
        return out;
    }

    std::size_t count() const { return count_; }

private:
    Vec sum_;
    std::size_t count_ = 0;
};

}  // namespace taskinfer
