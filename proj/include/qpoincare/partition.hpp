#pragma once

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qpoincare {

/*
 * Integer partition: a weakly decreasing sequence of positive integers.
 * Trailing zeros are stripped on construction; out-of-order input is
 * rejected rather than sorted. part(i) is 1-based and reads 0 beyond the
 * length, matching the usual convention lambda_i = 0 for i > length.
 */
class Partition {
public:
    Partition() = default;

    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] <= 0)
                throw std::invalid_argument("partition parts must be positive");
            if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
                throw std::invalid_argument("partition parts must be weakly decreasing");
        }
    }

    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    // "3,2,2"; the empty partition is "-"
    static Partition parse(std::string_view text) {
        if (text == "-") return Partition();
        std::vector<int> parts;
        std::size_t pos = 0;
        while (pos <= text.size()) {
            std::size_t comma = text.find(',', pos);
            std::string_view tok = text.substr(pos, comma == std::string_view::npos
                                                        ? std::string_view::npos
                                                        : comma - pos);
            if (tok.empty()) throw std::invalid_argument("bad partition: " + std::string(text));
            int value = 0;
            for (char c : tok) {
                if (c < '0' || c > '9')
                    throw std::invalid_argument("bad partition: " + std::string(text));
                value = value * 10 + (c - '0');
                if (value > 1000000) throw std::invalid_argument("partition part too large");
            }
            parts.push_back(value);
            if (comma == std::string_view::npos) break;
            pos = comma + 1;
        }
        return Partition(std::move(parts));
    }

    [[nodiscard]] const std::vector<int>& parts() const { return parts_; }
    [[nodiscard]] int length() const { return static_cast<int>(parts_.size()); }
    [[nodiscard]] bool empty() const { return parts_.empty(); }

    [[nodiscard]] long weight() const {
        return std::accumulate(parts_.begin(), parts_.end(), 0L);
    }

    // 1-based; 0 beyond the length
    [[nodiscard]] int part(int i) const {
        return (i >= 1 && i <= length()) ? parts_[static_cast<std::size_t>(i - 1)] : 0;
    }

    [[nodiscard]] Partition conjugate() const {
        std::vector<int> cols;
        if (!parts_.empty()) {
            cols.resize(static_cast<std::size_t>(parts_[0]));
            for (int c = 1; c <= parts_[0]; ++c) {
                int count = 0;
                for (int p : parts_)
                    if (p >= c) ++count;
                cols[static_cast<std::size_t>(c - 1)] = count;
            }
        }
        return Partition(std::move(cols));
    }

    // containment of Young diagrams (inner fits inside *this)
    [[nodiscard]] bool contains(const Partition& inner) const {
        if (inner.length() > length()) return false;
        for (int i = 1; i <= inner.length(); ++i)
            if (part(i) < inner.part(i)) return false;
        return true;
    }

    [[nodiscard]] std::string to_string() const {
        if (parts_.empty()) return "-";
        std::string out;
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i) out += ',';
            out += std::to_string(parts_[i]);
        }
        return out;
    }

    friend bool operator==(const Partition& a, const Partition& b) = default;
    friend auto operator<=>(const Partition& a, const Partition& b) = default;

private:
    std::vector<int> parts_;
};

// Descending lexicographic, the deterministic output order.
struct PartitionDescLex {
    bool operator()(const Partition& a, const Partition& b) const { return b < a; }
};

// Degrees (m, n) of the numerator / denominator of the Poincare series.
struct Birank {
    int m = 0;
    int n = 0;
    friend bool operator==(const Birank&, const Birank&) = default;
};

// lambda_{m+1} <= n : exactly the partitions indexing nonzero simples
inline bool in_gamma(const Partition& lambda, Birank b) {
    if (b.m < 0 || b.n < 0) throw std::invalid_argument("birank components must be nonnegative");
    return lambda.part(b.m + 1) <= b.n;
}

inline bool is_splitting(const Partition& lambda, Birank b) {
    if (!in_gamma(lambda, b))
        throw std::invalid_argument("partition " + lambda.to_string() + " is not in Gamma_{m,n}");
    if (b.m == 0) return true;  // lambda_0 reads as +infinity: everything in Gamma_{0,n} splits
    return lambda.part(b.m) >= b.n;
}

struct SplitDecomposition {
    Partition alpha;  // at most m nonzero parts
    Partition beta;   // beta_1 <= n
};

// lambda = ((n^m) + alpha) u beta for splitting lambda
inline SplitDecomposition split_decompose(const Partition& lambda, Birank b) {
    if (!is_splitting(lambda, b))
        throw std::invalid_argument("partition " + lambda.to_string() + " is not splitting");
    std::vector<int> alpha;
    for (int i = 1; i <= b.m; ++i) alpha.push_back(lambda.part(i) - b.n);
    std::vector<int> beta(lambda.parts().begin() + std::min<std::size_t>(b.m, lambda.parts().size()),
                          lambda.parts().end());
    return SplitDecomposition{Partition(std::move(alpha)), Partition(std::move(beta))};
}

inline Partition recompose_split(const SplitDecomposition& sd, Birank b) {
    std::vector<int> parts;
    for (int i = 1; i <= b.m; ++i) parts.push_back(b.n + sd.alpha.part(i));
    for (int p : sd.beta.parts()) parts.push_back(p);
    return Partition(std::move(parts));
}

// The min(k,m)+1 partitions ((n+1)^{m-l}, n^{2l+1}, (n-1)^{k-l}), l = 0..min(k,m).
inline std::vector<Partition> eq4_partition_list(Birank b, int k) {
    if (k < 0) throw std::invalid_argument("k must be nonnegative");
    if (b.m == 0 && b.n == 0) throw std::invalid_argument("birank (0,0) not supported here");
    if (b.n == 0 && k > 0)
        throw std::invalid_argument("list undefined for n = 0 with k > 0");
    std::vector<Partition> out;
    int lmax = std::min(k, b.m);
    for (int l = 0; l <= lmax; ++l) {
        std::vector<int> parts;
        parts.insert(parts.end(), static_cast<std::size_t>(b.m - l), b.n + 1);
        parts.insert(parts.end(), static_cast<std::size_t>(2 * l + 1), b.n);
        parts.insert(parts.end(), static_cast<std::size_t>(k - l), b.n - 1);
        out.emplace_back(std::move(parts));
    }
    return out;
}

}  // namespace qpoincare
