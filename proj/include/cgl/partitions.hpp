#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cgl/gl_algebra.hpp"

namespace cgl {

class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return p_; }
    int size() const;
    int length() const { return static_cast<int>(p_.size()); }  // depth, lambda'_1
    // lambda_i with 1-based i; zero past the end.
    int part(int i) const { return i >= 1 && i <= length() ? p_[static_cast<std::size_t>(i - 1)] : 0; }
    Partition transpose() const;
    bool empty() const { return p_.empty(); }

    friend bool operator==(const Partition&, const Partition&) = default;
    friend bool operator<(const Partition& a, const Partition& b) { return a.p_ < b.p_; }
    std::string str() const;

private:
    std::vector<int> p_;
};

// lambda_{M+ + 1} <= M-.
bool in_hook(const Partition& l, int m_plus, int m_minus);

// All partitions of n in reverse lexicographic order.
std::vector<Partition> partitions_of(int n);

// Weight (lambda_1..lambda_{M+} ; theta(lambda'_j - M+) for j = 1..M-).
Weight lambda_sharp(const Partition& l, int m_plus, int m_minus);

// Inverse of lambda_sharp on integral weights; nullopt when the weight is
// not of that form.
std::optional<Partition> sharp_preimage(const Weight& w, int m_plus, int m_minus);

// Number of (M+, M-)-semistandard tableaux of shape lambda.
std::uint64_t count_hook_tableaux(const Partition& l, int m_plus, int m_minus);
// The same count without the memo table and with no pruning beyond the
// tableau rules; kept as a reference for tests.
std::uint64_t count_hook_tableaux_reference(const Partition& l, int m_plus, int m_minus);

// f^lambda by the hook length formula.
std::uint64_t count_standard_tableaux(const Partition& l);
// Hook-content formula; 0 when depth(lambda) > n.
std::uint64_t dim_glN(const Partition& l, int n);

// lambda |- d with lambda in P_{M+|M-} and depth <= n.
std::vector<Partition> hook_partitions(int m_plus, int m_minus, int n, int d);

std::uint64_t binomial(std::int64_t n, std::int64_t k);

}  // namespace cgl
