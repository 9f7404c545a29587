#pragma once

#include <memory>
#include <string>
#include <vector>

#include "cgl/grading.hpp"

namespace cgl {

struct Component {
    Degree degree;
    int dim = 0;
};

// Gamma-graded vector space V(Gamma, omega) with its distinguished order:
// every even-parity component precedes every odd one. Flat basis indices
// run 0..dim()-1; index a < M+ is even.
class GradedSpace {
public:
    enum class Order { user, lexicographic };

    GradedSpace(CommutativeFactor factor, std::vector<Component> components, Order order = Order::user);

    const CommutativeFactor& factor() const { return factor_; }
    const GradingGroup& group() const { return factor_.group(); }
    const std::vector<Component>& components() const { return comps_; }

    int dim() const { return static_cast<int>(deg_.size()); }
    int m_plus() const { return m_plus_; }
    int m_minus() const { return dim() - m_plus_; }
    bool is_even(int a) const { return a < m_plus_; }
    int parity(int a) const { return is_even(a) ? 1 : -1; }
    const Degree& degree(int a) const { return deg_[static_cast<std::size_t>(a)]; }
    int component_of(int a) const { return comp_of_[static_cast<std::size_t>(a)]; }

    OmegaValue omega(const Degree& a, const Degree& b) const { return factor_.value(a, b); }
    // omega(gamma_a, gamma_b) on flat indices, cached.
    OmegaValue omega_idx(int a, int b) const {
        return omega_tab_[static_cast<std::size_t>(a * dim() + b)];
    }
    Degree unit_degree(int a, int b) const { return degree(a) - degree(b); }

    // Label of flat index a: "1".."M+" for even, "1'".."M-'" for odd.
    std::string label(int a) const;

    // The sub-space spanned by the even (sign=+1) or odd (sign=-1) block.
    std::shared_ptr<const GradedSpace> block(int sign) const;

    friend bool operator==(const GradedSpace& a, const GradedSpace& b) {
        return a.factor_ == b.factor_ && a.deg_ == b.deg_;
    }

private:
    CommutativeFactor factor_;
    std::vector<Component> comps_;
    std::vector<Degree> deg_;
    std::vector<int> comp_of_;
    std::vector<OmegaValue> omega_tab_;
    int m_plus_ = 0;
};

using SpacePtr = std::shared_ptr<const GradedSpace>;

SpacePtr make_space(CommutativeFactor factor, std::vector<Component> components,
                    GradedSpace::Order order = GradedSpace::Order::user);

}  // namespace cgl
