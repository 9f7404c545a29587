#include "cgl/space.hpp"

#include <algorithm>
#include <set>

#include "cgl/error.hpp"

namespace cgl {

GradedSpace::GradedSpace(CommutativeFactor factor, std::vector<Component> components, Order order)
    : factor_(std::move(factor)) {
    std::set<std::vector<std::int64_t>> seen;
    for (const auto& c : components) {
        if (!(c.degree.group() == factor_.group())) throw ShapeError("component degree " + c.degree.str() + " has the wrong group");
        if (c.dim <= 0) throw DomainError("component multiplicities must be positive");
        if (!seen.insert(c.degree.coords()).second) throw DomainError("duplicate component degree " + c.degree.str());
    }
    std::vector<Component> even, odd;
    for (auto& c : components) (factor_.omega_parity(c.degree) > 0 ? even : odd).push_back(c);
    if (order == Order::lexicographic) {
        auto lex = [](const Component& a, const Component& b) { return a.degree < b.degree; };
        std::stable_sort(even.begin(), even.end(), lex);
        std::stable_sort(odd.begin(), odd.end(), lex);
    }
    comps_ = even;
    comps_.insert(comps_.end(), odd.begin(), odd.end());
    for (std::size_t ci = 0; ci < comps_.size(); ++ci) {
        for (int i = 0; i < comps_[ci].dim; ++i) {
            deg_.push_back(comps_[ci].degree);
            comp_of_.push_back(static_cast<int>(ci));
        }
        if (ci < even.size()) m_plus_ += comps_[ci].dim;
    }
    const int n = dim();
    omega_tab_.resize(static_cast<std::size_t>(n * n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) omega_tab_[static_cast<std::size_t>(a * n + b)] = factor_.value(deg_[a], deg_[b]);
}

std::string GradedSpace::label(int a) const {
    return is_even(a) ? std::to_string(a + 1) : std::to_string(a - m_plus_ + 1) + "'";
}

std::shared_ptr<const GradedSpace> GradedSpace::block(int sign) const {
    std::vector<Component> part;
    for (const auto& c : comps_)
        if (factor_.omega_parity(c.degree) == sign) part.push_back(c);
    return std::make_shared<const GradedSpace>(factor_, std::move(part), Order::user);
}

SpacePtr make_space(CommutativeFactor factor, std::vector<Component> components, GradedSpace::Order order) {
    return std::make_shared<const GradedSpace>(std::move(factor), std::move(components), order);
}

}  // namespace cgl
