#include "cgl/presets.hpp"

#include <regex>

#include "cgl/error.hpp"

namespace cgl {

namespace {

using Form = std::vector<std::vector<std::int64_t>>;

Form zeros(int n) { return Form(static_cast<std::size_t>(n), std::vector<std::int64_t>(static_cast<std::size_t>(n), 0)); }

}  // namespace

SpacePtr make_super(int m, int n) {
    if (m < 0 || n < 0 || m + n == 0) throw DomainError("super(m|n) needs m, n >= 0 and m + n > 0");
    GradingGroup g{0, 1};
    CommutativeFactor f(g, {{1}}, {{0}});
    std::vector<Component> comps;
    if (m) comps.push_back({Degree(g, {0}), m});
    if (n) comps.push_back({Degree(g, {1}), n});
    return make_space(f, comps);
}

SpacePtr make_z2z2(const std::vector<int>& dims) {
    if (dims.size() != 4) throw ShapeError("z2z2 needs four dimensions");
    GradingGroup g{0, 2};
    CommutativeFactor f(g, {{0, 1}, {1, 0}}, zeros(2));
    const std::vector<std::vector<std::int64_t>> degs{{0, 0}, {1, 0}, {0, 1}, {1, 1}};
    std::vector<Component> comps;
    for (std::size_t i = 0; i < 4; ++i) {
        if (dims[i] < 0) throw DomainError("z2z2 dimensions must be non-negative");
        if (dims[i]) comps.push_back({Degree(g, degs[i]), dims[i]});
    }
    if (comps.empty()) throw DomainError("z2z2 space is empty");
    return make_space(f, comps);
}

SpacePtr make_glq(int m, int n) {
    if (m < 0 || n < 0 || m + n == 0) throw DomainError("glq(m|n) needs m, n >= 0 and m + n > 0");
    const int k = m + n;
    GradingGroup g{k, 0};
    Form s = zeros(k), b = zeros(k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            if (i >= m && j >= m) s[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = 1;
            b[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = i < j ? 1 : (i > j ? -1 : 0);
        }
    CommutativeFactor f(g, s, b);
    std::vector<Component> comps;
    for (int i = 0; i < k; ++i) {
        std::vector<std::int64_t> e(static_cast<std::size_t>(k), 0);
        e[static_cast<std::size_t>(i)] = 1;
        comps.push_back({Degree(g, e), 1});
    }
    return make_space(f, comps);
}

SpacePtr make_green(int n) {
    if (n < 1) throw DomainError("green(n) needs n >= 1");
    GradingGroup g{n, 0};
    Form s = zeros(n);
    for (int i = 0; i < n; ++i) s[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
    CommutativeFactor f(g, s, zeros(n));
    std::vector<Component> comps;
    for (int i = 0; i < n; ++i) {
        std::vector<std::int64_t> e(static_cast<std::size_t>(n), 0);
        e[static_cast<std::size_t>(i)] = 1;
        comps.push_back({Degree(g, e), 1});
    }
    return make_space(f, comps);
}

SpacePtr preset(const std::string& name) {
    static const std::regex pair_re(R"(^(super|glq)\((\d+)\|(\d+)\)$)");
    static const std::regex z2_re(R"(^z2z2\((\d+),(\d+),(\d+),(\d+)\)$)");
    static const std::regex green_re(R"(^green\((\d+)\)$)");
    std::smatch m;
    if (std::regex_match(name, m, pair_re)) {
        int a = std::stoi(m[2]), b = std::stoi(m[3]);
        return m[1] == "super" ? make_super(a, b) : make_glq(a, b);
    }
    if (std::regex_match(name, m, z2_re))
        return make_z2z2({std::stoi(m[1]), std::stoi(m[2]), std::stoi(m[3]), std::stoi(m[4])});
    if (std::regex_match(name, m, green_re)) return make_green(std::stoi(m[1]));
    throw ParseError("unknown preset '" + name + "'; known forms: super(m|n), z2z2(a,b,c,d), glq(m|n), green(n)");
}

std::vector<std::string> builtin_spaces() { return {"super(m|n)", "z2z2(a,b,c,d)", "glq(m|n)", "green(n)"}; }

}  // namespace cgl
