#include "cgl/io.hpp"

#include <fstream>
#include <sstream>

#include "cgl/error.hpp"
#include "cgl/presets.hpp"

namespace cgl {

namespace {

using Form = std::vector<std::vector<std::int64_t>>;

template <class T>
T get_field(const Json& j, const char* key, const char* where) {
    if (!j.is_object() || !j.contains(key)) throw ParseError(std::string(where) + ": missing field '" + key + "'");
    try {
        return j.at(key).get<T>();
    } catch (const Json::exception& e) {
        throw ParseError(std::string(where) + ": field '" + key + "' has the wrong type (" + e.what() + ")");
    }
}

Form square_form(const Json& j, const char* key, int n) {
    Form f = j.contains(key) ? get_field<Form>(j, key, "factor") : Form(static_cast<std::size_t>(n), std::vector<std::int64_t>(static_cast<std::size_t>(n), 0));
    if (f.size() != static_cast<std::size_t>(n)) throw ParseError(std::string("factor: '") + key + "' must be " + std::to_string(n) + "x" + std::to_string(n));
    for (const auto& row : f)
        if (row.size() != static_cast<std::size_t>(n))
            throw ParseError(std::string("factor: '") + key + "' must be " + std::to_string(n) + "x" + std::to_string(n));
    return f;
}

}  // namespace

CommutativeFactor factor_from_json(const Json& j) {
    GradingGroup g{get_field<int>(j, "free_rank", "factor"), get_field<int>(j, "torsion2_rank", "factor")};
    if (g.free_rank < 0 || g.torsion2_rank < 0) throw ParseError("factor: ranks must be non-negative");
    const int n = g.rank();
    try {
        return CommutativeFactor(g, square_form(j, "sign_form", n), square_form(j, "exp_form", n));
    } catch (const ParseError&) {
        throw;
    } catch (const Error& e) {
        throw ParseError(std::string("factor: ") + e.what());
    }
}

Json factor_to_json(const CommutativeFactor& f) {
    return Json{{"free_rank", f.group().free_rank},
                {"torsion2_rank", f.group().torsion2_rank},
                {"sign_form", f.sign_form()},
                {"exp_form", f.exp_form()}};
}

SpacePtr space_from_json(const Json& j, const std::optional<CommutativeFactor>& factor) {
    if (!j.is_object()) throw ParseError("space: expected an object");
    CommutativeFactor f;
    if (factor) f = *factor;
    else if (j.contains("factor")) f = factor_from_json(j.at("factor"));
    else throw ParseError("space: no factor given inline or by --factor");
    auto comps_json = get_field<Json>(j, "components", "space");
    if (!comps_json.is_array() || comps_json.empty()) throw ParseError("space: 'components' must be a non-empty array");
    std::vector<Component> comps;
    for (std::size_t i = 0; i < comps_json.size(); ++i) {
        const std::string where = "space.components[" + std::to_string(i) + "]";
        auto coords = get_field<std::vector<std::int64_t>>(comps_json[i], "degree", where.c_str());
        int dim = get_field<int>(comps_json[i], "dim", where.c_str());
        try {
            comps.push_back({Degree(f.group(), coords), dim});
        } catch (const Error& e) {
            throw ParseError(where + ": " + e.what());
        }
    }
    auto order = GradedSpace::Order::user;
    if (j.contains("order")) {
        auto o = get_field<std::string>(j, "order", "space");
        if (o == "lexicographic") order = GradedSpace::Order::lexicographic;
        else if (o != "user") throw ParseError("space: 'order' must be \"user\" or \"lexicographic\"");
    }
    try {
        return make_space(f, comps, order);
    } catch (const Error& e) {
        throw ParseError(std::string("space: ") + e.what());
    }
}

Json space_to_json(const GradedSpace& v) {
    Json comps = Json::array();
    for (const auto& c : v.components()) comps.push_back(Json{{"degree", c.degree.coords()}, {"dim", c.dim}});
    return Json{{"factor", factor_to_json(v.factor())}, {"components", comps}};
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    try {
        return Json::parse(ss.str());
    } catch (const Json::parse_error& e) {
        throw ParseError("'" + path + "': malformed JSON at offset " + std::to_string(e.byte) + ": " + e.what());
    }
}

SpacePtr load_space(const std::string& spec, const std::string& factor_path) {
    if (spec.empty()) throw ParseError("no space given");
    std::optional<CommutativeFactor> f;
    if (!factor_path.empty()) f = factor_from_json(read_json_file(factor_path));
    if (spec.find('(') != std::string::npos && !std::ifstream(spec)) {
        if (f) throw ParseError("--factor cannot be combined with a preset space");
        return preset(spec);
    }
    return space_from_json(read_json_file(spec), f);
}

GlElement gl_from_json(SpacePtr space, const Json& j) {
    if (!j.is_array()) throw ParseError("gl element: expected an array of [a, b, \"scalar\"] triples");
    GlElement x(space);
    for (const auto& t : j) {
        if (!t.is_array() || t.size() != 3 || !t[0].is_number_integer() || !t[1].is_number_integer() || !t[2].is_string())
            throw ParseError("gl element: bad triple " + t.dump());
        try {
            x.add(t[0].get<int>(), t[1].get<int>(), Scalar::parse(t[2].get<std::string>()));
        } catch (const ParseError&) {
            throw;
        } catch (const Error& e) {
            throw ParseError(std::string("gl element: ") + e.what());
        }
    }
    return x;
}

Json gl_to_json(const GlElement& x) {
    Json out = Json::array();
    for (const auto& [ab, c] : x.terms()) out.push_back(Json::array({ab.first, ab.second, c.str()}));
    return out;
}

Weight parse_weight(const std::string& text) {
    Weight w;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto b = item.find_first_not_of(" \t");
        const auto e = item.find_last_not_of(" \t");
        if (b == std::string::npos) throw ParseError("weight '" + text + "': empty coordinate");
        item = item.substr(b, e - b + 1);
        Rational r;
        if (item.front() == '+') item.erase(0, 1);
        if (item.find_first_not_of("-0123456789/") != std::string::npos || r.set_str(item, 10) != 0 || r.get_den() == 0)
            throw ParseError("weight '" + text + "': bad coordinate '" + item + "'");
        r.canonicalize();
        w.c.push_back(r);
    }
    if (w.c.empty()) throw ParseError("weight is empty");
    return w;
}

std::string weight_text(const Weight& w) {
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + w[i].get_str();
    return s;
}

Json weight_to_json(const Weight& w) {
    Json out = Json::array();
    for (const auto& x : w.c) out.push_back(x.get_str());
    return out;
}

Json partition_to_json(const Partition& p) { return Json(p.parts()); }

Json job_to_json(const JobSpec& job) {
    return Json{{"command", job.command},   {"space", job.space},         {"space2", job.space2},
                {"factor", job.factor},     {"power", job.power},         {"copies", job.copies},
                {"copies2", job.copies2},   {"max_degree", job.max_degree}, {"depth", job.depth},
                {"weight", job.weight},     {"star_type", job.star_type}, {"format", job.format},
                {"level", job.level},       {"seed", job.seed},           {"max_words", job.max_words}};
}

JobSpec job_from_json(const Json& j) {
    JobSpec job;
    job.command = get_field<std::string>(j, "command", "job");
    auto opt = [&](const char* key, auto& field) {
        if (j.contains(key)) field = get_field<std::decay_t<decltype(field)>>(j, key, "job");
    };
    opt("space", job.space);
    opt("space2", job.space2);
    opt("factor", job.factor);
    opt("power", job.power);
    opt("copies", job.copies);
    opt("copies2", job.copies2);
    opt("max_degree", job.max_degree);
    opt("depth", job.depth);
    opt("weight", job.weight);
    opt("star_type", job.star_type);
    opt("format", job.format);
    opt("level", job.level);
    opt("seed", job.seed);
    opt("max_words", job.max_words);
    return job;
}

}  // namespace cgl
