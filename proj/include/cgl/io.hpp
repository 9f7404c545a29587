#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "cgl/gl_algebra.hpp"
#include "cgl/partitions.hpp"

namespace cgl {

using Json = nlohmann::json;

// {"free_rank": k, "torsion2_rank": l, "sign_form": [[..]], "exp_form": [[..]]}
CommutativeFactor factor_from_json(const Json& j);
Json factor_to_json(const CommutativeFactor& f);

// {"components": [{"degree": [..], "dim": m}, ..], "order": "user"|"lexicographic"}
// with the factor either inline under "factor" or supplied separately.
SpacePtr space_from_json(const Json& j, const std::optional<CommutativeFactor>& factor = std::nullopt);
Json space_to_json(const GradedSpace& v);

// A preset name such as "super(2|1)" or a path to a space file; an
// optional factor file overrides the inline factor.
SpacePtr load_space(const std::string& spec, const std::string& factor_path = "");

// [[a, b, "scalar"], ..]
GlElement gl_from_json(SpacePtr space, const Json& j);
Json gl_to_json(const GlElement& x);

// "1,1/2,-3"
Weight parse_weight(const std::string& text);
std::string weight_text(const Weight& w);
Json weight_to_json(const Weight& w);
Json partition_to_json(const Partition& p);

// Reads a file and parses it; ParseError names the file and byte offset.
Json read_json_file(const std::string& path);

// Everything a CLI run depends on.
struct JobSpec {
    std::string command;
    std::string space;
    std::string space2;
    std::string factor;
    int power = 2;
    int copies = 1;
    int copies2 = 1;
    int max_degree = 3;
    int depth = -1;  // -1: full depth
    std::string weight;
    std::string star_type = "I";
    std::string format = "json";
    std::string level = "quick";
    std::uint64_t seed = 1;
    std::uint64_t max_words = 1000000;
    bool operator==(const JobSpec&) const = default;
};
Json job_to_json(const JobSpec& job);
JobSpec job_from_json(const Json& j);

}  // namespace cgl
