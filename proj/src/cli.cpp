#include "cgl/cli.hpp"

#include <functional>
#include <map>
#include <regex>
#include <sstream>

#include "cgl/error.hpp"
#include "cgl/gram.hpp"
#include "cgl/howe.hpp"
#include "cgl/presets.hpp"
#include "cgl/reps.hpp"
#include "cgl/tensor.hpp"
#include "cgl/verify.hpp"

namespace cgl {

namespace {

struct Outcome {
    Json result;
    bool ok = true;
};

using Handler = std::function<Outcome(const JobSpec&)>;

std::string sharp_text(const Weight& w, int m_plus) {
    std::string s = "(";
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) s += static_cast<int>(i) == m_plus ? ";" : ",";
        s += w[i].get_str();
    }
    if (m_plus == static_cast<int>(w.size())) s += ";";
    return s + ")";
}

SpacePtr job_space(const JobSpec& job) { return load_space(job.space, job.factor); }

HighestWeight job_weight(const JobSpec& job) {
    if (job.weight.empty()) throw ParseError("--weight is required");
    return HighestWeight(job_space(job), parse_weight(job.weight));
}

void require_positive(int x, const char* flag) {
    if (x < 1) throw ParseError(std::string(flag) + " must be at least 1");
}

void require_nonneg(int x, const char* flag) {
    if (x < 0) throw ParseError(std::string(flag) + " must be non-negative");
}

Json suite_json(const SuiteResult& s) {
    return Json{{"name", s.name}, {"space", s.space}, {"checks", s.checks}, {"failures", s.failures},
                {"failed", s.failed}, {"passed", s.passed()}};
}

Outcome cmd_verify(const JobSpec& job) {
    VerifyLevel level;
    if (job.level == "quick") level = VerifyLevel::quick;
    else if (job.level == "full") level = VerifyLevel::full;
    else throw ParseError("--level must be quick or full");
    Outcome o;
    Json suites = Json::array();
    for (const auto& s : verify_space(job_space(job), level, job.seed)) {
        suites.push_back(suite_json(s));
        o.ok = o.ok && s.passed();
    }
    o.result = Json{{"suites", suites}};
    return o;
}

Outcome cmd_schur_weyl(const JobSpec& job) {
    require_nonneg(job.power, "--power");
    SpacePtr v = job_space(job);
    const SchurWeylTable t = schur_weyl_table(v, job.power, job.max_words);
    Json rows = Json::array();
    for (const auto& r : t.rows)
        rows.push_back(Json{{"lambda", partition_to_json(r.lambda)}, {"sharp", weight_to_json(r.sharp)},
                            {"sharp_text", sharp_text(r.sharp, v->m_plus())}, {"k", r.k}, {"f", r.f},
                            {"hwv_nonzero", r.hwv_nonzero}, {"hwv_weight_ok", r.hwv_weight_ok},
                            {"hwv_annihilated", r.hwv_annihilated}});
    return {Json{{"rows", rows}, {"checksum", t.total}, {"expected", t.expected}}, t.ok()};
}

Json howe_rows(const std::vector<HoweRow>& rows, bool& ok) {
    Json out = Json::array();
    for (const auto& r : rows) {
        Json lambdas = Json::array();
        for (const auto& l : r.lambdas) lambdas.push_back(partition_to_json(l));
        out.push_back(Json{{"degree", r.degree}, {"formula", r.formula}, {"enumerated", r.enumerated},
                           {"decomposition", r.decomposition}, {"lambdas", lambdas}, {"ok", r.ok()}});
        ok = ok && r.ok();
    }
    return out;
}

Outcome cmd_howe(const JobSpec& job) {
    require_positive(job.copies, "--copies");
    require_nonneg(job.max_degree, "--max-degree");
    SpacePtr v = job_space(job);
    Outcome o;
    Json rows = howe_rows(howe_dimension_sweep(v, job.copies, job.max_degree), o.ok);
    Json dual = howe_rows(howe_dual_sweep(v, job.copies, job.max_degree), o.ok);
    o.result = Json{{"rows", rows}, {"dual_rows", dual}};
    if (!job.space2.empty()) {
        Json glvv = Json::array();
        for (const auto& r : glvv_decomposition(v, load_space(job.space2), job.max_degree)) {
            Json lambdas = Json::array();
            for (const auto& l : r.lambdas) lambdas.push_back(partition_to_json(l));
            glvv.push_back(Json{{"degree", r.degree}, {"dimension", r.dimension}, {"decomposition", r.decomposition},
                                {"lambdas", lambdas}, {"ok", r.ok()}});
            o.ok = o.ok && r.ok();
        }
        o.result["glvv_rows"] = glvv;
    }
    return o;
}

Outcome cmd_fft(const JobSpec& job) {
    require_positive(job.copies, "--copies");
    require_positive(job.copies2, "--copies2");
    require_nonneg(job.max_degree, "--max-degree");
    SpacePtr v = job_space(job);
    Outcome o;
    Json rows = Json::array();
    for (int d = 0; d <= job.max_degree; ++d) {
        const InvariantReport r = invariant_dimension(v, job.copies, job.copies2, d);
        rows.push_back(Json{{"degree", d}, {"columns", r.columns}, {"kernel_dim", r.kernel_dim}, {"expected", r.expected},
                            {"z_monomials", r.z_monomials}, {"z_in_kernel", r.z_in_kernel},
                            {"z_rank_field", r.z_rank_field}, {"z_rank_bareiss", r.z_rank_bareiss}, {"ok", r.ok()}});
        o.ok = o.ok && r.ok();
    }
    o.result = Json{{"rows", rows}};
    return o;
}

Outcome cmd_glq(const JobSpec& job) {
    static const std::regex re(R"(^glq\((\d+)\|(\d+)\)$)");
    std::smatch m;
    if (!std::regex_match(job.space, m, re)) throw ParseError("glq-check needs --space glq(m|n)");
    require_positive(job.copies, "--copies");
    require_nonneg(job.max_degree, "--max-degree");
    const GlqReport r = glq_relations_check(std::stoi(m[1]), std::stoi(m[2]), job.copies, job.max_degree);
    Outcome o;
    o.ok = r.ok();
    bool sweep_ok = true;
    o.result = Json{{"m", r.m}, {"n", r.n}, {"copies", r.copies}, {"relations_checked", r.relations_checked},
                    {"relations_failed", r.relations_failed}, {"factor_ok", r.factor_ok},
                    {"rows", howe_rows(r.sweep, sweep_ok)}};
    return o;
}

Outcome cmd_typicality(const JobSpec& job) {
    const HighestWeight hw = job_weight(job);
    const Typicality t = typicality(hw);
    return {Json{{"weight", weight_to_json(hw.lambda)}, {"typical", t.typical}, {"chi", t.chi.get_str()},
                 {"dominant", hw.dominant()}, {"finite_dimensional", is_finite_dimensional(hw)}},
            true};
}

Outcome cmd_kac_dim(const JobSpec& job) {
    const HighestWeight hw = job_weight(job);
    return {Json{{"weight", weight_to_json(hw.lambda)}, {"kac_dimension", kac_dimension(hw)},
                 {"levi_dimension", levi_dimension(hw)}, {"typical", typicality(hw).typical}},
            true};
}

Outcome cmd_casimir(const JobSpec& job) {
    const HighestWeight hw = job_weight(job);
    Outcome o;
    o.result = Json{{"weight", weight_to_json(hw.lambda)}, {"eigenvalue", casimir_eigenvalue(hw).get_str()}};
    const GradedSpace& v = *hw.space;
    if (auto p = sharp_preimage(hw.lambda, v.m_plus(), v.m_minus())) {
        const CasimirCheck c = casimir_check(hw.space, *p);
        o.result["partition"] = partition_to_json(*p);
        o.result["defect"] = c.defect;
        o.ok = c.defect == 0;
    }
    return o;
}

Outcome cmd_unitarisable(const JobSpec& job) {
    StarType type;
    if (job.star_type == "I") type = StarType::I;
    else if (job.star_type == "II") type = StarType::II;
    else throw ParseError("--type must be I or II");
    const HighestWeight hw = job_weight(job);
    const UnitarityVerdict u = classify_unitarisable(hw, type);
    Json r{{"weight", weight_to_json(hw.lambda)}, {"type", job.star_type}, {"unitarisable", u.unitarisable},
           {"reason", u.reason}, {"dominant", hw.dominant()}};
    if (u.certificate)
        r["certificate"] = Json{{"a", u.certificate->a.get_str()}, {"mu", partition_to_json(u.certificate->mu)},
                                {"b", u.certificate->b.get_str()}};
    if (u.dual_weight) r["dual_weight"] = weight_to_json(*u.dual_weight);
    return {r, true};
}

Outcome cmd_gram(const JobSpec& job) {
    const HighestWeight hw = job_weight(job);
    const int full = hw.space->m_plus() * hw.space->m_minus();
    const GramReport g = gram_report(hw, job.depth < 0 ? full : job.depth);
    Json blocks = Json::array();
    for (const auto& b : g.blocks) {
        Json m = Json::array();
        for (const auto& row : b.matrix) {
            Json jr = Json::array();
            for (const auto& x : row) jr.push_back(x.get_str());
            m.push_back(jr);
        }
        blocks.push_back(Json{{"level", b.level}, {"weight", weight_to_json(b.weight)}, {"matrix", m},
                              {"positive", b.inertia.positive}, {"negative", b.inertia.negative}, {"zero", b.inertia.zero}});
    }
    Outcome o;
    o.result = Json{{"weight", weight_to_json(hw.lambda)}, {"depth", g.depth}, {"max_depth", g.max_depth},
                    {"level_dims", g.level_dims}, {"blocks", blocks}, {"radical_dim", g.radical_dim},
                    {"verdict", to_string(g.verdict)}};
    if (g.depth == g.max_depth) {
        const bool classified = classify_unitarisable(hw, StarType::I).unitarisable;
        o.result["classification_agrees"] = classified == g.unitarisable();
        o.ok = classified == g.unitarisable();
    }
    return o;
}

Outcome cmd_tableaux(const JobSpec& job) {
    require_nonneg(job.power, "--power");
    SpacePtr v = job_space(job);
    Json rows = Json::array();
    std::uint64_t total = 0;
    for (const auto& l : partitions_of(job.power)) {
        if (!in_hook(l, v->m_plus(), v->m_minus())) continue;
        const std::uint64_t k = count_hook_tableaux(l, v->m_plus(), v->m_minus());
        const std::uint64_t f = count_standard_tableaux(l);
        total += k * f;
        rows.push_back(Json{{"lambda", partition_to_json(l)}, {"k", k}, {"f", f},
                            {"sharp", weight_to_json(lambda_sharp(l, v->m_plus(), v->m_minus()))}});
    }
    std::uint64_t expected = 1;
    for (int i = 0; i < job.power; ++i) expected *= static_cast<std::uint64_t>(v->dim());
    return {Json{{"rows", rows}, {"checksum", total}, {"expected", expected}}, total == expected};
}

const std::map<std::string, Handler>& handlers() {
    static const std::map<std::string, Handler> h{
        {"verify", cmd_verify},         {"schur-weyl", cmd_schur_weyl},     {"howe-sweep", cmd_howe},
        {"fft-check", cmd_fft},         {"glq-check", cmd_glq},             {"typicality", cmd_typicality},
        {"kac-dim", cmd_kac_dim},       {"casimir", cmd_casimir},           {"unitarisable", cmd_unitarisable},
        {"gram", cmd_gram},             {"tableaux", cmd_tableaux}};
    return h;
}

Json error_report(const JobSpec& job, const std::string& type, const std::string& message) {
    return Json{{"kind", "error"}, {"job", job_to_json(job)}, {"ok", false},
                {"error", Json{{"type", type}, {"message", message}}}};
}

std::string cell(const Json& x) {
    if (x.is_string()) return x.get<std::string>();
    return x.dump();
}

}  // namespace

std::vector<std::string> command_names() {
    std::vector<std::string> out;
    for (const auto& [name, h] : handlers()) out.push_back(name);
    return out;
}

RunResult run_job(const JobSpec& job) {
    RunResult out;
    auto it = handlers().find(job.command);
    if (it == handlers().end()) {
        out.status = exit_input;
        out.report = error_report(job, "input", "unknown command '" + job.command + "'");
        return out;
    }
    try {
        Outcome o = it->second(job);
        out.status = o.ok ? exit_ok : exit_failed;
        out.report = Json{{"kind", job.command}, {"job", job_to_json(job)}, {"ok", o.ok}, {"result", o.result}};
    } catch (const ParseError& e) {
        out = {exit_input, error_report(job, "parse", e.what())};
    } catch (const UnsupportedError& e) {
        out = {exit_input, error_report(job, "unsupported", e.what())};
    } catch (const ResourceError& e) {
        out = {exit_input, error_report(job, "resource", e.what())};
    } catch (const DomainError& e) {
        out = {exit_input, error_report(job, "domain", e.what())};
    } catch (const ShapeError& e) {
        out = {exit_input, error_report(job, "shape", e.what())};
    } catch (const PreconditionError& e) {
        out = {exit_input, error_report(job, "precondition", e.what())};
    } catch (const Error& e) {
        out = {exit_failed, error_report(job, "verification", e.what())};
    }
    return out;
}

std::string report_tsv(const Json& report) {
    std::ostringstream os;
    const Json* result = report.contains("result") ? &report["result"] : nullptr;
    if (result && result->contains("rows") && (*result)["rows"].is_array() && !(*result)["rows"].empty()) {
        const Json& rows = (*result)["rows"];
        bool first = true;
        for (const auto& [k, v] : rows[0].items()) {
            os << (first ? "" : "\t") << k;
            first = false;
        }
        os << '\n';
        for (const auto& row : rows) {
            first = true;
            for (const auto& [k, v] : row.items()) {
                os << (first ? "" : "\t") << cell(v);
                first = false;
            }
            os << '\n';
        }
        return os.str();
    }
    const Json& flat = result ? *result : report;
    for (const auto& [k, v] : flat.items()) os << k << '\t' << cell(v) << '\n';
    return os.str();
}

}  // namespace cgl
