#include "lcadual/commands.hpp"

#include <chrono>
#include <sstream>
#include <utility>

namespace lcadual {

namespace {

using nlohmann::ordered_json;

class Stopwatch {
public:
    explicit Stopwatch(std::string* sink) : sink_(sink) {}

    template <typename F>
    auto time(const std::string& label, F&& f) {
        const auto start = std::chrono::steady_clock::now();
        auto result = f();
        const auto stop = std::chrono::steady_clock::now();
        const auto us =
            std::chrono::duration_cast<std::chrono::microseconds>(stop - start).count();
        std::ostringstream line;
        line << "timing: " << label << " " << (static_cast<double>(us) / 1000.0) << " ms\n";
        *sink_ += line.str();
        return result;
    }

private:
    std::string* sink_;
};

std::string status_name(VerdictStatus s) {
    switch (s) {
        case VerdictStatus::Certified: return "certified";
        case VerdictStatus::Refuted: return "refuted";
        case VerdictStatus::Inconclusive: return "inconclusive-up-to-radius";
    }
    return "?";
}

std::vector<Scalar> vector_from_json(const Field& field, std::size_t n,
                                     const nlohmann::json& j) {
    if (!j.is_array() || j.size() != n) throw UsageError("value vector has wrong shape");
    std::vector<Scalar> v;
    v.reserve(n);
    for (const auto& x : j) v.push_back(Scalar::from_string(field, x.get<std::string>()));
    return v;
}

ordered_json vector_to_json(const std::vector<Scalar>& v) {
    ordered_json out = ordered_json::array();
    for (const auto& x : v) out.push_back(x.str());
    return out;
}

ordered_json matrix_to_json(const LcaMatrix& m) {
    ordered_json rows = ordered_json::array();
    for (std::size_t i = 0; i < m.dimension(); ++i) {
        ordered_json row = ordered_json::array();
        for (std::size_t j = 0; j < m.dimension(); ++j) row.push_back(m.at(i, j).str());
        rows.push_back(std::move(row));
    }
    return rows;
}

Verdict run_check(Property p, const LcaMatrix& theta, unsigned radius, std::size_t ball_cap) {
    switch (p) {
        case Property::PreInjective: return check_pre_injectivity(theta, radius, ball_cap);
        case Property::Surjective: return check_surjectivity(theta, radius, ball_cap);
        case Property::PostSurjective: return check_post_surjectivity(theta, radius, ball_cap);
        case Property::Injective: return check_injectivity(theta, radius, ball_cap);
    }
    throw UsageError("unreachable");
}

}  // namespace

Field parse_field_name(const std::string& name) {
    if (name == "Q") return Field::rationals();
    if (name.size() >= 2 && name[0] == 'F' &&
        name.find_first_not_of("0123456789", 1) == std::string::npos) {
        return Field::prime(std::stoull(name.substr(1)));
    }
    throw UsageError("unknown field \"" + name + "\" (expected F<p> or Q)");
}

ordered_json configuration_to_json(const FiniteConfiguration& c) {
    ordered_json sites = ordered_json::array();
    for (const auto& [g, v] : c.sites()) {
        ordered_json site;
        site["word"] = c.group()->to_string(g);
        site["value"] = vector_to_json(v);
        sites.push_back(std::move(site));
    }
    return sites;
}

FiniteConfiguration configuration_from_json(const Field& field, const GroupPtr& group,
                                            std::size_t n, const nlohmann::json& j) {
    FiniteConfiguration c(field, group, n);
    if (!j.is_array()) throw UsageError("configuration JSON must be an array of sites");
    for (const auto& site : j) {
        c.add_value(parse_word(group, site.at("word").get<std::string>()),
                    vector_from_json(field, n, site.at("value")));
    }
    return c;
}

ordered_json witness_to_json(const GroupPtr& group, const Witness& w) {
    ordered_json out;
    if (const auto* k = std::get_if<KernelElement>(&w)) {
        out["kind"] = "kernel-element";
        out["configuration"] = configuration_to_json(k->element);
        return out;
    }
    if (const auto* goe = std::get_if<GardenOfEden>(&w)) {
        out["kind"] = "garden-of-eden";
        ordered_json window = ordered_json::array();
        for (const auto& g : goe->pattern.window()) window.push_back(group->to_string(g));
        ordered_json values = ordered_json::array();
        for (std::size_t i = 0; i < goe->pattern.window().size(); ++i) {
            values.push_back(vector_to_json(goe->pattern.value(i)));
        }
        out["window"] = std::move(window);
        out["values"] = std::move(values);
        return out;
    }
    if (const auto* table = std::get_if<PreimageTable>(&w)) {
        out["kind"] = "preimage-table";
        ordered_json preimages = ordered_json::array();
        for (const auto& z : table->preimages) preimages.push_back(configuration_to_json(z));
        out["preimages"] = std::move(preimages);
        return out;
    }
    const auto& mep = std::get<MepPair>(w);
    out["kind"] = "mep-pair";
    out["x"] = configuration_to_json(mep.x);
    out["y"] = configuration_to_json(mep.y);
    return out;
}

Witness witness_from_json(const Field& field, const GroupPtr& group, std::size_t n,
                          const nlohmann::json& j) {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "kernel-element") {
        return KernelElement{configuration_from_json(field, group, n, j.at("configuration"))};
    }
    if (kind == "garden-of-eden") {
        std::vector<GroupElement> window;
        for (const auto& word : j.at("window")) {
            window.push_back(parse_word(group, word.get<std::string>()));
        }
        WindowPattern pattern(field, group, std::move(window), n);
        const auto& values = j.at("values");
        if (!values.is_array() || values.size() != pattern.window().size()) {
            throw UsageError("garden-of-eden witness has mismatched window and values");
        }
        for (std::size_t i = 0; i < pattern.window().size(); ++i) {
            pattern.set_value(i, vector_from_json(field, n, values[i]));
        }
        return GardenOfEden{std::move(pattern)};
    }
    if (kind == "preimage-table") {
        PreimageTable table;
        for (const auto& z : j.at("preimages")) {
            table.preimages.push_back(configuration_from_json(field, group, n, z));
        }
        return table;
    }
    if (kind == "mep-pair") {
        return MepPair{configuration_from_json(field, group, n, j.at("x")),
                       configuration_from_json(field, group, n, j.at("y"))};
    }
    throw UsageError("unknown witness kind \"" + kind + "\"");
}

ordered_json verdict_to_json(const GroupPtr& group, const Verdict& v) {
    ordered_json out;
    out["property"] = property_name(v.property);
    out["status"] = status_name(v.status);
    out["radius"] = v.radius;
    out["witness"] = v.witness ? witness_to_json(group, *v.witness) : ordered_json(nullptr);
    out["dimensions"] = ordered_json{{"rows", v.window_rows}, {"cols", v.window_cols}};
    out["method"] = v.method;
    return out;
}

RunResult run_adjoint(const AutomatonDocument& doc) {
    AutomatonDocument dual{doc.field,        doc.group,      doc.group_spec,
                           doc.dimension,    doc.matrix.adjoint(),
                           doc.configurations, doc.radius,   doc.properties,
                           doc.seed};
    return RunResult{0, print_document(dual), ""};
}

RunResult run_evolve(const AutomatonDocument& doc, unsigned steps,
                     const std::string& config_name) {
    const FiniteConfiguration* start = nullptr;
    std::string used = config_name;
    if (!config_name.empty()) {
        start = &doc.configuration(config_name);
    } else if (doc.has_configuration("c")) {
        start = &doc.configuration("c");
        used = "c";
    } else if (doc.configurations.size() == 1) {
        start = &doc.configurations.front().configuration;
        used = doc.configurations.front().name;
    } else {
        throw UsageError(
            "evolve needs a configuration: add \"config c\" to the document or name one");
    }

    FiniteConfiguration current = *start;
    for (unsigned k = 0; k < steps; ++k) current = evolve(doc.matrix, current);

    ordered_json report;
    report["command"] = "evolve";
    report["configuration"] = used;
    report["steps"] = steps;
    report["result"] = configuration_to_json(current);
    return RunResult{0, report.dump(2) + "\n", ""};
}

RunResult run_pair(const AutomatonDocument& doc) {
    const auto& omega = doc.configuration("omega");
    const auto& c = doc.configuration("c");
    ordered_json report;
    report["command"] = "pair";
    report["value"] = pair(omega, c).str();
    return RunResult{0, report.dump(2) + "\n", ""};
}

RunResult run_analyze(const AutomatonDocument& doc, const AnalyzeOptions& options) {
    unsigned radius = 0;
    if (options.radius) {
        radius = *options.radius;
    } else if (doc.radius) {
        radius = *doc.radius;
    } else {
        radius = default_radius(*doc.group);
    }
    std::vector<Property> properties = options.properties;
    if (properties.empty()) properties = doc.properties;
    if (properties.empty()) {
        properties = {Property::PreInjective, Property::Surjective, Property::PostSurjective,
                      Property::Injective};
    }

    RunResult result;
    Stopwatch watch(&result.diagnostics);
    ordered_json report;
    report["command"] = "analyze";
    report["field"] = doc.field.name();
    report["group"] = doc.group_spec.empty() ? doc.group->describe() : doc.group_spec;
    report["dimension"] = doc.dimension;
    report["radius"] = radius;
    ordered_json verdicts = ordered_json::array();
    for (const auto p : properties) {
        const Verdict v = watch.time(property_name(p), [&] {
            return run_check(p, doc.matrix, radius, options.ball_cap);
        });
        verdicts.push_back(verdict_to_json(doc.group, v));
    }
    report["verdicts"] = std::move(verdicts);
    result.output = report.dump(2) + "\n";
    return result;
}

RunResult run_verify_finite(const AutomatonDocument& doc, std::size_t cap) {
    RunResult result;
    Stopwatch watch(&result.diagnostics);
    const FiniteDualityReport r =
        watch.time("verify-finite", [&] { return verify_duality_finite(doc.matrix, cap); });

    ordered_json report;
    report["command"] = "verify-finite";
    report["field"] = doc.field.name();
    report["group"] = doc.group_spec.empty() ? doc.group->describe() : doc.group_spec;
    report["group_order"] = r.group_order;
    report["dimension"] = r.dimension;
    report["transpose_identity"] = r.transpose_identity;
    report["equations"] =
        ordered_json{{"eq1", r.eq1}, {"eq2", r.eq2}, {"eq3", r.eq3}, {"eq4", r.eq4}};
    report["dimensions"] = ordered_json{{"ker", r.dim_ker},
                                        {"im", r.dim_im},
                                        {"ker_adjoint", r.dim_ker_adjoint},
                                        {"im_adjoint", r.dim_im_adjoint}};
    report["all_hold"] = r.all_hold();
    result.output = report.dump(2) + "\n";
    return result;
}

RunResult run_demo(const std::string& name, const DemoOptions& options) {
    const Field field = parse_field_name(options.field_name);
    const NamedConstruction entry = gallery_entry(name, field);
    const LcaMatrix& theta = entry.automaton;
    const LcaMatrix dual = theta.adjoint();

    RunResult result;
    Stopwatch watch(&result.diagnostics);

    ordered_json report;
    report["command"] = "demo";
    report["name"] = entry.name;
    report["summary"] = entry.summary;
    report["field"] = field.name();
    report["group"] = theta.group()->describe();
    report["dimension"] = theta.dimension();
    report["matrix"] = matrix_to_json(theta);
    report["adjoint"] = matrix_to_json(dual);

    ordered_json analysis = ordered_json::array();
    std::size_t certified_expected_refuted = 0;
    std::size_t other_mismatches = 0;
    for (const auto& expectation : entry.expectations) {
        const LcaMatrix& target = expectation.on_adjoint ? dual : theta;
        const std::string target_name = expectation.on_adjoint ? "adjoint" : "automaton";
        const std::string label = target_name + " " + property_name(expectation.property) +
                                  " r=" + std::to_string(expectation.radius);
        const Verdict v = watch.time(label, [&] {
            return run_check(expectation.property, target, expectation.radius,
                             kDefaultBallCap);
        });
        ordered_json item;
        item["target"] = target_name;
        item["expected"] = status_name(expectation.status);
        item["verdict"] = verdict_to_json(theta.group(), v);
        if (options.self_check && v.status != expectation.status) {
            if (expectation.status == VerdictStatus::Certified &&
                v.status == VerdictStatus::Refuted) {
                ++certified_expected_refuted;
            } else {
                ++other_mismatches;
            }
            item["mismatch"] = true;
        }
        analysis.push_back(std::move(item));
    }
    report["analysis"] = std::move(analysis);
    report["self_check"] = ordered_json{
        {"requested", options.self_check},
        {"mismatches", certified_expected_refuted + other_mismatches}};

    result.output = report.dump(2) + "\n";
    if (certified_expected_refuted > 0) {
        result.exit_code = 2;
    } else if (other_mismatches > 0) {
        result.exit_code = 1;
    }
    return result;
}

}  // namespace lcadual
