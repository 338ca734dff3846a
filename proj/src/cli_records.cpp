#include "psums/cli_records.hpp"

#include <sstream>
#include <stdexcept>

#include "psums/bernoulli.hpp"
#include "psums/powersum.hpp"

namespace psums {

using nlohmann::json;

json to_json(const OutputRecord& record) {
    json parameters = json::object();
    for (const auto& [key, value] : record.parameters) parameters[key] = value;
    json j{{"command", record.command},
           {"parameters", parameters},
           {"result", record.result},
           {"status", record.status}};
    if (record.status == "error") j["message"] = record.message;
    return j;
}

OutputRecord record_from_json(const json& j) {
    OutputRecord record;
    record.command = j.at("command").get<std::string>();
    for (const auto& [key, value] : j.at("parameters").items()) {
        record.parameters.emplace_back(key, value.get<std::string>());
    }
    record.result = j.at("result");
    record.status = j.at("status").get<std::string>();
    if (j.contains("message")) record.message = j.at("message").get<std::string>();
    return record;
}

namespace {

std::string braced_list(const json& values) {
    std::string text = "{";
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i > 0) text += ",";
        text += values[i].dump();
    }
    text += "}";
    return text;
}

std::string classification_line(const json& r) {
    std::ostringstream line;
    line << "k=" << r.at("k").get<long>() << " l=" << r.at("l").get<long>()
         << " n=" << r.at("n").get<long>()
         << " verdict=" << r.at("verdict").get<std::string>();
    if (!r.at("proof_case").is_null()) {
        line << " case=" << r.at("proof_case").get<std::string>();
    }
    if (!r.at("profile").is_null()) {
        const json& profile = r.at("profile");
        line << " profile=" << braced_list(profile.at("multiplicities"))
             << " zero=" << profile.at("zero_multiplicity").get<long>();
    }
    if (!r.at("t_values").is_null()) {
        line << " t=" << braced_list(r.at("t_values"));
    }
    if (!r.at("pattern").is_null()) {
        const json& pattern = r.at("pattern");
        if (!pattern.at("forbidden").get<bool>()) {
            line << " pattern=none";
        } else if (pattern.at("kind").get<std::string>() == "SingleNonUnit") {
            line << " pattern=SingleNonUnit(t=" << pattern.at("t").get<long>() << ")";
        } else {
            line << " pattern=TwoTwos";
        }
    }
    if (!r.at("obstruction").is_null()) {
        const json& obstruction = r.at("obstruction");
        line << " obstruction={target=" << obstruction.at("target").get<std::string>()
             << " v2=" << obstruction.at("v2").get<long>()
             << " obstructed=" << (obstruction.at("obstructed").get<bool>() ? "yes" : "no")
             << " case=" << obstruction.at("case").get<std::string>() << "}";
    }
    line << "\n";
    return line.str();
}

}  // namespace

std::string render_text(const OutputRecord& record) {
    const json& r = record.result;
    if (record.status == "error") {
        return "error: " + record.message + "\n";
    }
    if (record.command == "bernoulli") {
        return r.at("value").get<std::string>() + "\n";
    }
    if (record.command == "poly") {
        std::ostringstream out;
        const json& coefficients = r.at("coefficients");
        for (std::size_t d = 0; d < coefficients.size(); ++d) {
            out << d << ": " << coefficients[d].get<std::string>() << "\n";
        }
        return out.str();
    }
    if (record.command == "profile") {
        std::ostringstream out;
        out << "multiplicities:";
        for (const json& m : r.at("multiplicities")) out << " " << m.get<long>();
        out << "\n";
        out << "distinct: " << r.at("distinct").get<long>() << "\n";
        out << "zero_multiplicity: " << r.at("zero_multiplicity").get<long>() << "\n";
        return out.str();
    }
    if (record.command == "classify") {
        return classification_line(r);
    }
    if (record.command == "search") {
        return r.at("x").get<std::string>() + " " + r.at("y").get<std::string>() + " " +
               std::to_string(r.at("n").get<long>()) + "\n";
    }
    if (record.command == "verify") {
        std::ostringstream out;
        if (r.contains("check")) {
            if (r.at("passed").get<bool>()) {
                out << "PASS " << r.at("check").get<std::string>() << "\n";
            } else {
                out << "FAIL " << r.at("check").get<std::string>() << ": "
                    << r.at("counterexample").get<std::string>() << "\n";
            }
        } else {
            out << (r.at("all_passed").get<bool>() ? "PASS" : "FAIL") << " "
                << r.at("passed").get<long>() << "/" << r.at("total").get<long>()
                << " checks\n";
        }
        return out.str();
    }
    throw std::domain_error("render_text: unknown command '" + record.command + "'");
}

OutputRecord error_record(const std::string& command, const std::string& message) {
    OutputRecord record;
    record.command = command;
    record.status = "error";
    record.message = message;
    return record;
}

OutputRecord bernoulli_record(long index) {
    if (index < 0) throw std::domain_error("bernoulli: index must be >= 0");
    OutputRecord record;
    record.command = "bernoulli";
    record.parameters = {{"i", std::to_string(index)}};
    record.result = {{"index", index},
                     {"value", to_string(bernoulli_number(static_cast<std::size_t>(index)))}};
    return record;
}

OutputRecord poly_record(const ProblemInstance& instance, const std::string& normalization) {
    if (normalization != "paper" && normalization != "sum") {
        throw std::domain_error("poly: normalization must be 'paper' or 'sum'");
    }
    PowerSumPolynomial polynomial = build(instance);
    const RationalPolynomial& chosen =
        normalization == "paper" ? polynomial.scaled : polynomial.sum;

    json coefficients = json::array();
    for (long d = 0; d <= chosen.degree(); ++d) {
        coefficients.push_back(to_string(chosen.coefficient(static_cast<std::size_t>(d))));
    }
    OutputRecord record;
    record.command = "poly";
    record.parameters = {{"k", std::to_string(instance.k)},
                         {"l", std::to_string(instance.ell)},
                         {"normalization", normalization}};
    record.result = {{"k", instance.k},
                     {"l", instance.ell},
                     {"normalization", normalization},
                     {"coefficients", coefficients}};
    return record;
}

namespace {

json profile_json(const MultiplicityProfile& profile) {
    return {{"multiplicities", profile.multiplicities},
            {"distinct", profile.distinct_count},
            {"zero_multiplicity", profile.zero_multiplicity}};
}

}  // namespace

OutputRecord profile_record(const ProblemInstance& instance) {
    MultiplicityProfile profile = multiplicity_profile(instance);
    OutputRecord record;
    record.command = "profile";
    record.parameters = {{"k", std::to_string(instance.k)},
                         {"l", std::to_string(instance.ell)}};
    record.result = profile_json(profile);
    record.result["k"] = instance.k;
    record.result["l"] = instance.ell;
    return record;
}

OutputRecord classification_record(const ClassificationReport& report) {
    json r{{"k", report.instance.k},
           {"l", report.instance.ell},
           {"n", report.n},
           {"verdict", to_string(report.verdict)}};
    r["proof_case"] = report.proof_case ? json(to_string(*report.proof_case)) : json();
    r["profile"] = report.profile ? profile_json(*report.profile) : json();
    r["t_values"] = report.ts ? json(report.ts->values) : json();
    if (report.pattern) {
        json pattern{{"forbidden", report.pattern->forbidden}};
        if (report.pattern->pattern == ForbiddenPattern::SingleNonUnit) {
            pattern["kind"] = "SingleNonUnit";
        } else if (report.pattern->pattern == ForbiddenPattern::TwoTwos) {
            pattern["kind"] = "TwoTwos";
        } else {
            pattern["kind"] = json();
        }
        pattern["t"] = report.pattern->single_t ? json(*report.pattern->single_t) : json();
        r["pattern"] = pattern;
    } else {
        r["pattern"] = json();
    }
    if (report.obstruction) {
        r["obstruction"] = {{"target", to_string(report.obstruction->target)},
                            {"v2", report.obstruction->v2},
                            {"obstructed", report.obstruction->obstructed},
                            {"case", to_string(report.obstruction->detail)}};
    } else {
        r["obstruction"] = json();
    }

    OutputRecord record;
    record.command = "classify";
    record.parameters = {{"k", std::to_string(report.instance.k)},
                         {"l", std::to_string(report.instance.ell)},
                         {"n", std::to_string(report.n)}};
    record.result = std::move(r);
    return record;
}

std::vector<OutputRecord> classify_records(const ProblemInstance& instance, long n) {
    return {classification_record(classify(instance, n))};
}

std::vector<OutputRecord> classify_sweep_records(const ProblemInstance& instance, long nmax) {
    std::vector<OutputRecord> records;
    for (const ClassificationReport& report : classify_range(instance, 2, nmax)) {
        OutputRecord record = classification_record(report);
        record.parameters = {{"k", std::to_string(instance.k)},
                             {"l", std::to_string(instance.ell)},
                             {"nmax", std::to_string(nmax)},
                             {"n", std::to_string(report.n)}};
        records.push_back(std::move(record));
    }
    return records;
}

std::vector<OutputRecord> search_records(const ProblemInstance& instance, const Int& x_max,
                                         std::optional<long> n_max) {
    std::vector<OutputRecord> records;
    for (const SolutionTriple& triple : find_solutions(instance, x_max, n_max)) {
        OutputRecord record;
        record.command = "search";
        record.parameters = {{"k", std::to_string(instance.k)},
                             {"l", std::to_string(instance.ell)},
                             {"xmax", to_string(x_max)}};
        if (n_max) record.parameters.emplace_back("nmax", std::to_string(*n_max));
        record.result = {{"x", to_string(triple.x)},
                         {"y", to_string(triple.y)},
                         {"n", triple.n}};
        records.push_back(std::move(record));
    }
    return records;
}

std::vector<OutputRecord> verify_records(const VerifyOptions& options) {
    std::vector<CheckResult> results = run_verification(options);
    std::vector<std::pair<std::string, std::string>> parameters = {
        {"kmax", std::to_string(options.kmax)},
        {"lmax", std::to_string(options.lmax)},
        {"nmax", std::to_string(options.nmax)}};

    std::vector<OutputRecord> records;
    long passed = 0;
    for (const CheckResult& result : results) {
        if (result.passed) ++passed;
        OutputRecord record;
        record.command = "verify";
        record.parameters = parameters;
        record.result = {{"check", result.name},
                         {"passed", result.passed},
                         {"counterexample", result.counterexample}};
        records.push_back(std::move(record));
    }
    OutputRecord summary;
    summary.command = "verify";
    summary.parameters = parameters;
    summary.result = {{"passed", passed},
                      {"total", static_cast<long>(results.size())},
                      {"all_passed", passed == static_cast<long>(results.size())}};
    records.push_back(std::move(summary));
    return records;
}

}  // namespace psums
