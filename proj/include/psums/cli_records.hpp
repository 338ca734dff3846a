#ifndef PSUMS_CLI_RECORDS_HPP
#define PSUMS_CLI_RECORDS_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "psums/classifier.hpp"
#include "psums/search.hpp"
#include "psums/verify.hpp"

namespace psums {

// One machine-readable result of a CLI invocation. Serializes to a single
// JSON line; render_text produces exactly the text-mode output for the same
// record, so parsing the JSON and re-rendering reproduces text mode byte
// for byte.
struct OutputRecord {
    std::string command;
    std::vector<std::pair<std::string, std::string>> parameters;
    nlohmann::json result = nlohmann::json::object();
    std::string status = "ok";
    std::string message;  // only for status = "error"
};

nlohmann::json to_json(const OutputRecord& record);
OutputRecord record_from_json(const nlohmann::json& j);

// Text-mode rendering (ends with a newline). Uses only record.command and
// record.result.
std::string render_text(const OutputRecord& record);

OutputRecord error_record(const std::string& command, const std::string& message);

// Record builders backing the CLI subcommands.
OutputRecord bernoulli_record(long index);
OutputRecord poly_record(const ProblemInstance& instance, const std::string& normalization);
OutputRecord profile_record(const ProblemInstance& instance);
OutputRecord classification_record(const ClassificationReport& report);
std::vector<OutputRecord> classify_records(const ProblemInstance& instance, long n);
std::vector<OutputRecord> classify_sweep_records(const ProblemInstance& instance, long nmax);
std::vector<OutputRecord> search_records(const ProblemInstance& instance, const Int& x_max,
                                         std::optional<long> n_max);
std::vector<OutputRecord> verify_records(const VerifyOptions& options);

}  // namespace psums

#endif
