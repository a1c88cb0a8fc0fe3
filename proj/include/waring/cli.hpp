#ifndef WARING_CLI_HPP
#define WARING_CLI_HPP

#include <json.hpp>

#include <iosfwd>
#include <string>
#include <vector>

namespace waring::cli {

/// One engine invocation. `options` keys: precision, budget_samples,
/// numeric_ok, r, family, k, lambda, d, gamma, decomposition.
struct Request {
    std::string command;
    std::string form_text;
    nlohmann::json options = nlohmann::json::object();
};

struct Response {
    bool ok = true;
    int exit_code = 0;  // 0 ok, 1 input error, 2 internal invariant violation
    std::string command;
    nlohmann::json result = nlohmann::json::object();
    nlohmann::json error;  // {"kind", "message", "position"?} when !ok
    std::vector<std::string> diagnostics;
};

/// Throws std::invalid_argument for malformed request objects.
Request request_from_json(const nlohmann::json& j);
nlohmann::json to_json(const Request& r);
nlohmann::json to_json(const Response& r);

Response run_command(const Request& req);

/// Plain-text rendering; forms use the same grammar the parser accepts.
std::string render_text(const Response& r, bool quiet);

struct BatchSummary {
    int total = 0;
    int ok = 0;
    int error = 0;
};

/// Reads newline-delimited JSON requests, writes one JSON response per
/// non-empty line in input order, then a summary line.
BatchSummary run_batch(std::istream& in, std::ostream& out, int parallelism);

/// Precision in bits from WARING_DEFAULT_PRECISION, else the library default.
long default_precision();

}  // namespace waring::cli

#endif  // WARING_CLI_HPP
