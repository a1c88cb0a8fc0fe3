#include "waring/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <string>
#include <vector>

namespace {

using nlohmann::json;

// A leading '-' on a form or a rational would otherwise be read as a flag.
bool looks_negative_value(const std::string& a) {
    if (a.size() < 2 || a[0] != '-' || a[1] == '-') return false;
    const char c = a[1];
    return std::isdigit(static_cast<unsigned char>(c)) || c == '(' || c == '.' || c == 'x' || c == 'y' || c == 's';
}

struct Flags {
    std::string form;
    std::optional<std::string> precision;
    std::optional<std::string> budget;
    std::optional<std::string> r;
    std::optional<std::string> k;
    std::optional<std::string> lambda;
    std::optional<std::string> d;
    std::optional<std::string> gamma;
    bool numeric_ok = false;
    std::string family;
};

void set_if(json& opts, const char* key, const std::optional<std::string>& v) {
    if (v) opts[key] = *v;
}

}  // namespace

int main(int argc, char** argv) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) {
        std::string a = argv[i];
        args.push_back(looks_negative_value(a) ? " " + a : a);
    }
    std::reverse(args.begin(), args.end());

    CLI::App app{"Waring rank toolkit for binary forms"};
    app.require_subcommand(1);
    app.fallthrough();
    bool as_json = false;
    bool quiet = false;
    app.add_flag("--json", as_json, "Print the JSON response");
    app.add_flag("--quiet", quiet, "Print only the main result");

    Flags fl;
    auto form_cmd = [&](const std::string& name, const std::string& help) {
        CLI::App* c = app.add_subcommand(name, help);
        c->add_option("form", fl.form, "Binary form, e.g. x^4+4*x^2*y^2+y^4")->required();
        c->add_option("--precision", fl.precision, "Working precision in bits");
        return c;
    };
    form_cmd("rank", "Complex Waring rank with certificate");
    CLI::App* real = form_cmd("real-rank", "Certified real Waring rank or bracket");
    real->add_option("--budget-samples", fl.budget, "Random pencil samples for kernels of dimension 3 or more");
    CLI::App* dec = form_cmd("decompose", "Minimal power-sum decomposition");
    dec->add_flag("--numeric-ok", fl.numeric_ok, "Allow a numeric decomposition when no quadratic tower suffices");
    form_cmd("verify", "Check a decomposition JSON read from stdin against the form");
    form_cmd("apolar", "Generator pair of the apolar ideal");
    CLI::App* ker = form_cmd("kernel", "Catalecticant kernel basis");
    ker->add_option("--r", fl.r, "Degree of the apolar forms")->required();
    form_cmd("classify", "Small-rank classification");
    form_cmd("gap-bound", "Descartes gap bound on non-real roots");

    CLI::App* fam = app.add_subcommand("family", "Generate and analyse a named family");
    fam->add_option("name", fl.family, "flambda or pd")->required()->check(CLI::IsMember({"flambda", "pd"}));
    fam->add_option("--k", fl.k, "Half degree of f_lambda");
    fam->add_option("--lambda", fl.lambda, "Middle coefficient parameter");
    fam->add_option("--d", fl.d, "Degree of the pd family");
    fam->add_option("--gamma", fl.gamma, "Parameter of the pd family");
    fam->add_option("--precision", fl.precision, "Working precision in bits");

    CLI::App* batch = app.add_subcommand("batch", "Run newline-delimited JSON requests");
    std::string batch_file;
    int parallelism = 1;
    batch->add_option("file", batch_file, "Request file")->required();
    batch->add_option("--parallelism", parallelism, "Worker threads")->check(CLI::Range(1, 256));

    try {
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }

    if (batch->parsed()) {
        std::ifstream in(batch_file);
        if (!in) {
            std::cerr << "error: cannot read " << batch_file << "\n";
            return 1;
        }
        waring::cli::run_batch(in, std::cout, parallelism);
        return 0;
    }

    waring::cli::Request req;
    for (CLI::App* sub : app.get_subcommands()) req.command = sub->get_name();
    req.form_text = fl.form;
    set_if(req.options, "precision", fl.precision);
    set_if(req.options, "budget_samples", fl.budget);
    set_if(req.options, "r", fl.r);
    set_if(req.options, "k", fl.k);
    set_if(req.options, "lambda", fl.lambda);
    set_if(req.options, "d", fl.d);
    set_if(req.options, "gamma", fl.gamma);
    if (fl.numeric_ok) req.options["numeric_ok"] = true;
    if (req.command == "family") req.options["family"] = fl.family;
    if (req.command == "verify") {
        std::string text((std::istreambuf_iterator<char>(std::cin)), std::istreambuf_iterator<char>());
        try {
            req.options["decomposition"] = json::parse(text);
        } catch (const json::exception& e) {
            std::cerr << "error: decomposition on stdin is not valid JSON: " << e.what() << "\n";
            return 1;
        }
    }

    waring::cli::Response resp = waring::cli::run_command(req);
    if (as_json) {
        std::cout << waring::cli::to_json(resp).dump(2) << "\n";
    } else if (resp.ok) {
        std::cout << waring::cli::render_text(resp, quiet);
    } else {
        std::cerr << waring::cli::render_text(resp, quiet);
    }
    return resp.exit_code;
}
