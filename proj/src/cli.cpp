#include "waring/cli.hpp"

#include "waring/decompose.hpp"

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace waring::cli {

using nlohmann::json;

namespace {

class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

const std::vector<std::string> kCommands = {"rank",  "real-rank", "decompose", "verify", "apolar",
                                            "kernel", "classify", "family",    "gap-bound"};

long option_long(const json& opts, const char* key, long fallback) {
    if (!opts.contains(key)) return fallback;
    const json& v = opts.at(key);
    if (v.is_number_integer()) return v.get<long>();
    if (v.is_string()) {
        try {
            return std::stol(v.get<std::string>());
        } catch (const std::exception&) {
        }
    }
    throw InputError(std::string("option ") + key + " must be an integer");
}

bool option_bool(const json& opts, const char* key) {
    if (!opts.contains(key)) return false;
    const json& v = opts.at(key);
    if (!v.is_boolean()) throw InputError(std::string("option ") + key + " must be a boolean");
    return v.get<bool>();
}

Rational option_rational(const json& opts, const char* key) {
    if (!opts.contains(key)) throw InputError(std::string("missing option ") + key);
    const json& v = opts.at(key);
    std::string text;
    if (v.is_number_integer()) {
        text = std::to_string(v.get<long>());
    } else if (v.is_string()) {
        text = v.get<std::string>();
    } else {
        throw InputError(std::string("option ") + key + " must be a rational");
    }
    RadicalSum s = parse_radical_sum(text);
    if (s.empty()) return Rational(0);
    if (s.size() != 1 || s.begin()->first != 1) throw InputError(std::string("option ") + key + " must be rational");
    return s.begin()->second;
}

int digits_for(long bits) { return static_cast<int>(std::ceil(static_cast<double>(bits) * 0.30103)) + 4; }

json evidence_json(const RankEvidence& e) {
    return json{{"kind", to_string(e.kind)}, {"r", e.r}, {"value", e.value}, {"method", e.method}};
}

template <class F>
json certificate_json(const RankCertificate<F>& c) {
    json ev = json::array();
    for (const RankEvidence& e : c.evidence) ev.push_back(evidence_json(e));
    json j{{"claim", to_string(c.claim)}, {"lo", c.lo},      {"hi", c.hi},
           {"witness", nullptr},          {"evidence", ev}, {"notes", c.notes}};
    if (c.witness) {
        j["witness"] = to_string(*c.witness);
        if (c.claim != RankClaim::complex_rank) j["witness_real_roots"] = c.witness_real_roots;
    }
    return j;
}

json decomposition_json(const Decomposition& d) {
    json summands = json::array();
    if (d.exact) {
        for (const ExactSummand& s : d.summands) {
            summands.push_back({{"lambda", to_string(s.lambda)}, {"alpha", to_string(s.alpha)}, {"beta", to_string(s.beta)}});
        }
    } else {
        int digits = d.numeric_summands.empty() ? 40 : digits_for(d.numeric_summands.front().lambda.precision());
        for (const NumericSummand& s : d.numeric_summands) {
            summands.push_back({{"lambda", s.lambda.to_string(digits)},
                                {"alpha", s.alpha.to_string(digits)},
                                {"beta", s.beta.to_string(digits)}});
        }
    }
    json j{{"degree", d.degree}, {"summands", summands}, {"domain", d.domain()}};
    if (d.exact) {
        j["exactness"] = "exact";
    } else {
        j["exactness"] = {{"numeric", {{"residual", d.residual ? d.residual->to_string(6) : "nan"}}}};
    }
    return j;
}

std::string json_string(const json& j, const char* key) {
    if (!j.contains(key) || !j.at(key).is_string()) throw InputError(std::string("decomposition needs string field ") + key);
    return j.at(key).get<std::string>();
}

Decomposition decomposition_from_json(const json& j, std::int64_t field_radicand, long precision) {
    if (!j.is_object() || !j.contains("degree") || !j.contains("summands") || !j.at("summands").is_array()) {
        throw InputError("decomposition JSON needs degree and summands");
    }
    Decomposition d;
    d.degree = j.at("degree").get<int>();
    const json& ex = j.contains("exactness") ? j.at("exactness") : json("exact");
    d.exact = ex.is_string() && ex.get<std::string>() == "exact";
    if (!d.exact && !(ex.is_object() && ex.contains("numeric"))) throw InputError("unknown exactness tag");
    if (d.exact) {
        std::vector<std::array<RadicalSum, 3>> parsed;
        std::set<Integer> radicals;
        for (const json& s : j.at("summands")) {
            std::array<RadicalSum, 3> row{parse_radical_sum(json_string(s, "lambda")), parse_radical_sum(json_string(s, "alpha")),
                                          parse_radical_sum(json_string(s, "beta"))};
            for (const RadicalSum& x : row) {
                for (const auto& [r, c] : x) radicals.insert(r);
            }
            parsed.push_back(row);
        }
        if (field_radicand != 0) radicals.insert(Integer(static_cast<long>(field_radicand)));
        auto tower = choose_tower(radicals, field_radicand);
        if (!tower) throw InputError("scalars do not fit a two-step quadratic tower");
        d.inner_radicand = tower->first;
        d.outer_radicand = tower->second;
        for (const auto& row : parsed) {
            d.summands.push_back({to_tower(row[0], d.inner_radicand, d.outer_radicand),
                                  to_tower(row[1], d.inner_radicand, d.outer_radicand),
                                  to_tower(row[2], d.inner_radicand, d.outer_radicand)});
        }
    } else {
        for (const json& s : j.at("summands")) {
            d.numeric_summands.push_back({parse_complex_approx(json_string(s, "lambda"), precision),
                                          parse_complex_approx(json_string(s, "alpha"), precision),
                                          parse_complex_approx(json_string(s, "beta"), precision)});
        }
    }
    return d;
}

template <class F>
std::int64_t form_radicand(const BinaryForm<F>& f) {
    for (const F& c : f.coeffs()) {
        if (radicand_of(c) != 0) return radicand_of(c);
    }
    return 0;
}

json verify_json(const VerifyResult& v) {
    json j{{"result", to_string(v.kind)}, {"honest", v.honest}};
    if (!v.diff.empty()) j["diff"] = v.diff;
    if (v.residual) j["residual"] = v.residual->to_string(6);
    return j;
}

template <class F>
json run_on_form(const Request& req, const BinaryForm<F>& f, Response& resp) {
    const json& opts = req.options;
    const long precision = option_long(opts, "precision", default_precision());
    if (precision < 32 || precision > 100000) throw InputError("precision must be between 32 and 100000 bits");
    json res{{"form", to_string(f)}, {"degree", f.degree()}};
    const std::string& cmd = req.command;
    if (cmd == "rank") {
        ComplexRankResult<F> cr = complex_rank(f);
        res["complex_rank"] = cr.rank;
        res["certificate"] = certificate_json(cr.certificate);
    } else if (cmd == "real-rank") {
        RealRankBudget budget;
        budget.samples = static_cast<int>(option_long(opts, "budget_samples", budget.samples));
        if (budget.samples < 0) throw InputError("budget_samples must be non-negative");
        RankCertificate<F> c = real_rank(f, budget);
        res["real_rank"] = c.exact() ? json(c.lo) : json(nullptr);
        res["bracket"] = {c.lo, c.hi};
        res["exact"] = c.exact();
        res["certificate"] = certificate_json(c);
        if (!c.exact()) {
            for (const std::string& n : c.notes) resp.diagnostics.push_back(n);
        }
    } else if (cmd == "decompose") {
        ComplexRankResult<F> cr = complex_rank(f);
        res["complex_rank"] = cr.rank;
        res["certificate"] = certificate_json(cr.certificate);
        if (!cr.certificate.witness) throw InputError("no apolar form to decompose with");
        ExtractOptions eo;
        eo.allow_numeric = option_bool(opts, "numeric_ok");
        eo.precision = precision;
        Decomposition d = extract_decomposition(f, *cr.certificate.witness, eo);
        res["decomposition"] = decomposition_json(d);
        VerifyResult v = verify_decomposition(d, f);
        res["verification"] = verify_json(v);
        if (!d.exact) resp.diagnostics.push_back("numeric decomposition: apolar form does not split over a quadratic tower");
        if (v.kind == VerifyResult::Kind::mismatch) throw std::logic_error("extracted decomposition fails verification");
    } else if (cmd == "verify") {
        if (!opts.contains("decomposition")) throw InputError("verify needs a decomposition");
        Decomposition d = decomposition_from_json(opts.at("decomposition"), form_radicand(f), precision);
        res["verification"] = verify_json(verify_decomposition(d, f));
    } else if (cmd == "apolar") {
        ApolarPair<F> p = apolar_generators(f);
        res["g1"] = to_string(p.g1);
        res["g2"] = to_string(p.g2);
        res["degrees"] = {p.g1.degree(), p.g2.degree()};
        res["resultant"] = to_string(resultant(p.g1, p.g2));
    } else if (cmd == "kernel") {
        const long r = option_long(opts, "r", -1);
        if (r < 1 || r > f.degree()) throw InputError("kernel needs 1 <= r <= degree");
        Catalecticant<F> c = build_catalecticant(f, static_cast<int>(r));
        KernelBasis<F> kb = kernel(c);
        json matrix = json::array();
        for (const auto& row : c.matrix) {
            json jr = json::array();
            for (const F& x : row) jr.push_back(to_string(x));
            matrix.push_back(jr);
        }
        json basis = json::array();
        for (const BinaryForm<F>& h : kb.basis) basis.push_back(to_string(h));
        res["r"] = r;
        res["dim"] = kb.dim();
        res["basis"] = basis;
        res["matrix"] = matrix;
    } else if (cmd == "classify") {
        SmallRankClass<F> c = classify_small_rank(f);
        res["class"] = to_string(c.kind);
        res["rank"] = c.rank;
        res["certificate"] = certificate_json(c.complex.certificate);
        if (c.u) res["u"] = to_string(*c.u);
        if (c.rank3) {
            const Rank3Classification& r3 = *c.rank3;
            res["case"] = to_string(r3.kind);
            res["u"] = r3.u.to_string();
            res["u_square_free_part"] = square_free_part(Integer(r3.u.numerator() * r3.u.denominator())).get_str();
            res["field"] = r3.field_description;
            res["roots_in_field"] = r3.rational_roots;
            res["sylvester_form"] = to_string(r3.sylvester_form);
            res["non_unique"] = r3.non_unique;
            if (r3.non_unique) resp.diagnostics.push_back("degree below 5: other length-3 representations may exist");
        }
        if (f.degree() >= 3) res["full_rank"] = full_rank_test(f).label();
    } else if (cmd == "gap-bound") {
        int gap = descartes_gap_bound(f);
        res["gap_bound"] = gap;
        res["max_real_roots"] = f.degree() - gap;
    } else {
        throw InputError("unknown command " + cmd);
    }
    return res;
}

json run_family(const Request& req, Response& resp) {
    const json& opts = req.options;
    if (!opts.contains("family") || !opts.at("family").is_string()) throw InputError("family needs flambda or pd");
    const std::string fam = opts.at("family").get<std::string>();
    const long precision = option_long(opts, "precision", default_precision());
    if (fam == "flambda") {
        const long k = option_long(opts, "k", -1);
        const Rational lambda = option_rational(opts, "lambda");
        if (k < 2 || k > 40) throw InputError("flambda needs 2 <= k <= 40");
        if (lambda.is_zero()) throw InputError("flambda needs lambda != 0");
        BinaryForm<Rational> f = gen_flambda(static_cast<int>(k), lambda);
        FlambdaIdentity id = flambda_identity_check(static_cast<int>(k), lambda, precision);
        FlambdaBracket br = flambda_real_bracket(static_cast<int>(k), lambda);
        ComplexRankResult<Rational> cr = complex_rank(f);
        json levels = json::array();
        for (const FlambdaLevelCheck& l : br.levels) {
            levels.push_back({{"j", l.j}, {"kernel_dim", l.kernel_dim}, {"shape_ok", l.shape_ok},
                              {"min_gap", l.min_gap}, {"required_gap", l.required_gap}});
        }
        json ident{{"verified", id.verified}, {"exact", id.exact}, {"correction", id.correction.to_string()}};
        if (id.residual) ident["residual"] = id.residual->to_string(6);
        for (const std::string& n : br.notes) resp.diagnostics.push_back(n);
        if (!id.verified) throw std::logic_error("f_lambda identity failed");
        return json{{"family", "flambda"},
                    {"k", k},
                    {"lambda", lambda.to_string()},
                    {"form", to_string(f)},
                    {"complex_rank", cr.rank},
                    {"certificate", certificate_json(cr.certificate)},
                    {"identity", ident},
                    {"real_bracket",
                     {{"lo", br.lo}, {"hi", br.hi}, {"hyperbolic", br.hyperbolic}, {"structure_ok", br.structure_ok}, {"levels", levels}}}};
    }
    if (fam == "pd") {
        const long d = option_long(opts, "d", -1);
        const Rational gamma = option_rational(opts, "gamma");
        if (d < 3 || d > 200) throw InputError("pd needs 3 <= d <= 200");
        if (gamma.is_zero()) throw InputError("pd needs gamma != 0");
        PdFamily p = gen_pd(static_cast<int>(d), gamma);
        if (p.gamma_is_square) resp.diagnostics.push_back("gamma is a rational square: the representation is rational");
        return json{{"family", "pd"},
                    {"d", d},
                    {"gamma", gamma.to_string()},
                    {"form", to_string(p.form)},
                    {"gamma_is_square", p.gamma_is_square},
                    {"decomposition", decomposition_json(p.decomposition)},
                    {"verification", verify_json(verify_decomposition(p.decomposition, p.form))}};
    }
    throw InputError("unknown family " + fam);
}

void fail(Response& resp, int code, const std::string& kind, const std::string& message) {
    resp.ok = false;
    resp.exit_code = code;
    resp.result = json::object();
    resp.error = {{"kind", kind}, {"message", message}};
}

}  // namespace

long default_precision() {
    if (const char* env = std::getenv("WARING_DEFAULT_PRECISION")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v >= 32) return v;
    }
    return kDefaultPrecisionBits;
}

Request request_from_json(const json& j) {
    if (!j.is_object()) throw std::invalid_argument("request must be a JSON object");
    if (!j.contains("command") || !j.at("command").is_string()) throw std::invalid_argument("request needs a string command");
    Request r;
    r.command = j.at("command").get<std::string>();
    if (j.contains("form")) {
        if (!j.at("form").is_string()) throw std::invalid_argument("form must be a string");
        r.form_text = j.at("form").get<std::string>();
    }
    if (j.contains("options")) {
        if (!j.at("options").is_object()) throw std::invalid_argument("options must be an object");
        r.options = j.at("options");
    }
    return r;
}

json to_json(const Request& r) { return json{{"command", r.command}, {"form", r.form_text}, {"options", r.options}}; }

json to_json(const Response& r) {
    json j{{"status", r.ok ? "ok" : "error"}, {"command", r.command}, {"diagnostics", r.diagnostics}};
    if (r.ok) {
        j["result"] = r.result;
    } else {
        j["error"] = r.error;
    }
    return j;
}

Response run_command(const Request& req) {
    Response resp;
    resp.command = req.command;
    try {
        if (std::find(kCommands.begin(), kCommands.end(), req.command) == kCommands.end()) {
            throw InputError("unknown command '" + req.command + "'");
        }
        if (req.command == "family") {
            resp.result = run_family(req, resp);
        } else {
            if (req.form_text.empty()) throw InputError("missing form");
            AnyForm f = parse_form(req.form_text);
            if (form_degree(f) < 1) throw InputError("form must have degree >= 1");
            if (std::visit([](const auto& g) { return g.is_zero(); }, f)) throw InputError("form is zero");
            resp.result = std::visit([&](const auto& g) { return run_on_form(req, g, resp); }, f);
        }
    } catch (const ParseError& e) {
        fail(resp, 1, "parse", e.what());
        resp.error["position"] = e.position();
    } catch (const std::invalid_argument& e) {
        fail(resp, 1, "input", e.what());
    } catch (const ArithmeticError& e) {
        fail(resp, 1, "arithmetic", e.what());
    } catch (const json::exception& e) {
        fail(resp, 1, "input", e.what());
    } catch (const std::exception& e) {
        fail(resp, 2, "internal", e.what());
    }
    return resp;
}

namespace {

std::string cert_text(const json& c) {
    std::ostringstream os;
    os << "certificate: " << c.at("claim").get<std::string>() << " [" << c.at("lo") << ", " << c.at("hi") << "]";
    if (!c.at("witness").is_null()) os << ", witness " << c.at("witness").get<std::string>();
    os << "\n";
    for (const json& e : c.at("evidence")) {
        os << "  " << e.at("kind").get<std::string>();
        if (e.at("r").get<int>() != 0) os << " r=" << e.at("r");
        os << " value=" << e.at("value") << " (" << e.at("method").get<std::string>() << ")\n";
    }
    return os.str();
}

std::string decomposition_text(const json& d) {
    std::ostringstream os;
    os << "decomposition over " << d.at("domain").get<std::string>() << ":\n";
    for (const json& s : d.at("summands")) {
        os << "  (" << s.at("lambda").get<std::string>() << ") * ((" << s.at("alpha").get<std::string>() << ")*x + ("
           << s.at("beta").get<std::string>() << ")*y)^" << d.at("degree") << "\n";
    }
    if (d.at("exactness").is_object()) {
        os << "  residual <= " << d.at("exactness").at("numeric").at("residual").get<std::string>() << "\n";
    }
    return os.str();
}

}  // namespace

std::string render_text(const Response& r, bool quiet) {
    std::ostringstream os;
    if (!r.ok) {
        os << "error: " << r.error.at("message").get<std::string>() << "\n";
        return os.str();
    }
    const json& res = r.result;
    const std::string& c = r.command;
    if (c == "rank") {
        if (quiet) return std::to_string(res.at("complex_rank").get<int>()) + "\n";
        os << "complex rank: " << res.at("complex_rank") << "\n" << cert_text(res.at("certificate"));
    } else if (c == "real-rank") {
        std::string value = res.at("exact").get<bool>() ? std::to_string(res.at("bracket")[0].get<int>())
                                                         : "[" + std::to_string(res.at("bracket")[0].get<int>()) + ", " +
                                                               std::to_string(res.at("bracket")[1].get<int>()) + "]";
        if (quiet) return value + "\n";
        os << "real rank: " << value << "\n" << cert_text(res.at("certificate"));
    } else if (c == "decompose") {
        if (!quiet) os << "complex rank: " << res.at("complex_rank") << "\n";
        os << decomposition_text(res.at("decomposition"));
        if (!quiet) os << "verification: " << res.at("verification").at("result").get<std::string>() << "\n";
    } else if (c == "verify") {
        const json& v = res.at("verification");
        os << v.at("result").get<std::string>();
        if (v.contains("residual")) os << " residual <= " << v.at("residual").get<std::string>();
        os << "\n";
        if (!quiet && v.contains("diff")) {
            const int deg = res.at("degree").get<int>();
            int i = 0;
            for (const json& d : v.at("diff")) {
                if (d.get<std::string>() != "0") os << "  x^" << deg - i << "*y^" << i << ": " << d.get<std::string>() << "\n";
                ++i;
            }
        }
    } else if (c == "apolar") {
        os << res.at("g1").get<std::string>() << "\n" << res.at("g2").get<std::string>() << "\n";
        if (!quiet) os << "degrees " << res.at("degrees")[0] << " + " << res.at("degrees")[1] << ", resultant " << res.at("resultant").get<std::string>() << "\n";
    } else if (c == "kernel") {
        if (!quiet) os << "kernel at r=" << res.at("r") << ": dim " << res.at("dim") << "\n";
        for (const json& b : res.at("basis")) os << b.get<std::string>() << "\n";
    } else if (c == "classify") {
        os << res.at("class").get<std::string>();
        if (res.contains("case")) os << " " << res.at("case").get<std::string>();
        os << "\n";
        if (!quiet) {
            os << "complex rank: " << res.at("rank") << "\n";
            if (res.contains("u")) os << "u = " << res.at("u").get<std::string>() << "\n";
            if (res.contains("field")) os << "field: " << res.at("field").get<std::string>() << "\n";
            if (res.contains("sylvester_form")) os << "apolar cubic: " << res.at("sylvester_form").get<std::string>() << "\n";
        }
    } else if (c == "family") {
        os << res.at("form").get<std::string>() << "\n";
        if (!quiet) {
            if (res.at("family") == "flambda") {
                os << "complex rank: " << res.at("complex_rank") << "\n";
                os << "real rank in [" << res.at("real_bracket").at("lo") << ", " << res.at("real_bracket").at("hi") << "]\n";
                os << "identity: " << (res.at("identity").at("verified").get<bool>() ? "verified" : "failed")
                   << (res.at("identity").at("exact").get<bool>() ? " (exact)" : " (numeric)") << "\n";
            } else {
                os << decomposition_text(res.at("decomposition"));
                os << "verification: " << res.at("verification").at("result").get<std::string>() << "\n";
            }
        }
    } else if (c == "gap-bound") {
        if (quiet) return std::to_string(res.at("gap_bound").get<int>()) + "\n";
        os << "gap bound: " << res.at("gap_bound") << " (at most " << res.at("max_real_roots") << " real roots)\n";
    }
    if (!quiet) {
        for (const std::string& d : r.diagnostics) os << "note: " << d << "\n";
    }
    return os.str();
}

BatchSummary run_batch(std::istream& in, std::ostream& out, int parallelism) {
    std::vector<std::string> lines;
    for (std::string line; std::getline(in, line);) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        lines.push_back(line);
    }
    std::vector<Response> responses(lines.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (std::size_t i = next++; i < lines.size(); i = next++) {
            try {
                responses[i] = run_command(request_from_json(json::parse(lines[i])));
            } catch (const std::exception& e) {
                Response r;
                r.command = "";
                fail(r, 1, "request", e.what());
                responses[i] = r;
            }
        }
    };
    const int n = std::max(1, parallelism);
    std::vector<std::thread> pool;
    for (int t = 1; t < n; ++t) pool.emplace_back(worker);
    worker();
    for (std::thread& t : pool) t.join();
    BatchSummary s;
    for (const Response& r : responses) {
        out << to_json(r).dump() << "\n";
        ++s.total;
        if (r.ok) {
            ++s.ok;
        } else {
            ++s.error;
        }
    }
    out << json{{"summary", {{"total", s.total}, {"ok", s.ok}, {"error", s.error}}}}.dump() << "\n";
    return s;
}

}  // namespace waring::cli
