// qhal — command-line front end for the finite phase-space engine.
//
//   qhal verify  [--config c.json] [--n 1] [--N 9] [--seed 42] [--tol T]
//                [--suite name]... [--out report.json]
//   qhal compute --mode {transform,quantize,symbol,norms,gelfand,ideal}
//                [--in data.{json,csv}] [--zero-set zs.json] [--out path] ...
//   qhal fixture --kind <name> [--seed 42] [--out path] ...
//
// All parameters may come from a single self-describing JSON config file;
// explicit flags override config fields.  Report files embed the resolved
// configuration.  Exit status: 0 when every applicable check passes (verify)
// or the computation succeeds, 1 when a check fails, 2 on bad input.

#include <cstdio>
#include <iostream>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qhal/fixtures.hpp"
#include "qhal/ideals.hpp"
#include "qhal/model.hpp"
#include "qhal/norms.hpp"
#include "qhal/operator_engine.hpp"
#include "qhal/pair_algebra.hpp"
#include "qhal/phase_function.hpp"
#include "qhal/rng.hpp"
#include "qhal/serialize.hpp"
#include "qhal/verify.hpp"

namespace {

using nlohmann::json;
using namespace qhal;

// Options as given on the command line / in the config file, before overlay.
struct RawOptions {
    std::string config_path;
    std::optional<int32_t> n;
    std::optional<int64_t> N;
    std::optional<uint64_t> seed;
    std::optional<double> tol;
    std::vector<std::string> suites;
    std::optional<std::string> in_path;
    std::optional<std::string> out_path;
    std::optional<std::string> mode;
    std::optional<std::string> kind;
    std::optional<std::string> zero_set_path;
};

void add_common_options(CLI::App* cmd, RawOptions& o) {
    cmd->add_option("--config", o.config_path, "JSON config file; flags override its fields");
    cmd->add_option("--n", o.n, "degrees of freedom (>= 1)");
    cmd->add_option("--N", o.N, "modulus (odd, >= 3)");
    cmd->add_option("--seed", o.seed, "random seed");
    cmd->add_option("--tol", o.tol, "tolerance override for every check (> 0)");
    cmd->add_option("--out", o.out_path, "output file path");
}

// Overlays the config file under the flags and returns the resolved options.
RawOptions resolve_options(const RawOptions& flags) {
    RawOptions r = flags;
    if (flags.config_path.empty()) return r;

    json cfg;
    try {
        cfg = json::parse(read_text_file(flags.config_path));
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("config file: ") + e.what());
    }
    if (!cfg.is_object()) throw std::invalid_argument("config file: expected a JSON object");

    static const std::set<std::string> known = {"n",  "N",   "seed", "tol",  "suites",
                                                "in", "out", "mode", "kind", "zero_set"};
    for (const auto& [key, value] : cfg.items()) {
        (void)value;
        if (!known.count(key))
            throw std::invalid_argument("config file: unknown field '" + key + "'");
    }

    if (!r.n && cfg.contains("n")) r.n = cfg.at("n").get<int32_t>();
    if (!r.N && cfg.contains("N")) r.N = cfg.at("N").get<int64_t>();
    if (!r.seed && cfg.contains("seed")) r.seed = cfg.at("seed").get<uint64_t>();
    if (!r.tol && cfg.contains("tol")) r.tol = cfg.at("tol").get<double>();
    if (r.suites.empty() && cfg.contains("suites"))
        r.suites = cfg.at("suites").get<std::vector<std::string>>();
    if (!r.in_path && cfg.contains("in")) r.in_path = cfg.at("in").get<std::string>();
    if (!r.out_path && cfg.contains("out")) r.out_path = cfg.at("out").get<std::string>();
    if (!r.mode && cfg.contains("mode")) r.mode = cfg.at("mode").get<std::string>();
    if (!r.kind && cfg.contains("kind")) r.kind = cfg.at("kind").get<std::string>();
    if (!r.zero_set_path && cfg.contains("zero_set"))
        r.zero_set_path = cfg.at("zero_set").get<std::string>();
    return r;
}

RunConfig to_run_config(const RawOptions& r) {
    RunConfig cfg;
    if (r.n) cfg.n = *r.n;
    if (r.N) cfg.N = *r.N;
    if (r.seed) cfg.seed = *r.seed;
    if (r.tol) cfg.tolerance = *r.tol;
    cfg.suites = r.suites;
    if (r.in_path) cfg.in_path = *r.in_path;
    if (r.out_path) cfg.out_path = *r.out_path;
    cfg.validate();
    return cfg;
}

json resolved_config_json(const RawOptions& r, const RunConfig& cfg, bool with_suites = false) {
    json j;
    j["n"] = cfg.n;
    j["N"] = cfg.N;
    j["seed"] = cfg.seed;
    if (cfg.tolerance) j["tol"] = *cfg.tolerance;
    if (with_suites) j["suites"] = cfg.suites.empty() ? suite_names() : cfg.suites;
    if (r.in_path) j["in"] = *r.in_path;
    if (r.out_path) j["out"] = *r.out_path;
    if (r.mode) j["mode"] = *r.mode;
    if (r.kind) j["kind"] = *r.kind;
    if (r.zero_set_path) j["zero_set"] = *r.zero_set_path;
    return j;
}

void emit(const std::optional<std::string>& out_path, const std::string& content) {
    if (out_path && !out_path->empty())
        write_text_file(*out_path, content);
    else
        std::fputs(content.c_str(), stdout);
}

// --- verify --------------------------------------------------------------------

int cmd_verify(const RawOptions& flags) {
    const RawOptions r = resolve_options(flags);
    const RunConfig cfg = to_run_config(r);

    const std::vector<VerificationReport> reports = run_verify(cfg);
    for (const VerificationReport& rep : reports) {
        int applicable = 0, na = 0;
        for (const CheckResult& c : rep.checks) (c.status == "n/a" ? na : applicable)++;
        std::printf("%-16s %s  (%d checks, %d n/a, %.2fs)\n", rep.suite.c_str(),
                    rep.passed() ? "pass" : "FAIL", applicable, na, rep.wall_seconds);
        for (const CheckResult& c : rep.checks)
            if (c.status == "fail")
                std::printf("  FAIL %-28s value=%.6g tol=%.3g %s\n", c.id.c_str(), c.value,
                            c.tolerance, c.note.c_str());
    }
    const bool ok = all_passed(reports);
    std::printf("verify: %s\n", ok ? "PASS" : "FAIL");

    json out;
    out["config"] = resolved_config_json(r, cfg, /*with_suites=*/true);
    out["reports"] = json::array();
    for (const VerificationReport& rep : reports)
        out["reports"].push_back(json::parse(verification_report_to_json(rep)));
    out["pass"] = ok;
    if (r.out_path && !r.out_path->empty()) write_text_file(*r.out_path, out.dump(2) + "\n");
    return ok ? 0 : 1;
}

// --- compute -------------------------------------------------------------------

bool ends_with(const std::string& s, const std::string& suffix) {
    return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

// Loaded --in payload: exactly one member is set.
struct LoadedInput {
    std::optional<PhaseFunction> fn;
    std::optional<Operator> op;
};

// Reads --in as either a phase-space function or an operator; JSON is
// self-describing, CSV is disambiguated by the header / the wanted kind.
LoadedInput load_input(const std::string& path, const std::optional<ModelParams>& model,
                       const char* want) {
    LoadedInput in;
    const std::string text = read_text_file(path);
    if (ends_with(path, ".csv")) {
        if (!model)
            throw std::invalid_argument("csv input needs --n/--N (the file carries no params)");
        std::string head = text.substr(0, text.find('\n'));
        const bool op_csv = head.rfind("row,", 0) == 0 ||
                            (head.rfind("x,", 0) != 0 && std::string(want) == "operator");
        if (op_csv)
            in.op = operator_from_csv(text, *model);
        else
            in.fn = phase_function_from_csv(text, *model);
        return in;
    }
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(path + ": " + e.what());
    }
    if (j.is_object() && j.contains("matrix"))
        in.op = operator_from_json(text);
    else if (j.is_object() && j.contains("values"))
        in.fn = phase_function_from_json(text);
    else
        throw std::invalid_argument(path + ": expected an object with 'values' or 'matrix'");
    return in;
}

void check_model(const std::optional<ModelParams>& config_model, const ModelParams& file_model,
                 const std::string& path) {
    if (config_model && *config_model != file_model)
        throw std::invalid_argument("params mismatch: config wants n=" +
                                    std::to_string(config_model->n) + ", N=" +
                                    std::to_string(config_model->N) + " but " + path +
                                    " carries n=" + std::to_string(file_model.n) + ", N=" +
                                    std::to_string(file_model.N));
}

std::string function_out(const PhaseFunction& f, const std::optional<std::string>& out_path) {
    if (out_path && ends_with(*out_path, ".csv")) return phase_function_to_csv(f);
    return phase_function_to_json(f) + "\n";
}

std::string operator_out(const Operator& a, const std::optional<std::string>& out_path) {
    if (out_path && ends_with(*out_path, ".csv")) return operator_to_csv(a);
    return operator_to_json(a) + "\n";
}

int cmd_compute(const RawOptions& flags) {
    const RawOptions r = resolve_options(flags);
    const RunConfig cfg = to_run_config(r);
    if (!r.mode) throw std::invalid_argument("compute: --mode is required");
    const std::string mode = *r.mode;
    const bool explicit_model = r.n.has_value() || r.N.has_value();
    const std::optional<ModelParams> config_model =
        explicit_model ? std::optional<ModelParams>(ModelParams::make(cfg.n, cfg.N))
                       : std::nullopt;

    if (mode == "transform" || mode == "quantize" || mode == "symbol" || mode == "norms") {
        if (!r.in_path) throw std::invalid_argument("compute: --in is required for mode " + mode);
        const char* want = mode == "symbol" ? "operator" : "function";
        const LoadedInput in = load_input(*r.in_path, config_model, want);
        const ModelParams file_model = in.fn ? in.fn->p : in.op->p;
        check_model(config_model, file_model, *r.in_path);

        if (mode == "transform") {
            // Function -> symplectic Fourier; operator -> Fourier-Weyl.
            const PhaseFunction out = in.fn ? symplectic_fourier(*in.fn) : fourier_weyl(*in.op);
            emit(r.out_path, function_out(out, r.out_path));
            return 0;
        }
        if (mode == "quantize") {
            if (!in.fn) throw std::invalid_argument("quantize: input must be a function");
            emit(r.out_path, operator_out(weyl_quantize(*in.fn), r.out_path));
            return 0;
        }
        if (mode == "symbol") {
            if (!in.op) throw std::invalid_argument("symbol: input must be an operator");
            emit(r.out_path, function_out(weyl_symbol(*in.op), r.out_path));
            return 0;
        }
        // norms: one JSON object of named norm values for the input.
        json out;
        out["config"] = resolved_config_json(r, cfg);
        json values;
        if (in.fn) {
            const PhaseFunction& f = *in.fn;
            values["l1"] = lp_norm(f, 1.0);
            values["l2"] = lp_norm(f, 2.0);
            values["s_2"] = s_p_norm(f, 2.0);
            values["s_inf"] = s_p_norm(f, kPInf);
            values["t"] = t_norm(f);
            values["feichtinger"] = feichtinger_norm(f, gaussian_window(f.p));
        } else {
            const Operator& a = *in.op;
            const Operator b = discrete_gaussian_operator(a.p);
            values["schatten_1"] = schatten_norm(a, 1.0);
            values["schatten_2"] = schatten_norm(a, 2.0);
            values["schatten_inf"] = schatten_norm(a, kPInf);
            values["feichtinger_gamma"] = feichtinger_op_norm_gamma(a, b);
            values["feichtinger_alphagamma"] = feichtinger_op_norm_alphagamma(a, b);
        }
        out["norms"] = values;
        emit(r.out_path, out.dump(2) + "\n");
        return 0;
    }

    if (mode == "gelfand") {
        // Transform grid of a pair; with no --in this is the unit pair,
        // whose Gelfand transform is identically one.
        QhaPair pair(ModelParams::make(cfg.n, cfg.N));
        if (r.in_path) {
            const LoadedInput in = load_input(*r.in_path, config_model, "function");
            const ModelParams file_model = in.fn ? in.fn->p : in.op->p;
            check_model(config_model, file_model, *r.in_path);
            if (in.fn)
                pair = QhaPair(*in.fn, Operator(file_model));
            else
                pair = QhaPair(PhaseFunction(file_model), *in.op);
        } else {
            pair = pair_unit(pair.params());
        }
        emit(r.out_path, doubled_function_to_csv(gelfand_transform(pair)));
        return 0;
    }

    if (mode == "ideal") {
        const std::optional<std::string> zs_path = r.zero_set_path ? r.zero_set_path : r.in_path;
        if (!zs_path) throw std::invalid_argument("ideal: --zero-set (or --in) is required");
        const ModelParams p = ModelParams::make(cfg.n, cfg.N);
        const std::set<DoubledPoint> zs = zero_set_from_json(read_text_file(*zs_path), p);
        std::vector<DoubledPoint> zvec(zs.begin(), zs.end());
        const IdealBasis ideal = ideal_from_zero_set(p, zvec);

        // Product-closure defect: the largest Gelfand value on the zero set
        // over sampled products of basis members.
        double defect = 0.0;
        Rng rng(cfg.seed);
        const int samples = std::min<int>(64, static_cast<int>(ideal.basis.size() *
                                                               ideal.basis.size()));
        for (int t = 0; t < samples && !ideal.basis.empty(); ++t) {
            const QhaPair prod =
                pair_product(ideal.basis[rng.uniform_below(ideal.basis.size())],
                             ideal.basis[rng.uniform_below(ideal.basis.size())]);
            for (const DoubledPoint& pt : zvec)
                defect = std::max(defect, std::abs(character_eval(pt, prod)));
        }

        json out;
        out["config"] = resolved_config_json(r, cfg);
        out["zero_set_size"] = zvec.size();
        out["basis_dimension"] = ideal.basis.size();
        out["product_closure_defect"] = defect;
        out["graded"] = is_graded(ideal);
        emit(r.out_path, out.dump(2) + "\n");
        return 0;
    }

    throw std::invalid_argument(
        "compute: unknown mode '" + mode +
        "'; valid modes: transform quantize symbol norms gelfand ideal");
}

// --- fixture -------------------------------------------------------------------

int cmd_fixture(const RawOptions& flags) {
    const RawOptions r = resolve_options(flags);
    const RunConfig cfg = to_run_config(r);
    if (!r.kind) throw std::invalid_argument("fixture: --kind is required");
    const ModelParams p = ModelParams::make(cfg.n, cfg.N);
    const std::string kind = *r.kind;

    std::string content;
    if (kind == "gaussian_state")
        content = state_vector_to_json(gaussian_state(p)) + "\n";
    else if (kind == "chirp_state")
        content = state_vector_to_json(chirp_state(p, cfg.seed)) + "\n";
    else if (kind == "random_state")
        content = state_vector_to_json(random_state(p, cfg.seed)) + "\n";
    else if (kind == "flat_state")
        content = state_vector_to_json(flat_state(p)) + "\n";
    else if (kind == "random_operator")
        content = operator_out(random_operator(p, cfg.seed), r.out_path);
    else if (kind == "random_psd")
        content = operator_out(random_psd(p, cfg.seed), r.out_path);
    else if (kind == "discrete_gaussian_operator")
        content = operator_out(discrete_gaussian_operator(p), r.out_path);
    else if (kind == "random_phase_function")
        content = function_out(random_phase_function(p, cfg.seed), r.out_path);
    else if (kind == "gaussian_window")
        content = function_out(gaussian_window(p), r.out_path);
    else if (kind == "delta_function")
        content = function_out(delta_function(p), r.out_path);
    else if (kind == "one_function")
        content = function_out(one_function(p), r.out_path);
    else
        throw std::invalid_argument(
            "fixture: unknown kind '" + kind +
            "'; valid kinds: gaussian_state chirp_state random_state flat_state "
            "random_operator random_psd discrete_gaussian_operator "
            "random_phase_function gaussian_window delta_function one_function");

    emit(r.out_path, content);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite phase-space engine for quantum harmonic analysis"};
    app.require_subcommand(1);

    RawOptions vopt, copt, fopt;

    CLI::App* verify = app.add_subcommand("verify", "run verification suites");
    add_common_options(verify, vopt);
    verify->add_option("--suite", vopt.suites, "suite filter (repeatable); empty = all");

    CLI::App* compute = app.add_subcommand("compute", "transform / quantize / analyse data files");
    add_common_options(compute, copt);
    compute->add_option("--mode", copt.mode,
                        "one of: transform quantize symbol norms gelfand ideal");
    compute->add_option("--in", copt.in_path, "input data file (.json or .csv)");
    compute->add_option("--zero-set", copt.zero_set_path, "zero-set JSON file (ideal mode)");

    CLI::App* fixture = app.add_subcommand("fixture", "export a deterministic fixture");
    add_common_options(fixture, fopt);
    fixture->add_option("--kind", fopt.kind, "fixture kind (see error text for the list)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (verify->parsed()) return cmd_verify(vopt);
        if (compute->parsed()) return cmd_compute(copt);
        if (fixture->parsed()) return cmd_fixture(fopt);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "qhal: error: %s\n", e.what());
        return 2;
    }
    return 2;
}
