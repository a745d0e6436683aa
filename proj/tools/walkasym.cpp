// Command-line front end: classify, enumerate, predict, gamma,
// diagonal-check, verify, report, examples.
//
// Exit codes: 0 success, 1 input/validation error, 2 verification failure,
// 3 resource limit. Errors go to stderr as {"error": code, "message": ...}.

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "walks/asymptotics.hpp"
#include "walks/corpus.hpp"
#include "walks/diagonal.hpp"
#include "walks/enumerate.hpp"
#include "walks/errors.hpp"
#include "walks/fitting.hpp"
#include "walks/model.hpp"

using json = nlohmann::ordered_json;
using namespace walks;

namespace {

struct CommonOptions {
    std::string model_file;
    std::string example;
    std::string config_file;
    std::optional<double> tol_base, tol_c0, tol_c1;
    std::uint64_t table_cap = 1ull << 27;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw WalkError(ErrorCode::BadInput, "cannot open '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void apply_config(CommonOptions& opt) {
    if (opt.config_file.empty()) return;
    json cfg = json::parse(read_file(opt.config_file));
    if (cfg.contains("tolerances")) {
        const auto& t = cfg["tolerances"];
        if (t.contains("baseRel") && !opt.tol_base) opt.tol_base = t["baseRel"].get<double>();
        if (t.contains("c0Rel") && !opt.tol_c0) opt.tol_c0 = t["c0Rel"].get<double>();
        if (t.contains("c1Rel") && !opt.tol_c1) opt.tol_c1 = t["c1Rel"].get<double>();
    }
    if (cfg.contains("resourceCaps") && cfg["resourceCaps"].contains("tableCells"))
        opt.table_cap = cfg["resourceCaps"]["tableCells"].get<std::uint64_t>();
}

struct ResolvedModel {
    WalkModel model;
    const CorpusEntry* entry = nullptr; // when chosen by --example
};

ResolvedModel resolve_model(const CommonOptions& opt) {
    if (!opt.example.empty()) {
        const CorpusEntry* e = find_corpus_entry(opt.example);
        if (!e)
            throw WalkError(ErrorCode::BadInput,
                            "unknown example '" + opt.example + "' (see `examples`)");
        return {e->model, e};
    }
    if (!opt.model_file.empty())
        return {parse_model_json(read_file(opt.model_file)), nullptr};
    throw WalkError(ErrorCode::BadInput, "pass --model FILE or --example NAME");
}

json classification_json(const WalkModel& model, const Classification& cls) {
    json out;
    out["class"] = symmetry_class_name(cls.tag);
    out["dimension"] = model.dimension();
    if (cls.tag == SymmetryClass::Unsupported) {
        out["reason"] = cls.unsupported_reason;
        return out;
    }
    if (cls.tag == SymmetryClass::MostlySymmetric) {
        out["asymmetricAxis"] = cls.asymmetric_axis + 1;
        out["driftSign"] = drift_sign_name(cls.drift_sign);
        out["drift"] = rational_str(cls.drift);
    }
    json perm = json::array();
    for (int p : cls.permutation) perm.push_back(p + 1);
    out["permutation"] = perm;
    return out;
}

json prediction_json(const AsymptoticPrediction& pred, bool with_second_order) {
    json out;
    out["theorem"] = theorem_tag_name(pred.theorem);
    out["period"] = pred.period;
    out["classes"] = json::array();
    for (const auto& c : pred.classes) {
        json cj;
        cj["residue"] = c.residue;
        cj["base"] = c.base;
        cj["baseExact"] = c.base_exact.str();
        cj["order"] = to_double(c.order_exponent);
        cj["orderExact"] = rational_str(c.order_exponent);
        cj["constant"] = c.constant;
        cj["constantExact"] = c.constant_exact.str();
        out["classes"].push_back(cj);
    }
    if (with_second_order && pred.second_order) {
        json so;
        so["kappa"] = pred.second_order->kappa;
        so["kappaExact"] = pred.second_order->kappa_exact.str();
        so["mainTermOnly"] = pred.second_order->main_term_only;
        out["secondOrder"] = so;
    }
    return out;
}

const char* gamma_order_name(GammaPoint::Order o) {
    switch (o) {
        case GammaPoint::Order::Leading: return "leading";
        case GammaPoint::Order::SuppressedNumerator: return "suppressed-numerator";
        case GammaPoint::Order::SuppressedSmooth: return "suppressed-smooth";
    }
    return "unknown";
}

json gamma_json(const GammaSet& gs, const Rational& s1) {
    json out;
    out["period"] = gs.period;
    out["points"] = json::array();
    for (const auto& p : gs.points) {
        json pj;
        pj["w"] = json::array();
        for (const auto& w : p.w) pj["w"].push_back(gaussian_str(w));
        pj["t"] = gaussian_str(p.t_coordinate);
        pj["tAbs"] = rational_str(Rational(1) / s1);
        pj["base"] = gaussian_str(p.base_exact);
        pj["order"] = gamma_order_name(p.order);
        out["points"].push_back(pj);
    }
    return out;
}

json verification_json(const VerificationReport& rep, const ToleranceProfile& tol) {
    json out;
    out["pass"] = rep.pass;
    out["window"] = {rep.window.lo, rep.window.hi};
    json tj;
    tj["baseRel"] = tol.base_rel;
    tj["c0Rel"] = tol.c0_rel;
    if (tol.c1_rel) tj["c1Rel"] = *tol.c1_rel;
    out["tolerances"] = tj;
    out["classes"] = json::array();
    for (const auto& c : rep.classes) {
        json cj;
        cj["residue"] = c.residue;
        cj["predictedBase"] = c.predicted_base;
        cj["fittedBase"] = c.fitted_base;
        cj["baseRelErr"] = c.base_rel_err;
        cj["predictedC0"] = c.predicted_c0;
        cj["fittedC0"] = c.fitted_c0;
        cj["c0RelErr"] = c.c0_rel_err;
        if (c.predicted_c1) {
            cj["predictedC1"] = *c.predicted_c1;
            cj["fittedC1"] = *c.fitted_c1;
            cj["c1RelErr"] = *c.c1_rel_err;
        }
        cj["residualRms"] = c.residual_rms;
        cj["pass"] = c.pass;
        out["classes"].push_back(cj);
    }
    return out;
}

void print_verification_table(const VerificationReport& rep, std::ostream& os) {
    os << "residue  quantity   predicted      fitted         rel.err    verdict\n";
    for (const auto& c : rep.classes) {
        char buf[160];
        std::snprintf(buf, sizeof buf, "%-8d base       %-14.8g %-14.8g %-10.2e %s\n",
                      c.residue, c.predicted_base, c.fitted_base, c.base_rel_err,
                      c.pass ? "pass" : "FAIL");
        os << buf;
        std::snprintf(buf, sizeof buf, "%-8s c0         %-14.8g %-14.8g %-10.2e\n", "",
                      c.predicted_c0, c.fitted_c0, c.c0_rel_err);
        os << buf;
        if (c.predicted_c1) {
            std::snprintf(buf, sizeof buf, "%-8s c1         %-14.8g %-14.8g %-10.2e\n", "",
                          *c.predicted_c1, *c.fitted_c1, *c.c1_rel_err);
            os << buf;
        }
    }
    os << (rep.pass ? "VERDICT: pass\n" : "VERDICT: fail\n");
}

ToleranceProfile resolve_tolerances(const CommonOptions& opt, const CorpusEntry* entry,
                                    int dimension) {
    ToleranceProfile tol;
    if (entry) tol = entry->tolerance;
    else if (dimension >= 3) tol.c0_rel = 0.03;
    if (opt.tol_base) tol.base_rel = *opt.tol_base;
    if (opt.tol_c0) tol.c0_rel = *opt.tol_c0;
    if (opt.tol_c1) tol.c1_rel = *opt.tol_c1;
    return tol;
}

int default_verify_n(const CorpusEntry* entry, int dimension) {
    if (entry) return entry->default_max_n;
    return dimension >= 3 ? 80 : 400;
}

void add_model_options(CLI::App* cmd, CommonOptions& opt) {
    cmd->add_option("--model", opt.model_file, "model JSON file");
    cmd->add_option("--example", opt.example, "built-in example name");
    cmd->add_option("--config", opt.config_file, "config JSON (tolerances, resource caps)");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"asymptotics of weighted lattice walks in the orthant"};
    app.require_subcommand(1);

    CommonOptions opt;

    auto* cmd_classify = app.add_subcommand("classify", "symmetry class and drift");
    add_model_options(cmd_classify, opt);

    auto* cmd_enumerate = app.add_subcommand("enumerate", "exact or float walk counts");
    add_model_options(cmd_enumerate, opt);
    int enum_max_n = 20;
    bool enum_float = false;
    std::string enum_out;
    cmd_enumerate->add_option("--max-n", enum_max_n, "largest walk length");
    cmd_enumerate->add_flag("--float", enum_float, "float64 dynamic programming");
    cmd_enumerate->add_option("--output", enum_out, "write the table to a file");

    auto* cmd_predict = app.add_subcommand("predict", "asymptotic prediction JSON");
    add_model_options(cmd_predict, opt);
    bool with_second = false;
    cmd_predict->add_flag("--second-order", with_second, "include the n^-1/2 correction");

    auto* cmd_gamma = app.add_subcommand("gamma", "critical set listing");
    add_model_options(cmd_gamma, opt);

    auto* cmd_diag = app.add_subcommand("diagonal-check",
                                        "diagonal coefficients vs exact enumeration");
    add_model_options(cmd_diag, opt);
    int diag_max_n = 15;
    cmd_diag->add_option("--max-n", diag_max_n, "verification depth");

    auto* cmd_verify = app.add_subcommand("verify", "prediction vs oracle fit");
    add_model_options(cmd_verify, opt);
    int verify_max_n = 0;
    cmd_verify->add_option("--max-n", verify_max_n, "sequence length (default 400 2D / 80 3D)");
    cmd_verify->add_option("--tol-base", opt.tol_base, "relative base tolerance");
    cmd_verify->add_option("--tol-c0", opt.tol_c0, "relative c0 tolerance");
    cmd_verify->add_option("--tol-c1", opt.tol_c1, "relative c1 tolerance");
    bool verify_json_only = false;
    cmd_verify->add_flag("--json", verify_json_only, "JSON only, no table");

    auto* cmd_report = app.add_subcommand("report", "full pipeline in one document");
    add_model_options(cmd_report, opt);
    int report_max_n = 0;
    int report_diag_n = 12;
    int report_residue_n = 0;
    cmd_report->add_option("--max-n", report_max_n, "sequence length for fits");
    cmd_report->add_option("--diagonal-n", report_diag_n, "diagonal check depth");
    cmd_report->add_option("--residue-n", report_residue_n,
                           "residue quadrature length (0 = auto for zero-drift 2D)");
    bool report_json = false;
    cmd_report->add_flag("--json", report_json, "emit JSON (always on; kept for symmetry)");

    auto* cmd_examples = app.add_subcommand("examples", "list built-in corpus entries");
    (void)cmd_examples;

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 1; // usage problems are input errors
    }

    try {
        apply_config(opt);

        if (cmd_examples->parsed()) {
            json out = json::array();
            for (const auto& e : corpus()) {
                json ej;
                ej["name"] = e.name;
                ej["description"] = e.description;
                ej["dimension"] = e.model.dimension();
                ej["steps"] = e.model.step_count();
                ej["theorem"] = e.expected_theorem;
                ej["defaultMaxN"] = e.default_max_n;
                out.push_back(ej);
            }
            std::cout << out.dump(2) << "\n";
            return 0;
        }

        ResolvedModel rm = resolve_model(opt);
        const WalkModel& model = rm.model;

        if (cmd_classify->parsed()) {
            std::cout << classification_json(model, classify(model)).dump(2) << "\n";
            return 0;
        }

        if (cmd_enumerate->parsed()) {
            CountSequence seq =
                count_walks(model, enum_max_n,
                            enum_float ? ArithmeticMode::Float64 : ArithmeticMode::Exact,
                            opt.table_cap);
            std::string text = seq.export_text();
            if (enum_out.empty()) {
                std::cout << text;
            } else {
                std::ofstream out(enum_out);
                if (!out) throw WalkError(ErrorCode::BadInput, "cannot write " + enum_out);
                out << text;
            }
            return 0;
        }

        if (cmd_predict->parsed()) {
            AsymptoticPrediction pred = predict(model);
            std::cout << prediction_json(pred, with_second).dump(2) << "\n";
            return 0;
        }

        if (cmd_gamma->parsed()) {
            std::cout << gamma_json(gamma_set(model), model.total_weight()).dump(2) << "\n";
            return 0;
        }

        if (cmd_diag->parsed()) {
            VerifyReport vr = verify_rep(model, diag_max_n);
            json out;
            out["agree"] = vr.agree;
            if (vr.first_mismatch) out["firstMismatch"] = *vr.first_mismatch;
            else out["firstMismatch"] = nullptr;
            out["checkedUpTo"] = vr.checked_up_to;
            std::cout << out.dump(2) << "\n";
            return vr.agree ? 0 : 2;
        }

        if (cmd_verify->parsed()) {
            int max_n = verify_max_n > 0 ? verify_max_n
                                         : default_verify_n(rm.entry, model.dimension());
            ToleranceProfile tol = resolve_tolerances(opt, rm.entry, model.dimension());
            AsymptoticPrediction pred = predict(model);
            CountSequence seq = count_walks(model, max_n, ArithmeticMode::Float64, opt.table_cap);
            VerificationReport rep = compare(pred, seq, tol);
            std::cout << verification_json(rep, tol).dump(2) << "\n";
            if (!verify_json_only) print_verification_table(rep, std::cerr);
            return rep.pass ? 0 : 2;
        }

        if (cmd_report->parsed()) {
            json out;
            out["model"] = json::parse(model_to_json(model));
            Classification cls = classify(model);
            out["classification"] = classification_json(model, cls);
            if (!cls.supported()) {
                std::cout << out.dump(2) << "\n";
                return 0;
            }
            AxisDecomposition dec = decompose(*cls.canonical);
            auto hat_names = LaurentPoly::default_names(model.dimension() - 1, false);
            json dj;
            dj["A"] = dec.A.str(hat_names);
            dj["Q"] = dec.Q.str(hat_names);
            dj["B"] = dec.B.str(hat_names);
            json bk = json::array();
            for (const auto& b : dec.forward_weights) bk.push_back(rational_str(b));
            dj["forwardWeights"] = bk;
            out["decomposition"] = dj;

            DiagonalRep rep = build_rep(*cls.canonical);
            out["diagonalRepresentation"] = rep.canonical_str();
            VerifyReport vr = verify_rep(model, report_diag_n);
            out["diagonalCheck"] = {{"agree", vr.agree}, {"checkedUpTo", vr.checked_up_to}};

            AsymptoticPrediction pred = predict(model);
            out["prediction"] = prediction_json(pred, true);
            out["gamma"] = gamma_json(gamma_set(model), model.total_weight());

            int max_n = report_max_n > 0 ? report_max_n
                                         : default_verify_n(rm.entry, model.dimension());
            ToleranceProfile tol = resolve_tolerances(opt, rm.entry, model.dimension());
            CountSequence seq = count_walks(model, max_n, ArithmeticMode::Float64, opt.table_cap);
            VerificationReport vrep = compare(pred, seq, tol);
            out["verification"] = verification_json(vrep, tol);

            bool want_residue = report_residue_n > 0 ||
                                (pred.theorem == TheoremTag::ZeroDrift && model.dimension() == 2);
            if (want_residue) {
                int rn = report_residue_n > 0 ? report_residue_n : 50;
                ResidueEstimate est = residue_integral_estimate(model, rn, {}, &seq);
                json rj;
                rj["n"] = rn;
                rj["estimate"] = est.estimate;
                if (est.relative_error_vs_oracle)
                    rj["relativeErrorVsOracle"] = *est.relative_error_vs_oracle;
                out["residueQuadrature"] = rj;
            }
            std::cout << out.dump(2) << "\n";
            return vrep.pass ? 0 : 2;
        }
    } catch (const WalkError& e) {
        json err;
        err["error"] = error_code_name(e.code());
        err["message"] = e.what();
        if (e.axis() > 0) err["axis"] = e.axis();
        std::cerr << err.dump() << "\n";
        return e.code() == ErrorCode::ResourceLimit ? 3 : 1;
    } catch (const std::exception& e) {
        json err;
        err["error"] = "Internal";
        err["message"] = e.what();
        std::cerr << err.dump() << "\n";
        return 1;
    }
    return 0;
}
