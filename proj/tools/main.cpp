// circ4 command line front end. Links the C API only.

#include "circ4/circ4.h"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

using nlohmann::json;

namespace {

// 17 significant digits: lossless double round trip in machine formats
std::string fmt17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string fmt6(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

int exit_code_for(circ4_status status) {
    switch (status) {
    case CIRC4_OK: return 0;
    case CIRC4_ERR_NON_FINITE:
    case CIRC4_ERR_ORDERING:
    case CIRC4_ERR_INVALID_PARAMS:
    case CIRC4_ERR_OUT_OF_DOMAIN:
    case CIRC4_ERR_UNKNOWN_FAMILY:
    case CIRC4_ERR_NULL_ARGUMENT: return 2;
    case CIRC4_ERR_NOT_POSITIVE_DEFINITE:
    case CIRC4_ERR_EIGENVECTOR_INPUT:
    case CIRC4_ERR_ZERO_VECTOR:
    case CIRC4_ERR_SINGULAR_METRIC:
    case CIRC4_ERR_BOUNDARY_FIXED_POINT: return 3;
    case CIRC4_ERR_SCALE_OVERFLOW: return 4;
    case CIRC4_ERR_INTERNAL: break;
    }
    return 1;
}

struct CliError {
    int code;
    std::string message;
};

[[noreturn]] void fail(int code, const std::string& message) { throw CliError{code, message}; }

void require_ok(circ4_status status, const std::string& where) {
    if (status != CIRC4_OK)
        fail(exit_code_for(status),
             where + ": " + circ4_status_name(status) + ": " + circ4_last_error());
}

// Everything a subcommand may consume; populated from --config, then
// overridden by explicit flags.
struct RunConfig {
    std::optional<std::vector<double>> metric;
    std::optional<double> alpha, beta;
    std::optional<std::vector<double>> vector;
    std::optional<int> steps;
    std::optional<double> tolerance;
    std::optional<std::string> output_format;
    std::optional<std::string> field_family;
    std::optional<std::vector<double>> point;
    std::optional<double> fd_step;
    std::optional<std::string> alpha_range, beta_range;
    std::optional<std::string> out_path;
};

void load_config_file(const std::string& path, RunConfig& cfg) {
    std::ifstream in(path);
    if (!in) fail(2, "config: cannot open '" + path + "'");
    json doc;
    try {
        in >> doc;
    } catch (const std::exception& e) {
        fail(2, std::string("config: invalid JSON: ") + e.what());
    }
    const auto get_doubles = [&](const char* key) -> std::optional<std::vector<double>> {
        if (!doc.contains(key)) return std::nullopt;
        return doc.at(key).get<std::vector<double>>();
    };
    try {
        cfg.metric = get_doubles("metric");
        cfg.vector = get_doubles("vector");
        cfg.point = get_doubles("point");
        if (doc.contains("params")) {
            const auto params = doc.at("params").get<std::vector<double>>();
            if (params.size() != 2) fail(2, "config: params must have two entries");
            cfg.alpha = params[0];
            cfg.beta = params[1];
        }
        if (doc.contains("alpha")) cfg.alpha = doc.at("alpha").get<double>();
        if (doc.contains("beta")) cfg.beta = doc.at("beta").get<double>();
        if (doc.contains("steps")) cfg.steps = doc.at("steps").get<int>();
        if (doc.contains("tolerance")) cfg.tolerance = doc.at("tolerance").get<double>();
        if (doc.contains("output_format"))
            cfg.output_format = doc.at("output_format").get<std::string>();
        if (doc.contains("field_family"))
            cfg.field_family = doc.at("field_family").get<std::string>();
        if (doc.contains("fd_step")) cfg.fd_step = doc.at("fd_step").get<double>();
        if (doc.contains("alpha_range"))
            cfg.alpha_range = doc.at("alpha_range").get<std::string>();
        if (doc.contains("beta_range")) cfg.beta_range = doc.at("beta_range").get<std::string>();
    } catch (const CliError&) {
        throw;
    } catch (const std::exception& e) {
        fail(2, std::string("config: ") + e.what());
    }
}

circ4_metric metric_from(const RunConfig& cfg) {
    if (!cfg.metric) fail(2, "missing --metric a,b,c");
    if (cfg.metric->size() != 3) fail(2, "--metric needs exactly three values");
    circ4_metric m;
    require_ok(circ4_metric_make((*cfg.metric)[0], (*cfg.metric)[1], (*cfg.metric)[2], 1, &m),
               "metric");
    return m;
}

circ4_vec4 vector_from(const RunConfig& cfg) {
    if (!cfg.vector) fail(2, "missing --w x,y,z,u");
    if (cfg.vector->size() != 4) fail(2, "--w needs exactly four values");
    return {(*cfg.vector)[0], (*cfg.vector)[1], (*cfg.vector)[2], (*cfg.vector)[3]};
}

circ4_params params_from(const RunConfig& cfg) {
    if (!cfg.alpha || !cfg.beta) fail(2, "missing --alpha and --beta");
    return {*cfg.alpha, *cfg.beta};
}

std::string format_from(const RunConfig& cfg) {
    const std::string format = cfg.output_format.value_or("table");
    if (format != "table" && format != "csv" && format != "json")
        fail(2, "unknown format '" + format + "' (expected table, csv or json)");
    return format;
}

void emit(const RunConfig& cfg, const std::string& text) {
    if (cfg.out_path) {
        std::ofstream out(*cfg.out_path, std::ios::binary);
        if (!out) fail(2, "cannot open output file '" + *cfg.out_path + "'");
        out << text;
    } else {
        std::cout << text;
    }
}

json input_json(const RunConfig& cfg) {
    json in;
    if (cfg.metric) in["metric"] = *cfg.metric;
    if (cfg.vector) in["vector"] = *cfg.vector;
    if (cfg.alpha) in["alpha"] = *cfg.alpha;
    if (cfg.beta) in["beta"] = *cfg.beta;
    if (cfg.steps) in["steps"] = *cfg.steps;
    if (cfg.tolerance) in["tolerance"] = *cfg.tolerance;
    if (cfg.field_family) in["field_family"] = *cfg.field_family;
    if (cfg.point) in["point"] = *cfg.point;
    if (cfg.fd_step) in["fd_step"] = *cfg.fd_step;
    if (cfg.alpha_range) in["alpha_range"] = *cfg.alpha_range;
    if (cfg.beta_range) in["beta_range"] = *cfg.beta_range;
    in["format"] = format_from(cfg);
    return in;
}

// ---- det ------------------------------------------------------------------

int run_det(const RunConfig& cfg) {
    const circ4_metric m = metric_from(cfg);
    double closed = 0, dense = 0;
    require_ok(circ4_det_closed_form(&m, &closed), "det");
    require_ok(circ4_det_cofactor(&m, &dense), "det");
    const double dev = std::abs(closed - dense);

    const std::string format = format_from(cfg);
    std::ostringstream os;
    if (format == "json") {
        json out;
        out["command"] = "det";
        out["input"] = input_json(cfg);
        out["det_closed_form"] = closed;
        out["det_cofactor"] = dense;
        out["abs_deviation"] = dev;
        os << out.dump(2) << "\n";
    } else if (format == "csv") {
        os << "det_closed_form,det_cofactor,abs_deviation\n";
        os << fmt17(closed) << "," << fmt17(dense) << "," << fmt17(dev) << "\n";
    } else {
        os << "det (closed form) : " << fmt6(closed) << "\n";
        os << "det (cofactor)    : " << fmt6(dense) << "\n";
        os << "abs deviation     : " << fmt6(dev) << "\n";
    }
    emit(cfg, os.str());
    return 0;
}

// ---- posdef ----------------------------------------------------------------

int run_posdef(const RunConfig& cfg) {
    const circ4_metric m = metric_from(cfg);
    int sufficient = 0, exact = 0;
    double ev[3];
    require_ok(circ4_is_positive_definite(&m, 0, &sufficient), "posdef");
    require_ok(circ4_is_positive_definite(&m, 1, &exact), "posdef");
    require_ok(circ4_eigenvalues(&m, ev), "posdef");

    const std::string format = format_from(cfg);
    std::ostringstream os;
    if (format == "json") {
        json out;
        out["command"] = "posdef";
        out["input"] = input_json(cfg);
        out["paper_sufficient"] = sufficient != 0;
        out["exact"] = exact != 0;
        out["eigenvalues"] = {ev[0], ev[1], ev[2]};
        out["multiplicities"] = {1, 2, 1};
        os << out.dump(2) << "\n";
    } else if (format == "csv") {
        os << "paper_sufficient,exact,eig_1,eig_2,eig_3\n";
        os << (sufficient ? "true" : "false") << "," << (exact ? "true" : "false") << ","
           << fmt17(ev[0]) << "," << fmt17(ev[1]) << "," << fmt17(ev[2]) << "\n";
    } else {
        os << "ordering test (sufficient) : " << (sufficient ? "true" : "false") << "\n";
        os << "eigenvalue test (exact)    : " << (exact ? "true" : "false") << "\n";
        os << "eigenvalues                : " << fmt6(ev[0]) << ", " << fmt6(ev[1])
           << " (x2), " << fmt6(ev[2]) << "\n";
    }
    emit(cfg, os.str());
    return 0;
}

// ---- angles ----------------------------------------------------------------

int run_angles(const RunConfig& cfg) {
    const circ4_metric m = metric_from(cfg);
    const circ4_vec4 w = vector_from(cfg);
    circ4_angles a;
    require_ok(circ4_angle_pair(&m, &w, &a), "angles");

    const std::string format = format_from(cfg);
    std::ostringstream os;
    if (format == "json") {
        json out;
        out["command"] = "angles";
        out["input"] = input_json(cfg);
        out["cos_q"] = a.cos_q;
        out["cos_q2"] = a.cos_q2;
        os << out.dump(2) << "\n";
    } else if (format == "csv") {
        os << "cos_q,cos_q2\n" << fmt17(a.cos_q) << "," << fmt17(a.cos_q2) << "\n";
    } else {
        os << "cos_q  (w vs qw)   : " << fmt6(a.cos_q) << "  angle " << fmt6(std::acos(a.cos_q))
           << " rad\n";
        os << "cos_q2 (w vs q^2w) : " << fmt6(a.cos_q2) << "  angle "
           << fmt6(std::acos(a.cos_q2)) << " rad\n";
    }
    emit(cfg, os.str());
    return 0;
}

// ---- transform -------------------------------------------------------------

int run_transform(const RunConfig& cfg) {
    const circ4_metric m = metric_from(cfg);
    const circ4_vec4 w = vector_from(cfg);
    const circ4_params p = params_from(cfg);

    circ4_angles base, formula, direct;
    require_ok(circ4_angle_pair(&m, &w, &base), "transform");
    require_ok(circ4_transform_angles(&base, &p, &formula), "transform");
    circ4_metric t;
    require_ok(circ4_conformal_combine(&m, &p, &t), "transform");
    require_ok(circ4_angle_pair(&t, &w, &direct), "transform");
    const double dev =
        std::max(std::abs(formula.cos_q - direct.cos_q), std::abs(formula.cos_q2 - direct.cos_q2));

    const std::string format = format_from(cfg);
    std::ostringstream os;
    if (format == "json") {
        json out;
        out["command"] = "transform";
        out["input"] = input_json(cfg);
        out["base"] = {{"cos_q", base.cos_q}, {"cos_q2", base.cos_q2}};
        out["formula"] = {{"cos_q", formula.cos_q}, {"cos_q2", formula.cos_q2}};
        out["direct"] = {{"cos_q", direct.cos_q}, {"cos_q2", direct.cos_q2}};
        out["transformed_metric"] = {t.a, t.b, t.c};
        out["max_abs_deviation"] = dev;
        os << out.dump(2) << "\n";
    } else if (format == "csv") {
        os << "cos_q_formula,cos_q2_formula,cos_q_direct,cos_q2_direct,max_abs_deviation\n";
        os << fmt17(formula.cos_q) << "," << fmt17(formula.cos_q2) << "," << fmt17(direct.cos_q)
           << "," << fmt17(direct.cos_q2) << "," << fmt17(dev) << "\n";
    } else {
        os << "base angles        : cos_q " << fmt6(base.cos_q) << ", cos_q2 "
           << fmt6(base.cos_q2) << "\n";
        os << "transform formula  : cos_q " << fmt6(formula.cos_q) << ", cos_q2 "
           << fmt6(formula.cos_q2) << "\n";
        os << "direct metric      : cos_q " << fmt6(direct.cos_q) << ", cos_q2 "
           << fmt6(direct.cos_q2) << "\n";
        os << "transformed metric : (" << fmt6(t.a) << ", " << fmt6(t.b) << ", " << fmt6(t.c)
           << ")\n";
        os << "max abs deviation  : " << fmt6(dev) << "\n";
    }
    emit(cfg, os.str());
    return 0;
}

// ---- iterate ----------------------------------------------------------------

struct TracePair {
    std::vector<int> n;
    std::vector<circ4_angles> rec, dir;
    std::vector<double> dev;
    double max_dev = 0.0;
    circ4_angles limit{};
    int converged = 0;
};

TracePair compute_traces(const circ4_metric& m, const circ4_vec4& w, const circ4_params& p,
                         int steps, double tol) {
    circ4_angles base;
    require_ok(circ4_angle_pair(&m, &w, &base), "iterate");

    circ4_trace* dir = nullptr;
    require_ok(circ4_trace_direct(&m, &w, &p, steps, &dir), "iterate");
    circ4_trace* rec = nullptr;
    const circ4_status rec_status = circ4_trace_recurrence(&base, &p, steps, &rec);
    if (rec_status != CIRC4_OK) {
        circ4_trace_free(dir);
        require_ok(rec_status, "iterate");
    }

    TracePair out;
    const int len = circ4_trace_len(dir);
    for (int i = 0; i < len; ++i) {
        int step = 0;
        circ4_angles a_dir, a_rec;
        require_ok(circ4_trace_row(dir, i, &step, &a_dir, nullptr), "iterate");
        require_ok(circ4_trace_row(rec, i, nullptr, &a_rec, nullptr), "iterate");
        const double dev = std::max(std::abs(a_rec.cos_q - a_dir.cos_q),
                                    std::abs(a_rec.cos_q2 - a_dir.cos_q2));
        out.n.push_back(step);
        out.rec.push_back(a_rec);
        out.dir.push_back(a_dir);
        out.dev.push_back(dev);
        out.max_dev = std::max(out.max_dev, dev);
    }
    require_ok(circ4_trace_limit(dir, tol, &out.limit, &out.converged), "iterate");
    circ4_trace_free(dir);
    circ4_trace_free(rec);
    return out;
}

int run_iterate(const RunConfig& cfg) {
    const circ4_metric m = metric_from(cfg);
    const circ4_vec4 w = vector_from(cfg);
    const circ4_params p = params_from(cfg);
    const int steps = cfg.steps.value_or(50);
    if (steps < 0) fail(2, "--n must be >= 0");
    const double tol = cfg.tolerance.value_or(1e-9);
    const TracePair t = compute_traces(m, w, p, steps, tol);

    const std::string format = format_from(cfg);
    std::ostringstream os;
    if (format == "json") {
        json rows = json::array();
        for (std::size_t i = 0; i < t.n.size(); ++i)
            rows.push_back({{"n", t.n[i]},
                            {"cos_q_rec", t.rec[i].cos_q},
                            {"cos_q2_rec", t.rec[i].cos_q2},
                            {"cos_q_dir", t.dir[i].cos_q},
                            {"cos_q2_dir", t.dir[i].cos_q2},
                            {"abs_dev", t.dev[i]}});
        json out;
        out["command"] = "iterate";
        out["input"] = input_json(cfg);
        out["rows"] = rows;
        out["max_abs_dev"] = t.max_dev;
        out["limit"] = {{"cos_q", t.limit.cos_q},
                        {"cos_q2", t.limit.cos_q2},
                        {"converged", t.converged != 0}};
        os << out.dump(2) << "\n";
    } else if (format == "csv") {
        os << "n,cos_q_rec,cos_q2_rec,cos_q_dir,cos_q2_dir,abs_dev\n";
        for (std::size_t i = 0; i < t.n.size(); ++i)
            os << t.n[i] << "," << fmt17(t.rec[i].cos_q) << "," << fmt17(t.rec[i].cos_q2) << ","
               << fmt17(t.dir[i].cos_q) << "," << fmt17(t.dir[i].cos_q2) << ","
               << fmt17(t.dev[i]) << "\n";
        os << "# max_abs_dev " << fmt17(t.max_dev) << "\n";
        os << "# limit cos_q " << fmt17(t.limit.cos_q) << " cos_q2 " << fmt17(t.limit.cos_q2)
           << " converged " << (t.converged ? "true" : "false") << "\n";
    } else {
        os << "   n     cos_q_rec    cos_q2_rec     cos_q_dir    cos_q2_dir       abs_dev\n";
        for (std::size_t i = 0; i < t.n.size(); ++i) {
            char line[160];
            std::snprintf(line, sizeof(line), "%4d  %12.6g  %12.6g  %12.6g  %12.6g  %12.6g\n",
                          t.n[i], t.rec[i].cos_q, t.rec[i].cos_q2, t.dir[i].cos_q,
                          t.dir[i].cos_q2, t.dev[i]);
            os << line;
        }
        os << "max |recurrence - direct| : " << fmt6(t.max_dev) << "\n";
        os << "limit estimate            : cos_q " << fmt6(t.limit.cos_q) << ", cos_q2 "
           << fmt6(t.limit.cos_q2) << (t.converged ? " (converged)" : " (not converged)")
           << "\n";
    }
    emit(cfg, os.str());
    return 0;
}

// ---- check-fields ------------------------------------------------------------

int run_check_fields(const RunConfig& cfg) {
    if (!cfg.field_family) fail(2, "missing --family");
    if (!cfg.point) fail(2, "missing --point x,y,z,u");
    if (cfg.point->size() != 4) fail(2, "--point needs exactly four values");
    const double h = cfg.fd_step.value_or(0.0);
    double at[4] = {(*cfg.point)[0], (*cfg.point)[1], (*cfg.point)[2], (*cfg.point)[3]};

    circ4_fields* fields = nullptr;
    require_ok(circ4_fields_open(cfg.field_family->c_str(), &fields), "check-fields");
    int has_metric = 0, has_pair = 0;
    circ4_fields_has(fields, &has_metric, &has_pair);

    struct Row {
        std::string check, component;
        double residual;
    };
    std::vector<Row> rows;
    std::vector<std::string> skipped;
    const auto run_checks = [&]() -> circ4_status {
        double r1 = 0, r2 = 0;
        if (has_metric) {
            circ4_status s = circ4_check_metric_gradients(fields, at, h, &r1, &r2);
            if (s != CIRC4_OK) return s;
            rows.push_back({"metric_gradients", "res_a", r1});
            rows.push_back({"metric_gradients", "res_b", r2});
        } else {
            skipped.push_back("metric_gradients");
        }
        if (has_pair) {
            circ4_status s = circ4_check_pair_gradients(fields, at, h, &r1, &r2);
            if (s != CIRC4_OK) return s;
            rows.push_back({"pair_gradients", "res_alpha", r1});
            rows.push_back({"pair_gradients", "res_beta", r2});
        } else {
            skipped.push_back("pair_gradients");
        }
        if (has_metric && has_pair) {
            circ4_status s = circ4_check_transformed_gradients(fields, at, h, &r1, &r2);
            if (s != CIRC4_OK) return s;
            rows.push_back({"transformed_gradients", "res_1", r1});
            rows.push_back({"transformed_gradients", "res_2", r2});
        } else {
            skipped.push_back("transformed_gradients");
        }
        if (has_metric) {
            double nq = 0;
            circ4_status s = circ4_nabla_q_residual(fields, at, h, &nq);
            if (s != CIRC4_OK) return s;
            rows.push_back({"nabla_q", "residual", nq});
        } else {
            skipped.push_back("nabla_q");
        }
        return CIRC4_OK;
    };
    const circ4_status status = run_checks();
    if (status != CIRC4_OK) {
        const std::string message = circ4_last_error();
        circ4_fields_free(fields);
        fail(exit_code_for(status),
             "check-fields: " + std::string(circ4_status_name(status)) + ": " + message);
    }
    circ4_fields_free(fields);

    const std::string format = format_from(cfg);
    std::ostringstream os;
    if (format == "json") {
        json out;
        out["command"] = "check-fields";
        out["input"] = input_json(cfg);
        json checks = json::object();
        for (const Row& row : rows) checks[row.check][row.component] = row.residual;
        out["checks"] = checks;
        out["skipped"] = skipped;
        os << out.dump(2) << "\n";
    } else if (format == "csv") {
        os << "check,component,residual\n";
        for (const Row& row : rows)
            os << row.check << "," << row.component << "," << fmt17(row.residual) << "\n";
    } else {
        for (const Row& row : rows) {
            char line[128];
            std::snprintf(line, sizeof(line), "%-22s %-10s %12.6g\n", row.check.c_str(),
                          row.component.c_str(), row.residual);
            os << line;
        }
        for (const std::string& name : skipped)
            os << name << " skipped (fields not present in family)\n";
    }
    emit(cfg, os.str());
    return 0;
}

// ---- sweep --------------------------------------------------------------------

std::vector<double> parse_range(const std::string& spec, const char* what) {
    double lo = 0, hi = 0;
    int count = 0;
    if (std::sscanf(spec.c_str(), "%lf:%lf:%d", &lo, &hi, &count) != 3 || count < 1)
        fail(2, std::string(what) + ": expected lo:hi:count with count >= 1, got '" + spec + "'");
    std::vector<double> grid;
    grid.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i)
        grid.push_back(count == 1 ? lo : lo + (hi - lo) * i / (count - 1));
    return grid;
}

int run_sweep(const RunConfig& cfg) {
    const circ4_metric m = metric_from(cfg);
    const circ4_vec4 w = vector_from(cfg);
    if (!cfg.alpha_range || !cfg.beta_range)
        fail(2, "missing --alpha-range and --beta-range (lo:hi:count)");
    const std::vector<double> alphas = parse_range(*cfg.alpha_range, "--alpha-range");
    const std::vector<double> betas = parse_range(*cfg.beta_range, "--beta-range");
    const int steps = cfg.steps.value_or(64);
    const double tol = cfg.tolerance.value_or(1e-9);

    circ4_angles base;
    require_ok(circ4_angle_pair(&m, &w, &base), "sweep");

    struct Cell {
        double alpha, beta;
        circ4_angles limit;
        int converged;
    };
    std::vector<Cell> cells;
    for (double alpha : alphas)
        for (double beta : betas) {
            if (!(0.0 < beta && beta < alpha)) continue; // outside the valid parameter wedge
            const circ4_params p{alpha, beta};
            circ4_trace* trace = nullptr;
            require_ok(circ4_trace_recurrence(&base, &p, steps, &trace), "sweep");
            circ4_angles limit;
            int converged = 0;
            const circ4_status s = circ4_trace_limit(trace, tol, &limit, &converged);
            circ4_trace_free(trace);
            require_ok(s, "sweep");
            cells.push_back({alpha, beta, limit, converged});
        }

    const std::string format = format_from(cfg);
    std::ostringstream os;
    if (format == "json") {
        json rows = json::array();
        for (const Cell& cell : cells)
            rows.push_back({{"alpha", cell.alpha},
                            {"beta", cell.beta},
                            {"cos_q_limit", cell.limit.cos_q},
                            {"cos_q2_limit", cell.limit.cos_q2},
                            {"converged", cell.converged != 0}});
        json out;
        out["command"] = "sweep";
        out["input"] = input_json(cfg);
        out["cells"] = rows;
        os << out.dump(2) << "\n";
    } else if (format == "csv") {
        os << "alpha,beta,cos_q_limit,cos_q2_limit,converged\n";
        for (const Cell& cell : cells)
            os << fmt17(cell.alpha) << "," << fmt17(cell.beta) << "," << fmt17(cell.limit.cos_q)
               << "," << fmt17(cell.limit.cos_q2) << "," << (cell.converged ? "true" : "false")
               << "\n";
    } else {
        os << "     alpha          beta   cos_q_limit  cos_q2_limit  converged\n";
        for (const Cell& cell : cells) {
            char line[160];
            std::snprintf(line, sizeof(line), "%10.6g  %12.6g  %12.6g  %12.6g  %s\n", cell.alpha,
                          cell.beta, cell.limit.cos_q, cell.limit.cos_q2,
                          cell.converged ? "true" : "false");
            os << line;
        }
    }
    emit(cfg, os.str());
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"circulant metrics on 4-manifolds: determinants, angle cosines, almost "
                 "conformal transformations, angle dynamics and parallel-affinor checks"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string("circ4 ") + circ4_version());

    RunConfig cfg;
    std::string config_path;
    std::vector<double> metric, vec, point;
    double alpha = 0, beta = 0, tol = 0, fd_step = 0;
    int steps = 0;
    std::string format, family, out_path, alpha_range, beta_range;

    const auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--config", config_path, "JSON file mirroring the flag set");
        cmd->add_option("--format", format, "output format: table, csv or json");
        cmd->add_option("--out", out_path, "write the report to a file instead of stdout");
    };
    const auto add_metric = [&](CLI::App* cmd) {
        cmd->add_option("--metric", metric, "metric entries a,b,c")->delimiter(',')->expected(3);
    };
    const auto add_vector = [&](CLI::App* cmd) {
        cmd->add_option("--w", vec, "tangent vector x,y,z,u")->delimiter(',')->expected(4);
    };
    const auto add_params = [&](CLI::App* cmd) {
        cmd->add_option("--alpha", alpha, "conformal parameter alpha");
        cmd->add_option("--beta", beta, "conformal parameter beta");
    };

    CLI::App* det = app.add_subcommand("det", "determinant by closed form and cofactor oracle");
    add_common(det);
    add_metric(det);

    CLI::App* posdef =
        app.add_subcommand("posdef", "positive definiteness tests and eigenvalues");
    add_common(posdef);
    add_metric(posdef);

    CLI::App* angles = app.add_subcommand("angles", "angle cosines of w under the metric");
    add_common(angles);
    add_metric(angles);
    add_vector(angles);

    CLI::App* transform = app.add_subcommand(
        "transform", "transformed angle cosines, by the formula and by the direct metric");
    add_common(transform);
    add_metric(transform);
    add_vector(transform);
    add_params(transform);

    CLI::App* iterate = app.add_subcommand(
        "iterate", "angle trace along the iterated metric sequence, both computation routes");
    add_common(iterate);
    add_metric(iterate);
    add_vector(iterate);
    add_params(iterate);
    iterate->add_option("--n", steps, "number of iteration steps");
    iterate->add_option("--tol", tol, "convergence tolerance for the limit estimate");

    CLI::App* check = app.add_subcommand("check-fields",
                                         "gradient-condition and covariant-derivative residuals "
                                         "for a named field family at a point");
    add_common(check);
    check->add_option("--family", family,
                      "field family: linear, nonlinear, conformal_pair, broken, or a '+' "
                      "composite");
    check->add_option("--point", point, "evaluation point x1,x2,x3,x4")
        ->delimiter(',')
        ->expected(4);
    check->add_option("--fd-step", fd_step, "central difference step (default 1e-4)");

    CLI::App* sweep =
        app.add_subcommand("sweep", "limit cosines over an (alpha, beta) parameter grid");
    add_common(sweep);
    add_metric(sweep);
    add_vector(sweep);
    sweep->add_option("--alpha-range", alpha_range, "alpha grid as lo:hi:count");
    sweep->add_option("--beta-range", beta_range, "beta grid as lo:hi:count");
    sweep->add_option("--n", steps, "steps per cell");
    sweep->add_option("--tol", tol, "convergence tolerance per cell");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help / --version
        app.exit(e);
        return 2;
    }

    try {
        CLI::App* cmd = app.get_subcommands().front();
        if (cmd->count("--config")) load_config_file(config_path, cfg);
        if (cmd->count("--metric")) cfg.metric = metric;
        if (cmd->count("--w")) cfg.vector = vec;
        if (cmd->count("--alpha")) cfg.alpha = alpha;
        if (cmd->count("--beta")) cfg.beta = beta;
        if (cmd->count("--n")) cfg.steps = steps;
        if (cmd->count("--tol")) cfg.tolerance = tol;
        if (cmd->count("--format")) cfg.output_format = format;
        if (cmd->count("--family")) cfg.field_family = family;
        if (cmd->count("--point")) cfg.point = point;
        if (cmd->count("--fd-step")) cfg.fd_step = fd_step;
        if (cmd->count("--alpha-range")) cfg.alpha_range = alpha_range;
        if (cmd->count("--beta-range")) cfg.beta_range = beta_range;
        if (cmd->count("--out")) cfg.out_path = out_path;

        if (cmd == det) return run_det(cfg);
        if (cmd == posdef) return run_posdef(cfg);
        if (cmd == angles) return run_angles(cfg);
        if (cmd == transform) return run_transform(cfg);
        if (cmd == iterate) return run_iterate(cfg);
        if (cmd == check) return run_check_fields(cfg);
        if (cmd == sweep) return run_sweep(cfg);
        return 2;
    } catch (const CliError& e) {
        std::cerr << "error: " << e.message << "\n";
        return e.code;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
