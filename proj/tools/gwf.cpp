// Command-line front end: kernel/transform/coefficient tables, verification
// suites, and asymptotic diagnostics, in CSV or JSON.

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gwf/errors.hpp"
#include "gwf/fourier.hpp"
#include "gwf/schoenberg.hpp"
#include "gwf/wendland.hpp"

namespace {

using json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitVerifyBreach = 1;
constexpr int kExitConfig = 2;
constexpr int kExitNumerical = 3;

struct Options {
    std::string command;
    double mu = 4.0;
    double alpha = 1.0;
    double eps = 1.0;
    int d = 3;
    std::int64_t max_m = 10;
    std::optional<double> r, z, t;
    std::string grid;  // "a:b:n"
    std::string format = "csv";
    double rel_tol = 1e-10;
    double abs_tol = 1e-14;
    int threads = 1;
};

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::vector<double> parse_grid(const std::string& s) {
    double a, b;
    long long n;
    char extra;
    if (std::sscanf(s.c_str(), "%lf:%lf:%lld%c", &a, &b, &n, &extra) != 3 || n < 1 || !(a < b))
        throw std::invalid_argument("--grid expects a:b:n with a < b and n >= 1");
    std::vector<double> g(n);
    if (n == 1) { g[0] = a; return g; }
    for (long long i = 0; i < n; ++i) g[i] = a + (b - a) * static_cast<double>(i) / (n - 1);
    return g;
}

// One output record: named numeric/string fields in fixed order.
struct Record {
    std::vector<std::pair<std::string, json>> fields;
    void num(const std::string& k, double v) { fields.emplace_back(k, v); }
    void str(const std::string& k, const std::string& v) { fields.emplace_back(k, v); }
};

struct Table {
    json meta = json::object();
    std::vector<std::string> columns;
    std::vector<Record> rows;
};

void check_finite(const Table& t) {
    for (const auto& row : t.rows)
        for (const auto& [k, v] : row.fields)
            if (v.is_number() && !std::isfinite(v.get<double>()))
                throw gwf::NumericalError("non-finite value in output record (" + k + ")");
}

void emit(const Table& t, const Options& opt) {
    check_finite(t);
    if (opt.format == "json") {
        json out;
        out["meta"] = t.meta;
        out["records"] = json::array();
        for (const auto& row : t.rows) {
            json rec = json::object();
            for (const auto& [k, v] : row.fields) rec[k] = v;
            out["records"].push_back(std::move(rec));
        }
        std::printf("%s\n", out.dump(2).c_str());
        return;
    }
    for (const auto& [k, v] : t.meta.items()) {
        if (v.is_number())
            std::printf("# %s = %s\n", k.c_str(), fmt17(v.get<double>()).c_str());
        else
            std::printf("# %s = %s\n", k.c_str(), v.dump().c_str());
    }
    for (std::size_t i = 0; i < t.columns.size(); ++i)
        std::printf("%s%s", i ? "," : "", t.columns[i].c_str());
    std::printf("\n");
    for (const auto& row : t.rows) {
        for (std::size_t i = 0; i < row.fields.size(); ++i) {
            const json& v = row.fields[i].second;
            std::printf("%s%s", i ? "," : "",
                        v.is_number() ? fmt17(v.get<double>()).c_str()
                                      : v.get<std::string>().c_str());
        }
        std::printf("\n");
    }
}

json make_meta(const gwf::WendlandParams& p) {
    json m = json::object();
    m["mu"] = p.mu;
    m["alpha"] = p.alpha;
    m["epsilon"] = p.epsilon;
    m["d"] = p.d;
    m["lambda"] = p.lambda;
    m["pd_euclidean"] = p.pd_euclidean();
    m["sphere_usable"] = p.sphere_usable();
    m["support_radius"] = 1.0 / p.epsilon;
    if (p.sphere_usable()) m["cap_radius"] = gwf::CapGeometry(p).theta_support;
    return m;
}

// Evaluate f over all indices with a deterministic-order result vector.
void parallel_for(std::int64_t n, int threads, const std::function<void(std::int64_t)>& f) {
    if (threads <= 1 || n <= 1) {
        for (std::int64_t i = 0; i < n; ++i) f(i);
        return;
    }
    std::atomic<std::int64_t> next{0};
    std::exception_ptr err;
    std::mutex err_mu;
    auto worker = [&] {
        for (;;) {
            std::int64_t i = next.fetch_add(1);
            if (i >= n) return;
            try {
                f(i);
            } catch (...) {
                std::lock_guard<std::mutex> lk(err_mu);
                if (!err) err = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    for (int k = 0; k < std::min<int>(threads, 64); ++k) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (err) std::rethrow_exception(err);
}

int cmd_eval(const Options& opt, const gwf::WendlandParams& p, const gwf::QuadratureConfig& cfg) {
    std::vector<double> grid = opt.r ? std::vector<double>{*opt.r}
                               : !opt.grid.empty() ? parse_grid(opt.grid)
                                                   : parse_grid("0:" + fmt17(1.0 / p.epsilon) + ":51");
    Table t;
    t.meta = make_meta(p);
    t.columns = {"r", "value", "abs_error_estimate", "method"};
    t.rows.resize(grid.size());
    parallel_for(grid.size(), opt.threads, [&](std::int64_t i) {
        gwf::EvalResult r = gwf::wendland_eval(grid[i], p, cfg);
        t.rows[i].num("r", grid[i]);
        t.rows[i].num("value", r.value);
        t.rows[i].num("abs_error_estimate", r.abs_error_estimate);
        t.rows[i].str("method", gwf::method_name(r.method));
    });
    emit(t, opt);
    return kExitOk;
}

int cmd_ft(const Options& opt, const gwf::WendlandParams& p, const gwf::QuadratureConfig&) {
    std::vector<double> grid = opt.z ? std::vector<double>{*opt.z}
                               : !opt.grid.empty() ? parse_grid(opt.grid)
                                                   : parse_grid("0.1:20:40");
    Table t;
    t.meta = make_meta(p);
    t.columns = {"z", "value", "abs_error_estimate", "method"};
    t.rows.resize(grid.size());
    parallel_for(grid.size(), opt.threads, [&](std::int64_t i) {
        gwf::EvalResult r = gwf::ft_closed(grid[i], p);
        t.rows[i].num("z", grid[i]);
        t.rows[i].num("value", r.value);
        t.rows[i].num("abs_error_estimate", r.abs_error_estimate);
        t.rows[i].str("method", gwf::method_name(r.method));
    });
    emit(t, opt);
    return kExitOk;
}

int cmd_coeffs(const Options& opt, const gwf::WendlandParams& p, const gwf::QuadratureConfig& cfg) {
    Table t;
    t.meta = make_meta(p);
    t.meta["prefactor"] = gwf::schoenberg_prefactor(p);
    t.columns = {"m", "value", "abs_error_estimate", "method", "cancellation_ratio", "n_mdim"};
    std::int64_t n = opt.max_m + 1;
    t.rows.resize(n);
    parallel_for(n, opt.threads, [&](std::int64_t m) {
        gwf::EvalResult r = gwf::coeff_closed(m, p, cfg);
        t.rows[m].num("m", static_cast<double>(m));
        t.rows[m].num("value", r.value);
        t.rows[m].num("abs_error_estimate", r.abs_error_estimate);
        t.rows[m].str("method", gwf::method_name(r.method));
        t.rows[m].num("cancellation_ratio", r.cancellation_ratio);
        t.rows[m].num("n_mdim", static_cast<double>(gwf::n_mdim(m, p.d)));
    });
    emit(t, opt);
    return kExitOk;
}

int cmd_asymptotics(const Options& opt, const gwf::WendlandParams& p,
                    const gwf::QuadratureConfig& cfg) {
    Table t;
    t.meta = make_meta(p);
    if (opt.z || !opt.grid.empty()) {
        std::vector<double> grid = opt.z ? std::vector<double>{*opt.z} : parse_grid(opt.grid);
        t.columns = {"z", "closed", "asymptotic", "ratio"};
        t.rows.resize(grid.size());
        parallel_for(grid.size(), opt.threads, [&](std::int64_t i) {
            double c = gwf::ft_closed(grid[i], p).value;
            double a = gwf::ft_asymptotic(grid[i], p, true);
            t.rows[i].num("z", grid[i]);
            t.rows[i].num("closed", c);
            t.rows[i].num("asymptotic", a);
            t.rows[i].num("ratio", c / a);
        });
    } else {
        t.meta["kappa_constant"] = gwf::kappa_constant(p, p.d);
        t.columns = {"m", "coeff", "asymptotic", "ratio"};
        std::int64_t n = opt.max_m + 1;
        t.rows.resize(n);
        parallel_for(n, opt.threads, [&](std::int64_t m) {
            double c = gwf::coeff_closed(m, p, cfg).value;
            double a = gwf::coeff_asymptotic(std::max<std::int64_t>(m, 1), p);
            t.rows[m].num("m", static_cast<double>(m));
            t.rows[m].num("coeff", c);
            t.rows[m].num("asymptotic", a);
            t.rows[m].num("ratio", c / a);
        });
    }
    emit(t, opt);
    return kExitOk;
}

int cmd_reconstruct(const Options& opt, const gwf::WendlandParams& p,
                    const gwf::QuadratureConfig& cfg) {
    gwf::SchoenbergTable table = gwf::build_schoenberg_table(p, opt.max_m, cfg);
    std::vector<double> grid = opt.t ? std::vector<double>{*opt.t}
                               : !opt.grid.empty() ? parse_grid(opt.grid)
                                                   : parse_grid("-1:1:101");
    Table t;
    t.meta = make_meta(p);
    t.meta["max_degree"] = static_cast<double>(opt.max_m);
    t.columns = {"t", "reconstructed", "exact", "abs_err"};
    t.rows.resize(grid.size());
    parallel_for(grid.size(), opt.threads, [&](std::int64_t i) {
        double tv = grid[i];
        double rec = gwf::reconstruct_kernel(tv, table).value;
        double chord = std::sqrt(std::max(0.0, 2.0 - 2.0 * tv));
        double exact = gwf::wendland_eval(chord, p, cfg).value;
        t.rows[i].num("t", tv);
        t.rows[i].num("reconstructed", rec);
        t.rows[i].num("exact", exact);
        t.rows[i].num("abs_err", std::fabs(rec - exact));
    });
    emit(t, opt);
    return kExitOk;
}

int cmd_verify(const Options& opt, const gwf::WendlandParams& p,
               const gwf::QuadratureConfig& cfg) {
    Table t;
    t.meta = make_meta(p);
    t.columns = {"check", "point", "reference", "alternative", "rel_err", "tol", "pass"};
    bool all_pass = true;
    auto add = [&](const std::string& check, double point, double ref, double alt, double tol) {
        double rel = std::fabs(ref - alt) / std::max(std::fabs(ref), 1e-300);
        bool ok = rel < tol;
        all_pass = all_pass && ok;
        Record row;
        row.str("check", check);
        row.num("point", point);
        row.num("reference", ref);
        row.num("alternative", alt);
        row.num("rel_err", rel);
        row.num("tol", tol);
        row.str("pass", ok ? "yes" : "no");
        t.rows.push_back(std::move(row));
    };

    std::vector<double> zs = !opt.grid.empty() ? parse_grid(opt.grid)
                                               : std::vector<double>{0.1, 1.0, 5.0, 20.0};
    for (double z : zs)
        add("ft_closed_vs_oracle", z, gwf::ft_closed(z, p).value,
            gwf::ft_oracle(z, p, cfg).value, 1e-8);

    if (p.sphere_usable()) {
        for (std::int64_t m = 0; m <= opt.max_m; ++m)
            add("coeff_closed_vs_projection", static_cast<double>(m),
                gwf::coeff_closed(m, p, cfg).value,
                gwf::coeff_oracle_projection(m, p, cfg).value, 1e-7);
        for (std::int64_t m = 0; m <= std::min<std::int64_t>(opt.max_m, 10); ++m)
            add("coeff_closed_vs_linkup", static_cast<double>(m),
                gwf::coeff_closed(m, p, cfg).value,
                gwf::coeff_oracle_linkup(m, p, cfg).value, 1e-5);
    }
    emit(t, opt);
    return all_pass ? kExitOk : kExitVerifyBreach;
}

}  // namespace

int main(int argc, char** argv) {
    Options opt;
    CLI::App app{"generalized Wendland kernels: transforms, spherical coefficients, diagnostics"};
    app.add_option("command", opt.command, "eval|ft|coeffs|verify|asymptotics|reconstruct")
        ->required()
        ->check(CLI::IsMember({"eval", "ft", "coeffs", "verify", "asymptotics", "reconstruct"}));
    app.add_option("--mu", opt.mu, "shape exponent mu > 1 + alpha");
    app.add_option("--alpha", opt.alpha, "smoothness parameter alpha > 0");
    app.add_option("--eps", opt.eps, "inverse support radius epsilon > 0");
    app.add_option("--d", opt.d, "ambient dimension");
    app.add_option("--max-m", opt.max_m, "largest coefficient degree")->check(CLI::Range(0, 10000));
    app.add_option("--r", opt.r, "single evaluation radius");
    app.add_option("--z", opt.z, "single frequency");
    app.add_option("--t", opt.t, "single reconstruction point t = cos(theta)");
    app.add_option("--grid", opt.grid, "grid a:b:n (n equispaced points)");
    app.add_option("--format", opt.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--rel-tol", opt.rel_tol, "quadrature relative tolerance");
    app.add_option("--abs-tol", opt.abs_tol, "quadrature absolute tolerance");
    app.add_option("--threads", opt.threads, "worker threads")->check(CLI::Range(1, 256));
    app.set_config("--config", "", "key = value file; flags override");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::fprintf(stderr, "%s\n", e.what());
        return kExitConfig;
    }

    std::optional<gwf::WendlandParams> params;
    gwf::QuadratureConfig cfg;
    try {
        params.emplace(opt.mu, opt.alpha, opt.eps, opt.d);
        cfg.rel_tol = opt.rel_tol;
        cfg.abs_tol = opt.abs_tol;
        cfg.validate();
    } catch (const std::exception& e) {
        std::fprintf(stderr, "invalid configuration: %s\n", e.what());
        return kExitConfig;
    }

    try {
        if (opt.command == "eval") return cmd_eval(opt, *params, cfg);
        if (opt.command == "ft") return cmd_ft(opt, *params, cfg);
        if (opt.command == "coeffs") return cmd_coeffs(opt, *params, cfg);
        if (opt.command == "verify") return cmd_verify(opt, *params, cfg);
        if (opt.command == "asymptotics") return cmd_asymptotics(opt, *params, cfg);
        if (opt.command == "reconstruct") return cmd_reconstruct(opt, *params, cfg);
        std::fprintf(stderr, "unknown command: %s\n", opt.command.c_str());
        return kExitConfig;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "invalid configuration: %s\n", e.what());
        return kExitConfig;
    } catch (const gwf::NumericalError& e) {
        std::fprintf(stderr, "numerical failure: %s\n", e.what());
        return kExitNumerical;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitNumerical;
    }
}
