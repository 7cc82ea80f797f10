// dasub: command-line front end for the chain-series, frame, transport,
// Toeplitz, Sobolev and generalized-monomial computations.

#include <cstdio>
#include <fstream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "dasub/acceptance.hpp"
#include "dasub/core_series.hpp"
#include "dasub/frames.hpp"
#include "dasub/general_monomial.hpp"
#include "dasub/io.hpp"
#include "dasub/sobolev.hpp"
#include "dasub/toeplitz.hpp"
#include "dasub/transport.hpp"

namespace {

constexpr const char* kVersion = "0.1.0";

using dasub::Cell;
using dasub::Table;
using json = nlohmann::ordered_json;

struct RunConfig {
    std::string subcommand;
    int k = 2;
    int l = 1;
    double epsilon = 0.5;
    double t = 0.0;
    int n_max = 20;
    int m_max = 0;
    std::optional<int> q_max;
    double tail_tol = 1e-14;
    std::string backend = "float";
    std::string format = "csv";
    std::string out;

    dasub::TruncationSpec trunc() const {
        dasub::TruncationSpec s;
        s.q_max = q_max;
        s.tail_tol = tail_tol;
        s.n_max = n_max;
        s.m_max = m_max;
        s.backend = backend == "exact" ? dasub::Backend::Exact : dasub::Backend::Float;
        s.validate();
        return s;
    }

    json echo() const {
        json j;
        j["k"] = k;
        j["l"] = l;
        j["epsilon"] = epsilon;
        j["t"] = t;
        j["n_max"] = n_max;
        j["m_max"] = m_max;
        j["q_max"] = q_max ? json(*q_max) : json();
        j["tail_tol"] = tail_tol;
        j["backend"] = backend;
        return j;
    }
};

// Output is assembled fully in memory and written once.
class Emitter {
   public:
    explicit Emitter(const RunConfig& cfg) : cfg_(cfg) {}

    void table(const Table& t, json extra = json::object()) {
        if (cfg_.format == "json") {
            json doc;
            doc["meta"] = meta();
            for (auto it = extra.begin(); it != extra.end(); ++it) doc[it.key()] = it.value();
            doc["rows"] = dasub::to_json(t);
            text_ = doc.dump(2) + "\n";
        } else {
            text_ = dasub::to_csv(t);
        }
    }

    void document(json body) {
        json doc;
        doc["meta"] = meta();
        for (auto it = body.begin(); it != body.end(); ++it) doc[it.key()] = it.value();
        text_ = doc.dump(2) + "\n";
    }

    void raw(std::string text) { text_ = std::move(text); }

    void flush() const {
        if (cfg_.out.empty() || cfg_.out == "-") {
            std::fwrite(text_.data(), 1, text_.size(), stdout);
            return;
        }
        std::ofstream f(cfg_.out, std::ios::binary);
        if (!f) throw dasub::ParameterError("cannot open output file '" + cfg_.out + "'");
        f << text_;
    }

   private:
    json meta() const {
        json m;
        m["version"] = kVersion;
        m["subcommand"] = cfg_.subcommand;
        m["config"] = cfg_.echo();
        return m;
    }

    const RunConfig& cfg_;
    std::string text_;
};

long long as_ll(int v) { return v; }

// ---- sum ----

struct SumArgs {
    std::string E = "0.25";
    int r = 0;
    int n = 0;
    std::optional<int> l;
};

void run_sum(const RunConfig& cfg, const SumArgs& a, Emitter& out) {
    const int l = a.l.value_or(0);
    if (cfg.backend == "exact") {
        const dasub::Rational E = dasub::parse_rational(a.E);
        const dasub::Rational tol = dasub::to_rational(cfg.tail_tol);
        const auto res = dasub::series_sum_exact(cfg.k, E, a.r, a.n, l, tol);
        Table t{{"k", "E", "r", "n", "l", "closed", "series", "series_exact", "q_used", "tail_bound"}, {}};
        Cell closed = std::string();
        if (l <= 2) closed = dasub::closed_sum(cfg.k, {dasub::to_double(E), 0.0}, a.r, a.n, l).real();
        t.add({as_ll(cfg.k), a.E, as_ll(a.r), as_ll(a.n), as_ll(l), closed, dasub::to_double(res.value),
               res.value.str(), as_ll(res.q_used), dasub::to_double(res.tail_bound)});
        out.table(t);
        return;
    }
    const double E = dasub::to_double(dasub::parse_rational(a.E));
    const auto res = dasub::series_sum(cfg.k, {E, 0.0}, a.r, a.n, l, cfg.tail_tol);
    Table t{{"k", "E", "r", "n", "l", "closed", "series", "q_used", "tail_bound", "abs_diff"}, {}};
    Cell closed = std::string(), diff = std::string();
    if (l <= 2) {
        const double c = dasub::closed_sum(cfg.k, {E, 0.0}, a.r, a.n, l).real();
        closed = c;
        diff = std::abs(c - res.value.real());
    }
    t.add({as_ll(cfg.k), E, as_ll(a.r), as_ll(a.n), as_ll(l), closed, res.value.real(), as_ll(res.q_used),
           res.tail_bound, diff});
    out.table(t);
}

// ---- frame ----

struct FrameArgs {
    int r = 0;
    int n = 0;
    std::string kind = "beta";
    int order = 0;
    std::string view = "frame";
};

void run_frame(const RunConfig& cfg, const FrameArgs& a, Emitter& out) {
    const dasub::TruncationSpec trunc = cfg.trunc();
    const dasub::ChainIndex c{a.r, a.n};
    if (a.view == "frame") {
        dasub::FrameKind kind = dasub::FrameKind::Beta;
        if (a.kind == "alpha") kind = dasub::FrameKind::Alpha;
        else if (a.kind == "gamma") kind = dasub::FrameKind::Gamma;
        else if (a.kind != "beta") throw dasub::ParameterError("--kind must be alpha, beta or gamma");
        const double f = kind == dasub::FrameKind::Gamma ? dasub::frequency(cfg.k, cfg.epsilon, a.r, a.n) : 0.0;
        const dasub::FrameVector v =
            dasub::frame_time_derivative(cfg.k, cfg.epsilon, cfg.t, c, a.order, kind, trunc, f);
        if (cfg.format == "json") {
            json body;
            body["frame"] = dasub::frame_json(v);
            out.document(body);
        } else {
            out.table(dasub::frame_table(v));
        }
    } else if (a.view == "gram") {
        const auto grid = dasub::chain_grid(cfg.k, cfg.n_max);
        const Eigen::MatrixXcd G = dasub::gram(cfg.k, cfg.epsilon, cfg.t, grid, trunc);
        Table t{{"row_r", "row_n", "col_r", "col_n", "re", "im"}, {}};
        for (Eigen::Index i = 0; i < G.rows(); ++i)
            for (Eigen::Index j = 0; j < G.cols(); ++j)
                if (G(i, j) != dasub::Complex(0.0, 0.0))
                    t.add({as_ll(grid[i].r), as_ll(grid[i].n), as_ll(grid[j].r), as_ll(grid[j].n), G(i, j).real(),
                           G(i, j).imag()});
        out.table(t);
    } else if (a.view == "residual") {
        if (cfg.backend == "exact") {
            const dasub::Rational eps = dasub::to_rational(cfg.epsilon);
            // the generator times z^(M,N) reaches degree M + k in z1
            dasub::TruncationSpec wide = trunc;
            wide.m_max = cfg.m_max + cfg.k;
            Table t{{"M", "N", "value"}, {}};
            for (int M = 0; M <= cfg.m_max; ++M)
                for (int N = 0; N <= cfg.n_max; ++N)
                    t.add({as_ll(M), as_ll(N), dasub::membership_residual_exact(cfg.k, eps, c, M, N, wide).str()});
            out.table(t);
        } else {
            Table t{{"M", "N", "re", "im", "bound"}, {}};
            for (int M = 0; M <= cfg.m_max; ++M)
                for (int N = 0; N <= cfg.n_max; ++N) {
                    const auto res = dasub::membership_residual(cfg.k, cfg.epsilon, cfg.t, c, M, N, trunc);
                    t.add({as_ll(M), as_ll(N), res.value.real(), res.value.imag(), res.bound});
                }
            out.table(t);
        }
    } else {
        throw dasub::ParameterError("--view must be frame, gram or residual");
    }
}

// ---- transport ----

void run_transport(const RunConfig& cfg, const std::string& view, Emitter& out) {
    const dasub::TruncationSpec trunc = cfg.trunc();
    if (view == "table") {
        out.table(dasub::transport_table(cfg.k, cfg.epsilon, cfg.n_max));
    } else if (view == "flatness") {
        Table t{{"r", "n", "t", "gamma_residual", "beta_residual"}, {}};
        for (const auto& c : dasub::chain_grid(cfg.k, cfg.n_max))
            t.add({as_ll(c.r), as_ll(c.n), cfg.t, dasub::flatness_residual(cfg.k, cfg.epsilon, cfg.t, c, trunc),
                   dasub::flatness_residual(cfg.k, cfg.epsilon, cfg.t, c, trunc, true)});
        out.table(t);
    } else if (view == "monodromy") {
        Table t{{"r", "n", "re", "im"}, {}};
        for (const auto& [c, p] : dasub::monodromy_diagonal(cfg.k, cfg.epsilon, cfg.n_max).phases)
            t.add({as_ll(c.r), as_ll(c.n), p.real(), p.imag()});
        out.table(t);
    } else {
        throw dasub::ParameterError("--view must be table, flatness or monodromy");
    }
}

// ---- toeplitz ----

void run_toeplitz(const RunConfig& cfg, const std::string& op_name, const std::string& view, Emitter& out) {
    const dasub::TruncationSpec trunc = cfg.trunc();
    const dasub::ShiftOp op = dasub::parse_shift_op(op_name);
    if (view == "matrix") {
        out.table(dasub::matrix_table(dasub::toeplitz_matrix(cfg.k, cfg.epsilon, cfg.t, op, trunc)));
    } else if (view == "weights") {
        const auto M = dasub::toeplitz_matrix(cfg.k, cfg.epsilon, cfg.t, op, trunc);
        Table t{{"r", "n", "closed_re", "closed_im", "entry_re", "entry_im"}, {}};
        for (const auto& c : dasub::chain_grid(cfg.k, cfg.n_max)) {
            const dasub::ChainIndex target = dasub::shift_target(cfg.k, op, c);
            const dasub::Complex w = dasub::shift_weight(cfg.k, cfg.epsilon, op, c.r, c.n, cfg.t);
            if (M.in_window(target)) {
                const dasub::Complex e = M.at(target, c);
                t.add({as_ll(c.r), as_ll(c.n), w.real(), w.imag(), e.real(), e.imag()});
            } else {
                t.add({as_ll(c.r), as_ll(c.n), w.real(), w.imag(), std::string(), std::string()});
            }
        }
        out.table(t);
    } else if (view == "conjugation") {
        const auto res = dasub::conjugation_residual(cfg.k, cfg.epsilon, op, trunc);
        Table t{{"row_r", "row_n", "col_r", "col_n", "deviation", "wrap"}, {}};
        for (const auto& e : res.entries)
            t.add({as_ll(e.row.r), as_ll(e.row.n), as_ll(e.col.r), as_ll(e.col.n), e.deviation,
                   as_ll(e.wrap ? 1 : 0)});
        json extra;
        extra["max_interior"] = res.max_interior;
        extra["max_wrap"] = res.max_wrap;
        out.table(t, extra);
    } else if (view == "profile") {
        const auto d = dasub::compactness_profile(cfg.k, cfg.epsilon, op, cfg.n_max);
        Table t{{"n", "d"}, {}};
        for (std::size_t n = 0; n < d.size(); ++n) t.add({static_cast<long long>(n), d[n]});
        const dasub::Complex lp = dasub::limit_phase(cfg.k, cfg.epsilon, op);
        json extra;
        extra["limit_phase"] = {lp.real(), lp.imag()};
        out.table(t, extra);
    } else {
        throw dasub::ParameterError("--view must be matrix, weights, conjugation or profile");
    }
}

// ---- sobolev ----

struct SobolevArgs {
    std::string view = "ladder";
    double s = 4.0;
    int j = 1;
    int r = 0;
    int n_from = 100;
};

json fit_json(const dasub::LogLogFit& fit) {
    json j;
    j["slope"] = fit.slope;
    j["intercept"] = fit.intercept;
    j["slope_stderr"] = fit.slope_stderr;
    j["ci95"] = {fit.ci_low, fit.ci_high};
    return j;
}

void run_sobolev(const RunConfig& cfg, const SobolevArgs& a, Emitter& out) {
    const dasub::TruncationSpec trunc = cfg.trunc();
    if (a.view == "weights") {
        Table t{{"m", "n", "weight"}, {}};
        for (int m = 0; m <= cfg.m_max; ++m)
            for (int n = 0; n <= cfg.n_max; ++n) t.add({as_ll(m), as_ll(n), dasub::besov_weight(a.s, m, n)});
        out.table(t);
    } else if (a.view == "ladder") {
        const auto ladder = dasub::hs_ladder(cfg.k, cfg.epsilon, a.s, a.j, cfg.n_max);
        json extra;
        const int window = std::min<int>(100, static_cast<int>(ladder.size()));
        const int from = std::min(a.n_from, cfg.n_max);
        if (window >= 3) {
            const auto tail = dasub::ladder_tail(ladder, from, window);
            extra["tail"] = {{"from", from},
                             {"observed", tail.observed},
                             {"extrapolated", tail.extrapolated},
                             {"decay_exponent", tail.decay_exponent},
                             {"increments_vanish", tail.increments_vanish}};
        }
        out.table(dasub::ladder_table(ladder), extra);
    } else if (a.view == "matrix") {
        const auto P = dasub::projection_matrix(cfg.k, cfg.epsilon, cfg.t, a.s, a.j, trunc);
        Table t{{"row_m", "row_n", "col_m", "col_n", "re", "im"}, {}};
        for (const auto& [key, v] : P.entries)
            t.add({as_ll(key.first.m), as_ll(key.first.n), as_ll(key.second.m), as_ll(key.second.n), v.real(),
                   v.imag()});
        json extra;
        extra["hs_norm"] = dasub::hs_norm(P, cfg.n_max).norm;
        out.table(t, extra);
    } else if (a.view == "nonsmooth") {
        Table t{{"n", "ratio", "ratio_central"}, {}};
        std::vector<double> ns, ys;
        for (int n = a.n_from; n <= cfg.n_max; ++n) {
            const double x = dasub::nonsmooth_ratio(cfg.k, cfg.epsilon, a.r, n);
            t.add({as_ll(n), x, dasub::nonsmooth_ratio_central(cfg.k, cfg.epsilon, a.r, n)});
            if (n > 0 && x > 0.0) {
                ns.push_back(n);
                ys.push_back(x);
            }
        }
        json extra;
        if (ns.size() >= 3) extra["fit"] = fit_json(dasub::fit_loglog(ns, ys));
        out.table(t, extra);
    } else if (a.view == "taylor") {
        Table t{{"h", "remainder"}, {}};
        std::vector<double> hs{1e-1, 1e-2, 1e-3}, rem;
        for (double h : hs) {
            rem.push_back(dasub::taylor_remainder_check(cfg.k, cfg.epsilon, cfg.t, h, a.s, a.j, trunc));
            t.add({h, rem.back()});
        }
        json extra;
        if (rem.back() > 0.0) extra["fit"] = fit_json(dasub::fit_loglog(hs, rem));
        out.table(t, extra);
    } else {
        throw dasub::ParameterError("--view must be weights, ladder, matrix, nonsmooth or taylor");
    }
}

// ---- general ----

void run_general(const RunConfig& cfg, const std::string& view, int d_max, Emitter& out) {
    if (view == "frequencies") {
        Table t{{"k", "l", "epsilon", "m0", "n0", "f"}, {}};
        for (const auto& s : dasub::gm_chain_starts(cfg.k, cfg.l, cfg.m_max, cfg.n_max))
            t.add({as_ll(cfg.k), as_ll(cfg.l), cfg.epsilon, as_ll(s.m), as_ll(s.n),
                   dasub::gm_frequency(cfg.k, cfg.l, cfg.epsilon, s, cfg.tail_tol)});
        out.table(t);
    } else if (view == "report") {
        const auto rep = dasub::phase_report(cfg.k, cfg.l, cfg.epsilon, d_max);
        if (cfg.format == "json") {
            out.document({{"report", dasub::phase_report_to_json(rep)}});
        } else {
            Table t{{"direction", "step", "difference"}, {}};
            for (std::size_t i = 0; i < rep.m_direction.size(); ++i)
                t.add({std::string("m"), static_cast<long long>(i), rep.m_direction[i]});
            for (std::size_t i = 0; i < rep.n_direction.size(); ++i)
                t.add({std::string("n"), static_cast<long long>(i), rep.n_direction[i]});
            out.table(t);
        }
    } else {
        throw dasub::ParameterError("--view must be frequencies or report");
    }
}

// ---- verify ----

int run_verify(const RunConfig& cfg, Emitter& out) {
    const auto results = dasub::run_all();
    bool ok = true;
    for (const auto& r : results) ok = ok && r.pass;
    if (cfg.format == "json") {
        json rows = json::array();
        for (const auto& r : results) rows.push_back({{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
        out.document({{"criteria", rows}, {"all_pass", ok}});
    } else {
        out.raw(dasub::render_report(results));
    }
    return ok ? 0 : 1;
}

const char* kSchemas = R"(CSV schemas:
  sum                      k,E,r,n,l,closed,series,q_used,tail_bound,abs_diff
                           (exact backend: k,E,r,n,l,closed,series,series_exact,q_used,tail_bound)
  frame --view frame       m,n,re,im          (JSON: k,epsilon,t,r,n,kind,q_max,coeffs,tail_bound)
  frame --view gram        row_r,row_n,col_r,col_n,re,im
  frame --view residual    M,N,re,im,bound    (exact backend: M,N,value)
  transport --view table   k,epsilon,r,n,f,delta_r,delta_n,asymptote,gap
  transport --view flatness  r,n,t,gamma_residual,beta_residual
  transport --view monodromy r,n,re,im
  toeplitz --view matrix   row_r,row_n,col_r,col_n,re,im
  toeplitz --view weights  r,n,closed_re,closed_im,entry_re,entry_im
  toeplitz --view conjugation row_r,row_n,col_r,col_n,deviation,wrap
  toeplitz --view profile  n,d
  sobolev --view weights   m,n,weight
  sobolev --view ladder    n,increment,partial_sum
  sobolev --view matrix    row_m,row_n,col_m,col_n,re,im
  sobolev --view nonsmooth n,ratio,ratio_central
  sobolev --view taylor    h,remainder
  general --view frequencies k,l,epsilon,m0,n0,f
  general --view report    direction,step,difference
JSON output wraps the same rows as {"meta": {version, subcommand, config}, ..., "rows": [...]}.
Thread count for parallel loops: DASUB_THREADS.)";

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Chains, frames, transport and Toeplitz shifts for perturbed principal submodules of H^2_2"};
    app.footer(kSchemas);
    app.require_subcommand(1);
    app.fallthrough();
    app.set_version_flag("--version", kVersion);

    RunConfig cfg;
    app.add_option("--k", cfg.k, "Power of z1 in the generator")->capture_default_str();
    app.add_option("--l", cfg.l, "Power of z2 (general subcommand)")->capture_default_str();
    app.add_option("--epsilon", cfg.epsilon, "Perturbation size, 0 <= eps < 1")->capture_default_str();
    app.add_option("--t", cfg.t, "Time parameter")->capture_default_str();
    app.add_option("--n-max", cfg.n_max, "Largest n in tables and windows")->capture_default_str();
    app.add_option("--m-max", cfg.m_max, "Largest m in tables and windows")->capture_default_str();
    app.add_option("--q-max", cfg.q_max, "Fixed chain cut (default: certified by --tail-tol)");
    app.add_option("--tail-tol", cfg.tail_tol, "Tail tolerance")->capture_default_str();
    app.add_option("--backend", cfg.backend, "Scalar backend")
        ->check(CLI::IsMember({"float", "exact"}))
        ->capture_default_str();
    app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
    app.add_option("--out", cfg.out, "Output path (default stdout)");

    SumArgs sum_args;
    auto* sum = app.add_subcommand("sum", "Chain series: closed form against direct summation");
    sum->add_option("--E", sum_args.E, "Series variable (decimal or p/q)")->capture_default_str();
    sum->add_option("--r", sum_args.r, "Residue r < k")->capture_default_str();
    sum->add_option("--n", sum_args.n, "Binomial top offset n")->capture_default_str();
    sum->add_option("--l", sum_args.l, "Moment order (default 0)");

    FrameArgs frame_args;
    auto* frame = app.add_subcommand("frame", "Frame coefficients, Gram matrices and membership residuals");
    frame->add_option("--r", frame_args.r)->capture_default_str();
    frame->add_option("--n", frame_args.n)->capture_default_str();
    frame->add_option("--kind", frame_args.kind)->check(CLI::IsMember({"alpha", "beta", "gamma"}))->capture_default_str();
    frame->add_option("--order", frame_args.order, "Time-derivative order")->capture_default_str();
    frame->add_option("--view", frame_args.view)->check(CLI::IsMember({"frame", "gram", "residual"}))->capture_default_str();

    std::string transport_view = "table";
    auto* transport = app.add_subcommand("transport", "Frequencies, differences, asymptotes and flatness");
    transport->add_option("--view", transport_view)
        ->check(CLI::IsMember({"table", "flatness", "monodromy"}))
        ->capture_default_str();

    std::string op_name = "T1", toeplitz_view = "matrix";
    auto* toeplitz = app.add_subcommand("toeplitz", "Weighted shifts, conjugation residuals and compactness profiles");
    toeplitz->add_option("--op", op_name)->check(CLI::IsMember({"T1", "T1adj", "T2", "T2adj"}))->capture_default_str();
    toeplitz->add_option("--view", toeplitz_view)
        ->check(CLI::IsMember({"matrix", "weights", "conjugation", "profile"}))
        ->capture_default_str();

    SobolevArgs sob;
    auto* sobolev = app.add_subcommand("sobolev", "Besov-Sobolev weights, HS ladders, nonsmooth fits");
    sobolev->add_option("--view", sob.view)
        ->check(CLI::IsMember({"weights", "ladder", "matrix", "nonsmooth", "taylor"}))
        ->capture_default_str();
    sobolev->add_option("--s", sob.s, "Target Besov-Sobolev order")->capture_default_str();
    sobolev->add_option("--j", sob.j, "Derivative order")->capture_default_str();
    sobolev->add_option("--r", sob.r, "Residue for the nonsmooth view")->capture_default_str();
    sobolev->add_option("--n-from", sob.n_from, "First n of fits and tails")->capture_default_str();

    std::string general_view = "report";
    int d_max = 50;
    auto* general = app.add_subcommand("general", "Chains of z1^k z2^l - eps e^{it}");
    general->add_option("--view", general_view)->check(CLI::IsMember({"frequencies", "report"}))->capture_default_str();
    general->add_option("--d-max", d_max, "Steps along each chain direction")->capture_default_str();

    auto* verify = app.add_subcommand("verify", "Run the acceptance suite and print a pass/fail table");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    Emitter out(cfg);
    int status = 0;
    try {
        dasub::require_k(cfg.k);
        if (!sum->parsed()) dasub::require_epsilon(cfg.epsilon);
        if (sum->parsed()) {
            cfg.subcommand = "sum";
            run_sum(cfg, sum_args, out);
        } else if (frame->parsed()) {
            cfg.subcommand = "frame";
            run_frame(cfg, frame_args, out);
        } else if (transport->parsed()) {
            cfg.subcommand = "transport";
            run_transport(cfg, transport_view, out);
        } else if (toeplitz->parsed()) {
            cfg.subcommand = "toeplitz";
            run_toeplitz(cfg, op_name, toeplitz_view, out);
        } else if (sobolev->parsed()) {
            cfg.subcommand = "sobolev";
            run_sobolev(cfg, sob, out);
        } else if (general->parsed()) {
            cfg.subcommand = "general";
            run_general(cfg, general_view, d_max, out);
        } else if (verify->parsed()) {
            cfg.subcommand = "verify";
            status = run_verify(cfg, out);
        }
        out.flush();
    } catch (const dasub::DivergenceError& e) {
        std::fprintf(stderr, "error: divergent series: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return status;
}
