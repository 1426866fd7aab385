// bdet: command-line front end for the detection toolkit.
//
// Subcommands: solve, simulate, power-curve, worst-case, concentration, bayes.
// Exit codes: 0 success, 2 configuration error, 3 numeric/infeasibility error.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "bdet/besov.hpp"
#include "bdet/chisq_tail.hpp"
#include "bdet/concentration.hpp"
#include "bdet/detectors.hpp"
#include "bdet/errors.hpp"
#include "bdet/extremal.hpp"
#include "bdet/montecarlo.hpp"
#include "bdet/normal.hpp"
#include "bdet/priors.hpp"

using namespace bdet;
namespace mcx = bdet::mc;
using ordered_json = nlohmann::ordered_json;

namespace {

std::string fmt(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

void write_file(const std::string& path, const std::string& content)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::invalid_argument("cannot open output file: " + path);
    out << content;
}

// Problem options shared by every subcommand. Exactly one of {rho, rate-R}
// and exactly one of {eps, a-eps} must be supplied.
struct ProblemOpts {
    double r = 1.0;
    double p0 = 1.0;
    double rho = -1.0;
    double rate_R = -1.0;
    double eps = -1.0;
    double a_eps = -1.0;
    double alpha = 0.05;
    std::size_t j_max = 0;
    double tail_tol = 1e-8;

    void add_to(CLI::App* cmd)
    {
        cmd->add_option("--r", r, "smoothness exponent r > 0");
        cmd->add_option("--p0", p0, "Besov radius P0 > 0");
        cmd->add_option("--rho", rho, "separation radius rho > 0");
        cmd->add_option("--rate-R", rate_R, "rate constant R in rho = R eps^{8r/(4r+1)}");
        cmd->add_option("--eps", eps, "noise level eps > 0");
        cmd->add_option("--a-eps", a_eps, "target efficiency constant; eps solved from it");
        cmd->add_option("--alpha", alpha, "type I error level, in (0,1)");
        cmd->add_option("--j-max", j_max, "weight truncation horizon (0 = automatic)");
        cmd->add_option("--tail-tol", tail_tol, "relative tolerance for tail remainders");
    }

    struct Resolved {
        ProblemSpec spec;
        ExtremalWeights weights;
    };

    Resolved resolve() const
    {
        if ((rho > 0.0) == (rate_R > 0.0))
            throw std::invalid_argument("supply exactly one of --rho and --rate-R");
        if ((eps > 0.0) == (a_eps > 0.0))
            throw std::invalid_argument("supply exactly one of --eps and --a-eps");

        double rho_v = rho;
        if (rate_R > 0.0) {
            if (!(eps > 0.0))
                throw std::invalid_argument("--rate-R needs an explicit --eps");
            rho_v = rate_R * std::pow(eps, 8.0 * r / (4.0 * r + 1.0));
        }

        if (eps > 0.0) {
            ProblemSpec spec(eps, r, p0, rho_v, alpha);
            return {spec, build_weights(spec, j_max, tail_tol)};
        }
        // a-eps target: the profile is eps-free, so build once and back out eps.
        ProblemSpec provisional(1.0, r, p0, rho_v, alpha);
        ExtremalWeights w = build_weights(provisional, j_max, tail_tol);
        const double eps_v = eps_for_target_a(w, a_eps);
        ProblemSpec spec(eps_v, r, p0, rho_v, alpha);
        w.eps = eps_v;
        w.a_eps = w.sum_w2 / std::pow(eps_v, 4.0);
        return {spec, w};
    }
};

ordered_json report_json(const mcx::MCReport& rep)
{
    ordered_json j;
    j["n_trials"] = rep.n_trials;
    j["rejections"] = rep.rejections;
    j["rate"] = rep.rate;
    j["ci_lo"] = rep.ci_lo;
    j["ci_hi"] = rep.ci_hi;
    j["seed"] = rep.seed;
    j["kind"] = rep.kind;
    j["spec_hash"] = rep.spec_hash;
    return j;
}

std::string report_csv(const mcx::MCReport& rep)
{
    std::ostringstream out;
    out << "n_trials,rejections,rate,ci_lo,ci_hi,seed,kind,spec_hash\n";
    out << rep.n_trials << ',' << rep.rejections << ',' << fmt(rep.rate) << ','
        << fmt(rep.ci_lo) << ',' << fmt(rep.ci_hi) << ',' << rep.seed << ',' << rep.kind
        << ',' << rep.spec_hash << '\n';
    return out.str();
}

void emit_report(const mcx::MCReport& rep, const std::string& out_path,
                 const std::string& format)
{
    std::cout << "kind=" << rep.kind << " rate=" << fmt(rep.rate) << " ci=["
              << fmt(rep.ci_lo) << "," << fmt(rep.ci_hi) << "] trials=" << rep.n_trials
              << " seed=" << rep.seed << " spec_hash=" << rep.spec_hash << "\n";
    if (out_path.empty())
        return;
    if (format == "csv")
        write_file(out_path, report_csv(rep));
    else
        write_file(out_path, report_json(rep).dump(2) + "\n");
}

std::vector<double> parse_list(const std::string& csv)
{
    std::vector<double> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty())
            out.push_back(std::stod(item));
    if (out.empty())
        throw std::invalid_argument("empty list: " + csv);
    return out;
}

TestSpec build_test(const std::string& family, const ProblemOpts::Resolved& res,
                    const std::string& centering, double delta)
{
    const Centering c = (centering == "rho") ? Centering::rho : Centering::exact;
    if (family == "plain")
        return make_plain_test(res.weights, res.spec, c);
    if (family == "gamma")
        return make_gamma_test(res.weights, res.spec);
    if (family == "gamma-delta") {
        if (!(delta > 0.0))
            throw std::invalid_argument("--family gamma-delta needs --delta");
        return make_gamma_delta_test(perturb(res.spec, delta), res.spec);
    }
    throw std::invalid_argument("unknown family: " + family);
}

void apply_calibration(TestSpec& test, const std::string& calibration,
                       const ProblemOpts::Resolved& res, std::uint64_t cal_trials,
                       std::uint64_t cal_seed, int threads)
{
    if (calibration == "asymptotic") {
        test.calibration = Calibration::asymptotic;
    } else if (calibration == "mc") {
        test.calibration = Calibration::mc_calibrated;
        mcx::RunOptions opt;
        opt.threads = threads;
        test.x_alpha =
            mcx::calibrate_threshold(test, res.spec, res.spec.alpha, cal_trials, cal_seed, opt);
    } else if (calibration == "exact") {
        test.calibration = Calibration::exact_tail;
        test.x_alpha = calibrate_exact_tail(test, res.spec.alpha);
    } else {
        throw std::invalid_argument("unknown calibration mode: " + calibration);
    }
}

// ---------------------------------------------------------------- solve ----
int cmd_solve(const ProblemOpts& po, const std::string& out_path, const std::string& format)
{
    const ProblemOpts::Resolved res = po.resolve();
    const ExtremalWeights& w = res.weights;
    const ProblemSpec& spec = res.spec;
    const double beta_pred = predicted_type2(w.a_eps, spec.alpha);

    std::cout << "k_eps=" << fmt(w.k_eps) << "\n";
    std::cout << "kappa_sq=" << fmt(w.kappa_sq) << "\n";
    std::cout << "a_eps=" << fmt(w.a_eps) << "\n";
    std::cout << "sum_kappa_sq=" << fmt(w.sum_w) << "\n";
    std::cout << "sum_kappa_4=" << fmt(w.sum_w2) << "\n";
    std::cout << "j_max=" << w.j_max << " tail_rel_err=" << fmt(w.tail_rel_err) << "\n";
    std::cout << "beta_pred=" << fmt(beta_pred) << "\n";

    if (po.rate_R > 0.0) {
        const ClosedFormA cf = a_eps_closed_form(spec.r, spec.p0, po.rate_R);
        std::cout << "a_closed_rederived=" << fmt(cf.rederived)
                  << " rel_gap=" << fmt(cf.rederived / w.a_eps - 1.0) << "\n";
        std::cout << "a_closed_nominal=" << fmt(cf.nominal)
                  << " rel_gap=" << fmt(cf.nominal / w.a_eps - 1.0) << "\n";
    }

    std::ostringstream csv;
    csv << "r,p0,rho,eps,k_eps,kappa_sq,a_eps,sum_kappa_sq,beta_pred\n";
    csv << fmt(spec.r) << ',' << fmt(spec.p0) << ',' << fmt(spec.rho) << ','
        << fmt(spec.eps) << ',' << fmt(w.k_eps) << ',' << fmt(w.kappa_sq) << ','
        << fmt(w.a_eps) << ',' << fmt(w.sum_w) << ',' << fmt(beta_pred) << '\n';
    if (!out_path.empty())
        write_file(out_path, csv.str());
    else if (format == "csv")
        std::cout << csv.str();
    return 0;
}

// ------------------------------------------------------------- simulate ----
int cmd_simulate(const ProblemOpts& po, const std::string& kind, std::uint64_t trials,
                 std::uint64_t seed, const std::string& family,
                 const std::string& centering, const std::string& calibration,
                 std::uint64_t cal_trials, std::uint64_t cal_seed, double delta,
                 bool conditional, const std::string& alternative, int threads,
                 const std::string& out_path, const std::string& format)
{
    const ProblemOpts::Resolved res = po.resolve();
    TestSpec test = build_test(family, res, centering, delta);
    apply_calibration(test, calibration, res, cal_trials, cal_seed ? cal_seed : seed + 1,
                      threads);

    mcx::Experiment exp;
    const AlternativeSet q(res.spec.rho, BesovBall(res.spec.r, res.spec.p0));
    if (kind == "type1") {
        exp = mcx::Experiment::type1();
    } else if (kind == "type2") {
        const LfVariant variant =
            (alternative == "nominal") ? LfVariant::nominal : LfVariant::consistent;
        exp = mcx::Experiment::type2(least_favorable(res.spec, res.weights, variant).theta);
    } else if (kind == "bayes-power") {
        if (!(delta > 0.0))
            throw std::invalid_argument("--kind bayes-power needs --delta");
        exp = mcx::Experiment::bayes(prior_from_delta(perturb(res.spec, delta)), conditional,
                                     conditional ? std::optional<AlternativeSet>(q)
                                                 : std::nullopt);
    } else if (kind == "membership") {
        if (!(delta > 0.0))
            throw std::invalid_argument("--kind membership needs --delta");
        exp = mcx::Experiment::member(prior_from_delta(perturb(res.spec, delta)), q);
    } else {
        throw std::invalid_argument("unknown kind: " + kind);
    }

    mcx::RunOptions opt;
    opt.threads = threads;
    const mcx::MCReport rep = mcx::run(exp, test, res.spec, trials, seed, opt);
    emit_report(rep, out_path, format);
    return 0;
}

// ---------------------------------------------------------- power-curve ----
int cmd_power_curve(const ProblemOpts& po, const std::string& a_list_csv,
                    const std::string& eps_list_csv, std::uint64_t trials,
                    std::uint64_t seed, const std::string& calibration,
                    std::uint64_t cal_trials, const std::string& alternative, int threads,
                    const std::string& out_path)
{
    if (a_list_csv.empty() == eps_list_csv.empty())
        throw std::invalid_argument("supply exactly one of --a-eps-list and --eps-list");

    std::ostringstream csv;
    csv << "eps,a_eps,alpha,x_alpha,beta_pred,beta_mc,ci_lo,ci_hi,trials,seed\n";

    std::vector<ProblemOpts> instances;
    if (!a_list_csv.empty()) {
        for (double a : parse_list(a_list_csv)) {
            ProblemOpts p = po;
            p.a_eps = a;
            p.eps = -1.0;
            instances.push_back(p);
        }
    } else {
        for (double e : parse_list(eps_list_csv)) {
            ProblemOpts p = po;
            p.eps = e;
            p.a_eps = -1.0;
            instances.push_back(p);
        }
    }

    for (const ProblemOpts& p : instances) {
        const ProblemOpts::Resolved res = p.resolve();
        TestSpec test = make_plain_test(res.weights, res.spec);
        apply_calibration(test, calibration, res, cal_trials, seed + 1, threads);
        const LfVariant variant =
            (alternative == "nominal") ? LfVariant::nominal : LfVariant::consistent;
        const CoefficientVector theta =
            least_favorable(res.spec, res.weights, variant).theta;
        mcx::RunOptions opt;
        opt.threads = threads;
        const mcx::MCReport rep =
            mcx::run(mcx::Experiment::type2(theta), test, res.spec, trials, seed, opt);
        const double beta_pred = predicted_type2(res.weights.a_eps, res.spec.alpha);
        csv << fmt(res.spec.eps) << ',' << fmt(res.weights.a_eps) << ','
            << fmt(res.spec.alpha) << ',' << fmt(test.x_alpha) << ',' << fmt(beta_pred)
            << ',' << fmt(rep.rate) << ',' << fmt(rep.ci_lo) << ',' << fmt(rep.ci_hi)
            << ',' << rep.n_trials << ',' << rep.seed << '\n';
    }

    if (out_path.empty())
        std::cout << csv.str();
    else
        write_file(out_path, csv.str());
    return 0;
}

// ----------------------------------------------------------- worst-case ----
int cmd_worst_case(const ProblemOpts& po, std::size_t horizon, const std::string& out_path)
{
    const ProblemOpts::Resolved res = po.resolve();
    const std::size_t J = horizon ? horizon : res.weights.j_max;
    const AlternativeSet q(res.spec.rho, BesovBall(res.spec.r, res.spec.p0));
    const NoncentralityMin m = minimize_noncentrality(q, res.weights.weights, J);

    std::cout << "value=" << fmt(m.value) << "\n";
    std::cout << "noncentrality=" << fmt(m.value / std::pow(res.spec.eps, 4.0)) << "\n";
    std::cout << "ratio_to_sum_kappa4=" << fmt(m.value / res.weights.sum_w2) << "\n";

    std::ostringstream csv;
    csv << "j,theta_sq\n";
    for (std::size_t j = 1; j <= m.theta_sq.size(); ++j)
        csv << j << ',' << fmt(m.theta_sq[j - 1]) << '\n';
    if (!out_path.empty())
        write_file(out_path, csv.str());
    return 0;
}

// -------------------------------------------------------- concentration ----
int cmd_concentration(const ProblemOpts& po, double delta, double delta1, bool hkz,
                      std::size_t dim, const std::string& cov_kind,
                      const std::string& t_list_csv, std::uint64_t trials,
                      std::uint64_t seed, const std::string& out_path)
{
    if (hkz) {
        DiagCovariance cov;
        cov.diag.resize(dim);
        for (std::size_t j = 1; j <= dim; ++j) {
            if (cov_kind == "identity")
                cov.diag[j - 1] = 1.0;
            else if (cov_kind.rfind("power:", 0) == 0)
                cov.diag[j - 1] = std::pow(static_cast<double>(j),
                                           -std::stod(cov_kind.substr(6)));
            else
                throw std::invalid_argument("unknown --cov: " + cov_kind);
        }
        for (double t : parse_list(t_list_csv)) {
            const TailCheck c = empirical_tail_check(cov, t, trials, seed);
            std::cout << "t=" << fmt(t) << " rate=" << fmt(c.empirical_rate)
                      << " bound=" << fmt(c.bound) << " pass=" << (c.pass ? 1 : 0) << "\n";
        }
        return 0;
    }

    if (!(delta > 0.0))
        throw std::invalid_argument("concentration: supply --delta (or use --hkz)");
    const ProblemOpts::Resolved res = po.resolve();
    const DeltaWeights dw = perturb(res.spec, delta);
    const ViolationBound vb = besov_violation_bound(
        dw, BesovBall(res.spec.r, res.spec.p0), delta1 > 0.0 ? delta1 : delta);

    std::ostringstream csv;
    csv << "i,trace,trace_sq,opnorm,t_star,bound\n";
    for (const ViolationTerm& term : vb.per_i)
        csv << term.i << ',' << fmt(term.trace) << ',' << fmt(term.trace_sq) << ','
            << fmt(term.opnorm) << ',' << fmt(term.t_star) << ',' << fmt(term.bound)
            << '\n';
    std::cout << "total_bound=" << fmt(vb.total) << "\n";
    if (out_path.empty())
        std::cout << csv.str();
    else
        write_file(out_path, csv.str());
    return 0;
}

// ---------------------------------------------------------------- bayes ----
int cmd_bayes(const ProblemOpts& po, const std::string& kind, double delta,
              std::uint64_t trials, std::uint64_t seed, bool conditional, int threads,
              const std::string& out_path, const std::string& format)
{
    if (!(delta > 0.0))
        throw std::invalid_argument("bayes: supply --delta");
    const ProblemOpts::Resolved res = po.resolve();
    const DeltaWeights dw = perturb(res.spec, delta);
    const GaussianPrior prior = prior_from_delta(dw);
    const AlternativeSet q(res.spec.rho, BesovBall(res.spec.r, res.spec.p0));

    const PriorMoments pm = prior_norm_moments(prior, res.spec.rho);
    std::cout << "prior_mean=" << fmt(pm.mean) << " prior_var=" << fmt(pm.variance)
              << " chebyshev_lower=" << fmt(pm.chebyshev_lower) << "\n";
    std::cout << "mass_ratio=" << fmt(pm.mean / (res.spec.rho * (1.0 + 0.5 * delta)))
              << "\n";

    mcx::RunOptions opt;
    opt.threads = threads;
    mcx::MCReport rep;
    if (kind == "membership") {
        rep = mcx::run(mcx::Experiment::member(prior, q), make_plain_test(res.weights, res.spec),
                       res.spec, trials, seed, opt);
    } else if (kind == "power") {
        TestSpec test = make_gamma_delta_test(dw, res.spec);
        rep = mcx::run(mcx::Experiment::bayes(prior, conditional,
                                              conditional ? std::optional<AlternativeSet>(q)
                                                          : std::nullopt),
                       test, res.spec, trials, seed, opt);
    } else {
        throw std::invalid_argument("unknown bayes kind: " + kind);
    }
    emit_report(rep, out_path, format);
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"asymptotically minimax detection toolkit"};
    app.require_subcommand(1);
    app.set_config("--config", "", "key=value configuration file; flags win");
    std::string emit_config;
    app.add_option("--emit-config", emit_config,
                   "write the resolved configuration to this file and continue")
        ->configurable(false);

    ProblemOpts po;
    std::string out_path;
    std::string format = "json";
    int threads = 0;

    // solve
    auto* solve = app.add_subcommand("solve", "solve the weight equations and print the profile summary");
    solve->configurable();
    po.add_to(solve);
    solve->add_option("--out", out_path, "write the summary CSV row here");
    solve->add_option("--format", format, "stdout format: text|csv");

    // simulate
    auto* sim = app.add_subcommand("simulate", "run one Monte Carlo experiment");
    sim->configurable();
    po.add_to(sim);
    std::string kind = "type1";
    std::uint64_t trials = 20000;
    std::uint64_t seed = 0;
    std::string family = "plain";
    std::string centering = "exact";
    std::string calibration = "asymptotic";
    std::uint64_t cal_trials = 20000;
    std::uint64_t cal_seed = 0;
    double delta = 0.0;
    bool conditional = false;
    std::string alternative = "consistent";
    sim->add_option("--kind", kind, "type1|type2|bayes-power|membership");
    sim->add_option("--trials", trials, "number of trials");
    sim->add_option("--seed", seed, "base seed (required: no silent nondeterminism)")
        ->required();
    sim->add_option("--family", family, "plain|gamma|gamma-delta");
    sim->add_option("--centering", centering, "exact|rho");
    sim->add_option("--calibration", calibration, "asymptotic|mc|exact");
    sim->add_option("--cal-trials", cal_trials, "calibration sample size for --calibration mc");
    sim->add_option("--cal-seed", cal_seed, "calibration seed (default seed+1)");
    sim->add_option("--delta", delta, "delta for perturbed-prior kinds");
    sim->add_flag("--conditional", conditional, "condition the prior on Q");
    sim->add_option("--alternative", alternative, "consistent|nominal");
    sim->add_option("--threads", threads, "worker threads (0 = default)");
    sim->add_option("--out", out_path, "write the report here");
    sim->add_option("--format", format, "report file format: json|csv");

    // power-curve
    auto* pc = app.add_subcommand("power-curve", "sweep eps or A and emit predicted vs MC power");
    pc->configurable();
    po.add_to(pc);
    std::string a_list;
    std::string eps_list;
    pc->add_option("--a-eps-list", a_list, "comma-separated A targets");
    pc->add_option("--eps-list", eps_list, "comma-separated eps values");
    pc->add_option("--trials", trials, "trials per point");
    pc->add_option("--seed", seed, "base seed")->required();
    pc->add_option("--calibration", calibration, "asymptotic|mc|exact");
    pc->add_option("--cal-trials", cal_trials, "calibration sample size");
    pc->add_option("--alternative", alternative, "consistent|nominal");
    pc->add_option("--threads", threads, "worker threads");
    pc->add_option("--out", out_path, "write the CSV here (default stdout)");

    // worst-case
    auto* wc = app.add_subcommand("worst-case", "minimize the noncentrality over Q");
    wc->configurable();
    po.add_to(wc);
    std::size_t horizon = 0;
    wc->add_option("--horizon", horizon, "optimization horizon (default j_max)");
    wc->add_option("--out", out_path, "write the minimizer CSV here");

    // concentration
    auto* conc = app.add_subcommand("concentration", "per-block violation bounds or HKZ checks");
    conc->configurable();
    po.add_to(conc);
    double delta1 = 0.0;
    bool hkz = false;
    std::size_t dim = 5;
    std::string cov_kind = "identity";
    std::string t_list = "0.5,1,2";
    conc->add_option("--delta", delta, "prior perturbation delta");
    conc->add_option("--delta1", delta1, "slack parameter (default = delta)");
    conc->add_flag("--hkz", hkz, "run the empirical quadratic-form tail check instead");
    conc->add_option("--dim", dim, "covariance dimension for --hkz");
    conc->add_option("--cov", cov_kind, "identity | power:<p> (diag j^-p)");
    conc->add_option("--t-list", t_list, "comma-separated t values");
    conc->add_option("--trials", trials, "trials for --hkz");
    conc->add_option("--seed", seed, "seed for --hkz");
    conc->add_option("--out", out_path, "write the per-block CSV here");

    // bayes
    auto* bay = app.add_subcommand("bayes", "prior experiments: membership rates and Bayes power");
    bay->configurable();
    po.add_to(bay);
    std::string bkind = "membership";
    bay->add_option("--kind", bkind, "membership|power");
    bay->add_option("--delta", delta, "prior perturbation delta");
    bay->add_option("--trials", trials, "number of draws");
    bay->add_option("--seed", seed, "base seed")->required();
    bay->add_flag("--conditional", conditional, "condition the prior on Q (power only)");
    bay->add_option("--threads", threads, "worker threads");
    bay->add_option("--out", out_path, "write the report here");
    bay->add_option("--format", format, "report file format: json|csv");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (!emit_config.empty())
            write_file(emit_config, app.config_to_str(false, false));
        if (solve->parsed())
            return cmd_solve(po, out_path, format);
        if (sim->parsed())
            return cmd_simulate(po, kind, trials, seed, family, centering, calibration,
                                cal_trials, cal_seed, delta, conditional, alternative,
                                threads, out_path, format);
        if (pc->parsed())
            return cmd_power_curve(po, a_list, eps_list, trials, seed, calibration,
                                   cal_trials, alternative, threads, out_path);
        if (wc->parsed())
            return cmd_worst_case(po, horizon, out_path);
        if (conc->parsed())
            return cmd_concentration(po, delta, delta1, hkz, dim, cov_kind, t_list, trials,
                                     seed, out_path);
        if (bay->parsed())
            return cmd_bayes(po, bkind, delta, trials, seed, conditional, threads, out_path,
                             format);
    } catch (const infeasibility_error& e) {
        std::cerr << "error (infeasible): " << e.what() << "\n";
        return 3;
    } catch (const numeric_error& e) {
        std::cerr << "error (numeric): " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error (config): " << e.what() << "\n";
        return 2;
    }
    return 2;
}
