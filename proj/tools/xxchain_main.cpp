// Command-line front end: chain files in, CSV/JSON out. Subcommands follow
// the verb-noun layout `pst check`, `transport scan`, `ent entropy`,
// `neg sweep`, ... Exit codes: 0 success, 1 computation error, 2 usage error.

#include "xxchain/chain.hpp"
#include "xxchain/closed_form.hpp"
#include "xxchain/entanglement.hpp"
#include "xxchain/errors.hpp"
#include "xxchain/json_io.hpp"
#include "xxchain/negativity.hpp"
#include "xxchain/numerics.hpp"
#include "xxchain/open_system.hpp"
#include "xxchain/pst.hpp"
#include "xxchain/spectral.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

namespace {

using namespace xxchain;
using nlohmann::ordered_json;

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

struct IntRange {
    int start = 0, stop = 0, step = 1;

    std::vector<int> values() const {
        std::vector<int> out;
        for (int v = start; v <= stop; v += step) out.push_back(v);
        return out;
    }
};

IntRange parse_range(const std::string& text) {
    IntRange r;
    const auto c1 = text.find(':');
    try {
        if (c1 == std::string::npos) {
            r.start = r.stop = std::stoi(text);
            return r;
        }
        const auto c2 = text.find(':', c1 + 1);
        if (c2 == std::string::npos) throw std::invalid_argument("");
        r.start = std::stoi(text.substr(0, c1));
        r.stop = std::stoi(text.substr(c1 + 1, c2 - c1 - 1));
        r.step = std::stoi(text.substr(c2 + 1));
    } catch (const std::exception&) {
        throw std::invalid_argument("bad range \"" + text + "\"; expected start:stop:step");
    }
    if (r.start > r.stop || r.step <= 0)
        throw std::invalid_argument("bad range \"" + text +
                                    "\": need start <= stop and step > 0");
    return r;
}

// Output sink: stdout by default, file when --output is given.
class Sink {
  public:
    explicit Sink(const std::string& path) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) throw std::invalid_argument("cannot open output file " + path);
        }
    }
    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

  private:
    std::ofstream file_;
};

void emit_table(std::ostream& os, const std::string& format,
                const std::vector<std::string>& cols,
                const std::vector<std::vector<std::string>>& rows) {
    if (format == "json") {
        ordered_json arr = ordered_json::array();
        for (const auto& row : rows) {
            ordered_json obj;
            for (size_t i = 0; i < cols.size(); ++i) {
                // numeric cells round-trip through the 17-digit string
                try {
                    size_t used = 0;
                    const double v = std::stod(row[i], &used);
                    if (used == row[i].size()) {
                        obj[cols[i]] = v;
                        continue;
                    }
                } catch (const std::exception&) {
                }
                obj[cols[i]] = row[i];
            }
            arr.push_back(obj);
        }
        os << arr.dump(2) << "\n";
        return;
    }
    for (size_t i = 0; i < cols.size(); ++i) os << (i ? "," : "") << cols[i];
    os << "\n";
    for (const auto& row : rows) {
        for (size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << row[i];
        os << "\n";
    }
}

// Access to energies and wavefunction blocks that switches to the closed
// forms when the chain is a reference family too large to diagonalize.
struct ChainContext {
    ChainSpec spec;
    Chain chain;
    std::optional<ReferenceParams> closed;
    std::optional<SpectralData> sd;

    static constexpr int kEigenLimit = 2048;

    explicit ChainContext(const ChainSpec& s) : spec(s), chain(build_chain(s)) {
        if (const auto* k = std::get_if<KrawtchoukSpec>(&spec))
            closed = KrawtchoukParams{k->N, k->p};
        else if (const auto* h = std::get_if<HomogeneousSpec>(&spec))
            closed = HomogeneousParams{h->N, h->J, h->B};
    }

    bool use_closed() const { return closed && chain.N > 256; }

    const SpectralData& spectral() {
        if (!sd) {
            if (chain.N > kEigenLimit)
                throw Error("chain too large to diagonalize (N > 2048); use a "
                            "krawtchouk or homogeneous chain document");
            sd = diagonalize(chain);
        }
        return *sd;
    }

    double energy(int k) {
        if (use_closed()) {
            if (const auto* kp = std::get_if<KrawtchoukParams>(&*closed))
                return krawtchouk_energy(*kp, k);
            return homogeneous_energy(std::get<HomogeneousParams>(*closed), k);
        }
        return spectral().omegas[k];
    }

    int auto_K() {
        if (use_closed()) {
            int K = -1;
            for (int k = 0; k <= chain.N; ++k)
                if (energy(k) < 0.0) K = k;
            if (K < 0)
                throw IndexOutOfRange("no negative-energy mode: pass an explicit --K");
            return K;
        }
        return auto_filling_index(spectral().omegas);
    }

    int filling(const std::string& text) {
        if (text == "auto") return auto_K();
        try {
            return std::stoi(text);
        } catch (const std::exception&) {
            throw std::invalid_argument("--K expects an integer or \"auto\"");
        }
    }

    Mat modes(int K, const std::vector<int>& sites) {
        if (use_closed()) return closed_form_mode_block(*closed, K, sites);
        const SpectralData& s = spectral();
        Mat block(sites.size(), K + 1);
        for (size_t i = 0; i < sites.size(); ++i)
            for (int k = 0; k <= K; ++k) block(i, k) = s.phi(sites[i], k);
        return block;
    }

    CorrelationMatrix correlation(int K, const std::vector<int>& sites) {
        return correlation_from_modes(modes(K, sites), sites, K);
    }
};

std::vector<int> contiguous(int first, int last) {
    std::vector<int> v;
    for (int i = first; i <= last; ++i) v.push_back(i);
    return v;
}

// ---------------------------------------------------------------------------
// pst

struct PstCheckArgs {
    std::string chain_path;
    std::string tau = "auto";
    std::string output;
    std::string format = "json";
};

void run_pst_check(const PstCheckArgs& args) {
    const Chain chain = build_chain(load_chain_spec(args.chain_path));
    const SpectralData sd = diagonalize(chain);
    double tau;
    if (args.tau == "auto") {
        double min_gap = std::numeric_limits<double>::infinity();
        for (int k = 0; k + 1 < sd.modes(); ++k)
            min_gap = std::min(min_gap, sd.omegas[k + 1] - sd.omegas[k]);
        tau = std::numbers::pi / min_gap;
    } else {
        tau = std::stod(args.tau);
    }
    const PstVerdict v = pst_verdict(chain, tau);

    ordered_json out;
    out["tau"] = v.tau;
    out["mirror_residual"] = v.mirror_residual;
    out["gap_condition"] = v.gaps.ok;
    out["M"] = v.gaps.M;
    out["fidelity_at_tau"] = v.fidelity_at_tau;
    out["phase"] = v.phase;
    out["verdict"] = v.verdict;
    Sink sink(args.output);
    sink.stream() << out.dump(2) << "\n";
}

struct SynthesizeArgs {
    std::string spectrum_path;
    std::string output;
};

void run_pst_synthesize(const SynthesizeArgs& args) {
    const std::vector<double> omegas = load_spectrum(args.spectrum_path);
    const Chain chain = synthesize_from_spectrum(omegas);
    Sink sink(args.output);
    sink.stream() << chain_to_json(chain).dump(2) << "\n";
}

// ---------------------------------------------------------------------------
// transport

struct CurrentArgs {
    std::string chain_path;
    double T0 = 1.0, TN = 1.0, lambda = 1.0, h = 1.0;
    std::string shift = "none";
    std::string method = "general";
    std::string output;
};

void run_transport_current(const CurrentArgs& args) {
    Chain chain = build_chain(load_chain_spec(args.chain_path));
    double shift = 0.0;
    if (args.shift == "auto") {
        auto [shifted, delta] = shifted_to_positive(chain);
        chain = std::move(shifted);
        shift = delta;
    } else if (args.shift != "none") {
        shift = std::stod(args.shift);
        chain = shifted_fields(chain, shift);
    }
    const SpectralData sd = diagonalize(chain);
    const BathConfig bath{args.T0, args.TN, args.lambda, args.h};
    const double hl = args.method == "mirror" ? heat_current_mirror(sd, bath)
                                              : heat_current_general(sd, bath);
    ordered_json out;
    out["T0"] = args.T0;
    out["TN"] = args.TN;
    out["lambda"] = args.lambda;
    out["h"] = args.h;
    out["shift"] = shift;
    out["hL"] = hl;
    out["hR"] = -hl;
    Sink sink(args.output);
    sink.stream() << out.dump(2) << "\n";
}

struct FamilyArgs {
    std::string family = "krawtchouk";
    double p = 0.5;
    double J = 1.0, B = 0.0;

    Chain make(int N) const {
        if (family == "krawtchouk") return krawtchouk_chain(N, p);
        if (family == "krawtchouk-unit")
            return scaled_couplings(krawtchouk_chain(N, p), 1.0 / N);
        if (family == "homogeneous") return homogeneous_chain(N, J, B);
        throw std::invalid_argument("unknown family \"" + family + "\"");
    }
};

struct TransportScanArgs {
    FamilyArgs family;
    double T = 100.0, dT = 0.5, lambda = 1.0, h = 1.0;
    std::string n_range = "20:200:20";
    std::string output;
    std::string format = "csv";
};

void run_transport_scan(const TransportScanArgs& args) {
    std::vector<std::vector<std::string>> rows;
    for (int N : parse_range(args.n_range).values()) {
        const auto [chain, delta] = shifted_to_positive(args.family.make(N));
        const double kappa = conductivity(chain, args.T, args.dT, args.lambda, args.h);
        const BathConfig bath{args.T + 0.5 * args.dT, args.T - 0.5 * args.dT, args.lambda,
                              args.h};
        const double hl = heat_current_general(diagonalize(chain), bath);
        rows.push_back({std::to_string(N), fmt17(kappa), fmt17(hl)});
    }
    Sink sink(args.output);
    emit_table(sink.stream(), args.format, {"N", "kappa", "hL"}, rows);
}

// ---------------------------------------------------------------------------
// ent

struct EntropyArgs {
    std::string chain_path;
    std::string K = "auto";
    int ell = 0;
    std::string route = "direct";
    std::string output;
};

void run_ent_entropy(const EntropyArgs& args) {
    ChainContext ctx(load_chain_spec(args.chain_path));
    const int K = ctx.filling(args.K);
    const CorrelationMatrix C = ctx.correlation(K, contiguous(0, args.ell));

    ordered_json out;
    out["N"] = ctx.chain.N;
    out["K"] = K;
    out["ell"] = args.ell;
    if (args.route == "heun") {
        const HeunOperator T =
            heun_operator(ctx.chain, K, args.ell, ctx.energy(K), ctx.energy(K + 1));
        const StableSpectrum stable = stable_correlation_spectrum(C, T);
        out["S"] = entropy_from_occupations(stable.gamma);
        out["route"] = stable.fallback_direct ? "direct-fallback" : "heun";
        out["commutator_residual"] = stable.commutator_residual;
    } else {
        out["S"] = entanglement_entropy(C);
        out["route"] = "direct";
    }
    Sink sink(args.output);
    sink.stream() << out.dump(2) << "\n";
}

struct EntScanArgs {
    FamilyArgs family;
    double ratio_l = 0.5, ratio_k = 0.5;
    std::string n_range = "16:256:16";
    std::string output;
    std::string format = "csv";
};

void run_ent_scan(const EntScanArgs& args) {
    std::vector<std::vector<std::string>> rows;
    for (int N : parse_range(args.n_range).values()) {
        ChainContext ctx((args.family.family == "homogeneous")
                             ? ChainSpec(HomogeneousSpec{N, args.family.J, args.family.B})
                             : ChainSpec(KrawtchoukSpec{N, args.family.p}));
        const int K =
            std::clamp(static_cast<int>(args.ratio_k * (N + 1)) - 1, 0, N - 1);
        const int ell =
            std::clamp(static_cast<int>(args.ratio_l * (N + 1)) - 1, 0, N - 1);
        const CorrelationMatrix C = ctx.correlation(K, contiguous(0, ell));

        std::string route = "direct";
        double residual = std::nan("");
        double entropy;
        try {
            const HeunOperator T =
                heun_operator(ctx.chain, K, ell, ctx.energy(K), ctx.energy(K + 1));
            const StableSpectrum stable = stable_correlation_spectrum(C, T);
            residual = stable.commutator_residual;
            entropy = entropy_from_occupations(stable.gamma);
            route = stable.fallback_direct ? "direct-fallback" : "heun";
        } catch (const NotCommuting&) {
            entropy = entanglement_entropy(C);
        } catch (const MissingDualGrid&) {
            entropy = entanglement_entropy(C);
        }
        rows.push_back({std::to_string(N), std::to_string(ell), fmt17(entropy), route,
                        fmt17(residual)});
    }
    Sink sink(args.output);
    emit_table(sink.stream(), args.format, {"N", "ell", "S", "route", "commutator_residual"},
               rows);
}

struct FitAffineArgs {
    std::string chain_path;
    std::string K = "auto";
    int ell = 0;
    std::string output;
};

void run_ent_fit_affine(const FitAffineArgs& args) {
    ChainContext ctx(load_chain_spec(args.chain_path));
    const int K = ctx.filling(args.K);
    const CorrelationMatrix C = ctx.correlation(K, contiguous(0, args.ell));
    const HeunOperator T =
        heun_operator(ctx.chain, K, args.ell, ctx.energy(K), ctx.energy(K + 1));
    const AffineFit fit = fit_affine_approximation(C, T);

    ordered_json out;
    out["alpha0"] = fit.alpha0;
    out["alpha1"] = fit.alpha1;
    out["residual_number"] = fit.residual_number;
    out["residual_entropy"] = fit.residual_entropy;
    out["pearson"] = fit.pearson_corr;
    out["rms"] = fit.rms;
    out["clamped"] = fit.clamped;
    out["iterations"] = fit.iterations;
    Sink sink(args.output);
    sink.stream() << out.dump(2) << "\n";
}

// ---------------------------------------------------------------------------
// neg

struct NegPairArgs {
    std::string chain_path;
    std::string K = "auto";
    int m = 0, n = 1;
    std::string output;
};

void run_neg_pair(const NegPairArgs& args) {
    ChainContext ctx(load_chain_spec(args.chain_path));
    const int K = ctx.filling(args.K);
    if (args.m == args.n) throw std::invalid_argument("--m and --n must differ");
    const int m = std::min(args.m, args.n);
    const int n = std::max(args.m, args.n);
    const NegativitySetup setup =
        negativity_setup_from_modes({m}, {n}, ctx.modes(K, {m, n}), K);
    const double rho = double(K + 1) / (ctx.chain.N + 1);
    const double c_mn = setup.C.entries(0, 1);

    ordered_json out;
    out["m"] = m;
    out["n"] = n;
    out["d"] = n - m;
    out["rho"] = rho;
    out["C_mn"] = c_mn;
    out["Ef"] = logarithmic_negativity(setup);
    out["Ef_skeletal"] = skeletal_negativity(c_mn, rho);
    Sink sink(args.output);
    sink.stream() << out.dump(2) << "\n";
}

struct NegAdjacentArgs {
    std::string chain_path;
    std::string K = "auto";
    int ell1 = 8, ell2 = 8;
    std::string center = "bulk";
    std::string output;
};

void run_neg_adjacent(const NegAdjacentArgs& args) {
    ChainContext ctx(load_chain_spec(args.chain_path));
    const int K = ctx.filling(args.K);
    const int N = ctx.chain.N;
    const int c = args.center == "bulk" ? (N + 1) / 2 : std::stoi(args.center);
    if (c - args.ell1 < 0 || c + args.ell2 - 1 > N)
        throw std::invalid_argument("adjacent intervals fall off the chain");
    const std::vector<int> A1 = contiguous(c - args.ell1, c - 1);
    const std::vector<int> A2 = contiguous(c, c + args.ell2 - 1);
    std::vector<int> all = A1;
    all.insert(all.end(), A2.begin(), A2.end());
    const NegativitySetup setup = negativity_setup_from_modes(A1, A2, ctx.modes(K, all), K);

    ordered_json out;
    out["ell1"] = args.ell1;
    out["ell2"] = args.ell2;
    out["center"] = c;
    out["K"] = K;
    out["Ef"] = logarithmic_negativity(setup);
    out["log_l1l2_over_sum"] =
        std::log(double(args.ell1) * args.ell2 / (args.ell1 + args.ell2));
    Sink sink(args.output);
    sink.stream() << out.dump(2) << "\n";
}

struct NegSweepArgs {
    std::string chain_path;
    std::string K = "auto";
    std::string mode = "skeletal";
    std::string d_range = "5:41:2";
    std::string leftmost = "bulk";
    std::string output;
    std::string format = "csv";
};

void run_neg_sweep(const NegSweepArgs& args) {
    if (args.mode != "skeletal")
        throw std::invalid_argument("only --mode skeletal is supported");
    ChainContext ctx(load_chain_spec(args.chain_path));
    const int K = ctx.filling(args.K);
    const int N = ctx.chain.N;
    const double rho = double(K + 1) / (N + 1);
    const auto* kraw = std::get_if<KrawtchoukSpec>(&ctx.spec);

    std::vector<std::vector<std::string>> rows;
    for (int d : parse_range(args.d_range).values()) {
        int m;
        if (args.leftmost == "bulk") {
            const double anchor = kraw ? kraw->p * N : 0.5 * N;
            m = std::max(0, static_cast<int>(std::lround(anchor - 0.5 * d)));
        } else {
            m = std::stoi(args.leftmost);
        }
        const int n = m + d;
        if (n > N) break;
        const NegativitySetup setup =
            negativity_setup_from_modes({m}, {n}, ctx.modes(K, {m, n}), K);
        const double c_mn = setup.C.entries(0, 1);
        const double ef = logarithmic_negativity(setup);

        double asym = std::nan("");
        if (kraw) {
            if (args.leftmost == "bulk")
                asym = correlation_asymptotic(AsymptoticKind::bulk, kraw->p, rho, d);
            else if (m == 0)
                asym = correlation_asymptotic(AsymptoticKind::boundary0, kraw->p, rho, d);
            else if (m == 1)
                asym = correlation_asymptotic(AsymptoticKind::boundary1, kraw->p, rho, d);
        }
        rows.push_back({std::to_string(d), fmt17(ef), fmt17(skeletal_negativity(c_mn, rho)),
                        fmt17(c_mn), fmt17(asym)});
    }
    Sink sink(args.output);
    emit_table(sink.stream(), args.format, {"d", "Ef", "Ef_skeletal", "C_mn", "C_asymptotic"},
               rows);
}

void add_family_options(CLI::App* cmd, FamilyArgs& family) {
    cmd->add_option("--family", family.family,
                    "chain family: krawtchouk | krawtchouk-unit | homogeneous")
        ->default_val("krawtchouk");
    cmd->add_option("--p", family.p, "krawtchouk parameter");
    cmd->add_option("--J", family.J, "homogeneous coupling");
    cmd->add_option("--B", family.B, "homogeneous field");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"inhomogeneous XX chain toolkit: spectra, transfer, transport, "
                 "entanglement, negativity"};
    app.require_subcommand(1);

    PstCheckArgs pst_check;
    SynthesizeArgs synth;
    CurrentArgs current;
    TransportScanArgs tscan;
    EntropyArgs entropy;
    EntScanArgs escan;
    FitAffineArgs affine;
    NegPairArgs pair;
    NegAdjacentArgs adjacent;
    NegSweepArgs sweep;

    auto* pst = app.add_subcommand("pst", "perfect state transfer");
    pst->require_subcommand(1);
    auto* check = pst->add_subcommand("check", "evaluate the transfer conditions");
    check->add_option("--chain", pst_check.chain_path, "chain JSON document")->required();
    check->add_option("--tau", pst_check.tau, "transfer time or \"auto\" (pi / min gap)");
    check->add_option("--output,-o", pst_check.output, "output file (default stdout)");
    check->callback([&] { run_pst_check(pst_check); });

    auto* synthesize = pst->add_subcommand("synthesize", "chain from a prescribed spectrum");
    synthesize->add_option("--spectrum", synth.spectrum_path, "JSON array of eigenvalues")
        ->required();
    synthesize->add_option("--output,-o", synth.output, "output file (default stdout)");
    synthesize->callback([&] { run_pst_synthesize(synth); });

    auto* transport = app.add_subcommand("transport", "boundary-driven heat transport");
    transport->require_subcommand(1);
    auto* cur = transport->add_subcommand("current", "steady-state heat current");
    cur->add_option("--chain", current.chain_path, "chain JSON document")->required();
    cur->add_option("--T0", current.T0, "left bath temperature")->required();
    cur->add_option("--TN", current.TN, "right bath temperature")->required();
    cur->add_option("--lambda", current.lambda, "system-bath coupling");
    cur->add_option("--h", current.h, "smearing constant");
    cur->add_option("--shift", current.shift, "none | auto | <value>; auto puts min omega at 0.5");
    cur->add_option("--method", current.method, "general | mirror");
    cur->add_option("--output,-o", current.output, "output file");
    cur->callback([&] { run_transport_current(current); });

    auto* ts = transport->add_subcommand("scan", "conductivity across chain sizes");
    add_family_options(ts, tscan.family);
    ts->add_option("--T", tscan.T, "mean temperature");
    ts->add_option("--dT", tscan.dT, "temperature gradient");
    ts->add_option("--lambda", tscan.lambda, "system-bath coupling");
    ts->add_option("--h", tscan.h, "smearing constant");
    ts->add_option("--N", tscan.n_range, "size range start:stop:step")->required();
    ts->add_option("--output,-o", tscan.output, "output file");
    ts->add_option("--format", tscan.format, "csv | json");
    ts->callback([&] { run_transport_scan(tscan); });

    auto* ent = app.add_subcommand("ent", "ground-state entanglement");
    ent->require_subcommand(1);
    auto* es = ent->add_subcommand("entropy", "entanglement entropy of the first ell+1 sites");
    es->add_option("--chain", entropy.chain_path, "chain JSON document")->required();
    es->add_option("--K", entropy.K, "filling index or \"auto\"");
    es->add_option("--ell", entropy.ell, "region cut: sites 0..ell")->required();
    es->add_option("--route", entropy.route, "direct | heun");
    es->add_option("--output,-o", entropy.output, "output file");
    es->callback([&] { run_ent_entropy(entropy); });

    auto* esc = ent->add_subcommand("scan", "entropy scaling across chain sizes");
    add_family_options(esc, escan.family);
    esc->add_option("--ratio-l", escan.ratio_l, "cut fraction (ell+1)/(N+1)");
    esc->add_option("--ratio-k", escan.ratio_k, "filling fraction (K+1)/(N+1)");
    esc->add_option("--N", escan.n_range, "size range start:stop:step")->required();
    esc->add_option("--output,-o", escan.output, "output file");
    esc->add_option("--format", escan.format, "csv | json");
    esc->callback([&] { run_ent_scan(escan); });

    auto* fa = ent->add_subcommand("fit-affine", "affine Heun fit of the entanglement spectrum");
    fa->add_option("--chain", affine.chain_path, "chain JSON document")->required();
    fa->add_option("--K", affine.K, "filling index or \"auto\"");
    fa->add_option("--ell", affine.ell, "region cut: sites 0..ell")->required();
    fa->add_option("--output,-o", affine.output, "output file");
    fa->callback([&] { run_ent_fit_affine(affine); });

    auto* neg = app.add_subcommand("neg", "fermionic logarithmic negativity");
    neg->require_subcommand(1);
    auto* np = neg->add_subcommand("pair", "single-site pair negativity");
    np->add_option("--chain", pair.chain_path, "chain JSON document")->required();
    np->add_option("--K", pair.K, "filling index or \"auto\"");
    np->add_option("--m", pair.m, "first site")->required();
    np->add_option("--n", pair.n, "second site")->required();
    np->add_option("--output,-o", pair.output, "output file");
    np->callback([&] { run_neg_pair(pair); });

    auto* na = neg->add_subcommand("adjacent", "adjacent-interval negativity");
    na->add_option("--chain", adjacent.chain_path, "chain JSON document")->required();
    na->add_option("--K", adjacent.K, "filling index or \"auto\"");
    na->add_option("--ell1", adjacent.ell1, "left interval length")->required();
    na->add_option("--ell2", adjacent.ell2, "right interval length")->required();
    na->add_option("--center", adjacent.center, "\"bulk\" or the first site of A2");
    na->add_option("--output,-o", adjacent.output, "output file");
    na->callback([&] { run_neg_adjacent(adjacent); });

    auto* ns = neg->add_subcommand("sweep", "pair negativity against separation");
    ns->add_option("--chain", sweep.chain_path, "chain JSON document")->required();
    ns->add_option("--K", sweep.K, "filling index or \"auto\"");
    ns->add_option("--mode", sweep.mode, "skeletal");
    ns->add_option("--d", sweep.d_range, "separation range start:stop:step")->required();
    ns->add_option("--leftmost", sweep.leftmost, "0 | 1 | bulk");
    ns->add_option("--output,-o", sweep.output, "output file");
    ns->add_option("--format", sweep.format, "csv | json");
    ns->callback([&] { run_neg_sweep(sweep); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const xxchain::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
