// Command line front end: encoding, decoding, weight spectra, minimum
// distance estimates and Monte Carlo BLER sweeps over deep polar codes.

#include "deeppolar/sim.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

using namespace deeppolar;

namespace {

std::vector<double> read_llr_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open LLR file " + path);
    std::vector<double> llr;
    double v;
    while (in >> v) llr.push_back(v);
    return llr;
}

int run_encode(const std::string& code_path, const std::string& msg) {
    DeepPolarCode code = load_code(code_path);
    BitVector d = BitVector::parse(msg, std::size_t(code.message_length()));
    BitVector x = encode(code, d);
    std::cout << "codeword_hex=" << x.to_hex_string() << "\n"
              << "codeword_bits=" << x.to_binary_string() << "\n";
    return 0;
}

int run_decode(const std::string& code_path, const std::string& llr_path,
               const std::string& decoder, int list_size, bool min_sum) {
    DeepPolarCode code = load_code(code_path);
    auto llr = read_llr_file(llr_path);
    if (int(llr.size()) != code.block_length())
        throw std::invalid_argument("LLR file holds " + std::to_string(llr.size()) +
                                    " values, expected " + std::to_string(code.block_length()));

    SclOptions opts;
    opts.min_sum = min_sum;
    DecodeResult res;
    DecoderKind kind = decoder_kind_from_string(decoder);
    switch (kind) {
        case DecoderKind::sc: res = scl_bpc_decode(code, llr, 1, opts); break;
        case DecoderKind::scl_bpc: res = scl_bpc_decode(code, llr, list_size, opts); break;
        case DecoderKind::parallel_scl: res = parallel_scl_decode(code, llr, list_size); break;
        case DecoderKind::ml: {
            bool erasures = false;
            for (double v : llr)
                if (v == 0.0) erasures = true;
            res = erasures ? ml_decode_bec(code, llr).result : ml_decode_llr(code, llr);
            break;
        }
    }
    std::cout << "message_hex=" << res.message.to_hex_string() << "\n"
              << "message_bits=" << res.message.to_binary_string() << "\n"
              << "success=" << (res.success ? 1 : 0) << "\n"
              << "metric=" << res.best_metric << "\n";
    if (res.diag.paths_killed_bpc || res.diag.paths_pruned)
        std::cerr << "paths killed by parity checks: " << res.diag.paths_killed_bpc
                  << ", pruned by metric: " << res.diag.paths_pruned << "\n";
    return res.success ? 0 : 2;
}

int run_weights(const std::string& code_path, int max_k, int threads) {
    DeepPolarCode code = load_code(code_path);
    if (code.message_length() > max_k)
        throw std::invalid_argument("K exceeds --max-k " + std::to_string(max_k));
    WeightDistribution wd = weight_distribution(code, threads);
    std::cout << "weight,count\n";
    for (const auto& [w, c] : wd.counts) std::cout << w << ',' << c << '\n';
    return 0;
}

int run_dmin_est(const std::string& code_path, int list_size) {
    DeepPolarCode code = load_code(code_path);
    std::cout << min_weight_scl_estimate(code, list_size) << "\n";
    return 0;
}

int run_profile(const std::string& spec_text, int n) {
    ProfileSpec spec = ProfileSpec::parse(spec_text);
    ReliabilityProfile p = spec.build(std::size_t(n), 1.0);
    std::cout << "index,value\n";
    for (std::size_t i = 0; i < p.values.size(); ++i)
        std::cout << (i + 1) << ',' << p.values[i] << '\n';
    return 0;
}

struct SimulateArgs {
    std::string config_path;
    std::string code_path;
    std::string decoder;
    int list_size = 0;
    std::string channel;
    std::vector<double> ebn0;
    std::vector<double> eps;
    bool esn0 = false;
    long long max_trials = 0;
    long long target_errors = -1;
    uint64_t seed = 0;
    bool seed_set = false;
    int threads = 1;
    std::string out_path;
    bool progress = false;
};

int run_simulate(const SimulateArgs& args) {
    SimConfig cfg;
    bool have_config = !args.config_path.empty();
    if (have_config) cfg = load_sim_config(args.config_path);

    if (!args.code_path.empty()) cfg.code = load_code(args.code_path);
    else if (!have_config) throw std::invalid_argument("either --config or --code is required");
    if (!args.decoder.empty()) cfg.decoder = decoder_kind_from_string(args.decoder);
    if (args.list_size > 0) cfg.list_size = args.list_size;
    if (!args.channel.empty()) {
        if (args.channel == "awgn") cfg.channel = ChannelKind::bi_awgn;
        else if (args.channel == "bec") cfg.channel = ChannelKind::bec;
        else throw std::invalid_argument("unknown channel \"" + args.channel + "\"");
    }
    if (!args.ebn0.empty()) {
        cfg.channel = ChannelKind::bi_awgn;
        cfg.sweep = args.ebn0;
        cfg.esn0 = args.esn0;
    }
    if (!args.eps.empty()) {
        cfg.channel = ChannelKind::bec;
        cfg.sweep = args.eps;
    }
    if (args.max_trials > 0) cfg.max_trials = args.max_trials;
    if (args.target_errors >= 0) cfg.target_errors = args.target_errors;
    if (args.seed_set) cfg.seed = args.seed;
    cfg.threads = args.threads;

    ProgressFn progress;
    if (args.progress)
        progress = [](const PointResult& p) {
            std::cerr << "param " << p.param << ": " << p.block_errors << "/" << p.trials
                      << " block errors, BLER " << p.bler << " +- " << p.ci95 << " ("
                      << p.seconds << " s)\n";
        };

    SimResult result = run_bler(cfg, progress);
    if (args.out_path.empty() || args.out_path == "-") {
        write_csv(result, std::cout);
    } else {
        std::ofstream out(args.out_path);
        if (!out) throw std::invalid_argument("cannot open output file " + args.out_path);
        write_csv(result, out);
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"deep polar code toolkit"};
    app.require_subcommand(1);

    std::string code_path, msg, llr_path, decoder = "scl-bpc", profile_spec;
    int list_size = 8, max_k = kMlEnumerationGuard, threads = 1, profile_n = 128;
    bool min_sum = false;
    SimulateArgs sim;

    auto* enc = app.add_subcommand("encode", "encode a message");
    enc->add_option("--code", code_path, "code config JSON")->required();
    enc->add_option("--msg", msg, "message as hex or 0/1 bits")->required();

    auto* dec = app.add_subcommand("decode", "decode an LLR vector");
    dec->add_option("--code", code_path, "code config JSON")->required();
    dec->add_option("--llr", llr_path, "file with one LLR per line, position order 1..N")->required();
    dec->add_option("--decoder", decoder, "scl-bpc | parallel-scl | sc | ml");
    dec->add_option("--list", list_size, "list size");
    dec->add_flag("--min-sum", min_sum, "min-sum check node update");

    auto* wts = app.add_subcommand("weights", "exhaustive weight distribution CSV");
    wts->add_option("--code", code_path)->required();
    wts->add_option("--max-k", max_k, "refuse codes with more message bits");
    wts->add_option("--threads", threads);

    auto* dmin = app.add_subcommand("dmin-est", "minimum distance estimate by list decoding");
    dmin->add_option("--code", code_path)->required();
    dmin->add_option("--list", list_size, "list size")->required();

    auto* prof = app.add_subcommand("profile", "dump a reliability profile");
    prof->add_option("--profile", profile_spec, "bec:EPS | dega:SNR_DB | seq:PATH")->required();
    prof->add_option("-n", profile_n, "blocklength");

    auto* simc = app.add_subcommand("simulate", "Monte Carlo BLER/BER sweep");
    simc->add_option("--config", sim.config_path, "sim config JSON");
    simc->add_option("--code", sim.code_path, "code config JSON (overrides config)");
    simc->add_option("--decoder", sim.decoder, "scl-bpc | parallel-scl | sc | ml");
    simc->add_option("--list", sim.list_size);
    simc->add_option("--channel", sim.channel, "awgn | bec");
    simc->add_option("--ebn0", sim.ebn0, "Eb/N0 sweep in dB")->delimiter(',');
    simc->add_flag("--es", sim.esn0, "treat --ebn0 values as Es/N0");
    simc->add_option("--eps", sim.eps, "BEC erasure probability sweep")->delimiter(',');
    simc->add_option("--max-trials", sim.max_trials);
    simc->add_option("--target-errors", sim.target_errors);
    auto* seed_opt = simc->add_option("--seed", sim.seed, "master seed");
    simc->add_option("--threads", sim.threads);
    simc->add_option("--out", sim.out_path, "CSV output path (default stdout)");
    simc->add_flag("--progress", sim.progress, "per-point status on stderr");

    CLI11_PARSE(app, argc, argv);
    sim.seed_set = seed_opt->count() > 0;

    try {
        if (enc->parsed()) return run_encode(code_path, msg);
        if (dec->parsed()) return run_decode(code_path, llr_path, decoder, list_size, min_sum);
        if (wts->parsed()) return run_weights(code_path, max_k, threads);
        if (dmin->parsed()) return run_dmin_est(code_path, list_size);
        if (prof->parsed()) return run_profile(profile_spec, profile_n);
        if (simc->parsed()) return run_simulate(sim);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
