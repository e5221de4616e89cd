#include "deeppolar/sim.hpp"

#include <json.hpp>

#include <chrono>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace deeppolar {

DecoderKind decoder_kind_from_string(const std::string& name) {
    if (name == "sc") return DecoderKind::sc;
    if (name == "scl-bpc" || name == "scl") return DecoderKind::scl_bpc;
    if (name == "parallel-scl") return DecoderKind::parallel_scl;
    if (name == "ml") return DecoderKind::ml;
    throw std::invalid_argument("unknown decoder \"" + name + "\"");
}

std::string to_string(DecoderKind kind) {
    switch (kind) {
        case DecoderKind::sc: return "sc";
        case DecoderKind::scl_bpc: return "scl-bpc";
        case DecoderKind::parallel_scl: return "parallel-scl";
        case DecoderKind::ml: return "ml";
    }
    return {};
}

void validate_sim_config(const SimConfig& config) {
    if (config.sweep.empty()) throw std::invalid_argument("sweep must not be empty");
    if (config.max_trials < 1) throw std::invalid_argument("max_trials must be at least 1");
    if (config.list_size < 1) throw std::invalid_argument("list size must be at least 1");
    if (config.decoder == DecoderKind::parallel_scl)
        if (parallel_scl_hypothesis_count(config.code) > (std::size_t(1) << 16))
            throw std::invalid_argument("parallel-SCL hypothesis budget exceeded for this code");
    if (config.decoder == DecoderKind::ml && config.code.message_length() > kMlEnumerationGuard)
        throw std::invalid_argument("ML enumeration guard exceeded for this code");
    if (config.channel == ChannelKind::bec)
        for (double eps : config.sweep)
            if (!(eps >= 0.0 && eps <= 1.0))
                throw std::invalid_argument("erasure probabilities must be in [0,1]");
}

DecodeResult decode_with(const SimConfig& config, const std::vector<double>& llr) {
    switch (config.decoder) {
        case DecoderKind::sc: return scl_bpc_decode(config.code, llr, 1);
        case DecoderKind::scl_bpc: return scl_bpc_decode(config.code, llr, config.list_size);
        case DecoderKind::parallel_scl: return parallel_scl_decode(config.code, llr, config.list_size);
        case DecoderKind::ml:
            if (config.channel == ChannelKind::bec) return ml_decode_bec(config.code, llr).result;
            return ml_decode_llr(config.code, llr);
    }
    throw std::logic_error("unreachable");
}

namespace {

struct TrialCounts {
    long long block_errors = 0;
    long long bit_errors = 0;
};

TrialCounts run_trials(const SimConfig& config, const ChannelModel& model, std::size_t point,
                       long long first, long long count) {
    TrialCounts counts;
    int k = config.code.message_length();
    for (long long t = first; t < first + count; ++t) {
        auto rng = trial_rng(config.seed, uint64_t(point), uint64_t(t));
        auto message = BitVector(std::size_t(k));
        for (int b = 0; b < k; ++b) message.set(std::size_t(b), (rng() & 1) != 0);
        BitVector x = encode(config.code, message);
        auto llr = transmit(x, model, rng);
        DecodeResult res = decode_with(config, llr);
        std::size_t bit_errs = res.message.distance(message);
        if (bit_errs > 0 || !res.success) counts.block_errors++;
        counts.bit_errors += (long long)(bit_errs);
    }
    return counts;
}

} // namespace

SimResult run_bler(const SimConfig& config, const ProgressFn& progress) {
    validate_sim_config(config);
    int k = config.code.message_length();
    SimResult result;

    for (std::size_t point = 0; point < config.sweep.size(); ++point) {
        ChannelModel model;
        if (config.channel == ChannelKind::bi_awgn)
            model = config.esn0 ? ChannelModel::awgn_esn0(config.sweep[point])
                                : ChannelModel::awgn_ebn0(config.sweep[point], config.code.rate());
        else
            model = ChannelModel::bec(config.sweep[point]);

        PointResult pr;
        pr.param = config.sweep[point];
        auto start = std::chrono::steady_clock::now();

        const long long batch = 1024; // early stopping is checked on fixed batch
                                      // boundaries so results never depend on
                                      // the thread count
        while (pr.trials < config.max_trials &&
               (config.target_errors < 1 || pr.block_errors < config.target_errors)) {
            long long todo = std::min(batch, config.max_trials - pr.trials);
            int workers = std::max(1, config.threads);
            if (workers == 1 || todo < 64) {
                TrialCounts c = run_trials(config, model, point, pr.trials, todo);
                pr.block_errors += c.block_errors;
                pr.bit_errors += c.bit_errors;
            } else {
                std::vector<TrialCounts> partial(std::size_t(workers), TrialCounts{});
                std::vector<std::thread> pool;
                long long chunk = (todo + workers - 1) / workers;
                for (int w = 0; w < workers; ++w) {
                    long long first = pr.trials + w * chunk;
                    long long cnt = std::min(chunk, pr.trials + todo - first);
                    if (cnt <= 0) break;
                    pool.emplace_back([&, first, cnt, w] {
                        partial[std::size_t(w)] = run_trials(config, model, point, first, cnt);
                    });
                }
                for (auto& th : pool) th.join();
                for (const auto& c : partial) {
                    pr.block_errors += c.block_errors;
                    pr.bit_errors += c.bit_errors;
                }
            }
            pr.trials += todo;
        }

        pr.bler = double(pr.block_errors) / double(pr.trials);
        pr.ber = double(pr.bit_errors) / (double(pr.trials) * double(k));
        pr.ci95 = 1.96 * std::sqrt(pr.bler * (1.0 - pr.bler) / double(pr.trials));
        pr.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (progress) progress(pr);
        result.points.push_back(pr);
    }
    return result;
}

DeepPolarCode ca_polar_baseline(std::size_t n, int k, const CrcSpec& crc,
                                const ReliabilityProfile& profile) {
    DeepPolarCode code;
    code.layers.push_back(build_layer(int(n), k + crc.degree, 1, profile, 0, LayerDirection::forward));
    code.crc = crc;
    return code;
}

void write_csv(const SimResult& result, std::ostream& out) {
    out << "param,trials,block_errors,bler,ci95,bit_errors,ber,seconds\n";
    for (const auto& p : result.points) {
        out << p.param << ',' << p.trials << ',' << p.block_errors << ',' << p.bler << ','
            << p.ci95 << ',' << p.bit_errors << ',' << p.ber << ',' << p.seconds << '\n';
    }
}

SimConfig sim_config_from_json(const std::string& json_text, const std::string& base_dir) {
    nlohmann::json j = nlohmann::json::parse(json_text);
    SimConfig cfg;

    const auto& jcode = j.at("code");
    if (jcode.is_string()) {
        std::string path = jcode.get<std::string>();
        if (!path.empty() && path.front() != '/' && !base_dir.empty()) path = base_dir + "/" + path;
        cfg.code = load_code(path);
    } else {
        cfg.code = build_code(code_config_from_json(jcode.dump(), base_dir));
    }

    cfg.decoder = decoder_kind_from_string(j.value("decoder", std::string("scl-bpc")));
    cfg.list_size = j.value("list", 8);
    std::string chan = j.value("channel", std::string("awgn"));
    if (chan == "awgn") cfg.channel = ChannelKind::bi_awgn;
    else if (chan == "bec") cfg.channel = ChannelKind::bec;
    else throw std::invalid_argument("unknown channel \"" + chan + "\"");
    cfg.esn0 = j.value("esn0", false);
    cfg.sweep = j.at("sweep").get<std::vector<double>>();
    cfg.max_trials = j.value("max_trials", 100000LL);
    cfg.target_errors = j.value("target_errors", 200LL);
    cfg.seed = j.value("seed", uint64_t(1));
    return cfg;
}

SimConfig load_sim_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open sim config " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    auto slash = path.find_last_of('/');
    std::string dir = slash == std::string::npos ? std::string(".") : path.substr(0, slash);
    return sim_config_from_json(ss.str(), dir);
}

} // namespace deeppolar
