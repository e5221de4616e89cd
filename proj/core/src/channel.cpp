#include "deeppolar/channel.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace deeppolar {

double ChannelModel::sigma2() const {
    if (kind != ChannelKind::bi_awgn) throw std::logic_error("sigma2 on a non-AWGN channel");
    double es_n0 = param_is_esn0 ? std::pow(10.0, param / 10.0)
                                 : rate * std::pow(10.0, param / 10.0);
    return 1.0 / (2.0 * es_n0);
}

namespace {

uint64_t splitmix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

} // namespace

std::mt19937_64 trial_rng(uint64_t seed, uint64_t point, uint64_t trial) {
    uint64_t s = splitmix64(seed ^ splitmix64(point ^ splitmix64(trial)));
    return std::mt19937_64(s);
}

std::vector<double> transmit_awgn_observations(const BitVector& x, const ChannelModel& model,
                                               std::mt19937_64& rng) {
    double sigma = std::sqrt(model.sigma2());
    std::normal_distribution<double> noise(0.0, sigma);
    std::vector<double> y(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) y[i] = (x.get(i) ? -1.0 : 1.0) + noise(rng);
    return y;
}

std::vector<double> transmit(const BitVector& x, const ChannelModel& model, std::mt19937_64& rng) {
    std::vector<double> llr(x.size());
    if (model.kind == ChannelKind::bi_awgn) {
        if (std::isinf(model.param)) { // noiseless sentinel
            for (std::size_t i = 0; i < x.size(); ++i) llr[i] = x.get(i) ? -kLlrMax : kLlrMax;
            return llr;
        }
        double sigma_sq = model.sigma2();
        auto y = transmit_awgn_observations(x, model, rng);
        for (std::size_t i = 0; i < x.size(); ++i)
            llr[i] = std::clamp(2.0 * y[i] / sigma_sq, -kLlrMax, kLlrMax);
    } else {
        if (!(model.param >= 0.0 && model.param <= 1.0))
            throw std::invalid_argument("erasure probability must be in [0,1]");
        std::uniform_real_distribution<double> unif(0.0, 1.0);
        for (std::size_t i = 0; i < x.size(); ++i) {
            bool erased = unif(rng) < model.param;
            llr[i] = erased ? 0.0 : (x.get(i) ? -kLlrMax : kLlrMax);
        }
    }
    return llr;
}

double q_function(double x) { return 0.5 * std::erfc(x / std::sqrt(2.0)); }

} // namespace deeppolar
