#include "deeppolar/codec.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstring>
#include <numeric>
#include <stdexcept>

namespace deeppolar {

namespace {

BitVector gather(const BitVector& v, const std::vector<int>& idx1) {
    BitVector out(idx1.size());
    for (std::size_t j = 0; j < idx1.size(); ++j) out.set(j, v.get(std::size_t(idx1[j] - 1)));
    return out;
}

void scatter(BitVector& v, const std::vector<int>& idx1, const BitVector& bits) {
    for (std::size_t j = 0; j < idx1.size(); ++j) v.set(std::size_t(idx1[j] - 1), bits.get(j));
}

BitVector extended_message(const DeepPolarCode& code, const BitVector& d) {
    if (int(d.size()) != code.message_length())
        throw std::invalid_argument("message length " + std::to_string(d.size()) + ", expected " +
                                    std::to_string(code.message_length()));
    return code.crc ? crc_append(d, *code.crc) : d;
}

/// Encode layers 1..L-1 and return the outer connection values v_{L-1}
/// (empty for a single layer code).
BitVector encode_inner_chain(const DeepPolarCode& code, const BitVector& d_inner) {
    BitVector v;
    std::size_t consumed = 0;
    for (int l = 0; l + 1 < code.num_layers(); ++l) {
        const auto& layer = code.layers[std::size_t(l)];
        auto u = BitVector(std::size_t(layer.n));
        for (int idx : layer.info_set) u.set(std::size_t(idx - 1), d_inner.get(consumed++));
        scatter(u, layer.conn_set, v);
        transpose_transform_inplace(u);
        v = std::move(u);
    }
    return v;
}

double f_update(double a, double b, bool min_sum) {
    double s = (std::signbit(a) == std::signbit(b)) ? 1.0 : -1.0;
    double m = std::min(std::fabs(a), std::fabs(b));
    if (min_sum) return s * m;
    return s * m + std::log1p(std::exp(-std::fabs(a + b))) - std::log1p(std::exp(-std::fabs(a - b)));
}

double g_update(double a, double b, bool left_bit) { return left_bit ? b - a : b + a; }

// Increments below e^-40 flush to zero so the true path on noiseless
// (+-kLlrMax) input scores exactly 0.
constexpr double kMetricFlush = 40.0;

double metric_increment(double eta, bool bit) {
    double x = bit ? -eta : eta;
    if (x >= kMetricFlush) return 0.0;
    if (x >= 0.0) return std::log1p(std::exp(-x));
    return -x + std::log1p(std::exp(x));
}

bool masked_parity(const BitVector& v, const BitVector& mask) {
    uint64_t acc = 0;
    const auto& vw = v.words();
    const auto& mw = mask.words();
    for (std::size_t i = 0; i < vw.size(); ++i) acc ^= vw[i] & mw[i];
    return std::popcount(acc) & 1;
}

enum : uint8_t { kClassInfo = 0, kClassConn = 1, kClassFrozen = 2 };

struct EnginePlan {
    int n = 0;                        ///< block length
    std::vector<uint8_t> is_frozen;   ///< per position
    BitVector frozen_values;
    std::vector<uint8_t> checkpoint;  ///< BPC runs after this position
    bool bpc = false;
};

struct PathState {
    std::vector<double> llr;        // stages 0..n-1, stage s at offset 2^s - 1
    std::vector<uint8_t> cbits;     // stages 0..n-1, two slots, offset 2(2^s - 1)
    std::vector<uint8_t> decisions; // length N
    std::vector<BitVector> bpc_src; // per inner layer: consumed connection bits
    std::vector<BitVector> bpc_rec; // per inner layer: recovered input prefix
    std::vector<int> bpc_consumed;
    double pm = 0.0;
    uint64_t serial = 0;
};

struct EngineOutcome {
    std::vector<FinalPath> paths; ///< sorted by (metric, serial)
    bool bpc_degraded = false;
    DecodeDiagnostics diag;
};

class SclEngine {
public:
    SclEngine(const DeepPolarCode& code, EnginePlan plan, int list_size, const SclOptions& opts)
        : code_(code), plan_(std::move(plan)), s_max_(list_size), opts_(opts) {
        if (list_size < 1) throw std::invalid_argument("list size must be at least 1");
        n_bits_ = std::size_t(plan_.n);
        stages_ = unsigned(std::countr_zero(uint64_t(n_bits_)));
        if (plan_.bpc) {
            int inner = code_.num_layers() - 1;
            class_of_.resize(std::size_t(inner));
            row_masks_.resize(std::size_t(inner));
            for (int l = 0; l < inner; ++l) {
                const auto& layer = code_.layers[std::size_t(l)];
                auto& cls = class_of_[std::size_t(l)];
                cls.assign(std::size_t(layer.n), kClassInfo);
                for (int idx : layer.conn_set) cls[std::size_t(idx - 1)] = kClassConn;
                for (int idx : layer.frozen_set) cls[std::size_t(idx - 1)] = kClassFrozen;
                auto& masks = row_masks_[std::size_t(l)];
                masks.reserve(std::size_t(layer.n));
                for (int c = 0; c < layer.n; ++c) {
                    auto m = BitVector(std::size_t(layer.n));
                    for (int i = 0; i <= c; ++i)
                        if ((i & c) == i) m.set(std::size_t(i), true);
                    masks.push_back(std::move(m));
                }
            }
        }
    }

    EngineOutcome run(const std::vector<double>& channel_llr) {
        if (channel_llr.size() != n_bits_) throw std::invalid_argument("LLR vector length mismatch");
        channel_ = &channel_llr;

        pool_.assign(std::size_t(2 * s_max_), PathState{});
        for (auto& p : pool_) init_path(p);
        free_.clear();
        for (std::size_t s = pool_.size(); s-- > 1;) free_.push_back(s);
        alive_.assign(1, 0);
        pool_[0].serial = 0;
        next_serial_ = 1;

        EngineOutcome out;
        for (std::size_t i = 0; i < n_bits_; ++i) {
            if (plan_.is_frozen[i]) {
                bool value = plan_.frozen_values.get(i);
                for (std::size_t slot : alive_) {
                    PathState& p = pool_[slot];
                    double eta = compute_llr(p, i);
                    p.pm += metric_increment(eta, value);
                    record_decision(p, i, value);
                }
            } else {
                std::size_t count = alive_.size();
                for (std::size_t a = 0; a < count; ++a) {
                    std::size_t slot = alive_[a];
                    PathState& p = pool_[slot];
                    double eta = compute_llr(p, i);
                    std::size_t clone = free_.back();
                    free_.pop_back();
                    pool_[clone] = p;
                    pool_[clone].serial = next_serial_++;
                    p.pm += metric_increment(eta, false);
                    record_decision(p, i, false);
                    pool_[clone].pm += metric_increment(eta, true);
                    record_decision(pool_[clone], i, true);
                    alive_.push_back(clone);
                }
            }

            if (plan_.bpc && plan_.checkpoint[i] && !bpc_disabled_) {
                std::vector<std::size_t> passed, failed;
                for (std::size_t slot : alive_) {
                    bool ok = advance_bpc(pool_[slot], pool_[slot].decisions[i] != 0);
                    if (opts_.full_bpc_recheck) recheck(pool_[slot], i, ok);
                    (ok ? passed : failed).push_back(slot);
                }
                if (passed.empty()) {
                    // Algorithm would empty the list; keep every path alive,
                    // stop checking and report the decode as failed.
                    out.bpc_degraded = true;
                    bpc_disabled_ = true;
                } else {
                    out.diag.paths_killed_bpc += (long long)(failed.size());
                    for (std::size_t slot : failed) free_.push_back(slot);
                    alive_ = std::move(passed);
                }
            }

            if (int(alive_.size()) > s_max_) {
                std::sort(alive_.begin(), alive_.end(), [&](std::size_t a, std::size_t b) {
                    if (pool_[a].pm != pool_[b].pm) return pool_[a].pm < pool_[b].pm;
                    return pool_[a].serial < pool_[b].serial;
                });
                out.diag.paths_pruned += (long long)(alive_.size()) - s_max_;
                for (std::size_t a = std::size_t(s_max_); a < alive_.size(); ++a) free_.push_back(alive_[a]);
                alive_.resize(std::size_t(s_max_));
            }

            if (opts_.trace) snapshot_trace(i);
        }

        std::sort(alive_.begin(), alive_.end(), [&](std::size_t a, std::size_t b) {
            if (pool_[a].pm != pool_[b].pm) return pool_[a].pm < pool_[b].pm;
            return pool_[a].serial < pool_[b].serial;
        });
        for (std::size_t slot : alive_) {
            FinalPath fp;
            fp.u_last = BitVector(n_bits_);
            for (std::size_t i = 0; i < n_bits_; ++i)
                if (pool_[slot].decisions[i]) fp.u_last.set(i, true);
            fp.metric = pool_[slot].pm;
            out.paths.push_back(std::move(fp));
        }
        return out;
    }

private:
    void init_path(PathState& p) {
        p.llr.assign(n_bits_ - 1, 0.0);
        p.cbits.assign(2 * (n_bits_ - 1), 0);
        p.decisions.assign(n_bits_, 0);
        p.pm = 0.0;
        if (plan_.bpc) {
            int inner = code_.num_layers() - 1;
            p.bpc_src.clear();
            p.bpc_rec.clear();
            p.bpc_consumed.assign(std::size_t(inner), 0);
            for (int l = 0; l < inner; ++l) {
                p.bpc_src.emplace_back(std::size_t(code_.layers[std::size_t(l)].n));
                p.bpc_rec.emplace_back(std::size_t(code_.layers[std::size_t(l)].n));
            }
        }
    }

    static std::size_t llr_offset(unsigned s) { return (std::size_t(1) << s) - 1; }
    static std::size_t cbits_offset(unsigned s) { return 2 * ((std::size_t(1) << s) - 1); }

    double compute_llr(PathState& p, std::size_t i) {
        bool ms = opts_.min_sum;
        if (i == 0) {
            for (unsigned s = stages_; s-- > 0;) {
                std::size_t half = std::size_t(1) << s;
                const double* src = (s + 1 == stages_) ? channel_->data() : p.llr.data() + llr_offset(s + 1);
                double* dst = p.llr.data() + llr_offset(s);
                for (std::size_t j = 0; j < half; ++j) dst[j] = f_update(src[j], src[j + half], ms);
            }
        } else {
            unsigned t = unsigned(std::countr_zero(uint64_t(i)));
            std::size_t half = std::size_t(1) << t;
            const double* src = (t + 1 == stages_) ? channel_->data() : p.llr.data() + llr_offset(t + 1);
            const uint8_t* left = p.cbits.data() + cbits_offset(t); // slot 0
            double* dst = p.llr.data() + llr_offset(t);
            for (std::size_t j = 0; j < half; ++j) dst[j] = g_update(src[j], src[j + half], left[j] != 0);
            for (unsigned s = t; s-- > 0;) {
                std::size_t h = std::size_t(1) << s;
                const double* up = p.llr.data() + llr_offset(s + 1);
                double* d2 = p.llr.data() + llr_offset(s);
                for (std::size_t j = 0; j < h; ++j) d2[j] = f_update(up[j], up[j + h], ms);
            }
        }
        return p.llr[0];
    }

    void record_decision(PathState& p, std::size_t i, bool value) {
        p.decisions[i] = value ? 1 : 0;
        p.cbits[cbits_offset(0) + (i & 1)] = value ? 1 : 0;
        unsigned s = 0;
        while (((i >> s) & 1) && s + 1 < stages_) {
            std::size_t half = std::size_t(1) << s;
            std::size_t b = (i >> (s + 1)) & 1;
            const uint8_t* left = p.cbits.data() + cbits_offset(s);
            const uint8_t* right = left + half;
            uint8_t* dst = p.cbits.data() + cbits_offset(s + 1) + b * 2 * half;
            for (std::size_t j = 0; j < half; ++j) {
                dst[j] = left[j] ^ right[j];
                dst[j + half] = right[j];
            }
            ++s;
        }
    }

    bool advance_bpc(PathState& p, bool bit) {
        int li = code_.num_layers() - 2;
        bool b = bit;
        while (true) {
            int c = p.bpc_consumed[std::size_t(li)];
            p.bpc_src[std::size_t(li)].set(std::size_t(c), b);
            bool par = masked_parity(p.bpc_src[std::size_t(li)], row_masks_[std::size_t(li)][std::size_t(c)]);
            p.bpc_rec[std::size_t(li)].set(std::size_t(c), par);
            p.bpc_consumed[std::size_t(li)] = c + 1;
            uint8_t cls = class_of_[std::size_t(li)][std::size_t(c)];
            if (cls == kClassFrozen) return !par;
            if (cls == kClassConn) {
                b = par;
                --li;
                continue;
            }
            return true;
        }
    }

    void recheck(const PathState& p, std::size_t i, bool incremental_ok) const {
        BitVector prefix(i + 1);
        for (std::size_t j = 0; j <= i; ++j)
            if (p.decisions[j]) prefix.set(j, true);
        bool full = bpc_prefix_check(code_, prefix);
        // A path that failed an earlier incremental step has already been
        // removed, so on live paths the two must agree.
        if (full != incremental_ok)
            throw std::logic_error("incremental parity check disagrees with full recomputation");
    }

    void snapshot_trace(std::size_t i) {
        std::vector<DecoderPath> step;
        for (std::size_t slot : alive_) {
            const PathState& p = pool_[slot];
            DecoderPath dp;
            dp.decoded_prefix = BitVector(i + 1);
            for (std::size_t j = 0; j <= i; ++j)
                if (p.decisions[j]) dp.decoded_prefix.set(j, true);
            dp.path_metric = p.pm;
            for (std::size_t l = 0; l < p.bpc_rec.size(); ++l) {
                LayerPrefixState st;
                st.consumed = p.bpc_consumed[l];
                st.recovered = BitVector(std::size_t(p.bpc_consumed[l]));
                for (int c = 0; c < p.bpc_consumed[l]; ++c)
                    st.recovered.set(std::size_t(c), p.bpc_rec[l].get(std::size_t(c)));
                dp.layer_state.push_back(std::move(st));
            }
            step.push_back(std::move(dp));
        }
        opts_.trace->steps.push_back(std::move(step));
    }

    const DeepPolarCode& code_;
    EnginePlan plan_;
    int s_max_;
    SclOptions opts_;
    std::size_t n_bits_ = 0;
    unsigned stages_ = 0;
    const std::vector<double>* channel_ = nullptr;
    std::vector<PathState> pool_;
    std::vector<std::size_t> free_;
    std::vector<std::size_t> alive_;
    uint64_t next_serial_ = 0;
    bool bpc_disabled_ = false;
    std::vector<std::vector<uint8_t>> class_of_;          // per inner layer
    std::vector<std::vector<BitVector>> row_masks_;       // per inner layer
};

EnginePlan deep_plan(const DeepPolarCode& code) {
    const auto& outer = code.layers.back();
    EnginePlan plan;
    plan.n = outer.n;
    plan.is_frozen.assign(std::size_t(outer.n), 0);
    plan.frozen_values = BitVector(std::size_t(outer.n));
    plan.checkpoint.assign(std::size_t(outer.n), 0);
    for (int idx : outer.frozen_set) plan.is_frozen[std::size_t(idx - 1)] = 1;
    for (int idx : outer.conn_set) plan.checkpoint[std::size_t(idx - 1)] = 1;
    plan.bpc = code.num_layers() > 1;
    return plan;
}

DecodeResult assemble_result(const DeepPolarCode& code, const BitVector& d_ext, bool success,
                             double metric, const DecodeDiagnostics& diag) {
    DecodeResult res;
    res.layer_bits = split_message(d_ext, code);
    res.message = BitVector(std::size_t(code.message_length()));
    for (std::size_t i = 0; i < res.message.size(); ++i) res.message.set(i, d_ext.get(i));
    res.success = success;
    res.best_metric = metric;
    res.diag = diag;
    return res;
}

} // namespace

std::vector<BitVector> split_message(const BitVector& d_ext, const DeepPolarCode& code) {
    if (int(d_ext.size()) != code.info_total())
        throw std::invalid_argument("extended message carries " + std::to_string(d_ext.size()) +
                                    " bits, expected " + std::to_string(code.info_total()));
    std::vector<BitVector> parts;
    std::size_t off = 0;
    for (const auto& layer : code.layers) {
        auto part = BitVector(std::size_t(layer.k));
        for (int j = 0; j < layer.k; ++j) part.set(std::size_t(j), d_ext.get(off++));
        parts.push_back(std::move(part));
    }
    return parts;
}

BitVector encode(const DeepPolarCode& code, const BitVector& d) {
    BitVector d_ext = extended_message(code, d);
    const auto& outer = code.layers.back();
    std::size_t inner_bits = std::size_t(code.info_total() - outer.k);

    BitVector d_inner(inner_bits), d_outer(std::size_t(outer.k));
    for (std::size_t i = 0; i < inner_bits; ++i) d_inner.set(i, d_ext.get(i));
    for (int j = 0; j < outer.k; ++j) d_outer.set(std::size_t(j), d_ext.get(inner_bits + std::size_t(j)));

    BitVector v = encode_inner_chain(code, d_inner);
    auto u = BitVector(std::size_t(outer.n));
    scatter(u, outer.info_set, d_outer);
    scatter(u, outer.conn_set, v);
    polar_transform_inplace(u);
    return u;
}

BitVector extract_extended_message(const DeepPolarCode& code, const BitVector& u_last) {
    int layer_count = code.num_layers();
    std::vector<BitVector> inputs;
    inputs.resize(std::size_t(layer_count));
    inputs.back() = u_last;
    for (int l = layer_count - 1; l > 0; --l)
        inputs[std::size_t(l - 1)] = transpose_transform(gather(inputs[std::size_t(l)], code.layers[std::size_t(l)].conn_set));

    BitVector d_ext(std::size_t(code.info_total()));
    std::size_t off = 0;
    for (int l = 0; l < layer_count; ++l) {
        BitVector bits = gather(inputs[std::size_t(l)], code.layers[std::size_t(l)].info_set);
        for (std::size_t j = 0; j < bits.size(); ++j) d_ext.set(off++, bits.get(j));
    }
    return d_ext;
}

bool bpc_prefix_check(const DeepPolarCode& code, const BitVector& u_last_prefix) {
    int layer_count = code.num_layers();
    if (layer_count < 2) return true;
    std::size_t upto = u_last_prefix.size();

    // connection bits of the outer layer available in the prefix
    std::vector<uint8_t> conn;
    for (int idx : code.layers.back().conn_set)
        if (std::size_t(idx) <= upto) conn.push_back(u_last_prefix.get(std::size_t(idx - 1)) ? 1 : 0);

    for (int l = layer_count - 2; l >= 0; --l) {
        if (conn.empty()) return true;
        const auto& layer = code.layers[std::size_t(l)];
        BitVector rec = transpose_transform_prefix(BitVector::from_bits(conn), std::size_t(layer.n));
        for (int idx : layer.frozen_set)
            if (std::size_t(idx) <= rec.size() && rec.get(std::size_t(idx - 1))) return false;
        std::vector<uint8_t> next;
        for (int idx : layer.conn_set)
            if (std::size_t(idx) <= rec.size()) next.push_back(rec.get(std::size_t(idx - 1)) ? 1 : 0);
        conn = std::move(next);
    }
    return true;
}

SclOutcome scl_bpc_decode_full(const DeepPolarCode& code, const std::vector<double>& llr,
                               int list_size, const SclOptions& options) {
    SclEngine engine(code, deep_plan(code), list_size, options);
    EngineOutcome out = engine.run(llr);

    SclOutcome outcome;
    outcome.paths = out.paths;

    // best path; prefer CRC-passing paths when a CRC is configured
    std::size_t best = 0;
    bool crc_ok = false;
    if (code.crc) {
        for (std::size_t p = 0; p < out.paths.size(); ++p) {
            BitVector d_ext = extract_extended_message(code, out.paths[p].u_last);
            if (crc_check(d_ext, *code.crc)) {
                best = p;
                crc_ok = true;
                break;
            }
        }
    }
    BitVector d_ext = extract_extended_message(code, out.paths[best].u_last);
    bool success = !out.bpc_degraded && (!code.crc || crc_ok);
    outcome.result = assemble_result(code, d_ext, success, out.paths[best].metric, out.diag);
    return outcome;
}

DecodeResult scl_bpc_decode(const DeepPolarCode& code, const std::vector<double>& llr,
                            int list_size, const SclOptions& options) {
    return scl_bpc_decode_full(code, llr, list_size, options).result;
}

std::size_t parallel_scl_hypothesis_count(const DeepPolarCode& code) {
    int h = code.info_total() - code.layers.back().k;
    if (h >= 63) throw std::invalid_argument("connection bit pattern count overflows");
    return std::size_t(1) << h;
}

DecodeResult parallel_scl_decode(const DeepPolarCode& code, const std::vector<double>& llr,
                                 int list_size, std::size_t hypothesis_budget,
                                 const SclOptions& options) {
    std::size_t hyp_count = parallel_scl_hypothesis_count(code);
    if (hyp_count > hypothesis_budget)
        throw std::invalid_argument(std::to_string(hyp_count) +
                                    " connection bit patterns exceed the hypothesis budget of " +
                                    std::to_string(hypothesis_budget));
    const auto& outer = code.layers.back();
    std::size_t inner_bits = std::size_t(code.info_total() - outer.k);

    EnginePlan plan;
    plan.n = outer.n;
    plan.is_frozen.assign(std::size_t(outer.n), 0);
    plan.frozen_values = BitVector(std::size_t(outer.n));
    plan.checkpoint.assign(std::size_t(outer.n), 0);
    plan.bpc = false;
    for (int idx : outer.frozen_set) plan.is_frozen[std::size_t(idx - 1)] = 1;
    for (int idx : outer.conn_set) plan.is_frozen[std::size_t(idx - 1)] = 1;

    DecodeDiagnostics diag;
    bool have_best = false, best_crc = false;
    double best_metric = 0.0;
    BitVector best_d_ext;

    for (std::size_t j = 0; j < hyp_count; ++j) {
        BitVector d_inner(inner_bits);
        for (std::size_t p = 0; p < inner_bits; ++p) d_inner.set(p, (j >> p) & 1);
        BitVector v = encode_inner_chain(code, d_inner);
        for (std::size_t c = 0; c < outer.conn_set.size(); ++c)
            plan.frozen_values.set(std::size_t(outer.conn_set[c] - 1), v.get(c));

        SclEngine engine(code, plan, list_size, options);
        EngineOutcome out = engine.run(llr);
        diag.paths_pruned += out.diag.paths_pruned;

        for (std::size_t p = 0; p < out.paths.size(); ++p) {
            BitVector d_ext(std::size_t(code.info_total()));
            for (std::size_t q = 0; q < inner_bits; ++q) d_ext.set(q, d_inner.get(q));
            BitVector outer_bits = gather(out.paths[p].u_last, outer.info_set);
            for (std::size_t q = 0; q < outer_bits.size(); ++q) d_ext.set(inner_bits + q, outer_bits.get(q));

            bool crc_ok = code.crc ? crc_check(d_ext, *code.crc) : true;
            double metric = out.paths[p].metric;
            bool better = !have_best || (crc_ok && !best_crc) ||
                          (crc_ok == best_crc && metric < best_metric);
            if (better) {
                have_best = true;
                best_crc = crc_ok;
                best_metric = metric;
                best_d_ext = d_ext;
            }
            if (!code.crc) break; // only the best path per hypothesis matters
            if (crc_ok) break;    // most reliable CRC-passing path of this run
        }
    }

    bool success = !code.crc || best_crc;
    return assemble_result(code, best_d_ext, success, best_metric, diag);
}

namespace {

/// Minimize sum of weights over set codeword bits, which maximizes the
/// correlation sum (1-2c_i) w_i. Gray-ordered message enumeration with a
/// byte lookup table for the per-codeword sum.
DecodeResult ml_minimize(const DeepPolarCode& code, const std::vector<double>& weights) {
    int k = code.message_length();
    if (k > kMlEnumerationGuard)
        throw std::invalid_argument("2^" + std::to_string(k) + " messages exceed the enumeration guard");
    std::size_t n = std::size_t(code.block_length());
    if (weights.size() != n) throw std::invalid_argument("weight vector length mismatch");

    std::vector<BitVector> rows;
    rows.reserve(std::size_t(k));
    for (int b = 0; b < k; ++b) {
        auto e = BitVector(std::size_t(k));
        e.set(std::size_t(b), true);
        rows.push_back(encode(code, e));
    }

    std::size_t n_bytes = (n + 7) / 8;
    std::vector<double> lut(n_bytes * 256, 0.0);
    for (std::size_t b = 0; b < n_bytes; ++b)
        for (unsigned v = 1; v < 256; ++v) {
            unsigned low = v & (v - 1);
            unsigned bit = unsigned(std::countr_zero(v));
            std::size_t pos = 8 * b + bit;
            lut[b * 256 + v] = lut[b * 256 + low] + (pos < n ? weights[pos] : 0.0);
        }

    auto score = [&](const BitVector& cw) {
        double s = 0.0;
        const auto& w = cw.words();
        for (std::size_t b = 0; b < n_bytes; ++b) {
            unsigned byte = unsigned((w[b >> 3] >> ((b & 7) * 8)) & 0xFF);
            s += lut[b * 256 + byte];
        }
        return s;
    };

    auto message_of = [&](uint64_t gray) {
        auto m = BitVector(std::size_t(k));
        for (int b = 0; b < k; ++b)
            if ((gray >> b) & 1) m.set(std::size_t(b), true);
        return m;
    };

    BitVector cw(n); // all-zero message
    double best_score = score(cw);
    uint64_t best_gray = 0;
    uint64_t total = uint64_t(1) << k;
    uint64_t prev_gray = 0;
    for (uint64_t m = 1; m < total; ++m) {
        uint64_t gray = m ^ (m >> 1);
        unsigned flip = unsigned(std::countr_zero(gray ^ prev_gray));
        prev_gray = gray;
        cw ^= rows[flip];
        double s = score(cw);
        if (s < best_score ||
            (s == best_score && message_of(gray).lex_less(message_of(best_gray)))) {
            best_score = s;
            best_gray = gray;
        }
    }

    BitVector message = message_of(best_gray);
    BitVector d_ext = code.crc ? crc_append(message, *code.crc) : message;
    double total_weight = 0.0;
    for (double w : weights) total_weight += w;
    // report the correlation-style metric: smaller is better, 0 for the max
    DecodeResult res = assemble_result(code, d_ext, true, 2.0 * best_score - total_weight, {});
    return res;
}

} // namespace

DecodeResult ml_decode_llr(const DeepPolarCode& code, const std::vector<double>& llr) {
    return ml_minimize(code, llr);
}

DecodeResult ml_decode_awgn(const DeepPolarCode& code, const std::vector<double>& y) {
    return ml_minimize(code, y);
}

BecMlOutcome ml_decode_bec(const DeepPolarCode& code, const std::vector<double>& llr) {
    std::size_t n = std::size_t(code.block_length());
    if (llr.size() != n) throw std::invalid_argument("LLR vector length mismatch");
    int k = code.message_length();

    std::vector<BitVector> rows;
    rows.reserve(std::size_t(k));
    for (int b = 0; b < k; ++b) {
        auto e = BitVector(std::size_t(k));
        e.set(std::size_t(b), true);
        rows.push_back(encode(code, e));
    }

    std::vector<std::size_t> known;
    for (std::size_t i = 0; i < n; ++i)
        if (llr[i] != 0.0) known.push_back(i);

    Gf2Matrix a(known.size(), std::size_t(k));
    BitVector b(known.size());
    for (std::size_t r = 0; r < known.size(); ++r) {
        for (int c = 0; c < k; ++c)
            if (rows[std::size_t(c)].get(known[r])) a.set(r, std::size_t(c), true);
        b.set(r, llr[known[r]] < 0.0);
    }

    Gf2Solution sol = gf2_solve(a, b);
    BitVector message = sol.x;
    BitVector d_ext = code.crc ? crc_append(message, *code.crc) : message;

    BecMlOutcome out;
    out.status = sol.status;
    out.result = assemble_result(code, d_ext, sol.status == SolveStatus::unique, 0.0, {});
    return out;
}

} // namespace deeppolar
