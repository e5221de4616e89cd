#include "deeppolar/construction.hpp"

#include <json.hpp>

#include <algorithm>
#include <bit>
#include <fstream>
#include <sstream>

namespace deeppolar {

namespace {

bool is_pow2(int v) { return v > 0 && (v & (v - 1)) == 0; }

std::vector<int> mask_indices(std::size_t n, std::size_t d_min, LayerDirection dir) {
    std::vector<int> out;
    for (std::size_t i = 1; i <= n; ++i) {
        std::size_t w = dir == LayerDirection::forward ? row_weight(n, i) : transpose_row_weight(n, i);
        if (w >= d_min) out.push_back(int(i));
    }
    return out;
}

} // namespace

int DeepPolarCode::info_total() const {
    int k = 0;
    for (const auto& l : layers) k += l.k;
    return k;
}

int DeepPolarCode::message_length() const { return info_total() - crc_bits(); }

std::vector<int> rm_mask(std::size_t n, std::size_t d_min) {
    if (d_min < 1) throw std::invalid_argument("d_min must be at least 1");
    return mask_indices(n, d_min, LayerDirection::forward);
}

std::vector<int> transpose_rm_mask(std::size_t n, std::size_t d_min) {
    if (d_min < 1) throw std::invalid_argument("d_min must be at least 1");
    return mask_indices(n, d_min, LayerDirection::transpose);
}

LayerSpec build_layer(int n, int k, int d_min, const ReliabilityProfile& profile,
                      int n_prev, LayerDirection direction) {
    if (profile.n != std::size_t(n))
        throw std::invalid_argument("profile blocklength does not match the layer");
    if (k < 0 || n_prev < 0) throw std::invalid_argument("negative layer size");
    if (!is_pow2(d_min)) throw std::invalid_argument("d_min must be a power of two");

    auto mask = mask_indices(std::size_t(n), std::size_t(d_min), direction);
    if (int(mask.size()) < k + n_prev)
        throw construction_error("layer (" + std::to_string(n) + "," + std::to_string(k) +
                                 "): mask for d_min=" + std::to_string(d_min) + " holds " +
                                 std::to_string(mask.size()) + " indices, needs k + N_prev = " +
                                 std::to_string(k + n_prev));

    auto order = profile.order_descending();
    std::vector<char> in_mask(std::size_t(n) + 1, 0);
    for (int i : mask) in_mask[std::size_t(i)] = 1;

    LayerSpec layer;
    layer.n = n;
    layer.k = k;
    layer.d_min = d_min;
    layer.direction = direction;

    int taken = 0;
    std::vector<char> used(std::size_t(n) + 1, 0);
    for (int idx : order) {
        if (!in_mask[std::size_t(idx)]) continue;
        if (taken < k) layer.info_set.push_back(idx);
        else if (taken < k + n_prev) layer.conn_set.push_back(idx);
        else break;
        used[std::size_t(idx)] = 1;
        ++taken;
    }
    for (int i = 1; i <= n; ++i)
        if (!used[std::size_t(i)]) layer.frozen_set.push_back(i);

    std::sort(layer.info_set.begin(), layer.info_set.end());
    std::sort(layer.conn_set.begin(), layer.conn_set.end());
    return layer;
}

namespace {

int auto_d_min(int n, int needed, LayerDirection dir) {
    for (int d = n; d >= 1; d >>= 1)
        if (int(mask_indices(std::size_t(n), std::size_t(d), dir).size()) >= needed) return d;
    throw construction_error("layer of length " + std::to_string(n) + " cannot host " +
                             std::to_string(needed) + " non-frozen indices");
}

LayerSpec explicit_layer(const LayerConfig& cfg, int n_prev, LayerDirection dir) {
    LayerSpec layer;
    layer.n = cfg.n;
    layer.k = cfg.k;
    layer.direction = dir;
    layer.info_set = cfg.info;
    layer.conn_set = cfg.conn;
    std::sort(layer.info_set.begin(), layer.info_set.end());
    std::sort(layer.conn_set.begin(), layer.conn_set.end());
    if (int(layer.info_set.size()) != cfg.k)
        throw construction_error("layer (" + std::to_string(cfg.n) + "," + std::to_string(cfg.k) +
                                 "): explicit info set has " + std::to_string(layer.info_set.size()) +
                                 " indices");
    if (int(layer.conn_set.size()) != n_prev)
        throw construction_error("layer " + std::to_string(cfg.n) + ": explicit connection set needs " +
                                 std::to_string(n_prev) + " indices");

    std::vector<char> used(std::size_t(cfg.n) + 1, 0);
    std::size_t min_weight = std::size_t(cfg.n);
    auto take = [&](int idx) {
        if (idx < 1 || idx > cfg.n || used[std::size_t(idx)])
            throw construction_error("layer " + std::to_string(cfg.n) + ": bad explicit index " +
                                     std::to_string(idx));
        used[std::size_t(idx)] = 1;
        std::size_t w = dir == LayerDirection::forward
                            ? row_weight(std::size_t(cfg.n), std::size_t(idx))
                            : transpose_row_weight(std::size_t(cfg.n), std::size_t(idx));
        min_weight = std::min(min_weight, w);
    };
    for (int idx : layer.info_set) take(idx);
    for (int idx : layer.conn_set) take(idx);
    for (int idx = 1; idx <= cfg.n; ++idx)
        if (!used[std::size_t(idx)]) layer.frozen_set.push_back(idx);

    // row weights are powers of two, so the smallest selected weight is the
    // realized d_min; an explicit d_min is only checked, never relaxed
    layer.d_min = int(min_weight);
    if (cfg.d_min != 0) {
        if (int(min_weight) < cfg.d_min)
            throw construction_error("layer " + std::to_string(cfg.n) + ": explicit set violates d_min " +
                                     std::to_string(cfg.d_min));
        layer.d_min = cfg.d_min;
    }
    return layer;
}

} // namespace

DeepPolarCode build_code(const CodeConfig& config) {
    if (config.layers.empty()) throw construction_error("code needs at least one layer");

    auto layers = config.layers;
    std::sort(layers.begin(), layers.end(), [](const LayerConfig& a, const LayerConfig& b) { return a.n < b.n; });
    for (std::size_t i = 0; i < layers.size(); ++i) {
        if (!is_pow2(layers[i].n))
            throw construction_error("layer blocklength " + std::to_string(layers[i].n) + " is not a power of two");
        if (i > 0 && layers[i].n == layers[i - 1].n)
            throw construction_error("layer blocklengths must be strictly increasing");
    }

    int info_total = 0;
    for (const auto& l : layers) info_total += l.k;
    int crc_bits = config.crc ? config.crc->degree : 0;
    int k_message = info_total - crc_bits;
    if (k_message < 1)
        throw construction_error("message length " + std::to_string(k_message) +
                                 " after removing CRC bits must be positive");

    int n_block = layers.back().n;
    double rate = double(k_message) / n_block;

    DeepPolarCode code;
    code.crc = config.crc;
    int n_prev = 0;
    for (std::size_t i = 0; i < layers.size(); ++i) {
        bool outer = (i + 1 == layers.size());
        auto dir = outer ? LayerDirection::forward : LayerDirection::transpose;
        if (!layers[i].info.empty()) {
            code.layers.push_back(explicit_layer(layers[i], n_prev, dir));
        } else {
            int d = layers[i].d_min;
            if (d == 0) d = auto_d_min(layers[i].n, layers[i].k + n_prev, dir);
            auto profile = outer ? config.profile.build(std::size_t(layers[i].n), rate)
                                 : config.profile.build_inner(std::size_t(layers[i].n), rate);
            code.layers.push_back(build_layer(layers[i].n, layers[i].k, d, profile, n_prev, dir));
        }
        n_prev = layers[i].n;
    }
    return code;
}

CodeConfig code_config_from_json(const std::string& json_text, const std::string& base_dir) {
    nlohmann::json j = nlohmann::json::parse(json_text);
    CodeConfig cfg;
    for (const auto& jl : j.at("layers")) {
        LayerConfig lc;
        lc.n = jl.at("n").get<int>();
        lc.k = jl.at("k").get<int>();
        if (jl.contains("dmin") && !jl["dmin"].is_null()) lc.d_min = jl["dmin"].get<int>();
        if (jl.contains("info") && !jl["info"].is_null()) lc.info = jl["info"].get<std::vector<int>>();
        if (jl.contains("conn") && !jl["conn"].is_null()) lc.conn = jl["conn"].get<std::vector<int>>();
        cfg.layers.push_back(lc);
    }
    cfg.profile = ProfileSpec::parse(j.at("profile").get<std::string>());
    if (cfg.profile.kind == ProfileKind::rank_order && !base_dir.empty()) {
        const std::string& p = cfg.profile.sequence_path;
        if (p != "5g" && p != "5G" && !p.empty() && p.front() != '/')
            cfg.profile.sequence_path = base_dir + "/" + p;
    }
    if (j.contains("crc") && !j["crc"].is_null())
        cfg.crc = CrcSpec::from_hex(j["crc"].get<std::string>());
    return cfg;
}

CodeConfig load_code_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open code config " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    auto slash = path.find_last_of('/');
    std::string dir = slash == std::string::npos ? std::string(".") : path.substr(0, slash);
    return code_config_from_json(ss.str(), dir);
}

DeepPolarCode load_code(const std::string& path) { return build_code(load_code_config(path)); }

namespace {

// nested_positions[l][j] = 0-based position within u_L of element j+1 of
// layer l's input vector; the outermost layer maps to itself.
std::vector<std::vector<int>> nested_positions(const DeepPolarCode& code) {
    int layer_count = code.num_layers();
    std::vector<std::vector<int>> pos;
    pos.resize(std::size_t(layer_count));
    auto& outer = pos[std::size_t(layer_count - 1)];
    outer.resize(std::size_t(code.block_length()));
    for (int j = 0; j < code.block_length(); ++j) outer[std::size_t(j)] = j;
    for (int l = layer_count - 2; l >= 0; --l) {
        const auto& conn_above = code.layers[std::size_t(l + 1)].conn_set;
        const auto& above = pos[std::size_t(l + 1)];
        auto& cur = pos[std::size_t(l)];
        cur.resize(conn_above.size());
        for (std::size_t j = 0; j < conn_above.size(); ++j)
            cur[j] = above[std::size_t(conn_above[j] - 1)];
    }
    return pos;
}

} // namespace

BitVector pretransform_input_vector(const DeepPolarCode& code, const BitVector& d_ext) {
    if (int(d_ext.size()) != code.info_total())
        throw std::invalid_argument("extended message length mismatch");
    auto pos = nested_positions(code);
    BitVector w(std::size_t(code.block_length()));
    std::size_t consumed = 0;
    for (int l = 0; l < code.num_layers(); ++l) {
        const auto& layer = code.layers[std::size_t(l)];
        for (int idx : layer.info_set)
            w.set(std::size_t(pos[std::size_t(l)][std::size_t(idx - 1)]), d_ext.get(consumed++));
    }
    return w;
}

Gf2Matrix unified_pretransform(const DeepPolarCode& code) {
    std::size_t n = std::size_t(code.block_length());
    auto pos = nested_positions(code);

    std::vector<char> outer_frozen(n, 0);
    for (int idx : code.layers.back().frozen_set) outer_frozen[std::size_t(idx - 1)] = 1;

    Gf2Matrix t(n, n);
    for (std::size_t r = 0; r < n; ++r) {
        if (outer_frozen[r]) continue;
        BitVector w(n);
        w.set(r, true);
        for (int l = 0; l + 1 < code.num_layers(); ++l) {
            const auto& p = pos[std::size_t(l)];
            BitVector sub(p.size());
            for (std::size_t j = 0; j < p.size(); ++j) sub.set(j, w.get(std::size_t(p[j])));
            transpose_transform_inplace(sub);
            for (std::size_t j = 0; j < p.size(); ++j) w.set(std::size_t(p[j]), sub.get(j));
        }
        for (std::size_t c = 0; c < n; ++c)
            if (w.get(c)) t.set(r, c, true);
    }
    return t;
}

} // namespace deeppolar
