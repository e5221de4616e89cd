#include "deeppolar/crc.hpp"

#include <bit>
#include <stdexcept>

namespace deeppolar {

CrcSpec CrcSpec::from_poly(uint64_t poly) {
    if (poly < 2) throw std::invalid_argument("CRC polynomial must have positive degree");
    if (!(poly & 1)) throw std::invalid_argument("CRC polynomial needs a nonzero constant term");
    CrcSpec s;
    s.poly = poly;
    s.degree = 63 - std::countl_zero(poly);
    return s;
}

CrcSpec CrcSpec::from_hex(const std::string& hex) {
    std::size_t pos = 0;
    uint64_t v = std::stoull(hex, &pos, 16);
    if (pos != hex.size() && !(hex.rfind("0x", 0) == 0 || hex.rfind("0X", 0) == 0))
        throw std::invalid_argument("bad CRC polynomial \"" + hex + "\"");
    return from_poly(v);
}

std::string CrcSpec::to_hex() const {
    char buf[32];
    std::snprintf(buf, sizeof buf, "0x%llx", static_cast<unsigned long long>(poly));
    return buf;
}

namespace {

// Long division of the given bit sequence (highest power first) extended by
// `degree` zero bits; returns the remainder in a shift register whose bit j
// is the coefficient of D^j.
uint64_t crc_remainder(const BitVector& d, const CrcSpec& spec) {
    uint64_t reg = 0;
    uint64_t top = uint64_t(1) << (spec.degree - 1);
    uint64_t mask = (uint64_t(1) << spec.degree) - 1;
    uint64_t taps = spec.poly & mask;
    for (std::size_t i = 0; i < d.size(); ++i) {
        bool out = (reg & top) != 0;
        reg = (reg << 1) & mask;
        if (out != d.get(i)) reg ^= taps;
    }
    return reg;
}

} // namespace

BitVector crc_append(const BitVector& d, const CrcSpec& spec) {
    uint64_t rem = crc_remainder(d, spec);
    BitVector out(d.size() + std::size_t(spec.degree));
    for (std::size_t i = 0; i < d.size(); ++i) out.set(i, d.get(i));
    for (int j = 0; j < spec.degree; ++j)
        out.set(d.size() + std::size_t(j), (rem >> (spec.degree - 1 - j)) & 1);
    return out;
}

bool crc_check(const BitVector& d_ext, const CrcSpec& spec) {
    if (d_ext.size() < std::size_t(spec.degree)) return false;
    BitVector msg(d_ext.size() - std::size_t(spec.degree));
    for (std::size_t i = 0; i < msg.size(); ++i) msg.set(i, d_ext.get(i));
    uint64_t rem = crc_remainder(msg, spec);
    for (int j = 0; j < spec.degree; ++j)
        if (bool((rem >> (spec.degree - 1 - j)) & 1) != d_ext.get(msg.size() + std::size_t(j))) return false;
    return true;
}

} // namespace deeppolar
