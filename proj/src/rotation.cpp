#include "tsat/rotation.hpp"

#include <cmath>

namespace tsat {
namespace toy {

long shift_distance(const std::vector<uint8_t>& x, int k) {
    const int n = static_cast<int>(x.size());
    long d = 0;
    for (int i = 0; i < n; ++i)
        if (x[static_cast<size_t>(i)] != x[static_cast<size_t>((i + k) % n)]) ++d;
    return d;
}

CyclicWitness min_shift_distance(const std::vector<uint8_t>& x) {
    const int n = static_cast<int>(x.size());
    if (n < 2) throw std::invalid_argument("min_shift_distance: need |x| >= 2");
    CyclicWitness best{1, shift_distance(x, 1)};
    for (int k = 2; k < n; ++k) {
        long d = shift_distance(x, k);
        if (d < best.distance) best = CyclicWitness{k, d};
    }
    return best;
}

namespace {

coding::SymbolModel bernoulli(const mpq_class& p1) {
    coding::SymbolModel m;
    m.probs = {1 - p1, p1};
    return m;
}

}  // namespace

RotationCode compress_rotation(const std::vector<uint8_t>& x, const CyclicWitness& w,
                               const mpq_class& eps) {
    const int n = static_cast<int>(x.size());
    if (n < 2) throw std::invalid_argument("compress_rotation: need |x| >= 2");
    if (eps <= 0 || 2 * eps >= 1)
        throw std::invalid_argument("compress_rotation: need 0 < eps < 1/2");
    if (!(mpq_class(w.distance) < eps * n))
        throw std::invalid_argument(
            "compress_rotation: shift distance not below eps*n, not compressible here");

    // shifting by k and by n-k flips the same number of bits
    int k = w.k;
    if (k > n - k) k = n - k;
    if (k < 1 || k >= n) throw std::invalid_argument("compress_rotation: bad shift");

    RotationCode out;
    out.k = k;
    const int idx_w = bits_for_count(static_cast<uint64_t>(n));
    out.bits.push_uint(static_cast<uint64_t>(k), idx_w);
    for (int i = 0; i < k; ++i) out.bits.push(x[static_cast<size_t>(i)]);
    out.header_bits = out.bits.size();

    std::vector<int> diffs;
    diffs.reserve(static_cast<size_t>(n - k));
    for (int i = 0; i + k < n; ++i)
        diffs.push_back(x[static_cast<size_t>(i + k)] ^ x[static_cast<size_t>(i)]);
    coding::CodeBits payload = coding::encode(bernoulli(2 * eps), diffs);
    out.payload_bits = payload.length();
    out.bits.append(payload.bits);

    double h = coding::binary_entropy(2 * eps);
    out.bound_bits = static_cast<double>(idx_w) + k + (n - k) * h + coding::kCodeSlackBits;
    out.within_bound = static_cast<double>(out.bits.size()) <= out.bound_bits;
    return out;
}

std::vector<uint8_t> decompress_rotation(const BitVec& bits, int n, const mpq_class& eps) {
    if (eps <= 0 || 2 * eps >= 1)
        throw std::invalid_argument("decompress_rotation: need 0 < eps < 1/2");
    const int idx_w = bits_for_count(static_cast<uint64_t>(n));
    BitReader rd(bits);
    int k = static_cast<int>(rd.read_uint(idx_w));
    if (k < 1 || k >= n) throw parse_error("decompress_rotation: shift out of range");
    std::vector<uint8_t> x(static_cast<size_t>(n), 0);
    for (int i = 0; i < k; ++i) x[static_cast<size_t>(i)] = static_cast<uint8_t>(rd.read_bit());

    BitVec rest;
    while (!rd.done()) rest.push(rd.read_bit());
    coding::CodeBits payload{rest};
    std::vector<int> diffs =
        coding::decode(bernoulli(2 * eps), payload, static_cast<size_t>(n - k));
    for (int i = 0; i + k < n; ++i)
        x[static_cast<size_t>(i + k)] = static_cast<uint8_t>(diffs[static_cast<size_t>(i)] ^
                                                             x[static_cast<size_t>(i)]);
    return x;
}

}  // namespace toy
}  // namespace tsat
