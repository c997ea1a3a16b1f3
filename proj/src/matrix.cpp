#include "tsat/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace tsat {
namespace toy {

BitMatrix BitMatrix::parse(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::vector<std::string> rows;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (line.empty()) continue;
        rows.push_back(line);
    }
    if (rows.empty()) throw parse_error("matrix: empty input");
    int n = static_cast<int>(rows.size());
    BitMatrix m(n);
    for (int r = 0; r < n; ++r) {
        if (static_cast<int>(rows[static_cast<size_t>(r)].size()) != n)
            throw parse_error("matrix: row " + std::to_string(r + 1) + " has " +
                              std::to_string(rows[static_cast<size_t>(r)].size()) +
                              " characters, expected " + std::to_string(n));
        for (int c = 0; c < n; ++c) {
            char ch = rows[static_cast<size_t>(r)][static_cast<size_t>(c)];
            if (ch != '0' && ch != '1')
                throw parse_error("matrix: bad character in row " + std::to_string(r + 1));
            m.set(r, c, ch == '1');
        }
    }
    return m;
}

std::string BitMatrix::str() const {
    std::string out;
    out.reserve(static_cast<size_t>(n) * (n + 1));
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) out.push_back(at(r, c) ? '1' : '0');
        out.push_back('\n');
    }
    return out;
}

bool witness_valid(const BitMatrix& M, const MinorWitness& w, int k) {
    if (static_cast<int>(w.rows.size()) != k || static_cast<int>(w.cols.size()) != k) return false;
    if (!std::is_sorted(w.rows.begin(), w.rows.end()) ||
        !std::is_sorted(w.cols.begin(), w.cols.end()))
        return false;
    for (int r : w.rows)
        for (int c : w.cols) {
            if (r < 0 || r >= M.n || c < 0 || c >= M.n) return false;
            if (M.at(r, c) != w.color) return false;
        }
    return true;
}

namespace {

double binom(int n, int k) {
    double r = 1.0;
    for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
}

bool next_combination(std::vector<int>& comb, int n) {
    int k = static_cast<int>(comb.size());
    for (int i = k - 1; i >= 0; --i) {
        if (comb[static_cast<size_t>(i)] < n - k + i) {
            ++comb[static_cast<size_t>(i)];
            for (int j = i + 1; j < k; ++j)
                comb[static_cast<size_t>(j)] = comb[static_cast<size_t>(j - 1)] + 1;
            return true;
        }
    }
    return false;
}

// columns (as a word mask) on which all chosen rows carry `color`
std::vector<uint64_t> col_mask(const BitMatrix& M, const std::vector<int>& rows, int color) {
    size_t words = (static_cast<size_t>(M.n) + 63) / 64;
    std::vector<uint64_t> mask(words, ~0ull);
    // trim beyond n
    if (M.n % 64) mask.back() = (1ull << (M.n % 64)) - 1;
    for (int r : rows)
        for (int c = 0; c < M.n; ++c)
            if (M.at(r, c) != color) mask[static_cast<size_t>(c) / 64] &= ~(1ull << (c % 64));
    return mask;
}

std::optional<std::vector<int>> first_k_bits(const std::vector<uint64_t>& mask, int n, int k) {
    std::vector<int> out;
    for (int c = 0; c < n && static_cast<int>(out.size()) < k; ++c)
        if (mask[static_cast<size_t>(c) / 64] & (1ull << (c % 64))) out.push_back(c);
    if (static_cast<int>(out.size()) < k) return std::nullopt;
    return out;
}

}  // namespace

std::optional<MinorWitness> find_monochromatic_minor(const BitMatrix& M, int k) {
    if (k < 1 || k > M.n) throw std::invalid_argument("minor search: need 1 <= k <= n");
    double pairs = binom(M.n, k);
    if (pairs * pairs > 1e8)
        throw guard_error("minor search: C(n,k)^2 exceeds the 1e8 guard");

    std::vector<int> rows(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) rows[static_cast<size_t>(i)] = i;
    do {
        auto zeros = first_k_bits(col_mask(M, rows, 0), M.n, k);
        auto ones = first_k_bits(col_mask(M, rows, 1), M.n, k);
        if (!zeros && !ones) continue;
        MinorWitness w;
        w.rows = rows;
        if (zeros && (!ones || *zeros <= *ones)) {
            w.cols = *zeros;
            w.color = 0;
        } else {
            w.cols = *ones;
            w.color = 1;
        }
        return w;
    } while (next_combination(rows, M.n));
    return std::nullopt;
}

long minor_code_length(int n, int k) {
    return 2l * k * bits_for_count(static_cast<uint64_t>(n)) + 1 +
           static_cast<long>(n) * n - static_cast<long>(k) * k;
}

BitVec compress_minor(const BitMatrix& M, const MinorWitness& w, int k) {
    if (!witness_valid(M, w, k))
        throw std::invalid_argument("compress_minor: witness does not match the matrix");
    const int idx_w = bits_for_count(static_cast<uint64_t>(M.n));
    BitVec out;
    for (int r : w.rows) out.push_uint(static_cast<uint64_t>(r), idx_w);
    for (int c : w.cols) out.push_uint(static_cast<uint64_t>(c), idx_w);
    out.push(w.color);

    std::vector<uint8_t> in_rows(static_cast<size_t>(M.n), 0), in_cols(static_cast<size_t>(M.n), 0);
    for (int r : w.rows) in_rows[static_cast<size_t>(r)] = 1;
    for (int c : w.cols) in_cols[static_cast<size_t>(c)] = 1;
    for (int r = 0; r < M.n; ++r)
        for (int c = 0; c < M.n; ++c)
            if (!(in_rows[static_cast<size_t>(r)] && in_cols[static_cast<size_t>(c)]))
                out.push(M.at(r, c));

    if (static_cast<long>(out.size()) != minor_code_length(M.n, k))
        throw integrity_error("compress_minor: emitted length disagrees with the formula");
    return out;
}

BitMatrix decompress_minor(const BitVec& bits, int n, int k) {
    const int idx_w = bits_for_count(static_cast<uint64_t>(n));
    BitReader rd(bits);
    MinorWitness w;
    for (int i = 0; i < k; ++i) w.rows.push_back(static_cast<int>(rd.read_uint(idx_w)));
    for (int i = 0; i < k; ++i) w.cols.push_back(static_cast<int>(rd.read_uint(idx_w)));
    w.color = rd.read_bit();

    BitMatrix m(n);
    std::vector<uint8_t> in_rows(static_cast<size_t>(n), 0), in_cols(static_cast<size_t>(n), 0);
    for (int r : w.rows) {
        if (r >= n) throw parse_error("decompress_minor: row index out of range");
        in_rows[static_cast<size_t>(r)] = 1;
    }
    for (int c : w.cols) {
        if (c >= n) throw parse_error("decompress_minor: column index out of range");
        in_cols[static_cast<size_t>(c)] = 1;
    }
    for (int r : w.rows)
        for (int c : w.cols) m.set(r, c, w.color);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
            if (!(in_rows[static_cast<size_t>(r)] && in_cols[static_cast<size_t>(c)]))
                m.set(r, c, rd.read_bit());
    if (!rd.done()) throw parse_error("decompress_minor: trailing bits");
    return m;
}

}  // namespace toy
}  // namespace tsat
