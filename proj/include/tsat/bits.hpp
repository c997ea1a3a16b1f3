#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tsat/rational.hpp"

namespace tsat {

// A bit string with exact length; one byte per bit keeps indexing trivial
// (lengths here are small, accounting exactness matters more than packing).
class BitVec {
  public:
    BitVec() = default;
    explicit BitVec(std::vector<uint8_t> bits) : bits_(std::move(bits)) {}

    size_t size() const { return bits_.size(); }
    bool empty() const { return bits_.empty(); }
    uint8_t operator[](size_t i) const { return bits_[i]; }

    void push(int bit) { bits_.push_back(bit ? 1 : 0); }

    // value's low `width` bits, most significant first
    void push_uint(uint64_t value, int width) {
        for (int i = width - 1; i >= 0; --i) push(static_cast<int>((value >> i) & 1));
    }

    void append(const BitVec& other) {
        bits_.insert(bits_.end(), other.bits_.begin(), other.bits_.end());
    }

    std::string str() const {
        std::string s;
        s.reserve(bits_.size());
        for (uint8_t b : bits_) s.push_back(b ? '1' : '0');
        return s;
    }

    static BitVec from_str(const std::string& s) {
        BitVec v;
        for (char c : s) {
            if (c != '0' && c != '1') throw parse_error("bit string: bad char");
            v.push(c == '1');
        }
        return v;
    }

    bool operator==(const BitVec& o) const { return bits_ == o.bits_; }

    const std::vector<uint8_t>& raw() const { return bits_; }

  private:
    std::vector<uint8_t> bits_;
};

// Sequential reader over a BitVec; throws when reads run past the end.
class BitReader {
  public:
    explicit BitReader(const BitVec& v) : v_(v) {}

    bool done() const { return pos_ == v_.size(); }
    size_t remaining() const { return v_.size() - pos_; }

    int read_bit() {
        if (pos_ >= v_.size()) throw parse_error("bit stream truncated");
        return v_[pos_++];
    }

    uint64_t read_uint(int width) {
        uint64_t r = 0;
        for (int i = 0; i < width; ++i) r = (r << 1) | static_cast<uint64_t>(read_bit());
        return r;
    }

  private:
    const BitVec& v_;
    size_t pos_ = 0;
};

inline int bits_for_count(uint64_t count) {
    // width of a fixed field indexing [0, count); 0 when a single value
    int w = 0;
    while ((1ull << w) < count) ++w;
    return w;
}

}  // namespace tsat
