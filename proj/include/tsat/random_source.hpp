#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace tsat {

// Deterministic stream of fair bits. Every bit handed out is logged so tests
// can compare a backward reconstruction against the exact forward history.
class BitSource {
  public:
    explicit BitSource(uint64_t seed) : seed_(seed), rng_(seed) {}

    int next_bit() {
        if (avail_ == 0) {
            word_ = rng_();
            avail_ = 64;
        }
        int b = static_cast<int>(word_ & 1);
        word_ >>= 1;
        --avail_;
        log_.push_back(static_cast<uint8_t>(b));
        return b;
    }

    uint64_t seed() const { return seed_; }
    size_t consumed() const { return log_.size(); }
    const std::vector<uint8_t>& log() const { return log_; }

  private:
    uint64_t seed_;
    std::mt19937_64 rng_;
    uint64_t word_ = 0;
    int avail_ = 0;
    std::vector<uint8_t> log_;
};

// Uniform letters over {0..m-1} drawn from a BitSource; rejection sampling
// when m is not a power of two. The letter log is the reconstruction oracle.
class LetterSource {
  public:
    LetterSource(uint64_t seed, int alphabet) : bits_(seed), m_(alphabet) {
        width_ = 0;
        while ((1 << width_) < m_) ++width_;
    }

    int next_letter() {
        for (;;) {
            int v = 0;
            for (int i = 0; i < width_; ++i) v = (v << 1) | bits_.next_bit();
            if (v < m_) {
                log_.push_back(v);
                return v;
            }
        }
    }

    int alphabet() const { return m_; }
    size_t drawn() const { return log_.size(); }
    const std::vector<int>& log() const { return log_; }
    const BitSource& bit_source() const { return bits_; }

  private:
    BitSource bits_;
    int m_;
    int width_;
    std::vector<int> log_;
};

}  // namespace tsat
