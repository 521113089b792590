#pragma once

#include <atomic>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <utility>

namespace elimtw {

uint32_t murmur3_x86_32(const void* data, size_t len, uint32_t seed);

struct BloomParams {
    int bits_per_element = 24;
    int num_hashes = 17;
};

// Striped-lock Bloom filter over 8-byte state keys. Two Murmur3 hashes are
// combined linearly into the probe positions; a lock chosen by h1 guards
// each insert so that between resets exactly one inserter of a given key
// sees "novel", no matter how calls interleave.
class ConcurrentBloom {
public:
    static constexpr uint32_t kSeed1 = 0x9747B28C;
    static constexpr uint32_t kSeed2 = 0x5EEDBA5E;
    static constexpr int kStripes = 65536;

    explicit ConcurrentBloom(uint64_t expected_elements, BloomParams params = {});

    // True iff at least one probe bit was still clear: the key is new to
    // this generation. Thread-safe.
    bool insert_and_check(uint64_t key);

    bool might_contain(uint64_t key) const;

    // Clears all bits; callers synchronize (runs between DP layers).
    void reset();

    uint64_t bit_count() const { return m_; }
    uint64_t set_bit_count() const;
    bool test_bit(uint64_t index) const;

    // (1 - e^{-kn/m})^k for this filter's k and m.
    double expected_false_positive_rate(uint64_t inserted) const;

    static std::pair<uint32_t, uint32_t> hash_pair(uint64_t key);

private:
    uint64_t m_;
    uint64_t words_count_;
    BloomParams params_;
    std::unique_ptr<std::atomic<uint64_t>[]> words_;
};

}  // namespace elimtw
