#include "bloom.hpp"

#include <bit>
#include <cmath>
#include <mutex>

namespace elimtw {

namespace {

inline uint32_t rotl32(uint32_t x, int r) { return (x << r) | (x >> (32 - r)); }

inline uint32_t load_le32(const uint8_t* p) {
    return static_cast<uint32_t>(p[0]) | static_cast<uint32_t>(p[1]) << 8 |
           static_cast<uint32_t>(p[2]) << 16 | static_cast<uint32_t>(p[3]) << 24;
}

// One mutex pool for all filters; stripes are keyed by h1 alone, so a key
// always maps to the same stripe and duplicate inserts serialize.
std::mutex& stripe_for(uint32_t h1) {
    static std::mutex stripes[ConcurrentBloom::kStripes];
    return stripes[h1 % ConcurrentBloom::kStripes];
}

}  // namespace

uint32_t murmur3_x86_32(const void* data, size_t len, uint32_t seed) {
    const uint8_t* p = static_cast<const uint8_t*>(data);
    const size_t nblocks = len / 4;
    uint32_t h = seed;
    const uint32_t c1 = 0xcc9e2d51;
    const uint32_t c2 = 0x1b873593;

    for (size_t i = 0; i < nblocks; ++i) {
        uint32_t k = load_le32(p + 4 * i);
        k *= c1;
        k = rotl32(k, 15);
        k *= c2;
        h ^= k;
        h = rotl32(h, 13);
        h = h * 5 + 0xe6546b64;
    }

    const uint8_t* tail = p + 4 * nblocks;
    uint32_t k = 0;
    switch (len & 3) {
        case 3: k ^= static_cast<uint32_t>(tail[2]) << 16; [[fallthrough]];
        case 2: k ^= static_cast<uint32_t>(tail[1]) << 8; [[fallthrough]];
        case 1:
            k ^= tail[0];
            k *= c1;
            k = rotl32(k, 15);
            k *= c2;
            h ^= k;
    }

    h ^= static_cast<uint32_t>(len);
    h ^= h >> 16;
    h *= 0x85ebca6b;
    h ^= h >> 13;
    h *= 0xc2b2ae35;
    h ^= h >> 16;
    return h;
}

std::pair<uint32_t, uint32_t> ConcurrentBloom::hash_pair(uint64_t key) {
    uint8_t buf[8];
    for (int i = 0; i < 8; ++i) buf[i] = static_cast<uint8_t>(key >> (8 * i));
    return {murmur3_x86_32(buf, 8, kSeed1), murmur3_x86_32(buf, 8, kSeed2)};
}

ConcurrentBloom::ConcurrentBloom(uint64_t expected_elements, BloomParams params)
    : params_(params) {
    uint64_t bits = expected_elements * static_cast<uint64_t>(params.bits_per_element);
    m_ = std::max<uint64_t>(64, (bits + 63) / 64 * 64);
    words_count_ = m_ / 64;
    words_ = std::make_unique<std::atomic<uint64_t>[]>(words_count_);
    reset();
}

void ConcurrentBloom::reset() {
    for (uint64_t i = 0; i < words_count_; ++i)
        words_[i].store(0, std::memory_order_relaxed);
}

bool ConcurrentBloom::insert_and_check(uint64_t key) {
    auto [h1, h2] = hash_pair(key);
    std::lock_guard<std::mutex> lock(stripe_for(h1));
    bool novel = false;
    for (int i = 1; i <= params_.num_hashes; ++i) {
        uint64_t pos = (static_cast<uint64_t>(h1) + static_cast<uint64_t>(i) * h2) % m_;
        uint64_t mask = uint64_t{1} << (pos & 63);
        uint64_t before = words_[pos >> 6].fetch_or(mask, std::memory_order_relaxed);
        if (!(before & mask)) novel = true;
    }
    return novel;
}

bool ConcurrentBloom::might_contain(uint64_t key) const {
    auto [h1, h2] = hash_pair(key);
    for (int i = 1; i <= params_.num_hashes; ++i) {
        uint64_t pos = (static_cast<uint64_t>(h1) + static_cast<uint64_t>(i) * h2) % m_;
        uint64_t mask = uint64_t{1} << (pos & 63);
        if (!(words_[pos >> 6].load(std::memory_order_relaxed) & mask)) return false;
    }
    return true;
}

uint64_t ConcurrentBloom::set_bit_count() const {
    uint64_t total = 0;
    for (uint64_t i = 0; i < words_count_; ++i)
        total += std::popcount(words_[i].load(std::memory_order_relaxed));
    return total;
}

bool ConcurrentBloom::test_bit(uint64_t index) const {
    return words_[index >> 6].load(std::memory_order_relaxed) >> (index & 63) & 1;
}

double ConcurrentBloom::expected_false_positive_rate(uint64_t inserted) const {
    if (inserted == 0) return 0.0;
    double k = params_.num_hashes;
    double exponent = -k * static_cast<double>(inserted) / static_cast<double>(m_);
    return std::pow(1.0 - std::exp(exponent), k);
}

}  // namespace elimtw
