#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <iterator>

namespace elimtw {

// Fixed-capacity vertex set backed by machine words. The solver instantiates
// the one-word variant (graphs up to 64 vertices) so a set doubles as the
// 8-byte DP state key; the word count is the compile-time seam to 256.
template <unsigned Words>
struct BasicVertexSet {
    static constexpr int capacity = 64 * Words;

    uint64_t w[Words] = {};

    static BasicVertexSet single(int v) {
        BasicVertexSet s;
        s.add(v);
        return s;
    }

    // {0, 1, ..., n-1}
    static BasicVertexSet first_n(int n) {
        BasicVertexSet s;
        for (unsigned i = 0; i < Words; ++i) {
            int lo = 64 * static_cast<int>(i);
            if (n <= lo)
                s.w[i] = 0;
            else if (n >= lo + 64)
                s.w[i] = ~uint64_t{0};
            else
                s.w[i] = (uint64_t{1} << (n - lo)) - 1;
        }
        return s;
    }

    bool contains(int v) const { return (w[v >> 6] >> (v & 63)) & 1; }
    void add(int v) { w[v >> 6] |= uint64_t{1} << (v & 63); }
    void remove(int v) { w[v >> 6] &= ~(uint64_t{1} << (v & 63)); }

    int count() const {
        int c = 0;
        for (unsigned i = 0; i < Words; ++i) c += std::popcount(w[i]);
        return c;
    }

    bool empty() const {
        for (unsigned i = 0; i < Words; ++i)
            if (w[i]) return false;
        return true;
    }

    bool any() const { return !empty(); }

    // Smallest element; undefined on an empty set.
    int lowest() const {
        for (unsigned i = 0; i < Words; ++i)
            if (w[i]) return 64 * static_cast<int>(i) + std::countr_zero(w[i]);
        return -1;
    }

    BasicVertexSet operator|(const BasicVertexSet& o) const {
        BasicVertexSet r;
        for (unsigned i = 0; i < Words; ++i) r.w[i] = w[i] | o.w[i];
        return r;
    }
    BasicVertexSet operator&(const BasicVertexSet& o) const {
        BasicVertexSet r;
        for (unsigned i = 0; i < Words; ++i) r.w[i] = w[i] & o.w[i];
        return r;
    }
    BasicVertexSet operator~() const {
        BasicVertexSet r;
        for (unsigned i = 0; i < Words; ++i) r.w[i] = ~w[i];
        return r;
    }
    // set difference
    BasicVertexSet operator-(const BasicVertexSet& o) const {
        BasicVertexSet r;
        for (unsigned i = 0; i < Words; ++i) r.w[i] = w[i] & ~o.w[i];
        return r;
    }
    BasicVertexSet& operator|=(const BasicVertexSet& o) {
        for (unsigned i = 0; i < Words; ++i) w[i] |= o.w[i];
        return *this;
    }
    BasicVertexSet& operator&=(const BasicVertexSet& o) {
        for (unsigned i = 0; i < Words; ++i) w[i] &= o.w[i];
        return *this;
    }

    bool is_subset_of(const BasicVertexSet& o) const {
        for (unsigned i = 0; i < Words; ++i)
            if (w[i] & ~o.w[i]) return false;
        return true;
    }

    bool operator==(const BasicVertexSet& o) const {
        for (unsigned i = 0; i < Words; ++i)
            if (w[i] != o.w[i]) return false;
        return true;
    }
    bool operator!=(const BasicVertexSet& o) const { return !(*this == o); }

    // numeric order on the packed words, high word first
    bool operator<(const BasicVertexSet& o) const {
        for (unsigned i = Words; i-- > 0;)
            if (w[i] != o.w[i]) return w[i] < o.w[i];
        return false;
    }

    struct iterator {
        using iterator_category = std::forward_iterator_tag;
        using value_type = int;
        using difference_type = std::ptrdiff_t;
        using pointer = const int*;
        using reference = int;

        const uint64_t* words;
        unsigned idx;
        uint64_t rest;

        void advance() {
            while (!rest && ++idx < Words) rest = words[idx];
        }
        int operator*() const { return 64 * static_cast<int>(idx) + std::countr_zero(rest); }
        iterator& operator++() {
            rest &= rest - 1;
            advance();
            return *this;
        }
        iterator operator++(int) {
            iterator copy = *this;
            ++*this;
            return copy;
        }
        bool operator==(const iterator& o) const { return idx == o.idx && rest == o.rest; }
        bool operator!=(const iterator& o) const { return !(*this == o); }
    };

    iterator begin() const {
        iterator it{w, 0, w[0]};
        it.advance();
        return it;
    }
    iterator end() const { return iterator{w, Words, 0}; }
};

using VertexSet = BasicVertexSet<1>;

}  // namespace elimtw
