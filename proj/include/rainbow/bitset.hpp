#pragma once

#include <cassert>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace rainbow {

// Fixed-universe dense bitset over integer ids. Set algebra stays closed over
// the universe fixed at construction; bits past the universe are always zero.
class DenseBitset {
public:
    DenseBitset() = default;
    explicit DenseBitset(int universe, bool fill = false)
        : universe_(universe), words_((universe + 63) / 64, fill ? ~0ull : 0ull) {
        trim();
    }

    static DenseBitset of(int universe, std::initializer_list<int> ids) {
        DenseBitset b(universe);
        for (int i : ids) b.set(i);
        return b;
    }

    template <typename Container>
    static DenseBitset from(int universe, const Container& ids) {
        DenseBitset b(universe);
        for (int i : ids) b.set(i);
        return b;
    }

    int universe() const { return universe_; }

    bool test(int i) const {
        assert(i >= 0 && i < universe_);
        return (words_[i >> 6] >> (i & 63)) & 1;
    }
    void set(int i) {
        assert(i >= 0 && i < universe_);
        words_[i >> 6] |= 1ull << (i & 63);
    }
    void reset(int i) {
        assert(i >= 0 && i < universe_);
        words_[i >> 6] &= ~(1ull << (i & 63));
    }
    void assign(int i, bool v) { v ? set(i) : reset(i); }
    void clear() {
        for (auto& w : words_) w = 0;
    }

    int count() const {
        int c = 0;
        for (auto w : words_) c += __builtin_popcountll(w);
        return c;
    }
    bool any() const {
        for (auto w : words_) {
            if (w) return true;
        }
        return false;
    }
    bool none() const { return !any(); }

    DenseBitset& operator|=(const DenseBitset& o) {
        assert(universe_ == o.universe_);
        for (size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    DenseBitset& operator&=(const DenseBitset& o) {
        assert(universe_ == o.universe_);
        for (size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    DenseBitset& subtract(const DenseBitset& o) {
        assert(universe_ == o.universe_);
        for (size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }

    friend DenseBitset operator|(DenseBitset a, const DenseBitset& b) { return a |= b; }
    friend DenseBitset operator&(DenseBitset a, const DenseBitset& b) { return a &= b; }

    DenseBitset complement() const {
        DenseBitset r(universe_);
        for (size_t i = 0; i < words_.size(); ++i) r.words_[i] = ~words_[i];
        r.trim();
        return r;
    }

    bool operator==(const DenseBitset& o) const {
        return universe_ == o.universe_ && words_ == o.words_;
    }

    bool subset_of(const DenseBitset& o) const {
        assert(universe_ == o.universe_);
        for (size_t i = 0; i < words_.size(); ++i) {
            if (words_[i] & ~o.words_[i]) return false;
        }
        return true;
    }
    bool intersects(const DenseBitset& o) const {
        assert(universe_ == o.universe_);
        for (size_t i = 0; i < words_.size(); ++i) {
            if (words_[i] & o.words_[i]) return true;
        }
        return false;
    }

    int first() const {
        for (size_t i = 0; i < words_.size(); ++i) {
            if (words_[i]) return static_cast<int>(i * 64 + __builtin_ctzll(words_[i]));
        }
        return -1;
    }

    template <typename F>
    void for_each(F f) const {
        for (size_t i = 0; i < words_.size(); ++i) {
            uint64_t w = words_[i];
            while (w) {
                int bit = __builtin_ctzll(w);
                f(static_cast<int>(i * 64 + bit));
                w &= w - 1;
            }
        }
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(count());
        for_each([&](int i) { out.push_back(i); });
        return out;
    }

private:
    void trim() {
        int rem = universe_ & 63;
        if (rem && !words_.empty()) words_.back() &= (1ull << rem) - 1;
    }

    int universe_ = 0;
    std::vector<uint64_t> words_;
};

using VertexSet = DenseBitset;
using ColorSet = DenseBitset;
using EdgeSet = DenseBitset;

} // namespace rainbow
