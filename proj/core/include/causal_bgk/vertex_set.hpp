#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <vector>

namespace causal_bgk {

using Vertex = int;

// Fixed-universe bitset over vertex ids 0..n-1. Iterates in ascending order,
// which every tie-break in the library relies on.
class VertexSet {
public:
    class iterator {
    public:
        using iterator_category = std::forward_iterator_tag;
        using value_type = Vertex;
        using difference_type = std::ptrdiff_t;
        using pointer = const Vertex*;
        using reference = Vertex;

        iterator() = default;
        iterator(const VertexSet* s, int pos) : set_(s), pos_(pos) { advance_to_set(); }

        Vertex operator*() const { return pos_; }
        iterator& operator++() {
            ++pos_;
            advance_to_set();
            return *this;
        }
        iterator operator++(int) {
            iterator t = *this;
            ++*this;
            return t;
        }
        bool operator==(const iterator& o) const { return pos_ == o.pos_; }

    private:
        void advance_to_set();
        const VertexSet* set_ = nullptr;
        int pos_ = 0;
    };

    VertexSet() = default;
    explicit VertexSet(int universe) : n_(universe), words_((universe + 63) / 64, 0) {}
    VertexSet(int universe, std::initializer_list<Vertex> vs) : VertexSet(universe) {
        for (Vertex v : vs) insert(v);
    }
    VertexSet(int universe, const std::vector<Vertex>& vs) : VertexSet(universe) {
        for (Vertex v : vs) insert(v);
    }

    static VertexSet full(int universe) {
        VertexSet s(universe);
        for (int v = 0; v < universe; ++v) s.insert(v);
        return s;
    }

    int universe() const noexcept { return n_; }

    bool contains(Vertex v) const noexcept {
        if (v < 0 || v >= n_) return false;
        return (words_[v >> 6] >> (v & 63)) & 1u;
    }
    void insert(Vertex v) { words_[v >> 6] |= (std::uint64_t{1} << (v & 63)); }
    void erase(Vertex v) {
        if (v >= 0 && v < n_) words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
    }
    void clear() {
        for (auto& w : words_) w = 0;
    }

    int size() const noexcept {
        int c = 0;
        for (auto w : words_) c += std::popcount(w);
        return c;
    }
    bool empty() const noexcept {
        for (auto w : words_)
            if (w) return false;
        return true;
    }
    // smallest member, or -1
    Vertex first() const noexcept {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i]) return static_cast<Vertex>(i * 64 + std::countr_zero(words_[i]));
        return -1;
    }

    bool intersects(const VertexSet& o) const noexcept {
        std::size_t m = std::min(words_.size(), o.words_.size());
        for (std::size_t i = 0; i < m; ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }
    bool is_subset_of(const VertexSet& o) const noexcept {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            std::uint64_t ow = i < o.words_.size() ? o.words_[i] : 0;
            if (words_[i] & ~ow) return false;
        }
        return true;
    }

    VertexSet& operator|=(const VertexSet& o) {
        grow(o.n_);
        for (std::size_t i = 0; i < o.words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    VertexSet& operator&=(const VertexSet& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= i < o.words_.size() ? o.words_[i] : 0;
        return *this;
    }
    VertexSet& operator-=(const VertexSet& o) {
        std::size_t m = std::min(words_.size(), o.words_.size());
        for (std::size_t i = 0; i < m; ++i) words_[i] &= ~o.words_[i];
        return *this;
    }
    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

    friend bool operator==(const VertexSet& a, const VertexSet& b) noexcept {
        std::size_t m = std::max(a.words_.size(), b.words_.size());
        for (std::size_t i = 0; i < m; ++i) {
            std::uint64_t x = i < a.words_.size() ? a.words_[i] : 0;
            std::uint64_t y = i < b.words_.size() ? b.words_[i] : 0;
            if (x != y) return false;
        }
        return true;
    }
    // lexicographic on ascending member lists; gives sets a stable order for dedup
    friend bool operator<(const VertexSet& a, const VertexSet& b) noexcept {
        auto ia = a.begin(), ib = b.begin();
        for (; ia != a.end() && ib != b.end(); ++ia, ++ib)
            if (*ia != *ib) return *ia < *ib;
        return ia == a.end() && ib != b.end();
    }

    iterator begin() const { return iterator(this, 0); }
    iterator end() const { return iterator(this, n_); }

    std::vector<Vertex> to_vector() const { return {begin(), end()}; }

    // raw word for sets with universe <= 64 (used for hashing small sets)
    std::uint64_t low_word() const noexcept { return words_.empty() ? 0 : words_[0]; }

private:
    void grow(int universe) {
        if (universe > n_) {
            n_ = universe;
            words_.resize((universe + 63) / 64, 0);
        }
    }

    int n_ = 0;
    std::vector<std::uint64_t> words_;
};

inline void VertexSet::iterator::advance_to_set() {
    const int n = set_->n_;
    while (pos_ < n) {
        std::uint64_t w = set_->words_[pos_ >> 6] >> (pos_ & 63);
        if (w) {
            pos_ += std::countr_zero(w);
            return;
        }
        pos_ = ((pos_ >> 6) + 1) << 6;
    }
    pos_ = n;
}

}  // namespace causal_bgk
