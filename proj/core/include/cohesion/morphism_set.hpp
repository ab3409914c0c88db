#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <vector>

#include "cohesion/ids.hpp"

namespace cohesion {

// Subset of the morphisms of a fixed category, stored as a bitset over the
// dense MorphismId range [0, universe).
class MorphismSet {
public:
    class const_iterator {
    public:
        using iterator_category = std::forward_iterator_tag;
        using value_type = MorphismId;
        using difference_type = std::ptrdiff_t;
        using pointer = const MorphismId*;
        using reference = MorphismId;

        const_iterator() = default;
        const_iterator(const MorphismSet* set, std::size_t pos) : set_(set), pos_(pos) { skip(); }

        MorphismId operator*() const { return MorphismId(pos_); }
        const_iterator& operator++() {
            ++pos_;
            skip();
            return *this;
        }
        const_iterator operator++(int) {
            auto tmp = *this;
            ++*this;
            return tmp;
        }
        friend bool operator==(const const_iterator& a, const const_iterator& b) { return a.pos_ == b.pos_; }

    private:
        void skip() {
            while (set_ != nullptr && pos_ < set_->universe_ && !set_->contains(MorphismId(pos_))) ++pos_;
        }
        const MorphismSet* set_ = nullptr;
        std::size_t pos_ = 0;
    };

    MorphismSet() = default;
    explicit MorphismSet(std::size_t universe) : universe_(universe), words_((universe + 63) / 64, 0) {}
    MorphismSet(std::size_t universe, std::initializer_list<MorphismId> members) : MorphismSet(universe) {
        for (auto m : members) insert(m);
    }

    static MorphismSet full(std::size_t universe) {
        MorphismSet s(universe);
        for (std::size_t i = 0; i < universe; ++i) s.insert(MorphismId(i));
        return s;
    }

    // Low 64 morphisms of a bit mask; used by the enumerators.
    static MorphismSet from_mask(std::size_t universe, std::uint64_t mask) {
        MorphismSet s(universe);
        if (!s.words_.empty()) s.words_[0] = mask;
        return s;
    }
    [[nodiscard]] std::uint64_t mask() const { return words_.empty() ? 0 : words_[0]; }

    [[nodiscard]] std::size_t universe() const { return universe_; }

    [[nodiscard]] bool contains(MorphismId m) const {
        return m.index < universe_ && ((words_[m.index / 64] >> (m.index % 64)) & 1U) != 0;
    }
    void insert(MorphismId m) { words_[m.index / 64] |= (std::uint64_t{1} << (m.index % 64)); }
    void erase(MorphismId m) { words_[m.index / 64] &= ~(std::uint64_t{1} << (m.index % 64)); }

    [[nodiscard]] std::size_t size() const {
        std::size_t n = 0;
        for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
        return n;
    }
    [[nodiscard]] bool empty() const {
        for (auto w : words_)
            if (w != 0) return false;
        return true;
    }

    [[nodiscard]] bool is_subset_of(const MorphismSet& other) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if ((words_[i] & ~other.word(i)) != 0) return false;
        return true;
    }

    MorphismSet& operator|=(const MorphismSet& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.word(i);
        return *this;
    }
    MorphismSet& operator&=(const MorphismSet& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.word(i);
        return *this;
    }
    MorphismSet& operator-=(const MorphismSet& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.word(i);
        return *this;
    }
    friend MorphismSet operator|(MorphismSet a, const MorphismSet& b) { return a |= b; }
    friend MorphismSet operator&(MorphismSet a, const MorphismSet& b) { return a &= b; }
    friend MorphismSet operator-(MorphismSet a, const MorphismSet& b) { return a -= b; }

    friend bool operator==(const MorphismSet&, const MorphismSet&) = default;

    // Cardinality first, then lexicographic on the sorted member list.
    friend std::strong_ordering operator<=>(const MorphismSet& a, const MorphismSet& b) {
        if (auto c = a.size() <=> b.size(); c != 0) return c;
        auto ia = a.begin();
        auto ib = b.begin();
        for (; ia != a.end() && ib != b.end(); ++ia, ++ib)
            if (auto c = *ia <=> *ib; c != 0) return c;
        return std::strong_ordering::equal;
    }

    [[nodiscard]] const_iterator begin() const { return {this, 0}; }
    [[nodiscard]] const_iterator end() const { return {this, universe_}; }

    [[nodiscard]] std::vector<MorphismId> members() const { return {begin(), end()}; }

private:
    [[nodiscard]] std::uint64_t word(std::size_t i) const { return i < words_.size() ? words_[i] : 0; }

    std::size_t universe_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace cohesion
