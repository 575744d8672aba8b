#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

namespace facetforest {

// Fixed-capacity bit set used for vertex sets. Universes with at most 64
// vertices live in a single machine word; larger universes spill into extra
// heap words behind the same interface.
class Bits {
public:
    Bits() = default;

    explicit Bits(int nbits) : nbits_(nbits) {
        if (nbits < 0) throw std::invalid_argument("Bits: negative capacity");
        if (nbits > 64) ext_.assign((nbits - 1) / 64, 0);
    }

    int capacity() const { return nbits_; }
    int word_count() const { return 1 + static_cast<int>(ext_.size()); }

    std::uint64_t word(int k) const { return k == 0 ? w0_ : ext_[k - 1]; }

    bool test(int i) const {
        check_index(i);
        return (word_ref_const(i >> 6) >> (i & 63)) & 1u;
    }

    void set(int i) {
        check_index(i);
        word_ref(i >> 6) |= std::uint64_t{1} << (i & 63);
    }

    void reset(int i) {
        check_index(i);
        word_ref(i >> 6) &= ~(std::uint64_t{1} << (i & 63));
    }

    int count() const {
        int c = popcount64(w0_);
        for (std::uint64_t w : ext_) c += popcount64(w);
        return c;
    }

    bool none() const {
        if (w0_) return false;
        for (std::uint64_t w : ext_)
            if (w) return false;
        return true;
    }
    bool any() const { return !none(); }

    // this ⊆ other
    bool subset_of(const Bits& other) const {
        if (w0_ & ~other.w0_) return false;
        for (std::size_t k = 0; k < ext_.size(); ++k)
            if (ext_[k] & ~other.ext_[k]) return false;
        return true;
    }

    bool intersects(const Bits& other) const {
        if (w0_ & other.w0_) return true;
        for (std::size_t k = 0; k < ext_.size(); ++k)
            if (ext_[k] & other.ext_[k]) return true;
        return false;
    }

    Bits operator|(const Bits& o) const { return binop(o, [](std::uint64_t a, std::uint64_t b) { return a | b; }); }
    Bits operator&(const Bits& o) const { return binop(o, [](std::uint64_t a, std::uint64_t b) { return a & b; }); }
    Bits operator-(const Bits& o) const { return binop(o, [](std::uint64_t a, std::uint64_t b) { return a & ~b; }); }
    Bits operator^(const Bits& o) const { return binop(o, [](std::uint64_t a, std::uint64_t b) { return a ^ b; }); }

    bool operator==(const Bits& o) const { return nbits_ == o.nbits_ && w0_ == o.w0_ && ext_ == o.ext_; }
    bool operator!=(const Bits& o) const { return !(*this == o); }

    // Total order used when sorting facet masks; word 0 is least significant.
    static int compare(const Bits& a, const Bits& b) {
        int nw = a.word_count() > b.word_count() ? a.word_count() : b.word_count();
        for (int k = nw - 1; k >= 0; --k) {
            std::uint64_t wa = k < a.word_count() ? a.word(k) : 0;
            std::uint64_t wb = k < b.word_count() ? b.word(k) : 0;
            if (wa != wb) return wa < wb ? -1 : 1;
        }
        return 0;
    }

    // Index of the lowest set bit, -1 when empty.
    int lowest_bit() const {
        if (w0_) return ctz64(w0_);
        for (std::size_t k = 0; k < ext_.size(); ++k)
            if (ext_[k]) return 64 * (static_cast<int>(k) + 1) + ctz64(ext_[k]);
        return -1;
    }

    std::vector<int> to_indices() const {
        std::vector<int> out;
        out.reserve(count());
        for_each_bit([&](int i) { out.push_back(i); });
        return out;
    }

    template <typename Fn>
    void for_each_bit(Fn&& fn) const {
        std::uint64_t w = w0_;
        while (w) {
            fn(ctz64(w));
            w &= w - 1;
        }
        for (std::size_t k = 0; k < ext_.size(); ++k) {
            w = ext_[k];
            int base = 64 * (static_cast<int>(k) + 1);
            while (w) {
                fn(base + ctz64(w));
                w &= w - 1;
            }
        }
    }

    std::size_t hash() const {
        std::size_t h = std::hash<std::uint64_t>{}(w0_);
        for (std::uint64_t w : ext_) h = h * 1000003u ^ std::hash<std::uint64_t>{}(w);
        return h;
    }

private:
    int nbits_ = 0;
    std::uint64_t w0_ = 0;
    std::vector<std::uint64_t> ext_;

    void check_index(int i) const {
        if (i < 0 || i >= nbits_) throw std::out_of_range("Bits: index out of range");
    }

    std::uint64_t& word_ref(int k) { return k == 0 ? w0_ : ext_[k - 1]; }
    std::uint64_t word_ref_const(int k) const { return k == 0 ? w0_ : ext_[k - 1]; }

    template <typename Op>
    Bits binop(const Bits& o, Op op) const {
        if (nbits_ != o.nbits_) throw std::invalid_argument("Bits: capacity mismatch");
        Bits r(nbits_);
        r.w0_ = op(w0_, o.w0_);
        for (std::size_t k = 0; k < ext_.size(); ++k) r.ext_[k] = op(ext_[k], o.ext_[k]);
        return r;
    }

    static int popcount64(std::uint64_t w) { return __builtin_popcountll(w); }
    static int ctz64(std::uint64_t w) { return __builtin_ctzll(w); }
};

}  // namespace facetforest
