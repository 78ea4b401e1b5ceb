#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "freefusion/basis_sum.hpp"
#include "freefusion/fusion_ring.hpp"

namespace freefusion {

// The two tensor factors of a free product.
enum class Side : std::uint8_t { C = 0, D = 1 };

constexpr Side opposite(Side s) { return s == Side::C ? Side::D : Side::C; }

struct Letter {
    Side side = Side::C;
    Label label = 0;
    friend auto operator<=>(const Letter&, const Letter&) = default;
};

// Reduced alternating word: adjacent letters from opposite sides, no unit
// letters, empty word = tensor unit.  Ordering is shortlex (length first,
// then letterwise with C < D), which is also the enumeration order.
struct Word {
    std::vector<Letter> letters;

    std::size_t size() const { return letters.size(); }
    bool empty() const { return letters.empty(); }

    friend bool operator==(const Word&, const Word&) = default;
    friend std::strong_ordering operator<=>(const Word& x, const Word& y) {
        if (x.letters.size() != y.letters.size())
            return x.letters.size() <=> y.letters.size();
        return x.letters <=> y.letters;
    }
};

using WordSum = BasisSum<Word>;

inline Word concat(const Word& x, const Word& y) {
    Word out = x;
    out.letters.insert(out.letters.end(), y.letters.begin(), y.letters.end());
    return out;
}

// Shape tests that do not need ring data.
inline bool alternating(const Word& w) {
    for (std::size_t i = 1; i < w.size(); ++i)
        if (w.letters[i].side == w.letters[i - 1].side) return false;
    return true;
}

// W = nonempty even-length alternating words whose first letter is a C letter.
inline bool w_shaped(const Word& w) {
    return !w.empty() && w.size() % 2 == 0 && w.letters.front().side == Side::C &&
           alternating(w);
}

// Left rotation by single letters; on even alternating words every rotation
// is again alternating (cyclic adjacency is preserved).
inline Word rotate_letters(const Word& w, std::size_t r) {
    if (w.empty()) return w;
    Word out;
    out.letters.reserve(w.size());
    for (std::size_t i = 0; i < w.size(); ++i)
        out.letters.push_back(w.letters[(i + r) % w.size()]);
    return out;
}

// Left rotation of a W-shaped word by whole C-D blocks.
inline Word rotate_blocks(const Word& w, std::size_t blocks) {
    return rotate_letters(w, 2 * blocks);
}

// Smallest d >= 1 with rotate_blocks(w, d) == w; always divides the block count.
inline std::size_t primitive_block_period(const Word& w) {
    const std::size_t k = w.size() / 2;
    for (std::size_t d = 1; d <= k; ++d) {
        if (k % d != 0) continue;
        if (rotate_blocks(w, d) == w) return d;
    }
    return k;
}

// First 2d letters of w, where d is the primitive block period.
inline Word primitive_root(const Word& w) {
    const std::size_t d = primitive_block_period(w);
    Word out;
    out.letters.assign(w.letters.begin(), w.letters.begin() + std::ptrdiff_t(2 * d));
    return out;
}

inline Word word_power(const Word& p, std::size_t n) {
    Word out;
    out.letters.reserve(p.size() * n);
    for (std::size_t i = 0; i < n; ++i)
        out.letters.insert(out.letters.end(), p.letters.begin(), p.letters.end());
    return out;
}

} // namespace freefusion
