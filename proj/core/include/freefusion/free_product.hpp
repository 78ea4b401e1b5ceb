#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "freefusion/fusion_ring.hpp"
#include "freefusion/word.hpp"

namespace freefusion {

enum class WordFilter {
    All,     // every reduced alternating word
    Lambda,  // {empty} ∪ single C letters ∪ single D letters ∪ W
    WOnly,   // nonempty even words starting on the C side
    SingleC, // single C letters
    SingleD, // single D letters
};

// Free product of two fusion rings at the ring level: simple objects are the
// reduced alternating words over the non-unit simples of the two factors, and
// fuse_words expands boundary products, recursing through the unit channel.
// Instances are immutable and safe to share across threads.
class FreeProduct {
public:
    // Both factors must pass validate_ring (on the non-overflowing window for
    // truncated factors); otherwise input_error.
    FreeProduct(FusionRing c, FusionRing d);

    const FusionRing& ring(Side s) const { return s == Side::C ? c_ : d_; }
    bool truncated() const { return c_.truncated() || d_.truncated(); }

    // number of non-unit simples on a side (the word alphabet)
    std::size_t letter_count(Side s) const;

    bool valid_word(const Word& w) const;
    void require_word(const Word& w) const; // input_error with the offending reason
    bool in_w(const Word& w) const;         // valid and W-shaped
    bool in_lambda(const Word& w) const;

    Word word_dual(const Word& w) const; // reverse the sequence, dualize letters

    // Product of two simple words as a sum of simple words with
    // multiplicities.  Throws truncation_overflow if a boundary product
    // leaves a factor's truncation window.
    WordSum fuse_words(const Word& w1, const Word& w2) const;

    // bilinear extension and left-to-right chain product
    WordSum fuse_word_sums(const WordSum& x, const WordSum& y) const;
    WordSum fuse_chain(const std::vector<Word>& factors) const;

    // All valid words with size <= max_len passing the filter, in shortlex
    // order (C-side letters sort before D-side ones).
    std::vector<Word> enumerate_words(int max_len, WordFilter filter) const;

    // Frobenius-Perron data; letter dimensions are computed once at
    // construction for non-truncated factors.  Throws truncation_overflow if
    // the factor is truncated.
    double letter_dim(Letter l) const;
    double word_dim(const Word& w) const;  // product of letter dimensions
    double sum_dim(const WordSum& s) const;

    std::string format_word(const Word& w) const;     // "C:f1 D:g1"; empty prints as "∅"
    std::string format_word_sum(const WordSum& s) const;
    Word parse_word(std::string_view text) const;     // inverse of format_word

private:
    FusionRing c_, d_;
    std::vector<double> dims_c_, dims_d_; // per-label FP dims; empty when truncated

    void fuse_rec(const Word& w1, std::size_t take1, const Word& w2, std::size_t drop2,
                  Mult scale, WordSum& out) const;
};

// Rotation class of a W word: canonical (shortlex-least) member, all distinct
// block rotations, and the primitive period with canonical = period^exponent.
struct CyclicClass {
    Word canonical;
    std::vector<Word> members; // sorted ascending
    Word period;               // primitive root of the canonical member
    int exponent = 1;

    friend bool operator==(const CyclicClass&, const CyclicClass&) = default;
};

// Throws input_error if w is not a valid W word of the product.
CyclicClass cyclic_class(const FreeProduct& fp, const Word& w);

} // namespace freefusion
