#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "freefusion/free_product.hpp"
#include "freefusion/report.hpp"

namespace freefusion {

// dim Hom(v (x) b, c (x) v): the (b, c) weight block of the annular algebra
// at annulus object v, computed from word fusion.
std::int64_t tube_dim(const FreeProduct& fp, const Word& v, const Word& b, const Word& c);

struct TubeBlockEntry {
    Word v, b, c;
    std::int64_t dim = 0;
    friend bool operator==(const TubeBlockEntry&, const TubeBlockEntry&) = default;
};

// All v with |v| <= vmax and tube_dim(v, b, c) > 0, in word order.
std::vector<TubeBlockEntry> block_support(const FreeProduct& fp, const Word& b, const Word& c,
                                          int vmax);

// Structure statements verified on finite truncations (weights bounded by
// wmax, annulus objects by vmax):
//   Equiv       support between W weights only along rotation equivalence,
//               with explicit dual-prefix witnesses on the positive side
//   UneqLen     no support between W weights and shorter weights
//   Wt1         the (w, w) diagonal is 1 exactly on powers of the primitive
//               period of w and its dual, 0 elsewhere
//   AdjW0       (empty, single-letter) support iff the letter lies in the
//               adjoint support of its factor; witnesses start on that side
//   AdjCd       (C-letter, D-letter) support iff both letters lie in their
//               adjoint supports; supporting annuli are D..C words and the
//               dimension factorizes through the two boundary letters
//   AdjCc       same-side letter weights: single-letter annuli reproduce the
//               factor's own tube dimensions; longer supporting annuli are
//               same-side words whose dimension factorizes, and force both
//               weights into the adjoint support
//   QuotientSum every supported block classifies as weight-zero corner,
//               factor tube block, W block along the equivalence, or a block
//               routed through weight zero; no cross terms
enum class Lemma { Equiv, UneqLen, Wt1, AdjW0, AdjCd, AdjCc, QuotientSum };

std::vector<Lemma> all_lemmas();
std::string lemma_id(Lemma l);
std::optional<Lemma> lemma_from_id(std::string_view id);

// Runs one bounded verification.  Scans are parallelized over weight pairs
// with deterministic aggregation.  A truncation overflow aborts the scan and
// marks the result partial; the adjoint-support lemmas refuse truncated
// factors outright (their support sets are not finitely certified).
CheckResult verify_lemma(const FreeProduct& fp, Lemma lemma, int wmax, int vmax);

struct WClassEntry {
    CyclicClass cls;
    std::size_t matrix_size = 0; // number of class members
    friend bool operator==(const WClassEntry&, const WClassEntry&) = default;
};

// Bounded decomposition data: the weight-zero corner dimensions by annulus
// length, the weight-zero-routed blocks at same-side letter weights (empty
// exactly when the factor's adjoint support is trivial), and the rotation
// classes of W weights with their block sizes.
struct DecompositionReport {
    int wmax = 0, vmax = 0;
    std::vector<std::int64_t> weight0_dims_by_length;
    std::vector<TubeBlockEntry> plus_c, plus_d;
    std::vector<WClassEntry> wclasses;
    std::string note;
};

DecompositionReport decomposition_report(const FreeProduct& fp, int wmax, int vmax);

// Rendering of a decomposition report for serialized output.
CheckResult decomposition_as_check(const FreeProduct& fp, const DecompositionReport& rep);

struct WClassCount {
    std::int64_t classes = 0;     // rotation classes of length 2k
    std::int64_t member_sum = 0;  // sum of class sizes
    std::int64_t words = 0;       // all W words of length 2k, = (mn)^k
    friend bool operator==(const WClassCount&, const WClassCount&) = default;
};

// Rotation-class bookkeeping per block count k = 1..kmax, computed by
// streaming canonical-member detection over letter tuples (no word list is
// materialized, so large alphabets stay cheap).
std::vector<WClassCount> wclass_counts(const FreeProduct& fp, int kmax);

} // namespace freefusion
