#pragma once

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "freefusion/free_product.hpp"
#include "freefusion/fusion_ring.hpp"
#include "freefusion/group.hpp"
#include "freefusion/report.hpp"
#include "freefusion/word.hpp"

namespace freefusion {

// ---- concrete rings ----------------------------------------------------

// One simple, the unit.
FusionRing trivial_ring();

// {1, tau} with tau (x) tau = 1 + tau.
FusionRing fibonacci_ring();

// Representation ring shaped like the irreducible characters of the symmetric
// group on three letters: {1, s, t}, s(x)s = 1, s(x)t = t, t(x)t = 1 + s + t.
FusionRing rep_s3_ring();

// Truncated ladder ring with simples f0..f_{n-2} and
//   f_i (x) f_j = f_{|i-j|} + f_{|i-j|+2} + ... + f_{min(i+j, 2(n-2)-i-j)}.
// Requires n >= 3.
FusionRing tlj_ring(int n);

// Untruncated ladder fusion stored up to level L: simples f0..f_L with
//   f_i (x) f_j = f_{|i-j|} + ... + f_{i+j},
// and every pair with i + j > L marked as overflowing (fusing it throws
// truncation_overflow instead of silently clipping).
FusionRing tlj_generic(int level);

// Sub-ring on the even-index simples of a ladder ring (labels f0, f2, ...).
// Requires every label to be named f<k> and the fusion to preserve index
// parity; overflow marks restrict to the even pairs.
FusionRing even_part(const FusionRing& ring);

// Built-in ring grammar: "trivial", "fib", "rep_s3", "z2", "z3", "z4", "s3",
// "d4", "tlj:<n>", "tlj-generic:<L>", "tlj-even:<n>".  Unknown names give
// nullopt; a recognized prefix with a malformed number throws input_error.
std::optional<FusionRing> builtin_ring(std::string_view spec);

// ---- reduced words over a free product of two groups -------------------
// Letters are (side, element index): side C carries elements of g, side D
// elements of h; index 0 (the identity) never appears in a reduced word.

std::string format_group_word(const GroupTable& g, const GroupTable& h, const Word& w);

// Product of reduced words with full cancellation at the seam.
Word fg_multiply(const GroupTable& g, const GroupTable& h, const Word& x, const Word& y);

Word fg_inverse(const GroupTable& g, const GroupTable& h, const Word& x);

// ---- conjugacy in the free product of two groups -----------------------

enum class ConjType { Unit, GType, HType, Mixed };

std::string conj_type_name(ConjType t);

// One conjugacy class among the cyclically reduced words of bounded length:
// the empty word, single letters (classified by conjugacy inside their own
// factor), or even alternating words (classified by letter rotation).
struct ConjugacyClass {
    Word rep;                             // shortlex-least member
    ConjType type = ConjType::Unit;
    std::vector<Word> members;            // sorted
    Word generator;                       // Mixed: primitive letter-level root
    std::vector<Label> centralizer_elems; // single-letter types: factor centralizer
    std::string centralizer_desc;
};

// All conjugacy classes of the free product with a cyclically reduced
// representative of length <= len_bound, sorted by representative.  Single
// letters use brute-force conjugacy inside their factor; centralizers of
// single letters are computed inside their own factor, and mixed classes get
// the infinite cyclic centralizer generated by the primitive root.
std::vector<ConjugacyClass> classify_conjugacy(const GroupTable& g, const GroupTable& h,
                                               int len_bound);

// Cross-check of the annular decomposition of group_ring(g) * group_ring(h)
// against the group-theoretic classification: mixed classes correspond one to
// one with the cyclic word classes (period = centralizer generator), single
// letter classes reproduce their factor centralizer through annulus counts,
// the weight-zero corner sees every annulus with dimension one, and the
// routed same-side blocks are empty because the adjoint support of a pointed
// ring is trivial.  Verified up to the given bounds.
CheckResult pointed_cross_check(const GroupTable& g, const GroupTable& h, int wmax, int vmax);

// ---- generation closures ----------------------------------------------

struct GeneratedSet {
    std::set<Word> words;
    bool bound_hit = false; // some product word exceeded len_bound
    bool overflow = false;  // some product hit a truncation marker; partial
};

// Closure of the generators and their duals under fuse_words, restricted to
// words of length <= len_bound.  Deterministic worklist; overflowing pairs
// are skipped and flagged.
GeneratedSet generated_simples(const FreeProduct& fp, const std::set<Word>& generators,
                               int len_bound);

struct MoritaVerdict {
    bool xxbar_equal = false; // <a bbbb a> = <a bb a> within the bound
    bool xbarx_equal = false; // <bb aa bb> = <aa, bb> within the bound
    bool bound_hit = false;
    bool overflow = false;
    GeneratedSet xxbar_left, xxbar_right, xbarx_left, xbarx_right;
};

// Generation-set certificate for the composite of two ladder rings, with
// a = f1 on the C side and b = f1 on the D side: the closures generated by
// the simple summands of a(x)b(x)b(x)b(x)b(x)a and of a(x)b(x)b(x)a must
// agree, and likewise b(x)b(x)a(x)a(x)b(x)b against {a(x)a, b(x)b} jointly.
// Equality is certified within len_bound only.
MoritaVerdict verify_morita_generation(const FreeProduct& fp, int len_bound);

CheckResult morita_check(const FreeProduct& fp, const MoritaVerdict& verdict, int len_bound);

} // namespace freefusion
