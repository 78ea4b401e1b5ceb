#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "freefusion/basis_sum.hpp"
#include "freefusion/errors.hpp"

namespace freefusion {

using Label = std::uint16_t;
using Mult = std::int64_t;

using SimpleSum = BasisSum<Label>;

// One stored multiplicity N^c_{ab} = n of the product a (x) b = sum_c n·c.
struct TensorEntry {
    Label a = 0, b = 0, c = 0;
    Mult n = 0;
};

struct Violation {
    std::string axiom;   // "unit", "associativity", "duality", "dual-involution", "frobenius"
    std::string witness; // offending labels / triple, human readable
};

struct ValidationReport {
    std::vector<Violation> violations;
    // number of checks skipped because a fusion left the truncation window;
    // nonzero means the verdict is bounded, not absolute
    std::int64_t truncation_skips = 0;
    bool ok() const { return violations.empty(); }
};

// A fusion ring presented by labels (declaration order fixes indexing and all
// report ordering), a unit label, a dual involution, and a sparse nonnegative
// integer multiplicity tensor.  Absent triples are zero.  Instances are
// immutable; all operations are const and safe to share across threads.
//
// Rings modeling a truncation of an infinite ring carry an overflow marker on
// the label pairs whose true product would leave the window; fusing such a
// pair throws truncation_overflow instead of silently clipping.
class FusionRing {
public:
    FusionRing(std::string name,
               std::vector<std::string> labels,
               const std::string& unit,
               const std::map<std::string, std::string>& dual,
               const std::vector<TensorEntry>& tensor,
               std::set<std::pair<Label, Label>> overflow_pairs = {});

    const std::string& name() const { return name_; }
    std::size_t size() const { return labels_.size(); }
    Label unit() const { return unit_; }
    Label dual(Label a) const { return dual_.at(a); }

    const std::string& label_name(Label a) const { return labels_.at(a); }
    std::optional<Label> find_label(std::string_view name) const;
    Label require_label(std::string_view name) const; // input_error if unknown

    Mult mult(Label a, Label b, Label c) const;

    // Product of two simples as a multiplicity vector.
    // Throws truncation_overflow on a marked pair.
    SimpleSum fuse(Label a, Label b) const;

    // Bilinear extension of fuse to formal sums.
    SimpleSum fuse_sum(const SimpleSum& x, const SimpleSum& y) const;

    bool truncated() const { return !overflow_pairs_.empty(); }
    bool fuse_overflows(Label a, Label b) const;

    const std::vector<TensorEntry>& entries() const { return entries_; }

    std::string format_sum(const SimpleSum& s) const;

private:
    std::string name_;
    std::vector<std::string> labels_;
    std::map<std::string, Label, std::less<>> index_;
    Label unit_ = 0;
    std::vector<Label> dual_;
    std::vector<TensorEntry> entries_;                  // sorted by (a,b,c)
    std::map<std::uint32_t, SimpleSum> rows_;           // key a<<16|b
    std::set<std::pair<Label, Label>> overflow_pairs_;
};

// Checks the ring axioms: unit law, associativity, duality of the unit
// multiplicity, compatibility of the tensor with the dual involution, and
// Frobenius reciprocity.  Violations carry the axiom name and a witness.
// Truncated rings are checked on the non-overflowing window only, with the
// number of skipped checks reported.
ValidationReport validate_ring(const FusionRing& ring);

// Frobenius-Perron dimension of a simple: the Perron eigenvalue of the fusion
// matrix (N_a)_{bc} = N^c_{ab}, computed by power iteration (all-ones seed, on
// the unit-shifted matrix so periodic fusion graphs converge).  Throws
// numeric_error if the iteration cap (1e5) is reached and truncation_overflow
// if the matrix is not fully known.
double fp_dim(const FusionRing& ring, Label a, double tol = 1e-9);

// Labels a admitting some b with N^a_{b,dual(b)} != 0; always contains the
// unit for a valid ring.  Sorted by label index.  Throws truncation_overflow
// for truncated rings (the support of the infinite ring is not certified by
// the stored window).
std::vector<Label> adjoint_support(const FusionRing& ring);

} // namespace freefusion
