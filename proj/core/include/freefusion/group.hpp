#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "freefusion/fusion_ring.hpp"

namespace freefusion {

using GElem = std::uint16_t;

// Finite group given by its full multiplication table.  All group axioms are
// checked exhaustively at construction; identity is always element 0 after
// construction (the constructor reorders nothing, it requires it up front).
class GroupTable {
  public:
    GroupTable(std::string name, std::vector<std::string> element_names,
               std::vector<std::vector<GElem>> table);

    const std::string& name() const { return name_; }
    std::size_t size() const { return names_.size(); }
    GElem identity() const { return 0; }

    GElem mul(GElem a, GElem b) const;
    GElem inverse(GElem a) const { return inverse_.at(a); }
    // g x g^{-1}
    GElem conjugate(GElem g, GElem x) const { return mul(mul(g, x), inverse(g)); }

    const std::string& element_name(GElem a) const { return names_.at(a); }
    std::optional<GElem> find_element(std::string_view name) const;
    GElem require_element(std::string_view name) const;

    // Classes sorted by least member index; the identity class comes first.
    std::vector<std::vector<GElem>> conjugacy_classes() const;
    std::vector<GElem> centralizer(GElem a) const;

    const std::vector<std::vector<GElem>>& table() const { return table_; }

  private:
    std::string name_;
    std::vector<std::string> names_;
    std::vector<std::vector<GElem>> table_;
    std::vector<GElem> inverse_;
};

// Built-in tables: "trivial", "z2", "z3", "z4", "s3", "d4".
std::optional<GroupTable> builtin_group(std::string_view name);

// Pointed fusion ring of a finite group: one simple per element,
// N^c_{ab} = [c == ab], dual = inverse.
FusionRing group_ring(const GroupTable& g);

// Inverse direction: recover the table from a ring in which every product of
// two simples is a single simple with multiplicity one.  Throws input_error
// if the ring is not of that shape.
GroupTable group_from_pointed_ring(const FusionRing& ring);

// True when every a (x) b is a single basis element with coefficient one.
bool is_pointed(const FusionRing& ring);

} // namespace freefusion
