#pragma once

#include <cstdint>
#include <map>
#include <optional>

#include "freefusion/group.hpp"
#include "freefusion/report.hpp"

namespace freefusion {

// Gaussian integer, used so the conjugate-linear structure is exercised with
// exact arithmetic.
struct GInt {
    std::int64_t re = 0, im = 0;
    friend GInt operator+(GInt x, GInt y) { return {x.re + y.re, x.im + y.im}; }
    friend GInt operator*(GInt x, GInt y) {
        return {x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re};
    }
    friend bool operator==(GInt, GInt) = default;
    GInt conj() const { return {re, -im}; }
    bool zero() const { return re == 0 && im == 0; }
};

// Basis vector T_{g,b}: the annulus g at source weight b (target weight is
// g b g^{-1}).
struct TubeBasis {
    GElem g = 0, b = 0;
    friend auto operator<=>(const TubeBasis&, const TubeBasis&) = default;
};

// Tube algebra of the pointed category attached to a finite group: basis
// {T_{g,b} : g,b in G}, product
//   T_{g1,b1} T_{g2,b2} = [b1 == g2 b2 g2^{-1}] T_{g1 g2, b2},
// conjugate-linear anti-automorphism T_{g,b}^# = T_{g^{-1}, g b g^{-1}}, and
// the trace picking the coefficient of the identity annulus at each weight.
class PointedTubeAlgebra {
  public:
    using Element = std::map<TubeBasis, GInt>;

    explicit PointedTubeAlgebra(GroupTable group);

    const GroupTable& group() const { return group_; }
    std::size_t dimension() const { return group_.size() * group_.size(); }

    GElem target_weight(TubeBasis t) const { return group_.conjugate(t.g, t.b); }

    // nullopt when the pair annihilates (weights do not line up)
    std::optional<TubeBasis> basis_product(TubeBasis x, TubeBasis y) const;
    TubeBasis basis_sharp(TubeBasis x) const;

    Element basis_element(GElem g, GElem b) const;
    Element multiply(const Element& x, const Element& y) const;
    Element sharp(const Element& x) const; // conjugate-linear
    GInt trace(const Element& x) const;    // sum over b of coeff of T_{e,b}

    Element scale(const Element& x, GInt c) const;
    Element add(const Element& x, const Element& y) const;

  private:
    GroupTable group_;
};

// Exhaustive structure check of the pointed tube algebra of one group:
// dimension bookkeeping sum over classes of |class|^2 * |centralizer| =
// |G|^2, associativity on all basis triples, # an involutive
// anti-automorphism, traciality, positivity of trace(x# x) on `samples`
// seeded pseudo-random Gaussian-integer combinations, agreement of product
// support with hom dimensions in the group ring, and an explicit basis
// isomorphism of each class corner with (matrix units) x (group algebra of
// the centralizer).
CheckResult pointed_summand_check(const GroupTable& g, std::uint64_t seed = 1729,
                                  int samples = 200);

} // namespace freefusion
