#include "freefusion/pointed_tube.hpp"

#include <random>
#include <set>
#include <sstream>
#include <tuple>

#include "freefusion/errors.hpp"

namespace freefusion {

PointedTubeAlgebra::PointedTubeAlgebra(GroupTable group) : group_(std::move(group)) {}

std::optional<TubeBasis> PointedTubeAlgebra::basis_product(TubeBasis x, TubeBasis y) const {
    if (x.b != target_weight(y)) return std::nullopt;
    return TubeBasis{group_.mul(x.g, y.g), y.b};
}

TubeBasis PointedTubeAlgebra::basis_sharp(TubeBasis x) const {
    return TubeBasis{group_.inverse(x.g), target_weight(x)};
}

PointedTubeAlgebra::Element PointedTubeAlgebra::basis_element(GElem g, GElem b) const {
    return Element{{TubeBasis{g, b}, GInt{1, 0}}};
}

PointedTubeAlgebra::Element PointedTubeAlgebra::multiply(const Element& x,
                                                         const Element& y) const {
    Element out;
    for (const auto& [tx, cx] : x)
        for (const auto& [ty, cy] : y) {
            const auto p = basis_product(tx, ty);
            if (!p) continue;
            GInt& acc = out[*p];
            acc = acc + cx * cy;
        }
    for (auto it = out.begin(); it != out.end();)
        it = it->second.zero() ? out.erase(it) : std::next(it);
    return out;
}

PointedTubeAlgebra::Element PointedTubeAlgebra::sharp(const Element& x) const {
    Element out;
    for (const auto& [t, c] : x) out[basis_sharp(t)] = c.conj();
    return out;
}

GInt PointedTubeAlgebra::trace(const Element& x) const {
    GInt out;
    for (const auto& [t, c] : x)
        if (t.g == group_.identity()) out = out + c;
    return out;
}

PointedTubeAlgebra::Element PointedTubeAlgebra::scale(const Element& x, GInt c) const {
    Element out;
    for (const auto& [t, v] : x) {
        const GInt s = v * c;
        if (!s.zero()) out[t] = s;
    }
    return out;
}

PointedTubeAlgebra::Element PointedTubeAlgebra::add(const Element& x, const Element& y) const {
    Element out = x;
    for (const auto& [t, v] : y) {
        GInt& acc = out[t];
        acc = acc + v;
        if (acc.zero()) out.erase(t);
    }
    return out;
}

namespace {

std::string basis_name(const GroupTable& g, TubeBasis t) {
    return "T[" + g.element_name(t.g) + "," + g.element_name(t.b) + "]";
}

} // namespace

CheckResult pointed_summand_check(const GroupTable& g, std::uint64_t seed, int samples) {
    CheckResult out;
    out.id = "pointed-tube";
    out.bound("samples", samples);
    out.put("group", g.name());
    out.put("seed", std::to_string(seed));

    const PointedTubeAlgebra alg(g);
    const std::size_t n = g.size();
    out.put("dimension", std::to_string(alg.dimension()));

    // dimension bookkeeping over conjugacy classes
    std::int64_t corner_total = 0;
    for (const std::vector<GElem>& cls : g.conjugacy_classes()) {
        const GElem rep = cls.front();
        const std::int64_t csize = std::int64_t(cls.size());
        const std::int64_t cent = std::int64_t(g.centralizer(rep).size());
        corner_total += csize * csize * cent;
        std::ostringstream os;
        os << "size=" << csize << " centralizer=" << cent << " corner=" << csize * csize * cent;
        out.put("class-" + g.element_name(rep), os.str());
    }
    out.put("corner-total", std::to_string(corner_total));
    if (corner_total != std::int64_t(n) * std::int64_t(n))
        out.fail("corner dimensions sum to " + std::to_string(corner_total) + ", expected " +
                 std::to_string(n * n));

    // product support agrees with hom dimensions in the group ring
    const FusionRing ring = group_ring(g);
    for (GElem v = 0; v < n; ++v)
        for (GElem b = 0; b < n; ++b)
            for (GElem c = 0; c < n; ++c) {
                const std::int64_t d =
                    hom_dim(ring.fuse(Label(v), Label(b)), ring.fuse(Label(c), Label(v)));
                const std::int64_t want = (c == g.conjugate(v, b)) ? 1 : 0;
                if (d != want) {
                    std::ostringstream os;
                    os << "ring hom dimension vs conjugation: v=" << g.element_name(v)
                       << " b=" << g.element_name(b) << " c=" << g.element_name(c)
                       << " dim=" << d << " want=" << want;
                    out.fail(os.str());
                }
            }

    std::vector<TubeBasis> basis;
    basis.reserve(n * n);
    for (GElem gg = 0; gg < n; ++gg)
        for (GElem b = 0; b < n; ++b) basis.push_back({gg, b});

    // product support matches composability of the underlying blocks
    for (TubeBasis x : basis)
        for (TubeBasis y : basis) {
            const bool nz = alg.basis_product(x, y).has_value();
            const bool composable = x.b == alg.target_weight(y);
            if (nz != composable)
                out.fail("product support vs weight matching at " + basis_name(g, x) + " * " +
                         basis_name(g, y));
        }

    // associativity on all basis triples
    std::int64_t assoc_checked = 0;
    for (TubeBasis x : basis)
        for (TubeBasis y : basis) {
            const auto xy = alg.basis_product(x, y);
            for (TubeBasis z : basis) {
                const auto yz = alg.basis_product(y, z);
                const auto left = xy ? alg.basis_product(*xy, z) : std::nullopt;
                const auto right = yz ? alg.basis_product(x, *yz) : std::nullopt;
                ++assoc_checked;
                if (left != right) {
                    out.fail("associativity at " + basis_name(g, x) + " * " +
                             basis_name(g, y) + " * " + basis_name(g, z));
                }
            }
        }
    out.put("associativity-triples", std::to_string(assoc_checked));

    // # is an involution, reverses products, and fixes the weight idempotents
    for (TubeBasis x : basis) {
        if (alg.basis_sharp(alg.basis_sharp(x)) != x)
            out.fail("sharp is not involutive at " + basis_name(g, x));
        if (x.g == g.identity() && alg.basis_sharp(x) != x)
            out.fail("sharp moves the weight idempotent " + basis_name(g, x));
    }
    for (TubeBasis x : basis)
        for (TubeBasis y : basis) {
            const auto xy = alg.basis_product(x, y);
            const auto rev = alg.basis_product(alg.basis_sharp(y), alg.basis_sharp(x));
            const std::optional<TubeBasis> want =
                xy ? std::optional<TubeBasis>(alg.basis_sharp(*xy)) : std::nullopt;
            if (rev != want)
                out.fail("sharp does not reverse " + basis_name(g, x) + " * " +
                         basis_name(g, y));
        }

    // trace: supported on identity annuli, tracial, and weight idempotents
    // are trace-one projections
    for (TubeBasis x : basis) {
        const GInt tr = alg.trace(alg.basis_element(x.g, x.b));
        const GInt want = x.g == g.identity() ? GInt{1, 0} : GInt{0, 0};
        if (!(tr == want)) out.fail("trace value at " + basis_name(g, x));
        if (x.g == g.identity()) {
            const auto sq = alg.basis_product(x, x);
            if (!sq || *sq != x)
                out.fail("weight idempotent is not idempotent at " + basis_name(g, x));
        }
    }
    for (TubeBasis x : basis)
        for (TubeBasis y : basis) {
            const GInt a = alg.trace(alg.multiply(alg.basis_element(x.g, x.b),
                                                  alg.basis_element(y.g, y.b)));
            const GInt b = alg.trace(alg.multiply(alg.basis_element(y.g, y.b),
                                                  alg.basis_element(x.g, x.b)));
            if (!(a == b))
                out.fail("trace is not tracial on " + basis_name(g, x) + ", " +
                         basis_name(g, y));
        }

    // corner of each class is (matrix units over the class) x (group algebra
    // of the centralizer), via T_{g,b} -> (E_{g b g^-1, b}, k_{g b g^-1}^-1 g k_b)
    for (const std::vector<GElem>& cls : g.conjugacy_classes()) {
        const GElem rep = cls.front();
        const std::vector<GElem> cent = g.centralizer(rep);
        const std::set<GElem> cent_set(cent.begin(), cent.end());
        std::map<GElem, GElem> k; // member -> smallest x with x rep x^-1 = member
        for (GElem member : cls)
            for (GElem x = 0; x < n; ++x)
                if (g.conjugate(x, rep) == member) {
                    k[member] = x;
                    break;
                }
        const std::set<GElem> in_class(cls.begin(), cls.end());
        auto phi = [&](TubeBasis t) {
            const GElem bp = alg.target_weight(t);
            const GElem z = g.mul(g.mul(g.inverse(k.at(bp)), t.g), k.at(t.b));
            return std::tuple<GElem, GElem, GElem>(bp, t.b, z);
        };
        std::vector<TubeBasis> corner;
        for (TubeBasis t : basis)
            if (in_class.count(t.b)) corner.push_back(t);
        std::set<std::tuple<GElem, GElem, GElem>> images;
        for (TubeBasis t : corner) {
            const auto [bp, b, z] = phi(t);
            if (!cent_set.count(z))
                out.fail("corner image outside the centralizer at " + basis_name(g, t) +
                         " (class " + g.element_name(rep) + ")");
            images.insert({bp, b, z});
        }
        const std::size_t expected =
            cls.size() * cls.size() * cent.size();
        if (images.size() != corner.size() || images.size() != expected) {
            std::ostringstream os;
            os << "corner basis map not bijective for class " << g.element_name(rep)
               << ": images=" << images.size() << " corner=" << corner.size()
               << " expected=" << expected;
            out.fail(os.str());
        }
        for (TubeBasis x : corner)
            for (TubeBasis y : corner) {
                const auto [xb, xs, xz] = phi(x);
                const auto [yb, ys, yz] = phi(y);
                const auto prod = alg.basis_product(x, y);
                const bool eunits_compose = xs == yb;
                if (prod.has_value() != eunits_compose) {
                    out.fail("corner product support mismatch at " + basis_name(g, x) +
                             " * " + basis_name(g, y));
                    continue;
                }
                if (!prod) continue;
                const auto [pb, ps, pz] = phi(*prod);
                if (pb != xb || ps != ys || pz != g.mul(xz, yz))
                    out.fail("corner map is not multiplicative at " + basis_name(g, x) +
                             " * " + basis_name(g, y));
            }
        for (TubeBasis x : corner) {
            const auto [bp, b, z] = phi(x);
            const auto [sb, ss, sz] = phi(alg.basis_sharp(x));
            if (sb != b || ss != bp || sz != g.inverse(z))
                out.fail("corner map does not transport sharp at " + basis_name(g, x));
        }
    }

    // positivity of the trace form on seeded pseudo-random elements
    std::mt19937_64 rng(seed);
    std::int64_t min_re = 0;
    bool have_min = false;
    for (int s = 0; s < samples; ++s) {
        PointedTubeAlgebra::Element x;
        for (TubeBasis t : basis) {
            const GInt c{std::int64_t(rng() % 5) - 2, std::int64_t(rng() % 5) - 2};
            if (!c.zero()) x[t] = c;
        }
        const GInt tr = alg.trace(alg.multiply(alg.sharp(x), x));
        if (tr.im != 0 || tr.re < 0) {
            std::ostringstream os;
            os << "trace of x# x not a nonnegative real at sample " << s << ": re=" << tr.re
               << " im=" << tr.im;
            out.fail(os.str());
        }
        if (!have_min || tr.re < min_re) {
            min_re = tr.re;
            have_min = true;
        }
    }
    if (have_min) out.put("min-sampled-positivity", std::to_string(min_re));

    // spot identity from the construction: T_{g,b} T_{g^-1, g b g^-1} = T_{e, g b g^-1}
    for (TubeBasis x : basis) {
        const TubeBasis y{g.inverse(x.g), alg.target_weight(x)};
        const auto prod = alg.basis_product(y, x);
        if (!prod || prod->g != g.identity() || prod->b != x.b)
            out.fail("sharp partner does not invert the annulus at " + basis_name(g, x));
    }

    return out;
}

} // namespace freefusion
