#pragma once

#include <cstdint>
#include <map>
#include <utility>

namespace freefusion {

// Formal Z-linear combination of basis elements of type Key.
// Invariant: no stored coefficient is zero.
template <typename Key>
class BasisSum {
public:
    using Coeff = std::int64_t;
    using Map = std::map<Key, Coeff>;
    using const_iterator = typename Map::const_iterator;

    BasisSum() = default;

    static BasisSum single(Key k, Coeff n = 1) {
        BasisSum s;
        s.add(std::move(k), n);
        return s;
    }

    void add(const Key& k, Coeff n) {
        if (n == 0) return;
        auto [it, inserted] = terms_.try_emplace(k, n);
        if (!inserted) {
            it->second += n;
            if (it->second == 0) terms_.erase(it);
        }
    }

    void add(const BasisSum& other, Coeff scale = 1) {
        if (scale == 0) return;
        for (const auto& [k, n] : other.terms_) add(k, n * scale);
    }

    Coeff coeff(const Key& k) const {
        auto it = terms_.find(k);
        return it == terms_.end() ? 0 : it->second;
    }

    bool contains(const Key& k) const { return terms_.count(k) != 0; }
    bool empty() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    const_iterator begin() const { return terms_.begin(); }
    const_iterator end() const { return terms_.end(); }

    bool operator==(const BasisSum& other) const { return terms_ == other.terms_; }

private:
    Map terms_;
};

// Pairing <x, y> = sum over common keys of the coefficient product.  For
// multiplicity vectors of semisimple objects this is the hom-space dimension.
template <typename Key>
std::int64_t hom_dim(const BasisSum<Key>& x, const BasisSum<Key>& y) {
    const BasisSum<Key>& a = x.size() <= y.size() ? x : y;
    const BasisSum<Key>& b = x.size() <= y.size() ? y : x;
    std::int64_t total = 0;
    for (const auto& [k, n] : a) total += n * b.coeff(k);
    return total;
}

} // namespace freefusion
