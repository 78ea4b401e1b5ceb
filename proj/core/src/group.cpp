#include "freefusion/group.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <sstream>

#include "freefusion/errors.hpp"

namespace freefusion {

GroupTable::GroupTable(std::string name, std::vector<std::string> element_names,
                       std::vector<std::vector<GElem>> table)
    : name_(std::move(name)), names_(std::move(element_names)), table_(std::move(table)) {
    const std::size_t n = names_.size();
    if (n == 0) throw input_error("group '" + name_ + "': no elements");
    std::set<std::string> seen;
    for (const std::string& s : names_) {
        if (s.empty() || s.find(' ') != std::string::npos || s.find(':') != std::string::npos)
            throw input_error("group '" + name_ + "': element name '" + s +
                              "' is empty or contains a space or ':'");
        if (!seen.insert(s).second)
            throw input_error("group '" + name_ + "': duplicate element name '" + s + "'");
    }
    if (table_.size() != n)
        throw input_error("group '" + name_ + "': table must have one row per element");
    for (const auto& row : table_) {
        if (row.size() != n)
            throw input_error("group '" + name_ + "': table row of wrong width");
        for (GElem v : row)
            if (v >= n) throw input_error("group '" + name_ + "': table entry out of range");
    }
    for (GElem a = 0; a < n; ++a)
        if (table_[0][a] != a || table_[a][0] != a)
            throw input_error("group '" + name_ + "': element 0 ('" + names_[0] +
                              "') is not a two-sided identity");
    inverse_.assign(n, 0);
    for (GElem a = 0; a < n; ++a) {
        bool found = false;
        for (GElem b = 0; b < n; ++b) {
            if (table_[a][b] == 0 && table_[b][a] == 0) {
                inverse_[a] = b;
                found = true;
                break;
            }
        }
        if (!found)
            throw input_error("group '" + name_ + "': element '" + names_[a] +
                              "' has no two-sided inverse");
    }
    for (GElem a = 0; a < n; ++a)
        for (GElem b = 0; b < n; ++b)
            for (GElem c = 0; c < n; ++c)
                if (table_[table_[a][b]][c] != table_[a][table_[b][c]]) {
                    std::ostringstream os;
                    os << "group '" << name_ << "': multiplication is not associative at ("
                       << names_[a] << ", " << names_[b] << ", " << names_[c] << ")";
                    throw input_error(os.str());
                }
}

GElem GroupTable::mul(GElem a, GElem b) const {
    if (a >= size() || b >= size())
        throw input_error("group '" + name_ + "': element index out of range");
    return table_[a][b];
}

std::optional<GElem> GroupTable::find_element(std::string_view name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return GElem(i);
    return std::nullopt;
}

GElem GroupTable::require_element(std::string_view name) const {
    if (auto e = find_element(name)) return *e;
    throw input_error("group '" + name_ + "': unknown element '" + std::string(name) + "'");
}

std::vector<std::vector<GElem>> GroupTable::conjugacy_classes() const {
    std::vector<std::vector<GElem>> out;
    std::vector<bool> done(size(), false);
    for (GElem a = 0; a < size(); ++a) {
        if (done[a]) continue;
        std::set<GElem> cls;
        for (GElem x = 0; x < size(); ++x) cls.insert(conjugate(x, a));
        for (GElem m : cls) done[m] = true;
        out.emplace_back(cls.begin(), cls.end());
    }
    return out;
}

std::vector<GElem> GroupTable::centralizer(GElem a) const {
    std::vector<GElem> out;
    for (GElem x = 0; x < size(); ++x)
        if (mul(x, a) == mul(a, x)) out.push_back(x);
    return out;
}

namespace {

GroupTable cyclic_group(std::string name, std::size_t n) {
    std::vector<std::string> names;
    names.emplace_back("e");
    for (std::size_t i = 1; i < n; ++i)
        names.push_back(i == 1 ? "g" : "g" + std::to_string(i));
    std::vector<std::vector<GElem>> table(n, std::vector<GElem>(n));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) table[a][b] = GElem((a + b) % n);
    return GroupTable(std::move(name), std::move(names), std::move(table));
}

// Permutations of {0,1,2}; product fg acts by x -> f(g(x)).
GroupTable s3_group() {
    using Perm = std::array<int, 3>;
    const std::vector<std::pair<std::string, Perm>> elems = {
        {"e", {0, 1, 2}},     {"(12)", {1, 0, 2}},  {"(13)", {2, 1, 0}},
        {"(23)", {0, 2, 1}},  {"(123)", {1, 2, 0}}, {"(132)", {2, 0, 1}},
    };
    const std::size_t n = elems.size();
    auto index_of = [&](const Perm& p) {
        for (std::size_t i = 0; i < n; ++i)
            if (elems[i].second == p) return GElem(i);
        throw input_error("s3 table construction failed");
    };
    std::vector<std::string> names;
    for (const auto& [nm, p] : elems) names.push_back(nm);
    std::vector<std::vector<GElem>> table(n, std::vector<GElem>(n));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            Perm prod;
            for (int x = 0; x < 3; ++x) prod[x] = elems[a].second[elems[b].second[x]];
            table[a][b] = index_of(prod);
        }
    return GroupTable("s3", std::move(names), std::move(table));
}

// Dihedral group of order 8: r^i s^j with s r = r^3 s; index = i + 4j.
GroupTable d4_group() {
    const std::vector<std::string> names = {"e", "r", "r2", "r3", "s", "rs", "r2s", "r3s"};
    std::vector<std::vector<GElem>> table(8, std::vector<GElem>(8));
    for (int i1 = 0; i1 < 4; ++i1)
        for (int j1 = 0; j1 < 2; ++j1)
            for (int i2 = 0; i2 < 4; ++i2)
                for (int j2 = 0; j2 < 2; ++j2) {
                    const int i = ((i1 + (j1 ? 4 - i2 : i2)) % 4);
                    const int j = (j1 + j2) % 2;
                    table[std::size_t(i1 + 4 * j1)][std::size_t(i2 + 4 * j2)] =
                        GElem(i + 4 * j);
                }
    return GroupTable("d4", names, std::move(table));
}

} // namespace

std::optional<GroupTable> builtin_group(std::string_view name) {
    if (name == "trivial") return cyclic_group("trivial", 1);
    if (name == "z2") return cyclic_group("z2", 2);
    if (name == "z3") return cyclic_group("z3", 3);
    if (name == "z4") return cyclic_group("z4", 4);
    if (name == "s3") return s3_group();
    if (name == "d4") return d4_group();
    return std::nullopt;
}

FusionRing group_ring(const GroupTable& g) {
    std::vector<std::string> labels;
    std::map<std::string, std::string> dual;
    for (GElem a = 0; a < g.size(); ++a) {
        labels.push_back(g.element_name(a));
        dual[g.element_name(a)] = g.element_name(g.inverse(a));
    }
    std::vector<TensorEntry> tensor;
    for (GElem a = 0; a < g.size(); ++a)
        for (GElem b = 0; b < g.size(); ++b)
            tensor.push_back({Label(a), Label(b), Label(g.mul(a, b)), 1});
    return FusionRing(g.name(), std::move(labels), g.element_name(g.identity()),
                      std::move(dual), std::move(tensor));
}

bool is_pointed(const FusionRing& ring) {
    if (ring.truncated()) return false;
    for (Label a = 0; a < ring.size(); ++a)
        for (Label b = 0; b < ring.size(); ++b) {
            const SimpleSum p = ring.fuse(a, b);
            if (p.size() != 1 || p.begin()->second != 1) return false;
        }
    return true;
}

GroupTable group_from_pointed_ring(const FusionRing& ring) {
    if (!is_pointed(ring))
        throw input_error("ring '" + ring.name() +
                          "' is not pointed: some product is not a single simple");
    if (ring.unit() != 0)
        throw input_error("ring '" + ring.name() + "': unit must be the first label");
    std::vector<std::string> names;
    for (Label a = 0; a < ring.size(); ++a) names.push_back(ring.label_name(a));
    const std::size_t n = ring.size();
    std::vector<std::vector<GElem>> table(n, std::vector<GElem>(n));
    for (Label a = 0; a < n; ++a)
        for (Label b = 0; b < n; ++b) table[a][b] = GElem(ring.fuse(a, b).begin()->first);
    return GroupTable(ring.name(), std::move(names), std::move(table));
}

} // namespace freefusion
