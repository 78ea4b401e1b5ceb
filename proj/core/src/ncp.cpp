#include "freefusion/ncp.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "freefusion/errors.hpp"
#include "freefusion/group.hpp"

namespace freefusion {

namespace {

// Boundary walk index of a position: bottom i -> i, top j -> m + (n-1-j).
int walk_index(const ColoredNcp& ncp, bool top, int pos) {
    return top ? int(ncp.bottom.size()) + int(ncp.top.size()) - 1 - pos : pos;
}

int first_walk_index(const ColoredNcp& ncp, const NcpBlock& blk) {
    int best = int(ncp.bottom.size() + ncp.top.size());
    for (int p : blk.bottom) best = std::min(best, walk_index(ncp, false, p));
    for (int p : blk.top) best = std::min(best, walk_index(ncp, true, p));
    return best;
}

std::vector<int> walk_indices(const ColoredNcp& ncp, const NcpBlock& blk) {
    std::vector<int> out;
    for (int p : blk.bottom) out.push_back(walk_index(ncp, false, p));
    for (int p : blk.top) out.push_back(walk_index(ncp, true, p));
    std::sort(out.begin(), out.end());
    return out;
}

Letter letter_at(const ColoredNcp& ncp, bool top, int pos) {
    return top ? ncp.top[std::size_t(pos)] : ncp.bottom[std::size_t(pos)];
}

} // namespace

bool is_valid(const ColoredNcp& ncp) {
    const int m = int(ncp.bottom.size());
    const int n = int(ncp.top.size());
    std::vector<int> seen_bottom(std::size_t(m), 0), seen_top(std::size_t(n), 0);
    for (const NcpBlock& blk : ncp.blocks) {
        if (blk.bottom.empty() && blk.top.empty()) return false;
        for (int p : blk.bottom) {
            if (p < 0 || p >= m) return false;
            ++seen_bottom[std::size_t(p)];
            if (letter_at(ncp, false, p).side != blk.side) return false;
        }
        for (int p : blk.top) {
            if (p < 0 || p >= n) return false;
            ++seen_top[std::size_t(p)];
            if (letter_at(ncp, true, p).side != blk.side) return false;
        }
    }
    for (int c : seen_bottom)
        if (c != 1) return false;
    for (int c : seen_top)
        if (c != 1) return false;
    // crossing test: two blocks interleave iff their merged walk indices
    // change ownership at least three times
    std::vector<std::vector<int>> walks;
    for (const NcpBlock& blk : ncp.blocks) walks.push_back(walk_indices(ncp, blk));
    for (std::size_t a = 0; a < walks.size(); ++a)
        for (std::size_t b = a + 1; b < walks.size(); ++b) {
            std::size_t ia = 0, ib = 0;
            int changes = 0, last = -1;
            while (ia < walks[a].size() || ib < walks[b].size()) {
                int owner;
                if (ib == walks[b].size() ||
                    (ia < walks[a].size() && walks[a][ia] < walks[b][ib])) {
                    owner = 0;
                    ++ia;
                } else {
                    owner = 1;
                    ++ib;
                }
                if (owner != last) {
                    if (last != -1) ++changes;
                    last = owner;
                }
            }
            if (changes >= 3) return false;
        }
    return true;
}

std::int64_t block_weight(const FreeProduct& fp, const ColoredNcp& ncp, const NcpBlock& blk) {
    const FusionRing& ring = fp.ring(blk.side);
    auto fold = [&](const std::vector<int>& positions, bool top) {
        SimpleSum acc = SimpleSum::single(ring.unit(), 1);
        for (int p : positions)
            acc = ring.fuse_sum(acc, SimpleSum::single(letter_at(ncp, top, p).label, 1));
        return acc;
    };
    return hom_dim(fold(blk.bottom, false), fold(blk.top, true));
}

std::int64_t ncp_weight(const FreeProduct& fp, const ColoredNcp& ncp) {
    std::int64_t out = 1;
    for (const NcpBlock& blk : ncp.blocks) {
        out *= block_weight(fp, ncp, blk);
        if (out == 0) return 0;
    }
    return out;
}

std::vector<ColoredNcp> enumerate_ncps(const FreeProduct& fp, const std::vector<Letter>& sigma,
                                       const std::vector<Letter>& tau) {
    for (const Letter& l : sigma)
        if (l.label >= fp.ring(l.side).size() || l.label == fp.ring(l.side).unit())
            throw input_error("boundary letter is the unit or out of range");
    for (const Letter& l : tau)
        if (l.label >= fp.ring(l.side).size() || l.label == fp.ring(l.side).unit())
            throw input_error("boundary letter is the unit or out of range");

    const int m = int(sigma.size());
    const int n = int(tau.size());
    const int k = m + n;
    // letters along the boundary walk
    std::vector<Letter> walk(static_cast<std::size_t>(k));
    for (int i = 0; i < m; ++i) walk[std::size_t(i)] = sigma[std::size_t(i)];
    for (int j = 0; j < n; ++j) walk[std::size_t(m + n - 1 - j)] = tau[std::size_t(j)];

    std::vector<ColoredNcp> out;
    std::vector<std::vector<int>> blocks; // walk positions, ascending
    std::vector<std::size_t> stack;       // indices of joinable blocks

    auto emit = [&]() {
        ColoredNcp ncp;
        ncp.bottom = sigma;
        ncp.top = tau;
        for (const std::vector<int>& positions : blocks) {
            NcpBlock blk;
            blk.side = walk[std::size_t(positions.front())].side;
            for (int p : positions) {
                if (p < m)
                    blk.bottom.push_back(p);
                else
                    blk.top.push_back(m + n - 1 - p);
            }
            std::sort(blk.top.begin(), blk.top.end());
            ncp.blocks.push_back(std::move(blk));
        }
        out.push_back(std::move(ncp));
    };

    auto recurse = [&](auto&& self, int pos) -> void {
        if (pos == k) {
            emit();
            return;
        }
        const Side side = walk[std::size_t(pos)].side;
        // open a new block
        blocks.push_back({pos});
        stack.push_back(blocks.size() - 1);
        self(self, pos + 1);
        stack.pop_back();
        blocks.pop_back();
        // or join a joinable block of the same side, closing everything
        // stacked above it
        for (std::size_t s = stack.size(); s-- > 0;) {
            const std::size_t bidx = stack[s];
            if (walk[std::size_t(blocks[bidx].front())].side != side) continue;
            std::vector<std::size_t> saved(stack.begin() + std::ptrdiff_t(s) + 1, stack.end());
            stack.resize(s + 1);
            blocks[bidx].push_back(pos);
            self(self, pos + 1);
            blocks[bidx].pop_back();
            stack.insert(stack.end(), saved.begin(), saved.end());
        }
    };
    recurse(recurse, 0);
    return out;
}

std::int64_t spanning_bound(const FreeProduct& fp, const std::vector<Letter>& sigma,
                            const std::vector<Letter>& tau) {
    std::int64_t total = 0;
    for (const ColoredNcp& ncp : enumerate_ncps(fp, sigma, tau))
        total += ncp_weight(fp, ncp);
    return total;
}

namespace {

struct UnionFind {
    std::vector<std::size_t> parent;
    explicit UnionFind(std::size_t n) : parent(n) {
        std::iota(parent.begin(), parent.end(), std::size_t(0));
    }
    std::size_t find(std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

} // namespace

NcpComposition compose_ncp(const FreeProduct& fp, const ColoredNcp& t, const ColoredNcp& s) {
    if (!is_valid(s) || !is_valid(t)) throw input_error("composing an invalid partition");
    if (t.bottom != s.top)
        throw input_error("boundary mismatch: top row of the lower partition must equal the "
                          "bottom row of the upper one");
    const int mid = int(s.top.size());

    const std::size_t ns = s.blocks.size();
    UnionFind uf(ns + t.blocks.size());
    std::vector<std::size_t> s_owner(static_cast<std::size_t>(mid));
    std::vector<std::size_t> t_owner(static_cast<std::size_t>(mid));
    for (std::size_t i = 0; i < ns; ++i)
        for (int p : s.blocks[i].top) s_owner[std::size_t(p)] = i;
    for (std::size_t i = 0; i < t.blocks.size(); ++i)
        for (int p : t.blocks[i].bottom) t_owner[std::size_t(p)] = ns + i;
    for (int p = 0; p < mid; ++p) uf.unite(s_owner[std::size_t(p)], t_owner[std::size_t(p)]);

    struct Component {
        Side side = Side::C;
        std::vector<int> bottom, top, middle;
        std::int64_t pointed_value = 1;
    };
    std::map<std::size_t, Component> comps;
    const bool pointed = is_pointed(fp.ring(Side::C)) && is_pointed(fp.ring(Side::D));
    for (std::size_t i = 0; i < ns; ++i) {
        Component& c = comps[uf.find(i)];
        c.side = s.blocks[i].side;
        c.bottom.insert(c.bottom.end(), s.blocks[i].bottom.begin(), s.blocks[i].bottom.end());
        c.middle.insert(c.middle.end(), s.blocks[i].top.begin(), s.blocks[i].top.end());
        if (pointed) c.pointed_value *= block_weight(fp, s, s.blocks[i]);
    }
    for (std::size_t i = 0; i < t.blocks.size(); ++i) {
        Component& c = comps[uf.find(ns + i)];
        c.side = t.blocks[i].side;
        c.top.insert(c.top.end(), t.blocks[i].top.begin(), t.blocks[i].top.end());
        if (pointed) c.pointed_value *= block_weight(fp, t, t.blocks[i]);
    }

    NcpComposition out;
    out.result.bottom = s.bottom;
    out.result.top = t.top;
    out.scalar_known = pointed;
    for (auto& [root, c] : comps) {
        std::sort(c.bottom.begin(), c.bottom.end());
        std::sort(c.top.begin(), c.top.end());
        std::sort(c.middle.begin(), c.middle.end());
        if (c.bottom.empty() && c.top.empty()) {
            out.cancelled.push_back({c.side, c.middle, {}});
            if (pointed) out.scalar *= c.pointed_value;
        } else {
            out.result.blocks.push_back({c.side, c.bottom, c.top});
        }
    }
    std::sort(out.result.blocks.begin(), out.result.blocks.end(),
              [&](const NcpBlock& a, const NcpBlock& b) {
                  return first_walk_index(out.result, a) < first_walk_index(out.result, b);
              });
    std::sort(out.cancelled.begin(), out.cancelled.end(),
              [](const NcpBlock& a, const NcpBlock& b) {
                  return a.bottom.front() < b.bottom.front();
              });
    if (!pointed) out.scalar = 1;
    return out;
}

std::string format_ncp(const FreeProduct& fp, const ColoredNcp& ncp) {
    std::ostringstream os;
    auto letters = [&](const std::vector<Letter>& row) {
        if (row.empty()) return std::string("∅");
        std::string outstr;
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) outstr += ' ';
            outstr += row[i].side == Side::C ? "C:" : "D:";
            outstr += fp.ring(row[i].side).label_name(row[i].label);
        }
        return outstr;
    };
    os << "bottom=" << letters(ncp.bottom) << " top=" << letters(ncp.top) << " blocks=";
    for (std::size_t i = 0; i < ncp.blocks.size(); ++i) {
        const NcpBlock& blk = ncp.blocks[i];
        if (i) os << "; ";
        os << (blk.side == Side::C ? "C{" : "D{");
        bool first = true;
        for (int p : blk.bottom) {
            if (!first) os << ' ';
            first = false;
            os << 'B' << p + 1;
        }
        for (int p : blk.top) {
            if (!first) os << ' ';
            first = false;
            os << 'T' << p + 1;
        }
        os << '}';
    }
    return os.str();
}

} // namespace freefusion
