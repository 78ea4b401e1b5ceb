#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "freefusion/errors.hpp"
#include "freefusion/free_product.hpp"
#include "freefusion/gallery.hpp"
#include "freefusion/ncp.hpp"

using namespace freefusion;

namespace {

Letter C(Label l) { return {Side::C, l}; }
Letter D(Label l) { return {Side::D, l}; }

// All set partitions of {0..n-1} as block-id vectors, generated as restricted
// growth strings (digit i may exceed the running maximum by at most one).
std::vector<std::vector<int>> set_partitions(int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> a(std::size_t(n), 0);
    auto rec = [&](auto&& self, int i, int maxid) -> void {
        if (i == n) {
            out.push_back(a);
            return;
        }
        for (int id = 0; id <= maxid + 1; ++id) {
            a[std::size_t(i)] = id;
            self(self, i + 1, std::max(maxid, id));
        }
    };
    if (n == 0)
        out.push_back({});
    else
        rec(rec, 0, -1);
    return out;
}

// Crossing iff positions a<b<c<d exist with a,c in one block and b,d in a
// different one.
bool partition_crosses(const std::vector<int>& part) {
    const int n = int(part.size());
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c)
                for (int d = c + 1; d < n; ++d)
                    if (part[std::size_t(a)] == part[std::size_t(c)] &&
                        part[std::size_t(b)] == part[std::size_t(d)] &&
                        part[std::size_t(a)] != part[std::size_t(b)])
                        return true;
    return false;
}

std::vector<std::vector<int>> partition_blocks(const std::vector<int>& part) {
    std::vector<std::vector<int>> blocks;
    for (int i = 0; i < int(part.size()); ++i) {
        const int id = part[std::size_t(i)];
        if (id >= int(blocks.size())) blocks.resize(std::size_t(id) + 1);
        blocks[std::size_t(id)].push_back(i);
    }
    std::sort(blocks.begin(), blocks.end());
    return blocks;
}

// canonical form of a bottom-only partition diagram
std::vector<std::vector<int>> bottom_blocks(const ColoredNcp& ncp) {
    std::vector<std::vector<int>> blocks;
    for (const NcpBlock& blk : ncp.blocks) {
        CHECK(blk.top.empty());
        blocks.push_back(blk.bottom);
    }
    std::sort(blocks.begin(), blocks.end());
    return blocks;
}

const std::vector<std::int64_t> kCatalan = {1, 1, 2, 5, 14, 42, 132, 429, 1430};

} // namespace

TEST_CASE("line diagrams biject with non-crossing set partitions") {
    const FreeProduct ff(fibonacci_ring(), fibonacci_ring());
    for (int n = 0; n <= 6; ++n) {
        const std::vector<Letter> sigma(std::size_t(n), C(1));
        const auto ncps = enumerate_ncps(ff, sigma, {});
        CHECK(std::int64_t(ncps.size()) == kCatalan[std::size_t(n)]);

        std::set<std::vector<std::vector<int>>> got;
        for (const ColoredNcp& ncp : ncps) {
            CHECK(is_valid(ncp));
            got.insert(bottom_blocks(ncp));
        }
        CHECK(got.size() == ncps.size()); // no duplicates

        std::set<std::vector<std::vector<int>>> expect;
        for (const auto& part : set_partitions(n))
            if (!partition_crosses(part)) expect.insert(partition_blocks(part));
        CHECK(got == expect);
    }
}

TEST_CASE("validity agrees with the crossing oracle on every partition") {
    const FreeProduct ff(fibonacci_ring(), fibonacci_ring());
    const std::vector<Letter> sigma(5, C(1));
    for (const auto& part : set_partitions(5)) {
        ColoredNcp ncp;
        ncp.bottom = sigma;
        for (const auto& blk : partition_blocks(part))
            ncp.blocks.push_back({Side::C, blk, {}});
        CHECK(is_valid(ncp) == !partition_crosses(part));
    }
}

TEST_CASE("rejects malformed diagrams") {
    ColoredNcp ncp;
    ncp.bottom = {C(1), D(1)};
    ncp.blocks = {{Side::C, {0}, {}}, {Side::D, {1}, {}}};
    CHECK(is_valid(ncp));

    ColoredNcp wrong_side = ncp;
    wrong_side.blocks[1].side = Side::C; // letter at position 1 lives on the D side
    CHECK(!is_valid(wrong_side));

    ColoredNcp mixed = ncp;
    mixed.blocks = {{Side::C, {0, 1}, {}}}; // one block across both sides
    CHECK(!is_valid(mixed));

    ColoredNcp missing = ncp;
    missing.blocks.pop_back(); // position 1 uncovered
    CHECK(!is_valid(missing));

    ColoredNcp doubled = ncp;
    doubled.blocks.push_back({Side::D, {1}, {}}); // position 1 covered twice
    CHECK(!is_valid(doubled));

    ColoredNcp empty_block = ncp;
    empty_block.blocks.push_back({Side::C, {}, {}});
    CHECK(!is_valid(empty_block));

    ColoredNcp out_of_range = ncp;
    out_of_range.blocks[0].bottom = {2};
    CHECK(!is_valid(out_of_range));
}

TEST_CASE("rectangle diagrams") {
    const FreeProduct ff(fibonacci_ring(), fibonacci_ring());
    // all letters on one side: every non-crossing partition of the 4-point
    // boundary circle appears
    const auto all_c = enumerate_ncps(ff, {C(1), C(1)}, {C(1), C(1)});
    CHECK(all_c.size() == 14);
    std::set<std::string> seen;
    for (const ColoredNcp& ncp : all_c) {
        CHECK(is_valid(ncp));
        seen.insert(format_ncp(ff, ncp));
    }
    CHECK(seen.size() == all_c.size());

    // alternating letters: blocks must stay single-sided, so each side
    // independently pairs or splits its two boundary points
    const auto mixed = enumerate_ncps(ff, {C(1), D(1)}, {C(1), D(1)});
    CHECK(mixed.size() == 4);

    // top-to-top crossing: pairing bottom i with top (2 - i) interleaves
    ColoredNcp cross;
    cross.bottom = {C(1), D(1), C(1)};
    cross.top = {C(1), D(1), C(1)};
    cross.blocks = {{Side::C, {0}, {2}}, {Side::D, {1}, {1}}, {Side::C, {2}, {0}}};
    CHECK(!is_valid(cross));
    ColoredNcp ident = cross;
    ident.blocks = {{Side::C, {0}, {0}}, {Side::D, {1}, {1}}, {Side::C, {2}, {2}}};
    CHECK(is_valid(ident));
}

TEST_CASE("block weights fold subwords inside one factor") {
    const FreeProduct ff(fibonacci_ring(), fibonacci_ring());
    ColoredNcp ncp;
    ncp.bottom = {C(1), C(1)};
    ncp.top = {C(1), C(1)};

    const NcpBlock full{Side::C, {0, 1}, {0, 1}};
    ncp.blocks = {full};
    CHECK(is_valid(ncp));
    CHECK(block_weight(ff, ncp, full) == 2); // hom(1 + tau, 1 + tau)
    CHECK(ncp_weight(ff, ncp) == 2);

    const NcpBlock bottom_pair{Side::C, {0, 1}, {}};
    const NcpBlock top_pair{Side::C, {}, {0, 1}};
    ncp.blocks = {bottom_pair, top_pair};
    CHECK(block_weight(ff, ncp, bottom_pair) == 1); // unit channel of tau (x) tau
    CHECK(block_weight(ff, ncp, top_pair) == 1);
    CHECK(ncp_weight(ff, ncp) == 1);

    const NcpBlock single{Side::C, {0}, {}};
    CHECK(block_weight(ff, ncp, single) == 0); // hom(tau, 1)
}

TEST_CASE("spanning bound on non-reduced boundaries overestimates") {
    const FreeProduct ff(fibonacci_ring(), fibonacci_ring());
    const std::vector<Letter> twice = {C(1), C(1)};
    // diagram count weighs: full block 2, bottom+top pairs 1, identity 1
    CHECK(spanning_bound(ff, twice, twice) == 4);
    // the actual hom dimension between the fused boundaries is smaller
    const WordSum prod = ff.fuse_words(Word{{C(1)}}, Word{{C(1)}});
    CHECK(hom_dim(prod, prod) == 2);
}

TEST_CASE("spanning bound is exact between reduced words") {
    const FreeProduct ff(fibonacci_ring(), fibonacci_ring());
    const auto words = ff.enumerate_words(4, WordFilter::All);
    for (const Word& a : words)
        for (const Word& b : words)
            CHECK(spanning_bound(ff, a.letters, b.letters) == (a == b ? 1 : 0));

    const FreeProduct zr(*builtin_ring("z3"), rep_s3_ring());
    for (const Word& a : zr.enumerate_words(3, WordFilter::All))
        for (const Word& b : zr.enumerate_words(3, WordFilter::All))
            CHECK(spanning_bound(zr, a.letters, b.letters) == (a == b ? 1 : 0));
}

TEST_CASE("empty boundary has exactly the empty diagram") {
    const FreeProduct ff(fibonacci_ring(), fibonacci_ring());
    const auto ncps = enumerate_ncps(ff, {}, {});
    REQUIRE(ncps.size() == 1);
    CHECK(ncps[0].blocks.empty());
    CHECK(is_valid(ncps[0]));
    CHECK(spanning_bound(ff, {}, {}) == 1);
}

TEST_CASE("boundary letters must be non-unit simples") {
    const FreeProduct ff(fibonacci_ring(), fibonacci_ring());
    CHECK_THROWS_AS(enumerate_ncps(ff, {C(0)}, {}), input_error);
    CHECK_THROWS_AS(enumerate_ncps(ff, {}, {D(7)}), input_error);
}

TEST_CASE("weights overflow outside a truncation window") {
    const FreeProduct trunc(tlj_generic(2), tlj_generic(2));
    CHECK_THROWS_AS(spanning_bound(trunc, {C(2), C(2)}, {}), truncation_overflow);
    // inside the window everything evaluates
    CHECK(spanning_bound(trunc, {C(1)}, {C(1)}) == 1);
}

TEST_CASE("stacking merges blocks through the shared row") {
    const FreeProduct zz(*builtin_ring("z2"), *builtin_ring("z2"));

    ColoredNcp ident;
    ident.bottom = {C(1)};
    ident.top = {C(1)};
    ident.blocks = {{Side::C, {0}, {0}}};
    const NcpComposition ii = compose_ncp(zz, ident, ident);
    CHECK(ii.result == ident);
    CHECK(ii.cancelled.empty());
    CHECK(ii.scalar_known);
    CHECK(ii.scalar == 1);

    ColoredNcp cup; // no bottom, one paired top block
    cup.top = {C(1), C(1)};
    cup.blocks = {{Side::C, {}, {0, 1}}};
    ColoredNcp cap;
    cap.bottom = {C(1), C(1)};
    cap.blocks = {{Side::C, {0, 1}, {}}};

    const NcpComposition loop = compose_ncp(zz, cap, cup);
    CHECK(loop.result.bottom.empty());
    CHECK(loop.result.top.empty());
    CHECK(loop.result.blocks.empty());
    REQUIRE(loop.cancelled.size() == 1);
    CHECK(loop.cancelled[0].bottom == std::vector<int>{0, 1}); // glued row positions
    CHECK(loop.scalar_known);
    CHECK(loop.scalar == 1); // the loop closes through the unit channel g (x) g = e

    ColoredNcp split_cap = cap;
    split_cap.blocks = {{Side::C, {0}, {}}, {Side::C, {1}, {}}};
    const NcpComposition dead = compose_ncp(zz, split_cap, cup);
    REQUIRE(dead.cancelled.size() == 1);
    CHECK(dead.scalar_known);
    CHECK(dead.scalar == 0); // a singleton block kills the closed loop

    // outside the pointed case closed loops stay symbolic
    const FreeProduct ff(fibonacci_ring(), fibonacci_ring());
    ColoredNcp fcup = cup, fcap = cap;
    const NcpComposition symbolic = compose_ncp(ff, fcap, fcup);
    REQUIRE(symbolic.cancelled.size() == 1);
    CHECK(!symbolic.scalar_known);
    CHECK(symbolic.scalar == 1);

    ColoredNcp other;
    other.bottom = {C(1), C(1)};
    other.top = {C(1)};
    other.blocks = {{Side::C, {0, 1}, {0}}};
    CHECK_THROWS_AS(compose_ncp(zz, other, ident), input_error); // rows 2 vs 1 disagree
}
