#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "freefusion/errors.hpp"
#include "freefusion/free_product.hpp"
#include "freefusion/gallery.hpp"
#include "freefusion/group.hpp"
#include "freefusion/pointed_tube.hpp"

using namespace freefusion;

namespace {

Word w(std::initializer_list<Letter> ls) { return Word{std::vector<Letter>(ls)}; }
Letter C(Label l) { return {Side::C, l}; }
Letter D(Label l) { return {Side::D, l}; }

std::string get_key(const CheckResult& cr, const std::string& key) {
    for (const auto& [k, v] : cr.data)
        if (k == key) return v;
    return {};
}

// Multiplicities of a ladder product from sine sums (roots of unity data),
// fully independent of the interval formula used to build the ring.
std::int64_t sine_mult(int n, int i, int j, int k) {
    const double pi = std::acos(-1.0);
    double total = 0.0;
    for (int r = 0; r < n - 1; ++r) {
        const double x = (r + 1) * pi / n;
        total += std::sin((i + 1) * x) * std::sin((j + 1) * x) * std::sin((k + 1) * x) /
                 std::sin(x);
    }
    total *= 2.0 / n;
    const double rounded = std::round(total);
    REQUIRE(std::abs(total - rounded) < 1e-6);
    return std::int64_t(rounded);
}

// Monic recurrence polynomials p_0 = 1, p_1 = x, p_{k+1} = x p_k - p_{k-1},
// expanded in the power basis with exact integer coefficients.
using Poly = std::vector<std::int64_t>;

std::vector<Poly> recurrence_basis(int top) {
    std::vector<Poly> p(std::size_t(top) + 1);
    p[0] = {1};
    if (top >= 1) p[1] = {0, 1};
    for (int k = 2; k <= top; ++k) {
        Poly next(std::size_t(k) + 1, 0);
        for (std::size_t d = 0; d < p[std::size_t(k - 1)].size(); ++d)
            next[d + 1] += p[std::size_t(k - 1)][d]; // times x
        for (std::size_t d = 0; d < p[std::size_t(k - 2)].size(); ++d)
            next[d] -= p[std::size_t(k - 2)][d];
        p[std::size_t(k)] = std::move(next);
    }
    return p;
}

// coefficients of p_i p_j in the p-basis, by top-down monic reduction
std::map<int, std::int64_t> recurrence_product(int i, int j) {
    const auto basis = recurrence_basis(i + j);
    Poly prod(std::size_t(i + j) + 1, 0);
    const Poly& pi = basis[std::size_t(i)];
    const Poly& pj = basis[std::size_t(j)];
    for (std::size_t a = 0; a < pi.size(); ++a)
        for (std::size_t b = 0; b < pj.size(); ++b) prod[a + b] += pi[a] * pj[b];
    std::map<int, std::int64_t> out;
    for (int d = i + j; d >= 0; --d) {
        const std::int64_t c = prod[std::size_t(d)];
        if (c == 0) continue;
        out[d] = c;
        for (std::size_t e = 0; e < basis[std::size_t(d)].size(); ++e)
            prod[e] -= c * basis[std::size_t(d)][e];
    }
    return out;
}

} // namespace

TEST_CASE("built-in groups satisfy the table axioms") {
    const std::vector<std::pair<std::string, std::size_t>> expected = {
        {"trivial", 1}, {"z2", 2}, {"z3", 3}, {"z4", 4}, {"s3", 6}, {"d4", 8}};
    for (const auto& [name, order] : expected) {
        const auto g = builtin_group(name);
        REQUIRE(g.has_value());
        CHECK(g->size() == order);
        CHECK(g->name() == name);
        CHECK(g->element_name(0) == "e");
        for (GElem a = 0; a < g->size(); ++a) {
            CHECK(g->mul(a, g->inverse(a)) == g->identity());
            CHECK(g->mul(g->inverse(a), a) == g->identity());
        }
    }
    CHECK(!builtin_group("q8").has_value());
}

TEST_CASE("table constructor rejects non-groups") {
    // element 0 is not the identity
    CHECK_THROWS_AS(GroupTable("bad", {"a", "e"}, {{1, 0}, {0, 1}}), input_error);
    // ragged table
    CHECK_THROWS_AS(GroupTable("bad", {"e", "a"}, {{0, 1}, {1}}), input_error);
    // entry out of range
    CHECK_THROWS_AS(GroupTable("bad", {"e", "a"}, {{0, 1}, {1, 2}}), input_error);
    // no inverse for a
    CHECK_THROWS_AS(GroupTable("bad", {"e", "a", "b"}, {{0, 1, 2}, {1, 1, 1}, {2, 2, 2}}),
                    input_error);
    // a loop of order five: identity and two-sided inverses exist, but the
    // multiplication is not associative ((a b) b = d while a (b b) = a)
    CHECK_THROWS_AS(GroupTable("loop5", {"e", "a", "b", "c", "d"},
                               {{0, 1, 2, 3, 4},
                                {1, 0, 3, 4, 2},
                                {2, 4, 0, 1, 3},
                                {3, 2, 4, 0, 1},
                                {4, 3, 1, 2, 0}}),
                    input_error);
    // duplicate and malformed names
    CHECK_THROWS_AS(GroupTable("bad", {"e", "e"}, {{0, 1}, {1, 0}}), input_error);
    CHECK_THROWS_AS(GroupTable("bad", {"e", "a b"}, {{0, 1}, {1, 0}}), input_error);
}

TEST_CASE("permutation products compose right to left") {
    const GroupTable s3 = *builtin_group("s3");
    const GElem t12 = s3.require_element("(12)");
    const GElem t13 = s3.require_element("(13)");
    const GElem c123 = s3.require_element("(123)");
    const GElem c132 = s3.require_element("(132)");
    CHECK(s3.mul(t12, c132) == t13);
    CHECK(s3.mul(c132, t12) == s3.require_element("(23)"));
    CHECK(s3.conjugate(t12, c123) == c132);
    CHECK(s3.conjugate(t12, c132) == c123);
    CHECK(s3.inverse(c123) == c132);

    const GroupTable d4 = *builtin_group("d4");
    const GElem r = d4.require_element("r");
    const GElem s = d4.require_element("s");
    CHECK(d4.mul(s, r) == d4.require_element("r3s"));
    CHECK(d4.mul(r, s) == d4.require_element("rs"));
    CHECK(d4.inverse(r) == d4.require_element("r3"));
    CHECK(d4.inverse(s) == s);
}

TEST_CASE("conjugacy classes and centralizers") {
    const GroupTable s3 = *builtin_group("s3");
    const auto s3_classes = s3.conjugacy_classes();
    REQUIRE(s3_classes.size() == 3);
    CHECK(s3_classes[0] == std::vector<GElem>{0});
    CHECK(s3_classes[1] == std::vector<GElem>{1, 2, 3});
    CHECK(s3_classes[2] == std::vector<GElem>{4, 5});
    CHECK(s3.centralizer(1).size() == 2);
    CHECK(s3.centralizer(4) == std::vector<GElem>{0, 4, 5});
    for (const auto& cls : s3_classes)
        CHECK(cls.size() * s3.centralizer(cls[0]).size() == s3.size());

    const GroupTable d4 = *builtin_group("d4");
    const auto d4_classes = d4.conjugacy_classes();
    REQUIRE(d4_classes.size() == 5);
    CHECK(d4_classes[0] == std::vector<GElem>{0});
    CHECK(d4_classes[1] == std::vector<GElem>{1, 3});
    CHECK(d4_classes[2] == std::vector<GElem>{2});
    CHECK(d4_classes[3] == std::vector<GElem>{4, 6});
    CHECK(d4_classes[4] == std::vector<GElem>{5, 7});
    CHECK(d4.centralizer(1) == std::vector<GElem>{0, 1, 2, 3});
    CHECK(d4.centralizer(4) == std::vector<GElem>{0, 2, 4, 6});
}

TEST_CASE("class data is consistent with an independent character table") {
    // irreducible characters on the classes (identity, transpositions,
    // three-cycles), in the library's class order
    const std::vector<std::vector<int>> chi = {{1, 1, 1}, {1, -1, 1}, {2, 0, -1}};
    const GroupTable s3 = *builtin_group("s3");
    const auto classes = s3.conjugacy_classes();
    REQUIRE(classes.size() == 3);
    std::vector<int> sizes;
    for (const auto& cls : classes) sizes.push_back(int(cls.size()));
    CHECK(sizes == std::vector<int>{1, 3, 2});
    // row orthogonality against library class sizes
    for (std::size_t i = 0; i < chi.size(); ++i)
        for (std::size_t j = 0; j < chi.size(); ++j) {
            int dot = 0;
            for (std::size_t k = 0; k < classes.size(); ++k)
                dot += sizes[k] * chi[i][k] * chi[j][k];
            CHECK(dot == (i == j ? int(s3.size()) : 0));
        }
    // column orthogonality recovers the library centralizer orders
    for (std::size_t k = 0; k < classes.size(); ++k)
        for (std::size_t l = 0; l < classes.size(); ++l) {
            int dot = 0;
            for (const auto& row : chi) dot += row[k] * row[l];
            CHECK(dot == (k == l ? int(s3.centralizer(classes[k][0]).size()) : 0));
        }
}

TEST_CASE("group rings are pointed with inverse duals") {
    const GroupTable s3 = *builtin_group("s3");
    const FusionRing ring = group_ring(s3);
    CHECK(validate_ring(ring).ok());
    CHECK(is_pointed(ring));
    CHECK(ring.dual(ring.require_label("(123)")) == ring.require_label("(132)"));
    CHECK(ring.dual(ring.require_label("(12)")) == ring.require_label("(12)"));
    CHECK(fp_dim(ring, ring.require_label("(123)")) == doctest::Approx(1.0));

    CHECK(!is_pointed(fibonacci_ring()));
    CHECK(is_pointed(trivial_ring()));
    CHECK(!is_pointed(tlj_generic(2))); // truncated rings are never certified pointed
}

TEST_CASE("pointed rings round-trip to their group table") {
    for (const char* name : {"z2", "z4", "s3", "d4"}) {
        const GroupTable g = *builtin_group(name);
        const GroupTable back = group_from_pointed_ring(group_ring(g));
        REQUIRE(back.size() == g.size());
        for (GElem a = 0; a < g.size(); ++a) {
            CHECK(back.element_name(a) == g.element_name(a));
            for (GElem b = 0; b < g.size(); ++b) CHECK(back.mul(a, b) == g.mul(a, b));
        }
    }
    CHECK_THROWS_AS(group_from_pointed_ring(fibonacci_ring()), input_error);
}

TEST_CASE("small rings have the expected tables") {
    const FusionRing fib = fibonacci_ring();
    CHECK(fib.size() == 2);
    CHECK(fib.mult(1, 1, 0) == 1);
    CHECK(fib.mult(1, 1, 1) == 1);
    CHECK(fp_dim(fib, 1) == doctest::Approx((1.0 + std::sqrt(5.0)) / 2.0));

    const FusionRing r = rep_s3_ring();
    CHECK(r.size() == 3);
    const Label s = r.require_label("s"), t = r.require_label("t");
    CHECK(r.fuse(s, s) == SimpleSum::single(0, 1));
    CHECK(r.fuse(s, t) == SimpleSum::single(t, 1));
    CHECK(r.fuse(t, s) == SimpleSum::single(t, 1));
    SimpleSum tt;
    tt.add(0, 1);
    tt.add(s, 1);
    tt.add(t, 1);
    CHECK(r.fuse(t, t) == tt);
    CHECK(fp_dim(r, s) == doctest::Approx(1.0));
    CHECK(fp_dim(r, t) == doctest::Approx(2.0));
}

TEST_CASE("ladder multiplicities match the sine-sum oracle") {
    for (int n = 3; n <= 8; ++n) {
        const FusionRing ring = tlj_ring(n);
        REQUIRE(ring.size() == std::size_t(n - 1));
        CHECK(!ring.truncated());
        for (int i = 0; i < n - 1; ++i)
            for (int j = 0; j < n - 1; ++j)
                for (int k = 0; k < n - 1; ++k) {
                    CAPTURE(n);
                    CAPTURE(i);
                    CAPTURE(j);
                    CAPTURE(k);
                    CHECK(ring.mult(Label(i), Label(j), Label(k)) == sine_mult(n, i, j, k));
                }
    }
    CHECK_THROWS_AS(tlj_ring(2), input_error);
}

TEST_CASE("generic ladder matches the recurrence-polynomial oracle") {
    for (int level : {2, 4, 6}) {
        const FusionRing ring = tlj_generic(level);
        REQUIRE(ring.size() == std::size_t(level) + 1);
        CHECK(ring.truncated());
        for (int i = 0; i <= level; ++i)
            for (int j = 0; j <= level; ++j) {
                CAPTURE(level);
                CAPTURE(i);
                CAPTURE(j);
                CHECK(ring.fuse_overflows(Label(i), Label(j)) == (i + j > level));
                if (i + j > level) continue;
                const auto oracle = recurrence_product(i, j);
                for (int k = 0; k <= level; ++k) {
                    const auto it = oracle.find(k);
                    const std::int64_t expect = it == oracle.end() ? 0 : it->second;
                    CHECK(ring.mult(Label(i), Label(j), Label(k)) == expect);
                }
            }
    }
}

TEST_CASE("even sub-rings of ladders") {
    const FusionRing even5 = even_part(tlj_ring(5));
    REQUIRE(even5.size() == 2);
    CHECK(even5.label_name(1) == "f2");
    CHECK(even5.mult(1, 1, 0) == 1);
    CHECK(even5.mult(1, 1, 1) == 1); // golden-ratio shaped
    CHECK(validate_ring(even5).ok());

    const FusionRing even6 = even_part(tlj_ring(6));
    REQUIRE(even6.size() == 3);
    CHECK(even6.label_name(2) == "f4");
    SimpleSum f2f2;
    f2f2.add(0, 1);
    f2f2.add(1, 1);
    f2f2.add(2, 1);
    CHECK(even6.fuse(1, 1) == f2f2);
    CHECK(even6.fuse(1, 2) == SimpleSum::single(1, 1));
    CHECK(even6.fuse(2, 2) == SimpleSum::single(0, 1));
    CHECK(validate_ring(even6).ok());

    const FusionRing eveng = even_part(tlj_generic(4));
    REQUIRE(eveng.size() == 3);
    CHECK(eveng.truncated());
    CHECK(!eveng.fuse_overflows(1, 1)); // f2 f2 stays at level 4
    CHECK(eveng.fuse_overflows(1, 2));
    CHECK(eveng.fuse_overflows(2, 1));
    CHECK(eveng.fuse_overflows(2, 2));

    CHECK_THROWS_AS(even_part(fibonacci_ring()), input_error);
}

TEST_CASE("ring name grammar") {
    CHECK(!builtin_ring("nope").has_value());
    CHECK(builtin_ring("z4")->size() == 4);
    CHECK(is_pointed(*builtin_ring("z4")));
    CHECK(builtin_ring("tlj:5")->size() == 4);
    CHECK(builtin_ring("tlj-generic:3")->size() == 4);
    CHECK(builtin_ring("tlj-even:8")->size() == 4);
    CHECK_THROWS_AS(builtin_ring("tlj:x"), input_error);
    CHECK_THROWS_AS(builtin_ring("tlj:2"), input_error);
    CHECK_THROWS_AS(builtin_ring("tlj:"), input_error);
}

TEST_CASE("reduced group words multiply with seam cancellation") {
    const GroupTable g = *builtin_group("s3");
    const GroupTable h = *builtin_group("z2");
    const Label t12 = Label(g.require_element("(12)"));
    const Label c123 = Label(g.require_element("(123)"));
    const Label c132 = Label(g.require_element("(132)"));
    const Label hg = 1;

    CHECK(fg_multiply(g, h, w({C(t12), D(hg), C(t12)}), w({C(t12), D(hg)})) == w({C(t12)}));
    CHECK(fg_multiply(g, h, w({C(c123)}), w({C(c123)})) == w({C(c132)}));
    CHECK(fg_multiply(g, h, w({}), w({D(hg)})) == w({D(hg)}));
    CHECK(fg_inverse(g, h, w({C(c123), D(hg)})) == w({D(hg), C(c132)}));

    const FreeProduct fp(group_ring(g), group_ring(h));
    for (const Word& x : fp.enumerate_words(3, WordFilter::All)) {
        CHECK(fg_multiply(g, h, x, w({})) == x);
        CHECK(fg_multiply(g, h, x, fg_inverse(g, h, x)) == w({}));
        CHECK(fg_multiply(g, h, fg_inverse(g, h, x), x) == w({}));
    }
}

TEST_CASE("conjugacy classification of a free product of groups") {
    const GroupTable z2 = *builtin_group("z2");
    const GroupTable z3 = *builtin_group("z3");
    const auto classes = classify_conjugacy(z2, z3, 4);

    std::map<ConjType, int> counts;
    for (const auto& c : classes) ++counts[c.type];
    CHECK(counts[ConjType::Unit] == 1);
    CHECK(counts[ConjType::GType] == 1);
    CHECK(counts[ConjType::HType] == 2);
    CHECK(counts[ConjType::Mixed] == 5); // two of length 2, three of length 4
    CHECK(classes.size() == 9);

    CHECK(classes[0].rep == w({}));
    CHECK(classes[0].type == ConjType::Unit);
    CHECK(classes[1].rep == w({C(1)}));
    CHECK(classes[1].centralizer_elems.size() == 2); // all of the first factor
    CHECK(classes[2].rep == w({D(1)}));
    CHECK(classes[2].centralizer_elems.size() == 3);

    int len2 = 0, len4 = 0;
    for (const auto& c : classes) {
        if (c.type != ConjType::Mixed) continue;
        if (c.rep.size() == 2) ++len2;
        if (c.rep.size() == 4) ++len4;
        CHECK(c.centralizer_desc.find("infinite cyclic") != std::string::npos);
        // every member is a letter rotation of the representative
        for (const Word& m : c.members) {
            bool found = false;
            for (std::size_t r = 0; r < c.rep.size(); ++r)
                found = found || rotate_letters(c.rep, r) == m;
            CHECK(found);
        }
    }
    CHECK(len2 == 2);
    CHECK(len4 == 3);

    const auto mix = classify_conjugacy(z2, z2, 4);
    CHECK(mix.size() == 5);

    // the centralizer of a transposition inside its own factor has order two
    const GroupTable s3 = *builtin_group("s3");
    const auto sz = classify_conjugacy(s3, z2, 2);
    bool saw_transposition = false;
    for (const auto& c : sz)
        if (c.type == ConjType::GType && c.rep == w({C(1)})) {
            saw_transposition = true;
            CHECK(c.members.size() == 3);
            CHECK(c.centralizer_elems.size() == 2);
            CHECK(c.centralizer_desc.find("(12)") != std::string::npos);
        }
    CHECK(saw_transposition);
}

TEST_CASE("generation closure of a mixed pair word") {
    const FreeProduct zz(*builtin_ring("z2"), *builtin_ring("z2"));
    const Word gen = w({C(1), D(1)});
    const GeneratedSet closed = generated_simples(zz, {gen}, 6);
    CHECK(closed.bound_hit);
    CHECK(!closed.overflow);
    const std::set<Word> expect = {
        w({}),
        gen,
        zz.word_dual(gen),
        word_power(gen, 2),
        word_power(zz.word_dual(gen), 2),
        word_power(gen, 3),
        word_power(zz.word_dual(gen), 3),
    };
    CHECK(closed.words == expect);
}

TEST_CASE("generation certificate for a pair of ladder factors") {
    const FreeProduct fp(tlj_ring(5), tlj_ring(5));
    const MoritaVerdict v = verify_morita_generation(fp, 6);
    CHECK(v.xxbar_equal);
    CHECK(v.xbarx_equal);
    CHECK(v.bound_hit);
    CHECK(!v.overflow);
    CHECK(v.xxbar_left.words.size() == 10);
    CHECK(v.xxbar_right.words.size() == 10);
    CHECK(v.xbarx_left.words.size() == 13);
    CHECK(v.xbarx_right.words.size() == 13);

    const CheckResult cr = morita_check(fp, v, 6);
    CHECK(cr.id == "morita-generation");
    CHECK(cr.passed());
    CHECK(!cr.overflow);
    CHECK(get_key(cr, "x-xdual-verdict") == "equal");
    CHECK(get_key(cr, "xdual-x-verdict") == "equal");
    CHECK(get_key(cr, "bound-note") == "closure clipped at the length bound");

    // minimal ladder: every closure collapses to the unit
    const FreeProduct tiny(tlj_ring(3), tlj_ring(3));
    const MoritaVerdict tv = verify_morita_generation(tiny, 6);
    CHECK(tv.xxbar_equal);
    CHECK(tv.xbarx_equal);
    CHECK(tv.xxbar_left.words == std::set<Word>{w({})});
    CHECK(tv.xbarx_right.words == std::set<Word>{w({})});
}

TEST_CASE("pointed tube algebra structure") {
    const GroupTable s3 = *builtin_group("s3");
    const PointedTubeAlgebra alg(s3);
    CHECK(alg.dimension() == 36);

    for (GElem g = 0; g < s3.size(); ++g)
        for (GElem b = 0; b < s3.size(); ++b) {
            const TubeBasis t{g, b};
            CHECK(alg.basis_sharp(alg.basis_sharp(t)) == t);
            // products pair exactly when the middle weights line up
            for (GElem g2 = 0; g2 < s3.size(); ++g2)
                for (GElem b2 = 0; b2 < s3.size(); ++b2) {
                    const TubeBasis u{g2, b2};
                    const auto prod = alg.basis_product(t, u);
                    CHECK(prod.has_value() == (t.b == alg.target_weight(u)));
                    if (prod) {
                        CHECK(prod->g == s3.mul(g, g2));
                        CHECK(prod->b == b2);
                    }
                }
        }

    // trace is invariant under cyclic exchange
    const auto x = alg.basis_element(1, 4);
    const auto y = alg.basis_element(s3.inverse(1), s3.conjugate(1, 4));
    CHECK(alg.trace(alg.multiply(x, y)) == alg.trace(alg.multiply(y, x)));
    CHECK(alg.trace(x) == GInt{0, 0});
    CHECK(alg.trace(alg.basis_element(0, 2)) == GInt{1, 0});
}

TEST_CASE("pointed tube summand checks pass") {
    for (const char* name : {"z2", "z3", "s3"}) {
        const CheckResult cr = pointed_summand_check(*builtin_group(name));
        CAPTURE(name);
        CHECK(cr.passed());
        CHECK(!cr.overflow);
        CHECK(cr.counterexamples.empty());
    }
    const CheckResult s3cr = pointed_summand_check(*builtin_group("s3"), 1729, 200);
    CHECK(get_key(s3cr, "dimension") == "36");
    CHECK(get_key(s3cr, "corner-total") == "36");
}

TEST_CASE("group free products cross-check against the word decomposition") {
    const GroupTable z2 = *builtin_group("z2");
    const GroupTable z3 = *builtin_group("z3");
    const CheckResult small = pointed_cross_check(z2, z2, 2, 2);
    CHECK(small.id == "pointed-cross");
    CHECK(small.passed());
    CHECK(get_key(small, "scope").find("verified up to bound") != std::string::npos);

    const CheckResult bigger = pointed_cross_check(z2, z3, 4, 6);
    CHECK(bigger.passed());
    CHECK(bigger.counterexamples.empty());
    CHECK(get_key(bigger, "mixed-classes") == get_key(bigger, "w-classes"));
}
