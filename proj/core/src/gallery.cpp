#include "freefusion/gallery.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <sstream>

#include "freefusion/annular.hpp"
#include "freefusion/errors.hpp"

namespace freefusion {

// ---- concrete rings ----------------------------------------------------

FusionRing trivial_ring() {
    return FusionRing("trivial", {"1"}, "1", {{"1", "1"}}, {{0, 0, 0, 1}});
}

FusionRing fibonacci_ring() {
    return FusionRing("fib", {"1", "tau"}, "1", {{"1", "1"}, {"tau", "tau"}},
                      {{0, 0, 0, 1},
                       {0, 1, 1, 1},
                       {1, 0, 1, 1},
                       {1, 1, 0, 1},
                       {1, 1, 1, 1}});
}

FusionRing rep_s3_ring() {
    const Label u = 0, s = 1, t = 2;
    return FusionRing("rep_s3", {"1", "s", "t"}, "1",
                      {{"1", "1"}, {"s", "s"}, {"t", "t"}},
                      {{u, u, u, 1},
                       {u, s, s, 1},
                       {u, t, t, 1},
                       {s, u, s, 1},
                       {s, s, u, 1},
                       {s, t, t, 1},
                       {t, u, t, 1},
                       {t, s, t, 1},
                       {t, t, u, 1},
                       {t, t, s, 1},
                       {t, t, t, 1}});
}

namespace {

std::vector<std::string> level_labels(int top) {
    std::vector<std::string> labels;
    for (int i = 0; i <= top; ++i) labels.push_back("f" + std::to_string(i));
    return labels;
}

std::map<std::string, std::string> self_dual(const std::vector<std::string>& labels) {
    std::map<std::string, std::string> dual;
    for (const std::string& s : labels) dual[s] = s;
    return dual;
}

} // namespace

FusionRing tlj_ring(int n) {
    if (n < 3) throw input_error("ladder ring needs n >= 3, got " + std::to_string(n));
    const int top = n - 2;
    const std::vector<std::string> labels = level_labels(top);
    std::vector<TensorEntry> tensor;
    for (int i = 0; i <= top; ++i)
        for (int j = 0; j <= top; ++j) {
            const int lmax = std::min(i + j, 2 * top - i - j);
            for (int l = std::abs(i - j); l <= lmax; l += 2)
                tensor.push_back({Label(i), Label(j), Label(l), 1});
        }
    return FusionRing("tlj:" + std::to_string(n), labels, "f0", self_dual(labels), tensor);
}

FusionRing tlj_generic(int level) {
    if (level < 0)
        throw input_error("truncation level must be >= 0, got " + std::to_string(level));
    const std::vector<std::string> labels = level_labels(level);
    std::vector<TensorEntry> tensor;
    std::set<std::pair<Label, Label>> overflow;
    for (int i = 0; i <= level; ++i)
        for (int j = 0; j <= level; ++j) {
            if (i + j > level) {
                overflow.insert({Label(i), Label(j)});
                continue;
            }
            for (int l = std::abs(i - j); l <= i + j; l += 2)
                tensor.push_back({Label(i), Label(j), Label(l), 1});
        }
    return FusionRing("tlj-generic:" + std::to_string(level), labels, "f0", self_dual(labels),
                      tensor, std::move(overflow));
}

namespace {

std::optional<int> level_index(std::string_view name) {
    if (name.size() < 2 || name[0] != 'f') return std::nullopt;
    int value = 0;
    const auto res = std::from_chars(name.data() + 1, name.data() + name.size(), value);
    if (res.ec != std::errc() || res.ptr != name.data() + name.size() || value < 0)
        return std::nullopt;
    return value;
}

} // namespace

FusionRing even_part(const FusionRing& ring) {
    std::vector<int> level(ring.size(), 0);
    for (Label a = 0; a < ring.size(); ++a) {
        const auto idx = level_index(ring.label_name(a));
        if (!idx)
            throw input_error("even part requires level-indexed labels f0, f1, ...; ring '" +
                              ring.name() + "' has label '" + ring.label_name(a) + "'");
        level[a] = *idx;
    }
    if (level[ring.unit()] != 0)
        throw input_error("even part requires the unit to be f0 in ring '" + ring.name() + "'");
    for (const TensorEntry& t : ring.entries())
        if ((level[t.a] + level[t.b] + level[t.c]) % 2 != 0) {
            std::ostringstream os;
            os << "fusion does not preserve index parity in ring '" << ring.name() << "' at ("
               << ring.label_name(t.a) << ", " << ring.label_name(t.b) << ", "
               << ring.label_name(t.c) << ")";
            throw input_error(os.str());
        }

    std::map<Label, Label> remap;
    std::vector<std::string> labels;
    for (Label a = 0; a < ring.size(); ++a) {
        if (level[a] % 2 != 0) continue;
        if (level[ring.dual(a)] % 2 != 0)
            throw input_error("dual of an even simple is odd in ring '" + ring.name() + "'");
        remap[a] = Label(labels.size());
        labels.push_back(ring.label_name(a));
    }
    std::map<std::string, std::string> dual;
    for (const auto& [old_label, _] : remap)
        dual[ring.label_name(old_label)] = ring.label_name(ring.dual(old_label));
    std::vector<TensorEntry> tensor;
    for (const TensorEntry& t : ring.entries())
        if (remap.count(t.a) && remap.count(t.b) && remap.count(t.c))
            tensor.push_back({remap.at(t.a), remap.at(t.b), remap.at(t.c), t.n});
    std::set<std::pair<Label, Label>> overflow;
    for (const auto& [a, na] : remap)
        for (const auto& [b, nb] : remap)
            if (ring.fuse_overflows(a, b)) overflow.insert({na, nb});
    return FusionRing("even(" + ring.name() + ")", std::move(labels),
                      ring.label_name(ring.unit()), dual, tensor, std::move(overflow));
}

namespace {

int parse_level(std::string_view spec, std::string_view prefix, int minimum) {
    const std::string_view num = spec.substr(prefix.size());
    int value = 0;
    const auto res = std::from_chars(num.data(), num.data() + num.size(), value);
    if (res.ec != std::errc() || res.ptr != num.data() + num.size() || value < minimum) {
        std::ostringstream os;
        os << "'" << std::string(spec) << "': expected '" << std::string(prefix)
           << "<integer >= " << minimum << ">'";
        throw input_error(os.str());
    }
    return value;
}

} // namespace

std::optional<FusionRing> builtin_ring(std::string_view spec) {
    if (spec == "trivial") return trivial_ring();
    if (spec == "fib") return fibonacci_ring();
    if (spec == "rep_s3") return rep_s3_ring();
    if (auto g = builtin_group(spec)) return group_ring(*g);
    if (spec.rfind("tlj-generic:", 0) == 0)
        return tlj_generic(parse_level(spec, "tlj-generic:", 0));
    if (spec.rfind("tlj-even:", 0) == 0)
        return even_part(tlj_ring(parse_level(spec, "tlj-even:", 3)));
    if (spec.rfind("tlj:", 0) == 0) return tlj_ring(parse_level(spec, "tlj:", 3));
    return std::nullopt;
}

// ---- reduced words over a free product of two groups -------------------

namespace {

const GroupTable& side_group(const GroupTable& g, const GroupTable& h, Side s) {
    return s == Side::C ? g : h;
}

void check_group_word(const GroupTable& g, const GroupTable& h, const Word& w) {
    for (std::size_t i = 0; i < w.size(); ++i) {
        const Letter l = w.letters[i];
        const GroupTable& grp = side_group(g, h, l.side);
        if (l.label == 0)
            throw input_error("group word contains an identity letter");
        if (l.label >= grp.size())
            throw input_error("group word letter out of range for group '" + grp.name() + "'");
        if (i > 0 && w.letters[i - 1].side == l.side)
            throw input_error("group word is not alternating");
    }
}

} // namespace

std::string format_group_word(const GroupTable& g, const GroupTable& h, const Word& w) {
    if (w.empty()) return "∅";
    std::ostringstream os;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) os << ' ';
        const Letter l = w.letters[i];
        os << (l.side == Side::C ? "C:" : "D:")
           << side_group(g, h, l.side).element_name(GElem(l.label));
    }
    return os.str();
}

Word fg_multiply(const GroupTable& g, const GroupTable& h, const Word& x, const Word& y) {
    check_group_word(g, h, x);
    check_group_word(g, h, y);
    std::vector<Letter> left = x.letters;
    std::size_t j = 0;
    while (!left.empty() && j < y.letters.size() && left.back().side == y.letters[j].side) {
        const Side s = left.back().side;
        const GroupTable& grp = side_group(g, h, s);
        const GElem p = grp.mul(GElem(left.back().label), GElem(y.letters[j].label));
        left.pop_back();
        ++j;
        if (p != grp.identity()) {
            left.push_back({s, Label(p)});
            break;
        }
    }
    Word out{std::move(left)};
    out.letters.insert(out.letters.end(), y.letters.begin() + std::ptrdiff_t(j),
                       y.letters.end());
    return out;
}

Word fg_inverse(const GroupTable& g, const GroupTable& h, const Word& x) {
    check_group_word(g, h, x);
    Word out;
    out.letters.reserve(x.size());
    for (auto it = x.letters.rbegin(); it != x.letters.rend(); ++it)
        out.letters.push_back(
            {it->side, Label(side_group(g, h, it->side).inverse(GElem(it->label)))});
    return out;
}

// ---- conjugacy classification ------------------------------------------

std::string conj_type_name(ConjType t) {
    switch (t) {
    case ConjType::Unit: return "UNIT";
    case ConjType::GType: return "G_TYPE";
    case ConjType::HType: return "H_TYPE";
    case ConjType::Mixed: return "MIXED";
    }
    return "?";
}

namespace {

std::string join_elements(const GroupTable& grp, const std::vector<GElem>& elems) {
    std::ostringstream os;
    for (std::size_t i = 0; i < elems.size(); ++i) {
        if (i) os << ' ';
        os << grp.element_name(elems[i]);
    }
    return os.str();
}

// Invokes fn once per alternating word of the given even length starting on
// the C side, in lexicographic letter order.
template <typename Fn>
void for_each_mixed_word(const GroupTable& g, const GroupTable& h, int len, Fn&& fn) {
    if (g.size() < 2 || h.size() < 2 || len <= 0) return;
    Word w;
    w.letters.resize(std::size_t(len));
    for (int i = 0; i < len; ++i) w.letters[std::size_t(i)].side = i % 2 ? Side::D : Side::C;
    const auto radix = [&](int i) {
        return i % 2 ? Label(h.size()) : Label(g.size());
    };
    for (int i = 0; i < len; ++i) w.letters[std::size_t(i)].label = 1;
    while (true) {
        fn(w);
        int i = len - 1;
        while (i >= 0) {
            if (++w.letters[std::size_t(i)].label < radix(i)) break;
            w.letters[std::size_t(i)].label = 1;
            --i;
        }
        if (i < 0) break;
    }
}

Word letter_primitive_root(const Word& w) {
    const std::size_t n = w.size();
    for (std::size_t d = 1; d <= n; ++d) {
        if (n % d != 0) continue;
        if (rotate_letters(w, d) == w) {
            Word out;
            out.letters.assign(w.letters.begin(), w.letters.begin() + std::ptrdiff_t(d));
            return out;
        }
    }
    return w;
}

} // namespace

std::vector<ConjugacyClass> classify_conjugacy(const GroupTable& g, const GroupTable& h,
                                               int len_bound) {
    std::vector<ConjugacyClass> out;
    if (len_bound >= 0) {
        ConjugacyClass unit;
        unit.rep = Word{};
        unit.type = ConjType::Unit;
        unit.members = {Word{}};
        unit.centralizer_desc = "the whole free product";
        out.push_back(std::move(unit));
    }
    if (len_bound >= 1) {
        for (Side s : {Side::C, Side::D}) {
            const GroupTable& grp = side_group(g, h, s);
            for (const std::vector<GElem>& cls : grp.conjugacy_classes()) {
                if (cls.front() == grp.identity()) continue;
                ConjugacyClass c;
                c.type = s == Side::C ? ConjType::GType : ConjType::HType;
                for (GElem m : cls) c.members.push_back(Word{{Letter{s, Label(m)}}});
                std::sort(c.members.begin(), c.members.end());
                c.rep = c.members.front();
                for (GElem z : grp.centralizer(GElem(c.rep.letters[0].label)))
                    c.centralizer_elems.push_back(Label(z));
                c.centralizer_desc =
                    "inside " + grp.name() + ": " +
                    join_elements(grp, grp.centralizer(GElem(c.rep.letters[0].label)));
                out.push_back(std::move(c));
            }
        }
    }
    for (int len = 2; len <= len_bound; len += 2) {
        for_each_mixed_word(g, h, len, [&](const Word& w) {
            std::set<Word> orbit;
            for (std::size_t r = 0; r < w.size(); ++r) orbit.insert(rotate_letters(w, r));
            if (*orbit.begin() != w) return; // not the canonical member
            ConjugacyClass c;
            c.type = ConjType::Mixed;
            c.rep = w;
            c.members.assign(orbit.begin(), orbit.end());
            c.generator = letter_primitive_root(w);
            c.centralizer_desc =
                "infinite cyclic, generated by " + format_group_word(g, h, c.generator);
            out.push_back(std::move(c));
        });
    }
    std::sort(out.begin(), out.end(),
              [](const ConjugacyClass& a, const ConjugacyClass& b) { return a.rep < b.rep; });
    return out;
}

// ---- cross-check against the annular decomposition ---------------------

CheckResult pointed_cross_check(const GroupTable& g, const GroupTable& h, int wmax, int vmax) {
    CheckResult out;
    out.id = "pointed-cross";
    out.bound("wmax", wmax);
    out.bound("vmax", vmax);
    out.put("g", g.name());
    out.put("h", h.name());

    const FreeProduct fp(group_ring(g), group_ring(h));
    const DecompositionReport rep = decomposition_report(fp, wmax, vmax);
    const std::vector<ConjugacyClass> classes = classify_conjugacy(g, h, wmax);

    std::size_t type_counts[4] = {0, 0, 0, 0};
    for (const ConjugacyClass& c : classes) ++type_counts[int(c.type)];
    out.put("unit-classes", std::to_string(type_counts[int(ConjType::Unit)]));
    out.put("g-classes", std::to_string(type_counts[int(ConjType::GType)]));
    out.put("h-classes", std::to_string(type_counts[int(ConjType::HType)]));
    out.put("mixed-classes", std::to_string(type_counts[int(ConjType::Mixed)]));
    out.put("w-classes", std::to_string(rep.wclasses.size()));

    // pointed factors have trivial adjoint support, so the same-side blocks
    // routed through weight zero must be absent
    for (Side s : {Side::C, Side::D}) {
        const FusionRing& ring = fp.ring(s);
        const std::vector<Label> supp = adjoint_support(ring);
        if (supp.size() != 1 || supp[0] != ring.unit())
            out.fail("adjoint support of pointed ring '" + ring.name() + "' is not trivial");
    }
    for (Side s : {Side::C, Side::D}) {
        const auto& plus = s == Side::C ? rep.plus_c : rep.plus_d;
        if (plus.empty()) continue;
        std::ostringstream os;
        os << "routed same-side blocks present on side " << (s == Side::C ? "C" : "D")
           << ": v=" << fp.format_word(plus.front().v) << " b=" << fp.format_word(plus.front().b)
           << " c=" << fp.format_word(plus.front().c) << " (" << plus.size() << " total)";
        out.fail(os.str());
    }

    // the weight-zero corner of a pointed product is the group algebra: every
    // annulus contributes dimension exactly one
    const std::vector<Word> all_v = fp.enumerate_words(vmax, WordFilter::All);
    for (const Word& v : all_v) {
        const std::int64_t dim = tube_dim(fp, v, Word{}, Word{});
        if (dim != 1)
            out.fail("weight-zero corner dimension at v=" + fp.format_word(v) + ": " +
                     std::to_string(dim));
    }

    // mixed conjugacy classes correspond bijectively to cyclic word classes
    std::map<Word, const CyclicClass*> by_canonical;
    for (const WClassEntry& e : rep.wclasses) by_canonical[e.cls.canonical] = &e.cls;
    std::size_t matched = 0;
    for (const ConjugacyClass& c : classes) {
        if (c.type != ConjType::Mixed) continue;
        const auto it = by_canonical.find(c.rep);
        if (it == by_canonical.end()) {
            out.fail("mixed class with no word class: rep=" + format_group_word(g, h, c.rep));
            continue;
        }
        ++matched;
        const CyclicClass& cls = *it->second;
        std::vector<Word> even_members;
        for (const Word& m : c.members)
            if (w_shaped(m)) even_members.push_back(m);
        if (even_members != cls.members)
            out.fail("class members disagree at rep=" + format_group_word(g, h, c.rep));
        if (cls.period != c.generator)
            out.fail("centralizer generator differs from the word period at rep=" +
                     format_group_word(g, h, c.rep) + ": generator=" +
                     format_group_word(g, h, c.generator) + " period=" +
                     fp.format_word(cls.period));
        if (std::size_t(cls.exponent) * c.generator.size() != c.rep.size())
            out.fail("period exponent mismatch at rep=" + format_group_word(g, h, c.rep));
    }
    if (matched != rep.wclasses.size() ||
        matched != type_counts[int(ConjType::Mixed)])
        out.fail("class counts disagree: mixed=" +
                 std::to_string(type_counts[int(ConjType::Mixed)]) +
                 " word-classes=" + std::to_string(rep.wclasses.size()));

    // single-letter classes: annulus counts at |v| <= 1 reproduce the factor
    // centralizer order (identity annulus plus one annulus per nontrivial
    // commuting letter)
    const std::vector<Word> short_v = fp.enumerate_words(std::min(vmax, 1), WordFilter::All);
    for (const ConjugacyClass& c : classes) {
        if (c.type != ConjType::GType && c.type != ConjType::HType) continue;
        std::int64_t total = 0;
        for (const Word& v : short_v) total += tube_dim(fp, v, c.rep, c.rep);
        const std::int64_t expect =
            vmax >= 1 ? std::int64_t(c.centralizer_elems.size()) : 1;
        if (total != expect)
            out.fail("single-letter centralizer count at rep=" +
                     format_group_word(g, h, c.rep) + ": annuli=" + std::to_string(total) +
                     " centralizer=" + std::to_string(expect));
    }

    // mixed classes: the diagonal annulus count matches the bounded window of
    // the infinite cyclic centralizer {period^n, dual(period)^n}
    for (const WClassEntry& e : rep.wclasses) {
        const Word& w = e.cls.canonical;
        std::int64_t total = 0;
        for (const Word& v : all_v) total += tube_dim(fp, v, w, w);
        const std::int64_t per_direction = std::int64_t(vmax) / std::int64_t(e.cls.period.size());
        const std::int64_t expect = 1 + 2 * per_direction;
        if (total != expect)
            out.fail("cyclic centralizer window at w=" + fp.format_word(w) + ": annuli=" +
                     std::to_string(total) + " expected=" + std::to_string(expect));
    }

    const std::size_t cap = 40;
    std::size_t listed = 0;
    for (const ConjugacyClass& c : classes) {
        if (listed == cap) {
            out.put("classes-truncated", "listing capped at " + std::to_string(cap));
            break;
        }
        std::ostringstream os;
        os << "type=" << conj_type_name(c.type) << " members=" << c.members.size()
           << " centralizer=" << c.centralizer_desc;
        out.put("class " + format_group_word(g, h, c.rep), os.str());
        ++listed;
    }
    out.put("scope", "verified up to bound: vanishing statements certified only within the "
                     "scan window");
    out.put("centralizer-convention",
            "single-letter centralizers are computed inside their own factor");
    return out;
}

// ---- generation closures ----------------------------------------------

GeneratedSet generated_simples(const FreeProduct& fp, const std::set<Word>& generators,
                               int len_bound) {
    GeneratedSet out;
    for (const Word& w : generators) {
        fp.require_word(w);
        if (int(w.size()) <= len_bound) {
            out.words.insert(w);
            out.words.insert(fp.word_dual(w));
        } else {
            out.bound_hit = true;
        }
    }
    std::set<Word> paired; // words already fused against each other
    while (out.words.size() > paired.size()) {
        const std::vector<Word> snap(out.words.begin(), out.words.end());
        for (const Word& x : snap)
            for (const Word& y : snap) {
                if (paired.count(x) && paired.count(y)) continue;
                WordSum prod;
                try {
                    prod = fp.fuse_words(x, y);
                } catch (const truncation_overflow&) {
                    out.overflow = true;
                    continue;
                }
                for (const auto& [w, n] : prod) {
                    if (int(w.size()) > len_bound) {
                        out.bound_hit = true;
                        continue;
                    }
                    out.words.insert(w);
                    out.words.insert(fp.word_dual(w));
                }
            }
        paired.insert(snap.begin(), snap.end());
    }
    return out;
}

namespace {

std::set<Word> sum_support(const WordSum& s) {
    std::set<Word> out;
    for (const auto& [w, n] : s) out.insert(w);
    return out;
}

std::string join_words(const FreeProduct& fp, const std::set<Word>& words, std::size_t cap) {
    std::ostringstream os;
    std::size_t i = 0;
    for (const Word& w : words) {
        if (i == cap) {
            os << " ...";
            break;
        }
        if (i) os << ", ";
        os << fp.format_word(w);
        ++i;
    }
    return os.str();
}

} // namespace

MoritaVerdict verify_morita_generation(const FreeProduct& fp, int len_bound) {
    const Label fa = fp.ring(Side::C).require_label("f1");
    const Label fb = fp.ring(Side::D).require_label("f1");
    const Word a{{Letter{Side::C, fa}}};
    const Word b{{Letter{Side::D, fb}}};

    MoritaVerdict v;
    v.xxbar_left = generated_simples(fp, sum_support(fp.fuse_chain({a, b, b, b, b, a})),
                                     len_bound);
    v.xxbar_right = generated_simples(fp, sum_support(fp.fuse_chain({a, b, b, a})), len_bound);
    std::set<Word> joint = sum_support(fp.fuse_chain({a, a}));
    for (const Word& w : sum_support(fp.fuse_chain({b, b}))) joint.insert(w);
    v.xbarx_left = generated_simples(fp, sum_support(fp.fuse_chain({b, b, a, a, b, b})),
                                     len_bound);
    v.xbarx_right = generated_simples(fp, joint, len_bound);

    v.xxbar_equal = v.xxbar_left.words == v.xxbar_right.words;
    v.xbarx_equal = v.xbarx_left.words == v.xbarx_right.words;
    for (const GeneratedSet* s : {&v.xxbar_left, &v.xxbar_right, &v.xbarx_left, &v.xbarx_right}) {
        v.bound_hit = v.bound_hit || s->bound_hit;
        v.overflow = v.overflow || s->overflow;
    }
    return v;
}

CheckResult morita_check(const FreeProduct& fp, const MoritaVerdict& verdict, int len_bound) {
    CheckResult out;
    out.id = "morita-generation";
    out.bound("len", len_bound);
    out.put("c-ring", fp.ring(Side::C).name());
    out.put("d-ring", fp.ring(Side::D).name());

    const std::size_t cap = 40;
    auto describe = [&](const std::string& name, const GeneratedSet& left,
                        const GeneratedSet& right, bool equal) {
        out.put(name + "-verdict", equal ? "equal" : "unequal");
        out.put(name + "-left", std::to_string(left.words.size()) + " words: " +
                                    join_words(fp, left.words, cap));
        out.put(name + "-right", std::to_string(right.words.size()) + " words: " +
                                     join_words(fp, right.words, cap));
        if (!equal) {
            std::set<Word> diff;
            for (const Word& w : left.words)
                if (!right.words.count(w)) diff.insert(w);
            for (const Word& w : right.words)
                if (!left.words.count(w)) diff.insert(w);
            out.fail("generated sets '" + name + "' differ; symmetric difference: " +
                     join_words(fp, diff, cap));
        }
    };
    describe("x-xdual", verdict.xxbar_left, verdict.xxbar_right, verdict.xxbar_equal);
    describe("xdual-x", verdict.xbarx_left, verdict.xbarx_right, verdict.xbarx_equal);
    if (verdict.bound_hit)
        out.put("bound-note", "closure clipped at the length bound");
    if (verdict.overflow) {
        out.overflow = true;
        out.put("overflow-note", "closure scanned the non-overflowing window only");
    }
    out.put("scope", "verified up to bound len=" + std::to_string(len_bound));
    return out;
}

} // namespace freefusion
