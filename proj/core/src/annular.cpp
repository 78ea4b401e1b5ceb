#include "freefusion/annular.hpp"

#include <algorithm>
#include <chrono>
#include <set>
#include <sstream>

#include "freefusion/parallel.hpp"

namespace freefusion {

std::int64_t tube_dim(const FreeProduct& fp, const Word& v, const Word& b, const Word& c) {
    return hom_dim(fp.fuse_words(v, b), fp.fuse_words(c, v));
}

std::vector<TubeBlockEntry> block_support(const FreeProduct& fp, const Word& b, const Word& c,
                                          int vmax) {
    std::vector<TubeBlockEntry> out;
    for (const Word& v : fp.enumerate_words(vmax, WordFilter::All)) {
        const std::int64_t dim = tube_dim(fp, v, b, c);
        if (dim > 0) out.push_back({v, b, c, dim});
    }
    return out;
}

std::vector<Lemma> all_lemmas() {
    return {Lemma::Equiv,  Lemma::UneqLen, Lemma::Wt1,        Lemma::AdjW0,
            Lemma::AdjCd,  Lemma::AdjCc,   Lemma::QuotientSum};
}

std::string lemma_id(Lemma l) {
    switch (l) {
    case Lemma::Equiv: return "equiv";
    case Lemma::UneqLen: return "uneq-len";
    case Lemma::Wt1: return "wt1";
    case Lemma::AdjW0: return "adj-w0";
    case Lemma::AdjCd: return "adj-cd";
    case Lemma::AdjCc: return "adj-cc";
    case Lemma::QuotientSum: return "quotient-sum";
    }
    return "?";
}

std::optional<Lemma> lemma_from_id(std::string_view id) {
    for (Lemma l : all_lemmas())
        if (lemma_id(l) == id) return l;
    return std::nullopt;
}

namespace {

using Clock = std::chrono::steady_clock;

bool rotation_equivalent(const Word& w1, const Word& w2) {
    if (w1.size() != w2.size()) return false;
    const std::size_t k = w1.size() / 2;
    for (std::size_t r = 0; r < k; ++r)
        if (rotate_blocks(w1, r) == w2) return true;
    return false;
}

std::string side_name(Side s) { return s == Side::C ? "C" : "D"; }

struct PairScan {
    std::vector<std::string> problems;
    std::int64_t supported = 0;
};

// ---- equiv ------------------------------------------------------------

PairScan scan_equiv_pair(const FreeProduct& fp, const Word& w1, const Word& w2,
                         const std::vector<Word>& all_v, int vmax) {
    PairScan r;
    const bool related = rotation_equivalent(w1, w2);
    bool found = false;
    for (const Word& v : all_v) {
        if (tube_dim(fp, v, w1, w2) <= 0) continue;
        found = true;
        if (!related) {
            std::ostringstream os;
            os << "support without rotation equivalence: v=" << fp.format_word(v)
               << " | b=" << fp.format_word(w1) << " | c=" << fp.format_word(w2);
            r.problems.push_back(os.str());
            break;
        }
    }
    if (found) ++r.supported;
    if (related) {
        // positive side: for w1 = u v', w2 = v' u the dual of the moved
        // prefix u is a supporting annulus
        const std::size_t k = w1.size() / 2;
        for (std::size_t rot = 0; rot < k; ++rot) {
            if (!(rotate_blocks(w1, rot) == w2)) continue;
            Word prefix;
            prefix.letters.assign(w1.letters.begin(),
                                  w1.letters.begin() + std::ptrdiff_t(2 * rot));
            const Word witness = fp.word_dual(prefix);
            if (int(witness.size()) > vmax) continue;
            if (tube_dim(fp, witness, w1, w2) < 1) {
                std::ostringstream os;
                os << "missing rotation witness: v=" << fp.format_word(witness)
                   << " | b=" << fp.format_word(w1) << " | c=" << fp.format_word(w2);
                r.problems.push_back(os.str());
            }
        }
        if (!found) {
            std::ostringstream os;
            os << "equivalent pair with empty support: b=" << fp.format_word(w1)
               << " | c=" << fp.format_word(w2);
            r.problems.push_back(os.str());
        }
    }
    return r;
}

CheckResult run_equiv(const FreeProduct& fp, int wmax, int vmax) {
    CheckResult out;
    const std::vector<Word> ws = fp.enumerate_words(wmax, WordFilter::WOnly);
    const std::vector<Word> vs = fp.enumerate_words(vmax, WordFilter::All);
    const std::size_t n = ws.size();
    auto scans = parallel_map<PairScan>(n * n, [&](std::size_t i) {
        return scan_equiv_pair(fp, ws[i / n], ws[i % n], vs, vmax);
    });
    std::int64_t supported = 0;
    for (const PairScan& s : scans) {
        supported += s.supported;
        for (const std::string& p : s.problems) out.fail(p);
    }
    out.put("w-pairs", std::to_string(n * n));
    out.put("supported-pairs", std::to_string(supported));
    out.put("annuli", std::to_string(vs.size()));
    return out;
}

// ---- uneq-len ---------------------------------------------------------

CheckResult run_uneq_len(const FreeProduct& fp, int wmax, int vmax) {
    CheckResult out;
    const std::vector<Word> ws = fp.enumerate_words(wmax, WordFilter::WOnly);
    std::vector<Word> shorts = fp.enumerate_words(std::min(wmax, 1), WordFilter::Lambda);
    const std::vector<Word> vs = fp.enumerate_words(vmax, WordFilter::All);
    auto scans = parallel_map<PairScan>(ws.size(), [&](std::size_t i) {
        PairScan r;
        const Word& w = ws[i];
        for (const Word& b : shorts)
            for (const Word& v : vs) {
                for (bool swap : {false, true}) {
                    const Word& x = swap ? w : b;
                    const Word& y = swap ? b : w;
                    const std::int64_t dim = tube_dim(fp, v, x, y);
                    if (dim != 0) {
                        std::ostringstream os;
                        os << "support between W and shorter weight: v=" << fp.format_word(v)
                           << " | b=" << fp.format_word(x) << " | c=" << fp.format_word(y)
                           << " | dim=" << dim;
                        r.problems.push_back(os.str());
                    }
                }
            }
        return r;
    });
    for (const PairScan& s : scans)
        for (const std::string& p : s.problems) out.fail(p);
    out.put("w-words", std::to_string(ws.size()));
    out.put("short-weights", std::to_string(shorts.size()));
    out.put("annuli", std::to_string(vs.size()));
    return out;
}

// ---- wt1 --------------------------------------------------------------

CheckResult run_wt1(const FreeProduct& fp, int wmax, int vmax) {
    CheckResult out;
    const std::vector<Word> ws = fp.enumerate_words(wmax, WordFilter::WOnly);
    const std::vector<Word> vs = fp.enumerate_words(vmax, WordFilter::All);
    auto scans = parallel_map<PairScan>(ws.size(), [&](std::size_t i) {
        PairScan r;
        const Word& w = ws[i];
        const Word p = primitive_root(w);
        const Word pd = fp.word_dual(p);
        std::set<Word> powers;
        powers.insert(Word{});
        for (std::size_t e = 1; int(e * p.size()) <= vmax; ++e) {
            powers.insert(word_power(p, e));
            powers.insert(word_power(pd, e));
        }
        for (const Word& v : vs) {
            const std::int64_t dim = tube_dim(fp, v, w, w);
            const std::int64_t want = powers.count(v) ? 1 : 0;
            if (dim != want) {
                std::ostringstream os;
                os << "centralizer dimension: w=" << fp.format_word(w)
                   << " | v=" << fp.format_word(v) << " | dim=" << dim << " | want=" << want;
                r.problems.push_back(os.str());
            } else if (dim > 0) {
                ++r.supported;
            }
        }
        return r;
    });
    std::int64_t supported = 0;
    for (const PairScan& s : scans) {
        supported += s.supported;
        for (const std::string& p : s.problems) out.fail(p);
    }
    out.put("w-words", std::to_string(ws.size()));
    out.put("period-power-blocks", std::to_string(supported));
    return out;
}

// ---- adjoint-support lemmas -------------------------------------------

std::set<Label> support_set(const FusionRing& r) {
    const std::vector<Label> s = adjoint_support(r);
    return {s.begin(), s.end()};
}

std::string format_support(const FusionRing& r, const std::set<Label>& s) {
    std::ostringstream os;
    bool first = true;
    for (Label a : s) {
        if (!first) os << ' ';
        first = false;
        os << r.label_name(a);
    }
    return os.str();
}

CheckResult refuse_truncated(const FreeProduct& fp) {
    CheckResult out;
    out.status = "refused";
    out.overflow = true;
    out.put("reason", "bounded verification only: adjoint support of a truncated factor (" +
                          std::string(fp.ring(Side::C).truncated() ? fp.ring(Side::C).name()
                                                                   : fp.ring(Side::D).name()) +
                          ") is not finitely certified");
    return out;
}

CheckResult run_adj_w0(const FreeProduct& fp, int /*wmax*/, int vmax) {
    if (fp.truncated()) return refuse_truncated(fp);
    CheckResult out;
    const std::vector<Word> vs = fp.enumerate_words(vmax, WordFilter::All);
    for (Side s : {Side::C, Side::D}) {
        const FusionRing& ring = fp.ring(s);
        const std::set<Label> supp = support_set(ring);
        out.put("s-set-" + side_name(s), format_support(ring, supp));
        const auto singles = fp.enumerate_words(
            1, s == Side::C ? WordFilter::SingleC : WordFilter::SingleD);
        for (const Word& w : singles) {
            const bool expect = supp.count(w.letters[0].label) != 0;
            bool found = false;
            for (const Word& v : vs) {
                const std::int64_t dim = tube_dim(fp, v, Word{}, w);
                if (dim <= 0) continue;
                found = true;
                if (v.empty() || v.letters.front().side != s) {
                    std::ostringstream os;
                    os << "witness does not start on side " << side_name(s) << ": v="
                       << fp.format_word(v) << " | weight=" << fp.format_word(w);
                    out.fail(os.str());
                }
            }
            if (found != expect) {
                std::ostringstream os;
                os << "support mismatch with adjoint support: weight=" << fp.format_word(w)
                   << " | found=" << (found ? "yes" : "no")
                   << " | in-s-set=" << (expect ? "yes" : "no");
                out.fail(os.str());
            }
        }
    }
    return out;
}

CheckResult run_adj_cd(const FreeProduct& fp, int /*wmax*/, int vmax) {
    if (fp.truncated()) return refuse_truncated(fp);
    CheckResult out;
    const FusionRing& rc = fp.ring(Side::C);
    const FusionRing& rd = fp.ring(Side::D);
    const std::set<Label> sc = support_set(rc), sd = support_set(rd);
    out.put("s-set-C", format_support(rc, sc));
    out.put("s-set-D", format_support(rd, sd));
    const std::vector<Word> vs = fp.enumerate_words(vmax, WordFilter::All);
    std::int64_t blocks = 0;
    for (const Word& wc : fp.enumerate_words(1, WordFilter::SingleC))
        for (const Word& wd : fp.enumerate_words(1, WordFilter::SingleD)) {
            const Label c = wc.letters[0].label, d = wd.letters[0].label;
            const bool expect = sc.count(c) && sd.count(d);
            bool found = false;
            for (const Word& v : vs) {
                const std::int64_t dim = tube_dim(fp, v, wc, wd);
                if (dim == 0) continue;
                found = true;
                ++blocks;
                const bool dc_type = v.size() >= 2 && v.letters.front().side == Side::D &&
                                     v.letters.back().side == Side::C;
                if (!dc_type) {
                    std::ostringstream os;
                    os << "supporting annulus is not a D..C word: v=" << fp.format_word(v)
                       << " | b=" << fp.format_word(wc) << " | c=" << fp.format_word(wd);
                    out.fail(os.str());
                    continue;
                }
                const Label dp = v.letters.front().label;
                const Label cp = v.letters.back().label;
                const std::int64_t want = rd.mult(d, dp, dp) * rc.mult(cp, c, cp);
                if (dim != want) {
                    std::ostringstream os;
                    os << "boundary factorization: v=" << fp.format_word(v)
                       << " | b=" << fp.format_word(wc) << " | c=" << fp.format_word(wd)
                       << " | dim=" << dim << " | want=" << want;
                    out.fail(os.str());
                }
            }
            if (found != expect) {
                std::ostringstream os;
                os << "support mismatch with adjoint supports: b=" << fp.format_word(wc)
                   << " | c=" << fp.format_word(wd) << " | found=" << (found ? "yes" : "no")
                   << " | in-s-sets=" << (expect ? "yes" : "no");
                out.fail(os.str());
            }
        }
    out.put("supported-blocks", std::to_string(blocks));
    return out;
}

CheckResult run_adj_cc(const FreeProduct& fp, int /*wmax*/, int vmax) {
    if (fp.truncated()) return refuse_truncated(fp);
    CheckResult out;
    const std::vector<Word> vs = fp.enumerate_words(vmax, WordFilter::All);
    std::int64_t long_blocks = 0;
    for (Side s : {Side::C, Side::D}) {
        const FusionRing& ring = fp.ring(s);
        const std::set<Label> supp = support_set(ring);
        const auto singles = fp.enumerate_words(
            1, s == Side::C ? WordFilter::SingleC : WordFilter::SingleD);
        for (const Word& w1 : singles)
            for (const Word& w2 : singles) {
                const Label c1 = w1.letters[0].label, c2 = w2.letters[0].label;
                for (const Word& v : vs) {
                    const std::int64_t dim = tube_dim(fp, v, w1, w2);
                    if (v.empty()) {
                        const std::int64_t want = c1 == c2 ? 1 : 0;
                        if (dim != want) {
                            std::ostringstream os;
                            os << "identity annulus block: b=" << fp.format_word(w1)
                               << " | c=" << fp.format_word(w2) << " | dim=" << dim;
                            out.fail(os.str());
                        }
                        continue;
                    }
                    if (v.size() == 1) {
                        std::int64_t want = 0;
                        if (v.letters[0].side == s) {
                            const Label vl = v.letters[0].label;
                            want = hom_dim(ring.fuse(vl, c1), ring.fuse(c2, vl));
                        }
                        if (dim != want) {
                            std::ostringstream os;
                            os << "single-letter annulus vs factor tube dimension: v="
                               << fp.format_word(v) << " | b=" << fp.format_word(w1)
                               << " | c=" << fp.format_word(w2) << " | dim=" << dim
                               << " | want=" << want;
                            out.fail(os.str());
                        }
                        continue;
                    }
                    if (dim == 0) continue;
                    ++long_blocks;
                    const bool ss_type = v.letters.front().side == s &&
                                         v.letters.back().side == s;
                    if (!ss_type) {
                        std::ostringstream os;
                        os << "supporting annulus is not a same-side word: v="
                           << fp.format_word(v) << " | b=" << fp.format_word(w1)
                           << " | c=" << fp.format_word(w2);
                        out.fail(os.str());
                        continue;
                    }
                    const Label cp1 = v.letters.front().label;
                    const Label cp2 = v.letters.back().label;
                    const std::int64_t want = ring.mult(c2, cp1, cp1) * ring.mult(cp2, c1, cp2);
                    if (dim != want) {
                        std::ostringstream os;
                        os << "boundary factorization: v=" << fp.format_word(v)
                           << " | b=" << fp.format_word(w1) << " | c=" << fp.format_word(w2)
                           << " | dim=" << dim << " | want=" << want;
                        out.fail(os.str());
                    }
                    if (!supp.count(c1) || !supp.count(c2)) {
                        std::ostringstream os;
                        os << "long support outside adjoint support: v=" << fp.format_word(v)
                           << " | b=" << fp.format_word(w1) << " | c=" << fp.format_word(w2);
                        out.fail(os.str());
                    }
                }
            }
    }
    out.put("long-annulus-blocks", std::to_string(long_blocks));
    return out;
}

// ---- quotient-sum ------------------------------------------------------

enum class WeightKind { Empty, SingleC, SingleD, W };

WeightKind weight_kind(const Word& w) {
    if (w.empty()) return WeightKind::Empty;
    if (w.size() == 1)
        return w.letters[0].side == Side::C ? WeightKind::SingleC : WeightKind::SingleD;
    return WeightKind::W;
}

CheckResult run_quotient_sum(const FreeProduct& fp, int wmax, int vmax) {
    CheckResult out;
    const std::vector<Word> lambda = fp.enumerate_words(wmax, WordFilter::Lambda);
    const std::vector<Word> vs = fp.enumerate_words(vmax, WordFilter::All);
    const std::size_t n = lambda.size();
    struct Counts {
        std::int64_t weight0 = 0, factor_c = 0, factor_d = 0, wpart = 0, routed = 0;
        std::vector<std::string> problems;
    };
    auto scans = parallel_map<Counts>(n * n, [&](std::size_t i) {
        Counts r;
        const Word& b = lambda[i / n];
        const Word& c = lambda[i % n];
        const WeightKind bk = weight_kind(b), ck = weight_kind(c);
        for (const Word& v : vs) {
            const std::int64_t dim = tube_dim(fp, v, b, c);
            if (dim == 0) continue;
            auto complain = [&](const char* what) {
                std::ostringstream os;
                os << what << ": v=" << fp.format_word(v) << " | b=" << fp.format_word(b)
                   << " | c=" << fp.format_word(c) << " | dim=" << dim;
                r.problems.push_back(os.str());
            };
            if (bk == WeightKind::Empty && ck == WeightKind::Empty) {
                ++r.weight0;
            } else if (bk == WeightKind::W && ck == WeightKind::W) {
                if (rotation_equivalent(b, c)) ++r.wpart;
                else complain("cross term between inequivalent W weights");
            } else if (bk == WeightKind::W || ck == WeightKind::W) {
                complain("cross term between W and shorter weights");
            } else if (bk == WeightKind::Empty || ck == WeightKind::Empty) {
                ++r.routed;
            } else if (bk == ck) {
                const Side s = bk == WeightKind::SingleC ? Side::C : Side::D;
                if (v.empty() || (v.size() == 1 && v.letters[0].side == s)) {
                    (s == Side::C ? r.factor_c : r.factor_d)++;
                } else if (v.size() == 1) {
                    complain("single opposite-side annulus support");
                } else {
                    ++r.routed;
                }
            } else {
                ++r.routed; // I_C x I_D weights route through weight zero
            }
        }
        return r;
    });
    Counts total;
    for (const Counts& s : scans) {
        total.weight0 += s.weight0;
        total.factor_c += s.factor_c;
        total.factor_d += s.factor_d;
        total.wpart += s.wpart;
        total.routed += s.routed;
        for (const std::string& p : s.problems) out.fail(p);
    }
    out.put("weight0-blocks", std::to_string(total.weight0));
    out.put("factor-c-blocks", std::to_string(total.factor_c));
    out.put("factor-d-blocks", std::to_string(total.factor_d));
    out.put("w-blocks", std::to_string(total.wpart));
    out.put("weight-zero-routed-blocks", std::to_string(total.routed));
    return out;
}

} // namespace

CheckResult verify_lemma(const FreeProduct& fp, Lemma lemma, int wmax, int vmax) {
    const auto start = Clock::now();
    CheckResult out;
    try {
        switch (lemma) {
        case Lemma::Equiv: out = run_equiv(fp, wmax, vmax); break;
        case Lemma::UneqLen: out = run_uneq_len(fp, wmax, vmax); break;
        case Lemma::Wt1: out = run_wt1(fp, wmax, vmax); break;
        case Lemma::AdjW0: out = run_adj_w0(fp, wmax, vmax); break;
        case Lemma::AdjCd: out = run_adj_cd(fp, wmax, vmax); break;
        case Lemma::AdjCc: out = run_adj_cc(fp, wmax, vmax); break;
        case Lemma::QuotientSum: out = run_quotient_sum(fp, wmax, vmax); break;
        }
    } catch (const truncation_overflow& e) {
        out.overflow = true;
        out.put("aborted", e.what());
    }
    out.id = lemma_id(lemma);
    out.bound("wmax", wmax);
    out.bound("vmax", vmax);
    out.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    return out;
}

DecompositionReport decomposition_report(const FreeProduct& fp, int wmax, int vmax) {
    DecompositionReport rep;
    rep.wmax = wmax;
    rep.vmax = vmax;
    rep.note = "w-class matrix size counts rotation-class members";

    rep.weight0_dims_by_length.assign(std::size_t(vmax) + 1, 0);
    for (const Word& v : fp.enumerate_words(vmax, WordFilter::All))
        rep.weight0_dims_by_length[v.size()] += 1;

    for (Side s : {Side::C, Side::D}) {
        std::vector<TubeBlockEntry>& plus = s == Side::C ? rep.plus_c : rep.plus_d;
        const auto singles = fp.enumerate_words(
            1, s == Side::C ? WordFilter::SingleC : WordFilter::SingleD);
        const std::vector<Word> vs = fp.enumerate_words(vmax, WordFilter::All);
        for (const Word& b : singles)
            for (const Word& c : singles)
                for (const Word& v : vs) {
                    if (v.size() < 2) continue;
                    const std::int64_t dim = tube_dim(fp, v, b, c);
                    if (dim > 0) plus.push_back({v, b, c, dim});
                }
    }

    std::set<Word> seen;
    for (const Word& w : fp.enumerate_words(wmax, WordFilter::WOnly)) {
        CyclicClass cls = cyclic_class(fp, w);
        if (!seen.insert(cls.canonical).second) continue;
        WClassEntry e;
        e.matrix_size = cls.members.size();
        e.cls = std::move(cls);
        rep.wclasses.push_back(std::move(e));
    }
    std::sort(rep.wclasses.begin(), rep.wclasses.end(),
              [](const WClassEntry& a, const WClassEntry& b) {
                  return a.cls.canonical < b.cls.canonical;
              });
    return rep;
}

std::vector<WClassCount> wclass_counts(const FreeProduct& fp, int kmax) {
    std::vector<WClassCount> out(std::size_t(std::max(kmax, 0)));
    const std::int64_t m = std::int64_t(fp.letter_count(Side::C));
    const std::int64_t n = std::int64_t(fp.letter_count(Side::D));
    const std::int64_t base = m * n; // one digit per C-D block; digit order
                                     // matches shortlex order of the block
    if (base == 0) return out;
    for (int k = 1; k <= kmax; ++k) {
        WClassCount& cnt = out[std::size_t(k - 1)];
        std::vector<std::int64_t> digits(std::size_t(k), 0);
        while (true) {
            ++cnt.words;
            bool canonical = true;
            std::size_t period = std::size_t(k);
            for (std::size_t r = 1; r < std::size_t(k); ++r) {
                int cmp = 0;
                for (std::size_t i = 0; i < std::size_t(k); ++i) {
                    const std::int64_t a = digits[(i + r) % std::size_t(k)];
                    const std::int64_t b = digits[i];
                    if (a != b) {
                        cmp = a < b ? -1 : 1;
                        break;
                    }
                }
                if (cmp < 0) {
                    canonical = false;
                    break;
                }
                if (cmp == 0 && r < period) period = r;
            }
            if (canonical) {
                ++cnt.classes;
                cnt.member_sum += std::int64_t(period);
            }
            std::size_t i = std::size_t(k);
            while (i > 0) {
                if (++digits[i - 1] < base) break;
                digits[i - 1] = 0;
                --i;
            }
            if (i == 0) break;
        }
    }
    return out;
}

CheckResult decomposition_as_check(const FreeProduct& fp, const DecompositionReport& rep) {
    CheckResult out;
    out.id = "decomposition";
    out.bound("wmax", rep.wmax);
    out.bound("vmax", rep.vmax);
    {
        std::ostringstream os;
        std::int64_t total = 0;
        for (std::size_t len = 0; len < rep.weight0_dims_by_length.size(); ++len) {
            if (len) os << ' ';
            os << "len" << len << "=" << rep.weight0_dims_by_length[len];
            total += rep.weight0_dims_by_length[len];
        }
        os << " total=" << total;
        out.put("weight0-dims", os.str());
    }
    for (Side s : {Side::C, Side::D}) {
        const auto& plus = s == Side::C ? rep.plus_c : rep.plus_d;
        const std::string key = s == Side::C ? "plus-c" : "plus-d";
        out.put(key + "-blocks", std::to_string(plus.size()));
        std::ostringstream os;
        const std::size_t cap = 40;
        for (std::size_t i = 0; i < plus.size() && i < cap; ++i) {
            if (i) os << "; ";
            os << "v=" << fp.format_word(plus[i].v) << " b=" << fp.format_word(plus[i].b)
               << " c=" << fp.format_word(plus[i].c) << " dim=" << plus[i].dim;
        }
        if (plus.size() > cap) os << "; ...";
        if (!plus.empty()) out.put(key + "-list", os.str());
    }
    out.put("w-classes", std::to_string(rep.wclasses.size()));
    {
        std::ostringstream os;
        const std::size_t cap = 40;
        for (std::size_t i = 0; i < rep.wclasses.size() && i < cap; ++i) {
            const WClassEntry& e = rep.wclasses[i];
            if (i) os << "; ";
            os << "canonical=" << fp.format_word(e.cls.canonical) << " size=" << e.matrix_size
               << " period=" << fp.format_word(e.cls.period) << " exponent=" << e.cls.exponent;
        }
        if (rep.wclasses.size() > cap) os << "; ...";
        if (!rep.wclasses.empty()) out.put("w-class-list", os.str());
    }
    out.put("note", rep.note);
    return out;
}

} // namespace freefusion
