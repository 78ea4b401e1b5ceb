#include "freefusion/free_product.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace freefusion {

namespace {

std::string describe_violations(const FusionRing& r, const ValidationReport& rep) {
    std::ostringstream os;
    os << "ring '" << r.name() << "' fails validation:";
    for (const auto& v : rep.violations) os << " [" << v.axiom << " " << v.witness << "]";
    return os.str();
}

} // namespace

FreeProduct::FreeProduct(FusionRing c, FusionRing d) : c_(std::move(c)), d_(std::move(d)) {
    for (const FusionRing* r : {&c_, &d_}) {
        ValidationReport rep = validate_ring(*r);
        if (!rep.ok()) throw input_error(describe_violations(*r, rep));
    }
    if (!c_.truncated()) {
        dims_c_.resize(c_.size());
        for (Label a = 0; a < Label(c_.size()); ++a) dims_c_[a] = fp_dim(c_, a);
    }
    if (!d_.truncated()) {
        dims_d_.resize(d_.size());
        for (Label a = 0; a < Label(d_.size()); ++a) dims_d_[a] = fp_dim(d_, a);
    }
}

std::size_t FreeProduct::letter_count(Side s) const { return ring(s).size() - 1; }

bool FreeProduct::valid_word(const Word& w) const {
    for (const Letter& l : w.letters) {
        const FusionRing& r = ring(l.side);
        if (l.label >= r.size() || l.label == r.unit()) return false;
    }
    return alternating(w);
}

void FreeProduct::require_word(const Word& w) const {
    for (const Letter& l : w.letters) {
        const FusionRing& r = ring(l.side);
        if (l.label >= r.size())
            throw input_error("word letter out of range for ring '" + r.name() + "'");
        if (l.label == r.unit())
            throw input_error("word contains a unit letter of ring '" + r.name() + "'");
    }
    if (!alternating(w)) throw input_error("word letters do not alternate sides");
}

bool FreeProduct::in_w(const Word& w) const { return valid_word(w) && w_shaped(w); }

bool FreeProduct::in_lambda(const Word& w) const {
    return valid_word(w) && (w.empty() || w.size() == 1 || w_shaped(w));
}

Word FreeProduct::word_dual(const Word& w) const {
    Word out;
    out.letters.reserve(w.size());
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
        out.letters.push_back({it->side, ring(it->side).dual(it->label)});
    return out;
}

void FreeProduct::fuse_rec(const Word& w1, std::size_t take1, const Word& w2,
                           std::size_t drop2, Mult scale, WordSum& out) const {
    if (take1 == 0) {
        Word rest;
        rest.letters.assign(w2.letters.begin() + std::ptrdiff_t(drop2), w2.letters.end());
        out.add(rest, scale);
        return;
    }
    if (drop2 == w2.size()) {
        Word rest;
        rest.letters.assign(w1.letters.begin(), w1.letters.begin() + std::ptrdiff_t(take1));
        out.add(rest, scale);
        return;
    }
    const Letter x = w1.letters[take1 - 1];
    const Letter y = w2.letters[drop2];
    if (x.side != y.side) {
        Word joined;
        joined.letters.reserve(take1 + w2.size() - drop2);
        joined.letters.assign(w1.letters.begin(), w1.letters.begin() + std::ptrdiff_t(take1));
        joined.letters.insert(joined.letters.end(), w2.letters.begin() + std::ptrdiff_t(drop2),
                              w2.letters.end());
        out.add(joined, scale);
        return;
    }
    const FusionRing& r = ring(x.side);
    const SimpleSum channels = r.fuse(x.label, y.label); // may throw truncation_overflow
    for (const auto& [c, n] : channels) {
        if (c == r.unit()) {
            fuse_rec(w1, take1 - 1, w2, drop2 + 1, scale * n, out);
        } else {
            Word joined;
            joined.letters.reserve(take1 + w2.size() - drop2 - 1);
            joined.letters.assign(w1.letters.begin(),
                                  w1.letters.begin() + std::ptrdiff_t(take1 - 1));
            joined.letters.push_back({x.side, c});
            joined.letters.insert(joined.letters.end(),
                                  w2.letters.begin() + std::ptrdiff_t(drop2 + 1),
                                  w2.letters.end());
            out.add(joined, scale * n);
        }
    }
}

WordSum FreeProduct::fuse_words(const Word& w1, const Word& w2) const {
    require_word(w1);
    require_word(w2);
    WordSum out;
    fuse_rec(w1, w1.size(), w2, 0, 1, out);
    return out;
}

WordSum FreeProduct::fuse_word_sums(const WordSum& x, const WordSum& y) const {
    WordSum out;
    for (const auto& [w1, m] : x)
        for (const auto& [w2, n] : y) {
            WordSum part;
            fuse_rec(w1, w1.size(), w2, 0, m * n, part);
            out.add(part);
        }
    return out;
}

WordSum FreeProduct::fuse_chain(const std::vector<Word>& factors) const {
    WordSum acc = WordSum::single(Word{});
    for (const Word& f : factors) {
        require_word(f);
        acc = fuse_word_sums(acc, WordSum::single(f));
    }
    return acc;
}

std::vector<Word> FreeProduct::enumerate_words(int max_len, WordFilter filter) const {
    std::vector<Word> out;
    std::vector<Letter> c_letters, d_letters;
    for (Label a = 0; a < Label(c_.size()); ++a)
        if (a != c_.unit()) c_letters.push_back({Side::C, a});
    for (Label a = 0; a < Label(d_.size()); ++a)
        if (a != d_.unit()) d_letters.push_back({Side::D, a});

    auto emit_of_length = [&](int len, Side start) {
        if (len == 0) {
            out.push_back(Word{});
            return;
        }
        Word w;
        w.letters.resize(std::size_t(len));
        auto rec = [&](auto&& self, int pos, Side side) -> void {
            const auto& pool = side == Side::C ? c_letters : d_letters;
            for (const Letter& l : pool) {
                w.letters[std::size_t(pos)] = l;
                if (pos + 1 == len)
                    out.push_back(w);
                else
                    self(self, pos + 1, opposite(side));
            }
        };
        rec(rec, 0, start);
    };

    switch (filter) {
    case WordFilter::All:
        for (int len = 0; len <= max_len; ++len) {
            if (len == 0) {
                emit_of_length(0, Side::C);
            } else {
                emit_of_length(len, Side::C);
                emit_of_length(len, Side::D);
            }
        }
        break;
    case WordFilter::Lambda:
        if (max_len >= 0) emit_of_length(0, Side::C);
        if (max_len >= 1) {
            emit_of_length(1, Side::C);
            emit_of_length(1, Side::D);
        }
        for (int len = 2; len <= max_len; len += 2) emit_of_length(len, Side::C);
        break;
    case WordFilter::WOnly:
        for (int len = 2; len <= max_len; len += 2) emit_of_length(len, Side::C);
        break;
    case WordFilter::SingleC:
        if (max_len >= 1) emit_of_length(1, Side::C);
        break;
    case WordFilter::SingleD:
        if (max_len >= 1) emit_of_length(1, Side::D);
        break;
    }
    return out;
}

double FreeProduct::letter_dim(Letter l) const {
    const auto& dims = l.side == Side::C ? dims_c_ : dims_d_;
    if (dims.empty())
        throw truncation_overflow("ring '" + ring(l.side).name() +
                                  "': Frobenius-Perron data unavailable for a truncated ring");
    return dims.at(l.label);
}

double FreeProduct::word_dim(const Word& w) const {
    double d = 1.0;
    for (const Letter& l : w.letters) d *= letter_dim(l);
    return d;
}

double FreeProduct::sum_dim(const WordSum& s) const {
    double d = 0.0;
    for (const auto& [w, n] : s) d += double(n) * word_dim(w);
    return d;
}

std::string FreeProduct::format_word(const Word& w) const {
    if (w.empty()) return "∅";
    std::ostringstream os;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) os << ' ';
        const Letter& l = w.letters[i];
        os << (l.side == Side::C ? "C:" : "D:") << ring(l.side).label_name(l.label);
    }
    return os.str();
}

std::string FreeProduct::format_word_sum(const WordSum& s) const {
    if (s.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, n] : s) {
        if (!first) os << " + ";
        first = false;
        if (n != 1) os << n << "*";
        os << format_word(w);
    }
    return os.str();
}

Word FreeProduct::parse_word(std::string_view text) const {
    Word w;
    std::istringstream is{std::string(text)};
    std::string tok;
    while (is >> tok) {
        if (tok == "∅") continue;
        Side side;
        if (tok.rfind("C:", 0) == 0)
            side = Side::C;
        else if (tok.rfind("D:", 0) == 0)
            side = Side::D;
        else
            throw input_error("word token '" + tok + "' lacks a C:/D: side prefix");
        const Label lab = ring(side).require_label(tok.substr(2));
        w.letters.push_back({side, lab});
    }
    require_word(w);
    return w;
}

CyclicClass cyclic_class(const FreeProduct& fp, const Word& w) {
    fp.require_word(w);
    if (!w_shaped(w))
        throw input_error("cyclic_class: '" + fp.format_word(w) + "' is not a W word");
    const std::size_t k = w.size() / 2;
    std::set<Word> members;
    for (std::size_t r = 0; r < k; ++r) members.insert(rotate_blocks(w, r));
    CyclicClass cls;
    cls.members.assign(members.begin(), members.end());
    cls.canonical = cls.members.front();
    cls.period = primitive_root(cls.canonical);
    cls.exponent = int(k / (cls.period.size() / 2));
    return cls;
}

} // namespace freefusion
