#include "freefusion/fusion_ring.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace freefusion {

namespace {

std::uint32_t pack(Label a, Label b) {
    return (std::uint32_t(a) << 16) | std::uint32_t(b);
}

void check_label_text(const std::string& s) {
    if (s.empty()) throw input_error("empty label");
    if (s.find(' ') != std::string::npos || s.find(':') != std::string::npos)
        throw input_error("label '" + s + "' may not contain spaces or ':'");
}

} // namespace

FusionRing::FusionRing(std::string name,
                       std::vector<std::string> labels,
                       const std::string& unit,
                       const std::map<std::string, std::string>& dual,
                       const std::vector<TensorEntry>& tensor,
                       std::set<std::pair<Label, Label>> overflow_pairs)
    : name_(std::move(name)),
      labels_(std::move(labels)),
      overflow_pairs_(std::move(overflow_pairs)) {
    if (labels_.empty()) throw input_error("ring '" + name_ + "': no labels");
    if (labels_.size() >= 0xffff) throw input_error("ring '" + name_ + "': too many labels");
    for (std::size_t i = 0; i < labels_.size(); ++i) {
        check_label_text(labels_[i]);
        auto [it, fresh] = index_.emplace(labels_[i], Label(i));
        (void)it;
        if (!fresh) throw input_error("ring '" + name_ + "': duplicate label '" + labels_[i] + "'");
    }
    unit_ = require_label(unit);
    dual_.resize(labels_.size());
    for (std::size_t i = 0; i < labels_.size(); ++i) {
        auto it = dual.find(labels_[i]);
        if (it == dual.end())
            throw input_error("ring '" + name_ + "': dual not defined for '" + labels_[i] + "'");
        dual_[i] = require_label(it->second);
    }
    for (const auto& [k, v] : dual) {
        (void)v;
        require_label(k); // reject entries for unknown labels
    }

    entries_.reserve(tensor.size());
    for (const TensorEntry& e : tensor) {
        if (e.a >= size() || e.b >= size() || e.c >= size())
            throw input_error("ring '" + name_ + "': tensor entry references unknown label index");
        if (e.n <= 0)
            throw input_error("ring '" + name_ + "': nonpositive multiplicity for (" +
                              labels_[e.a] + "," + labels_[e.b] + "," + labels_[e.c] + ")");
        entries_.push_back(e);
    }
    std::sort(entries_.begin(), entries_.end(), [](const TensorEntry& x, const TensorEntry& y) {
        return std::tie(x.a, x.b, x.c) < std::tie(y.a, y.b, y.c);
    });
    for (std::size_t i = 1; i < entries_.size(); ++i) {
        const TensorEntry &p = entries_[i - 1], &q = entries_[i];
        if (p.a == q.a && p.b == q.b && p.c == q.c)
            throw input_error("ring '" + name_ + "': duplicate tensor entry (" + labels_[p.a] +
                              "," + labels_[p.b] + "," + labels_[p.c] + ")");
    }
    for (const TensorEntry& e : entries_) rows_[pack(e.a, e.b)].add(e.c, e.n);
}

std::optional<Label> FusionRing::find_label(std::string_view name) const {
    auto it = index_.find(name);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

Label FusionRing::require_label(std::string_view name) const {
    auto it = index_.find(name);
    if (it == index_.end())
        throw input_error("ring '" + name_ + "': unknown label '" + std::string(name) + "'");
    return it->second;
}

Mult FusionRing::mult(Label a, Label b, Label c) const {
    auto it = rows_.find(pack(a, b));
    return it == rows_.end() ? 0 : it->second.coeff(c);
}

bool FusionRing::fuse_overflows(Label a, Label b) const {
    return overflow_pairs_.count({a, b}) != 0;
}

SimpleSum FusionRing::fuse(Label a, Label b) const {
    if (a >= size() || b >= size()) throw input_error("ring '" + name_ + "': label out of range");
    if (fuse_overflows(a, b))
        throw truncation_overflow("ring '" + name_ + "': product " + labels_[a] + " (x) " +
                                  labels_[b] + " leaves the truncation window");
    auto it = rows_.find(pack(a, b));
    return it == rows_.end() ? SimpleSum{} : it->second;
}

SimpleSum FusionRing::fuse_sum(const SimpleSum& x, const SimpleSum& y) const {
    SimpleSum out;
    for (const auto& [a, m] : x)
        for (const auto& [b, n] : y) out.add(fuse(a, b), m * n);
    return out;
}

std::string FusionRing::format_sum(const SimpleSum& s) const {
    if (s.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [c, n] : s) {
        if (!first) os << " + ";
        first = false;
        if (n != 1) os << n << "*";
        os << labels_[c];
    }
    return os.str();
}

namespace {

std::string w2(const FusionRing& r, Label a, Label b) {
    return "(" + r.label_name(a) + "," + r.label_name(b) + ")";
}
std::string w3(const FusionRing& r, Label a, Label b, Label c) {
    return "(" + r.label_name(a) + "," + r.label_name(b) + "," + r.label_name(c) + ")";
}

} // namespace

ValidationReport validate_ring(const FusionRing& ring) {
    ValidationReport rep;
    const Label n = Label(ring.size());
    const Label e = ring.unit();

    // dual is an involution fixing the unit
    for (Label a = 0; a < n; ++a) {
        if (ring.dual(ring.dual(a)) != a)
            rep.violations.push_back({"dual-involution", ring.label_name(a)});
    }
    if (ring.dual(e) != e) rep.violations.push_back({"dual-involution", "unit"});

    // unit law: 1 (x) b = b = b (x) 1
    for (Label b = 0; b < n; ++b) {
        if (ring.fuse_overflows(e, b) || ring.fuse_overflows(b, e)) {
            ++rep.truncation_skips;
            continue;
        }
        if (!(ring.fuse(e, b) == SimpleSum::single(b)))
            rep.violations.push_back({"unit", "1 (x) " + ring.label_name(b)});
        if (!(ring.fuse(b, e) == SimpleSum::single(b)))
            rep.violations.push_back({"unit", ring.label_name(b) + " (x) 1"});
    }

    // duality of the unit multiplicity: N^1_{ab} = [b == dual(a)]
    for (Label a = 0; a < n; ++a)
        for (Label b = 0; b < n; ++b) {
            if (ring.fuse_overflows(a, b)) {
                ++rep.truncation_skips;
                continue;
            }
            const Mult have = ring.mult(a, b, e);
            const Mult want = (b == ring.dual(a)) ? 1 : 0;
            if (have != want) rep.violations.push_back({"duality", w2(ring, a, b)});
        }

    // tensor respects the dual involution and Frobenius reciprocity; a
    // comparison is skipped when either side's pair is truncation-marked
    for (const TensorEntry& t : ring.entries()) {
        const Label da = ring.dual(t.a), db = ring.dual(t.b);
        if (ring.fuse_overflows(t.a, t.b) || ring.fuse_overflows(db, da))
            ++rep.truncation_skips;
        else if (t.n != ring.mult(db, da, ring.dual(t.c)))
            rep.violations.push_back({"duality", w3(ring, t.a, t.b, t.c)});
        if (ring.fuse_overflows(t.a, t.b) || ring.fuse_overflows(da, t.c))
            ++rep.truncation_skips;
        else if (t.n != ring.mult(da, t.c, t.b))
            rep.violations.push_back({"frobenius", w3(ring, t.a, t.b, t.c)});
    }

    // associativity: (a b) c = a (b c) as multiplicity vectors
    for (Label a = 0; a < n; ++a)
        for (Label b = 0; b < n; ++b)
            for (Label c = 0; c < n; ++c) {
                try {
                    SimpleSum lhs = ring.fuse_sum(ring.fuse(a, b), SimpleSum::single(c));
                    SimpleSum rhs = ring.fuse_sum(SimpleSum::single(a), ring.fuse(b, c));
                    if (!(lhs == rhs))
                        rep.violations.push_back({"associativity", w3(ring, a, b, c)});
                } catch (const truncation_overflow&) {
                    ++rep.truncation_skips;
                }
            }

    return rep;
}

double fp_dim(const FusionRing& ring, Label a, double tol) {
    const std::size_t n = ring.size();
    if (a >= n) throw input_error("ring '" + ring.name() + "': label out of range");
    // fusion matrix M[b][c] = N^c_{ab}, with a unit shift so that the
    // iteration also converges on periodic (e.g. path-shaped) fusion graphs
    std::vector<std::vector<double>> m(n, std::vector<double>(n, 0.0));
    for (Label b = 0; b < Label(n); ++b) {
        SimpleSum row = ring.fuse(a, b); // may throw truncation_overflow
        for (const auto& [c, k] : row) m[b][c] += double(k);
        m[b][b] += 1.0;
    }
    std::vector<double> v(n, 1.0), w(n, 0.0);
    double prev = -1.0;
    int stable = 0;
    for (int iter = 0; iter < 100000; ++iter) {
        double vv = 0.0, vw = 0.0, ww = 0.0;
        for (std::size_t b = 0; b < n; ++b) {
            double acc = 0.0;
            for (std::size_t c = 0; c < n; ++c) acc += m[b][c] * v[c];
            w[b] = acc;
        }
        for (std::size_t i = 0; i < n; ++i) {
            vv += v[i] * v[i];
            vw += v[i] * w[i];
            ww += w[i] * w[i];
        }
        if (ww == 0.0) throw numeric_error("fp_dim: fusion matrix annihilated the seed");
        const double lambda = vw / vv;
        const double norm = std::sqrt(ww);
        for (std::size_t i = 0; i < n; ++i) v[i] = w[i] / norm;
        if (std::abs(lambda - prev) <= tol) {
            if (++stable >= 2) return lambda - 1.0;
        } else {
            stable = 0;
        }
        prev = lambda;
    }
    throw numeric_error("fp_dim: no convergence for '" + ring.label_name(a) + "' in ring '" +
                        ring.name() + "'");
}

std::vector<Label> adjoint_support(const FusionRing& ring) {
    if (ring.truncated())
        throw truncation_overflow("ring '" + ring.name() +
                                  "': adjoint support is not certified for a truncated ring");
    std::set<Label> out;
    for (const TensorEntry& t : ring.entries())
        if (t.b == ring.dual(t.a)) out.insert(t.c);
    return {out.begin(), out.end()};
}

} // namespace freefusion
