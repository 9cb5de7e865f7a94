#include "oqsym/qsym.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <numeric>
#include <stdexcept>

#include <json.hpp>

namespace oqsym {

QSymElement QSymElement::monomial(Composition alpha, Int coeff) {
    QSymElement out;
    if (coeff != 0) out.terms_.emplace(std::move(alpha), std::move(coeff));
    return out;
}

bool QSymElement::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

Int QSymElement::coefficient(const Composition& alpha) const {
    auto it = terms_.find(alpha);
    return it == terms_.end() ? Int{0} : it->second;
}

std::uint64_t QSymElement::degree() const {
    std::uint64_t d = 0;
    for (const auto& [alpha, c] : terms_) d = std::max(d, alpha.weight());
    return d;
}

void QSymElement::add_term(const Composition& alpha, const Int& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(alpha, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

QSymElement& QSymElement::operator+=(const QSymElement& other) {
    for (const auto& [alpha, c] : other.terms_) add_term(alpha, c);
    return *this;
}

QSymElement& QSymElement::operator-=(const QSymElement& other) {
    for (const auto& [alpha, c] : other.terms_) add_term(alpha, -c);
    return *this;
}

QSymElement& QSymElement::operator*=(const Int& scalar) {
    if (scalar == 0) {
        terms_.clear();
    } else {
        for (auto& [alpha, c] : terms_) c *= scalar;
    }
    return *this;
}

namespace {

std::string render_support(const Composition& alpha) {
    bool compact = std::all_of(alpha.parts().begin(), alpha.parts().end(),
                               [](std::uint32_t p) { return p <= 9; });
    std::string out = "M_";
    if (compact && !alpha.empty()) {
        for (std::uint32_t p : alpha.parts()) out += static_cast<char>('0' + p);
    } else {
        out += alpha.str();
    }
    return out;
}

}  // namespace

std::string QSymElement::compact() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [alpha, c] : terms_) {
        Int a = c < 0 ? Int(-c) : c;
        if (first) {
            if (c < 0) out += "-";
            first = false;
        } else {
            out += c < 0 ? " - " : " + ";
        }
        if (alpha.empty()) {
            out += a.str();
            continue;
        }
        if (a != 1) out += a.str();
        out += render_support(alpha);
    }
    return out;
}

Composition QSymElement::parse_support_token(std::string_view tok) {
    if (tok.substr(0, 2) != "M_")
        throw std::invalid_argument("expected M_<composition>, got: " + std::string(tok));
    return Composition::parse(tok.substr(2));
}

QSymElement QSymElement::parse_compact(std::string_view text) {
    QSymElement out;
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty() || s == "0") return out;

    std::size_t i = 0;
    while (i < s.size()) {
        Int sign = 1;
        if (s[i] == '+') {
            ++i;
        } else if (s[i] == '-') {
            sign = -1;
            ++i;
        }
        std::size_t j = i;
        while (j < s.size() && s[j] != '+' && s[j] != '-') ++j;
        std::string_view term(s.data() + i, j - i);
        if (term.empty()) throw std::invalid_argument("empty term in: " + std::string(text));

        std::size_t m = term.find("M_");
        Int coeff = 1;
        if (m == std::string_view::npos) {
            coeff = Int(std::string(term));
            out.add_term(Composition{}, sign * coeff);
        } else {
            if (m > 0) coeff = Int(std::string(term.substr(0, m)));
            out.add_term(Composition::parse(term.substr(m + 2)), sign * coeff);
        }
        i = j;
    }
    return out;
}

std::string QSymElement::to_json() const {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [alpha, c] : terms_) {
        nlohmann::json parts = nlohmann::json::array();
        for (std::uint32_t p : alpha.parts()) parts.push_back(p);
        nlohmann::json coeff;
        if (c >= std::numeric_limits<std::int64_t>::min() &&
            c <= std::numeric_limits<std::int64_t>::max()) {
            coeff = c.convert_to<std::int64_t>();
        } else {
            coeff = c.str();
        }
        terms.push_back(nlohmann::json::array({parts, coeff}));
    }
    return nlohmann::json{{"terms", terms}}.dump();
}

QSymElement QSymElement::from_json(std::string_view text) {
    QSymElement out;
    try {
        nlohmann::json doc = nlohmann::json::parse(text);
        for (const auto& entry : doc.at("terms")) {
            std::vector<std::uint32_t> parts;
            for (const auto& p : entry.at(0)) parts.push_back(p.get<std::uint32_t>());
            const auto& c = entry.at(1);
            Int coeff;
            if (c.is_string()) {
                coeff = Int(c.get<std::string>());
            } else if (c.is_number_unsigned()) {
                coeff = Int(c.get<std::uint64_t>());
            } else {
                coeff = Int(c.get<std::int64_t>());
            }
            out.add_term(Composition(std::move(parts)), coeff);
        }
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("bad qsym json: ") + e.what());
    }
    return out;
}

bool OverlapPattern::valid() const {
    if (n < 0) return false;
    std::vector<bool> hit(static_cast<std::size_t>(n) + 1, false);
    for (const auto* seq : {&f, &g}) {
        int prev = 0;
        for (int v : *seq) {
            if (v <= prev || v > n) return false;
            hit[static_cast<std::size_t>(v)] = true;
            prev = v;
        }
    }
    for (int k = 1; k <= n; ++k)
        if (!hit[static_cast<std::size_t>(k)]) return false;
    std::size_t lo = std::max(f.size(), g.size());
    return lo <= static_cast<std::size_t>(n) && static_cast<std::size_t>(n) <= f.size() + g.size();
}

Composition OverlapPattern::weight_of(const Composition& a, const Composition& b) const {
    std::vector<std::uint32_t> w(static_cast<std::size_t>(n), 0);
    for (std::size_t i = 0; i < f.size(); ++i) w[static_cast<std::size_t>(f[i]) - 1] += a[i];
    for (std::size_t j = 0; j < g.size(); ++j) w[static_cast<std::size_t>(g[j]) - 1] += b[j];
    return Composition(std::move(w));
}

namespace {

void patterns_rec(std::size_t l, std::size_t m, std::size_t i, std::size_t j, int pos,
                  std::vector<int>& f, std::vector<int>& g, std::vector<OverlapPattern>& out) {
    if (i == l && j == m) {
        out.push_back(OverlapPattern{f, g, pos});
        return;
    }
    if (i < l) {
        f.push_back(pos + 1);
        patterns_rec(l, m, i + 1, j, pos + 1, f, g, out);
        f.pop_back();
    }
    if (j < m) {
        g.push_back(pos + 1);
        patterns_rec(l, m, i, j + 1, pos + 1, f, g, out);
        g.pop_back();
    }
    if (i < l && j < m) {
        f.push_back(pos + 1);
        g.push_back(pos + 1);
        patterns_rec(l, m, i + 1, j + 1, pos + 1, f, g, out);
        f.pop_back();
        g.pop_back();
    }
}

}  // namespace

std::vector<OverlapPattern> overlap_patterns(std::size_t l, std::size_t m) {
    std::vector<OverlapPattern> out;
    std::vector<int> f, g;
    patterns_rec(l, m, 0, 0, 0, f, g, out);
    return out;
}

QSymElement oshuffle_compositions_direct(const Composition& a, const Composition& b) {
    QSymElement out;
    for (const OverlapPattern& pat : overlap_patterns(a.length(), b.length()))
        out.add_term(pat.weight_of(a, b), 1);
    return out;
}

namespace {

using PairKey = std::pair<Composition, Composition>;

// prepend M_(first) via concatenation
QSymElement prepend_part(std::uint32_t first, const QSymElement& q) {
    QSymElement out;
    for (const auto& [gamma, c] : q.terms())
        out.add_term(concat(Composition{first}, gamma), c);
    return out;
}

const QSymElement& oshuffle_rec_memo(const Composition& a, const Composition& b,
                                     std::map<PairKey, QSymElement>& memo) {
    auto it = memo.find({a, b});
    if (it != memo.end()) return it->second;

    QSymElement result;
    if (a.empty()) {
        result = QSymElement::monomial(b);
    } else if (b.empty()) {
        result = QSymElement::monomial(a);
    } else {
        Composition a_tail(std::vector<std::uint32_t>(a.parts().begin() + 1, a.parts().end()));
        Composition b_tail(std::vector<std::uint32_t>(b.parts().begin() + 1, b.parts().end()));
        result += prepend_part(a[0], oshuffle_rec_memo(a_tail, b, memo));
        result += prepend_part(b[0], oshuffle_rec_memo(a, b_tail, memo));
        result += prepend_part(a[0] + b[0], oshuffle_rec_memo(a_tail, b_tail, memo));
    }
    return memo.emplace(PairKey{a, b}, std::move(result)).first->second;
}

}  // namespace

QSymElement oshuffle_compositions_rec(const Composition& a, const Composition& b) {
    std::map<PairKey, QSymElement> memo;
    return oshuffle_rec_memo(a, b, memo);
}

QSymElement mul_oshuffle(const QSymElement& p, const QSymElement& q, bool cross_check) {
    QSymElement out;
    std::map<PairKey, QSymElement> cache;
    for (const auto& [alpha, c] : p.terms()) {
        for (const auto& [beta, d] : q.terms()) {
            auto it = cache.find({alpha, beta});
            if (it == cache.end()) {
                QSymElement prod = oshuffle_compositions_direct(alpha, beta);
                if (cross_check && prod != oshuffle_compositions_rec(alpha, beta))
                    throw std::logic_error("overlapping shuffle implementations disagree on " +
                                           alpha.str() + " and " + beta.str());
                it = cache.emplace(PairKey{alpha, beta}, std::move(prod)).first;
            }
            Int cd = c * d;
            for (const auto& [gamma, e] : it->second.terms()) out.add_term(gamma, cd * e);
        }
    }
    return out;
}

QSymElement mul_concat(const QSymElement& p, const QSymElement& q) {
    QSymElement out;
    for (const auto& [alpha, c] : p.terms())
        for (const auto& [beta, d] : q.terms())
            out.add_term(concat(alpha, beta), c * d);
    return out;
}

QSymElement rho(const QSymElement& p) {
    QSymElement out;
    for (const auto& [alpha, c] : p.terms()) out.add_term(reversed(alpha), c);
    return out;
}

std::pair<Composition, Int> leading_term(const QSymElement& p) {
    if (p.is_zero()) throw std::invalid_argument("zero element has no leading term");
    const auto& front = *p.terms().begin();
    return {front.first, front.second};
}

bool is_primitive(const QSymElement& p) {
    if (p.is_zero()) throw std::invalid_argument("zero element has no coefficient gcd");
    Int g = 0;
    for (const auto& [alpha, c] : p.terms()) {
        g = boost::multiprecision::gcd(g, c < 0 ? Int(-c) : c);
        if (g == 1) return true;
    }
    return g == 1;
}

namespace {

// p with the leading (or trailing) part 1 stripped from every support
// composition, or nothing if some composition does not carry it.
std::pair<bool, QSymElement> strip_unit_part(const QSymElement& p, bool leading) {
    QSymElement q;
    for (const auto& [alpha, c] : p.terms()) {
        const auto& parts = alpha.parts();
        if (parts.empty()) return {false, {}};
        if ((leading ? parts.front() : parts.back()) != 1) return {false, {}};
        std::vector<std::uint32_t> rest(leading ? parts.begin() + 1 : parts.begin(),
                                        leading ? parts.end() : parts.end() - 1);
        q.add_term(Composition(std::move(rest)), c);
    }
    return {true, std::move(q)};
}

}  // namespace

IrredCertificate irreducible_by_lemma(const QSymElement& p) {
    if (p.is_zero() || p.is_constant())
        throw std::invalid_argument("irreducibility certificate needs a non-constant element");
    if (auto [ok, q] = strip_unit_part(p, true); ok && !q.is_zero() && is_primitive(q))
        return IrredCertificate::left;
    if (auto [ok, q] = strip_unit_part(p, false); ok && !q.is_zero() && is_primitive(q))
        return IrredCertificate::right;
    return IrredCertificate::inconclusive;
}

TruncatedPoly::TruncatedPoly(int vars, int maxdeg) : vars_(vars), maxdeg_(maxdeg) {
    if (vars < 1) throw std::invalid_argument("truncated polynomial needs at least one variable");
}

void TruncatedPoly::add_term(const Monomial& m, const Int& c) {
    if (c == 0) return;
    std::uint64_t deg = std::accumulate(m.begin(), m.end(), std::uint64_t{0});
    if (deg > static_cast<std::uint64_t>(maxdeg_)) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

TruncatedPoly& TruncatedPoly::operator+=(const TruncatedPoly& other) {
    for (const auto& [m, c] : other.terms_) add_term(m, c);
    return *this;
}

TruncatedPoly operator*(const TruncatedPoly& a, const TruncatedPoly& b) {
    if (a.vars_ != b.vars_ || a.maxdeg_ != b.maxdeg_)
        throw std::invalid_argument("truncated polynomial shape mismatch");
    TruncatedPoly out(a.vars_, a.maxdeg_);
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            TruncatedPoly::Monomial m(static_cast<std::size_t>(a.vars_), 0);
            for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
            out.add_term(m, ca * cb);
        }
    }
    return out;
}

TruncatedPoly expand_truncated(const QSymElement& p, int vars, int maxdeg) {
    TruncatedPoly out(vars, maxdeg);
    for (const auto& [alpha, c] : p.terms()) {
        if (alpha.weight() > static_cast<std::uint64_t>(maxdeg)) continue;
        std::size_t l = alpha.length();
        if (l > static_cast<std::size_t>(vars)) continue;
        // choose increasing variable indices for the parts of alpha
        std::vector<int> idx;
        auto rec = [&](auto&& self, std::size_t pos, int next_var) -> void {
            if (pos == l) {
                TruncatedPoly::Monomial m(static_cast<std::size_t>(vars), 0);
                for (std::size_t i = 0; i < l; ++i) m[static_cast<std::size_t>(idx[i])] = alpha[i];
                out.add_term(m, c);
                return;
            }
            for (int v = next_var; v <= vars - static_cast<int>(l - pos); ++v) {
                idx.push_back(v);
                self(self, pos + 1, v + 1);
                idx.pop_back();
            }
        };
        rec(rec, 0, 0);
    }
    return out;
}

}  // namespace oqsym
