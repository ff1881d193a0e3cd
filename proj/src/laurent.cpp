#include "cck/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include <boost/functional/hash.hpp>

#include "cck/errors.hpp"

namespace cck {

bool gradedLexLess(const Expo& a, const Expo& b) {
    long long da = 0, db = 0;
    for (int x : a) da += x;
    for (int x : b) db += x;
    if (da != db) return da < db;
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

namespace {

struct GradedLexGreater {
    bool operator()(const Expo& a, const Expo& b) const { return gradedLexLess(b, a); }
};

using TermMap = std::map<Expo, BigInt, GradedLexGreater>;

std::vector<Laurent::Term> collect(TermMap&& m) {
    std::vector<Laurent::Term> out;
    out.reserve(m.size());
    for (auto& [e, c] : m)
        if (c != 0) out.push_back({e, std::move(c)});
    return out;
}

}  // namespace

Laurent Laurent::constant(int n, BigInt c) {
    if (c == 0) return zero(n);
    return Laurent(n, {Term{Expo(n, 0), std::move(c)}});
}

Laurent Laurent::variable(int n, int i, int power) {
    Expo e(n, 0);
    e[i] = power;
    return Laurent(n, {Term{std::move(e), 1}});
}

Laurent Laurent::monomial(Expo e, BigInt c) {
    int n = static_cast<int>(e.size());
    if (c == 0) return zero(n);
    return Laurent(n, {Term{std::move(e), std::move(c)}});
}

Laurent Laurent::operator+(const Laurent& o) const {
    if (n_ != o.n_) throw InvalidInput("Laurent arity mismatch");
    TermMap m;
    for (const auto& t : terms_) m[t.e] = t.c;
    for (const auto& t : o.terms_) m[t.e] += t.c;
    return Laurent(n_, collect(std::move(m)));
}

Laurent Laurent::operator-(const Laurent& o) const {
    if (n_ != o.n_) throw InvalidInput("Laurent arity mismatch");
    TermMap m;
    for (const auto& t : terms_) m[t.e] = t.c;
    for (const auto& t : o.terms_) m[t.e] -= t.c;
    return Laurent(n_, collect(std::move(m)));
}

Laurent Laurent::operator*(const Laurent& o) const {
    if (n_ != o.n_) throw InvalidInput("Laurent arity mismatch");
    TermMap m;
    Expo e(n_);
    for (const auto& s : terms_)
        for (const auto& t : o.terms_) {
            for (int i = 0; i < n_; ++i) e[i] = s.e[i] + t.e[i];
            m[e] += s.c * t.c;
        }
    return Laurent(n_, collect(std::move(m)));
}

Laurent Laurent::pow(long long k) const {
    if (k < 0) throw InvalidInput("pow: negative exponent on a polynomial");
    Laurent acc = one(n_);
    Laurent base = *this;
    while (k) {
        if (k & 1) acc = acc * base;
        base = k > 1 ? base * base : base;
        k >>= 1;
    }
    return acc;
}

std::size_t Laurent::hash() const {
    std::size_t h = static_cast<std::size_t>(n_) * 2654435761u;
    boost::hash<BigInt> ch;
    for (const auto& t : terms_) {
        for (int x : t.e) h = hashCombine(h, static_cast<std::size_t>(x) + 0x51ed270b);
        h = hashCombine(h, ch(t.c));
    }
    return h;
}

Laurent exactDiv(const Laurent& p, const Laurent& q) {
    const int n = p.vars();
    if (n != q.vars()) throw InvalidInput("Laurent arity mismatch");
    if (q.isZero()) throw EngineBug("exactDiv: division by zero");
    if (p.isZero()) return Laurent::zero(n);

    // Per-variable exponent box of the true quotient: leading and trailing
    // forms multiply, so the bounds are exact when the division is exact.
    Expo hi(n), lo(n);
    for (int i = 0; i < n; ++i) {
        int pmax = p.terms().front().e[i], pmin = pmax;
        for (const auto& t : p.terms()) {
            pmax = std::max(pmax, t.e[i]);
            pmin = std::min(pmin, t.e[i]);
        }
        int qmax = q.terms().front().e[i], qmin = qmax;
        for (const auto& t : q.terms()) {
            qmax = std::max(qmax, t.e[i]);
            qmin = std::min(qmin, t.e[i]);
        }
        hi[i] = pmax - qmax;
        lo[i] = pmin - qmin;
    }

    std::map<Expo, BigInt, GradedLexGreater> rem;
    for (const auto& t : p.terms()) rem[t.e] = t.c;
    const auto& qlead = q.lead();
    std::vector<Laurent::Term> quot;
    Expo e(n);
    while (!rem.empty()) {
        const auto& [re, rc] = *rem.begin();
        if (rc % qlead.c != 0) throw EngineBug("exactDiv: inexact coefficient");
        for (int i = 0; i < n; ++i) {
            e[i] = re[i] - qlead.e[i];
            if (e[i] < lo[i] || e[i] > hi[i]) throw EngineBug("exactDiv: inexact division (exponent bound)");
        }
        BigInt c = rc / qlead.c;
        Expo prod(n);
        for (const auto& t : q.terms()) {
            for (int i = 0; i < n; ++i) prod[i] = e[i] + t.e[i];
            auto it = rem.find(prod);
            if (it == rem.end()) {
                rem.emplace(prod, -c * t.c);
            } else {
                it->second -= c * t.c;
                if (it->second == 0) rem.erase(it);
            }
        }
        quot.push_back({e, std::move(c)});
    }
    // Terms were produced in strictly descending graded-lex order.
    return Laurent(n, std::move(quot));
}

Laurent variableMutate(const std::vector<Laurent>& clusterVars, const IntMat& b, int k) {
    const int n = b.rows();
    if (static_cast<int>(clusterVars.size()) != n) throw InvalidInput("cluster size mismatch");
    if (k < 0 || k >= n) throw InvalidInput("mutation direction out of range");
    Laurent plus = Laurent::one(clusterVars[0].vars());
    Laurent minus = plus;
    for (int i = 0; i < n; ++i) {
        long long e = b(i, k);
        if (e > 0) plus = plus * clusterVars[i].pow(e);
        if (e < 0) minus = minus * clusterVars[i].pow(-e);
    }
    return exactDiv(plus + minus, clusterVars[k]);
}

std::string Laurent::toString() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        BigInt a = t.c < 0 ? BigInt(-t.c) : t.c;
        if (first) {
            if (t.c < 0) os << "-";
            first = false;
        } else {
            os << (t.c < 0 ? " - " : " + ");
        }
        std::string factors;
        for (int i = 0; i < n_; ++i) {
            if (t.e[i] == 0) continue;
            if (!factors.empty()) factors += "*";
            factors += "x" + std::to_string(i + 1);
            if (t.e[i] != 1) factors += "^" + std::to_string(t.e[i]);
        }
        if (factors.empty()) {
            os << a.str();
        } else if (a == 1) {
            os << factors;
        } else {
            os << a.str() << "*" << factors;
        }
    }
    return os.str();
}

Laurent Laurent::parse(const std::string& text, int n) {
    size_t i = 0;
    auto skip = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    auto parseInt = [&]() -> long long {
        skip();
        bool neg = false;
        if (i < text.size() && (text[i] == '+' || text[i] == '-')) neg = text[i++] == '-';
        size_t s = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (s == i) throw InvalidInput("Laurent parse: expected integer at position " + std::to_string(s));
        long long v = std::stoll(text.substr(s, i - s));
        return neg ? -v : v;
    };
    Laurent out = Laurent::zero(n);
    skip();
    if (i < text.size() && text[i] == '0' && i + 1 == text.size()) return out;
    bool neg = false;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) neg = text[i++] == '-';
    while (true) {
        skip();
        BigInt coef = 1;
        bool sawCoef = false;
        if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            size_t s = i;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
            coef = BigInt(text.substr(s, i - s));
            sawCoef = true;
        }
        Expo e(n, 0);
        bool sawVar = false;
        while (true) {
            skip();
            if (i < text.size() && text[i] == '*') {
                ++i;
                skip();
            }
            if (i >= text.size() || text[i] != 'x') break;
            ++i;
            size_t s = i;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
            int var = std::stoi(text.substr(s, i - s));
            if (var < 1 || var > n) throw InvalidInput("Laurent parse: variable index out of range");
            long long p = 1;
            skip();
            if (i < text.size() && text[i] == '^') {
                ++i;
                p = parseInt();
            }
            e[var - 1] += static_cast<int>(p);
            sawVar = true;
        }
        if (!sawCoef && !sawVar) throw InvalidInput("Laurent parse: empty term");
        if (neg) coef = -coef;
        out = out + Laurent::monomial(std::move(e), std::move(coef));
        skip();
        if (i >= text.size()) break;
        if (text[i] == '+') {
            neg = false;
            ++i;
        } else if (text[i] == '-') {
            neg = true;
            ++i;
        } else {
            throw InvalidInput("Laurent parse: unexpected character '" + std::string(1, text[i]) + "'");
        }
    }
    return out;
}

VarId VariableRegistry::intern(std::optional<Laurent> poly, std::optional<GVec> g) {
    std::lock_guard<std::mutex> lock(mu_);
    if (mode_ != VariableIdentity::GVector && !poly) throw EngineBug("registry: Laurent identity required");
    if (mode_ != VariableIdentity::Laurent && !g) throw EngineBug("registry: g-vector identity required");

    if (mode_ == VariableIdentity::GVector) {
        auto it = byG_.find(*g);
        if (it != byG_.end()) return it->second;
        VarId id = static_cast<VarId>(entries_.size());
        byG_.emplace(*g, id);
        entries_.push_back({std::nullopt, std::move(g)});
        return id;
    }

    auto it = byPoly_.find(*poly);
    if (it != byPoly_.end()) {
        VarId id = it->second;
        if (mode_ == VariableIdentity::Both) {
            // The two identities must induce the same partition.
            if (*entries_[id].g != *g)
                throw CrossCheckMismatch("variable registry: one polynomial, two g-vectors");
        }
        return id;
    }
    VarId id = static_cast<VarId>(entries_.size());
    if (mode_ == VariableIdentity::Both) {
        auto git = byG_.find(*g);
        if (git != byG_.end())
            throw CrossCheckMismatch("variable registry: one g-vector, two polynomials");
        byG_.emplace(*g, id);
    }
    byPoly_.emplace(*poly, id);
    entries_.push_back({std::move(poly), std::move(g)});
    return id;
}

size_t VariableRegistry::size() const {
    std::lock_guard<std::mutex> lock(mu_);
    return entries_.size();
}

std::string VariableRegistry::name(VarId id) const {
    const auto& e = entries_[id];
    if (e.poly) return e.poly->toString();
    std::string s = "g(";
    for (size_t i = 0; i < e.g->size(); ++i) s += (i ? "," : "") + std::to_string((*e.g)[i]);
    return s + ")";
}

}  // namespace cck
