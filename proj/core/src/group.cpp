#include "ordlab/group.hpp"

#include <algorithm>
#include <cctype>
#include <deque>

namespace ordlab {

GroupElement identity(int n) { return {NAdic::zero(n), 0}; }
GroupElement gen_a(int n) { return {NAdic::integer(1, n), 0}; }
GroupElement gen_b(int n) { return {NAdic::zero(n), 1}; }

GroupElement mul(const GroupElement& g, const GroupElement& h) {
    return {g.r + h.r.scale_pow(-g.s), g.s + h.s};
}

GroupElement inv(const GroupElement& g) {
    return {-g.r.scale_pow(g.s), -g.s};
}

GroupElement pow(const GroupElement& g, long long e) {
    GroupElement acc = identity(g.base());
    GroupElement base = e < 0 ? inv(g) : g;
    long long m = e < 0 ? -e : e;
    while (m > 0) {
        if (m & 1) acc = mul(acc, base);
        base = mul(base, base);
        m >>= 1;
    }
    return acc;
}

std::string print_word(const GroupElement& g) {
    std::string out;
    if (!g.r.is_zero()) {
        if (g.r.is_integer()) {
            if (g.r.mantissa() == 1)
                out += "a";
            else
                out += "a^" + g.r.mantissa().str();
        } else {
            out += "a^{" + g.r.to_string() + "}";
        }
    }
    if (g.s != 0) {
        if (!out.empty()) out += " ";
        if (g.s == 1)
            out += "b";
        else
            out += "b^" + std::to_string(g.s);
    }
    return out;
}

namespace {

struct WordCursor {
    const std::string& text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() const { return text[pos]; }

    std::string integer_token() {
        std::size_t start = pos;
        if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
        std::size_t digits = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            ++pos;
            ++digits;
        }
        if (digits == 0) throw ParseError(start, "expected an integer");
        return text.substr(start, pos - start);
    }
};

} // namespace

GroupElement parse_word(const std::string& text, int n) {
    WordCursor cur{text};
    GroupElement acc = identity(n);
    while (!cur.done()) {
        std::size_t term_pos = cur.pos;
        char gen = cur.text[cur.pos++];
        bool is_a;
        bool inverse;
        switch (gen) {
        case 'a': is_a = true; inverse = false; break;
        case 'A': is_a = true; inverse = true; break;
        case 'b': is_a = false; inverse = false; break;
        case 'B': is_a = false; inverse = true; break;
        default:
            throw ParseError(term_pos, std::string("unexpected character '") + gen + "'");
        }

        NAdic exp_r = NAdic::integer(1, n);
        long long exp_s = 1;
        if (cur.pos < cur.text.size() && cur.text[cur.pos] == '^') {
            ++cur.pos;
            if (cur.pos >= cur.text.size())
                throw ParseError(cur.pos, "missing exponent after '^'");
            if (cur.text[cur.pos] == '{') {
                std::size_t open = cur.pos++;
                std::size_t close = cur.text.find('}', cur.pos);
                if (close == std::string::npos)
                    throw ParseError(open, "unterminated '{' in exponent");
                std::string body = cur.text.substr(cur.pos, close - cur.pos);
                cur.pos = close + 1;
                if (!is_a)
                    throw ParseError(open, "exponents on b must be integers");
                try {
                    exp_r = NAdic::parse(body, n);
                } catch (const Error& e) {
                    throw ParseError(open, e.what());
                }
            } else {
                std::size_t at = cur.pos;
                std::string tok = cur.integer_token();
                if (is_a) {
                    exp_r = NAdic::integer(BigInt(tok), n);
                } else {
                    try {
                        exp_s = std::stoll(tok);
                    } catch (const std::exception&) {
                        throw ParseError(at, "b exponent out of range");
                    }
                }
            }
        }

        GroupElement term =
            is_a ? GroupElement{inverse ? -exp_r : exp_r, 0}
                 : GroupElement{NAdic::zero(n), inverse ? -exp_s : exp_s};
        acc = mul(acc, term);
    }
    return acc;
}

BallEnumeration ball(int radius, int n) {
    if (radius < 0) throw Error("ball: radius must be >= 0");
    const GroupElement gens[4] = {gen_a(n), inv(gen_a(n)), gen_b(n), inv(gen_b(n))};

    std::map<GroupElement, int> depth;
    std::deque<GroupElement> frontier;
    GroupElement id = identity(n);
    depth[id] = 0;
    frontier.push_back(id);

    for (int level = 1; level <= radius; ++level) {
        std::deque<GroupElement> next;
        for (const auto& g : frontier) {
            for (const auto& x : gens) {
                GroupElement h = mul(g, x);
                if (depth.emplace(h, level).second) next.push_back(h);
            }
        }
        frontier = std::move(next);
    }

    BallEnumeration out;
    out.radius = radius;
    out.elements.reserve(depth.size());
    for (const auto& [g, d] : depth) out.elements.push_back(g);
    std::sort(out.elements.begin(), out.elements.end(),
              [&](const GroupElement& x, const GroupElement& y) {
                  int dx = depth.find(x)->second, dy = depth.find(y)->second;
                  if (dx != dy) return dx < dy;
                  if (x.s != y.s) return x.s < y.s;
                  return NAdic::compare(x.r, y.r) < 0;
              });
    for (std::size_t i = 0; i < out.elements.size(); ++i)
        out.index[out.elements[i]] = static_cast<int>(i);
    return out;
}

namespace {

// Diagonal (Cantor) pairing and the usual 0, 1, -1, 2, -2, ... fold.
std::uint64_t cantor_pair(std::uint64_t u, std::uint64_t v) {
    std::uint64_t d = u + v;
    return d * (d + 1) / 2 + v;
}

void cantor_unpair(std::uint64_t i, std::uint64_t& u, std::uint64_t& v) {
    std::uint64_t d = 0;
    // largest d with d(d+1)/2 <= i
    std::uint64_t lo = 0, hi = 6074000999ULL; // d(d+1)/2 overflows past ~6.07e9
    while (lo < hi) {
        std::uint64_t mid = lo + (hi - lo + 1) / 2;
        if (mid * (mid + 1) / 2 <= i)
            lo = mid;
        else
            hi = mid - 1;
    }
    d = lo;
    v = i - d * (d + 1) / 2;
    u = d - v;
}

long long zigzag(std::uint64_t u) {
    if (u == 0) return 0;
    if (u % 2 == 1) return static_cast<long long>((u + 1) / 2);
    return -static_cast<long long>(u / 2);
}

std::uint64_t zigzag_index(long long v) {
    if (v == 0) return 0;
    if (v > 0) return 2 * static_cast<std::uint64_t>(v) - 1;
    return 2 * static_cast<std::uint64_t>(-v);
}

bool canonical_pair(long long k, const BigInt& m, int n) {
    if (k == 0) return true;
    return m != 0 && m % n != 0;
}

// v-th canonical (m, k) pair in the diagonal scan, as an NAdic.
NAdic nadic_at(std::uint64_t v, int n) {
    std::uint64_t seen = 0;
    for (std::uint64_t j = 0;; ++j) {
        std::uint64_t ku, mu;
        cantor_unpair(j, ku, mu);
        long long k = static_cast<long long>(ku);
        BigInt m = zigzag(mu);
        if (!canonical_pair(k, m, n)) continue;
        if (seen == v) return NAdic(std::move(m), k, n);
        ++seen;
    }
}

std::uint64_t nadic_index(const NAdic& r) {
    int n = r.base();
    std::uint64_t seen = 0;
    for (std::uint64_t j = 0;; ++j) {
        std::uint64_t ku, mu;
        cantor_unpair(j, ku, mu);
        long long k = static_cast<long long>(ku);
        BigInt m = zigzag(mu);
        if (!canonical_pair(k, m, n)) continue;
        if (k == r.exponent() && m == r.mantissa()) return seen;
        ++seen;
    }
}

} // namespace

GroupElement enumerate_element(std::uint64_t i, int n) {
    std::uint64_t u, v;
    cantor_unpair(i, u, v);
    return {nadic_at(v, n), zigzag(u)};
}

std::uint64_t enumerate_index(const GroupElement& g) {
    return cantor_pair(zigzag_index(g.s), nadic_index(g.r));
}

std::vector<GroupElement> enumerate_prefix(std::size_t count, int n) {
    // Grow the r-enumeration cache incrementally instead of rescanning per index.
    std::vector<NAdic> rs;
    std::uint64_t scan = 0;
    auto r_at = [&](std::uint64_t v) {
        while (rs.size() <= v) {
            std::uint64_t ku, mu;
            cantor_unpair(scan++, ku, mu);
            long long k = static_cast<long long>(ku);
            BigInt m = zigzag(mu);
            if (canonical_pair(k, m, n)) rs.push_back(NAdic(std::move(m), k, n));
        }
        return rs[v];
    };

    std::vector<GroupElement> out;
    out.reserve(count);
    for (std::uint64_t i = 0; i < count; ++i) {
        std::uint64_t u, v;
        cantor_unpair(i, u, v);
        out.push_back({r_at(v), zigzag(u)});
    }
    return out;
}

} // namespace ordlab
