#include "cdesc/poly.hpp"

#include <algorithm>

namespace cdesc::poly {

namespace {

Int int_gcd(Int a, Int b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    return boost::multiprecision::gcd(a, b);
}

IPoly shift(IPoly p, int k) {
    if (is_zero(p) || k == 0) return p;
    p.insert(p.begin(), static_cast<std::size_t>(k), Int(0));
    return p;
}

// Classical pseudo remainder prem(a, b) = lc(b)^(deg a - deg b + 1) * a  mod  b.
IPoly prem(IPoly r, const IPoly& b) {
    const Int& lb = b.back();
    int scalings = degree(r) - degree(b) + 1;
    while (!is_zero(r) && degree(r) >= degree(b)) {
        int k = degree(r) - degree(b);
        Int lr = r.back();
        r = sub(scale(r, lb), shift(scale(b, lr), k));
        --scalings;
    }
    // pad to the full power so subresultant divisions stay exact
    while (scalings-- > 0) r = scale(r, lb);
    return r;
}

// Subresultant pseudo-remainder sequence of (a, b), starting with a and
// b themselves. Coefficients stay determinant-sized without any content
// gcds. sign[i] relates polys[i] to the negated-remainder (Sturm) chain:
// sign[i] * polys[i] is a positive multiple of the classical member.
struct Prs {
    std::vector<IPoly> polys;
    std::vector<int> sign;
};

Prs subresultant_prs(IPoly a, IPoly b) {
    Prs out;
    out.polys.push_back(a);
    out.sign.push_back(1);
    if (is_zero(b)) return out;
    out.polys.push_back(b);
    out.sign.push_back(1);
    Int g = 1, h = 1;
    while (true) {
        const IPoly& A = out.polys[out.polys.size() - 2];
        const IPoly& B = out.polys.back();
        int delta = degree(A) - degree(B);
        IPoly r = prem(A, B);
        if (is_zero(r)) break;
        Int divisor = g * boost::multiprecision::pow(h, static_cast<unsigned>(delta));
        IPoly next(r.size());
        for (std::size_t i = 0; i < r.size(); ++i) {
            next[i] = r[i] / divisor;
            if (next[i] * divisor != r[i])
                throw error(errc::invalid_input, "subresultant division not exact");
        }
        trim(next);
        // Sturm sign bookkeeping: rem(A, B) = prem / lc(B)^(delta+1) and
        // next = prem / divisor, so next relates to the true remainder by
        // the sign of divisor * lc(B)^(delta+1). The classical chain
        // negates the remainder.
        int lcb_sign = sign_of(B.back());
        int lc_pow_sign = (delta % 2 == 0) ? lcb_sign : 1; // sign of lc(B)^(delta+1)
        int sA = out.sign[out.sign.size() - 2];
        int next_sign = -sA * sign_of(divisor) * lc_pow_sign;
        out.polys.push_back(std::move(next));
        out.sign.push_back(next_sign);
        g = out.polys[out.polys.size() - 2].back();
        if (delta == 0) {
            // h unchanged
        } else if (delta == 1) {
            h = g;
        } else {
            Int num = boost::multiprecision::pow(g, static_cast<unsigned>(delta));
            Int den = boost::multiprecision::pow(h, static_cast<unsigned>(delta - 1));
            if (num % den != 0) throw error(errc::invalid_input, "subresultant h update not exact");
            h = num / den;
        }
        if (degree(out.polys.back()) < 1) break;
    }
    return out;
}

} // namespace

void trim(IPoly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

int degree(const IPoly& p) { return static_cast<int>(p.size()) - 1; }

bool is_zero(const IPoly& p) { return p.empty(); }

IPoly add(const IPoly& a, const IPoly& b) {
    IPoly out(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < out.size(); ++i) {
        if (i < a.size()) out[i] += a[i];
        if (i < b.size()) out[i] += b[i];
    }
    trim(out);
    return out;
}

IPoly sub(const IPoly& a, const IPoly& b) {
    IPoly out(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < out.size(); ++i) {
        if (i < a.size()) out[i] += a[i];
        if (i < b.size()) out[i] -= b[i];
    }
    trim(out);
    return out;
}

IPoly neg(IPoly a) {
    for (auto& c : a) c = -c;
    return a;
}

IPoly mul(const IPoly& a, const IPoly& b) {
    if (is_zero(a) || is_zero(b)) return {};
    IPoly out(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    trim(out);
    return out;
}

IPoly scale(const IPoly& a, const Int& c) {
    if (c.is_zero()) return {};
    IPoly out = a;
    for (auto& x : out) x *= c;
    return out;
}

IPoly derivative(const IPoly& a) {
    if (a.size() <= 1) return {};
    IPoly out(a.size() - 1);
    for (std::size_t i = 1; i < a.size(); ++i) out[i - 1] = a[i] * Int(i);
    trim(out);
    return out;
}

IPoly linear_power(const Int& c0, const Int& c1, unsigned long e) {
    if (e == 0) return {Int(1)};
    if (c1.is_zero()) return {boost::multiprecision::pow(c0, static_cast<unsigned>(e))};
    if (c0.is_zero()) {
        IPoly out(e + 1);
        out[e] = boost::multiprecision::pow(c1, static_cast<unsigned>(e));
        return out;
    }
    std::vector<Int> p0(e + 1), p1(e + 1);
    p0[0] = 1;
    p1[0] = 1;
    for (unsigned long i = 1; i <= e; ++i) {
        p0[i] = p0[i - 1] * c0;
        p1[i] = p1[i - 1] * c1;
    }
    IPoly out(e + 1);
    Int binom = 1;
    for (unsigned long i = 0; i <= e; ++i) {
        out[i] = binom * p0[e - i] * p1[i];
        if (i < e) {
            binom *= Int(e - i);
            binom /= Int(i + 1);
        }
    }
    return out;
}

Int content(const IPoly& p) {
    Int g = 0;
    for (const auto& c : p) {
        g = int_gcd(g, c);
        if (g == 1) break;
    }
    return g;
}

IPoly primitive_part(const IPoly& p) {
    if (is_zero(p)) return {};
    Int c = content(p);
    if (c == 1) return p;
    IPoly out = p;
    for (auto& x : out) x /= c;
    return out;
}

IPoly exact_div(const IPoly& a, const IPoly& b) {
    if (is_zero(b)) throw error(errc::invalid_input, "polynomial division by zero");
    if (is_zero(a)) return {};
    if (degree(a) < degree(b)) throw error(errc::invalid_input, "inexact polynomial division");
    IPoly r = a;
    IPoly q(degree(a) - degree(b) + 1);
    while (!is_zero(r) && degree(r) >= degree(b)) {
        Int qc = r.back() / b.back();
        if (qc * b.back() != r.back())
            throw error(errc::invalid_input, "inexact polynomial division");
        int k = degree(r) - degree(b);
        q[k] = qc;
        r = sub(r, shift(scale(b, qc), k));
        if (!is_zero(r) && degree(r) >= degree(b) + k)
            throw error(errc::invalid_input, "inexact polynomial division");
    }
    if (!is_zero(r)) throw error(errc::invalid_input, "inexact polynomial division");
    trim(q);
    return q;
}

IPoly gcd(IPoly a, IPoly b) {
    a = primitive_part(a);
    b = primitive_part(b);
    if (is_zero(a)) std::swap(a, b);
    if (is_zero(b)) {
        if (!is_zero(a) && a.back() < 0) a = neg(std::move(a));
        return a;
    }
    if (degree(a) < degree(b)) std::swap(a, b);
    Prs prs = subresultant_prs(std::move(a), std::move(b));
    IPoly g = primitive_part(prs.polys.back());
    if (degree(g) < 1) return {Int(1)};
    if (g.back() < 0) g = neg(std::move(g));
    return g;
}

std::vector<IPoly> squarefree_decomposition(const IPoly& p) {
    std::vector<IPoly> out(1); // index 0 unused
    if (degree(p) < 1) return out;
    IPoly f = primitive_part(p);
    IPoly g = gcd(f, derivative(f));
    if (degree(g) == 0) {
        out.push_back(f);
        return out;
    }
    // Yun's algorithm
    IPoly c = exact_div(f, g);
    IPoly d = sub(exact_div(derivative(f), g), derivative(c));
    while (true) {
        IPoly a = gcd(c, d);
        out.push_back(a);
        c = exact_div(c, a);
        if (degree(c) < 1) break;
        d = sub(exact_div(d, a), derivative(c));
    }
    return out;
}

int sign_at(const IPoly& p, const Rat& y) {
    if (is_zero(p)) return 0;
    const Int num = rat_num(y);
    const Int den = rat_den(y);
    Int acc = p.back();
    Int dpow = 1;
    for (int i = degree(p) - 1; i >= 0; --i) {
        dpow *= den;
        acc = acc * num + p[static_cast<std::size_t>(i)] * dpow;
    }
    return sign_of(acc);
}

Rat eval(const QPoly& p, const Rat& y) {
    Rat acc(0);
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * y + *it;
    return acc;
}

IPoly deflate_root(const IPoly& p, const Rat& y) {
    const Int r = rat_num(y);
    const Int s = rat_den(y);
    // divide by (s*t - r) via synthetic division, high to low
    if (degree(p) < 1) throw error(errc::invalid_input, "deflating a constant");
    IPoly q(p.size() - 1);
    Int carry = 0;
    for (int i = degree(p); i >= 1; --i) {
        Int num = p[static_cast<std::size_t>(i)] + carry;
        if (num % s != 0) throw error(errc::invalid_input, "deflate_root: not a root");
        Int qc = num / s;
        q[static_cast<std::size_t>(i - 1)] = qc;
        carry = qc * r;
    }
    if (p[0] + carry != 0) throw error(errc::invalid_input, "deflate_root: not a root");
    trim(q);
    return q;
}

SturmChain sturm_chain(const IPoly& p) {
    SturmChain chain;
    IPoly s0 = primitive_part(p);
    if (is_zero(s0)) return chain;
    IPoly s1 = derivative(s0);
    if (is_zero(s1)) {
        chain.polys.push_back(std::move(s0));
        chain.sign.push_back(1);
        return chain;
    }
    Prs prs = subresultant_prs(std::move(s0), std::move(s1));
    chain.polys = std::move(prs.polys);
    chain.sign = std::move(prs.sign);
    return chain;
}

namespace {

int variations(const std::vector<int>& signs) {
    int count = 0, last = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (last != 0 && s != last) ++count;
        last = s;
    }
    return count;
}

} // namespace

int sign_variations_at(const SturmChain& chain, const Rat& y) {
    std::vector<int> signs;
    signs.reserve(chain.polys.size());
    for (std::size_t i = 0; i < chain.polys.size(); ++i)
        signs.push_back(chain.sign[i] * sign_at(chain.polys[i], y));
    return variations(signs);
}

int sign_variations_at_neg_inf(const SturmChain& chain) {
    std::vector<int> signs;
    signs.reserve(chain.polys.size());
    for (std::size_t i = 0; i < chain.polys.size(); ++i) {
        const IPoly& p = chain.polys[i];
        int s = is_zero(p) ? 0 : sign_of(p.back());
        if (!is_zero(p) && degree(p) % 2 == 1) s = -s;
        signs.push_back(chain.sign[i] * s);
    }
    return variations(signs);
}

int sign_variations_at_pos_inf(const SturmChain& chain) {
    std::vector<int> signs;
    signs.reserve(chain.polys.size());
    for (std::size_t i = 0; i < chain.polys.size(); ++i)
        signs.push_back(chain.sign[i] * (is_zero(chain.polys[i]) ? 0 : sign_of(chain.polys[i].back())));
    return variations(signs);
}

Rat root_bound(const IPoly& p) {
    if (degree(p) < 1) return Rat(1);
    Rat maxq(0);
    const Int lead = p.back();
    for (int i = 0; i < degree(p); ++i) {
        Rat q = Rat(p[static_cast<std::size_t>(i)]) / Rat(lead);
        if (q < 0) q = -q;
        if (q > maxq) maxq = q;
    }
    return maxq + 1;
}

long long count_roots_open(const IPoly& p_in, std::optional<Rat> lo, std::optional<Rat> hi) {
    IPoly p = p_in;
    if (is_zero(p)) throw error(errc::invalid_input, "root count of the zero polynomial");
    if (lo && hi && *lo >= *hi) return 0;
    if (lo) {
        while (degree(p) >= 1 && sign_at(p, *lo) == 0) p = deflate_root(p, *lo);
    }
    if (hi) {
        while (degree(p) >= 1 && sign_at(p, *hi) == 0) p = deflate_root(p, *hi);
    }
    if (degree(p) < 1) return 0;
    auto chain = sturm_chain(p);
    int vlo = lo ? sign_variations_at(chain, *lo) : sign_variations_at_neg_inf(chain);
    int vhi = hi ? sign_variations_at(chain, *hi) : sign_variations_at_pos_inf(chain);
    return vlo - vhi;
}

std::vector<Isolated> isolate_roots(const IPoly& p_in, std::optional<Rat> lo, std::optional<Rat> hi) {
    std::vector<Isolated> exact_found;
    IPoly p = p_in;
    if (lo && hi && *lo >= *hi) return {};
    if (lo)
        while (degree(p) >= 1 && sign_at(p, *lo) == 0) p = deflate_root(p, *lo);
    if (hi)
        while (degree(p) >= 1 && sign_at(p, *hi) == 0) p = deflate_root(p, *hi);

    // Restart whenever a bisection midpoint hits a root exactly; the root
    // is recorded and divided out, so restarts strictly reduce the degree.
    while (degree(p) >= 1) {
        Rat bound = root_bound(p);
        Rat neg_bound = -bound;
        Rat left = (lo && *lo > neg_bound) ? *lo : neg_bound;
        Rat right = (hi && *hi < bound) ? *hi : bound;
        if (left >= right) break;
        auto chain = sturm_chain(p);
        struct Seg {
            Rat a, b;
            int va, vb;
        };
        std::vector<Seg> stack;
        stack.push_back({left, right, sign_variations_at(chain, left), sign_variations_at(chain, right)});
        std::vector<Isolated> found;
        bool restarted = false;
        while (!stack.empty()) {
            Seg s = stack.back();
            stack.pop_back();
            int n = s.va - s.vb;
            if (n <= 0) continue;
            if (n == 1) {
                found.push_back({s.a, s.b, false});
                continue;
            }
            Rat mid = (s.a + s.b) / 2;
            if (sign_at(p, mid) == 0) {
                exact_found.push_back({mid, mid, true});
                p = deflate_root(p, mid);
                restarted = true;
                break;
            }
            int vm = sign_variations_at(chain, mid);
            stack.push_back({s.a, mid, s.va, vm});
            stack.push_back({mid, s.b, vm, s.vb});
        }
        if (!restarted) {
            std::vector<Isolated> all = std::move(exact_found);
            all.insert(all.end(), found.begin(), found.end());
            std::sort(all.begin(), all.end(), [](const Isolated& x, const Isolated& y) { return x.lo < y.lo; });
            return all;
        }
    }
    std::sort(exact_found.begin(), exact_found.end(),
              [](const Isolated& x, const Isolated& y) { return x.lo < y.lo; });
    return exact_found;
}

QPoly to_qpoly(const IPoly& p, const Rat& scalar) {
    QPoly out(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) out[i] = Rat(p[i]) * scalar;
    return out;
}

IPoly q_clear_denominators(const QPoly& p) {
    Int l = 1;
    for (const auto& c : p) {
        Int d = rat_den(c);
        l = l / int_gcd(l, d) * d;
    }
    IPoly out(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
        Rat scaled = p[i] * Rat(l);
        out[i] = rat_num(scaled);
    }
    trim(out);
    return primitive_part(out);
}

} // namespace cdesc::poly
