#include "x0/poly.hpp"

#include <stdexcept>

namespace x0 {

void trim(QPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

int degree(const QPoly& p) {
    for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
        if (p[i] != 0) return i;
    return -1;
}

QPoly from_ints(const std::vector<Int>& c) {
    QPoly p(c.begin(), c.end());
    trim(p);
    return p;
}

QPoly operator+(const QPoly& a, const QPoly& b) {
    QPoly r(std::max(a.size(), b.size()), Rat(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    trim(r);
    return r;
}

QPoly operator-(const QPoly& a, const QPoly& b) { return a + Rat(-1) * b; }

QPoly operator*(const QPoly& a, const QPoly& b) {
    if (a.empty() || b.empty()) return {};
    QPoly r(a.size() + b.size() - 1, Rat(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    trim(r);
    return r;
}

QPoly operator*(const Rat& s, const QPoly& a) {
    QPoly r = a;
    for (auto& c : r) c *= s;
    trim(r);
    return r;
}

QPoly derivative(const QPoly& p) {
    QPoly r;
    for (size_t i = 1; i < p.size(); ++i) r.push_back(p[i] * Rat(static_cast<long long>(i)));
    trim(r);
    return r;
}

std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b) {
    int db = degree(b);
    if (db < 0) throw std::invalid_argument("divmod: division by zero polynomial");
    QPoly r = a;
    trim(r);
    QPoly q(std::max(0, degree(r) - db + 1), Rat(0));
    while (degree(r) >= db) {
        int dr = degree(r);
        Rat c = r[dr] / b[db];
        q[dr - db] = c;
        for (int i = 0; i <= db; ++i) r[dr - db + i] -= c * b[i];
        trim(r);
    }
    trim(q);
    return {q, r};
}

QPoly monic(const QPoly& p) {
    int d = degree(p);
    if (d < 0) return {};
    return Rat(1) / p[d] * p;
}

QPoly gcd(QPoly a, QPoly b) {
    trim(a);
    trim(b);
    while (degree(b) >= 0) {
        QPoly r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return monic(a);
}

std::vector<std::pair<QPoly, int>> squarefree_decomposition(const QPoly& p) {
    std::vector<std::pair<QPoly, int>> out;
    if (degree(p) < 1) return out;
    QPoly f = monic(p);
    QPoly a = gcd(f, derivative(f));
    QPoly b = divmod(f, a).first;
    QPoly c = divmod(derivative(f), a).first;
    QPoly d = c - derivative(b);
    for (int k = 1; degree(b) >= 1; ++k) {
        QPoly g = gcd(b, d);
        if (degree(g) >= 1) out.emplace_back(g, k);
        b = divmod(b, g).first;
        c = divmod(d, g).first;
        d = c - derivative(b);
    }
    return out;
}

std::vector<Int> primitive_part(const QPoly& p) {
    using boost::multiprecision::denominator;
    using boost::multiprecision::numerator;
    if (degree(p) < 0) return {};
    Int l = 1;
    for (const auto& c : p) {
        Int dn = denominator(c);
        l = l / boost::multiprecision::gcd(l, dn) * dn;
    }
    std::vector<Int> z;
    Int g = 0;
    for (const auto& c : p) {
        Rat v = c * Rat(l);
        z.push_back(numerator(v));
        g = boost::multiprecision::gcd(g, z.back());
    }
    if (g == 0) return {};
    Int s = z[degree(p)] < 0 ? Int(-1) : Int(1);
    for (auto& c : z) c = c / g * s;
    while (!z.empty() && z.back() == 0) z.pop_back();
    return z;
}

Int form_resultant(const std::vector<Int>& f, const std::vector<Int>& g) {
    int m = static_cast<int>(f.size()) - 1, n = static_cast<int>(g.size()) - 1;
    if (m < 0 || n < 0) throw std::invalid_argument("form_resultant: empty form");
    int s = m + n;
    if (s == 0) return 1;
    // Sylvester matrix with rows ordered by descending power of p
    std::vector<std::vector<Int>> a(s, std::vector<Int>(s, 0));
    for (int r = 0; r < n; ++r)
        for (int i = 0; i <= m; ++i) a[r][r + i] = f[m - i];
    for (int r = 0; r < m; ++r)
        for (int i = 0; i <= n; ++i) a[n + r][r + i] = g[n - i];
    // Bareiss fraction-free elimination
    Int prev = 1;
    int sign = 1;
    for (int k = 0; k < s - 1; ++k) {
        if (a[k][k] == 0) {
            int piv = -1;
            for (int r = k + 1; r < s; ++r)
                if (a[r][k] != 0) {
                    piv = r;
                    break;
                }
            if (piv < 0) return 0;
            std::swap(a[k], a[piv]);
            sign = -sign;
        }
        for (int i = k + 1; i < s; ++i) {
            for (int j = k + 1; j < s; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    return sign * a[s - 1][s - 1];
}

}  // namespace x0
