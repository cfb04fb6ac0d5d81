#include "x0/moduli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>

#include "json.hpp"

#include "x0/levels.hpp"
#include "x0/poly.hpp"

#ifndef X0_DATA_DIR
#define X0_DATA_DIR "data"
#endif

namespace x0 {

std::string default_jmap_path() {
    if (const char* env = std::getenv("X0_JMAPS"); env && *env) return env;
    return std::string(X0_DATA_DIR) + "/jmaps.json";
}

std::map<int, JMap> load_jmaps(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open j-map data file: " + path);
    nlohmann::json doc = nlohmann::json::parse(in);
    const nlohmann::json& recs = doc.is_array() ? doc : doc.at("levels");
    std::map<int, JMap> out;
    for (const auto& r : recs) {
        JMap J;
        J.N = r.at("N").get<int>();
        for (const auto& c : r.at("num")) J.num.push_back(parse_int(c.get<std::string>()));
        for (const auto& c : r.at("den")) J.den.push_back(parse_int(c.get<std::string>()));
        out[J.N] = std::move(J);
    }
    return out;
}

JMap jmap_for(int N, const std::string& path) {
    auto all = load_jmaps(path);
    auto it = all.find(N);
    if (it == all.end()) throw DomainError("no j-map for level " + std::to_string(N) + " in " + path);
    return it->second;
}

namespace {

FiberReport fiber(const std::string& target, const QPoly& p, int kappa) {
    FiberReport r{target, {}};
    for (const auto& [f, k] : squarefree_decomposition(p))
        for (int i = 0; i < degree(f); ++i) r.partition.push_back(k);
    int at_inf = kappa - degree(p);
    if (at_inf > 0) r.partition.push_back(at_inf);
    std::sort(r.partition.rbegin(), r.partition.rend());
    return r;
}

void check_parts(JMapValidation& v, const FiberReport& f, int ramified, int eps) {
    int ones = 0;
    bool parts_ok = true;
    for (int k : f.partition) {
        if (k == 1)
            ++ones;
        else if (k != ramified)
            parts_ok = false;
    }
    if (!parts_ok)
        v.failures.push_back("partition mismatch over j=" + f.target + ": parts must lie in {1," +
                             std::to_string(ramified) + "}");
    if (ones != eps)
        v.failures.push_back("partition mismatch over j=" + f.target + ": " + std::to_string(ones) +
                             " unramified points, expected " + std::to_string(eps));
}

}  // namespace

JMapValidation validate_jmap(const JMap& J) {
    JMapValidation v;
    QPoly num = from_ints(J.num), den = from_ints(J.den);
    if (degree(num) < 0 || degree(den) < 0) {
        v.failures.push_back("malformed: zero numerator or denominator");
        return v;
    }
    v.degree = std::max(degree(num), degree(den));
    long long k = kappa(J.N);
    if (v.degree != k) {
        v.failures.push_back("degree mismatch: degree " + std::to_string(v.degree) + ", kappa(" +
                             std::to_string(J.N) + ") = " + std::to_string(k));
        return v;
    }
    if (degree(gcd(num, den)) > 0) {
        v.failures.push_back("malformed: numerator and denominator share a factor");
        return v;
    }
    v.fibers.push_back(fiber("0", num, v.degree));
    v.fibers.push_back(fiber("1728", num - Rat(1728) * den, v.degree));
    v.fibers.push_back(fiber("inf", den, v.degree));
    check_parts(v, v.fibers[0], 3, epsilon3(J.N));
    check_parts(v, v.fibers[1], 2, epsilon2(J.N));
    v.ok = v.failures.empty();
    return v;
}

std::optional<Rat> evaluate_fiber(const JMap& J, const Int& p, const Int& q) {
    int n = static_cast<int>(std::max(J.num.size(), J.den.size())) - 1;
    Int a = 0, b = 0, pp = 1;
    std::vector<Int> qp(n + 1);
    qp[0] = 1;
    for (int i = 1; i <= n; ++i) qp[i] = qp[i - 1] * q;
    for (int i = 0; i <= n; ++i) {
        if (i < static_cast<int>(J.num.size())) a += J.num[i] * pp * qp[n - i];
        if (i < static_cast<int>(J.den.size())) b += J.den[i] * pp * qp[n - i];
        pp *= p;
    }
    if (b == 0) return std::nullopt;
    return Rat(a, b);
}

Rat j_invariant(const Rat& A, const Rat& B) {
    Rat d = 4 * A * A * A + 27 * B * B;
    if (d == 0) throw DomainError("singular curve");
    return 1728 * 4 * A * A * A / d;
}

std::pair<Rat, Rat> base_curve_from_j(const Rat& j) {
    if (j == 0 || j == 1728) throw DomainError("special j: " + to_string(j));
    Rat c = 1728 - j;
    return {3 * j * c, 2 * j * c * c};
}

}  // namespace x0
