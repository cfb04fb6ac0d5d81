#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "x0/cone.hpp"
#include "x0/counting.hpp"
#include "x0/heights.hpp"
#include "x0/levels.hpp"
#include "x0/moduli.hpp"
#include "x0/nsorb.hpp"
#include "x0/sectors.hpp"

using json = nlohmann::ordered_json;
using namespace x0;

namespace {

constexpr const char* kSchema = "x0/1";

json int_value(const Int& n) {
    if (n >= std::numeric_limits<long long>::min() && n <= std::numeric_limits<long long>::max())
        return n.convert_to<long long>();
    return to_string(n);
}

std::string cell(const json& v) {
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string r = "\"";
    for (char c : s) r += c == '"' ? std::string("\"\"") : std::string(1, c);
    return r + "\"";
}

// rows: array of flat objects sharing the same keys
void print_rows(const json& rows, const std::string& format, json meta) {
    if (format == "json") {
        meta["rows"] = rows;
        std::cout << meta.dump(2) << "\n";
        return;
    }
    if (rows.empty()) return;
    std::vector<std::string> keys;
    for (auto it = rows[0].begin(); it != rows[0].end(); ++it) keys.push_back(it.key());
    if (format == "csv") {
        for (size_t i = 0; i < keys.size(); ++i) std::cout << (i ? "," : "") << csv_field(keys[i]);
        std::cout << "\n";
        for (const auto& r : rows) {
            for (size_t i = 0; i < keys.size(); ++i) std::cout << (i ? "," : "") << csv_field(cell(r[keys[i]]));
            std::cout << "\n";
        }
        return;
    }
    std::vector<size_t> w(keys.size());
    for (size_t i = 0; i < keys.size(); ++i) {
        w[i] = keys[i].size();
        for (const auto& r : rows) w[i] = std::max(w[i], cell(r[keys[i]]).size());
    }
    auto line = [&](auto get) {
        for (size_t i = 0; i < keys.size(); ++i) std::cout << (i ? "  " : "") << std::left << std::setw(w[i]) << get(i);
        std::cout << "\n";
    };
    line([&](size_t i) { return keys[i]; });
    line([&](size_t i) { return std::string(w[i], '-'); });
    for (const auto& r : rows) line([&](size_t i) { return cell(r[keys[i]]); });
}

void print_object(const json& obj, const std::string& format) {
    if (format == "json") {
        std::cout << obj.dump(2) << "\n";
        return;
    }
    json row = json::object();
    for (auto it = obj.begin(); it != obj.end(); ++it)
        if (!it->is_structured()) row[it.key()] = *it;
    print_rows(json::array({row}), format, json::object());
}

json invariants_row(int N, FieldConfig cfg) {
    auto sd = structure_descriptor(N);
    json r;
    r["N"] = N;
    r["kappa"] = kappa(N);
    r["eps2"] = epsilon2(N);
    r["eps3"] = epsilon3(N);
    r["degK"] = to_string(deg_canonical(N));
    r["adequate"] = is_adequate(N, cfg);
    r["a"] = to_string(a_invariant(N, cfg));
    r["b"] = b_invariant(N, cfg);
    r["rigidification"] = sd.rigidification;
    r["gerbe"] = sd.gerbe_trivial ? "trivial" : "non-trivial";
    return r;
}

json dual_json(const DualVector& d) {
    json o;
    o["L"] = to_string(d.L());
    for (size_t i = 0; i < d.space.twisted().size(); ++i) o[d.space.twisted()[i].label.key()] = to_string(d.v(1 + i));
    return o;
}

OrbClass parse_class(int N, FieldConfig cfg, const std::string& text) {
    std::string src = text;
    if (!src.empty() && src[0] == '@') {
        std::ifstream in(src.substr(1));
        if (!in) throw DomainError("cannot read class file " + src.substr(1));
        std::stringstream ss;
        ss << in.rdbuf();
        src = ss.str();
    }
    json j;
    try {
        j = json::parse(src);
    } catch (const json::exception& e) {
        throw DomainError(std::string("malformed class json: ") + e.what());
    }
    if (!j.is_object()) throw DomainError("class json must be an object keyed by sector");
    OrbClass O(SectorSpace(N, cfg));
    for (auto it = j.begin(); it != j.end(); ++it) {
        std::string val = it->is_string() ? it->get<std::string>() : it->dump();
        int idx = O.space.index_of(it.key());  // throws on unknown keys
        O.v(idx) = parse_rat(val);
    }
    return O;
}

std::vector<u64> geometric_grid(double lo, double hi, int steps) {
    std::vector<u64> Bs;
    for (int i = 0; i <= steps; ++i) {
        double e = steps ? lo + (hi - lo) * i / steps : lo;
        Bs.push_back(static_cast<u64>(std::llround(std::pow(10.0, e))));
    }
    return Bs;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Invariants, cones, heights and point counts for genus-zero X0(N)"};
    app.require_subcommand(1);
    std::string format = "json";
    bool has_i = false, has_omega = false;
    auto add_cfg = [&](CLI::App* sc) {
        sc->add_flag("--has-i", has_i, "base field contains i");
        sc->add_flag("--has-omega", has_omega, "base field contains a primitive cube root of unity");
    };
    auto add_format = [&](CLI::App* sc) {
        sc->add_option("--format", format, "json, csv or table")->check(CLI::IsMember({"json", "csv", "table"}));
    };

    auto* inv = app.add_subcommand("invariants", "a, b and arithmetic data per level");
    bool all = false;
    std::vector<int> levels;
    inv->add_flag("--all", all, "all supported levels");
    inv->add_option("--level", levels, "level(s)")->delimiter(',');
    add_cfg(inv);
    add_format(inv);

    auto* sec = app.add_subcommand("sectors", "sector catalogue with M_naive and K_orb coordinates");
    int sec_N = 0;
    sec->add_option("N", sec_N, "level")->required();
    add_cfg(sec);
    add_format(sec);

    auto* ht = app.add_subcommand("height", "minimal representative and naive height of (x1, x2) in P(4,6)");
    std::string hx1, hx2;
    ht->add_option("x1", hx1, "weight-4 coordinate (rational)")->required();
    ht->add_option("x2", hx2, "weight-6 coordinate (rational)")->required();
    add_format(ht);

    auto* cc = app.add_subcommand("cone-check", "membership of a class in the effective orbifold cone");
    int cc_N = 0;
    std::string cc_class;
    cc->add_option("N", cc_N, "level")->required();
    cc->add_option("--class", cc_class, "class as JSON object {\"L\":..,\"Half\":..,...} or @file")->required();
    add_cfg(cc);
    add_format(cc);

    auto* cnt = app.add_subcommand("count", "count points of height <= B");
    int cnt_N = 0, threads = 1;
    u64 cnt_B = 0;
    long long t_cap = 0;
    bool include_special = false;
    cnt->add_option("N", cnt_N, "level")->required();
    cnt->add_option("B", cnt_B, "height bound")->required();
    cnt->add_option("--threads", threads, "worker threads")->check(CLI::PositiveNumber);
    cnt->add_option("--t-cap", t_cap, "Hauptmodul height cap (auto when omitted)")->check(CLI::PositiveNumber);
    cnt->add_flag("--include-special", include_special, "keep j = 0, 1728 (N = 1 only)");
    add_format(cnt);

    auto* fit = app.add_subcommand("fit", "counts on a geometric grid and fitted exponent");
    int fit_N = 0, steps = 6;
    double lo = 4, hi = 6;
    std::vector<u64> grid;
    fit->add_option("N", fit_N, "level")->required();
    fit->add_option("--from", lo, "log10 of the smallest bound");
    fit->add_option("--to", hi, "log10 of the largest bound");
    fit->add_option("--steps", steps, "grid intervals")->check(CLI::PositiveNumber);
    fit->add_option("--grid", grid, "explicit bounds")->delimiter(',');
    fit->add_option("--threads", threads, "worker threads")->check(CLI::PositiveNumber);
    add_format(fit);

    auto* vj = app.add_subcommand("validate-jmaps", "check the shipped j-maps against ramification data");
    std::string data = default_jmap_path();
    vj->add_option("--data", data, "j-map data file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    FieldConfig cfg{has_i, has_omega};
    try {
        if (*inv) {
            if (all) levels = supported_levels();
            if (levels.empty()) {
                std::cerr << "error: give --all or --level\n";
                return 2;
            }
            json rows = json::array();
            for (int N : levels) {
                require_supported(N);
                rows.push_back(invariants_row(N, cfg));
            }
            json meta;
            meta["schema"] = kSchema;
            meta["config"] = {{"has_i", has_i}, {"has_omega", has_omega}};
            print_rows(rows, format, meta);
        } else if (*sec) {
            require_supported(sec_N);
            SectorSpace sp(sec_N, cfg);
            auto M = m_naive(sec_N, cfg), K = k_orb(sec_N, cfg);
            json rows = json::array();
            for (const auto& s : enumerate_sectors(sec_N, cfg)) {
                int idx = s.label.kind == SectorKind::Untwisted ? 0 : sp.index_of(s.label);
                json r;
                r["sector"] = s.label.key();
                r["kind"] = to_string(s.label.kind);
                r["component"] = to_string(s.label.component);
                r["zeta"] = to_string(s.label.zeta);
                r["age"] = to_string(s.age);
                r["push"] = to_string(s.push);
                r["m_naive"] = to_string(M.v(idx));
                r["k_orb"] = to_string(K.v(idx));
                rows.push_back(r);
            }
            json meta;
            meta["schema"] = kSchema;
            meta["N"] = sec_N;
            print_rows(rows, format, meta);
        } else if (*ht) {
            auto m = reduce_minimal(parse_rat(hx1), parse_rat(hx2));
            json o;
            o["schema"] = kSchema;
            o["e"] = int_value(m.e);
            o["f"] = int_value(m.f);
            o["H"] = int_value(naive_height(m));
            print_object(o, format);
        } else if (*cc) {
            require_supported(cc_N);
            auto O = parse_class(cc_N, cfg, cc_class);
            auto cert = eff_membership(O);
            json o;
            o["schema"] = kSchema;
            o["N"] = cc_N;
            o["verdict"] = to_string(cert.verdict);
            o["packing_value"] = to_string(cert.packing_value);
            o["vanishing_rank"] = cert.vanishing_rank;
            if (cert.witness) o["witness"] = dual_json(*cert.witness);
            json van = json::array();
            for (const auto& g : cert.vanishing) van.push_back(dual_json(g));
            o["vanishing"] = van;
            print_object(o, format);
        } else if (*cnt) {
            CountQuery q;
            q.N = cnt_N;
            q.B = cnt_B;
            q.exclude_special = !include_special;
            q.threads = threads;
            if (t_cap > 0) q.t_cap = t_cap;
            auto r = count_level(q);
            json o;
            o["schema"] = kSchema;
            o["N"] = cnt_N;
            o["B"] = cnt_B;
            o["count"] = r.count;
            o["exclude_special"] = q.exclude_special;
            o["t_cap"] = r.t_cap;
            o["stabilized"] = r.stabilized;
            print_object(o, format);
            if (!r.stabilized) std::cerr << "warning: count not stabilized in the Hauptmodul cap\n";
        } else if (*fit) {
            if (grid.empty()) grid = geometric_grid(lo, hi, steps);
            auto rep = count_grid(fit_N, grid, true, threads);
            json rows = json::array();
            for (size_t i = 0; i < rep.counts.size(); ++i)
                rows.push_back({{"B", rep.counts[i].first}, {"count", rep.counts[i].second}, {"ratio", rep.ratios[i]}});
            json meta;
            meta["schema"] = kSchema;
            meta["N"] = fit_N;
            meta["a"] = to_string(rep.a);
            meta["b"] = rep.b;
            meta["exponent_float"] = rep.exponent;
            meta["exponent_log_adjusted_float"] = rep.exponent_log;
            meta["log_trend"] = to_string(log_factor_diagnostic(rep.counts, rep.a));
            meta["stabilized"] = rep.stabilized;
            print_rows(rows, format, meta);
            if (format != "json")
                std::cerr << "exponent=" << rep.exponent << " exponent_log_adjusted=" << rep.exponent_log
                          << " a=" << to_string(rep.a) << "\n";
        } else if (*vj) {
            auto maps = load_jmaps(data);
            bool ok = true;
            for (int N : supported_levels()) {
                auto it = maps.find(N);
                if (it == maps.end()) {
                    std::cout << "N=" << N << " FAIL missing\n";
                    ok = false;
                    continue;
                }
                auto v = validate_jmap(it->second);
                std::cout << "N=" << N << " " << (v.ok ? "PASS" : "FAIL") << " degree=" << v.degree;
                for (const auto& f : v.fibers) {
                    std::cout << " j=" << f.target << ":{";
                    for (size_t i = 0; i < f.partition.size(); ++i) std::cout << (i ? "," : "") << f.partition[i];
                    std::cout << "}";
                }
                for (const auto& f : v.failures) std::cout << " [" << f << "]";
                std::cout << "\n";
                ok = ok && v.ok;
            }
            return ok ? 0 : 1;
        }
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
