#include "capmoments/characters.hpp"
#include "capmoments/errors.hpp"
#include "capmoments/moments.hpp"
#include "capmoments/oracle.hpp"
#include "capmoments/render.hpp"
#include "capmoments/xclasses.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <random>
#include <string>

using namespace capmoments;
using nlohmann::ordered_json;

namespace {

enum ExitCode { kOk = 0, kUsage = 1, kMismatch = 2, kResource = 3 };

struct RunConfig {
    int p = 3;
    int r = 3;
    int m = 1;
    int n = 3;
    int d = 1;
    int cols = 0;
    Method method = Method::Both;
    std::string format = "text";
    unsigned threads = 1;
    double cap = 1e10;
    unsigned seed = 1;

    [[nodiscard]] OracleOptions oracle() const { return OracleOptions{cap, std::max(threads, 1u)}; }
};

mpz_class q_value(int p, int d) {
    mpz_class v;
    mpz_ui_pow_ui(v.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(d));
    return v;
}

void check_config(const RunConfig& cfg) {
    if (!is_prime(cfg.p)) throw std::invalid_argument("--p must be prime");
    if (cfg.r < 1) throw std::invalid_argument("--r must be at least 1");
    if (cfg.m < 0 || cfg.n < 0) throw std::invalid_argument("--m and --n must be nonnegative");
    if (cfg.d < 0) throw std::invalid_argument("--d must be nonnegative");
}

ordered_json coeffs_json(const QPoly& f) {
    auto arr = ordered_json::array();
    for (const auto& c : f.coeffs()) arr.push_back({c.get_num().get_str(), c.get_den().get_str()});
    return arr;
}

int run_compute(const RunConfig& cfg) {
    check_config(cfg);
    std::vector<MomentResult> results;
    if (cfg.method != Method::Theorem1) results.push_back(moment_poly(cfg.m, cfg.n, cfg.r, cfg.p));
    if (cfg.method != Method::Collapsed) results.push_back(moment_via_theorem1(cfg.m, cfg.n, cfg.r, cfg.p));
    const MomentResult& main = results.front();
    const bool agree = std::all_of(results.begin(), results.end(), [&](const MomentResult& x) { return x.poly == main.poly; });
    const FactoredRatio ratio = factor_ratio(main.ratio());
    const FactoredRatio factored = factor_ratio(QRat(main.poly));
    const std::string label = "F(" + std::to_string(cfg.m) + "," + std::to_string(cfg.n) + ")";

    if (cfg.format == "json") {
        ordered_json j = moment_to_json(main);
        j["conventions"] = kFrozenConventions.to_string();
        j["method"] = to_string(cfg.method);
        j["ratio"] = render_text(ratio);
        j["factored"] = render_text(factored);
        if (results.size() > 1) {
            j["theorem1_coeffs"] = coeffs_json(results.back().poly);
            j["agree"] = agree;
        }
        std::cout << j.dump(2) << "\n";
    } else if (cfg.format == "latex") {
        std::cout << label << " = " << render_poly_latex(main.poly) << "\n";
        std::cout << "\\frac{" << label << "}{F(0," << cfg.n << ")} = " << render_latex(ratio) << "\n";
    } else if (cfg.format == "csv") {
        std::cout << "method,degree,num,den\n";
        for (const auto& res : results)
            for (std::size_t i = 0; i < res.poly.coeffs().size(); ++i) {
                const auto& c = res.poly.coeffs()[i];
                std::cout << to_string(res.method) << "," << i << "," << c.get_num() << "," << c.get_den() << "\n";
            }
    } else {
        std::cout << "p = " << cfg.p << ", r = " << cfg.r << ", conventions: " << kFrozenConventions.to_string() << "\n";
        for (const auto& res : results) std::cout << label << " [" << to_string(res.method) << "] = " << render_poly(res.poly) << "\n";
        std::cout << label << " = " << render_text(factored) << "\n";
        std::cout << label << "/F(0," << cfg.n << ") = " << render_text(ratio) << "\n";
        if (results.size() > 1) std::cout << "paths: " << (agree ? "AGREE" : "DISAGREE") << "\n";
    }
    if (!agree) std::cerr << "collapsed and theorem1 paths disagree\n";
    return agree ? kOk : kMismatch;
}

int run_verify(const RunConfig& cfg) {
    check_config(cfg);
    const MomentResult res = cfg.method == Method::Theorem1 ? moment_via_theorem1(cfg.m, cfg.n, cfg.r, cfg.p) : moment_poly(cfg.m, cfg.n, cfg.r, cfg.p);
    bool agree = true;
    if (cfg.method == Method::Both) agree = moment_via_theorem1(cfg.m, cfg.n, cfg.r, cfg.p).poly == res.poly;
    const mpq_class lhs = res.poly.eval(mpq_class(q_value(cfg.p, cfg.d)));
    const mpz_class rhs = brute_force_moment(cfg.p, cfg.d, cfg.r, cfg.m, cfg.n, cfg.oracle());
    const bool equal = agree && lhs == mpq_class(rhs);
    if (cfg.format == "json") {
        ordered_json j;
        j["p"] = cfg.p;
        j["d"] = cfg.d;
        j["r"] = cfg.r;
        j["m"] = cfg.m;
        j["n"] = cfg.n;
        j["polynomial"] = lhs.get_str();
        j["oracle"] = rhs.get_str();
        j["paths_agree"] = agree;
        j["equal"] = equal;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "F(" << cfg.m << "," << cfg.n << ") at q = " << q_value(cfg.p, cfg.d) << "\n";
        std::cout << "polynomial: " << lhs << "\n";
        std::cout << "oracle: " << rhs << "\n";
        std::cout << "result: " << (equal ? "EQUAL" : "MISMATCH") << "\n";
    }
    return equal ? kOk : kMismatch;
}

int run_distribution(const RunConfig& cfg) {
    check_config(cfg);
    const Histogram h = distribution(cfg.p, cfg.d, cfg.r, cfg.n, cfg.oracle());
    if (cfg.format == "json") {
        std::cout << h.to_json() << "\n";
    } else if (cfg.format == "csv") {
        std::cout << h.to_csv();
    } else {
        std::cout << "a(S) over " << cfg.n << "-subsets of F_" << cfg.p << "^" << cfg.d << " (r = " << cfg.r << ")\n";
        for (const auto& [a, c] : h.counts) std::cout << "  " << a << ": " << c << "\n";
        std::cout << "total: " << h.total() << "\n";
    }
    return kOk;
}

int run_classes(const RunConfig& cfg) {
    check_config(cfg);
    ordered_json out = ordered_json::array();
    for (const auto& map : enumerate_multiplicity_maps(cfg.m, cfg.r)) {
        const int lo = cfg.cols > 0 ? cfg.cols : 1;
        const int hi = cfg.cols > 0 ? cfg.cols : map.degree();
        for (int cols = lo; cols <= hi; ++cols) {
            const auto classes = enumerate_classes(map, cols, cfg.p);
            if (cfg.format == "json") {
                for (const auto& c : classes)
                    out.push_back({{"map", map.to_string()},
                                   {"columns", cols},
                                   {"matrix", c.canon.rows},
                                   {"orbit_size", c.orbit_size},
                                   {"rank", c.rank_mod_p}});
                continue;
            }
            std::cout << map << ", l = " << cols << ": " << classes.size() << " classes\n";
            for (const auto& c : classes)
                std::cout << "  " << c.canon.to_string() << "  orbit " << c.orbit_size << "  rank " << c.rank_mod_p << "\n";
        }
    }
    if (cfg.format == "json") std::cout << out.dump(2) << "\n";
    return kOk;
}

struct Check {
    std::string name;
    bool ok = false;
    std::string detail;
};

int run_selftest(const RunConfig& cfg) {
    std::vector<Check> checks;
    auto record = [&](const std::string& name, const std::function<std::string()>& body) {
        Check c{name, true, ""};
        try {
            c.detail = body();
        } catch (const std::exception& e) {
            c.ok = false;
            c.detail = e.what();
        }
        checks.push_back(c);
    };
    auto require = [](bool cond, const std::string& what) {
        if (!cond) throw ConsistencyError(what);
    };

    record("convention arbitration", [&] {
        const ConventionRecord rec = arbitrate_conventions(cfg.p, cfg.r);
        require(rec.chosen == kFrozenConventions, "arbitration chose " + rec.chosen.to_string());
        return rec.chosen.to_string();
    });
    record("character orthogonality k <= 6", [&] {
        for (int k = 1; k <= 6; ++k) {
            const auto table = CharacterTable::of(k);
            const auto& cls = table->classes();
            for (std::size_t a = 0; a < cls.size(); ++a)
                for (std::size_t b = 0; b < cls.size(); ++b) {
                    mpq_class row = 0;
                    for (std::size_t c = 0; c < cls.size(); ++c) {
                        mpq_class t(table->at(a, c) * table->at(b, c), static_cast<unsigned long>(z_of(cls[c])));
                        t.canonicalize();
                        row += t;
                    }
                    require(row == (a == b ? 1 : 0), "k = " + std::to_string(k));
                }
        }
        return std::string();
    });
    record("two-path agreement m <= 2, n <= 10", [&] {
        for (int m = 0; m <= 2; ++m)
            for (int n = 0; n <= 10; ++n)
                require(moment_poly(m, n, cfg.r, cfg.p).poly == moment_via_theorem1(m, n, cfg.r, cfg.p).poly,
                        "m = " + std::to_string(m) + ", n = " + std::to_string(n));
        return std::string();
    });
    record("degree bound m <= 2, n <= 10", [&] {
        for (int m = 1; m <= 2; ++m)
            for (int n = 1; n <= 10; ++n) require(moment_poly(m, n, cfg.r, cfg.p).poly.degree() <= n - 1, "m = " + std::to_string(m) + ", n = " + std::to_string(n));
        return std::string();
    });
    record("oracle probes d <= 2, n <= 5, m <= 2", [&] {
        int cases = 0;
        for (int d = 1; d <= 2; ++d)
            for (int n = 0; n <= 5; ++n)
                for (int m = 0; m <= 2; ++m) {
                    const mpq_class lhs = moment_poly(m, n, cfg.r, cfg.p).poly.eval(mpq_class(q_value(cfg.p, d)));
                    require(lhs == mpq_class(brute_force_moment(cfg.p, d, cfg.r, m, n, cfg.oracle())),
                            "d = " + std::to_string(d) + ", n = " + std::to_string(n) + ", m = " + std::to_string(m));
                    ++cases;
                }
        return std::to_string(cases) + " cases";
    });
    record("character-sum identity on random subsets", [&] {
        std::mt19937 rng(cfg.seed);
        const FieldSpace space(cfg.p, 2);
        std::vector<std::uint32_t> all(space.size());
        std::iota(all.begin(), all.end(), 0u);
        const std::size_t size = std::min<std::size_t>(6, all.size());
        for (int t = 0; t < 20; ++t) {
            std::shuffle(all.begin(), all.end(), rng);
            const PointSet s(cfg.p, 2, std::vector<std::uint32_t>(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(size)));
            require(character_sum_a(s, cfg.r) == count_zero_sum_subsets(s, cfg.r), "trial " + std::to_string(t));
        }
        return "seed " + std::to_string(cfg.seed);
    });

    const bool all_ok = std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.ok; });
    if (cfg.format == "json") {
        ordered_json j = ordered_json::array();
        for (const auto& c : checks) j.push_back({{"check", c.name}, {"pass", c.ok}, {"detail", c.detail}});
        std::cout << j.dump(2) << "\n";
    } else {
        for (const auto& c : checks) {
            std::cout << (c.ok ? "PASS" : "FAIL") << "  " << c.name;
            if (!c.detail.empty()) std::cout << "  [" << c.detail << "]";
            std::cout << "\n";
        }
        std::cout << "conventions: " << kFrozenConventions.to_string() << "\n";
    }
    return all_ok ? kOk : kMismatch;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact moments of zero-sum subset counts in F_p^d"};
    app.require_subcommand(1);
    RunConfig cfg;

    const std::map<std::string, Method> methods{{"collapsed", Method::Collapsed}, {"theorem1", Method::Theorem1}, {"both", Method::Both}};
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--p", cfg.p, "prime p")->capture_default_str();
        sub->add_option("--r", cfg.r, "subset size r")->capture_default_str();
        sub->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"text", "json", "latex", "csv"}))->capture_default_str();
        sub->add_option("--threads", cfg.threads, "oracle worker threads")->envname("CAPMOMENTS_THREADS")->capture_default_str();
        sub->add_option("--cap", cfg.cap, "oracle work budget")->capture_default_str();
        sub->add_option("--seed", cfg.seed, "seed for randomized checks")->capture_default_str();
    };

    auto* compute = app.add_subcommand("compute", "F(m,n) as a polynomial in q and the ratio F(m,n)/F(0,n)");
    auto* verify = app.add_subcommand("verify", "compare F(m,n) at q = p^d with exhaustive enumeration");
    auto* dist = app.add_subcommand("distribution", "histogram of a(S) over n-subsets of F_p^d");
    auto* selftest = app.add_subcommand("selftest", "arbitration and invariant checks");
    auto* classes = app.add_subcommand("classes", "dump matrix classes for every multiplicity map of mass m");
    for (auto* sub : {compute, verify, dist, selftest, classes}) add_common(sub);
    for (auto* sub : {compute, verify}) {
        sub->add_option("--m", cfg.m, "moment order")->required();
        sub->add_option("--n", cfg.n, "subset size n")->required();
        sub->add_option("--method", cfg.method, "collapsed | theorem1 | both")->transform(CLI::CheckedTransformer(methods, CLI::ignore_case));
    }
    verify->add_option("--d", cfg.d, "dimension d")->required();
    dist->add_option("--d", cfg.d, "dimension d")->required();
    dist->add_option("--n", cfg.n, "subset size n")->required();
    classes->add_option("--m", cfg.m, "multiplicity map mass")->required();
    classes->add_option("--cols", cfg.cols, "number of columns, 0 for all")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*compute) return run_compute(cfg);
        if (*verify) return run_verify(cfg);
        if (*dist) return run_distribution(cfg);
        if (*selftest) return run_selftest(cfg);
        if (*classes) return run_classes(cfg);
    } catch (const ResourceLimitError& e) {
        std::cerr << "refused: " << e.what() << " (estimated cost " << e.estimated_cost() << ")\n";
        return kResource;
    } catch (const ConsistencyError& e) {
        std::cerr << "consistency failure: " << e.what() << "\n";
        return kMismatch;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
