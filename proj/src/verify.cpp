/*
  verify.cpp

  Checks are assembled as (name, closure) tasks and pulled off an
  atomic counter by the workers; results land in a slot per task, so
  reports are deterministic for any SSV_THREADS. Tasks share no mutable
  state: each builds its own context and polynomials.
*/
#include "ssv/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <functional>
#include <optional>
#include <set>
#include <thread>

#include "ssv/daha.hpp"
#include "ssv/formulas.hpp"
#include "ssv/io.hpp"

namespace ssv {

namespace {

using MaybeFailure = std::optional<std::string>;

struct Task {
    std::string name;
    std::function<MaybeFailure()> run;
};

std::string exp_text(const Exponent& e) {
    std::string out = "(";
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(e[i]);
    }
    return out + ")";
}

std::vector<Exponent> box_weights(int r, int lo, int hi) {
    std::vector<Exponent> out;
    Exponent cur(r, lo);
    for (;;) {
        out.push_back(cur);
        int i = r - 1;
        while (i >= 0 && cur[i] == hi) cur[i--] = lo;
        if (i < 0) return out;
        ++cur[i];
    }
}

std::vector<int> or_default(const std::vector<int>& chosen, std::vector<int> fallback) {
    return chosen.empty() ? std::move(fallback) : chosen;
}

MaybeFailure compare_polys(const LaurentPolynomial& got, const LaurentPolynomial& want,
                           const GHalfRule& rule, const char* got_label,
                           const char* want_label) {
    std::set<Exponent> support;
    for (const auto& [e, c] : got.terms()) support.insert(e);
    for (const auto& [e, c] : want.terms()) support.insert(e);
    for (const Exponent& e : support) {
        Scalar a = got.coefficient(e);
        Scalar b = want.coefficient(e);
        if (!scalar_equals(a, b, rule))
            return "coefficient of x^" + exp_text(e) + ": " + got_label + " = " +
                   to_string(scalar_normalize(a, rule)) + ", " + want_label + " = " +
                   to_string(scalar_normalize(b, rule));
    }
    return std::nullopt;
}

bool is_antidominant(const Exponent& mu) {
    for (std::size_t i = 1; i < mu.size(); ++i)
        if (mu[i - 1] > mu[i]) return false;
    return true;
}

std::vector<CheckResult> run_tasks(std::vector<Task> tasks) {
    std::vector<CheckResult> results(tasks.size());
    std::atomic<std::size_t> next{0};
    auto body = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= tasks.size()) return;
            CheckResult res;
            res.name = tasks[i].name;
            try {
                MaybeFailure fail = tasks[i].run();
                res.passed = !fail.has_value();
                if (fail) res.detail = std::move(*fail);
            } catch (const std::exception& ex) {
                res.passed = false;
                res.detail = std::string("exception: ") + ex.what();
            }
            results[i] = std::move(res);
        }
    };
    std::size_t workers = std::min<std::size_t>(suite_thread_count(), tasks.size());
    if (workers <= 1) {
        body();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(body);
    }
    return results;
}

// ------------------------------------------------------------------- golden

std::vector<Task> golden_tasks(const char* object, const SweepOptions& options) {
    const bool table_is_e = std::string(object) == "E";
    GoldenTable table =
        load_golden_table(data_directory() / (table_is_e ? "golden_e.json" : "golden_p.json"));
    std::vector<Task> tasks;
    for (const GoldenEntry& entry : table.entries) {
        if (!options.degrees.empty() &&
            std::find(options.degrees.begin(), options.degrees.end(), entry.n) ==
                options.degrees.end())
            continue;
        std::string name = std::string("golden ") + object + " mu=" + exp_text(entry.mu) +
                           " n=" + std::to_string(entry.n);
        int r = table.r;
        tasks.push_back({std::move(name), [entry, r, table_is_e]() -> MaybeFailure {
                             MetaplecticContext ctx(r, entry.n);
                             LaurentPolynomial want = golden_polynomial(entry, r);
                             LaurentPolynomial got =
                                 table_is_e ? compute_E(entry.mu, ctx, Normalization::monic)
                                            : compute_P(entry.mu, ctx);
                             return compare_polys(got, want, ctx.ghalf_rule(), "computed",
                                                  "table");
                         }});
    }
    return tasks;
}

// ---------------------------------------------------------------- relations

LaurentPolynomial apply_T_index(int i, const LaurentPolynomial& f,
                                const MetaplecticContext& ctx) {
    return i == 0 ? apply_T0(f, ctx) : apply_Ti(i, f, ctx);
}

Exponent unit_vector(int r, int i) {
    Exponent e(r, 0);
    e[i] = 1;
    return e;
}

std::vector<Task> relations_tasks(const SweepOptions& options) {
    std::vector<int> ranks = or_default(options.ranks, {3});
    std::vector<int> degrees = or_default(options.degrees, {1, 2, 3});
    std::vector<Task> tasks;
    for (int r : ranks) {
        for (int n : degrees) {
            std::string where = " r=" + std::to_string(r) + " n=" + std::to_string(n);
            auto over_basis =
                [r, n](const std::function<MaybeFailure(const LaurentPolynomial&,
                                                        const MetaplecticContext&)>& check)
                -> MaybeFailure {
                MetaplecticContext ctx(r, n);
                for (const Exponent& e : box_weights(r, -2, 2)) {
                    MaybeFailure fail = check(LaurentPolynomial::monomial(e, Scalar(1)), ctx);
                    if (fail) return "at x^" + exp_text(e) + ": " + *fail;
                }
                return std::nullopt;
            };
            for (int i = 0; i < r; ++i) {
                tasks.push_back(
                    {"relations" + where + " hecke T" + std::to_string(i),
                     [over_basis, i]() -> MaybeFailure {
                         return over_basis([i](const LaurentPolynomial& f,
                                               const MetaplecticContext& ctx) -> MaybeFailure {
                             Scalar k = Scalar::variable(kVarK);
                             Scalar kinv = k.inverse();
                             LaurentPolynomial t1 = apply_T_index(i, f, ctx);
                             LaurentPolynomial res =
                                 apply_T_index(i, t1, ctx) + t1 * (kinv - k) - f;
                             if (!res.reduced(ctx.ghalf_rule()).is_zero())
                                 return "(T-k)(T+1/k) does not annihilate";
                             return std::nullopt;
                         });
                     }});
            }
            for (int i = 0; i < r; ++i) {
                int j = (i + 1) % r;
                if (r == 2 && i == 1) break;
                tasks.push_back(
                    {"relations" + where + " braid T" + std::to_string(i) + "T" +
                         std::to_string(j),
                     [over_basis, i, j]() -> MaybeFailure {
                         return over_basis([i, j](const LaurentPolynomial& f,
                                                  const MetaplecticContext& ctx) -> MaybeFailure {
                             LaurentPolynomial lhs = apply_T_index(
                                 i, apply_T_index(j, apply_T_index(i, f, ctx), ctx), ctx);
                             LaurentPolynomial rhs = apply_T_index(
                                 j, apply_T_index(i, apply_T_index(j, f, ctx), ctx), ctx);
                             if (!poly_equals(lhs, rhs, ctx.ghalf_rule()))
                                 return "braid words disagree";
                             return std::nullopt;
                         });
                     }});
            }
            for (int i = 0; i < r; ++i) {
                int j = (i + 1) % r;
                tasks.push_back(
                    {"relations" + where + " omega T" + std::to_string(i),
                     [over_basis, i, j]() -> MaybeFailure {
                         return over_basis([i, j](const LaurentPolynomial& f,
                                                  const MetaplecticContext& ctx) -> MaybeFailure {
                             LaurentPolynomial lhs =
                                 apply_omega(apply_T_index(i, f, ctx), ctx);
                             LaurentPolynomial rhs =
                                 apply_T_index(j, apply_omega(f, ctx), ctx);
                             if (!poly_equals(lhs, rhs, ctx.ghalf_rule()))
                                 return "omega twist disagrees";
                             return std::nullopt;
                         });
                     }});
            }
            for (int i = 1; i <= r; ++i) {
                for (int j = i + 1; j <= r; ++j) {
                    tasks.push_back(
                        {"relations" + where + " Y commute Y" + std::to_string(i) + "Y" +
                             std::to_string(j),
                         [over_basis, i, j, r]() -> MaybeFailure {
                             return over_basis(
                                 [i, j, r](const LaurentPolynomial& f,
                                           const MetaplecticContext& ctx) -> MaybeFailure {
                                     Exponent ei = unit_vector(r, i - 1);
                                     Exponent ej = unit_vector(r, j - 1);
                                     LaurentPolynomial lhs = apply_Y_lattice(
                                         ei, 0, apply_Y_lattice(ej, 0, f, ctx), ctx);
                                     LaurentPolynomial rhs = apply_Y_lattice(
                                         ej, 0, apply_Y_lattice(ei, 0, f, ctx), ctx);
                                     if (!poly_equals(lhs, rhs, ctx.ghalf_rule()))
                                         return "Y operators do not commute";
                                     return std::nullopt;
                                 });
                         }});
                }
            }
            for (int i = 1; i <= r; ++i) {
                tasks.push_back(
                    {"relations" + where + " Y invert Y" + std::to_string(i),
                     [over_basis, i, r]() -> MaybeFailure {
                         return over_basis([i, r](const LaurentPolynomial& f,
                                                  const MetaplecticContext& ctx) -> MaybeFailure {
                             Exponent ei = unit_vector(r, i - 1);
                             Exponent mei(r, 0);
                             mei[i - 1] = -1;
                             LaurentPolynomial back = apply_Y_lattice(
                                 ei, 0, apply_Y_lattice(mei, 0, f, ctx), ctx);
                             if (!poly_equals(back, f, ctx.ghalf_rule()))
                                 return "Y Y^{-1} is not the identity";
                             return std::nullopt;
                         });
                     }});
            }
        }
    }
    return tasks;
}

// ------------------------------------------------------------------- oracle

struct SweepPoint {
    int r;
    int n;
    Exponent mu;
};

std::vector<SweepPoint> oracle_sweep(const SweepOptions& options) {
    std::vector<int> ranks = or_default(options.ranks, {2, 3});
    std::vector<int> degrees = or_default(options.degrees, {1, 2, 3});
    std::vector<SweepPoint> out;
    for (int r : ranks)
        for (int n : degrees)
            for (const Exponent& mu : box_weights(r, -1, 2)) out.push_back({r, n, mu});
    return out;
}

std::string point_text(const SweepPoint& p) {
    return " r=" + std::to_string(p.r) + " n=" + std::to_string(p.n) + " mu=" + exp_text(p.mu);
}

std::vector<Task> oracle_equality_tasks(const SweepOptions& options) {
    std::vector<Task> tasks;
    for (const SweepPoint& p : oracle_sweep(options)) {
        tasks.push_back({"oracle E" + point_text(p), [p]() -> MaybeFailure {
                             MetaplecticContext ctx(p.r, p.n);
                             LaurentPolynomial walks = compute_E(p.mu, ctx, Normalization::monic);
                             LaurentPolynomial ops = intertwiner_E(p.mu, ctx);
                             return compare_polys(walks, ops, ctx.ghalf_rule(), "walk sum",
                                                  "intertwiner");
                         }});
    }
    return tasks;
}

std::vector<Task> eigenvalue_tasks(const SweepOptions& options) {
    std::vector<Task> tasks;
    for (const SweepPoint& p : oracle_sweep(options)) {
        tasks.push_back({"eigenvalue" + point_text(p), [p]() -> MaybeFailure {
                             MetaplecticContext ctx(p.r, p.n);
                             LaurentPolynomial E = compute_E(p.mu, ctx, Normalization::monic);
                             if (!eigenvalue_check(E, p.mu, ctx))
                                 return std::string("Y eigenvalue law fails");
                             if (!ctx.is_dominant(p.mu)) return std::nullopt;
                             Scalar k = Scalar::variable(kVarK);
                             LaurentPolynomial P = compute_P(p.mu, ctx);
                             for (int i = 1; i < p.r; ++i) {
                                 if (!poly_equals(apply_Ti(i, P, ctx), P * k, ctx.ghalf_rule()))
                                     return "T" + std::to_string(i) +
                                            " does not fix the symmetrized polynomial";
                             }
                             return std::nullopt;
                         }});
    }
    return tasks;
}

std::vector<Task> embedding_tasks(const SweepOptions& options) {
    std::vector<int> degrees = or_default(options.degrees, {2, 3});
    std::vector<Task> tasks;
    for (const Exponent& nu : std::vector<Exponent>{{1, 0, 0}, {0, 1, 0}, {1, 1, 0}}) {
        for (int n : degrees) {
            tasks.push_back({"embedding nu=" + exp_text(nu) + " n=" + std::to_string(n),
                             [nu, n]() -> MaybeFailure {
                                 MetaplecticContext base(3, 1);
                                 MetaplecticContext ctx(3, n);
                                 Exponent scaled(nu.size());
                                 for (std::size_t i = 0; i < nu.size(); ++i)
                                     scaled[i] = n * nu[i];
                                 LaurentPolynomial direct =
                                     compute_E(scaled, ctx, Normalization::monic);
                                 LaurentPolynomial embedded = poly_substitute_power(
                                     compute_E(nu, base, Normalization::monic), n);
                                 return compare_polys(direct, embedded, ctx.ghalf_rule(),
                                                      "degree n", "embedded degree 1");
                             }});
        }
    }
    return tasks;
}

// ------------------------------------------------------------------- limits

MaybeFailure check_positive_coefficients(const LaurentPolynomial& lim, LimitDirection direction,
                                         const GHalfRule& rule) {
    Scalar kvalue(direction == LimitDirection::zero ? Rational(1, 2) : Rational(2));
    for (const auto& [e, c] : lim.terms()) {
        Scalar sub = scalar_normalize(scalar_substitute(c, {{kVarK, kvalue}}), rule);
        bool ok = sub.den().is_monomial() || sub.den().is_one();
        if (ok)
            for (const auto& [m, coef] : sub.num().terms())
                if (coef < 0) ok = false;
        if (!ok)
            return "coefficient of x^" + exp_text(e) + " is not nonnegative at k=" +
                   (direction == LimitDirection::zero ? std::string("1/2") : std::string("2")) +
                   ": " + to_string(sub);
    }
    return std::nullopt;
}

MaybeFailure check_limit_pair(const LaurentPolynomial& full, const LaurentPolynomial& lim,
                              LimitDirection direction, const GHalfRule& rule,
                              const char* label) {
    LaurentPolynomial manual(full.rank());
    for (const auto& [e, c] : full.terms()) manual.add_term(e, scalar_limit_q(c, direction));
    const char* dir = direction == LimitDirection::zero ? "q->0" : "q->inf";
    if (MaybeFailure fail = compare_polys(lim, manual.reduced(rule), rule, "limit formula",
                                          "coefficientwise limit"))
        return std::string(label) + " " + dir + ": " + *fail;
    if (MaybeFailure fail = check_positive_coefficients(lim, direction, rule))
        return std::string(label) + " " + dir + ": " + *fail;
    return std::nullopt;
}

std::vector<Task> limits_tasks(const SweepOptions& options) {
    std::vector<Task> tasks;
    for (const SweepPoint& p : oracle_sweep(options)) {
        tasks.push_back(
            {"limits" + point_text(p), [p]() -> MaybeFailure {
                 MetaplecticContext ctx(p.r, p.n);
                 const GHalfRule rule = ctx.ghalf_rule();
                 LaurentPolynomial E = compute_E(p.mu, ctx, Normalization::monic);
                 for (LimitDirection dir : {LimitDirection::zero, LimitDirection::infinity}) {
                     LaurentPolynomial lim = compute_E_limit(p.mu, ctx, dir, Normalization::monic);
                     if (MaybeFailure fail = check_limit_pair(E, lim, dir, rule, "E")) return fail;
                     const bool pins_monomial =
                         (dir == LimitDirection::zero && ctx.is_dominant(p.mu)) ||
                         (dir == LimitDirection::infinity && is_antidominant(p.mu));
                     if (pins_monomial &&
                         !poly_equals(lim, LaurentPolynomial::monomial(p.mu, Scalar(1)), rule))
                         return "extreme case is not the bare monomial: " + format_text(lim);
                 }
                 if (!ctx.is_dominant(p.mu)) return std::nullopt;
                 LaurentPolynomial P = compute_P(p.mu, ctx);
                 for (LimitDirection dir : {LimitDirection::zero, LimitDirection::infinity}) {
                     LaurentPolynomial lim = compute_P_limit(p.mu, ctx, dir);
                     if (MaybeFailure fail = check_limit_pair(P, lim, dir, rule, "P")) return fail;
                 }
                 return std::nullopt;
             }});
    }
    return tasks;
}

// -------------------------------------------------------------------- order

std::vector<Task> order_support_tasks(const SweepOptions& options) {
    std::vector<Task> tasks;
    for (const SweepPoint& p : oracle_sweep(options)) {
        tasks.push_back(
            {"order support" + point_text(p), [p]() -> MaybeFailure {
                 MetaplecticContext ctx(p.r, p.n);
                 const LaurentPolynomial E =
                     compute_E(p.mu, ctx, Normalization::monic).reduced(ctx.ghalf_rule());
                 std::set<Exponent> have;
                 for (const auto& [e, c] : E.terms()) have.insert(e);
                 std::set<Exponent> want = bruhat_lower_set(p.mu, ctx);
                 for (const Exponent& e : want)
                     if (!have.count(e))
                         return "lower-set exponent x^" + exp_text(e) + " has coefficient zero";
                 for (const Exponent& e : have)
                     if (!want.count(e))
                         return "support exponent x^" + exp_text(e) + " lies outside the lower set";
                 return std::nullopt;
             }});
    }
    return tasks;
}

std::vector<Task> order_shrinkage_tasks(const SweepOptions& options) {
    static constexpr std::pair<int, int> kPairs[] = {{1, 2}, {1, 3}, {2, 4}};
    std::vector<int> ranks = or_default(options.ranks, {2, 3});
    std::vector<Task> tasks;
    for (int r : ranks) {
        for (auto [m, n] : kPairs) {
            if (!options.degrees.empty() &&
                std::find(options.degrees.begin(), options.degrees.end(), n) ==
                    options.degrees.end())
                continue;
            for (const Exponent& mu : box_weights(r, -1, 2)) {
                std::string name = "order shrinkage r=" + std::to_string(r) + " (" +
                                   std::to_string(m) + "," + std::to_string(n) +
                                   ") mu=" + exp_text(mu);
                tasks.push_back({std::move(name), [r, m = m, n = n, mu]() -> MaybeFailure {
                                     MetaplecticContext coarse(r, m);
                                     MetaplecticContext fine(r, n);
                                     const LaurentPolynomial Em =
                                         compute_E(mu, coarse, Normalization::monic)
                                             .reduced(coarse.ghalf_rule());
                                     const LaurentPolynomial En =
                                         compute_E(mu, fine, Normalization::monic)
                                             .reduced(fine.ghalf_rule());
                                     std::set<Exponent> larger;
                                     for (const auto& [e, c] : Em.terms()) larger.insert(e);
                                     for (const auto& [e, c] : En.terms())
                                         if (!larger.count(e))
                                             return "support gains x^" + exp_text(e) +
                                                    " when the degree grows";
                                     return std::nullopt;
                                 }});
            }
        }
    }
    return tasks;
}

std::vector<Task> family_tasks(CheckFamily family, const SweepOptions& options) {
    switch (family) {
        case CheckFamily::golden_e: return golden_tasks("E", options);
        case CheckFamily::golden_p: return golden_tasks("P", options);
        case CheckFamily::relations: return relations_tasks(options);
        case CheckFamily::oracle_equality: return oracle_equality_tasks(options);
        case CheckFamily::eigenvalue: return eigenvalue_tasks(options);
        case CheckFamily::embedding: return embedding_tasks(options);
        case CheckFamily::limits: return limits_tasks(options);
        case CheckFamily::order_support: return order_support_tasks(options);
        case CheckFamily::order_shrinkage: return order_shrinkage_tasks(options);
    }
    throw internal_error("unknown check family");
}

} // namespace

int SuiteReport::passed_count() const {
    int count = 0;
    for (const CheckResult& check : checks)
        if (check.passed) ++count;
    return count;
}

bool SuiteReport::all_passed() const {
    return passed_count() == static_cast<int>(checks.size());
}

const CheckResult* SuiteReport::first_failure() const {
    for (const CheckResult& check : checks)
        if (!check.passed) return &check;
    return nullptr;
}

SuiteReport run_family(CheckFamily family, const SweepOptions& options) {
    SuiteReport report;
    report.suite = "family";
    report.checks = run_tasks(family_tasks(family, options));
    return report;
}

SuiteReport run_suite(const std::string& suite, const SweepOptions& options) {
    static const std::vector<std::pair<std::string, std::vector<CheckFamily>>> kSuites = {
        {"golden", {CheckFamily::golden_e, CheckFamily::golden_p}},
        {"relations", {CheckFamily::relations}},
        {"oracle",
         {CheckFamily::oracle_equality, CheckFamily::eigenvalue, CheckFamily::embedding}},
        {"limits", {CheckFamily::limits}},
        {"order", {CheckFamily::order_support, CheckFamily::order_shrinkage}},
    };
    std::vector<CheckFamily> families;
    if (suite == "all") {
        for (const auto& [name, list] : kSuites)
            families.insert(families.end(), list.begin(), list.end());
    } else {
        bool found = false;
        for (const auto& [name, list] : kSuites) {
            if (name == suite) {
                families = list;
                found = true;
                break;
            }
        }
        if (!found) throw malformed_error("unknown verify suite \"" + suite + "\"");
    }
    std::vector<Task> tasks;
    for (CheckFamily family : families) {
        std::vector<Task> part = family_tasks(family, options);
        for (Task& task : part) tasks.push_back(std::move(task));
    }
    SuiteReport report;
    report.suite = suite;
    report.checks = run_tasks(std::move(tasks));
    return report;
}

int suite_thread_count() {
    if (const char* env = std::getenv("SSV_THREADS")) {
        int parsed = std::atoi(env);
        if (parsed > 0) return parsed;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

} // namespace ssv
