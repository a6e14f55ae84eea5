#include "tconc/tinf.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <thread>
#include <vector>

namespace tconc {

std::string branch_name(Branch b) {
    switch (b) {
        case Branch::UpToOne: return "y<=1";
        case Branch::Interior: return "1<y<sqrt3";
        case Branch::Sqrt3: return "y=sqrt3";
        case Branch::AboveSqrt3: return "y>sqrt3";
    }
    return "?";
}

namespace {

Branch classify(double y, double a) {
    if (!(y > 0.0))
        throw std::domain_error("classify_branch: require y > 0");
    if (y <= 1.0) return Branch::UpToOne;
    if (std::fabs(a - 3.0) <= 1e-12) return Branch::Sqrt3;
    return a < 3.0 ? Branch::Interior : Branch::AboveSqrt3;
}

// y sqrt(v/(v-2)) without cancellation at large v.
double deviation_threshold(int v, double y) {
    return y * std::sqrt(1.0 + 2.0 / (v - 2.0));
}

// Upper tail mass 2 - 2 F_v(thr) for thr > 0, taken straight from the
// incomplete beta so that J and the H objective are exact complements.
double two_sided_tail(int v, double thr) {
    if (v < 3)
        throw std::domain_error("two_sided_tail: require integer v >= 3");
    return reg_inc_beta(0.5 * v, 0.5, v / (v + thr * thr));
}

double limit_T(double y) { return std::erf(y / std::sqrt(2.0)); }
double limit_H(double y) { return std::erfc(y / std::sqrt(2.0)); }

}  // namespace

Branch classify_branch(double y) { return classify(y, y * y); }
Branch classify_branch(const ThresholdY& y) { return classify(y.y(), y.a()); }

ConstantLedger constants_ledger(const ThresholdY& y) {
    const double a = y.a();
    if (std::fabs(a - 3.0) <= 1e-12)
        throw std::domain_error("constants_ledger: v0 is singular at y = sqrt(3)");

    ConstantLedger led{};
    led.C0 = 3.0;
    led.V0 = 100.0;
    led.C1 = 2.0 * a * a * a + 0.75 * a * a;
    led.C2 = 2.25 * led.C1 + 25.0 / 32.0 * a * a * a * a +
             1.5 * (std::pow(led.C1, 2.0 / 3.0) * std::pow(a, 4.0 / 3.0) +
                    std::cbrt(led.C1) * std::pow(a, 8.0 / 3.0));
    led.C3 = 13.0 / 3.0 * a * a + 18.0 * a + 2.0 * led.C2 + 11.0;
    led.V1 = std::max(100.0, 8.0 * a);
    led.V2 = std::max({led.V1, 1.5 * a * a, std::sqrt(2.0 * led.C1)});
    led.V3 = std::max({led.V2, 2.0 + 2.0 * a / (1.0 + 2.0 * y.y()),
                       2.0 + 2.0 * a * a / (1.0 + 2.0 * a)});
    led.v0 = std::max(led.V3, 2.0 * led.C3 / std::fabs(a - 3.0) + 1.0);
    return led;
}

double J(int v, const ThresholdY& y) {
    return 1.0 - two_sided_tail(v, deviation_threshold(v, y.y()));
}

double G(double v, const ThresholdY& y, const QuadratureSpec& spec) {
    if (!(v >= 3.0))
        throw std::domain_error("G: require v >= 3");
    const double a = y.a();
    const double L = std::expm1(-0.5 * std::log1p(-2.0 / v));
    const double half_exp = 0.5 * (v + 1.0);
    auto integrand = [a, v, half_exp](double m) {
        const double x = 1.0 + m;
        return std::exp(half_exp * (std::log1p(a / v) - std::log1p(a * x * x / v)));
    };
    return v * integrate(integrand, 0.0, L, spec);
}

double theorem_C(double y) {
    if (!(y > 0.0))
        throw std::domain_error("theorem_C: require y > 0");
    return 0.5;
}

std::pair<double, int> search_min(const ThresholdY& y, int v_max, Objective obj,
                                  int threads) {
    if (v_max < 3)
        throw std::domain_error("search_min: require v_max >= 3");

    auto objective = [&y, obj](int v) {
        const double tail = two_sided_tail(v, deviation_threshold(v, y.y()));
        return obj == Objective::T ? 1.0 - tail : tail;
    };

    const int count = v_max - 2;
    int workers = threads;
    if (workers <= 0) {
        const unsigned hc = std::thread::hardware_concurrency();
        workers = hc > 0 ? static_cast<int>(std::min(hc, 8u)) : 1;
    }
    workers = std::min(workers, count);

    if (workers <= 1 || count < 64) {
        double best = objective(3);
        int best_v = 3;
        for (int v = 4; v <= v_max; ++v) {
            const double val = objective(v);
            if (val < best) {
                best = val;
                best_v = v;
            }
        }
        return {best, best_v};
    }

    // Contiguous blocks per worker; the merge below keeps the result
    // identical for any worker count (min value, smallest v on ties).
    std::vector<std::pair<double, int>> partial(workers);
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int t = 0; t < workers; ++t) {
        pool.emplace_back([&, t]() {
            try {
                const int begin = 3 + static_cast<int>(
                                          static_cast<long long>(count) * t / workers);
                const int end = 3 + static_cast<int>(static_cast<long long>(count) *
                                                     (t + 1) / workers);
                double best = objective(begin);
                int best_v = begin;
                for (int v = begin + 1; v < end; ++v) {
                    const double val = objective(v);
                    if (val < best) {
                        best = val;
                        best_v = v;
                    }
                }
                partial[t] = {best, best_v};
            } catch (...) {
                errors[t] = std::current_exception();
            }
        });
    }
    for (auto& th : pool) th.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);

    std::pair<double, int> best = partial[0];
    for (int t = 1; t < workers; ++t) {
        if (partial[t].first < best.first ||
            (partial[t].first == best.first && partial[t].second < best.second))
            best = partial[t];
    }
    return best;
}

int scan_bound(const ThresholdY& y) {
    const Branch br = classify_branch(y);
    if (br == Branch::UpToOne)
        throw std::domain_error("scan_bound: no finite scan bound for y <= 1");
    if (br == Branch::Sqrt3) return 1321;  // floor(1318.4) + 3
    return static_cast<int>(std::floor(constants_ledger(y).v0)) + 3;
}

InfimumResult theorem_T(const ThresholdY& y, int threads,
                        std::optional<int> v_max_override) {
    const Branch br = classify_branch(y);
    if (br == Branch::UpToOne)
        return {limit_T(y.y()), std::nullopt, br, std::nullopt};

    const int bound = v_max_override ? *v_max_override : scan_bound(y);
    const auto [min_val, argmin] = search_min(y, bound, Objective::T, threads);
    if (br == Branch::AboveSqrt3)
        return {min_val, argmin, br, bound};

    const double lim = limit_T(y.y());
    if (min_val <= lim) return {min_val, argmin, br, bound};
    return {lim, std::nullopt, br, bound};
}

InfimumResult theorem_H(const ThresholdY& y, int threads,
                        std::optional<int> v_max_override) {
    const Branch br = classify_branch(y);
    if (br == Branch::UpToOne) {
        const auto [min_val, argmin] = search_min(y, 4, Objective::H, threads);
        return {min_val, argmin, br, 4};
    }

    const int bound = v_max_override ? *v_max_override : scan_bound(y);
    const auto [min_val, argmin] = search_min(y, bound, Objective::H, threads);
    if (br != Branch::AboveSqrt3)
        return {min_val, argmin, br, bound};

    const double lim = limit_H(y.y());
    if (min_val <= lim) return {min_val, argmin, br, bound};
    return {lim, std::nullopt, br, bound};
}

}  // namespace tconc
