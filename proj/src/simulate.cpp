#include "condinf/simulate.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <map>
#include <stdexcept>
#include <thread>

#include "condinf/rng.hpp"

namespace condinf {

namespace {

int worker_count() {
    if (const char* env = std::getenv("CONDINF_WORKERS")) {
        int n = std::atoi(env);
        if (n >= 1) return std::min(n, 64);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(std::min(hw, 16u));
}

}  // namespace

PathStats simulate_exp_martingale(const EnsembleSpec& spec) {
    if (spec.paths <= 0 || spec.step <= 0 || spec.step > 0.05)
        throw std::invalid_argument("simulate: need paths > 0 and 0 < step <= 0.05");
    if (spec.ruin <= 0 || spec.ruin >= 1)
        throw std::invalid_argument("simulate: ruin threshold must lie in (0, 1)");

    PathStats stats;
    stats.spec = spec;
    stats.spec.checkpoints = spec.checkpoints;
    std::sort(stats.spec.checkpoints.begin(), stats.spec.checkpoints.end());

    const double h = spec.step;
    const double u = std::exp(h), d = std::exp(-h);
    // ruin once M < ruin, i.e. S < ln(ruin)/h on the lattice
    std::int32_t stop_s = static_cast<std::int32_t>(std::floor(std::log(spec.ruin) / h));
    if (std::exp(stop_s * h) >= spec.ruin) stop_s -= 1;

    double p_up;
    std::int32_t jump_units = 0;
    std::uint64_t jump_threshold = 0;
    if (spec.jumpy) {
        jump_units = std::max<std::int32_t>(
            1, static_cast<std::int32_t>(std::lround(std::log(spec.jump_factor) / h)));
        const double jump_mean = std::exp(jump_units * h);
        const double q = spec.jump_prob;
        // (1-q)(p u + (1-p) d) + q jump_mean = 1
        p_up = ((1.0 - q * jump_mean) / (1.0 - q) - d) / (u - d);
        if (p_up <= 0.0 || p_up >= 1.0)
            throw std::invalid_argument("simulate: jump parameters break the martingale step");
        jump_threshold = static_cast<std::uint64_t>(q * 0x1.0p64);
    } else {
        p_up = (1.0 - d) / (u - d);
    }
    const std::uint64_t up_threshold =
        static_cast<std::uint64_t>(p_up * 0x1.0p64);

    const std::size_t n_cp = stats.spec.checkpoints.size();
    stats.final_max.assign(spec.paths, 0);
    stats.at_checkpoint.assign(static_cast<std::size_t>(spec.paths) * n_cp, {0, 0});

    std::atomic<std::int64_t> capped{0};
    std::atomic<std::int64_t> next_chunk{0};
    const std::int64_t chunk = 65536;
    const std::int64_t chunks = (spec.paths + chunk - 1) / chunk;

    auto run_worker = [&] {
        std::int64_t local_capped = 0;
        for (;;) {
            const std::int64_t c = next_chunk.fetch_add(1);
            if (c >= chunks) break;
            const std::int64_t lo = c * chunk;
            const std::int64_t hi = std::min(spec.paths, lo + chunk);
            for (std::int64_t path = lo; path < hi; ++path) {
                Rng rng(Rng::derive(spec.seed, static_cast<std::uint64_t>(path)));
                std::int32_t s = 0, smax = 0;
                std::int64_t steps = 0;
                std::size_t cp = 0;
                bool alive = true;
                while (true) {
                    const std::int64_t until =
                        cp < n_cp ? std::min(stats.spec.checkpoints[cp], spec.step_cap)
                                  : spec.step_cap;
                    if (alive) {
                        while (steps < until) {
                            const std::uint64_t r = rng.next();
                            if (spec.jumpy && r < jump_threshold) {
                                s += jump_units;
                            } else if (r < up_threshold) {
                                ++s;
                            } else {
                                --s;
                            }
                            if (s > smax) smax = s;
                            ++steps;
                            if (s <= stop_s) {
                                alive = false;
                                break;
                            }
                        }
                    } else {
                        steps = until;
                    }
                    if (cp < n_cp && steps >= stats.spec.checkpoints[cp]) {
                        stats.at_checkpoint[static_cast<std::size_t>(path) * n_cp + cp] = {s,
                                                                                           smax};
                        ++cp;
                        continue;
                    }
                    if (!alive || steps >= spec.step_cap) break;
                }
                while (cp < n_cp) {
                    stats.at_checkpoint[static_cast<std::size_t>(path) * n_cp + cp] = {s, smax};
                    ++cp;
                }
                if (alive && steps >= spec.step_cap) ++local_capped;
                stats.final_max[path] = smax;
            }
        }
        capped += local_capped;
    };

    const int workers = std::min<std::int64_t>(worker_count(), chunks);
    if (workers <= 1) {
        run_worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (int i = 0; i < workers; ++i) pool.emplace_back(run_worker);
        for (auto& th : pool) th.join();
    }
    stats.capped_paths = capped.load();
    return stats;
}

ElyEstimate ely_estimate(const PathStats& stats, double n) {
    if (n < 1.0) throw std::invalid_argument("ely_estimate: threshold must be >= 1");
    const double h = stats.spec.step;
    const double exact = std::log(n) / h;
    const std::int32_t k = static_cast<std::int32_t>(std::ceil(exact - 1e-12));

    ElyEstimate est;
    est.n = n;
    for (std::int32_t m : stats.final_max) {
        if (m >= k) ++est.hits;
    }
    const double total = static_cast<double>(stats.final_max.size());
    const double p = static_cast<double>(est.hits) / total;
    est.estimate = n * p;
    est.std_error = n * std::sqrt(p * (1.0 - p) / total);
    est.overshoot_factor = std::exp(k * h) / n;
    est.corrected = est.estimate * est.overshoot_factor;
    est.cap_warning =
        stats.capped_paths * 1000 > static_cast<std::int64_t>(stats.final_max.size());
    return est;
}

double FSpec::eval(double x) const {
    switch (kind) {
        case Kind::constant: return value;
        case Kind::indicator: return x >= threshold ? 1.0 : 0.0;
        case Kind::power: return std::pow(x, -exponent);
        case Kind::piecewise: {
            double v = 0.0;
            for (const auto& [from, c] : pieces) {
                if (x >= from) v = c;
            }
            return v;
        }
    }
    return 0.0;
}

FSpec FSpec::parse(const std::string& text) {
    auto colon = text.find(':');
    const std::string head = text.substr(0, colon);
    const std::string args = colon == std::string::npos ? "" : text.substr(colon + 1);
    FSpec f;
    if (head == "const") {
        f.kind = Kind::constant;
        f.value = args.empty() ? 1.0 : std::stod(args);
        return f;
    }
    if (head == "indicator") {
        f.kind = Kind::indicator;
        f.threshold = std::stod(args);
        return f;
    }
    if (head == "power") {
        f.kind = Kind::power;
        f.exponent = std::stod(args);
        if (f.exponent <= 0)
            throw std::invalid_argument("FSpec: power exponent must be positive "
                                        "(x^-p with p <= 0 has a divergent integral)");
        return f;
    }
    if (head == "steps") {
        f.kind = Kind::piecewise;
        std::size_t pos = 0;
        std::vector<double> nums;
        while (pos < args.size()) {
            std::size_t next = args.find(',', pos);
            nums.push_back(std::stod(args.substr(pos, next - pos)));
            if (next == std::string::npos) break;
            pos = next + 1;
        }
        if (nums.empty() || nums.size() % 2 != 0)
            throw std::invalid_argument("FSpec: steps need x1,c1,x2,c2,...");
        for (std::size_t i = 0; i < nums.size(); i += 2) {
            if (!f.pieces.empty() && nums[i] <= f.pieces.back().first)
                throw std::invalid_argument("FSpec: step breakpoints must increase");
            f.pieces.emplace_back(nums[i], nums[i + 1]);
        }
        return f;
    }
    throw std::invalid_argument("FSpec: unknown spec \"" + text + "\"");
}

namespace {

double adaptive_simpson(const FSpec& f, double a, double b, double fa, double fm, double fb,
                        double whole, double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    auto g = [&](double x) { return f.eval(x) / (x * x); };
    const double flm = g(lm), frm = g(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    if (depth >= 40 || std::abs(left + right - whole) <= 15.0 * tol)
        return left + right + (left + right - whole) / 15.0;
    return adaptive_simpson(f, a, m, fa, flm, fm, left, tol / 2.0, depth + 1) +
           adaptive_simpson(f, m, b, fm, frm, fb, right, tol / 2.0, depth + 1);
}

// integral over [mbar, inf) of f(x)/x^2 dx
double tail_integral(const FSpec& f, double mbar) {
    switch (f.kind) {
        case FSpec::Kind::constant:
            return f.value / mbar;
        case FSpec::Kind::indicator:
            return 1.0 / std::max(f.threshold, mbar);
        case FSpec::Kind::power:
            return std::pow(mbar, -1.0 - f.exponent) / (1.0 + f.exponent);
        case FSpec::Kind::piecewise: {
            const double last_x = f.pieces.back().first;
            const double last_c = f.pieces.back().second;
            double total = last_c / std::max(last_x, mbar);  // exact constant tail
            if (mbar < last_x) {
                auto g = [&](double x) { return f.eval(x) / (x * x); };
                const double a = mbar, b = last_x;
                const double fa = g(a), fb = g(b), fm = g(0.5 * (a + b));
                const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
                total += adaptive_simpson(f, a, b, fa, fm, fb, whole, 1e-10, 0);
            }
            return total;
        }
    }
    return 0.0;
}

}  // namespace

double ny_rhs(const FSpec& f, double m, double mbar) {
    if (!(m > 0) || !(mbar >= m))
        throw std::invalid_argument("ny_rhs: need 0 < m <= mbar");
    return f.eval(mbar) * (1.0 - m / mbar) + m * tail_integral(f, mbar);
}

NyReport ny_check(const PathStats& stats, const FSpec& f, std::int64_t min_bin) {
    NyReport report;
    const double h = stats.spec.step;
    const std::int64_t paths = static_cast<std::int64_t>(stats.final_max.size());
    for (std::size_t c = 0; c < stats.spec.checkpoints.size(); ++c) {
        NyCheckpointReport cp;
        cp.step = stats.spec.checkpoints[c];
        // strata on the exact lattice pair (S_t, max_t)
        std::map<std::pair<std::int32_t, std::int32_t>, std::vector<std::int64_t>> bins;
        for (std::int64_t path = 0; path < paths; ++path) {
            const auto& snap = stats.checkpoint(path, c);
            bins[{snap[0], snap[1]}].push_back(path);
        }
        for (const auto& [key, members] : bins) {
            if (static_cast<std::int64_t>(members.size()) < min_bin) {
                ++cp.skipped_bins;
                cp.skipped_paths += static_cast<std::int64_t>(members.size());
                continue;
            }
            NyBinResult bin;
            bin.s = key.first;
            bin.max = key.second;
            bin.paths = static_cast<std::int64_t>(members.size());
            double sum = 0, sum_sq = 0;
            for (std::int64_t path : members) {
                const double v = f.eval(std::exp(h * stats.final_max[path]));
                sum += v;
                sum_sq += v * v;
            }
            const double n = static_cast<double>(bin.paths);
            bin.estimate = sum / n;
            const double var = std::max(0.0, sum_sq / n - bin.estimate * bin.estimate);
            bin.std_error = std::sqrt(var / n);
            bin.rhs = ny_rhs(f, std::exp(h * key.first), std::exp(h * key.second));
            cp.max_abs_deviation =
                std::max(cp.max_abs_deviation, std::abs(bin.estimate - bin.rhs));
            cp.bins.push_back(bin);
        }
        report.max_abs_deviation = std::max(report.max_abs_deviation, cp.max_abs_deviation);
        report.checkpoints.push_back(std::move(cp));
    }
    return report;
}

}  // namespace condinf
