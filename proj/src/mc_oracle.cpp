#include "funceq/mc_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>
#include <thread>
#include <vector>

#include "funceq/errors.hpp"
#include "funceq/operator.hpp"

namespace funceq {

namespace {

constexpr double kProbabilityTolerance = 1e-9;
constexpr double kZ99 = 2.576;

double uniform01(std::mt19937_64& rng) {
    // 53 random mantissa bits; independent of the standard library's
    // distribution implementation.
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

double checked_probability(const EquationSpec& spec, double x) {
    double p = 0.0;
    try {
        p = spec.phi(x);
    } catch (const std::exception& e) {
        throw EvaluationError(std::string("phi failed during simulation: ") + e.what(), x);
    }
    if (!(p >= -kProbabilityTolerance && p <= 1.0 + kProbabilityTolerance)) {
        std::ostringstream msg;
        msg.precision(17);
        msg << "phi(" << x << ") = " << p << " is not a probability";
        throw InvalidProbabilityError(msg.str());
    }
    return std::clamp(p, 0.0, 1.0);
}

double checked_state(const RealFunction& fn, std::string_view name, double x) {
    const double y = fn(x);
    if (!(y >= -kRangeTolerance && y <= 1.0 + kRangeTolerance)) {
        std::ostringstream msg;
        msg.precision(17);
        msg << name << "(" << x << ") = " << y << " leaves [0,1]";
        throw RangeError(msg.str());
    }
    return std::clamp(y, 0.0, 1.0);
}

struct Tally {
    std::size_t ones = 0;
    std::size_t timeouts = 0;
};

}  // namespace

void ChainConfig::validate() const {
    if (!(absorption_eps > 0.0 && absorption_eps < 0.5)) {
        throw DomainError("absorption_eps must lie in (0, 0.5)");
    }
    if (max_steps < 1) {
        throw DomainError("max_steps must be at least 1");
    }
}

std::string_view to_string(PathOutcome o) {
    switch (o) {
        case PathOutcome::absorbed_one: return "absorbed_one";
        case PathOutcome::absorbed_zero: return "absorbed_zero";
        case PathOutcome::timeout: return "timeout";
    }
    return "?";
}

std::uint64_t path_seed(std::uint64_t base_seed, std::uint64_t path_index) {
    std::uint64_t z = base_seed + (path_index + 1) * 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

PathOutcome simulate_path(const EquationSpec& spec, double x0, const ChainConfig& cfg,
                          std::uint64_t seed) {
    double x = x0;
    const double lo = cfg.absorption_eps;
    const double hi = 1.0 - cfg.absorption_eps;
    if (x < lo) return PathOutcome::absorbed_zero;
    if (x > hi) return PathOutcome::absorbed_one;

    std::mt19937_64 rng(seed);
    for (std::size_t k = 0; k < cfg.max_steps; ++k) {
        const double p = checked_probability(spec, x);
        x = uniform01(rng) < p ? checked_state(spec.phi1, "phi1", x) : checked_state(spec.phi2, "phi2", x);
        if (x < lo) return PathOutcome::absorbed_zero;
        if (x > hi) return PathOutcome::absorbed_one;
    }
    return PathOutcome::timeout;
}

OracleEstimate estimate(const EquationSpec& spec, double x, std::size_t samples,
                        const ChainConfig& cfg, unsigned workers) {
    cfg.validate();
    if (!(x >= 0.0 && x <= 1.0)) {
        throw DomainError("oracle point outside [0,1]");
    }
    if (samples == 0) {
        throw DomainError("oracle needs at least one sample");
    }
    workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(samples)));

    const auto run_range = [&](std::size_t begin, std::size_t end) {
        Tally t;
        for (std::size_t i = begin; i < end; ++i) {
            switch (simulate_path(spec, x, cfg, path_seed(cfg.base_seed, i))) {
                case PathOutcome::absorbed_one: ++t.ones; break;
                case PathOutcome::timeout: ++t.timeouts; break;
                case PathOutcome::absorbed_zero: break;
            }
        }
        return t;
    };

    std::vector<Tally> tallies(workers);
    if (workers == 1) {
        tallies[0] = run_range(0, samples);
    } else {
        std::vector<std::exception_ptr> errors(workers);
        {
            std::vector<std::jthread> pool;
            const std::size_t chunk = (samples + workers - 1) / workers;
            for (unsigned w = 0; w < workers; ++w) {
                const std::size_t begin = std::min(samples, w * chunk);
                const std::size_t end = std::min(samples, begin + chunk);
                pool.emplace_back([&, w, begin, end] {
                    try {
                        tallies[w] = run_range(begin, end);
                    } catch (...) {
                        errors[w] = std::current_exception();
                    }
                });
            }
        }
        for (const auto& e : errors) {
            if (e) std::rethrow_exception(e);
        }
    }

    Tally total;
    for (const auto& t : tallies) {
        total.ones += t.ones;
        total.timeouts += t.timeouts;
    }
    if (10 * total.timeouts > samples) {
        std::ostringstream msg;
        msg << total.timeouts << " of " << samples << " paths from x=" << x
            << " were not absorbed; increase max_steps (now " << cfg.max_steps << ")";
        throw ReliabilityError(msg.str());
    }

    OracleEstimate est;
    est.x = x;
    est.samples = samples;
    est.timeouts = total.timeouts;
    const std::size_t finished = samples - total.timeouts;
    est.p_hat = static_cast<double>(total.ones) / static_cast<double>(finished);
    est.ci_halfwidth = kZ99 * std::sqrt(est.p_hat * (1.0 - est.p_hat) / static_cast<double>(finished));
    return est;
}

}  // namespace funceq
