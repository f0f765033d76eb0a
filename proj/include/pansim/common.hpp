#pragma once

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <limits>
#include <random>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace pansim {

// Invalid inputs, malformed files, broken preconditions. CLI exit code 2.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

// NaN/Inf or other numeric breakdown. CLI exit code 3.
class NumericError : public std::runtime_error {
public:
    explicit NumericError(const std::string& msg) : std::runtime_error(msg) {}
};

// Data-quality problems detected during ingestion or inversion.
class DataError : public ValidationError {
public:
    explicit DataError(const std::string& msg) : ValidationError(msg) {}
};

inline double softplus(double x) {
    // ln(1 + e^x) without overflow for large |x|
    if (x > 0.0)
        return x + std::log1p(std::exp(-x));
    return std::log1p(std::exp(x));
}

inline double softplus_inverse(double y) {
    // inverse of softplus on y > 0: ln(e^y - 1)
    if (y <= 0.0)
        throw ValidationError("softplus_inverse: argument must be positive");
    if (y > 30.0)
        return y;  // e^{-y} below double resolution
    return y + std::log(-std::expm1(-y));
}

inline double logistic(double x) {
    if (x >= 0.0) {
        const double e = std::exp(-x);
        return 1.0 / (1.0 + e);
    }
    const double e = std::exp(x);
    return e / (1.0 + e);
}

// ---------------------------------------------------------------------------
// Calendar days. Dates are ISO-8601 strings; internally a day count relative
// to the Unix epoch (proleptic Gregorian), so differences are plain integers.

inline std::int64_t day_number(int year, unsigned month, unsigned day) {
    using namespace std::chrono;
    const year_month_day ymd{std::chrono::year{year}, std::chrono::month{month},
                             std::chrono::day{day}};
    if (!ymd.ok())
        throw ValidationError("invalid calendar date");
    return sys_days{ymd}.time_since_epoch().count();
}

inline std::int64_t parse_date(const std::string& iso) {
    int y = 0;
    unsigned m = 0, d = 0;
    if (std::sscanf(iso.c_str(), "%d-%u-%u", &y, &m, &d) != 3)
        throw ValidationError("expected ISO-8601 date (YYYY-MM-DD), got '" + iso + "'");
    return day_number(y, m, d);
}

// "YYYY-MM" month key -> day number of the first of that month.
inline std::int64_t parse_year_month(const std::string& ym) {
    int y = 0;
    unsigned m = 0;
    if (std::sscanf(ym.c_str(), "%d-%u", &y, &m) != 2)
        throw ValidationError("expected year-month (YYYY-MM), got '" + ym + "'");
    return day_number(y, m, 1);
}

inline std::string format_date(std::int64_t days) {
    using namespace std::chrono;
    const year_month_day ymd{sys_days{std::chrono::days{days}}};
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%04d-%02u-%02u", int(ymd.year()), unsigned(ymd.month()),
                  unsigned(ymd.day()));
    return buf;
}

// ---------------------------------------------------------------------------
// Shortest round-trip formatting for doubles (CSV/JSON output).

inline std::string format_double(double v) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

inline double parse_double(const std::string& s, const std::string& what) {
    double v = 0.0;
    const char* b = s.data();
    const char* e = s.data() + s.size();
    while (b != e && (*b == ' ' || *b == '\t')) ++b;
    const auto res = std::from_chars(b, e, v);
    if (res.ec != std::errc{} || res.ptr != e)
        throw ValidationError("could not parse number '" + s + "' in " + what);
    return v;
}

inline long parse_long(const std::string& s, const std::string& what) {
    long v = 0;
    const char* b = s.data();
    const char* e = s.data() + s.size();
    while (b != e && (*b == ' ' || *b == '\t')) ++b;
    const auto res = std::from_chars(b, e, v);
    if (res.ec != std::errc{} || res.ptr != e)
        throw ValidationError("could not parse integer '" + s + "' in " + what);
    return v;
}

// ---------------------------------------------------------------------------
// Deterministic RNG. mt19937_64 with an explicit 53-bit uniform so sampled
// trajectories are identical across standard libraries.

class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next_u64() { return gen_(); }

    double uniform() {
        return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
    }

    // Categorical draw by CDF walk; probs must sum to ~1.
    int categorical(const std::vector<double>& probs) {
        const double u = uniform();
        double acc = 0.0;
        for (std::size_t j = 0; j < probs.size(); ++j) {
            acc += probs[j];
            if (u < acc)
                return static_cast<int>(j);
        }
        return static_cast<int>(probs.size()) - 1;
    }

    // Independent child stream; splitmix64 mixing keeps streams decorrelated.
    Rng fork(std::uint64_t a, std::uint64_t b = 0) const {
        std::uint64_t z = seed_mix_ + 0x9e3779b97f4a7c15ULL * (a + 1) + 0xbf58476d1ce4e5b9ULL * (b + 1);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return Rng(z ^ (z >> 31));
    }

    static Rng seeded(std::uint64_t seed) {
        Rng r(seed);
        r.seed_mix_ = seed;
        return r;
    }

private:
    std::mt19937_64 gen_;
    std::uint64_t seed_mix_ = 0;
};

inline Rng make_stream(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (a + 1) + 0xbf58476d1ce4e5b9ULL * (b + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return Rng(z ^ (z >> 31));
}

// ---------------------------------------------------------------------------
// Deterministic parallel map: work item i writes slot i, reduction order is
// the index order regardless of worker count.

inline int worker_count_from_env(const char* var = "PANSIM_WORKERS") {
    if (const char* s = std::getenv(var)) {
        const long n = std::strtol(s, nullptr, 10);
        if (n >= 1)
            return static_cast<int>(std::min<long>(n, 256));
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

inline void parallel_for(std::size_t n, int workers, const std::function<void(std::size_t)>& fn) {
    if (n == 0)
        return;
    workers = std::max(1, std::min<int>(workers, static_cast<int>(n)));
    if (workers == 1) {
        for (std::size_t i = 0; i < n; ++i)
            fn(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    std::atomic<std::size_t> cursor{0};
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (;;) {
                const std::size_t i = cursor.fetch_add(1);
                if (i >= n)
                    return;
                fn(i);
            }
        });
    }
    for (auto& t : pool)
        t.join();
}

}  // namespace pansim
