#pragma once

#include <cstdarg>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace wid {

// printf-style formatting into a std::string.
std::string str_printf(const char* fmt, ...) __attribute__((format(printf, 1, 2)));

// Shortest decimal form that parses back to the same double (up to 17 digits).
std::string format_double_exact(double v);
// Fixed significant digits, e.g. 9 for the feature cache format.
std::string format_double_sig(double v, int digits);

std::vector<std::string> split(std::string_view s, char delim);
std::string trim(std::string_view s);
std::string to_lower(std::string_view s);

bool parse_long(std::string_view s, long& out);
bool parse_double(std::string_view s, double& out);

// FNV-1a, used for cache keys.
class Fnv1a {
public:
    Fnv1a& update(const void* data, size_t n);
    Fnv1a& update(std::string_view s) { return update(s.data(), s.size()); }
    Fnv1a& update(uint64_t v);
    Fnv1a& update(double v);
    uint64_t digest() const { return state_; }
    std::string hex() const;

private:
    uint64_t state_ = 0xcbf29ce484222325ull;
};

uint64_t fnv1a_file(const std::string& path);

// Deterministic RNG helpers. std::mt19937_64 bit stream is pinned by the
// standard; the distribution helpers here avoid the implementation-defined
// std::*_distribution classes.
class Rng {
public:
    explicit Rng(uint64_t seed) : s_(seed ? seed : 0x9e3779b97f4a7c15ull) {}

    uint64_t next();
    double u01();                          // [0, 1)
    double uniform(double lo, double hi);  // [lo, hi)
    long uniform_int(long lo, long hi);    // [lo, hi] inclusive
    double normal();                       // Box-Muller

    // Derive an independent stream keyed by (name, indices...).
    static uint64_t derive(uint64_t seed, std::string_view name, uint64_t a = 0, uint64_t b = 0);

private:
    uint64_t s_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

// Runs fn(i) for i in [0, n) on up to `workers` threads. workers <= 1 runs
// inline. Results must be written to per-index slots; no ordering guarantees.
void parallel_for(size_t n, int workers, const std::function<void(size_t)>& fn);

} // namespace wid
