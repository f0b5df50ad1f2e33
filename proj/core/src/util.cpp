#include "wid/util.hpp"

#include <atomic>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <mutex>
#include <thread>

#include "wid/error.hpp"

namespace wid {

std::string str_printf(const char* fmt, ...) {
    va_list args;
    va_start(args, fmt);
    va_list args2;
    va_copy(args2, args);
    int n = std::vsnprintf(nullptr, 0, fmt, args);
    va_end(args);
    std::string out(n > 0 ? size_t(n) : 0, '\0');
    if (n > 0) std::vsnprintf(out.data(), out.size() + 1, fmt, args2);
    va_end(args2);
    return out;
}

std::string format_double_exact(double v) {
    // Try increasing precision until the value round-trips.
    for (int prec = 9; prec <= 17; ++prec) {
        std::string s = str_printf("%.*g", prec, v);
        if (std::strtod(s.c_str(), nullptr) == v) return s;
    }
    return str_printf("%.17g", v);
}

std::string format_double_sig(double v, int digits) {
    return str_printf("%.*g", digits, v);
}

std::vector<std::string> split(std::string_view s, char delim) {
    std::vector<std::string> out;
    size_t start = 0;
    while (true) {
        size_t pos = s.find(delim, start);
        if (pos == std::string_view::npos) {
            out.emplace_back(s.substr(start));
            break;
        }
        out.emplace_back(s.substr(start, pos - start));
        start = pos + 1;
    }
    return out;
}

std::string trim(std::string_view s) {
    size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

std::string to_lower(std::string_view s) {
    std::string out(s);
    for (char& c : out) c = char(std::tolower(static_cast<unsigned char>(c)));
    return out;
}

bool parse_long(std::string_view s, long& out) {
    std::string t = trim(s);
    if (t.empty()) return false;
    char* end = nullptr;
    long v = std::strtol(t.c_str(), &end, 10);
    if (end != t.c_str() + t.size()) return false;
    out = v;
    return true;
}

bool parse_double(std::string_view s, double& out) {
    std::string t = trim(s);
    if (t.empty()) return false;
    char* end = nullptr;
    double v = std::strtod(t.c_str(), &end);
    if (end != t.c_str() + t.size()) return false;
    out = v;
    return true;
}

Fnv1a& Fnv1a::update(const void* data, size_t n) {
    const auto* p = static_cast<const unsigned char*>(data);
    for (size_t i = 0; i < n; ++i) {
        state_ ^= p[i];
        state_ *= 0x100000001b3ull;
    }
    return *this;
}

Fnv1a& Fnv1a::update(uint64_t v) {
    unsigned char buf[8];
    for (int i = 0; i < 8; ++i) buf[i] = static_cast<unsigned char>(v >> (8 * i));
    return update(buf, 8);
}

Fnv1a& Fnv1a::update(double v) {
    uint64_t bits;
    std::memcpy(&bits, &v, 8);
    return update(bits);
}

std::string Fnv1a::hex() const {
    return str_printf("%016llx", static_cast<unsigned long long>(state_));
}

uint64_t fnv1a_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::IoError, "cannot read " + path);
    Fnv1a h;
    char buf[1 << 16];
    while (in.read(buf, sizeof buf) || in.gcount() > 0) h.update(buf, size_t(in.gcount()));
    return h.digest();
}

uint64_t Rng::next() {
    // splitmix64 step: good mixing, trivially portable.
    uint64_t z = (s_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

double Rng::u01() {
    return double(next() >> 11) * 0x1.0p-53;
}

double Rng::uniform(double lo, double hi) {
    return lo + (hi - lo) * u01();
}

long Rng::uniform_int(long lo, long hi) {
    uint64_t span = uint64_t(hi - lo) + 1;
    return lo + long(next() % span);
}

double Rng::normal() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    double u1 = 0.0;
    do { u1 = u01(); } while (u1 <= 0.0);
    double u2 = u01();
    double r = std::sqrt(-2.0 * std::log(u1));
    double a = 2.0 * M_PI * u2;
    spare_ = r * std::sin(a);
    has_spare_ = true;
    return r * std::cos(a);
}

uint64_t Rng::derive(uint64_t seed, std::string_view name, uint64_t a, uint64_t b) {
    Fnv1a h;
    h.update(seed).update(name).update(a).update(b);
    return h.digest();
}

void parallel_for(size_t n, int workers, const std::function<void(size_t)>& fn) {
    if (n == 0) return;
    size_t nthreads = workers <= 0 ? std::thread::hardware_concurrency() : size_t(workers);
    if (nthreads <= 1 || n == 1) {
        for (size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    nthreads = std::min(nthreads, n);
    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    std::atomic<bool> failed{false};
    std::exception_ptr first_error;
    std::mutex err_mutex;
    pool.reserve(nthreads);
    for (size_t t = 0; t < nthreads; ++t) {
        pool.emplace_back([&] {
            while (true) {
                size_t i = next.fetch_add(1);
                if (i >= n || failed.load()) return;
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lk(err_mutex);
                    if (!first_error) first_error = std::current_exception();
                    failed.store(true);
                    return;
                }
            }
        });
    }
    for (auto& th : pool) th.join();
    if (first_error) std::rethrow_exception(first_error);
}

const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::InvalidImage: return "InvalidImage";
        case ErrorCode::ConstantImage: return "ConstantImage";
        case ErrorCode::BlankDocument: return "BlankDocument";
        case ErrorCode::InsufficientText: return "InsufficientText";
        case ErrorCode::BlockTooSmall: return "BlockTooSmall";
        case ErrorCode::DegenerateLabels: return "DegenerateLabels";
        case ErrorCode::ShapeError: return "ShapeError";
        case ErrorCode::StratificationError: return "StratificationError";
        case ErrorCode::NoEvidence: return "NoEvidence";
        case ErrorCode::ClassSetMismatch: return "ClassSetMismatch";
        case ErrorCode::ManifestError: return "ManifestError";
        case ErrorCode::EmptySubset: return "EmptySubset";
        case ErrorCode::PlanError: return "PlanError";
        case ErrorCode::FeatureCacheMiss: return "FeatureCacheMiss";
        case ErrorCode::ConfigError: return "ConfigError";
        case ErrorCode::IoError: return "IoError";
    }
    return "Error";
}

} // namespace wid
