#ifndef HOPFSIMP_CORE_HPP
#define HOPFSIMP_CORE_HPP

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdint>
#include <cstdlib>
#include <exception>
#include <functional>
#include <limits>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <span>
#include <stdexcept>
#include <string>
#include <thread>
#include <unordered_map>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace hopfsimp {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Malformed input: bad vertex labels, non-flats, non-trees, unparsable text.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A request beyond the exhaustive-enumeration limits of the library.
class CapacityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Vertex subsets of {0..n-1} are bitmasks; bit v set <=> vertex v present.
using VertexSet = std::uint32_t;

inline constexpr int kMaxVertices = 24;

inline int popcount(VertexSet s) { return std::popcount(s); }

inline bool contains(VertexSet s, int v) { return (s >> v) & 1U; }

inline VertexSet full_set(int n) {
    return n >= 32 ? ~VertexSet{0} : (VertexSet{1} << n) - 1;
}

inline std::vector<int> to_vertex_list(VertexSet s) {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(popcount(s)));
    while (s != 0) {
        out.push_back(std::countr_zero(s));
        s &= s - 1;
    }
    return out;
}

/// Lexicographic order of the sorted vertex lists encoded by two masks.
inline bool lex_less(VertexSet a, VertexSet b) {
    if (a == b) {
        return false;
    }
    const int d = std::countr_zero(a ^ b);
    // Both lists agree below d. The one holding d continues with d; the other
    // either continues with something larger or has ended.
    if (contains(a, d)) {
        return (b >> d) != 0;
    }
    return (a >> d) == 0;
}

/// Compresses the bits of `s` selected by `mask` into the low bits, in order.
inline VertexSet compress(VertexSet s, VertexSet mask) {
    VertexSet out = 0;
    int pos = 0;
    while (mask != 0) {
        const int v = std::countr_zero(mask);
        if (contains(s, v)) {
            out |= VertexSet{1} << pos;
        }
        ++pos;
        mask &= mask - 1;
    }
    return out;
}

inline Integer factorial(int n) {
    Integer r = 1;
    for (int i = 2; i <= n; ++i) {
        r *= i;
    }
    return r;
}

inline Integer binomial(int n, int k) {
    if (k < 0 || k > n) {
        return 0;
    }
    k = std::min(k, n - k);
    Integer r = 1;
    for (int i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
    }
    return r;
}

inline Integer multinomial(std::span<const int> parts) {
    int total = 0;
    Integer r = 1;
    for (int p : parts) {
        total += p;
        r *= binomial(total, p);
    }
    return r;
}

inline int sign_power(int e) { return (e % 2 == 0) ? 1 : -1; }

// ---------------------------------------------------------------------------
// Worker threads

inline std::atomic<unsigned>& thread_limit_storage() {
    static std::atomic<unsigned> limit{1};
    return limit;
}

inline unsigned thread_count() { return thread_limit_storage().load(); }

inline void set_thread_count(unsigned n) { thread_limit_storage().store(std::max(1U, n)); }

/// Runs fn(i) for i in [0, count) on up to thread_count() workers.
template <class Fn>
void parallel_for(std::size_t count, Fn&& fn) {
    const std::size_t workers = std::min<std::size_t>(thread_count(), count);
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) {
            fn(i);
        }
        return;
    }
    std::atomic<std::size_t> next{0};
    std::mutex error_mutex;
    std::exception_ptr error;
    {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (std::size_t w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                for (std::size_t i = next++; i < count; i = next++) {
                    try {
                        fn(i);
                    } catch (...) {
                        std::scoped_lock lock(error_mutex);
                        if (!error) {
                            error = std::current_exception();
                        }
                    }
                }
            });
        }
    }
    if (error) {
        std::rethrow_exception(error);
    }
}

// ---------------------------------------------------------------------------
// Memo caches

/// Entry bound for every memo cache, from HOPFSIMP_CACHE_LIMIT (0 = unbounded).
inline std::size_t cache_limit_from_env() {
    static const std::size_t limit = [] {
        const char* raw = std::getenv("HOPFSIMP_CACHE_LIMIT");
        if (raw == nullptr || *raw == '\0') {
            return std::size_t{0};
        }
        char* end = nullptr;
        const unsigned long long v = std::strtoull(raw, &end, 10);
        return (end != nullptr && *end == '\0') ? static_cast<std::size_t>(v) : std::size_t{0};
    }();
    return limit;
}

/// Concurrent memo table. Every writer for a key computes the same value, so
/// a racing insert simply keeps whichever value landed last.
template <class Key, class Value, class Hash = std::hash<Key>>
class MemoCache {
public:
    explicit MemoCache(std::size_t limit = cache_limit_from_env()) : limit_(limit) {}

    std::optional<Value> find(const Key& key) const {
        std::shared_lock lock(mutex_);
        auto it = table_.find(key);
        if (it == table_.end()) {
            return std::nullopt;
        }
        return it->second;
    }

    void insert(const Key& key, const Value& value) {
        std::unique_lock lock(mutex_);
        if (limit_ != 0 && table_.size() >= limit_ && !table_.contains(key)) {
            return;
        }
        table_[key] = value;
    }

    std::size_t size() const {
        std::shared_lock lock(mutex_);
        return table_.size();
    }

    void clear() {
        std::unique_lock lock(mutex_);
        table_.clear();
    }

private:
    std::size_t limit_;
    mutable std::shared_mutex mutex_;
    std::unordered_map<Key, Value, Hash> table_;
};

inline void hash_combine(std::size_t& seed, std::size_t v) {
    seed ^= v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
}

}  // namespace hopfsimp

#endif  // HOPFSIMP_CORE_HPP
