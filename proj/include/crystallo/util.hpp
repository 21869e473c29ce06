#ifndef CRYSTALLO_UTIL_HPP
#define CRYSTALLO_UTIL_HPP

#include <cstdint>
#include <vector>

namespace crystallo {

// n^k as a size, throwing on overflow past the given limit.
std::uint64_t pow_u64(std::uint64_t n, unsigned k);

inline std::size_t table_size(int n, int arity)
{
    std::size_t s = 1;
    for (int i = 0; i < arity; ++i)
        s *= static_cast<std::size_t>(n);
    return s;
}

// Row-major tuple index: first coordinate most significant.
inline std::size_t tuple_index(int n, const std::vector<int> & args)
{
    std::size_t idx = 0;
    for (int a : args)
        idx = idx * static_cast<std::size_t>(n) + static_cast<std::size_t>(a);
    return idx;
}

// Advances args through [0,n)^k in lexicographic order; returns false after
// the last tuple.
inline bool next_tuple(int n, std::vector<int> & args)
{
    for (std::size_t i = args.size(); i-- > 0;) {
        if (++args[i] < n)
            return true;
        args[i] = 0;
    }
    return false;
}

struct NodeBudget {
    std::uint64_t limit = 0;
    std::uint64_t used = 0;
    bool exhausted = false;

    explicit NodeBudget(std::uint64_t l) : limit(l) {}

    // Counts one node; returns false once the limit is hit.
    bool tick()
    {
        if (exhausted)
            return false;
        if (++used > limit) {
            exhausted = true;
            return false;
        }
        return true;
    }
};

}

#endif
