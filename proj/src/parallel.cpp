#include "semiper/parallel.hpp"

#include <exception>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace semiper {

unsigned parallel_workers() {
#ifdef _OPENMP
    return static_cast<unsigned>(omp_get_max_threads());
#else
    return 1;
#endif
}

void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn) {
    std::exception_ptr failure = nullptr;
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
    for (long long i = 0; i < static_cast<long long>(count); ++i) {
        try {
            fn(static_cast<std::size_t>(i));
        } catch (...) {
#pragma omp critical(semiper_parallel_for)
            if (!failure) failure = std::current_exception();
        }
    }
#else
    for (std::size_t i = 0; i < count; ++i) {
        try {
            fn(i);
        } catch (...) {
            if (!failure) failure = std::current_exception();
        }
    }
#endif
    if (failure) std::rethrow_exception(failure);
}

Element parallel_reduce(const Semiring& s, std::size_t count,
                        const std::function<Element(std::size_t)>& fn) {
    std::exception_ptr failure = nullptr;
    Element total = s.zero();
#ifdef _OPENMP
#pragma omp parallel
    {
        Element local = s.zero();
#pragma omp for schedule(static) nowait
        for (long long i = 0; i < static_cast<long long>(count); ++i) {
            try {
                local = s.add(local, fn(static_cast<std::size_t>(i)));
            } catch (...) {
#pragma omp critical(semiper_reduce_fail)
                if (!failure) failure = std::current_exception();
            }
        }
#pragma omp critical(semiper_reduce_join)
        total = s.add(total, local);
    }
#else
    for (std::size_t i = 0; i < count; ++i) {
        try {
            total = s.add(total, fn(i));
        } catch (...) {
            if (!failure) failure = std::current_exception();
        }
    }
#endif
    if (failure) std::rethrow_exception(failure);
    return total;
}

}  // namespace semiper
