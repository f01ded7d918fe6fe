#pragma once

#include <functional>

#include "semiper/semiring.hpp"

namespace semiper {

/// How many worker threads the parallel kernels will use.
unsigned parallel_workers();

/// Run fn(0), ..., fn(count-1), possibly in parallel. Iterations must be
/// independent. The first exception thrown by any iteration is rethrown.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn);

/// Semiring-add reduction of fn(0), ..., fn(count-1). Addition is
/// commutative and associative, so every evaluation order produces the
/// identical exact element; parallel and serial runs agree bit for bit.
Element parallel_reduce(const Semiring& s, std::size_t count,
                        const std::function<Element(std::size_t)>& fn);

}  // namespace semiper
