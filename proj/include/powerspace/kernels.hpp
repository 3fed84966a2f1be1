#pragma once

#include <cstddef>
#include <vector>

#include "powerspace/point_set.hpp"

namespace powerspace {

class FiniteSpace;

// Hot loops behind every powerspace construction. Each kernel has a serial
// reference and an OpenMP version; both return identical, canonically sorted
// output so the tests can compare them directly.

/// All upper sets of the specialization order. Throws PowerspaceTooLarge once
/// more than `cap` sets have been produced.
std::vector<PtSet> upper_sets_serial(const FiniteSpace& space, std::size_t cap);
std::vector<PtSet> upper_sets_parallel(const FiniteSpace& space, std::size_t cap, int threads = 0);

/// Minimal neighbourhoods of the topology on {0..n-1} generated by `subbasis`.
std::vector<PtSet> generated_up_sets_serial(std::size_t n, const std::vector<PtSet>& subbasis);
std::vector<PtSet> generated_up_sets_parallel(std::size_t n, const std::vector<PtSet>& subbasis,
                                              int threads = 0);

}  // namespace powerspace
