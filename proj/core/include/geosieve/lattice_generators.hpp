#ifndef GEOSIEVE_LATTICE_GENERATORS_HPP
#define GEOSIEVE_LATTICE_GENERATORS_HPP

#include <cstddef>
#include <vector>

#include <geosieve/poset.hpp>

namespace geosieve
{

// Chain 0 <: 1 <: ... <: length.
FiniteLattice chain_lattice(unsigned length);

// Subsets of {1..n} under inclusion; element i is the subset with bitmask i.
FiniteLattice boolean_lattice(unsigned n);

// Set partitions of {1..n} under refinement (bottom = all singletons).
FiniteLattice partition_lattice(unsigned n);

// Restricted growth strings of the partitions of {0..n-1}, in the element
// order used by partition_lattice(n).
std::vector<std::vector<unsigned>> set_partitions(unsigned n);

// Divisors of N under divisibility.
FiniteLattice divisor_lattice(unsigned N);

} // namespace geosieve

#endif
