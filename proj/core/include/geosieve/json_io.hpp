#ifndef GEOSIEVE_JSON_IO_HPP
#define GEOSIEVE_JSON_IO_HPP

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include <geosieve/bigint.hpp>
#include <geosieve/dowling.hpp>
#include <geosieve/matroid.hpp>
#include <geosieve/poset.hpp>
#include <geosieve/sieve.hpp>

// Text formats shared by the CLI and the tests. All parse failures raise
// geosieve_error(parse_error).
namespace geosieve::io
{

inline constexpr std::size_t default_cap_elements = 100000;

// {"n": int, "covers": [[i,j],...], "labels": [str,...]?}
FiniteLattice lattice_from_json(std::string_view text);
std::string lattice_to_json(const FiniteLattice &L);

// {"type":"uniform","k":int,"n":int}
// {"type":"graphic","vertices":int,"edges":[[u,v],...]}
// {"type":"explicit","n":int,"independents":[[...],...]}
Matroid matroid_from_json(std::string_view text);

// Upper bound on the number of elements a named generator would produce,
// computed without enumerating anything. Throws parse_error for unknown names.
BigInt generator_size_estimate(std::string_view name);

bool is_generator_name(std::string_view spec);

// Resolves a lattice argument: a generator name ("boolean:n", "partition:n",
// "dowling:n:m", "uniform:k:n", "graphic:kN", "chain:n", "divisor:N"), a
// lattice JSON file or a matroid JSON file (flats of its simplification).
// Throws too_large when the lattice would exceed cap_elements.
FiniteLattice load_lattice(const std::string &spec, std::size_t cap_elements = default_cap_elements);

// Same resolution for matroid arguments ("uniform:k:n", "graphic:kN",
// "free:n" or a matroid JSON file).
Matroid load_matroid(const std::string &spec);

// {"lattice": <lattice JSON object or generator name>, "A": [...] | "all",
//  "T": [atom indices], "f": ["p/q", ...], "X": "p/q"}
SieveInstance sieve_from_json(std::string_view text, std::size_t cap_elements = default_cap_elements);

// Header "kind,m,r" then one "n,k,value" line per entry.
std::string triangle_to_csv(const WhitneyTriangle &t);

// A JSON array of integers or "p/q" strings, or a single CSV row.
std::vector<Rational> parse_sequence(std::string_view text);

std::string read_file(const std::string &path);

} // namespace geosieve::io

#endif
