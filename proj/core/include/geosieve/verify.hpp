#ifndef GEOSIEVE_VERIFY_HPP
#define GEOSIEVE_VERIFY_HPP

#include <functional>
#include <string>
#include <vector>

#include <geosieve/matroid.hpp>
#include <geosieve/poset.hpp>

// The full verification sweep behind `geosieve verify`: every identity and
// inequality the library implements, checked exactly on the standard
// instance zoo.
namespace geosieve::verify
{

struct ZooLattice {
    std::string name;
    FiniteLattice lattice;
};

struct ZooMatroid {
    std::string name;
    Matroid matroid;
};

// B_n (n <= 8), Pi_n (n <= 7), Q_n(Z_m) (n <= 4, m <= 3, plus Q_5(Z_2)),
// flats of U_{k,n} (n <= 8) and of the K_4 and K_5 graphic matroids.
std::vector<ZooLattice> lattice_zoo();
// Simple matroids of the zoo: U_{k,n} for 1 <= k <= n <= 8, K_4, K_5.
std::vector<ZooMatroid> matroid_zoo();

struct CheckResult {
    std::string name;
    std::string scope;
    bool passed = false;
    std::string detail;
};

struct Options {
    // "all", "lattice", "matroid", "dowling", "sieve", "asym" or "oracles".
    std::string scope = "all";
    // Skips the n = 400 asymptotic point.
    bool fast = false;
    unsigned digits = 50;
};

const std::vector<std::string> &scopes();

// Results sorted by check name. Throws bad_params for an unknown scope.
std::vector<CheckResult> run_checks(const Options &opts);

} // namespace geosieve::verify

#endif
