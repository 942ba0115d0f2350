#include <geosieve/lattice_generators.hpp>

#include <algorithm>
#include <map>
#include <string>

#include <geosieve/errors.hpp>

namespace geosieve
{

namespace
{

std::string subset_label(unsigned mask, unsigned n)
{
    std::string s = "{";
    bool first = true;
    for (unsigned i = 0; i < n; ++i) {
        if (mask & (1u << i)) {
            if (!first) {
                s += ",";
            }
            s += std::to_string(i + 1);
            first = false;
        }
    }
    return s + "}";
}

std::string partition_label(const std::vector<unsigned> &rgs)
{
    const unsigned nblocks = rgs.empty() ? 0 : *std::max_element(rgs.begin(), rgs.end()) + 1;
    std::string s;
    for (unsigned b = 0; b < nblocks; ++b) {
        s += "{";
        bool first = true;
        for (std::size_t i = 0; i < rgs.size(); ++i) {
            if (rgs[i] == b) {
                if (!first) {
                    s += ",";
                }
                s += std::to_string(i + 1);
                first = false;
            }
        }
        s += "}";
    }
    return s;
}

// Relabels blocks in order of first appearance.
std::vector<unsigned> normalize(const std::vector<unsigned> &groups)
{
    std::map<unsigned, unsigned> renum;
    std::vector<unsigned> out(groups.size());
    for (std::size_t i = 0; i < groups.size(); ++i) {
        auto [it, fresh] = renum.try_emplace(groups[i], static_cast<unsigned>(renum.size()));
        out[i] = it->second;
    }
    return out;
}

} // namespace

FiniteLattice chain_lattice(unsigned length)
{
    std::vector<Cover> covers;
    for (unsigned i = 0; i < length; ++i) {
        covers.emplace_back(i, i + 1);
    }
    return FiniteLattice::build(covers, length + 1);
}

FiniteLattice boolean_lattice(unsigned n)
{
    if (n > 20) {
        raise(error_code::too_large, "boolean lattice with n > 20");
    }
    const unsigned size = 1u << n;
    std::vector<Cover> covers;
    std::vector<std::string> labels;
    for (unsigned mask = 0; mask < size; ++mask) {
        labels.push_back(subset_label(mask, n));
        for (unsigned i = 0; i < n; ++i) {
            if (!(mask & (1u << i))) {
                covers.emplace_back(mask, mask | (1u << i));
            }
        }
    }
    return FiniteLattice::build(covers, size, std::move(labels));
}

std::vector<std::vector<unsigned>> set_partitions(unsigned n)
{
    std::vector<std::vector<unsigned>> out;
    if (n == 0) {
        out.emplace_back();
        return out;
    }
    std::vector<unsigned> rgs(n, 0), maxes(n, 0);
    while (true) {
        out.push_back(rgs);
        // Advance to the next restricted growth string.
        int i = static_cast<int>(n) - 1;
        while (i > 0 && rgs[i] == maxes[i - 1] + 1) {
            --i;
        }
        if (i == 0) {
            break;
        }
        ++rgs[i];
        maxes[i] = std::max(maxes[i - 1], rgs[i]);
        for (unsigned j = i + 1; j < n; ++j) {
            rgs[j] = 0;
            maxes[j] = maxes[i];
        }
    }
    return out;
}

FiniteLattice partition_lattice(unsigned n)
{
    if (n == 0 || n > 9) {
        raise(error_code::too_large, "partition lattice supports 1 <= n <= 9");
    }
    const auto parts = set_partitions(n);
    std::map<std::vector<unsigned>, std::size_t> index;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        index.emplace(parts[i], i);
    }
    std::vector<Cover> covers;
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        const auto &p = parts[i];
        labels.push_back(partition_label(p));
        const unsigned nblocks = *std::max_element(p.begin(), p.end()) + 1;
        for (unsigned a = 0; a < nblocks; ++a) {
            for (unsigned b = a + 1; b < nblocks; ++b) {
                auto merged = p;
                std::replace(merged.begin(), merged.end(), b, a);
                covers.emplace_back(i, index.at(normalize(merged)));
            }
        }
    }
    return FiniteLattice::build(covers, parts.size(), std::move(labels));
}

FiniteLattice divisor_lattice(unsigned N)
{
    if (N == 0) {
        raise(error_code::bad_params, "divisor lattice of 0");
    }
    std::vector<unsigned> divs;
    for (unsigned d = 1; d <= N; ++d) {
        if (N % d == 0) {
            divs.push_back(d);
        }
    }
    std::vector<Cover> covers;
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < divs.size(); ++i) {
        labels.push_back(std::to_string(divs[i]));
        for (std::size_t j = i + 1; j < divs.size(); ++j) {
            const unsigned q = divs[j] / divs[i];
            if (divs[j] % divs[i] != 0) {
                continue;
            }
            bool prime = q > 1;
            for (unsigned p = 2; p * p <= q && prime; ++p) {
                prime = q % p != 0;
            }
            if (prime) {
                covers.emplace_back(i, j);
            }
        }
    }
    return FiniteLattice::build(covers, divs.size(), std::move(labels));
}

} // namespace geosieve
