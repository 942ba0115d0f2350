#include <geosieve/matroid.hpp>

#include <algorithm>
#include <bit>
#include <deque>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

#include <geosieve/errors.hpp>

namespace geosieve
{

namespace
{

void check_ground(unsigned n)
{
    if (n > max_ground_size) {
        raise(error_code::too_large, "ground set larger than " + std::to_string(max_ground_size));
    }
}

template <typename F>
void for_each_element(Subset a, F &&f)
{
    while (a != 0) {
        const auto i = static_cast<unsigned>(std::countr_zero(a));
        f(i);
        a &= a - 1;
    }
}

struct UnionFind {
    explicit UnionFind(unsigned n) : parent(n)
    {
        std::iota(parent.begin(), parent.end(), 0u);
    }
    unsigned find(unsigned x)
    {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    bool unite(unsigned a, unsigned b)
    {
        a = find(a);
        b = find(b);
        if (a == b) {
            return false;
        }
        parent[a] = b;
        return true;
    }
    std::vector<unsigned> parent;
};

} // namespace

Matroid Matroid::from_independents(unsigned ground_size, std::vector<Subset> independents)
{
    check_ground(ground_size);
    auto family = std::make_shared<std::unordered_set<Subset>>(independents.begin(), independents.end());
    const Subset ground_mask = ground_size == 0 ? 0 : (~Subset{0} >> (64 - ground_size));

    if (!family->contains(0)) {
        raise(error_code::invalid_matroid, "the empty set must be independent");
    }
    for (auto a : *family) {
        if ((a & ~ground_mask) != 0) {
            raise(error_code::invalid_matroid, "independent set " + subset_to_string(a) + " leaves the ground set");
        }
        bool closed = true;
        for_each_element(a, [&](unsigned i) { closed = closed && family->contains(a & ~(Subset{1} << i)); });
        if (!closed) {
            raise(error_code::invalid_matroid, "family not closed under subsets at " + subset_to_string(a));
        }
    }
    for (auto a : *family) {
        for (auto b : *family) {
            if (std::popcount(a) >= std::popcount(b)) {
                continue;
            }
            bool extends = false;
            for_each_element(b & ~a, [&](unsigned i) { extends = extends || family->contains(a | (Subset{1} << i)); });
            if (!extends) {
                raise(error_code::invalid_matroid,
                      "exchange property fails for " + subset_to_string(a) + " and " + subset_to_string(b));
            }
        }
    }

    Matroid M;
    M.m_ground_size = ground_size;
    M.m_kind = "explicit";
    M.m_rank = [family](Subset a) {
        Subset indep = 0;
        for_each_element(a, [&](unsigned i) {
            if (family->contains(indep | (Subset{1} << i))) {
                indep |= Subset{1} << i;
            }
        });
        return static_cast<unsigned>(std::popcount(indep));
    };
    return M;
}

Matroid Matroid::from_rank_oracle(unsigned ground_size, RankOracle oracle, std::string kind)
{
    check_ground(ground_size);
    Matroid M;
    M.m_ground_size = ground_size;
    M.m_kind = std::move(kind);
    M.m_rank = std::move(oracle);
    return M;
}

Matroid Matroid::uniform(unsigned k, unsigned n)
{
    if (k > n) {
        raise(error_code::invalid_matroid, "uniform matroid needs k <= n");
    }
    return from_rank_oracle(
        n, [k](Subset a) { return std::min(static_cast<unsigned>(std::popcount(a)), k); }, "uniform");
}

Matroid Matroid::graphic(unsigned vertices, std::vector<std::pair<unsigned, unsigned>> edges)
{
    for (const auto &[u, v] : edges) {
        if (u >= vertices || v >= vertices) {
            raise(error_code::invalid_matroid, "edge endpoint out of range");
        }
    }
    auto shared = std::make_shared<const std::vector<std::pair<unsigned, unsigned>>>(std::move(edges));
    const auto n = static_cast<unsigned>(shared->size());
    return from_rank_oracle(
        n,
        [vertices, shared](Subset a) {
            UnionFind uf(vertices);
            unsigned r = 0;
            for_each_element(a, [&](unsigned i) { r += uf.unite((*shared)[i].first, (*shared)[i].second); });
            return r;
        },
        "graphic");
}

Matroid Matroid::complete_graph(unsigned vertices)
{
    std::vector<std::pair<unsigned, unsigned>> edges;
    for (unsigned u = 0; u < vertices; ++u) {
        for (unsigned v = u + 1; v < vertices; ++v) {
            edges.emplace_back(u, v);
        }
    }
    return graphic(vertices, std::move(edges));
}

Matroid Matroid::free_matroid(unsigned n)
{
    return from_rank_oracle(n, [](Subset a) { return static_cast<unsigned>(std::popcount(a)); }, "free");
}

unsigned Matroid::rank_of(Subset a) const
{
    return m_rank(a & ground());
}

bool Matroid::is_independent(Subset a) const
{
    return rank_of(a) == static_cast<unsigned>(std::popcount(a));
}

Subset closure(const Matroid &M, Subset a)
{
    const auto r = M.rank_of(a);
    Subset out = a;
    for_each_element(M.ground() & ~a, [&](unsigned i) {
        if (M.rank_of(a | (Subset{1} << i)) == r) {
            out |= Subset{1} << i;
        }
    });
    return out;
}

bool is_flat(const Matroid &M, Subset a)
{
    return (a & ~M.ground()) == 0 && closure(M, a) == a;
}

std::vector<unsigned> loops(const Matroid &M)
{
    std::vector<unsigned> out;
    for (unsigned i = 0; i < M.ground_size(); ++i) {
        if (M.rank_of(Subset{1} << i) == 0) {
            out.push_back(i);
        }
    }
    return out;
}

std::vector<std::pair<unsigned, unsigned>> parallel_pairs(const Matroid &M)
{
    std::vector<std::pair<unsigned, unsigned>> out;
    for (unsigned i = 0; i < M.ground_size(); ++i) {
        for (unsigned j = i + 1; j < M.ground_size(); ++j) {
            const Subset pair = (Subset{1} << i) | (Subset{1} << j);
            if (M.rank_of(Subset{1} << i) == 1 && M.rank_of(Subset{1} << j) == 1 && M.rank_of(pair) == 1) {
                out.emplace_back(i, j);
            }
        }
    }
    return out;
}

bool is_simple(const Matroid &M)
{
    return loops(M).empty() && parallel_pairs(M).empty();
}

FlatsLattice flats_lattice(const Matroid &M, std::size_t max_flats)
{
    if (!loops(M).empty()) {
        raise(error_code::not_simple, "matroid has loops; simplify first");
    }
    if (!parallel_pairs(M).empty()) {
        raise(error_code::not_simple, "matroid has parallel elements; simplify first");
    }

    std::vector<Subset> flats;
    std::unordered_map<Subset, std::size_t> index;
    std::vector<Cover> covers;
    const Subset bottom = closure(M, 0);
    index.emplace(bottom, 0);
    flats.push_back(bottom);

    // Every cover of a flat F is cl(F + e) for some e outside F.
    for (std::size_t cur = 0; cur < flats.size(); ++cur) {
        const Subset F = flats[cur];
        std::vector<std::size_t> ups;
        for_each_element(M.ground() & ~F, [&](unsigned e) {
            const Subset G = closure(M, F | (Subset{1} << e));
            auto [it, fresh] = index.try_emplace(G, flats.size());
            if (fresh) {
                if (flats.size() >= max_flats) {
                    raise(error_code::too_large, "more than " + std::to_string(max_flats) + " flats");
                }
                flats.push_back(G);
            }
            ups.push_back(it->second);
        });
        std::sort(ups.begin(), ups.end());
        ups.erase(std::unique(ups.begin(), ups.end()), ups.end());
        for (auto u : ups) {
            covers.emplace_back(cur, u);
        }
    }

    std::vector<std::string> labels;
    labels.reserve(flats.size());
    for (auto F : flats) {
        labels.push_back(subset_to_string(F));
    }
    auto lattice = FiniteLattice::build(covers, flats.size(), std::move(labels));
    return FlatsLattice{std::move(lattice), std::move(flats)};
}

BigInt CharPoly::operator()(const BigInt &lambda) const
{
    BigInt acc = 0;
    for (const auto &c : coefficients) {
        acc = acc * lambda + c;
    }
    return acc;
}

CharPoly char_poly(const Matroid &M, unsigned cap)
{
    if (M.ground_size() > cap) {
        raise(error_code::too_large, "char_poly enumerates 2^E subsets; E=" + std::to_string(M.ground_size())
                                         + " exceeds cap " + std::to_string(cap));
    }
    const unsigned r = M.rank();
    std::vector<long long> acc(r + 1, 0);
    const Subset limit = Subset{1} << M.ground_size();
    for (Subset a = 0; a < limit; ++a) {
        acc[M.rank_of(a)] += (std::popcount(a) % 2 == 0) ? 1 : -1;
    }
    CharPoly p;
    for (auto v : acc) {
        p.coefficients.emplace_back(v);
    }
    return p;
}

BigInt mobius_via_closure(const Matroid &M, Subset flat)
{
    if (!is_flat(M, flat)) {
        raise(error_code::not_a_flat, subset_to_string(flat) + " is not a flat");
    }
    long long acc = 0;
    // Walk all submasks of the flat, including the empty one.
    Subset a = flat;
    while (true) {
        if (closure(M, a) == flat) {
            acc += (std::popcount(a) % 2 == 0) ? 1 : -1;
        }
        if (a == 0) {
            break;
        }
        a = (a - 1) & flat;
    }
    return BigInt(acc);
}

Simplification simplify(const Matroid &M)
{
    std::vector<std::optional<unsigned>> element_map(M.ground_size());
    std::vector<unsigned> reps;
    for (unsigned e = 0; e < M.ground_size(); ++e) {
        const Subset single = Subset{1} << e;
        if (M.rank_of(single) == 0) {
            continue;
        }
        for (unsigned i = 0; i < reps.size(); ++i) {
            if (M.rank_of(single | (Subset{1} << reps[i])) == 1) {
                element_map[e] = i;
                break;
            }
        }
        if (!element_map[e]) {
            element_map[e] = static_cast<unsigned>(reps.size());
            reps.push_back(e);
        }
    }

    auto parent = std::make_shared<const Matroid>(M);
    auto lift = reps;
    auto simple = Matroid::from_rank_oracle(
        static_cast<unsigned>(reps.size()),
        [parent, lift](Subset b) {
            Subset orig = 0;
            for_each_element(b, [&](unsigned i) { orig |= Subset{1} << lift[i]; });
            return parent->rank_of(orig);
        },
        "simplified " + M.kind());
    return Simplification{std::move(simple), std::move(element_map), std::move(reps)};
}

std::string subset_to_string(Subset a)
{
    std::string s = "{";
    bool first = true;
    for_each_element(a, [&](unsigned i) {
        if (!first) {
            s += ",";
        }
        s += std::to_string(i);
        first = false;
    });
    return s + "}";
}

} // namespace geosieve
