#include <geosieve/json_io.hpp>

#include <fstream>
#include <sstream>

#include <json.hpp>

#include <geosieve/errors.hpp>
#include <geosieve/lattice_generators.hpp>

namespace geosieve::io
{

using nlohmann::json;

namespace
{

json parse_json(std::string_view text)
{
    try {
        return json::parse(text);
    } catch (const json::exception &e) {
        raise(error_code::parse_error, e.what());
    }
}

template <typename T>
T get_field(const json &j, const char *key)
{
    if (!j.is_object() || !j.contains(key)) {
        raise(error_code::parse_error, std::string("missing field '") + key + "'");
    }
    try {
        return j.at(key).get<T>();
    } catch (const json::exception &e) {
        raise(error_code::parse_error, std::string("field '") + key + "': " + e.what());
    }
}

std::vector<std::string> split(std::string_view s, char sep)
{
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        const auto pos = s.find(sep, start);
        out.emplace_back(s.substr(start, pos - start));
        if (pos == std::string_view::npos) {
            break;
        }
        start = pos + 1;
    }
    return out;
}

unsigned to_unsigned(const std::string &s)
{
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos || s.size() > 9) {
        raise(error_code::parse_error, "expected a non-negative integer, got '" + s + "'");
    }
    return static_cast<unsigned>(std::stoul(s));
}

// "k4" -> 4.
unsigned complete_graph_order(const std::string &s)
{
    if (s.size() < 2 || (s[0] != 'k' && s[0] != 'K')) {
        raise(error_code::parse_error, "graphic generator expects kN, got '" + s + "'");
    }
    return to_unsigned(s.substr(1));
}

BigInt bell(unsigned n)
{
    // Bell triangle.
    std::vector<BigInt> row{BigInt(1)};
    for (unsigned i = 1; i <= n; ++i) {
        std::vector<BigInt> next{row.back()};
        for (const auto &v : row) {
            next.push_back(next.back() + v);
        }
        row = std::move(next);
    }
    return row.front();
}

BigInt binomial(unsigned n, unsigned k)
{
    BigInt r = 1;
    for (unsigned i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
    }
    return r;
}

FiniteLattice flats_of(const Matroid &M)
{
    const auto simple = simplify(M);
    return flats_lattice(simple.matroid).lattice;
}

void check_cap(const BigInt &estimate, std::size_t cap, std::string_view what)
{
    if (estimate > cap) {
        raise(error_code::too_large, std::string(what) + " would have " + estimate.str()
                                         + " elements, above the cap of " + std::to_string(cap));
    }
}

} // namespace

FiniteLattice lattice_from_json(std::string_view text)
{
    const auto j = parse_json(text);
    const auto n = get_field<std::size_t>(j, "n");
    const auto pairs = get_field<std::vector<std::vector<std::size_t>>>(j, "covers");
    std::vector<Cover> covers;
    covers.reserve(pairs.size());
    for (const auto &p : pairs) {
        if (p.size() != 2) {
            raise(error_code::parse_error, "each cover must be a pair [i, j]");
        }
        covers.emplace_back(p[0], p[1]);
    }
    std::vector<std::string> labels;
    if (j.contains("labels")) {
        labels = get_field<std::vector<std::string>>(j, "labels");
    }
    return FiniteLattice::build(covers, n, std::move(labels));
}

std::string lattice_to_json(const FiniteLattice &L)
{
    json j;
    j["n"] = L.size();
    json covers = json::array();
    for (const auto &[x, y] : L.covers()) {
        covers.push_back({x, y});
    }
    j["covers"] = std::move(covers);
    if (!L.labels().empty()) {
        j["labels"] = L.labels();
    }
    return j.dump();
}

Matroid matroid_from_json(std::string_view text)
{
    const auto j = parse_json(text);
    const auto type = get_field<std::string>(j, "type");
    if (type == "uniform") {
        return Matroid::uniform(get_field<unsigned>(j, "k"), get_field<unsigned>(j, "n"));
    }
    if (type == "graphic") {
        const auto raw = get_field<std::vector<std::vector<unsigned>>>(j, "edges");
        std::vector<std::pair<unsigned, unsigned>> edges;
        for (const auto &e : raw) {
            if (e.size() != 2) {
                raise(error_code::parse_error, "each edge must be a pair [u, v]");
            }
            edges.emplace_back(e[0], e[1]);
        }
        return Matroid::graphic(get_field<unsigned>(j, "vertices"), std::move(edges));
    }
    if (type == "explicit") {
        const auto n = get_field<unsigned>(j, "n");
        const auto sets = get_field<std::vector<std::vector<unsigned>>>(j, "independents");
        std::vector<Subset> family;
        for (const auto &s : sets) {
            Subset mask = 0;
            for (auto e : s) {
                if (e >= n || e >= 64) {
                    raise(error_code::parse_error, "independent set element out of range");
                }
                mask |= Subset{1} << e;
            }
            family.push_back(mask);
        }
        return Matroid::from_independents(n, std::move(family));
    }
    raise(error_code::parse_error, "unknown matroid type '" + type + "'");
}

bool is_generator_name(std::string_view spec)
{
    const auto parts = split(spec, ':');
    if (parts.size() < 2) {
        return false;
    }
    static const char *names[] = {"boolean", "partition", "dowling", "uniform", "graphic", "chain", "divisor", "free"};
    for (auto n : names) {
        if (parts[0] == n) {
            return true;
        }
    }
    return false;
}

BigInt generator_size_estimate(std::string_view name)
{
    const auto parts = split(name, ':');
    const auto &kind = parts[0];
    if (kind == "boolean" && parts.size() == 2) {
        return BigInt(1) << to_unsigned(parts[1]);
    }
    if (kind == "free" && parts.size() == 2) {
        return BigInt(1) << to_unsigned(parts[1]);
    }
    if (kind == "partition" && parts.size() == 2) {
        return bell(to_unsigned(parts[1]));
    }
    if (kind == "dowling" && parts.size() == 3) {
        const auto m = to_unsigned(parts[2]);
        if (m == 0) {
            raise(error_code::parse_error, "dowling generator needs m >= 1");
        }
        return dowling_number(m, to_unsigned(parts[1]));
    }
    if (kind == "uniform" && parts.size() == 3) {
        const auto k = to_unsigned(parts[1]);
        const auto n = to_unsigned(parts[2]);
        BigInt total = 1;
        for (unsigned i = 0; i < k && i <= n; ++i) {
            total += binomial(n, i);
        }
        return total;
    }
    if (kind == "graphic" && parts.size() == 2) {
        return bell(complete_graph_order(parts[1]));
    }
    if (kind == "chain" && parts.size() == 2) {
        return BigInt(to_unsigned(parts[1])) + 1;
    }
    if (kind == "divisor" && parts.size() == 2) {
        return BigInt(to_unsigned(parts[1]));
    }
    raise(error_code::parse_error, "unknown generator '" + std::string(name) + "'");
}

Matroid load_matroid(const std::string &spec)
{
    if (is_generator_name(spec)) {
        const auto parts = split(spec, ':');
        if (parts[0] == "uniform" && parts.size() == 3) {
            return Matroid::uniform(to_unsigned(parts[1]), to_unsigned(parts[2]));
        }
        if (parts[0] == "graphic" && parts.size() == 2) {
            return Matroid::complete_graph(complete_graph_order(parts[1]));
        }
        if (parts[0] == "free" && parts.size() == 2) {
            return Matroid::free_matroid(to_unsigned(parts[1]));
        }
        raise(error_code::parse_error, "'" + spec + "' does not name a matroid");
    }
    return matroid_from_json(read_file(spec));
}

FiniteLattice load_lattice(const std::string &spec, std::size_t cap_elements)
{
    if (is_generator_name(spec)) {
        check_cap(generator_size_estimate(spec), cap_elements, spec);
        const auto parts = split(spec, ':');
        const auto &kind = parts[0];
        if (kind == "boolean") {
            return boolean_lattice(to_unsigned(parts[1]));
        }
        if (kind == "partition") {
            return partition_lattice(to_unsigned(parts[1]));
        }
        if (kind == "dowling") {
            DowlingCaps caps;
            caps.max_n = 12;
            caps.max_m = 64;
            return build_Qn(to_unsigned(parts[1]), to_unsigned(parts[2]), caps).lattice;
        }
        if (kind == "chain") {
            return chain_lattice(to_unsigned(parts[1]));
        }
        if (kind == "divisor") {
            return divisor_lattice(to_unsigned(parts[1]));
        }
        return flats_of(load_matroid(spec));
    }
    const auto text = read_file(spec);
    const auto j = parse_json(text);
    if (j.is_object() && j.contains("type")) {
        return flats_of(matroid_from_json(text));
    }
    check_cap(BigInt(get_field<std::size_t>(j, "n")), cap_elements, spec);
    return lattice_from_json(text);
}

SieveInstance sieve_from_json(std::string_view text, std::size_t cap_elements)
{
    const auto j = parse_json(text);
    if (!j.is_object() || !j.contains("lattice")) {
        raise(error_code::parse_error, "missing field 'lattice'");
    }
    std::shared_ptr<const FiniteLattice> L;
    const auto &lat = j.at("lattice");
    if (lat.is_string()) {
        const auto name = lat.get<std::string>();
        if (!is_generator_name(name)) {
            raise(error_code::parse_error, "'" + name + "' is not a lattice generator");
        }
        L = std::make_shared<const FiniteLattice>(load_lattice(name, cap_elements));
    } else {
        if (lat.is_object() && lat.contains("n")) {
            check_cap(BigInt(lat.at("n").get<std::size_t>()), cap_elements, "sieve lattice");
        }
        L = std::make_shared<const FiniteLattice>(lattice_from_json(lat.dump()));
    }

    std::vector<std::size_t> A;
    if (!j.contains("A")) {
        raise(error_code::parse_error, "missing field 'A'");
    }
    if (j.at("A").is_string()) {
        if (j.at("A").get<std::string>() != "all") {
            raise(error_code::parse_error, "'A' must be an index list or \"all\"");
        }
        A = SieveInstance::all_elements(*L);
    } else {
        A = get_field<std::vector<std::size_t>>(j, "A");
    }
    const auto T = get_field<std::vector<std::size_t>>(j, "T");

    std::vector<Rational> f;
    if (!j.contains("f") || !j.at("f").is_array()) {
        raise(error_code::parse_error, "field 'f' must be an array");
    }
    for (const auto &v : j.at("f")) {
        f.push_back(v.is_string() ? parse_rational(v.get<std::string>()) : parse_rational(v.dump()));
    }
    if (!j.contains("X")) {
        raise(error_code::parse_error, "missing field 'X'");
    }
    const auto &xv = j.at("X");
    const Rational X = xv.is_string() ? parse_rational(xv.get<std::string>()) : parse_rational(xv.dump());
    return SieveInstance::make(std::move(L), std::move(A), T, std::move(f), X);
}

std::string triangle_to_csv(const WhitneyTriangle &t)
{
    std::ostringstream os;
    os << "kind,m,r\n";
    os << (t.kind == WhitneyTriangle::Kind::first ? "first" : "second") << ',' << t.m << ',' << t.r << '\n';
    for (std::size_t n = 0; n < t.rows.size(); ++n) {
        for (std::size_t k = 0; k < t.rows[n].size(); ++k) {
            os << n << ',' << k << ',' << t.rows[n][k] << '\n';
        }
    }
    return os.str();
}

std::vector<Rational> parse_sequence(std::string_view text)
{
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) {
        raise(error_code::parse_error, "empty sequence");
    }
    std::vector<Rational> out;
    if (text[first] == '[') {
        const auto j = parse_json(text);
        if (!j.is_array()) {
            raise(error_code::parse_error, "sequence must be a JSON array");
        }
        for (const auto &v : j) {
            if (v.is_string()) {
                out.push_back(parse_rational(v.get<std::string>()));
            } else if (v.is_number_integer()) {
                out.push_back(parse_rational(v.dump()));
            } else {
                raise(error_code::parse_error, "sequence entries must be integers or \"p/q\" strings");
            }
        }
        return out;
    }
    for (auto cell : split(text, ',')) {
        const auto b = cell.find_first_not_of(" \t\r\n");
        const auto e = cell.find_last_not_of(" \t\r\n");
        if (b == std::string::npos) {
            raise(error_code::parse_error, "empty CSV cell");
        }
        out.push_back(parse_rational(cell.substr(b, e - b + 1)));
    }
    return out;
}

std::string read_file(const std::string &path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        raise(error_code::parse_error, "cannot open '" + path + "'");
    }
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

} // namespace geosieve::io
