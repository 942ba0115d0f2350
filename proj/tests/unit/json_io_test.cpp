#include <string>

#include <gtest/gtest.h>

#include <geosieve/dowling.hpp>
#include <geosieve/errors.hpp>
#include <geosieve/json_io.hpp>
#include <geosieve/lattice_generators.hpp>

using namespace geosieve;

namespace
{

error_code code_of(const std::function<void()> &f)
{
    try {
        f();
    } catch (const geosieve_error &e) {
        return e.code();
    }
    ADD_FAILURE() << "no exception";
    return error_code::parse_error;
}

} // namespace

TEST(JsonIo, LatticeRoundTrip)
{
    const auto L = partition_lattice(4);
    const auto text = io::lattice_to_json(L);
    const auto M = io::lattice_from_json(text);
    EXPECT_EQ(M.size(), L.size());
    EXPECT_EQ(M.covers(), L.covers());
    EXPECT_EQ(M.labels(), L.labels());
    EXPECT_EQ(io::lattice_to_json(M), text);
}

TEST(JsonIo, LatticeParseErrors)
{
    EXPECT_EQ(code_of([] { io::lattice_from_json("{bad"); }), error_code::parse_error);
    EXPECT_EQ(code_of([] { io::lattice_from_json(R"({"covers": []})"); }), error_code::parse_error);
    EXPECT_EQ(code_of([] { io::lattice_from_json(R"({"n": 2, "covers": [[0, 1, 2]]})"); }), error_code::parse_error);
    EXPECT_EQ(code_of([] { io::lattice_from_json(R"({"n": 2, "covers": [[0, 7]]})"); }),
              error_code::index_out_of_range);
}

TEST(JsonIo, Generators)
{
    EXPECT_TRUE(io::is_generator_name("boolean:3"));
    EXPECT_TRUE(io::is_generator_name("dowling:3:2"));
    EXPECT_FALSE(io::is_generator_name("lattice.json"));
    EXPECT_EQ(io::load_lattice("boolean:3").size(), 8u);
    EXPECT_EQ(io::load_lattice("partition:4").size(), 15u);
    EXPECT_EQ(io::load_lattice("dowling:3:2").size(), 24u);
    EXPECT_EQ(io::load_lattice("uniform:2:4").size(), 6u);
    EXPECT_EQ(io::load_lattice("graphic:k4").size(), 15u);
    EXPECT_EQ(io::load_matroid("uniform:3:5").rank(), 3u);
}

TEST(JsonIo, CapIsEnforcedBeforeBuilding)
{
    EXPECT_EQ(code_of([] { io::load_lattice("boolean:40"); }), error_code::too_large);
    EXPECT_EQ(code_of([] { io::load_lattice("partition:8", 100); }), error_code::too_large);
}

TEST(JsonIo, MatroidJson)
{
    const auto U = io::matroid_from_json(R"({"type": "uniform", "k": 2, "n": 4})");
    EXPECT_EQ(U.ground_size(), 4u);
    const auto G = io::matroid_from_json(R"({"type": "graphic", "vertices": 3, "edges": [[0,1],[1,2],[0,2]]})");
    EXPECT_EQ(G.rank(), 2u);
}

TEST(JsonIo, SieveInstance)
{
    const auto inst = io::sieve_from_json(
        R"({"lattice": "boolean:2", "A": "all", "T": [1, 2], "f": ["1/4", "1/2", "1"], "X": "4"})");
    EXPECT_EQ(sifted_count_exact(inst), 1u);
    EXPECT_EQ(sieve_main_term(inst), 1);
    EXPECT_EQ(code_of([] { io::sieve_from_json(R"({"lattice": "boolean:2"})"); }), error_code::parse_error);
}

TEST(JsonIo, Sequences)
{
    const auto a = io::parse_sequence("[1, 3, \"3/2\", 1]");
    ASSERT_EQ(a.size(), 4u);
    EXPECT_EQ(a[2], Rational(3, 2));
    EXPECT_EQ(io::parse_sequence("1,3,3,1\n").size(), 4u);
    EXPECT_EQ(code_of([] { io::parse_sequence("1,x"); }), error_code::parse_error);
    EXPECT_EQ(code_of([] { io::parse_sequence("  "); }), error_code::parse_error);
}

TEST(JsonIo, TriangleCsv)
{
    const auto csv = io::triangle_to_csv(whitney_first_table(2, 2));
    EXPECT_EQ(csv, "kind,m,r\nfirst,2,1\n0,0,1\n1,0,-1\n1,1,1\n2,0,3\n2,1,-4\n2,2,1\n");
}
