#include <gtest/gtest.h>

#include <filesystem>
#include <random>

#include "oracles.hpp"
#include "udg/udg.hpp"

using namespace udg;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
  const auto dir = fs::temp_directory_path() / "udg_io_tests";
  fs::create_directories(dir);
  return dir / name;
}

std::size_t parse_error_offset(std::string_view text) {
  try {
    (void)io::parse_graph(text);
  } catch (const io::ParseError& e) {
    return e.offset();
  }
  ADD_FAILURE() << "no parse error";
  return 0;
}

}  // namespace

TEST(GraphFile, C52Header) {
  const auto text = io::serialize_graph(hamming_graph(5, 2).graph);
  EXPECT_EQ(text.substr(0, text.find('\n')), "p edge 32 160");
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 161);
  EXPECT_EQ(text.back(), '\n');
}

TEST(GraphFile, EmptyGraph) {
  EXPECT_EQ(io::serialize_graph(Graph{}), "p edge 0 0\n");
  EXPECT_EQ(io::parse_graph("p edge 0 0\n").vertex_count(), 0);
  EXPECT_EQ(io::parse_graph("p edge 5 0\n").vertex_count(), 5);
}

TEST(GraphFile, Rejections) {
  EXPECT_THROW(io::parse_graph("p edge 5 1\ne 5 5\n"), io::ParseError);
  try {
    io::parse_graph("p edge 5 1\ne 5 5\n");
  } catch (const io::ParseError& e) {
    EXPECT_EQ(e.line(), 2);
    EXPECT_NE(std::string(e.what()).find("self-loop"), std::string::npos);
  }
  EXPECT_THROW(io::parse_graph("p edge 3 2\ne 1 2\n"), io::ParseError);           // count mismatch
  EXPECT_THROW(io::parse_graph("p edge 3 2\ne 1 2\ne 2 1\n"), io::ParseError);    // duplicate
  EXPECT_THROW(io::parse_graph("p edge 3 1\ne 1 4\n"), io::ParseError);           // out of range
  EXPECT_THROW(io::parse_graph("e 1 2\n"), io::ParseError);                       // no problem line
  EXPECT_THROW(io::parse_graph("p edge 3 1\ne 1 x\n"), io::ParseError);
  EXPECT_THROW(io::parse_graph("p edge 3 1\nq 1 2\n"), io::ParseError);
  EXPECT_EQ(io::parse_graph("c comment\np edge 3 1\ne 2 3\n").edge_count(), 1);
}

TEST(GraphFile, TruncatedFileReportsByteOffset) {
  const std::string full = io::serialize_graph(hamming_graph(3, 2).graph);
  const std::string cut = full.substr(0, full.size() - 2);
  EXPECT_EQ(parse_error_offset(cut), cut.size());  // the unterminated last line runs to end of input
  try {
    io::parse_graph(cut);
  } catch (const io::ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("byte"), std::string::npos);
  }
}

TEST(GraphFile, RoundTripIsByteStable) {
  std::mt19937_64 rng(123);
  std::vector<Graph> fixtures = {Graph{}, edgeless_graph(5), hamming_graph(5, 2).graph, half_cube(10, 4).graph,
                                 slice_graph(10, 4, 5).graph, build_g0().graph};
  for (int k = 0; k < 30; ++k) fixtures.push_back(oracle::random_graph(1 + static_cast<int>(rng() % 40), 0.3, rng));
  for (const auto& g : fixtures) {
    const auto once = io::serialize_graph(g);
    const auto parsed = io::parse_graph(once);
    ASSERT_EQ(parsed, g);
    ASSERT_EQ(io::serialize_graph(parsed), once);
  }
}

TEST(GraphFile, ReadWriteFiles) {
  const auto path = scratch("h52.graph").string();
  const auto g = half_cube(5, 2).graph;
  io::write_graph(path, g);
  const auto back = io::read_graph(path);
  EXPECT_EQ(back.name(), "h52.graph");
  EXPECT_EQ(io::graph_hash(back), io::graph_hash(g));
  EXPECT_EQ(io::graph_hash(g).size(), 64U);
  EXPECT_THROW(io::read_graph(scratch("missing.graph").string()), std::runtime_error);
}

TEST(Sha256, KnownVector) {
  EXPECT_EQ(io::sha256_hex("abc"), "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST(Sidecar, RoundTripAndRebuild) {
  for (const auto& gg : {hamming_graph(5, 2), half_cube(6, 4), slice_graph(8, 4, 3), build_g0()}) {
    const auto text = io::serialize_sidecar(gg.cloud, gg.graph);
    const auto sc = io::parse_sidecar(text);
    EXPECT_EQ(sc.cloud.points, gg.cloud.points);
    EXPECT_EQ(sc.cloud.adjacency_sq_dist, gg.cloud.adjacency_sq_dist);
    EXPECT_TRUE(io::sidecar_matches(sc, gg.graph));
    EXPECT_EQ(io::serialize_sidecar(sc.cloud, gg.graph), text);
  }
  const auto c = hamming_graph(4, 2);
  EXPECT_FALSE(io::sidecar_matches(io::parse_sidecar(io::serialize_sidecar(c.cloud, c.graph)),
                                   hamming_graph(4, 4).graph));
}

TEST(Witness, IndependentSetForH52) {
  const auto g = half_cube(5, 2).graph;
  const auto r = max_independent_set(g);
  const auto w = io::independent_set_witness(g, r.witness);
  EXPECT_EQ(w.members.size(), 2U);
  const auto text = io::serialize_witness(w);
  const auto back = io::parse_witness(text);
  EXPECT_EQ(back.members, w.members);
  EXPECT_EQ(io::serialize_witness(back), text);
  EXPECT_NO_THROW(io::validate_witness(back, g));

  const auto path = scratch("h52.witness").string();
  io::write_witness(path, w);
  EXPECT_EQ(io::read_witness(path, g).size, 2);
}

TEST(Witness, HashMismatchIsDetected) {
  const auto g = half_cube(5, 2).graph;
  const auto w = io::independent_set_witness(g, max_independent_set(g).witness);
  try {
    io::validate_witness(w, half_cube(5, 4).graph);
    FAIL() << "expected WitnessMismatch";
  } catch (const io::WitnessMismatch& e) {
    EXPECT_STREQ(e.what(), "witness does not match graph");
  }
}

TEST(Witness, ProducerIsNotTrusted) {
  const auto g = half_cube(5, 2).graph;
  auto w = io::independent_set_witness(g, max_independent_set(g).witness);
  w.members = {0, g.neighbors(0).members().front()};
  EXPECT_THROW(io::validate_witness(w, g), io::WitnessMismatch);
}

TEST(Witness, ColoringOfC64) {
  const auto g = hamming_graph(6, 4).graph;
  const auto r = chromatic_number(g);
  ASSERT_EQ(r.chi(), 7);
  const auto w = io::coloring_witness(g, r.coloring);
  const auto text = io::serialize_witness(w);
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 3 + 64);
  const auto back = io::parse_witness(text);
  EXPECT_EQ(back.size, 7);
  EXPECT_EQ(*std::max_element(back.colors.begin(), back.colors.end()), 7);
  EXPECT_NO_THROW(io::validate_witness(back, g));
  EXPECT_EQ(io::serialize_witness(back), text);

  auto bad = back;
  bad.colors[0] = bad.colors[g.neighbors(0).members().front()];
  EXPECT_THROW(io::validate_witness(bad, g), io::WitnessMismatch);
}

TEST(Witness, TruncatedFile) {
  const auto g = half_cube(5, 2).graph;
  const auto text = io::serialize_witness(io::independent_set_witness(g, max_independent_set(g).witness));
  EXPECT_THROW(io::parse_witness(text.substr(0, text.size() - 1)), io::ParseError);
  EXPECT_THROW(io::parse_witness(text.substr(0, 20)), io::ParseError);
}

TEST(CertificateFile, RoundTrip) {
  const auto cert = published_certificate();
  const auto text = io::serialize_certificate(cert, std::string("pool_exhausted"));
  const auto back = io::parse_certificate(text);
  EXPECT_EQ(back.cert.points, cert.points);
  EXPECT_EQ(back.cert.claimed_alpha, 16);
  EXPECT_EQ(back.cert.claimed_chi_lower, 19);
  EXPECT_EQ(back.stop, "pool_exhausted");
  EXPECT_EQ(io::serialize_certificate(back.cert, back.stop), text);
  EXPECT_EQ(io::parse_point_list(text), cert.points);

  Certificate empty;
  empty.claimed_alpha = 16;
  empty.claimed_chi_lower = 15;
  EXPECT_EQ(io::serialize_certificate(empty), "base gosset-240\nalpha 16\nchi_lower 15\n");
  EXPECT_THROW(io::parse_certificate("base gosset-240\nalpha 16\n"), io::ParseError);
  EXPECT_THROW(io::parse_certificate("base gosset-240\nalpha 16\nchi_lower 15\n1 2 3\n"), io::ParseError);
}

TEST(CertificateFile, ShippedFileMatchesPublishedPoints) {
  const auto f = io::read_certificate(UDG_DATA_DIR "/e8_289.cert");
  EXPECT_EQ(f.cert.points, published_augmentation_points());
  EXPECT_EQ(f.cert.claimed_alpha, 16);
  EXPECT_EQ(f.cert.claimed_chi_lower, 19);
  EXPECT_EQ(f.cert.base, kGossetBaseId);
  EXPECT_EQ(io::serialize_certificate(f.cert, f.stop), io::read_file(UDG_DATA_DIR "/e8_289.cert"));
}
