#include <gtest/gtest.h>

#include <fstream>

#include "knotrep/errors.hpp"
#include "knotrep/io.hpp"
#include "knotrep/presentation.hpp"

using namespace knotrep;
using io::json;

namespace {

std::shared_ptr<const PermRep> delta5() { return std::make_shared<const PermRep>(dihedral_rep({5, 3})); }

}  // namespace

TEST(Io, PresentationRoundTrip) {
  const Presentation p = two_bridge_sa_presentation({5, 3});
  const json j = io::to_json(p);
  EXPECT_EQ(j["relators"][0], "a^-1 s^-1 a s a^-1 s a s^-1 a^-1");
  const auto back = io::presentation_from_json(j);
  EXPECT_EQ(*back, p);
  EXPECT_TRUE(back->alphabet()->meridional(GeneratorId{0}));
  EXPECT_FALSE(back->alphabet()->meridional(GeneratorId{1}));

  const auto plain = io::presentation_from_json(json::parse(R"({"generators": ["x", "y"], "relators": ["x y x^-1 y^-1"]})"));
  EXPECT_EQ(plain->generator_count(), 2u);
}

TEST(Io, PresentationErrors) {
  EXPECT_THROW(io::presentation_from_json(json::parse(R"({"relators": []})")), InvalidInput);
  EXPECT_THROW(io::presentation_from_json(json::parse(R"({"generators": ["x"], "relators": ["q"]})")), InvalidInput);
  EXPECT_THROW(io::presentation_from_json(json::parse(R"({"generators": ["x"], "relators": 3})")), InvalidInput);
  EXPECT_THROW(io::presentation_from_json(json::parse(R"({"generators": ["x", "x"], "relators": []})")),
               InvalidInput);
}

TEST(Io, PermRepRoundTrip) {
  const auto d = delta5();
  const json j = io::to_json(*d);
  EXPECT_EQ(j["images"]["s"], "(2 5)(3 4)");
  EXPECT_EQ(j["images"]["a"], "(1 2 3 4 5)");
  const auto back = io::permrep_from_json(j);
  EXPECT_EQ(back->images(), d->images());

  json bad = j;
  bad["images"]["s"] = "(1 2)";
  EXPECT_THROW(io::permrep_from_json(bad), VerificationFailure);
  bad = j;
  bad["images"].erase("a");
  EXPECT_THROW(io::permrep_from_json(bad), InvalidInput);
}

TEST(Io, SubgroupRoundTripAndPoints) {
  const auto s = io::make_subgroup(delta5(), 0, false, "y");
  const json j = io::to_json(s);
  EXPECT_EQ(j["point"], 1);
  EXPECT_EQ(j["index"], 5);
  const auto back = io::subgroup_from_json(j);
  EXPECT_EQ(*back.sub->presentation(), *s.sub->presentation());

  json zero = j;
  zero["point"] = 0;
  EXPECT_THROW(io::subgroup_from_json(zero), InvalidInput);
  EXPECT_THROW(io::make_subgroup(delta5(), 5, false, "y"), InvalidInput);
  EXPECT_THROW(io::make_subgroup(delta5(), 5, true, "z"), InvalidInput);

  const auto n = io::make_subgroup(delta5(), 0, true, "z");
  EXPECT_EQ(n.sub->table().index(), 10u);
  EXPECT_EQ(n.sub->generators().size(), 11u);
}

TEST(Io, OtherPointsGiveConjugateStabilizers) {
  for (std::uint32_t p = 0; p < 5; ++p) {
    const auto s = io::make_subgroup(delta5(), p, false, "y");
    EXPECT_EQ(s.sub->generators().size(), 6u);
    EXPECT_TRUE(s.sub->round_trip_exact());
  }
}

TEST(Io, MatrixRoundTripIsExact) {
  const CMatrix m = random_sl(3, 42);
  EXPECT_EQ(io::matrix_from_json(io::matrix_to_json(m)), m);
  const CMatrix real = io::matrix_from_json(json::parse("[[1, 2], [3, 4]]"));
  EXPECT_EQ(real(1, 0), Complex(3, 0));
  EXPECT_THROW(io::matrix_from_json(json::parse("[[1, 2], [3]]")), InvalidInput);
  EXPECT_THROW(io::matrix_from_json(json::parse("[]")), InvalidInput);
  EXPECT_THROW(io::matrix_from_json(json::parse(R"([["a"]])")), InvalidInput);
}

TEST(Io, MatrixRepRoundTrip) {
  auto p = std::make_shared<const Presentation>(two_bridge_presentation({5, 3}));
  const MatrixRep triv = trivial_rep(p, 2);
  const json j = io::to_json(triv, true);
  EXPECT_EQ(j["n"], 2);
  const MatrixRep back = io::matrix_rep_from_json(j);
  EXPECT_EQ(back.images(), triv.images());
  EXPECT_EQ(back.tol(), triv.tol());

  json bad = j;
  bad["images"]["s"] = io::matrix_to_json(CMatrix::Identity(3, 3));
  EXPECT_THROW(io::matrix_rep_from_json(bad), InvalidInput);
  bad = j;
  bad["images"]["s"][0][0] = json::array({1.001, 0.0});
  EXPECT_THROW(io::matrix_rep_from_json(bad), VerificationFailure);
  EXPECT_NO_THROW(io::matrix_rep_from_json(bad, MatrixRep::Check::deferred));
}

TEST(Io, WordMapRoundTrip) {
  const Presentation st = two_bridge_presentation({5, 3});
  const Presentation sa = two_bridge_sa_presentation({5, 3});
  const WordMap f = st_to_sa_map(st, sa);
  const json j = io::to_json(f);
  const WordMap back = io::word_map_from_json(j, st.alphabet(), sa.alphabet());
  EXPECT_EQ(back.image(GeneratorId{1}), f.image(GeneratorId{1}));
  EXPECT_THROW(io::word_map_from_json(j, sa.alphabet(), st.alphabet()), InvalidInput);
}

TEST(Io, RankEstimateNonFiniteBecomesNull) {
  RankEstimate r;
  r.gap = std::numeric_limits<double>::infinity();
  EXPECT_TRUE(io::to_json(r)["gap"].is_null());
}

TEST(Io, FileErrors) {
  EXPECT_THROW(io::read_file("/nonexistent/knotrep.json"), InvalidInput);
  const auto path = std::filesystem::temp_directory_path() / "knotrep_io_test" / "bad.json";
  std::filesystem::create_directories(path.parent_path());
  {
    std::ofstream out(path);
    out << "{ not json";
  }
  EXPECT_THROW(io::read_file(path), InvalidInput);
  io::write_file(path, json{{"k", 1}});
  EXPECT_EQ(io::read_file(path)["k"], 1);
  std::filesystem::remove_all(path.parent_path());
}
