#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "knotrep/analysis.hpp"
#include "knotrep/cohomology.hpp"
#include "knotrep/io.hpp"

namespace knotrep::figure8 {

/// Published data for b(5, 3), the figure-eight knot. Words use the text
/// syntax of parse_word.
namespace reference {
inline constexpr const char* st_relator = "s t^-1 s^-1 t s t^-1 s t s^-1 t^-1";
inline constexpr const char* sa_relator = "a^-1 s^-1 a s a^-1 s a s^-1 a^-1";
inline constexpr const char* delta_s = "(2 5)(3 4)";
inline constexpr const char* delta_a = "(1 2 3 4 5)";
inline const std::vector<std::string> transversal{"1", "a", "a^2", "a^3", "a^4"};
inline const std::vector<std::string> y_expansions{"s",          "a s a^-4",   "a^2 s a^-3",
                                                   "a^3 s a^-2", "a^4 s a^-1", "a^5"};
inline const std::vector<std::string> h_relators{
    "y5^-1 y1^-1 y2^2 y1^-1", "y0^-1 y1 y3 y2^-1", "y4^-1 y5 y0 y5^-1 y4 y3^-1",
    "y3^-1 y4 y0 y4^-1",      "y2^-1 y3 y1 y5 y0^-1 y5^-1"};
/// psi(y0) .. psi(y5) in F(x, y).
inline const std::vector<std::string> psi_images{"1", "x", "x", "1", "y", "1"};
/// Generators of N = Ker(delta) written in the y's, as an unordered list.
inline const std::vector<std::string> n_generators{
    "y1 y0^-1", "y2 y0^-1", "y3 y0^-1", "y4 y0^-1", "y5",         "y0^2",
    "y0 y1",    "y0 y2",    "y0 y3",    "y0 y4",    "y0 y5 y0^-1"};

/// Block entries of the induced images with beta(x) = A, beta(y) = B.
enum class Block { zero, identity, a, b };
using Pattern = std::array<std::array<Block, 5>, 5>;
inline constexpr Block O = Block::zero, I = Block::identity, A = Block::a, B = Block::b;
inline constexpr Pattern rho_s{{{I, O, O, O, O},
                                {O, O, O, O, B},
                                {O, O, O, I, O},
                                {O, O, A, O, O},
                                {O, A, O, O, O}}};
inline constexpr Pattern rho_t{{{O, A, O, O, O},
                                {I, O, O, O, O},
                                {O, O, O, O, B},
                                {O, O, O, I, O},
                                {O, O, A, O, O}}};
}  // namespace reference

struct Bundle {
  PresentationPtr st;
  PresentationPtr sa;
  WordMap st_to_sa;
  WordMap sa_to_st;
  io::StoredSubgroup h;  // Stab(1) under delta, generators y0..y5
  io::StoredSubgroup n;  // Ker(delta), generators z0..z10
  PresentationPtr free2;
  FreeQuotient psi;

  const PermRep& delta() const { return *h.rep; }
};

/// Recomputes everything from (alpha, beta) = (5, 3).
Bundle build_bundle();

/// Checked-in bundle location (data/figure8 in the source tree).
std::filesystem::path default_bundle_dir();
void write_bundle(const Bundle& b, const std::filesystem::path& dir);
/// Reloads and re-verifies every file: delta is a homomorphism, both
/// subgroup presentations match their recomputation and round-trip
/// exactly, psi kills every relator of H.
Bundle load_bundle(const std::filesystem::path& dir);

struct CheckItem {
  std::string name;
  bool passed = false;
  /// Passed only through a weaker comparison.
  bool flagged = false;
  std::string detail;
};

struct Checklist {
  std::vector<CheckItem> items;
  bool passed() const;
  bool flagged() const;
};

/// Fresh recomputation against the published data and, when `dir` is
/// given, against the files stored there.
Checklist verify_bundle(const std::optional<std::filesystem::path>& dir = default_bundle_dir());

/// (beta o psi) on H for beta(x) = A, beta(y) = B.
MatrixRep alpha_rep(const Bundle& b, const CMatrix& a, const CMatrix& bm,
                    MatrixRep::Check check = MatrixRep::Check::on_construction);

struct Induced {
  MatrixRep sa;
  MatrixRep st;
};
Induced induce_figure8(const Bundle& b, const CMatrix& a, const CMatrix& bm,
                       std::optional<double> tol = std::nullopt,
                       MatrixRep::Check check = MatrixRep::Check::on_construction);

/// Largest entrywise deviation of rho from the block pattern filled with A, B.
double pattern_deviation(const CMatrix& rho, const reference::Pattern& pattern, const CMatrix& a,
                         const CMatrix& bm);

/// Irreducibility through disjointness of alpha|N from its twists by a and
/// a^2, separated at y0^2 = s^2. The witnesses are expected to be I, BA, A.
/// Throws InvalidInput when (A, B) is reducible.
MackeyVerdict mackey_check_figure8(const Bundle& b, const CMatrix& a, const CMatrix& bm,
                                   double tol = 1e-9);

/// (A, B) -> traces of the induced representation on `words` (over s, t).
TracePipeline character_pipeline(const Bundle& b, std::vector<Word> words);

struct Options {
  std::size_t m = 2;
  std::vector<std::uint64_t> seeds;
  double tol = 1e-9;
  /// Words of G for the character Jacobian and the fiber check.
  WordSample sample{};
  /// Words of N for the restriction identity.
  WordSample normal_sample{1, 50, 12, 0};
  std::size_t algebra_max_len = 8;
  double jacobian_step = 1e-5;
  /// When the character Jacobian falls short of m^2 - 1, the random part of
  /// the sample is doubled up to this many times before the shortfall counts.
  std::size_t jacobian_doublings = 3;

  /// Throws InvalidInput for odd or zero m, empty seeds or nonpositive tol.
  void validate() const;
};

enum class Verdict { pass, inconclusive, fail };
const char* to_string(Verdict v);

struct SeedReport {
  std::uint64_t seed = 0;
  Verdict verdict = Verdict::fail;
  std::vector<std::string> failures;
  std::vector<std::string> inconclusive;
  CMatrix a, b;

  std::size_t beta_algebra_dim = 0;
  bool precondition = false;
  double relation_residual_sa = 0;
  double relation_residual_st = 0;
  double pattern_deviation = 0;
  double det_deviation = 0;
  std::optional<MackeyVerdict> mackey;
  double witness_deviation = 0;
  std::size_t algebra_dim = 0;
  ResIndReport res_ind;
  std::optional<JacobianRank> jacobian;
  WordSample jacobian_sample;
  std::optional<DimReport> h1;
  std::optional<TraceVector> induced_character;
  std::optional<TraceVector> source_character;
};

struct PipelineReport {
  Options options;
  std::vector<SeedReport> seeds;
  FiberReport fibers;
  std::size_t passed = 0;
  std::size_t inconclusive = 0;
  std::size_t failed = 0;
};

/// All checks for one pair; stage errors are recorded, not thrown.
SeedReport run_figure8_pair(const Bundle& b, const CMatrix& a, const CMatrix& bm, const Options& opt);
/// Seeds run in parallel; the report lists them in the given order.
PipelineReport run_figure8(const Bundle& b, const Options& opt);

/// Matrices are included from verbosity 2 on.
io::json to_json(const SeedReport& r, int verbosity);
io::json to_json(const PipelineReport& r, int verbosity);
io::json to_json(const Checklist& c);

}  // namespace knotrep::figure8
