#include "knotrep/io.hpp"

#include <cmath>
#include <fstream>

#include <fmt/format.h>

#include "knotrep/errors.hpp"

namespace knotrep::io {

namespace {

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InvalidInput(fmt::format("missing field '{}'", key));
  return j.at(key);
}

template <typename T>
T get(const json& j, const char* key) {
  try {
    return field(j, key).get<T>();
  } catch (const json::exception& e) {
    throw InvalidInput(fmt::format("field '{}': {}", key, e.what()));
  }
}

std::vector<std::string> word_strings(const std::vector<Word>& words) {
  std::vector<std::string> out;
  for (const auto& w : words) out.push_back(to_string(w));
  return out;
}

}  // namespace

json to_json(const Presentation& p) {
  json gens = json::array();
  for (const auto& l : p.alphabet()->letters())
    gens.push_back({{"name", l.name}, {"meridional", l.meridional}});
  return {{"generators", gens}, {"relators", word_strings(p.relators())}};
}

PresentationPtr presentation_from_json(const json& j) {
  std::vector<Alphabet::Letter> letters;
  const auto& gens = field(j, "generators");
  if (!gens.is_array()) throw InvalidInput("'generators' must be an array");
  for (const auto& g : gens) {
    if (g.is_string())
      letters.push_back({g.get<std::string>(), false});
    else
      letters.push_back({get<std::string>(g, "name"), g.value("meridional", false)});
  }
  auto alphabet = Alphabet::make(std::move(letters));
  std::vector<Word> relators;
  for (const auto& r : get<std::vector<std::string>>(j, "relators"))
    relators.push_back(parse_word(alphabet, r));
  return std::make_shared<const Presentation>(alphabet, std::move(relators));
}

json to_json(const PermRep& rep) {
  json images = json::object();
  const auto& alphabet = *rep.presentation()->alphabet();
  for (std::uint32_t g = 0; g < alphabet.size(); ++g)
    images[alphabet.name(GeneratorId{g})] = rep.image(GeneratorId{g}).to_cycles();
  return {{"presentation", to_json(*rep.presentation())},
          {"degree", rep.degree()},
          {"images", images}};
}

std::shared_ptr<const PermRep> permrep_from_json(const json& j) {
  auto p = presentation_from_json(field(j, "presentation"));
  const auto degree = get<std::size_t>(j, "degree");
  const auto& images = field(j, "images");
  std::vector<Permutation> perms;
  for (const auto& l : p->alphabet()->letters()) {
    if (!images.contains(l.name)) throw InvalidInput(fmt::format("no image for generator '{}'", l.name));
    perms.push_back(Permutation::from_cycles(images.at(l.name).get<std::string>(), degree));
  }
  return std::make_shared<const PermRep>(p, std::move(perms));
}

StoredSubgroup make_subgroup(std::shared_ptr<const PermRep> rep, std::uint32_t point, bool kernel,
                             const std::string& prefix) {
  StoredSubgroup s{rep, point, kernel, prefix, nullptr};
  std::shared_ptr<const CosetTable> table;
  if (kernel) {
    if (point >= rep->degree()) throw InvalidInput("point outside the permutation degree");
    table = std::make_shared<const CosetTable>(std::make_shared<const PermRep>(regular_rep(*rep)), 0);
  } else {
    table = std::make_shared<const CosetTable>(rep, point);
  }
  s.sub = std::make_shared<const SubgroupPresentation>(table, prefix);
  if (!s.sub->round_trip_exact())
    throw VerificationFailure("Reidemeister-Schreier round trip is not exact");
  return s;
}

json to_json(const StoredSubgroup& s) {
  json gens = json::array();
  for (const auto& g : s.sub->generators())
    gens.push_back({{"name", g.name}, {"expansion", to_string(g.expansion)}});
  return {{"parent", to_json(*s.sub->parent())},
          {"permrep", to_json(*s.rep)},
          {"point", s.point + 1},
          {"kernel", s.kernel},
          {"prefix", s.prefix},
          {"index", s.sub->table().index()},
          {"transversal", word_strings(s.sub->table().transversal())},
          {"generators", gens},
          {"relators", word_strings(s.sub->presentation()->relators())}};
}

StoredSubgroup subgroup_from_json(const json& j) {
  auto rep = permrep_from_json(field(j, "permrep"));
  if (!(*presentation_from_json(field(j, "parent")) == *rep->presentation()))
    throw VerificationFailure("stored parent differs from the permutation representation's presentation");
  const auto point = get<std::uint32_t>(j, "point");
  if (point == 0) throw InvalidInput("points are 1-based");
  StoredSubgroup s = make_subgroup(rep, point - 1, j.value("kernel", false), j.value("prefix", "y"));

  if (get<std::vector<std::string>>(j, "transversal") != word_strings(s.sub->table().transversal()))
    throw VerificationFailure("stored transversal differs from the recomputed one");
  const auto& gens = field(j, "generators");
  if (!gens.is_array() || gens.size() != s.sub->generators().size())
    throw VerificationFailure("stored generator list differs from the recomputed one");
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const auto& g = s.sub->generators()[i];
    if (get<std::string>(gens[i], "name") != g.name ||
        get<std::string>(gens[i], "expansion") != to_string(g.expansion))
      throw VerificationFailure(fmt::format("stored generator {} differs from the recomputed one", g.name));
  }
  const auto stored = get<std::vector<std::string>>(j, "relators");
  const auto fresh = word_strings(s.sub->presentation()->relators());
  for (std::size_t i = 0; i < std::max(stored.size(), fresh.size()); ++i)
    if (i >= stored.size() || i >= fresh.size() || stored[i] != fresh[i])
      throw VerificationFailure(fmt::format("stored relator {} differs from the recomputed one", i));
  return s;
}

json matrix_to_json(const CMatrix& m) {
  json rows = json::array();
  for (long i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (long k = 0; k < m.cols(); ++k) row.push_back({m(i, k).real(), m(i, k).imag()});
    rows.push_back(row);
  }
  return rows;
}

CMatrix matrix_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw InvalidInput("matrix must be a nonempty array of rows");
  const long n = static_cast<long>(j.size());
  const long cols = j[0].is_array() ? static_cast<long>(j[0].size()) : 0;
  CMatrix m(n, cols);
  for (long i = 0; i < n; ++i) {
    const auto& row = j[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<long>(row.size()) != cols) throw InvalidInput("ragged matrix");
    for (long k = 0; k < cols; ++k) {
      const auto& e = row[static_cast<std::size_t>(k)];
      if (e.is_number())
        m(i, k) = Complex(e.get<double>(), 0);
      else if (e.is_array() && e.size() == 2 && e[0].is_number() && e[1].is_number())
        m(i, k) = Complex(e[0].get<double>(), e[1].get<double>());
      else
        throw InvalidInput("matrix entries must be numbers or [re, im] pairs");
    }
  }
  return m;
}

json to_json(const MatrixRep& rep, bool with_tol) {
  json images = json::object();
  const auto& alphabet = *rep.presentation()->alphabet();
  for (std::uint32_t g = 0; g < alphabet.size(); ++g)
    images[alphabet.name(GeneratorId{g})] = matrix_to_json(rep.image(GeneratorId{g}));
  json j{{"presentation", to_json(*rep.presentation())}, {"n", rep.dim()}, {"images", images}};
  if (with_tol) j["tol"] = rep.tol();
  return j;
}

MatrixRep matrix_rep_from_json(const json& j, MatrixRep::Check check) {
  auto p = presentation_from_json(field(j, "presentation"));
  const auto n = get<std::size_t>(j, "n");
  const auto& images = field(j, "images");
  std::vector<CMatrix> mats;
  for (const auto& l : p->alphabet()->letters()) {
    if (!images.contains(l.name)) throw InvalidInput(fmt::format("no image for generator '{}'", l.name));
    CMatrix m = matrix_from_json(images.at(l.name));
    if (m.rows() != static_cast<long>(n) || m.cols() != static_cast<long>(n))
      throw InvalidInput(fmt::format("image of '{}' is not {}x{}", l.name, n, n));
    mats.push_back(std::move(m));
  }
  std::optional<double> tol;
  if (j.contains("tol")) tol = get<double>(j, "tol");
  return MatrixRep(p, std::move(mats), tol, check);
}

MatrixRep rebind(const MatrixRep& rep, PresentationPtr p) {
  if (!same_presentation(rep.presentation(), p))
    throw InvalidInput("representation is defined on a different presentation");
  return MatrixRep(std::move(p), rep.images(), rep.tol(), MatrixRep::Check::deferred);
}

json to_json(const WordMap& map) {
  json images = json::object();
  for (std::uint32_t g = 0; g < map.source->size(); ++g)
    images[map.source->name(GeneratorId{g})] = to_string(map.image(GeneratorId{g}));
  std::vector<std::string> src, tgt;
  for (const auto& l : map.source->letters()) src.push_back(l.name);
  for (const auto& l : map.target->letters()) tgt.push_back(l.name);
  return {{"source", src}, {"target", tgt}, {"images", images}};
}

WordMap word_map_from_json(const json& j, const AlphabetPtr& source, const AlphabetPtr& target) {
  std::vector<std::string> src, tgt;
  for (const auto& l : source->letters()) src.push_back(l.name);
  for (const auto& l : target->letters()) tgt.push_back(l.name);
  if (get<std::vector<std::string>>(j, "source") != src || get<std::vector<std::string>>(j, "target") != tgt)
    throw InvalidInput("map alphabets do not match");
  WordMap map(source, target);
  const auto& images = field(j, "images");
  for (const auto& name : src) {
    if (!images.contains(name)) throw InvalidInput(fmt::format("no image for generator '{}'", name));
    map.set(name, images.at(name).get<std::string>());
  }
  return map;
}

namespace {
json real(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }
}  // namespace

json to_json(const RankEstimate& r) {
  return {{"rank", r.rank},
          {"cols", r.cols},
          {"threshold", r.threshold},
          {"sigma_max", real(r.sigma_max)},
          {"smallest_kept", real(r.smallest_kept)},
          {"largest_dropped", real(r.largest_dropped)},
          {"gap", real(r.gap)},
          {"conclusive", r.conclusive}};
}

json to_json(const DimReport& d) {
  return {{"dim_Z1", d.dim_Z1},       {"dim_B1", d.dim_B1},
          {"dim_H0", d.dim_H0},       {"dim_H1", d.dim_H1},
          {"fox_rank", to_json(d.fox)}, {"invariants_rank", to_json(d.invariants)},
          {"flagged", d.flagged}};
}

json to_json(const JacobianRank& j) {
  return {{"rank", j.estimate.rank},
          {"step", j.step},
          {"parameters", j.parameters},
          {"coordinates", j.coordinates},
          {"estimate", to_json(j.estimate)},
          {"inconclusive", j.inconclusive()}};
}

json to_json(const WordSample& s) {
  return {{"exhaustive_length", s.exhaustive_length},
          {"random_count", s.random_count},
          {"random_max_length", s.random_max_length},
          {"seed", s.seed}};
}

json read_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput(fmt::format("cannot open {}", path.string()));
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InvalidInput(fmt::format("{}: {}", path.string(), e.what()));
  }
}

void write_file(const std::filesystem::path& path, const json& j) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path);
  if (!out) throw InvalidInput(fmt::format("cannot write {}", path.string()));
  out << j.dump(2) << '\n';
}

}  // namespace knotrep::io
