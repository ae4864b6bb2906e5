#pragma once

#include <filesystem>
#include <memory>
#include <string>

#include <json.hpp>

#include "knotrep/analysis.hpp"
#include "knotrep/cohomology.hpp"
#include "knotrep/matrix_rep.hpp"
#include "knotrep/reidemeister_schreier.hpp"

namespace knotrep::io {

using nlohmann::json;

/// Every loader re-runs the verification of the object it builds and
/// throws InvalidInput on malformed documents, VerificationFailure when the
/// content does not check out.

json to_json(const Presentation& p);
PresentationPtr presentation_from_json(const json& j);

/// {"presentation", "degree", "images": {gen: cycles}}
json to_json(const PermRep& rep);
std::shared_ptr<const PermRep> permrep_from_json(const json& j);

/// Stored subgroup: the permutation representation and point it came from,
/// plus the computed transversal, generators and relators. With `kernel`
/// the subgroup is the kernel of the representation and the coset table is
/// taken over its regular action.
struct StoredSubgroup {
  std::shared_ptr<const PermRep> rep;
  std::uint32_t point = 0;
  bool kernel = false;
  std::string prefix = "y";
  std::shared_ptr<const SubgroupPresentation> sub;
};

StoredSubgroup make_subgroup(std::shared_ptr<const PermRep> rep, std::uint32_t point, bool kernel,
                             const std::string& prefix);
json to_json(const StoredSubgroup& s);
/// Recomputes the subgroup and throws VerificationFailure when the stored
/// transversal, generators or relators differ from the recomputation.
StoredSubgroup subgroup_from_json(const json& j);

/// {"presentation", "n", "images": {gen: [[[re, im], ..], ..]}, "tol"?}
json to_json(const MatrixRep& rep, bool with_tol = true);
MatrixRep matrix_rep_from_json(const json& j, MatrixRep::Check check = MatrixRep::Check::on_construction);
/// Rebinds a loaded representation onto a structurally equal presentation.
MatrixRep rebind(const MatrixRep& rep, PresentationPtr p);

json matrix_to_json(const CMatrix& m);
CMatrix matrix_from_json(const json& j);

/// {"source": [..], "target": [..], "images": {gen: word}}
json to_json(const WordMap& map);
WordMap word_map_from_json(const json& j, const AlphabetPtr& source, const AlphabetPtr& target);

/// Non-finite reals (an infinite gap) are written as null.
json to_json(const RankEstimate& r);
json to_json(const DimReport& d);
json to_json(const JacobianRank& j);
json to_json(const WordSample& s);

json read_file(const std::filesystem::path& path);
/// Pretty-printed with a trailing newline.
void write_file(const std::filesystem::path& path, const json& j);

}  // namespace knotrep::io
