#ifndef CONICLINE_JSONIO_HPP
#define CONICLINE_JSONIO_HPP

#include <optional>

#include <json.hpp>

#include "conicline/chains.hpp"
#include "conicline/classifier.hpp"
#include "conicline/group.hpp"

namespace conicline {

using nlohmann::json;

/// Resolves the base field of a payload: an explicit "field" member wins,
/// otherwise the caller's default applies.
FieldSpec field_from_json(const json& j,
                          const std::optional<FieldSpec>& fallback);

Scalar scalar_from_json(const json& j, const FieldSpec& f);

json curve_to_json(const CurveParam& c);
/// Parses {"x": ..., "y": ..., "z": ..., "field": ...}; a stored "c" must
/// match the recomputed constant.
CurveParam curve_from_json(const json& j,
                           const std::optional<FieldSpec>& fallback);

json letter_to_json(const Letter& l);
Letter letter_from_json(const json& j, const FieldSpec& f);
json word_to_json(const GroupWord& w);
GroupWord word_from_json(const json& j,
                         const std::optional<FieldSpec>& fallback);
json normal_word_to_json(const NormalWord& n);

json point_to_json(const ProjPoint& p);
ProjPoint point_from_json(const json& j, const FieldSpec& f);
json conic_to_json(const Conic& c);
Conic conic_from_json(const json& j, const FieldSpec& f);
json mat3_to_json(const Mat3& m);

json embedding_report_to_json(const EmbeddingReport& r);
json rectify_result_to_json(const RectifyResult& r);

ChainType chain_from_json(const json& j);
json chain_to_json(const ChainType& c);
json moves_to_json(const std::vector<ChainMove>& ms);
std::vector<ChainMove> moves_from_json(const json& j);
json dg_invariant_to_json(const DgInvariant& inv);

}  // namespace conicline

#endif
