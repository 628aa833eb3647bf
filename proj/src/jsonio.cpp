#include "conicline/jsonio.hpp"

#include "conicline/textio.hpp"

namespace conicline {

FieldSpec field_from_json(const json& j,
                          const std::optional<FieldSpec>& fallback) {
  if (j.is_object() && j.contains("field")) {
    return FieldSpec::parse(j.at("field").get<std::string>());
  }
  if (fallback) return *fallback;
  throw ParseError("payload carries no \"field\" and no default was given");
}

Scalar scalar_from_json(const json& j, const FieldSpec& f) {
  if (j.is_number_integer()) {
    return Scalar::from_int(f, j.get<long long>());
  }
  if (j.is_string()) return Scalar::parse(f, j.get<std::string>());
  throw ParseError("expected a scalar as integer or string");
}

json curve_to_json(const CurveParam& c) {
  return json{{"x", format_poly(c.x())},
              {"y", format_poly(c.y())},
              {"z", format_poly(c.z())},
              {"field", c.field().name()},
              {"c", c.c().str()}};
}

CurveParam curve_from_json(const json& j,
                           const std::optional<FieldSpec>& fallback) {
  if (!j.is_object()) throw ParseError("curve payload must be an object");
  const FieldSpec f = field_from_json(j, fallback);
  const UniPoly x = parse_poly(f, j.at("x").get<std::string>());
  const UniPoly y = parse_poly(f, j.at("y").get<std::string>());
  const UniPoly z = parse_poly(f, j.at("z").get<std::string>());
  CurveParam c = CurveParam::validate(x, y, z);
  if (j.contains("c")) {
    const Scalar stored = scalar_from_json(j.at("c"), f);
    if (stored != c.c()) {
      throw ParseError("stored c = " + stored.str() +
                       " does not match the recomputed value " + c.c().str());
    }
  }
  return c;
}

json letter_to_json(const Letter& l) {
  if (std::holds_alternative<MoebiusLetter>(l)) {
    const Mat2& m = std::get<MoebiusLetter>(l).mat();
    return json{{"moebius",
                 json::array({json::array({m.at(0, 0).str(), m.at(0, 1).str()}),
                              json::array({m.at(1, 0).str(), m.at(1, 1).str()})})}};
  }
  return json{{"fibered", format_poly(std::get<FiberedLetter>(l).s())}};
}

Letter letter_from_json(const json& j, const FieldSpec& f) {
  if (!j.is_object()) throw ParseError("letter must be an object");
  if (j.contains("moebius")) {
    const json& m = j.at("moebius");
    if (!m.is_array() || m.size() != 2 || !m[0].is_array() || m[0].size() != 2 ||
        !m[1].is_array() || m[1].size() != 2) {
      throw ParseError("\"moebius\" must be a 2x2 array");
    }
    return MoebiusLetter(Mat2{{scalar_from_json(m[0][0], f),
                               scalar_from_json(m[0][1], f),
                               scalar_from_json(m[1][0], f),
                               scalar_from_json(m[1][1], f)}});
  }
  if (j.contains("fibered")) {
    return FiberedLetter(parse_poly(f, j.at("fibered").get<std::string>()));
  }
  throw ParseError("letter needs a \"moebius\" or \"fibered\" member");
}

json word_to_json(const GroupWord& w) {
  json arr = json::array();
  for (const auto& l : w.letters()) arr.push_back(letter_to_json(l));
  return arr;
}

GroupWord word_from_json(const json& j,
                         const std::optional<FieldSpec>& fallback) {
  const json* arr = &j;
  std::optional<FieldSpec> f = fallback;
  if (j.is_object()) {
    f = field_from_json(j, fallback);
    if (!j.contains("word")) throw ParseError("expected a \"word\" member");
    arr = &j.at("word");
  }
  if (!arr->is_array()) throw ParseError("word must be an array of letters");
  if (!f) throw ParseError("word payload needs a field");
  std::vector<Letter> letters;
  for (const auto& lj : *arr) letters.push_back(letter_from_json(lj, *f));
  return GroupWord(std::move(letters));
}

json normal_word_to_json(const NormalWord& n) {
  json body = json::array();
  for (const auto& l : n.body) body.push_back(letter_to_json(l));
  return json{{"head", letter_to_json(Letter(n.head))},
              {"body", body},
              {"identity", n.is_identity()},
              {"word", word_to_json(n.to_word())}};
}

json point_to_json(const ProjPoint& p) {
  return json::array(
      {p.coords()[0].str(), p.coords()[1].str(), p.coords()[2].str()});
}

ProjPoint point_from_json(const json& j, const FieldSpec& f) {
  if (!j.is_array() || j.size() != 3) {
    throw ParseError("point must be a coordinate triple");
  }
  return ProjPoint(scalar_from_json(j[0], f), scalar_from_json(j[1], f),
                   scalar_from_json(j[2], f));
}

json conic_to_json(const Conic& c) {
  json arr = json::array();
  for (const auto& v : c.coeffs()) arr.push_back(v.str());
  return json{{"conic", arr}, {"field", c.field().name()},
              {"smooth", c.is_smooth()}};
}

Conic conic_from_json(const json& j, const FieldSpec& f) {
  const json& arr = j.is_object() && j.contains("conic") ? j.at("conic") : j;
  if (!arr.is_array() || arr.size() != 6) {
    throw ParseError("conic must be the six coefficients "
                     "(a_xx, a_xy, a_xz, a_yy, a_yz, a_zz)");
  }
  std::array<Scalar, 6> c{scalar_from_json(arr[0], f), scalar_from_json(arr[1], f),
                          scalar_from_json(arr[2], f), scalar_from_json(arr[3], f),
                          scalar_from_json(arr[4], f), scalar_from_json(arr[5], f)};
  return Conic(c);
}

json mat3_to_json(const Mat3& m) {
  json rows = json::array();
  for (int i = 0; i < 3; ++i) {
    json row = json::array();
    for (int k = 0; k < 3; ++k) row.push_back(m.at(i, k).str());
    rows.push_back(row);
  }
  return rows;
}

namespace {

json profile_to_json(const std::array<int, 3>& p) {
  json arr = json::array();
  for (int d : p) {
    if (d == UniPoly::kNegInf) {
      arr.push_back("-inf");
    } else {
      arr.push_back(d);
    }
  }
  return arr;
}

json conditions_to_json(const DegreeConditionReport& r) {
  return json{{"passes", r.passes},
              {"as_given", r.as_given},
              {"after_involution", r.after_involution},
              {"profile", profile_to_json(r.profile)},
              {"detail", r.detail}};
}

}  // namespace

json embedding_report_to_json(const EmbeddingReport& r) {
  json out;
  out["valid_in_S0"] = r.valid_in_S0;
  if (!r.valid_in_S0) {
    out["reason"] = r.invalid_reason;
    return out;
  }
  out["c"] = r.c->str();
  out["degree_profile"] = profile_to_json(r.degree_profile);
  out["closure_degree"] = r.closure_degree;
  out["parity"] = r.parity == 1 ? "odd" : "even";
  json emb;
  switch (r.embedding.status) {
    case EmbeddingVerdict::Status::True:
      emb["verdict"] = "true";
      emb["witness"] = r.embedding.witness.str(ratio_names());
      break;
    case EmbeddingVerdict::Status::False:
      emb["verdict"] = "false";
      emb["obstruction_degree"] = r.embedding.obstruction_degree;
      break;
    case EmbeddingVerdict::Status::Undecided:
      emb["verdict"] = "undecided";
      break;
  }
  emb["detail"] = r.embedding.detail;
  out["closed_embedding"] = emb;
  out["degree_conditions"] = conditions_to_json(r.conditions);
  return out;
}

json rectify_result_to_json(const RectifyResult& r) {
  json out;
  switch (r.outcome) {
    case RectifyResult::Outcome::OddLine: out["outcome"] = "OddLine"; break;
    case RectifyResult::Outcome::EvenLine: out["outcome"] = "EvenLine"; break;
    case RectifyResult::Outcome::Failed: out["outcome"] = "Failed"; break;
  }
  out["witness"] = word_to_json(r.witness);
  out["note"] = "classification contingent on closed-embedding certification";
  if (r.outcome == RectifyResult::Outcome::Failed) {
    switch (r.fail_kind) {
      case RectifyResult::FailKind::DegreeCertificate:
        out["failure"] = "degree_certificate";
        break;
      case RectifyResult::FailKind::NonSquareFiberClass:
        out["failure"] = "non_square_fiber_class";
        break;
      case RectifyResult::FailKind::NotEmbeddingShape:
        out["failure"] = "not_embedding_shape";
        break;
      case RectifyResult::FailKind::Stalled:
        out["failure"] = "stalled";
        break;
      case RectifyResult::FailKind::BudgetExhausted:
        out["failure"] = "budget_exhausted";
        break;
      case RectifyResult::FailKind::None:
        break;
    }
    if (r.certificate) out["certificate"] = conditions_to_json(*r.certificate);
  } else if (r.reparam) {
    out["reparametrization"] = format_poly(*r.reparam);
  }
  out["diagnostics"] = r.diagnostics;
  if (r.final_state) out["final_state"] = curve_to_json(*r.final_state);
  return out;
}

ChainType chain_from_json(const json& j) {
  const json& arr = j.is_object() && j.contains("weights") ? j.at("weights") : j;
  if (!arr.is_array() || arr.empty()) {
    throw ParseError("chain payload must provide a nonempty \"weights\" array");
  }
  std::vector<long long> w;
  for (const auto& v : arr) {
    if (!v.is_number_integer()) throw ParseError("chain weights must be integers");
    w.push_back(v.get<long long>());
  }
  return ChainType(std::move(w));
}

json chain_to_json(const ChainType& c) {
  return json{{"weights", c.weights()}};
}

json moves_to_json(const std::vector<ChainMove>& ms) {
  json arr = json::array();
  for (const auto& m : ms) {
    json jm;
    switch (m.kind) {
      case ChainMove::Kind::InnerBlowup: jm["kind"] = "inner_blowup"; break;
      case ChainMove::Kind::OuterBlowupLeft:
        jm["kind"] = "outer_blowup_left";
        break;
      case ChainMove::Kind::OuterBlowupRight:
        jm["kind"] = "outer_blowup_right";
        break;
      case ChainMove::Kind::Blowdown: jm["kind"] = "blowdown"; break;
    }
    jm["pos"] = m.pos;
    arr.push_back(jm);
  }
  return arr;
}

std::vector<ChainMove> moves_from_json(const json& j) {
  if (!j.is_array()) throw ParseError("moves payload must be an array");
  std::vector<ChainMove> out;
  for (const auto& jm : j) {
    const std::string kind = jm.at("kind").get<std::string>();
    ChainMove m;
    if (kind == "inner_blowup") {
      m.kind = ChainMove::Kind::InnerBlowup;
    } else if (kind == "outer_blowup_left") {
      m.kind = ChainMove::Kind::OuterBlowupLeft;
    } else if (kind == "outer_blowup_right") {
      m.kind = ChainMove::Kind::OuterBlowupRight;
    } else if (kind == "blowdown") {
      m.kind = ChainMove::Kind::Blowdown;
    } else {
      throw ParseError("unknown move kind: " + kind);
    }
    if (jm.contains("pos")) m.pos = jm.at("pos").get<int>();
    out.push_back(m);
  }
  return out;
}

json dg_invariant_to_json(const DgInvariant& inv) {
  if (inv.kind == DgInvariant::Kind::NegDefinite) {
    return json{{"kind", "NEG_DEFINITE"}};
  }
  json out{{"kind", "tail"}, {"tail", inv.tail}};
  switch (inv.shape) {
    case StandardForm::Shape::MStandard: out["shape"] = "m_standard"; break;
    case StandardForm::Shape::ZeroCurve: out["shape"] = "zero_curve"; break;
    case StandardForm::Shape::ZeroZeroZero: out["shape"] = "zero_zero_zero"; break;
  }
  return out;
}

}  // namespace conicline
