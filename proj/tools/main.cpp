// Command line surface for the conic-complement line calculus.
//
// Exit codes: 0 success / true verdict, 2 false verdict (non-embedding or
// failure with certificate), 3 undecided or budget exhausted, 4 input error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "conicline/jsonio.hpp"
#include "conicline/textio.hpp"

namespace {

using conicline::json;

constexpr int kOk = 0;
constexpr int kFalseVerdict = 2;
constexpr int kUndecided = 3;
constexpr int kInputError = 4;

struct GlobalOpts {
  std::string field = "Q";
  int budget = 500;
  int max_components = 0;
  int max_depth = 24;
  std::size_t max_states = 2000000;
  int degree_cap = 0;
  long long seed = 0;
  std::string input = "-";
  std::string output = "-";
};

json read_payload(const GlobalOpts& g) {
  std::string text;
  if (g.input == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    text = ss.str();
  } else {
    std::ifstream in(g.input);
    if (!in) throw conicline::ParseError("cannot open input " + g.input);
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw conicline::ParseError(std::string("JSON parse error: ") + e.what());
  }
}

void write_output(const GlobalOpts& g, const json& out) {
  if (g.output == "-") {
    std::cout << out.dump(2) << std::endl;
  } else {
    std::ofstream os(g.output);
    if (!os) throw conicline::ParseError("cannot open output " + g.output);
    os << out.dump(2) << std::endl;
  }
}

std::optional<conicline::FieldSpec> default_field(const GlobalOpts& g) {
  return conicline::FieldSpec::parse(g.field);
}

conicline::SubductionOptions subduction_opts(const GlobalOpts& g) {
  conicline::SubductionOptions opts;
  opts.degree_cap = g.degree_cap;
  return opts;
}

conicline::SearchCaps search_caps(const GlobalOpts& g) {
  conicline::SearchCaps caps;
  caps.max_components = g.max_components;
  caps.max_depth = g.max_depth;
  caps.max_states = g.max_states;
  return caps;
}

int cmd_verify(const GlobalOpts& g) {
  const json payload = read_payload(g);
  const conicline::FieldSpec f =
      conicline::field_from_json(payload, default_field(g));
  conicline::EmbeddingReport rep = conicline::build_report(
      conicline::parse_poly(f, payload.at("x").get<std::string>()),
      conicline::parse_poly(f, payload.at("y").get<std::string>()),
      conicline::parse_poly(f, payload.at("z").get<std::string>()),
      subduction_opts(g));
  write_output(g, conicline::embedding_report_to_json(rep));
  if (!rep.valid_in_S0) return kFalseVerdict;
  switch (rep.embedding.status) {
    case conicline::EmbeddingVerdict::Status::True: return kOk;
    case conicline::EmbeddingVerdict::Status::False: return kFalseVerdict;
    case conicline::EmbeddingVerdict::Status::Undecided: return kUndecided;
  }
  return kUndecided;
}

int cmd_rectify(const GlobalOpts& g) {
  const json payload = read_payload(g);
  const conicline::CurveParam j =
      conicline::curve_from_json(payload, default_field(g));
  const conicline::RectifyResult r = conicline::rectify(j, g.budget);
  write_output(g, conicline::rectify_result_to_json(r));
  if (r.outcome != conicline::RectifyResult::Outcome::Failed) return kOk;
  switch (r.fail_kind) {
    case conicline::RectifyResult::FailKind::BudgetExhausted:
    case conicline::RectifyResult::FailKind::Stalled:
      return kUndecided;
    default:
      return kFalseVerdict;
  }
}

int cmd_word(const std::string& sub, const GlobalOpts& g) {
  const json payload = read_payload(g);
  const auto fallback = default_field(g);
  if (sub == "normalize") {
    const conicline::GroupWord w = conicline::word_from_json(payload, fallback);
    if (w.empty()) {
      write_output(g, json{{"head", nullptr}, {"body", json::array()},
                           {"identity", true}});
      return kOk;
    }
    write_output(g, conicline::normal_word_to_json(conicline::normal_form(w)));
    return kOk;
  }
  if (sub == "invert") {
    const conicline::GroupWord w = conicline::word_from_json(payload, fallback);
    write_output(g, conicline::word_to_json(conicline::invert_word(w)));
    return kOk;
  }
  if (sub == "character") {
    const conicline::GroupWord w = conicline::word_from_json(payload, fallback);
    write_output(g,
                 json{{"character", conicline::scaling_character(w, fallback).str()}});
    return kOk;
  }
  if (sub == "apply") {
    const conicline::FieldSpec f =
        conicline::field_from_json(payload, fallback);
    const conicline::GroupWord w =
        conicline::word_from_json(payload.at("word"), f);
    json out;
    if (payload.contains("curve")) {
      const conicline::CurveParam j =
          conicline::curve_from_json(payload.at("curve"), f);
      out["curve"] = conicline::curve_to_json(conicline::apply_word_curve(w, j));
    }
    if (payload.contains("point")) {
      const conicline::ProjPoint p =
          conicline::point_from_json(payload.at("point"), f);
      out["point"] = conicline::point_to_json(conicline::apply_word_point(w, p));
    }
    if (out.empty()) {
      throw conicline::ParseError("apply needs a \"curve\" or \"point\"");
    }
    write_output(g, out);
    return kOk;
  }
  throw conicline::ParseError("unknown word subcommand: " + sub);
}

int cmd_chain(const std::string& sub, const GlobalOpts& g) {
  const json payload = read_payload(g);
  const conicline::SearchCaps caps = search_caps(g);
  if (sub == "standardize") {
    const conicline::ChainType c = conicline::chain_from_json(payload);
    const long long m =
        payload.is_object() && payload.contains("m") ? payload.at("m").get<long long>() : 1;
    try {
      const auto res = conicline::to_standard_form(c, m, caps);
      json out = conicline::chain_to_json(res.sf.chain);
      out["m"] = m;
      out["moves"] = conicline::moves_to_json(res.moves);
      out["tail"] = res.sf.tail;
      switch (res.sf.shape) {
        case conicline::StandardForm::Shape::MStandard:
          out["shape"] = "m_standard"; break;
        case conicline::StandardForm::Shape::ZeroCurve:
          out["shape"] = "zero_curve"; break;
        case conicline::StandardForm::Shape::ZeroZeroZero:
          out["shape"] = "zero_zero_zero"; break;
      }
      write_output(g, out);
      return kOk;
    } catch (const conicline::SearchCapError& e) {
      write_output(g, json{{"error", "cap_exhausted"}, {"detail", e.what()}});
      return kUndecided;
    }
  }
  if (sub == "invariant") {
    const conicline::ChainType c = conicline::chain_from_json(payload);
    try {
      write_output(g, conicline::dg_invariant_to_json(conicline::dg_invariant(c, caps)));
      return kOk;
    } catch (const conicline::SearchCapError& e) {
      write_output(g, json{{"error", "cap_exhausted"}, {"detail", e.what()}});
      return kUndecided;
    }
  }
  if (sub == "reach") {
    const conicline::ChainType from =
        conicline::chain_from_json(payload.at("from"));
    const conicline::ChainType to = conicline::chain_from_json(payload.at("to"));
    const auto res = conicline::reachable(from, to, caps);
    json out{{"found", res.found},
             {"exhausted", res.exhausted},
             {"states_explored", res.states_explored}};
    if (res.found) out["moves"] = conicline::moves_to_json(res.moves);
    write_output(g, out);
    if (res.found) return kOk;
    return res.exhausted ? kFalseVerdict : kUndecided;
  }
  throw conicline::ParseError("unknown chain subcommand: " + sub);
}

int cmd_exotic(std::uint64_t p, const GlobalOpts& g) {
  const conicline::CurveParam j = conicline::exotic_line(p);
  json out = conicline::curve_to_json(j);
  const auto [x, v] = conicline::double_cover_chart(j);
  out["chart"] = json{{"x", conicline::format_poly(x)},
                      {"v", conicline::format_poly(v)}};
  write_output(g, out);
  return kOk;
}

int cmd_conic_normalize(const GlobalOpts& g) {
  const json payload = read_payload(g);
  const conicline::FieldSpec f =
      conicline::field_from_json(payload, default_field(g));
  const conicline::Conic c = conicline::conic_from_json(payload, f);
  const conicline::ProjPoint p =
      conicline::point_from_json(payload.at("point"), f);
  const conicline::Mat3 m = conicline::normalize_conic(c, p);
  write_output(g, json{{"matrix", conicline::mat3_to_json(m)}});
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact calculus of affine lines in the complement of the "
               "plane conic xz + y^2 = 0"};
  app.require_subcommand(1);
  GlobalOpts g;
  app.add_option("--field", g.field, "default base field tag: Q or F<p>");
  app.add_option("--budget", g.budget, "rectification step budget")
      ->check(CLI::PositiveNumber);
  app.add_option("--max-components", g.max_components,
                 "chain search component cap (0: input length + 8)");
  app.add_option("--max-depth", g.max_depth, "chain search depth cap")
      ->check(CLI::PositiveNumber);
  app.add_option("--max-states", g.max_states, "chain search state cap");
  app.add_option("--degree-cap", g.degree_cap,
                 "subduction degree cap (0: 4 x max input degree)");
  app.add_option("--seed", g.seed, "seed for sampling-based helpers");
  app.add_option("--input", g.input, "JSON payload path, - for stdin");
  app.add_option("--output", g.output, "output path, - for stdout");

  auto* verify = app.add_subcommand("verify", "embedding report for a curve");
  auto* rectify = app.add_subcommand("rectify", "rectify a curve to L0 or L1");
  auto* word = app.add_subcommand("word", "word operations");
  std::string word_sub;
  word->add_option("op", word_sub, "normalize | invert | apply | character")
      ->required();
  auto* chain = app.add_subcommand("chain", "chain calculus");
  std::string chain_sub;
  chain->add_option("op", chain_sub, "standardize | invariant | reach")
      ->required();
  auto* exotic = app.add_subcommand("exotic", "positive-characteristic family");
  std::uint64_t exotic_p = 0;
  exotic->add_option("p", exotic_p, "prime characteristic >= 3")->required();
  auto* conic = app.add_subcommand("conic", "conic operations");
  std::string conic_sub;
  conic->add_option("op", conic_sub, "normalize")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (verify->parsed()) return cmd_verify(g);
    if (rectify->parsed()) return cmd_rectify(g);
    if (word->parsed()) return cmd_word(word_sub, g);
    if (chain->parsed()) return cmd_chain(chain_sub, g);
    if (exotic->parsed()) return cmd_exotic(exotic_p, g);
    if (conic->parsed()) {
      if (conic_sub != "normalize") {
        throw conicline::ParseError("unknown conic subcommand: " + conic_sub);
      }
      return cmd_conic_normalize(g);
    }
  } catch (const conicline::CurveError& e) {
    std::cerr << "{\"error\": \"" << conicline::CurveError::kind_name(e.kind())
              << "\", \"detail\": \"" << e.what() << "\"}" << std::endl;
    return kFalseVerdict;
  } catch (const conicline::ParseError& e) {
    std::cerr << "input error: " << e.what() << std::endl;
    return kInputError;
  } catch (const conicline::Error& e) {
    std::cerr << "error: " << e.what() << std::endl;
    return kInputError;
  }
  return kInputError;
}
