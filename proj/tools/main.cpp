#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "dualkit/document.hpp"
#include "dualkit/duality.hpp"
#include "dualkit/generators.hpp"

using json = nlohmann::ordered_json;
using namespace dualkit;

namespace {

Kappa parse_kappa(const std::string& text) {
  if (text == "all") return Kappa::all();
  try {
    const int k = std::stoi(text);
    if (k >= 1 && std::to_string(k) == text) return Kappa::finite(k);
  } catch (const std::exception&) {
  }
  throw CLI::ValidationError("--kappa", "expects a positive integer or 'all'");
}

/// fx: URIs name either a whole fixture or a part of one (FX2_M1, FX3_map, ...).
Document fixture_document(const std::string& name) {
  const auto part_of = [&](const std::string& fx, const std::string& part) {
    const Fixture f = fixture(fx);
    if (part == "M1") return Document::of(*f.m1);
    if (part == "M2") return Document::of(*f.m2);
    if (part == "map") return Document::of(*f.map);
    throw ValidationError("unknown fixture part '" + part + "'");
  };
  if (name == "FX1_single" || name == "FX4_fork")
    return Document::of(*fixture(name).m1);
  if (name == "FX5_idbox2") return Document::of(*fixture(name).algebra);
  const auto underscore = name.find('_');
  if (underscore != std::string::npos) {
    const std::string head = name.substr(0, underscore);
    const std::string tail = name.substr(underscore + 1);
    if (head == "FX2") return part_of("FX2_pair", tail);
    if (head == "FX3") return part_of("FX3_triple", tail);
  }
  throw ValidationError("unknown fixture '" + name + "'");
}

Document load_document(const std::string& arg) {
  if (arg.rfind("fx:", 0) == 0) return fixture_document(arg.substr(3));
  std::string text;
  if (arg == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    text = buffer.str();
  } else {
    std::ifstream in(arg);
    if (!in) throw ParseError("cannot open '" + arg + "'", 1, 1);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    text = buffer.str();
  }
  return parse_document(text);
}

const MRFrame& as_mkf(const Document& d) {
  if (d.kind != DocKind::mkf) throw ValidationError("expected an mkf document");
  return *d.mkf;
}
const NFrame& as_nfr(const Document& d) {
  if (d.kind != DocKind::nfr) throw ValidationError("expected an nfr document");
  return *d.nfr;
}
const BoxAlgebra& as_cama(const Document& d) {
  if (d.kind != DocKind::cama) throw ValidationError("expected a cama document");
  return *d.cama;
}
const WorldMap& as_map(const Document& d) {
  if (d.kind != DocKind::map) throw ValidationError("expected a map document");
  return *d.map;
}

json witness_json(const Witness& w) {
  json out;
  out["condition"] = w.condition;
  out["data"] = w.data;
  out["detail"] = w.detail;
  return out;
}

json subset_labels(const WorldSet& ws, Mask x) {
  json out = json::array();
  for (int i = 0; i < ws.size(); ++i)
    if ((x >> i) & 1) out.push_back(ws.label(i));
  return out;
}

json relation_pairs(const WorldSet& ws, Rel r) {
  json out = json::array();
  const int n = ws.size();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (rel_has(r, n, i, j)) out.push_back(json::array({ws.label(i), ws.label(j)}));
  return out;
}

bool g_timestamp = false;

int emit(json report, bool verdict) {
  report["verdict"] = verdict;
  if (g_timestamp) {
    const auto now = std::chrono::system_clock::now().time_since_epoch();
    report["timestamp"] =
        std::chrono::duration_cast<std::chrono::seconds>(now).count();
  }
  std::cout << report.dump() << "\n";
  return verdict ? 0 : 1;
}

int cmd_apply(const std::string& functor, const std::string& in,
              const std::string& out_path, Kappa kappa) {
  const Document doc = load_document(in);
  const Caps caps = round_trip_caps();
  Document result = [&] {
    if (functor == "G") return Document::of(functor_G_obj(as_mkf(doc), caps));
    if (functor == "F") return Document::of(functor_F_obj(as_cama(doc), caps));
    if (functor == "N") return Document::of(functor_N_obj(as_mkf(doc)));
    if (functor == "H") return Document::of(functor_H_obj(as_nfr(doc), kappa, caps));
    if (functor == "J") return Document::of(functor_J_obj(as_cama(doc)));
    if (functor == "K") return Document::of(functor_K_obj(as_nfr(doc), caps));
    if (functor == "M") {
      if (doc.kind != DocKind::kripke)
        throw ValidationError("expected a kripke document");
      return Document::of(functor_M_obj(*doc.kripke));
    }
    if (functor == "L") return Document::of(functor_L_obj(as_mkf(doc)));
    if (functor == "U") return Document::of(underlying_U(as_mkf(doc)));
    throw ValidationError("unknown functor '" + functor + "' (use G F N H J K M L U)");
  }();
  const std::string text = serialize_document(result) + "\n";
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
  } else {
    std::ofstream out(out_path);
    if (!out) throw Error("cannot write '" + out_path + "'");
    out << text;
  }
  return 0;
}

int cmd_check_hom(const std::string& category, const std::string& map_arg,
                  const std::string& src_arg, const std::string& dst_arg) {
  const Document map_doc = load_document(map_arg);
  const Document src = load_document(src_arg);
  const Document dst = load_document(dst_arg);
  json report;
  report["command"] = "check-hom";
  report["category"] = category;

  MorphismReport verdict;
  if (category == "kripke") {
    const auto& f1 = *src.kripke;
    const auto& f2 = *dst.kripke;
    if (src.kind != DocKind::kripke || dst.kind != DocKind::kripke)
      throw ValidationError("kripke check needs two kripke documents");
    verdict = is_kripke_hom(as_map(map_doc), f1, f2);
  } else if (category == "mkf") {
    verdict = is_mkf_hom(as_map(map_doc), as_mkf(src), as_mkf(dst));
  } else if (category == "nfr") {
    verdict = is_nfr_hom(as_map(map_doc), as_nfr(src), as_nfr(dst));
  } else if (category == "cama" || category == "modal") {
    // The wire map carries the atom map g of the contravariant direction:
    // source = destination algebra's atoms, target = source algebra's atoms.
    const auto& g = as_map(map_doc);
    const auto& a = as_cama(src);
    const auto& b = as_cama(dst);
    if (!(g.source == b.atoms()) || !(g.target == a.atoms()))
      throw ValidationError(
          "atom map must go from the destination algebra's atoms to the "
          "source algebra's atoms");
    const ElementMap h = cba_hom_from_atom_map(a, b, g.table);
    verdict = category == "cama" ? is_cba_hom(h) : is_modal_hom(h);
  } else {
    throw ValidationError("unknown category '" + category +
                          "' (use kripke mkf nfr cama modal)");
  }
  if (verdict.witness) report["witness"] = witness_json(*verdict.witness);
  return emit(std::move(report), verdict.ok);
}

int cmd_roundtrip(const std::string& variant, const std::string& in, Kappa kappa) {
  const Document doc = load_document(in);
  RoundTripReport rt;
  if (variant == "tau") {
    rt = verify_tau(as_cama(doc));
  } else if (variant == "theta") {
    rt = verify_theta(as_mkf(doc));
  } else if (variant == "nfr-equiv") {
    if (doc.kind == DocKind::mkf)
      rt = verify_nfr_equivalence(*doc.mkf, functor_N_obj(*doc.mkf), kappa);
    else
      rt = verify_nfr_equivalence(functor_H_obj(as_nfr(doc), kappa, round_trip_caps()),
                                  *doc.nfr, kappa);
  } else if (variant == "cama-nfr") {
    if (doc.kind == DocKind::cama)
      rt = verify_cama_nfr(*doc.cama, functor_J_obj(*doc.cama), kappa);
    else
      rt = verify_cama_nfr(functor_K_obj(as_nfr(doc), round_trip_caps()), *doc.nfr,
                           kappa);
  } else {
    throw ValidationError("unknown variant '" + variant +
                          "' (use tau theta nfr-equiv cama-nfr)");
  }
  json report;
  report["command"] = "roundtrip";
  report["variant"] = variant;
  report["direction"] = rt.direction;
  if (rt.witness) report["witness"] = witness_json(*rt.witness);
  return emit(std::move(report), rt.ok);
}

int cmd_props(const std::string& in, Kappa kappa) {
  const Document doc = load_document(in);
  json report;
  report["command"] = "props";
  report["kind"] = to_string(doc.kind);
  report["kappa"] = kappa.to_string();
  bool verdict = true;
  switch (doc.kind) {
    case DocKind::kripke:
    case DocKind::mkf: {
      const MRFrame m = doc.kind == DocKind::mkf ? *doc.mkf
                                                 : functor_M_obj(*doc.kripke);
      const auto dd = check_kappa_dd(m, kappa);
      report["worlds"] = m.size();
      report["relations"] = m.rels().size();
      report["directed"] = dd.ok;
      if (!dd.ok) {
        json offending = json::array();
        for (Rel r : dd.offending) offending.push_back(relation_pairs(m.worlds(), r));
        report["offending"] = std::move(offending);
        verdict = false;
      }
      break;
    }
    case DocKind::nfr: {
      const auto& z = *doc.nfr;
      const auto nr = check_nfr(z, kappa);
      report["worlds"] = z.size();
      report["complete"] = nr.ok;
      if (!nr.ok) {
        report["witness"] = witness_json(*nr.witness);
        verdict = false;
      }
      break;
    }
    case DocKind::cama: {
      const auto& a = *doc.cama;
      const auto cls = validate_algebra(a, kappa);
      report["atoms"] = a.atom_count();
      report["box_zero_is_zero"] = cls.box_zero_is_zero;
      report["monotone"] = cls.monotone;
      report["binary_additive"] = cls.binary_additive;
      report["kappa_additive"] = cls.kappa_additive;
      report["normal"] = cls.normal();
      if (cls.additivity_witness) {
        report["additivity_witness"] =
            json::array({subset_labels(a.atoms(), cls.additivity_witness->first),
                         subset_labels(a.atoms(), cls.additivity_witness->second)});
      }
      if (cls.monotone_witness) {
        report["monotone_witness"] =
            json::array({subset_labels(a.atoms(), cls.monotone_witness->first),
                         subset_labels(a.atoms(), cls.monotone_witness->second)});
      }
      verdict = cls.kappa_additive;
      break;
    }
    case DocKind::map:
      throw ValidationError("props does not apply to map documents");
  }
  return emit(std::move(report), verdict);
}

int cmd_counterexamples() {
  json items = json::array();
  bool all_ok = true;

  {
    const Fixture fx = fixture("FX1_single");
    const NFrame u = underlying_U(*fx.m1);
    const auto violation = find_upward_closure_violation(u);
    json item;
    item["item"] = 1;
    item["claim"] = "successor neighborhoods of the one-world frame with the "
                    "empty relation are not upward closed";
    item["frame"] = json::parse(serialize_document(Document::of(*fx.m1)));
    item["holds"] = violation.has_value();
    if (violation) item["witness"] = witness_json(*violation);
    all_ok &= violation.has_value();
    items.push_back(std::move(item));
  }
  {
    const Fixture fx = fixture("FX2_pair");
    const auto frame_side = is_mkf_hom(*fx.map, *fx.m1, *fx.m2);
    const auto nbhd_side = is_nfr_hom(*fx.map, underlying_U(*fx.m1), underlying_U(*fx.m2));
    json item;
    item["item"] = 2;
    item["claim"] = "frame homomorphism whose successor neighborhoods do not "
                    "form a neighborhood homomorphism";
    item["map"] = json::parse(serialize_document(Document::of(*fx.map)));
    item["frame_hom"] = frame_side.ok;
    item["neighborhood_hom"] = nbhd_side.ok;
    item["holds"] = frame_side.ok && !nbhd_side.ok;
    if (nbhd_side.witness) item["witness"] = witness_json(*nbhd_side.witness);
    all_ok &= frame_side.ok && !nbhd_side.ok;
    items.push_back(std::move(item));
  }
  {
    const Fixture fx = fixture("FX3_triple");
    const auto nbhd_side = is_nfr_hom(*fx.map, underlying_U(*fx.m1), underlying_U(*fx.m2));
    const auto frame_side = is_mkf_hom(*fx.map, *fx.m1, *fx.m2);
    json item;
    item["item"] = 3;
    item["claim"] = "neighborhood homomorphism of the successor frames that is "
                    "not a frame homomorphism";
    item["map"] = json::parse(serialize_document(Document::of(*fx.map)));
    item["neighborhood_hom"] = nbhd_side.ok;
    item["frame_hom"] = frame_side.ok;
    item["holds"] = nbhd_side.ok && !frame_side.ok;
    if (frame_side.witness) item["witness"] = witness_json(*frame_side.witness);
    all_ok &= nbhd_side.ok && !frame_side.ok;
    items.push_back(std::move(item));
  }

  json report;
  report["command"] = "counterexamples";
  report["items"] = std::move(items);
  return emit(std::move(report), all_ok);
}

int cmd_suite(std::uint64_t seed, int count) {
  json sections = json::array();
  bool all_ok = true;
  const auto add_section = [&](const std::string& name, int cases, int failures) {
    json s;
    s["name"] = name;
    s["cases"] = cases;
    s["failures"] = failures;
    sections.push_back(std::move(s));
    all_ok &= failures == 0;
  };

  {
    GenParams p;
    p.max_atoms = 3;
    int failures = 0;
    const auto algebras = enumerate_normal_algebras(p);
    for (const auto& a : algebras)
      if (!verify_tau(a).ok) ++failures;
    add_section("tau", static_cast<int>(algebras.size()), failures);
  }
  {
    GenParams p;
    p.seed = seed;
    p.count = count;
    p.close_under_intersection = true;
    p.directed_filter = Kappa::all();
    int failures = 0;
    const auto frames = random_mrframes(p);
    for (const auto& m : frames)
      if (!verify_theta(m).ok) ++failures;
    add_section("theta", static_cast<int>(frames.size()), failures);
  }
  {
    GenParams p;
    p.seed = seed + 1;
    p.count = count;
    p.complete_filter = Kappa::all();
    int failures = 0;
    const auto frames = random_nframes(p);
    for (const auto& z : frames) {
      const MRFrame m = functor_H_obj(z, Kappa::all(), round_trip_caps());
      if (!verify_nfr_equivalence(m, z, Kappa::all()).ok) ++failures;
    }
    add_section("nfr-equivalence", static_cast<int>(frames.size()), failures);
  }
  {
    GenParams p;
    p.seed = seed + 2;
    p.count = 2 * std::max(count / 4, 1);
    int cases = 0, failures = 0;
    const auto frames = random_mrframes(p);
    for (std::size_t i = 0; i + 1 < frames.size(); i += 2) {
      const MRFrame& m1 = frames[i];
      const MRFrame& m2 = frames[i + 1];
      std::vector<int> table(static_cast<std::size_t>(m1.size()), 0);
      for (;;) {
        ++cases;
        if (!corollary_preimage_check(WorldMap(m1.worlds(), m2.worlds(), table), m1, m2))
          ++failures;
        int w = 0;
        while (w < m1.size() &&
               ++table[static_cast<std::size_t>(w)] == m2.size())
          table[static_cast<std::size_t>(w++)] = 0;
        if (w == m1.size()) break;
      }
    }
    add_section("corollary", cases, failures);
  }

  json report;
  report["command"] = "suite";
  report["seed"] = seed;
  report["count"] = count;
  report["sections"] = std::move(sections);
  return emit(std::move(report), all_ok);
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite modal-algebra / Kripke-frame duality toolkit"};
  app.require_subcommand(1);
  app.add_flag("--timestamp", g_timestamp, "include a timestamp in reports");

  std::string functor, in, out, map_arg, src_arg, dst_arg, category, variant;
  std::string kappa_text = "all";
  std::uint64_t seed = 7;
  int count = 100;

  auto* apply = app.add_subcommand("apply", "apply a functor's object part");
  apply->add_option("functor", functor, "G F N H J K M L U")->required();
  apply->add_option("input", in, "document path, '-', or fx:NAME")->required();
  apply->add_option("-o,--output", out, "output path (default stdout)");
  apply->add_option("--kappa", kappa_text, "positive integer or 'all'");

  auto* check = app.add_subcommand("check-hom", "validate a morphism");
  check->add_option("category", category, "kripke mkf nfr cama modal")->required();
  check->add_option("map", map_arg)->required();
  check->add_option("source", src_arg)->required();
  check->add_option("destination", dst_arg)->required();

  auto* roundtrip = app.add_subcommand("roundtrip", "verify a duality round trip");
  roundtrip->add_option("variant", variant, "tau theta nfr-equiv cama-nfr")->required();
  roundtrip->add_option("input", in)->required();
  roundtrip->add_option("--kappa", kappa_text, "positive integer or 'all'");

  auto* props = app.add_subcommand("props", "classify a document's structure");
  props->add_option("input", in)->required();
  props->add_option("--kappa", kappa_text, "positive integer or 'all'");

  app.add_subcommand("counterexamples",
                     "replay the three non-functoriality counterexamples");

  auto* suite = app.add_subcommand("suite", "run the theorem suites");
  suite->add_option("--seed", seed);
  suite->add_option("--count", count)->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    const Kappa kappa = parse_kappa(kappa_text);
    if (app.got_subcommand("apply")) return cmd_apply(functor, in, out, kappa);
    if (app.got_subcommand("check-hom"))
      return cmd_check_hom(category, map_arg, src_arg, dst_arg);
    if (app.got_subcommand("roundtrip")) return cmd_roundtrip(variant, in, kappa);
    if (app.got_subcommand("props")) return cmd_props(in, kappa);
    if (app.got_subcommand("counterexamples")) return cmd_counterexamples();
    if (app.got_subcommand("suite")) return cmd_suite(seed, count);
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "parse error at " << e.line << ":" << e.column << ": " << e.what()
              << "\n";
    return 2;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
