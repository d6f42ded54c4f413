#include "dualkit/document.hpp"

#include <algorithm>
#include <numeric>

#include <json.hpp>

namespace dualkit {

namespace {

using json = nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, 1, 1); }

std::pair<int, int> line_column(const std::string& text, std::size_t byte) {
  int line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

void expect_keys(const json& obj, const std::vector<std::string>& keys) {
  for (auto it = obj.begin(); it != obj.end(); ++it)
    if (std::find(keys.begin(), keys.end(), it.key()) == keys.end())
      fail("unknown field '" + it.key() + "'");
  for (const auto& key : keys)
    if (!obj.contains(key)) fail("missing field '" + key + "'");
}

std::vector<std::string> parse_labels(const json& arr, const std::string& field) {
  if (!arr.is_array()) fail("'" + field + "' must be an array of strings");
  std::vector<std::string> labels;
  for (const auto& item : arr) {
    if (!item.is_string()) fail("'" + field + "' must contain only strings");
    labels.push_back(item.get<std::string>());
  }
  auto sorted = labels;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    fail("'" + field + "' contains duplicate labels");
  return sorted; // parsing canonicalizes label order
}

int index_or_fail(const WorldSet& ws, const json& value, const std::string& context) {
  if (!value.is_string()) fail(context + ": label must be a string");
  const auto label = value.get<std::string>();
  const auto idx = ws.index_of(label);
  if (!idx) fail(context + ": unknown label '" + label + "'");
  return *idx;
}

Mask parse_subset(const WorldSet& ws, const json& arr, const std::string& context) {
  if (!arr.is_array()) fail(context + ": subset must be an array of labels");
  Mask mask = 0;
  for (const auto& item : arr) {
    const int i = index_or_fail(ws, item, context);
    const Mask bit = Mask{1} << i;
    if (mask & bit) fail(context + ": duplicate label '" + ws.label(i) + "'");
    mask |= bit;
  }
  return mask;
}

Rel parse_relation(const WorldSet& ws, const json& arr, const std::string& context) {
  if (!arr.is_array()) fail(context + ": relation must be an array of pairs");
  Rel rel = 0;
  for (const auto& pair : arr) {
    if (!pair.is_array() || pair.size() != 2)
      fail(context + ": pair must be a two-element array, got " + pair.dump());
    const int i = index_or_fail(ws, pair[0], context + " pair " + pair.dump());
    const int j = index_or_fail(ws, pair[1], context + " pair " + pair.dump());
    rel |= rel_bit(ws.size(), i, j);
  }
  return rel;
}

json subset_json(const WorldSet& ws, Mask mask) {
  json out = json::array();
  for (int i = 0; i < ws.size(); ++i)
    if ((mask >> i) & 1) out.push_back(ws.label(i));
  return out;
}

json relation_json(const WorldSet& ws, Rel rel) {
  json out = json::array();
  const int n = ws.size();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (rel_has(rel, n, i, j)) out.push_back(json::array({ws.label(i), ws.label(j)}));
  return out;
}

/// Old-index -> sorted-label-index permutation; identity when already sorted.
std::vector<int> sort_permutation(const WorldSet& ws) {
  auto sorted = ws.labels();
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> perm(static_cast<std::size_t>(ws.size()));
  for (int i = 0; i < ws.size(); ++i)
    perm[static_cast<std::size_t>(i)] = static_cast<int>(
        std::lower_bound(sorted.begin(), sorted.end(), ws.label(i)) - sorted.begin());
  return perm;
}

WorldSet sorted_worlds(const WorldSet& ws) {
  auto labels = ws.labels();
  std::sort(labels.begin(), labels.end());
  return WorldSet(labels);
}

Mask translate_mask(Mask x, const std::vector<int>& perm) {
  Mask out = 0;
  for (std::size_t i = 0; i < perm.size(); ++i)
    if ((x >> i) & 1) out |= Mask{1} << perm[i];
  return out;
}

Rel translate_rel(Rel r, int n, const std::vector<int>& perm) {
  Rel out = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (rel_has(r, n, i, j))
        out |= rel_bit(n, perm[static_cast<std::size_t>(i)],
                       perm[static_cast<std::size_t>(j)]);
  return out;
}

} // namespace

std::string to_string(DocKind kind) {
  switch (kind) {
    case DocKind::kripke: return "kripke";
    case DocKind::mkf: return "mkf";
    case DocKind::nfr: return "nfr";
    case DocKind::cama: return "cama";
    case DocKind::map: return "map";
  }
  throw std::logic_error("unhandled DocKind");
}

Document Document::of(KripkeFrame f) {
  Document d{DocKind::kripke};
  d.kripke = std::move(f);
  return d;
}
Document Document::of(MRFrame m) {
  Document d{DocKind::mkf};
  d.mkf = std::move(m);
  return d;
}
Document Document::of(NFrame z) {
  Document d{DocKind::nfr};
  d.nfr = std::move(z);
  return d;
}
Document Document::of(BoxAlgebra a) {
  Document d{DocKind::cama};
  d.cama = std::move(a);
  return d;
}
Document Document::of(WorldMap f) {
  Document d{DocKind::map};
  d.map = std::move(f);
  return d;
}

Document parse_document(const std::string& text, const Caps& caps) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    const auto [line, col] = line_column(text, e.byte > 0 ? e.byte - 1 : 0);
    throw ParseError(e.what(), line, col);
  }
  try {
    if (!root.is_object()) fail("document must be a JSON object");
    if (!root.contains("kind") || !root["kind"].is_string())
      fail("document requires a string field 'kind'");
    const auto kind = root["kind"].get<std::string>();

    if (kind == "kripke") {
      expect_keys(root, {"kind", "worlds", "relation"});
      WorldSet worlds(parse_labels(root["worlds"], "worlds"), caps);
      const Rel rel = parse_relation(worlds, root["relation"], "relation");
      return Document::of(KripkeFrame(std::move(worlds), rel));
    }
    if (kind == "mkf") {
      expect_keys(root, {"kind", "worlds", "relations"});
      WorldSet worlds(parse_labels(root["worlds"], "worlds"), caps);
      if (!root["relations"].is_array()) fail("'relations' must be an array");
      std::vector<Rel> rels;
      for (const auto& item : root["relations"])
        rels.push_back(parse_relation(worlds, item,
                                      "relations[" + std::to_string(rels.size()) + "]"));
      return Document::of(MRFrame(std::move(worlds), std::move(rels), caps));
    }
    if (kind == "nfr") {
      expect_keys(root, {"kind", "worlds", "neighborhoods"});
      WorldSet worlds(parse_labels(root["worlds"], "worlds"), caps);
      if (!root["neighborhoods"].is_array() ||
          static_cast<int>(root["neighborhoods"].size()) != worlds.size())
        fail("'neighborhoods' must list one family per world, in world order");
      std::vector<std::vector<Mask>> nbhd;
      for (int c = 0; c < worlds.size(); ++c) {
        const auto& family = root["neighborhoods"][static_cast<std::size_t>(c)];
        if (!family.is_array())
          fail("neighborhood family of '" + worlds.label(c) + "' must be an array");
        std::vector<Mask> masks;
        for (const auto& subset : family)
          masks.push_back(parse_subset(worlds, subset,
                                       "neighborhood of '" + worlds.label(c) + "'"));
        nbhd.push_back(std::move(masks));
      }
      return Document::of(NFrame(std::move(worlds), std::move(nbhd)));
    }
    if (kind == "cama") {
      expect_keys(root, {"kind", "atoms", "box"});
      WorldSet atoms(parse_labels(root["atoms"], "atoms"), caps);
      const auto carrier = std::size_t{1} << atoms.size();
      if (!root["box"].is_array() || root["box"].size() != carrier)
        fail("'box' must list exactly " + std::to_string(carrier) +
             " [element, image] pairs");
      std::vector<Mask> box(carrier);
      std::vector<bool> seen(carrier, false);
      for (const auto& entry : root["box"]) {
        if (!entry.is_array() || entry.size() != 2)
          fail("box entry must be an [element, image] pair, got " + entry.dump());
        const Mask element = parse_subset(atoms, entry[0], "box element");
        const Mask image = parse_subset(atoms, entry[1], "box image");
        if (seen[element]) fail("box lists element " + entry[0].dump() + " twice");
        seen[element] = true;
        box[element] = image;
      }
      return Document::of(BoxAlgebra(std::move(atoms), std::move(box), caps));
    }
    if (kind == "map") {
      expect_keys(root, {"kind", "source", "target", "pairs"});
      WorldSet source(parse_labels(root["source"], "source"), caps);
      WorldSet target(parse_labels(root["target"], "target"), caps);
      if (!root["pairs"].is_array()) fail("'pairs' must be an array");
      std::vector<int> table(static_cast<std::size_t>(source.size()), -1);
      for (const auto& pair : root["pairs"]) {
        if (!pair.is_array() || pair.size() != 2)
          fail("map pair must be a two-element array, got " + pair.dump());
        const int s = index_or_fail(source, pair[0], "map pair " + pair.dump());
        const int t = index_or_fail(target, pair[1], "map pair " + pair.dump());
        if (table[static_cast<std::size_t>(s)] != -1)
          fail("map lists source '" + source.label(s) + "' twice");
        table[static_cast<std::size_t>(s)] = t;
      }
      for (int s = 0; s < source.size(); ++s)
        if (table[static_cast<std::size_t>(s)] == -1)
          fail("map is missing source '" + source.label(s) + "'");
      return Document::of(WorldMap(std::move(source), std::move(target), std::move(table)));
    }
    fail("unknown kind '" + kind + "'");
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(e.what(), 1, 1);
  }
}

std::string serialize_document(const Document& doc) {
  json out;
  out["kind"] = to_string(doc.kind);
  switch (doc.kind) {
    case DocKind::kripke: {
      const auto& f = *doc.kripke;
      const auto perm = sort_permutation(f.worlds);
      const WorldSet worlds = sorted_worlds(f.worlds);
      out["worlds"] = worlds.labels();
      out["relation"] = relation_json(worlds, translate_rel(f.rel, worlds.size(), perm));
      break;
    }
    case DocKind::mkf: {
      const auto& m = *doc.mkf;
      const auto perm = sort_permutation(m.worlds());
      const WorldSet worlds = sorted_worlds(m.worlds());
      out["worlds"] = worlds.labels();
      std::vector<Rel> rels;
      for (Rel r : m.rels()) rels.push_back(translate_rel(r, m.size(), perm));
      std::sort(rels.begin(), rels.end());
      json arr = json::array();
      for (Rel r : rels) arr.push_back(relation_json(worlds, r));
      out["relations"] = std::move(arr);
      break;
    }
    case DocKind::nfr: {
      const auto& z = *doc.nfr;
      const auto perm = sort_permutation(z.worlds());
      const WorldSet worlds = sorted_worlds(z.worlds());
      out["worlds"] = worlds.labels();
      json families = json::array();
      for (int c = 0; c < worlds.size(); ++c) {
        const int old_c = static_cast<int>(
            std::find(perm.begin(), perm.end(), c) - perm.begin());
        std::vector<Mask> masks;
        for (Mask x : z.nbhd(old_c)) masks.push_back(translate_mask(x, perm));
        std::sort(masks.begin(), masks.end());
        json family = json::array();
        for (Mask x : masks) family.push_back(subset_json(worlds, x));
        families.push_back(std::move(family));
      }
      out["neighborhoods"] = std::move(families);
      break;
    }
    case DocKind::cama: {
      const auto& a = *doc.cama;
      const auto perm = sort_permutation(a.atoms());
      const WorldSet atoms = sorted_worlds(a.atoms());
      out["atoms"] = atoms.labels();
      std::vector<Mask> box(a.carrier_size());
      for (Mask x = 0; x < static_cast<Mask>(a.carrier_size()); ++x)
        box[translate_mask(x, perm)] = translate_mask(a.box(x), perm);
      json table = json::array();
      for (Mask x = 0; x < static_cast<Mask>(box.size()); ++x)
        table.push_back(json::array({subset_json(atoms, x), subset_json(atoms, box[x])}));
      out["box"] = std::move(table);
      break;
    }
    case DocKind::map: {
      const auto& f = *doc.map;
      const WorldSet source = sorted_worlds(f.source);
      const WorldSet target = sorted_worlds(f.target);
      out["source"] = source.labels();
      out["target"] = target.labels();
      json pairs = json::array();
      for (int s = 0; s < source.size(); ++s) {
        const int old_s = *f.source.index_of(source.label(s));
        pairs.push_back(json::array(
            {source.label(s), f.target.label(f.apply(old_s))}));
      }
      out["pairs"] = std::move(pairs);
      break;
    }
  }
  return out.dump();
}

} // namespace dualkit
