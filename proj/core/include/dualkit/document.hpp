#ifndef DUALKIT_DOCUMENT_HPP
#define DUALKIT_DOCUMENT_HPP

#include "dualkit/morphisms.hpp"

namespace dualkit {

/// Malformed text or schema violation; line/column point at the offending
/// token when the underlying JSON itself failed to parse (1 1 otherwise).
struct ParseError : Error {
  ParseError(const std::string& msg, int line_, int column_)
      : Error(msg), line(line_), column(column_) {}
  int line = 1;
  int column = 1;
};

enum class DocKind { kripke, mkf, nfr, cama, map };

std::string to_string(DocKind kind);

/// One serializable object; exactly the member matching `kind` is set.
struct Document {
  DocKind kind;
  std::optional<KripkeFrame> kripke;
  std::optional<MRFrame> mkf;
  std::optional<NFrame> nfr;
  std::optional<BoxAlgebra> cama;
  std::optional<WorldMap> map;

  static Document of(KripkeFrame f);
  static Document of(MRFrame m);
  static Document of(NFrame z);
  static Document of(BoxAlgebra a);
  static Document of(WorldMap f);
};

/// Strict parse: unknown fields rejected, labels validated, duplicates
/// rejected. World/atom lists are reordered to sorted label order, so parsing
/// is canonicalizing; all cross-references are by label and survive that.
Document parse_document(const std::string& text, const Caps& caps = kDefaultCaps);

/// Canonical form: sorted labels, subsets in ascending mask order with
/// label-ordered members, relations ascending with lexicographic pairs, box
/// tables as explicit (element, image) pairs over every carrier element.
/// serialize(parse(t)) is a fixed point.
std::string serialize_document(const Document& doc);

} // namespace dualkit

#endif // DUALKIT_DOCUMENT_HPP
