#pragma once

/**
 * @file io.hpp
 * @brief Canonical text documents for categories, MC objects, local systems,
 * simplicial sets, functors and adjunction data.
 *
 * A document is a JSON object
 *
 *     {"field": "q" | "fp:<p>", "format_version": "dgres/1", "kind": ..., "payload": ...}
 *
 * Keys are sorted, scalars are strings ("3", "-1/2", residues mod p) and
 * linear combinations are objects mapping basis names to scalars. Printing is
 * deterministic, so print(parse(s)) is the canonical form of s.
 */

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "dgres/local_system.hpp"
#include "dgres/mc.hpp"
#include "dgres/pushout.hpp"
#include "dgres/sset.hpp"

namespace dgres::io {

inline constexpr std::string_view kFormatVersion = "dgres/1";

enum class DocumentKind { DgCategory, MCObject, LocalSystem, SimplicialSet, Functor, AdjunctionData };
std::string_view to_string(DocumentKind kind) noexcept;

using Payload = std::variant<DgCategoryPtr, MCObject, LocalSystem, FiniteSSet, DgFunctor, AdjunctionData>;

struct Document {
  DocumentKind kind = DocumentKind::DgCategory;
  Field field = Field::rationals();
  Payload payload;
};

/// Parses documents, sharing one category object between documents that embed equal categories
/// (so that MC objects read from different files can be compared and composed).
class DocumentReader {
 public:
  /// Used when a document has no "field" entry; a document whose field disagrees raises FieldMismatch.
  explicit DocumentReader(std::optional<Field> field = std::nullopt) : field_(field) {}

  /// Throws ParseError (with the offending field path, or line/column for syntax errors) and VersionMismatch,
  /// plus whatever validation error the payload triggers.
  Document parse(std::string_view text);

 private:
  friend struct ReaderAccess;
  std::optional<Field> field_;
  std::vector<std::pair<std::string, DgCategoryPtr>> categories_;
};

Document parse_document(std::string_view text, std::optional<Field> field = std::nullopt);
std::string print_document(const Document& doc);
/// print(parse(text)).
std::string canonical(std::string_view text);

Document make_document(DgCategoryPtr cat);
Document make_document(const MCObject& x);
Document make_document(const LocalSystem& x);
Document make_document(const FiniteSSet& k, const Field& field);
Document make_document(const DgFunctor& f);
Document make_document(const AdjunctionData& data);

/// Nonzero coefficients of v keyed by basis names of Hom(x,y).
std::map<std::string, std::string> combination(const DgCategory& cat, std::size_t x, std::size_t y, const Vector& v);

}  // namespace dgres::io
