#pragma once

// Line-oriented input files.
//
//   ring=hahn p=2 m=2 modulus=[1,1,1] prec=32
//   q=2
//   phi=
//   1; 0
//   0; t^(-1)
//
// `key=value` pairs may share a line; a token without `=` continues the previous
// value. A key with an empty value opens a block whose rows follow, entries
// separated by `;`. `#` starts a comment.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "hnslope/matrix.hpp"
#include "hnslope/padic.hpp"
#include "hnslope/phimod.hpp"
#include "hnslope/series.hpp"
#include "hnslope/slopes.hpp"

namespace hnslope {

struct Block {
  std::string key;
  std::vector<std::vector<std::string>> rows;
  std::vector<std::size_t> lines;
};

class Document {
 public:
  /// Throws ParseError (with line numbers) or SchemaError for duplicate keys.
  static Document parse(std::string_view text);

  bool has(const std::string& key) const { return values_.count(key) != 0; }
  /// Throws SchemaError when missing.
  const std::string& value(const std::string& key) const;
  std::optional<std::string> value_or(const std::string& key) const;
  const Block* block(const std::string& key) const;
  /// Blocks named `key`, in file order.
  std::vector<const Block*> blocks(const std::string& key) const;

 private:
  std::map<std::string, std::string> values_;
  std::vector<Block> blocks_;
};

enum class RingKind { Hahn, Padic, Xi };

/// The ring named by the `ring=` header. `prec_override` replaces `prec=`/`N=`.
using AnyRing = std::variant<HahnRing, PadicRing, XiRing>;
AnyRing read_ring(const Document& doc, std::optional<Rational> prec_override = std::nullopt);
RingKind ring_kind(const AnyRing& ring);

template <class R>
Matrix<R> read_matrix(const Document& doc, const typename R::Ring& ring, const std::string& key = "matrix");
RationalMatrix read_rational_matrix(const Block& block);

PhiModule read_phi_module(const Document& doc, std::optional<Rational> prec_override = std::nullopt);
/// The `triv=` block with optional `tolerance=`; nullopt when absent.
std::optional<Trivialization> read_trivialization(const Document& doc, const PhiModule& m);
/// `matrix=` block, or `slopes=[d/h x k, ...]`.
Isocrystal read_isocrystal(const Document& doc);
HTModule read_ht_module(const Document& doc, std::optional<Rational> prec_override = std::nullopt);
/// All `candidate=` blocks.
std::vector<RationalMatrix> read_candidates(const Document& doc);
/// `[3/2 x 2, 0 x 1]` or plain entries.
SlopeVector parse_slope_data(std::string_view text);

std::string format_matrix_rows(const std::vector<std::vector<std::string>>& rows);
template <class R>
std::string format_matrix(const Matrix<R>& m);
std::string format_ring(const AnyRing& ring);
std::string format(const PhiModule& m);
std::string format(const Isocrystal& d);
std::string format(const HTModule& h);

std::string read_file(const std::string& path);

}  // namespace hnslope
