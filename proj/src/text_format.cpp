#include "hnslope/text_format.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "hnslope/error.hpp"
#include "hnslope/finite_field.hpp"

namespace hnslope {

namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

[[noreturn]] void line_fail(std::size_t line, const std::string& msg) {
  fail(ErrorKind::ParseError, "line " + std::to_string(line) + ": " + msg);
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.emplace_back(trim(s.substr(start, pos == std::string_view::npos ? pos : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::vector<std::string> bracket_list(std::string_view text, const std::string& what) {
  text = trim(text);
  if (text.size() < 2 || text.front() != '[' || text.back() != ']') {
    fail(ErrorKind::ParseError, what + " must be enclosed in '[' ']'");
  }
  text = trim(text.substr(1, text.size() - 2));
  if (text.empty()) return {};
  return split(text, ',');
}

unsigned long parse_unsigned(const std::string& s, const std::string& key) {
  const Rational r = Rational::parse(s);
  if (!r.is_integer() || r.sign() <= 0) fail(ErrorKind::SchemaError, key + " must be a positive integer");
  return static_cast<unsigned long>(r.to_long());
}

template <class R>
R parse_entry(const typename R::Ring& ring, const std::string& text, std::size_t line) {
  try {
    return R::parse(ring, text);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::ParseError) throw;
    line_fail(line, e.what());
  }
}

const Block& require_block(const Document& doc, const std::string& key) {
  const Block* b = doc.block(key);
  if (!b) fail(ErrorKind::SchemaError, "missing block '" + key + "='");
  return *b;
}

void expect_ring(const Document& doc, const std::string& kind) {
  if (doc.value("ring") != kind) fail(ErrorKind::SchemaError, "expected ring=" + kind);
}

}  // namespace

Document Document::parse(std::string_view text) {
  Document doc;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t lineno = 0;
  Block* open = nullptr;
  std::string* continuing = nullptr;  // bracketed value spanning lines
  auto unbalanced = [](const std::string& v) {
    return std::count(v.begin(), v.end(), '[') > std::count(v.begin(), v.end(), ']');
  };
  while (std::getline(in, raw)) {
    ++lineno;
    std::string_view line = raw;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    if (continuing) {
      *continuing += " " + std::string(line);
      if (!unbalanced(*continuing)) continuing = nullptr;
      continue;
    }

    std::istringstream words{std::string(line)};
    std::string first;
    words >> first;
    if (first.find('=') == std::string::npos) {
      if (!open) line_fail(lineno, "matrix row outside a block");
      open->rows.push_back(split(line, ';'));
      open->lines.push_back(lineno);
      continue;
    }

    std::vector<std::pair<std::string, std::string>> pairs;
    for (std::string w = first; !w.empty(); w.clear(), words >> w) {
      const auto eq = w.find('=');
      if (eq == std::string::npos) {
        if (pairs.empty()) line_fail(lineno, "value without a key");
        pairs.back().second += (pairs.back().second.empty() ? "" : " ") + w;
        continue;
      }
      if (eq == 0) line_fail(lineno, "empty key");
      pairs.emplace_back(w.substr(0, eq), w.substr(eq + 1));
    }
    open = nullptr;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      auto& [key, value] = pairs[i];
      if (value.empty()) {
        if (i + 1 != pairs.size()) line_fail(lineno, "block key '" + key + "=' must end its line");
        if (key != "candidate" && doc.block(key)) fail(ErrorKind::SchemaError, "duplicate block '" + key + "='");
        doc.blocks_.push_back(Block{key, {}, {}});
        open = &doc.blocks_.back();
        continue;
      }
      if (doc.values_.count(key)) fail(ErrorKind::SchemaError, "duplicate key '" + key + "'");
      std::string& stored = doc.values_[key] = value;
      if (i + 1 == pairs.size() && unbalanced(stored)) continuing = &stored;
    }
  }
  if (continuing) fail(ErrorKind::ParseError, "line " + std::to_string(lineno) + ": unterminated '['");
  return doc;
}

const std::string& Document::value(const std::string& key) const {
  auto it = values_.find(key);
  if (it == values_.end()) fail(ErrorKind::SchemaError, "missing key '" + key + "'");
  return it->second;
}

std::optional<std::string> Document::value_or(const std::string& key) const {
  auto it = values_.find(key);
  if (it == values_.end()) return std::nullopt;
  return it->second;
}

const Block* Document::block(const std::string& key) const {
  for (const auto& b : blocks_) {
    if (b.key == key) return &b;
  }
  return nullptr;
}

std::vector<const Block*> Document::blocks(const std::string& key) const {
  std::vector<const Block*> out;
  for (const auto& b : blocks_) {
    if (b.key == key) out.push_back(&b);
  }
  return out;
}

AnyRing read_ring(const Document& doc, std::optional<Rational> prec_override) {
  const std::string& kind = doc.value("ring");
  if (kind == "padic") {
    return make_padic_ring(parse_unsigned(doc.value("p"), "p"));
  }
  if (kind == "xi") {
    Rational n = prec_override ? *prec_override : Rational::parse(doc.value_or("N").value_or("32"));
    if (n.sign() <= 0) fail(ErrorKind::SchemaError, "N must be positive");
    return make_xi_ring(n);
  }
  if (kind == "hahn") {
    const auto p = static_cast<unsigned>(parse_unsigned(doc.value("p"), "p"));
    std::vector<long> modulus;
    if (auto mod = doc.value_or("modulus")) {
      for (const auto& c : bracket_list(*mod, "modulus")) modulus.push_back(Rational::parse(c).to_long());
      if (auto m = doc.value_or("m"); m && parse_unsigned(*m, "m") + 1 != modulus.size()) {
        fail(ErrorKind::SchemaError, "modulus degree does not match m");
      }
    } else {
      const auto m = static_cast<unsigned>(parse_unsigned(doc.value_or("m").value_or("1"), "m"));
      modulus = default_modulus(p, m);
    }
    Rational prec = prec_override ? *prec_override : Rational::parse(doc.value_or("prec").value_or("32"));
    if (prec.sign() <= 0) fail(ErrorKind::SchemaError, "prec must be positive");
    return make_hahn_ring(FiniteField::make(p, modulus), prec);
  }
  fail(ErrorKind::SchemaError, "unknown ring '" + kind + "' (expected hahn, padic or xi)");
}

RingKind ring_kind(const AnyRing& ring) { return static_cast<RingKind>(ring.index()); }

template <class R>
Matrix<R> read_matrix(const Document& doc, const typename R::Ring& ring, const std::string& key) {
  const Block& b = require_block(doc, key);
  std::vector<std::vector<R>> rows;
  for (std::size_t i = 0; i < b.rows.size(); ++i) {
    std::vector<R> row;
    for (const auto& e : b.rows[i]) row.push_back(parse_entry<R>(ring, e, b.lines[i]));
    rows.push_back(std::move(row));
  }
  return Matrix<R>::from_rows(ring, rows);
}

template Matrix<HahnSeries> read_matrix(const Document&, const HahnRing&, const std::string&);
template Matrix<PadicNumber> read_matrix(const Document&, const PadicRing&, const std::string&);
template Matrix<XiSeries> read_matrix(const Document&, const XiRing&, const std::string&);

RationalMatrix read_rational_matrix(const Block& block) {
  RationalMatrix out;
  for (std::size_t i = 0; i < block.rows.size(); ++i) {
    std::vector<Rational> row;
    for (const auto& e : block.rows[i]) {
      try {
        row.push_back(Rational::parse(e));
      } catch (const Error& err) {
        line_fail(block.lines[i], err.what());
      }
    }
    if (!out.empty() && row.size() != out.front().size()) fail(ErrorKind::SchemaError, "ragged candidate matrix");
    out.push_back(std::move(row));
  }
  return out;
}

PhiModule read_phi_module(const Document& doc, std::optional<Rational> prec_override) {
  expect_ring(doc, "hahn");
  const auto ring = std::get<HahnRing>(read_ring(doc, prec_override));
  const auto q = parse_unsigned(doc.value_or("q").value_or(std::to_string(ring->field->p())), "q");
  return PhiModule(read_matrix<HahnSeries>(doc, ring, "phi"), q);
}

std::optional<Trivialization> read_trivialization(const Document& doc, const PhiModule& m) {
  if (!doc.block("triv")) return std::nullopt;
  Trivialization t{read_matrix<HahnSeries>(doc, m.ring(), "triv"), std::nullopt};
  if (auto tol = doc.value_or("tolerance")) t.tolerance = Rational::parse(*tol);
  return t;
}

SlopeVector parse_slope_data(std::string_view text) {
  std::vector<Rational> entries;
  for (const auto& item : bracket_list(text, "slope data")) {
    const auto x = item.find(" x ");
    if (x == std::string::npos) {
      entries.push_back(Rational::parse(item));
      continue;
    }
    const Rational slope = Rational::parse(trim(std::string_view(item).substr(0, x)));
    const auto count = parse_unsigned(std::string(trim(std::string_view(item).substr(x + 3))), "multiplicity");
    entries.insert(entries.end(), count, slope);
  }
  return SlopeVector::from_multiset(std::move(entries));
}

Isocrystal read_isocrystal(const Document& doc) {
  expect_ring(doc, "padic");
  const auto ring = std::get<PadicRing>(read_ring(doc));
  if (auto s = doc.value_or("slopes")) {
    if (doc.block("matrix")) fail(ErrorKind::SchemaError, "give either slopes= or matrix=, not both");
    return Isocrystal::from_slopes(ring, parse_slope_data(*s));
  }
  return Isocrystal(read_matrix<PadicNumber>(doc, ring, "matrix"));
}

HTModule read_ht_module(const Document& doc, std::optional<Rational> prec_override) {
  expect_ring(doc, "xi");
  const auto ring = std::get<XiRing>(read_ring(doc, prec_override));
  return HTModule(read_matrix<XiSeries>(doc, ring, "matrix"));
}

std::vector<RationalMatrix> read_candidates(const Document& doc) {
  std::vector<RationalMatrix> out;
  for (const Block* b : doc.blocks("candidate")) out.push_back(read_rational_matrix(*b));
  return out;
}

std::string format_matrix_rows(const std::vector<std::vector<std::string>>& rows) {
  std::string out;
  for (const auto& row : rows) {
    for (std::size_t j = 0; j < row.size(); ++j) out += (j ? "; " : "") + row[j];
    out += "\n";
  }
  return out;
}

template <class R>
std::string format_matrix(const Matrix<R>& m) {
  return m.str();
}

template std::string format_matrix(const Matrix<HahnSeries>&);
template std::string format_matrix(const Matrix<PadicNumber>&);
template std::string format_matrix(const Matrix<XiSeries>&);

std::string format_ring(const AnyRing& ring) {
  switch (ring_kind(ring)) {
    case RingKind::Padic:
      return "ring=padic p=" + std::to_string(std::get<PadicRing>(ring)->p) + "\n";
    case RingKind::Xi:
      return "ring=xi N=" + std::get<XiRing>(ring)->default_precision.str() + "\n";
    case RingKind::Hahn: {
      const auto& ctx = *std::get<HahnRing>(ring);
      std::string mod;
      for (auto c : ctx.field->modulus()) mod += (mod.empty() ? "" : ",") + std::to_string(c);
      return "ring=hahn p=" + std::to_string(ctx.field->p()) + " m=" + std::to_string(ctx.field->m()) +
             " modulus=[" + mod + "] prec=" + ctx.default_precision.str() + "\n";
    }
  }
  return {};
}

std::string format(const PhiModule& m) {
  return format_ring(m.ring()) + "q=" + std::to_string(m.q()) + "\nphi=\n" + m.phi().str();
}

std::string format(const Isocrystal& d) {
  return format_ring(d.phi().ring()) + "matrix=\n" + d.phi().str();
}

std::string format(const HTModule& h) { return format_ring(h.ring()) + "matrix=\n" + h.xi().str(); }

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::IoError, "cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace hnslope
