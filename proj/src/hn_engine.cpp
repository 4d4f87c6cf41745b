#include "hnslope/hn_engine.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "hnslope/error.hpp"

namespace hnslope {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

[[noreturn]] void parse_fail(std::size_t line, const std::string& msg) {
  fail(ErrorKind::ParseError, "line " + std::to_string(line) + ", column 1: " + msg);
}

}  // namespace

RankedPoset::RankedPoset(std::vector<PosetElement> elements,
                         const std::vector<std::pair<std::size_t, std::size_t>>& relations,
                         std::optional<std::size_t> bottom, std::optional<std::size_t> top)
    : elements_(std::move(elements)), relations_(relations) {
  const std::size_t n = elements_.size();
  if (n == 0) fail(ErrorKind::InvalidPoset, "poset without elements");
  leq_.assign(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) leq_[i * n + i] = 1;
  for (auto [a, b] : relations_) {
    if (a >= n || b >= n) fail(ErrorKind::InvalidPoset, "relation refers to a missing element");
    if (a == b) fail(ErrorKind::InvalidPoset, "relation " + elements_[a].id + " < itself");
    if (elements_[a].rank >= elements_[b].rank) {
      fail(ErrorKind::InvalidPoset,
           "rank does not increase along " + elements_[a].id + " < " + elements_[b].id);
    }
    leq_[a * n + b] = 1;
  }
  // Warshall closure; ranks strictly increase along generators, so no cycles can form.
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!leq_[i * n + k]) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (leq_[k * n + j]) leq_[i * n + j] = 1;
      }
    }
  }

  auto infer = [&](bool lowest) -> std::size_t {
    long target = elements_[0].rank;
    for (const auto& e : elements_) target = lowest ? std::min(target, e.rank) : std::max(target, e.rank);
    std::optional<std::size_t> found;
    for (std::size_t i = 0; i < n; ++i) {
      if (elements_[i].rank != target) continue;
      if (found) {
        fail(ErrorKind::InvalidPoset, std::string("cannot infer the ") +
                                          (lowest ? "bottom" : "top") +
                                          " element; give it explicitly");
      }
      found = i;
    }
    return *found;
  };
  bottom_ = bottom ? *bottom : infer(true);
  top_ = top ? *top : infer(false);
  if (bottom_ >= n || top_ >= n) fail(ErrorKind::InvalidPoset, "bound index out of range");
  if (elements_[bottom_].rank != 0) fail(ErrorKind::InvalidPoset, "rank(bottom) must be 0");
  if (!elements_[bottom_].deg.is_zero()) fail(ErrorKind::InvalidPoset, "deg(bottom) must be 0");
  for (std::size_t i = 0; i < n; ++i) {
    if (!leq(bottom_, i) || !leq(i, top_)) {
      fail(ErrorKind::InvalidPoset, "element " + elements_[i].id + " is not between bottom and top");
    }
  }
}

std::size_t RankedPoset::index_of(std::string_view id) const {
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (elements_[i].id == id) return i;
  }
  fail(ErrorKind::InvalidArgument, "unknown poset element '" + std::string(id) + "'");
}

RankedPoset RankedPoset::parse(std::string_view text) {
  std::vector<PosetElement> elements;
  std::map<std::string, std::size_t> index;
  std::vector<std::pair<std::string, std::string>> pending;
  std::vector<std::size_t> pending_lines;
  std::optional<std::string> bottom_id, top_id;

  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string_view line = raw;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    if (auto eq = line.find('='); eq != std::string_view::npos) {
      const auto key = trim(line.substr(0, eq));
      const auto value = std::string(trim(line.substr(eq + 1)));
      if (key == "bottom") bottom_id = value;
      else if (key == "top") top_id = value;
      else parse_fail(lineno, "unknown key '" + std::string(key) + "'");
      continue;
    }
    std::istringstream tokens{std::string(line)};
    std::vector<std::string> words;
    for (std::string w; tokens >> w;) words.push_back(w);
    if (words.size() == 3 && words[1] == "<") {
      pending.emplace_back(words[0], words[2]);
      pending_lines.push_back(lineno);
      continue;
    }
    if (words.size() != 3) parse_fail(lineno, "expected `id rank deg` or `id < id`");
    if (index.count(words[0])) parse_fail(lineno, "duplicate element '" + words[0] + "'");
    PosetElement e;
    e.id = words[0];
    try {
      e.rank = Rational::parse(words[1]).to_long();
      e.deg = Rational::parse(words[2]);
    } catch (const Error& err) {
      parse_fail(lineno, err.what());
    }
    index[e.id] = elements.size();
    elements.push_back(std::move(e));
  }

  std::vector<std::pair<std::size_t, std::size_t>> relations;
  for (std::size_t k = 0; k < pending.size(); ++k) {
    auto a = index.find(pending[k].first);
    auto b = index.find(pending[k].second);
    if (a == index.end() || b == index.end()) parse_fail(pending_lines[k], "unknown element in relation");
    relations.emplace_back(a->second, b->second);
  }
  auto lookup = [&](const std::optional<std::string>& id) -> std::optional<std::size_t> {
    if (!id) return std::nullopt;
    auto it = index.find(*id);
    if (it == index.end()) fail(ErrorKind::SchemaError, "unknown bound element '" + *id + "'");
    return it->second;
  };
  return RankedPoset(std::move(elements), relations, lookup(bottom_id), lookup(top_id));
}

std::string RankedPoset::str() const {
  std::string out;
  for (const auto& e : elements_) out += e.id + " " + std::to_string(e.rank) + " " + e.deg.str() + "\n";
  for (auto [a, b] : relations_) out += elements_[a].id + " < " + elements_[b].id + "\n";
  out += "bottom=" + elements_[bottom_].id + "\n";
  out += "top=" + elements_[top_].id + "\n";
  return out;
}

SlopeVector filtration_type(const GammaFiltration& filtration, const RankedPoset& poset) {
  const auto& c = filtration.chain;
  const auto& g = filtration.jumps;
  if (c.size() < 2 || g.size() + 1 != c.size()) {
    fail(ErrorKind::InvalidChain, "a filtration needs |jumps| = |chain| - 1 >= 1");
  }
  if (c.front() != poset.bottom() || c.back() != poset.top()) {
    fail(ErrorKind::InvalidChain, "chain must run from bottom to top");
  }
  std::vector<Rational> entries;
  for (std::size_t i = 0; i + 1 < c.size(); ++i) {
    if (c[i] >= poset.size() || c[i + 1] >= poset.size() || !poset.less(c[i], c[i + 1])) {
      fail(ErrorKind::InvalidChain, "chain is not strictly increasing");
    }
    if (i > 0 && !(g[i] < g[i - 1])) fail(ErrorKind::InvalidChain, "jumps must strictly decrease");
    const long width = poset.element(c[i + 1]).rank - poset.element(c[i]).rank;
    entries.insert(entries.end(), static_cast<std::size_t>(width), g[i]);
  }
  return SlopeVector(std::move(entries));
}

std::vector<std::pair<Rational, Rational>> upper_envelope(const RankedPoset& poset) {
  std::map<long, Rational> best;
  for (const auto& e : poset.elements()) {
    auto it = best.find(e.rank);
    if (it == best.end()) best.emplace(e.rank, e.deg);
    else if (it->second < e.deg) it->second = e.deg;
  }
  const long r = poset.total_rank();
  best[0] = Rational(0);
  best[r] = poset.element(poset.top()).deg;
  std::vector<std::pair<Rational, Rational>> hull;
  for (const auto& [rank, deg] : best) {
    const Rational x(rank);
    while (hull.size() >= 2) {
      const auto& [ax, ay] = hull[hull.size() - 2];
      const auto& [bx, by] = hull.back();
      // Remove b unless it lies strictly above the segment a -> (x, deg).
      const Rational cross = (bx - ax) * (deg - ay) - (by - ay) * (x - ax);
      if (cross.sign() >= 0) hull.pop_back();
      else break;
    }
    hull.emplace_back(x, deg);
  }
  return hull;
}

GammaFiltration hn_filtration(const RankedPoset& poset) {
  if (poset.total_rank() < 1) fail(ErrorKind::InvalidPoset, "rank(top) must be at least 1");
  const auto hull = upper_envelope(poset);
  GammaFiltration result;
  result.chain.push_back(poset.bottom());
  for (std::size_t v = 1; v + 1 < hull.size(); ++v) {
    const auto& [x, y] = hull[v];
    std::vector<std::size_t> realizers;
    for (std::size_t i = 0; i < poset.size(); ++i) {
      if (Rational(poset.element(i).rank) == x && poset.element(i).deg == y) realizers.push_back(i);
    }
    const std::string where = "breakpoint (" + x.str() + ", " + y.str() + ")";
    if (realizers.size() != 1) {
      fail(ErrorKind::NotAdmissible,
           where + " has " + std::to_string(realizers.size()) + " realizers");
    }
    if (!poset.less(result.chain.back(), realizers.front())) {
      fail(ErrorKind::NotAdmissible, where + " is not above the previous breakpoint");
    }
    result.chain.push_back(realizers.front());
  }
  result.chain.push_back(poset.top());
  for (std::size_t v = 1; v < hull.size(); ++v) {
    result.jumps.push_back((hull[v].second - hull[v - 1].second) / (hull[v].first - hull[v - 1].first));
  }
  return result;
}

bool semistable(const RankedPoset& poset) {
  const Rational r(poset.total_rank());
  const Rational d = poset.element(poset.top()).deg;
  for (const auto& e : poset.elements()) {
    if (d * Rational(e.rank) < e.deg * r) return false;
  }
  return true;
}

const char* to_string(ConcatResult r) noexcept {
  switch (r) {
    case ConcatResult::Equal: return "Equal";
    case ConcatResult::DominatedBy: return "DominatedBy";
    case ConcatResult::Violation: return "Violation";
  }
  return "?";
}

ConcatResult concat_check(const SlopeVector& t_sub, const SlopeVector& t_quot,
                          const SlopeVector& t_total) {
  if (t_sub.size() + t_quot.size() != t_total.size()) {
    fail(ErrorKind::LengthMismatch, "lengths " + std::to_string(t_sub.size()) + " + " +
                                        std::to_string(t_quot.size()) + " != " +
                                        std::to_string(t_total.size()));
  }
  const auto merged = convex_sum(t_sub, t_quot);
  if (merged == t_total) return ConcatResult::Equal;
  return dominated_by(t_total, merged) ? ConcatResult::DominatedBy : ConcatResult::Violation;
}

}  // namespace hnslope
