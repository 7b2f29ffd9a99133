#include "kzaut/serialize.hpp"

#include <algorithm>
#include <sstream>

#include "kzaut/errors.hpp"
#include "kzaut/parse.hpp"

namespace kzaut {

namespace {

std::string units_to_string(const std::vector<Scalar>& units) {
  std::string s;
  for (const auto& u : units) s += ' ' + u.to_string();
  return s;
}

Scalar parse_unit(const std::string& text, const RingPtr& ring, std::size_t line, std::size_t col) {
  const auto c = parse_commpoly(text, ring, line, col).as_constant();
  if (!c || c->is_zero()) throw ParseError(line, col, "expected a nonzero constant, got '" + text + "'");
  return *c;
}

std::size_t parse_index(const std::string& text, std::size_t dim, std::size_t line, std::size_t col) {
  if (text.empty() || text.size() > 6 || text.find_first_not_of("0123456789") != std::string::npos)
    throw ParseError(line, col, "expected an index, got '" + text + "'");
  const std::size_t k = std::stoul(text);
  if (k == 0 || k > dim) throw ParseError(line, col, "index " + text + " out of range 1.." + std::to_string(dim));
  return k - 1;
}

// Words of a line with their 1-based columns.
std::vector<std::pair<std::string, std::size_t>> words(std::string_view l) {
  std::vector<std::pair<std::string, std::size_t>> out;
  std::size_t i = 0;
  while (i < l.size()) {
    while (i < l.size() && (l[i] == ' ' || l[i] == '\t')) ++i;
    if (i >= l.size()) break;
    std::size_t j = i;
    while (j < l.size() && l[j] != ' ' && l[j] != '\t') ++j;
    out.emplace_back(std::string(l.substr(i, j - i)), i + 1);
    i = j;
  }
  return out;
}

RingPtr ring_from_json(const nlohmann::json& j) {
  std::vector<std::string> vars = j.at("ring").get<std::vector<std::string>>();
  return make_ring(std::move(vars), Field::parse(j.at("field").get<std::string>()));
}

}  // namespace

std::string transcript_to_text(const Transcript& t) {
  std::string s;
  for (const auto& f : expand_swaps(t).factors) {
    if (const auto* e = std::get_if<Elem>(&f)) {
      s += "E " + std::to_string(e->i + 1) + ' ' + std::to_string(e->j + 1) + ' ' + e->p.to_string() + '\n';
    } else {
      s += "D" + units_to_string(std::get<Diag>(f).units) + '\n';
    }
  }
  return s;
}

Transcript transcript_from_text(std::string_view text, const RingPtr& ring, std::size_t dim) {
  Transcript t{ring, dim, {}};
  std::size_t start = 0, number = 1;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view l = text.substr(start, end - start);
    if (const auto hash = l.find('#'); hash != std::string_view::npos) l = l.substr(0, hash);
    const auto w = words(l);
    start = end + 1;
    const std::size_t line = number++;
    if (w.empty()) continue;
    const std::string& tag = w[0].first;
    if (tag == "E") {
      if (w.size() < 4) throw ParseError(line, w[0].second, "expected 'E i j poly'");
      const std::size_t i = parse_index(w[1].first, dim, line, w[1].second);
      const std::size_t j = parse_index(w[2].first, dim, line, w[2].second);
      if (i == j) throw ParseError(line, w[2].second, "elementary factor needs i != j");
      const std::size_t col = w[3].second;
      t.factors.push_back(Elem{i, j, parse_commpoly(l.substr(col - 1), ring, line, col)});
    } else if (tag == "D") {
      if (w.size() != dim + 1) throw ParseError(line, w[0].second, "expected " + std::to_string(dim) + " units");
      std::vector<Scalar> units;
      for (std::size_t k = 1; k < w.size(); ++k) units.push_back(parse_unit(w[k].first, ring, line, w[k].second));
      t.factors.push_back(Diag{std::move(units)});
    } else if (tag == "S") {
      if (w.size() != 3) throw ParseError(line, w[0].second, "expected 'S i j'");
      t.factors.push_back(Swap{parse_index(w[1].first, dim, line, w[1].second),
                               parse_index(w[2].first, dim, line, w[2].second)});
    } else {
      throw ParseError(line, w[0].second, "unknown factor tag '" + tag + "'");
    }
  }
  return t;
}

std::string auto_factors_to_text(const std::vector<AutoFactor>& factors, const Algebra& alg) {
  std::string s;
  for (const auto& f : expand_swaps(factors, alg)) {
    if (const auto* e = std::get_if<ElemAuto>(&f)) {
      s += "A " + std::to_string(e->i + 1) + ' ' + std::to_string(e->j + 1) + ' ' + e->a.to_string() + ' ' +
           e->b.to_string() + '\n';
    } else {
      s += "AS" + units_to_string(std::get<ScaleAuto>(f).units) + '\n';
    }
  }
  return s;
}

std::string matrix_to_text(const PolyMatrix& m) {
  const std::size_t n = m.size();
  std::vector<std::size_t> width(n, 0);
  std::vector<std::vector<std::string>> cells;
  for (std::size_t i = 0; i < n; ++i) {
    cells.push_back(m.row_strings(i));
    for (std::size_t j = 0; j < n; ++j) width[j] = std::max(width[j], cells[i][j].size());
  }
  std::string s;
  for (std::size_t i = 0; i < n; ++i) {
    s += "[";
    for (std::size_t j = 0; j < n; ++j) {
      s += ' ' + cells[i][j];
      if (j + 1 < n) s += std::string(width[j] - cells[i][j].size() + 1, ' ');
      else s += std::string(width[j] - cells[i][j].size(), ' ');
    }
    s += " ]\n";
  }
  return s;
}

nlohmann::json matrix_to_json(const PolyMatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < m.size(); ++i) rows.push_back(m.row_strings(i));
  return rows;
}

PolyMatrix matrix_from_json(const nlohmann::json& j, const RingPtr& ring) {
  std::vector<std::vector<CommPoly>> rows;
  for (const auto& r : j) {
    std::vector<CommPoly> row;
    for (const auto& e : r) row.push_back(parse_commpoly(e.get<std::string>(), ring));
    rows.push_back(std::move(row));
  }
  return PolyMatrix(ring, std::move(rows));
}

nlohmann::json transcript_to_json(const Transcript& t) {
  nlohmann::json factors = nlohmann::json::array();
  for (const auto& f : expand_swaps(t).factors) {
    if (const auto* e = std::get_if<Elem>(&f)) {
      factors.push_back({{"type", "E"}, {"i", e->i + 1}, {"j", e->j + 1}, {"poly", e->p.to_string()}});
    } else {
      std::vector<std::string> units;
      for (const auto& u : std::get<Diag>(f).units) units.push_back(u.to_string());
      factors.push_back({{"type", "D"}, {"units", units}});
    }
  }
  return {{"dim", t.dim}, {"ring", t.ring->vars}, {"field", t.ring->field.to_string()}, {"factors", factors}};
}

Transcript transcript_from_json(const nlohmann::json& j) {
  const RingPtr ring = ring_from_json(j);
  const std::size_t dim = j.at("dim").get<std::size_t>();
  Transcript t{ring, dim, {}};
  auto index = [&](const nlohmann::json& f, const char* key) {
    const auto k = f.at(key).get<std::size_t>();
    if (k == 0 || k > dim) throw DimensionError("transcript index out of range");
    return k - 1;
  };
  for (const auto& f : j.at("factors")) {
    const std::string type = f.at("type").get<std::string>();
    if (type == "E") {
      t.factors.push_back(Elem{index(f, "i"), index(f, "j"), parse_commpoly(f.at("poly").get<std::string>(), ring)});
    } else if (type == "D") {
      std::vector<Scalar> units;
      for (const auto& u : f.at("units")) units.push_back(parse_unit(u.get<std::string>(), ring, 1, 1));
      t.factors.push_back(Diag{std::move(units)});
    } else if (type == "S") {
      t.factors.push_back(Swap{index(f, "i"), index(f, "j")});
    } else {
      throw DomainError("unknown factor type '" + type + "'");
    }
  }
  return t;
}

nlohmann::json auto_factors_to_json(const std::vector<AutoFactor>& factors, const Algebra& alg) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& f : expand_swaps(factors, alg)) {
    if (const auto* e = std::get_if<ElemAuto>(&f)) {
      out.push_back({{"type", "A"}, {"i", e->i + 1}, {"j", e->j + 1}, {"a", e->a.to_string()}, {"b", e->b.to_string()}});
    } else {
      std::vector<std::string> units;
      for (const auto& u : std::get<ScaleAuto>(f).units) units.push_back(u.to_string());
      out.push_back({{"type", "AS"}, {"units", units}});
    }
  }
  return out;
}

}  // namespace kzaut
