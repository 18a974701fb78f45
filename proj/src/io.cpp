#include "gtutte/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace gtutte {

Json rat_to_json(const Rat& q) { return to_string(q); }

Rat rat_from_json(const Json& j) {
  if (j.is_string()) return parse_rat(j.get<std::string>());
  if (j.is_number_integer()) return Rat(static_cast<long>(j.get<long long>()));
  throw std::invalid_argument("expected a rational string, got " + j.dump());
}

Json to_json(const BiPoly& p) {
  Json out = Json::array();
  for (const auto& [m, c] : p.terms()) out.push_back(Json::array({m.x_exp, m.y_exp, to_string(c)}));
  return out;
}

BiPoly bipoly_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("polynomial JSON must be an array of [i, j, c]");
  BiPoly out;
  for (const auto& t : j) {
    if (!t.is_array() || t.size() != 3) throw std::invalid_argument("bad term " + t.dump());
    out.add_term({t[0].get<int>(), t[1].get<int>()}, rat_from_json(t[2]));
  }
  return out;
}

Json to_json(const GInv& v) {
  Json coeffs = Json::object();
  for (const auto& [s, c] : v.coeffs) coeffs[s.str()] = to_string(c);
  return {{"n", v.n}, {"r", v.r}, {"coeffs", coeffs}};
}

GInv ginv_from_json(const Json& j) {
  GInv v(j.at("n").get<int>(), j.at("r").get<int>());
  for (const auto& [key, c] : j.at("coeffs").items()) v.add(BitSeq::parse(key), rat_from_json(c));
  return v;
}

Json to_json(const BasisListMatroid& m) {
  Json bases = Json::array();
  for (ElementSet b : m.bases()) bases.push_back(elements_of(b));
  return {{"n", m.size()}, {"r", m.rank()}, {"bases", bases}};
}

BasisListMatroid matroid_from_json(const Json& j) {
  try {
    const int n = j.at("n").get<int>();
    const int r = j.at("r").get<int>();
    std::vector<ElementSet> bases;
    for (const auto& b : j.at("bases")) {
      const auto elems = b.get<std::vector<int>>();
      for (int e : elems) {
        if (e < 1 || e > n) throw std::invalid_argument("element " + std::to_string(e) + " outside 1.." + std::to_string(n));
      }
      bases.push_back(make_set(elems));
    }
    if (!validate_basis_list(n, r, bases)) throw std::invalid_argument("basis list violates the exchange axiom");
    return BasisListMatroid(n, r, std::move(bases));
  } catch (const Json::exception& e) {
    throw std::invalid_argument(std::string("malformed matroid JSON: ") + e.what());
  } catch (const std::domain_error& e) {
    throw std::invalid_argument(e.what());
  }
}

Json to_json(const LabeledMatrix& m) {
  Json entries = Json::array();
  for (std::size_t i = 0; i < m.matrix.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.matrix.cols(); ++j) row.push_back(to_string(m.matrix(i, j)));
    entries.push_back(row);
  }
  return {{"rows", m.row_labels}, {"columns", m.col_labels}, {"entries", entries}};
}

std::string to_csv(const LabeledMatrix& m) {
  std::string out = "monomial";
  for (const auto& c : m.col_labels) out += "," + c;
  out += "\n";
  for (std::size_t i = 0; i < m.matrix.rows(); ++i) {
    out += m.row_labels.at(i);
    for (std::size_t j = 0; j < m.matrix.cols(); ++j) out += "," + to_string(m.matrix(i, j));
    out += "\n";
  }
  return out;
}

LabeledMatrix labeled_matrix_from_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  auto split = [](const std::string& s) {
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream ls(s);
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    return cells;
  };
  LabeledMatrix out;
  std::vector<std::vector<Rat>> rows;
  bool header = true;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    auto cells = split(line);
    if (header) {
      out.col_labels.assign(cells.begin() + 1, cells.end());
      header = false;
      continue;
    }
    if (cells.size() != out.col_labels.size() + 1) throw std::invalid_argument("ragged CSV row: " + line);
    out.row_labels.push_back(cells.front());
    std::vector<Rat> row;
    for (std::size_t j = 1; j < cells.size(); ++j) row.push_back(parse_rat(cells[j]));
    rows.push_back(std::move(row));
  }
  out.matrix = RatMatrix(rows.size(), out.col_labels.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < rows[i].size(); ++j) out.matrix(i, j) = rows[i][j];
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace gtutte
