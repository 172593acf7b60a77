#include "uso/io.hpp"

#include <fstream>
#include <sstream>

namespace uso {

using nlohmann::json;

namespace {

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw std::invalid_argument("rational entries must be integers or \"p/q\" strings");
}

}  // namespace

json orientation_to_json(const Orientation& phi) {
  return json{{"n", phi.dim()}, {"out", phi.outmap()}};
}

Orientation orientation_from_json(const json& j) {
  int n = j.at("n").get<int>();
  auto out = j.at("out").get<std::vector<std::uint32_t>>();
  return Orientation(n, std::move(out));
}

json matrix_to_json(const RationalMatrix& M) {
  json rows = json::array();
  for (int r = 0; r < M.rows(); ++r) {
    json row = json::array();
    for (int c = 0; c < M.cols(); ++c) row.push_back(rational_to_string(M.at(r, c)));
    rows.push_back(std::move(row));
  }
  return json{{"n", M.rows()}, {"entries", rows}};
}

RationalMatrix matrix_from_json(const json& j) {
  const auto& rows = j.at("entries");
  int n = j.at("n").get<int>();
  if (static_cast<int>(rows.size()) != n)
    throw std::invalid_argument("matrix row count does not match n");
  int cols = rows.empty() ? 0 : static_cast<int>(rows[0].size());
  RationalMatrix M(n, cols);
  for (int r = 0; r < n; ++r) {
    if (static_cast<int>(rows[r].size()) != cols)
      throw std::invalid_argument("ragged matrix rows");
    for (int c = 0; c < cols; ++c) M.at(r, c) = rational_from_json(rows[r][c]);
  }
  return M;
}

json vector_to_json(const RationalVector& v) {
  json entries = json::array();
  for (int i = 0; i < v.size(); ++i) entries.push_back(rational_to_string(v[i]));
  return json{{"n", v.size()}, {"entries", entries}};
}

RationalVector vector_from_json(const json& j) {
  const auto& entries = j.at("entries");
  int n = j.at("n").get<int>();
  if (static_cast<int>(entries.size()) != n)
    throw std::invalid_argument("vector length does not match n");
  RationalVector v(n);
  for (int i = 0; i < n; ++i) v[i] = rational_from_json(entries[i]);
  return v;
}

BetaAssignment beta_from_json(const json& j) {
  BetaAssignment beta(j.at("n").get<int>());
  for (const auto& triple : j.at("beta")) {
    if (triple.size() != 3)
      throw std::invalid_argument("beta entries must be [i, j, value]");
    beta.set(triple[0].get<int>(), triple[1].get<int>(),
             rational_from_json(triple[2]));
  }
  return beta;
}

MonotoneFunction monotone_from_json(const json& j) {
  int k = j.at("k").get<int>();
  std::vector<bool> table;
  for (const auto& cell : j.at("table")) table.push_back(cell.get<int>() != 0);
  return MonotoneFunction(k, std::move(table));
}

MonotoneFunction antichain_from_json(const json& j) {
  int k = j.at("k").get<int>();
  std::vector<std::uint32_t> members;
  for (const auto& m : j.at("members"))
    members.push_back(parse_vertex_string(m.get<std::string>(), k));
  return antichain_function(members, k);
}

std::string orientation_to_dot(const Orientation& phi) {
  std::ostringstream os;
  os << "digraph cube {\n";
  for (std::uint32_t v = 0; v < phi.vertex_count(); ++v)
    os << "  \"" << vertex_string(phi.dim(), v) << "\";\n";
  for (std::uint32_t v = 0; v < phi.vertex_count(); ++v)
    for (int i = 1; i <= phi.dim(); ++i)
      if (phi.edge_out(v, i))
        os << "  \"" << vertex_string(phi.dim(), v) << "\" -> \""
           << vertex_string(phi.dim(), v ^ coord_bit(i)) << "\";\n";
  os << "}\n";
  return os.str();
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  json j;
  in >> j;
  return j;
}

void save_json_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << j.dump(2) << "\n";
}

void save_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

}  // namespace uso
