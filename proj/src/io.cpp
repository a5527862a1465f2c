#include "dposet/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace dposet {

namespace {

using nlohmann::json;

json parse_json(const std::string& text, const std::string& what) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded())
    throw std::invalid_argument("malformed JSON in " + what);
  return j;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

Instance parse_instance(const std::string& complex_json,
                        const std::string& filter_json, bool perturb) {
  json j = parse_json(complex_json, "complex file");
  if (!j.is_object() || !j.contains("cells") || !j["cells"].is_array())
    throw std::invalid_argument("complex file needs a \"cells\" array");

  struct Raw {
    int id;
    int dim;
    std::string label;
    std::optional<double> value;
  };
  std::vector<Raw> raw;
  for (const json& c : j["cells"]) {
    if (!c.is_object() || !c.contains("id") || !c.contains("dim"))
      throw std::invalid_argument("every cell needs \"id\" and \"dim\"");
    Raw r{c["id"].get<int>(), c["dim"].get<int>(), "", std::nullopt};
    if (c.contains("label")) r.label = c["label"].get<std::string>();
    if (c.contains("value")) r.value = c["value"].get<double>();
    raw.push_back(std::move(r));
  }
  std::sort(raw.begin(), raw.end(),
            [](const Raw& a, const Raw& b) { return a.id < b.id; });
  for (int i = 0; i < int(raw.size()); ++i)
    if (raw[i].id != i)
      throw std::invalid_argument("cell ids must be 0..n-1 without gaps; saw id " +
                                  std::to_string(raw[i].id));

  std::vector<Cell> cells;
  std::vector<double> values;
  int with_value = 0;
  for (const Raw& r : raw) {
    cells.push_back({r.id, r.dim, r.label});
    if (r.value) {
      values.push_back(*r.value);
      ++with_value;
    }
  }
  if (with_value != 0 && with_value != int(raw.size()))
    throw std::invalid_argument("either all cells carry a value or none");

  std::vector<std::pair<int, int>> incidences;
  if (j.contains("incidence")) {
    if (!j["incidence"].is_array())
      throw std::invalid_argument("\"incidence\" must be an array of pairs");
    for (const json& e : j["incidence"]) {
      if (!e.is_array() || e.size() != 2)
        throw std::invalid_argument("incidence entries are [facet_id, cofacet_id]");
      incidences.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
  }

  Instance inst;
  inst.complex = LefschetzComplex(std::move(cells), incidences);

  if (!filter_json.empty()) {
    json f = parse_json(filter_json, "filter file");
    if (!f.is_object() || !f.contains("values") || !f["values"].is_array())
      throw std::invalid_argument("filter file needs a \"values\" array");
    values.clear();
    for (const json& v : f["values"]) values.push_back(v.get<double>());
    with_value = int(values.size());
  }

  if (with_value > 0) {
    Filter filter{std::move(values)};
    if (perturb) filter = break_ties(inst.complex, filter);
    inst.filter = std::move(filter);
  }

  auto violations = validate_complex(inst.complex);
  if (!violations.empty())
    throw std::invalid_argument("invalid complex: " + violations.front().message);
  if (inst.filter) {
    auto issues = validate_filter(inst.complex, *inst.filter);
    if (!issues.empty())
      throw std::invalid_argument("invalid filter: " + issues.front());
  }
  return inst;
}

Instance load_instance(const std::string& path, const std::string& filter_path,
                       bool perturb) {
  return parse_instance(read_file(path),
                        filter_path.empty() ? "" : read_file(filter_path),
                        perturb);
}

std::string format_double(double v) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, end);
}

std::string serialize_instance(const LefschetzComplex& complex,
                               const Filter& filter) {
  json cells = json::array();
  for (const Cell& c : complex.cells()) {
    json cell{{"id", c.id}, {"dim", c.dim}, {"value", filter.value(c.id)}};
    if (!c.label.empty()) cell["label"] = c.label;
    cells.push_back(std::move(cell));
  }
  json incidence = json::array();
  for (auto [x, y] : complex.incidence_pairs())
    incidence.push_back(json::array({x, y}));
  json out{{"cells", std::move(cells)}, {"incidence", std::move(incidence)}};
  return out.dump(2) + "\n";
}

namespace {

std::string pair_name(const BirthDeathPair& p, const LefschetzComplex& complex) {
  return "(" + complex.display_name(p.birth) + "," +
         complex.display_name(p.death) + ")";
}

}  // namespace

std::string emit_dot(const DepthPoset& poset, const LefschetzComplex& complex) {
  std::ostringstream out;
  out << "digraph depth_poset {\n";
  out << "  rankdir=BT;\n";
  for (const BirthDeathPair& p : poset.elements)
    out << "  \"" << pair_name(p, complex) << "\" [label=\""
        << pair_name(p, complex) << " p=" << p.dim << "\"];\n";
  for (auto [i, j] : poset.hasse)
    out << "  \"" << pair_name(poset.elements[i], complex) << "\" -> \""
        << pair_name(poset.elements[j], complex) << "\";\n";
  out << "}\n";
  return out.str();
}

std::string emit_closure_json(const DepthPoset& poset,
                              const LefschetzComplex& complex) {
  json pairs = json::array();
  for (int i = 0; i < int(poset.elements.size()); ++i) {
    const BirthDeathPair& p = poset.elements[i];
    pairs.push_back(json{{"id", i},
                         {"birth", complex.display_name(p.birth)},
                         {"death", complex.display_name(p.death)},
                         {"dim", p.dim},
                         {"birth_value", p.birth_value},
                         {"death_value", p.death_value}});
  }
  json closure = json::array();
  for (auto [i, j] : poset.closure) closure.push_back(json::array({i, j}));
  json hasse = json::array();
  for (auto [i, j] : poset.hasse) hasse.push_back(json::array({i, j}));
  json out{{"pairs", std::move(pairs)},
           {"closure", std::move(closure)},
           {"hasse", std::move(hasse)}};
  return out.dump(2) + "\n";
}

std::string emit_diagram_csv(const DepthPoset& poset) {
  std::ostringstream out;
  out << "birth_value,death_value,dim,pair_id\n";
  if (poset.elements.empty()) return out.str();
  for (int i = 0; i < int(poset.elements.size()); ++i) {
    const BirthDeathPair& p = poset.elements[i];
    out << format_double(p.birth_value) << ',' << format_double(p.death_value)
        << ',' << p.dim << ',' << i << '\n';
  }
  out << "pair_id_from,pair_id_to\n";
  for (auto [i, j] : poset.hasse) out << i << ',' << j << '\n';
  return out.str();
}

std::string emit_diagram_svg(const DepthPoset& poset,
                             const LefschetzComplex& complex) {
  double lo = 0.0, hi = 1.0;
  if (!poset.elements.empty()) {
    lo = poset.elements.front().birth_value;
    hi = poset.elements.front().death_value;
    for (const BirthDeathPair& p : poset.elements) {
      lo = std::min(lo, p.birth_value);
      hi = std::max(hi, p.death_value);
    }
  }
  const double pad = (hi - lo) * 0.08 + 1e-9;
  lo -= pad;
  hi += pad;
  const double size = 480.0;
  auto sx = [&](double v) { return (v - lo) / (hi - lo) * size; };
  auto sy = [&](double v) { return size - (v - lo) / (hi - lo) * size; };

  static const char* palette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                  "#8c564b", "#e377c2"};
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"480\" height=\"480\" "
         "viewBox=\"0 0 480 480\">\n";
  out << "  <line x1=\"" << format_double(sx(lo)) << "\" y1=\""
      << format_double(sy(lo)) << "\" x2=\"" << format_double(sx(hi))
      << "\" y2=\"" << format_double(sy(hi))
      << "\" stroke=\"#999999\" stroke-width=\"1\"/>\n";
  for (auto [i, j] : poset.hasse) {
    const BirthDeathPair& a = poset.elements[i];
    const BirthDeathPair& b = poset.elements[j];
    // Quadratic arc bent toward the diagonal so parallel edges stay apart.
    const double mx = (sx(a.birth_value) + sx(b.birth_value)) / 2.0 + 12.0;
    const double my = (sy(a.death_value) + sy(b.death_value)) / 2.0 + 12.0;
    out << "  <path d=\"M " << format_double(sx(a.birth_value)) << ' '
        << format_double(sy(a.death_value)) << " Q " << format_double(mx) << ' '
        << format_double(my) << ' ' << format_double(sx(b.birth_value)) << ' '
        << format_double(sy(b.death_value))
        << "\" fill=\"none\" stroke=\"#555555\" stroke-width=\"1\"/>\n";
  }
  for (const BirthDeathPair& p : poset.elements) {
    const char* color = palette[std::size_t(p.dim) % std::size(palette)];
    out << "  <circle cx=\"" << format_double(sx(p.birth_value)) << "\" cy=\""
        << format_double(sy(p.death_value)) << "\" r=\"4\" fill=\"" << color
        << "\"><title>" << pair_name(p, complex) << "</title></circle>\n";
  }
  out << "</svg>\n";
  return out.str();
}

std::string dump_matrix_ascii(const OrderedBoundaryMatrix& matrix) {
  std::ostringstream out;
  for (int pos = 0; pos < matrix.size(); ++pos)
    out << "# " << pos << ": " << matrix.label_at(pos) << " dim "
        << matrix.dim_at(pos) << " value " << format_double(matrix.value_at(pos))
        << '\n';
  for (int r = 0; r < matrix.size(); ++r) {
    for (int c = 0; c < matrix.size(); ++c)
      out << (matrix.entry(r, c) ? '1' : '.');
    out << '\n';
  }
  return out.str();
}

std::string dump_matrix_sparse(const OrderedBoundaryMatrix& matrix) {
  std::ostringstream out;
  for (int c = 0; c < matrix.size(); ++c)
    for (int r : matrix.column(c).set_bits())
      out << r << ' ' << c << "  # " << matrix.label_at(r) << " < "
          << matrix.label_at(c) << '\n';
  return out.str();
}

}  // namespace dposet
