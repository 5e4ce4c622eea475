#include "bbsuper/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "bbsuper/error.hpp"

namespace bbsuper::io {

namespace {

std::vector<int> ints_of(const RootVector& v) { return {v.coeffs().begin(), v.coeffs().end()}; }

void read_part(const json& j, const char* key, std::vector<Rational>& into) {
  if (!j.contains(key)) return;
  const json& part = j.at(key);
  if (!part.is_object())
    throw Error(ErrorKind::Parse, std::string("weight field '") + key + "' must be an object");
  for (const auto& [k, v] : part.items()) {
    std::size_t idx = 0;
    try {
      idx = std::stoul(k);
    } catch (const std::exception&) {
      throw Error(ErrorKind::Parse, "weight index '" + k + "' is not an integer");
    }
    if (idx < 1 || idx > into.size())
      throw Error(ErrorKind::Parse, "weight index " + k + " out of range");
    into[idx - 1] = rational_from_json(v);
  }
}

json write_part(const std::vector<Rational>& part) {
  json out = json::object();
  for (std::size_t i = 0; i < part.size(); ++i)
    if (part[i] != 0) out[std::to_string(i + 1)] = rational_to_string(part[i]);
  return out;
}

json indices_json(const std::vector<std::size_t>& idx) {
  json out = json::array();
  for (auto i : idx) out.push_back(i + 1);
  return out;
}

}  // namespace

json load_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Parse, "cannot open " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    const auto upto = std::min<std::size_t>(e.byte, text.size());
    const auto line = 1 + std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(upto), '\n');
    throw Error(ErrorKind::Parse, path.string() + ":" + std::to_string(line) + ": " + e.what());
  }
}

OddCartanDatum datum_from_json(const json& j) {
  try {
    const auto A = j.at("A").get<std::vector<std::vector<int>>>();
    const auto D = j.at("D").get<std::vector<int>>();
    std::vector<std::size_t> odd;
    for (int i : j.value("odd", std::vector<int>{})) {
      if (i < 1) throw Error(ErrorKind::Parse, "odd indices are 1-based");
      odd.push_back(static_cast<std::size_t>(i - 1));
    }
    return validate_datum(A, D, odd);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::Parse, std::string("datum: ") + e.what());
  }
}

json datum_to_json(const OddCartanDatum& datum) {
  const std::size_t n = datum.rank();
  json A = json::array();
  for (std::size_t i = 0; i < n; ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < n; ++j) row.push_back(datum.a(i, j));
    A.push_back(row);
  }
  return json{{"A", A},
              {"D", datum.matrix().symmetrizer},
              {"odd", indices_json(datum.odd_indices())},
              {"re", indices_json(datum.re_indices())},
              {"im", indices_json(datum.im_indices())},
              {"iso", indices_json(datum.iso_indices())},
              {"even", indices_json(datum.even_indices())}};
}

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) throw Error(ErrorKind::Parse, "rational must be a \"p/q\" string");
  const auto text = j.get<std::string>();
  Rational q;
  if (q.set_str(text, 10) != 0 || q.get_den() == 0)
    throw Error(ErrorKind::Parse, "malformed rational '" + text + "'");
  q.canonicalize();
  return q;
}

std::string rational_to_string(const Rational& q) {
  Rational c(q);
  c.canonicalize();
  return c.get_str(10);
}

Weight weight_from_json(const json& j, std::size_t rank) {
  if (!j.is_object()) throw Error(ErrorKind::Parse, "weight must be a JSON object");
  Weight w = Weight::zero(rank);
  read_part(j, "Lambda", w.fundamental);
  read_part(j, "delta", w.aux);
  read_part(j, "alpha", w.root);
  return w;
}

json weight_to_json(const Weight& w) {
  return json{{"Lambda", write_part(w.fundamental)},
              {"alpha", write_part(w.root)},
              {"delta", write_part(w.aux)}};
}

json series_to_json(const CharSeries& s) {
  json terms = json::array();
  for (const auto& [beta, c] : s.terms()) terms.push_back(json{{"exp", ints_of(beta)}, {"coef", c.get_str()}});
  return json{{"H", s.height_bound()}, {"base", weight_to_json(s.base())}, {"terms", terms}};
}

CharSeries series_from_json(const json& j, std::size_t rank) {
  try {
    CharSeries s(rank, j.at("H").get<int>(), weight_from_json(j.at("base"), rank));
    for (const auto& t : j.at("terms")) {
      const auto exp = t.at("exp").get<std::vector<int>>();
      if (exp.size() != rank) throw Error(ErrorKind::Parse, "series exponent has wrong rank");
      s.add_term(RootVector(exp), BigInt(t.at("coef").get<std::string>()));
    }
    return s;
  } catch (const json::exception& e) {
    throw Error(ErrorKind::Parse, std::string("series: ") + e.what());
  }
}

json root_table_to_json(const RootTable& table) {
  json out = json::array();
  for (const auto& [beta, entry] : table.entries) {
    json mult = entry.multiplicity.fits_slong_p() ? json(entry.multiplicity.get_si())
                                                  : json(entry.multiplicity.get_str());
    out.push_back(json{{"root", ints_of(beta)},
                       {"mult", mult},
                       {"parity", entry.parity == Parity::Even ? "even" : "odd"},
                       {"class", entry.root_class == RootClass::Real ? "real" : "imaginary"}});
  }
  return out;
}

RootTable root_table_from_json(const json& j, std::size_t rank, int H) {
  RootTable table{rank, H, {}};
  try {
    for (const auto& row : j) {
      const auto root = row.at("root").get<std::vector<int>>();
      if (root.size() != rank) throw Error(ErrorKind::Parse, "root has wrong rank");
      const json& m = row.at("mult");
      RootEntry entry{m.is_string() ? BigInt(m.get<std::string>()) : BigInt(m.get<long>()),
                      row.at("parity").get<std::string>() == "odd" ? Parity::Odd : Parity::Even,
                      row.at("class").get<std::string>() == "real" ? RootClass::Real
                                                                   : RootClass::Imaginary};
      table.entries.emplace(RootVector(root), std::move(entry));
    }
  } catch (const json::exception& e) {
    throw Error(ErrorKind::Parse, std::string("root table: ") + e.what());
  }
  return table;
}

json character_to_json(const CharacterResult& result) {
  const auto& d = result.diagnostics;
  return json{{"lambda", weight_to_json(result.lambda)},
              {"H", result.H},
              {"character", series_to_json(result.character)},
              {"diagnostics",
               {{"orbit_size", d.orbit_size},
                {"support_count", d.support_count},
                {"numerator_terms", d.numerator_terms},
                {"residual_zero", d.residual_zero}}}};
}

json oracle_rows_to_json(const std::vector<OracleRow>& rows) {
  json out = json::array();
  for (const auto& row : rows) out.push_back(json{{"mu_offset", ints_of(row.mu_offset)}, {"dim", row.dim}});
  return out;
}

}  // namespace bbsuper::io
