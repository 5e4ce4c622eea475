#include "bbsuper/cli.hpp"

#include <iomanip>
#include <ostream>

#include "bbsuper/charformula.hpp"
#include "bbsuper/error.hpp"
#include "bbsuper/io.hpp"
#include "bbsuper/roots.hpp"
#include "bbsuper/verma_oracle.hpp"

namespace bbsuper::cli {

using io::json;

namespace {

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  void print(std::ostream& os) const {
    std::vector<std::size_t> width(header.size());
    for (std::size_t c = 0; c < header.size(); ++c) width[c] = header[c].size();
    for (const auto& r : rows)
      for (std::size_t c = 0; c < r.size(); ++c) width[c] = std::max(width[c], r[c].size());
    auto line = [&](const std::vector<std::string>& cells) {
      for (std::size_t c = 0; c < cells.size(); ++c)
        os << (c ? "  " : "") << std::left << std::setw(static_cast<int>(width[c])) << cells[c];
      os << '\n';
    };
    line(header);
    for (const auto& r : rows) line(r);
  }
};

void emit(std::ostream& out, Format format, const json& document, const Table& table) {
  if (format == Format::Table)
    table.print(out);
  else
    out << document.dump(2) << '\n';
}

Table root_table_view(const RootTable& table) {
  Table t{{"root", "mult", "parity", "class"}, {}};
  for (const auto& [beta, e] : table.entries)
    t.rows.push_back({beta.to_string(), e.multiplicity.get_str(),
                      e.parity == Parity::Even ? "even" : "odd",
                      e.root_class == RootClass::Real ? "real" : "imaginary"});
  return t;
}

Weight require_lambda(const JobSpec& job, const OddCartanDatum& datum) {
  if (!job.lambda_path) throw Error(ErrorKind::Parse, "--lambda is required for this subcommand");
  return io::weight_from_json(io::load_json(*job.lambda_path), datum.rank());
}

int do_validate(const OddCartanDatum& datum, const JobSpec& job, std::ostream& out) {
  const json doc = io::datum_to_json(datum);
  Table t{{"field", "value"}, {}};
  for (const char* key : {"re", "im", "iso", "odd", "even"}) t.rows.push_back({key, doc.at(key).dump()});
  emit(out, job.format, doc, t);
  return kOk;
}

int do_roots(const OddCartanDatum& datum, const JobSpec& job, std::ostream& out) {
  const RootTable table = solve_multiplicities(datum, job.height, job.jobs);
  emit(out, job.format, io::root_table_to_json(table), root_table_view(table));
  return kOk;
}

int do_denom_check(const OddCartanDatum& datum, const JobSpec& job, std::ostream& out) {
  const RootTable table = solve_multiplicities(datum, job.height, job.jobs);
  const CharSeries residual = denominator_residual(datum, table, job.height);
  const bool zero = residual.terms().empty();
  const json doc{{"H", job.height},
                 {"residual_zero", zero},
                 {"residual", io::series_to_json(residual)},
                 {"roots", io::root_table_to_json(table)}};
  Table t = root_table_view(table);
  t.rows.push_back({"residual", zero ? "0" : "nonzero", "", ""});
  emit(out, job.format, doc, t);
  return zero ? kOk : kMismatch;
}

int do_char(const OddCartanDatum& datum, const JobSpec& job, std::ostream& out) {
  const Weight lambda = require_lambda(job, datum);
  const RootTable table = solve_multiplicities(datum, job.height, job.jobs);
  const CharacterResult result = irreducible_character(datum, table, lambda, job.height, job.jobs);
  Table t{{"mu_offset", "coef"}, {}};
  for (const auto& [beta, c] : result.character.terms()) t.rows.push_back({beta.to_string(), c.get_str()});
  emit(out, job.format, io::character_to_json(result), t);
  return kOk;
}

std::vector<OracleRow> oracle_rows(const OddCartanDatum& datum, const JobSpec& job) {
  const OracleCaps caps = OracleCaps::from_env();
  if (job.symbolic) return symbolic_oracle_table(datum, job.height, caps, job.jobs);
  return oracle_table(datum, require_lambda(job, datum), job.height, caps, job.jobs);
}

int do_oracle(const OddCartanDatum& datum, const JobSpec& job, std::ostream& out) {
  const auto rows = oracle_rows(datum, job);
  Table t{{"mu_offset", "dim"}, {}};
  for (const auto& r : rows) t.rows.push_back({r.mu_offset.to_string(), std::to_string(r.dim)});
  emit(out, job.format, io::oracle_rows_to_json(rows), t);
  return kOk;
}

int do_compare(const OddCartanDatum& datum, const JobSpec& job, std::ostream& out) {
  const Weight lambda = require_lambda(job, datum);
  const RootTable table = solve_multiplicities(datum, job.height, job.jobs);
  const CharacterResult formula = irreducible_character(datum, table, lambda, job.height, job.jobs);
  const auto oracle = oracle_table(datum, lambda, job.height, OracleCaps::from_env(), job.jobs);

  json rows = json::array();
  json mismatches = json::array();
  Table t{{"mu_offset", "formula", "oracle", ""}, {}};
  for (const auto& r : oracle) {
    const BigInt f = formula.character.coefficient(r.mu_offset);
    const bool same = f == r.dim;
    json row{{"mu_offset", std::vector<int>(r.mu_offset.coeffs().begin(), r.mu_offset.coeffs().end())},
             {"formula", f.get_str()},
             {"oracle", r.dim}};
    if (!same) mismatches.push_back(row);
    rows.push_back(row);
    t.rows.push_back({r.mu_offset.to_string(), f.get_str(), std::to_string(r.dim), same ? "" : "MISMATCH"});
  }
  const bool identical = mismatches.empty();
  emit(out, job.format,
       json{{"H", job.height}, {"identical", identical}, {"rows", rows}, {"mismatches", mismatches}}, t);
  return identical ? kOk : kMismatch;
}

}  // namespace

std::optional<Subcommand> parse_subcommand(const std::string& name) {
  if (name == "validate") return Subcommand::Validate;
  if (name == "roots") return Subcommand::Roots;
  if (name == "char") return Subcommand::Char;
  if (name == "denom-check") return Subcommand::DenomCheck;
  if (name == "oracle") return Subcommand::Oracle;
  if (name == "compare") return Subcommand::Compare;
  return std::nullopt;
}

int run(const JobSpec& job, std::ostream& out, std::ostream& err) {
  try {
    if (job.height < 0) throw Error(ErrorKind::Parse, "--height must be nonnegative");
    const OddCartanDatum datum = io::datum_from_json(io::load_json(job.datum_path));
    switch (job.subcommand) {
      case Subcommand::Validate: return do_validate(datum, job, out);
      case Subcommand::Roots: return do_roots(datum, job, out);
      case Subcommand::Char: return do_char(datum, job, out);
      case Subcommand::DenomCheck: return do_denom_check(datum, job, out);
      case Subcommand::Oracle: return do_oracle(datum, job, out);
      case Subcommand::Compare: return do_compare(datum, job, out);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.kind() == ErrorKind::Unreachable ? kResourceCap : kValidationError;
  }
  return kValidationError;
}

}  // namespace bbsuper::cli
