#include "coolsim/trace_io.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <system_error>

#include <nlohmann/json.hpp>

namespace coolsim {

std::string format_double(double value) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), value);
  if (res.ec != std::errc{}) throw std::runtime_error("double formatting failed");
  return std::string(buf, res.ptr);
}

namespace {

double parse_double(const std::string& text) {
  double value = 0.0;
  const auto res = std::from_chars(text.data(), text.data() + text.size(), value);
  if (res.ec != std::errc{} || res.ptr != text.data() + text.size())
    throw std::runtime_error("bad numeric field: " + text);
  return value;
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream ss(line);
  while (std::getline(ss, field, ',')) fields.push_back(field);
  return fields;
}

std::vector<RoundRecord> rows_to_records(
    const std::vector<std::tuple<int, int, double>>& rows) {
  std::vector<RoundRecord> records;
  for (const auto& [round, qubit, pol] : rows) {
    if (records.empty() || records.back().round != round)
      records.push_back({round, {}});
    if (qubit != static_cast<int>(records.back().polarizations.size()) + 1)
      throw std::runtime_error("trace rows out of order");
    records.back().polarizations.push_back(pol);
  }
  return records;
}

}  // namespace

void write_trace_csv(std::ostream& out, const CoolingTrace& trace) {
  out << "round,qubit,polarization\n";
  for (const auto& rec : trace.rounds)
    for (std::size_t q = 0; q < rec.polarizations.size(); ++q)
      out << rec.round << ',' << (q + 1) << ',' << format_double(rec.polarizations[q])
          << '\n';
}

std::vector<RoundRecord> read_trace_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != "round,qubit,polarization")
    throw std::runtime_error("missing trace CSV header");
  std::vector<std::tuple<int, int, double>> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto fields = split_csv_line(line);
    if (fields.size() != 3) throw std::runtime_error("malformed trace CSV row");
    rows.emplace_back(static_cast<int>(parse_double(fields[0])),
                      static_cast<int>(parse_double(fields[1])),
                      parse_double(fields[2]));
  }
  return rows_to_records(rows);
}

void write_trace_json(std::ostream& out, const CoolingTrace& trace) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& rec : trace.rounds)
    for (std::size_t q = 0; q < rec.polarizations.size(); ++q)
      rows.push_back({{"round", rec.round},
                      {"qubit", q + 1},
                      {"polarization", rec.polarizations[q]}});
  nlohmann::json doc{{"protocol", trace.protocol}, {"rows", rows}};
  out << doc.dump(2) << '\n';
}

std::vector<RoundRecord> read_trace_json(std::istream& in) {
  nlohmann::json doc = nlohmann::json::parse(in);
  std::vector<std::tuple<int, int, double>> rows;
  for (const auto& row : doc.at("rows"))
    rows.emplace_back(row.at("round").get<int>(), row.at("qubit").get<int>(),
                      row.at("polarization").get<double>());
  return rows_to_records(rows);
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
  out << "protocol,n,eps_b,eps_max_sim,eps_max_theory,abs_err,rounds_used,flag\n";
  for (const auto& r : rows)
    out << r.protocol << ',' << r.n << ',' << format_double(r.eps_b) << ','
        << format_double(r.eps_max_sim) << ',' << format_double(r.eps_max_theory) << ','
        << format_double(r.abs_err) << ',' << r.rounds_used << ',' << r.flag << '\n';
}

void write_sweep_json(std::ostream& out, const std::vector<SweepRow>& rows) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : rows)
    arr.push_back({{"protocol", r.protocol},
                   {"n", r.n},
                   {"eps_b", r.eps_b},
                   {"eps_max_sim", r.eps_max_sim},
                   {"eps_max_theory", r.eps_max_theory},
                   {"abs_err", r.abs_err},
                   {"rounds_used", r.rounds_used},
                   {"flag", r.flag}});
  out << arr.dump(2) << '\n';
}

std::vector<SweepRow> read_sweep_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) ||
      line != "protocol,n,eps_b,eps_max_sim,eps_max_theory,abs_err,rounds_used,flag")
    throw std::runtime_error("missing sweep CSV header");
  std::vector<SweepRow> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto fields = split_csv_line(line);
    if (fields.size() != 8) throw std::runtime_error("malformed sweep CSV row");
    SweepRow r;
    r.protocol = fields[0];
    r.n = static_cast<int>(parse_double(fields[1]));
    r.eps_b = parse_double(fields[2]);
    r.eps_max_sim = parse_double(fields[3]);
    r.eps_max_theory = parse_double(fields[4]);
    r.abs_err = parse_double(fields[5]);
    r.rounds_used = static_cast<int>(parse_double(fields[6]));
    r.flag = fields[7];
    rows.push_back(std::move(r));
  }
  return rows;
}

}  // namespace coolsim
