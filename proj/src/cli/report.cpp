#include <fstream>
#include <ostream>

#include "bedard/cli.hpp"
#include "bedard/error.hpp"

namespace bedard::cli {
namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string render_csv(const Report& r) {
  std::string out;
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) out += (i ? "," : "") + csv_field(cells[i]);
    out += "\n";
  };
  line(r.csv_header);
  for (const auto& row : r.csv_rows) line(row);
  return out;
}

std::string render_table(const Report& r) {
  std::vector<std::size_t> width(r.csv_header.size(), 0);
  auto measure = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size() && i < width.size(); ++i) width[i] = std::max(width[i], cells[i].size());
  };
  measure(r.csv_header);
  for (const auto& row : r.csv_rows) measure(row);
  std::string out;
  auto line = [&](const std::vector<std::string>& cells) {
    std::string text;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      text += cells[i];
      if (i + 1 < cells.size()) text += std::string(width[i] - cells[i].size() + 2, ' ');
    }
    out += text + "\n";
  };
  line(r.csv_header);
  std::vector<std::string> rule;
  for (std::size_t wdt : width) rule.emplace_back(std::max<std::size_t>(wdt, 1), '-');
  line(rule);
  for (const auto& row : r.csv_rows) line(row);
  return out;
}

}  // namespace

std::string emit_report(const Report& report, Format format) {
  switch (format) {
    case Format::json:
      return report.json.dump(2) + "\n";
    case Format::csv:
      return render_csv(report);
    case Format::table:
      return render_table(report);
  }
  return {};
}

int exit_code_for(const std::exception& e) {
  if (dynamic_cast<const BudgetExceeded*>(&e) || dynamic_cast<const CapExceeded*>(&e)) return kBudget;
  if (dynamic_cast<const UnknownType*>(&e) || dynamic_cast<const ParseError*>(&e) ||
      dynamic_cast<const InvalidTwist*>(&e) || dynamic_cast<const NotMinimalInput*>(&e) ||
      dynamic_cast<const InvalidPresentation*>(&e) || dynamic_cast<const TwistNotSimpleOnSubset*>(&e) ||
      dynamic_cast<const DimensionMismatch*>(&e)) {
    return kUsage;
  }
  return kVerifyFailed;
}

int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  const ParseOutcome parsed = parse_args(args);
  if (!parsed.config) {
    (parsed.exit_code == kPass ? out : err) << parsed.message << (parsed.message.ends_with('\n') ? "" : "\n");
    return parsed.exit_code;
  }
  const RunConfig& cfg = *parsed.config;
  Report report;
  try {
    report = run_command(cfg);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e);
  }
  const std::string text = emit_report(report, cfg.format);
  if (cfg.out) {
    std::ofstream file(*cfg.out, std::ios::binary);
    if (!file || !(file << text)) {
      err << "error: cannot write " << *cfg.out << "\n";
      return kVerifyFailed;
    }
  } else {
    out << text;
  }
  return report.exit_code;
}

}  // namespace bedard::cli
