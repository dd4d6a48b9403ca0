#include "skewlab/io.hpp"

#include <algorithm>
#include <cctype>
#include <iomanip>
#include <sstream>

#include "json.hpp"
#include "skewlab/error.hpp"

namespace skewlab::io {

namespace {

std::string sanitize_name(const std::string& name, const std::string& fallback) {
  if (name.empty()) return fallback;
  std::string out = name;
  for (char& c : out) {
    if (std::isspace(static_cast<unsigned char>(c)) || c == '#') c = '-';
  }
  return out;
}

void append_table(std::ostringstream& os, const FiniteGroup& g) {
  for (int a = 0; a < g.order(); ++a) {
    for (int b = 0; b < g.order(); ++b) {
      if (b) os << ' ';
      os << g.op(a, b);
    }
    os << '\n';
  }
}

struct LineReader {
  std::vector<std::vector<std::string>> lines;  // tokenized, comments stripped
  std::size_t next = 0;

  explicit LineReader(const std::string& document) {
    std::istringstream in(document);
    std::string line;
    while (std::getline(in, line)) {
      const auto hash = line.find('#');
      if (hash != std::string::npos) line.erase(hash);
      std::istringstream ls(line);
      std::vector<std::string> tokens;
      std::string token;
      while (ls >> token) tokens.push_back(token);
      if (!tokens.empty()) lines.push_back(std::move(tokens));
    }
  }

  bool done() const { return next >= lines.size(); }

  const std::vector<std::string>& take(const std::string& context) {
    if (done()) throw ParseError("unexpected end of document, expected " + context);
    return lines[next++];
  }
};

int parse_int(const std::string& token, const std::string& context) {
  try {
    std::size_t used = 0;
    const int value = std::stoi(token, &used);
    if (used != token.size()) throw std::invalid_argument(token);
    return value;
  } catch (const std::exception&) {
    throw ParseError("expected an integer for " + context + ", got '" + token + "'");
  }
}

// Reads `order` rows of `order` entries each.
std::vector<int> parse_table(LineReader& reader, int order, const std::string& what) {
  std::vector<int> table;
  table.reserve(static_cast<std::size_t>(order) * order);
  for (int row = 0; row < order; ++row) {
    const auto& tokens = reader.take(what + " table row " + std::to_string(row));
    if (static_cast<int>(tokens.size()) != order) {
      throw ParseError(what + " table row " + std::to_string(row) + " has " +
                       std::to_string(tokens.size()) + " entries, expected " +
                       std::to_string(order));
    }
    for (const std::string& token : tokens) {
      table.push_back(parse_int(token, what + " table entry"));
    }
  }
  return table;
}

}  // namespace

std::string serialize_group(const FiniteGroup& g) {
  std::ostringstream os;
  os << "name " << sanitize_name(g.name(), "G" + std::to_string(g.order())) << '\n';
  os << "order " << g.order() << '\n';
  append_table(os, g);
  return os.str();
}

FiniteGroup parse_group(const std::string& document) {
  LineReader reader(document);
  const auto& name_line = reader.take("name line");
  if (name_line.size() != 2 || name_line[0] != "name") {
    throw ParseError("expected 'name <token>' first");
  }
  const auto& order_line = reader.take("order line");
  if (order_line.size() != 2 || order_line[0] != "order") {
    throw ParseError("expected 'order <n>' after the name");
  }
  const int order = parse_int(order_line[1], "order");
  if (order < 1 || order > FiniteGroup::kMaxOrder) {
    throw ParseError("order " + order_line[1] + " outside supported range 1.." +
                     std::to_string(FiniteGroup::kMaxOrder));
  }
  std::vector<int> table = parse_table(reader, order, "group");
  if (!reader.done()) {
    throw ParseError("trailing content after the table");
  }
  return FiniteGroup(order, std::move(table), name_line[1]);
}

std::string serialize_brace(const SkewBrace& b) {
  std::ostringstream os;
  os << "brace\n";
  os << "name " << sanitize_name(b.name(), "B" + std::to_string(b.order())) << '\n';
  os << "provenance " << (b.provenance().empty() ? "unspecified" : b.provenance())
     << '\n';
  os << "order " << b.order() << '\n';
  os << "add\n";
  append_table(os, b.additive_group());
  os << "mul\n";
  append_table(os, b.multiplicative_group());
  return os.str();
}

SkewBrace parse_brace(const std::string& document) {
  // provenance must keep its spaces, so split raw lines manually first
  std::istringstream in(document);
  std::string line;
  std::string provenance;
  std::vector<std::string> remaining;
  bool saw_provenance = false;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream probe(line);
    std::string head;
    if (!(probe >> head)) continue;
    if (head == "provenance" && !saw_provenance) {
      saw_provenance = true;
      const auto at = line.find("provenance");
      provenance = line.substr(at + std::string("provenance").size());
      const auto start = provenance.find_first_not_of(" \t");
      provenance = start == std::string::npos ? "" : provenance.substr(start);
      const auto stop = provenance.find_last_not_of(" \t\r");
      if (stop != std::string::npos) provenance = provenance.substr(0, stop + 1);
      continue;
    }
    remaining.push_back(line);
  }
  std::ostringstream rest;
  for (const auto& l : remaining) rest << l << '\n';
  LineReader reader(rest.str());
  const auto& marker = reader.take("brace marker");
  if (marker.size() != 1 || marker[0] != "brace") {
    throw ParseError("expected 'brace' as the first line");
  }
  const auto& name_line = reader.take("name line");
  if (name_line.size() != 2 || name_line[0] != "name") {
    throw ParseError("expected 'name <token>' after the marker");
  }
  if (!saw_provenance) throw ParseError("missing provenance line");
  const auto& order_line = reader.take("order line");
  if (order_line.size() != 2 || order_line[0] != "order") {
    throw ParseError("expected 'order <n>'");
  }
  const int order = parse_int(order_line[1], "order");
  if (order < 1 || order > FiniteGroup::kMaxOrder) {
    throw ParseError("order " + order_line[1] + " outside supported range");
  }
  const auto& add_marker = reader.take("add marker");
  if (add_marker.size() != 1 || add_marker[0] != "add") {
    throw ParseError("expected 'add' before the additive table");
  }
  std::vector<int> add_table = parse_table(reader, order, "additive");
  const auto& mul_marker = reader.take("mul marker");
  if (mul_marker.size() != 1 || mul_marker[0] != "mul") {
    throw ParseError("expected 'mul' before the multiplicative table");
  }
  std::vector<int> mul_table = parse_table(reader, order, "multiplicative");
  if (!reader.done()) throw ParseError("trailing content after the tables");
  return SkewBrace(FiniteGroup(order, std::move(add_table), name_line[1] + "-add"),
                   FiniteGroup(order, std::move(mul_table), name_line[1] + "-mult"),
                   name_line[1], provenance);
}

namespace {

using ordered_json = nlohmann::ordered_json;

Verdict verdict_from_string(const std::string& text) {
  if (text == "verified") return Verdict::verified;
  if (text == "violated") return Verdict::violated;
  if (text == "partial") return Verdict::partial;
  throw ParseError("unknown verdict: " + text);
}

}  // namespace

std::string serialize_report(const SweepReport& r) {
  ordered_json doc;
  doc["kind"] = "sweep-report";
  doc["statement"] = r.statement;
  doc["case_label"] = r.case_label;
  doc["max_order"] = r.max_order;
  doc["excluded_orders"] = r.excluded_orders;
  doc["verdict"] = to_string(r.verdict());
  doc["totals"] = ordered_json{{"groups", r.total_groups()},
                               {"cases", r.total_cases()},
                               {"skipped", r.total_skipped()},
                               {"violations", r.total_violations()},
                               {"structural_cases", r.structural_cases}};
  doc["per_order"] = ordered_json::array();
  for (const auto& tally : r.per_order) {
    doc["per_order"].push_back(ordered_json{{"order", tally.order},
                                            {"groups", tally.groups},
                                            {"cases", tally.cases},
                                            {"skipped", tally.skipped},
                                            {"violations", tally.violations}});
  }
  doc["skips"] = ordered_json::array();
  for (const auto& skip : r.skips) {
    doc["skips"].push_back(ordered_json{
        {"order", skip.order}, {"group", skip.group}, {"reason", skip.reason}});
  }
  doc["witnesses"] = ordered_json::array();
  for (const auto& witness : r.witnesses) {
    doc["witnesses"].push_back(ordered_json{{"order", witness.order},
                                            {"group", witness.group},
                                            {"reason", witness.reason},
                                            {"brace", witness.brace_document}});
  }
  return doc.dump(2) + "\n";
}

SweepReport parse_report(const std::string& document) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(document);
  } catch (const std::exception& e) {
    throw ParseError(std::string("report is not valid JSON: ") + e.what());
  }
  try {
    if (doc.at("kind").get<std::string>() != "sweep-report") {
      throw ParseError("document kind is not sweep-report");
    }
    SweepReport r;
    r.statement = doc.at("statement").get<std::string>();
    r.case_label = doc.at("case_label").get<std::string>();
    r.max_order = doc.at("max_order").get<int>();
    r.excluded_orders = doc.at("excluded_orders").get<std::vector<int>>();
    r.structural_cases = doc.at("totals").at("structural_cases").get<long long>();
    for (const auto& item : doc.at("per_order")) {
      OrderTally tally;
      tally.order = item.at("order").get<int>();
      tally.groups = item.at("groups").get<long long>();
      tally.cases = item.at("cases").get<long long>();
      tally.skipped = item.at("skipped").get<long long>();
      tally.violations = item.at("violations").get<long long>();
      r.per_order.push_back(tally);
    }
    for (const auto& item : doc.at("skips")) {
      r.skips.push_back(SkipRecord{item.at("order").get<int>(),
                                   item.at("group").get<std::string>(),
                                   item.at("reason").get<std::string>()});
    }
    for (const auto& item : doc.at("witnesses")) {
      r.witnesses.push_back(WitnessRecord{item.at("order").get<int>(),
                                          item.at("group").get<std::string>(),
                                          item.at("reason").get<std::string>(),
                                          item.at("brace").get<std::string>()});
    }
    // cross-check the embedded verdict and totals
    if (verdict_from_string(doc.at("verdict").get<std::string>()) != r.verdict()) {
      throw ParseError("verdict does not match the tallies");
    }
    if (doc.at("totals").at("groups").get<long long>() != r.total_groups() ||
        doc.at("totals").at("cases").get<long long>() != r.total_cases() ||
        doc.at("totals").at("skipped").get<long long>() != r.total_skipped() ||
        doc.at("totals").at("violations").get<long long>() != r.total_violations()) {
      throw ParseError("totals do not match the per-order tallies");
    }
    return r;
  } catch (const ordered_json::exception& e) {
    throw ParseError(std::string("report is missing required fields: ") + e.what());
  }
}

std::string report_to_csv(const SweepReport& r) {
  std::ostringstream os;
  os << "statement,order,groups,cases,skipped,violations\n";
  for (const auto& tally : r.per_order) {
    os << r.statement << ',' << tally.order << ',' << tally.groups << ','
       << tally.cases << ',' << tally.skipped << ',' << tally.violations << '\n';
  }
  os << r.statement << ",total," << r.total_groups() << ',' << r.total_cases() << ','
     << r.total_skipped() << ',' << r.total_violations() << '\n';
  return os.str();
}

std::string report_to_human(const SweepReport& r, bool timings) {
  std::ostringstream os;
  os << "sweep " << r.statement << " up to order " << r.max_order;
  if (!r.excluded_orders.empty()) {
    os << " (excluding";
    for (int order : r.excluded_orders) os << ' ' << order;
    os << ")";
  }
  os << "\n";
  os << std::left << std::setw(8) << "order" << std::setw(8) << "groups"
     << std::setw(8) << r.case_label << std::setw(9) << "skipped" << std::setw(12)
     << "violations";
  if (timings) os << "seconds";
  os << "\n";
  for (const auto& tally : r.per_order) {
    os << std::left << std::setw(8) << tally.order << std::setw(8) << tally.groups
       << std::setw(8) << tally.cases << std::setw(9) << tally.skipped
       << std::setw(12) << tally.violations;
    if (timings) os << std::fixed << std::setprecision(2) << tally.seconds;
    os << "\n";
  }
  os << std::left << std::setw(8) << "total" << std::setw(8) << r.total_groups()
     << std::setw(8) << r.total_cases() << std::setw(9) << r.total_skipped()
     << std::setw(12) << r.total_violations();
  if (timings) os << std::fixed << std::setprecision(2) << r.total_seconds;
  os << "\n";
  for (const auto& skip : r.skips) {
    os << "skip: order " << skip.order << " " << skip.group << ": " << skip.reason
       << "\n";
  }
  for (const auto& witness : r.witnesses) {
    os << "violation: order " << witness.order << " " << witness.group << ": "
       << witness.reason << "\n";
  }
  os << "verdict: " << to_string(r.verdict()) << "\n";
  return os.str();
}

}  // namespace skewlab::io
