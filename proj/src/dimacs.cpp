#include "wmc/dimacs.hpp"

#include <cctype>
#include <charconv>
#include <map>
#include <optional>
#include <sstream>
#include <vector>

namespace wmc {

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

std::optional<std::int64_t> to_int(std::string_view token) {
  std::int64_t value = 0;
  if (!token.empty() && token[0] == '+') token.remove_prefix(1);
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) return std::nullopt;
  return value;
}

struct Directive {
  std::size_t line;
  std::int64_t target;
  RingValue value;
};

}  // namespace

WeightedFormula parse_dimacs(std::string_view text) {
  std::optional<WeightedFormula> formula;
  std::size_t declared_clauses = 0;
  std::size_t header_line = 0;
  std::vector<Literal> pending;
  std::size_t pending_line = 0;
  std::map<std::int64_t, Directive> weights;
  std::map<std::int64_t, Directive> labels;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  // A trailing newline does not start another line.
  while (pos < text.size() || (pos == 0 && text.empty())) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;

    auto tokens = split_ws(line);
    if (tokens.empty()) continue;
    if (tokens[0] == "%") break;

    if (tokens[0] == "c") {
      if (tokens.size() < 2 || (tokens[1] != "w" && tokens[1] != "cl")) continue;
      bool is_weight = tokens[1] == "w";
      const char* what = is_weight ? "weight directive" : "label directive";
      if (tokens.size() != 5) throw ParseError(line_no, std::string("malformed ") + what + ": expected 3 fields");
      auto target = to_int(tokens[2]);
      if (!target || *target < 1) throw ParseError(line_no, std::string("malformed ") + what + ": bad index");
      RingValue value;
      try {
        value = RingValue::parse_parts(tokens[3], tokens[4]);
      } catch (const std::invalid_argument& e) {
        throw ParseError(line_no, std::string("malformed ") + what + ": " + e.what());
      }
      if (is_weight && value.is_zero()) throw ParseError(line_no, "malformed weight directive: weight must be nonzero");
      auto& table = is_weight ? weights : labels;
      table.insert_or_assign(*target, Directive{line_no, *target, value});
      continue;
    }

    if (tokens[0] == "p") {
      if (formula) throw ParseError(line_no, "bad header: duplicate problem line");
      if (tokens.size() != 4 || tokens[1] != "cnf") throw ParseError(line_no, "bad header: expected 'p cnf <n> <m>'");
      auto n = to_int(tokens[2]);
      auto m = to_int(tokens[3]);
      if (!n || !m || *n < 0 || *m < 0 || *n > INT32_MAX)
        throw ParseError(line_no, "bad header: counts must be non-negative integers");
      formula.emplace(static_cast<Var>(*n));
      declared_clauses = static_cast<std::size_t>(*m);
      header_line = line_no;
      continue;
    }

    if (!formula) throw ParseError(line_no, "clause data before 'p cnf' header");
    for (std::string_view token : tokens) {
      auto value = to_int(token);
      if (!value) throw ParseError(line_no, "bad literal '" + std::string(token) + "'");
      if (*value == 0) {
        formula->add_clause(std::move(pending));
        pending.clear();
        continue;
      }
      std::int64_t var = *value < 0 ? -*value : *value;
      if (var > formula->variable_count())
        throw ParseError(line_no, "variable index " + std::to_string(var) + " out of range 1.." +
                                      std::to_string(formula->variable_count()));
      if (pending.empty()) pending_line = line_no;
      pending.push_back(Literal::from_dimacs(*value));
    }
  }

  if (!formula) throw ParseError(line_no, "bad header: missing 'p cnf' line");
  if (!pending.empty()) throw ParseError(pending_line, "non-terminated clause (missing trailing 0)");
  if (formula->clause_count() != declared_clauses)
    throw ParseError(header_line, "header declares " + std::to_string(declared_clauses) + " clauses, found " +
                                      std::to_string(formula->clause_count()));

  for (const auto& [var, d] : weights) {
    if (var > formula->variable_count())
      throw ParseError(d.line, "malformed weight directive: variable " + std::to_string(var) + " out of range");
    formula->set_weight(static_cast<Var>(var), d.value);
  }
  for (const auto& [index, d] : labels) {
    if (static_cast<std::size_t>(index) > formula->clause_count())
      throw ParseError(d.line, "malformed label directive: clause " + std::to_string(index) + " out of range");
    formula->set_label(static_cast<std::size_t>(index - 1), d.value);
  }
  return normalize(*formula);
}

std::string serialize_dimacs(const WeightedFormula& formula) {
  std::ostringstream out;
  out << "p cnf " << formula.variable_count() << ' ' << formula.clause_count() << '\n';
  for (Var v = 1; v <= formula.variable_count(); ++v) {
    const RingValue& w = formula.weight(v);
    if (w.is_one()) continue;
    auto [re, im] = w.to_parts();
    out << "c w " << v << ' ' << re << ' ' << im << '\n';
  }
  for (std::size_t i = 0; i < formula.clause_count(); ++i) {
    const RingValue& label = formula.clause(i).label;
    if (label.is_zero()) continue;
    auto [re, im] = label.to_parts();
    out << "c cl " << i + 1 << ' ' << re << ' ' << im << '\n';
  }
  for (const Clause& clause : formula.clauses()) {
    for (const Literal& lit : clause.literals) out << lit.to_dimacs() << ' ';
    out << "0\n";
  }
  return out.str();
}

}  // namespace wmc
