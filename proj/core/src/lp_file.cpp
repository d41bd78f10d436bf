// Copyright (c) 2026 the sginv authors
// SPDX-License-Identifier: Apache-2.0
//
// LP-format model files: a Minimize section listing every variable (zero
// coefficients included, which pins the variable order), Subject To with
// named rows ("=" then ">="), Bounds with "free" entries, End.

#include <cctype>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>

#include "sginv/lp.hpp"

namespace sginv {

namespace {

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void write_expr(std::ostream& os, const std::vector<LpCoeff>& coeffs,
                const std::vector<std::string>& names) {
  int on_line = 0;
  bool first = true;
  for (const auto& c : coeffs) {
    if (on_line == 8) {
      os << "\n   ";
      on_line = 0;
    }
    const double v = c.value;
    if (first) {
      os << ' ' << fmt(v) << ' ' << names[c.col];
      first = false;
    } else if (v < 0) {
      os << " - " << fmt(-v) << ' ' << names[c.col];
    } else {
      os << " + " << fmt(v) << ' ' << names[c.col];
    }
    ++on_line;
  }
}

}  // namespace

void write_lp_file(const LpModel& model, const std::filesystem::path& path) {
  if (model.objective.empty() || model.num_vars == 0) {
    throw std::invalid_argument("write_lp_file: empty objective");
  }
  if (model.objective.size() != model.num_vars ||
      model.var_names.size() != model.num_vars ||
      model.var_free.size() != model.num_vars) {
    throw std::invalid_argument("write_lp_file: inconsistent model vectors");
  }
  std::ofstream os(path);
  if (!os) {
    throw std::runtime_error("write_lp_file: cannot open " + path.string());
  }

  os << "\\ model: " << model.name << "\n";
  if (!model.var_map.empty()) os << "\\ varmap: " << model.var_map << "\n";
  os << "Minimize\n obj:";
  std::vector<LpCoeff> obj;
  obj.reserve(model.num_vars);
  for (std::size_t j = 0; j < model.num_vars; ++j) {
    obj.push_back({j, model.objective[j]});
  }
  write_expr(os, obj, model.var_names);
  os << "\nSubject To\n";
  std::size_t tag = 0;
  for (const auto& row : model.eq_rows) {
    os << " e" << ++tag << ":";
    write_expr(os, row.coeffs, model.var_names);
    os << " = " << fmt(row.rhs) << "\n";
  }
  tag = 0;
  for (const auto& row : model.ineq_rows) {
    os << " g" << ++tag << ":";
    write_expr(os, row.coeffs, model.var_names);
    os << " >= " << fmt(row.rhs) << "\n";
  }
  os << "Bounds\n";
  for (std::size_t j = 0; j < model.num_vars; ++j) {
    if (model.var_free[j]) os << " " << model.var_names[j] << " free\n";
  }
  os << "End\n";
  if (!os) {
    throw std::runtime_error("write_lp_file: write failed for " +
                             path.string());
  }
}

namespace {

struct Token {
  std::string text;
  std::size_t line = 0;
};

bool is_number_token(const std::string& t) {
  return !t.empty() &&
         (std::isdigit(static_cast<unsigned char>(t[0])) || t[0] == '.' ||
          ((t[0] == '+' || t[0] == '-') && t.size() > 1));
}

bool iequals(const std::string& a, const char* b) {
  std::size_t i = 0;
  for (; i < a.size() && b[i] != '\0'; ++i) {
    if (std::tolower(static_cast<unsigned char>(a[i])) !=
        std::tolower(static_cast<unsigned char>(b[i]))) {
      return false;
    }
  }
  return i == a.size() && b[i] == '\0';
}

[[noreturn]] void parse_fail(const std::filesystem::path& path,
                             std::size_t line, const std::string& what) {
  throw std::runtime_error("read_lp_file: " + path.string() + ":" +
                           std::to_string(line) + ": " + what);
}

class TokenStream {
 public:
  TokenStream(std::vector<Token> tokens, std::filesystem::path path)
      : tokens_(std::move(tokens)), path_(std::move(path)) {}

  bool done() const { return pos_ >= tokens_.size(); }
  const Token& peek() const {
    if (done()) parse_fail(path_, last_line(), "unexpected end of file");
    return tokens_[pos_];
  }
  Token next() {
    Token t = peek();
    ++pos_;
    return t;
  }
  std::size_t last_line() const {
    return tokens_.empty() ? 0 : tokens_.back().line;
  }
  const std::filesystem::path& path() const { return path_; }

 private:
  std::vector<Token> tokens_;
  std::filesystem::path path_;
  std::size_t pos_ = 0;
};

double to_number(TokenStream& ts, const Token& t) {
  try {
    std::size_t used = 0;
    const double v = std::stod(t.text, &used);
    if (used != t.text.size()) throw std::invalid_argument("trailing");
    return v;
  } catch (const std::exception&) {
    parse_fail(ts.path(), t.line, "expected a number, got '" + t.text + "'");
  }
}

// Reads "[+|-] [coef] name" terms until a relational operator or a section
// keyword; accumulates into out. Returns the operator ("=", ">=", "<=") or
// empty when a section boundary ends the expression (objective case).
std::string read_terms(TokenStream& ts,
                       std::map<std::string, double>& out,
                       std::vector<std::string>* order) {
  double sign = 1.0;
  bool have_coef = false;
  double coef = 1.0;
  while (!ts.done()) {
    const Token& t = ts.peek();
    if (t.text == "=" || t.text == ">=" || t.text == "<=") {
      return ts.next().text;
    }
    if (iequals(t.text, "subject") || iequals(t.text, "st") ||
        iequals(t.text, "s.t.") || iequals(t.text, "bounds") ||
        iequals(t.text, "end")) {
      return "";
    }
    if (t.text.size() >= 2 && t.text.back() == ':') return "";
    if (t.text == "+") {
      ts.next();
      continue;
    }
    if (t.text == "-") {
      ts.next();
      sign = -sign;
      continue;
    }
    if (is_number_token(t.text)) {
      Token num = ts.next();
      coef = to_number(ts, num);
      have_coef = true;
      continue;
    }
    Token name = ts.next();
    const double value = sign * (have_coef ? coef : 1.0);
    auto [it, inserted] = out.try_emplace(name.text, 0.0);
    it->second += value;
    if (order && inserted) order->push_back(name.text);
    sign = 1.0;
    coef = 1.0;
    have_coef = false;
  }
  return "";
}

}  // namespace

LpModel read_lp_file(const std::filesystem::path& path) {
  std::ifstream is(path);
  if (!is) {
    throw std::runtime_error("read_lp_file: cannot open " + path.string());
  }

  LpModel model;
  std::vector<Token> tokens;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    if (!line.empty() && line[0] == '\\') {
      const std::string meta = line.substr(1);
      const auto tag_pos = meta.find(':');
      if (tag_pos != std::string::npos) {
        std::string tag = meta.substr(0, tag_pos);
        std::string value = meta.substr(tag_pos + 1);
        while (!tag.empty() && tag.front() == ' ') tag.erase(tag.begin());
        while (!value.empty() && value.front() == ' ') value.erase(value.begin());
        if (tag == "model") model.name = value;
        if (tag == "varmap") model.var_map = value;
      }
      continue;
    }
    std::istringstream ls(line);
    std::string tok;
    while (ls >> tok) tokens.push_back({tok, lineno});
  }
  TokenStream ts(std::move(tokens), path);

  if (ts.done() || !iequals(ts.peek().text, "minimize")) {
    parse_fail(path, ts.done() ? 0 : ts.peek().line,
               "expected 'Minimize' section");
  }
  ts.next();
  if (!ts.done() && ts.peek().text == "obj:") ts.next();

  std::map<std::string, double> obj_terms;
  std::vector<std::string> order;
  read_terms(ts, &obj_terms != nullptr ? obj_terms : obj_terms, nullptr,
             &order);

  std::map<std::string, std::size_t> var_index;
  for (const auto& name : order) {
    var_index[name] = model.var_names.size();
    model.var_names.push_back(name);
    model.objective.push_back(obj_terms[name]);
  }
  model.num_vars = model.var_names.size();
  model.var_free.assign(model.num_vars, false);

  if (ts.done() || !iequals(ts.peek().text, "subject")) {
    parse_fail(path, ts.done() ? ts.last_line() : ts.peek().line,
               "expected 'Subject To' section");
  }
  ts.next();
  if (!ts.done() && iequals(ts.peek().text, "to")) ts.next();

  while (!ts.done() && !iequals(ts.peek().text, "bounds") &&
         !iequals(ts.peek().text, "end")) {
    Token label = ts.peek();
    if (!label.text.empty() && label.text.back() == ':') {
      ts.next();
    }
    std::map<std::string, double> terms;
    const std::string op = read_terms(ts, terms, nullptr, nullptr);
    if (op.empty()) {
      parse_fail(path, label.line, "constraint without relational operator");
    }
    if (op == "<=") {
      parse_fail(path, label.line, "'<=' rows are not produced by this tool");
    }
    Token rhs_tok = ts.next();
    const double rhs = to_number(ts, rhs_tok);
    LpRow row;
    for (const auto& [name, value] : terms) {
      const auto it = var_index.find(name);
      if (it == var_index.end()) {
        parse_fail(path, label.line,
                   "variable '" + name + "' missing from the objective");
      }
      row.coeffs.push_back({it->second, value});
    }
    std::sort(row.coeffs.begin(), row.coeffs.end(),
              [](const LpCoeff& a, const LpCoeff& b) { return a.col < b.col; });
    row.rhs = rhs;
    if (op == "=") {
      model.eq_rows.push_back(std::move(row));
    } else {
      model.ineq_rows.push_back(std::move(row));
    }
  }

  if (!ts.done() && iequals(ts.peek().text, "bounds")) {
    ts.next();
    while (!ts.done() && !iequals(ts.peek().text, "end")) {
      Token name = ts.next();
      Token kind = ts.next();
      if (!iequals(kind.text, "free")) {
        parse_fail(path, kind.line,
                   "only 'free' bounds are produced by this tool");
      }
      const auto it = var_index.find(name.text);
      if (it == var_index.end()) {
        parse_fail(path, name.line, "unknown variable '" + name.text + "'");
      }
      model.var_free[it->second] = true;
    }
  }
  if (ts.done() || !iequals(ts.peek().text, "end")) {
    parse_fail(path, ts.last_line(), "expected 'End'");
  }
  return model;
}

}  // namespace sginv
