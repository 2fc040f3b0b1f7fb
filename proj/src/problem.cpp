#include "mm/problem.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <sstream>

namespace mm {

namespace {

struct Value {
  enum Kind { kInt, kString, kIdent, kList } kind = kInt;
  std::int64_t integer = 0;
  std::string text;
  std::vector<Value> items;
  int line = 0, column = 0;
};

class LineParser {
 public:
  LineParser(std::string_view s, int line) : s_(s), line_(line) {}

  Value value() {
    skip();
    Value v;
    v.line = line_;
    v.column = col();
    if (at_end()) fail("expected a value");
    char c = s_[pos_];
    if (c == '[') {
      v.kind = Value::kList;
      ++pos_;
      skip();
      if (peek() == ']') {
        ++pos_;
        return v;
      }
      while (true) {
        v.items.push_back(value());
        skip();
        if (peek() == ',') {
          ++pos_;
          continue;
        }
        if (peek() == ']') {
          ++pos_;
          return v;
        }
        fail("expected ',' or ']'");
      }
    }
    if (c == '"') {
      v.kind = Value::kString;
      ++pos_;
      while (!at_end() && s_[pos_] != '"') v.text += s_[pos_++];
      if (at_end()) fail("unterminated string");
      ++pos_;
      return v;
    }
    if (c == '-' || std::isdigit(static_cast<unsigned char>(c))) {
      v.kind = Value::kInt;
      std::size_t start = pos_;
      if (c == '-') ++pos_;
      if (at_end() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) fail("expected a digit");
      while (!at_end() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      try {
        v.integer = std::stoll(std::string(s_.substr(start, pos_ - start)));
      } catch (const std::out_of_range&) {
        pos_ = start;
        fail("integer out of range");
      }
      return v;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      v.kind = Value::kIdent;
      while (!at_end() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) v.text += s_[pos_++];
      return v;
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  void expect_end() {
    skip();
    if (!at_end()) fail("unexpected trailing text");
  }

  [[noreturn]] void fail(const std::string& msg) const { throw SyntaxError(msg, line_, col()); }

 private:
  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return at_end() ? '\0' : s_[pos_]; }
  int col() const { return static_cast<int>(pos_) + 1; }
  void skip() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  std::string_view s_;
  int line_;
  std::size_t pos_ = 0;
};

[[noreturn]] void bad(const Value& v, const std::string& msg) { throw SyntaxError(msg, v.line, v.column); }

std::int64_t as_int(const Value& v, std::int64_t lo, std::int64_t hi, const char* key) {
  if (v.kind != Value::kInt) bad(v, std::string(key) + " must be an integer");
  if (v.integer < lo || v.integer > hi) bad(v, std::string(key) + " is out of range");
  return v.integer;
}

std::vector<std::string> as_strings(const Value& v, const char* key, bool allow_ident) {
  if (v.kind != Value::kList) bad(v, std::string(key) + " must be a list");
  std::vector<std::string> out;
  for (const auto& item : v.items) {
    if (item.kind == Value::kString || (allow_ident && item.kind == Value::kIdent)) {
      out.push_back(item.text);
    } else {
      bad(item, std::string(key) + " entries must be " + (allow_ident ? "names" : "quoted polynomials"));
    }
  }
  return out;
}

std::string trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return std::string(s);
}

std::string quoted_list(const std::vector<std::string>& xs) {
  std::string out = "[";
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? ", \"" : "\"") + xs[i] + "\"";
  return out + "]";
}

Polynomial parse_generator(const RingPtr& ring, const std::string& text) { return parse_polynomial(ring, text); }

std::vector<Polynomial> parse_all(const RingPtr& ring, const std::vector<std::string>& gens) {
  std::vector<Polynomial> out;
  for (const auto& g : gens) out.push_back(parse_generator(ring, g));
  return out;
}

}  // namespace

ProblemFile parse_problem_text(std::string_view text) {
  ProblemFile pf;
  std::vector<std::string> seen;
  bool have_vars = false, have_J = false, have_I = false;
  int line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    ++line_no;
    start = end + 1;
    // strip comments outside quotes
    bool in_quotes = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
      if (line[i] == '"') in_quotes = !in_quotes;
      if (line[i] == '#' && !in_quotes) {
        line = line.substr(0, i);
        break;
      }
    }
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (trim(line).empty()) {
      if (end == text.size()) break;
      continue;
    }
    auto eq = line.find('=');
    if (eq == std::string_view::npos) throw SyntaxError("expected 'key = value'", line_no, 1);
    std::string key = trim(line.substr(0, eq));
    int key_col = static_cast<int>(line.find_first_not_of(" \t")) + 1;
    if (std::find(seen.begin(), seen.end(), key) != seen.end())
      throw SyntaxError("duplicate key '" + key + "'", line_no, key_col);
    seen.push_back(key);

    // Parse the value on a copy padded so columns match the original line.
    std::string padded(eq + 1, ' ');
    padded += line.substr(eq + 1);
    LineParser parser(padded, line_no);
    Value v = parser.value();
    parser.expect_end();

    if (key == "p") {
      pf.p = static_cast<std::uint32_t>(as_int(v, 2, 2147483647, "p"));
    } else if (key == "vars") {
      pf.vars = as_strings(v, "vars", true);
      have_vars = true;
    } else if (key == "weights") {
      if (v.kind != Value::kList) bad(v, "weights must be a list");
      std::vector<int> w;
      for (const auto& item : v.items) w.push_back(static_cast<int>(as_int(item, 1, 1000, "weight")));
      pf.weights = std::move(w);
    } else if (key == "gamma") {
      pf.gamma = as_strings(v, "gamma", false);
    } else if (key == "J") {
      pf.J = as_strings(v, "J", false);
      have_J = true;
    } else if (key == "I") {
      if (v.kind != Value::kList) bad(v, "I must be a list of lists");
      for (const auto& item : v.items) pf.I.push_back(as_strings(item, "I", false));
      have_I = true;
    } else if (key == "base0") {
      pf.base0 = static_cast<int>(as_int(v, 0, 1 << 20, "base0"));
    } else if (key == "window") {
      pf.window = static_cast<int>(as_int(v, 0, 1 << 20, "window"));
    } else if (key == "seed") {
      pf.seed = static_cast<std::uint64_t>(as_int(v, 0, INT64_MAX, "seed"));
    } else if (key == "retries") {
      pf.retries = static_cast<int>(as_int(v, 1, 1 << 20, "retries"));
    } else {
      throw SyntaxError("unknown key '" + key + "'", line_no, key_col);
    }
    if (end == text.size()) break;
  }
  if (!have_vars) throw SyntaxError("missing key 'vars'", line_no, 1);
  if (!have_J) throw SyntaxError("missing key 'J'", line_no, 1);
  if (!have_I) throw SyntaxError("missing key 'I'", line_no, 1);
  return pf;
}

std::string print_problem(const ProblemFile& pf) {
  std::ostringstream out;
  out << "p = " << pf.p << "\n";
  out << "vars = [";
  for (std::size_t i = 0; i < pf.vars.size(); ++i) out << (i ? ", " : "") << pf.vars[i];
  out << "]\n";
  if (pf.weights) {
    out << "weights = [";
    for (std::size_t i = 0; i < pf.weights->size(); ++i) out << (i ? ", " : "") << (*pf.weights)[i];
    out << "]\n";
  }
  out << "gamma = " << quoted_list(pf.gamma) << "\n";
  out << "J = " << quoted_list(pf.J) << "\n";
  out << "I = [";
  for (std::size_t i = 0; i < pf.I.size(); ++i) out << (i ? ", " : "") << quoted_list(pf.I[i]);
  out << "]\n";
  if (pf.base0) out << "base0 = " << *pf.base0 << "\n";
  if (pf.window) out << "window = " << *pf.window << "\n";
  if (pf.seed) out << "seed = " << *pf.seed << "\n";
  if (pf.retries) out << "retries = " << *pf.retries << "\n";
  return out.str();
}

ProblemFile read_problem_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kInput, "cannot open problem file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_problem_text(buf.str());
}

std::vector<int> choose_weights(const ProblemFile& pf) {
  const int n = static_cast<int>(pf.vars.size());
  auto plain = RingContext::make(pf.vars, pf.p);
  std::vector<Polynomial> binding;  // must be homogeneous
  auto collect = [&](const std::vector<std::string>& gens) {
    for (auto& f : parse_all(plain, gens)) {
      if (f.size() > 1) binding.push_back(std::move(f));
    }
  };
  collect(pf.gamma);
  collect(pf.J);
  std::vector<std::vector<Polynomial>> families;
  for (const auto& gens : pf.I) {
    collect(gens);
    families.push_back(parse_all(plain, gens));
  }

  const int bound = std::max(1, std::min(12, static_cast<int>(std::floor(std::pow(20000.0, 1.0 / n)))));
  std::vector<int> w(n, 1), best;
  int best_score = -1;
  auto degree = [&](const Monomial& m) { return weighted_degree(m, w); };
  auto homogeneous = [&](const Polynomial& f) {
    for (const auto& t : f.terms())
      if (degree(t.mono) != degree(f.lead_monomial())) return false;
    return true;
  };
  auto better = [&](const std::vector<int>& a, const std::vector<int>& b) {
    int ma = *std::max_element(a.begin(), a.end()), mb = *std::max_element(b.begin(), b.end());
    if (ma != mb) return ma < mb;
    int sa = 0, sb = 0;
    for (int x : a) sa += x;
    for (int x : b) sb += x;
    if (sa != sb) return sa < sb;
    return a < b;
  };
  while (true) {
    if (std::all_of(binding.begin(), binding.end(), homogeneous)) {
      int score = 0;
      for (const auto& fam : families) {
        std::vector<int> degs;
        for (const auto& f : fam) {
          if (!f.is_zero()) degs.push_back(degree(f.lead_monomial()));
        }
        if (!degs.empty() && std::all_of(degs.begin(), degs.end(), [&](int d) { return d == degs.front(); })) ++score;
      }
      if (score > best_score || (score == best_score && better(w, best))) {
        best_score = score;
        best = w;
      }
    }
    int i = n - 1;
    while (i >= 0 && w[i] == bound) w[i--] = 1;
    if (i < 0) break;
    ++w[i];
  }
  if (best.empty()) throw Error(ErrorCode::kHomogeneity, "no positive grading makes every generator homogeneous");
  return best;
}

LoadedProblem build_instance(const ProblemFile& pf) {
  if (pf.vars.empty()) throw Error(ErrorCode::kInput, "vars must not be empty");
  if (pf.I.empty()) throw Error(ErrorCode::kInput, "I must list at least one ideal");
  if (pf.weights && pf.weights->size() != pf.vars.size())
    throw Error(ErrorCode::kInput, "weights must have one entry per variable");
  auto ring = RingContext::make(pf.vars, pf.p, pf.weights ? *pf.weights : choose_weights(pf));
  auto gamma = Ideal(ring, parse_all(ring, pf.gamma));
  require_homogeneous(gamma, "gamma");
  Ideal J(ring, parse_all(ring, pf.J));
  std::vector<Ideal> family;
  for (const auto& gens : pf.I) family.emplace_back(ring, parse_all(ring, gens));
  return {ring, ProblemInstance(LocalRingModel(gamma), J, family)};
}

std::vector<Polynomial> parse_generator_list(const RingPtr& ring, std::string_view text) {
  std::vector<Polynomial> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto comma = text.find(',', start);
    if (comma == std::string_view::npos) comma = text.size();
    std::string piece = trim(text.substr(start, comma - start));
    if (!piece.empty()) out.push_back(parse_polynomial(ring, piece));
    start = comma + 1;
  }
  return out;
}

}  // namespace mm
