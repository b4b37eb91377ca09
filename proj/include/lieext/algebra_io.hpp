#pragma once

#include <cctype>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "lieext/cocycle.hpp"

namespace lieext {

// Two formats are read. JSON:
//   {"dim": 4, "labels": ["e1",...], "brackets": [{"i": 1, "j": 0, ...}]}   (0-based, i < j only)
// and a line format:
//   labels e1 e2 e3 e4
//   [e2,e1] = e3
//   [e3,e1] = e4 - 2/3 e2

namespace detail {

[[noreturn]] inline void parse_fail(const std::string& where, const std::string& why) {
  throw Error(Errc::ParseError, where + ": " + why);
}

inline std::string trim(std::string s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

inline Terms normalize_terms(std::map<std::size_t, Scalar> m) {
  Terms t;
  for (auto& [k, c] : m)
    if (!is_zero(c)) t.push_back({c, k});
  return t;
}

// collects i<j brackets and rejects contradictory restatements
class BracketCollector {
 public:
  explicit BracketCollector(std::size_t dim) : dim_(dim) {}

  void put(std::size_t i, std::size_t j, std::map<std::size_t, Scalar> terms, const std::string& where) {
    if (i == j) {
      for (const auto& [k, c] : terms)
        if (!is_zero(c)) parse_fail(where, "[x,x] must be zero");
      return;
    }
    bool flipped = i > j;
    if (flipped) {
      std::swap(i, j);
      for (auto& [k, c] : terms) c = -c;
    }
    Terms t = normalize_terms(std::move(terms));
    auto it = seen_.find({i, j});
    if (it != seen_.end()) {
      if (it->second.terms == t) return;
      parse_fail(where, flipped == it->second.flipped ? "bracket given twice with different values"
                                                      : "antisymmetry conflict with an earlier bracket");
    }
    seen_[{i, j}] = {std::move(t), flipped};
  }

  BracketTable table() const {
    BracketTable b(dim_);
    for (const auto& [ij, e] : seen_) b.add(ij.first, ij.second, e.terms);
    return b;
  }

 private:
  struct Entry {
    Terms terms;
    bool flipped = false;
  };
  std::size_t dim_;
  std::map<std::pair<std::size_t, std::size_t>, Entry> seen_;
};

inline std::size_t label_index(const std::vector<std::string>& labels, const std::string& l, const std::string& where) {
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (labels[i] == l) return i;
  parse_fail(where, "unknown basis label '" + l + "'");
}

// signed sum of [coeff[*]] atom terms, or "0"; atom(p) parses one atom at p and returns its key
template <class Key, class Atom>
std::map<Key, Scalar> parse_sum(const std::string& text, const std::string& where, Atom atom) {
  std::map<Key, Scalar> out;
  std::size_t p = 0;
  auto skip = [&] {
    while (p < text.size() && std::isspace(static_cast<unsigned char>(text[p]))) ++p;
  };
  if (trim(text) == "0") return out;
  bool first = true;
  while (true) {
    skip();
    if (p >= text.size()) break;
    Scalar sign = 1;
    if (text[p] == '+' || text[p] == '-') {
      if (text[p] == '-') sign = -1;
      ++p;
      skip();
    } else if (!first) {
      parse_fail(where, "expected + or - before '" + text.substr(p) + "'");
    }
    Scalar coeff = 1;
    if (p < text.size() && (std::isdigit(static_cast<unsigned char>(text[p])))) {
      std::size_t q = p;
      while (q < text.size() && (std::isdigit(static_cast<unsigned char>(text[q])) || text[q] == '/')) ++q;
      coeff = parse_scalar(text.substr(p, q - p));
      p = q;
      skip();
      if (p < text.size() && text[p] == '*') ++p, skip();
    }
    out[atom(p)] += sign * coeff;
    first = false;
  }
  if (first) parse_fail(where, "empty expression");
  return out;
}

inline std::string read_label(const std::string& text, std::size_t& p, const std::string& where) {
  std::size_t q = p;
  while (q < text.size() && (std::isalnum(static_cast<unsigned char>(text[q])) || text[q] == '_' || text[q] == '\'')) ++q;
  if (q == p) parse_fail(where, "expected a basis label in '" + text + "'");
  std::string l = text.substr(p, q - p);
  p = q;
  return l;
}

// "e4 - 2/3 e2 + 3*e5", or "0"
inline std::map<std::size_t, Scalar> parse_linear(const std::string& text, const std::vector<std::string>& labels,
                                                   const std::string& where) {
  return parse_sum<std::size_t>(text, where, [&](std::size_t& p) { return label_index(labels, read_label(text, p, where), where); });
}

inline LieAlgebra checked(std::vector<std::string> labels, const BracketTable& t) {
  LieAlgebra L(std::move(labels), t);
  auto bad = jacobi_violations(L);
  if (!bad.empty()) {
    const auto& v = bad.front();
    throw Error(Errc::JacobiFailure,
                "Jacobi fails on (" + L.label(v.i) + "," + L.label(v.j) + "," + L.label(v.k) + ")");
  }
  return L;
}

}  // namespace detail

inline LieAlgebra algebra_from_json(const nlohmann::json& j) {
  using detail::parse_fail;
  if (!j.is_object()) parse_fail("document", "expected an object");
  if (!j.contains("dim") || !j["dim"].is_number_unsigned()) parse_fail("dim", "missing or not a non-negative integer");
  const std::size_t dim = j["dim"].get<std::size_t>();
  std::vector<std::string> labels;
  if (j.contains("labels")) {
    if (!j["labels"].is_array()) parse_fail("labels", "expected an array of strings");
    for (const auto& l : j["labels"]) {
      if (!l.is_string()) parse_fail("labels", "expected an array of strings");
      labels.push_back(l.get<std::string>());
    }
    if (labels.size() != dim) parse_fail("labels", "count differs from dim");
  } else {
    labels = indexed_labels("e", 1, dim);
  }
  detail::BracketCollector col(dim);
  if (j.contains("brackets")) {
    if (!j["brackets"].is_array()) parse_fail("brackets", "expected an array");
    std::size_t n = 0;
    for (const auto& b : j["brackets"]) {
      std::string where = "brackets[" + std::to_string(n++) + "]";
      if (!b.is_object()) parse_fail(where, "expected an object");
      for (const char* f : {"i", "j"})
        if (!b.contains(f) || !b[f].is_number_unsigned() || b[f].get<std::size_t>() >= dim)
          parse_fail(where + "." + f, "missing or out of range");
      std::size_t i = b["i"].get<std::size_t>(), jj = b["j"].get<std::size_t>();
      if (i >= jj) parse_fail(where, "only entries with i < j are allowed");
      if (!b.contains("terms") || !b["terms"].is_array()) parse_fail(where + ".terms", "expected an array");
      std::map<std::size_t, Scalar> terms;
      std::size_t m = 0;
      for (const auto& t : b["terms"]) {
        std::string tw = where + ".terms[" + std::to_string(m++) + "]";
        if (!t.is_object() || !t.contains("coeff") || !t["coeff"].is_string()) parse_fail(tw + ".coeff", "expected a \"p/q\" string");
        if (!t.contains("k") || !t["k"].is_number_unsigned() || t["k"].get<std::size_t>() >= dim)
          parse_fail(tw + ".k", "missing or out of range");
        Scalar c;
        try {
          c = parse_scalar(t["coeff"].get<std::string>());
        } catch (const Error& e) {
          parse_fail(tw + ".coeff", e.what());
        }
        terms[t["k"].get<std::size_t>()] += c;
      }
      col.put(i, jj, std::move(terms), where);
    }
  }
  return detail::checked(std::move(labels), col.table());
}

inline LieAlgebra algebra_from_text(const std::string& text) {
  using detail::parse_fail;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  std::vector<std::string> labels;
  bool have_labels = false;
  std::vector<std::pair<std::size_t, std::string>> pending;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = detail::trim(line);
    if (line.empty()) continue;
    std::string where = "line " + std::to_string(lineno);
    if (line.rfind("labels", 0) == 0) {
      if (have_labels) parse_fail(where, "labels given twice");
      std::istringstream ls(line.substr(6));
      std::string l;
      while (ls >> l) labels.push_back(l);
      have_labels = true;
    } else if (line.rfind("dim", 0) == 0) {
      if (have_labels) parse_fail(where, "dim after labels");
      std::string rest = detail::trim(line.substr(3));
      if (rest.empty() || rest.find_first_not_of("0123456789") != std::string::npos) parse_fail(where, "bad dim");
      labels = indexed_labels("e", 1, std::stoul(rest));
      have_labels = true;
    } else if (line[0] == '[') {
      pending.emplace_back(lineno, line);
    } else {
      parse_fail(where, "unrecognized line '" + line + "'");
    }
  }
  if (!have_labels) parse_fail("document", "missing 'labels' or 'dim' line");
  for (std::size_t a = 0; a < labels.size(); ++a)
    for (std::size_t b = a + 1; b < labels.size(); ++b)
      if (labels[a] == labels[b]) parse_fail("labels", "duplicate label '" + labels[a] + "'");
  detail::BracketCollector col(labels.size());
  for (const auto& [no, l] : pending) {
    std::string where = "line " + std::to_string(no);
    auto close = l.find(']'), comma = l.find(',');
    auto eq = l.find('=');
    if (close == std::string::npos || comma == std::string::npos || comma > close || eq == std::string::npos || eq < close)
      parse_fail(where, "expected [a,b] = ...");
    if (!detail::trim(l.substr(close + 1, eq - close - 1)).empty()) parse_fail(where, "junk before '='");
    std::size_t i = detail::label_index(labels, detail::trim(l.substr(1, comma - 1)), where);
    std::size_t j = detail::label_index(labels, detail::trim(l.substr(comma + 1, close - comma - 1)), where);
    col.put(i, j, detail::parse_linear(l.substr(eq + 1), labels, where), where);
  }
  return detail::checked(std::move(labels), col.table());
}

inline LieAlgebra parse_algebra_string(const std::string& text) {
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
      throw Error(Errc::ParseError, std::string("json: ") + e.what());
    }
    return algebra_from_json(j);
  }
  return algebra_from_text(text);
}

inline LieAlgebra parse_algebra_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw Error(Errc::ParseError, path + ": cannot open");
  std::stringstream ss;
  ss << f.rdbuf();
  try {
    return parse_algebra_string(ss.str());
  } catch (const Error& e) {
    if (e.code() == Errc::ParseError) throw Error(Errc::ParseError, path + ": " + e.what());
    throw;
  }
}

inline nlohmann::ordered_json algebra_to_json(const LieAlgebra& L) {
  nlohmann::ordered_json j;
  j["dim"] = L.dim();
  j["labels"] = L.labels();
  auto arr = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < L.dim(); ++i)
    for (std::size_t k = i + 1; k < L.dim(); ++k) {
      const Terms& t = L.bracket_basis(i, k);
      if (t.empty()) continue;
      nlohmann::ordered_json b;
      b["i"] = i;
      b["j"] = k;
      auto terms = nlohmann::ordered_json::array();
      for (const auto& x : t) terms.push_back({{"coeff", to_string(x.coeff)}, {"k", x.k}});
      b["terms"] = terms;
      arr.push_back(b);
    }
  j["brackets"] = arr;
  return j;
}

inline std::string algebra_to_text(const LieAlgebra& L) {
  std::ostringstream o;
  o << "labels";
  for (const auto& l : L.labels()) o << ' ' << l;
  o << '\n';
  for (std::size_t i = 0; i < L.dim(); ++i)
    for (std::size_t k = i + 1; k < L.dim(); ++k) {
      const Terms& t = L.bracket_basis(i, k);
      if (t.empty()) continue;
      o << '[' << L.label(i) << ',' << L.label(k) << "] =";
      bool first = true;
      for (const auto& x : t) {
        Scalar c = x.coeff;
        if (!first) o << (sgn(c) < 0 ? " -" : " +");
        else if (sgn(c) < 0) o << " -";
        Scalar a = abs(c);
        o << ' ';
        if (a != 1) o << to_string(a) << ' ';
        o << L.label(x.k);
        first = false;
      }
      o << '\n';
    }
  return o.str();
}

// "D(e5,e1) - 2/3 D(e2,e3)": D(a,b) is the form with psi(a,b) = 1, psi(b,a) = -1
inline Cocycle parse_cocycle(const std::string& text, const std::vector<std::string>& labels) {
  const std::string where = "cocycle";
  auto expect = [&](std::size_t& p, char ch) {
    while (p < text.size() && std::isspace(static_cast<unsigned char>(text[p]))) ++p;
    if (p >= text.size() || text[p] != ch) detail::parse_fail(where, std::string("expected '") + ch + "' in '" + text + "'");
    ++p;
    while (p < text.size() && std::isspace(static_cast<unsigned char>(text[p]))) ++p;
  };
  auto terms = detail::parse_sum<std::pair<std::size_t, std::size_t>>(text, where, [&](std::size_t& p) {
    expect(p, 'D');
    expect(p, '(');
    std::size_t a = detail::label_index(labels, detail::read_label(text, p, where), where);
    expect(p, ',');
    std::size_t b = detail::label_index(labels, detail::read_label(text, p, where), where);
    expect(p, ')');
    if (a == b) detail::parse_fail(where, "D(x,x) is zero");
    return std::make_pair(a, b);
  });
  Cocycle c(labels.size());
  for (const auto& [ab, v] : terms) c.add(ab.first, ab.second, v);
  return c;
}

inline std::string cocycle_to_text(const Cocycle& psi, const std::vector<std::string>& labels, std::size_t comp = 0) {
  std::string out;
  for (const auto& [i, j] : pair_list(psi.dim())) {
    Scalar v = psi.at(i, j, comp);
    if (is_zero(v)) continue;
    std::string term = "D(" + labels[i] + "," + labels[j] + ")";
    Scalar a = abs(v);
    if (out.empty())
      out += sgn(v) < 0 ? "-" : "";
    else
      out += sgn(v) < 0 ? " - " : " + ";
    if (a != 1) out += to_string(a) + " ";
    out += term;
  }
  return out.empty() ? "0" : out;
}

}  // namespace lieext
