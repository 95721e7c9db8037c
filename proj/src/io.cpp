#include "torus/io.hpp"

#include <algorithm>
#include <fstream>
#include <iterator>
#include <map>
#include <sstream>

#include <json.hpp>

#include "torus/errors.hpp"

namespace torus::io {

using algebra::Monomial;
using algebra::Rational;
using algebra::VarAlphabet;
using json = nlohmann::ordered_json;

namespace {

json terms_array(const LaurentPolynomial& p) {
  json arr = json::array();
  for (const auto& [m, c] : p.terms()) {
    json row = json::array();
    for (auto e : m.exponents()) row.push_back(e);
    row.push_back(c.get_str());
    arr.push_back(std::move(row));
  }
  return arr;
}

LaurentPolynomial parse_terms(const json& arr) {
  if (!arr.is_array()) throw UsageError("terms must be an array");
  std::vector<LaurentPolynomial::Term> terms;
  for (const auto& row : arr) {
    if (!row.is_array() || row.size() != 4 || !row[3].is_string()) {
      throw UsageError("each term must be [a_exp, q_exp, t_exp, \"coeff\"]");
    }
    Monomial m{row[0].get<int>(), row[1].get<int>(), row[2].get<int>()};
    Rational c;
    if (c.set_str(row[3].get<std::string>(), 10) != 0) {
      throw UsageError("bad coefficient " + row[3].dump());
    }
    c.canonicalize();
    terms.emplace_back(m, std::move(c));
  }
  return LaurentPolynomial::from_terms(VarAlphabet::knot(), std::move(terms));
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw UsageError(std::string("invalid JSON: ") + e.what());
  }
}

std::string render_qt(const Monomial& m, bool latex) {
  std::string out;
  const char* names[] = {"a", "q", "t"};
  for (std::size_t i = 1; i < 3; ++i) {
    if (m[i] == 0) continue;
    if (latex) {
      if (!out.empty()) out += ' ';
      out += std::string("\\textbf{") + names[i] + "}";
      if (m[i] != 1) {
        const auto e = std::to_string(m[i]);
        out += e.size() == 1 ? "^" + e : "^{" + e + "}";
      }
    } else {
      if (!out.empty()) out += '*';
      out += names[i];
      if (m[i] != 1) out += '^' + std::to_string(m[i]);
    }
  }
  return out;
}

// Splits p by a-exponent into (q, t) blocks, ascending.
std::map<int, std::vector<const LaurentPolynomial::Term*>> by_a_degree(const LaurentPolynomial& p) {
  if (!(p.alphabet() == VarAlphabet::knot())) throw UsageError("expected an (a, q, t) polynomial");
  std::map<int, std::vector<const LaurentPolynomial::Term*>> blocks;
  for (const auto& term : p.terms()) blocks[term.first[0]].push_back(&term);
  return blocks;
}

std::string render_block(const std::vector<const LaurentPolynomial::Term*>& block, bool latex) {
  std::string out;
  for (const auto* term : block) {
    const auto& [m, c] = *term;
    const bool negative = sgn(c) < 0;
    const Rational mag = abs(c);
    const std::string mono = render_qt(m, latex);
    if (out.empty()) {
      if (negative) out += '-';
    } else {
      out += latex ? (negative ? "-" : "+") : (negative ? " - " : " + ");
    }
    if (mono.empty()) {
      out += mag.get_str();
    } else {
      if (mag != 1) out += mag.get_str() + (latex ? " " : "*");
      out += mono;
    }
  }
  return out;
}

}  // namespace

std::string knot_json(int n, int m, const LaurentPolynomial& terms) {
  json doc;
  doc["n"] = n;
  doc["m"] = m;
  doc["normalized"] = true;
  doc["terms"] = terms_array(terms);
  return doc.dump();
}

std::string knot_json(const invariant::Superpolynomial& p) { return knot_json(p.n, p.m, p.terms); }

std::string raw_knot_json(const invariant::Superpolynomial& p) {
  json doc;
  doc["n"] = p.n;
  doc["m"] = p.m;
  doc["normalized"] = false;
  doc["content"] = {p.raw_content[0], p.raw_content[1], p.raw_content[2]};
  doc["terms"] = terms_array(p.raw());
  return doc.dump();
}

KnotFixture parse_knot_json(std::string_view text) {
  const json doc = parse_json(text);
  try {
    KnotFixture f;
    f.n = doc.at("n").get<int>();
    f.m = doc.at("m").get<int>();
    f.normalized = doc.at("normalized").get<bool>();
    f.terms = parse_terms(doc.at("terms"));
    return f;
  } catch (const json::exception& e) {
    throw UsageError(std::string("knot fixture schema: ") + e.what());
  }
}

std::string genfun_json(const invariant::GeneratingFunction& gf) {
  json doc;
  doc["n"] = gf.n;
  doc["r"] = gf.r;
  json num = json::array();
  for (std::size_t j = 0; j < gf.numerator.size(); ++j) {
    json entry;
    entry["z"] = j;
    entry["terms"] = terms_array(gf.numerator[j]);
    num.push_back(std::move(entry));
  }
  doc["numerator"] = std::move(num);
  json den = json::array();
  for (const auto& alpha : gf.denominator) den.push_back({alpha[0], alpha[1], alpha[2]});
  doc["denominator"] = std::move(den);
  return doc.dump();
}

invariant::GeneratingFunction parse_genfun_json(std::string_view text) {
  const json doc = parse_json(text);
  try {
    invariant::GeneratingFunction gf;
    gf.n = doc.at("n").get<int>();
    gf.r = doc.at("r").get<int>();
    for (const auto& entry : doc.at("numerator")) {
      const auto z = entry.at("z").get<std::size_t>();
      if (gf.numerator.size() <= z) {
        gf.numerator.resize(z + 1, LaurentPolynomial(VarAlphabet::knot()));
      }
      gf.numerator[z] = gf.numerator[z] + parse_terms(entry.at("terms"));
    }
    for (const auto& alpha : doc.at("denominator")) {
      if (!alpha.is_array() || alpha.size() != 3) throw UsageError("pole must be [a, q, t]");
      gf.denominator.push_back(Monomial{alpha[0].get<int>(), alpha[1].get<int>(), alpha[2].get<int>()});
    }
    return gf;
  } catch (const json::exception& e) {
    throw UsageError(std::string("generating function schema: ") + e.what());
  }
}

std::string grouped_text(const LaurentPolynomial& p) {
  std::string out;
  for (const auto& [a, block] : by_a_degree(p)) {
    out += "a^" + std::to_string(a) + ": " + render_block(block, false) + "\n";
  }
  return out;
}

std::string latex_table(const LaurentPolynomial& p) {
  std::string out =
      "\\[\n\\begin{array}{c|lll}\n"
      "\\textbf{a}-{\\rm degree} & {\\rm coefficient} & \\rule{0pt}{3mm}  \\\\\n";
  for (const auto& [a, block] : by_a_degree(p)) {
    out += "\\hline \\textbf{a}^" + std::to_string(a) + " & " + render_block(block, true) +
           " & \\rule{0pt}{5mm}  \\\\\n";
  }
  out += "\\end{array}\n\\]\n";
  return out;
}

std::string term_diff(const LaurentPolynomial& expected, const LaurentPolynomial& actual) {
  std::istringstream want(algebra::to_text(expected));
  std::istringstream got(algebra::to_text(actual));
  std::vector<std::string> a;
  std::vector<std::string> b;
  for (std::string line; std::getline(want, line);) a.push_back(line);
  for (std::string line; std::getline(got, line);) b.push_back(line);
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  std::vector<std::string> only_a;
  std::vector<std::string> only_b;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(only_a));
  std::set_difference(b.begin(), b.end(), a.begin(), a.end(), std::back_inserter(only_b));
  std::string out;
  for (const auto& line : only_a) out += "- " + line + "\n";
  for (const auto& line : only_b) out += "+ " + line + "\n";
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace torus::io
