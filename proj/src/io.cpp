#include "cglq/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cglq/verifier.hpp"

namespace cglq {

namespace {

// Wrap a printed scalar in parentheses when it has a top-level sign that
// would bind wrongly next to `*`.
bool needs_parens(const std::string& s) {
  int depth = 0;
  for (size_t i = 0; i < s.size(); ++i) {
    char c = s[i];
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (depth == 0 && i > 0 && (c == '+' || c == '-')) return true;
  }
  return false;
}

std::string coef_str(const QRational& c) {
  std::string s = c.str();
  return needs_parens(s) ? "(" + s + ")" : s;
}

bool coef_is_negative(const QRational& c) { return c.num().leading_coeff() < 0; }
bool coef_is_negative(const Rational& c) { return c < 0; }
QRational coef_abs(const QRational& c) { return coef_is_negative(c) ? -c : c; }
Rational coef_abs(const Rational& c) { return abs(c); }
bool coef_is_one(const QRational& c) { return c.is_one(); }
bool coef_is_one(const Rational& c) { return c == 1; }
std::string coef_to_string(const QRational& c) { return coef_str(c); }
std::string coef_to_string(const Rational& c) { return rational_str(c); }

template <class C>
std::string sparse_str(const Sparse<C>& a, char letter) {
  if (a.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  // leading term first
  for (auto it = a.terms().rbegin(); it != a.terms().rend(); ++it) {
    const Exponent& e = it->first;
    C c = it->second;
    bool neg = coef_is_negative(c);
    if (first) {
      if (neg) os << "-";
      first = false;
    } else {
      os << (neg ? " - " : " + ");
    }
    C mag = coef_abs(c);
    bool unit_exp = exp_is_zero(e);
    if (unit_exp) {
      os << coef_to_string(mag);
      continue;
    }
    bool printed = false;
    if (!coef_is_one(mag)) {
      os << coef_to_string(mag);
      printed = true;
    }
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (printed) os << "*";
      os << letter << (i + 1);
      if (e[i] != 1) os << "^" << e[i];
      printed = true;
    }
  }
  return os.str();
}

// ---- expression parser ------------------------------------------------------

struct Token {
  enum Kind { Num, Var, Q, Plus, Minus, Star, Slash, Caret, LPar, RPar, End } kind;
  std::string text;  // for Num
  int index = 0;     // for Var (0-based)
  size_t pos = 0;
};

class Lexer {
 public:
  Lexer(std::string_view s, char letter, int nvars) : s_(s), letter_(letter), nvars_(nvars) {
    advance();
  }
  const Token& peek() const { return tok_; }
  Token next() {
    Token t = tok_;
    advance();
    return t;
  }

 private:
  void advance() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    tok_.pos = i_;
    if (i_ >= s_.size()) {
      tok_.kind = Token::End;
      return;
    }
    char c = s_[i_];
    switch (c) {
      case '+': tok_.kind = Token::Plus; ++i_; return;
      case '-': tok_.kind = Token::Minus; ++i_; return;
      case '*': tok_.kind = Token::Star; ++i_; return;
      case '/': tok_.kind = Token::Slash; ++i_; return;
      case '^': tok_.kind = Token::Caret; ++i_; return;
      case '(': tok_.kind = Token::LPar; ++i_; return;
      case ')': tok_.kind = Token::RPar; ++i_; return;
      default: break;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t j = i_;
      while (j < s_.size() && std::isdigit(static_cast<unsigned char>(s_[j]))) ++j;
      tok_.kind = Token::Num;
      tok_.text = std::string(s_.substr(i_, j - i_));
      i_ = j;
      return;
    }
    if (c == 'q') {
      tok_.kind = Token::Q;
      ++i_;
      return;
    }
    if (c == letter_ || std::tolower(c) == std::tolower(letter_)) {
      size_t j = i_ + 1;
      size_t digits_start = j;
      while (j < s_.size() && std::isdigit(static_cast<unsigned char>(s_[j]))) ++j;
      if (j == digits_start)
        fail(errc::parse_error, "variable without index at position " + std::to_string(i_));
      int idx = std::stoi(std::string(s_.substr(digits_start, j - digits_start)));
      if (idx < 1 || idx > nvars_)
        fail(errc::parse_error, "variable index " + std::to_string(idx) + " out of range 1.." +
                                    std::to_string(nvars_) + " (variables are 1-indexed)");
      tok_.kind = Token::Var;
      tok_.index = idx - 1;
      i_ = j;
      return;
    }
    fail(errc::parse_error, std::string("unexpected character '") + c + "' at position " +
                                std::to_string(i_));
  }

  std::string_view s_;
  char letter_;
  int nvars_;
  size_t i_ = 0;
  Token tok_;
};

class ExprParser {
 public:
  ExprParser(std::string_view s, char letter, int nvars)
      : lex_(s, letter, nvars), nvars_(nvars) {}

  QElem parse() {
    QElem v = expr();
    if (lex_.peek().kind != Token::End)
      fail(errc::parse_error, "trailing input at position " + std::to_string(lex_.peek().pos));
    return v;
  }

 private:
  QElem expr() {
    bool neg = false;
    if (lex_.peek().kind == Token::Minus) {
      lex_.next();
      neg = true;
    } else if (lex_.peek().kind == Token::Plus) {
      lex_.next();
    }
    QElem v = term();
    if (neg) v = -v;
    while (lex_.peek().kind == Token::Plus || lex_.peek().kind == Token::Minus) {
      bool minus = lex_.next().kind == Token::Minus;
      QElem w = term();
      if (minus)
        v -= w;
      else
        v += w;
    }
    return v;
  }

  QElem term() {
    QElem v = factor();
    while (lex_.peek().kind == Token::Star || lex_.peek().kind == Token::Slash) {
      bool div = lex_.next().kind == Token::Slash;
      QElem w = factor();
      if (div) {
        // Division only by scalar (variable-free) expressions.
        if (w.is_zero()) fail(errc::parse_error, "division by zero");
        if (w.max_var() >= 0)
          fail(errc::parse_error, "division by a non-scalar expression");
        QRational s = w.coeff(exp_zero(nvars_));
        QElem r(nvars_);
        for (const auto& [e, c] : v.terms()) r.set(e, c / s);
        v = r;
      } else {
        v = naive_mul(v, w);
      }
    }
    return v;
  }

  QElem factor() {
    QElem v = primary();
    if (lex_.peek().kind == Token::Caret) {
      lex_.next();
      int sign = 1;
      if (lex_.peek().kind == Token::Minus) {
        lex_.next();
        sign = -1;
      }
      if (lex_.peek().kind != Token::Num) fail(errc::parse_error, "expected exponent");
      int e = sign * std::stoi(lex_.next().text);
      v = power(v, e);
    }
    return v;
  }

  QElem primary() {
    Token t = lex_.next();
    switch (t.kind) {
      case Token::Num: {
        Rational r(t.text);
        r.canonicalize();
        return QElem::constant(nvars_, QRational(r));
      }
      case Token::Q:
        return QElem::constant(nvars_, QRational::q_power(1));
      case Token::Var:
        return QElem::variable(nvars_, t.index);
      case Token::LPar: {
        QElem v = expr();
        if (lex_.peek().kind != Token::RPar) fail(errc::parse_error, "missing ')'");
        lex_.next();
        return v;
      }
      default:
        fail(errc::parse_error, "unexpected token at position " + std::to_string(t.pos));
    }
  }

  // Commuting-variable product; good enough for parsing text forms.
  QElem naive_mul(const QElem& a, const QElem& b) {
    QElem r(nvars_);
    for (const auto& [ea, ca] : a.terms())
      for (const auto& [eb, cb] : b.terms()) r.add(exp_add(ea, eb), ca * cb);
    return r;
  }

  QElem power(const QElem& a, int e) {
    if (e < 0) {
      if (!a.is_monomial()) fail(errc::parse_error, "negative power of a non-monomial");
      const auto& [ea, ca] = *a.terms().begin();
      QElem inv(nvars_, exp_neg(ea), ca.inverse());
      return power(inv, -e);
    }
    QElem r = QElem::constant(nvars_, QRational::one());
    for (int i = 0; i < e; ++i) r = naive_mul(r, a);
    return r;
  }

  Lexer lex_;
  int nvars_;
};

}  // namespace

std::string poly_str(const MPoly& a, char letter) { return sparse_str(a, letter); }
std::string elem_str(const QElem& a, char letter) { return sparse_str(a, letter); }

QElem parse_element(std::string_view text, int nvars, char letter) {
  return ExprParser(text, letter, nvars).parse();
}

MPoly parse_poly(std::string_view text, int nvars, char letter) {
  QElem v = parse_element(text, nvars, letter);
  MPoly r(nvars);
  for (const auto& [e, c] : v.terms()) {
    if (!c.is_in_L() || !c.num().is_constant())
      fail(errc::parse_error, "q-dependent coefficient in a commutative polynomial");
    r.set(e, c.num().eval_at_one());
  }
  return r;
}

QRational parse_qrational(std::string_view text) {
  QElem v = ExprParser(text, 'x', 0).parse();
  if (v.is_zero()) return QRational(0);
  return v.coeff(exp_zero(0));
}

QLaurent parse_qlaurent(std::string_view text) { return parse_qrational(text).to_laurent(); }

// ---- spec JSON --------------------------------------------------------------

namespace {

using nlohmann::json;

std::vector<Weight> parse_weight_rows(const json& j, const char* key, int n, int r) {
  if (!j.contains(key) || !j[key].is_array() || static_cast<int>(j[key].size()) != n)
    fail(errc::schema_error, std::string("'") + key + "' must be an array of " +
                                 std::to_string(n) + " integer vectors");
  std::vector<Weight> rows;
  for (const auto& row : j[key]) {
    if (!row.is_array() || static_cast<int>(row.size()) != r)
      fail(errc::schema_error, std::string("'") + key + "' rows must have length r = " +
                                   std::to_string(r));
    Weight w;
    for (const auto& v : row) {
      if (!v.is_number_integer()) fail(errc::schema_error, "weights must be integers");
      w.push_back(v.get<long>());
    }
    rows.push_back(std::move(w));
  }
  return rows;
}

}  // namespace

ExtensionSpec parse_spec_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const std::exception& e) {
    fail(errc::parse_error, std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) fail(errc::schema_error, "spec must be a JSON object");
  if (!j.contains("n") || !j["n"].is_number_integer() || j["n"].get<int>() < 1)
    fail(errc::schema_error, "'n' must be a positive integer");
  if (!j.contains("r") || !j["r"].is_number_integer() || j["r"].get<int>() < 1)
    fail(errc::schema_error, "'r' must be a positive integer");
  ExtensionSpec spec;
  spec.n = j["n"].get<int>();
  spec.r = j["r"].get<int>();
  spec.lambda = parse_weight_rows(j, "lambda", spec.n, spec.r);
  spec.h = parse_weight_rows(j, "h", spec.n, spec.r);
  spec.h_prime = parse_weight_rows(j, "h_prime", spec.n, spec.r);
  spec.delta.assign(spec.n, std::vector<MPoly>(spec.n, MPoly(spec.n)));
  if (j.contains("delta")) {
    if (!j["delta"].is_object()) fail(errc::schema_error, "'delta' must be an object");
    for (const auto& [jkey, inner] : j["delta"].items()) {
      int jj = 0;
      try {
        jj = std::stoi(jkey);
      } catch (...) {
        fail(errc::schema_error, "delta key '" + jkey + "' is not an index");
      }
      if (jj < 1 || jj > spec.n) fail(errc::schema_error, "delta index out of range: " + jkey);
      if (!inner.is_object()) fail(errc::schema_error, "delta['" + jkey + "'] must be an object");
      for (const auto& [ikey, poly] : inner.items()) {
        int ii = 0;
        try {
          ii = std::stoi(ikey);
        } catch (...) {
          fail(errc::schema_error, "delta key '" + ikey + "' is not an index");
        }
        if (ii < 1 || ii >= jj)
          fail(errc::schema_error, "delta['" + jkey + "']['" + ikey + "'] needs i < j");
        if (!poly.is_string()) fail(errc::schema_error, "delta entries must be strings");
        try {
          spec.delta[jj - 1][ii - 1] = parse_poly(poly.get<std::string>(), spec.n, 'x');
        } catch (const error& e) {
          fail(errc::parse_error,
               "delta['" + jkey + "']['" + ikey + "']: " + std::string(e.what()));
        }
      }
    }
  }
  return spec;
}

ExtensionSpec load_spec_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(errc::parse_error, "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_spec_json(ss.str());
}

std::string spec_to_json(const ExtensionSpec& spec) {
  json j;
  j["n"] = spec.n;
  j["r"] = spec.r;
  j["lambda"] = spec.lambda;
  j["h"] = spec.h;
  j["h_prime"] = spec.h_prime;
  json d = json::object();
  for (int jj = 0; jj < spec.n; ++jj) {
    json row = json::object();
    for (int ii = 0; ii < jj; ++ii)
      if (!spec.delta[jj][ii].is_zero())
        row[std::to_string(ii + 1)] = poly_str(spec.delta[jj][ii], 'x');
    if (!row.empty()) d[std::to_string(jj + 1)] = row;
  }
  j["delta"] = d;
  return j.dump(2);
}

// ---- reports ------------------------------------------------------------------

namespace {

json check_to_json(const CheckResult& c) {
  json j;
  j["name"] = c.name;
  j["status"] = c.pass ? "pass" : "fail";
  if (!c.witness.empty()) j["witness"] = c.witness;
  return j;
}

}  // namespace

std::string validation_report_json(const ValidationReport& rep) {
  json j;
  j["ok"] = rep.ok();
  json arr = json::array();
  for (const auto& c : rep.checks) arr.push_back(check_to_json(c));
  j["checks"] = arr;
  return j.dump(2);
}

std::string analysis_report_json(const ExtensionSpec& spec) {
  CommAnalysis an(spec, 0);
  json j;
  json ys = json::array();
  for (int i = 0; i < spec.n; ++i) ys.push_back(poly_str(an.y(i), 'x'));
  j["y"] = ys;
  json ps = json::array();
  for (int i = 0; i < spec.n; ++i) ps.push_back(an.p(i) + 1);  // 0 means no predecessor
  j["p"] = ps;
  json levels = json::array();
  for (const auto& chain : an.level_sets()) {
    json c = json::array();
    for (int i : chain) c.push_back(i + 1);
    levels.push_back(c);
  }
  j["level_sets"] = levels;
  j["rank"] = an.rank();
  json kappa = json::array();
  for (int i = 0; i < spec.n; ++i) {
    json row = json::array();
    for (int jj = 0; jj < spec.n; ++jj) row.push_back(an.kappa(i, jj));
    kappa.push_back(row);
  }
  j["kappa"] = kappa;
  json b = json::object();
  for (int k = 0; k < spec.n; ++k)
    if (an.p(k) != -1) b[std::to_string(k + 1)] = poly_str(an.b(k), 'y');
  j["b"] = b;
  return j.dump(2);
}

std::string presentation_report_json(const QuantumPresentation& qp, bool include_audit) {
  const ExtensionSpec& spec = qp.spec;
  json j;
  json lam = json::array();
  for (int i = 0; i < spec.n; ++i) {
    json row = json::array();
    for (int jj = 0; jj < spec.n; ++jj)
      row.push_back(i < jj ? qp.pres.lambda(i, jj) : (jj < i ? -qp.pres.lambda(jj, i) : 0));
    lam.push_back(row);
  }
  j["lambda_matrix"] = lam;

  json dt = json::object();
  json relations = json::array();
  for (int i = 0; i < spec.n; ++i) {
    json row = json::object();
    for (int jj = i + 1; jj < spec.n; ++jj) {
      const QElem& d = qp.delta_rel(i, jj);
      if (!d.is_zero()) row[std::to_string(jj + 1)] = elem_str(d, 'X');
      // Human-readable relation X_i X_j = q^{-lambda} X_j X_i + tail.
      std::string rel = "X" + std::to_string(i + 1) + "*X" + std::to_string(jj + 1) + " = ";
      long lij = qp.pres.lambda(i, jj);
      if (lij != 0) rel += "q^" + std::to_string(-lij) + "*";
      rel += "X" + std::to_string(jj + 1) + "*X" + std::to_string(i + 1);
      if (!d.is_zero()) {
        std::string s = elem_str(d, 'X');
        if (s.front() == '-')
          rel += " - " + s.substr(1);
        else
          rel += " + " + s;
      }
      relations.push_back(rel);
    }
    if (!row.empty()) dt[std::to_string(i + 1)] = row;
  }
  j["delta_table"] = dt;
  j["relations"] = relations;

  CommAnalysis comm(spec, 0);
  QuantumAnalysis qa(qp.pres, comm);
  json ys = json::array();
  for (int i = 0; i < spec.n; ++i) ys.push_back(elem_str(qa.Y(i), 'X'));
  j["Y_sequence"] = ys;
  json lmat = json::array();
  for (int i = 0; i < spec.n; ++i) {
    json row = json::array();
    for (int jj = 0; jj < spec.n; ++jj) row.push_back(qa.l_entry(i, jj));
    lmat.push_back(row);
  }
  j["l_matrix"] = lmat;

  if (include_audit) {
    json audit = json::array();
    for (const auto& step : qp.steps) {
      json s;
      s["k"] = step.k + 1;
      s["trivial"] = step.trivial;
      if (!step.trivial) {
        s["pivot"] = step.pivot + 1;
        s["m"] = step.m;
        s["eta"] = step.eta;
        s["omega"] = "q^" + std::to_string(step.eta);
        s["D"] = elem_str(step.D, 'Y');
        json bs = json::array();
        for (const auto& b : step.q_chain.B) bs.push_back(elem_str(b, 'Y'));
        s["B"] = bs;
        json dchain = json::array();
        for (const auto& d : step.comm_chain.d) dchain.push_back(poly_str(d, 'y'));
        s["d_chain"] = dchain;
        json Dchain = json::array();
        for (const auto& D : step.q_chain.D) Dchain.push_back(elem_str(D, 'Y'));
        s["D_chain"] = Dchain;
      }
      audit.push_back(s);
    }
    j["audit"] = audit;
  }
  return j.dump(2);
}

std::string verify_report_json(const VerifyReport& rep) {
  json j;
  j["seed"] = rep.seed;
  j["ok"] = rep.ok();
  json arr = json::array();
  for (const auto& c : rep.checks) arr.push_back(check_to_json(c));
  j["checks"] = arr;
  return j.dump(2);
}

}  // namespace cglq
