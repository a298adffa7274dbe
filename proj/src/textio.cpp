#include "mknf/textio.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "mknf/errors.hpp"
#include "json.hpp"

namespace mknf {

namespace {

enum class Tok {
  End, SectionOntology, SectionRules, Ident, KwNot, Dot, Comma, ColonDash,
  Tilde, Amp, Pipe, Arrow, DArrow, LParen, RParen,
};

struct Lexer {
  const std::string& src;
  std::size_t i = 0;
  int line = 1, col = 1;

  Tok tok = Tok::End;
  std::string text;
  int tok_line = 1, tok_col = 1;

  explicit Lexer(const std::string& s) : src(s) { advance(); }

  [[noreturn]] void fail(const std::string& msg, int l, int c) { throw ParseError(msg, l, c); }

  void bump() {
    if (src[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
    ++i;
  }

  void skip_space() {
    for (;;) {
      while (i < src.size() && std::isspace(static_cast<unsigned char>(src[i]))) bump();
      if (i < src.size() && src[i] == '#') {
        while (i < src.size() && src[i] != '\n') bump();
        continue;
      }
      break;
    }
  }

  void advance() {
    skip_space();
    tok_line = line;
    tok_col = col;
    if (i >= src.size()) {
      tok = Tok::End;
      return;
    }
    char c = src[i];
    if (c == '%') {
      std::size_t j = i + 1;
      std::string word;
      while (j < src.size() && std::isalpha(static_cast<unsigned char>(src[j])))
        word += src[j++];
      if (word == "ontology") tok = Tok::SectionOntology;
      else if (word == "rules") tok = Tok::SectionRules;
      else fail("unknown section '%" + word + "'", tok_line, tok_col);
      while (i < j) bump();
      return;
    }
    if (std::isupper(static_cast<unsigned char>(c)))
      fail("variable-like token: ground rules only", tok_line, tok_col);
    if (std::islower(static_cast<unsigned char>(c))) {
      std::string word;
      while (i < src.size()) {
        char d = src[i];
        if (std::isalnum(static_cast<unsigned char>(d)) || d == '_' || d == '\'') {
          word += d;
          bump();
        } else {
          break;
        }
      }
      if (word == "not") tok = Tok::KwNot;
      else {
        tok = Tok::Ident;
        text = word;
      }
      return;
    }
    switch (c) {
      case '.': bump(); tok = Tok::Dot; return;
      case ',': bump(); tok = Tok::Comma; return;
      case '~': bump(); tok = Tok::Tilde; return;
      case '&': bump(); tok = Tok::Amp; return;
      case '|': bump(); tok = Tok::Pipe; return;
      case '(': bump(); tok = Tok::LParen; return;
      case ')': bump(); tok = Tok::RParen; return;
      case ':':
        if (i + 1 < src.size() && src[i + 1] == '-') {
          bump();
          bump();
          tok = Tok::ColonDash;
          return;
        }
        fail("expected ':-'", tok_line, tok_col);
      case '<':
        if (i + 2 < src.size() && src[i + 1] == '-' && src[i + 2] == '>') {
          bump(); bump(); bump();
          tok = Tok::DArrow;
          return;
        }
        fail("expected '<->'", tok_line, tok_col);
      case '-':
        if (i + 1 < src.size() && src[i + 1] == '>') {
          bump();
          bump();
          tok = Tok::Arrow;
          return;
        }
        fail("expected '->'", tok_line, tok_col);
      default:
        fail(std::string("unexpected character '") + c + "'", tok_line, tok_col);
    }
  }
};

struct Parser {
  Lexer lex;
  SymbolTable symbols;
  std::vector<FormulaPtr> ontology;
  std::vector<Rule> rules;

  explicit Parser(const std::string& s) : lex(s) {}

  [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, lex.tok_line, lex.tok_col); }

  void expect(Tok t, const char* what) {
    if (lex.tok != t) fail(std::string("expected ") + what);
    lex.advance();
  }

  AtomId atom() {
    if (lex.tok == Tok::KwNot) fail("'not' is a reserved word");
    if (lex.tok != Tok::Ident) fail("expected atom");
    AtomId a = symbols.intern(lex.text);
    lex.advance();
    return a;
  }

  // Precedence climbing: ~ binds tightest, then &, |, ->, <->.
  FormulaPtr expr() { return iff_expr(); }

  FormulaPtr iff_expr() {
    FormulaPtr l = impl_expr();
    if (lex.tok == Tok::DArrow) {
      lex.advance();
      return Formula::iff(std::move(l), iff_expr());
    }
    return l;
  }

  FormulaPtr impl_expr() {
    FormulaPtr l = or_expr();
    if (lex.tok == Tok::Arrow) {
      lex.advance();
      return Formula::implies(std::move(l), impl_expr());  // right-associative
    }
    return l;
  }

  FormulaPtr or_expr() {
    FormulaPtr l = and_expr();
    while (lex.tok == Tok::Pipe) {
      lex.advance();
      l = Formula::disj(std::move(l), and_expr());
    }
    return l;
  }

  FormulaPtr and_expr() {
    FormulaPtr l = unary();
    while (lex.tok == Tok::Amp) {
      lex.advance();
      l = Formula::conj(std::move(l), unary());
    }
    return l;
  }

  FormulaPtr unary() {
    if (lex.tok == Tok::Tilde) {
      lex.advance();
      return Formula::negate(unary());
    }
    if (lex.tok == Tok::LParen) {
      lex.advance();
      FormulaPtr f = expr();
      expect(Tok::RParen, "')'");
      return f;
    }
    return Formula::var(atom());
  }

  void rule() {
    Rule r{atom(), {}, {}};
    if (lex.tok == Tok::ColonDash) {
      lex.advance();
      for (;;) {
        if (lex.tok == Tok::KwNot) {
          lex.advance();
          r.body_neg |= AtomSet::single(atom());
        } else {
          r.body_pos |= AtomSet::single(atom());
        }
        if (lex.tok != Tok::Comma) break;
        lex.advance();
      }
    }
    expect(Tok::Dot, "'.'");
    rules.push_back(r);
  }

  KnowledgeBase parse() {
    while (lex.tok != Tok::End) {
      if (lex.tok == Tok::SectionOntology) {
        lex.advance();
        while (lex.tok != Tok::End && lex.tok != Tok::SectionOntology &&
               lex.tok != Tok::SectionRules) {
          FormulaPtr f = expr();
          expect(Tok::Dot, "'.'");
          ontology.push_back(std::move(f));
        }
      } else if (lex.tok == Tok::SectionRules) {
        lex.advance();
        while (lex.tok != Tok::End && lex.tok != Tok::SectionOntology &&
               lex.tok != Tok::SectionRules) {
          rule();
        }
      } else {
        fail("expected %ontology or %rules");
      }
    }
    if (symbols.size() > 64) fail("more than 64 atoms");
    return make_kb(std::move(symbols), std::move(ontology), std::move(rules));
  }
};

std::vector<std::string> sorted_names(const KnowledgeBase& kb, AtomSet s) {
  std::vector<std::string> out;
  s.for_each([&](AtomId a) { out.push_back(kb.symbols.name(a)); });
  std::sort(out.begin(), out.end());
  return out;
}

const char* yn(bool b) { return b ? "yes" : "no"; }

std::string tetra_text(const KnowledgeBase& kb, const Tetra<AtomSet>& x) {
  return "T=" + set_text(kb, x.t) + " F=" + set_text(kb, x.f) + " U=" + set_text(kb, x.u) +
         " P=" + set_text(kb, x.p);
}

nlohmann::json set_json(const KnowledgeBase& kb, AtomSet s) { return sorted_names(kb, s); }

nlohmann::json verdict_json(const ModelVerdict& v) {
  return {{"subset", v.subset}, {"fixpoint", v.fixpoint}, {"consistent", v.consistent}};
}

}  // namespace

KnowledgeBase parse_kb(const std::string& text) { return Parser(text).parse(); }

namespace {

// Precedence levels for re-parenthesizing on output.
int prec_of(Formula::Op op) {
  switch (op) {
    case Formula::Op::Iff: return 1;
    case Formula::Op::Implies: return 2;
    case Formula::Op::Or: return 3;
    case Formula::Op::And: return 4;
    default: return 5;
  }
}

void formula_text(const KnowledgeBase& kb, const FormulaPtr& f, int parent, std::string& out) {
  int self = prec_of(f->op);
  bool wrap = self < parent;
  if (wrap) out += "(";
  switch (f->op) {
    case Formula::Op::Falsum: {
      // No surface syntax of its own; atom & ~atom stands in.
      std::string a = kb.symbols.size() > 0 ? kb.symbols.name(0) : "x";
      out += "(" + a + " & ~" + a + ")";
      break;
    }
    case Formula::Op::Atom:
      out += kb.symbols.name(f->atom);
      break;
    case Formula::Op::Not:
      out += "~";
      formula_text(kb, f->lhs, 5, out);
      break;
    case Formula::Op::And:
      formula_text(kb, f->lhs, 4, out);
      out += " & ";
      formula_text(kb, f->rhs, 4, out);
      break;
    case Formula::Op::Or:
      formula_text(kb, f->lhs, 3, out);
      out += " | ";
      formula_text(kb, f->rhs, 3, out);
      break;
    case Formula::Op::Implies:
      formula_text(kb, f->lhs, 3, out);
      out += " -> ";
      formula_text(kb, f->rhs, 2, out);
      break;
    case Formula::Op::Iff:
      formula_text(kb, f->lhs, 2, out);
      out += " <-> ";
      formula_text(kb, f->rhs, 1, out);
      break;
  }
  if (wrap) out += ")";
}

}  // namespace

std::string print_kb(const KnowledgeBase& kb) {
  std::string out;
  if (!kb.ontology.empty()) {
    out += "%ontology\n";
    for (const auto& f : kb.ontology) {
      formula_text(kb, f, 0, out);
      out += ".\n";
    }
  }
  if (!kb.rules.empty()) {
    out += "%rules\n";
    for (const Rule& r : kb.rules) {
      out += kb.symbols.name(r.head);
      // Bodies print name-sorted so output does not depend on interning order.
      std::vector<std::string> pos, neg;
      r.body_pos.for_each([&](AtomId a) { pos.push_back(kb.symbols.name(a)); });
      r.body_neg.for_each([&](AtomId a) { neg.push_back(kb.symbols.name(a)); });
      std::sort(pos.begin(), pos.end());
      std::sort(neg.begin(), neg.end());
      bool first = true;
      for (const auto& n : pos) {
        out += first ? " :- " : ", ";
        out += n;
        first = false;
      }
      for (const auto& n : neg) {
        out += first ? " :- not " : ", not ";
        out += n;
        first = false;
      }
      out += ".\n";
    }
  }
  return out;
}

std::string set_text(const KnowledgeBase& kb, AtomSet s) {
  std::string out = "{";
  bool first = true;
  for (const std::string& n : sorted_names(kb, s)) {
    if (!first) out += ",";
    out += n;
    first = false;
  }
  return out + "}";
}

AtomSet parse_atom_list(const KnowledgeBase& kb, const std::string& list) {
  AtomSet out;
  std::size_t start = 0;
  while (start <= list.size()) {
    std::size_t end = list.find(',', start);
    if (end == std::string::npos) end = list.size();
    std::string name = list.substr(start, end - start);
    // trim
    while (!name.empty() && std::isspace(static_cast<unsigned char>(name.front())))
      name.erase(name.begin());
    while (!name.empty() && std::isspace(static_cast<unsigned char>(name.back())))
      name.pop_back();
    if (!name.empty()) {
      auto id = kb.symbols.find(name);
      if (!id || !kb.ka.contains(*id))
        throw ParseError("unknown atom '" + name + "'", 0, 0);
      out |= AtomSet::single(*id);
    }
    if (end == list.size()) break;
    start = end + 1;
  }
  return out;
}

RunReport run_lfp(const PhiOperator& phi) {
  RunReport r;
  auto [fix, trace] = least_stable_fixpoint(phi.ka_lattice(), phi.as_op());
  r.fixpoint = fix;
  r.trace = std::move(trace);
  r.verdicts = check_model(phi, fix.t, fix.p);
  return r;
}

EnumReport run_enumerate(const PhiOperator& phi, int cap_atoms) {
  EnumReport r;
  r.fixpoints = enumerate_stable_fixpoints(phi.ka_lattice(), phi.as_op(), cap_atoms);
  for (const auto& ap : r.fixpoints) r.verdicts.push_back(check_model(phi, ap.first, ap.second));
  return r;
}

std::string print_report(const KnowledgeBase& kb, const RunReport& r, ReportFormat fmt,
                         bool show_inner) {
  if (fmt == ReportFormat::Json) {
    nlohmann::json j;
    j["iterations"] = nlohmann::json::array();
    for (const auto& x : r.trace.outer)
      j["iterations"].push_back({{"t", set_json(kb, x.t)},
                                 {"f", set_json(kb, x.f)},
                                 {"u", set_json(kb, x.u)},
                                 {"p", set_json(kb, x.p)}});
    j["fixpoint"] = {{"t", set_json(kb, r.fixpoint.t)}, {"p", set_json(kb, r.fixpoint.p)}};
    j["verdicts"] = verdict_json(r.verdicts);
    return j.dump(2) + "\n";
  }
  std::ostringstream out;
  for (std::size_t i = 0; i < r.trace.outer.size(); ++i) {
    out << "iteration " << i << ": " << tetra_text(kb, r.trace.outer[i]) << "\n";
    if (show_inner && i < r.trace.inner.size()) {
      const auto& log = r.trace.inner[i];
      out << "  lower:";
      for (const auto& b : log.lower)
        out << " (T=" << set_text(kb, b.first) << ",F=" << set_text(kb, b.second) << ")";
      out << "\n  upper:";
      for (const auto& b : log.upper)
        out << " (U=" << set_text(kb, b.first) << ",P=" << set_text(kb, b.second) << ")";
      out << "\n";
    }
  }
  out << "fixpoint: T=" << set_text(kb, r.fixpoint.t) << " P=" << set_text(kb, r.fixpoint.p)
      << "\n";
  out << "verdicts: subset=" << yn(r.verdicts.subset) << " fixpoint=" << yn(r.verdicts.fixpoint)
      << " consistent=" << yn(r.verdicts.consistent) << "\n";
  out << "model: " << yn(r.verdicts.model()) << "\n";
  return out.str();
}

std::string print_report(const KnowledgeBase& kb, const EnumReport& r, ReportFormat fmt) {
  if (fmt == ReportFormat::Json) {
    nlohmann::json j;
    j["fixpoints"] = nlohmann::json::array();
    for (std::size_t i = 0; i < r.fixpoints.size(); ++i)
      j["fixpoints"].push_back({{"t", set_json(kb, r.fixpoints[i].first)},
                                {"p", set_json(kb, r.fixpoints[i].second)},
                                {"verdicts", verdict_json(r.verdicts[i])}});
    return j.dump(2) + "\n";
  }
  std::ostringstream out;
  int models = 0;
  for (const auto& v : r.verdicts) models += v.model();
  out << "stable fixpoints: " << r.fixpoints.size() << " (models: " << models << ")\n";
  for (std::size_t i = 0; i < r.fixpoints.size(); ++i) {
    out << "T=" << set_text(kb, r.fixpoints[i].first)
        << " P=" << set_text(kb, r.fixpoints[i].second) << " model=" << yn(r.verdicts[i].model())
        << " [subset=" << yn(r.verdicts[i].subset) << " fixpoint=" << yn(r.verdicts[i].fixpoint)
        << " consistent=" << yn(r.verdicts[i].consistent) << "]\n";
  }
  return out.str();
}

std::string print_check(const KnowledgeBase& kb, AtomSet t, AtomSet p, const ModelVerdict& v,
                        ReportFormat fmt) {
  if (fmt == ReportFormat::Json) {
    nlohmann::json j;
    j["t"] = set_json(kb, t);
    j["p"] = set_json(kb, p);
    j["verdicts"] = verdict_json(v);
    j["model"] = v.model();
    return j.dump(2) + "\n";
  }
  std::ostringstream out;
  out << "T=" << set_text(kb, t) << " P=" << set_text(kb, p) << "\n";
  out << "verdicts: subset=" << yn(v.subset) << " fixpoint=" << yn(v.fixpoint)
      << " consistent=" << yn(v.consistent) << "\n";
  out << "model: " << yn(v.model()) << "\n";
  return out.str();
}

}  // namespace mknf
