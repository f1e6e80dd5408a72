#include "castkit/parser.hpp"

#include <cctype>
#include <optional>
#include <vector>

namespace castkit {

namespace {

struct Sexp {
  bool is_atom = false;
  std::string text;
  std::vector<Sexp> items;
  std::optional<int> label;  // trailing @<n> after a list
};

struct Lexer {
  const std::string& src;
  size_t pos = 0;

  explicit Lexer(const std::string& s) : src(s) {}

  void skip_ws() {
    while (pos < src.size() && (std::isspace(static_cast<unsigned char>(src[pos])) != 0)) ++pos;
  }
  bool done() {
    skip_ws();
    return pos >= src.size();
  }
  char peek() {
    skip_ws();
    return pos < src.size() ? src[pos] : '\0';
  }
  char take() {
    skip_ws();
    if (pos >= src.size()) throw ParseError("unexpected end of input");
    return src[pos++];
  }
  std::string atom() {
    skip_ws();
    size_t start = pos;
    while (pos < src.size()) {
      char c = src[pos];
      if (std::isspace(static_cast<unsigned char>(c)) || c == '(' || c == ')' || c == '@' ||
          c == ':')
        break;
      ++pos;
    }
    if (start == pos) throw ParseError("expected an atom at position " + std::to_string(start));
    return src.substr(start, pos - start);
  }
};

Sexp parse_sexp(Lexer& lx) {
  if (lx.peek() == '(') {
    lx.take();
    Sexp s;
    while (lx.peek() != ')') {
      if (lx.done()) throw ParseError("missing )");
      if (lx.peek() == ':') {
        lx.take();
        Sexp colon;
        colon.is_atom = true;
        colon.text = ":";
        s.items.push_back(colon);
        continue;
      }
      s.items.push_back(parse_sexp(lx));
    }
    lx.take();
    if (lx.peek() == '@') {
      lx.take();
      std::string n = lx.atom();
      try {
        s.label = std::stoi(n);
      } catch (...) {
        throw ParseError("bad label @" + n);
      }
      if (*s.label <= 0) throw ParseError("labels must be positive");
    }
    return s;
  }
  Sexp s;
  s.is_atom = true;
  s.text = lx.atom();
  return s;
}

Type type_of_sexp(const Sexp& s) {
  if (s.is_atom) {
    if (s.text == "Int") return Type::int_();
    if (s.text == "Nat") return Type::nat();
    if (s.text == "Bool") return Type::bool_();
    if (s.text == "Unit") return Type::unit();
    if (s.text == "Dyn") return Type::unknown();
    throw ParseError("unknown type " + s.text);
  }
  if (s.items.size() != 3 || !s.items[0].is_atom)
    throw ParseError("type forms are (-> T T), (* T T), (+ T T)");
  Type a = type_of_sexp(s.items[1]);
  Type b = type_of_sexp(s.items[2]);
  if (s.items[0].text == "->") return Type::fun(a, b);
  if (s.items[0].text == "*") return Type::pair(a, b);
  if (s.items[0].text == "+") return Type::sum(a, b);
  throw ParseError("unknown type head " + s.items[0].text);
}

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (std::isdigit(static_cast<unsigned char>(c)) == 0) return false;
  return true;
}

BlameLabel need_label(const Sexp& s, const std::string& what) {
  if (!s.label) throw ParseError(what + " needs a blame label: (...)@<n>");
  return BlameLabel(*s.label);
}

void forbid_label(const Sexp& s, const std::string& what) {
  if (s.label) throw ParseError(what + " carries no blame label");
}

// A binder clause (x : T).
std::pair<std::string, Type> binder_of(const Sexp& s) {
  if (s.is_atom || s.items.size() != 3 || !s.items[0].is_atom || !s.items[1].is_atom ||
      s.items[1].text != ":")
    throw ParseError("expected a binder (x : T)");
  return {s.items[0].text, type_of_sexp(s.items[2])};
}

GTerm term_of_sexp(const Sexp& s, std::vector<std::string>& scope) {
  if (s.is_atom) {
    const std::string& t = s.text;
    if (all_digits(t)) return GTerm::constant(PrimConst::nat(std::stoull(t)));
    if ((t[0] == '+' || t[0] == '-') && all_digits(t.substr(1)))
      return GTerm::constant(PrimConst::int_(std::stoll(t)));
    if (t == "true") return GTerm::constant(PrimConst::bool_(true));
    if (t == "false") return GTerm::constant(PrimConst::bool_(false));
    if (t == "unit") return GTerm::constant(PrimConst::unit());
    if (auto k = prim_by_name(t)) return GTerm::constant(*k);
    for (size_t i = 0; i < scope.size(); ++i)
      if (scope[scope.size() - 1 - i] == t) return GTerm::var(static_cast<int>(i));
    throw ParseError("unbound variable " + t);
  }
  if (s.items.empty()) throw ParseError("empty form");
  const Sexp& head = s.items[0];

  if (head.is_atom && head.text == "lam") {
    forbid_label(s, "lam");
    if (s.items.size() != 3) throw ParseError("lam form is (lam (x : T) e)");
    auto [name, ty] = binder_of(s.items[1]);
    scope.push_back(name);
    GTerm body = term_of_sexp(s.items[2], scope);
    scope.pop_back();
    return GTerm::lam(ty, body);
  }
  if (head.is_atom && head.text == "if") {
    if (s.items.size() != 4) throw ParseError("if form is (if e e e)@l");
    BlameLabel l = need_label(s, "if");
    return GTerm::if_(term_of_sexp(s.items[1], scope), term_of_sexp(s.items[2], scope),
                      term_of_sexp(s.items[3], scope), l);
  }
  if (head.is_atom && head.text == "cons") {
    forbid_label(s, "cons");
    if (s.items.size() != 3) throw ParseError("cons form is (cons e e)");
    return GTerm::cons(term_of_sexp(s.items[1], scope), term_of_sexp(s.items[2], scope));
  }
  if (head.is_atom && (head.text == "fst" || head.text == "snd")) {
    if (s.items.size() != 2) throw ParseError("projection form is (fst e)@l");
    BlameLabel l = need_label(s, head.text);
    return GTerm::proj(head.text == "fst" ? 1 : 2, term_of_sexp(s.items[1], scope), l);
  }
  if (head.is_atom && (head.text == "inl" || head.text == "inr")) {
    forbid_label(s, head.text);
    if (s.items.size() != 3) throw ParseError("injection form is (inl T e)");
    Type ty = type_of_sexp(s.items[1]);
    GTerm e = term_of_sexp(s.items[2], scope);
    return head.text == "inl" ? GTerm::inl(ty, e) : GTerm::inr(ty, e);
  }
  if (head.is_atom && head.text == "case") {
    if (s.items.size() != 4) throw ParseError("case form is (case e ((x : T) e) ((x : T) e))@l");
    BlameLabel l = need_label(s, "case");
    GTerm scrut = term_of_sexp(s.items[1], scope);
    auto parse_branch = [&](const Sexp& br) {
      if (br.is_atom || br.items.size() != 2) throw ParseError("case branch is ((x : T) e)");
      auto [name, ty] = binder_of(br.items[0]);
      scope.push_back(name);
      GTerm body = term_of_sexp(br.items[1], scope);
      scope.pop_back();
      return std::make_pair(ty, body);
    };
    auto [lt, lb] = parse_branch(s.items[2]);
    auto [rt, rb] = parse_branch(s.items[3]);
    return GTerm::case_(scrut, lt, rt, lb, rb, l);
  }
  // Application.
  if (s.items.size() != 2) throw ParseError("application form is (e e)@l");
  BlameLabel l = need_label(s, "application");
  return GTerm::app(term_of_sexp(s.items[0], scope), term_of_sexp(s.items[1], scope), l);
}

}  // namespace

GTerm parse_program(const std::string& source) {
  Lexer lx(source);
  Sexp s = parse_sexp(lx);
  if (!lx.done()) throw ParseError("trailing input after the program");
  std::vector<std::string> scope;
  return term_of_sexp(s, scope);
}

Type parse_type(const std::string& source) {
  Lexer lx(source);
  return type_of_sexp(parse_sexp(lx));
}

std::string print_type(const Type& t) {
  switch (t.kind()) {
    case TypeKind::Unknown: return "Dyn";
    case TypeKind::Base: return base_name(t.base_type());
    case TypeKind::Fun: return "(-> " + print_type(t.lhs()) + " " + print_type(t.rhs()) + ")";
    case TypeKind::Pair: return "(* " + print_type(t.lhs()) + " " + print_type(t.rhs()) + ")";
    case TypeKind::Sum: return "(+ " + print_type(t.lhs()) + " " + print_type(t.rhs()) + ")";
  }
  return "Dyn";
}

namespace {
std::string print_term(const GTerm& m, int depth) {
  auto var_name = [&](int ix) { return "x" + std::to_string(depth - 1 - ix); };
  switch (m.kind()) {
    case GTermKind::Const: return m.prim().str();
    case GTermKind::Var: return var_name(m.var_index());
    case GTermKind::Lam:
      return "(lam (x" + std::to_string(depth) + " : " + print_type(m.annot()) + ") " +
             print_term(m.child(0), depth + 1) + ")";
    case GTermKind::App:
      return "(" + print_term(m.child(0), depth) + " " + print_term(m.child(1), depth) + ")@" +
             to_string(m.label());
    case GTermKind::If:
      return "(if " + print_term(m.child(0), depth) + " " + print_term(m.child(1), depth) + " " +
             print_term(m.child(2), depth) + ")@" + to_string(m.label());
    case GTermKind::Cons:
      return "(cons " + print_term(m.child(0), depth) + " " + print_term(m.child(1), depth) + ")";
    case GTermKind::Proj:
      return "(" + std::string(m.proj_index() == 1 ? "fst " : "snd ") +
             print_term(m.child(0), depth) + ")@" + to_string(m.label());
    case GTermKind::Inl:
      return "(inl " + print_type(m.annot()) + " " + print_term(m.child(0), depth) + ")";
    case GTermKind::Inr:
      return "(inr " + print_type(m.annot()) + " " + print_term(m.child(0), depth) + ")";
    case GTermKind::Case:
      return "(case " + print_term(m.child(0), depth) + " ((x" + std::to_string(depth) + " : " +
             print_type(m.annot()) + ") " + print_term(m.child(1), depth + 1) + ") ((x" +
             std::to_string(depth) + " : " + print_type(m.annot2()) + ") " +
             print_term(m.child(2), depth + 1) + "))@" + to_string(m.label());
  }
  return "?";
}
}  // namespace

std::string print_program(const GTerm& m) { return print_term(m, 0); }

}  // namespace castkit
