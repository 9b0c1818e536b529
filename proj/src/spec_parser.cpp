#include "amalgam/spec_parser.hpp"

#include <algorithm>
#include <charconv>

#include "amalgam/classify.hpp"

namespace amalgam {

std::string SExpr::str() const {
  if (atom) return text;
  std::string s = "(";
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) s += " ";
    s += items[i].str();
  }
  return s + ")";
}

std::string SpecError::str() const {
  const char* k = "";
  switch (kind) {
    case Kind::Syntax: k = "syntax error"; break;
    case Kind::UnknownConstructor: k = "unknown constructor"; break;
    case Kind::UnresolvedReference: k = "unresolved reference"; break;
    case Kind::Duplicate: k = "duplicate name"; break;
    case Kind::Build: k = "construction error"; break;
    case Kind::Budget: k = "budget exceeded"; break;
  }
  return std::to_string(line) + ":" + std::to_string(column) + ": " + k + ": " + message;
}

const char* SpecValue::kind_name() const {
  switch (kind) {
    case Kind::Ring: return "ring";
    case Kind::Ideal: return "ideal";
    case Kind::Hom: return "hom";
    case Kind::Amalgamation: return "amalgamation";
    case Kind::FiberProduct: return "fiber-product";
  }
  return "";
}

const Definition* SpecFile::find(std::string_view name) const {
  for (const auto& d : defs)
    if (d.name == name) return &d;
  return nullptr;
}

bool SpecFile::has_syntax_errors() const {
  return std::any_of(errors.begin(), errors.end(), [](const SpecError& e) { return e.syntax_level(); });
}

std::vector<SExpr> read_sexprs(std::string_view text) {
  std::vector<SExpr> top;
  std::vector<SExpr> stack;
  int line = 1, col = 1;
  auto fail = [&](int l, int c, std::string msg) {
    throw SpecParseError(SpecError{SpecError::Kind::Syntax, l, c, std::move(msg), {}});
  };
  std::size_t i = 0;
  auto advance = [&]() {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
    ++i;
  };
  auto emit = [&](SExpr e) {
    if (stack.empty())
      top.push_back(std::move(e));
    else
      stack.back().items.push_back(std::move(e));
  };
  while (i < text.size()) {
    const char c = text[i];
    if (c == ';') {
      while (i < text.size() && text[i] != '\n') advance();
    } else if (std::isspace(static_cast<unsigned char>(c))) {
      advance();
    } else if (c == '(') {
      SExpr e;
      e.atom = false;
      e.line = line;
      e.column = col;
      stack.push_back(std::move(e));
      advance();
    } else if (c == ')') {
      if (stack.empty()) fail(line, col, "unexpected ')'");
      SExpr e = std::move(stack.back());
      stack.pop_back();
      advance();
      emit(std::move(e));
    } else {
      SExpr e;
      e.line = line;
      e.column = col;
      while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])) && text[i] != '(' &&
             text[i] != ')' && text[i] != ';') {
        e.text += text[i];
        advance();
      }
      if (stack.empty()) fail(e.line, e.column, "atom '" + e.text + "' outside a form");
      emit(std::move(e));
    }
  }
  if (!stack.empty()) fail(stack.back().line, stack.back().column, "unclosed '('");
  return top;
}

namespace {

// k·1_A |-> k·1_B; valid exactly when A is generated by its identity.
RingHom characteristic_map(const Ring& a, const Ring& b, const std::string& name) {
  if (subring_closure(a, {}).count() != a.size())
    throw InvalidHom("cannot resolve '" + name + "' from " + a.provenance() + " to " + b.provenance());
  std::vector<Elem> m(a.size());
  Elem x = a.zero(), y = b.zero();
  for (std::size_t k = 0; k < a.size(); ++k) {
    m[x] = y;
    x = a.add(x, a.one());
    y = b.add(y, b.one());
  }
  return mk_hom(a, b, std::move(m));
}

}  // namespace

RingHom named_hom(const std::string& name, const Ring& a, const Ring& b) {
  const std::size_t na = a.size();
  std::vector<Elem> m(na);
  if (name == "identity") {
    if (!(a == b)) throw InvalidHom("identity needs equal source and target");
    return identity_hom(a);
  }
  if (name == "reduction") {
    if (b.kind() == Ring::Kind::Quotient && b.operands()[0] == a) {
      for (Elem x = 0; x < na; ++x) m[x] = static_cast<Elem>(b.params()[x]);
      return mk_hom(a, b, std::move(m));
    }
    return characteristic_map(a, b, name);
  }
  if (name == "inclusion") {
    const bool constants = (b.kind() == Ring::Kind::PolyQuot && b.operands()[0] == a) ||
                           (b.kind() == Ring::Kind::TruncPoly && a.kind() == Ring::Kind::ZMod &&
                            a.params()[0] == b.params()[0]);
    if (constants) {
      for (Elem x = 0; x < na; ++x) m[x] = x;
      return mk_hom(a, b, std::move(m));
    }
    return characteristic_map(a, b, name);
  }
  if (name == "diagonal") {
    if (b.kind() != Ring::Kind::Product || !(b.operands()[0] == a) || !(b.operands()[1] == a))
      throw InvalidHom("diagonal needs a target of the form A × A");
    for (Elem x = 0; x < na; ++x) m[x] = static_cast<Elem>(x * na + x);
    return mk_hom(a, b, std::move(m));
  }
  if (name == "proj1" || name == "proj2") {
    const bool first = name == "proj1";
    if (a.kind() != Ring::Kind::Product || !(a.operands()[first ? 0 : 1] == b))
      throw InvalidHom(name + " needs a product source with the target as its " + (first ? "first" : "second") + " factor");
    const std::size_t right = a.operands()[1].size();
    for (Elem x = 0; x < na; ++x) m[x] = static_cast<Elem>(first ? x / right : x % right);
    return mk_hom(a, b, std::move(m));
  }
  throw InvalidHom("unknown canonical homomorphism '" + name + "'");
}

namespace {

bool is_named_hom(const std::string& s) {
  return s == "identity" || s == "reduction" || s == "inclusion" || s == "diagonal" || s == "proj1" || s == "proj2";
}

class Evaluator {
 public:
  Evaluator(const SpecFile* env, const Budget& budget) : env_(env), budget_(budget) {}

  SpecValue eval(const SExpr& e) {
    try {
      return eval_inner(e);
    } catch (const SpecParseError&) {
      throw;
    } catch (const BudgetExceeded& x) {
      throw SpecParseError(SpecError{SpecError::Kind::Budget, e.line, e.column, x.what(), {}});
    } catch (const Error& x) {
      throw SpecParseError(SpecError{SpecError::Kind::Build, e.line, e.column, x.what(), {}});
    }
  }

 private:
  [[noreturn]] void fail(const SExpr& e, SpecError::Kind k, std::string msg) {
    throw SpecParseError(SpecError{k, e.line, e.column, std::move(msg), {}});
  }

  void arity(const SExpr& e, std::size_t n) {
    if (e.items.size() != n + 1)
      fail(e, SpecError::Kind::Syntax,
           "'" + e.items[0].text + "' takes " + std::to_string(n) + " arguments, got " + std::to_string(e.items.size() - 1));
  }

  long integer(const SExpr& e) {
    long v = 0;
    if (!e.atom) fail(e, SpecError::Kind::Syntax, "expected an integer");
    auto [p, ec] = std::from_chars(e.text.data(), e.text.data() + e.text.size(), v);
    if (ec != std::errc() || p != e.text.data() + e.text.size()) fail(e, SpecError::Kind::Syntax, "expected an integer, got '" + e.text + "'");
    return v;
  }

  Elem element(const Ring& r, const SExpr& e) {
    if (!e.atom) fail(e, SpecError::Kind::Syntax, "expected an element name");
    auto x = r.find(e.text);
    if (!x) fail(e, SpecError::Kind::Build, "no element named '" + e.text + "' in " + r.provenance());
    return *x;
  }

  const Definition& lookup(const SExpr& e) {
    const Definition* d = env_ ? env_->find(e.text) : nullptr;
    if (!d) fail(e, SpecError::Kind::UnresolvedReference, "'" + e.text + "' is not defined");
    return *d;
  }

  Ring ring(const SExpr& e) {
    SpecValue v = eval(e);
    if (v.kind == SpecValue::Kind::Ideal || v.kind == SpecValue::Kind::Hom)
      fail(e, SpecError::Kind::Build, std::string("expected a ring, got ") + v.kind_name());
    return v.ring;
  }

  Ideal ideal(const SExpr& e, const Ring& expected) {
    SpecValue v = eval(e);
    if (v.kind != SpecValue::Kind::Ideal) fail(e, SpecError::Kind::Build, std::string("expected an ideal, got ") + v.kind_name());
    if (!(v.ideal->ring() == expected))
      fail(e, SpecError::Kind::Build, "ideal belongs to " + v.ideal->ring().provenance() + ", expected " + expected.provenance());
    return *v.ideal;
  }

  RingHom hom(const SExpr& e, const Ring* a, const Ring* b) {
    auto check = [&](const RingHom& h) {
      if ((a && !(h.source() == *a)) || (b && !(h.target() == *b)))
        fail(e, SpecError::Kind::Build, "homomorphism has the wrong source or target");
      return h;
    };
    if (e.atom) {
      if (is_named_hom(e.text)) {
        if (!a || !b) fail(e, SpecError::Kind::Syntax, "'" + e.text + "' needs an explicit source and target here");
        return wrap(e, [&] { return named_hom(e.text, *a, *b); });
      }
      const auto& d = lookup(e);
      if (d.value.kind != SpecValue::Kind::Hom) fail(e, SpecError::Kind::Build, "'" + e.text + "' is not a homomorphism");
      return check(*d.value.hom);
    }
    if (!e.items.empty() && e.items[0].atom && e.items[0].text == "hom" && e.items.size() == 2) {
      const SExpr& n = e.items[1];
      if (!n.atom || !is_named_hom(n.text)) fail(n, SpecError::Kind::Syntax, "expected a canonical homomorphism name");
      if (!a || !b) fail(e, SpecError::Kind::Syntax, "'(hom " + n.text + ")' needs its source and target from context");
      return wrap(e, [&] { return named_hom(n.text, *a, *b); });
    }
    SpecValue v = eval(e);
    if (v.kind != SpecValue::Kind::Hom) fail(e, SpecError::Kind::Build, std::string("expected a homomorphism, got ") + v.kind_name());
    return check(*v.hom);
  }

  template <class F>
  RingHom wrap(const SExpr& e, F&& f) {
    try {
      return f();
    } catch (const Error& x) {
      fail(e, SpecError::Kind::Build, x.what());
    }
  }

  SpecValue ring_value(Ring r) {
    SpecValue v;
    v.ring = std::move(r);
    return v;
  }

  SpecValue eval_inner(const SExpr& e) {
    if (e.atom) return lookup(e).value;
    if (e.items.empty() || !e.items[0].atom) fail(e, SpecError::Kind::Syntax, "expected a constructor name");
    const std::string& head = e.items[0].text;
    const auto& it = e.items;

    if (head == "zmod") {
      arity(e, 1);
      return ring_value(mk_zmod(integer(it[1]), budget_));
    }
    if (head == "polyquot") {
      arity(e, 2);
      Ring base = ring(it[1]);
      const SExpr& p = it[2];
      if (p.atom || p.items.empty() || !p.items[0].atom || p.items[0].text != "poly")
        fail(p, SpecError::Kind::Syntax, "expected (poly c0 c1 ...)");
      std::vector<Elem> c;
      for (std::size_t k = 1; k < p.items.size(); ++k) c.push_back(element(base, p.items[k]));
      return ring_value(mk_poly_quot(base, PolyOverRing(base, std::move(c)), budget_));
    }
    if (head == "truncpoly") {
      arity(e, 3);
      return ring_value(mk_truncated_poly(integer(it[1]), integer(it[2]), integer(it[3]), budget_));
    }
    if (head == "product") {
      arity(e, 2);
      return ring_value(mk_product(ring(it[1]), ring(it[2]), budget_).ring);
    }
    if (head == "quot") {
      arity(e, 2);
      Ring r = ring(it[1]);
      return ring_value(mk_quotient(r, ideal(it[2], r), budget_).ring);
    }
    if (head == "ideal") {
      if (it.size() < 2) fail(e, SpecError::Kind::Syntax, "'ideal' needs a ring");
      Ring r = ring(it[1]);
      std::vector<Elem> gens;
      for (std::size_t k = 2; k < it.size(); ++k) gens.push_back(element(r, it[k]));
      SpecValue v;
      v.kind = SpecValue::Kind::Ideal;
      v.ring = r;
      v.ideal = ideal_generate(r, gens);
      return v;
    }
    if (head == "hom") {
      if (it.size() == 2) fail(e, SpecError::Kind::Syntax, "'(hom NAME)' is only allowed inside amalg");
      arity(e, 3);
      Ring a = ring(it[1]), b = ring(it[2]);
      SpecValue v;
      v.kind = SpecValue::Kind::Hom;
      v.ring = a;
      const SExpr& m = it[3];
      if (m.atom) {
        v.hom = hom(m, &a, &b);
      } else {
        if (m.items.empty() || !m.items[0].atom || m.items[0].text != "images")
          fail(m, SpecError::Kind::Syntax, "expected (images ...) or a canonical homomorphism name");
        if (m.items.size() - 1 != a.size())
          fail(m, SpecError::Kind::Build, "images lists " + std::to_string(m.items.size() - 1) + " values for a source of size " +
                                              std::to_string(a.size()));
        std::vector<Elem> map;
        for (std::size_t k = 1; k < m.items.size(); ++k) map.push_back(element(b, m.items[k]));
        v.hom = mk_hom(a, b, std::move(map));
      }
      return v;
    }
    if (head == "amalg" || head == "dup") {
      SpecValue v;
      v.kind = SpecValue::Kind::Amalgamation;
      if (head == "amalg") {
        arity(e, 4);
        Ring a = ring(it[1]), b = ring(it[2]);
        RingHom f = hom(it[3], &a, &b);
        v.amalg = std::make_shared<const AmalgamatedRing>(build_amalgamation(f, ideal(it[4], b), budget_));
      } else {
        arity(e, 2);
        Ring a = ring(it[1]);
        v.amalg = std::make_shared<const AmalgamatedRing>(duplication(ideal(it[2], a), budget_));
      }
      v.ring = v.amalg->carrier();
      return v;
    }
    if (head == "fiber") {
      arity(e, 2);
      RingHom rho = hom(it[1], nullptr, nullptr), sigma = hom(it[2], nullptr, nullptr);
      SpecValue v;
      v.kind = SpecValue::Kind::FiberProduct;
      v.fiber = std::make_shared<const FiberProduct>(build_fiber_product(rho, sigma, budget_));
      v.ring = v.fiber->carrier();
      return v;
    }
    fail(it[0], SpecError::Kind::UnknownConstructor, "'" + head + "'");
  }

  const SpecFile* env_;
  const Budget& budget_;
};

bool parse_bool(const SExpr& e) {
  if (e.atom && e.text == "true") return true;
  if (e.atom && e.text == "false") return false;
  throw SpecParseError(SpecError{SpecError::Kind::Syntax, e.line, e.column, "expected true or false", {}});
}

Expectation parse_expect(const SExpr& form, const SpecFile& file) {
  const auto& it = form.items;
  auto fail = [&](const SExpr& e, SpecError::Kind k, std::string msg) {
    throw SpecParseError(SpecError{k, e.line, e.column, std::move(msg), {}});
  };
  if (it.size() < 3 || !it[1].atom || !it[2].atom) fail(form, SpecError::Kind::Syntax, "expected (expect NAME BASIS (VERDICT BOOL) ...)");
  if (!file.find(it[1].text)) fail(it[1], SpecError::Kind::UnresolvedReference, "'" + it[1].text + "' is not defined");
  const std::string& basis = it[2].text;
  if (basis != "published" && basis != "derived" && basis != "trivial")
    fail(it[2], SpecError::Kind::Syntax, "basis must be published, derived or trivial");
  Expectation x{it[1].text, basis, {}, form.line};
  const auto& names = verdict_names();
  for (std::size_t k = 3; k < it.size(); ++k) {
    const SExpr& v = it[k];
    if (v.atom || v.items.size() != 2 || !v.items[0].atom) fail(v, SpecError::Kind::Syntax, "expected (VERDICT BOOL)");
    if (std::find(names.begin(), names.end(), v.items[0].text) == names.end())
      fail(v.items[0], SpecError::Kind::Syntax, "unknown verdict '" + v.items[0].text + "'");
    x.verdicts.emplace_back(v.items[0].text, parse_bool(v.items[1]));
  }
  return x;
}

}  // namespace

SpecFile parse_spec(std::string_view text, const Budget& budget) {
  SpecFile file;
  std::vector<SExpr> forms;
  try {
    forms = read_sexprs(text);
  } catch (const SpecParseError& e) {
    file.errors.push_back(e.error());
    return file;
  }
  for (const auto& form : forms) {
    try {
      if (form.atom || form.items.empty() || !form.items[0].atom)
        throw SpecParseError(SpecError{SpecError::Kind::Syntax, form.line, form.column, "expected (def NAME EXPR) or (expect ...)", {}});
      const std::string& head = form.items[0].text;
      if (head == "expect") {
        file.expectations.push_back(parse_expect(form, file));
        continue;
      }
      if (head != "def" || form.items.size() != 3 || !form.items[1].atom)
        throw SpecParseError(SpecError{SpecError::Kind::Syntax, form.line, form.column, "expected (def NAME EXPR)", {}});
      const std::string& name = form.items[1].text;
      if (file.find(name))
        throw SpecParseError(SpecError{SpecError::Kind::Duplicate, form.items[1].line, form.items[1].column, "'" + name + "'", {}});
      Evaluator ev(&file, budget);
      SpecValue v = ev.eval(form.items[2]);
      file.defs.push_back(Definition{name, form.items[2].str(), form.line, std::move(v)});
    } catch (const SpecParseError& e) {
      SpecError err = e.error();
      if (!form.atom && form.items.size() >= 2 && form.items[1].atom) err.entry = form.items[1].text;
      file.errors.push_back(std::move(err));
    }
  }
  return file;
}

SpecValue evaluate_expression(std::string_view text, const SpecFile* env, const Budget& budget) {
  auto forms = read_sexprs(text);
  if (forms.size() != 1)
    throw SpecParseError(SpecError{SpecError::Kind::Syntax, 1, 1, "expected exactly one expression", {}});
  Evaluator ev(env, budget);
  return ev.eval(forms[0]);
}

}  // namespace amalgam
